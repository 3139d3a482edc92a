#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace fqd {

using PrimePower = std::pair<std::uint64_t, unsigned>;

/// Prime factorisation by trial division, primes ascending.
std::vector<PrimePower> factor(std::uint64_t n);

std::vector<std::uint64_t> prime_divisors(std::uint64_t n);

/// All positive divisors of n, ascending.
std::vector<std::uint64_t> divisors(std::uint64_t n);

bool is_prime(std::uint64_t n);

int mobius(std::uint64_t n);

std::uint64_t euler_phi(std::uint64_t n);

/// base^exp, or nullopt on 64-bit overflow.
std::optional<std::uint64_t> checked_pow(std::uint64_t base, unsigned exp);

/// Inverse of a modulo n; a and n must be coprime.
std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t n);

/// (a * b) mod n without overflow.
inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t n) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % n);
}

}  // namespace fqd
