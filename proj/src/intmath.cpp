#include "fqdigits/intmath.hpp"

#include <algorithm>
#include <numeric>

#include "fqdigits/error.hpp"

namespace fqd {

std::vector<PrimePower> factor(std::uint64_t n) {
  std::vector<PrimePower> out;
  if (n < 2) return out;
  for (std::uint64_t p = 2; p <= n / p; p += (p == 2 ? 1 : 2)) {
    unsigned k = 0;
    while (n % p == 0) {
      n /= p;
      ++k;
    }
    if (k) out.emplace_back(p, k);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (auto [p, k] : factor(n)) out.push_back(p);
  return out;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out{1};
  for (auto [p, k] : factor(n)) {
    const std::size_t base = out.size();
    std::uint64_t pk = 1;
    for (unsigned i = 1; i <= k; ++i) {
      pk *= p;
      for (std::size_t j = 0; j < base; ++j) out.push_back(out[j] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  auto f = factor(n);
  return f.size() == 1 && f[0].second == 1;
}

int mobius(std::uint64_t n) {
  int mu = 1;
  for (auto [p, k] : factor(n)) {
    if (k > 1) return 0;
    mu = -mu;
  }
  return mu;
}

std::uint64_t euler_phi(std::uint64_t n) {
  std::uint64_t phi = n;
  for (auto [p, k] : factor(n)) phi = phi / p * (p - 1);
  return phi;
}

std::optional<std::uint64_t> checked_pow(std::uint64_t base, unsigned exp) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < exp; ++i) {
    if (base != 0 && r > UINT64_MAX / base) return std::nullopt;
    r *= base;
  }
  return r;
}

std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t n) {
  if (n == 1) return 0;
  __int128 t = 0, new_t = 1;
  __int128 r = n, new_r = a % n;
  while (new_r != 0) {
    __int128 quot = r / new_r;
    t -= quot * new_t;
    std::swap(t, new_t);
    r -= quot * new_r;
    std::swap(r, new_r);
  }
  if (r != 1) throw DomainError("inverse_mod: arguments are not coprime");
  if (t < 0) t += n;
  return static_cast<std::uint64_t>(t);
}

}  // namespace fqd
