#pragma once

// Digit expansions f = H_0 + sum_{k>=1} H_k / G^k in a polynomial base G,
// with digits H_k of degree < deg G.

#include <cstdint>
#include <optional>
#include <vector>

#include "fqdigits/polyring.hpp"

namespace fqd {

struct DigitExpansion {
  Poly base;
  Poly numerator;
  Poly denominator;
  Poly h0;
  /// H_1..H_N.
  std::vector<Poly> digits;
  /// Period of {H_k}_{k>=1} when gcd(G, reduced denominator) = 1.
  std::optional<std::uint64_t> period;
};

/// Long division in K_inf: f_1 = (F1 mod F2)/F2, then G f_k = H_k + f_{k+1}
/// with v_inf(f_{k+1}) > 0. Every f_k is an exact fraction reduced by gcd.
/// Throws DomainError for F2 = 0, deg G < 1, or n < 1.
DigitExpansion digit_expand(const Poly& f1, const Poly& f2, const Poly& base, std::int64_t n);

/// H_k = (G G_{k-1} - G_k) / M with G_j = G^j mod M. Throws DomainError when
/// gcd(G, M) != 1 or k < 1, InternalError when the division is not exact.
Poly digit_closed_form(const Poly& m, const Poly& base, std::uint64_t k);

/// H_1..H_count of 1/M, stepping G_k = G G_{k-1} mod M incrementally.
std::vector<Poly> closed_form_digits(const Poly& m, const Poly& base, std::uint64_t count);

/// Multiplicative order of G modulo M. Throws DomainError when gcd(G, M) != 1.
std::uint64_t multiplicative_order(const Poly& g, const Poly& m);

/// Period of the digits of 1/M in base G, i.e. ord(G mod M).
std::uint64_t digit_period(const Poly& m, const Poly& base);

/// sum_{k=1}^{g} alpha^k H_k over one period g of 1/M. Returned raw: it
/// vanishes when gcd(M, G(alpha G - 1)) = 1 and ord(alpha) | g.
Poly twisted_digit_sum(const Poly& m, const Poly& base, const FieldElement& alpha);

}  // namespace fqd
