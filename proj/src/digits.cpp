#include "fqdigits/digits.hpp"

#include "fqdigits/error.hpp"
#include "fqdigits/intmath.hpp"

namespace fqd {

namespace {

void require_base(const Poly& base) {
  if (base.degree() < 1) throw DomainError("digit base must have degree >= 1");
}

void require_coprime(const Poly& m, const Poly& base) {
  if (m.degree() < 1) throw DomainError("modulus must have degree >= 1");
  require_base(base);
  if (!gcd(base, m).is_one()) throw DomainError("base and modulus must be coprime");
}

// Canonical fraction: gcd removed, denominator monic.
std::pair<Poly, Poly> reduce(const Poly& num, const Poly& den) {
  if (num.is_zero()) return {num, Poly::one(den.spec())};
  const Poly g = gcd(num, den);
  Poly n = num / g, d = den / g;
  const FieldElement inv = inverse(d.leading_coeff());
  return {n * inv, d * inv};
}

}  // namespace

DigitExpansion digit_expand(const Poly& f1, const Poly& f2, const Poly& base, std::int64_t n) {
  if (f2.is_zero()) throw DomainError("digit expansion of a fraction with zero denominator");
  require_base(base);
  if (n < 1) throw DomainError("number of digits must be positive");

  DigitExpansion out{base, f1, f2, Poly::zero(base.spec()), {}, std::nullopt};
  auto [h0, rem] = divmod(f1, f2);
  out.h0 = std::move(h0);
  auto [num, den] = reduce(rem, f2);

  out.digits.reserve(static_cast<std::size_t>(n));
  for (std::int64_t k = 1; k <= n; ++k) {
    // G f_k = H_k + f_{k+1}: H_k is the polynomial part of G num / den.
    auto [h, r] = divmod(base * num, den);
    out.digits.push_back(std::move(h));
    std::tie(num, den) = reduce(r, den);
  }

  const auto [reduced_num, reduced_den] = reduce(f1, f2);
  if (reduced_den.degree() == 0) {
    out.period = 1;
  } else if (gcd(base, reduced_den).is_one()) {
    out.period = multiplicative_order(base, reduced_den);
  }
  return out;
}

Poly digit_closed_form(const Poly& m, const Poly& base, std::uint64_t k) {
  require_coprime(m, base);
  if (k < 1) throw DomainError("digit index must be >= 1");
  const Poly prev = mod_pow(base, k - 1, m);
  const Poly cur = mod_pow(base, k, m);
  auto [h, r] = divmod(base * prev - cur, m);
  if (!r.is_zero()) throw InternalError("closed-form digit division is not exact");
  return h;
}

std::vector<Poly> closed_form_digits(const Poly& m, const Poly& base, std::uint64_t count) {
  require_coprime(m, base);
  std::vector<Poly> out;
  out.reserve(count);
  Poly prev = Poly::one(m.spec()) % m;
  for (std::uint64_t k = 1; k <= count; ++k) {
    const Poly shifted = base * prev;
    Poly cur = shifted % m;
    auto [h, r] = divmod(shifted - cur, m);
    if (!r.is_zero()) throw InternalError("closed-form digit division is not exact");
    out.push_back(std::move(h));
    prev = std::move(cur);
  }
  return out;
}

std::uint64_t multiplicative_order(const Poly& g, const Poly& m) {
  if (m.is_zero()) throw DomainError("order modulo the zero polynomial");
  if (m.degree() == 0) return 1;
  if (!gcd(g, m).is_one()) throw DomainError("element is not a unit modulo M");
  const Poly one = Poly::one(m.spec());
  const auto group = checked_pow(m.spec()->q(), static_cast<unsigned>(m.degree()));
  if (!group) throw ResourceError("residue ring too large");
  if (is_irreducible(m)) {
    std::uint64_t t = *group - 1;
    for (auto l : prime_divisors(t)) {
      while (t % l == 0 && mod_pow(g, t / l, m).is_one()) t /= l;
    }
    return t;
  }
  if (*group > (std::uint64_t{1} << 26)) throw ResourceError("residue ring too large for order search");
  const Poly g0 = g % m;
  Poly cur = g0;
  std::uint64_t t = 1;
  while (!cur.is_one()) {
    cur = (cur * g0) % m;
    ++t;
  }
  return t;
}

std::uint64_t digit_period(const Poly& m, const Poly& base) {
  require_coprime(m, base);
  const std::uint64_t g = multiplicative_order(base, m);
  for (std::uint64_t k = 1; k <= std::min<std::uint64_t>(g, 4); ++k) {
    if (digit_closed_form(m, base, k) != digit_closed_form(m, base, k + g))
      throw InternalError("digit sequence is not periodic with the group order");
  }
  return g;
}

Poly twisted_digit_sum(const Poly& m, const Poly& base, const FieldElement& alpha) {
  if (alpha.is_zero()) throw DomainError("twist must be a unit of F_q");
  const std::uint64_t g = digit_period(m, base);
  const auto digits = closed_form_digits(m, base, g);
  Poly sum = Poly::zero(m.spec());
  FieldElement a = alpha;
  for (const auto& h : digits) {
    sum += h * a;
    a *= alpha;
  }
  return sum;
}

}  // namespace fqd
