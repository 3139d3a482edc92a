#include <string>
#include <vector>

#include "fqdigits/classnum.hpp"
#include "fqdigits/error.hpp"
#include "fqdigits/intmath.hpp"

namespace fqd {

namespace {

Poly first_irreducible(const FieldRef& spec, int degree) {
  for (const Poly& f : monic_polys(spec, degree))
    if (is_irreducible(f)) return f;
  throw InternalError("no monic irreducible of degree " + std::to_string(degree));
}

void require_curve(const Poly& p) {
  const auto& F = p.spec();
  if (F->q() % 2 == 0) throw HypothesisError("q odd", "q = " + std::to_string(F->q()));
  if (p.degree() < 1 || !p.is_monic() || !is_irreducible(p)) throw DomainError("P must be monic irreducible");
}

}  // namespace

std::uint64_t count_points(const Poly& p, unsigned i) {
  require_curve(p);
  if (i < 1) throw DomainError("extension degree must be >= 1");
  const auto& F = p.spec();
  const auto qi = checked_pow(F->q(), i);
  if (!qi || *qi > kMaxGroupOrder) throw ResourceError("F_{q^i} too large to enumerate");

  // F_{q^i} = F_q[x]/(R); P(t) is evaluated by Horner with coefficients in F_q.
  const Poly r = first_irreducible(F, static_cast<int>(i));
  const std::uint64_t half = (*qi - 1) / 2;
  Poly rhs_sign = Poly::one(F);
  if (p.degree() % 2 == 1) rhs_sign = -rhs_sign;

  std::uint64_t affine = 0;
  for (std::uint64_t idx = 0; idx < *qi; ++idx) {
    const Poly t = from_residue_index(F, idx);
    Poly v = Poly::zero(F);
    for (int k = p.degree(); k >= 0; --k) v = (v * t + Poly::constant(p.coeff(static_cast<std::size_t>(k)))) % r;
    v = (v * rhs_sign) % r;
    if (v.is_zero()) {
      affine += 1;
    } else if (mod_pow(v, half, r).is_one()) {
      affine += 2;
    }
  }
  // The leading coefficient of (-1)^d P is 1, a square: two points at
  // infinity for even d, one for odd d.
  return affine + (p.degree() % 2 == 0 ? 2 : 1);
}

BigInt pointcount_oracle(const Poly& p) {
  require_curve(p);
  const int d = p.degree();
  if (d < 2 || d > 5) throw DomainError("point-count oracle supports 2 <= deg P <= 5");
  const unsigned g = static_cast<unsigned>((d - 1) / 2);
  const BigInt q(static_cast<unsigned long>(p.spec()->q()));

  // a_i = N_i - (q^i + 1); k b_k = sum_{i=1}^{k} a_i b_{k-i}.
  std::vector<BigInt> a(g + 1), b(2 * g + 1);
  BigInt qi = 1;
  for (unsigned i = 1; i <= g; ++i) {
    qi *= q;
    a[i] = BigInt(static_cast<unsigned long>(count_points(p, i))) - qi - 1;
  }
  b[0] = 1;
  for (unsigned k = 1; k <= g; ++k) {
    BigInt s = 0;
    for (unsigned i = 1; i <= k; ++i) s += a[i] * b[k - i];
    if (s % k != 0) throw InternalError("non-integral L-polynomial coefficient");
    b[k] = s / k;
  }
  // Functional equation: b_{2g-i} = q^{g-i} b_i.
  for (unsigned i = 0; i < g; ++i) {
    BigInt pw;
    mpz_pow_ui(pw.get_mpz_t(), q.get_mpz_t(), g - i);
    b[2 * g - i] = pw * b[i];
  }
  BigInt h = 0;
  for (const BigInt& c : b) h += c;
  return h;
}

}  // namespace fqd
