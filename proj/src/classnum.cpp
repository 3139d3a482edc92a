#include "fqdigits/classnum.hpp"

#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <numeric>

#include "fqdigits/digits.hpp"
#include "fqdigits/error.hpp"
#include "fqdigits/intmath.hpp"

namespace fqd {

namespace {

// Complex product kept as mantissa * 2^exp2 so long products cannot overflow.
class ScaledComplex {
 public:
  void mul(std::complex<double> z) {
    mant_ *= z;
    const double a = std::abs(mant_);
    if (a == 0.0 || !std::isfinite(a)) return;
    int e = 0;
    std::frexp(a, &e);
    mant_ = std::complex<double>(std::ldexp(mant_.real(), -e), std::ldexp(mant_.imag(), -e));
    exp2_ += e;
  }

  // |approx / exact - 1|, or |approx| when exact is zero.
  double relative_error(const BigInt& exact) const {
    if (sgn(exact) == 0) return std::abs(mant_) == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
    long e = 0;
    const double m = mpz_get_d_2exp(&e, exact.get_mpz_t());
    const double scale = std::ldexp(1.0, static_cast<int>(exp2_ - e));
    return std::abs(mant_ / m * scale - 1.0);
  }

 private:
  std::complex<double> mant_{1.0, 0.0};
  long exp2_ = 0;
};

std::complex<double> unit_root(std::uint64_t num, std::uint64_t den) {
  return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(num % den) / static_cast<double>(den));
}

void check_product_work(std::uint64_t n, std::uint64_t factors) {
  const double phi = static_cast<double>(euler_phi(n));
  if (static_cast<double>(factors) * phi * phi > kMaxExactProductWork)
    throw ResourceError("exact product of " + std::to_string(factors) + " factors in Z[zeta_" + std::to_string(n) +
                        "] exceeds the work bound");
}

void check_advisory(double err, const char* what) {
  if (!(err <= kAdvisoryTolerance))
    throw InternalError(std::string("floating-point cross-check disagrees with the exact ") + what);
}

BigInt collapse(const CycloInt& a, const char* what) {
  auto v = as_integer(a);
  if (!v) throw InternalError(std::string(what) + " did not collapse to a rational integer");
  return *v;
}

void require_e_ge_d(const ResidueCtx& ctx) {
  if (ctx.e() < ctx.d())
    throw HypothesisError("deg G ≥ deg P", "deg G = " + std::to_string(ctx.e()) + ", deg P = " + std::to_string(ctx.d()));
}

struct MonicLog {
  std::uint64_t dlog;
  int degree;
};

// (dlog, degree) of every monic I with deg I < d.
std::vector<MonicLog> monic_logs(const ResidueCtx& ctx) {
  std::vector<MonicLog> out;
  for (const Poly& i : monic_polys_below(ctx.spec(), ctx.d())) out.push_back({*ctx.dlog(i), i.degree()});
  return out;
}

CycloInt cyclic_to_cyclo(std::uint64_t n, const std::vector<std::int64_t>& acc) {
  return CycloInt::from_cyclic(n, acc);
}

void require_plus(const ResidueCtx& ctx, const DirichletChar& chi) {
  if (chi.j % (ctx.q() - 1) != 0) throw DomainError("character must be trivial on F_q^x");
}

// F^(+)(zeta_N^j) in Z[zeta_N].
CycloInt eval_fplus(const ResidueCtx& ctx, const DigitPolynomials& dp, std::uint64_t j) {
  const std::uint64_t n = ctx.group_order();
  std::vector<std::int64_t> acc(n, 0);
  const auto& f = dp.fplus();
  for (std::size_t k = 0; k < f.size(); ++k) acc[mul_mod(j, k, n)] += f[k].get_si();
  return cyclic_to_cyclo(n, acc);
}

// F^(lambda)(zeta_N^j) in Z[zeta_N] for lambda = restriction of chi_j.
CycloInt eval_flambda(const ResidueCtx& ctx, const DigitPolynomials& dp, std::uint64_t j) {
  const std::uint64_t n = ctx.group_order();
  const auto coeffs = dp.flambda(ctx.restriction_index(j));
  std::vector<std::int64_t> acc(n, 0);
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (!coeffs[k]) continue;
    // zeta_{q-1} = zeta_N^r.
    const std::uint64_t t = (mul_mod(*coeffs[k], ctx.r(), n) + mul_mod(j, k, n)) % n;
    acc[t] += 1;
  }
  return cyclic_to_cyclo(n, acc);
}

// sum over monic I with lo <= deg I < d of weight(deg I) chi_j(I), in Z[zeta_N].
template <typename Weight>
CycloInt monic_sum(const ResidueCtx& ctx, std::uint64_t j, int lo, Weight weight) {
  const std::uint64_t n = ctx.group_order();
  std::vector<std::int64_t> acc(n, 0);
  for (const auto& [k, deg] : monic_logs(ctx)) {
    if (deg < lo) continue;
    acc[mul_mod(j, k, n)] += weight(deg);
  }
  return cyclic_to_cyclo(n, acc);
}

}  // namespace

// --- digit polynomials ------------------------------------------------------

DigitPolynomials::DigitPolynomials(const ResidueCtx& ctx, DigitConventions conv)
    : q_(ctx.q()), base_log_(ctx.spec()->log(ctx.base().leading_coeff().value())) {
  digits_ = closed_form_digits(ctx.modulus(), ctx.base(), ctx.r());
  fplus_.reserve(digits_.size());
  digit_log_.reserve(digits_.size());
  for (const Poly& h : digits_) {
    if (h.is_zero()) {
      // Zero digits carry weight zero in F^(+) and coefficient zero in F^(lambda).
      fplus_.emplace_back(conv.zero_degree);
      digit_log_.emplace_back(std::nullopt);
    } else {
      fplus_.emplace_back(h.degree());
      digit_log_.emplace_back(ctx.spec()->log(h.leading_coeff().value()));
    }
  }
}

std::vector<std::optional<std::uint64_t>> DigitPolynomials::flambda(std::uint64_t s) const {
  const std::uint64_t m = q_ - 1;
  std::vector<std::optional<std::uint64_t>> out;
  out.reserve(digit_log_.size());
  for (const auto& lg : digit_log_) {
    if (!lg) {
      out.emplace_back(std::nullopt);
      continue;
    }
    // lambda(delta G) * conj(lambda)(delta H_k).
    const std::uint64_t diff = (base_log_ + m - *lg) % (m == 0 ? 1 : m);
    out.emplace_back(m == 0 ? 0 : mul_mod(s % m, diff, m));
  }
  return out;
}

CycloInt DigitPolynomials::flambda_coeff(std::uint64_t s, std::size_t k) const {
  const auto coeffs = flambda(s);
  if (k >= coeffs.size() || !coeffs[k]) return CycloInt(lambda_modulus());
  return root_of_unity(lambda_modulus(), static_cast<std::int64_t>(*coeffs[k]));
}

DigitPolynomials build_digit_polys(const ResidueCtx& ctx, DigitConventions conv) { return DigitPolynomials(ctx, conv); }

// --- identities ---------------------------------------------------------------

IdentityCheck prop31_identity(const ResidueCtx& ctx, const DigitPolynomials& dp, const DirichletChar& chi) {
  require_plus(ctx, chi);
  const int lo = ctx.d() - ctx.e();
  return {eval_fplus(ctx, dp, chi.j), monic_sum(ctx, chi.j, lo, [lo](int deg) { return deg - lo; })};
}

IdentityCheck prop32_identity(const ResidueCtx& ctx, const DigitPolynomials& dp, const DirichletChar& chi) {
  const int lo = ctx.d() - ctx.e();
  return {eval_flambda(ctx, dp, chi.j), monic_sum(ctx, chi.j, lo, [](int) { return 1; })};
}

IdentityCheck cor32_identity(const ResidueCtx& ctx, const DigitPolynomials& dp, const DirichletChar& chi) {
  require_e_ge_d(ctx);
  require_plus(ctx, chi);
  if (chi.is_trivial()) throw DomainError("character must be nontrivial");
  return {eval_fplus(ctx, dp, chi.j), monic_sum(ctx, chi.j, 0, [](int deg) { return deg; })};
}

IdentityCheck cor33_identity(const ResidueCtx& ctx, const DigitPolynomials& dp, const DirichletChar& chi) {
  require_e_ge_d(ctx);
  return {eval_flambda(ctx, dp, chi.j), monic_sum(ctx, chi.j, 0, [](int) { return 1; })};
}

BigInt degree_sum_formula(std::uint64_t q, int d, int e) {
  if (d < 1 || e < 1) throw DomainError("degree_sum_formula needs d, e >= 1");
  const BigInt bq(static_cast<unsigned long>(q));
  auto s0 = [&](int j) {
    BigInt s = 0, pw = 1;
    for (int i = 0; i < j; ++i, pw *= bq) s += pw;
    return s;
  };
  auto s1 = [&](int j) {
    BigInt s = 0, pw = 1;
    for (int i = 0; i < j; ++i, pw *= bq) s += i * pw;
    return s;
  };
  if (e < d) {
    BigInt pw;
    mpz_pow_ui(pw.get_mpz_t(), bq.get_mpz_t(), static_cast<unsigned long>(d - e));
    return pw * s1(e);
  }
  return (e - d) * s0(d) + s1(d);
}

// --- plus part ------------------------------------------------------------------

PlusProduct plus_product(const DigitPolynomials& dp, std::uint64_t m) {
  if (m < 2) throw HypothesisError("[L^+:K] > 1", "m = " + std::to_string(m));
  // Only the values at m-th roots matter, so fold F^(+) modulo u^m - 1.
  IntPoly folded(m);
  for (std::size_t k = 0; k < dp.fplus().size(); ++k) folded[k % m] += dp.fplus()[k];

  check_product_work(m, m - 1);
  PlusProduct out;
  IntPoly psi(m, BigInt(1));  // (u^m - 1)/(u - 1)
  out.via_resultant = resultant(psi, folded);

  CycloInt prod = CycloInt::integer(m, 1);
  ScaledComplex approx;
  for (std::uint64_t t = 1; t < m; ++t) {
    prod *= evaluate_at_root(folded, m, t);
    std::complex<double> z{0.0, 0.0};
    for (std::uint64_t k = 0; k < m; ++k)
      if (sgn(folded[k]) != 0) z += folded[k].get_d() * unit_root(t * k, m);
    approx.mul(z);
  }
  out.via_cyclotomic = collapse(prod, "F^(+) product");
  out.advisory_relative_error = approx.relative_error(out.via_cyclotomic);
  return out;
}

BigInt h_plus_digits(const ResidueCtx& ctx, const DigitPolynomials& dp, std::uint64_t l) {
  require_e_ge_d(ctx);
  const SubfieldDescriptor sd = subfield(ctx, l);
  if (sd.m < 2) throw HypothesisError("[L^+:K] > 1", "m = gcd(l, r) = 1");
  const PlusProduct pp = plus_product(dp, sd.m);
  if (pp.via_resultant != pp.via_cyclotomic)
    throw InternalError("resultant and cyclotomic products of F^(+) disagree");
  check_advisory(pp.advisory_relative_error, "F^(+) product");
  BigInt h = pp.via_cyclotomic;
  if (sd.m % 2 == 0) h = -h;  // (-1)^{m-1}
  return h;
}

BigInt h_plus_digits(const ResidueCtx& ctx, std::uint64_t l) {
  require_e_ge_d(ctx);
  return h_plus_digits(ctx, build_digit_polys(ctx), l);
}

// --- minus part -------------------------------------------------------------------

MinusProduct minus_product(const ResidueCtx& ctx, const DigitPolynomials& dp, const SubfieldDescriptor& sd) {
  const std::uint64_t big_n = ctx.group_order();
  const std::uint64_t l = sd.l;
  const std::uint64_t qm1 = ctx.q() - 1;
  const std::uint64_t step = big_n / l;
  check_product_work(l, l - sd.m);

  CycloInt prod = CycloInt::integer(l, 1);
  ScaledComplex approx;
  std::uint64_t factors = 0;
  for (std::size_t i = 0; i < sd.yl.size(); ++i) {
    const UnitCharacter& lambda = sd.yl[i];
    if (lambda.is_trivial()) continue;
    const auto coeffs = dp.flambda(lambda.index());
    // zeta = zeta_N^j with j in X_L and zeta^m = alpha_lambda.
    std::uint64_t roots = 0;
    for (std::uint64_t j : sd.xl) {
      if (mul_mod(j, sd.m, big_n) != sd.alpha_exponent[i]) continue;
      if (ctx.restriction_index(j) != lambda.index())
        throw InternalError("root of zeta^m = alpha_lambda lies outside X_L^(lambda)");
      ++roots;
      // Everything lives in Z[zeta_l]: zeta_N^j = zeta_l^{j/step} and
      // zeta_{q-1}^c = zeta_l^{c l/(q-1)}, integral because lambda^n = 1.
      const std::uint64_t t = j / step;
      std::vector<std::int64_t> acc(l, 0);
      std::complex<double> z{0.0, 0.0};
      for (std::size_t k = 0; k < coeffs.size(); ++k) {
        if (!coeffs[k]) continue;
        const std::uint64_t c = *coeffs[k];
        if ((c * l) % qm1 != 0) throw InternalError("F^(lambda) coefficient outside Z[zeta_l]");
        const std::uint64_t expo = ((c * l) / qm1 + mul_mod(t, k, l)) % l;
        acc[expo] += 1;
        z += unit_root(expo, l);
      }
      prod *= CycloInt::from_cyclic(l, acc);
      approx.mul(z);
      ++factors;
    }
    if (roots != sd.m) throw InternalError("expected m roots of zeta^m = alpha_lambda");
  }
  if (factors != sd.l - sd.m) throw InternalError("minus product does not cover X_L^-");
  MinusProduct out;
  out.value = collapse(prod, "F^(lambda) product");
  out.advisory_relative_error = approx.relative_error(out.value);
  return out;
}

BigInt h_minus_digits(const ResidueCtx& ctx, const DigitPolynomials& dp, std::uint64_t l) {
  require_e_ge_d(ctx);
  const SubfieldDescriptor sd = subfield(ctx, l);
  if (sd.n < 2) throw HypothesisError("L != L^+", "n = [L:L^+] = 1");
  const MinusProduct mp = minus_product(ctx, dp, sd);
  check_advisory(mp.advisory_relative_error, "F^(lambda) product");
  return mp.value;
}

BigInt h_minus_digits(const ResidueCtx& ctx, std::uint64_t l) {
  require_e_ge_d(ctx);
  return h_minus_digits(ctx, build_digit_polys(ctx), l);
}

// --- quadratic subfield -------------------------------------------------------------

BigInt theorem12_quadratic(const Poly& p, const Poly& g) {
  const auto& F = p.spec();
  if (F->q() % 2 == 0) throw HypothesisError("q odd", "q = " + std::to_string(F->q()));
  if (p.degree() < 1 || !p.is_monic() || !is_irreducible(p)) throw DomainError("P must be monic irreducible");
  if (g.degree() < p.degree())
    throw HypothesisError("deg G ≥ deg P", "deg G = " + std::to_string(g.degree()) + ", deg P = " + std::to_string(p.degree()));
  if (auto w = primitivity_witnesses(p, g); !w.empty())
    throw DomainError("G is not a primitive root modulo P: G^(N/" + std::to_string(w.front()) + ") = 1");

  const int d = p.degree();
  const std::uint64_t r = (*checked_pow(F->q(), static_cast<unsigned>(d)) - 1) / (F->q() - 1);
  const auto digits = closed_form_digits(p, g, r);
  BigInt sum = 0;
  if (d % 2 == 0) {
    for (std::uint64_t k = 1; k <= r; ++k) {
      const Poly& h = digits[k - 1];
      const long deg = h.is_zero() ? 0 : h.degree();
      sum += (k % 2 == 0) ? deg : -deg;
    }
    return sum;
  }
  const int eta = quadratic_character(g.leading_coeff());
  for (std::uint64_t k = 1; k <= r; ++k) {
    const int eps = quadratic_character(digits[k - 1].leading_coeff());
    sum += (k % 2 == 0) ? eps : -eps;
  }
  return -eta * sum;
}

// --- character sums -------------------------------------------------------------------

CharSumClassNumbers h_charsum(const ResidueCtx& ctx, std::uint64_t l) {
  const SubfieldDescriptor sd = subfield(ctx, l);
  const std::uint64_t big_n = ctx.group_order();
  check_product_work(sd.m, sd.m - 1);
  check_product_work(sd.l, sd.l - sd.m);
  const auto logs = monic_logs(ctx);
  CharSumClassNumbers out;

  // X_L^+ factors live in Z[zeta_m]: chi_j(G^k) = zeta_m^{(j/(N/m)) k}.
  CycloInt plus = CycloInt::integer(sd.m, 1);
  ScaledComplex plus_approx;
  for (std::uint64_t j : sd.xl_plus) {
    if (j == 0) continue;
    const std::uint64_t t = j / (big_n / sd.m);
    std::vector<std::int64_t> acc(sd.m, 0);
    std::complex<double> z{0.0, 0.0};
    for (const auto& [k, deg] : logs) {
      const std::uint64_t expo = mul_mod(t, k, sd.m);
      acc[expo] -= deg;
      z -= static_cast<double>(deg) * unit_root(expo, sd.m);
    }
    plus *= CycloInt::from_cyclic(sd.m, acc);
    plus_approx.mul(z);
  }
  out.h_plus = collapse(plus, "character-sum plus product");

  // X_L^- factors live in Z[zeta_l].
  CycloInt minus = CycloInt::integer(sd.l, 1);
  ScaledComplex minus_approx;
  for (std::uint64_t j : sd.xl_minus) {
    const std::uint64_t t = j / (big_n / sd.l);
    std::vector<std::int64_t> acc(sd.l, 0);
    std::complex<double> z{0.0, 0.0};
    for (const auto& [k, deg] : logs) {
      const std::uint64_t expo = mul_mod(t, k, sd.l);
      acc[expo] += 1;
      z += unit_root(expo, sd.l);
    }
    minus *= CycloInt::from_cyclic(sd.l, acc);
    minus_approx.mul(z);
  }
  out.h_minus = collapse(minus, "character-sum minus product");
  out.h = out.h_plus * out.h_minus;
  out.advisory_relative_error =
      std::max(plus_approx.relative_error(out.h_plus), minus_approx.relative_error(out.h_minus));
  check_advisory(out.advisory_relative_error, "character-sum product");
  return out;
}

Poly canonical_primitive_lift(const Poly& p) { return least_primitive_residue(p) + p; }

// --- reports ------------------------------------------------------------------------------

const BigInt& ClassNumberValue::value() const {
  if (by_method.empty()) throw DomainError("class number value without any method");
  if (auto it = by_method.find("digits"); it != by_method.end()) return it->second;
  return by_method.begin()->second;
}

bool ClassNumberValue::agree() const {
  for (const auto& [name, v] : by_method)
    if (v != by_method.begin()->second) return false;
  return true;
}

std::vector<std::string> ClassNumberValue::methods() const {
  std::vector<std::string> out;
  for (const char* name : {"digits", "charsum", "pointcount"})
    if (by_method.count(name)) out.emplace_back(name);
  return out;
}

bool ClassNumberReport::agree() const {
  for (const auto* v : {&h_plus, &h_minus, &h})
    if (*v && !(*v)->agree()) return false;
  return true;
}

ClassNumberReport class_number_report(const ResidueCtx& ctx, std::uint64_t l, const ReportOptions& opts) {
  require_e_ge_d(ctx);
  const SubfieldDescriptor sd = subfield(ctx, l);
  ClassNumberReport rep;
  rep.q = ctx.q();
  rep.p = to_string(ctx.modulus());
  rep.g = to_string(ctx.base());
  rep.d = ctx.d();
  rep.e = ctx.e();
  rep.r = ctx.r();
  rep.l = sd.l;
  rep.m = sd.m;
  rep.n = sd.n;

  if (opts.verify_pointcount) {
    if (sd.l != 2) throw HypothesisError("l = 2 for the point-count oracle", "l = " + std::to_string(sd.l));
  }

  const DigitPolynomials dp = build_digit_polys(ctx);
  // An empty product (m = 1 or n = 1) is the class number 1 of K or of L = L^+.
  const BigInt h_plus = sd.m > 1 ? h_plus_digits(ctx, dp, l) : BigInt(1);
  const BigInt h_minus = sd.n > 1 ? h_minus_digits(ctx, dp, l) : BigInt(1);
  const BigInt h = h_plus * h_minus;
  for (const BigInt* v : {&h_plus, &h_minus})
    if (*v < 1) throw InternalError("digit route produced a non-positive class number");

  if (sd.l == 2 && ctx.q() % 2 == 1) {
    if (theorem12_quadratic(ctx.modulus(), ctx.base()) != h)
      throw InternalError("quadratic digit formula disagrees with the product formulas");
  }

  ClassNumberValue vp, vm, vh;
  vp.by_method["digits"] = h_plus;
  vm.by_method["digits"] = h_minus;
  vh.by_method["digits"] = h;
  if (opts.verify_charsum) {
    const CharSumClassNumbers cs = h_charsum(ctx, l);
    vp.by_method["charsum"] = cs.h_plus;
    vm.by_method["charsum"] = cs.h_minus;
    vh.by_method["charsum"] = cs.h;
  }
  if (opts.verify_pointcount) vh.by_method["pointcount"] = pointcount_oracle(ctx.modulus());

  if (opts.part != ReportPart::Minus) rep.h_plus = vp;
  if (opts.part != ReportPart::Plus) rep.h_minus = vm;
  if (opts.part == ReportPart::All) rep.h = vh;
  return rep;
}

}  // namespace fqd
