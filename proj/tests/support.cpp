#include "support.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <map>
#include <numbers>

#include "fqdigits/digits.hpp"
#include "fqdigits/intmath.hpp"

namespace fqd::testing {

namespace {

const FieldRef& field(std::uint64_t q) {
  static const std::map<std::uint64_t, FieldRef> fields = [] {
    std::map<std::uint64_t, FieldRef> m;
    for (std::uint64_t q : {2, 3, 4, 5, 7}) m[q] = FieldSpec::of_order(q);
    return m;
  }();
  return fields.at(q);
}

template <typename T>
T pick(Rng& rng, std::initializer_list<T> xs) {
  std::uniform_int_distribution<std::size_t> d(0, xs.size() - 1);
  return *(xs.begin() + d(rng));
}

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

Poly monic_of_index(const FieldRef& F, int degree, std::uint64_t idx) {
  return from_residue_index(F, idx) + Poly::monomial(FieldElement::one(F), static_cast<unsigned>(degree));
}

std::uint64_t ipow(std::uint64_t b, int e) {
  std::uint64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

// Residue index -> k with G^k = residue, built by repeated multiplication.
struct BruteLogs {
  std::map<std::uint64_t, std::uint64_t> dlog;
  std::vector<Poly> powers;
};

BruteLogs brute_logs(const Poly& p, const Poly& g) {
  BruteLogs out;
  Poly cur = Poly::one(p.spec());
  const Poly gr = g % p;
  do {
    out.dlog[residue_index(cur)] = out.powers.size();
    out.powers.push_back(cur);
    cur = (cur * gr) % p;
  } while (!cur.is_one());
  return out;
}

std::uint64_t field_order_of(const Poly& p) { return ipow(p.spec()->q(), p.degree()) - 1; }

// Pair (M, G) of coprime polynomials for the digit suites.
std::pair<Poly, Poly> random_coprime_pair(Rng& rng) {
  for (;;) {
    const FieldRef& F = field(pick<std::uint64_t>(rng, {2, 3, 4, 5, 7}));
    const int dm = uniform(rng, 1, F->q() <= 3 ? 4 : 2);
    const int dg = uniform(rng, 1, 3);
    Poly m = random_poly(rng, F, dm, uniform(rng, 0, 1) == 0);
    Poly g = random_poly(rng, F, dg, false);
    if (gcd(m, g).is_one()) return {m, g};
  }
}

CycloInt cyclic_sum(std::uint64_t n, const std::vector<std::int64_t>& acc) {
  std::vector<BigInt> c(acc.begin(), acc.end());
  return CycloInt::from_coeffs(n, std::move(c));
}

}  // namespace

std::string describe(const Poly& p, const Poly& g) {
  return "q=" + std::to_string(p.spec()->q()) + " P=" + to_string(p) + " G=" + to_string(g);
}

// --- generators ------------------------------------------------------------

Poly random_poly(Rng& rng, const FieldRef& F, int degree, bool monic) {
  std::uniform_int_distribution<std::uint32_t> coef(0, F->q() - 1), nonzero(1, F->q() - 1);
  std::vector<Poly::Value> c(static_cast<std::size_t>(degree) + 1);
  for (int i = 0; i < degree; ++i) c[i] = coef(rng);
  c[degree] = monic ? 1 : nonzero(rng);
  return Poly(F, std::move(c));
}

Poly random_irreducible(Rng& rng, const FieldRef& F, int degree) {
  for (;;) {
    Poly p = random_poly(rng, F, degree, true);
    if (brute_irreducible(p)) return p;
  }
}

std::optional<Poly> random_primitive_base(Rng& rng, const Poly& p, int e, int tries) {
  for (int t = 0; t < tries; ++t) {
    Poly g = random_poly(rng, p.spec(), e, false);
    if ((g % p).is_zero()) continue;
    if (brute_order(g, p) == field_order_of(p)) return g;
  }
  return std::nullopt;
}

RandomCtx random_ctx(Rng& rng, bool e_at_least_d) {
  for (;;) {
    const std::uint64_t q = pick<std::uint64_t>(rng, {2, 3, 4, 5, 7});
    const int dmax = q == 2 ? 6 : q == 3 ? 4 : q == 7 ? 2 : 3;
    const int d = uniform(rng, 2, dmax);
    const Poly p = random_irreducible(rng, field(q), d);
    const int e = e_at_least_d ? uniform(rng, d, d + 2) : uniform(rng, 1, d + 1);
    if (auto g = random_primitive_base(rng, p, e)) return {p, *g};
  }
}

// --- oracles ---------------------------------------------------------------

bool brute_irreducible(const Poly& f) {
  const int d = f.degree();
  if (d < 1) return false;
  const FieldRef& F = f.spec();
  for (int s = 1; s <= d / 2; ++s) {
    const std::uint64_t count = ipow(F->q(), s);
    for (std::uint64_t idx = 0; idx < count; ++idx)
      if ((f % monic_of_index(F, s, idx)).is_zero()) return false;
  }
  return true;
}

std::uint64_t gauss_count(std::uint64_t q, int d) {
  std::int64_t total = 0;
  for (int e = 1; e <= d; ++e)
    if (d % e == 0) total += mobius(static_cast<std::uint64_t>(d / e)) * static_cast<std::int64_t>(ipow(q, e));
  return static_cast<std::uint64_t>(total / d);
}

std::uint64_t brute_order(const Poly& g, const Poly& m) {
  const Poly gr = g % m;
  Poly cur = gr;
  for (std::uint64_t k = 1;; ++k) {
    if (cur.is_one() || (m.degree() == 0)) return k;
    cur = (cur * gr) % m;
  }
}

std::vector<std::int64_t> phi_mobius(std::uint64_t n) {
  // Numerator and denominator products of (x^e - 1), then one exact division.
  std::vector<std::int64_t> num{1}, den{1};
  auto mul_binomial = [](std::vector<std::int64_t>& a, std::uint64_t e) {
    std::vector<std::int64_t> out(a.size() + e, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
      out[i + e] += a[i];
      out[i] -= a[i];
    }
    a = std::move(out);
  };
  for (std::uint64_t e = 1; e <= n; ++e) {
    if (n % e != 0) continue;
    const int mu = mobius(n / e);
    if (mu == 1) mul_binomial(num, e);
    if (mu == -1) mul_binomial(den, e);
  }
  // den is monic up to sign (+-1 constant term and leading 1).
  std::vector<std::int64_t> quot(num.size() - den.size() + 1, 0);
  for (std::size_t i = quot.size(); i-- > 0;) {
    const std::int64_t c = num[i + den.size() - 1];
    quot[i] = c;
    for (std::size_t j = 0; j < den.size(); ++j) num[i + j] -= c * den[j];
  }
  return quot;
}

BigInt jacobian_order_bruteforce(const Poly& p) {
  const FieldRef& F = p.spec();
  const std::uint64_t q = F->q();
  const int d = p.degree();
  const int genus = (d - 1) / 2;
  if (genus == 0) return 1;
  const std::uint64_t at_inf = d % 2 == 0 ? 2 : 1;

  auto count_over = [&](const FieldRef& E) {
    std::uint64_t n = at_inf;
    for (const FieldElement& x : elements(E)) {
      FieldElement v = FieldElement::zero(E);
      for (int k = d; k >= 0; --k) v = v * x + FieldElement(E, p.coeff_value(static_cast<std::size_t>(k)));
      if (d % 2 == 1) v = -v;
      n += v.is_zero() ? 1 : quadratic_character(v) == 1 ? 2 : 0;
    }
    return BigInt(static_cast<unsigned long>(n));
  };
  const BigInt n1 = count_over(F);
  if (genus == 1) return n1;
  const BigInt n2 = count_over(FieldSpec::of_order(q * q));
  return (n1 * n1 + n2) / 2 - static_cast<unsigned long>(q);
}

// --- property suites -------------------------------------------------------

SuiteResult suite_closed_form_vs_division(Rng& rng, int cases) {
  SuiteResult res{"closed form vs long division"};
  for (int c = 0; c < cases; ++c) {
    const auto [m, g] = random_coprime_pair(rng);
    const std::uint64_t period = brute_order(g, m);
    const std::int64_t n = static_cast<std::int64_t>(std::min<std::uint64_t>(3 * period, 300));
    ++res.cases;
    const auto division = digit_expand(Poly::one(m.spec()), m, g, n).digits;
    const auto closed = closed_form_digits(m, g, static_cast<std::uint64_t>(n));
    if (division != closed) {
      res.fail("digit lists differ for " + describe(m, g));
      continue;
    }
    const std::uint64_t k = std::uniform_int_distribution<std::uint64_t>(1, static_cast<std::uint64_t>(n))(rng);
    if (digit_closed_form(m, g, k) != division[k - 1]) res.fail("H_k differs for " + describe(m, g));

    // G^g = M sum_{k=1}^{g} H_k G^{g-k} + 1, i.e. 1/M = sum H_k/G^k + G^{-g}/M.
    if (period <= static_cast<std::uint64_t>(n)) {
      Poly acc = Poly::zero(m.spec());
      for (std::uint64_t i = 0; i < period; ++i) acc = acc * g + division[i];
      Poly gg = Poly::one(m.spec());
      for (std::uint64_t i = 0; i < period; ++i) gg = gg * g;
      if (gg != m * acc + Poly::one(m.spec())) res.fail("periodic identity fails for " + describe(m, g));
    }

    // A general f1/f2: the remainder after n digits has positive valuation.
    const Poly f1 = random_poly(rng, m.spec(), uniform(rng, 0, 4), false);
    const Poly f2 = random_poly(rng, m.spec(), uniform(rng, 0, 3), false);
    const auto x = digit_expand(f1, f2, g, 6);
    Poly gn = Poly::one(m.spec());
    Poly partial = x.h0;
    for (const Poly& h : x.digits) {
      partial = partial * g + h;
      gn = gn * g;
    }
    // f G^n - partial = f_{n+1}, so f2 f_{n+1} must have degree below deg f2.
    const Poly tail = f1 * gn - f2 * partial;
    if (!tail.is_zero() && tail.degree() >= f2.degree())
      res.fail("remainder valuation not positive for f = (" + to_string(f1) + ")/(" + to_string(f2) + ")");
    for (const Poly& h : x.digits)
      if (!h.is_zero() && h.degree() >= g.degree()) res.fail("digit degree not below deg G");
  }
  return res;
}

SuiteResult suite_period(Rng& rng, int cases) {
  SuiteResult res{"period = ord(G mod M)"};
  for (int c = 0; c < cases; ++c) {
    const auto [m, g] = random_coprime_pair(rng);
    const std::uint64_t ord = brute_order(g, m);
    ++res.cases;
    if (digit_period(m, g) != ord || multiplicative_order(g, m) != ord) {
      res.fail("order mismatch for " + describe(m, g));
      continue;
    }
    if (ord > 200) continue;
    const auto h = digit_expand(Poly::one(m.spec()), m, g, static_cast<std::int64_t>(2 * ord)).digits;
    if (digit_expand(Poly::one(m.spec()), m, g, 1).period != ord) res.fail("expansion period field wrong");
    for (std::uint64_t k = 0; k < ord; ++k)
      if (h[k] != h[k + ord]) res.fail("H_{k+g} != H_k for " + describe(m, g));
    for (std::uint64_t s = 1; s < ord; ++s) {
      bool differs = false;
      for (std::uint64_t k = 0; k < ord && !differs; ++k) differs = h[k] != h[k + s];
      if (!differs) res.fail("smaller shift " + std::to_string(s) + " for " + describe(m, g));
    }
  }
  return res;
}

SuiteResult suite_rudnick_and_twisted(Rng& rng, int cases) {
  SuiteResult res{"vanishing twisted digit sums"};
  int rudnick = 0;
  for (int attempts = 0; res.cases < cases && attempts < 100 * cases; ++attempts) {
    const auto [m, g] = random_coprime_pair(rng);
    const FieldRef& F = m.spec();
    const bool plain = rudnick * 2 < res.cases + 1;
    const FieldElement alpha =
        plain ? FieldElement::one(F) : FieldElement(F, std::uniform_int_distribution<std::uint32_t>(1, F->q() - 1)(rng));
    const std::uint64_t period = brute_order(g, m);
    if (period > 300) continue;

    // Raw sum from the long-division digits.
    const auto h = digit_expand(Poly::one(F), m, g, static_cast<std::int64_t>(period)).digits;
    Poly expected = Poly::zero(F);
    FieldElement ak = FieldElement::one(F);
    for (const Poly& hk : h) {
      ak = ak * alpha;
      expected += hk * ak;
    }
    const Poly raw = twisted_digit_sum(m, g, alpha);
    if (raw != expected) res.fail("raw sum differs from direct sum for " + describe(m, g));

    const Poly ag1 = g * alpha - Poly::one(F);
    const bool hyp = !ag1.is_zero() && gcd(m, g * ag1).is_one() && period % mult_order(alpha) == 0;
    if (!hyp) continue;
    ++res.cases;
    if (plain) ++rudnick;
    if (!raw.is_zero())
      res.fail("sum nonzero for " + describe(m, g) + " alpha=" + to_string(alpha) + ": " + to_string(raw));
  }
  if (rudnick < cases / 3) res.fail("too few alpha = 1 cases");
  return res;
}

SuiteResult suite_degree_sum(Rng& rng, int cases) {
  SuiteResult res{"degree sum formula"};
  int below = 0;
  for (int c = 0; c < cases; ++c) {
    const bool want_below = c % 2 == 0;
    RandomCtx rc = random_ctx(rng, !want_below);
    while (want_below && rc.g.degree() >= rc.p.degree()) rc = random_ctx(rng, false);
    const ResidueCtx ctx(rc.p, rc.g);
    ++res.cases;
    if (ctx.e() < ctx.d()) ++below;
    const auto h = digit_expand(Poly::one(rc.p.spec()), rc.p, rc.g, static_cast<std::int64_t>(ctx.r())).digits;
    BigInt direct = 0;
    for (const Poly& x : h) direct += x.is_zero() ? 0 : x.degree();
    BigInt via_fplus = 0;
    const DigitPolynomials dp = build_digit_polys(ctx);
    for (const BigInt& x : dp.fplus()) via_fplus += x;
    const BigInt formula = degree_sum_formula(ctx.q(), ctx.d(), ctx.e());
    if (direct != formula || via_fplus != formula)
      res.fail(describe(rc.p, rc.g) + ": sum " + direct.get_str() + " vs formula " + formula.get_str());
  }
  if (below < cases / 4) res.fail("too few e < d cases");
  return res;
}

SuiteResult suite_character_identities(Rng& rng, int cases) {
  SuiteResult res{"character identities"};
  for (int c = 0; c < cases; ++c) {
    const RandomCtx rc = random_ctx(rng, c % 3 != 0);
    const ResidueCtx ctx(rc.p, rc.g);
    const DigitPolynomials dp = build_digit_polys(ctx);
    const FieldRef& F = rc.p.spec();
    const std::uint64_t n = ctx.group_order();
    const int d = ctx.d(), e = ctx.e();
    const BruteLogs logs = brute_logs(rc.p, rc.g);
    const auto h = digit_expand(Poly::one(F), rc.p, rc.g, static_cast<std::int64_t>(ctx.r())).digits;
    auto dlog_of = [&](const Poly& x) { return logs.dlog.at(residue_index(x % rc.p)); };

    // A few characters per context, always including one from X_P^+.
    std::vector<std::uint64_t> js{0, (ctx.q() - 1) * std::uniform_int_distribution<std::uint64_t>(0, ctx.r() - 1)(rng)};
    for (int t = 0; t < 3; ++t) js.push_back(std::uniform_int_distribution<std::uint64_t>(0, n - 1)(rng));

    ++res.cases;
    for (std::uint64_t j : js) {
      const bool plus = j % (ctx.q() - 1) == 0;
      std::vector<std::int64_t> fplus(n, 0), flam(n, 0), rhs_plus(n, 0), rhs_lam(n, 0), rhs_deg(n, 0), rhs_all(n, 0);
      const std::uint64_t dg = dlog_of(Poly::constant(rc.g.leading_coeff()));
      for (std::size_t k = 0; k < h.size(); ++k) {
        const std::uint64_t zk = mul_mod(j, k, n);
        fplus[zk] += h[k].is_zero() ? 0 : h[k].degree();
        if (h[k].is_zero()) continue;
        // chi(delta G) conj(chi)(delta H_k) zeta^{jk}
        const std::uint64_t dh = dlog_of(Poly::constant(h[k].leading_coeff()));
        const std::uint64_t t = (mul_mod(j, dg, n) + n - mul_mod(j, dh, n) + zk) % n;
        flam[t] += 1;
      }
      for (int s = 0; s < d; ++s) {
        const std::uint64_t count = ipow(ctx.q(), s);
        for (std::uint64_t idx = 0; idx < count; ++idx) {
          const Poly mon = monic_of_index(F, s, idx);
          const std::uint64_t t = mul_mod(j, dlog_of(mon), n);
          rhs_deg[t] += s;
          rhs_all[t] += 1;
          if (s >= d - e) {
            rhs_plus[t] += s - (d - e);
            rhs_lam[t] += 1;
          }
        }
      }
      const std::string tag = describe(rc.p, rc.g) + " j=" + std::to_string(j);
      const DirichletChar chi = ctx.character(j);
      const CycloInt o_fplus = cyclic_sum(n, fplus), o_flam = cyclic_sum(n, flam);
      if (o_flam != cyclic_sum(n, rhs_lam)) res.fail("oracle prop32 sides differ: " + tag);
      const IdentityCheck p32 = prop32_identity(ctx, dp, chi);
      if (p32.lhs != o_flam || p32.rhs != cyclic_sum(n, rhs_lam)) res.fail("prop32 vs oracle: " + tag);
      if (plus) {
        if (o_fplus != cyclic_sum(n, rhs_plus)) res.fail("oracle prop31 sides differ: " + tag);
        const IdentityCheck p31 = prop31_identity(ctx, dp, chi);
        if (p31.lhs != o_fplus || p31.rhs != cyclic_sum(n, rhs_plus)) res.fail("prop31 vs oracle: " + tag);
      }
      if (e >= d) {
        const IdentityCheck c33 = cor33_identity(ctx, dp, chi);
        if (!c33.holds() || c33.rhs != cyclic_sum(n, rhs_all)) res.fail("cor33: " + tag);
        if (plus && j != 0) {
          const IdentityCheck c32 = cor32_identity(ctx, dp, chi);
          if (!c32.holds() || c32.rhs != cyclic_sum(n, rhs_deg)) res.fail("cor32: " + tag);
        }
        if (j == 0 && as_integer(o_flam) != BigInt(static_cast<unsigned long>((ipow(ctx.q(), d) - 1) / (ctx.q() - 1))))
          res.fail("F^(lambda_0)(1) != s_0(d): " + tag);
      }
    }
  }
  return res;
}

SuiteResult suite_lemma_multiset(Rng& rng, int cases) {
  SuiteResult res{"complete residue system by degree"};
  for (int c = 0; c < cases; ++c) {
    const RandomCtx rc = random_ctx(rng, c % 2 == 0);
    const ResidueCtx ctx(rc.p, rc.g);
    const BruteLogs logs = brute_logs(rc.p, rc.g);
    const FieldRef& F = rc.p.spec();
    ++res.cases;
    if (logs.powers.size() != ctx.group_order()) {
      res.fail("G not primitive by brute force: " + describe(rc.p, rc.g));
      continue;
    }
    for (std::uint64_t k = 0; k < ctx.group_order(); ++k) {
      if (ctx.power(k) != logs.powers[k] || ctx.dlog(logs.powers[k]) != k || ctx.deg_map(k) != logs.powers[k].degree())
        res.fail("power/dlog table mismatch: " + describe(rc.p, rc.g));
    }
    for (int s = 0; s < ctx.d(); ++s) {
      std::vector<std::uint64_t> from_powers, from_monics;
      for (std::uint64_t k = 0; k < ctx.r(); ++k)
        if (logs.powers[k].degree() == s) from_powers.push_back(residue_index(logs.powers[k].monic()));
      for (std::uint64_t idx = 0; idx < ipow(ctx.q(), s); ++idx) from_monics.push_back(residue_index(monic_of_index(F, s, idx)));
      std::sort(from_powers.begin(), from_powers.end());
      std::sort(from_monics.begin(), from_monics.end());
      if (from_powers != from_monics) res.fail("degree " + std::to_string(s) + " classes differ: " + describe(rc.p, rc.g));
    }
  }
  return res;
}

SuiteResult suite_cycint_identities(Rng& rng, int cases) {
  SuiteResult res{"cyclotomic integer identities"};
  for (int c = 0; c < cases; ++c) {
    const std::uint64_t n = static_cast<std::uint64_t>(uniform(rng, 1, 120));
    const std::int64_t k = uniform(rng, -2 * static_cast<int>(n), 2 * static_cast<int>(n));
    const std::string tag = "n=" + std::to_string(n) + " k=" + std::to_string(k);
    ++res.cases;
    const CycloInt one = CycloInt::integer(n, 1);
    if (root_of_unity(n, k) * root_of_unity(n, -k) != one) res.fail("inverse root: " + tag);
    if (root_of_unity(n, k) * root_of_unity(n, static_cast<std::int64_t>(n) - k) != one) res.fail("n-k root: " + tag);
    CycloInt geo(n);
    for (std::uint64_t i = 0; i < n; ++i) geo += root_of_unity(n, static_cast<std::int64_t>(i));
    if (as_integer(geo) != BigInt(n == 1 ? 1 : 0)) res.fail("geometric sum: " + tag);
    if (cyclotomic_poly(n) != phi_mobius(n)) res.fail("Phi_n differs from Mobius product: " + tag);

    // complex_eval is a ring homomorphism.
    std::vector<BigInt> a(n), b(n);
    for (auto& x : a) x = uniform(rng, -5, 5);
    for (auto& x : b) x = uniform(rng, -5, 5);
    const CycloInt ca = CycloInt::from_coeffs(n, a), cb = CycloInt::from_coeffs(n, b);
    const auto za = complex_eval(ca), zb = complex_eval(cb);
    const double scale = 1.0 + std::abs(za) * std::abs(zb) + std::abs(za) + std::abs(zb);
    if (std::abs(complex_eval(ca * cb) - za * zb) > 1e-9 * scale || std::abs(complex_eval(ca + cb) - za - zb) > 1e-9 * scale)
      res.fail("complex_eval not multiplicative: " + tag);
    // Direct evaluation of the unreduced coefficient list.
    std::complex<double> direct = 0;
    for (std::uint64_t i = 0; i < n; ++i)
      direct += a[i].get_d() * std::polar(1.0, 2 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(n));
    if (std::abs(direct - za) > 1e-9 * (1.0 + std::abs(za))) res.fail("reduction changes the value: " + tag);
  }
  return res;
}

SuiteResult suite_resultant_vs_product(Rng& rng, int cases) {
  SuiteResult res{"resultant vs cyclotomic product"};
  for (int c = 0; c < cases; ++c) {
    const RandomCtx rc = random_ctx(rng, true);
    const ResidueCtx ctx(rc.p, rc.g);
    std::vector<std::uint64_t> ms;
    for (std::uint64_t m : divisors(ctx.r()))
      if (m > 1) ms.push_back(m);
    if (ms.empty()) {
      --c;
      continue;
    }
    const std::uint64_t m = ms[std::uniform_int_distribution<std::size_t>(0, ms.size() - 1)(rng)];
    const DigitPolynomials dp = build_digit_polys(ctx);
    const PlusProduct pp = plus_product(dp, m);
    ++res.cases;
    const std::string tag = describe(rc.p, rc.g) + " m=" + std::to_string(m);
    if (pp.via_resultant != pp.via_cyclotomic) res.fail("routes differ: " + tag);
    if (!(pp.advisory_relative_error <= kAdvisoryTolerance)) res.fail("advisory error: " + tag);

    // Floating oracle on the unfolded F^(+).
    std::complex<double> z = 1.0;
    for (std::uint64_t t = 1; t < m; ++t) {
      std::complex<double> v = 0;
      for (std::size_t k = 0; k < dp.fplus().size(); ++k)
        v += dp.fplus()[k].get_d() *
             std::polar(1.0, 2 * std::numbers::pi * static_cast<double>((t * k) % m) / static_cast<double>(m));
      z *= v;
    }
    const double exact = pp.via_cyclotomic.get_d();
    if (std::abs(z.real() - exact) > 1e-6 * (1.0 + std::abs(exact)) || std::abs(z.imag()) > 1e-6 * (1.0 + std::abs(exact)))
      res.fail("floating oracle disagrees: " + tag);
  }
  return res;
}

}  // namespace fqd::testing
