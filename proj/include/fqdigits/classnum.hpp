#pragma once

// Divisor class numbers of subfields of the P-th cyclotomic function field,
// computed three ways:
//   * digits:   products of the digit polynomials F^(+) and F^(lambda) of
//               1/P in base G at roots of unity;
//   * charsum:  products of Dirichlet character sums over monic
//               polynomials of degree < d;
//   * pointcount (quadratic L only): L(1) of the hyperelliptic curve
//               y^2 = (-1)^d P(t), from point counts over F_{q^i}.
// The exact Z[zeta_n] results are authoritative; a double-precision product
// is computed alongside and must agree to kAdvisoryTolerance.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fqdigits/chars.hpp"
#include "fqdigits/cycint.hpp"
#include "fqdigits/intpoly.hpp"

namespace fqd {

inline constexpr double kAdvisoryTolerance = 1e-6;

/// Bound on (number of factors) * phi(n)^2 for an exact product in Z[zeta_n];
/// larger products raise ResourceError.
inline constexpr double kMaxExactProductWork = 2e8;

struct DigitConventions {
  /// Weight given to a zero digit in F^(+).
  int zero_degree = 0;
};

/// F^(+)(u) = sum_{k=1}^{r} deg'(H_k) u^{k-1} and
/// F^(lambda)(u) = lambda(delta(G)) sum_{k=1}^{r} conj(lambda)(delta(H_k)) u^{k-1}.
class DigitPolynomials {
 public:
  DigitPolynomials(const ResidueCtx& ctx, DigitConventions conv = {});

  std::uint64_t r() const noexcept { return digits_.size(); }
  /// H_1..H_r of 1/P in base G.
  const std::vector<Poly>& digits() const noexcept { return digits_; }
  const IntPoly& fplus() const noexcept { return fplus_; }

  /// Coefficients of F^(lambda_s) as exponents of zeta_{q-1}; nullopt marks a
  /// zero coefficient (H_k = 0).
  std::vector<std::optional<std::uint64_t>> flambda(std::uint64_t s) const;
  /// Coefficient of u^k in F^(lambda_s) as an element of Z[zeta_{q-1}].
  CycloInt flambda_coeff(std::uint64_t s, std::size_t k) const;
  std::uint64_t lambda_modulus() const noexcept { return q_ - 1; }

 private:
  std::uint64_t q_;
  std::uint32_t base_log_;
  std::vector<Poly> digits_;
  IntPoly fplus_;
  std::vector<std::optional<std::uint32_t>> digit_log_;
};

DigitPolynomials build_digit_polys(const ResidueCtx& ctx, DigitConventions conv = {});

struct IdentityCheck {
  CycloInt lhs;
  CycloInt rhs;
  bool holds() const { return lhs == rhs; }
};

/// F^(+)(chi(G)) against sum over monic I, d-e <= deg I < d, of
/// (deg I - (d-e)) chi(I). Requires chi trivial on F_q^x.
IdentityCheck prop31_identity(const ResidueCtx& ctx, const DigitPolynomials& dp, const DirichletChar& chi);

/// F^(lambda)(chi(G)) against sum over monic I, d-e <= deg I < d, of chi(I),
/// with lambda the restriction of chi.
IdentityCheck prop32_identity(const ResidueCtx& ctx, const DigitPolynomials& dp, const DirichletChar& chi);

/// e >= d, chi in X_P^+ nontrivial: F^(+)(chi(G)) = sum_{deg I<d} chi(I) deg I.
IdentityCheck cor32_identity(const ResidueCtx& ctx, const DigitPolynomials& dp, const DirichletChar& chi);

/// e >= d: F^(lambda)(chi(G)) = sum_{deg I<d} chi(I).
IdentityCheck cor33_identity(const ResidueCtx& ctx, const DigitPolynomials& dp, const DirichletChar& chi);

/// sum_{k=1}^{r} deg H_k in closed form: q^{d-e} s_1(e) for e < d,
/// (e-d) s_0(d) + s_1(d) for e >= d.
BigInt degree_sum_formula(std::uint64_t q, int d, int e);

/// Exact product of F^(+) over the m-th roots of unity other than 1,
/// computed as a resultant and as a product in Z[zeta_m].
struct PlusProduct {
  BigInt via_resultant;
  BigInt via_cyclotomic;
  double advisory_relative_error = 0;
};
PlusProduct plus_product(const DigitPolynomials& dp, std::uint64_t m);

/// h_L^+ for the subfield of degree l. Requires e >= d and m > 1.
BigInt h_plus_digits(const ResidueCtx& ctx, const DigitPolynomials& dp, std::uint64_t l);
BigInt h_plus_digits(const ResidueCtx& ctx, std::uint64_t l);

/// Exact product of F^(lambda)(zeta) over lambda in Y_L \ {lambda_0} and
/// zeta^m = alpha_lambda, evaluated in Z[zeta_l].
struct MinusProduct {
  BigInt value;
  double advisory_relative_error = 0;
};
MinusProduct minus_product(const ResidueCtx& ctx, const DigitPolynomials& dp, const SubfieldDescriptor& sd);

/// h_L^- for the subfield of degree l. Requires e >= d and n > 1.
BigInt h_minus_digits(const ResidueCtx& ctx, const DigitPolynomials& dp, std::uint64_t l);
BigInt h_minus_digits(const ResidueCtx& ctx, std::uint64_t l);

/// Class number of K(sqrt((-1)^d P)) from the digits of 1/P in base G.
/// Requires q odd, deg G >= deg P and G a primitive root modulo P.
BigInt theorem12_quadratic(const Poly& p, const Poly& g);

struct CharSumClassNumbers {
  BigInt h_plus;
  BigInt h_minus;
  BigInt h;
  double advisory_relative_error = 0;
};

/// Class numbers from products of character sums over monic I with deg I < d.
CharSumClassNumbers h_charsum(const ResidueCtx& ctx, std::uint64_t l);

/// L(1) for y^2 = (-1)^d P(t); q odd, P monic irreducible, 2 <= d <= 5.
BigInt pointcount_oracle(const Poly& p);

/// Affine plus infinite points of y^2 = (-1)^d P(t) over F_{q^i}.
std::uint64_t count_points(const Poly& p, unsigned i);

/// The canonical lift G = g0 + P of the least primitive residue g0.
Poly canonical_primitive_lift(const Poly& p);

// --- reports ---------------------------------------------------------------

/// One class number with the values each route produced.
struct ClassNumberValue {
  /// Keyed by method: "digits", "charsum", "pointcount".
  std::map<std::string, BigInt> by_method;

  /// The digit-route value when present, otherwise the first entry.
  const BigInt& value() const;
  bool agree() const;
  std::vector<std::string> methods() const;

  friend bool operator==(const ClassNumberValue&, const ClassNumberValue&) = default;
};

struct ClassNumberReport {
  std::uint64_t q = 0;
  std::string p;
  std::string g;
  int d = 0;
  int e = 0;
  std::uint64_t r = 0;
  std::uint64_t l = 0;
  std::uint64_t m = 0;
  std::uint64_t n = 0;
  std::optional<ClassNumberValue> h_plus;
  std::optional<ClassNumberValue> h_minus;
  std::optional<ClassNumberValue> h;

  bool agree() const;
  friend bool operator==(const ClassNumberReport&, const ClassNumberReport&) = default;
};

enum class ReportPart { All, Plus, Minus };

struct ReportOptions {
  ReportPart part = ReportPart::All;
  bool verify_charsum = false;
  bool verify_pointcount = false;
};

/// Digit-route class numbers for the subfield of degree l, with the optional
/// oracles attached. Throws HypothesisError when e < d.
ClassNumberReport class_number_report(const ResidueCtx& ctx, std::uint64_t l, const ReportOptions& opts = {});

}  // namespace fqd
