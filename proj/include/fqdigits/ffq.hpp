#pragma once

// Arithmetic in F_q, q = p^a, and the character group of F_q^x.
//
// Elements are stored as a packed index v = c_0 + c_1 p + ... + c_{a-1} p^{a-1}
// where c_i are the coefficients in the polynomial basis 1, g, ..., g^{a-1}
// (g a root of the defining modulus). Index order is the lexicographic order
// with the constant coefficient varying fastest, so the prime field comes
// first. Multiplication goes through exp/log tables over the canonical
// generator, which is built once per FieldSpec.

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace fqd {

class FieldSpec;
using FieldRef = std::shared_ptr<const FieldSpec>;

/// Largest field order for which the multiplicative tables are built.
inline constexpr std::uint64_t kMaxFieldOrder = std::uint64_t{1} << 20;

class FieldSpec {
 public:
  using Value = std::uint32_t;

  /// F_p for a prime p.
  static FieldRef prime(std::uint32_t p);

  /// F_{p^a} = F_p[g]/(modulus). `modulus` lists ascending coefficients of a
  /// monic polynomial of degree a >= 2 over F_p; it must be irreducible.
  static FieldRef extension(std::uint32_t p, std::vector<std::uint32_t> modulus);

  /// F_q using the built-in modulus table for prime powers (p^a <= 64).
  static FieldRef of_order(std::uint64_t q);

  /// Built-in Conway modulus for p^a, if tabulated.
  static std::optional<std::vector<std::uint32_t>> builtin_modulus(std::uint32_t p, unsigned a);

  std::uint32_t p() const noexcept { return p_; }
  unsigned a() const noexcept { return a_; }
  std::uint32_t q() const noexcept { return q_; }
  const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }

  /// Same characteristic, degree and modulus.
  bool same_field(const FieldSpec& other) const noexcept {
    return this == &other ||
           (p_ == other.p_ && a_ == other.a_ && modulus_ == other.modulus_);
  }

  // Packed-value arithmetic; callers guarantee values lie in [0, q).
  Value add(Value x, Value y) const noexcept;
  Value neg(Value x) const noexcept;
  Value sub(Value x, Value y) const noexcept { return add(x, neg(y)); }
  Value mul(Value x, Value y) const noexcept {
    if (x == 0 || y == 0) return 0;
    std::uint32_t s = log_[x] + log_[y];
    if (s >= q_ - 1) s -= q_ - 1;
    return exp_[s];
  }
  /// Inverse of a nonzero value.
  Value inv(Value x) const noexcept { return exp_[(q_ - 1 - log_[x]) % (q_ - 1)]; }
  /// Discrete log to the canonical generator; x must be nonzero.
  std::uint32_t log(Value x) const noexcept { return log_[x]; }
  Value exp(std::uint64_t k) const noexcept { return exp_[k % (q_ - 1)]; }
  /// The canonical generator as a packed value.
  Value generator() const noexcept { return exp_.size() > 1 ? exp_[1] : 1; }

  std::vector<std::uint32_t> digits(Value x) const;
  Value from_digits(const std::vector<std::uint32_t>& c) const;

 private:
  FieldSpec(std::uint32_t p, unsigned a, std::vector<std::uint32_t> modulus);

  Value raw_mul(Value x, Value y) const;

  std::uint32_t p_;
  unsigned a_;
  std::uint32_t q_;
  std::vector<std::uint32_t> modulus_;
  std::vector<Value> exp_;
  std::vector<std::uint32_t> log_;
};

class FieldElement {
 public:
  using Value = FieldSpec::Value;

  FieldElement(FieldRef spec, Value v);
  /// Element from its coefficient list (ascending, length a).
  FieldElement(FieldRef spec, const std::vector<std::uint32_t>& coeffs);

  static FieldElement zero(FieldRef spec) { return {std::move(spec), 0u}; }
  static FieldElement one(FieldRef spec) { return {std::move(spec), 1u}; }
  /// The integer n reduced into the prime field.
  static FieldElement from_int(FieldRef spec, std::int64_t n);

  const FieldRef& spec() const noexcept { return spec_; }
  Value value() const noexcept { return v_; }
  std::vector<std::uint32_t> coeffs() const { return spec_->digits(v_); }
  bool is_zero() const noexcept { return v_ == 0; }
  bool is_one() const noexcept { return v_ == 1; }

  FieldElement operator-() const;
  FieldElement& operator+=(const FieldElement& o);
  FieldElement& operator-=(const FieldElement& o);
  FieldElement& operator*=(const FieldElement& o);

  friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
  friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
  friend FieldElement operator*(FieldElement a, const FieldElement& b) { return a *= b; }
  friend bool operator==(const FieldElement& a, const FieldElement& b) {
    return a.v_ == b.v_ && a.spec_->same_field(*b.spec_);
  }

 private:
  void check_same(const FieldElement& o) const;

  FieldRef spec_;
  Value v_;
};

/// Throws DomainError on zero.
FieldElement inverse(const FieldElement& x);

/// Square-and-multiply on a nonnegative exponent.
FieldElement pow(const FieldElement& x, std::uint64_t e);

/// Least element (in index order) of multiplicative order q-1.
FieldElement canonical_generator(const FieldRef& spec);

/// Least t >= 1 with x^t = 1. Throws DomainError on zero.
std::uint64_t mult_order(const FieldElement& x);

/// Legendre symbol over F_q: +1 square, -1 nonsquare, 0 for zero.
/// Throws DomainError when q is even.
int quadratic_character(const FieldElement& x);

/// All elements of F_q in index order.
std::vector<FieldElement> elements(const FieldRef& spec);

/// Multiplicative character lambda_s of F_q^x, lambda_s(w^t) = zeta_{q-1}^{st}
/// for the canonical generator w.
class UnitCharacter {
 public:
  UnitCharacter(FieldRef spec, std::uint64_t s);

  static UnitCharacter trivial(FieldRef spec) { return {std::move(spec), 0}; }
  /// The quadratic character; requires q odd.
  static UnitCharacter quadratic(FieldRef spec);

  const FieldRef& spec() const noexcept { return spec_; }
  std::uint64_t index() const noexcept { return s_; }
  std::uint64_t modulus() const noexcept { return spec_->q() - 1; }
  std::uint64_t order() const;
  bool is_trivial() const noexcept { return s_ == 0; }
  UnitCharacter conjugate() const;
  UnitCharacter operator*(const UnitCharacter& o) const;

  /// Exponent k of zeta_{q-1}^k, or nullopt for x = 0.
  std::optional<std::uint64_t> value(const FieldElement& x) const;

  friend bool operator==(const UnitCharacter& a, const UnitCharacter& b) {
    return a.s_ == b.s_ && a.spec_->same_field(*b.spec_);
  }

 private:
  FieldRef spec_;
  std::uint64_t s_;
};

/// Element text: plain integer when a = 1, otherwise "c0+c1*g+c2*g^2" with
/// zero terms omitted ("0" for zero).
std::string to_string(const FieldElement& x);

/// Accepts an integer, a parenthesised or bare coefficient list "(1,1)", or
/// the g-form produced by to_string. Throws ParseError.
FieldElement parse_element(const FieldRef& spec, std::string_view text);

}  // namespace fqd
