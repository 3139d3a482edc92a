#pragma once

// The ring A = F_q[T] with dense coefficient storage.

#include <cstdint>
#include <iterator>
#include <limits>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fqdigits/ffq.hpp"

namespace fqd {

/// Degree of the zero polynomial.
inline constexpr int kNegInf = std::numeric_limits<int>::min();

class Poly {
 public:
  using Value = FieldSpec::Value;

  explicit Poly(FieldRef spec) : spec_(std::move(spec)) {}
  /// From packed coefficient values, ascending; trailing zeros are trimmed.
  Poly(FieldRef spec, std::vector<Value> coeffs);
  Poly(FieldRef spec, std::initializer_list<Value> coeffs)
      : Poly(std::move(spec), std::vector<Value>(coeffs)) {}

  static Poly zero(FieldRef spec) { return Poly(std::move(spec)); }
  static Poly constant(const FieldElement& c);
  static Poly one(FieldRef spec) { return Poly(std::move(spec), {1u}); }
  /// c * T^k.
  static Poly monomial(const FieldElement& c, unsigned k);
  /// The indeterminate T.
  static Poly T(FieldRef spec) { return Poly(std::move(spec), {0u, 1u}); }

  const FieldRef& spec() const noexcept { return spec_; }
  const std::vector<Value>& values() const noexcept { return c_; }
  bool is_zero() const noexcept { return c_.empty(); }
  bool is_one() const noexcept { return c_.size() == 1 && c_[0] == 1; }
  bool is_monic() const noexcept { return !c_.empty() && c_.back() == 1; }
  /// kNegInf for the zero polynomial.
  int degree() const noexcept { return c_.empty() ? kNegInf : static_cast<int>(c_.size()) - 1; }
  /// delta(f): zero for the zero polynomial.
  FieldElement leading_coeff() const {
    return {spec_, c_.empty() ? Value{0} : c_.back()};
  }
  FieldElement coeff(std::size_t i) const { return {spec_, i < c_.size() ? c_[i] : Value{0}}; }
  Value coeff_value(std::size_t i) const noexcept { return i < c_.size() ? c_[i] : 0; }

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly& operator*=(const FieldElement& c);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const FieldElement& c) { return a *= c; }
  friend bool operator==(const Poly& a, const Poly& b) {
    return a.c_ == b.c_ && a.spec_->same_field(*b.spec_);
  }

  /// Scaled to leading coefficient 1; zero stays zero.
  Poly monic() const;

 private:
  void trim() noexcept {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  void check_same(const Poly& o) const;

  FieldRef spec_;
  std::vector<Value> c_;
};

struct DivMod {
  Poly quotient;
  Poly remainder;
};

/// f = q*g + r with deg r < deg g. Throws DomainError when g = 0.
DivMod divmod(const Poly& f, const Poly& g);
Poly operator%(const Poly& f, const Poly& g);
Poly operator/(const Poly& f, const Poly& g);

/// v_inf(f1/f2) = deg f2 - deg f1. Throws DomainError on a zero argument.
int valuation_inf(const Poly& f1, const Poly& f2);

/// Monic gcd. Throws DomainError when both inputs are zero.
Poly gcd(const Poly& f, const Poly& g);

/// base^e mod m, by square-and-multiply. Throws DomainError when m = 0.
Poly mod_pow(const Poly& base, std::uint64_t e, const Poly& m);

/// Rabin's irreducibility test. Throws DomainError on constants.
bool is_irreducible(const Poly& f);

/// Packs a polynomial of degree < width as sum_i c_i q^i.
std::uint64_t residue_index(const Poly& f);
/// Inverse of residue_index.
Poly from_residue_index(const FieldRef& spec, std::uint64_t index);

/// Monic polynomials with degree in [min_degree, max_degree), degree ascending
/// and, within a degree, lexicographic with the constant coefficient varying
/// fastest.
class MonicPolys {
 public:
  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = Poly;
    using difference_type = std::ptrdiff_t;
    using pointer = const Poly*;
    using reference = const Poly&;

    iterator() = default;
    reference operator*() const { return current_; }
    pointer operator->() const { return &current_; }
    iterator& operator++();
    iterator operator++(int) {
      iterator tmp = *this;
      ++*this;
      return tmp;
    }
    friend bool operator==(const iterator& a, const iterator& b) {
      return a.degree_ == b.degree_ && a.rank_ == b.rank_;
    }

   private:
    friend class MonicPolys;
    iterator(const MonicPolys* range, int degree);
    void load();

    const MonicPolys* range_ = nullptr;
    int degree_ = 0;
    std::uint64_t rank_ = 0;
    std::uint64_t count_ = 0;
    Poly current_{nullptr};
  };

  MonicPolys(FieldRef spec, int min_degree, int max_degree);

  iterator begin() const { return iterator(this, min_degree_); }
  iterator end() const { return iterator(this, max_degree_); }
  /// Number of polynomials in the range.
  std::uint64_t size() const;

 private:
  FieldRef spec_;
  int min_degree_;
  int max_degree_;
};

/// The q^s monic polynomials of degree s.
inline MonicPolys monic_polys(FieldRef spec, int s) { return {std::move(spec), s, s + 1}; }
/// All monic polynomials of degree < d.
inline MonicPolys monic_polys_below(FieldRef spec, int d) { return {std::move(spec), 0, d}; }

enum class PolyFormat { Human, List };

/// Human form "T^3+2*T+2" (coefficients over extension fields parenthesised,
/// e.g. "(1+1*g)*T"), or the ascending list form "2,2,0,1".
std::string to_string(const Poly& f, PolyFormat format = PolyFormat::Human);

/// Parses either form. Human terms: c, T, c*T, c*T^k, T^k (the '*' is
/// optional), joined by '+' or '-'. Over extension fields a coefficient is
/// parenthesised, "(1,1)" or "(1+1*g)". Throws ParseError.
Poly parse_poly(const FieldRef& spec, std::string_view text);

}  // namespace fqd
