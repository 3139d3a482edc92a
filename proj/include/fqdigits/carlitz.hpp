#pragma once

// The Carlitz action I*x as an F_q-linear polynomial rho_I(x) over A.

#include <string>
#include <vector>

#include "fqdigits/polyring.hpp"

namespace fqd {

/// sum_i c_i x^{q^i}, coefficients in A; trailing zero coefficients trimmed.
class AdditivePoly {
 public:
  explicit AdditivePoly(FieldRef spec) : spec_(std::move(spec)) {}
  AdditivePoly(FieldRef spec, std::vector<Poly> coeffs);

  const FieldRef& spec() const noexcept { return spec_; }
  const std::vector<Poly>& coeffs() const noexcept { return c_; }
  bool is_zero() const noexcept { return c_.empty(); }
  /// Largest i with c_i != 0, or -1 for zero.
  int q_degree() const noexcept { return static_cast<int>(c_.size()) - 1; }

  AdditivePoly& operator+=(const AdditivePoly& o);
  friend AdditivePoly operator+(AdditivePoly a, const AdditivePoly& b) { return a += b; }
  friend bool operator==(const AdditivePoly&, const AdditivePoly&) = default;

 private:
  void trim();

  FieldRef spec_;
  std::vector<Poly> c_;
};

/// f(T^{q^k}).
Poly frobenius_twist(const Poly& f, unsigned k);

/// a(b(x)).
AdditivePoly compose(const AdditivePoly& a, const AdditivePoly& b);

/// rho_I, with rho_T(x) = T x + x^q.
AdditivePoly carlitz_poly(const Poly& i);

/// "T^2*x+(T^2+T)*x^2+x^4"; "0" for zero.
std::string to_string(const AdditivePoly& f);

}  // namespace fqd
