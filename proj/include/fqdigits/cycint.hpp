#pragma once

// Exact arithmetic in Z[zeta_n] = Z[x]/(Phi_n(x)). Elements are stored as
// their canonical remainder modulo Phi_n, so rational integers have a unique
// normal form (all coefficients above x^0 vanish).

#include <complex>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include <gmpxx.h>

namespace fqd {

using BigInt = mpz_class;

/// Phi_n, ascending integer coefficients. Built by dividing x^n - 1 by Phi_d
/// for every proper divisor d of n; results are memoised.
const std::vector<std::int64_t>& cyclotomic_poly(std::uint64_t n);

struct CycloModulus;

class CycloInt {
 public:
  /// Zero of Z[zeta_n].
  explicit CycloInt(std::uint64_t n);

  static CycloInt integer(std::uint64_t n, const BigInt& value);
  /// sum_i c_i zeta_n^i for an arbitrary-length coefficient list.
  static CycloInt from_coeffs(std::uint64_t n, std::vector<BigInt> c);
  /// sum_{i<n} a_i zeta_n^i where `a` has length n (a cyclic accumulator).
  static CycloInt from_cyclic(std::uint64_t n, std::span<const std::int64_t> a);

  std::uint64_t order() const noexcept { return n_; }
  /// Coefficients of 1, x, ..., x^{phi(n)-1}.
  const std::vector<BigInt>& coeffs() const noexcept { return c_; }
  bool is_zero() const;

  CycloInt operator-() const;
  CycloInt& operator+=(const CycloInt& o);
  CycloInt& operator-=(const CycloInt& o);
  CycloInt& operator*=(const CycloInt& o);

  friend CycloInt operator+(CycloInt a, const CycloInt& b) { return a += b; }
  friend CycloInt operator-(CycloInt a, const CycloInt& b) { return a -= b; }
  friend CycloInt operator*(const CycloInt& a, const CycloInt& b);
  friend bool operator==(const CycloInt& a, const CycloInt& b) {
    return a.n_ == b.n_ && a.c_ == b.c_;
  }

 private:
  CycloInt(std::shared_ptr<const CycloModulus> mod, std::vector<BigInt> c);
  void check_same(const CycloInt& o) const;

  std::uint64_t n_;
  std::shared_ptr<const CycloModulus> mod_;
  std::vector<BigInt> c_;
};

/// zeta_n^k; negative k allowed.
CycloInt root_of_unity(std::uint64_t n, std::int64_t k);

/// The same element viewed in Z[zeta_{n'}], n | n', via x -> x^{n'/n}.
CycloInt cy_lift(const CycloInt& a, std::uint64_t target_order);

/// The rational integer a, when a lies in Z.
std::optional<BigInt> as_integer(const CycloInt& a);

/// a evaluated at exp(2 pi i / n) in double precision.
std::complex<double> complex_eval(const CycloInt& a);

}  // namespace fqd
