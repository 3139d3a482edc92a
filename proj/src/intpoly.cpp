#include "fqdigits/intpoly.hpp"

#include <gmpxx.h>

#include "fqdigits/error.hpp"

namespace fqd {

namespace {

using RatPoly = std::vector<mpq_class>;

void trim_rat(RatPoly& f) {
  while (!f.empty() && sgn(f.back()) == 0) f.pop_back();
}

// Remainder of a by b over Q; b nonzero.
RatPoly rat_rem(RatPoly a, const RatPoly& b) {
  const std::size_t db = b.size() - 1;
  while (a.size() > db && !a.empty()) {
    const mpq_class c = a.back() / b.back();
    const std::size_t shift = a.size() - 1 - db;
    for (std::size_t j = 0; j <= db; ++j) a[shift + j] -= c * b[j];
    a.pop_back();
    trim_rat(a);
  }
  trim_rat(a);
  return a;
}

}  // namespace

void trim(IntPoly& f) {
  while (!f.empty() && sgn(f.back()) == 0) f.pop_back();
}

int degree(const IntPoly& f) {
  for (std::size_t i = f.size(); i-- > 0;)
    if (sgn(f[i]) != 0) return static_cast<int>(i);
  return -1;
}

BigInt resultant(IntPoly a_in, IntPoly b_in) {
  trim(a_in);
  trim(b_in);
  if (a_in.empty() || b_in.empty()) return 0;
  RatPoly a(a_in.begin(), a_in.end()), b(b_in.begin(), b_in.end());
  mpq_class acc = 1;
  // Res(a, b) = (-1)^{deg a deg b} lc(b)^{deg a - deg r} Res(b, r), r = a mod b.
  while (true) {
    const std::size_t da = a.size() - 1, db = b.size() - 1;
    if (db == 0) {
      mpq_class p = 1;
      for (std::size_t i = 0; i < da; ++i) p *= b[0];
      acc *= p;
      break;
    }
    RatPoly r = rat_rem(a, b);
    if (r.empty()) return 0;
    const std::size_t dr = r.size() - 1;
    if ((da * db) % 2 == 1) acc = -acc;
    for (std::size_t i = 0; i < da - dr; ++i) acc *= b.back();
    a = std::move(b);
    b = std::move(r);
  }
  if (acc.get_den() != 1) throw InternalError("resultant of integer polynomials is not an integer");
  return acc.get_num();
}

CycloInt evaluate_at_root(const IntPoly& f, std::uint64_t n, std::uint64_t k) {
  // Accumulate exponents modulo n, then reduce once.
  std::vector<BigInt> cyc(n);
  for (std::size_t i = 0; i < f.size(); ++i) cyc[(i % n) * (k % n) % n] += f[i];
  return CycloInt::from_coeffs(n, std::move(cyc));
}

}  // namespace fqd
