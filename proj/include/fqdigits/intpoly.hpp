#pragma once

// Dense integer polynomials (ascending coefficients) and their resultant.

#include <vector>

#include "fqdigits/cycint.hpp"

namespace fqd {

using IntPoly = std::vector<BigInt>;

/// Drops trailing zero coefficients.
void trim(IntPoly& f);

int degree(const IntPoly& f);

/// Res(a, b) = lc(a)^{deg b} prod_{a(x)=0} b(x), computed exactly by the
/// Euclidean recurrence over Q. Zero when either input is zero.
BigInt resultant(IntPoly a, IntPoly b);

/// Evaluates f at zeta_n^k inside Z[zeta_n].
CycloInt evaluate_at_root(const IntPoly& f, std::uint64_t n, std::uint64_t k);

}  // namespace fqd
