#pragma once

// Independent oracles and randomized property suites shared by the unit tests
// and the acceptance runner. Oracles avoid the library routines they check:
// brute force over residues, trial division, Mobius products, direct counts.

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "fqdigits/chars.hpp"
#include "fqdigits/classnum.hpp"
#include "fqdigits/cycint.hpp"
#include "fqdigits/polyring.hpp"

namespace fqd::testing {

using Rng = std::mt19937_64;
inline constexpr std::uint64_t kSeed = 0x5eed2026;

// --- generators ------------------------------------------------------------

/// Uniform polynomial of exactly this degree; monic when asked.
Poly random_poly(Rng& rng, const FieldRef& F, int degree, bool monic);
Poly random_irreducible(Rng& rng, const FieldRef& F, int degree);
/// Random G of degree e that is a primitive root modulo the irreducible P.
std::optional<Poly> random_primitive_base(Rng& rng, const Poly& p, int e, int tries = 400);

struct RandomCtx {
  Poly p;
  Poly g;
};
/// Random (q, P, G) with q in {2,3,4,5,7}, q^d - 1 <= 124. e_at_least_d
/// forces deg G >= deg P; otherwise deg G is drawn from [1, d+1].
RandomCtx random_ctx(Rng& rng, bool e_at_least_d);

// --- oracles ---------------------------------------------------------------

/// Trial division by every monic polynomial of degree <= deg f / 2.
bool brute_irreducible(const Poly& f);
/// (1/d) sum_{e|d} mu(d/e) q^e.
std::uint64_t gauss_count(std::uint64_t q, int d);
/// Least k >= 1 with g^k = 1 mod m, by repeated multiplication.
std::uint64_t brute_order(const Poly& g, const Poly& m);
/// prod_{e|n} (x^e - 1)^{mu(n/e)} by integer polynomial multiplication and division.
std::vector<std::int64_t> phi_mobius(std::uint64_t n);
/// Jacobian order of y^2 = (-1)^d P(t) for q prime, 2 <= d <= 5, from direct
/// point counts over F_q and F_{q^2}: N_1 for genus 1, (N_1^2 + N_2)/2 - q for genus 2.
BigInt jacobian_order_bruteforce(const Poly& p);

// --- property suites -------------------------------------------------------

struct SuiteResult {
  std::string name;
  int cases = 0;
  int failures = 0;
  std::string first_failure;

  bool ok() const { return failures == 0 && cases > 0; }
  void fail(const std::string& what) {
    if (failures++ == 0) first_failure = what;
  }
};

SuiteResult suite_closed_form_vs_division(Rng& rng, int cases);
SuiteResult suite_period(Rng& rng, int cases);
SuiteResult suite_rudnick_and_twisted(Rng& rng, int cases);
SuiteResult suite_degree_sum(Rng& rng, int cases);
SuiteResult suite_character_identities(Rng& rng, int cases);
SuiteResult suite_lemma_multiset(Rng& rng, int cases);
SuiteResult suite_cycint_identities(Rng& rng, int cases);
SuiteResult suite_resultant_vs_product(Rng& rng, int cases);

std::string describe(const Poly& p, const Poly& g);

}  // namespace fqd::testing
