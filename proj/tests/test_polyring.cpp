#include <doctest.h>

#include "fqdigits/error.hpp"
#include "fqdigits/polyring.hpp"
#include "support.hpp"

using namespace fqd;

namespace {

Poly P(const FieldRef& F, const std::string& s) { return parse_poly(F, s); }

}  // namespace

TEST_CASE("division with remainder") {
  const FieldRef F3 = FieldSpec::prime(3), F2 = FieldSpec::prime(2);
  auto [q1, r1] = divmod(P(F3, "T^2+1"), P(F3, "T"));
  CHECK(q1 == P(F3, "T"));
  CHECK(r1 == P(F3, "1"));
  auto [q2, r2] = divmod(P(F3, "T^2+T+2"), P(F3, "T^2+1"));
  CHECK(q2 == P(F3, "1"));
  CHECK(r2 == P(F3, "T+1"));
  CHECK(P(F2, "T+1") * P(F2, "T+1") == P(F2, "T^2+1"));
  CHECK_THROWS_AS(divmod(P(F3, "T"), Poly::zero(F3)), DomainError);
}

TEST_CASE("degree and leading coefficient") {
  const FieldRef F3 = FieldSpec::prime(3), F7 = FieldSpec::prime(7);
  CHECK(Poly::zero(F3).degree() == kNegInf);
  CHECK(Poly::zero(F3).leading_coeff().is_zero());
  CHECK(P(F3, "2*T+2").degree() == 1);
  CHECK(P(F3, "2*T+2").leading_coeff().value() == 2);
  CHECK(P(F7, "5").degree() == 0);
  CHECK(P(F7, "5").leading_coeff().value() == 5);
}

TEST_CASE("valuation at infinity") {
  const FieldRef F3 = FieldSpec::prime(3);
  CHECK(valuation_inf(P(F3, "1"), P(F3, "T^2+1")) == 2);
  CHECK(valuation_inf(P(F3, "T^2"), P(F3, "T^2")) == 0);
  CHECK(valuation_inf(P(F3, "T^3+T"), P(F3, "T")) == -2);
  CHECK_THROWS_AS(valuation_inf(Poly::zero(F3), P(F3, "T")), DomainError);
}

TEST_CASE("irreducibility and the Gauss count") {
  const FieldRef F3 = FieldSpec::prime(3), F2 = FieldSpec::prime(2);
  CHECK(is_irreducible(P(F3, "T^2+1")));
  CHECK(is_irreducible(P(F2, "T^3+T+1")));
  CHECK_FALSE(is_irreducible(P(F3, "T^2+2")));
  CHECK_THROWS_AS(is_irreducible(P(F3, "2")), DomainError);

  // Exhaustive agreement with trial division, q^d <= 3^6, and the Gauss count.
  const std::pair<std::uint64_t, int> ranges[] = {{2, 9}, {3, 6}, {4, 4}, {5, 4}, {7, 3}, {8, 3}, {9, 3}};
  for (auto [q, dmax] : ranges) {
    const FieldRef F = FieldSpec::of_order(q);
    for (int d = 1; d <= dmax; ++d) {
      std::uint64_t count = 0;
      bool agree = true;
      for (const Poly& f : monic_polys(F, d)) {
        const bool irr = is_irreducible(f);
        count += irr;
        // Scaling by a unit does not change irreducibility.
        agree = agree && is_irreducible(f * FieldElement(F, F->generator())) == irr;
      }
      CAPTURE(q);
      CAPTURE(d);
      CHECK(agree);
      CHECK(count == testing::gauss_count(q, d));
    }
  }
}

TEST_CASE("trial-division oracle on every polynomial with q^d <= 729") {
  for (auto [q, dmax] : {std::pair<std::uint64_t, int>{2, 9}, {3, 6}, {4, 4}, {5, 4}, {7, 3}, {9, 3}}) {
    const FieldRef F = FieldSpec::of_order(q);
    for (int d = 1; d <= dmax; ++d)
      for (const Poly& f : monic_polys(F, d)) CHECK(is_irreducible(f) == testing::brute_irreducible(f));
  }
}

TEST_CASE("monic enumeration") {
  const FieldRef F3 = FieldSpec::prime(3), F2 = FieldSpec::prime(2);
  std::vector<std::string> s0, s1;
  for (const Poly& f : monic_polys(F3, 0)) s0.push_back(to_string(f));
  for (const Poly& f : monic_polys(F3, 1)) s1.push_back(to_string(f));
  CHECK(s0 == std::vector<std::string>{"1"});
  CHECK(s1 == std::vector<std::string>{"T", "T+1", "T+2"});
  std::size_t n = 0;
  for (const Poly& f : monic_polys_below(F2, 3)) {
    CHECK(f.is_monic());
    ++n;
  }
  CHECK(n == 7);
  CHECK(monic_polys_below(F2, 3).size() == 7);
}

TEST_CASE("modular powers and gcd") {
  const FieldRef F3 = FieldSpec::prime(3), F2 = FieldSpec::prime(2);
  CHECK(mod_pow(P(F3, "T^2+T+2"), 0, P(F3, "T^2+1")).is_one());
  CHECK(mod_pow(P(F3, "T^2+T+2"), 1, P(F3, "T^2+1")) == P(F3, "T+1"));
  CHECK(mod_pow(P(F2, "T^3"), 1, P(F2, "T^3+T+1")) == P(F2, "T+1"));
  CHECK_THROWS_AS(mod_pow(P(F3, "T"), 2, Poly::zero(F3)), DomainError);

  CHECK(gcd(P(F3, "2*T+1"), Poly::zero(F3)) == P(F3, "T+2"));
  CHECK(gcd(P(F3, "T^2+1"), P(F3, "T^2+T+2")).is_one());
  CHECK(gcd(P(F2, "T^2+T"), P(F2, "T")) == P(F2, "T"));
  CHECK_THROWS_AS(gcd(Poly::zero(F3), Poly::zero(F3)), DomainError);
}

TEST_CASE("random ring properties") {
  testing::Rng rng(testing::kSeed);
  for (int c = 0; c < 300; ++c) {
    const FieldRef F = FieldSpec::of_order(std::vector<std::uint64_t>{2, 3, 4, 5, 7, 9}[c % 6]);
    const Poly f = testing::random_poly(rng, F, static_cast<int>(rng() % 7), false);
    const Poly g = testing::random_poly(rng, F, static_cast<int>(rng() % 4), false);
    const auto [q, r] = divmod(f, g);
    CHECK(q * g + r == f);
    CHECK((r.is_zero() || r.degree() < g.degree()));
    CHECK((f * g).degree() == f.degree() + g.degree());
    CHECK((f * g).leading_coeff() == f.leading_coeff() * g.leading_coeff());
    const Poly h = gcd(f, g);
    CHECK(h.is_monic());
    CHECK((f % h).is_zero());
    CHECK((g % h).is_zero());
    const Poly m = P(F, "T^3+T+1");
    const std::uint64_t e = rng() % 40;
    Poly slow = Poly::one(F) % m;
    for (std::uint64_t i = 0; i < e; ++i) slow = (slow * f) % m;
    CHECK(mod_pow(f, e, m) == slow);
  }
}

TEST_CASE("residue index packing") {
  const FieldRef F4 = FieldSpec::of_order(4);
  for (std::uint64_t idx = 0; idx < 256; ++idx) CHECK(residue_index(from_residue_index(F4, idx)) == idx);
  CHECK(residue_index(P(FieldSpec::prime(3), "T^2+2")) == 2 + 9);
}

TEST_CASE("polynomial text formats") {
  const FieldRef F3 = FieldSpec::prime(3), F4 = FieldSpec::of_order(4);
  const Poly f = P(F3, "T^3+2*T+2");
  CHECK(to_string(f) == "T^3+2*T+2");
  CHECK(to_string(f, PolyFormat::List) == "2,2,0,1");
  CHECK(P(F3, "2,2,0,1") == f);
  CHECK(P(F3, "T^3+2T+2") == f);
  CHECK(P(F3, "T^3 - T + 2") == f);
  CHECK(to_string(Poly::zero(F3)) == "0");
  CHECK(P(F3, "0").is_zero());
  const Poly g = P(F4, "(1,1)*T+(0,1)");
  CHECK(P(F4, to_string(g)) == g);
  CHECK(P(F4, to_string(g, PolyFormat::List)) == g);
  CHECK_THROWS_AS(P(F3, "T^^2"), ParseError);
  CHECK_THROWS_AS(P(F3, "X+1"), ParseError);
  CHECK_THROWS_AS(P(F3, ""), ParseError);
  CHECK_THROWS_AS(P(F3, "T+"), ParseError);

  testing::Rng rng(testing::kSeed + 1);
  for (int c = 0; c < 200; ++c) {
    const FieldRef F = FieldSpec::of_order(std::vector<std::uint64_t>{2, 3, 4, 5, 9, 27}[c % 6]);
    const Poly x = testing::random_poly(rng, F, static_cast<int>(rng() % 6), false);
    CHECK(P(F, to_string(x)) == x);
    CHECK(P(F, to_string(x, PolyFormat::List)) == x);
  }
}
