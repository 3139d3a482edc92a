#include "verify.hpp"

#include <functional>
#include <sstream>

#include "fqdigits/digits.hpp"
#include "fqdigits/error.hpp"
#include "fqdigits/intmath.hpp"

namespace fqd::cli {

namespace {

std::string join(const std::vector<std::string>& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + v[i];
  return out + "]";
}

std::string polys_text(const std::vector<Poly>& v) {
  std::vector<std::string> s;
  for (const Poly& f : v) s.push_back(to_string(f));
  return join(s);
}

std::string ints_text(const IntPoly& v) {
  std::vector<std::string> s;
  for (const BigInt& x : v) s.push_back(x.get_str());
  return join(s);
}

// Signs of F^(lambda) coefficients for a real-valued lambda.
std::string signs_text(const std::vector<std::optional<std::uint64_t>>& v, std::uint64_t modulus) {
  std::vector<std::string> s;
  for (const auto& c : v) {
    if (!c) s.emplace_back("0");
    else if (*c == 0) s.emplace_back("1");
    else if (2 * *c == modulus) s.emplace_back("-1");
    else s.emplace_back("z^" + std::to_string(*c));
  }
  return join(s);
}

class Recorder {
 public:
  explicit Recorder(VerifyReport& rep) : rep_(rep) {}

  void group(std::string name) {
    group_ = std::move(name);
    rep_.groups.push_back(group_);
  }

  // Compares the rendered values; exceptions become failing checks.
  void expect(const std::string& name, const std::string& expected, const std::function<std::string()>& actual) {
    Check c{group_, name, expected, {}, false};
    try {
      c.actual = actual();
      c.pass = c.actual == expected;
    } catch (const std::exception& e) {
      c.actual = std::string("error: ") + e.what();
    }
    rep_.checks.push_back(std::move(c));
  }

  void expect_true(const std::string& name, const std::function<bool()>& pred) {
    expect(name, "true", [&] { return pred() ? std::string("true") : std::string("false"); });
  }

 private:
  VerifyReport& rep_;
  std::string group_;
};

struct Example {
  FieldRef F;
  Poly p;
  Poly g;
};

Example make(std::uint64_t q, const char* p, const char* g) {
  FieldRef F = FieldSpec::of_order(q);
  return {F, parse_poly(F, p), parse_poly(F, g)};
}

std::vector<Poly> expansion_digits(const Example& ex, std::int64_t n) {
  return digit_expand(Poly::one(ex.F), ex.p, ex.g, n).digits;
}

// Identity checks over every character of the context.
bool all_identities(const ResidueCtx& ctx, const DigitPolynomials& dp) {
  const std::uint64_t n = ctx.group_order();
  for (std::uint64_t j = 0; j < n; ++j) {
    const DirichletChar chi = ctx.character(j);
    if (!prop32_identity(ctx, dp, chi).holds()) return false;
    if (ctx.e() >= ctx.d() && !cor33_identity(ctx, dp, chi).holds()) return false;
    if (j % (ctx.q() - 1) != 0) continue;
    if (!prop31_identity(ctx, dp, chi).holds()) return false;
    if (ctx.e() >= ctx.d() && !chi.is_trivial() && !cor32_identity(ctx, dp, chi).holds()) return false;
  }
  return true;
}

BigInt fplus_sum(const DigitPolynomials& dp) {
  BigInt s = 0;
  for (const BigInt& c : dp.fplus()) s += c;
  return s;
}

}  // namespace

bool VerifyReport::passed() const { return first_failure() == nullptr; }

const Check* VerifyReport::first_failure() const {
  for (const Check& c : checks)
    if (!c.pass) return &c;
  return nullptr;
}

VerifyReport verify_paper(DigitConventions conv) {
  VerifyReport rep;
  Recorder r(rep);

  // q = 3, P = T^2+1, G = T^2+T+2: quadratic field and K_P^+.
  {
    const Example ex = make(3, "T^2+1", "T^2+T+2");
    r.group("q=3 P=T^2+1 G=T^2+T+2");
    const std::string digits = "[1, T+2, 2*T+2, 2*T]";
    r.expect("digits by long division", digits, [&] { return polys_text(expansion_digits(ex, 4)); });
    r.expect("digits by closed form", digits, [&] { return polys_text(closed_form_digits(ex.p, ex.g, 4)); });
    r.expect("period", "8", [&] { return std::to_string(digit_period(ex.p, ex.g)); });
    r.expect("F+ coefficients", "[0, 1, 1, 1]", [&] {
      ResidueCtx ctx(ex.p, ex.g);
      return ints_text(build_digit_polys(ctx, conv).fplus());
    });
    r.expect("h of K(sqrt P), quadratic formula", "1", [&] { return theorem12_quadratic(ex.p, ex.g).get_str(); });
    r.expect("h of K(sqrt P), point count", "1", [&] { return pointcount_oracle(ex.p).get_str(); });
    r.expect("h+ of K_P", "1", [&] {
      ResidueCtx ctx(ex.p, ex.g);
      return h_plus_digits(ctx, build_digit_polys(ctx, conv), 8).get_str();
    });
    // With a degree-one base some digits vanish, so F+ depends on deg'(0).
    r.expect("F+ coefficients, base T+1", "[0, 0, 0, 0]", [&] {
      ResidueCtx ctx(ex.p, parse_poly(ex.F, "T+1"));
      return ints_text(build_digit_polys(ctx, conv).fplus());
    });
  }

  // q = 2, P = T^3+T+1, G = T^3: K_P^+.
  {
    const Example ex = make(2, "T^3+T+1", "T^3");
    r.group("q=2 P=T^3+T+1 G=T^3");
    const std::string digits = "[1, T+1, T^2, T^2+1, T^2+T, T, T^2+T+1]";
    r.expect("digits by long division", digits, [&] { return polys_text(expansion_digits(ex, 7)); });
    r.expect("digits by closed form", digits, [&] { return polys_text(closed_form_digits(ex.p, ex.g, 7)); });
    r.expect("period", "7", [&] { return std::to_string(digit_period(ex.p, ex.g)); });
    r.expect("F+ coefficients", "[0, 1, 2, 2, 2, 1, 2]", [&] {
      ResidueCtx ctx(ex.p, ex.g);
      return ints_text(build_digit_polys(ctx, conv).fplus());
    });
    r.expect("h+ of K_P, digits", "71", [&] {
      ResidueCtx ctx(ex.p, ex.g);
      return h_plus_digits(ctx, build_digit_polys(ctx, conv), 7).get_str();
    });
    r.expect_true("h+ resultant equals cyclotomic product", [&] {
      ResidueCtx ctx(ex.p, ex.g);
      const PlusProduct pp = plus_product(build_digit_polys(ctx, conv), 7);
      return pp.via_resultant == pp.via_cyclotomic;
    });
    r.expect("h+ of K_P, character sums", "71", [&] {
      ResidueCtx ctx(ex.p, ex.g);
      return h_charsum(ctx, 7).h_plus.get_str();
    });
  }

  // q = 3, P = T^3+2T+2, G = T^3+T+2: K(sqrt(-P)) and K_P^-.
  {
    const Example ex = make(3, "T^3+2*T+2", "T^3+T+2");
    r.group("q=3 P=T^3+2T+2 G=T^3+T+2");
    const std::string digits =
        "[1, 2*T, T^2+2, 2*T+2, T^2+T+2, 2*T^2+2*T, T^2+2*T, T^2+T+1, 2*T^2, 2*T+1, T^2+2*T+2, T^2+2*T+1, T^2+1]";
    r.expect("digits by long division", digits, [&] { return polys_text(expansion_digits(ex, 13)); });
    r.expect("digits by closed form", digits, [&] { return polys_text(closed_form_digits(ex.p, ex.g, 13)); });
    r.expect("H_13 closed form", "T^2+1", [&] { return to_string(digit_closed_form(ex.p, ex.g, 13)); });
    r.expect("period", "26", [&] { return std::to_string(digit_period(ex.p, ex.g)); });
    r.expect("eta_G", "1", [&] { return std::to_string(quadratic_character(ex.g.leading_coeff())); });
    r.expect("F(lambda) signs, quadratic lambda", "[1, -1, 1, -1, 1, -1, 1, 1, -1, -1, 1, 1, 1]", [&] {
      ResidueCtx ctx(ex.p, ex.g);
      const UnitCharacter lambda = UnitCharacter::quadratic(ex.F);
      return signs_text(build_digit_polys(ctx, conv).flambda(lambda.index()), lambda.modulus());
    });
    r.expect("h of K(sqrt -P), quadratic formula", "7", [&] { return theorem12_quadratic(ex.p, ex.g).get_str(); });
    r.expect("h of K(sqrt -P), minus product", "7", [&] {
      ResidueCtx ctx(ex.p, ex.g);
      return h_minus_digits(ctx, build_digit_polys(ctx, conv), 2).get_str();
    });
    r.expect("h of K(sqrt -P), point count", "7", [&] { return pointcount_oracle(ex.p).get_str(); });
    r.expect("h- of K_P, digits", "774144", [&] {
      ResidueCtx ctx(ex.p, ex.g);
      return h_minus_digits(ctx, build_digit_polys(ctx, conv), 26).get_str();
    });
    r.expect("h- of K_P, character sums", "774144", [&] {
      ResidueCtx ctx(ex.p, ex.g);
      return h_charsum(ctx, 26).h_minus.get_str();
    });
  }

  // Structural identities on the three contexts above.
  {
    r.group("structural identities");
    const Example exs[] = {make(3, "T^2+1", "T^2+T+2"), make(2, "T^3+T+1", "T^3"),
                           make(3, "T^3+2*T+2", "T^3+T+2"), make(3, "T^2+1", "T+1")};
    for (const Example& ex : exs) {
      const std::string tag = "q=" + std::to_string(ex.F->q()) + " P=" + to_string(ex.p) + " G=" + to_string(ex.g);
      r.expect_true("character identities, " + tag, [&] {
        ResidueCtx ctx(ex.p, ex.g);
        return all_identities(ctx, build_digit_polys(ctx, conv));
      });
      r.expect("degree sum, " + tag, degree_sum_formula(ex.F->q(), ex.p.degree(), ex.g.degree()).get_str(), [&] {
        ResidueCtx ctx(ex.p, ex.g);
        return fplus_sum(build_digit_polys(ctx, conv)).get_str();
      });
    }
  }

  // Vanishing digit sums over one period.
  {
    r.group("digit sums");
    const Example exs[] = {make(3, "T^2+1", "T^2+T+2"), make(2, "T^3+T+1", "T^3"),
                           make(3, "T^3+2*T+2", "T^3+T+2")};
    for (const Example& ex : exs) {
      const std::string tag = "q=" + std::to_string(ex.F->q()) + " P=" + to_string(ex.p) + " G=" + to_string(ex.g);
      r.expect("sum of H_k, " + tag, "0",
               [&] { return to_string(twisted_digit_sum(ex.p, ex.g, FieldElement::one(ex.F))); });
    }
    const Example ex = make(3, "T^3+2*T+2", "T^3+T+2");
    r.expect("S_{P,G} = sum (-1)^k H_k, q=3 P=T^3+2T+2", "0",
             [&] { return to_string(twisted_digit_sum(ex.p, ex.g, FieldElement::from_int(ex.F, -1))); });
  }
  return rep;
}

std::string render_text(const VerifyReport& rep) {
  std::ostringstream out;
  for (const Check& c : rep.checks) {
    out << (c.pass ? "PASS " : "FAIL ") << c.group << ": " << c.name << '\n';
    if (!c.pass) out << "  expected: " << c.expected << "\n  actual:   " << c.actual << '\n';
  }
  if (const Check* f = rep.first_failure())
    out << "FAIL, first failure in " << f->group << ": " << f->name << '\n';
  else
    out << "PASS, " << rep.groups.size() << " example groups, " << rep.checks.size() << " checks\n";
  return out.str();
}

}  // namespace fqd::cli
