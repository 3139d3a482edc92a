#include "fqdigits/polyring.hpp"

#include <cctype>
#include <charconv>

#include "fqdigits/error.hpp"
#include "fqdigits/intmath.hpp"

namespace fqd {

Poly::Poly(FieldRef spec, std::vector<Value> coeffs) : spec_(std::move(spec)), c_(std::move(coeffs)) {
  for (auto v : c_)
    if (v >= spec_->q()) throw DomainError("polynomial coefficient out of range");
  trim();
}

Poly Poly::constant(const FieldElement& c) { return Poly(c.spec(), {c.value()}); }

Poly Poly::monomial(const FieldElement& c, unsigned k) {
  if (c.is_zero()) return Poly(c.spec());
  std::vector<Value> v(k + 1, 0);
  v[k] = c.value();
  return Poly(c.spec(), std::move(v));
}

void Poly::check_same(const Poly& o) const {
  if (!spec_->same_field(*o.spec_)) throw DomainError("polynomials over different fields");
}

Poly Poly::operator-() const {
  Poly r(spec_);
  r.c_.reserve(c_.size());
  for (auto v : c_) r.c_.push_back(spec_->neg(v));
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  check_same(o);
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = spec_->add(c_[i], o.c_[i]);
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  check_same(o);
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = spec_->sub(c_[i], o.c_[i]);
  trim();
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  a.check_same(b);
  if (a.is_zero() || b.is_zero()) return Poly(a.spec_);
  const FieldSpec& F = *a.spec_;
  std::vector<Poly::Value> out(a.c_.size() + b.c_.size() - 1, 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j)
      out[i + j] = F.add(out[i + j], F.mul(a.c_[i], b.c_[j]));
  }
  return Poly(a.spec_, std::move(out));
}

Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

Poly& Poly::operator*=(const FieldElement& c) {
  if (!spec_->same_field(*c.spec())) throw DomainError("scalar from a different field");
  for (auto& v : c_) v = spec_->mul(v, c.value());
  trim();
  return *this;
}

Poly Poly::monic() const {
  if (is_zero() || is_monic()) return *this;
  return *this * inverse(leading_coeff());
}

DivMod divmod(const Poly& f, const Poly& g) {
  if (g.is_zero()) throw DomainError("division by the zero polynomial");
  if (!f.spec()->same_field(*g.spec())) throw DomainError("polynomials over different fields");
  const FieldSpec& F = *f.spec();
  if (f.degree() < g.degree()) return {Poly::zero(f.spec()), f};
  std::vector<Poly::Value> r = f.values();
  const auto& gv = g.values();
  const std::size_t dg = gv.size() - 1;
  const Poly::Value inv_lead = F.inv(gv.back());
  std::vector<Poly::Value> quot(r.size() - dg, 0);
  for (std::size_t k = r.size(); k-- > dg;) {
    const Poly::Value c = F.mul(r[k], inv_lead);
    quot[k - dg] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= dg; ++j) r[k - dg + j] = F.sub(r[k - dg + j], F.mul(c, gv[j]));
  }
  r.resize(dg);
  return {Poly(f.spec(), std::move(quot)), Poly(f.spec(), std::move(r))};
}

Poly operator%(const Poly& f, const Poly& g) { return divmod(f, g).remainder; }
Poly operator/(const Poly& f, const Poly& g) { return divmod(f, g).quotient; }

int valuation_inf(const Poly& f1, const Poly& f2) {
  if (f1.is_zero() || f2.is_zero()) throw DomainError("v_inf is undefined for zero");
  return f2.degree() - f1.degree();
}

Poly gcd(const Poly& f, const Poly& g) {
  if (f.is_zero() && g.is_zero()) throw DomainError("gcd(0, 0) is undefined");
  Poly a = f, b = g;
  while (!b.is_zero()) {
    Poly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

Poly mod_pow(const Poly& base, std::uint64_t e, const Poly& m) {
  if (m.is_zero()) throw DomainError("mod_pow with zero modulus");
  Poly result = Poly::one(m.spec()) % m;
  Poly b = base % m;
  while (e) {
    if (e & 1) result = (result * b) % m;
    e >>= 1;
    if (e) b = (b * b) % m;
  }
  return result;
}

bool is_irreducible(const Poly& f) {
  if (f.degree() < 1) throw DomainError("irreducibility test on a constant");
  const Poly m = f.monic();
  const int d = m.degree();
  const std::uint64_t q = m.spec()->q();
  const Poly t = Poly::T(m.spec());
  // frob[i] = T^{q^i} mod m.
  std::vector<Poly> frob{t % m};
  for (int i = 1; i <= d; ++i) frob.push_back(mod_pow(frob.back(), q, m));
  if (frob[d] != t % m) return false;
  for (auto l : prime_divisors(static_cast<std::uint64_t>(d))) {
    const Poly diff = frob[d / l] - t;
    if (!gcd(diff, m).is_one()) return false;
  }
  return true;
}

std::uint64_t residue_index(const Poly& f) {
  const std::uint64_t q = f.spec()->q();
  std::uint64_t idx = 0;
  const auto& v = f.values();
  for (std::size_t i = v.size(); i-- > 0;) idx = idx * q + v[i];
  return idx;
}

Poly from_residue_index(const FieldRef& spec, std::uint64_t index) {
  const std::uint64_t q = spec->q();
  std::vector<Poly::Value> v;
  while (index) {
    v.push_back(static_cast<Poly::Value>(index % q));
    index /= q;
  }
  return Poly(spec, std::move(v));
}

// --- MonicPolys -----------------------------------------------------------

MonicPolys::MonicPolys(FieldRef spec, int min_degree, int max_degree)
    : spec_(std::move(spec)), min_degree_(min_degree), max_degree_(max_degree) {
  if (min_degree_ < 0) throw DomainError("monic enumeration needs a nonnegative degree");
  if (max_degree_ < min_degree_) max_degree_ = min_degree_;
}

std::uint64_t MonicPolys::size() const {
  std::uint64_t n = 0;
  for (int s = min_degree_; s < max_degree_; ++s) {
    auto c = checked_pow(spec_->q(), static_cast<unsigned>(s));
    if (!c) throw ResourceError("monic enumeration too large");
    n += *c;
  }
  return n;
}

MonicPolys::iterator::iterator(const MonicPolys* range, int degree)
    : range_(range), degree_(degree), current_(range->spec_) {
  load();
}

void MonicPolys::iterator::load() {
  if (degree_ >= range_->max_degree_) {
    degree_ = range_->max_degree_;
    rank_ = 0;
    return;
  }
  auto c = checked_pow(range_->spec_->q(), static_cast<unsigned>(degree_));
  if (!c) throw ResourceError("monic enumeration too large");
  count_ = *c;
  const std::uint64_t q = range_->spec_->q();
  std::vector<Poly::Value> v(static_cast<std::size_t>(degree_) + 1, 0);
  std::uint64_t r = rank_;
  for (int i = 0; i < degree_; ++i) {
    v[i] = static_cast<Poly::Value>(r % q);
    r /= q;
  }
  v[degree_] = 1;
  current_ = Poly(range_->spec_, std::move(v));
}

MonicPolys::iterator& MonicPolys::iterator::operator++() {
  if (++rank_ == count_) {
    rank_ = 0;
    ++degree_;
  }
  load();
  return *this;
}

// --- text -----------------------------------------------------------------

namespace {

bool needs_parens(const FieldElement& c) { return c.value() >= c.spec()->p(); }

std::string coeff_text(const FieldElement& c) {
  std::string s = to_string(c);
  return needs_parens(c) ? "(" + s + ")" : s;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

[[noreturn]] void bad(std::string_view text, const std::string& why) {
  throw ParseError("cannot parse polynomial '" + std::string(text) + "': " + why);
}

// Splits on `sep` outside parentheses.
std::vector<std::string_view> split_top(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '(') ++depth;
    if (s[i] == ')') --depth;
    if (s[i] == sep && depth == 0) {
      out.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  out.push_back(s.substr(start));
  return out;
}

}  // namespace

std::string to_string(const Poly& f, PolyFormat format) {
  if (f.is_zero()) return "0";
  if (format == PolyFormat::List) {
    std::string out;
    for (std::size_t i = 0; i < f.values().size(); ++i) {
      if (i) out += ',';
      const FieldElement c = f.coeff(i);
      if (f.spec()->a() == 1) {
        out += std::to_string(c.value());
      } else {
        out += '(';
        auto d = c.coeffs();
        for (std::size_t k = 0; k < d.size(); ++k) out += (k ? "," : "") + std::to_string(d[k]);
        out += ')';
      }
    }
    return out;
  }
  std::string out;
  for (int k = f.degree(); k >= 0; --k) {
    const FieldElement c = f.coeff(static_cast<std::size_t>(k));
    if (c.is_zero()) continue;
    if (!out.empty()) out += '+';
    if (k == 0) {
      out += coeff_text(c);
      continue;
    }
    if (!c.is_one()) out += coeff_text(c) + "*";
    out += 'T';
    if (k > 1) out += "^" + std::to_string(k);
  }
  return out;
}

Poly parse_poly(const FieldRef& spec, std::string_view text) {
  std::string_view s = trim(text);
  if (s.empty()) bad(text, "empty input");
  const FieldSpec& F = *spec;

  auto parts = split_top(s, ',');
  if (parts.size() > 1 && s.find('T') == std::string_view::npos) {
    std::vector<Poly::Value> v;
    for (auto part : parts) {
      part = trim(part);
      if (part.empty()) bad(text, "empty list entry");
      v.push_back(parse_element(spec, part).value());
    }
    return Poly(spec, std::move(v));
  }

  // Human form: split into signed terms at top-level '+' / '-'.
  std::vector<Poly::Value> acc;
  int depth = 0;
  std::size_t i = 0;
  bool any = false;
  while (i < s.size()) {
    bool negate = false;
    while (i < s.size() && (s[i] == '+' || s[i] == '-' || std::isspace(static_cast<unsigned char>(s[i])))) {
      if (s[i] == '-') negate = !negate;
      ++i;
    }
    std::size_t j = i;
    for (; j < s.size(); ++j) {
      if (s[j] == '(') ++depth;
      if (s[j] == ')') --depth;
      if (depth == 0 && (s[j] == '+' || s[j] == '-')) break;
    }
    if (depth != 0) bad(text, "unbalanced parentheses");
    std::string_view term = trim(s.substr(i, j - i));
    i = j;
    if (term.empty()) bad(text, "dangling sign");

    FieldElement coef = FieldElement::one(spec);
    std::size_t power = 0;
    std::string_view rest = term;
    if (rest.front() == '(') {
      auto close = rest.find(')');
      coef = parse_element(spec, rest.substr(0, close + 1));
      rest = trim(rest.substr(close + 1));
    } else if (std::isdigit(static_cast<unsigned char>(rest.front()))) {
      std::size_t k = 0;
      while (k < rest.size() && std::isdigit(static_cast<unsigned char>(rest[k]))) ++k;
      std::uint64_t n = 0;
      std::from_chars(rest.data(), rest.data() + k, n);
      coef = FieldElement::from_int(spec, static_cast<std::int64_t>(n % F.p()));
      rest = trim(rest.substr(k));
    }
    if (!rest.empty() && rest.front() == '*') rest = trim(rest.substr(1));
    if (!rest.empty()) {
      if (rest.front() != 'T') bad(text, "unexpected '" + std::string(rest) + "'");
      rest = trim(rest.substr(1));
      power = 1;
      if (!rest.empty()) {
        if (rest.front() != '^') bad(text, "expected '^' after T");
        rest = trim(rest.substr(1));
        auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), power);
        if (rest.empty() || ec != std::errc{} || ptr != rest.data() + rest.size())
          bad(text, "bad exponent");
        if (power > 1'000'000) bad(text, "exponent too large");
      }
    } else if (term.back() == '*') {
      bad(text, "dangling '*'");
    }
    if (negate) coef = -coef;
    if (acc.size() <= power) acc.resize(power + 1, 0);
    acc[power] = F.add(acc[power], coef.value());
    any = true;
  }
  if (!any) bad(text, "no terms");
  return Poly(spec, std::move(acc));
}

}  // namespace fqd
