#include "fqdigits/ffq.hpp"

#include <cctype>
#include <charconv>
#include <map>
#include <numeric>

#include "fqdigits/error.hpp"
#include "fqdigits/intmath.hpp"

namespace fqd {

namespace {

// Conway polynomials, ascending coefficients.
const std::map<std::pair<std::uint32_t, unsigned>, std::vector<std::uint32_t>>& conway_table() {
  static const std::map<std::pair<std::uint32_t, unsigned>, std::vector<std::uint32_t>> table{
      {{2, 2}, {1, 1, 1}},
      {{2, 3}, {1, 1, 0, 1}},
      {{2, 4}, {1, 1, 0, 0, 1}},
      {{2, 5}, {1, 0, 1, 0, 0, 1}},
      {{2, 6}, {1, 1, 0, 1, 1, 0, 1}},
      {{3, 2}, {2, 2, 1}},
      {{3, 3}, {1, 2, 0, 1}},
      {{5, 2}, {2, 4, 1}},
      {{7, 2}, {3, 6, 1}},
  };
  return table;
}

}  // namespace

FieldRef FieldSpec::prime(std::uint32_t p) {
  if (!is_prime(p)) throw DomainError("field characteristic " + std::to_string(p) + " is not prime");
  return FieldRef(new FieldSpec(p, 1, {}));
}

FieldRef FieldSpec::extension(std::uint32_t p, std::vector<std::uint32_t> modulus) {
  if (!is_prime(p)) throw DomainError("field characteristic " + std::to_string(p) + " is not prime");
  if (modulus.size() < 3) throw DomainError("extension modulus must have degree >= 2");
  for (auto c : modulus)
    if (c >= p) throw DomainError("modulus coefficient out of range [0, p)");
  if (modulus.back() != 1) throw DomainError("extension modulus must be monic");
  const unsigned a = static_cast<unsigned>(modulus.size() - 1);
  return FieldRef(new FieldSpec(p, a, std::move(modulus)));
}

std::optional<std::vector<std::uint32_t>> FieldSpec::builtin_modulus(std::uint32_t p, unsigned a) {
  auto it = conway_table().find({p, a});
  if (it == conway_table().end()) return std::nullopt;
  return it->second;
}

FieldRef FieldSpec::of_order(std::uint64_t q) {
  auto f = factor(q);
  if (f.size() != 1) throw DomainError("field order " + std::to_string(q) + " is not a prime power");
  auto [p, a] = f[0];
  if (a == 1) return prime(static_cast<std::uint32_t>(p));
  auto mod = builtin_modulus(static_cast<std::uint32_t>(p), a);
  if (!mod) {
    throw DomainError("no built-in modulus for q = " + std::to_string(q) +
                      "; supply one explicitly");
  }
  return extension(static_cast<std::uint32_t>(p), *mod);
}

FieldSpec::FieldSpec(std::uint32_t p, unsigned a, std::vector<std::uint32_t> modulus)
    : p_(p), a_(a), q_(0), modulus_(std::move(modulus)) {
  auto q = checked_pow(p, a);
  if (!q || *q > kMaxFieldOrder) throw ResourceError("field order exceeds table limit");
  q_ = static_cast<std::uint32_t>(*q);

  // The canonical generator is the least x with x^{q-1} = 1 and
  // x^{(q-1)/l} != 1 for each prime l | q-1. In F_p[g]/(m) such an x
  // exists iff every nonzero element is a unit, i.e. iff m is irreducible.
  const std::uint32_t order = q_ - 1;
  const auto primes = prime_divisors(order);
  auto raw_pow = [this](Value x, std::uint64_t e) {
    Value r = 1;
    while (e) {
      if (e & 1) r = raw_mul(r, x);
      x = raw_mul(x, x);
      e >>= 1;
    }
    return r;
  };
  Value gen = 0;
  for (Value x = 1; x < q_ && gen == 0; ++x) {
    if (raw_pow(x, order) != 1) continue;
    bool full = true;
    for (auto l : primes) {
      if (raw_pow(x, order / l) == 1) {
        full = false;
        break;
      }
    }
    if (full) gen = x;
  }
  if (gen == 0) throw DomainError("field modulus is not irreducible over F_p");

  exp_.resize(order);
  log_.assign(q_, 0);
  Value cur = 1;
  for (std::uint32_t k = 0; k < order; ++k) {
    exp_[k] = cur;
    log_[cur] = k;
    cur = raw_mul(cur, gen);
  }
}

std::vector<std::uint32_t> FieldSpec::digits(Value x) const {
  std::vector<std::uint32_t> c(a_);
  for (unsigned i = 0; i < a_; ++i) {
    c[i] = x % p_;
    x /= p_;
  }
  return c;
}

FieldSpec::Value FieldSpec::from_digits(const std::vector<std::uint32_t>& c) const {
  Value v = 0;
  for (std::size_t i = c.size(); i-- > 0;) v = v * p_ + c[i];
  return v;
}

FieldSpec::Value FieldSpec::add(Value x, Value y) const noexcept {
  if (a_ == 1) {
    Value s = x + y;
    return s >= p_ ? s - p_ : s;
  }
  Value out = 0, place = 1;
  while (x || y) {
    Value s = x % p_ + y % p_;
    if (s >= p_) s -= p_;
    out += s * place;
    place *= p_;
    x /= p_;
    y /= p_;
  }
  return out;
}

FieldSpec::Value FieldSpec::neg(Value x) const noexcept {
  if (a_ == 1) return x == 0 ? 0 : p_ - x;
  Value out = 0, place = 1;
  while (x) {
    Value d = x % p_;
    out += (d == 0 ? 0 : p_ - d) * place;
    place *= p_;
    x /= p_;
  }
  return out;
}

FieldSpec::Value FieldSpec::raw_mul(Value x, Value y) const {
  if (a_ == 1) return static_cast<Value>(std::uint64_t{x} * y % p_);
  auto cx = digits(x), cy = digits(y);
  std::vector<std::uint64_t> prod(2 * a_ - 1, 0);
  for (unsigned i = 0; i < a_; ++i)
    for (unsigned j = 0; j < a_; ++j) prod[i + j] = (prod[i + j] + std::uint64_t{cx[i]} * cy[j]) % p_;
  // Reduce with the monic modulus: g^a = -(m_0 + ... + m_{a-1} g^{a-1}).
  for (std::size_t k = prod.size(); k-- > a_;) {
    const std::uint64_t c = prod[k];
    if (c == 0) continue;
    prod[k] = 0;
    for (unsigned j = 0; j < a_; ++j)
      prod[k - a_ + j] = (prod[k - a_ + j] + (p_ - modulus_[j]) % p_ * c) % p_;
  }
  std::vector<std::uint32_t> out(a_);
  for (unsigned i = 0; i < a_; ++i) out[i] = static_cast<std::uint32_t>(prod[i]);
  return from_digits(out);
}

// --- FieldElement ---------------------------------------------------------

FieldElement::FieldElement(FieldRef spec, Value v) : spec_(std::move(spec)), v_(v) {
  if (v_ >= spec_->q()) throw DomainError("field element index out of range");
}

FieldElement::FieldElement(FieldRef spec, const std::vector<std::uint32_t>& coeffs)
    : spec_(std::move(spec)), v_(0) {
  if (coeffs.size() != spec_->a()) throw DomainError("field element needs exactly a coefficients");
  for (auto c : coeffs)
    if (c >= spec_->p()) throw DomainError("field element coefficient out of range [0, p)");
  v_ = spec_->from_digits(coeffs);
}

FieldElement FieldElement::from_int(FieldRef spec, std::int64_t n) {
  const std::int64_t p = spec->p();
  std::int64_t r = n % p;
  if (r < 0) r += p;
  return {std::move(spec), static_cast<Value>(r)};
}

void FieldElement::check_same(const FieldElement& o) const {
  if (!spec_->same_field(*o.spec_)) throw DomainError("field elements belong to different fields");
}

FieldElement FieldElement::operator-() const { return {spec_, spec_->neg(v_)}; }

FieldElement& FieldElement::operator+=(const FieldElement& o) {
  check_same(o);
  v_ = spec_->add(v_, o.v_);
  return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& o) {
  check_same(o);
  v_ = spec_->sub(v_, o.v_);
  return *this;
}

FieldElement& FieldElement::operator*=(const FieldElement& o) {
  check_same(o);
  v_ = spec_->mul(v_, o.v_);
  return *this;
}

FieldElement inverse(const FieldElement& x) {
  if (x.is_zero()) throw DomainError("inversion of zero in F_q");
  return {x.spec(), x.spec()->inv(x.value())};
}

FieldElement pow(const FieldElement& x, std::uint64_t e) {
  FieldElement base = x;
  FieldElement r = FieldElement::one(x.spec());
  while (e) {
    if (e & 1) r *= base;
    base *= base;
    e >>= 1;
  }
  return r;
}

FieldElement canonical_generator(const FieldRef& spec) { return {spec, spec->generator()}; }

std::uint64_t mult_order(const FieldElement& x) {
  if (x.is_zero()) throw DomainError("multiplicative order of zero");
  std::uint64_t t = x.spec()->q() - 1;
  for (auto l : prime_divisors(t)) {
    while (t % l == 0 && pow(x, t / l).is_one()) t /= l;
  }
  return t;
}

int quadratic_character(const FieldElement& x) {
  const auto q = x.spec()->q();
  if (q % 2 == 0) throw DomainError("quadratic character requires odd q");
  if (x.is_zero()) return 0;
  return pow(x, (q - 1) / 2).is_one() ? 1 : -1;
}

std::vector<FieldElement> elements(const FieldRef& spec) {
  std::vector<FieldElement> out;
  out.reserve(spec->q());
  for (FieldSpec::Value v = 0; v < spec->q(); ++v) out.emplace_back(spec, v);
  return out;
}

// --- UnitCharacter --------------------------------------------------------

UnitCharacter::UnitCharacter(FieldRef spec, std::uint64_t s) : spec_(std::move(spec)), s_(0) {
  s_ = s % (spec_->q() - 1 == 0 ? 1 : spec_->q() - 1);
}

UnitCharacter UnitCharacter::quadratic(FieldRef spec) {
  if (spec->q() % 2 == 0) throw DomainError("quadratic character requires odd q");
  const std::uint64_t s = (spec->q() - 1) / 2;
  return {std::move(spec), s};
}

std::uint64_t UnitCharacter::order() const {
  const std::uint64_t n = modulus();
  return n / std::gcd(s_, n);
}

UnitCharacter UnitCharacter::conjugate() const {
  const std::uint64_t n = modulus();
  return {spec_, (n - s_) % n};
}

UnitCharacter UnitCharacter::operator*(const UnitCharacter& o) const {
  if (!spec_->same_field(*o.spec_)) throw DomainError("unit characters of different fields");
  return {spec_, (s_ + o.s_) % modulus()};
}

std::optional<std::uint64_t> UnitCharacter::value(const FieldElement& x) const {
  if (!spec_->same_field(*x.spec())) throw DomainError("unit character applied to foreign element");
  if (x.is_zero()) return std::nullopt;
  return mul_mod(s_, spec_->log(x.value()), modulus());
}

// --- text -----------------------------------------------------------------

std::string to_string(const FieldElement& x) {
  if (x.spec()->a() == 1) return std::to_string(x.value());
  if (x.is_zero()) return "0";
  auto c = x.coeffs();
  std::string out;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] == 0) continue;
    if (!out.empty()) out += '+';
    out += std::to_string(c[i]);
    if (i >= 1) out += "*g";
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out;
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::uint64_t parse_uint(std::string_view s, std::string_view whole) {
  s = trim(s);
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size())
    throw ParseError("bad integer in field element '" + std::string(whole) + "'");
  return v;
}

}  // namespace

FieldElement parse_element(const FieldRef& spec, std::string_view text) {
  std::string_view s = trim(text);
  if (s.empty()) throw ParseError("empty field element");
  if (s.front() == '(' && s.back() == ')') s = trim(s.substr(1, s.size() - 2));

  const std::int64_t p = spec->p();
  if (s.find(',') != std::string_view::npos) {
    std::vector<std::uint32_t> c;
    std::size_t start = 0;
    while (true) {
      auto pos = s.find(',', start);
      auto v = parse_uint(s.substr(start, pos == std::string_view::npos ? pos : pos - start), text);
      c.push_back(static_cast<std::uint32_t>(v % p));
      if (pos == std::string_view::npos) break;
      start = pos + 1;
    }
    if (c.size() > spec->a()) throw ParseError("too many coefficients in '" + std::string(text) + "'");
    c.resize(spec->a(), 0);
    return {spec, c};
  }

  // g-form: sum of terms c, g, c*g, c*g^k, g^k with optional signs.
  std::vector<std::int64_t> acc(spec->a(), 0);
  std::size_t i = 0;
  bool any = false;
  while (i < s.size()) {
    int sign = 1;
    while (i < s.size() && (s[i] == '+' || s[i] == '-' || std::isspace(static_cast<unsigned char>(s[i])))) {
      if (s[i] == '-') sign = -sign;
      ++i;
    }
    std::size_t j = i;
    while (j < s.size() && s[j] != '+' && s[j] != '-') ++j;
    std::string_view term = trim(s.substr(i, j - i));
    i = j;
    if (term.empty()) throw ParseError("dangling sign in field element '" + std::string(text) + "'");
    std::int64_t coef = 1;
    std::size_t power = 0;
    auto gpos = term.find('g');
    if (gpos == std::string_view::npos) {
      coef = static_cast<std::int64_t>(parse_uint(term, text) % p);
    } else {
      if (spec->a() == 1) throw ParseError("'g' used over a prime field in '" + std::string(text) + "'");
      std::string_view head = trim(term.substr(0, gpos));
      if (!head.empty() && head.back() == '*') head = trim(head.substr(0, head.size() - 1));
      if (!head.empty()) coef = static_cast<std::int64_t>(parse_uint(head, text) % p);
      std::string_view tail = trim(term.substr(gpos + 1));
      power = 1;
      if (!tail.empty()) {
        if (tail.front() != '^') throw ParseError("bad term in field element '" + std::string(text) + "'");
        power = parse_uint(tail.substr(1), text);
      }
    }
    if (power >= spec->a()) {
      // Reduce g^power through the field itself.
      FieldElement gpow = pow(FieldElement(spec, static_cast<FieldSpec::Value>(p)), power);
      auto gc = gpow.coeffs();
      for (std::size_t k = 0; k < gc.size(); ++k) acc[k] += sign * coef * gc[k];
    } else {
      acc[power] += sign * coef;
    }
    any = true;
  }
  if (!any) throw ParseError("empty field element");
  std::vector<std::uint32_t> c(spec->a());
  for (std::size_t k = 0; k < c.size(); ++k) c[k] = static_cast<std::uint32_t>(((acc[k] % p) + p) % p);
  return {spec, c};
}

}  // namespace fqd
