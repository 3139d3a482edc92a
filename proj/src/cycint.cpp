#include "fqdigits/cycint.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>

#include "fqdigits/error.hpp"
#include "fqdigits/intmath.hpp"

namespace fqd {

struct CycloModulus {
  std::uint64_t n;
  std::size_t phi;
  // Nonzero terms (exponent, coefficient) of Phi_n below the leading term.
  std::vector<std::pair<std::size_t, std::int64_t>> low_terms;
};

namespace {

std::mutex& cache_mutex() {
  static std::mutex m;
  return m;
}

// Exact quotient of monic-divisor division over Z.
std::vector<std::int64_t> exact_divide(std::vector<std::int64_t> num, const std::vector<std::int64_t>& den) {
  const std::size_t dd = den.size() - 1;
  std::vector<std::int64_t> quot(num.size() - dd, 0);
  for (std::size_t k = num.size(); k-- > dd;) {
    const std::int64_t c = num[k];
    quot[k - dd] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= dd; ++j) num[k - dd + j] -= c * den[j];
  }
  for (std::size_t j = 0; j < dd; ++j)
    if (num[j] != 0) throw InternalError("cyclotomic division left a remainder");
  return quot;
}

std::shared_ptr<const CycloModulus> modulus_for(std::uint64_t n) {
  if (n == 0) throw DomainError("root of unity order must be >= 1");
  static std::map<std::uint64_t, std::shared_ptr<const CycloModulus>> cache;
  {
    std::lock_guard lock(cache_mutex());
    if (auto it = cache.find(n); it != cache.end()) return it->second;
  }
  const auto& phi = cyclotomic_poly(n);
  auto mod = std::make_shared<CycloModulus>();
  mod->n = n;
  mod->phi = phi.size() - 1;
  for (std::size_t j = 0; j < mod->phi; ++j)
    if (phi[j] != 0) mod->low_terms.emplace_back(j, phi[j]);
  std::lock_guard lock(cache_mutex());
  return cache.emplace(n, std::move(mod)).first->second;
}

void submul(BigInt& target, const BigInt& c, std::int64_t t) {
  if (t >= 0)
    mpz_submul_ui(target.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(t));
  else
    mpz_addmul_ui(target.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(-t));
}

// Reduces an arbitrary-length coefficient vector modulo Phi_n in place.
void reduce(const CycloModulus& mod, std::vector<BigInt>& a) {
  const std::size_t phi = mod.phi;
  for (std::size_t i = a.size(); i-- > phi;) {
    if (sgn(a[i]) == 0) continue;
    const BigInt c = a[i];
    for (auto [j, t] : mod.low_terms) submul(a[i - phi + j], c, t);
    a[i] = 0;
  }
  a.resize(phi);
}

}  // namespace

const std::vector<std::int64_t>& cyclotomic_poly(std::uint64_t n) {
  if (n == 0) throw DomainError("cyclotomic polynomial order must be >= 1");
  static std::map<std::uint64_t, std::vector<std::int64_t>> cache;
  {
    std::lock_guard lock(cache_mutex());
    if (auto it = cache.find(n); it != cache.end()) return it->second;
  }
  std::vector<std::int64_t> poly(n + 1, 0);
  poly[0] = -1;
  poly[n] = 1;
  for (auto d : divisors(n)) {
    if (d == n) break;
    poly = exact_divide(std::move(poly), cyclotomic_poly(d));
  }
  std::lock_guard lock(cache_mutex());
  return cache.emplace(n, std::move(poly)).first->second;
}

CycloInt::CycloInt(std::uint64_t n) : n_(n), mod_(modulus_for(n)), c_(mod_->phi) {}

CycloInt::CycloInt(std::shared_ptr<const CycloModulus> mod, std::vector<BigInt> c)
    : n_(mod->n), mod_(std::move(mod)), c_(std::move(c)) {
  reduce(*mod_, c_);
}

CycloInt CycloInt::integer(std::uint64_t n, const BigInt& value) {
  CycloInt r(n);
  r.c_[0] = value;
  return r;
}

CycloInt CycloInt::from_coeffs(std::uint64_t n, std::vector<BigInt> c) {
  auto mod = modulus_for(n);
  if (c.size() < mod->phi) c.resize(mod->phi);
  return CycloInt(std::move(mod), std::move(c));
}

CycloInt CycloInt::from_cyclic(std::uint64_t n, std::span<const std::int64_t> a) {
  if (a.size() != n) throw DomainError("cyclic accumulator must have length n");
  std::vector<BigInt> c(a.begin(), a.end());
  auto mod = modulus_for(n);
  if (c.size() < mod->phi) c.resize(mod->phi);
  return CycloInt(std::move(mod), std::move(c));
}

bool CycloInt::is_zero() const {
  for (const auto& v : c_)
    if (sgn(v) != 0) return false;
  return true;
}

void CycloInt::check_same(const CycloInt& o) const {
  if (n_ != o.n_)
    throw DomainError("cyclotomic integers of orders " + std::to_string(n_) + " and " +
                      std::to_string(o.n_) + " need an explicit lift");
}

CycloInt CycloInt::operator-() const {
  CycloInt r = *this;
  for (auto& v : r.c_) v = -v;
  return r;
}

CycloInt& CycloInt::operator+=(const CycloInt& o) {
  check_same(o);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

CycloInt& CycloInt::operator-=(const CycloInt& o) {
  check_same(o);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

CycloInt operator*(const CycloInt& a, const CycloInt& b) {
  a.check_same(b);
  const std::size_t phi = a.c_.size();
  std::vector<BigInt> prod(phi == 0 ? 0 : 2 * phi - 1);
  for (std::size_t i = 0; i < phi; ++i) {
    if (sgn(a.c_[i]) == 0) continue;
    for (std::size_t j = 0; j < phi; ++j) {
      if (sgn(b.c_[j]) == 0) continue;
      mpz_addmul(prod[i + j].get_mpz_t(), a.c_[i].get_mpz_t(), b.c_[j].get_mpz_t());
    }
  }
  return CycloInt(a.mod_, std::move(prod));
}

CycloInt& CycloInt::operator*=(const CycloInt& o) { return *this = *this * o; }

CycloInt root_of_unity(std::uint64_t n, std::int64_t k) {
  const std::int64_t sn = static_cast<std::int64_t>(n);
  const std::uint64_t e = static_cast<std::uint64_t>(((k % sn) + sn) % sn);
  std::vector<BigInt> c(e + 1);
  c[e] = 1;
  return CycloInt::from_coeffs(n, std::move(c));
}

CycloInt cy_lift(const CycloInt& a, std::uint64_t target_order) {
  if (target_order % a.order() != 0)
    throw DomainError("lift target order must be a multiple of the source order");
  const std::uint64_t step = target_order / a.order();
  std::vector<BigInt> c(a.coeffs().empty() ? 1 : (a.coeffs().size() - 1) * step + 1);
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) c[i * step] = a.coeffs()[i];
  return CycloInt::from_coeffs(target_order, std::move(c));
}

std::optional<BigInt> as_integer(const CycloInt& a) {
  const auto& c = a.coeffs();
  for (std::size_t i = 1; i < c.size(); ++i)
    if (sgn(c[i]) != 0) return std::nullopt;
  return c[0];
}

std::complex<double> complex_eval(const CycloInt& a) {
  std::complex<double> sum{0.0, 0.0};
  const double step = 2.0 * std::numbers::pi / static_cast<double>(a.order());
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
    const double c = a.coeffs()[i].get_d();
    if (c == 0.0) continue;
    sum += c * std::polar(1.0, step * static_cast<double>(i));
  }
  return sum;
}

}  // namespace fqd
