#include "fqdigits/carlitz.hpp"

#include "fqdigits/error.hpp"
#include "fqdigits/intmath.hpp"

namespace fqd {

AdditivePoly::AdditivePoly(FieldRef spec, std::vector<Poly> coeffs) : spec_(std::move(spec)), c_(std::move(coeffs)) {
  for (const Poly& c : c_)
    if (!c.spec()->same_field(*spec_)) throw DomainError("coefficient over a different field");
  trim();
}

void AdditivePoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

AdditivePoly& AdditivePoly::operator+=(const AdditivePoly& o) {
  if (!spec_->same_field(*o.spec_)) throw DomainError("additive polynomials over different fields");
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Poly::zero(spec_));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

Poly frobenius_twist(const Poly& f, unsigned k) {
  if (f.degree() <= 0) return f;
  const auto step = checked_pow(f.spec()->q(), k);
  if (!step || *step > (std::uint64_t{1} << 24) / static_cast<std::uint64_t>(f.degree()))
    throw ResourceError("Frobenius twist too large");
  std::vector<Poly::Value> out(static_cast<std::size_t>(f.degree()) * *step + 1, 0);
  for (std::size_t j = 0; j < f.values().size(); ++j) out[j * *step] = f.values()[j];
  return Poly(f.spec(), std::move(out));
}

AdditivePoly compose(const AdditivePoly& a, const AdditivePoly& b) {
  if (!a.spec()->same_field(*b.spec())) throw DomainError("additive polynomials over different fields");
  if (a.is_zero() || b.is_zero()) return AdditivePoly(a.spec());
  // a_i (sum_j b_j x^{q^j})^{q^i} = sum_j a_i b_j(T^{q^i}) x^{q^{i+j}}.
  std::vector<Poly> out(a.coeffs().size() + b.coeffs().size() - 1, Poly::zero(a.spec()));
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
    if (a.coeffs()[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs().size(); ++j)
      out[i + j] += a.coeffs()[i] * frobenius_twist(b.coeffs()[j], static_cast<unsigned>(i));
  }
  return AdditivePoly(a.spec(), std::move(out));
}

AdditivePoly carlitz_poly(const Poly& i) {
  const FieldRef& F = i.spec();
  AdditivePoly rho(F);
  const Poly t = Poly::T(F);
  // Horner in T: rho <- rho_T o rho + a_k x, where rho_T o rho = T rho + rho^q.
  for (int k = i.degree(); k >= 0; --k) {
    std::vector<Poly> next(rho.coeffs().size() + 1, Poly::zero(F));
    for (std::size_t j = 0; j < rho.coeffs().size(); ++j) {
      next[j] += t * rho.coeffs()[j];
      next[j + 1] += frobenius_twist(rho.coeffs()[j], 1);
    }
    next[0] += Poly::constant(i.coeff(static_cast<std::size_t>(k)));
    rho = AdditivePoly(F, std::move(next));
  }
  return rho;
}

std::string to_string(const AdditivePoly& f) {
  if (f.is_zero()) return "0";
  std::string out;
  const std::uint64_t q = f.spec()->q();
  std::uint64_t power = 1;
  for (std::size_t i = 0; i < f.coeffs().size(); ++i, power *= q) {
    const Poly& c = f.coeffs()[i];
    if (c.is_zero()) continue;
    if (!out.empty()) out += '+';
    const std::string xs = power == 1 ? "x" : "x^" + std::to_string(power);
    if (c.is_one()) {
      out += xs;
      continue;
    }
    const std::string cs = to_string(c);
    const bool bare = c.degree() == 0 || cs.find_first_of("+-", 1) == std::string::npos;
    out += (bare ? cs : "(" + cs + ")") + "*" + xs;
  }
  return out;
}

}  // namespace fqd
