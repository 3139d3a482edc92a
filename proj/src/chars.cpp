#include "fqdigits/chars.hpp"

#include <numeric>

#include "fqdigits/error.hpp"
#include "fqdigits/intmath.hpp"

namespace fqd {

namespace {

std::uint64_t group_order_of(const Poly& p) {
  auto qd = checked_pow(p.spec()->q(), static_cast<unsigned>(p.degree()));
  if (!qd) throw ResourceError("group order q^d - 1 does not fit in 64 bits");
  return *qd - 1;
}

}  // namespace

std::vector<std::uint64_t> primitivity_witnesses(const Poly& p, const Poly& g) {
  if (!gcd(g, p).is_one()) throw DomainError("G must be coprime to P");
  const std::uint64_t n = group_order_of(p);
  std::vector<std::uint64_t> out;
  for (auto l : prime_divisors(n))
    if (mod_pow(g, n / l, p).is_one()) out.push_back(l);
  return out;
}

Poly least_primitive_residue(const Poly& p) {
  const std::uint64_t n = group_order_of(p);
  const std::uint64_t size = n + 1;
  for (std::uint64_t idx = 1; idx < size; ++idx) {
    Poly g = from_residue_index(p.spec(), idx);
    if (primitivity_witnesses(p, g).empty()) return g;
  }
  throw DomainError("no primitive root modulo P (P is not irreducible)");
}

ResidueCtx::ResidueCtx(Poly p, Poly g) : p_(std::move(p)), g_(std::move(g)) {
  if (p_.degree() < 1) throw DomainError("P must have degree >= 1");
  if (!p_.is_monic()) throw DomainError("P must be monic");
  if (!is_irreducible(p_)) throw DomainError("P must be irreducible");
  if (!gcd(g_, p_).is_one()) throw DomainError("G must be coprime to P");
  n_ = group_order_of(p_);
  if (n_ > kMaxGroupOrder) throw ResourceError("group order q^d - 1 exceeds the table limit");
  const std::uint64_t q = p_.spec()->q();
  r_ = n_ / (q - 1);

  if (auto w = primitivity_witnesses(p_, g_); !w.empty()) {
    throw DomainError("G is not a primitive root modulo P: G^(N/" + std::to_string(w.front()) +
                      ") = 1 with N = " + std::to_string(n_));
  }

  powers_.resize(n_);
  dlog_.assign(n_ + 1, 0);
  const Poly g0 = g_ % p_;
  Poly cur = Poly::one(p_.spec());
  for (std::uint64_t k = 0; k < n_; ++k) {
    const std::uint64_t idx = residue_index(cur);
    powers_[k] = static_cast<std::uint32_t>(idx);
    dlog_[idx] = static_cast<std::uint32_t>(k);
    cur = (cur * g0) % p_;
  }
  if (!cur.is_one()) throw InternalError("G^N is not 1 modulo P");

  // G^r generates F_q^x; relate it to the canonical generator of F_q.
  const FieldElement w = unit_generator();
  w_log_ = p_.spec()->log(w.value());
  w_log_inv_ = inverse_mod(w_log_, q - 1);
}

Poly ResidueCtx::power(std::uint64_t k) const { return from_residue_index(spec(), powers_[k % n_]); }

std::optional<std::uint64_t> ResidueCtx::dlog(const Poly& i) const {
  const Poly red = i % p_;
  if (red.is_zero()) return std::nullopt;
  return dlog_[residue_index(red)];
}

int ResidueCtx::deg_map(std::uint64_t k) const { return power(k).degree(); }

FieldElement ResidueCtx::unit_generator() const {
  const Poly w = power(r_);
  if (w.degree() != 0) throw InternalError("G^r is not a constant modulo P");
  return w.leading_coeff();
}

std::uint64_t ResidueCtx::restriction_index(std::uint64_t j) const noexcept {
  const std::uint64_t m = q() - 1;
  return mul_mod(j % m, w_log_inv_, m);
}

std::uint64_t ResidueCtx::lift_index(std::uint64_t s) const noexcept {
  const std::uint64_t m = q() - 1;
  return mul_mod(s % m, w_log_, m);
}

std::optional<std::uint64_t> char_exponent(const DirichletChar& chi, const Poly& i) {
  auto k = chi.ctx->dlog(i);
  if (!k) return std::nullopt;
  return mul_mod(chi.j, *k, chi.ctx->group_order());
}

CycloInt char_value(const DirichletChar& chi, const Poly& i) {
  const std::uint64_t n = chi.ctx->group_order();
  auto t = char_exponent(chi, i);
  if (!t) return CycloInt(n);
  return root_of_unity(n, static_cast<std::int64_t>(*t));
}

int deg_map(const ResidueCtx& ctx, std::uint64_t k) { return ctx.deg_map(k); }

UnitCharacter restriction(const DirichletChar& chi) {
  return {chi.ctx->spec(), chi.ctx->restriction_index(chi.j)};
}

SubfieldDescriptor subfield(const ResidueCtx& ctx, std::uint64_t l) {
  const std::uint64_t big_n = ctx.group_order();
  if (l == 0 || big_n % l != 0)
    throw DomainError("subfield degree l = " + std::to_string(l) + " must divide q^d - 1 = " +
                      std::to_string(big_n));
  SubfieldDescriptor sd;
  sd.l = l;
  sd.group_order = big_n;
  // H_L is the index-l subgroup <G^l> of the cyclic group R_P^x, and
  // F_q^x = <G^r>. Then H_{L^+} = H_L F_q^x = <G^l, G^r> = <G^gcd(l,r)>,
  // so [L^+:K] = gcd(l, r).
  sd.m = std::gcd(l, ctx.r());
  sd.n = l / sd.m;

  const std::uint64_t step = big_n / l;
  const std::uint64_t plus_step = big_n / sd.m;
  for (std::uint64_t t = 0; t < l; ++t) {
    const std::uint64_t j = t * step;
    sd.xl.push_back(j);
    if (j % plus_step == 0)
      sd.xl_plus.push_back(j);
    else
      sd.xl_minus.push_back(j);
  }

  const std::uint64_t qm1 = ctx.q() - 1;
  const std::uint64_t ystep = qm1 / sd.n;
  for (std::uint64_t t = 0; t < sd.n; ++t) {
    const UnitCharacter lambda(ctx.spec(), t * ystep);
    // alpha_lambda = chi(G)^m for any chi in X_L restricting to lambda.
    std::optional<std::uint64_t> alpha;
    for (auto j : sd.xl) {
      if (ctx.restriction_index(j) == lambda.index()) {
        alpha = mul_mod(j, sd.m, big_n);
        break;
      }
    }
    if (!alpha) throw InternalError("no character of X_L restricts to a character of Y_L");
    sd.yl.push_back(lambda);
    sd.alpha_exponent.push_back(*alpha);
  }
  return sd;
}

}  // namespace fqd
