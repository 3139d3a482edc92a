#pragma once

// The cyclic group R_P^x presented by a primitive root G, its Dirichlet
// characters, and the subfields of the P-th cyclotomic function field.
//
// Characters are indexed by exponents: chi_j(G^k) = zeta_N^{jk}, N = q^d - 1.
// Values are materialised as CycloInt only on request.

#include <cstdint>
#include <optional>
#include <vector>

#include "fqdigits/cycint.hpp"
#include "fqdigits/ffq.hpp"
#include "fqdigits/polyring.hpp"

namespace fqd {

/// Largest group order N for which power and log tables are built.
inline constexpr std::uint64_t kMaxGroupOrder = std::uint64_t{1} << 26;

/// Primes l | N with G^{N/l} = 1 mod P (empty iff G is a primitive root),
/// for P irreducible of degree d and N = q^d - 1.
std::vector<std::uint64_t> primitivity_witnesses(const Poly& p, const Poly& g);

/// Least residue g0 (in residue_index order) that is a primitive root mod P.
Poly least_primitive_residue(const Poly& p);

class ResidueCtx;

/// A Dirichlet character modulo P. Refers to its context, which must outlive it.
struct DirichletChar {
  const ResidueCtx* ctx;
  std::uint64_t j;

  bool is_trivial() const noexcept { return j == 0; }
};

class ResidueCtx {
 public:
  /// Validates P (monic irreducible) and G (primitive root mod P) and builds
  /// the power and discrete-log tables. Throws DomainError naming the failed
  /// check (with the witness prime for non-primitive G), ResourceError when N
  /// exceeds kMaxGroupOrder.
  ResidueCtx(Poly p, Poly g);

  const FieldRef& spec() const noexcept { return p_.spec(); }
  const Poly& modulus() const noexcept { return p_; }
  const Poly& base() const noexcept { return g_; }
  std::uint64_t q() const noexcept { return spec()->q(); }
  int d() const noexcept { return p_.degree(); }
  int e() const noexcept { return g_.degree(); }
  /// |R_P^x| = q^d - 1.
  std::uint64_t group_order() const noexcept { return n_; }
  /// (q^d - 1)/(q - 1).
  std::uint64_t r() const noexcept { return r_; }

  /// G_k = G^k mod P, k taken modulo N.
  Poly power(std::uint64_t k) const;
  /// residue_index of G_k.
  std::uint64_t power_index(std::uint64_t k) const noexcept { return powers_[k % n_]; }
  /// k with G^k = I mod P, or nullopt when P | I.
  std::optional<std::uint64_t> dlog(const Poly& i) const;
  /// Discrete log of a nonzero residue given by its residue_index.
  std::uint64_t dlog_index(std::uint64_t index) const noexcept { return dlog_[index]; }

  /// deg G_k (the Deg map on R_P^x).
  int deg_map(std::uint64_t k) const;

  DirichletChar character(std::uint64_t j) const { return {this, j % n_}; }

  /// w = G^r mod P, a generator of F_q^x.
  FieldElement unit_generator() const;
  /// Canonical index s of chi_j restricted to F_q^x: lambda_s(w_c^t) for the
  /// canonical generator w_c equals chi_j(w_c^t).
  std::uint64_t restriction_index(std::uint64_t j) const noexcept;
  /// Some chi_j restricting to lambda_s: j = s * dlog_{w_c}(w) mod (q-1).
  std::uint64_t lift_index(std::uint64_t s) const noexcept;

 private:
  Poly p_;
  Poly g_;
  std::uint64_t n_ = 0;
  std::uint64_t r_ = 0;
  std::vector<std::uint32_t> powers_;
  std::vector<std::uint32_t> dlog_;
  std::uint64_t w_log_ = 0;      // dlog of w = G^r to the canonical generator
  std::uint64_t w_log_inv_ = 0;  // its inverse modulo q-1
};

/// Exponent t of chi(I) = zeta_N^t, or nullopt when P | I.
std::optional<std::uint64_t> char_exponent(const DirichletChar& chi, const Poly& i);

/// chi(I) in Z[zeta_N] (zero when P | I).
CycloInt char_value(const DirichletChar& chi, const Poly& i);

/// deg G_k.
int deg_map(const ResidueCtx& ctx, std::uint64_t k);

/// chi restricted to F_q^x, indexed against the canonical generator of F_q.
UnitCharacter restriction(const DirichletChar& chi);

struct SubfieldDescriptor {
  std::uint64_t l = 1;  // [L:K]
  std::uint64_t m = 1;  // [L^+:K] = gcd(l, r)
  std::uint64_t n = 1;  // [L:L^+] = l / m
  std::uint64_t group_order = 1;
  std::vector<std::uint64_t> xl;        // j with j = 0 mod N/l
  std::vector<std::uint64_t> xl_plus;   // j with j = 0 mod N/m
  std::vector<std::uint64_t> xl_minus;  // xl minus xl_plus
  std::vector<UnitCharacter> yl;        // lambda with lambda^n trivial
  /// alpha_lambda = zeta_N^{alpha_exponent[i]} for yl[i].
  std::vector<std::uint64_t> alpha_exponent;

  CycloInt alpha(std::size_t i) const { return root_of_unity(group_order, static_cast<std::int64_t>(alpha_exponent[i])); }
};

/// Descriptor of the unique subfield L of K_P with [L:K] = l. Throws
/// DomainError when l does not divide N.
SubfieldDescriptor subfield(const ResidueCtx& ctx, std::uint64_t l);

}  // namespace fqd
