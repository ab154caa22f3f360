#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "grw/field.hpp"
#include "grw/group.hpp"
#include "grw/linalg.hpp"

namespace grw {

// Element of the group algebra FG: one coefficient slot per group element in
// the group's canonical enumeration.
struct AlgElem {
  const FieldCtx* ctx = nullptr;
  const Group* grp = nullptr;
  std::vector<std::uint32_t> coeffs;  // grp->order() * ctx->degree()

  std::uint32_t* slot(std::uint32_t g) { return coeffs.data() + std::size_t{g} * ctx->degree(); }
  const std::uint32_t* slot(std::uint32_t g) const {
    return coeffs.data() + std::size_t{g} * ctx->degree();
  }

  bool is_zero() const;
  bool operator==(const AlgElem& o) const {
    return ctx == o.ctx && grp == o.grp && coeffs == o.coeffs;
  }
  bool operator!=(const AlgElem& o) const { return !(*this == o); }
};

struct AlgElemHash {
  std::size_t operator()(const AlgElem& a) const;
};

AlgElem alg_zero(const FieldCtx& ctx, const Group& grp);
AlgElem alg_one(const FieldCtx& ctx, const Group& grp);
// The basis element g with coefficient c (default 1).
AlgElem alg_term(const FieldCtx& ctx, const Group& grp, const GroupElem& g);
AlgElem alg_term(const FieldCtx& ctx, const Group& grp, const GroupElem& g, const FieldElem& c);

AlgElem alg_add(const AlgElem& a, const AlgElem& b);
AlgElem alg_sub(const AlgElem& a, const AlgElem& b);
AlgElem alg_neg(const AlgElem& a);
AlgElem alg_scale(const FieldElem& c, const AlgElem& a);
// Convolution product.
AlgElem alg_mul(const AlgElem& a, const AlgElem& b);
// t^-1 * a * t  (t_inv must be the inverse of t).
AlgElem alg_conj(const AlgElem& a, const AlgElem& t_inv, const AlgElem& t);

// Coefficient sum; a ring homomorphism onto F.
FieldElem augmentation(const AlgElem& a);

// Sum over a subgroup given as sorted element indices. Verifies closure and
// throws NotSubgroup otherwise.
AlgElem group_sum(const FieldCtx& ctx, const Group& grp, const std::vector<std::uint32_t>& subgroup);

// Left-regular representation: column h holds the coefficients of u * h.
FMatrix regular_rep(const AlgElem& u);

// Inverse through the regular representation; nullopt when u is not a unit.
std::optional<AlgElem> try_inverse(const AlgElem& u);
bool is_unit(const AlgElem& u);

// Two-sided ideal as a reduced row-echelon coefficient basis.
class Ideal {
public:
  static Ideal zero(const FieldCtx& ctx, const Group& grp);
  // Span of the given vectors; verifies two-sided closure under the group
  // generators when check_two_sided is set.
  static Ideal from_vectors(const FieldCtx& ctx, const Group& grp,
                            const std::vector<AlgElem>& vectors, bool check_two_sided = true);

  const FieldCtx& ctx() const { return *ctx_; }
  const Group& grp() const { return *grp_; }
  std::size_t dim() const { return rref_.rank(); }
  bool is_zero() const { return dim() == 0; }
  const RREF& rref() const { return rref_; }

  bool contains(const AlgElem& u) const;
  std::vector<AlgElem> basis_elems() const;
  // Span of pairwise products of basis vectors (the product ideal).
  Ideal product(const Ideal& other) const;

private:
  Ideal(const FieldCtx& ctx, const Group& grp);
  const FieldCtx* ctx_;
  const Group* grp_;
  RREF rref_;
};

// omega(K): ideal generated by {g - 1 : g in K} for a normal subgroup K given
// as sorted element indices. Basis {(g - 1) t} over a coset transversal,
// dim = |G| - |G|/|K|. Throws NotNormal.
Ideal omega_basis(const FieldCtx& ctx, const Group& grp, const std::vector<std::uint32_t>& subgroup);

// Least m <= max_m with I^m = 0, or nullopt when no such m exists (detected
// early when the power chain stabilizes).
std::optional<std::uint32_t> ideal_nilpotency(const Ideal& ideal, std::uint32_t max_m);

// Collapse map theta: FG -> F[G/K] for a normal subgroup K, together with a
// section of the quotient. When a complement subgroup exists the section is
// multiplicative (the inclusion of the complement's group algebra).
class ThetaMap {
public:
  static ThetaMap make(const FieldCtx& ctx, const GroupPtr& g, const std::vector<GroupElem>& k_gens);

  const Group& domain() const { return *g_; }
  const GroupPtr& quotient() const { return q_; }
  const CosetDecomposition& cosets() const { return cosets_; }
  bool has_subgroup_section() const { return subgroup_section_; }
  // Coset representative used by the section for quotient element c.
  std::uint32_t section_rep(std::uint32_t c) const { return section_rep_[c]; }

  AlgElem apply(const AlgElem& u) const;    // theta
  AlgElem section(const AlgElem& v) const;  // i : F[G/K] -> FG
  Ideal kernel_ideal() const;               // = omega(K)

private:
  const FieldCtx* ctx_ = nullptr;
  GroupPtr g_;
  GroupPtr q_;
  CosetDecomposition cosets_;
  std::vector<std::uint32_t> section_rep_;
  bool subgroup_section_ = false;
};

}  // namespace grw
