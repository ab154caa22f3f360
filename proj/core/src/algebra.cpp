#include "grw/algebra.hpp"

#include <algorithm>
#include <array>

namespace grw {

namespace {

constexpr unsigned kMaxK = 62;

void check_pair(const AlgElem& a, const AlgElem& b) {
  if (a.ctx != b.ctx) fail(errc::ctx_mismatch, "algebra elements over different fields");
  if (a.grp != b.grp) fail(errc::group_mismatch, "algebra elements over different groups");
}

}  // namespace

bool AlgElem::is_zero() const {
  return std::all_of(coeffs.begin(), coeffs.end(), [](std::uint32_t c) { return c == 0; });
}

std::size_t AlgElemHash::operator()(const AlgElem& a) const {
  // FNV-1a over the coefficient words
  std::size_t h = 1469598103934665603ull;
  for (std::uint32_t c : a.coeffs) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

AlgElem alg_zero(const FieldCtx& ctx, const Group& grp) {
  AlgElem a;
  a.ctx = &ctx;
  a.grp = &grp;
  a.coeffs.assign(std::size_t{grp.order()} * ctx.degree(), 0);
  return a;
}

AlgElem alg_one(const FieldCtx& ctx, const Group& grp) {
  AlgElem a = alg_zero(ctx, grp);
  ctx.r_one(a.slot(0));
  return a;
}

AlgElem alg_term(const FieldCtx& ctx, const Group& grp, const GroupElem& g) {
  AlgElem a = alg_zero(ctx, grp);
  ctx.r_one(a.slot(grp.index_of(g)));
  return a;
}

AlgElem alg_term(const FieldCtx& ctx, const Group& grp, const GroupElem& g, const FieldElem& c) {
  ctx.check_same(c);
  AlgElem a = alg_zero(ctx, grp);
  std::copy(c.coeffs().begin(), c.coeffs().end(), a.slot(grp.index_of(g)));
  return a;
}

AlgElem alg_add(const AlgElem& a, const AlgElem& b) {
  check_pair(a, b);
  AlgElem out = alg_zero(*a.ctx, *a.grp);
  const unsigned k = a.ctx->degree();
  for (std::uint32_t g = 0; g < a.grp->order(); ++g) {
    a.ctx->r_add(a.coeffs.data() + std::size_t{g} * k, b.coeffs.data() + std::size_t{g} * k,
                 out.coeffs.data() + std::size_t{g} * k);
  }
  return out;
}

AlgElem alg_sub(const AlgElem& a, const AlgElem& b) {
  check_pair(a, b);
  AlgElem out = alg_zero(*a.ctx, *a.grp);
  const unsigned k = a.ctx->degree();
  for (std::uint32_t g = 0; g < a.grp->order(); ++g) {
    a.ctx->r_sub(a.coeffs.data() + std::size_t{g} * k, b.coeffs.data() + std::size_t{g} * k,
                 out.coeffs.data() + std::size_t{g} * k);
  }
  return out;
}

AlgElem alg_neg(const AlgElem& a) {
  AlgElem out = alg_zero(*a.ctx, *a.grp);
  const unsigned k = a.ctx->degree();
  for (std::uint32_t g = 0; g < a.grp->order(); ++g) {
    a.ctx->r_neg(a.slot(g), out.coeffs.data() + std::size_t{g} * k);
  }
  return out;
}

AlgElem alg_scale(const FieldElem& c, const AlgElem& a) {
  a.ctx->check_same(c);
  AlgElem out = alg_zero(*a.ctx, *a.grp);
  for (std::uint32_t g = 0; g < a.grp->order(); ++g) {
    a.ctx->r_mul(c.coeffs().data(), a.slot(g), out.slot(g));
  }
  return out;
}

AlgElem alg_mul(const AlgElem& a, const AlgElem& b) {
  check_pair(a, b);
  const FieldCtx& ctx = *a.ctx;
  const Group& grp = *a.grp;
  const unsigned k = ctx.degree();
  AlgElem out = alg_zero(ctx, grp);
  if (k == 1) {
    const std::uint64_t p = ctx.p();
    for (std::uint32_t g = 0; g < grp.order(); ++g) {
      const std::uint64_t ag = a.coeffs[g];
      if (!ag) continue;
      for (std::uint32_t h = 0; h < grp.order(); ++h) {
        const std::uint64_t bh = b.coeffs[h];
        if (!bh) continue;
        const std::uint32_t w = grp.mul_idx(g, h);
        out.coeffs[w] = static_cast<std::uint32_t>((out.coeffs[w] + ag * bh) % p);
      }
    }
    return out;
  }
  for (std::uint32_t g = 0; g < grp.order(); ++g) {
    const std::uint32_t* ag = a.slot(g);
    if (ctx.r_is_zero(ag)) continue;
    for (std::uint32_t h = 0; h < grp.order(); ++h) {
      const std::uint32_t* bh = b.slot(h);
      if (ctx.r_is_zero(bh)) continue;
      ctx.r_mul_acc(ag, bh, out.slot(grp.mul_idx(g, h)));
    }
  }
  return out;
}

AlgElem alg_conj(const AlgElem& a, const AlgElem& t_inv, const AlgElem& t) {
  return alg_mul(alg_mul(t_inv, a), t);
}

FieldElem augmentation(const AlgElem& a) {
  const FieldCtx& ctx = *a.ctx;
  std::array<std::uint32_t, kMaxK> acc{};
  ctx.r_zero(acc.data());
  for (std::uint32_t g = 0; g < a.grp->order(); ++g) {
    ctx.r_add(acc.data(), a.slot(g), acc.data());
  }
  return ctx.from_coeffs(std::vector<std::uint32_t>(acc.begin(), acc.begin() + ctx.degree()));
}

AlgElem group_sum(const FieldCtx& ctx, const Group& grp, const std::vector<std::uint32_t>& subgroup) {
  // closure check
  for (auto x : subgroup) {
    for (auto y : subgroup) {
      if (!std::binary_search(subgroup.begin(), subgroup.end(), grp.mul_idx(x, y))) {
        fail(errc::not_subgroup, "element set is not closed under multiplication");
      }
    }
  }
  if (subgroup.empty() || subgroup[0] != 0) {
    fail(errc::not_subgroup, "subgroup must contain the identity");
  }
  AlgElem out = alg_zero(ctx, grp);
  for (auto x : subgroup) ctx.r_one(out.slot(x));
  return out;
}

FMatrix regular_rep(const AlgElem& u) {
  const FieldCtx& ctx = *u.ctx;
  const Group& grp = *u.grp;
  const std::uint32_t n = grp.order();
  const unsigned k = ctx.degree();
  FMatrix m(ctx, n, n);
  // column h = coefficients of u*h = sum_g u_g (g*h)
  for (std::uint32_t h = 0; h < n; ++h) {
    for (std::uint32_t g = 0; g < n; ++g) {
      const std::uint32_t w = grp.mul_idx(g, h);
      std::copy_n(u.coeffs.data() + std::size_t{g} * k, k, m.slot(w, h));
    }
  }
  return m;
}

std::optional<AlgElem> try_inverse(const AlgElem& u) {
  const FieldCtx& ctx = *u.ctx;
  const Group& grp = *u.grp;
  const std::uint32_t n = grp.order();
  const unsigned k = ctx.degree();
  FMatrix m = regular_rep(u);
  auto inv = m.inverse();
  if (!inv) return std::nullopt;
  // v = m^-1 * e_identity: first column of the inverse
  AlgElem v = alg_zero(ctx, grp);
  for (std::uint32_t g = 0; g < n; ++g) {
    std::copy_n(inv->slot(g, 0), k, v.coeffs.data() + std::size_t{g} * k);
  }
  return v;
}

bool is_unit(const AlgElem& u) {
  FMatrix m = regular_rep(u);
  return m.nonsingular_destructive();
}

Ideal::Ideal(const FieldCtx& ctx, const Group& grp)
    : ctx_(&ctx), grp_(&grp), rref_(ctx, grp.order()) {}

Ideal Ideal::zero(const FieldCtx& ctx, const Group& grp) { return Ideal(ctx, grp); }

Ideal Ideal::from_vectors(const FieldCtx& ctx, const Group& grp,
                          const std::vector<AlgElem>& vectors, bool check_two_sided) {
  Ideal ideal(ctx, grp);
  for (const auto& v : vectors) {
    if (v.ctx != &ctx || v.grp != &grp) fail(errc::ctx_mismatch, "ideal vector context mismatch");
    ideal.rref_.add(v.coeffs.data());
  }
  if (check_two_sided) {
    const auto basis = ideal.basis_elems();
    for (const auto& b : basis) {
      for (auto gi : grp.generator_idxs()) {
        const AlgElem g = alg_term(ctx, grp, grp.element(gi));
        if (!ideal.contains(alg_mul(g, b)) || !ideal.contains(alg_mul(b, g))) {
          fail(errc::not_closed, "span is not a two-sided ideal");
        }
      }
    }
  }
  return ideal;
}

bool Ideal::contains(const AlgElem& u) const {
  if (u.ctx != ctx_ || u.grp != grp_) fail(errc::ctx_mismatch, "ideal membership context mismatch");
  return rref_.contains(u.coeffs.data());
}

std::vector<AlgElem> Ideal::basis_elems() const {
  std::vector<AlgElem> out;
  out.reserve(rref_.rank());
  for (const auto& row : rref_.basis_rows()) {
    AlgElem a = alg_zero(*ctx_, *grp_);
    a.coeffs = row;
    out.push_back(std::move(a));
  }
  return out;
}

Ideal Ideal::product(const Ideal& other) const {
  if (ctx_ != other.ctx_ || grp_ != other.grp_) {
    fail(errc::ctx_mismatch, "ideal product context mismatch");
  }
  Ideal out(*ctx_, *grp_);
  const auto left = basis_elems();
  const auto right = other.basis_elems();
  for (const auto& a : left) {
    for (const auto& b : right) {
      const AlgElem ab = alg_mul(a, b);
      out.rref_.add(ab.coeffs.data());
    }
  }
  return out;
}

Ideal omega_basis(const FieldCtx& ctx, const Group& grp, const std::vector<std::uint32_t>& subgroup) {
  // normality check
  std::vector<bool> in_k(grp.order(), false);
  for (auto x : subgroup) in_k[x] = true;
  if (subgroup.empty() || subgroup[0] != 0) fail(errc::not_normal, "subgroup must contain identity");
  for (auto gi : grp.generator_idxs()) {
    const std::uint32_t gi_inv = grp.inv_idx(gi);
    for (auto ki : subgroup) {
      if (!in_k[grp.mul_idx(grp.mul_idx(gi, ki), gi_inv)]) {
        fail(errc::not_normal, "subgroup is not normal");
      }
    }
  }
  // transversal: least element of each right coset K t
  std::vector<std::uint32_t> coset_of(grp.order(), UINT32_MAX);
  std::vector<std::uint32_t> transversal;
  for (std::uint32_t a = 0; a < grp.order(); ++a) {
    if (coset_of[a] != UINT32_MAX) continue;
    transversal.push_back(a);
    for (auto ki : subgroup) coset_of[grp.mul_idx(ki, a)] = a;
  }
  std::vector<AlgElem> vecs;
  vecs.reserve((subgroup.size() - 1) * transversal.size());
  for (auto ki : subgroup) {
    if (ki == 0) continue;
    for (auto t : transversal) {
      AlgElem v = alg_zero(ctx, grp);
      ctx.r_one(v.slot(grp.mul_idx(ki, t)));
      std::array<std::uint32_t, kMaxK> neg1;
      ctx.r_one(neg1.data());
      ctx.r_neg(neg1.data(), neg1.data());
      std::copy_n(neg1.data(), ctx.degree(), v.slot(t));
      vecs.push_back(std::move(v));
    }
  }
  return Ideal::from_vectors(ctx, grp, vecs, /*check_two_sided=*/true);
}

std::optional<std::uint32_t> ideal_nilpotency(const Ideal& ideal, std::uint32_t max_m) {
  if (ideal.is_zero()) return 1;
  Ideal power = ideal;
  std::size_t prev_dim = power.dim();
  for (std::uint32_t m = 2; m <= max_m; ++m) {
    power = power.product(ideal);
    if (power.is_zero()) return m;
    if (power.dim() >= prev_dim) return std::nullopt;  // stabilized, never reaches zero
    prev_dim = power.dim();
  }
  return std::nullopt;
}

ThetaMap ThetaMap::make(const FieldCtx& ctx, const GroupPtr& g, const std::vector<GroupElem>& k_gens) {
  ThetaMap t;
  t.ctx_ = &ctx;
  t.g_ = g;
  t.cosets_ = normal_cosets(*g, k_gens);
  t.q_ = quotient_group(*g, t.cosets_);
  const auto complement = find_complement(*g, t.cosets_);
  t.section_rep_.assign(t.cosets_.cosets.size(), 0);
  if (complement) {
    t.subgroup_section_ = true;
    for (auto e : *complement) t.section_rep_[t.cosets_.coset_of[e]] = e;
  } else {
    t.subgroup_section_ = false;
    for (std::size_t c = 0; c < t.cosets_.cosets.size(); ++c) {
      t.section_rep_[c] = t.cosets_.cosets[c][0];
    }
  }
  return t;
}

AlgElem ThetaMap::apply(const AlgElem& u) const {
  if (u.grp != g_.get()) fail(errc::group_mismatch, "theta applied to foreign element");
  AlgElem out = alg_zero(*ctx_, *q_);
  for (std::uint32_t g = 0; g < g_->order(); ++g) {
    ctx_->r_add(out.slot(cosets_.coset_of[g]), u.slot(g), out.slot(cosets_.coset_of[g]));
  }
  return out;
}

AlgElem ThetaMap::section(const AlgElem& v) const {
  if (v.grp != q_.get()) fail(errc::group_mismatch, "section applied to foreign element");
  const unsigned k = ctx_->degree();
  AlgElem out = alg_zero(*ctx_, *g_);
  for (std::uint32_t c = 0; c < q_->order(); ++c) {
    std::copy_n(v.coeffs.data() + std::size_t{c} * k, k, out.slot(section_rep_[c]));
  }
  return out;
}

Ideal ThetaMap::kernel_ideal() const { return omega_basis(*ctx_, *g_, cosets_.subgroup); }

}  // namespace grw
