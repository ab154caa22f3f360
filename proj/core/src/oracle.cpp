#include "grw/oracle.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numeric>
#include <thread>
#include <unordered_map>
#include <unordered_set>

#include "grw/rng.hpp"

namespace grw {

namespace {

GroupPtr make_group(GroupFamily family, std::uint64_t n) {
  GroupOptions opts;
  opts.order_bound = 768;
  return Group::make(GroupSpec{family, static_cast<std::uint32_t>(n)}, opts);
}

// Nonsingularity tester for packed coefficient vectors, with the w*h^-1 index
// table precomputed.
class UnitTester {
public:
  UnitTester(const FieldCtx& ctx, const Group& grp)
      : ctx_(&ctx), grp_(&grp), dim_(grp.order()), k_(ctx.degree()) {
    prod_inv_.resize(std::size_t{dim_} * dim_);
    for (std::uint32_t w = 0; w < dim_; ++w) {
      for (std::uint32_t h = 0; h < dim_; ++h) {
        prod_inv_[std::size_t{w} * dim_ + h] = grp.mul_idx(w, grp.inv_idx(h));
      }
    }
    scratch_.resize(std::size_t{dim_} * dim_ * k_);
  }

  // coeffs: dim * k words, canonical group order.
  bool is_unit_coeffs(const std::uint32_t* coeffs) {
    const std::uint32_t n = dim_;
    if (k_ == 1) {
      std::uint32_t* m = scratch_.data();
      for (std::uint32_t w = 0; w < n; ++w) {
        const std::uint32_t* row_inv = prod_inv_.data() + std::size_t{w} * n;
        std::uint32_t* row = m + std::size_t{w} * n;
        for (std::uint32_t h = 0; h < n; ++h) row[h] = coeffs[row_inv[h]];
      }
      const std::uint64_t p = ctx_->p();
      for (std::uint32_t col = 0; col < n; ++col) {
        std::uint32_t piv = col;
        while (piv < n && m[std::size_t{piv} * n + col] == 0) ++piv;
        if (piv == n) return false;
        if (piv != col) {
          for (std::uint32_t j = col; j < n; ++j) {
            std::swap(m[std::size_t{piv} * n + j], m[std::size_t{col} * n + j]);
          }
        }
        std::uint32_t pivot_inv;
        ctx_->r_inv(&m[std::size_t{col} * n + col], &pivot_inv);
        for (std::uint32_t r = col + 1; r < n; ++r) {
          const std::uint64_t f = m[std::size_t{r} * n + col];
          if (!f) continue;
          const std::uint64_t fi = f * pivot_inv % p;
          const std::uint32_t* src = m + std::size_t{col} * n;
          std::uint32_t* dst = m + std::size_t{r} * n;
          for (std::uint32_t j = col; j < n; ++j) {
            dst[j] = static_cast<std::uint32_t>((dst[j] + (p - fi * src[j] % p)) % p);
          }
        }
      }
      return true;
    }
    // generic path
    std::uint32_t* m = scratch_.data();
    for (std::uint32_t w = 0; w < n; ++w) {
      for (std::uint32_t h = 0; h < n; ++h) {
        const std::uint32_t g = prod_inv_[std::size_t{w} * n + h];
        std::copy_n(coeffs + std::size_t{g} * k_, k_, m + (std::size_t{w} * n + h) * k_);
      }
    }
    return eliminate_generic();
  }

private:
  bool eliminate_generic() {
    const std::uint32_t n = dim_;
    std::uint32_t* m = scratch_.data();
    auto slot = [&](std::uint32_t r, std::uint32_t c) {
      return m + (std::size_t{r} * n + c) * k_;
    };
    std::vector<std::uint32_t> inv(k_), f(k_), v(k_);
    for (std::uint32_t col = 0; col < n; ++col) {
      std::uint32_t piv = col;
      while (piv < n && ctx_->r_is_zero(slot(piv, col))) ++piv;
      if (piv == n) return false;
      if (piv != col) {
        for (std::uint32_t j = col; j < n; ++j) {
          std::swap_ranges(slot(piv, j), slot(piv, j) + k_, slot(col, j));
        }
      }
      ctx_->r_inv(slot(col, col), inv.data());
      for (std::uint32_t r = col + 1; r < n; ++r) {
        if (ctx_->r_is_zero(slot(r, col))) continue;
        ctx_->r_mul(slot(r, col), inv.data(), f.data());
        for (std::uint32_t j = col; j < n; ++j) {
          ctx_->r_mul(f.data(), slot(col, j), v.data());
          ctx_->r_sub(slot(r, j), v.data(), slot(r, j));
        }
      }
    }
    return true;
  }

  const FieldCtx* ctx_;
  const Group* grp_;
  std::uint32_t dim_;
  unsigned k_;
  std::vector<std::uint32_t> prod_inv_;
  std::vector<std::uint32_t> scratch_;
};

// number of coefficient states q^slots, or nullopt on overflow past cap
std::optional<std::uint64_t> state_count(std::uint64_t q, std::uint64_t slots,
                                         std::uint64_t cap) {
  std::uint64_t states = 1;
  for (std::uint64_t i = 0; i < slots; ++i) {
    if (states > cap / q) return std::nullopt;
    states *= q;
  }
  if (states > cap) return std::nullopt;
  return states;
}

// Exhaustive unit count over the linear index range [lo, hi); digit odometer
// with the first coefficient as the most significant digit.
std::uint64_t census_range(const FieldCtx& ctx, const Group& grp, std::uint64_t lo,
                           std::uint64_t hi) {
  UnitTester tester(ctx, grp);
  const std::uint32_t dim = grp.order();
  const unsigned k = ctx.degree();
  const std::uint64_t q = ctx.q();
  // decode lo
  std::vector<std::uint64_t> digits(dim, 0);
  std::uint64_t idx = lo;
  for (std::uint32_t i = dim; i-- > 0;) {
    digits[i] = idx % q;
    idx /= q;
  }
  std::vector<std::uint32_t> coeffs(std::size_t{dim} * k, 0);
  for (std::uint32_t i = 0; i < dim; ++i) {
    std::uint64_t d = digits[i];
    for (unsigned w = 0; w < k; ++w) {
      coeffs[std::size_t{i} * k + w] = static_cast<std::uint32_t>(d % ctx.p());
      d /= ctx.p();
    }
  }
  std::uint64_t count = 0;
  for (std::uint64_t cur = lo; cur < hi; ++cur) {
    if (tester.is_unit_coeffs(coeffs.data())) ++count;
    // odometer step on the last digit
    for (std::uint32_t pos = dim; pos-- > 0;) {
      if (++digits[pos] < q) {
        std::uint64_t d = digits[pos];
        for (unsigned w = 0; w < k; ++w) {
          coeffs[std::size_t{pos} * k + w] = static_cast<std::uint32_t>(d % ctx.p());
          d /= ctx.p();
        }
        break;
      }
      digits[pos] = 0;
      ctx.r_zero(coeffs.data() + std::size_t{pos} * k);
    }
  }
  return count;
}

std::uint64_t sampled_hits_range(const FieldCtx& ctx, const Group& grp, std::uint64_t seed,
                                 std::uint64_t first, std::uint64_t last) {
  UnitTester tester(ctx, grp);
  const std::uint32_t dim = grp.order();
  const unsigned k = ctx.degree();
  CounterRng rng{seed};
  std::vector<std::uint32_t> coeffs(std::size_t{dim} * k);
  std::uint64_t hits = 0;
  for (std::uint64_t s = first; s < last; ++s) {
    for (std::uint32_t i = 0; i < dim; ++i) {
      for (unsigned w = 0; w < k; ++w) {
        coeffs[std::size_t{i} * k + w] = static_cast<std::uint32_t>(
            rng.below((s << 20) + std::size_t{i} * k + w, ctx.p()));
      }
    }
    if (tester.is_unit_coeffs(coeffs.data())) ++hits;
  }
  return hits;
}

unsigned pick_threads(unsigned requested, std::uint64_t work_items) {
  unsigned t = requested ? requested : std::max(1u, std::thread::hardware_concurrency());
  t = std::min<std::uint64_t>(t, std::max<std::uint64_t>(1, work_items / 1024));
  return std::max(1u, t);
}

}  // namespace

UnitCensus count_units(std::uint64_t p, std::uint32_t k, GroupFamily family, std::uint64_t n,
                       const CensusOptions& opts) {
  const auto t0 = std::chrono::steady_clock::now();
  auto ctx = FieldCtx::make(p, k);
  auto grp = make_group(family, n);
  UnitCensus census;
  census.p = p;
  census.k = k;
  census.family = family;
  census.n = n;
  census.exhaustive = opts.exhaustive;
  census.seed = opts.seed;

  if (opts.exhaustive) {
    const auto states = state_count(ctx->q(), grp->order(), opts.cap);
    if (!states) {
      fail(errc::size_bound,
           "exhaustive census needs q^|G| <= " + std::to_string(opts.cap));
    }
    census.total = *states;
    const unsigned nthreads = pick_threads(opts.threads, *states);
    if (nthreads == 1) {
      census.hits = census_range(*ctx, *grp, 0, *states);
    } else {
      std::vector<std::uint64_t> partial(nthreads, 0);
      std::vector<std::thread> pool;
      const std::uint64_t chunk = (*states + nthreads - 1) / nthreads;
      for (unsigned t = 0; t < nthreads; ++t) {
        const std::uint64_t lo = std::min<std::uint64_t>(*states, t * chunk);
        const std::uint64_t hi = std::min<std::uint64_t>(*states, lo + chunk);
        pool.emplace_back([&, t, lo, hi] { partial[t] = census_range(*ctx, *grp, lo, hi); });
      }
      for (auto& th : pool) th.join();
      census.hits = std::accumulate(partial.begin(), partial.end(), std::uint64_t{0});
    }
    census.estimated_fraction =
        static_cast<double>(census.hits) / static_cast<double>(census.total);
  } else {
    if (opts.samples < 1000) fail(errc::range_error, "sampled census needs >= 1000 samples");
    census.total = opts.samples;
    const unsigned nthreads = pick_threads(opts.threads, opts.samples);
    if (nthreads == 1) {
      census.hits = sampled_hits_range(*ctx, *grp, opts.seed, 0, opts.samples);
    } else {
      std::vector<std::uint64_t> partial(nthreads, 0);
      std::vector<std::thread> pool;
      const std::uint64_t chunk = (opts.samples + nthreads - 1) / nthreads;
      for (unsigned t = 0; t < nthreads; ++t) {
        const std::uint64_t lo = std::min<std::uint64_t>(opts.samples, t * chunk);
        const std::uint64_t hi = std::min<std::uint64_t>(opts.samples, lo + chunk);
        pool.emplace_back(
            [&, t, lo, hi] { partial[t] = sampled_hits_range(*ctx, *grp, opts.seed, lo, hi); });
      }
      for (auto& th : pool) th.join();
      census.hits = std::accumulate(partial.begin(), partial.end(), std::uint64_t{0});
    }
    const double f = static_cast<double>(census.hits) / static_cast<double>(census.total);
    census.estimated_fraction = f;
    census.std_error = std::sqrt(f * (1.0 - f) / static_cast<double>(census.total));
  }
  census.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return census;
}

std::vector<AlgElem> enumerate_units(const FieldCtx& ctx, const Group& grp, std::uint64_t cap) {
  const auto states = state_count(ctx.q(), grp.order(), cap);
  if (!states) fail(errc::size_bound, "unit enumeration needs q^|G| <= cap");
  UnitTester tester(ctx, grp);
  const std::uint32_t dim = grp.order();
  const unsigned k = ctx.degree();
  const std::uint64_t q = ctx.q();
  std::vector<std::uint64_t> digits(dim, 0);
  AlgElem cur = alg_zero(ctx, grp);
  std::vector<AlgElem> units;
  for (std::uint64_t s = 0; s < *states; ++s) {
    if (tester.is_unit_coeffs(cur.coeffs.data())) units.push_back(cur);
    for (std::uint32_t pos = dim; pos-- > 0;) {
      if (++digits[pos] < q) {
        std::uint64_t d = digits[pos];
        for (unsigned w = 0; w < k; ++w) {
          cur.coeffs[std::size_t{pos} * k + w] = static_cast<std::uint32_t>(d % ctx.p());
          d /= ctx.p();
        }
        break;
      }
      digits[pos] = 0;
      ctx.r_zero(cur.coeffs.data() + std::size_t{pos} * k);
    }
  }
  return units;
}

namespace {

// Indexed multiplicative set with product lookup.
struct IndexedSet {
  const FieldCtx* ctx;
  const Group* grp;
  const std::vector<AlgElem>* elems;
  std::unordered_map<AlgElem, std::uint32_t, AlgElemHash> index;
  std::uint32_t id = 0;

  explicit IndexedSet(const std::vector<AlgElem>& elements) : elems(&elements) {
    if (elements.empty()) fail(errc::not_closed, "empty element set");
    ctx = elements[0].ctx;
    grp = elements[0].grp;
    index.reserve(elements.size() * 2);
    for (std::uint32_t i = 0; i < elements.size(); ++i) {
      if (elements[i].ctx != ctx || elements[i].grp != grp) {
        fail(errc::ctx_mismatch, "mixed contexts in element set");
      }
      if (!index.emplace(elements[i], i).second) {
        fail(errc::not_closed, "duplicate element in set");
      }
    }
    const auto it = index.find(alg_one(*ctx, *grp));
    if (it == index.end()) fail(errc::not_closed, "identity not in set");
    id = it->second;
  }

  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    const AlgElem prod = alg_mul((*elems)[a], (*elems)[b]);
    const auto it = index.find(prod);
    if (it == index.end()) fail(errc::not_closed, "product escapes the set");
    return it->second;
  }

  std::uint32_t pow(std::uint32_t a, std::uint64_t e) const {
    std::uint32_t acc = id, base = a;
    while (e) {
      if (e & 1) acc = mul(acc, base);
      base = mul(base, base);
      e >>= 1;
    }
    return acc;
  }
};

std::vector<std::uint32_t> closure_indices(const IndexedSet& set,
                                           const std::vector<std::uint32_t>& gens,
                                           const std::vector<std::uint32_t>& inv) {
  std::vector<bool> in(set.elems->size(), false);
  in[set.id] = true;
  std::vector<std::uint32_t> frontier{set.id};
  std::vector<std::uint32_t> step;
  for (auto g : gens) {
    step.push_back(g);
    step.push_back(inv[g]);
  }
  for (std::size_t head = 0; head < frontier.size(); ++head) {
    for (auto s : step) {
      const std::uint32_t b = set.mul(frontier[head], s);
      if (!in[b]) {
        in[b] = true;
        frontier.push_back(b);
      }
    }
  }
  std::sort(frontier.begin(), frontier.end());
  return frontier;
}

}  // namespace

GroupAnalysis analyze_group(const std::vector<AlgElem>& elements, std::uint64_t pair_budget,
                            std::uint64_t seed) {
  IndexedSet set(elements);
  const std::uint32_t m = static_cast<std::uint32_t>(elements.size());
  GroupAnalysis out;
  out.order = m;

  // closure
  const std::uint64_t total_pairs = std::uint64_t{m} * m;
  if (total_pairs <= pair_budget) {
    for (std::uint32_t a = 0; a < m; ++a) {
      for (std::uint32_t b = 0; b < m; ++b) set.mul(a, b);
    }
    out.closure_exhaustive = true;
  } else {
    CounterRng rng{seed};
    for (std::uint64_t i = 0; i < 10000; ++i) {
      set.mul(static_cast<std::uint32_t>(rng.below(2 * i, m)),
              static_cast<std::uint32_t>(rng.below(2 * i + 1, m)));
    }
    out.closure_exhaustive = false;
  }

  // element orders and inverses
  std::vector<std::uint32_t> ord(m, 1), inv(m, set.id);
  BigInt exponent = 1;
  for (std::uint32_t a = 0; a < m; ++a) {
    if (a == set.id) continue;
    std::uint32_t prev = a, cur = set.mul(a, a), o = 2;
    while (cur != set.id) {
      prev = cur;
      cur = set.mul(cur, a);
      ++o;
      if (o > m + 1) fail(errc::not_closed, "power chain exceeds set size");
    }
    ord[a] = o;
    inv[a] = prev;
    exponent = bigint_lcm(exponent, BigInt(o));
  }
  out.exponent = exponent;

  // generating set (greedy)
  std::vector<std::uint32_t> gens;
  std::vector<std::uint32_t> members{set.id};
  for (std::uint32_t cand = 0; cand < m && members.size() < m; ++cand) {
    if (std::binary_search(members.begin(), members.end(), cand)) continue;
    gens.push_back(cand);
    members = closure_indices(set, gens, inv);
  }

  // center
  std::uint32_t center = 0;
  for (std::uint32_t a = 0; a < m; ++a) {
    bool commutes = true;
    for (auto g : gens) {
      if (set.mul(a, g) != set.mul(g, a)) {
        commutes = false;
        break;
      }
    }
    center += commutes;
  }
  out.center_order = center;
  out.is_abelian = (center == m);

  // derived subgroup: normal closure of generator commutators
  std::vector<std::uint32_t> seeds;
  for (auto a : gens) {
    for (auto b : gens) {
      seeds.push_back(set.mul(set.mul(inv[a], inv[b]), set.mul(a, b)));
    }
  }
  std::vector<std::uint32_t> derived = closure_indices(set, seeds, inv);
  for (;;) {
    std::vector<std::uint32_t> extra;
    for (auto d : derived) {
      for (auto g : gens) {
        const std::uint32_t conj = set.mul(set.mul(inv[g], d), g);
        if (!std::binary_search(derived.begin(), derived.end(), conj)) extra.push_back(conj);
      }
    }
    if (extra.empty()) break;
    std::vector<std::uint32_t> all = derived;
    all.insert(all.end(), extra.begin(), extra.end());
    derived = closure_indices(set, all, inv);
  }
  out.derived_order = derived.size();

  // abelianization invariants: quotient by the derived subgroup, then the
  // elementary-divisor census per prime
  std::vector<std::uint32_t> coset_rep(m);
  for (std::uint32_t a = 0; a < m; ++a) {
    std::uint32_t best = UINT32_MAX;
    for (auto d : derived) best = std::min(best, set.mul(a, d));
    coset_rep[a] = best;
  }
  std::vector<std::uint32_t> quotient;  // distinct representatives
  for (std::uint32_t a = 0; a < m; ++a) {
    if (coset_rep[a] == a) quotient.push_back(a);
  }
  const std::uint64_t qn = quotient.size();
  std::unordered_map<std::uint32_t, std::uint32_t> qidx;
  for (std::uint32_t i = 0; i < quotient.size(); ++i) qidx[quotient[i]] = i;
  auto qmul = [&](std::uint32_t a, std::uint32_t b) {
    return coset_rep[set.mul(quotient[a], quotient[b])];
  };
  auto qpow = [&](std::uint32_t a, std::uint64_t e) {
    std::uint32_t acc = qidx.at(coset_rep[set.id]), base = a;
    while (e) {
      if (e & 1) acc = qidx.at(qmul(acc, base));
      base = qidx.at(qmul(base, base));
      e >>= 1;
    }
    return acc;
  };
  std::vector<BigInt> invariants;
  const std::uint32_t q_id = qidx.at(coset_rep[set.id]);
  for (auto [prime, mult] : factorize(qn)) {
    // N_j = #{x : x^(prime^j) = 1}; a_j = log_prime(N_j/N_{j-1}) is the
    // conjugate partition of the p-part's cyclic decomposition
    std::vector<std::uint64_t> a_seq;
    std::uint64_t prev_count = 1;
    std::uint64_t pe = 1;
    for (unsigned j = 1; j <= mult; ++j) {
      pe *= prime;
      std::uint64_t count = 0;
      for (std::uint32_t x = 0; x < qn; ++x) count += (qpow(x, pe) == q_id);
      std::uint64_t ratio = count / prev_count;
      std::uint64_t aj = 0;
      while (ratio > 1) {
        ratio /= prime;
        ++aj;
      }
      a_seq.push_back(aj);
      prev_count = count;
      if (count == qn || aj == 0) break;
    }
    const std::uint64_t rows = a_seq.empty() ? 0 : a_seq[0];
    for (std::uint64_t i = 1; i <= rows; ++i) {
      std::uint64_t lambda = 0;
      for (auto aj : a_seq) lambda += (aj >= i);
      invariants.push_back(bigint_pow(BigInt(prime), lambda));
    }
  }
  std::sort(invariants.begin(), invariants.end());
  out.abelianization_invariants = std::move(invariants);
  return out;
}

// ---------------------------------------------------------------------------
// characteristic-3 subgroup constructions
// ---------------------------------------------------------------------------

namespace {

// 1 + span(basis): enumeration, membership, sampling.
struct AffineSubgroup {
  const FieldCtx* ctx;
  const Group* grp;
  std::vector<AlgElem> basis;
  RREF span;
  AlgElem one;

  AffineSubgroup(const FieldCtx& c, const Group& g, std::vector<AlgElem> b)
      : ctx(&c), grp(&g), basis(std::move(b)), span(c, g.order()), one(alg_one(c, g)) {
    for (const auto& v : basis) span.add(v.coeffs.data());
  }

  std::size_t rank() const { return span.rank(); }
  BigInt size() const { return bigint_pow(BigInt(ctx->q()), rank()); }

  bool contains(const AlgElem& u) const {
    const AlgElem shifted = alg_sub(u, one);
    return span.contains(shifted.coeffs.data());
  }

  // element for a base-q digit vector over the basis
  AlgElem element_from_digits(const std::vector<std::uint64_t>& digits) const {
    AlgElem u = one;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      if (!digits[i]) continue;
      u = alg_add(u, alg_scale(ctx->element(digits[i]), basis[i]));
    }
    return u;
  }

  AlgElem element_at(std::uint64_t index) const {
    std::vector<std::uint64_t> digits(basis.size(), 0);
    for (std::size_t i = 0; i < basis.size(); ++i) {
      digits[i] = index % ctx->q();
      index /= ctx->q();
    }
    return element_from_digits(digits);
  }

  AlgElem random_member(const CounterRng& rng, std::uint64_t counter) const {
    std::vector<std::uint64_t> digits(basis.size(), 0);
    for (std::size_t i = 0; i < basis.size(); ++i) {
      digits[i] = rng.below((counter << 16) + i, ctx->q());
    }
    return element_from_digits(digits);
  }

  std::vector<AlgElem> enumerate(std::uint64_t cap) const {
    const auto states = state_count(ctx->q(), rank(), cap);
    if (!states) fail(errc::size_bound, "affine subgroup too large to enumerate");
    std::vector<AlgElem> out;
    out.reserve(*states);
    for (std::uint64_t s = 0; s < *states; ++s) out.push_back(element_at(s));
    return out;
  }
};

struct Char3Setup {
  FieldPtr ctx;
  GroupPtr grp;
  GroupElem x, y, z;
  std::vector<std::uint32_t> k_subgroup;  // <x> or <x^2>
  Ideal omega;

  Char3Setup(std::uint32_t k, GroupFamily family, std::uint64_t n)
      : ctx(FieldCtx::make(3, k)),
        grp(make_group(family, n)),
        omega(Ideal::zero(*ctx, *grp)) {
    if (family != GroupFamily::q12 && family != GroupFamily::d12) {
      fail(errc::invalid_argument, "characteristic-3 constructions need q12 or d12");
    }
    x = grp->gen_x();
    y = grp->gen_y();
    z = grp->spec().n > 1 ? grp->gen_z() : grp->identity();
    const GroupElem k_gen = (family == GroupFamily::q12) ? x : grp->mul(x, x);
    k_subgroup = subgroup_closure(*grp, {grp->index_of(k_gen)});
    omega = omega_basis(*ctx, *grp, k_subgroup);
  }

  AlgElem term(const GroupElem& e) const { return alg_term(*ctx, *grp, e); }
  AlgElem term_pow(const GroupElem& e, std::uint64_t a) const {
    return alg_term(*ctx, *grp, grp->pow(e, a));
  }
  AlgElem khat() const { return group_sum(*ctx, *grp, k_subgroup); }
};

// C_V(x) basis for C_n x Q12:
//   (x^i - 1) y^{2j} z^l  (i = 1,2; j = 0,1; l < n)
//   xhat y^{2j+1} z^l     (j = 0,1; l < n)
std::vector<AlgElem> cv_basis_q12(const Char3Setup& su) {
  const std::uint64_t n = su.grp->spec().n;
  std::vector<AlgElem> basis;
  const AlgElem one = alg_one(*su.ctx, *su.grp);
  const AlgElem xhat = su.khat();
  for (std::uint64_t l = 0; l < n; ++l) {
    const AlgElem zl = su.term_pow(su.z, l);
    for (std::uint32_t j = 0; j <= 1; ++j) {
      for (std::uint32_t i = 1; i <= 2; ++i) {
        const AlgElem xi = alg_sub(su.term_pow(su.x, i), one);
        basis.push_back(alg_mul(alg_mul(xi, su.term_pow(su.y, 2 * j)), zl));
      }
    }
    for (std::uint32_t j = 0; j <= 1; ++j) {
      basis.push_back(alg_mul(alg_mul(xhat, su.term_pow(su.y, 2 * j + 1)), zl));
    }
  }
  return basis;
}

// C_V(x^2) basis for C_n x D12:
//   (x^{2i} - 1) z^j, (x^{2i} - 1) x^3 z^j        (i = 1,2; j < n)
//   x2hat x^{3i} y z^j                            (i = 0,1; j < n)
std::vector<AlgElem> cv_basis_d12(const Char3Setup& su) {
  const std::uint64_t n = su.grp->spec().n;
  std::vector<AlgElem> basis;
  const AlgElem one = alg_one(*su.ctx, *su.grp);
  const AlgElem x2hat = su.khat();
  const AlgElem x3 = su.term_pow(su.x, 3);
  for (std::uint64_t j = 0; j < n; ++j) {
    const AlgElem zj = su.term_pow(su.z, j);
    for (std::uint32_t i = 1; i <= 2; ++i) {
      const AlgElem x2i = alg_sub(su.term_pow(su.x, 2 * i), one);
      basis.push_back(alg_mul(x2i, zj));
      basis.push_back(alg_mul(alg_mul(x2i, x3), zj));
    }
    for (std::uint32_t i = 0; i <= 1; ++i) {
      basis.push_back(
          alg_mul(alg_mul(alg_mul(x2hat, su.term_pow(su.x, 3 * i)), su.term(su.y)), zj));
    }
  }
  return basis;
}

// T basis for C_n x Q12:
//   xhat z^j, xhat y^2 z^j, (x + 2x^2) y z^j, (x + 2x^2) y^3 z^j
std::vector<AlgElem> t_basis_q12(const Char3Setup& su) {
  const std::uint64_t n = su.grp->spec().n;
  std::vector<AlgElem> basis;
  const AlgElem xhat = su.khat();
  const AlgElem two = alg_scale(su.ctx->from_int(2), su.term_pow(su.x, 2));
  const AlgElem x_plus_2x2 = alg_add(su.term(su.x), two);
  for (std::uint64_t j = 0; j < n; ++j) {
    const AlgElem zj = su.term_pow(su.z, j);
    basis.push_back(alg_mul(xhat, zj));
    basis.push_back(alg_mul(alg_mul(xhat, su.term_pow(su.y, 2)), zj));
    basis.push_back(alg_mul(alg_mul(x_plus_2x2, su.term(su.y)), zj));
    basis.push_back(alg_mul(alg_mul(x_plus_2x2, su.term_pow(su.y, 3)), zj));
  }
  return basis;
}

// U = C_V(x) cap T basis: xhat z^j, xhat y^2 z^j
std::vector<AlgElem> u_basis_q12(const Char3Setup& su) {
  const std::uint64_t n = su.grp->spec().n;
  std::vector<AlgElem> basis;
  const AlgElem xhat = su.khat();
  for (std::uint64_t j = 0; j < n; ++j) {
    const AlgElem zj = su.term_pow(su.z, j);
    basis.push_back(alg_mul(xhat, zj));
    basis.push_back(alg_mul(alg_mul(xhat, su.term_pow(su.y, 2)), zj));
  }
  return basis;
}

// S basis for C_n x D12: x^2 (1 - x^2) (1 + y) z^j and x^2 (1 - x^2) x^3 (1 + y) z^j
std::vector<AlgElem> s_basis_d12(const Char3Setup& su) {
  const std::uint64_t n = su.grp->spec().n;
  std::vector<AlgElem> basis;
  const AlgElem one = alg_one(*su.ctx, *su.grp);
  const AlgElem x2 = su.term_pow(su.x, 2);
  const AlgElem head = alg_mul(x2, alg_sub(one, x2));  // x^2 - x^4
  const AlgElem one_plus_y = alg_add(one, su.term(su.y));
  const AlgElem x3 = su.term_pow(su.x, 3);
  for (std::uint64_t j = 0; j < n; ++j) {
    const AlgElem zj = su.term_pow(su.z, j);
    basis.push_back(alg_mul(alg_mul(head, one_plus_y), zj));
    basis.push_back(alg_mul(alg_mul(alg_mul(head, x3), one_plus_y), zj));
  }
  return basis;
}

bool is_cube_one(const FieldCtx& ctx, const Group& grp, const AlgElem& v) {
  const AlgElem v2 = alg_mul(v, v);
  return alg_mul(v2, v) == alg_one(ctx, grp);
}

}  // namespace

SubgroupReport v_subgroup(std::uint32_t k, GroupFamily family, std::uint64_t n,
                          const SubgroupOptions& opts) {
  Char3Setup su(k, family, n);
  SubgroupReport rep;
  rep.name = "V";
  rep.predicted_order = bigint_pow(BigInt(3), 8 * n * k);
  const std::size_t dim = su.omega.dim();
  if (dim != 8 * n) {
    rep.pass = false;
    rep.detail = "omega(K) dimension " + std::to_string(dim) + " != " + std::to_string(8 * n);
    return rep;
  }
  AffineSubgroup v(*su.ctx, *su.grp, su.omega.basis_elems());
  const AlgElem one = alg_one(*su.ctx, *su.grp);
  const BigInt size = v.size();
  bool cubes_ok = true, units_ok = true, nontrivial = false, closure_ok = true;
  if (size <= opts.enum_cap) {
    rep.exhaustive = true;
    auto members = v.enumerate(opts.enum_cap);
    std::unordered_set<AlgElem, AlgElemHash> distinct;
    for (const auto& m : members) {
      distinct.insert(m);
      units_ok = units_ok && is_unit(m);
      cubes_ok = cubes_ok && is_cube_one(*su.ctx, *su.grp, m);
      nontrivial = nontrivial || !(m == one);
    }
    rep.verified_count = BigInt(distinct.size());
    // spot-check closure within the pair budget
    CounterRng rng{opts.seed};
    const std::uint64_t pairs = std::min<std::uint64_t>(opts.samples, opts.pair_budget);
    for (std::uint64_t i = 0; i < pairs; ++i) {
      const auto& a = members[rng.below(2 * i, members.size())];
      const auto& b = members[rng.below(2 * i + 1, members.size())];
      if (!v.contains(alg_mul(a, b))) {
        closure_ok = false;
        break;
      }
    }
  } else {
    rep.exhaustive = false;
    CounterRng rng{opts.seed};
    for (std::uint64_t i = 0; i < opts.samples; ++i) {
      const AlgElem m = v.random_member(rng, i);
      units_ok = units_ok && is_unit(m);
      cubes_ok = cubes_ok && is_cube_one(*su.ctx, *su.grp, m);
      nontrivial = nontrivial || !(m == one);
      const AlgElem m2 = v.random_member(rng, i + (std::uint64_t{1} << 40));
      closure_ok = closure_ok && v.contains(alg_mul(m, m2));
      if (!units_ok || !cubes_ok || !closure_ok) break;
    }
    rep.verified_count = BigInt(opts.samples);
  }
  rep.all_units = units_ok;
  rep.closure_ok = closure_ok;
  rep.is_abelian = false;  // not claimed
  rep.exponent = (cubes_ok && nontrivial) ? BigInt(3) : BigInt(0);
  rep.pass = units_ok && cubes_ok && nontrivial && closure_ok &&
             (!rep.exhaustive || rep.verified_count == rep.predicted_order);
  if (!rep.pass && rep.detail.empty()) rep.detail = "V verification failed";
  return rep;
}

SubgroupReport cv_subgroup(std::uint32_t k, GroupFamily family, std::uint64_t n,
                           const SubgroupOptions& opts) {
  Char3Setup su(k, family, n);
  SubgroupReport rep;
  rep.name = family == GroupFamily::q12 ? "C_V(x)" : "C_V(x^2)";
  rep.predicted_order = bigint_pow(BigInt(3), 6 * n * k);
  auto basis = (family == GroupFamily::q12) ? cv_basis_q12(su) : cv_basis_d12(su);
  AffineSubgroup cv(*su.ctx, *su.grp, std::move(basis));
  if (cv.rank() != 6 * n) {
    rep.pass = false;
    rep.detail = "centralizer basis rank " + std::to_string(cv.rank()) + " != " +
                 std::to_string(6 * n);
    return rep;
  }
  const GroupElem cg =
      (family == GroupFamily::q12) ? su.x : su.grp->mul(su.x, su.x);
  const AlgElem cterm = su.term(cg);
  const BigInt size = cv.size();
  bool commutes_ok = true, in_v_ok = true, abelian_ok = true;
  if (size <= opts.enum_cap) {
    rep.exhaustive = true;
    auto members = cv.enumerate(opts.enum_cap);
    std::unordered_set<AlgElem, AlgElemHash> distinct;
    for (const auto& m : members) {
      distinct.insert(m);
      commutes_ok = commutes_ok && (alg_mul(m, cterm) == alg_mul(cterm, m));
      in_v_ok = in_v_ok && su.omega.contains(alg_sub(m, alg_one(*su.ctx, *su.grp)));
    }
    rep.verified_count = BigInt(distinct.size());
    const std::uint64_t count = members.size();
    if (count * count <= opts.pair_budget) {
      for (std::size_t a = 0; a < members.size() && abelian_ok; ++a) {
        for (std::size_t b = a + 1; b < members.size(); ++b) {
          if (!(alg_mul(members[a], members[b]) == alg_mul(members[b], members[a]))) {
            abelian_ok = false;
            break;
          }
        }
      }
    } else {
      CounterRng rng{opts.seed};
      for (std::uint64_t i = 0; i < opts.samples && abelian_ok; ++i) {
        const auto& a = members[rng.below(2 * i, members.size())];
        const auto& b = members[rng.below(2 * i + 1, members.size())];
        abelian_ok = alg_mul(a, b) == alg_mul(b, a);
      }
    }
  } else {
    rep.exhaustive = false;
    CounterRng rng{opts.seed};
    for (std::uint64_t i = 0; i < opts.samples; ++i) {
      const AlgElem a = cv.random_member(rng, 2 * i);
      const AlgElem b = cv.random_member(rng, 2 * i + 1);
      commutes_ok = commutes_ok && (alg_mul(a, cterm) == alg_mul(cterm, a));
      in_v_ok = in_v_ok && su.omega.contains(alg_sub(a, alg_one(*su.ctx, *su.grp)));
      abelian_ok = abelian_ok && (alg_mul(a, b) == alg_mul(b, a));
      if (!commutes_ok || !in_v_ok || !abelian_ok) break;
    }
    rep.verified_count = BigInt(opts.samples);
  }
  rep.all_units = in_v_ok;  // members of 1 + omega(K) with omega nilpotent
  rep.closure_ok = true;
  rep.is_abelian = abelian_ok;
  rep.exponent = BigInt(3);
  rep.pass = commutes_ok && in_v_ok && abelian_ok &&
             (!rep.exhaustive || rep.verified_count == rep.predicted_order);
  if (!rep.pass && rep.detail.empty()) rep.detail = "centralizer verification failed";
  return rep;
}

ProofSubgroups proof_subgroups(std::uint32_t k, GroupFamily family, std::uint64_t n,
                               const SubgroupOptions& opts) {
  Char3Setup su(k, family, n);
  ProofSubgroups out;
  const AlgElem one = alg_one(*su.ctx, *su.grp);
  const bool q12 = family == GroupFamily::q12;

  AffineSubgroup cv(*su.ctx, *su.grp, q12 ? cv_basis_q12(su) : cv_basis_d12(su));
  AffineSubgroup ts(*su.ctx, *su.grp, q12 ? t_basis_q12(su) : s_basis_d12(su));

  const std::uint64_t expected_rank = q12 ? 4 * n : 2 * n;
  SubgroupReport& trep = out.t_or_s;
  trep.name = q12 ? "T" : "S";
  trep.predicted_order = bigint_pow(BigInt(3), expected_rank * k);
  trep.exhaustive = ts.size() <= opts.enum_cap;
  bool rank_ok = (ts.rank() == expected_rank);

  // closure & exponent
  bool closure_ok = true, cubes_ok = true, abelian_ok = true;
  std::vector<AlgElem> t_members;
  if (trep.exhaustive) {
    t_members = ts.enumerate(opts.enum_cap);
    std::unordered_set<AlgElem, AlgElemHash> distinct(t_members.begin(), t_members.end());
    trep.verified_count = BigInt(distinct.size());
    const std::uint64_t pairs = std::uint64_t{t_members.size()} * t_members.size();
    if (pairs <= opts.pair_budget) {
      for (std::size_t a = 0; a < t_members.size() && closure_ok; ++a) {
        for (std::size_t b = 0; b < t_members.size(); ++b) {
          const AlgElem prod = alg_mul(t_members[a], t_members[b]);
          if (!ts.contains(prod)) {
            closure_ok = false;
            break;
          }
          if (b >= a && !(prod == alg_mul(t_members[b], t_members[a]))) {
            abelian_ok = false;
          }
        }
      }
    } else {
      CounterRng rng{opts.seed};
      for (std::uint64_t i = 0; i < opts.samples && closure_ok; ++i) {
        const auto& a = t_members[rng.below(2 * i, t_members.size())];
        const auto& b = t_members[rng.below(2 * i + 1, t_members.size())];
        closure_ok = ts.contains(alg_mul(a, b));
        abelian_ok = abelian_ok && (alg_mul(a, b) == alg_mul(b, a));
      }
    }
    for (const auto& m : t_members) {
      cubes_ok = cubes_ok && is_cube_one(*su.ctx, *su.grp, m);
      if (!cubes_ok) break;
    }
  } else {
    CounterRng rng{opts.seed ^ 0x5eed};
    trep.verified_count = BigInt(opts.samples);
    for (std::uint64_t i = 0; i < opts.samples; ++i) {
      const AlgElem a = ts.random_member(rng, 2 * i);
      const AlgElem b = ts.random_member(rng, 2 * i + 1);
      closure_ok = closure_ok && ts.contains(alg_mul(a, b));
      abelian_ok = abelian_ok && (alg_mul(a, b) == alg_mul(b, a));
      cubes_ok = cubes_ok && is_cube_one(*su.ctx, *su.grp, a);
      if (!closure_ok || !abelian_ok || !cubes_ok) break;
    }
  }
  trep.closure_ok = closure_ok;
  trep.is_abelian = abelian_ok;
  trep.exponent = cubes_ok ? BigInt(3) : BigInt(0);
  trep.all_units = true;
  trep.pass = rank_ok && closure_ok && abelian_ok && cubes_ok &&
              (!trep.exhaustive || trep.verified_count == trep.predicted_order);
  if (!trep.pass) trep.detail = "subgroup verification failed";

  // intersection and complement
  SubgroupReport& irep = out.intersection;
  if (q12) {
    irep.name = "C_V(x) cap T";
    irep.predicted_order = bigint_pow(BigInt(3), 2 * n * k);
    AffineSubgroup u(*su.ctx, *su.grp, u_basis_q12(su));
    bool u_ok = (u.rank() == 2 * n);
    // U lies in both C_V and T
    for (const auto& b : u.basis) {
      u_ok = u_ok && cv.span.contains(b.coeffs.data()) && ts.span.contains(b.coeffs.data());
    }
    // dim(C_V + T) = 6n + 4n - 2n forces U to be the whole intersection
    RREF joint(*su.ctx, su.grp->order());
    for (const auto& b : cv.basis) joint.add(b.coeffs.data());
    for (const auto& b : ts.basis) joint.add(b.coeffs.data());
    u_ok = u_ok && (joint.rank() == cv.rank() + ts.rank() - u.rank());
    irep.verified_count = u.size();
    irep.exhaustive = true;
    irep.all_units = true;
    irep.closure_ok = true;
    irep.is_abelian = true;
    irep.exponent = BigInt(3);
    irep.pass = u_ok;
    if (!u_ok) irep.detail = "intersection parametrization failed";

    // complement W of U inside T (T is elementary abelian of exponent 3)
    if (trep.exhaustive && u_ok) {
      const BigInt w_target = trep.predicted_order / irep.predicted_order;
      std::vector<AlgElem> w_members{one};
      std::unordered_set<AlgElem, AlgElemHash> w_set{one};
      for (const auto& t : t_members) {
        if (BigInt(w_members.size()) >= w_target) break;
        if (w_set.count(t)) continue;
        // candidate subgroup <W, t>
        std::vector<AlgElem> cand = w_members;
        const AlgElem t2 = alg_mul(t, t);
        for (const auto& w : w_members) {
          cand.push_back(alg_mul(w, t));
          cand.push_back(alg_mul(w, t2));
        }
        bool meets_u = false;
        for (const auto& c : cand) {
          if (c == one) continue;
          if (u.contains(c)) {
            meets_u = true;
            break;
          }
        }
        if (meets_u) continue;
        w_members = std::move(cand);
        w_set.clear();
        for (const auto& w : w_members) w_set.insert(w);
      }
      out.w_found = BigInt(w_members.size()) == w_target;
      out.w_order = BigInt(w_members.size());
      // C_V cap W = 1 and |C_V * W| = |V|
      bool meet_ok = true;
      for (const auto& w : w_members) {
        if (w == one) continue;
        if (cv.contains(w)) {
          meet_ok = false;
          break;
        }
      }
      out.trivial_meet = meet_ok;
      if (cv.size() * BigInt(w_members.size()) <= opts.pair_budget &&
          cv.size() <= opts.enum_cap) {
        auto cv_members = cv.enumerate(opts.enum_cap);
        std::unordered_set<AlgElem, AlgElemHash> products;
        AffineSubgroup v(*su.ctx, *su.grp, su.omega.basis_elems());
        bool in_v = true;
        for (const auto& c : cv_members) {
          for (const auto& w : w_members) {
            AlgElem prod = alg_mul(c, w);
            in_v = in_v && v.contains(prod);
            products.insert(std::move(prod));
          }
        }
        out.product_checked = true;
        out.product_covers_v =
            in_v && BigInt(products.size()) == bigint_pow(BigInt(3), 8 * n * k);
      }
    }
  } else {
    irep.name = "C_V(x^2) cap S";
    irep.predicted_order = BigInt(1);
    irep.verified_count = BigInt(1);
    irep.exhaustive = trep.exhaustive;
    irep.all_units = true;
    irep.closure_ok = true;
    irep.is_abelian = true;
    irep.exponent = BigInt(1);
    bool meet_ok = true;
    if (trep.exhaustive) {
      for (const auto& s : t_members) {
        if (s == one) continue;
        if (cv.contains(s)) {
          meet_ok = false;
          break;
        }
      }
    } else {
      CounterRng rng{opts.seed ^ 0xD12};
      for (std::uint64_t i = 0; i < opts.samples; ++i) {
        const AlgElem s = ts.random_member(rng, i);
        if (!(s == one) && cv.contains(s)) {
          meet_ok = false;
          break;
        }
      }
    }
    irep.pass = meet_ok;
    out.trivial_meet = meet_ok;
    if (!meet_ok) irep.detail = "intersection is nontrivial";

    // |C_V * S| = |V|
    if (trep.exhaustive && cv.size() <= opts.enum_cap &&
        cv.size() * BigInt(t_members.size()) <= opts.pair_budget) {
      auto cv_members = cv.enumerate(opts.enum_cap);
      std::unordered_set<AlgElem, AlgElemHash> products;
      AffineSubgroup v(*su.ctx, *su.grp, su.omega.basis_elems());
      bool in_v = true;
      for (const auto& c : cv_members) {
        for (const auto& s : t_members) {
          AlgElem prod = alg_mul(c, s);
          in_v = in_v && v.contains(prod);
          products.insert(std::move(prod));
        }
      }
      out.product_checked = true;
      out.product_covers_v =
          in_v && BigInt(products.size()) == bigint_pow(BigInt(3), 8 * n * k);
    }
  }

  // normalization: c^t in C_V
  {
    const BigInt conj_pairs = cv.size() * ts.size();
    out.conj_exhaustive = conj_pairs <= opts.pair_budget && cv.size() <= opts.enum_cap &&
                          trep.exhaustive;
    bool norm_ok = true;
    if (out.conj_exhaustive) {
      auto cv_members = cv.enumerate(opts.enum_cap);
      std::uint64_t checked = 0;
      for (const auto& t : t_members) {
        const AlgElem t_inv = alg_mul(t, t);  // exponent 3
        for (const auto& c : cv_members) {
          const AlgElem conj = alg_mul(alg_mul(t_inv, c), t);
          if (!cv.contains(conj)) {
            norm_ok = false;
            break;
          }
          ++checked;
        }
        if (!norm_ok) break;
      }
      out.conj_checked = checked;
    } else {
      CounterRng rng{opts.seed ^ 0xC0};
      std::uint64_t checked = 0;
      for (std::uint64_t i = 0; i < opts.samples; ++i) {
        const AlgElem c = cv.random_member(rng, 2 * i);
        const AlgElem t = ts.random_member(rng, 2 * i + 1);
        const AlgElem t_inv = alg_mul(t, t);
        const AlgElem conj = alg_mul(alg_mul(t_inv, c), t);
        if (!cv.contains(conj)) {
          norm_ok = false;
          break;
        }
        ++checked;
      }
      out.conj_checked = checked;
    }
    out.normalizes = norm_ok;
  }

  out.pass = trep.pass && irep.pass && out.normalizes &&
             (!out.product_checked || out.product_covers_v) &&
             (q12 ? (!trep.exhaustive || (out.w_found && out.trivial_meet))
                  : out.trivial_meet);
  if (!out.pass && out.detail.empty()) out.detail = "proof subgroup suite failed";
  return out;
}

SplitReport verify_split(std::uint64_t p, std::uint32_t k, GroupFamily family, std::uint64_t n,
                         const std::vector<GroupElem>& k_gens, const SubgroupOptions& opts) {
  auto ctx = FieldCtx::make(p, k);
  auto grp = make_group(family, n);
  const ThetaMap theta = ThetaMap::make(*ctx, grp, k_gens);
  SplitReport rep;
  if (!theta.has_subgroup_section()) {
    rep.pass = false;
    rep.witness = "no complement subgroup found for the section";
    return rep;
  }
  const Group& h = *theta.quotient();
  const auto states = state_count(ctx->q(), h.order(), opts.enum_cap);
  std::uint64_t checked = 0;
  bool ok = true;
  std::string witness;
  auto check_unit = [&](const AlgElem& u) {
    const AlgElem lifted = theta.section(u);
    if (!is_unit(lifted)) {
      ok = false;
      witness = "section image of a unit is not a unit";
      return;
    }
    if (!(theta.apply(lifted) == u)) {
      ok = false;
      witness = "theta(section(u)) != u";
      return;
    }
    ++checked;
  };
  if (states) {
    rep.exhaustive = true;
    for (const auto& u : enumerate_units(*ctx, h, opts.enum_cap)) {
      check_unit(u);
      if (!ok) break;
    }
  } else {
    rep.exhaustive = false;
    CounterRng rng{opts.seed};
    const unsigned kk = ctx->degree();
    std::uint64_t attempts = 0;
    const std::uint64_t max_attempts = opts.samples * 100;
    AlgElem u = alg_zero(*ctx, h);
    while (checked < opts.samples && attempts < max_attempts && ok) {
      for (std::uint32_t i = 0; i < h.order(); ++i) {
        for (unsigned w = 0; w < kk; ++w) {
          u.coeffs[std::size_t{i} * kk + w] =
              static_cast<std::uint32_t>(CounterRng{opts.seed}.below(
                  (attempts << 20) + std::size_t{i} * kk + w, ctx->p()));
        }
      }
      ++attempts;
      if (!is_unit(u)) continue;
      check_unit(u);
    }
    if (checked < opts.samples && ok) {
      ok = false;
      witness = "could not draw enough units";
    }
  }
  rep.pass = ok;
  rep.units_checked = checked;
  rep.witness = witness;
  return rep;
}

RadicalReport radical_verify(std::uint64_t p, std::uint32_t k, GroupFamily family,
                             std::uint64_t n) {
  if (p <= 3) fail(errc::small_characteristic, "radical identification needs p > 3");
  if (family != GroupFamily::q12 && family != GroupFamily::d12) {
    fail(errc::invalid_argument, "radical_verify expects q12 or d12");
  }
  const CaseInput ci = CaseInput::make(p, k, n);
  auto ctx = FieldCtx::make(p, k);
  auto grp = make_group(family, n);
  // K = <z^s>; z^s reduces to the identity when r = 0
  const GroupElem z = grp->spec().n > 1 ? grp->gen_z() : grp->identity();
  const GroupElem zs = grp->pow(z, ci.s);
  const auto k_sub = subgroup_closure(*grp, {grp->index_of(zs)});
  const Ideal omega = omega_basis(*ctx, *grp, k_sub);
  RadicalReport rep;
  rep.dim = omega.dim();
  rep.expected_dim = 12 * ci.s * (ci.pr - 1);
  rep.quotient_dim = grp->order() - omega.dim();
  rep.expected_quotient_dim = 12 * ci.s;
  rep.nilpotency_index =
      ideal_nilpotency(omega, static_cast<std::uint32_t>(ci.pr) + 1);
  rep.pass = rep.dim == rep.expected_dim && rep.quotient_dim == rep.expected_quotient_dim &&
             rep.nilpotency_index.has_value() && (ci.r > 0 || rep.dim == 0);
  return rep;
}

bool v_coefficient_criterion(const AlgElem& u, const CosetDecomposition& cosets) {
  const FieldCtx& ctx = *u.ctx;
  std::vector<std::uint32_t> sum(ctx.degree());
  for (std::size_t c = 0; c < cosets.cosets.size(); ++c) {
    ctx.r_zero(sum.data());
    for (auto g : cosets.cosets[c]) ctx.r_add(sum.data(), u.slot(g), sum.data());
    if (c == 0) {
      // the identity's coset must sum to 1
      std::vector<std::uint32_t> one(ctx.degree());
      ctx.r_one(one.data());
      if (!ctx.r_eq(sum.data(), one.data())) return false;
    } else if (!ctx.r_is_zero(sum.data())) {
      return false;
    }
  }
  return true;
}

}  // namespace grw
