#include "grw/group.hpp"

#include <algorithm>
#include <map>

namespace grw {

const char* family_name(GroupFamily f) noexcept {
  switch (f) {
    case GroupFamily::q12: return "q12";
    case GroupFamily::d12: return "d12";
    case GroupFamily::c4: return "c4";
    case GroupFamily::c2xc2: return "c2xc2";
    case GroupFamily::cyclic: return "cn";
    case GroupFamily::generic: return "generic";
  }
  return "?";
}

std::optional<GroupFamily> family_from_name(const std::string& name) {
  if (name == "q12") return GroupFamily::q12;
  if (name == "d12") return GroupFamily::d12;
  if (name == "c4") return GroupFamily::c4;
  if (name == "c2xc2" || name == "c2x2") return GroupFamily::c2xc2;
  if (name == "cn" || name == "cyclic" || name == "trivial") return GroupFamily::cyclic;
  return std::nullopt;
}

std::shared_ptr<const Group> Group::make(GroupSpec spec, GroupOptions opts) {
  if (spec.n < 1) fail(errc::range_error, "auxiliary cyclic order n must be >= 1");
  auto g = std::shared_ptr<Group>(new Group());
  g->spec_ = spec;
  const std::uint32_t n = spec.n;
  switch (spec.family) {
    case GroupFamily::q12:
      g->radix_ = {3, 4, n};
      g->label_ = n == 1 ? "Q12" : "C" + std::to_string(n) + " x Q12";
      break;
    case GroupFamily::d12:
      g->radix_ = {6, 2, n};
      g->label_ = n == 1 ? "D12" : "C" + std::to_string(n) + " x D12";
      break;
    case GroupFamily::c4:
      g->radix_ = {4, n, 1};
      g->label_ = n == 1 ? "C4" : "C" + std::to_string(n) + " x C4";
      break;
    case GroupFamily::c2xc2:
      g->radix_ = {2, 2, n};
      g->label_ = n == 1 ? "C2^2" : "C" + std::to_string(n) + " x C2^2";
      break;
    case GroupFamily::cyclic:
      g->radix_ = {n, 1, 1};
      g->label_ = "C" + std::to_string(n);
      break;
    case GroupFamily::generic:
      fail(errc::invalid_argument, "use make_generic for table groups");
  }
  const std::uint64_t order =
      std::uint64_t{g->radix_[0]} * g->radix_[1] * g->radix_[2];
  if (order > opts.order_bound) {
    fail(errc::size_bound, "group order " + std::to_string(order) + " exceeds bound " +
                               std::to_string(opts.order_bound));
  }
  g->order_ = static_cast<std::uint32_t>(order);
  g->finish_construction(opts.table_threshold);
  return g;
}

std::shared_ptr<const Group> Group::make_generic(std::string label,
                                                 std::vector<std::vector<std::uint32_t>> table) {
  auto g = std::shared_ptr<Group>(new Group());
  g->spec_ = GroupSpec{GroupFamily::generic, 1};
  g->label_ = std::move(label);
  const std::uint32_t order = static_cast<std::uint32_t>(table.size());
  if (order == 0) fail(errc::range_error, "empty multiplication table");
  g->order_ = order;
  g->radix_ = {order, 1, 1};
  g->table_.resize(std::size_t{order} * order);
  for (std::uint32_t a = 0; a < order; ++a) {
    if (table[a].size() != order) fail(errc::range_error, "ragged multiplication table");
    for (std::uint32_t b = 0; b < order; ++b) g->table_[std::size_t{a} * order + b] = table[a][b];
  }
  for (std::uint32_t a = 0; a < order; ++a) {
    if (g->table_[std::size_t{a} * order] != a || g->table_[a] != a) {
      fail(errc::range_error, "identity of a table group must be index 0");
    }
  }
  g->finish_construction(0);  // table already present
  return g;
}

void Group::finish_construction(std::uint64_t table_threshold) {
  if (spec_.family != GroupFamily::generic && order_ <= table_threshold) {
    table_.resize(std::size_t{order_} * order_);
    for (std::uint32_t a = 0; a < order_; ++a) {
      for (std::uint32_t b = 0; b < order_; ++b) {
        table_[std::size_t{a} * order_ + b] = mul_raw(a, b);
      }
    }
  }
  // inverse table: walk powers until identity
  inv_.assign(order_, 0);
  for (std::uint32_t a = 0; a < order_; ++a) {
    std::uint32_t prev = a, cur = mul_idx(a, a);
    while (cur != 0 && cur != a) {
      prev = cur;
      cur = mul_idx(cur, a);
    }
    inv_[a] = (cur == 0) ? prev : a;  // a^m = e gives a^-1 = a^(m-1); order-1 elements are e
    if (a == 0) inv_[a] = 0;
  }
  // generating set
  switch (spec_.family) {
    case GroupFamily::q12:
    case GroupFamily::d12:
      generators_ = {index_of(gen_x()), index_of(gen_y())};
      if (spec_.n > 1) generators_.push_back(index_of(gen_z()));
      break;
    case GroupFamily::c4:
    case GroupFamily::c2xc2:
      generators_ = {index_of(gen_x()), index_of(gen_y())};
      if (spec_.family == GroupFamily::c2xc2 && spec_.n > 1) generators_.push_back(index_of(gen_z()));
      break;
    case GroupFamily::cyclic:
      generators_ = {spec_.n > 1 ? 1u : 0u};
      break;
    case GroupFamily::generic: {
      // greedy: extend until the closure is everything
      generators_.clear();
      std::vector<std::uint32_t> closed{0};
      for (std::uint32_t a = 1; a < order_; ++a) {
        if (std::binary_search(closed.begin(), closed.end(), a)) continue;
        generators_.push_back(a);
        closed = subgroup_closure(*this, generators_);
        if (closed.size() == order_) break;
      }
      break;
    }
  }
}

std::uint32_t Group::index_of(const GroupElem& a) const {
  check_elem(a);
  return (a.e[0] * radix_[1] + a.e[1]) * radix_[2] + a.e[2];
}

GroupElem Group::element(std::uint32_t idx) const {
  if (idx >= order_) fail(errc::range_error, "element index out of range");
  GroupElem a;
  a.e[2] = idx % radix_[2];
  idx /= radix_[2];
  a.e[1] = idx % radix_[1];
  a.e[0] = idx / radix_[1];
  return a;
}

std::uint32_t Group::mul_raw(std::uint32_t ia, std::uint32_t ib) const {
  const GroupElem a = element(ia), b = element(ib);
  std::uint32_t i = 0, j = 0, l = 0;
  switch (spec_.family) {
    case GroupFamily::q12: {
      // y^j x^i = x^(i*2^j mod 3) y^j
      const std::uint32_t tw = (a.e[1] & 1u) ? (2 * b.e[0]) % 3 : b.e[0];
      i = (a.e[0] + tw) % 3;
      j = (a.e[1] + b.e[1]) % 4;
      l = (a.e[2] + b.e[2]) % radix_[2];
      break;
    }
    case GroupFamily::d12: {
      // y x^i = x^(6-i) y
      const std::uint32_t tw = (a.e[1] & 1u) ? (6 - b.e[0]) % 6 : b.e[0];
      i = (a.e[0] + tw) % 6;
      j = (a.e[1] + b.e[1]) % 2;
      l = (a.e[2] + b.e[2]) % radix_[2];
      break;
    }
    default:
      i = (a.e[0] + b.e[0]) % radix_[0];
      j = (a.e[1] + b.e[1]) % radix_[1];
      l = (a.e[2] + b.e[2]) % radix_[2];
      break;
  }
  return (i * radix_[1] + j) * radix_[2] + l;
}

std::uint32_t Group::mul_idx(std::uint32_t a, std::uint32_t b) const {
  if (!table_.empty()) return table_[std::size_t{a} * order_ + b];
  return mul_raw(a, b);
}

GroupElem Group::mul(const GroupElem& a, const GroupElem& b) const {
  return element(mul_idx(index_of(a), index_of(b)));
}

std::uint32_t Group::inv_idx(std::uint32_t a) const {
  if (a >= order_) fail(errc::range_error, "element index out of range");
  return inv_[a];
}

GroupElem Group::inverse(const GroupElem& a) const { return element(inv_idx(index_of(a))); }

std::uint32_t Group::element_order_idx(std::uint32_t a) const {
  std::uint32_t ord = 1, cur = a;
  while (cur != 0) {
    cur = mul_idx(cur, a);
    ++ord;
  }
  return a == 0 ? 1 : ord;
}

std::uint32_t Group::element_order(const GroupElem& a) const {
  return element_order_idx(index_of(a));
}

GroupElem Group::pow(const GroupElem& a, std::uint64_t e) const {
  std::uint32_t acc = 0, base = index_of(a);
  while (e) {
    if (e & 1) acc = mul_idx(acc, base);
    base = mul_idx(base, base);
    e >>= 1;
  }
  return element(acc);
}

GroupElem Group::gen_x() const {
  switch (spec_.family) {
    case GroupFamily::q12:
    case GroupFamily::d12:
    case GroupFamily::c4:
    case GroupFamily::c2xc2:
      return GroupElem{{1, 0, 0}};
    case GroupFamily::cyclic:
      return spec_.n > 1 ? GroupElem{{1, 0, 0}} : GroupElem{};
    case GroupFamily::generic:
      fail(errc::range_error, "generic groups have no named generators");
  }
  return GroupElem{};
}

GroupElem Group::gen_y() const {
  switch (spec_.family) {
    case GroupFamily::q12:
    case GroupFamily::d12:
    case GroupFamily::c2xc2:
      return GroupElem{{0, 1, 0}};
    case GroupFamily::c4:
      return spec_.n > 1 ? GroupElem{{0, 1, 0}} : GroupElem{};
    default:
      fail(errc::range_error, "family has no y generator");
  }
}

GroupElem Group::gen_z() const {
  switch (spec_.family) {
    case GroupFamily::q12:
    case GroupFamily::d12:
    case GroupFamily::c2xc2:
      return spec_.n > 1 ? GroupElem{{0, 0, 1}} : GroupElem{};
    case GroupFamily::c4:
      return spec_.n > 1 ? GroupElem{{0, 1, 0}} : GroupElem{};
    case GroupFamily::cyclic:
      return spec_.n > 1 ? GroupElem{{1, 0, 0}} : GroupElem{};
    default:
      fail(errc::range_error, "family has no z generator");
  }
}

void Group::check_elem(const GroupElem& a) const {
  if (a.e[0] >= radix_[0] || a.e[1] >= radix_[1] || a.e[2] >= radix_[2]) {
    fail(errc::range_error, "exponent tuple out of range for " + label_);
  }
}

std::vector<std::uint32_t> subgroup_closure(const Group& g,
                                            const std::vector<std::uint32_t>& gen_idxs) {
  std::vector<bool> in(g.order(), false);
  in[0] = true;
  std::vector<std::uint32_t> frontier{0};
  for (auto x : gen_idxs) {
    if (!in[x]) {
      in[x] = true;
      frontier.push_back(x);
    }
  }
  // BFS over right-multiplication by generators and their inverses
  std::vector<std::uint32_t> step = gen_idxs;
  for (auto x : gen_idxs) step.push_back(g.inv_idx(x));
  for (std::size_t head = 0; head < frontier.size(); ++head) {
    const std::uint32_t a = frontier[head];
    for (auto s : step) {
      const std::uint32_t b = g.mul_idx(a, s);
      if (!in[b]) {
        in[b] = true;
        frontier.push_back(b);
      }
    }
  }
  std::vector<std::uint32_t> out;
  for (std::uint32_t i = 0; i < g.order(); ++i) {
    if (in[i]) out.push_back(i);
  }
  return out;
}

CosetDecomposition normal_cosets_idx(const Group& g, const std::vector<std::uint32_t>& gen_idxs) {
  CosetDecomposition d;
  d.subgroup = subgroup_closure(g, gen_idxs);
  std::vector<bool> in_k(g.order(), false);
  for (auto x : d.subgroup) in_k[x] = true;
  // normality: g k g^-1 stays in K for all generators of G and k in K
  for (auto gi : g.generator_idxs()) {
    const std::uint32_t gi_inv = g.inv_idx(gi);
    for (auto ki : d.subgroup) {
      const std::uint32_t conj = g.mul_idx(g.mul_idx(gi, ki), gi_inv);
      if (!in_k[conj]) fail(errc::not_normal, "generated subgroup is not normal");
    }
  }
  d.coset_of.assign(g.order(), UINT32_MAX);
  for (std::uint32_t a = 0; a < g.order(); ++a) {
    if (d.coset_of[a] != UINT32_MAX) continue;
    const std::uint32_t cid = static_cast<std::uint32_t>(d.cosets.size());
    std::vector<std::uint32_t> coset;
    for (auto ki : d.subgroup) {
      const std::uint32_t b = g.mul_idx(a, ki);
      coset.push_back(b);
    }
    std::sort(coset.begin(), coset.end());
    for (auto b : coset) d.coset_of[b] = cid;
    d.cosets.push_back(std::move(coset));
  }
  return d;
}

CosetDecomposition normal_cosets(const Group& g, const std::vector<GroupElem>& gens) {
  std::vector<std::uint32_t> idxs;
  idxs.reserve(gens.size());
  for (const auto& e : gens) idxs.push_back(g.index_of(e));
  return normal_cosets_idx(g, idxs);
}

GroupPtr quotient_group(const Group& g, const CosetDecomposition& d) {
  const std::uint32_t m = static_cast<std::uint32_t>(d.cosets.size());
  std::vector<std::vector<std::uint32_t>> table(m, std::vector<std::uint32_t>(m));
  for (std::uint32_t a = 0; a < m; ++a) {
    for (std::uint32_t b = 0; b < m; ++b) {
      table[a][b] = d.coset_of[g.mul_idx(d.cosets[a][0], d.cosets[b][0])];
    }
  }
  return Group::make_generic(g.label() + "/K" + std::to_string(d.subgroup.size()), std::move(table));
}

std::optional<std::vector<std::uint32_t>> find_complement(const Group& g,
                                                          const CosetDecomposition& d) {
  const std::uint64_t target = g.order() / d.subgroup.size();
  std::vector<bool> in_k(g.order(), false);
  for (auto x : d.subgroup) in_k[x] = true;
  std::vector<std::uint32_t> gens;
  std::vector<std::uint32_t> current{0};
  if (current.size() == target) return current;
  for (std::uint32_t a = 1; a < g.order(); ++a) {
    if (std::binary_search(current.begin(), current.end(), a)) continue;
    gens.push_back(a);
    auto closed = subgroup_closure(g, gens);
    bool ok = closed.size() <= target;
    if (ok) {
      std::size_t k_hits = 0;
      for (auto x : closed) k_hits += in_k[x];
      ok = (k_hits == 1);  // only the identity may lie in K
    }
    if (!ok) {
      gens.pop_back();
      continue;
    }
    current = std::move(closed);
    if (current.size() == target) return current;
  }
  return std::nullopt;
}

}  // namespace grw
