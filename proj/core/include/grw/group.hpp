#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "grw/errors.hpp"

namespace grw {

// Supported families. q12 is C_n x Q12 with presentation
//   x^3 = y^4 = z^n = 1, xy = yx^2, z central;
// d12 is C_n x D12 with
//   x^6 = y^2 = z^n = 1, yx = x^5 y, z central;
// c4 is C_n x C4, c2xc2 is C_n x C2^2, cyclic is C_n alone.
// generic carries an explicit multiplication table (used for coset quotients).
enum class GroupFamily { q12, d12, c4, c2xc2, cyclic, generic };

const char* family_name(GroupFamily f) noexcept;
std::optional<GroupFamily> family_from_name(const std::string& name);

struct GroupSpec {
  GroupFamily family = GroupFamily::cyclic;
  std::uint32_t n = 1;  // order of the auxiliary cyclic factor (1 = absent)
};

// Exponent tuple in normal form x^i y^j z^l; unused slots stay 0.
struct GroupElem {
  std::array<std::uint32_t, 3> e{0, 0, 0};

  bool operator==(const GroupElem& o) const { return e == o.e; }
  bool operator!=(const GroupElem& o) const { return !(*this == o); }
};

struct GroupOptions {
  std::uint64_t order_bound = 768;     // default 12*n with n <= 64
  std::uint64_t table_threshold = 4096;  // cache Cayley table iff order <= this
};

class Group {
public:
  static std::shared_ptr<const Group> make(GroupSpec spec, GroupOptions opts = {});
  // Explicit-table group (quotients). table[a][b] = index of a*b; identity must
  // be index 0.
  static std::shared_ptr<const Group> make_generic(std::string label,
                                                   std::vector<std::vector<std::uint32_t>> table);

  const GroupSpec& spec() const { return spec_; }
  const std::string& label() const { return label_; }
  std::uint32_t order() const { return order_; }
  bool has_table() const { return !table_.empty(); }

  // Canonical enumeration: lexicographic on exponent tuples, identity first.
  std::uint32_t index_of(const GroupElem& a) const;
  GroupElem element(std::uint32_t idx) const;
  GroupElem identity() const { return GroupElem{}; }

  GroupElem mul(const GroupElem& a, const GroupElem& b) const;
  std::uint32_t mul_idx(std::uint32_t a, std::uint32_t b) const;
  GroupElem inverse(const GroupElem& a) const;
  std::uint32_t inv_idx(std::uint32_t a) const;
  std::uint32_t element_order(const GroupElem& a) const;
  std::uint32_t element_order_idx(std::uint32_t a) const;
  GroupElem pow(const GroupElem& a, std::uint64_t e) const;

  // Presentation generators, by family. Throws RangeError for generic groups.
  GroupElem gen_x() const;
  GroupElem gen_y() const;  // second generator (y, or second C2 factor)
  GroupElem gen_z() const;  // auxiliary C_n generator
  // A generating set (indices) valid for every family including generic.
  const std::vector<std::uint32_t>& generator_idxs() const { return generators_; }

  void check_elem(const GroupElem& a) const;

private:
  Group() = default;
  std::uint32_t mul_raw(std::uint32_t a, std::uint32_t b) const;
  void finish_construction(std::uint64_t table_threshold);

  GroupSpec spec_;
  std::string label_;
  std::uint32_t order_ = 1;
  std::array<std::uint32_t, 3> radix_{1, 1, 1};
  std::vector<std::uint32_t> table_;  // order x order, row-major; may be empty
  std::vector<std::uint32_t> inv_;
  std::vector<std::uint32_t> generators_;
};

using GroupPtr = std::shared_ptr<const Group>;

// Normal-subgroup coset decomposition. cosets[0] is the subgroup itself;
// cosets are ordered by their least element index, elements sorted within.
struct CosetDecomposition {
  std::vector<std::uint32_t> subgroup;
  std::vector<std::vector<std::uint32_t>> cosets;
  std::vector<std::uint32_t> coset_of;  // element index -> coset index
};

// Closure of the generated subgroup, sorted element indices.
std::vector<std::uint32_t> subgroup_closure(const Group& g, const std::vector<std::uint32_t>& gen_idxs);

// Throws NotNormal when the generated subgroup is not normal.
CosetDecomposition normal_cosets(const Group& g, const std::vector<GroupElem>& gens);
CosetDecomposition normal_cosets_idx(const Group& g, const std::vector<std::uint32_t>& gen_idxs);

// Quotient of g by the decomposed normal subgroup, as a generic-table group.
GroupPtr quotient_group(const Group& g, const CosetDecomposition& cosets);

// A subgroup meeting every coset exactly once (a complement of the subgroup),
// found greedily; nullopt when the greedy search fails.
std::optional<std::vector<std::uint32_t>> find_complement(const Group& g,
                                                          const CosetDecomposition& cosets);

}  // namespace grw
