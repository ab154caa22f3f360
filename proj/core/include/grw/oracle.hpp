#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "grw/algebra.hpp"
#include "grw/unitstruct.hpp"

namespace grw {

struct CensusOptions {
  bool exhaustive = true;
  std::uint64_t samples = 100000;
  std::uint64_t seed = 0xC0FFEE;
  std::uint64_t cap = 531441;  // exhaustive state-count cap (3^12)
  unsigned threads = 0;        // 0 = hardware concurrency
};

struct UnitCensus {
  std::uint64_t p = 0;
  std::uint32_t k = 1;
  GroupFamily family = GroupFamily::cyclic;
  std::uint64_t n = 1;
  bool exhaustive = true;
  std::uint64_t seed = 0;
  std::uint64_t total = 0;  // states enumerated / samples drawn
  std::uint64_t hits = 0;   // units found
  double estimated_fraction = 0.0;
  double std_error = 0.0;  // sampled mode
  double elapsed_seconds = 0.0;
};

// Brute-force unit count of F(C_n x family) over GF(p^k). Exhaustive mode
// enumerates all q^|G| coefficient vectors (throws SizeBound beyond the cap);
// sampled mode draws seeded uniform vectors.
UnitCensus count_units(std::uint64_t p, std::uint32_t k, GroupFamily family, std::uint64_t n,
                       const CensusOptions& opts = {});

// All units of FG, by exhaustive enumeration. Throws SizeBound when
// q^|G| > cap.
std::vector<AlgElem> enumerate_units(const FieldCtx& ctx, const Group& grp,
                                     std::uint64_t cap = 531441);

struct GroupAnalysis {
  std::uint64_t order = 0;
  BigInt exponent;
  std::uint64_t center_order = 0;
  std::uint64_t derived_order = 0;
  std::vector<BigInt> abelianization_invariants;  // elementary divisors, ascending
  bool is_abelian = false;
  bool closure_exhaustive = false;
};

// Structure analysis of a finite multiplicative set of algebra elements.
// Throws NotClosed when a product escapes the set (closure checked on all
// pairs within the budget, sampled otherwise).
GroupAnalysis analyze_group(const std::vector<AlgElem>& elements,
                            std::uint64_t pair_budget = 1000000, std::uint64_t seed = 0xC0FFEE);

struct SubgroupOptions {
  std::uint64_t enum_cap = 531441;     // enumerate subgroups up to this size
  std::uint64_t pair_budget = 1000000; // exhaustive pair checks up to this many
  std::uint64_t samples = 10000;
  std::uint64_t seed = 0xC0FFEE;
};

struct SubgroupReport {
  std::string name;
  BigInt predicted_order;
  BigInt verified_count;  // enumerated count, or number of sampled members
  bool exhaustive = true;
  bool all_units = true;
  bool closure_ok = true;
  bool is_abelian = false;
  BigInt exponent;  // verified exponent (0 when not established)
  bool pass = false;
  std::string detail;
};

// V = 1 + omega(K), K = <x> (q12) or <x^2> (d12), characteristic 3:
// order 3^{8nk}, every member a unit, exponent exactly 3.
SubgroupReport v_subgroup(std::uint32_t k, GroupFamily family, std::uint64_t n,
                          const SubgroupOptions& opts = {});

// Centralizer of x (resp. x^2) in V, from its parametric form: order 3^{6nk},
// abelian, inside V.
SubgroupReport cv_subgroup(std::uint32_t k, GroupFamily family, std::uint64_t n,
                           const SubgroupOptions& opts = {});

struct ProofSubgroups {
  SubgroupReport t_or_s;           // T (q12, 3^{4nk}) or S (d12, 3^{2nk})
  SubgroupReport intersection;     // C_V cap T = U (q12 only; 3^{2nk})
  std::optional<BigInt> w_order;   // complement W of U in T (q12 only)
  bool w_found = false;
  bool trivial_meet = false;       // C_V cap W = 1 (q12) / C_V cap S = 1 (d12)
  bool product_checked = false;    // product census ran (within the pair budget)
  bool product_covers_v = false;   // |C_V * W| = |V| (q12) / |C_V * S| = |V| (d12)
  bool normalizes = false;         // c^t in C_V for checked pairs
  std::uint64_t conj_checked = 0;
  bool conj_exhaustive = false;
  bool pass = false;
  std::string detail;
};

// Step-2 subgroup constructions and checks at characteristic 3.
ProofSubgroups proof_subgroups(std::uint32_t k, GroupFamily family, std::uint64_t n,
                               const SubgroupOptions& opts = {});

struct SplitReport {
  bool pass = false;
  bool exhaustive = true;
  std::uint64_t units_checked = 0;
  std::string witness;
};

// Checks that theta composed with the section is the identity on U(FH) and
// that the section maps units to units, for K = <k_gens>.
SplitReport verify_split(std::uint64_t p, std::uint32_t k, GroupFamily family, std::uint64_t n,
                         const std::vector<GroupElem>& k_gens, const SubgroupOptions& opts = {});

struct RadicalReport {
  std::uint64_t dim = 0;
  std::uint64_t expected_dim = 0;
  std::optional<std::uint32_t> nilpotency_index;
  std::uint64_t quotient_dim = 0;
  std::uint64_t expected_quotient_dim = 0;
  bool pass = false;
};

// For p > 3 and K = <z^s>: dim ker(theta) = 12 s (p^r - 1), the kernel is
// nilpotent, and the quotient has dimension 12 s. Throws SmallCharacteristic.
RadicalReport radical_verify(std::uint64_t p, std::uint32_t k, GroupFamily family, std::uint64_t n);

// Coefficient-sum criterion for membership in V = 1 + omega(K): the K-coset
// containing the identity sums to 1, every other coset sums to 0.
bool v_coefficient_criterion(const AlgElem& u, const CosetDecomposition& cosets);

}  // namespace grw
