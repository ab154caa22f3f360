// Acceptance suite: runs every top-level criterion at its stated tolerance and
// prints one pass/fail line per criterion. Exit code 0 iff all pass.

#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "grw/oracle.hpp"
#include "grw/selftest.hpp"
#include "grw/unitstruct.hpp"

using namespace grw;

namespace {

struct Criterion {
  std::string label;
  bool pass = true;
  std::vector<std::string> notes;

  void check(bool ok, const std::string& what) {
    pass = pass && ok;
    notes.push_back(std::string(ok ? "  ok   " : "  FAIL ") + what);
  }
};

std::string big(const BigInt& v) { return v.str(); }

Criterion criterion1() {
  Criterion c{"criterion 1: exhaustive censuses match theorem orders exactly"};
  struct Case {
    std::uint64_t p;
    GroupFamily family;
    std::uint64_t n;
    std::uint64_t expected;
    BigInt predicted;
    const char* label;
  };
  const std::vector<Case> cases = {
      {2, GroupFamily::q12, 1, 768, predicted_unit_count(unit_structure_q12(2, 1, 1)),
       "|U(F2 Q12)|"},
      {2, GroupFamily::d12, 1, 768, predicted_unit_count(unit_structure_d12(2, 1, 1)),
       "|U(F2 D12)|"},
      {3, GroupFamily::q12, 1, 209952, predicted_unit_count(unit_structure_q12(3, 1, 1)),
       "|U(F3 Q12)|"},
      {3, GroupFamily::d12, 1, 104976, predicted_unit_count(unit_structure_d12(3, 1, 1)),
       "|U(F3 D12)|"},
      {3, GroupFamily::c4, 1, 32, aux_structure_char3(1, 1, AuxKind::c4).order(),
       "|U(F3 C4)|"},
      {3, GroupFamily::c2xc2, 1, 16, elem_abelian2_units(3, 1, 2).order(),
       "|U(F3 C2^2)|"},
      {3, GroupFamily::cyclic, 3, 18, cyclic_ppower_units(3, 1, 1).order(),
       "|U(F3 C3)|"},
      {3, GroupFamily::cyclic, 9, 13122, cyclic_ppower_units(3, 1, 2).order(),
       "|U(F3 C9)|"},
  };
  for (const auto& cs : cases) {
    const UnitCensus census = count_units(cs.p, 1, cs.family, cs.n);
    const bool ok = census.hits == cs.expected && BigInt(census.hits) == cs.predicted;
    c.check(ok, std::string(cs.label) + " = " + std::to_string(census.hits) + " (expected " +
                    std::to_string(cs.expected) + ", theorem " + big(cs.predicted) + ", " +
                    std::to_string(census.total) + " states)");
  }
  return c;
}

Criterion criterion2() {
  Criterion c{"criterion 2: characteristic-3 proof constructions (V, C_V, T/S, W)"};
  for (auto fam : {GroupFamily::q12, GroupFamily::d12}) {
    const char* fname = fam == GroupFamily::q12 ? "Q12" : "D12";
    const SubgroupReport v = v_subgroup(1, fam, 1);
    c.check(v.pass && v.verified_count == 6561 && v.exponent == 3,
            std::string("V (") + fname + "): |V| = " + big(v.verified_count) +
                ", exponent " + big(v.exponent));
    const SubgroupReport cv = cv_subgroup(1, fam, 1);
    c.check(cv.pass && cv.verified_count == 729 && cv.is_abelian,
            std::string("C_V (") + fname + "): order " + big(cv.verified_count) +
                ", abelian (exhaustive pairwise)");
    const ProofSubgroups ps = proof_subgroups(1, fam, 1);
    if (fam == GroupFamily::q12) {
      c.check(ps.t_or_s.pass && ps.t_or_s.verified_count == 81,
              "T (Q12): order " + big(ps.t_or_s.verified_count));
      c.check(ps.intersection.pass && ps.intersection.verified_count == 9,
              "C_V cap T = U: order " + big(ps.intersection.verified_count));
      c.check(ps.w_found && ps.w_order && *ps.w_order == 9 && ps.trivial_meet &&
                  ps.product_checked && ps.product_covers_v,
              "complement W: order 9, C_V cap W = 1, |C_V W| = |V|");
    } else {
      c.check(ps.t_or_s.pass && ps.t_or_s.verified_count == 9,
              "S (D12): order " + big(ps.t_or_s.verified_count));
      c.check(ps.trivial_meet && ps.product_checked && ps.product_covers_v,
              "C_V cap S = 1 and |C_V S| = |V|");
    }
    c.check(ps.normalizes && ps.conj_exhaustive,
            std::string("conjugation c^t in C_V on all ") + std::to_string(ps.conj_checked) +
                " pairs (" + fname + ", n=1)");
    SubgroupOptions sampled;
    sampled.samples = 10000;
    const ProofSubgroups ps2 = proof_subgroups(1, fam, 2, sampled);
    c.check(ps2.normalizes && !ps2.conj_exhaustive && ps2.conj_checked == 10000,
            std::string("conjugation c^t in C_V on 10^4 sampled pairs (") + fname + ", n=2)");
  }
  return c;
}

Criterion criterion3() {
  Criterion c{"criterion 3: radical audit for p > 3 (exact integer equalities)"};
  struct Case {
    std::uint64_t p, n;
  };
  for (const Case cs : {Case{5, 5}, Case{7, 7}, Case{5, 1}, Case{7, 3}}) {
    for (auto fam : {GroupFamily::q12, GroupFamily::d12}) {
      const RadicalReport rep = radical_verify(cs.p, 1, fam, cs.n);
      const std::string label = std::string(fam == GroupFamily::q12 ? "Q12" : "D12") + " p=" +
                                std::to_string(cs.p) + " n=" + std::to_string(cs.n);
      c.check(rep.pass, label + ": dim ker = " + std::to_string(rep.dim) + " (expected " +
                            std::to_string(rep.expected_dim) + "), nilpotency " +
                            (rep.nilpotency_index ? std::to_string(*rep.nilpotency_index)
                                                  : std::string("none")) +
                            ", quotient dim " + std::to_string(rep.quotient_dim));
    }
  }
  return c;
}

Criterion criterion4() {
  Criterion c{"criterion 4: sampled unit fractions within 3 standard errors"};
  CensusOptions opts;
  opts.exhaustive = false;
  opts.samples = 100000;
  opts.seed = 0xC0FFEE;
  for (auto fam : {GroupFamily::d12, GroupFamily::q12}) {
    const UnitStructure us = fam == GroupFamily::d12 ? unit_structure_d12(5, 1, 1)
                                                     : unit_structure_q12(5, 1, 1);
    const BigInt predicted = predicted_unit_count(us);
    const double exact =
        predicted.convert_to<double>() / bigint_pow(BigInt(5), 12).convert_to<double>();
    const UnitCensus census = count_units(5, 1, fam, 1, opts);
    const double dev = std::abs(census.estimated_fraction - exact);
    char buf[256];
    std::snprintf(buf, sizeof(buf),
                  "F5 %s: fraction %.5f vs %.5f (|dev| %.5f <= 3se %.5f, seed %llx)",
                  fam == GroupFamily::d12 ? "D12" : "Q12", census.estimated_fraction, exact, dev,
                  3.0 * census.std_error, static_cast<unsigned long long>(census.seed));
    c.check(dev <= 3.0 * census.std_error, buf);
  }
  return c;
}

Criterion criterion5() {
  Criterion c{"criterion 5: property suites (selftest)"};
  const SelftestReport rep = run_selftest();
  for (const auto& check : rep.checks) {
    c.check(check.pass, check.name + ": " + check.detail);
  }
  return c;
}

Criterion criterion6() {
  Criterion c{"criterion 6: split extensions verify"};
  {
    auto grp = Group::make(GroupSpec{GroupFamily::q12, 1});
    const SplitReport rep = verify_split(3, 1, GroupFamily::q12, 1, {grp->gen_x()});
    c.check(rep.pass && rep.exhaustive,
            "(3,1,Q12,1,<x>): theta o i = id on all " + std::to_string(rep.units_checked) +
                " units of U(FH)");
  }
  {
    auto grp = Group::make(GroupSpec{GroupFamily::d12, 1});
    const GroupElem x2 = grp->mul(grp->gen_x(), grp->gen_x());
    const SplitReport rep = verify_split(3, 1, GroupFamily::d12, 1, {x2});
    c.check(rep.pass && rep.exhaustive,
            "(3,1,D12,1,<x^2>): theta o i = id on all " + std::to_string(rep.units_checked) +
                " units of U(FH)");
  }
  {
    auto grp = Group::make(GroupSpec{GroupFamily::d12, 5});
    const SplitReport rep = verify_split(5, 1, GroupFamily::d12, 5, {grp->gen_z()});
    c.check(rep.pass && !rep.exhaustive,
            "(5,1,D12,5,<z>): sampled, " + std::to_string(rep.units_checked) + " units checked");
  }
  return c;
}

}  // namespace

int main() {
  std::vector<Criterion> results;
  results.push_back(criterion1());
  results.push_back(criterion2());
  results.push_back(criterion3());
  results.push_back(criterion4());
  results.push_back(criterion5());
  results.push_back(criterion6());

  bool all = true;
  for (const auto& c : results) {
    std::printf("[%s] %s\n", c.pass ? "PASS" : "FAIL", c.label.c_str());
    for (const auto& note : c.notes) std::printf("%s\n", note.c_str());
    all = all && c.pass;
  }
  std::printf("%s\n", all ? "acceptance: all criteria passed" : "acceptance: FAILURES present");
  return all ? 0 : 1;
}
