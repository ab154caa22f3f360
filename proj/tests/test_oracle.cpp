#include <doctest.h>

#include "grw/errors.hpp"
#include "grw/oracle.hpp"
#include "grw/selftest.hpp"
#include "grw/unitstruct.hpp"

using namespace grw;

TEST_SUITE("oracle") {
  TEST_CASE("exhaustive censuses on small algebras") {
    const UnitCensus c4 = count_units(3, 1, GroupFamily::c4, 1);
    CHECK(c4.total == 81);
    CHECK(c4.hits == 32);

    const UnitCensus c22 = count_units(3, 1, GroupFamily::c2xc2, 1);
    CHECK(c22.hits == 16);

    const UnitCensus c3 = count_units(3, 1, GroupFamily::cyclic, 3);
    CHECK(c3.total == 27);
    CHECK(c3.hits == 18);
  }

  TEST_CASE("census counts are independent of the thread partition") {
    CensusOptions one_thread;
    one_thread.threads = 1;
    CensusOptions four_threads;
    four_threads.threads = 4;
    const UnitCensus a = count_units(2, 1, GroupFamily::q12, 1, one_thread);
    const UnitCensus b = count_units(2, 1, GroupFamily::q12, 1, four_threads);
    CHECK(a.hits == b.hits);
    CHECK(a.hits == 768);
  }

  TEST_CASE("exhaustive cap is enforced") {
    CensusOptions opts;
    opts.cap = 1000;
    CHECK_THROWS_AS(count_units(3, 1, GroupFamily::q12, 1, opts), Error);
  }

  TEST_CASE("sampled census brackets the exact fraction") {
    CensusOptions opts;
    opts.exhaustive = false;
    opts.samples = 20000;
    opts.seed = 0xC0FFEE;
    const UnitCensus c = count_units(3, 1, GroupFamily::q12, 1, opts);
    const double exact = 209952.0 / 531441.0;
    CHECK(c.std_error > 0);
    CHECK(std::abs(c.estimated_fraction - exact) <= 3.0 * c.std_error);
  }

  TEST_CASE("sampled census is reproducible for a fixed seed") {
    CensusOptions opts;
    opts.exhaustive = false;
    opts.samples = 5000;
    const UnitCensus a = count_units(5, 1, GroupFamily::d12, 1, opts);
    const UnitCensus b = count_units(5, 1, GroupFamily::d12, 1, opts);
    CHECK(a.hits == b.hits);
    opts.threads = 3;
    const UnitCensus c = count_units(5, 1, GroupFamily::d12, 1, opts);
    CHECK(a.hits == c.hits);
  }

  TEST_CASE("unit enumeration collects closed unit sets") {
    auto ctx = FieldCtx::make(3, 1);
    auto grp = Group::make(GroupSpec{GroupFamily::c4, 1});
    const auto units = enumerate_units(*ctx, *grp);
    CHECK(units.size() == 32);
    const GroupAnalysis an = analyze_group(units);
    CHECK(an.order == 32);
    CHECK(an.is_abelian);
    CHECK(an.center_order == 32);
    CHECK(an.derived_order == 1);
    CHECK(an.exponent == 8);
    CHECK(an.abelianization_invariants ==
          std::vector<BigInt>{BigInt(2), BigInt(2), BigInt(8)});
    // matches the predicted structure
    const auto ev = evaluate(aux_structure_char3(1, 1, AuxKind::c4));
    CHECK(*ev.abelian_invariants == an.abelianization_invariants);
  }

  TEST_CASE("analysis of the trivial group") {
    auto ctx = FieldCtx::make(3, 1);
    auto grp = Group::make(GroupSpec{GroupFamily::cyclic, 1});
    const GroupAnalysis an = analyze_group({alg_one(*ctx, *grp)});
    CHECK(an.order == 1);
    CHECK(an.exponent == 1);
    CHECK(an.center_order == 1);
    CHECK(an.derived_order == 1);
    CHECK(an.abelianization_invariants.empty());
  }

  TEST_CASE("U(F2Q12) is nonabelian of order 768") {
    auto ctx = FieldCtx::make(2, 1);
    auto grp = Group::make(GroupSpec{GroupFamily::q12, 1});
    const auto units = enumerate_units(*ctx, *grp);
    REQUIRE(units.size() == 768);
    const GroupAnalysis an = analyze_group(units);
    CHECK(an.order == 768);
    CHECK(an.closure_exhaustive);
    CHECK_FALSE(an.is_abelian);
    CHECK(an.derived_order > 1);
    // the collected set is closed under inversion as well
    std::unordered_set<AlgElem, AlgElemHash> set(units.begin(), units.end());
    CounterRng rng{0x17};
    for (std::uint64_t i = 0; i < 100; ++i) {
      const auto& u = units[rng.below(i, units.size())];
      const auto inv = try_inverse(u);
      REQUIRE(inv.has_value());
      CHECK(set.count(*inv) == 1);
    }
  }

  TEST_CASE("auxiliary abelianization matches on every <= 3^8-state instance") {
    struct Case {
      GroupFamily fam;
      std::uint32_t n;
      AuxKind kind;
      std::uint32_t aux_n;
    };
    for (const Case cs : {Case{GroupFamily::c4, 1, AuxKind::c4, 1},
                          Case{GroupFamily::c2xc2, 1, AuxKind::c2xc2, 1},
                          Case{GroupFamily::c4, 2, AuxKind::c4, 2},
                          Case{GroupFamily::c2xc2, 2, AuxKind::c2xc2, 2}}) {
      auto ctx = FieldCtx::make(3, 1);
      auto grp = Group::make(GroupSpec{cs.fam, cs.n});
      const auto units = enumerate_units(*ctx, *grp);
      const GroupAnalysis an = analyze_group(units);
      const auto ev = evaluate(aux_structure_char3(1, cs.aux_n, cs.kind));
      CHECK(an.is_abelian);
      CHECK(BigInt(an.order) == ev.order);
      REQUIRE(ev.abelian_invariants.has_value());
      CHECK(an.abelianization_invariants == *ev.abelian_invariants);
      CHECK(an.exponent == *ev.exponent);
    }
  }

  TEST_CASE("non-closed sets are rejected") {
    auto ctx = FieldCtx::make(3, 1);
    auto grp = Group::make(GroupSpec{GroupFamily::q12, 1});
    const AlgElem x = alg_term(*ctx, *grp, grp->gen_x());
    CHECK_THROWS_AS(analyze_group({alg_one(*ctx, *grp), x}), Error);
  }

  TEST_CASE("V = 1 + omega(K) at n = k = 1") {
    for (auto fam : {GroupFamily::q12, GroupFamily::d12}) {
      const SubgroupReport rep = v_subgroup(1, fam, 1);
      CHECK(rep.pass);
      CHECK(rep.exhaustive);
      CHECK(rep.predicted_order == 6561);
      CHECK(rep.verified_count == 6561);
      CHECK(rep.exponent == 3);
      CHECK(rep.all_units);
    }
  }

  TEST_CASE("V membership spot check: 1 + (x-1)y") {
    auto ctx = FieldCtx::make(3, 1);
    auto grp = Group::make(GroupSpec{GroupFamily::q12, 1});
    const auto xsub = subgroup_closure(*grp, {grp->index_of(grp->gen_x())});
    const Ideal omega = omega_basis(*ctx, *grp, xsub);
    const AlgElem one = alg_one(*ctx, *grp);
    const AlgElem x = alg_term(*ctx, *grp, grp->gen_x());
    const AlgElem y = alg_term(*ctx, *grp, grp->gen_y());
    const AlgElem member = alg_add(one, alg_mul(alg_sub(x, one), y));
    CHECK(omega.contains(alg_sub(member, one)));
    CHECK(is_unit(member));
  }

  TEST_CASE("centralizer subgroup at n = k = 1") {
    for (auto fam : {GroupFamily::q12, GroupFamily::d12}) {
      const SubgroupReport rep = cv_subgroup(1, fam, 1);
      CHECK(rep.pass);
      CHECK(rep.predicted_order == 729);
      CHECK(rep.verified_count == 729);
      CHECK(rep.is_abelian);
    }
  }

  TEST_CASE("centralizer commutation sampled at n = 2") {
    SubgroupOptions opts;
    opts.enum_cap = 1000;  // force the sampled path
    opts.samples = 1000;
    const SubgroupReport rep = cv_subgroup(1, GroupFamily::q12, 2, opts);
    CHECK(rep.pass);
    CHECK_FALSE(rep.exhaustive);
  }

  TEST_CASE("step-2 subgroups for Q12 at n = k = 1") {
    const ProofSubgroups ps = proof_subgroups(1, GroupFamily::q12, 1);
    CHECK(ps.pass);
    CHECK(ps.t_or_s.predicted_order == 81);
    CHECK(ps.t_or_s.verified_count == 81);
    CHECK(ps.t_or_s.is_abelian);
    CHECK(ps.t_or_s.exponent == 3);
    CHECK(ps.intersection.predicted_order == 9);
    CHECK(ps.intersection.pass);
    REQUIRE(ps.w_order.has_value());
    CHECK(*ps.w_order == 9);
    CHECK(ps.w_found);
    CHECK(ps.trivial_meet);
    CHECK(ps.product_checked);
    CHECK(ps.product_covers_v);
    CHECK(ps.normalizes);
    CHECK(ps.conj_exhaustive);
    CHECK(ps.conj_checked == 729 * 81);
  }

  TEST_CASE("step-2 subgroups for D12 at n = k = 1") {
    const ProofSubgroups ps = proof_subgroups(1, GroupFamily::d12, 1);
    CHECK(ps.pass);
    CHECK(ps.t_or_s.predicted_order == 9);
    CHECK(ps.t_or_s.verified_count == 9);
    CHECK(ps.trivial_meet);
    CHECK(ps.product_checked);
    CHECK(ps.product_covers_v);
    CHECK(ps.normalizes);
  }

  TEST_CASE("conjugation sampling at n = 2") {
    SubgroupOptions opts;
    opts.samples = 2000;
    const ProofSubgroups ps = proof_subgroups(1, GroupFamily::q12, 2, opts);
    CHECK_FALSE(ps.conj_exhaustive);
    CHECK(ps.normalizes);
    CHECK(ps.conj_checked == 2000);
    CHECK(ps.t_or_s.pass);
  }

  TEST_CASE("split verification") {
    {
      auto grp = Group::make(GroupSpec{GroupFamily::q12, 1});
      const SplitReport rep = verify_split(3, 1, GroupFamily::q12, 1, {grp->gen_x()});
      CHECK(rep.pass);
      CHECK(rep.exhaustive);
      CHECK(rep.units_checked == 32);
    }
    {
      auto grp = Group::make(GroupSpec{GroupFamily::d12, 1});
      const GroupElem x2 = grp->mul(grp->gen_x(), grp->gen_x());
      const SplitReport rep = verify_split(3, 1, GroupFamily::d12, 1, {x2});
      CHECK(rep.pass);
      CHECK(rep.units_checked == 16);
    }
    {
      // trivial kernel: theta is the identity
      auto grp = Group::make(GroupSpec{GroupFamily::q12, 1});
      const SplitReport rep = verify_split(2, 1, GroupFamily::q12, 1, {grp->identity()});
      CHECK(rep.pass);
      CHECK(rep.units_checked == 768);
    }
  }

  TEST_CASE("radical audits") {
    const RadicalReport maschke = radical_verify(5, 1, GroupFamily::q12, 1);
    CHECK(maschke.pass);
    CHECK(maschke.dim == 0);
    CHECK(maschke.quotient_dim == 12);
    CHECK(maschke.nilpotency_index == 1);

    const RadicalReport r5 = radical_verify(5, 1, GroupFamily::q12, 5);
    CHECK(r5.pass);
    CHECK(r5.dim == 48);
    CHECK(r5.expected_dim == 48);
    CHECK(r5.quotient_dim == 12);
    CHECK(r5.nilpotency_index == 5);

    CHECK_THROWS_AS(radical_verify(3, 1, GroupFamily::q12, 1), Error);
  }

  TEST_CASE("coefficient criterion is equivalent to omega membership") {
    for (auto fam : {GroupFamily::q12, GroupFamily::d12}) {
      auto ctx = FieldCtx::make(3, 1);
      auto grp = Group::make(GroupSpec{fam, 1});
      const GroupElem kgen =
          fam == GroupFamily::q12 ? grp->gen_x() : grp->mul(grp->gen_x(), grp->gen_x());
      const auto cosets = normal_cosets(*grp, {kgen});
      const Ideal omega = omega_basis(*ctx, *grp, cosets.subgroup);
      const AlgElem one = alg_one(*ctx, *grp);
      AlgElem u = alg_zero(*ctx, *grp);
      std::uint64_t criterion_hits = 0;
      // all 3^12 coefficient vectors
      for (std::uint64_t state = 0; state < 531441; ++state) {
        std::uint64_t rest = state;
        for (std::uint32_t g = 0; g < 12; ++g) {
          u.coeffs[g] = static_cast<std::uint32_t>(rest % 3);
          rest /= 3;
        }
        const bool criterion = v_coefficient_criterion(u, cosets);
        const bool member = omega.contains(alg_sub(u, one));
        REQUIRE(criterion == member);
        criterion_hits += criterion;
      }
      CHECK(criterion_hits == 6561);  // 3^8
    }
  }

  TEST_CASE("property selftest passes") {
    const SelftestReport rep = run_selftest();
    for (const auto& check : rep.checks) {
      INFO(check.name, ": ", check.detail);
      CHECK(check.pass);
    }
    CHECK(rep.all_pass());
  }
}
