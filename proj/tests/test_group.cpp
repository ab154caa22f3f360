#include <doctest.h>

#include "grw/errors.hpp"
#include "grw/group.hpp"
#include "grw/rng.hpp"

using namespace grw;

namespace {

GroupPtr mk(GroupFamily f, std::uint32_t n, std::uint64_t table_threshold = 4096) {
  GroupOptions opts;
  opts.table_threshold = table_threshold;
  return Group::make(GroupSpec{f, n}, opts);
}

}  // namespace

TEST_SUITE("group") {
  TEST_CASE("orders by family") {
    CHECK(mk(GroupFamily::q12, 1)->order() == 12);
    CHECK(mk(GroupFamily::d12, 3)->order() == 36);
    CHECK(mk(GroupFamily::cyclic, 5)->order() == 5);
    CHECK(mk(GroupFamily::c4, 2)->order() == 8);
    CHECK(mk(GroupFamily::c2xc2, 3)->order() == 12);
  }

  TEST_CASE("size bound is enforced") {
    GroupOptions opts;  // default bound 768 = 12 * 64
    CHECK_THROWS_AS(Group::make(GroupSpec{GroupFamily::q12, 100}, opts), Error);
  }

  TEST_CASE("identity comes first in the canonical enumeration") {
    for (auto f : {GroupFamily::q12, GroupFamily::d12, GroupFamily::c4, GroupFamily::cyclic}) {
      auto g = mk(f, 3);
      CHECK(g->element(0) == g->identity());
      CHECK(g->index_of(g->identity()) == 0);
    }
  }

  TEST_CASE("defining relations hold") {
    auto q12 = mk(GroupFamily::q12, 1);
    const GroupElem x = q12->gen_x(), y = q12->gen_y();
    // xy = yx^2 as a group identity
    CHECK(q12->mul(x, y) == q12->mul(y, q12->mul(x, x)));
    // moving y past x: yx = x^2 y in normal form
    CHECK(q12->mul(y, x) == GroupElem{{2, 1, 0}});
    CHECK(q12->pow(x, 3) == q12->identity());
    CHECK(q12->pow(y, 4) == q12->identity());

    auto d12 = mk(GroupFamily::d12, 1);
    const GroupElem dx = d12->gen_x(), dy = d12->gen_y();
    // yx = x^5 y
    CHECK(d12->mul(dy, dx) == GroupElem{{5, 1, 0}});
    CHECK(d12->mul(dy, dx) == d12->mul(d12->pow(dx, 5), dy));
    CHECK(d12->pow(dx, 6) == d12->identity());
    CHECK(d12->pow(dy, 2) == d12->identity());
  }

  TEST_CASE("identity is neutral") {
    auto g = mk(GroupFamily::q12, 2);
    for (std::uint32_t i = 0; i < g->order(); ++i) {
      CHECK(g->mul_idx(0, i) == i);
      CHECK(g->mul_idx(i, 0) == i);
    }
  }

  TEST_CASE("element orders") {
    auto q12 = mk(GroupFamily::q12, 1);
    CHECK(q12->element_order(q12->gen_y()) == 4);
    CHECK(q12->element_order(q12->gen_x()) == 3);
    CHECK(q12->element_order(q12->identity()) == 1);

    auto d12 = mk(GroupFamily::d12, 1);
    CHECK(d12->element_order(d12->gen_x()) == 6);
  }

  TEST_CASE("involution census distinguishes Q12 from D12") {
    auto q12 = mk(GroupFamily::q12, 1);
    std::uint32_t q_involutions = 0;
    GroupElem the_involution;
    for (std::uint32_t i = 0; i < q12->order(); ++i) {
      if (q12->element_order_idx(i) == 2) {
        ++q_involutions;
        the_involution = q12->element(i);
      }
    }
    CHECK(q_involutions == 1);
    CHECK(the_involution == q12->mul(q12->gen_y(), q12->gen_y()));  // y^2

    auto d12 = mk(GroupFamily::d12, 1);
    std::uint32_t d_involutions = 0;
    for (std::uint32_t i = 0; i < d12->order(); ++i) {
      d_involutions += (d12->element_order_idx(i) == 2);
    }
    CHECK(d_involutions == 7);
  }

  TEST_CASE("z is central") {
    for (auto f : {GroupFamily::q12, GroupFamily::d12}) {
      auto g = mk(f, 4);
      const GroupElem z = g->gen_z();
      for (std::uint32_t i = 0; i < g->order(); ++i) {
        CHECK(g->mul(g->element(i), z) == g->mul(z, g->element(i)));
      }
    }
  }

  TEST_CASE("inverses and associativity on random triples") {
    CounterRng rng{0xC0FFEE};
    for (auto f : {GroupFamily::q12, GroupFamily::d12}) {
      auto g = mk(f, 3);
      for (std::uint32_t i = 0; i < g->order(); ++i) {
        CHECK(g->mul_idx(i, g->inv_idx(i)) == 0);
        CHECK(g->mul_idx(g->inv_idx(i), i) == 0);
      }
      for (std::uint64_t t = 0; t < 10000; ++t) {
        const std::uint32_t a = static_cast<std::uint32_t>(rng.below(3 * t, g->order()));
        const std::uint32_t b = static_cast<std::uint32_t>(rng.below(3 * t + 1, g->order()));
        const std::uint32_t c = static_cast<std::uint32_t>(rng.below(3 * t + 2, g->order()));
        CHECK(g->mul_idx(g->mul_idx(a, b), c) == g->mul_idx(a, g->mul_idx(b, c)));
      }
    }
  }

  TEST_CASE("cached table agrees with rewriting multiplication") {
    auto with_table = mk(GroupFamily::d12, 4);
    auto without_table = mk(GroupFamily::d12, 4, 0);
    REQUIRE(with_table->has_table());
    REQUIRE_FALSE(without_table->has_table());
    for (std::uint32_t a = 0; a < with_table->order(); ++a) {
      for (std::uint32_t b = 0; b < with_table->order(); ++b) {
        CHECK(with_table->mul_idx(a, b) == without_table->mul_idx(a, b));
      }
    }
  }

  TEST_CASE("coset decomposition of <x> in Q12") {
    auto g = mk(GroupFamily::q12, 2);
    const auto d = normal_cosets(*g, {g->gen_x()});
    CHECK(d.subgroup.size() == 3);
    CHECK(d.cosets.size() == 4 * 2);
    for (const auto& coset : d.cosets) CHECK(coset.size() == 3);
    // partition property
    std::vector<bool> seen(g->order(), false);
    for (const auto& coset : d.cosets) {
      for (auto e : coset) {
        CHECK_FALSE(seen[e]);
        seen[e] = true;
      }
    }
  }

  TEST_CASE("coset decomposition of <x^2> in D12") {
    auto g = mk(GroupFamily::d12, 2);
    const GroupElem x2 = g->mul(g->gen_x(), g->gen_x());
    const auto d = normal_cosets(*g, {x2});
    CHECK(d.subgroup.size() == 3);
    CHECK(d.cosets.size() == 8);
  }

  TEST_CASE("trivial generators give singleton cosets") {
    auto g = mk(GroupFamily::q12, 1);
    const auto d = normal_cosets(*g, {g->identity()});
    CHECK(d.subgroup.size() == 1);
    CHECK(d.cosets.size() == 12);
  }

  TEST_CASE("non-normal subgroup is rejected") {
    auto g = mk(GroupFamily::q12, 1);
    CHECK_THROWS_AS(normal_cosets(*g, {g->gen_y()}), Error);
  }

  TEST_CASE("quotient of Q12 by <x> is abelian of order 4n") {
    auto g = mk(GroupFamily::q12, 3);
    const auto d = normal_cosets(*g, {g->gen_x()});
    auto q = quotient_group(*g, d);
    CHECK(q->order() == 12);
    for (std::uint32_t a = 0; a < q->order(); ++a) {
      for (std::uint32_t b = 0; b < q->order(); ++b) {
        CHECK(q->mul_idx(a, b) == q->mul_idx(b, a));
      }
    }
  }

  TEST_CASE("complement subgroups for the split sections") {
    {
      auto g = mk(GroupFamily::q12, 1);
      const auto d = normal_cosets(*g, {g->gen_x()});
      const auto h = find_complement(*g, d);
      REQUIRE(h.has_value());
      CHECK(h->size() == 4);
    }
    {
      auto g = mk(GroupFamily::d12, 1);
      const GroupElem x2 = g->mul(g->gen_x(), g->gen_x());
      const auto d = normal_cosets(*g, {x2});
      const auto h = find_complement(*g, d);
      REQUIRE(h.has_value());
      CHECK(h->size() == 4);
    }
    {
      auto g = mk(GroupFamily::d12, 5);
      const auto d = normal_cosets(*g, {g->gen_z()});
      const auto h = find_complement(*g, d);
      REQUIRE(h.has_value());
      CHECK(h->size() == 12);
    }
  }

  TEST_CASE("malformed tuples are rejected") {
    auto g = mk(GroupFamily::q12, 1);
    CHECK_THROWS_AS(g->index_of(GroupElem{{3, 0, 0}}), Error);
    CHECK_THROWS_AS(g->index_of(GroupElem{{0, 0, 1}}), Error);  // n = 1 has no z range
  }
}
