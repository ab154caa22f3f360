#include <doctest.h>

#include <set>
#include <vector>

#include "grw/errors.hpp"
#include "grw/field.hpp"
#include "grw/rng.hpp"

using namespace grw;

TEST_SUITE("field") {
  TEST_CASE("construction basics") {
    auto f2 = FieldCtx::make(2, 1);
    CHECK(f2->q() == 2);
    CHECK(f2->modulus() == std::vector<std::uint32_t>{1, 1});  // x + 1

    auto f9 = FieldCtx::make(3, 2);
    CHECK(f9->q() == 9);

    auto f125 = FieldCtx::make(5, 3);
    CHECK(f125->q() == 125);
  }

  TEST_CASE("construction is deterministic") {
    auto a = FieldCtx::make(7, 3);
    auto b = FieldCtx::make(7, 3);
    CHECK(a->modulus() == b->modulus());
  }

  TEST_CASE("construction errors") {
    CHECK_THROWS_AS(FieldCtx::make(4, 1), Error);
    CHECK_THROWS_AS(FieldCtx::make(1, 1), Error);
    CHECK_THROWS_AS(FieldCtx::make(2, 0), Error);
    CHECK_THROWS_AS(FieldCtx::make(2, 80), Error);           // 2^80 over the bound
    CHECK_THROWS_AS(FieldCtx::make(5, 3, 100), Error);       // explicit bound
    CHECK_THROWS_AS(FieldCtx::make((1ull << 31) + 11, 1), Error);
  }

  TEST_CASE("small examples") {
    auto f2 = FieldCtx::make(2, 1);
    CHECK(f2->add(f2->one(), f2->one()) == f2->zero());

    auto f3 = FieldCtx::make(3, 1);
    CHECK(f3->inv(f3->from_int(2)) == f3->from_int(2));

    auto f9 = FieldCtx::make(3, 2);
    for (std::uint64_t i = 1; i < 9; ++i) {
      CHECK(f9->pow(f9->element(i), BigInt(8)) == f9->one());
    }
  }

  TEST_CASE("every nonzero element of GF(125) has order dividing 124") {
    auto f = FieldCtx::make(5, 3);
    for (std::uint64_t i = 1; i < 125; ++i) {
      CHECK(f->pow(f->element(i), BigInt(124)) == f->one());
    }
  }

  TEST_CASE("field axioms, exhaustive on GF(8) and GF(9)") {
    for (auto [p, k] : std::vector<std::pair<std::uint64_t, unsigned>>{{2, 3}, {3, 2}}) {
      auto f = FieldCtx::make(p, k);
      const std::uint64_t q = f->q();
      for (std::uint64_t a = 0; a < q; ++a) {
        for (std::uint64_t b = 0; b < q; ++b) {
          const FieldElem ea = f->element(a), eb = f->element(b);
          CHECK(ea + eb == eb + ea);
          CHECK(ea * eb == eb * ea);
          for (std::uint64_t c = 0; c < q; ++c) {
            const FieldElem ec = f->element(c);
            CHECK((ea + eb) + ec == ea + (eb + ec));
            CHECK((ea * eb) * ec == ea * (eb * ec));
            CHECK(ea * (eb + ec) == ea * eb + ea * ec);
          }
        }
      }
    }
  }

  TEST_CASE("Frobenius is additive, exhaustive for q <= 81") {
    for (auto [p, k] : std::vector<std::pair<std::uint64_t, unsigned>>{
             {2, 2}, {2, 3}, {3, 2}, {3, 3}, {5, 2}, {7, 2}, {3, 4}}) {
      auto f = FieldCtx::make(p, k);
      const std::uint64_t q = f->q();
      for (std::uint64_t a = 0; a < q; ++a) {
        for (std::uint64_t b = 0; b < q; ++b) {
          const FieldElem ea = f->element(a), eb = f->element(b);
          CHECK(f->pow(ea + eb, BigInt(p)) == f->pow(ea, BigInt(p)) + f->pow(eb, BigInt(p)));
        }
      }
    }
  }

  TEST_CASE("Frobenius is additive, randomized on GF(125)") {
    auto f = FieldCtx::make(5, 3);
    CounterRng rng{0xC0FFEE};
    for (std::uint64_t i = 0; i < 100; ++i) {
      const FieldElem a = f->element(rng.below(2 * i, 125));
      const FieldElem b = f->element(rng.below(2 * i + 1, 125));
      CHECK(f->pow(a + b, BigInt(5)) == f->pow(a, BigInt(5)) + f->pow(b, BigInt(5)));
    }
  }

  TEST_CASE("inversion is an involutive bijection on nonzero elements") {
    for (auto [p, k] : std::vector<std::pair<std::uint64_t, unsigned>>{
             {2, 1}, {3, 1}, {2, 4}, {3, 4}, {7, 2}, {13, 1}}) {
      auto f = FieldCtx::make(p, k);
      const std::uint64_t q = f->q();
      std::set<std::uint64_t> images;
      for (std::uint64_t a = 1; a < q; ++a) {
        const FieldElem inv = f->inv(f->element(a));
        CHECK(f->mul(f->element(a), inv) == f->one());
        CHECK(f->inv(inv) == f->element(a));
        images.insert(f->index_of(inv));
      }
      CHECK(images.size() == q - 1);
    }
  }

  TEST_CASE("inverse of zero throws") {
    auto f = FieldCtx::make(3, 2);
    CHECK_THROWS_AS(f->inv(f->zero()), Error);
  }

  TEST_CASE("context mismatch is rejected") {
    auto a = FieldCtx::make(3, 1);
    auto b = FieldCtx::make(5, 1);
    CHECK_THROWS_AS(a->add(a->one(), b->one()), Error);
  }
}
