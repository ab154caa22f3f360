#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>

#include "grw/decomp.hpp"
#include "grw/errors.hpp"
#include "grw/rng.hpp"
#include "grw/serialize.hpp"

using namespace grw;

namespace {

Component comp(std::uint32_t m, std::uint32_t d, std::uint64_t e) { return Component{m, d, e}; }

// Independent oracle for FC_n over GF(q): the irreducible factor degrees of
// x^n - 1 are the orbit sizes of multiplication by q on Z/n.
std::map<std::uint64_t, std::uint64_t> cyclotomic_orbit_degrees(std::uint64_t n, std::uint64_t q) {
  std::map<std::uint64_t, std::uint64_t> degree_counts;
  std::vector<bool> seen(n, false);
  for (std::uint64_t start = 0; start < n; ++start) {
    if (seen[start]) continue;
    std::uint64_t size = 0, cur = start;
    do {
      seen[cur] = true;
      ++size;
      cur = cur * q % n;
    } while (cur != start);
    ++degree_counts[size];
  }
  return degree_counts;
}

}  // namespace

TEST_SUITE("decomp") {
  TEST_CASE("FC7 over GF(2): F + two cubic components") {
    const Decomposition dec = cyclic_decompose(7, 2, 1);
    REQUIRE(dec.components.size() == 2);
    CHECK(dec.components[0] == comp(1, 1, 1));
    CHECK(dec.components[1] == comp(1, 3, 2));
    CHECK(dec.dimension() == 7);
    // oracle: orbit sizes of doubling mod 7 are {1, 3, 3}
    const auto orbits = cyclotomic_orbit_degrees(7, 2);
    CHECK(orbits.at(1) == 1);
    CHECK(orbits.at(3) == 2);
  }

  TEST_CASE("FC1 is just F") {
    const Decomposition dec = cyclic_decompose(1, 3, 1);
    REQUIRE(dec.components.size() == 1);
    CHECK(dec.components[0] == comp(1, 1, 1));
  }

  TEST_CASE("FC4 over GF(3): F^2 + F_2") {
    const Decomposition dec = cyclic_decompose(4, 3, 1);
    REQUIRE(dec.components.size() == 2);
    CHECK(dec.components[0] == comp(1, 1, 2));
    CHECK(dec.components[1] == comp(1, 2, 1));
  }

  TEST_CASE("cyclic components match the cyclotomic orbit oracle") {
    CounterRng rng{0xC0FFEE};
    std::uint64_t checked = 0;
    for (std::uint64_t i = 0; checked < 60; ++i) {
      const std::uint64_t n = 1 + rng.below(3 * i, 100);
      const std::uint64_t ps[] = {2, 3, 5, 7};
      const std::uint64_t p = ps[rng.below(3 * i + 1, 4)];
      const std::uint32_t k = static_cast<std::uint32_t>(1 + rng.below(3 * i + 2, 2));
      if (n % p == 0) continue;
      std::uint64_t q = 1;
      for (std::uint32_t t = 0; t < k; ++t) q *= p;
      const Decomposition dec = cyclic_decompose(n, p, k);
      std::map<std::uint64_t, std::uint64_t> from_dec;
      for (const auto& c : dec.components) {
        REQUIRE(c.m == 1);
        from_dec[c.d] += c.e;
      }
      CHECK(from_dec == cyclotomic_orbit_degrees(n, q));
      ++checked;
    }
  }

  TEST_CASE("coprimality is required") {
    CHECK_THROWS_AS(cyclic_decompose(6, 3, 1), Error);
    CHECK_THROWS_AS(cyclic_decompose(4, 2, 1), Error);
  }

  TEST_CASE("FC4 case split") {
    const Decomposition q5 = fc4_decompose(5, 1);
    REQUIRE(q5.components.size() == 1);
    CHECK(q5.components[0] == comp(1, 1, 4));

    const Decomposition q3 = fc4_decompose(3, 1);
    REQUIRE(q3.components.size() == 2);
    CHECK(q3.components[0] == comp(1, 1, 2));
    CHECK(q3.components[1] == comp(1, 2, 1));

    const Decomposition q9 = fc4_decompose(3, 2);  // 9 = 1 mod 4
    REQUIRE(q9.components.size() == 1);
    CHECK(q9.components[0] == comp(1, 1, 4));

    CHECK_THROWS_AS(fc4_decompose(2, 1), Error);
  }

  TEST_CASE("fc4 agrees with cyclic_decompose(4, q) for odd prime powers up to 10^4") {
    for (std::uint64_t p = 3; p <= 10000; p += 2) {
      if (!is_prime(p)) continue;
      std::uint64_t q = p;
      std::uint32_t k = 1;
      while (q <= 10000) {
        CHECK(fc4_decompose(p, k).same_components(cyclic_decompose(4, p, k)));
        if (q > 10000 / p) break;
        q *= p;
        ++k;
      }
    }
  }

  TEST_CASE("FQ12 case split") {
    const Decomposition q5 = fq12_decompose(5, 1);  // 5 mod 12
    CHECK(q5.components == std::vector<Component>{comp(1, 1, 4), comp(2, 1, 2)});
    CHECK(q5.dimension() == 12);

    const Decomposition q7 = fq12_decompose(7, 1);  // -5 mod 12
    CHECK(q7.components == std::vector<Component>{comp(1, 1, 2), comp(1, 2, 1), comp(2, 1, 2)});
    CHECK(q7.dimension() == 12);

    const Decomposition q25 = fq12_decompose(5, 2);  // 25 = 1 mod 12
    CHECK(q25.components == std::vector<Component>{comp(1, 1, 4), comp(2, 1, 2)});

    const Decomposition q11 = fq12_decompose(11, 1);  // -1 mod 12
    CHECK(q11.components == std::vector<Component>{comp(1, 1, 2), comp(1, 2, 1), comp(2, 1, 2)});

    CHECK_THROWS_AS(fq12_decompose(3, 1), Error);
    CHECK_THROWS_AS(fq12_decompose(2, 1), Error);
  }

  TEST_CASE("FD12 has no residue split") {
    for (std::uint64_t p : {5ull, 7ull, 11ull, 13ull}) {
      const Decomposition dec = fd12_decompose(p, 1);
      CHECK(dec.components == std::vector<Component>{comp(1, 1, 4), comp(2, 1, 2)});
      CHECK(dec.dimension() == 12);
    }
    CHECK_THROWS_AS(fd12_decompose(3, 1), Error);
  }

  TEST_CASE("product decomposition examples") {
    const Decomposition d1 = product_decompose(GroupFamily::d12, 5, 1, 1);
    CHECK(d1.components == std::vector<Component>{comp(1, 1, 4), comp(2, 1, 2)});
    CHECK(d1.radical_dim == 0);

    const Decomposition d5 = product_decompose(GroupFamily::d12, 5, 1, 5);
    CHECK(d5.components == std::vector<Component>{comp(1, 1, 4), comp(2, 1, 2)});
    CHECK(d5.radical_dim == 48);  // 12 * 1 * (5 - 1)
    CHECK(d5.dimension() + d5.radical_dim == 60);

    const Decomposition q3 = product_decompose(GroupFamily::q12, 5, 1, 3);
    CHECK(q3.components == std::vector<Component>{comp(1, 1, 4), comp(1, 2, 4), comp(2, 1, 2),
                                                  comp(2, 2, 2)});
    CHECK(q3.radical_dim == 0);
    CHECK(q3.dimension() == 36);
  }

  TEST_CASE("dimension audit on random inputs") {
    CounterRng rng{0xC0FFEE};
    const std::uint64_t primes[] = {5, 7, 11, 13};
    for (std::uint64_t i = 0; i < 50; ++i) {
      const std::uint64_t p = primes[rng.below(4 * i, 4)];
      const std::uint32_t k = static_cast<std::uint32_t>(1 + rng.below(4 * i + 1, 3));
      const std::uint64_t n = 1 + rng.below(4 * i + 2, 50);
      const GroupFamily fam = rng.below(4 * i + 3, 2) ? GroupFamily::q12 : GroupFamily::d12;
      const Decomposition dec = product_decompose(fam, p, k, n);
      CHECK(dec.dimension() + dec.radical_dim == 12 * n);
    }
  }

  TEST_CASE("small characteristic is rejected for the product rule") {
    CHECK_THROWS_AS(product_decompose(GroupFamily::q12, 3, 1, 1), Error);
    CHECK_THROWS_AS(product_decompose(GroupFamily::d12, 2, 1, 1), Error);
  }

  TEST_CASE("decomposition JSON shape") {
    const auto j = to_json(product_decompose(GroupFamily::d12, 5, 1, 5));
    CHECK(j.at("q").get<std::uint64_t>() == 5);
    CHECK(j.at("radical_dim").get<std::uint64_t>() == 48);
    CHECK(j.at("components").size() == 2);
    CHECK(j.at("components")[0].at("m") == 1);
    CHECK(j.at("components")[0].at("e") == 4);
  }
}
