#include "grw/selftest.hpp"

#include <numeric>

#include "grw/decomp.hpp"
#include "grw/descriptor.hpp"
#include "grw/field.hpp"
#include "grw/rng.hpp"

namespace grw {

namespace {

CheckResult dimension_audit(std::uint64_t seed) {
  CheckResult res{"dimension-audit", true, ""};
  const std::uint64_t primes[] = {5, 7, 11, 13};
  CounterRng rng{seed};
  std::uint64_t failures = 0;
  for (std::uint64_t i = 0; i < 200; ++i) {
    const std::uint64_t p = primes[rng.below(4 * i, 4)];
    const std::uint32_t k = static_cast<std::uint32_t>(1 + rng.below(4 * i + 1, 3));
    const std::uint64_t n = 1 + rng.below(4 * i + 2, 50);
    const GroupFamily fam = rng.below(4 * i + 3, 2) ? GroupFamily::q12 : GroupFamily::d12;
    const Decomposition dec = product_decompose(fam, p, k, n);
    if (dec.dimension() + dec.radical_dim != 12 * n) {
      ++failures;
      if (res.detail.empty()) {
        res.detail = "p=" + std::to_string(p) + " k=" + std::to_string(k) +
                     " n=" + std::to_string(n);
      }
    }
  }
  res.pass = failures == 0;
  if (res.pass) res.detail = "200 random (p,k,n) instances";
  return res;
}

CheckResult cyclic_identity() {
  CheckResult res{"cyclic-multiplicity-identity", true, ""};
  const std::pair<std::uint64_t, std::uint32_t> fields[] = {{2, 1}, {3, 1}, {2, 2},
                                                            {5, 1}, {7, 1}, {3, 2}};
  std::uint64_t checked = 0;
  for (auto [p, k] : fields) {
    const BigInt q = bigint_pow(BigInt(p), k);
    for (std::uint64_t n = 1; n <= 200; ++n) {
      if (n % p == 0) continue;
      std::uint64_t sum = 1;
      for (std::uint64_t l : divisors_of(n)) {
        if (l == 1) continue;
        const std::uint64_t dl = mult_order(l, q);
        sum += dl * (euler_totient(l) / dl);
      }
      if (sum != n) {
        res.pass = false;
        res.detail = "n=" + std::to_string(n) + " q=" + q.str();
        return res;
      }
      ++checked;
    }
  }
  res.detail = std::to_string(checked) + " (n, q) pairs";
  return res;
}

CheckResult halving_rule() {
  CheckResult res{"ord(q^2)-halving", true, ""};
  const std::uint64_t qs[] = {2, 3, 5, 7, 9, 11};
  std::uint64_t checked = 0;
  for (std::uint64_t l = 2; l <= 1000; ++l) {
    for (std::uint64_t q : qs) {
      if (std::gcd(l, q) != 1) continue;
      const std::uint64_t d = mult_order(l, BigInt(q));
      const std::uint64_t dp = mult_order(l, BigInt(q) * q);
      const std::uint64_t expect = (d % 2 == 0) ? d / 2 : d;
      if (dp != expect) {
        res.pass = false;
        res.detail = "l=" + std::to_string(l) + " q=" + std::to_string(q);
        return res;
      }
      ++checked;
    }
  }
  res.detail = std::to_string(checked) + " (l, q) pairs";
  return res;
}

CheckResult order_divides_totient(std::uint64_t seed) {
  CheckResult res{"mult-order-divides-totient", true, ""};
  CounterRng rng{seed ^ 0x70707};
  std::uint64_t checked = 0;
  for (std::uint64_t i = 0; checked < 10000; ++i) {
    const std::uint64_t l = 2 + rng.below(2 * i, 9999);
    const std::uint64_t q = 2 + rng.below(2 * i + 1, 1000000);
    if (std::gcd(l, q) != 1) continue;
    const std::uint64_t d = mult_order(l, BigInt(q));
    if (euler_totient(l) % d != 0) {
      res.pass = false;
      res.detail = "l=" + std::to_string(l) + " q=" + std::to_string(q);
      return res;
    }
    ++checked;
  }
  res.detail = "10000 coprime pairs";
  return res;
}

CheckResult fc4_agreement() {
  CheckResult res{"fc4-vs-cyclic", true, ""};
  std::uint64_t checked = 0;
  for (std::uint64_t p = 3; p <= 10000; p += 2) {
    if (!is_prime(p)) continue;
    std::uint64_t q = p;
    std::uint32_t k = 1;
    while (q <= 10000) {
      const Decomposition a = fc4_decompose(p, k);
      const Decomposition b = cyclic_decompose(4, p, k);
      if (!a.same_components(b)) {
        res.pass = false;
        res.detail = "q=" + std::to_string(q);
        return res;
      }
      ++checked;
      if (q > 10000 / p) break;
      q *= p;
      ++k;
    }
  }
  res.detail = std::to_string(checked) + " odd prime powers q <= 10^4";
  return res;
}

CheckResult gl_order_brute() {
  CheckResult res{"gl2-order-vs-matrix-count", true, ""};
  const std::tuple<std::uint64_t, std::uint32_t, std::uint64_t> cases[] = {
      {2, 1, 6}, {3, 1, 48}, {2, 2, 180}, {5, 1, 480}};
  for (auto [p, k, expected] : cases) {
    auto ctx = FieldCtx::make(p, k);
    const std::uint64_t q = ctx->q();
    std::uint64_t invertible = 0;
    for (std::uint64_t a = 0; a < q; ++a) {
      for (std::uint64_t b = 0; b < q; ++b) {
        for (std::uint64_t c = 0; c < q; ++c) {
          for (std::uint64_t d = 0; d < q; ++d) {
            const FieldElem det = ctx->sub(ctx->mul(ctx->element(a), ctx->element(d)),
                                           ctx->mul(ctx->element(b), ctx->element(c)));
            invertible += !det.is_zero();
          }
        }
      }
    }
    const BigInt formula = gl_order(2, BigInt(q));
    if (invertible != expected || formula != expected) {
      res.pass = false;
      res.detail = "q=" + std::to_string(q) + " brute=" + std::to_string(invertible) +
                   " formula=" + formula.str();
      return res;
    }
  }
  res.detail = "q in {2,3,4,5}";
  return res;
}

}  // namespace

SelftestReport run_selftest(std::uint64_t seed) {
  SelftestReport report;
  report.checks.push_back(dimension_audit(seed));
  report.checks.push_back(cyclic_identity());
  report.checks.push_back(halving_rule());
  report.checks.push_back(order_divides_totient(seed));
  report.checks.push_back(fc4_agreement());
  report.checks.push_back(gl_order_brute());
  return report;
}

}  // namespace grw
