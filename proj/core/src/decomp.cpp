#include "grw/decomp.hpp"

#include <algorithm>
#include <numeric>

namespace grw {

std::uint64_t Decomposition::dimension() const {
  std::uint64_t dim = 0;
  for (const auto& c : components) {
    dim += c.e * c.m * c.m * c.d;
  }
  return dim;
}

void Decomposition::add(std::uint32_t m, std::uint32_t d, std::uint64_t e) {
  if (e == 0) return;
  for (auto& c : components) {
    if (c.m == m && c.d == d) {
      c.e += e;
      return;
    }
  }
  components.push_back(Component{m, d, e});
  std::sort(components.begin(), components.end(), [](const Component& a, const Component& b) {
    return std::tie(a.m, a.d) < std::tie(b.m, b.d);
  });
}

Decomposition cyclic_decompose(std::uint64_t n, std::uint64_t p, std::uint32_t k) {
  if (n == 0) fail(errc::range_error, "cyclic group order must be positive");
  if (n % p == 0) fail(errc::not_coprime, "cyclic_decompose requires gcd(n, p) = 1");
  Decomposition dec;
  dec.p = p;
  dec.k = k;
  dec.algebra = "FC" + std::to_string(n);
  dec.add(1, 1, 1);
  const BigInt q = bigint_pow(BigInt(p), k);
  for (std::uint64_t l : divisors_of(n)) {
    if (l == 1) continue;
    const std::uint64_t dl = mult_order(l, q);
    dec.add(1, static_cast<std::uint32_t>(dl), euler_totient(l) / dl);
  }
  return dec;
}

Decomposition fc4_decompose(std::uint64_t p, std::uint32_t k) {
  if (p == 2) fail(errc::even_characteristic, "FC4 decomposition needs odd characteristic");
  Decomposition dec;
  dec.p = p;
  dec.k = k;
  dec.algebra = "FC4";
  const std::uint64_t q_mod4 = powmod_u64(p, k, 4);
  if (q_mod4 == 1) {
    dec.add(1, 1, 4);
  } else {
    dec.add(1, 1, 2);
    dec.add(1, 2, 1);
  }
  return dec;
}

namespace {

// Components of FQ12 over a field with q' = q^d elements, expressed over the
// base field (extension degrees scaled by d), with outer multiplicity e.
void add_fq12_at(Decomposition& dec, std::uint64_t q_mod12, std::uint32_t d, std::uint64_t e) {
  if (q_mod12 == 1 || q_mod12 == 5) {
    dec.add(1, d, 4 * e);
    dec.add(2, d, 2 * e);
  } else {
    dec.add(1, d, 2 * e);
    dec.add(1, 2 * d, e);
    dec.add(2, d, 2 * e);
  }
}

void add_fd12_at(Decomposition& dec, std::uint32_t d, std::uint64_t e) {
  dec.add(1, d, 4 * e);
  dec.add(2, d, 2 * e);
}

}  // namespace

Decomposition fq12_decompose(std::uint64_t p, std::uint32_t k) {
  if (p <= 3) fail(errc::small_characteristic, "FQ12 is not semisimple for p <= 3");
  Decomposition dec;
  dec.p = p;
  dec.k = k;
  dec.algebra = "FQ12";
  add_fq12_at(dec, powmod_u64(p, k, 12), 1, 1);
  return dec;
}

Decomposition fd12_decompose(std::uint64_t p, std::uint32_t k) {
  if (p <= 3) fail(errc::small_characteristic, "FD12 is not semisimple for p <= 3");
  Decomposition dec;
  dec.p = p;
  dec.k = k;
  dec.algebra = "FD12";
  add_fd12_at(dec, 1, 1);
  return dec;
}

Decomposition product_decompose(GroupFamily family, std::uint64_t p, std::uint32_t k,
                                std::uint64_t n) {
  if (family != GroupFamily::q12 && family != GroupFamily::d12) {
    fail(errc::invalid_argument, "product_decompose expects the q12 or d12 family");
  }
  if (p <= 3) fail(errc::small_characteristic, "decomposition formulas require p > 3");
  if (n == 0) fail(errc::range_error, "n must be positive");
  // n = p^r * s with gcd(p, s) = 1
  std::uint64_t s = n, pr = 1;
  while (s % p == 0) {
    s /= p;
    pr *= p;
  }
  Decomposition dec;
  dec.p = p;
  dec.k = k;
  dec.algebra = std::string("F(C") + std::to_string(n) + " x " +
                (family == GroupFamily::q12 ? "Q12" : "D12") + ")";
  dec.radical_dim = 12 * s * (pr - 1);
  const BigInt q = bigint_pow(BigInt(p), k);
  for (std::uint64_t l : divisors_of(s)) {
    std::uint32_t dl = 1;
    std::uint64_t el = 1;
    if (l > 1) {
      dl = static_cast<std::uint32_t>(mult_order(l, q));
      el = euler_totient(l) / dl;
    }
    if (family == GroupFamily::q12) {
      const std::uint64_t q_dl_mod12 = powmod_u64(powmod_u64(p, k, 12), dl, 12);
      add_fq12_at(dec, q_dl_mod12, dl, el);
    } else {
      add_fd12_at(dec, dl, el);
    }
  }
  return dec;
}

}  // namespace grw
