#include "grw/unitstruct.hpp"

#include "grw/errors.hpp"

namespace grw {

CaseInput CaseInput::make(std::uint64_t p, std::uint32_t k, std::uint64_t n) {
  if (!is_prime(p)) fail(errc::not_prime, "p must be prime");
  if (k < 1) fail(errc::degree_zero, "k must be >= 1");
  if (n < 1) fail(errc::range_error, "n must be >= 1");
  CaseInput ci;
  ci.p = p;
  ci.k = k;
  ci.n = n;
  ci.s = n;
  ci.r = 0;
  ci.pr = 1;
  while (ci.s % p == 0) {
    ci.s /= p;
    ci.pr *= p;
    ++ci.r;
  }
  ci.q = bigint_pow(BigInt(p), k);
  return ci;
}

Descriptor cyclic_ppower_units(std::uint64_t p, std::uint32_t k, std::uint32_t m) {
  if (!is_prime(p)) fail(errc::not_prime, "p must be prime");
  if (m < 1) fail(errc::range_error, "m must be >= 1");
  const BigInt q = bigint_pow(BigInt(p), k);
  std::vector<Descriptor> factors;
  if (m == 1) {
    factors.push_back(Descriptor::power(Descriptor::cyclic(BigInt(p)), BigInt(p - 1) * k));
  } else {
    for (std::uint32_t t = 1; t <= m; ++t) {
      BigInt h;
      if (t == m) {
        h = BigInt(k) * (p - 1);
      } else {
        h = BigInt(k) * bigint_pow(BigInt(p), m - t - 1) * (p - 1) * (p - 1);
      }
      factors.push_back(Descriptor::power(Descriptor::cyclic(bigint_pow(BigInt(p), t)), h));
    }
  }
  factors.push_back(Descriptor::cyclic(q - 1));
  return Descriptor::direct_product(std::move(factors));
}

Descriptor elem_abelian2_units(std::uint64_t p, std::uint32_t k, std::uint32_t m) {
  if (p == 2) fail(errc::even_characteristic, "needs odd characteristic");
  if (!is_prime(p)) fail(errc::not_prime, "p must be prime");
  const BigInt q = bigint_pow(BigInt(p), k);
  if (m == 0) return Descriptor::cyclic(q - 1);
  return Descriptor::power(Descriptor::cyclic(q - 1), bigint_pow(BigInt(2), m));
}

Descriptor aux_structure_char3(std::uint32_t k, std::uint64_t n, AuxKind kind) {
  const CaseInput ci = CaseInput::make(3, k, n);
  const BigInt& q = ci.q;
  const bool q1mod4 = (powmod_u64(3, k, 4) == 1);
  const std::uint64_t div_range = (ci.r == 0) ? n : ci.s;

  std::vector<Descriptor> factors;
  if (kind == AuxKind::c2xc2 || q1mod4) {
    factors.push_back(Descriptor::power(Descriptor::cyclic(q - 1), BigInt(4)));
  } else {
    factors.push_back(Descriptor::power(Descriptor::cyclic(q - 1), BigInt(2)));
    factors.push_back(Descriptor::cyclic(q * q - 1));
  }
  for (std::uint64_t l : divisors_of(div_range)) {
    if (l == 1) continue;
    const std::uint64_t dl = mult_order(l, q);
    const std::uint64_t el = euler_totient(l) / dl;
    const BigInt q_dl = bigint_pow(q, dl);
    if (kind == AuxKind::c2xc2 || q1mod4) {
      factors.push_back(Descriptor::power(Descriptor::cyclic(q_dl - 1), BigInt(4) * el));
    } else {
      // quadratic-extension part: components of F_2 C_n have F-degree 2*d'_l
      const std::uint64_t dpl = mult_order(l, q * q);
      const std::uint64_t epl = euler_totient(l) / dpl;
      factors.push_back(Descriptor::power(Descriptor::cyclic(q_dl - 1), BigInt(2) * el));
      factors.push_back(
          Descriptor::power(Descriptor::cyclic(bigint_pow(q, 2 * dpl) - 1), BigInt(epl)));
    }
  }
  if (ci.r > 0) {
    for (std::uint64_t t = 1; t <= ci.r; ++t) {
      BigInt nt;
      if (t == ci.r) {
        nt = BigInt(2) * k;
      } else {
        nt = BigInt(4) * k * bigint_pow(BigInt(3), ci.r - t - 1);
      }
      const BigInt c3t = bigint_pow(BigInt(3), t);
      if (kind == AuxKind::c2xc2 || q1mod4) {
        factors.push_back(Descriptor::power(Descriptor::cyclic(c3t), BigInt(4) * ci.s * nt));
      } else {
        factors.push_back(Descriptor::power(Descriptor::cyclic(c3t), BigInt(2) * ci.s * nt));
        factors.push_back(Descriptor::power(Descriptor::cyclic(c3t), BigInt(2) * ci.s * nt));
      }
    }
  }
  return Descriptor::direct_product(std::move(factors));
}

namespace {

// The kernel subgroup V = 1 + omega(K) in characteristic 3: C_3^{6nk} |x C_3^{2nk},
// exponent 3.
Descriptor v_descriptor_char3(std::uint32_t k, std::uint64_t n) {
  Descriptor v = Descriptor::semidirect_product(
      Descriptor::power(Descriptor::cyclic(BigInt(3)), BigInt(6) * n * k),
      Descriptor::power(Descriptor::cyclic(BigInt(3)), BigInt(2) * n * k));
  v.set_asserted_exponent(BigInt(3));
  return v;
}

// prod over divisors l > 1 of range: (C_{q^dl - 1} x GL(2, F_{q^dl}))^{el}
std::vector<Descriptor> char2_divisor_factors(const BigInt& q, std::uint64_t range) {
  std::vector<Descriptor> out;
  for (std::uint64_t l : divisors_of(range)) {
    if (l == 1) continue;
    const std::uint64_t dl = mult_order(l, q);
    const std::uint64_t el = euler_totient(l) / dl;
    const BigInt q_dl = bigint_pow(q, dl);
    out.push_back(Descriptor::power(
        Descriptor::direct_product({Descriptor::cyclic(q_dl - 1),
                                    Descriptor::general_linear(2, q_dl)}),
        BigInt(el)));
  }
  return out;
}

}  // namespace

UnitStructure unit_structure_q12(std::uint64_t p, std::uint32_t k, std::uint64_t n) {
  const CaseInput ci = CaseInput::make(p, k, n);
  const BigInt& q = ci.q;
  UnitStructure us{Descriptor::cyclic(BigInt(1)), std::nullopt};

  if (p == 2) {
    if (n % 2 == 0) {
      fail(errc::unsupported_case, "no closed form for p = 2 with n even");
    }
    Descriptor normal = Descriptor::direct_product(
        {Descriptor::power(Descriptor::cyclic(BigInt(2)), BigInt(5) * n * k),
         Descriptor::power(Descriptor::cyclic(BigInt(4)), BigInt(n) * k)});
    std::vector<Descriptor> acting{Descriptor::cyclic(q - 1), Descriptor::general_linear(2, q)};
    for (auto& f : char2_divisor_factors(q, n)) acting.push_back(std::move(f));
    us.descriptor = Descriptor::semidirect_product(std::move(normal),
                                                   Descriptor::direct_product(std::move(acting)));
    return us;
  }

  if (p == 3) {
    us.descriptor = Descriptor::semidirect_product(v_descriptor_char3(k, n),
                                                   aux_structure_char3(k, n, AuxKind::c4));
    return us;
  }

  // p > 3: descriptor covers U(FG)/V; V has order p^{12sk(p^r-1)},
  // exponent p^r.
  const std::uint64_t q_mod12 = powmod_u64(p, k, 12);
  std::vector<Descriptor> factors;
  if (q_mod12 == 1 || q_mod12 == 5) {
    factors.push_back(Descriptor::power(Descriptor::cyclic(q - 1), BigInt(4)));
    factors.push_back(Descriptor::power(Descriptor::general_linear(2, q), BigInt(2)));
    for (std::uint64_t l : divisors_of(ci.s)) {
      if (l == 1) continue;
      const std::uint64_t dl = mult_order(l, q);
      const std::uint64_t el = euler_totient(l) / dl;
      const BigInt q_dl = bigint_pow(q, dl);
      factors.push_back(Descriptor::power(
          Descriptor::direct_product(
              {Descriptor::power(Descriptor::cyclic(q_dl - 1), BigInt(4)),
               Descriptor::power(Descriptor::general_linear(2, q_dl), BigInt(2))}),
          BigInt(el)));
    }
  } else {
    factors.push_back(Descriptor::power(Descriptor::cyclic(q - 1), BigInt(2)));
    factors.push_back(Descriptor::cyclic(q * q - 1));
    factors.push_back(Descriptor::power(Descriptor::general_linear(2, q), BigInt(2)));
    for (std::uint64_t l : divisors_of(ci.s)) {
      if (l == 1) continue;
      const std::uint64_t dl = mult_order(l, q);
      const std::uint64_t el = euler_totient(l) / dl;
      const BigInt q_dl = bigint_pow(q, dl);
      factors.push_back(Descriptor::power(
          Descriptor::direct_product(
              {Descriptor::power(Descriptor::cyclic(q_dl - 1), BigInt(2)),
               Descriptor::cyclic(bigint_pow(q, 2 * dl) - 1),
               Descriptor::power(Descriptor::general_linear(2, q_dl), BigInt(2))}),
          BigInt(el)));
    }
  }
  us.descriptor = Descriptor::direct_product(std::move(factors));
  us.v_part = VPart{bigint_pow(BigInt(p), 12 * ci.s * k * (ci.pr - 1)),
                    BigInt(ci.pr)};
  return us;
}

UnitStructure unit_structure_d12(std::uint64_t p, std::uint32_t k, std::uint64_t n) {
  const CaseInput ci = CaseInput::make(p, k, n);
  const BigInt& q = ci.q;
  UnitStructure us{Descriptor::cyclic(BigInt(1)), std::nullopt};

  if (p == 2) {
    if (n % 2 == 0) {
      fail(errc::unsupported_case, "no closed form for p = 2 with n even");
    }
    Descriptor normal = Descriptor::power(Descriptor::cyclic(BigInt(2)), BigInt(7) * n * k);
    std::vector<Descriptor> acting{Descriptor::cyclic(q - 1), Descriptor::general_linear(2, q)};
    for (auto& f : char2_divisor_factors(q, n)) acting.push_back(std::move(f));
    us.descriptor = Descriptor::semidirect_product(std::move(normal),
                                                   Descriptor::direct_product(std::move(acting)));
    return us;
  }

  if (p == 3) {
    us.descriptor = Descriptor::semidirect_product(v_descriptor_char3(k, n),
                                                   aux_structure_char3(k, n, AuxKind::c2xc2));
    return us;
  }

  std::vector<Descriptor> factors;
  factors.push_back(Descriptor::power(Descriptor::cyclic(q - 1), BigInt(4)));
  factors.push_back(Descriptor::power(Descriptor::general_linear(2, q), BigInt(2)));
  for (std::uint64_t l : divisors_of(ci.s)) {
    if (l == 1) continue;
    const std::uint64_t dl = mult_order(l, q);
    const std::uint64_t el = euler_totient(l) / dl;
    const BigInt q_dl = bigint_pow(q, dl);
    factors.push_back(Descriptor::power(
        Descriptor::direct_product(
            {Descriptor::power(Descriptor::cyclic(q_dl - 1), BigInt(4)),
             Descriptor::power(Descriptor::general_linear(2, q_dl), BigInt(2))}),
        BigInt(el)));
  }
  us.descriptor = Descriptor::direct_product(std::move(factors));
  us.v_part = VPart{bigint_pow(BigInt(p), 12 * ci.s * k * (ci.pr - 1)),
                    BigInt(ci.pr)};
  return us;
}

BigInt predicted_unit_count(const UnitStructure& us) {
  BigInt count = us.descriptor.order();
  if (us.v_part) count *= us.v_part->order;
  return count;
}

}  // namespace grw
