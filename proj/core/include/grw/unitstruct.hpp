#pragma once

#include <cstdint>
#include <optional>

#include "grw/decomp.hpp"
#include "grw/descriptor.hpp"

namespace grw {

// (p, k, n) with the splitting n = p^r * s, gcd(p, s) = 1, and q = p^k.
struct CaseInput {
  std::uint64_t p = 2;
  std::uint32_t k = 1;
  std::uint64_t n = 1;
  std::uint64_t r = 0;   // p-adic valuation of n
  std::uint64_t pr = 1;  // p^r
  std::uint64_t s = 1;
  BigInt q;

  static CaseInput make(std::uint64_t p, std::uint32_t k, std::uint64_t n);
};

// U(FC_{p^m}) in characteristic p: C_p^{(p-1)k} x C_{q-1} for m = 1, and
// prod_{t=1}^{m} C_{p^t}^{h_t} x C_{q-1} with h_m = k(p-1),
// h_t = k p^{m-t-1} (p-1)^2 for t < m.
Descriptor cyclic_ppower_units(std::uint64_t p, std::uint32_t k, std::uint32_t m);

// U(FC_2^m) = C_{q-1}^{2^m} for odd q. Throws EvenCharacteristic.
Descriptor elem_abelian2_units(std::uint64_t p, std::uint32_t k, std::uint32_t m);

enum class AuxKind { c4, c2xc2 };

// U(F(C_n x C4)) and U(F(C_n x C2^2)) in characteristic 3, all cases
// (q mod 4 and 3|n dispatch). Always a direct product of cyclics.
Descriptor aux_structure_char3(std::uint32_t k, std::uint64_t n, AuxKind kind);

struct VPart {
  BigInt order;
  BigInt exponent;
};

// descriptor covers the full unit group for p in {2, 3}; for p > 3 it covers
// U(FG)/V and v_part carries V (possibly trivial).
struct UnitStructure {
  Descriptor descriptor;
  std::optional<VPart> v_part;
};

// Throws UnsupportedCase for p = 2 with n even.
UnitStructure unit_structure_q12(std::uint64_t p, std::uint32_t k, std::uint64_t n);
UnitStructure unit_structure_d12(std::uint64_t p, std::uint32_t k, std::uint64_t n);

// descriptor order times v_part order: the predicted |U(FG)|.
BigInt predicted_unit_count(const UnitStructure& us);

}  // namespace grw
