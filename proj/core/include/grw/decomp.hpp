#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "grw/group.hpp"
#include "grw/numbers.hpp"

namespace grw {

// One Wedderburn component M(m, F_d) with multiplicity e; F_d is the extension
// of the base field of degree d.
struct Component {
  std::uint32_t m = 1;  // matrix degree
  std::uint32_t d = 1;  // extension degree over the base field
  std::uint64_t e = 1;  // multiplicity

  bool operator==(const Component& o) const { return m == o.m && d == o.d && e == o.e; }
};

// Multiset of simple components of a semisimple algebra over GF(p^k), plus the
// radical dimension of the algebra it was cut from. Components are kept sorted
// by (m, d) with equal shapes merged, so equality is multiset equality.
struct Decomposition {
  std::uint64_t p = 0;
  std::uint32_t k = 1;
  std::string algebra;
  std::vector<Component> components;
  std::uint64_t radical_dim = 0;

  std::uint64_t dimension() const;  // sum of e * m^2 * d
  void add(std::uint32_t m, std::uint32_t d, std::uint64_t e);
  bool same_components(const Decomposition& o) const { return components == o.components; }
};

// FC_n over GF(p^k) with gcd(n, p) = 1: F + one component of degree ord_l(q)
// and multiplicity phi(l)/ord_l(q) per divisor l > 1 of n. Throws NotCoprime.
Decomposition cyclic_decompose(std::uint64_t n, std::uint64_t p, std::uint32_t k);

// FC_4, p odd: F^4 when q = 1 mod 4, else F^2 + F_2. Throws EvenCharacteristic.
Decomposition fc4_decompose(std::uint64_t p, std::uint32_t k);

// FQ12, p > 3: F^4 + M(2,F)^2 when q = +-1... precisely q = 1,5 mod 12;
// F^2 + F_2 + M(2,F)^2 when q = 7,11 mod 12. Throws SmallCharacteristic.
Decomposition fq12_decompose(std::uint64_t p, std::uint32_t k);

// FD12, p > 3: always F^4 + M(2,F)^2. Throws SmallCharacteristic.
Decomposition fd12_decompose(std::uint64_t p, std::uint32_t k);

// Full decomposition of F(C_n x G)/J for G in {Q12, D12}, p > 3, n = p^r s:
// the semisimple part F(C_s x G) via the tensor rule over divisors of s, and
// radical_dim = 12 s (p^r - 1).
Decomposition product_decompose(GroupFamily family, std::uint64_t p, std::uint32_t k,
                                std::uint64_t n);

}  // namespace grw
