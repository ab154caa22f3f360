#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "grw/numbers.hpp"

namespace grw {

// Formal group-structure expression: cyclic and general-linear atoms combined
// by direct products, semidirect products and powers. Semidirect nodes carry
// no action data; an asserted exponent may be attached where one is known.
class Descriptor {
public:
  enum class Kind { cyclic, general_linear, direct_product, semidirect_product, power };

  static Descriptor cyclic(BigInt order);
  static Descriptor general_linear(std::uint32_t degree, BigInt field_size);
  static Descriptor direct_product(std::vector<Descriptor> factors);
  static Descriptor semidirect_product(Descriptor normal, Descriptor acting);
  static Descriptor power(Descriptor base, BigInt exponent);

  Kind kind() const { return kind_; }
  const BigInt& cyclic_order() const { return m_; }
  std::uint32_t gl_degree() const { return deg_; }
  const BigInt& gl_field_size() const { return q_; }
  const std::vector<Descriptor>& children() const { return children_; }
  const BigInt& power_exponent() const { return m_; }
  const std::optional<BigInt>& asserted_exponent() const { return asserted_exponent_; }
  Descriptor& set_asserted_exponent(BigInt e);

  BigInt order() const;

  bool operator==(const Descriptor& o) const;

private:
  Descriptor() = default;

  Kind kind_ = Kind::cyclic;
  BigInt m_ = 1;  // cyclic order, or power exponent
  std::uint32_t deg_ = 0;
  BigInt q_ = 0;
  std::vector<Descriptor> children_;
  std::optional<BigInt> asserted_exponent_;
};

// |GL(n, q)| = prod_{i=0}^{n-1} (q^n - q^i)
BigInt gl_order(std::uint32_t degree, const BigInt& q);

struct DescriptorEval {
  BigInt order;
  bool is_abelian = false;
  // Elementary divisors (ascending prime powers); nullopt when not abelian or
  // when a cyclic order resists the trial-division factoring bound.
  std::optional<std::vector<BigInt>> abelian_invariants;
  // lcm of cyclic orders when abelian, else the asserted exponent if any.
  std::optional<BigInt> exponent;
};

DescriptorEval evaluate(const Descriptor& d);

// ASCII rendering in the notation C_m, GL(d, F_q), x, |x, ^e.
std::string to_text(const Descriptor& d);

}  // namespace grw
