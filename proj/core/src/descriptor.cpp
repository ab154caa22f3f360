#include "grw/descriptor.hpp"

#include <algorithm>
#include <map>

#include "grw/errors.hpp"

namespace grw {

Descriptor Descriptor::cyclic(BigInt order) {
  if (order < 1) fail(errc::range_error, "cyclic order must be >= 1");
  Descriptor d;
  d.kind_ = Kind::cyclic;
  d.m_ = std::move(order);
  return d;
}

Descriptor Descriptor::general_linear(std::uint32_t degree, BigInt field_size) {
  if (degree < 1 || field_size < 2) fail(errc::range_error, "bad general linear parameters");
  Descriptor d;
  d.kind_ = Kind::general_linear;
  d.deg_ = degree;
  d.q_ = std::move(field_size);
  return d;
}

Descriptor Descriptor::direct_product(std::vector<Descriptor> factors) {
  if (factors.size() == 1) return std::move(factors[0]);
  Descriptor d;
  d.kind_ = Kind::direct_product;
  d.children_ = std::move(factors);
  return d;
}

Descriptor Descriptor::semidirect_product(Descriptor normal, Descriptor acting) {
  Descriptor d;
  d.kind_ = Kind::semidirect_product;
  d.children_.push_back(std::move(normal));
  d.children_.push_back(std::move(acting));
  return d;
}

Descriptor Descriptor::power(Descriptor base, BigInt exponent) {
  if (exponent < 0) fail(errc::range_error, "power exponent must be >= 0");
  Descriptor d;
  d.kind_ = Kind::power;
  d.children_.push_back(std::move(base));
  d.m_ = std::move(exponent);
  return d;
}

Descriptor& Descriptor::set_asserted_exponent(BigInt e) {
  asserted_exponent_ = std::move(e);
  return *this;
}

BigInt gl_order(std::uint32_t degree, const BigInt& q) {
  const BigInt qn = bigint_pow(q, degree);
  BigInt order = 1;
  BigInt qi = 1;
  for (std::uint32_t i = 0; i < degree; ++i) {
    order *= qn - qi;
    qi *= q;
  }
  return order;
}

BigInt Descriptor::order() const {
  switch (kind_) {
    case Kind::cyclic:
      return m_;
    case Kind::general_linear:
      return gl_order(deg_, q_);
    case Kind::direct_product: {
      BigInt o = 1;
      for (const auto& c : children_) o *= c.order();
      return o;
    }
    case Kind::semidirect_product:
      return children_[0].order() * children_[1].order();
    case Kind::power: {
      if (m_ == 0) return 1;
      BigInt base = children_[0].order();
      if (base == 1) return 1;
      BigInt acc = 1, b = base, e = m_;
      while (e > 0) {
        if (boost::multiprecision::bit_test(e, 0)) acc *= b;
        e >>= 1;
        if (e > 0) b *= b;
      }
      return acc;
    }
  }
  return 1;
}

bool Descriptor::operator==(const Descriptor& o) const {
  return kind_ == o.kind_ && m_ == o.m_ && deg_ == o.deg_ && q_ == o.q_ &&
         children_ == o.children_ && asserted_exponent_ == o.asserted_exponent_;
}

namespace {

constexpr std::uint64_t kFactorBound = 1000000;

// Trial-division factorization of a BigInt; nullopt when a cofactor survives
// beyond the bound.
std::optional<std::map<BigInt, unsigned>> factor_bigint(BigInt m) {
  std::map<BigInt, unsigned> out;
  for (std::uint64_t d = 2; d <= kFactorBound && BigInt(d) * d <= m; d = (d == 2) ? 3 : d + 2) {
    while (m % d == 0) {
      ++out[BigInt(d)];
      m /= d;
    }
  }
  if (m > 1) {
    if (m > BigInt(kFactorBound) * kFactorBound) return std::nullopt;
    ++out[m];
  }
  return out;
}

// Collects (cyclic order, multiplicity) pairs from an abelian tree.
// multiplier accumulates power exponents; returns false for huge multiplicities.
bool collect_cyclics(const Descriptor& d, const BigInt& multiplier,
                     std::vector<std::pair<BigInt, BigInt>>& out) {
  switch (d.kind()) {
    case Descriptor::Kind::cyclic:
      if (d.cyclic_order() > 1) out.emplace_back(d.cyclic_order(), multiplier);
      return true;
    case Descriptor::Kind::direct_product:
      for (const auto& c : d.children()) {
        if (!collect_cyclics(c, multiplier, out)) return false;
      }
      return true;
    case Descriptor::Kind::power:
      if (d.power_exponent() == 0) return true;
      return collect_cyclics(d.children()[0], multiplier * d.power_exponent(), out);
    default:
      return false;
  }
}

bool tree_abelian(const Descriptor& d) {
  switch (d.kind()) {
    case Descriptor::Kind::cyclic:
      return true;
    case Descriptor::Kind::general_linear:
      return false;
    case Descriptor::Kind::direct_product:
      return std::all_of(d.children().begin(), d.children().end(), tree_abelian);
    case Descriptor::Kind::semidirect_product:
      return false;
    case Descriptor::Kind::power:
      return d.power_exponent() == 0 || tree_abelian(d.children()[0]);
  }
  return false;
}

}  // namespace

DescriptorEval evaluate(const Descriptor& d) {
  DescriptorEval ev;
  ev.order = d.order();
  ev.is_abelian = tree_abelian(d);
  if (!ev.is_abelian) {
    if (d.asserted_exponent()) ev.exponent = *d.asserted_exponent();
    return ev;
  }
  std::vector<std::pair<BigInt, BigInt>> cyclics;
  collect_cyclics(d, BigInt(1), cyclics);
  BigInt exponent = 1;
  for (const auto& [m, e] : cyclics) exponent = bigint_lcm(exponent, m);
  ev.exponent = exponent;
  // elementary divisors: factor each order into prime powers
  std::map<BigInt, std::uint64_t> divisor_counts;  // prime power -> count
  bool factorable = true;
  constexpr std::uint64_t kMaxList = 1 << 20;
  for (const auto& [m, e] : cyclics) {
    auto fac = factor_bigint(m);
    if (!fac) {
      factorable = false;
      break;
    }
    if (e > kMaxList) {
      factorable = false;  // list form would be astronomically long
      break;
    }
    for (const auto& [p, a] : *fac) {
      divisor_counts[bigint_pow(p, a)] += e.convert_to<std::uint64_t>();
    }
  }
  if (factorable) {
    std::vector<BigInt> divisors;
    std::uint64_t total = 0;
    for (const auto& [pp, cnt] : divisor_counts) total += cnt;
    if (total <= kMaxList) {
      for (const auto& [pp, cnt] : divisor_counts) {
        for (std::uint64_t i = 0; i < cnt; ++i) divisors.push_back(pp);
      }
      std::sort(divisors.begin(), divisors.end());
      ev.abelian_invariants = std::move(divisors);
    }
  }
  return ev;
}

namespace {

bool atom_like(const Descriptor& d) {
  return d.kind() == Descriptor::Kind::cyclic || d.kind() == Descriptor::Kind::general_linear ||
         d.kind() == Descriptor::Kind::power;
}

void render(const Descriptor& d, std::string& out) {
  switch (d.kind()) {
    case Descriptor::Kind::cyclic:
      out += "C_" + d.cyclic_order().str();
      break;
    case Descriptor::Kind::general_linear:
      out += "GL(" + std::to_string(d.gl_degree()) + ", F_" + d.gl_field_size().str() + ")";
      break;
    case Descriptor::Kind::direct_product: {
      bool first = true;
      for (const auto& c : d.children()) {
        if (!first) out += " x ";
        first = false;
        if (atom_like(c)) {
          render(c, out);
        } else {
          out += "(";
          render(c, out);
          out += ")";
        }
      }
      if (d.children().empty()) out += "C_1";
      break;
    }
    case Descriptor::Kind::semidirect_product: {
      for (int i = 0; i < 2; ++i) {
        const Descriptor& c = d.children()[static_cast<std::size_t>(i)];
        if (i) out += " |x ";
        if (atom_like(c)) {
          render(c, out);
        } else {
          out += "(";
          render(c, out);
          out += ")";
        }
      }
      break;
    }
    case Descriptor::Kind::power: {
      if (d.power_exponent() == 0) {
        out += "C_1";
        break;
      }
      const Descriptor& base = d.children()[0];
      const bool bare = base.kind() == Descriptor::Kind::cyclic ||
                        base.kind() == Descriptor::Kind::general_linear;
      if (bare) {
        render(base, out);
      } else {
        out += "(";
        render(base, out);
        out += ")";
      }
      if (d.power_exponent() != 1) out += "^" + d.power_exponent().str();
      break;
    }
  }
}

}  // namespace

std::string to_text(const Descriptor& d) {
  std::string out;
  render(d, out);
  return out;
}

}  // namespace grw
