#include "grw/numbers.hpp"

#include <algorithm>
#include <numeric>

#include "grw/errors.hpp"

namespace grw {

const char* errc_name(errc code) noexcept {
  switch (code) {
    case errc::not_prime: return "NotPrime";
    case errc::degree_zero: return "DegreeZero";
    case errc::size_bound: return "SizeBound";
    case errc::zero_inverse: return "ZeroInverse";
    case errc::ctx_mismatch: return "CtxMismatch";
    case errc::not_coprime: return "NotCoprime";
    case errc::bad_modulus: return "BadModulus";
    case errc::range_error: return "RangeError";
    case errc::not_normal: return "NotNormal";
    case errc::not_subgroup: return "NotSubgroup";
    case errc::group_mismatch: return "GroupMismatch";
    case errc::even_characteristic: return "EvenCharacteristic";
    case errc::small_characteristic: return "SmallCharacteristic";
    case errc::unsupported_case: return "UnsupportedCase";
    case errc::not_closed: return "NotClosed";
    case errc::invalid_argument: return "InvalidArgument";
  }
  return "Error";
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  if (n % 3 == 0) return n == 3;
  for (std::uint64_t d = 5; d * d <= n; d += 6) {
    if (n % d == 0 || n % (d + 2) == 0) return false;
  }
  return true;
}

std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, unsigned>> out;
  for (std::uint64_t d = 2; d * d <= n; d += (d == 2 ? 1 : 2)) {
    if (n % d) continue;
    unsigned e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    out.emplace_back(d, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::uint64_t euler_totient(std::uint64_t n) {
  if (n < 1) fail(errc::invalid_argument, "euler_totient requires n >= 1");
  std::uint64_t phi = n;
  for (auto [p, e] : factorize(n)) {
    phi -= phi / p;
  }
  return phi;
}

std::vector<std::uint64_t> divisors_of(std::uint64_t n) {
  std::vector<std::uint64_t> divs{1};
  for (auto [p, e] : factorize(n)) {
    const std::size_t base = divs.size();
    std::uint64_t pe = 1;
    for (unsigned i = 1; i <= e; ++i) {
      pe *= p;
      for (std::size_t j = 0; j < base; ++j) divs.push_back(divs[j] * pe);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

std::uint64_t powmod_u64(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
  if (mod == 1) return 0;
  unsigned __int128 acc = 1;
  unsigned __int128 b = base % mod;
  while (exp) {
    if (exp & 1) acc = acc * b % mod;
    b = b * b % mod;
    exp >>= 1;
  }
  return static_cast<std::uint64_t>(acc);
}

std::uint64_t mult_order(std::uint64_t l, const BigInt& q) {
  if (l < 2) fail(errc::bad_modulus, "mult_order requires modulus >= 2");
  const std::uint64_t q_red = static_cast<std::uint64_t>(q % l);
  if (std::gcd(q_red, l) != 1) fail(errc::not_coprime, "mult_order requires gcd(l, q) = 1");
  std::uint64_t d = 1;
  unsigned __int128 t = q_red;
  while (t != 1) {
    t = t * q_red % l;
    ++d;
  }
  return d;
}

BigInt bigint_pow(const BigInt& base, std::uint64_t exp) {
  BigInt acc = 1;
  BigInt b = base;
  while (exp) {
    if (exp & 1) acc *= b;
    b *= b;
    exp >>= 1;
  }
  return acc;
}

BigInt bigint_lcm(const BigInt& a, const BigInt& b) {
  if (a == 0 || b == 0) return 0;
  return a / boost::multiprecision::gcd(a, b) * b;
}

}  // namespace grw
