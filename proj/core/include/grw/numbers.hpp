#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace grw {

// Orders and counts (e.g. p^{12sk(p^r-1)}) overflow machine words; carry them
// in arbitrary precision throughout.
using BigInt = boost::multiprecision::cpp_int;

// Deterministic trial division; n < 2^31 expected, larger values are fine but slow.
bool is_prime(std::uint64_t n);

// Prime factorization by trial division, ascending primes.
std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n);

// Euler's totient via factorization.
std::uint64_t euler_totient(std::uint64_t n);

// All divisors of n, ascending.
std::vector<std::uint64_t> divisors_of(std::uint64_t n);

std::uint64_t powmod_u64(std::uint64_t base, std::uint64_t exp, std::uint64_t mod);

// Least d >= 1 with q^d = 1 (mod l). Requires l >= 2 and gcd(l, q) = 1.
std::uint64_t mult_order(std::uint64_t l, const BigInt& q);

BigInt bigint_pow(const BigInt& base, std::uint64_t exp);

// lcm helper on BigInt.
BigInt bigint_lcm(const BigInt& a, const BigInt& b);

}  // namespace grw
