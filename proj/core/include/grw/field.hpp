#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "grw/errors.hpp"
#include "grw/numbers.hpp"

namespace grw {

class FieldCtx;

// Element of GF(p^k) in polynomial-residue form: k coefficients mod p, lowest
// degree first. The all-zero vector is 0; (1, 0, ..., 0) is 1.
class FieldElem {
public:
  FieldElem() = default;

  const FieldCtx* ctx() const { return ctx_; }
  const std::vector<std::uint32_t>& coeffs() const { return c_; }
  bool is_zero() const;
  bool operator==(const FieldElem& o) const { return ctx_ == o.ctx_ && c_ == o.c_; }
  bool operator!=(const FieldElem& o) const { return !(*this == o); }

  FieldElem operator+(const FieldElem& o) const;
  FieldElem operator-(const FieldElem& o) const;
  FieldElem operator*(const FieldElem& o) const;
  FieldElem operator-() const;

private:
  friend class FieldCtx;
  FieldElem(const FieldCtx* ctx, std::vector<std::uint32_t> c) : ctx_(ctx), c_(std::move(c)) {}

  const FieldCtx* ctx_ = nullptr;
  std::vector<std::uint32_t> c_;
};

// Arithmetic context of GF(p^k). The modulus is the lexicographically least
// monic irreducible polynomial of degree k over Z/p with nonzero constant
// term, coefficients compared low-to-high, so construction is deterministic.
// Immutable after construction and safe to share across threads.
class FieldCtx {
public:
  static constexpr std::uint64_t kDefaultSizeBound = (std::uint64_t{1} << 62);

  // Throws NotPrime / DegreeZero / SizeBound.
  static std::shared_ptr<const FieldCtx> make(std::uint64_t p, unsigned degree,
                                              std::uint64_t size_bound = kDefaultSizeBound);

  std::uint64_t p() const { return p_; }
  unsigned degree() const { return k_; }
  // Number of field elements, q = p^k.
  std::uint64_t q() const { return q_; }
  // Modulus coefficients c0..ck (monic: ck = 1).
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }

  // --- raw slot interface -------------------------------------------------
  // A slot is an array of degree() coefficients. These run without allocation
  // and are the hot path for algebra and matrix code.
  void r_zero(std::uint32_t* out) const;
  void r_one(std::uint32_t* out) const;
  bool r_is_zero(const std::uint32_t* a) const;
  bool r_eq(const std::uint32_t* a, const std::uint32_t* b) const;
  void r_copy(const std::uint32_t* a, std::uint32_t* out) const;
  void r_add(const std::uint32_t* a, const std::uint32_t* b, std::uint32_t* out) const;
  void r_sub(const std::uint32_t* a, const std::uint32_t* b, std::uint32_t* out) const;
  void r_neg(const std::uint32_t* a, std::uint32_t* out) const;
  void r_mul(const std::uint32_t* a, const std::uint32_t* b, std::uint32_t* out) const;
  // out += a*b
  void r_mul_acc(const std::uint32_t* a, const std::uint32_t* b, std::uint32_t* out) const;
  // Returns false when a = 0 (no inverse).
  bool r_inv(const std::uint32_t* a, std::uint32_t* out) const;
  void r_pow(const std::uint32_t* a, BigInt e, std::uint32_t* out) const;
  // Sets out to the residue of the integer v.
  void r_set_int(std::uint64_t v, std::uint32_t* out) const;

  // --- element interface ----------------------------------------------------
  FieldElem zero() const;
  FieldElem one() const;
  FieldElem from_int(std::uint64_t v) const;
  // Coefficient vector, length = degree(), entries reduced mod p.
  FieldElem from_coeffs(std::vector<std::uint32_t> c) const;
  // Element with index i in the canonical odometer enumeration
  // (i interpreted base p, lowest coefficient = least significant digit).
  FieldElem element(std::uint64_t index) const;
  std::uint64_t index_of(const FieldElem& a) const;

  FieldElem add(const FieldElem& a, const FieldElem& b) const;
  FieldElem sub(const FieldElem& a, const FieldElem& b) const;
  FieldElem mul(const FieldElem& a, const FieldElem& b) const;
  FieldElem neg(const FieldElem& a) const;
  // Throws ZeroInverse.
  FieldElem inv(const FieldElem& a) const;
  FieldElem pow(const FieldElem& a, const BigInt& e) const;

  void check_same(const FieldElem& a) const;

private:
  FieldCtx(std::uint64_t p, unsigned k, std::vector<std::uint32_t> modulus);

  std::uint64_t p_ = 0;
  unsigned k_ = 0;
  std::uint64_t q_ = 0;
  std::vector<std::uint32_t> modulus_;
};

using FieldPtr = std::shared_ptr<const FieldCtx>;

}  // namespace grw
