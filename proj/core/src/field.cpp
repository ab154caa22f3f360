#include "grw/field.hpp"

#include <algorithm>
#include <array>

namespace grw {
namespace {

constexpr unsigned kMaxDegree = 62;

using Poly = std::vector<std::uint32_t>;  // coefficients low-to-high

int poly_deg(const Poly& a) {
  for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i) {
    if (a[static_cast<std::size_t>(i)]) return i;
  }
  return -1;
}

std::uint64_t inv_mod_p(std::uint64_t a, std::uint64_t p) {
  // extended Euclid; a != 0 mod p, p prime
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = static_cast<std::int64_t>(p), new_r = static_cast<std::int64_t>(a % p);
  while (new_r != 0) {
    const std::int64_t qt = r / new_r;
    t -= qt * new_t;
    std::swap(t, new_t);
    r -= qt * new_r;
    std::swap(r, new_r);
  }
  if (t < 0) t += static_cast<std::int64_t>(p);
  return static_cast<std::uint64_t>(t);
}

Poly poly_mul(const Poly& a, const Poly& b, std::uint64_t p) {
  const int da = poly_deg(a), db = poly_deg(b);
  if (da < 0 || db < 0) return {};
  Poly out(static_cast<std::size_t>(da + db + 1), 0);
  for (int i = 0; i <= da; ++i) {
    if (!a[static_cast<std::size_t>(i)]) continue;
    const std::uint64_t ai = a[static_cast<std::size_t>(i)];
    for (int j = 0; j <= db; ++j) {
      const std::uint64_t v = out[static_cast<std::size_t>(i + j)] + ai * b[static_cast<std::size_t>(j)] % p;
      out[static_cast<std::size_t>(i + j)] = static_cast<std::uint32_t>(v % p);
    }
  }
  return out;
}

// a mod f, f monic
Poly poly_mod(Poly a, const Poly& f, std::uint64_t p) {
  const int df = poly_deg(f);
  int da = poly_deg(a);
  while (da >= df) {
    const std::uint64_t lead = a[static_cast<std::size_t>(da)];
    if (lead) {
      const int shift = da - df;
      for (int i = 0; i <= df; ++i) {
        const std::uint64_t sub = lead * f[static_cast<std::size_t>(i)] % p;
        std::uint64_t v = a[static_cast<std::size_t>(i + shift)] + p - sub % p;
        a[static_cast<std::size_t>(i + shift)] = static_cast<std::uint32_t>(v % p);
      }
    }
    --da;
  }
  a.resize(static_cast<std::size_t>(std::max(df, 1)));
  return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& f, std::uint64_t p) {
  return poly_mod(poly_mul(a, b, p), f, p);
}

Poly poly_powmod(Poly base, std::uint64_t e, const Poly& f, std::uint64_t p) {
  Poly acc{1};
  base = poly_mod(std::move(base), f, p);
  while (e) {
    if (e & 1) acc = poly_mulmod(acc, base, f, p);
    base = poly_mulmod(base, base, f, p);
    e >>= 1;
  }
  return acc;
}

Poly poly_gcd(Poly a, Poly b, std::uint64_t p) {
  while (poly_deg(b) >= 0) {
    // make b monic, then reduce a mod b
    Poly bm = b;
    const int db = poly_deg(bm);
    const std::uint64_t lead_inv = inv_mod_p(bm[static_cast<std::size_t>(db)], p);
    for (auto& c : bm) c = static_cast<std::uint32_t>(c * lead_inv % p);
    bm.resize(static_cast<std::size_t>(db + 1));
    Poly r = poly_mod(std::move(a), bm, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// Rabin's test: f (monic, degree k, f(0) != 0) is irreducible over Z/p iff
// x^(p^k) = x (mod f) and gcd(x^(p^(k/t)) - x, f) = 1 for every prime t | k.
bool poly_irreducible(const Poly& f, std::uint64_t p, unsigned k) {
  if (k == 1) return true;
  // frob[i] = x^(p^i) mod f
  Poly x{0, 1};
  Poly h = x;
  std::vector<Poly> frob(k + 1);
  frob[0] = poly_mod(x, f, p);
  for (unsigned i = 1; i <= k; ++i) {
    h = poly_powmod(h, p, f, p);
    frob[i] = h;
  }
  Poly diff = frob[k];
  // subtract x
  if (diff.size() < 2) diff.resize(2, 0);
  diff[1] = static_cast<std::uint32_t>((diff[1] + p - 1) % p);
  if (poly_deg(diff) >= 0) return false;
  for (auto [t, e] : factorize(k)) {
    Poly g = frob[k / t];
    if (g.size() < 2) g.resize(2, 0);
    g[1] = static_cast<std::uint32_t>((g[1] + p - 1) % p);
    if (poly_deg(g) < 0) return false;  // x^(p^(k/t)) = x already
    Poly d = poly_gcd(f, g, p);
    if (poly_deg(d) > 0) return false;
  }
  return true;
}

// Lexicographically least (coefficients compared low-to-high) monic degree-k
// polynomial over Z/p that is irreducible; candidates with constant term 0
// are skipped (divisible by x).
Poly least_irreducible(std::uint64_t p, unsigned k) {
  Poly f(k + 1, 0);
  f[k] = 1;
  std::vector<std::uint32_t> digits(k, 0);
  digits[0] = 1;
  for (;;) {
    for (unsigned i = 0; i < k; ++i) f[i] = digits[i];
    if (poly_irreducible(f, p, k)) return f;
    // next candidate in low-to-high lexicographic order: most significant
    // digit is c0, so increment from the high end.
    int pos = static_cast<int>(k) - 1;
    while (pos >= 0) {
      if (++digits[static_cast<std::size_t>(pos)] < p) break;
      digits[static_cast<std::size_t>(pos)] = 0;
      --pos;
    }
    if (pos < 0) break;  // exhausted; cannot happen for prime p
  }
  fail(errc::invalid_argument, "no irreducible polynomial found");
}

}  // namespace

FieldCtx::FieldCtx(std::uint64_t p, unsigned k, std::vector<std::uint32_t> modulus)
    : p_(p), k_(k), modulus_(std::move(modulus)) {
  q_ = 1;
  for (unsigned i = 0; i < k_; ++i) q_ *= p_;
}

std::shared_ptr<const FieldCtx> FieldCtx::make(std::uint64_t p, unsigned degree,
                                               std::uint64_t size_bound) {
  if (p >= (std::uint64_t{1} << 31) || !is_prime(p)) {
    fail(errc::not_prime, "field characteristic must be a prime < 2^31, got " + std::to_string(p));
  }
  if (degree == 0) fail(errc::degree_zero, "extension degree must be >= 1");
  if (degree > kMaxDegree) fail(errc::size_bound, "extension degree too large");
  // overflow-safe p^degree <= size_bound
  std::uint64_t q = 1;
  for (unsigned i = 0; i < degree; ++i) {
    if (q > size_bound / p) fail(errc::size_bound, "p^degree exceeds size bound");
    q *= p;
  }
  return std::shared_ptr<const FieldCtx>(new FieldCtx(p, degree, least_irreducible(p, degree)));
}

void FieldCtx::r_zero(std::uint32_t* out) const { std::fill_n(out, k_, 0u); }

void FieldCtx::r_one(std::uint32_t* out) const {
  std::fill_n(out, k_, 0u);
  out[0] = 1;
}

bool FieldCtx::r_is_zero(const std::uint32_t* a) const {
  for (unsigned i = 0; i < k_; ++i) {
    if (a[i]) return false;
  }
  return true;
}

bool FieldCtx::r_eq(const std::uint32_t* a, const std::uint32_t* b) const {
  return std::equal(a, a + k_, b);
}

void FieldCtx::r_copy(const std::uint32_t* a, std::uint32_t* out) const {
  std::copy_n(a, k_, out);
}

void FieldCtx::r_add(const std::uint32_t* a, const std::uint32_t* b, std::uint32_t* out) const {
  for (unsigned i = 0; i < k_; ++i) {
    const std::uint64_t v = static_cast<std::uint64_t>(a[i]) + b[i];
    out[i] = static_cast<std::uint32_t>(v >= p_ ? v - p_ : v);
  }
}

void FieldCtx::r_sub(const std::uint32_t* a, const std::uint32_t* b, std::uint32_t* out) const {
  for (unsigned i = 0; i < k_; ++i) {
    const std::uint64_t v = static_cast<std::uint64_t>(a[i]) + p_ - b[i];
    out[i] = static_cast<std::uint32_t>(v >= p_ ? v - p_ : v);
  }
}

void FieldCtx::r_neg(const std::uint32_t* a, std::uint32_t* out) const {
  for (unsigned i = 0; i < k_; ++i) {
    out[i] = a[i] ? static_cast<std::uint32_t>(p_ - a[i]) : 0u;
  }
}

void FieldCtx::r_mul(const std::uint32_t* a, const std::uint32_t* b, std::uint32_t* out) const {
  if (k_ == 1) {
    out[0] = static_cast<std::uint32_t>(static_cast<std::uint64_t>(a[0]) * b[0] % p_);
    return;
  }
  unsigned __int128 tmp[2 * kMaxDegree];
  std::fill_n(tmp, 2 * k_ - 1, static_cast<unsigned __int128>(0));
  for (unsigned i = 0; i < k_; ++i) {
    if (!a[i]) continue;
    for (unsigned j = 0; j < k_; ++j) {
      tmp[i + j] += static_cast<std::uint64_t>(a[i]) * b[j];
    }
  }
  // reduce degree 2k-2 .. k by the monic modulus
  for (int d = static_cast<int>(2 * k_) - 2; d >= static_cast<int>(k_); --d) {
    const std::uint64_t lead = static_cast<std::uint64_t>(tmp[static_cast<std::size_t>(d)] % p_);
    tmp[static_cast<std::size_t>(d)] = 0;
    if (!lead) continue;
    const int shift = d - static_cast<int>(k_);
    for (unsigned i = 0; i < k_; ++i) {
      // tmp[shift+i] -= lead * modulus[i]  (keep nonnegative)
      const std::uint64_t sub = lead * modulus_[i] % p_;
      tmp[static_cast<std::size_t>(shift) + i] += p_ - sub;
    }
  }
  for (unsigned i = 0; i < k_; ++i) {
    out[i] = static_cast<std::uint32_t>(tmp[i] % p_);
  }
}

void FieldCtx::r_mul_acc(const std::uint32_t* a, const std::uint32_t* b, std::uint32_t* out) const {
  if (k_ == 1) {
    const std::uint64_t v = (static_cast<std::uint64_t>(a[0]) * b[0] + out[0]) % p_;
    out[0] = static_cast<std::uint32_t>(v);
    return;
  }
  std::array<std::uint32_t, kMaxDegree> prod;
  r_mul(a, b, prod.data());
  r_add(out, prod.data(), out);
}

bool FieldCtx::r_inv(const std::uint32_t* a, std::uint32_t* out) const {
  if (r_is_zero(a)) return false;
  if (k_ == 1) {
    out[0] = static_cast<std::uint32_t>(inv_mod_p(a[0], p_));
    return true;
  }
  // extended Euclid in Z/p[x] against the modulus
  Poly r0(modulus_.begin(), modulus_.end());
  Poly r1(a, a + k_);
  Poly t0{0}, t1{1};
  while (poly_deg(r1) > 0) {
    // divide r0 by r1
    Poly q(static_cast<std::size_t>(poly_deg(r0) - poly_deg(r1) + 1), 0);
    Poly rem = r0;
    const int d1 = poly_deg(r1);
    const std::uint64_t lead_inv = inv_mod_p(r1[static_cast<std::size_t>(d1)], p_);
    for (int d = poly_deg(rem); d >= d1; --d) {
      const std::uint64_t c = rem[static_cast<std::size_t>(d)] * lead_inv % p_;
      if (c) {
        q[static_cast<std::size_t>(d - d1)] = static_cast<std::uint32_t>(c);
        for (int i = 0; i <= d1; ++i) {
          std::uint64_t v = rem[static_cast<std::size_t>(d - d1 + i)] + p_ -
                            c * r1[static_cast<std::size_t>(i)] % p_;
          rem[static_cast<std::size_t>(d - d1 + i)] = static_cast<std::uint32_t>(v % p_);
        }
      }
    }
    // t0 - q*t1
    Poly qt = poly_mul(q, t1, p_);
    Poly nt(std::max(t0.size(), qt.size()), 0);
    for (std::size_t i = 0; i < nt.size(); ++i) {
      std::uint64_t v = (i < t0.size() ? t0[i] : 0u) + p_ - (i < qt.size() ? qt[i] % p_ : 0u);
      nt[i] = static_cast<std::uint32_t>(v % p_);
    }
    r0 = std::move(r1);
    r1 = std::move(rem);
    t0 = std::move(t1);
    t1 = std::move(nt);
  }
  // r1 is a nonzero constant (a invertible mod irreducible modulus)
  const std::uint64_t c_inv = inv_mod_p(r1[0], p_);
  std::fill_n(out, k_, 0u);
  for (std::size_t i = 0; i < t1.size() && i < k_; ++i) {
    out[i] = static_cast<std::uint32_t>(t1[i] * c_inv % p_);
  }
  return true;
}

void FieldCtx::r_pow(const std::uint32_t* a, BigInt e, std::uint32_t* out) const {
  std::array<std::uint32_t, kMaxDegree> base;
  r_copy(a, base.data());
  r_one(out);
  if (e < 0) fail(errc::invalid_argument, "negative exponent");
  while (e != 0) {
    if (boost::multiprecision::bit_test(e, 0)) {
      std::array<std::uint32_t, kMaxDegree> t;
      r_mul(out, base.data(), t.data());
      r_copy(t.data(), out);
    }
    std::array<std::uint32_t, kMaxDegree> sq;
    r_mul(base.data(), base.data(), sq.data());
    r_copy(sq.data(), base.data());
    e >>= 1;
  }
}

void FieldCtx::r_set_int(std::uint64_t v, std::uint32_t* out) const {
  std::fill_n(out, k_, 0u);
  out[0] = static_cast<std::uint32_t>(v % p_);
}

FieldElem FieldCtx::zero() const { return FieldElem(this, std::vector<std::uint32_t>(k_, 0)); }

FieldElem FieldCtx::one() const {
  std::vector<std::uint32_t> c(k_, 0);
  c[0] = 1;
  return FieldElem(this, std::move(c));
}

FieldElem FieldCtx::from_int(std::uint64_t v) const {
  std::vector<std::uint32_t> c(k_, 0);
  c[0] = static_cast<std::uint32_t>(v % p_);
  return FieldElem(this, std::move(c));
}

FieldElem FieldCtx::from_coeffs(std::vector<std::uint32_t> c) const {
  if (c.size() != k_) fail(errc::range_error, "coefficient vector length != degree");
  for (auto& x : c) x = static_cast<std::uint32_t>(x % p_);
  return FieldElem(this, std::move(c));
}

FieldElem FieldCtx::element(std::uint64_t index) const {
  std::vector<std::uint32_t> c(k_, 0);
  for (unsigned i = 0; i < k_; ++i) {
    c[i] = static_cast<std::uint32_t>(index % p_);
    index /= p_;
  }
  return FieldElem(this, std::move(c));
}

std::uint64_t FieldCtx::index_of(const FieldElem& a) const {
  check_same(a);
  std::uint64_t idx = 0;
  for (unsigned i = k_; i-- > 0;) idx = idx * p_ + a.coeffs()[i];
  return idx;
}

FieldElem FieldCtx::add(const FieldElem& a, const FieldElem& b) const {
  check_same(a);
  check_same(b);
  std::vector<std::uint32_t> c(k_);
  r_add(a.coeffs().data(), b.coeffs().data(), c.data());
  return FieldElem(this, std::move(c));
}

FieldElem FieldCtx::sub(const FieldElem& a, const FieldElem& b) const {
  check_same(a);
  check_same(b);
  std::vector<std::uint32_t> c(k_);
  r_sub(a.coeffs().data(), b.coeffs().data(), c.data());
  return FieldElem(this, std::move(c));
}

FieldElem FieldCtx::mul(const FieldElem& a, const FieldElem& b) const {
  check_same(a);
  check_same(b);
  std::vector<std::uint32_t> c(k_);
  r_mul(a.coeffs().data(), b.coeffs().data(), c.data());
  return FieldElem(this, std::move(c));
}

FieldElem FieldCtx::neg(const FieldElem& a) const {
  check_same(a);
  std::vector<std::uint32_t> c(k_);
  r_neg(a.coeffs().data(), c.data());
  return FieldElem(this, std::move(c));
}

FieldElem FieldCtx::inv(const FieldElem& a) const {
  check_same(a);
  std::vector<std::uint32_t> c(k_);
  if (!r_inv(a.coeffs().data(), c.data())) fail(errc::zero_inverse, "inverse of zero");
  return FieldElem(this, std::move(c));
}

FieldElem FieldCtx::pow(const FieldElem& a, const BigInt& e) const {
  check_same(a);
  std::vector<std::uint32_t> c(k_);
  r_pow(a.coeffs().data(), e, c.data());
  return FieldElem(this, std::move(c));
}

void FieldCtx::check_same(const FieldElem& a) const {
  if (a.ctx() != this) fail(errc::ctx_mismatch, "field element belongs to a different context");
}

bool FieldElem::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](std::uint32_t x) { return x == 0; });
}

FieldElem FieldElem::operator+(const FieldElem& o) const { return ctx_->add(*this, o); }
FieldElem FieldElem::operator-(const FieldElem& o) const { return ctx_->sub(*this, o); }
FieldElem FieldElem::operator*(const FieldElem& o) const { return ctx_->mul(*this, o); }
FieldElem FieldElem::operator-() const { return ctx_->neg(*this); }

}  // namespace grw
