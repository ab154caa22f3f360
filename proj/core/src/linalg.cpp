#include "grw/linalg.hpp"

#include <algorithm>
#include <array>

namespace grw {

namespace {
constexpr unsigned kMaxK = 62;
}

FMatrix::FMatrix(const FieldCtx& ctx, std::size_t rows, std::size_t cols)
    : ctx_(&ctx), rows_(rows), cols_(cols), k_(ctx.degree()), data_(rows * cols * ctx.degree(), 0) {}

FieldElem FMatrix::get(std::size_t r, std::size_t c) const {
  return ctx_->from_coeffs(std::vector<std::uint32_t>(slot(r, c), slot(r, c) + k_));
}

void FMatrix::set(std::size_t r, std::size_t c, const FieldElem& v) {
  ctx_->check_same(v);
  std::copy(v.coeffs().begin(), v.coeffs().end(), slot(r, c));
}

FMatrix FMatrix::identity(const FieldCtx& ctx, std::size_t n) {
  FMatrix m(ctx, n, n);
  for (std::size_t i = 0; i < n; ++i) ctx.r_one(m.slot(i, i));
  return m;
}

FMatrix FMatrix::mul(const FMatrix& o) const {
  FMatrix out(*ctx_, rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t t = 0; t < cols_; ++t) {
      const std::uint32_t* a = slot(i, t);
      if (ctx_->r_is_zero(a)) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) {
        ctx_->r_mul_acc(a, o.slot(t, j), out.slot(i, j));
      }
    }
  }
  return out;
}

std::size_t FMatrix::row_reduce() {
  std::size_t rank = 0;
  std::array<std::uint32_t, kMaxK> tmp, factor;
  for (std::size_t col = 0; col < cols_ && rank < rows_; ++col) {
    // find pivot
    std::size_t piv = rank;
    while (piv < rows_ && ctx_->r_is_zero(slot(piv, col))) ++piv;
    if (piv == rows_) continue;
    if (piv != rank) {
      std::swap_ranges(row_data(piv), row_data(piv) + cols_ * k_, row_data(rank));
    }
    // normalize pivot row
    ctx_->r_inv(slot(rank, col), tmp.data());
    for (std::size_t j = col; j < cols_; ++j) {
      std::array<std::uint32_t, kMaxK> v;
      ctx_->r_mul(slot(rank, j), tmp.data(), v.data());
      ctx_->r_copy(v.data(), slot(rank, j));
    }
    // eliminate everywhere else
    for (std::size_t r = 0; r < rows_; ++r) {
      if (r == rank || ctx_->r_is_zero(slot(r, col))) continue;
      ctx_->r_copy(slot(r, col), factor.data());
      for (std::size_t j = col; j < cols_; ++j) {
        std::array<std::uint32_t, kMaxK> v;
        ctx_->r_mul(factor.data(), slot(rank, j), v.data());
        ctx_->r_sub(slot(r, j), v.data(), slot(r, j));
      }
    }
    ++rank;
  }
  return rank;
}

bool FMatrix::nonsingular_destructive() {
  if (rows_ != cols_) return false;
  const std::size_t n = rows_;
  if (k_ == 1) {
    // scalar fast path
    const std::uint64_t p = ctx_->p();
    std::uint32_t* a = data_.data();
    for (std::size_t col = 0; col < n; ++col) {
      std::size_t piv = col;
      while (piv < n && a[piv * n + col] == 0) ++piv;
      if (piv == n) return false;
      if (piv != col) {
        for (std::size_t j = col; j < n; ++j) std::swap(a[piv * n + j], a[col * n + j]);
      }
      std::uint32_t inv_slot;
      ctx_->r_inv(&a[col * n + col], &inv_slot);
      for (std::size_t r = col + 1; r < n; ++r) {
        const std::uint64_t f = a[r * n + col];
        if (!f) continue;
        const std::uint64_t fi = f * inv_slot % p;
        for (std::size_t j = col; j < n; ++j) {
          const std::uint64_t v = a[r * n + j] + (p - fi * a[col * n + j] % p);
          a[r * n + j] = static_cast<std::uint32_t>(v % p);
        }
      }
    }
    return true;
  }
  std::array<std::uint32_t, kMaxK> inv, f, v;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && ctx_->r_is_zero(slot(piv, col))) ++piv;
    if (piv == n) return false;
    if (piv != col) {
      std::swap_ranges(row_data(piv), row_data(piv) + cols_ * k_, row_data(col));
    }
    ctx_->r_inv(slot(col, col), inv.data());
    for (std::size_t r = col + 1; r < n; ++r) {
      if (ctx_->r_is_zero(slot(r, col))) continue;
      ctx_->r_mul(slot(r, col), inv.data(), f.data());
      for (std::size_t j = col; j < n; ++j) {
        ctx_->r_mul(f.data(), slot(col, j), v.data());
        ctx_->r_sub(slot(r, j), v.data(), slot(r, j));
      }
    }
  }
  return true;
}

std::optional<FMatrix> FMatrix::inverse() const {
  if (rows_ != cols_) return std::nullopt;
  const std::size_t n = rows_;
  // augmented [A | I], Gauss-Jordan
  FMatrix aug(*ctx_, n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    std::copy(row_data(i), row_data(i) + n * k_, aug.row_data(i));
    ctx_->r_one(aug.slot(i, n + i));
  }
  std::array<std::uint32_t, kMaxK> tmp, factor, v;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && ctx_->r_is_zero(aug.slot(piv, col))) ++piv;
    if (piv == n) return std::nullopt;
    if (piv != col) {
      std::swap_ranges(aug.row_data(piv), aug.row_data(piv) + 2 * n * k_, aug.row_data(col));
    }
    ctx_->r_inv(aug.slot(col, col), tmp.data());
    for (std::size_t j = col; j < 2 * n; ++j) {
      ctx_->r_mul(aug.slot(col, j), tmp.data(), v.data());
      ctx_->r_copy(v.data(), aug.slot(col, j));
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || ctx_->r_is_zero(aug.slot(r, col))) continue;
      ctx_->r_copy(aug.slot(r, col), factor.data());
      for (std::size_t j = col; j < 2 * n; ++j) {
        ctx_->r_mul(factor.data(), aug.slot(col, j), v.data());
        ctx_->r_sub(aug.slot(r, j), v.data(), aug.slot(r, j));
      }
    }
  }
  FMatrix out(*ctx_, n, n);
  for (std::size_t i = 0; i < n; ++i) {
    std::copy(aug.slot(i, n), aug.slot(i, n) + n * k_, out.row_data(i));
  }
  return out;
}

RREF::RREF(const FieldCtx& ctx, std::size_t ncols)
    : ctx_(&ctx), ncols_(ncols), k_(ctx.degree()) {}

void RREF::reduce(std::uint32_t* row) const {
  std::array<std::uint32_t, kMaxK> f, v;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const std::size_t piv = pivots_[i];
    std::uint32_t* cell = row + piv * k_;
    if (ctx_->r_is_zero(cell)) continue;
    ctx_->r_copy(cell, f.data());
    const std::uint32_t* basis = rows_[i].data();
    for (std::size_t c = piv; c < ncols_; ++c) {
      const std::uint32_t* b = basis + c * k_;
      if (ctx_->r_is_zero(b)) continue;
      ctx_->r_mul(f.data(), b, v.data());
      ctx_->r_sub(row + c * k_, v.data(), row + c * k_);
    }
  }
}

bool RREF::is_zero_row(const std::uint32_t* row) const {
  for (std::size_t c = 0; c < ncols_; ++c) {
    if (!ctx_->r_is_zero(row + c * k_)) return false;
  }
  return true;
}

bool RREF::add(const std::uint32_t* row) {
  std::vector<std::uint32_t> work(row, row + ncols_ * k_);
  reduce(work.data());
  std::size_t piv = 0;
  while (piv < ncols_ && ctx_->r_is_zero(work.data() + piv * k_)) ++piv;
  if (piv == ncols_) return false;
  // normalize to monic pivot
  std::array<std::uint32_t, kMaxK> inv, v;
  ctx_->r_inv(work.data() + piv * k_, inv.data());
  for (std::size_t c = piv; c < ncols_; ++c) {
    ctx_->r_mul(work.data() + c * k_, inv.data(), v.data());
    ctx_->r_copy(v.data(), work.data() + c * k_);
  }
  // back-substitute into the existing rows
  std::array<std::uint32_t, kMaxK> f;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    std::uint32_t* cell = rows_[i].data() + piv * k_;
    if (ctx_->r_is_zero(cell)) continue;
    ctx_->r_copy(cell, f.data());
    for (std::size_t c = piv; c < ncols_; ++c) {
      ctx_->r_mul(f.data(), work.data() + c * k_, v.data());
      ctx_->r_sub(rows_[i].data() + c * k_, v.data(), rows_[i].data() + c * k_);
    }
  }
  const auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), piv) - pivots_.begin();
  pivots_.insert(pivots_.begin() + pos, piv);
  rows_.insert(rows_.begin() + pos, std::move(work));
  return true;
}

bool RREF::contains(const std::uint32_t* row) const {
  std::vector<std::uint32_t> work(row, row + ncols_ * k_);
  reduce(work.data());
  return is_zero_row(work.data());
}

}  // namespace grw
