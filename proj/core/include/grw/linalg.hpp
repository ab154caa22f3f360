#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "grw/field.hpp"

namespace grw {

// Dense matrix over a FieldCtx. Entries are stored as flat coefficient slots
// (k words per entry), row-major.
class FMatrix {
public:
  FMatrix(const FieldCtx& ctx, std::size_t rows, std::size_t cols);

  const FieldCtx& ctx() const { return *ctx_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  std::uint32_t* slot(std::size_t r, std::size_t c) {
    return data_.data() + (r * cols_ + c) * k_;
  }
  const std::uint32_t* slot(std::size_t r, std::size_t c) const {
    return data_.data() + (r * cols_ + c) * k_;
  }
  std::uint32_t* row_data(std::size_t r) { return data_.data() + r * cols_ * k_; }
  const std::uint32_t* row_data(std::size_t r) const { return data_.data() + r * cols_ * k_; }

  FieldElem get(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, const FieldElem& v);

  static FMatrix identity(const FieldCtx& ctx, std::size_t n);
  FMatrix mul(const FMatrix& o) const;
  bool operator==(const FMatrix& o) const { return data_ == o.data_; }

  // In-place Gauss-Jordan to reduced row echelon form; returns the rank.
  std::size_t row_reduce();
  // Forward elimination only; true iff the (square) matrix has full rank.
  // Destroys the contents.
  bool nonsingular_destructive();
  std::optional<FMatrix> inverse() const;

private:
  const FieldCtx* ctx_;
  std::size_t rows_, cols_;
  unsigned k_;
  std::vector<std::uint32_t> data_;
};

// Incrementally maintained reduced row echelon basis of a subspace of F^ncols.
// Rows are coefficient slot vectors (ncols * k words).
class RREF {
public:
  RREF(const FieldCtx& ctx, std::size_t ncols);

  std::size_t rank() const { return rows_.size(); }
  std::size_t ncols() const { return ncols_; }
  const std::vector<std::vector<std::uint32_t>>& basis_rows() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  // Reduces row (ncols*k words) against the basis in place.
  void reduce(std::uint32_t* row) const;
  // Adds a row to the span; returns true when the rank grew.
  bool add(const std::uint32_t* row);
  bool contains(const std::uint32_t* row) const;
  bool is_zero_row(const std::uint32_t* row) const;

private:
  const FieldCtx* ctx_;
  std::size_t ncols_;
  unsigned k_;
  std::vector<std::vector<std::uint32_t>> rows_;  // sorted by pivot column
  std::vector<std::size_t> pivots_;
};

}  // namespace grw
