#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "jsplit/rational.hpp"

namespace jsplit {

/// Dense row-major matrix of exact rationals.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}
  /// Builds from nested rows; all rows must have equal length.
  static RatMatrix from_rows(const std::vector<RationalVector>& rows);
  static RatMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  std::span<const Rational> row(std::size_t r) const { return {entries_.data() + r * cols_, cols_}; }
  std::span<Rational> row(std::size_t r) { return {entries_.data() + r * cols_, cols_}; }
  const RationalVector& entries() const noexcept { return entries_; }

  RatMatrix transpose() const;
  RationalVector apply(std::span<const Rational> x) const;
  /// Returns yᵀ·A for a row vector y of length rows().
  RationalVector apply_left(std::span<const Rational> y) const;
  RatMatrix operator*(const RatMatrix& rhs) const;
  bool is_zero() const;

  /// Appends a row; on an empty 0×0 matrix the first row fixes cols().
  void append_row(std::span<const Rational> values);

  friend bool operator==(const RatMatrix&, const RatMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  RationalVector entries_;
};

/// Reduced row echelon form with first-nonzero pivoting in column order.
struct RowEchelon {
  RatMatrix reduced;
  std::vector<std::size_t> pivot_columns;
};
RowEchelon row_reduce(RatMatrix m);

/// Result of solving A·x = b exactly.
struct LinearSolution {
  enum class Kind { kSolved, kInconsistent };

  Kind kind = Kind::kSolved;
  /// Canonical particular solution: every free variable set to zero.
  RationalVector particular;
  std::vector<RationalVector> nullspace_basis;
  /// witnessᵀ·A = 0 and witnessᵀ·b ≠ 0.
  RationalVector witness;

  bool solved() const noexcept { return kind == Kind::kSolved; }
};

LinearSolution solve_linear(const RatMatrix& a, std::span<const Rational> b);

/// Basis of {v : A·v = 0}; one vector per free column, free entry 1, pivots solved, other free entries 0.
std::vector<RationalVector> nullspace(const RatMatrix& a);

std::size_t rank(const RatMatrix& a);

/// Stacks vectors as rows.
RatMatrix rows_matrix(const std::vector<RationalVector>& vectors, std::size_t cols);
/// Stacks vectors as columns.
RatMatrix columns_matrix(const std::vector<RationalVector>& vectors, std::size_t rows);

}  // namespace jsplit
