#include "jsplit/linalg.hpp"

#include <algorithm>
#include <utility>

#include "jsplit/errors.hpp"

namespace jsplit {

RatMatrix RatMatrix::from_rows(const std::vector<RationalVector>& rows) {
  if (rows.empty()) return {};
  RatMatrix m(rows.size(), rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols()) throw UsageError("from_rows: ragged rows");
    std::copy(rows[r].begin(), rows[r].end(), m.row(r).begin());
  }
  return m;
}

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RatMatrix RatMatrix::transpose() const {
  RatMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

RationalVector RatMatrix::apply(std::span<const Rational> x) const {
  if (x.size() != cols_) throw UsageError("apply: dimension mismatch");
  RationalVector y(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      const auto& a = (*this)(r, c);
      if (sgn(a) != 0 && sgn(x[c]) != 0) y[r] += a * x[c];
    }
  }
  return y;
}

RationalVector RatMatrix::apply_left(std::span<const Rational> y) const {
  if (y.size() != rows_) throw UsageError("apply_left: dimension mismatch");
  RationalVector x(cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    if (sgn(y[r]) == 0) continue;
    for (std::size_t c = 0; c < cols_; ++c) {
      const auto& a = (*this)(r, c);
      if (sgn(a) != 0) x[c] += y[r] * a;
    }
  }
  return x;
}

RatMatrix RatMatrix::operator*(const RatMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw UsageError("matrix product: dimension mismatch");
  RatMatrix out(rows_, rhs.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const auto& a = (*this)(r, k);
      if (sgn(a) == 0) continue;
      for (std::size_t c = 0; c < rhs.cols_; ++c) {
        const auto& b = rhs(k, c);
        if (sgn(b) != 0) out(r, c) += a * b;
      }
    }
  }
  return out;
}

bool RatMatrix::is_zero() const { return jsplit::is_zero(entries_); }

void RatMatrix::append_row(std::span<const Rational> values) {
  if (rows_ == 0 && cols_ == 0) cols_ = values.size();
  if (values.size() != cols_) throw UsageError("append_row: wrong row length");
  entries_.insert(entries_.end(), values.begin(), values.end());
  ++rows_;
}

RowEchelon row_reduce(RatMatrix m) {
  RowEchelon out;
  std::size_t pivot_row = 0;
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  for (std::size_t c = 0; c < cols && pivot_row < rows; ++c) {
    std::size_t r = pivot_row;
    while (r < rows && sgn(m(r, c)) == 0) ++r;
    if (r == rows) continue;
    if (r != pivot_row) {
      for (std::size_t k = 0; k < cols; ++k) std::swap(m(r, k), m(pivot_row, k));
    }
    const Rational inv = 1 / m(pivot_row, c);
    for (std::size_t k = c; k < cols; ++k) m(pivot_row, k) *= inv;
    for (std::size_t other = 0; other < rows; ++other) {
      if (other == pivot_row || sgn(m(other, c)) == 0) continue;
      const Rational factor = m(other, c);
      for (std::size_t k = c; k < cols; ++k) {
        if (sgn(m(pivot_row, k)) != 0) m(other, k) -= factor * m(pivot_row, k);
      }
    }
    out.pivot_columns.push_back(c);
    ++pivot_row;
  }
  out.reduced = std::move(m);
  return out;
}

namespace {

std::vector<RationalVector> nullspace_from_echelon(const RowEchelon& e, std::size_t cols) {
  std::vector<bool> is_pivot(cols, false);
  for (auto c : e.pivot_columns) is_pivot[c] = true;
  std::vector<RationalVector> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    RationalVector v(cols);
    v[f] = 1;
    for (std::size_t i = 0; i < e.pivot_columns.size(); ++i) {
      v[e.pivot_columns[i]] = -e.reduced(i, f);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace

LinearSolution solve_linear(const RatMatrix& a, std::span<const Rational> b) {
  if (a.rows() != b.size()) throw UsageError("solve_linear: A.rows != length(b)");
  const std::size_t n = a.cols();

  RatMatrix aug(a.rows(), n + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    std::copy(a.row(r).begin(), a.row(r).end(), aug.row(r).begin());
    aug(r, n) = b[r];
  }
  const RowEchelon e = row_reduce(std::move(aug));

  LinearSolution out;
  if (!e.pivot_columns.empty() && e.pivot_columns.back() == n) {
    // Fredholm alternative: the transposed system [Aᵀ; bᵀ]·w = (0, 1) is solvable exactly here.
    out.kind = LinearSolution::Kind::kInconsistent;
    RatMatrix dual = a.transpose();
    dual.append_row(b);
    RationalVector rhs(n + 1);
    rhs[n] = 1;
    const LinearSolution w = solve_linear(dual, rhs);
    if (!w.solved()) throw InternalError("solve_linear: no inconsistency witness");
    out.witness = w.particular;
    return out;
  }

  out.particular.assign(n, Rational(0));
  for (std::size_t i = 0; i < e.pivot_columns.size(); ++i) {
    out.particular[e.pivot_columns[i]] = e.reduced(i, n);
  }
  RatMatrix coeffs(e.reduced.rows(), n);
  for (std::size_t r = 0; r < e.reduced.rows(); ++r)
    for (std::size_t c = 0; c < n; ++c) coeffs(r, c) = e.reduced(r, c);
  out.nullspace_basis = nullspace_from_echelon(RowEchelon{std::move(coeffs), e.pivot_columns}, n);
  return out;
}

std::vector<RationalVector> nullspace(const RatMatrix& a) {
  return nullspace_from_echelon(row_reduce(a), a.cols());
}

std::size_t rank(const RatMatrix& a) { return row_reduce(a).pivot_columns.size(); }

RatMatrix rows_matrix(const std::vector<RationalVector>& vectors, std::size_t cols) {
  RatMatrix m(vectors.size(), cols);
  for (std::size_t r = 0; r < vectors.size(); ++r) {
    if (vectors[r].size() != cols) throw UsageError("rows_matrix: wrong vector length");
    std::copy(vectors[r].begin(), vectors[r].end(), m.row(r).begin());
  }
  return m;
}

RatMatrix columns_matrix(const std::vector<RationalVector>& vectors, std::size_t rows) {
  RatMatrix m(rows, vectors.size());
  for (std::size_t c = 0; c < vectors.size(); ++c) {
    if (vectors[c].size() != rows) throw UsageError("columns_matrix: wrong vector length");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = vectors[c][r];
  }
  return m;
}

}  // namespace jsplit
