#pragma once

// Brute-force reference implementations used only by tests. They share no code with the
// checkers under test beyond the Superalgebra accessors.

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

#include "jsplit/rational.hpp"
#include "jsplit/superalgebra.hpp"

namespace oracle {

using jsplit::Rational;
using Vec = std::vector<Rational>;

/// Dense constants tensor c[i][j][k].
class Dense {
 public:
  explicit Dense(const jsplit::Superalgebra& a) : d_(a.dim()), c_(d_ * d_ * d_), parity_(d_) {
    for (std::size_t i = 0; i < d_; ++i) {
      parity_[i] = jsplit::bit(a.parity(i));
      for (std::size_t j = 0; j < d_; ++j)
        for (std::size_t k = 0; k < d_; ++k) c_[(i * d_ + j) * d_ + k] = a.constant(i, j, k);
    }
  }

  std::size_t dim() const { return d_; }
  int parity(std::size_t i) const { return parity_[i]; }

  Vec basis(std::size_t i) const {
    Vec v(d_);
    v[i] = 1;
    return v;
  }

  Vec mul(const Vec& x, const Vec& y) const {
    Vec out(d_);
    for (std::size_t i = 0; i < d_; ++i) {
      if (sgn(x[i]) == 0) continue;
      for (std::size_t j = 0; j < d_; ++j) {
        if (sgn(y[j]) == 0) continue;
        const Rational xy = x[i] * y[j];
        for (std::size_t k = 0; k < d_; ++k) {
          const Rational& c = c_[(i * d_ + j) * d_ + k];
          if (sgn(c) != 0) out[k] += xy * c;
        }
      }
    }
    return out;
  }

 private:
  std::size_t d_;
  std::vector<Rational> c_;
  std::vector<int> parity_;
};

inline int pm(int exponent) { return (exponent % 2 == 0) ? 1 : -1; }

inline Vec axpy(Vec acc, int s, const Vec& v) {
  for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += s * v[i];
  return acc;
}

/// Index tuples (i, j), i <= j, where xy ≠ (-1)^{|x||y|} yx.
inline std::vector<std::vector<std::size_t>> supercommutative_failures(const jsplit::Superalgebra& a) {
  const Dense t(a);
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t i = 0; i < t.dim(); ++i)
    for (std::size_t j = i; j < t.dim(); ++j) {
      const Vec lhs = t.mul(t.basis(i), t.basis(j));
      const Vec rhs = t.mul(t.basis(j), t.basis(i));
      if (axpy(lhs, -pm(t.parity(i) * t.parity(j)), rhs) != Vec(t.dim())) out.push_back({i, j});
    }
  return out;
}

/// Quadruples (x, y, z, t) failing the degree-4 super-Jordan identity, evaluated term by term.
/// With `ungraded`, every sign is +1.
inline std::vector<std::vector<std::size_t>> jordan_failures(const jsplit::Superalgebra& a, bool ungraded = false) {
  const Dense t(a);
  const std::size_t d = t.dim();
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t x = 0; x < d; ++x)
    for (std::size_t y = 0; y < d; ++y)
      for (std::size_t z = 0; z < d; ++z)
        for (std::size_t w = 0; w < d; ++w) {
          const int px = ungraded ? 0 : t.parity(x);
          const int py = ungraded ? 0 : t.parity(y);
          const int pz = ungraded ? 0 : t.parity(z);
          const int pw = ungraded ? 0 : t.parity(w);
          const Vec X = t.basis(x), Y = t.basis(y), Z = t.basis(z), W = t.basis(w);
          Vec lhs = t.mul(t.mul(t.mul(X, Y), Z), W);
          lhs = axpy(lhs, pm(pw * (pz + py) + pz * py), t.mul(t.mul(t.mul(X, W), Z), Y));
          lhs = axpy(lhs, pm(px * (py + pz + pw) + pw * pz), t.mul(t.mul(t.mul(Y, W), Z), X));
          Vec rhs = t.mul(t.mul(X, Y), t.mul(Z, W));
          rhs = axpy(rhs, pm(pw * pz + pw * py), t.mul(t.mul(X, W), t.mul(Y, Z)));
          rhs = axpy(rhs, pm(py * pz), t.mul(t.mul(X, Z), t.mul(Y, W)));
          if (lhs != rhs) out.push_back({x, y, z, w});
        }
  return out;
}

/// Sign of e_{a1}..e_{ar}·e_{b1}..e_{bs} (each list increasing) as ±(sorted union), or 0 on a repeat,
/// computed by bubble-sorting the concatenation.
inline int grassmann_sign(const std::vector<unsigned>& a, const std::vector<unsigned>& b) {
  std::vector<unsigned> word = a;
  word.insert(word.end(), b.begin(), b.end());
  int sign = 1;
  for (std::size_t pass = 0; pass < word.size(); ++pass)
    for (std::size_t i = 0; i + 1 < word.size(); ++i) {
      if (word[i] == word[i + 1]) return 0;
      if (word[i] > word[i + 1]) {
        std::swap(word[i], word[i + 1]);
        sign = -sign;
      }
    }
  for (std::size_t i = 0; i + 1 < word.size(); ++i)
    if (word[i] == word[i + 1]) return 0;
  return sign;
}

inline std::vector<unsigned> generators_of(std::uint32_t mask) {
  std::vector<unsigned> out;
  for (unsigned i = 0; i < 32; ++i)
    if (mask & (1u << i)) out.push_back(i);
  return out;
}

/// Square matrix as nested vectors.
using Mat = std::vector<std::vector<Rational>>;

inline Mat zeros(std::size_t n) { return Mat(n, std::vector<Rational>(n)); }

inline Mat matmul(const Mat& a, const Mat& b) {
  const std::size_t n = a.size();
  Mat c = zeros(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      if (sgn(a[i][k]) != 0)
        for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}

/// The orthosymplectic superinvolution written out blockwise:
///   [a b; c d] ↦ [aᵗ, -cᵗU⁻¹; U bᵗ, U dᵗ U⁻¹] with U = [0 -I; I 0], U⁻¹ = -U.
inline Mat osp(const Mat& x, std::size_t n, std::size_t m) {
  const std::size_t s = n + 2 * m;
  Mat u = zeros(2 * m);
  Mat uinv = zeros(2 * m);
  for (std::size_t p = 0; p < m; ++p) {
    u[p][m + p] = -1;
    u[m + p][p] = 1;
    uinv[p][m + p] = 1;
    uinv[m + p][p] = -1;
  }
  Mat bt(2 * m, std::vector<Rational>(n));  // bᵗ, 2m×n
  Mat ct(n, std::vector<Rational>(2 * m));  // cᵗ, n×2m
  Mat dt = zeros(2 * m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t q = 0; q < 2 * m; ++q) {
      bt[q][i] = x[i][n + q];
      ct[i][q] = x[n + q][i];
    }
  for (std::size_t p = 0; p < 2 * m; ++p)
    for (std::size_t q = 0; q < 2 * m; ++q) dt[p][q] = x[n + q][n + p];
  Mat out = zeros(s);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out[i][j] = x[j][i];
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t q = 0; q < 2 * m; ++q)
      for (std::size_t r = 0; r < 2 * m; ++r) out[i][n + q] -= ct[i][r] * uinv[r][q];
  for (std::size_t p = 0; p < 2 * m; ++p)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t r = 0; r < 2 * m; ++r) out[n + p][j] += u[p][r] * bt[r][j];
  const Mat udt = matmul(u, dt);
  const Mat block = matmul(udt, uinv);
  for (std::size_t p = 0; p < 2 * m; ++p)
    for (std::size_t q = 0; q < 2 * m; ++q) out[n + p][n + q] = block[p][q];
  return out;
}

}  // namespace oracle
