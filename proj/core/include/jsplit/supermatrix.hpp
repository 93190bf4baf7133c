#pragma once

#include <cstddef>
#include <optional>

#include "jsplit/identities.hpp"
#include "jsplit/linalg.hpp"
#include "jsplit/superalgebra.hpp"

namespace jsplit {

/// Square matrix over the (n | 2m) superspace: diagonal blocks even, off-diagonal blocks odd.
class SuperMatrix {
 public:
  SuperMatrix(std::size_t n, std::size_t m);
  SuperMatrix(std::size_t n, std::size_t m, RatMatrix entries);
  /// Unit matrix e_{row,col}, 1-based as in the usual e_ij notation.
  static SuperMatrix unit(std::size_t n, std::size_t m, std::size_t row, std::size_t col);
  static SuperMatrix identity(std::size_t n, std::size_t m);

  std::size_t n() const noexcept { return n_; }
  std::size_t m() const noexcept { return m_; }
  std::size_t size() const noexcept { return n_ + 2 * m_; }
  const RatMatrix& entries() const noexcept { return entries_; }
  Rational& operator()(std::size_t r, std::size_t c) { return entries_(r, c); }
  const Rational& operator()(std::size_t r, std::size_t c) const { return entries_(r, c); }

  /// Parity of position (r, c), 0-based.
  Parity position_parity(std::size_t r, std::size_t c) const noexcept { return (r < n_) != (c < n_) ? Parity::kOdd : Parity::kEven; }
  /// Parity of a nonzero homogeneous matrix; empty for zero or mixed matrices.
  std::optional<Parity> parity() const;
  bool is_zero() const { return entries_.is_zero(); }

  SuperMatrix operator+(const SuperMatrix& rhs) const;
  SuperMatrix operator-(const SuperMatrix& rhs) const;
  SuperMatrix operator*(const SuperMatrix& rhs) const;
  SuperMatrix scaled(const Rational& s) const;
  friend bool operator==(const SuperMatrix&, const SuperMatrix&) = default;

 private:
  std::size_t n_;
  std::size_t m_;
  RatMatrix entries_;
};

/// a∘b = ½(ab + (-1)^{|a||b|} ba) for homogeneous a, b. Zero operands count as even.
SuperMatrix jordan_product(const SuperMatrix& a, const SuperMatrix& b);

/// The orthosymplectic superinvolution
///   [a b; c d] ↦ diag(I_n, U)·[aᵗ -cᵗ; bᵗ dᵗ]·diag(I_n, U⁻¹),   U = [0 -I_m; I_m 0].
/// A different 2m×2m form U can be supplied for negative controls.
class OspInvolution {
 public:
  OspInvolution(std::size_t n, std::size_t m);
  OspInvolution(std::size_t n, std::size_t m, RatMatrix form);

  SuperMatrix operator()(const SuperMatrix& x) const;
  const RatMatrix& form() const noexcept { return form_; }

 private:
  std::size_t n_;
  std::size_t m_;
  RatMatrix form_;
  RatMatrix form_inverse_;
};

/// osp with the standard form; throws UsageError when X is not (n | 2m)-shaped.
SuperMatrix osp(const SuperMatrix& x);

/// Checks (X*)* = X and (XY)* = (-1)^{|X||Y|} Y* X* over all pairs of matrix units.
/// Involution failures are reported with index tuple (r, c); product failures with (r, c, r', c').
IdentityReport superinvolution_laws(const OspInvolution& involution, std::size_t n, std::size_t m);
IdentityReport superinvolution_laws(std::size_t n, std::size_t m);

}  // namespace jsplit
