#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "jsplit/rational.hpp"

namespace jsplit {

enum class Parity : std::uint8_t { kEven = 0, kOdd = 1 };

constexpr int bit(Parity p) noexcept { return static_cast<int>(p); }
constexpr Parity operator+(Parity a, Parity b) noexcept {
  return static_cast<Parity>(bit(a) ^ bit(b));
}
/// (-1)^exponent
constexpr int sign_of(int exponent) noexcept { return (exponent & 1) ? -1 : 1; }
/// Koszul sign (-1)^{|a||b|}.
constexpr int koszul(Parity a, Parity b) noexcept { return sign_of(bit(a) * bit(b)); }

/// Finite-dimensional Z2-graded algebra given by structure constants
/// x_i·x_j = Σ_k c[i][j][k]·x_k. Products are stored sparsely per ordered pair.
class Superalgebra {
 public:
  Superalgebra() = default;
  Superalgebra(std::string name, std::vector<std::string> labels, std::vector<Parity> parity);

  const std::string& name() const noexcept { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }
  std::size_t dim() const noexcept { return parity_.size(); }
  Parity parity(std::size_t i) const { return parity_.at(i); }
  const std::vector<Parity>& parities() const noexcept { return parity_; }
  const std::string& label(std::size_t i) const { return labels_.at(i); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  std::optional<std::size_t> index_of(const std::string& label) const;

  const SparseVector& product(std::size_t i, std::size_t j) const { return products_[i * dim() + j]; }
  Rational constant(std::size_t i, std::size_t j, std::size_t k) const;

  /// c[i][j][k] += value. Throws UsageError when the entry would break the grading.
  void add_constant(std::size_t i, std::size_t j, std::size_t k, const Rational& value);
  /// Sets c[i][j][·] = v and c[j][i][·] = (-1)^{|i||j|} v.
  void set_supersymmetric(std::size_t i, std::size_t j, const SparseVector& v);
  void clear_product(std::size_t i, std::size_t j) { products_[i * dim() + j].clear(); }

  const std::optional<RationalVector>& unit() const noexcept { return unit_; }
  /// Installs a unit after checking unit·x = x·unit = x on every basis element.
  void set_unit(RationalVector unit);
  void clear_unit() { unit_.reset(); }

  /// Basis vector e_i as a dense coordinate vector.
  RationalVector basis_vector(std::size_t i) const;
  /// Bilinear product of two coordinate vectors.
  RationalVector multiply(const RationalVector& x, const RationalVector& y) const;
  SparseVector multiply(const SparseVector& x, const SparseVector& y) const;

  /// Number of nonzero structure constants.
  std::size_t nonzero_count() const;

  friend bool operator==(const Superalgebra&, const Superalgebra&) = default;

 private:
  std::string name_;
  std::vector<std::string> labels_;
  std::vector<Parity> parity_;
  std::vector<SparseVector> products_;
  std::optional<RationalVector> unit_;
};

/// Looks for a two-sided unit by solving a linear system; empty if none exists.
std::optional<RationalVector> find_unit(const Superalgebra& a);

/// Element of a superalgebra; the algebra must outlive the element.
class Element {
 public:
  Element(const Superalgebra& algebra, RationalVector coords);
  static Element basis(const Superalgebra& algebra, std::size_t i);
  static Element zero(const Superalgebra& algebra);

  const Superalgebra& algebra() const noexcept { return *algebra_; }
  const RationalVector& coords() const noexcept { return coords_; }
  bool is_zero() const { return jsplit::is_zero(coords_); }
  /// Parity of a homogeneous nonzero element; empty for zero or mixed elements.
  std::optional<Parity> homogeneous_parity() const;

  Element operator+(const Element& rhs) const;
  Element operator-(const Element& rhs) const;
  Element scaled(const Rational& s) const;

  bool operator==(const Element& rhs) const;

 private:
  const Superalgebra* algebra_;
  RationalVector coords_;
};

/// Product in A; throws UsageError when x or y belongs to a different algebra.
Element multiply(const Superalgebra& a, const Element& x, const Element& y);

}  // namespace jsplit

namespace jsplit {

/// Equal dimension, parities and constants; names and labels are ignored.
bool same_structure(const Superalgebra& a, const Superalgebra& b);

}  // namespace jsplit
