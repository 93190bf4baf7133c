#include "jsplit/superalgebra.hpp"

#include <algorithm>

#include "jsplit/errors.hpp"
#include "jsplit/linalg.hpp"

namespace jsplit {

Superalgebra::Superalgebra(std::string name, std::vector<std::string> labels, std::vector<Parity> parity)
    : name_(std::move(name)), labels_(std::move(labels)), parity_(std::move(parity)) {
  if (labels_.size() != parity_.size()) throw UsageError("Superalgebra: labels and parity differ in length");
  products_.resize(dim() * dim());
}

std::optional<std::size_t> Superalgebra::index_of(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - labels_.begin());
}

Rational Superalgebra::constant(std::size_t i, std::size_t j, std::size_t k) const {
  for (const auto& t : product(i, j)) {
    if (t.index == k) return t.coeff;
  }
  return 0;
}

void Superalgebra::add_constant(std::size_t i, std::size_t j, std::size_t k, const Rational& value) {
  if (i >= dim() || j >= dim() || k >= dim()) throw UsageError("add_constant: index out of range");
  if (sgn(value) != 0 && parity_[k] != parity_[i] + parity_[j]) {
    throw UsageError("add_constant: " + labels_[i] + "*" + labels_[j] + " -> " + labels_[k] +
                     " violates the grading");
  }
  add_term(products_[i * dim() + j], k, value);
}

void Superalgebra::set_supersymmetric(std::size_t i, std::size_t j, const SparseVector& v) {
  clear_product(i, j);
  clear_product(j, i);
  for (const auto& t : v) add_constant(i, j, t.index, t.coeff);
  if (i != j) {
    const int s = koszul(parity_[i], parity_[j]);
    for (const auto& t : v) add_constant(j, i, t.index, s * t.coeff);
  }
}

void Superalgebra::set_unit(RationalVector unit) {
  if (unit.size() != dim()) throw UsageError("set_unit: wrong length");
  const SparseVector u = to_sparse(unit);
  for (std::size_t i = 0; i < dim(); ++i) {
    const SparseVector e{Term{i, 1}};
    if (multiply(u, e) != e || multiply(e, u) != e) {
      throw UsageError("set_unit: not a unit (fails on " + labels_[i] + ")");
    }
  }
  unit_ = std::move(unit);
}

RationalVector Superalgebra::basis_vector(std::size_t i) const {
  RationalVector v(dim());
  v.at(i) = 1;
  return v;
}

RationalVector Superalgebra::multiply(const RationalVector& x, const RationalVector& y) const {
  if (x.size() != dim() || y.size() != dim()) throw UsageError("multiply: wrong vector length");
  RationalVector out(dim());
  for (std::size_t i = 0; i < dim(); ++i) {
    if (sgn(x[i]) == 0) continue;
    for (std::size_t j = 0; j < dim(); ++j) {
      if (sgn(y[j]) == 0) continue;
      axpy(out, x[i] * y[j], product(i, j));
    }
  }
  return out;
}

SparseVector Superalgebra::multiply(const SparseVector& x, const SparseVector& y) const {
  SparseVector out;
  for (const auto& a : x) {
    for (const auto& b : y) {
      const SparseVector& ab = product(a.index, b.index);
      if (ab.empty()) continue;
      const Rational s = a.coeff * b.coeff;
      for (const auto& t : ab) add_term(out, t.index, s * t.coeff);
    }
  }
  return out;
}

std::size_t Superalgebra::nonzero_count() const {
  std::size_t n = 0;
  for (const auto& p : products_) n += p.size();
  return n;
}

std::optional<RationalVector> find_unit(const Superalgebra& a) {
  // Unknown u; equations u·e_j = e_j and e_j·u = e_j for every basis j.
  const std::size_t d = a.dim();
  RatMatrix m(2 * d * d, d);
  RationalVector rhs(2 * d * d);
  for (std::size_t j = 0; j < d; ++j) {
    for (std::size_t i = 0; i < d; ++i) {
      for (const auto& t : a.product(i, j)) m(j * d + t.index, i) += t.coeff;
      for (const auto& t : a.product(j, i)) m(d * d + j * d + t.index, i) += t.coeff;
    }
    rhs[j * d + j] = 1;
    rhs[d * d + j * d + j] = 1;
  }
  auto sol = solve_linear(m, rhs);
  if (!sol.solved()) return std::nullopt;
  return sol.particular;
}

bool same_structure(const Superalgebra& a, const Superalgebra& b) {
  if (a.dim() != b.dim() || a.parities() != b.parities()) return false;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      if (a.product(i, j) != b.product(i, j)) return false;
  return true;
}

Element::Element(const Superalgebra& algebra, RationalVector coords)
    : algebra_(&algebra), coords_(std::move(coords)) {
  if (coords_.size() != algebra.dim()) throw UsageError("Element: wrong coordinate length");
}

Element Element::basis(const Superalgebra& algebra, std::size_t i) {
  return Element(algebra, algebra.basis_vector(i));
}

Element Element::zero(const Superalgebra& algebra) { return Element(algebra, RationalVector(algebra.dim())); }

std::optional<Parity> Element::homogeneous_parity() const {
  std::optional<Parity> p;
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (sgn(coords_[i]) == 0) continue;
    if (p && *p != algebra_->parity(i)) return std::nullopt;
    p = algebra_->parity(i);
  }
  return p;
}

Element Element::operator+(const Element& rhs) const {
  if (algebra_ != rhs.algebra_) throw UsageError("Element: algebra mismatch");
  RationalVector out = coords_;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += rhs.coords_[i];
  return Element(*algebra_, std::move(out));
}

Element Element::operator-(const Element& rhs) const { return *this + rhs.scaled(-1); }

Element Element::scaled(const Rational& s) const {
  RationalVector out = coords_;
  for (auto& x : out) x *= s;
  return Element(*algebra_, std::move(out));
}

bool Element::operator==(const Element& rhs) const {
  return algebra_ == rhs.algebra_ && coords_ == rhs.coords_;
}

Element multiply(const Superalgebra& a, const Element& x, const Element& y) {
  if (&x.algebra() != &a || &y.algebra() != &a) throw UsageError("multiply: element from a different algebra");
  return Element(a, a.multiply(x.coords(), y.coords()));
}

}  // namespace jsplit
