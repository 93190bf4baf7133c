#include "jsplit/supermatrix.hpp"

#include "jsplit/errors.hpp"

namespace jsplit {

SuperMatrix::SuperMatrix(std::size_t n, std::size_t m) : n_(n), m_(m), entries_(n + 2 * m, n + 2 * m) {}

SuperMatrix::SuperMatrix(std::size_t n, std::size_t m, RatMatrix entries)
    : n_(n), m_(m), entries_(std::move(entries)) {
  if (entries_.rows() != size() || entries_.cols() != size()) {
    throw UsageError("SuperMatrix: entries are not (n+2m)x(n+2m)");
  }
}

SuperMatrix SuperMatrix::unit(std::size_t n, std::size_t m, std::size_t row, std::size_t col) {
  SuperMatrix e(n, m);
  if (row < 1 || col < 1 || row > e.size() || col > e.size()) throw UsageError("SuperMatrix::unit: index out of range");
  e(row - 1, col - 1) = 1;
  return e;
}

SuperMatrix SuperMatrix::identity(std::size_t n, std::size_t m) {
  return SuperMatrix(n, m, RatMatrix::identity(n + 2 * m));
}

std::optional<Parity> SuperMatrix::parity() const {
  std::optional<Parity> p;
  for (std::size_t r = 0; r < size(); ++r) {
    for (std::size_t c = 0; c < size(); ++c) {
      if (sgn(entries_(r, c)) == 0) continue;
      const Parity here = position_parity(r, c);
      if (p && *p != here) return std::nullopt;
      p = here;
    }
  }
  return p;
}

namespace {
void require_same_shape(const SuperMatrix& a, const SuperMatrix& b) {
  if (a.n() != b.n() || a.m() != b.m()) throw UsageError("SuperMatrix: block shapes differ");
}
}  // namespace

SuperMatrix SuperMatrix::operator+(const SuperMatrix& rhs) const {
  require_same_shape(*this, rhs);
  SuperMatrix out = *this;
  for (std::size_t r = 0; r < size(); ++r)
    for (std::size_t c = 0; c < size(); ++c) out(r, c) += rhs(r, c);
  return out;
}

SuperMatrix SuperMatrix::operator-(const SuperMatrix& rhs) const { return *this + rhs.scaled(-1); }

SuperMatrix SuperMatrix::operator*(const SuperMatrix& rhs) const {
  require_same_shape(*this, rhs);
  return SuperMatrix(n_, m_, entries_ * rhs.entries_);
}

SuperMatrix SuperMatrix::scaled(const Rational& s) const {
  SuperMatrix out = *this;
  for (std::size_t r = 0; r < size(); ++r)
    for (std::size_t c = 0; c < size(); ++c) out(r, c) *= s;
  return out;
}

SuperMatrix jordan_product(const SuperMatrix& a, const SuperMatrix& b) {
  const auto pa = a.parity();
  const auto pb = b.parity();
  if ((!pa && !a.is_zero()) || (!pb && !b.is_zero())) {
    throw UsageError("jordan_product: operands must be homogeneous");
  }
  const int s = koszul(pa.value_or(Parity::kEven), pb.value_or(Parity::kEven));
  return (a * b + (b * a).scaled(s)).scaled(Rational(1, 2));
}

namespace {

RatMatrix standard_form(std::size_t m) {
  RatMatrix u(2 * m, 2 * m);
  for (std::size_t p = 0; p < m; ++p) {
    u(p, m + p) = -1;
    u(m + p, p) = 1;
  }
  return u;
}

RatMatrix invert(const RatMatrix& a) {
  const std::size_t k = a.rows();
  RatMatrix aug(k, 2 * k);
  for (std::size_t r = 0; r < k; ++r) {
    for (std::size_t c = 0; c < k; ++c) aug(r, c) = a(r, c);
    aug(r, k + r) = 1;
  }
  const RowEchelon e = row_reduce(std::move(aug));
  if (e.pivot_columns.size() < k || e.pivot_columns[k - 1] != k - 1) throw UsageError("osp form is singular");
  RatMatrix inv(k, k);
  for (std::size_t r = 0; r < k; ++r)
    for (std::size_t c = 0; c < k; ++c) inv(r, c) = e.reduced(r, k + c);
  return inv;
}

}  // namespace

OspInvolution::OspInvolution(std::size_t n, std::size_t m) : OspInvolution(n, m, standard_form(m)) {}

OspInvolution::OspInvolution(std::size_t n, std::size_t m, RatMatrix form)
    : n_(n), m_(m), form_(std::move(form)) {
  if (form_.rows() != 2 * m || form_.cols() != 2 * m) throw UsageError("OspInvolution: form must be 2m x 2m");
  form_inverse_ = m == 0 ? RatMatrix(0, 0) : invert(form_);
}

SuperMatrix OspInvolution::operator()(const SuperMatrix& x) const {
  if (x.n() != n_ || x.m() != m_) throw UsageError("osp: matrix does not have the (n | 2m) block shape");
  const std::size_t size = x.size();
  // T = [aᵗ -cᵗ; bᵗ dᵗ]
  RatMatrix t = x.entries().transpose();
  for (std::size_t r = 0; r < n_; ++r)
    for (std::size_t c = n_; c < size; ++c) t(r, c) = -t(r, c);
  RatMatrix left = RatMatrix::identity(size);
  RatMatrix right = RatMatrix::identity(size);
  for (std::size_t r = 0; r < 2 * m_; ++r) {
    for (std::size_t c = 0; c < 2 * m_; ++c) {
      left(n_ + r, n_ + c) = form_(r, c);
      right(n_ + r, n_ + c) = form_inverse_(r, c);
    }
  }
  return SuperMatrix(n_, m_, left * t * right);
}

SuperMatrix osp(const SuperMatrix& x) { return OspInvolution(x.n(), x.m())(x); }

IdentityReport superinvolution_laws(const OspInvolution& involution, std::size_t n, std::size_t m) {
  const std::size_t size = n + 2 * m;
  std::vector<SuperMatrix> units;
  std::vector<SuperMatrix> images;
  for (std::size_t r = 1; r <= size; ++r) {
    for (std::size_t c = 1; c <= size; ++c) {
      units.push_back(SuperMatrix::unit(n, m, r, c));
      images.push_back(involution(units.back()));
    }
  }
  const auto flatten = [](const SuperMatrix& x) { return to_sparse(x.entries().entries()); };
  IdentityReport report;
  for (std::size_t i = 0; i < units.size(); ++i) {
    SuperMatrix twice = involution(images[i]);
    if (twice != units[i]) report.violations.push_back({{i / size, i % size}, flatten(twice - units[i])});
  }
  for (std::size_t i = 0; i < units.size(); ++i) {
    const Parity pi = *units[i].parity();
    for (std::size_t j = 0; j < units.size(); ++j) {
      const Parity pj = *units[j].parity();
      const SuperMatrix lhs = involution(units[i] * units[j]);
      const SuperMatrix rhs = (images[j] * images[i]).scaled(koszul(pi, pj));
      if (lhs != rhs) {
        report.violations.push_back({{i / size, i % size, j / size, j % size}, flatten(lhs - rhs)});
      }
    }
  }
  report.canonicalize();
  return report;
}

IdentityReport superinvolution_laws(std::size_t n, std::size_t m) {
  return superinvolution_laws(OspInvolution(n, m), n, m);
}

}  // namespace jsplit
