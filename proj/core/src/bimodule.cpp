#include "jsplit/bimodule.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#include "jsplit/errors.hpp"
#include "jsplit/josp.hpp"

namespace jsplit {

Superbimodule::Superbimodule(std::shared_ptr<const Superalgebra> algebra, std::string name,
                             std::vector<std::string> labels, std::vector<Parity> parity)
    : algebra_(std::move(algebra)), name_(std::move(name)), labels_(std::move(labels)), parity_(std::move(parity)) {
  if (!algebra_) throw UsageError("Superbimodule: null algebra");
  if (labels_.size() != parity_.size()) throw UsageError("Superbimodule: labels and parity differ in length");
  action_.resize(algebra_->dim() * parity_.size());
}

void Superbimodule::add_action(std::size_t a, std::size_t j, std::size_t k, const Rational& value) {
  if (a >= algebra_->dim() || j >= dim() || k >= dim()) throw UsageError("add_action: index out of range");
  if (sgn(value) == 0) return;
  if (parity_[k] != algebra_->parity(a) + parity_[j]) {
    throw UsageError("add_action: entry (" + std::to_string(a) + "," + std::to_string(j) + "," + std::to_string(k) +
                     ") breaks the grading");
  }
  add_term(action_[a * dim() + j], k, value);
}

RatMatrix Superbimodule::action_matrix(std::size_t a) const {
  RatMatrix out(dim(), dim());
  for (std::size_t j = 0; j < dim(); ++j)
    for (const auto& t : action(a, j)) out(t.index, j) = t.coeff;
  return out;
}

bool same_action(const Superbimodule& x, const Superbimodule& y) {
  if (x.parities() != y.parities() || !same_structure(x.algebra(), y.algebra())) return false;
  for (std::size_t a = 0; a < x.algebra().dim(); ++a)
    for (std::size_t j = 0; j < x.dim(); ++j)
      if (x.action(a, j) != y.action(a, j)) return false;
  return true;
}

Superbimodule regular_bimodule(std::shared_ptr<const Superalgebra> a) {
  std::vector<std::string> labels;
  for (const auto& l : a->labels()) labels.push_back("r." + l);
  Superbimodule m(a, "Reg(" + a->name() + ")", std::move(labels), a->parities());
  for (std::size_t i = 0; i < a->dim(); ++i)
    for (std::size_t j = 0; j < a->dim(); ++j)
      for (const auto& t : a->product(i, j)) m.add_action(i, j, t.index, t.coeff);
  return m;
}

Superbimodule regular_bimodule(const Superalgebra& a) {
  return regular_bimodule(std::make_shared<const Superalgebra>(a));
}

// ---------------------------------------------------------------------------
// Skew bimodule

namespace {

using SKind = SkewIndex::Kind;
using JKind = JospIndex::Kind;

std::string skew_prefix(SKind k) {
  switch (k) {
    case SKind::kA: return "a";
    case SKind::kAt: return "at";
    case SKind::kF: return "f";
    case SKind::kFt: return "ft";
    case SKind::kB: return "b";
    case SKind::kC: return "c";
  }
  return "?";
}

Rational delta(std::size_t a, std::size_t b) { return a == b ? 1 : 0; }

const Rational kHalf(1, 2);

/// Right-hand sides of the action tables: a is antisymmetric in its indices, f and f̃ symmetric.
class SkewSymbols {
 public:
  SkewSymbols(std::size_t n, std::size_t m) {
    const auto basis = skew_basis(n, m);
    for (std::size_t i = 0; i < basis.size(); ++i) index_[{static_cast<int>(basis[i].kind), basis[i].first, basis[i].second}] = i;
  }

  void add(SparseVector& out, SKind kind, std::size_t i, std::size_t j, const Rational& c) const {
    if (sgn(c) == 0) return;
    switch (kind) {
      case SKind::kA:
        if (i == j) return;
        if (i < j) add_term(out, at(kind, i, j), c);
        else add_term(out, at(kind, j, i), -c);
        return;
      case SKind::kF:
      case SKind::kFt:
        add_term(out, at(kind, std::min(i, j), std::max(i, j)), c);
        return;
      default:
        add_term(out, at(kind, i, j), c);
    }
  }

 private:
  std::size_t at(SKind k, std::size_t i, std::size_t j) const { return index_.at({static_cast<int>(k), i, j}); }
  std::map<std::tuple<int, std::size_t, std::size_t>, std::size_t> index_;
};

/// h_ij as the symmetric symbol e_ij + e_ji with its scale (h_ii is half of it).
Rational h_scale(const JospIndex& h) { return h.first == h.second ? kHalf : Rational(1); }

/// x·y for x in Josp(n|2m) and y in the skew module. Pairs not covered by the tables act as zero.
SparseVector skew_action(const SkewSymbols& sym, const JospIndex& x, const SkewIndex& y) {
  SparseVector r;
  const auto kx = x.kind;
  const auto ky = y.kind;
  const std::size_t x1 = x.first, x2 = x.second, y1 = y.first, y2 = y.second;

  if (kx == JKind::kH && ky == SKind::kA) {
    const std::size_t k = x1, l = x2, i = y1, j = y2;
    const Rational c = kHalf * h_scale(x);
    sym.add(r, SKind::kA, i, l, c * delta(j, k));
    sym.add(r, SKind::kA, k, j, c * delta(l, i));
    sym.add(r, SKind::kA, i, k, c * delta(j, l));
    sym.add(r, SKind::kA, l, j, c * delta(i, k));
  } else if (kx == JKind::kSt && ky == SKind::kF) {
    const std::size_t p = x1, q = x2, s = y1, t = y2;
    sym.add(r, SKind::kAt, t, q, kHalf * delta(p, s));
    sym.add(r, SKind::kAt, s, q, kHalf * delta(p, t));
    sym.add(r, SKind::kAt, t, p, -kHalf * delta(q, s));
    sym.add(r, SKind::kAt, s, p, -kHalf * delta(q, t));
  } else if (kx == JKind::kSt && ky == SKind::kAt) {
    const std::size_t p = x1, q = x2, s = y1, t = y2;
    sym.add(r, SKind::kFt, p, t, kHalf * delta(q, s));
    sym.add(r, SKind::kFt, q, t, -kHalf * delta(p, s));
  } else if (kx == JKind::kS && ky == SKind::kFt) {
    const std::size_t p = x1, q = x2, s = y1, t = y2;
    sym.add(r, SKind::kAt, p, t, kHalf * delta(q, s));
    sym.add(r, SKind::kAt, p, s, kHalf * delta(q, t));
    sym.add(r, SKind::kAt, q, t, -kHalf * delta(p, s));
    sym.add(r, SKind::kAt, q, s, -kHalf * delta(p, t));
  } else if (kx == JKind::kS && ky == SKind::kAt) {
    const std::size_t p = x1, q = x2, s = y1, t = y2;
    sym.add(r, SKind::kF, q, s, kHalf * delta(p, t));
    sym.add(r, SKind::kF, p, s, -kHalf * delta(q, t));
  } else if (kx == JKind::kV && ky == SKind::kAt) {
    const std::size_t p = x1, q = x2, s = y1, t = y2;
    sym.add(r, SKind::kAt, p, t, kHalf * delta(q, s));
    sym.add(r, SKind::kAt, s, q, kHalf * delta(p, t));
  } else if (kx == JKind::kV && ky == SKind::kF) {
    const std::size_t p = x1, q = x2, s = y1, t = y2;
    sym.add(r, SKind::kF, p, t, kHalf * delta(q, s));
    sym.add(r, SKind::kF, p, s, kHalf * delta(t, q));
  } else if (kx == JKind::kV && ky == SKind::kFt) {
    const std::size_t p = x1, q = x2, s = y1, t = y2;
    sym.add(r, SKind::kFt, q, t, kHalf * delta(p, s));
    sym.add(r, SKind::kFt, q, s, kHalf * delta(p, t));
  } else if (kx == JKind::kH && (ky == SKind::kB || ky == SKind::kC)) {
    const std::size_t i = x1, j = x2, k = y1, s = y2;
    const Rational c = kHalf * h_scale(x);
    sym.add(r, ky, i, s, c * delta(j, k));
    sym.add(r, ky, j, s, c * delta(i, k));
  } else if (kx == JKind::kV && ky == SKind::kB) {
    sym.add(r, SKind::kB, y1, x2, kHalf * delta(y2, x1));
  } else if (kx == JKind::kV && ky == SKind::kC) {
    sym.add(r, SKind::kC, y1, x1, kHalf * delta(y2, x2));
  } else if (kx == JKind::kS && ky == SKind::kB) {
    const std::size_t p = x1, q = x2, i = y1, s = y2;
    sym.add(r, SKind::kC, i, q, kHalf * delta(p, s));
    sym.add(r, SKind::kC, i, p, -kHalf * delta(q, s));
  } else if (kx == JKind::kSt && ky == SKind::kC) {
    const std::size_t p = x1, q = x2, i = y1, s = y2;
    sym.add(r, SKind::kB, i, q, kHalf * delta(s, p));
    sym.add(r, SKind::kB, i, p, -kHalf * delta(q, s));
  } else if (kx == JKind::kU && ky == SKind::kA) {
    const std::size_t i = x1, p = x2, k = y1, j = y2;
    sym.add(r, SKind::kB, k, p, kHalf * delta(i, j));
    sym.add(r, SKind::kB, j, p, -kHalf * delta(i, k));
  } else if (kx == JKind::kU && ky == SKind::kAt) {
    sym.add(r, SKind::kB, x1, y2, kHalf * delta(x2, y1));
  } else if (kx == JKind::kK && ky == SKind::kA) {
    const std::size_t i = x1, p = x2, j = y1, k = y2;
    sym.add(r, SKind::kC, j, p, kHalf * delta(i, k));
    sym.add(r, SKind::kC, k, p, -kHalf * delta(i, j));
  } else if (kx == JKind::kK && ky == SKind::kAt) {
    sym.add(r, SKind::kC, x1, y1, -kHalf * delta(x2, y2));
  } else if (kx == JKind::kU && ky == SKind::kF) {
    const std::size_t i = x1, p = x2, q = y1, s = y2;
    sym.add(r, SKind::kC, i, s, kHalf * delta(p, q));
    sym.add(r, SKind::kC, i, q, kHalf * delta(p, s));
  } else if (kx == JKind::kK && ky == SKind::kFt) {
    const std::size_t i = x1, p = x2, q = y1, s = y2;
    sym.add(r, SKind::kB, i, s, kHalf * delta(p, q));
    sym.add(r, SKind::kB, i, q, kHalf * delta(p, s));
  } else if (kx == JKind::kU && ky == SKind::kB) {
    sym.add(r, SKind::kFt, x2, y2, kHalf * delta(x1, y1));
  } else if (kx == JKind::kU && ky == SKind::kC) {
    const std::size_t i = x1, p = x2, j = y1, q = y2;
    sym.add(r, SKind::kA, i, j, kHalf * delta(p, q));
    sym.add(r, SKind::kAt, q, p, -kHalf * delta(i, j));
  } else if (kx == JKind::kK && ky == SKind::kC) {
    sym.add(r, SKind::kF, x2, y2, -kHalf * delta(x1, y1));
  } else if (kx == JKind::kK && ky == SKind::kB) {
    const std::size_t i = x1, p = x2, j = y1, q = y2;
    sym.add(r, SKind::kA, j, i, kHalf * delta(p, q));
    sym.add(r, SKind::kAt, p, q, -kHalf * delta(i, j));
  }
  return r;
}

Superbimodule empty_skew(std::shared_ptr<const Superalgebra> algebra, std::size_t n, std::size_t m) {
  std::vector<std::string> labels;
  std::vector<Parity> parity;
  for (const auto& y : skew_basis(n, m)) {
    labels.push_back(label(y));
    parity.push_back(y.parity());
  }
  return Superbimodule(std::move(algebra), "Skew(" + std::to_string(n) + "|" + std::to_string(2 * m) + ")",
                       std::move(labels), std::move(parity));
}

void require_skew_shape(std::size_t n, std::size_t m) {
  if (n < 1 || m < 1) throw UsageError("skew_bimodule: requires n >= 1 and m >= 1");
}

}  // namespace

std::string label(const SkewIndex& index) {
  const bool wide = index.first > 9 || index.second > 9;
  return skew_prefix(index.kind) + std::to_string(index.first) + (wide ? "_" : "") + std::to_string(index.second);
}

std::vector<SkewIndex> skew_basis(std::size_t n, std::size_t m) {
  std::vector<SkewIndex> b;
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = i + 1; j <= n; ++j) b.push_back({SKind::kA, i, j});
  for (std::size_t p = 1; p <= m; ++p)
    for (std::size_t q = 1; q <= m; ++q) b.push_back({SKind::kAt, p, q});
  for (std::size_t p = 1; p <= m; ++p)
    for (std::size_t q = p; q <= m; ++q) b.push_back({SKind::kF, p, q});
  for (std::size_t p = 1; p <= m; ++p)
    for (std::size_t q = p; q <= m; ++q) b.push_back({SKind::kFt, p, q});
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t p = 1; p <= m; ++p) b.push_back({SKind::kB, i, p});
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t p = 1; p <= m; ++p) b.push_back({SKind::kC, i, p});
  return b;
}

std::size_t skew_dimension(std::size_t n, std::size_t m) {
  const std::size_t s = n + 2 * m;
  return (s * s + 2 * m - n) / 2;
}

SuperMatrix skew_matrix(std::size_t n, std::size_t m, const SkewIndex& y) {
  const auto e = [n, m](std::size_t r, std::size_t c) { return SuperMatrix::unit(n, m, r, c); };
  const std::size_t a = y.first;
  const std::size_t b = y.second;
  switch (y.kind) {
    case SKind::kA: return e(a, b) - e(b, a);
    case SKind::kAt: return e(n + a, n + b) - e(n + m + b, n + m + a);
    case SKind::kF: return e(n + a, n + m + b) + e(n + b, n + m + a);
    case SKind::kFt: return e(n + m + a, n + b) + e(n + m + b, n + a);
    case SKind::kB: return e(a, n + b) - e(n + m + b, a);
    case SKind::kC: return e(a, n + m + b) + e(n + b, a);
  }
  throw InternalError("skew_matrix: unknown kind");
}

Superbimodule skew_bimodule(std::size_t n, std::size_t m) {
  require_skew_shape(n, m);
  auto algebra = std::make_shared<const Superalgebra>(build_josp_table(n, m));
  Superbimodule module = empty_skew(algebra, n, m);
  const SkewSymbols sym(n, m);
  const auto abasis = josp_basis(n, m);
  const auto mbasis = skew_basis(n, m);
  for (std::size_t a = 0; a < abasis.size(); ++a)
    for (std::size_t j = 0; j < mbasis.size(); ++j)
      for (const auto& t : skew_action(sym, abasis[a], mbasis[j])) module.add_action(a, j, t.index, t.coeff);
  return module;
}

Superbimodule skew_bimodule_from_matrices(std::size_t n, std::size_t m) {
  require_skew_shape(n, m);
  auto algebra = std::make_shared<const Superalgebra>(build_josp_matrix(n, m));
  Superbimodule module = empty_skew(algebra, n, m);
  std::vector<SuperMatrix> amats;
  std::vector<SuperMatrix> mmats;
  for (const auto& x : josp_basis(n, m)) amats.push_back(josp_matrix(n, m, x));
  for (const auto& y : skew_basis(n, m)) mmats.push_back(skew_matrix(n, m, y));
  for (std::size_t a = 0; a < amats.size(); ++a) {
    for (std::size_t j = 0; j < mmats.size(); ++j) {
      const RationalVector c = matrix_coordinates(mmats, jordan_product(amats[a], mmats[j]));
      for (std::size_t k = 0; k < c.size(); ++k) module.add_action(a, j, k, c[k]);
    }
  }
  return module;
}

// ---------------------------------------------------------------------------
// Derived modules

namespace {

std::string toggle_op(const std::string& s) {
  static const std::string kSuffix = "^op";
  if (s.size() >= kSuffix.size() && s.compare(s.size() - kSuffix.size(), kSuffix.size(), kSuffix) == 0) {
    return s.substr(0, s.size() - kSuffix.size());
  }
  return s + kSuffix;
}

void require_same_algebra(const Superbimodule& x, const Superbimodule& y, const char* where) {
  if (x.algebra_ptr() != y.algebra_ptr() && !same_structure(x.algebra(), y.algebra())) {
    throw UsageError(std::string(where) + ": modules are over different algebras");
  }
}

}  // namespace

Superbimodule opposite(const Superbimodule& m) {
  std::vector<std::string> labels;
  std::vector<Parity> parity;
  for (std::size_t j = 0; j < m.dim(); ++j) {
    labels.push_back(toggle_op(m.label(j)));
    parity.push_back(m.parity(j) + Parity::kOdd);
  }
  Superbimodule op(m.algebra_ptr(), toggle_op(m.name()), std::move(labels), std::move(parity));
  for (std::size_t a = 0; a < m.algebra().dim(); ++a) {
    const int s = sign_of(bit(m.algebra().parity(a)));
    for (std::size_t j = 0; j < m.dim(); ++j)
      for (const auto& t : m.action(a, j)) op.add_action(a, j, t.index, s * t.coeff);
  }
  return op;
}

Superbimodule direct_sum(const Superbimodule& m1, const Superbimodule& m2) {
  require_same_algebra(m1, m2, "direct_sum");
  std::vector<std::string> labels;
  std::vector<Parity> parity;
  for (std::size_t j = 0; j < m1.dim(); ++j) {
    labels.push_back(m1.label(j) + "#1");
    parity.push_back(m1.parity(j));
  }
  for (std::size_t j = 0; j < m2.dim(); ++j) {
    labels.push_back(m2.label(j) + "#2");
    parity.push_back(m2.parity(j));
  }
  Superbimodule sum(m1.algebra_ptr(), m1.name() + "+" + m2.name(), std::move(labels), std::move(parity));
  const std::size_t shift = m1.dim();
  for (std::size_t a = 0; a < m1.algebra().dim(); ++a) {
    for (std::size_t j = 0; j < m1.dim(); ++j)
      for (const auto& t : m1.action(a, j)) sum.add_action(a, j, t.index, t.coeff);
    for (std::size_t j = 0; j < m2.dim(); ++j)
      for (const auto& t : m2.action(a, j)) sum.add_action(a, shift + j, shift + t.index, t.coeff);
  }
  return sum;
}

SplitNullExtension split_null_extension(const Superbimodule& m) {
  const Superalgebra& a = m.algebra();
  const std::size_t da = a.dim();
  std::vector<std::string> labels = a.labels();
  std::vector<Parity> parity = a.parities();
  labels.insert(labels.end(), m.labels().begin(), m.labels().end());
  parity.insert(parity.end(), m.parities().begin(), m.parities().end());
  SplitNullExtension out{Superalgebra(a.name() + "+" + m.name(), std::move(labels), std::move(parity)), {}};
  Superalgebra& e = out.algebra;
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t j = 0; j < da; ++j)
      for (const auto& t : a.product(i, j)) e.add_constant(i, j, t.index, t.coeff);
  for (std::size_t i = 0; i < da; ++i) {
    for (std::size_t j = 0; j < m.dim(); ++j) {
      const int s = koszul(a.parity(i), m.parity(j));
      for (const auto& t : m.action(i, j)) {
        e.add_constant(i, da + j, da + t.index, t.coeff);
        e.add_constant(da + j, i, da + t.index, s * t.coeff);
      }
    }
  }
  for (std::size_t j = 0; j < m.dim(); ++j) out.ideal.push_back(da + j);

  if (const auto& unit = a.unit()) {
    bool acts_as_identity = true;
    for (std::size_t j = 0; j < m.dim() && acts_as_identity; ++j) {
      RationalVector image(m.dim());
      for (std::size_t i = 0; i < da; ++i)
        if (sgn((*unit)[i]) != 0) axpy(image, (*unit)[i], m.action(i, j));
      for (std::size_t k = 0; k < m.dim(); ++k)
        if (image[k] != (k == j ? 1 : 0)) acts_as_identity = false;
    }
    if (acts_as_identity) {
      RationalVector extended = *unit;
      extended.resize(e.dim());
      e.set_unit(std::move(extended));
    }
  }
  return out;
}

std::vector<RatMatrix> hom_space(const Superbimodule& m1, const Superbimodule& m2, Parity parity_shift) {
  require_same_algebra(m1, m2, "hom_space");
  const std::size_t d1 = m1.dim();
  const std::size_t d2 = m2.dim();
  // Unknown φ[k][j] (image of m1_j along m2_k), allowed only when parities differ by the shift.
  std::vector<std::ptrdiff_t> unknown(d1 * d2, -1);
  std::vector<std::pair<std::size_t, std::size_t>> positions;
  for (std::size_t k = 0; k < d2; ++k)
    for (std::size_t j = 0; j < d1; ++j)
      if (m2.parity(k) == m1.parity(j) + parity_shift) {
        unknown[k * d1 + j] = static_cast<std::ptrdiff_t>(positions.size());
        positions.emplace_back(k, j);
      }

  // φ(a·m_j) - s·a·φ(m_j) = 0, one row per (a, j, output coordinate k).
  RatMatrix system;
  std::vector<Rational> row(positions.size());
  for (std::size_t a = 0; a < m1.algebra().dim(); ++a) {
    const int s = sign_of(bit(parity_shift) * bit(m1.algebra().parity(a)));
    for (std::size_t j = 0; j < d1; ++j) {
      std::map<std::size_t, RationalVector> rows_by_k;
      auto row_for = [&](std::size_t k) -> RationalVector& {
        auto [it, inserted] = rows_by_k.try_emplace(k);
        if (inserted) it->second.assign(positions.size(), Rational(0));
        return it->second;
      };
      for (const auto& t : m1.action(a, j))
        for (std::size_t k = 0; k < d2; ++k)
          if (const auto u = unknown[k * d1 + t.index]; u >= 0) row_for(k)[static_cast<std::size_t>(u)] += t.coeff;
      for (std::size_t l = 0; l < d2; ++l) {
        const auto u = unknown[l * d1 + j];
        if (u < 0) continue;
        for (const auto& t : m2.action(a, l)) row_for(t.index)[static_cast<std::size_t>(u)] -= s * t.coeff;
      }
      for (auto& [k, r] : rows_by_k)
        if (!is_zero(r)) system.append_row(r);
    }
  }

  std::vector<RationalVector> basis;
  if (system.rows() == 0) {
    for (std::size_t u = 0; u < positions.size(); ++u) {
      RationalVector v(positions.size());
      v[u] = 1;
      basis.push_back(std::move(v));
    }
  } else {
    basis = nullspace(system);
  }
  std::vector<RatMatrix> maps;
  for (const auto& v : basis) {
    RatMatrix phi(d2, d1);
    for (std::size_t u = 0; u < positions.size(); ++u) phi(positions[u].first, positions[u].second) = v[u];
    maps.push_back(std::move(phi));
  }
  return maps;
}

std::optional<RatMatrix> find_isomorphism(const Superbimodule& m1, const Superbimodule& m2, Parity parity_shift) {
  if (m1.dim() != m2.dim()) return std::nullopt;
  const auto maps = hom_space(m1, m2, parity_shift);
  if (maps.empty()) return std::nullopt;
  const auto invertible = [&](const RatMatrix& x) { return rank(x) == m1.dim(); };
  for (const auto& phi : maps)
    if (invertible(phi)) return phi;
  RatMatrix combination(m2.dim(), m1.dim());
  for (std::size_t i = 0; i < maps.size(); ++i)
    for (std::size_t r = 0; r < combination.rows(); ++r)
      for (std::size_t c = 0; c < combination.cols(); ++c) combination(r, c) += Rational(i + 1) * maps[i](r, c);
  if (invertible(combination)) return combination;
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Burnside

namespace {

/// Incremental echelon basis: each stored vector is reduced against its predecessors and scaled to pivot 1.
class EchelonSpan {
 public:
  explicit EchelonSpan(std::size_t length) : length_(length) {}

  /// Reduces v in place; returns true and stores it when it is independent.
  bool insert(RationalVector v) {
    for (const auto& [pivot, b] : basis_) {
      if (sgn(v[pivot]) == 0) continue;
      const Rational c = v[pivot];
      for (std::size_t i = pivot; i < length_; ++i)
        if (sgn(b[i]) != 0) v[i] -= c * b[i];
    }
    const auto it = std::find_if(v.begin(), v.end(), [](const Rational& x) { return sgn(x) != 0; });
    if (it == v.end()) return false;
    const auto pivot = static_cast<std::size_t>(it - v.begin());
    const Rational inv = 1 / v[pivot];
    for (auto& x : v) x *= inv;
    basis_.emplace_back(pivot, std::move(v));
    return true;
  }

  std::size_t size() const noexcept { return basis_.size(); }
  std::vector<RationalVector> vectors() const {
    std::vector<RationalVector> out;
    for (const auto& [p, b] : basis_) out.push_back(b);
    return out;
  }

 private:
  std::size_t length_;
  std::vector<std::pair<std::size_t, RationalVector>> basis_;
};

RationalVector flatten(const RatMatrix& x) { return x.entries(); }

/// L_a·X using the sparse action.
RatMatrix left_act(const Superbimodule& m, std::size_t a, const RatMatrix& x) {
  const std::size_t d = m.dim();
  RatMatrix out(d, d);
  for (std::size_t j = 0; j < d; ++j) {
    for (const auto& t : m.action(a, j)) {
      for (std::size_t c = 0; c < d; ++c)
        if (sgn(x(j, c)) != 0) out(t.index, c) += t.coeff * x(j, c);
    }
  }
  return out;
}

/// Associative span of {id} ∪ {L_a}; stops early once it reaches dimension d².
std::vector<RatMatrix> operator_span(const Superbimodule& m) {
  const std::size_t d = m.dim();
  EchelonSpan span(d * d);
  std::vector<RatMatrix> members;
  auto offer = [&](RatMatrix x) {
    if (span.insert(flatten(x))) members.push_back(std::move(x));
  };
  offer(RatMatrix::identity(d));
  for (std::size_t next = 0; next < members.size() && span.size() < d * d; ++next) {
    for (std::size_t a = 0; a < m.algebra().dim() && span.size() < d * d; ++a) offer(left_act(m, a, members[next]));
  }
  return members;
}

std::vector<RationalVector> submodule_from(const std::vector<RatMatrix>& span, const RationalVector& v) {
  EchelonSpan w(v.size());
  for (const auto& x : span) w.insert(x.apply(v));
  return w.vectors();
}

}  // namespace

std::string to_string(BurnsideResult::Verdict v) {
  switch (v) {
    case BurnsideResult::Verdict::kYes: return "yes";
    case BurnsideResult::Verdict::kNo: return "no";
    case BurnsideResult::Verdict::kUnknown: return "unknown";
  }
  return "?";
}

std::vector<RationalVector> generated_submodule(const Superbimodule& m, const RationalVector& v) {
  if (v.size() != m.dim()) throw UsageError("generated_submodule: vector length differs from module dimension");
  return submodule_from(operator_span(m), v);
}

BurnsideResult is_irreducible_burnside(const Superbimodule& m) {
  const std::size_t d = m.dim();
  if (d == 0) throw UsageError("is_irreducible_burnside: module must be nonzero");
  const auto span = operator_span(m);
  BurnsideResult result{BurnsideResult::Verdict::kYes, span.size(), {}};
  if (span.size() == d * d) return result;

  auto try_candidate = [&](const RationalVector& v) {
    auto w = submodule_from(span, v);
    if (!w.empty() && w.size() < d) {
      result.verdict = BurnsideResult::Verdict::kNo;
      result.witness = std::move(w);
      return true;
    }
    return false;
  };
  for (std::size_t j = 0; j < d; ++j) {
    RationalVector e(d);
    e[j] = 1;
    if (try_candidate(e)) return result;
  }
  for (const auto& x : span)
    for (const auto& v : nullspace(x))
      if (try_candidate(v)) return result;
  result.verdict = BurnsideResult::Verdict::kUnknown;
  return result;
}

}  // namespace jsplit
