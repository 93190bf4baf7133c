#include "jsplit/josp.hpp"

#include <algorithm>
#include <map>
#include <optional>

#include "jsplit/errors.hpp"
#include "jsplit/linalg.hpp"

namespace jsplit {

namespace {

using Kind = JospIndex::Kind;

std::string kind_prefix(Kind k) {
  switch (k) {
    case Kind::kH: return "h";
    case Kind::kV: return "v";
    case Kind::kS: return "s";
    case Kind::kSt: return "st";
    case Kind::kU: return "u";
    case Kind::kK: return "k";
  }
  return "?";
}

Rational delta(std::size_t a, std::size_t b) { return a == b ? 1 : 0; }

const Rational kHalf(1, 2);

/// Accumulates table right-hand sides written with unnormalized symbols:
///   H(i,j) is the symmetric symbol e_ij + e_ji, so H(i,i) = 2·h_ii;
///   S, St are antisymmetric in their indices; V, U, K are stored as written.
class JospSymbols {
 public:
  JospSymbols(std::size_t n, std::size_t m) {
    const auto basis = josp_basis(n, m);
    for (std::size_t i = 0; i < basis.size(); ++i) index_[key(basis[i])] = i;
  }

  std::size_t index(const JospIndex& x) const { return index_.at(key(x)); }

  void add(SparseVector& out, Kind kind, std::size_t i, std::size_t j, const Rational& c) const {
    if (sgn(c) == 0) return;
    switch (kind) {
      case Kind::kH:
        if (i == j) add_term(out, index({Kind::kH, i, i}), 2 * c);
        else add_term(out, index({Kind::kH, std::min(i, j), std::max(i, j)}), c);
        return;
      case Kind::kS:
      case Kind::kSt:
        if (i == j) return;
        if (i < j) add_term(out, index({kind, i, j}), c);
        else add_term(out, index({kind, j, i}), -c);
        return;
      default:
        add_term(out, index({kind, i, j}), c);
    }
  }

 private:
  static std::tuple<int, std::size_t, std::size_t> key(const JospIndex& x) {
    return {static_cast<int>(x.kind), x.first, x.second};
  }
  std::map<std::tuple<int, std::size_t, std::size_t>, std::size_t> index_;
};

/// Scale of a basis h relative to its symmetric symbol: h_ii = ½H(i,i), h_ij = H(i,j).
Rational h_scale(const JospIndex& h) { return h.first == h.second ? kHalf : Rational(1); }

/// Table entries for the ordered pair (x, y) as listed; empty when the pair is not listed in this order.
std::optional<SparseVector> listed_product(const JospSymbols& sym, const JospIndex& x, const JospIndex& y) {
  SparseVector r;
  const auto kx = x.kind;
  const auto ky = y.kind;

  // Even · even
  if (kx == Kind::kH && ky == Kind::kH) {
    const auto [i, j] = std::pair{x.first, x.second};
    const auto [k, l] = std::pair{y.first, y.second};
    const Rational c = kHalf * h_scale(x) * h_scale(y);
    sym.add(r, Kind::kH, i, l, c * delta(j, k));
    sym.add(r, Kind::kH, k, j, c * delta(l, i));
    sym.add(r, Kind::kH, i, k, c * delta(j, l));
    sym.add(r, Kind::kH, j, l, c * delta(i, k));
    return r;
  }
  if (kx == Kind::kS && ky == Kind::kSt) {
    const auto [p, q] = std::pair{x.first, x.second};
    const auto [s, t] = std::pair{y.first, y.second};
    sym.add(r, Kind::kV, p, t, kHalf * delta(q, s));
    sym.add(r, Kind::kV, q, s, kHalf * delta(p, t));
    sym.add(r, Kind::kV, p, s, -kHalf * delta(q, t));
    sym.add(r, Kind::kV, q, t, -kHalf * delta(p, s));
    return r;
  }
  if (kx == Kind::kV && ky == Kind::kV) {
    const auto [p, q] = std::pair{x.first, x.second};
    const auto [s, t] = std::pair{y.first, y.second};
    sym.add(r, Kind::kV, p, t, kHalf * delta(q, s));
    sym.add(r, Kind::kV, s, q, kHalf * delta(p, t));
    return r;
  }
  if (kx == Kind::kV && ky == Kind::kS) {
    const auto [p, q] = std::pair{x.first, x.second};
    const auto [s, t] = std::pair{y.first, y.second};
    sym.add(r, Kind::kS, p, t, kHalf * delta(q, s));
    sym.add(r, Kind::kS, s, p, kHalf * delta(t, q));
    return r;
  }
  if (kx == Kind::kV && ky == Kind::kSt) {
    const auto [p, q] = std::pair{x.first, x.second};
    const auto [s, t] = std::pair{y.first, y.second};
    sym.add(r, Kind::kSt, q, t, kHalf * delta(p, s));
    sym.add(r, Kind::kSt, s, q, kHalf * delta(p, t));
    return r;
  }

  // Odd · even
  if ((kx == Kind::kU || kx == Kind::kK) && ky == Kind::kH) {
    const auto [k, p] = std::pair{x.first, x.second};
    const auto [i, j] = std::pair{y.first, y.second};
    const Rational c = kHalf * h_scale(y);
    sym.add(r, kx, i, p, c * delta(j, k));
    sym.add(r, kx, j, p, c * delta(i, k));
    return r;
  }
  if (kx == Kind::kU && ky == Kind::kV) {
    sym.add(r, Kind::kU, x.first, y.second, kHalf * delta(x.second, y.first));
    return r;
  }
  if (kx == Kind::kK && ky == Kind::kV) {
    sym.add(r, Kind::kK, x.first, y.first, kHalf * delta(x.second, y.second));
    return r;
  }
  if (kx == Kind::kU && ky == Kind::kS) {
    const auto [i, s] = std::pair{x.first, x.second};
    const auto [p, q] = std::pair{y.first, y.second};
    sym.add(r, Kind::kK, i, q, kHalf * delta(s, p));
    sym.add(r, Kind::kK, i, p, -kHalf * delta(s, q));
    return r;
  }
  if (kx == Kind::kK && ky == Kind::kSt) {
    const auto [i, s] = std::pair{x.first, x.second};
    const auto [p, q] = std::pair{y.first, y.second};
    sym.add(r, Kind::kU, i, q, kHalf * delta(s, p));
    sym.add(r, Kind::kU, i, p, -kHalf * delta(s, q));
    return r;
  }

  // Odd · odd (skew-symmetric)
  if (kx == Kind::kU && ky == Kind::kU) {
    sym.add(r, Kind::kSt, x.second, y.second, kHalf * delta(x.first, y.first));
    return r;
  }
  if (kx == Kind::kK && ky == Kind::kK) {
    sym.add(r, Kind::kS, y.second, x.second, kHalf * delta(x.first, y.first));
    return r;
  }
  if (kx == Kind::kU && ky == Kind::kK) {
    const auto [i, p] = std::pair{x.first, x.second};
    const auto [j, q] = std::pair{y.first, y.second};
    sym.add(r, Kind::kV, q, p, kHalf * delta(i, j));
    sym.add(r, Kind::kH, i, j, -kHalf * delta(p, q));
    return r;
  }
  return std::nullopt;
}

}  // namespace

std::string label(const JospIndex& index) {
  const bool wide = index.first > 9 || index.second > 9;
  return kind_prefix(index.kind) + std::to_string(index.first) + (wide ? "_" : "") + std::to_string(index.second);
}

std::vector<JospIndex> josp_basis(std::size_t n, std::size_t m) {
  std::vector<JospIndex> b;
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = i; j <= n; ++j) b.push_back({Kind::kH, i, j});
  for (std::size_t p = 1; p <= m; ++p)
    for (std::size_t q = 1; q <= m; ++q) b.push_back({Kind::kV, p, q});
  for (std::size_t p = 1; p <= m; ++p)
    for (std::size_t q = p + 1; q <= m; ++q) b.push_back({Kind::kS, p, q});
  for (std::size_t p = 1; p <= m; ++p)
    for (std::size_t q = p + 1; q <= m; ++q) b.push_back({Kind::kSt, p, q});
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t p = 1; p <= m; ++p) b.push_back({Kind::kU, i, p});
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t p = 1; p <= m; ++p) b.push_back({Kind::kK, i, p});
  return b;
}

std::size_t josp_dimension(std::size_t n, std::size_t m) {
  const std::size_t s = n + 2 * m;
  return (s * s + n - 2 * m) / 2;
}

std::string josp_name(std::size_t n, std::size_t m) {
  return "Josp(" + std::to_string(n) + "|" + std::to_string(2 * m) + ")";
}

SuperMatrix josp_matrix(std::size_t n, std::size_t m, const JospIndex& x) {
  const auto e = [n, m](std::size_t r, std::size_t c) { return SuperMatrix::unit(n, m, r, c); };
  const std::size_t a = x.first;
  const std::size_t b = x.second;
  switch (x.kind) {
    case Kind::kH: return a == b ? e(a, a) : e(a, b) + e(b, a);
    case Kind::kV: return e(n + a, n + b) + e(n + m + b, n + m + a);
    case Kind::kS: return e(n + a, n + m + b) - e(n + b, n + m + a);
    case Kind::kSt: return e(n + m + a, n + b) - e(n + m + b, n + a);
    case Kind::kU: return e(a, n + b) + e(n + m + b, a);
    case Kind::kK: return e(a, n + m + b) - e(n + b, a);
  }
  throw InternalError("josp_matrix: unknown kind");
}

namespace {

Superalgebra empty_josp(std::size_t n, std::size_t m, const std::vector<JospIndex>& basis) {
  std::vector<std::string> labels;
  std::vector<Parity> parity;
  for (const auto& x : basis) {
    labels.push_back(label(x));
    parity.push_back(x.parity());
  }
  return Superalgebra(josp_name(n, m), std::move(labels), std::move(parity));
}

void install_unit(Superalgebra& a, const std::vector<JospIndex>& basis) {
  RationalVector unit(basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const auto& x = basis[i];
    if ((x.kind == Kind::kH || x.kind == Kind::kV) && x.first == x.second) unit[i] = 1;
  }
  a.set_unit(std::move(unit));
}

}  // namespace

Superalgebra build_josp_table(std::size_t n, std::size_t m) {
  if (n < 1) throw UsageError("build_josp_table: n must be >= 1");
  const auto basis = josp_basis(n, m);
  const JospSymbols sym(n, m);
  Superalgebra a = empty_josp(n, m, basis);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = 0; j < basis.size(); ++j) {
      if (auto direct = listed_product(sym, basis[i], basis[j])) {
        for (const auto& t : *direct) a.add_constant(i, j, t.index, t.coeff);
      } else if (auto swapped = listed_product(sym, basis[j], basis[i])) {
        const int s = koszul(basis[i].parity(), basis[j].parity());
        for (const auto& t : *swapped) a.add_constant(i, j, t.index, s * t.coeff);
      }
    }
  }
  install_unit(a, basis);
  return a;
}

RationalVector matrix_coordinates(const std::vector<SuperMatrix>& basis, const SuperMatrix& x) {
  const std::size_t size = x.size();
  RatMatrix system(size * size, basis.size());
  for (std::size_t b = 0; b < basis.size(); ++b)
    for (std::size_t r = 0; r < size; ++r)
      for (std::size_t c = 0; c < size; ++c) system(r * size + c, b) = basis[b](r, c);
  const LinearSolution sol = solve_linear(system, x.entries().entries());
  if (!sol.solved() || !sol.nullspace_basis.empty()) {
    throw InternalError("matrix_coordinates: matrix is not uniquely in the span of the basis");
  }
  return sol.particular;
}

Superalgebra build_josp_matrix(std::size_t n, std::size_t m) {
  if (n < 1) throw UsageError("build_josp_matrix: n must be >= 1");
  const auto basis = josp_basis(n, m);
  const OspInvolution involution(n, m);
  std::vector<SuperMatrix> mats;
  for (const auto& x : basis) {
    mats.push_back(josp_matrix(n, m, x));
    if (involution(mats.back()) != mats.back()) {
      throw InternalError("build_josp_matrix: " + label(x) + " is not osp-symmetric");
    }
  }
  Superalgebra a = empty_josp(n, m, basis);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = 0; j < basis.size(); ++j) {
      const RationalVector c = matrix_coordinates(mats, jordan_product(mats[i], mats[j]));
      for (std::size_t k = 0; k < c.size(); ++k) a.add_constant(i, j, k, c[k]);
    }
  }
  install_unit(a, basis);
  return a;
}

bool structure_iso_check(const Superalgebra& a, const Superalgebra& b, const std::vector<std::size_t>& basis_map) {
  if (a.dim() != b.dim() || basis_map.size() != a.dim()) throw UsageError("structure_iso_check: dimension mismatch");
  std::vector<bool> hit(b.dim(), false);
  for (std::size_t i = 0; i < basis_map.size(); ++i) {
    const std::size_t j = basis_map[i];
    if (j >= b.dim() || hit[j]) throw UsageError("structure_iso_check: basis_map is not a bijection");
    hit[j] = true;
    if (a.parity(i) != b.parity(j)) throw UsageError("structure_iso_check: basis_map changes parity");
  }
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = 0; j < a.dim(); ++j) {
      SparseVector mapped;
      for (const auto& t : a.product(i, j)) add_term(mapped, basis_map[t.index], t.coeff);
      if (mapped != b.product(basis_map[i], basis_map[j])) return false;
    }
  }
  return true;
}

std::vector<std::size_t> label_basis_map(const Superalgebra& a, const Superalgebra& b) {
  if (a.dim() != b.dim()) throw UsageError("label_basis_map: dimension mismatch");
  std::vector<std::size_t> map(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) {
    const auto j = b.index_of(a.label(i));
    if (!j) throw UsageError("label_basis_map: label " + a.label(i) + " missing");
    map[i] = *j;
  }
  return map;
}

}  // namespace jsplit
