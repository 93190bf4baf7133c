#include "jsplit/splitting.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <set>

#include "jsplit/errors.hpp"
#include "jsplit/josp.hpp"

namespace jsplit {

namespace {

bool supported_in(const SparseVector& v, const std::vector<bool>& mask) {
  return std::all_of(v.begin(), v.end(), [&](const Term& t) { return mask[t.index]; });
}

std::vector<bool> ideal_mask(const MarkedExtension& ext) {
  std::vector<bool> mask(ext.algebra.dim(), false);
  for (auto i : ext.ideal)
    if (i < mask.size()) mask[i] = true;
  return mask;
}

RationalVector add(RationalVector x, const RationalVector& y) {
  for (std::size_t i = 0; i < x.size(); ++i) x[i] += y[i];
  return x;
}

RationalVector subtract(RationalVector x, const RationalVector& y) {
  for (std::size_t i = 0; i < x.size(); ++i) x[i] -= y[i];
  return x;
}

/// σ applied to a model coordinate vector.
RationalVector apply_section(const MarkedExtension& ext, const SparseVector& model_vector) {
  RationalVector out(ext.algebra.dim());
  for (const auto& t : model_vector)
    for (std::size_t i = 0; i < out.size(); ++i)
      if (sgn(ext.section[t.index][i]) != 0) out[i] += t.coeff * ext.section[t.index][i];
  return out;
}

std::string pair_name(const Superalgebra& a, std::size_t x, std::size_t y) {
  return "(" + a.label(x) + "," + a.label(y) + ")";
}

}  // namespace

// ---------------------------------------------------------------------------
// Invariants

std::vector<std::string> extension_problems(const MarkedExtension& ext) {
  std::vector<std::string> problems;
  const Superalgebra& e = ext.algebra;
  const Superalgebra& model = ext.model;

  std::set<std::size_t> seen;
  for (auto i : ext.ideal) {
    if (i >= e.dim()) problems.push_back("ideal index " + std::to_string(i) + " out of range");
    else if (!seen.insert(i).second) problems.push_back("ideal index " + std::to_string(i) + " repeated");
  }
  if (!problems.empty()) return problems;
  const auto mask = ideal_mask(ext);

  for (auto n : ext.ideal) {
    for (std::size_t i = 0; i < e.dim(); ++i) {
      if (!supported_in(e.product(i, n), mask) || !supported_in(e.product(n, i), mask)) {
        problems.push_back("N is not an ideal: product with " + e.label(i) + " and " + e.label(n) + " leaves N");
        return problems;
      }
    }
    for (auto n2 : ext.ideal)
      if (!e.product(n, n2).empty()) {
        problems.push_back("N·N ≠ 0 at " + pair_name(e, n, n2));
        return problems;
      }
  }

  if (ext.section.size() != model.dim()) {
    problems.push_back("section has " + std::to_string(ext.section.size()) + " images for a model of dimension " +
                       std::to_string(model.dim()));
    return problems;
  }
  for (std::size_t a = 0; a < model.dim(); ++a) {
    const auto& s = ext.section[a];
    if (s.size() != e.dim()) {
      problems.push_back("section image of " + model.label(a) + " has the wrong length");
      return problems;
    }
    for (std::size_t i = 0; i < e.dim(); ++i)
      if (sgn(s[i]) != 0 && e.parity(i) != model.parity(a)) {
        problems.push_back("section does not preserve parity at " + model.label(a));
        break;
      }
  }
  if (!problems.empty()) return problems;

  for (std::size_t x = 0; x < model.dim(); ++x) {
    for (std::size_t y = 0; y < model.dim(); ++y) {
      const RationalVector defect =
          subtract(e.multiply(ext.section[x], ext.section[y]), apply_section(ext, model.product(x, y)));
      for (std::size_t i = 0; i < e.dim(); ++i)
        if (sgn(defect[i]) != 0 && !mask[i]) {
          problems.push_back("section is not a homomorphism modulo N at " + pair_name(model, x, y));
          return problems;
        }
    }
  }

  std::vector<RationalVector> spanning = ext.section;
  for (auto n : ext.ideal) spanning.push_back(e.basis_vector(n));
  if (model.dim() + ext.ideal.size() != e.dim() || rank(rows_matrix(spanning, e.dim())) != e.dim()) {
    problems.push_back("σ(model) and N are not complementary in " + e.name());
  }
  return problems;
}

void validate_extension(const MarkedExtension& ext) {
  const auto problems = extension_problems(ext);
  if (!problems.empty()) throw UsageError("invalid marked extension: " + problems.front());
}

// ---------------------------------------------------------------------------
// Corrections

CorrectionMap CorrectionMap::zero(const MarkedExtension& ext) {
  return {RatMatrix(ext.model.dim(), ext.ideal.size())};
}

RationalVector CorrectionMap::image(const MarkedExtension& ext, std::size_t a) const {
  RationalVector out(ext.algebra.dim());
  for (std::size_t r = 0; r < ext.ideal.size(); ++r) out[ext.ideal[r]] = coeff(a, r);
  return out;
}

bool CorrectionMap::parity_preserving(const MarkedExtension& ext) const {
  if (coeff.rows() != ext.model.dim() || coeff.cols() != ext.ideal.size()) return false;
  for (std::size_t a = 0; a < coeff.rows(); ++a)
    for (std::size_t r = 0; r < coeff.cols(); ++r)
      if (sgn(coeff(a, r)) != 0 && ext.model.parity(a) != ext.algebra.parity(ext.ideal[r])) return false;
  return true;
}

CorrectionMap SplittingSystem::correction(const MarkedExtension& ext, const RationalVector& solution) const {
  CorrectionMap tau = CorrectionMap::zero(ext);
  for (std::size_t u = 0; u < unknowns.size(); ++u) tau.coeff(unknowns[u].first, unknowns[u].second) = solution[u];
  return tau;
}

std::optional<std::size_t> SplittingSystem::unknown_index(std::size_t a, std::size_t r) const {
  const auto it = std::find(unknowns.begin(), unknowns.end(), std::pair{a, r});
  if (it == unknowns.end()) return std::nullopt;
  return static_cast<std::size_t>(it - unknowns.begin());
}

// ---------------------------------------------------------------------------
// Lifting system

SplittingSystem splitting_system(const MarkedExtension& ext) {
  validate_extension(ext);
  const Superalgebra& e = ext.algebra;
  const Superalgebra& model = ext.model;
  const std::size_t nr = ext.ideal.size();

  SplittingSystem sys;
  std::vector<std::vector<std::ptrdiff_t>> unknown(model.dim(), std::vector<std::ptrdiff_t>(nr, -1));
  for (std::size_t a = 0; a < model.dim(); ++a)
    for (std::size_t r = 0; r < nr; ++r)
      if (model.parity(a) == e.parity(ext.ideal[r])) {
        unknown[a][r] = static_cast<std::ptrdiff_t>(sys.unknowns.size());
        sys.unknowns.emplace_back(a, r);
      }

  // Radical coordinates of σ(x)·n_r and n_r·σ(y).
  const auto project = [&](const RationalVector& v) {
    RationalVector out(nr);
    for (std::size_t r = 0; r < nr; ++r) out[r] = v[ext.ideal[r]];
    return out;
  };
  std::vector<std::vector<RationalVector>> left(model.dim()), right(model.dim());
  for (std::size_t x = 0; x < model.dim(); ++x) {
    for (std::size_t r = 0; r < nr; ++r) {
      const RationalVector n = e.basis_vector(ext.ideal[r]);
      left[x].push_back(project(e.multiply(ext.section[x], n)));
      right[x].push_back(project(e.multiply(n, ext.section[x])));
    }
  }

  RationalVector row(sys.unknowns.size());
  for (std::size_t x = 0; x < model.dim(); ++x) {
    for (std::size_t y = x; y < model.dim(); ++y) {
      const RationalVector defect =
          project(subtract(e.multiply(ext.section[x], ext.section[y]), apply_section(ext, model.product(x, y))));
      const Parity target = model.parity(x) + model.parity(y);
      for (std::size_t out = 0; out < nr; ++out) {
        if (e.parity(ext.ideal[out]) != target) continue;
        std::fill(row.begin(), row.end(), Rational(0));
        for (std::size_t r = 0; r < nr; ++r) {
          if (const auto u = unknown[y][r]; u >= 0) row[static_cast<std::size_t>(u)] += left[x][r][out];
          if (const auto u = unknown[x][r]; u >= 0) row[static_cast<std::size_t>(u)] += right[y][r][out];
        }
        for (const auto& t : model.product(x, y))
          if (const auto u = unknown[t.index][out]; u >= 0) row[static_cast<std::size_t>(u)] -= t.coeff;
        const Rational b = -defect[out];
        if (sgn(b) == 0 && is_zero(row)) continue;
        sys.matrix.append_row(row);
        sys.rhs.push_back(b);
        sys.rows.push_back({x, y, out});
      }
    }
  }
  if (sys.matrix.rows() == 0) sys.matrix = RatMatrix(0, sys.unknowns.size());
  return sys;
}

SplitCertificate solve_splitting(const MarkedExtension& ext) {
  SplitCertificate cert{SplitCertificate::Kind::kSplit, CorrectionMap::zero(ext), {}, {}, splitting_system(ext)};
  const SplittingSystem& sys = cert.system;
  if (sys.matrix.rows() == 0) return cert;
  const LinearSolution sol = solve_linear(sys.matrix, sys.rhs);
  if (sol.solved()) {
    cert.tau = sys.correction(ext, sol.particular);
    return cert;
  }
  cert.kind = SplitCertificate::Kind::kNoSplit;
  cert.witness = sol.witness;
  std::set<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < sol.witness.size(); ++i)
    if (sgn(sol.witness[i]) != 0) pairs.insert({sys.rows[i].x, sys.rows[i].y});
  cert.violated_pairs.assign(pairs.begin(), pairs.end());
  return cert;
}

bool verify_splitting(const MarkedExtension& ext, const CorrectionMap& tau) {
  const Superalgebra& e = ext.algebra;
  const Superalgebra& model = ext.model;
  if (tau.coeff.rows() != model.dim() || tau.coeff.cols() != ext.ideal.size()) return false;
  if (ext.section.size() != model.dim()) return false;

  std::vector<RationalVector> s;
  for (std::size_t a = 0; a < model.dim(); ++a) s.push_back(add(ext.section[a], tau.image(ext, a)));

  for (std::size_t x = 0; x < model.dim(); ++x) {
    for (std::size_t y = 0; y < model.dim(); ++y) {
      RationalVector expected(e.dim());
      for (const auto& t : model.product(x, y))
        for (std::size_t i = 0; i < e.dim(); ++i) expected[i] += t.coeff * s[t.index][i];
      if (e.multiply(s[x], s[y]) != expected) return false;
    }
  }
  std::vector<RationalVector> spanning = s;
  for (auto n : ext.ideal) spanning.push_back(e.basis_vector(n));
  return model.dim() + ext.ideal.size() == e.dim() && rank(rows_matrix(spanning, e.dim())) == e.dim();
}

// ---------------------------------------------------------------------------
// Lemma relations

namespace {

/// Lifted Josp elements X = σ(x) + τ(x) addressed by symbol, with the antisymmetry of S and S̃.
class LiftedJosp {
 public:
  LiftedJosp(const MarkedExtension& ext, const CorrectionMap& tau) : ext_(ext), tau_(tau) {
    const Superalgebra& model = ext.model;
    while (model.index_of(label(JospIndex{JospIndex::Kind::kH, n_ + 1, n_ + 1}))) ++n_;
    while (model.index_of(label(JospIndex{JospIndex::Kind::kV, m_ + 1, m_ + 1}))) ++m_;
    const auto basis = josp_basis(n_, m_);
    if (n_ == 0 || basis.size() != model.dim()) {
      throw UsageError("verify_lemma_relations: model " + model.name() + " does not carry Josp labels");
    }
    for (const auto& x : basis)
      if (!model.index_of(label(x))) throw UsageError("verify_lemma_relations: model lacks " + label(x));
  }

  std::size_t n() const { return n_; }
  std::size_t m() const { return m_; }

  RationalVector get(JospIndex::Kind kind, std::size_t i, std::size_t j) const {
    using K = JospIndex::Kind;
    if (kind == K::kH && i > j) std::swap(i, j);
    if (kind == K::kS || kind == K::kSt) {
      if (i == j) return RationalVector(ext_.algebra.dim());
      if (i > j) return scaled(get(kind, j, i), -1);
    }
    const std::size_t a = *ext_.model.index_of(label(JospIndex{kind, i, j}));
    return add(ext_.section[a], tau_.image(ext_, a));
  }

  RationalVector product(const RationalVector& x, const RationalVector& y) const { return ext_.algebra.multiply(x, y); }

  static RationalVector scaled(RationalVector v, const Rational& s) {
    for (auto& x : v) x *= s;
    return v;
  }

 private:
  const MarkedExtension& ext_;
  const CorrectionMap& tau_;
  std::size_t n_ = 0;
  std::size_t m_ = 0;
};

}  // namespace

IdentityReport verify_lemma_relations(const MarkedExtension& ext, const CorrectionMap& tau) {
  using K = JospIndex::Kind;
  const LiftedJosp j(ext, tau);
  const Rational half(1, 2);
  const auto s = LiftedJosp::scaled;
  IdentityReport report;

  const auto check = [&](std::size_t relation, std::vector<std::size_t> idx, const RationalVector& lhs,
                         const RationalVector& rhs) {
    const RationalVector residual = subtract(lhs, rhs);
    if (!is_zero(residual)) {
      idx.insert(idx.begin(), relation);
      report.violations.push_back({std::move(idx), to_sparse(residual)});
    }
  };

  const std::size_t n = j.n();
  const std::size_t m = j.m();
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t p = 1; p <= m; ++p) {
      const RationalVector u = j.get(K::kU, i, p);
      const RationalVector k = j.get(K::kK, i, p);
      for (std::size_t jj = 1; jj <= n; ++jj) {
        const RationalVector h = j.get(K::kH, i, jj);
        check(1, {i, jj, p, 0}, j.product(u, h), s(j.get(K::kU, jj, p), half));
        check(3, {i, jj, p, 0}, j.product(k, h), s(j.get(K::kK, jj, p), half));
        if (jj != i) check(10, {i, jj, p, 0}, j.product(u, j.get(K::kK, jj, p)), s(j.get(K::kH, i, jj), -half));
      }
      for (std::size_t q = 1; q <= m; ++q) {
        check(2, {i, 0, p, q}, j.product(u, j.get(K::kV, p, q)), s(j.get(K::kU, i, q), half));
        check(4, {i, 0, p, q}, j.product(k, j.get(K::kV, q, p)), s(j.get(K::kK, i, q), half));
        if (p != q) {
          check(5, {i, 0, p, q}, j.product(u, j.get(K::kS, p, q)), s(j.get(K::kK, i, q), half));
          check(6, {i, 0, p, q}, j.product(k, j.get(K::kSt, p, q)), s(j.get(K::kU, i, q), half));
          check(9, {i, 0, p, q}, j.product(u, j.get(K::kK, i, q)), s(j.get(K::kV, q, p), half));
        }
        check(7, {i, 0, p, q}, j.product(u, j.get(K::kU, i, q)), s(j.get(K::kSt, p, q), half));
        check(8, {i, 0, p, q}, j.product(k, j.get(K::kK, i, q)), s(j.get(K::kS, q, p), half));
      }
      check(11, {i, i, p, p}, j.product(u, k), subtract(s(j.get(K::kV, p, p), half), j.get(K::kH, i, i)));
    }
  }
  report.canonicalize();
  return report;
}

// ---------------------------------------------------------------------------
// Builders

Superbimodule radical_bimodule(const MarkedExtension& ext) {
  validate_extension(ext);
  const Superalgebra& e = ext.algebra;
  std::vector<std::string> labels;
  std::vector<Parity> parity;
  std::vector<std::ptrdiff_t> position(e.dim(), -1);
  for (std::size_t r = 0; r < ext.ideal.size(); ++r) {
    labels.push_back(e.label(ext.ideal[r]));
    parity.push_back(e.parity(ext.ideal[r]));
    position[ext.ideal[r]] = static_cast<std::ptrdiff_t>(r);
  }
  Superbimodule m(std::make_shared<const Superalgebra>(ext.model), "rad(" + e.name() + ")", std::move(labels),
                  std::move(parity));
  for (std::size_t a = 0; a < ext.model.dim(); ++a) {
    for (std::size_t r = 0; r < ext.ideal.size(); ++r) {
      const RationalVector image = e.multiply(ext.section[a], e.basis_vector(ext.ideal[r]));
      for (std::size_t i = 0; i < e.dim(); ++i)
        if (sgn(image[i]) != 0) m.add_action(a, r, static_cast<std::size_t>(position[i]), image[i]);
    }
  }
  return m;
}

MarkedExtension marked_split_null_extension(const Superbimodule& m) {
  SplitNullExtension split = split_null_extension(m);
  MarkedExtension ext{std::move(split.algebra), std::move(split.ideal), m.algebra(), {}};
  for (std::size_t a = 0; a < m.algebra().dim(); ++a) ext.section.push_back(ext.algebra.basis_vector(a));
  return ext;
}

namespace {

/// Builds an algebra from a list of products; each listed product is mirrored with its Koszul sign.
class TableBuilder {
 public:
  TableBuilder(std::string name, std::vector<std::string> labels, std::vector<Parity> parity)
      : algebra_(std::move(name), std::move(labels), std::move(parity)) {}

  std::size_t operator[](const std::string& label) const { return *algebra_.index_of(label); }

  /// x·y = Σ coeff·label, and y·x = (-1)^{|x||y|} x·y.
  void set(const std::string& x, const std::string& y, const std::vector<std::pair<Rational, std::string>>& terms) {
    SparseVector v;
    for (const auto& [c, l] : terms) add_term(v, (*this)[l], c);
    algebra_.set_supersymmetric((*this)[x], (*this)[y], v);
  }

  Superalgebra& algebra() { return algebra_; }

 private:
  Superalgebra algebra_;
};

MarkedExtension mark(Superalgebra e, const std::vector<std::string>& ideal_labels,
                     const std::vector<std::string>& section_labels) {
  MarkedExtension ext{std::move(e), {}, build_josp_table(1, 1), {}};
  for (const auto& l : ideal_labels) ext.ideal.push_back(*ext.algebra.index_of(l));
  for (const auto& l : section_labels) ext.section.push_back(ext.algebra.basis_vector(*ext.algebra.index_of(l)));
  return ext;
}

void require_jordan(const Superalgebra& e) {
  const auto commutative = check_supercommutative(e);
  if (!commutative.holds()) {
    const auto& v = commutative.violations.front().indices;
    throw ValidationError(e.name() + " is not supercommutative at (" + e.label(v[0]) + "," + e.label(v[1]) + ")");
  }
  const auto jordan = check_super_jordan(e);
  if (!jordan.holds()) {
    const auto& v = jordan.violations.front().indices;
    throw ValidationError(e.name() + " fails the super-Jordan identity at (x,y,z,t) = (" + e.label(v[0]) + "," +
                          e.label(v[1]) + "," + e.label(v[2]) + "," + e.label(v[3]) + ")");
  }
}

}  // namespace

MarkedExtension build_counterexample() {
  const auto even = Parity::kEven;
  const auto odd = Parity::kOdd;
  TableBuilder t("counterexample", {"h", "v", "g", "w", "u", "k", "y", "x"},
                 {even, even, even, even, odd, odd, odd, odd});
  const Rational half(1, 2);
  t.set("h", "h", {{1, "h"}});
  t.set("v", "v", {{1, "v"}});
  t.set("h", "g", {{1, "g"}});
  t.set("v", "w", {{1, "w"}});
  for (const char* odd_label : {"u", "k", "y", "x"}) {
    t.set(odd_label, "h", {{half, odd_label}});
    t.set(odd_label, "v", {{half, odd_label}});
  }
  t.set("u", "g", {{half, "y"}});
  t.set("u", "w", {{half, "y"}});
  t.set("k", "g", {{half, "x"}});
  t.set("k", "w", {{half, "x"}});
  t.set("u", "x", {{half, "w"}, {-1, "g"}});
  t.set("y", "k", {{half, "w"}, {-1, "g"}});
  t.set("u", "k", {{half, "v"}, {-1, "h"}, {1, "g"}});
  RationalVector unit(8);
  unit[t["h"]] = 1;
  unit[t["v"]] = 1;
  t.algebra().set_unit(std::move(unit));
  return mark(std::move(t.algebra()), {"g", "w", "y", "x"}, {"h", "v", "u", "k"});
}

MarkedExtension build_skew11_extension(const Rational& xi_at, const Rational& xi_f, const Rational& xi_ft,
                                       Skew11Variant variant) {
  const auto even = Parity::kEven;
  const auto odd = Parity::kOdd;
  TableBuilder t("skew11", {"h", "v", "u", "k", "at", "f", "ft", "b", "c"},
                 {even, even, odd, odd, even, even, even, odd, odd});
  const Rational half(1, 2);
  t.set("h", "h", {{1, "h"}});
  t.set("v", "v", {{1, "v"}});
  for (const char* x : {"u", "k", "b", "c"}) {
    t.set(x, "h", {{half, x}});
    t.set(x, "v", {{half, x}});
  }
  t.set("u", "k", {{half, "v"}, {-1, "h"}, {xi_at, "at"}, {xi_f, "f"}, {xi_ft, "ft"}});
  t.set("v", "at", {{1, "at"}});
  t.set("v", "f", {{1, "f"}});
  t.set("v", "ft", {{1, "ft"}});
  t.set("u", "at", {{half, "b"}});
  t.set("k", "ft", {{half, "b"}});
  t.set("k", "at", {{variant == Skew11Variant::kCorrected ? -half : half, "c"}});
  t.set("u", "f", {{half, "c"}});
  t.set("u", "b", {{1, "ft"}});
  t.set("u", "c", {{-half, "at"}});
  t.set("k", "b", {{-half, "at"}});
  t.set("k", "c", {{-1, "f"}});
  RationalVector unit(9);
  unit[t["h"]] = 1;
  unit[t["v"]] = 1;
  t.algebra().set_unit(std::move(unit));
  require_jordan(t.algebra());
  return mark(std::move(t.algebra()), {"at", "f", "ft", "b", "c"}, {"h", "v", "u", "k"});
}

MarkedExtension perturb_section(const MarkedExtension& ext, const CorrectionMap& d) {
  if (!d.parity_preserving(ext)) throw UsageError("perturb_section: correction has the wrong shape or parity");
  MarkedExtension out = ext;
  for (std::size_t a = 0; a < out.section.size(); ++a) out.section[a] = add(out.section[a], d.image(ext, a));
  return out;
}

CorrectionMap random_correction(const MarkedExtension& ext, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  CorrectionMap d = CorrectionMap::zero(ext);
  for (std::size_t a = 0; a < ext.model.dim(); ++a) {
    for (std::size_t r = 0; r < ext.ideal.size(); ++r) {
      const std::uint64_t word = rng();
      if (ext.model.parity(a) != ext.algebra.parity(ext.ideal[r])) continue;
      const long numerator = static_cast<long>(word % 7) - 3;
      const long denominator = static_cast<long>((word / 7) % 3) + 1;
      d.coeff(a, r) = Rational(numerator, denominator);
      d.coeff(a, r).canonicalize();
    }
  }
  return d;
}

}  // namespace jsplit
