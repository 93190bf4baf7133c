#include "jsplit/peirce.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "jsplit/errors.hpp"
#include "jsplit/linalg.hpp"

namespace jsplit {

IdempotentFamily family_from_labels(const Superalgebra& a, const std::string& labels) {
  IdempotentFamily family;
  std::stringstream in(labels);
  std::string item;
  while (std::getline(in, item, ',')) {
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    if (item.empty()) continue;
    const auto index = a.index_of(item);
    if (!index) throw UsageError("unknown basis label '" + item + "' in " + a.name());
    family.members.push_back(a.basis_vector(*index));
  }
  if (family.members.empty()) throw UsageError("idempotent family is empty");
  return family;
}

namespace {

bool is_even(const Superalgebra& a, const RationalVector& x) {
  for (std::size_t i = 0; i < x.size(); ++i)
    if (sgn(x[i]) != 0 && a.parity(i) == Parity::kOdd) return false;
  return true;
}

/// Matrix of y ↦ e·y.
RatMatrix left_multiplication(const Superalgebra& a, const RationalVector& e) {
  RatMatrix l(a.dim(), a.dim());
  for (std::size_t j = 0; j < a.dim(); ++j) {
    RationalVector column(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i)
      if (sgn(e[i]) != 0) axpy(column, e[i], a.product(i, j));
    for (std::size_t k = 0; k < a.dim(); ++k) l(k, j) = column[k];
  }
  return l;
}

/// Allowed target components for a product of components c1 and c2.
std::set<std::size_t> allowed_targets(const std::vector<PeirceComponent>& comps, std::size_t c1, std::size_t c2) {
  const auto as_set = [&](std::size_t c) { return std::set<std::size_t>{comps[c].first, comps[c].second}; };
  const auto s1 = as_set(c1);
  const auto s2 = as_set(c2);
  std::set<std::size_t> common;
  std::set_intersection(s1.begin(), s1.end(), s2.begin(), s2.end(), std::inserter(common, common.end()));

  std::set<std::pair<std::size_t, std::size_t>> targets;
  if (common.empty()) {
    // no allowed target
  } else if (s1 == s2) {
    for (auto i : s1) targets.insert({i, i});
  } else if (s1.size() == 1 || s2.size() == 1) {
    const auto& pair = s1.size() == 2 ? s1 : s2;
    targets.insert({*pair.begin(), *pair.rbegin()});
  } else {
    std::vector<std::size_t> diff;
    std::set_symmetric_difference(s1.begin(), s1.end(), s2.begin(), s2.end(), std::back_inserter(diff));
    targets.insert({std::min(diff[0], diff[1]), std::max(diff[0], diff[1])});
  }
  std::set<std::size_t> out;
  for (std::size_t c = 0; c < comps.size(); ++c)
    if (targets.count({comps[c].first, comps[c].second})) out.insert(c);
  return out;
}

}  // namespace

bool verify_idempotent_family(const Superalgebra& a, const IdempotentFamily& family) {
  if (!a.unit()) throw UsageError("verify_idempotent_family: " + a.name() + " has no unit");
  RationalVector sum(a.dim());
  for (std::size_t i = 0; i < family.members.size(); ++i) {
    const auto& e = family.members[i];
    if (e.size() != a.dim() || !is_even(a, e)) return false;
    if (a.multiply(e, e) != e) return false;
    for (std::size_t j = i + 1; j < family.members.size(); ++j)
      if (!is_zero(a.multiply(e, family.members[j]))) return false;
    for (std::size_t k = 0; k < a.dim(); ++k) sum[k] += e[k];
  }
  return sum == *a.unit();
}

std::vector<std::size_t> PeirceDecomposition::dimensions() const {
  std::vector<std::size_t> out;
  for (const auto& c : components) out.push_back(c.basis.size());
  return out;
}

std::size_t PeirceDecomposition::component_of_basis_vector(std::size_t index) const {
  const RationalVector e = algebra.basis_vector(index);
  for (std::size_t c = 0; c < components.size(); ++c) {
    const auto& b = components[c].basis;
    if (b.empty()) continue;
    RatMatrix m = columns_matrix(b, algebra.dim());
    if (solve_linear(m, e).solved()) return c;
  }
  return components.size();
}

PeirceDecomposition peirce_decompose(const Superalgebra& a, const IdempotentFamily& family) {
  if (!verify_idempotent_family(a, family)) {
    throw UsageError("peirce_decompose: not a complete family of orthogonal idempotents in " + a.name());
  }
  const std::size_t r = family.members.size();
  const std::size_t d = a.dim();
  std::vector<RatMatrix> l;
  for (const auto& e : family.members) l.push_back(left_multiplication(a, e));

  const auto component = [&](std::size_t i, std::size_t j) {
    RatMatrix stacked;
    for (std::size_t k = 0; k < r; ++k) {
      Rational eigenvalue = 0;
      if (i == j && k == i) eigenvalue = 1;
      if (i != j && (k == i || k == j)) eigenvalue = Rational(1, 2);
      for (std::size_t row = 0; row < d; ++row) {
        RationalVector values(l[k].row(row).begin(), l[k].row(row).end());
        values[row] -= eigenvalue;
        stacked.append_row(values);
      }
    }
    return PeirceComponent{i, j, nullspace(stacked)};
  };

  PeirceDecomposition out{a, family, {}};
  for (std::size_t i = 0; i < r; ++i) out.components.push_back(component(i, i));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = i + 1; j < r; ++j) out.components.push_back(component(i, j));

  std::vector<RationalVector> all;
  for (const auto& c : out.components) all.insert(all.end(), c.basis.begin(), c.basis.end());
  if (all.size() != d || rank(rows_matrix(all, d)) != d) {
    throw StructureError("peirce_decompose: components span " + std::to_string(all.empty() ? 0 : rank(rows_matrix(all, d))) +
                         " of " + std::to_string(d) + " dimensions");
  }
  return out;
}

IdentityReport verify_peirce_relations(const PeirceDecomposition& d) {
  const Superalgebra& a = d.algebra;
  const std::size_t n = a.dim();
  std::vector<RationalVector> columns;
  std::vector<std::size_t> owner;
  for (std::size_t c = 0; c < d.components.size(); ++c)
    for (const auto& v : d.components[c].basis) {
      columns.push_back(v);
      owner.push_back(c);
    }
  if (columns.size() != n) throw UsageError("verify_peirce_relations: decomposition does not span");

  // Coordinates in the Peirce basis: P⁻¹ from the echelon form of [P | I].
  const RatMatrix p = columns_matrix(columns, n);
  RatMatrix augmented(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) augmented(r, c) = p(r, c);
    augmented(r, n + r) = 1;
  }
  const RowEchelon ech = row_reduce(std::move(augmented));
  RatMatrix p_inv(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) p_inv(r, c) = ech.reduced(r, n + c);

  IdentityReport report;
  for (std::size_t c1 = 0; c1 < d.components.size(); ++c1) {
    for (std::size_t c2 = 0; c2 < d.components.size(); ++c2) {
      const auto allowed = allowed_targets(d.components, c1, c2);
      const auto& b1 = d.components[c1].basis;
      const auto& b2 = d.components[c2].basis;
      for (std::size_t i = 0; i < b1.size(); ++i) {
        for (std::size_t j = 0; j < b2.size(); ++j) {
          const RationalVector product = a.multiply(b1[i], b2[j]);
          if (is_zero(product)) continue;
          const RationalVector coords = p_inv.apply(product);
          RationalVector stray(n);
          bool bad = false;
          for (std::size_t k = 0; k < n; ++k) {
            if (sgn(coords[k]) == 0 || allowed.count(owner[k])) continue;
            bad = true;
            for (std::size_t t = 0; t < n; ++t) stray[t] += coords[k] * columns[k][t];
          }
          if (bad) report.violations.push_back({{c1, c2, i, j}, to_sparse(stray)});
        }
      }
    }
  }
  return report;
}

}  // namespace jsplit
