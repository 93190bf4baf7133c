#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "jsplit/linalg.hpp"
#include "jsplit/superalgebra.hpp"
#include "jsplit/supermatrix.hpp"

namespace jsplit {

/// Graded bimodule over a superalgebra, stored by its left action
///   a_i·m_j = Σ_k ℓ[i][j][k]·m_k.
/// The right action is m·a = (-1)^{|a||m|} a·m.
class Superbimodule {
 public:
  Superbimodule() = default;
  Superbimodule(std::shared_ptr<const Superalgebra> algebra, std::string name, std::vector<std::string> labels,
                std::vector<Parity> parity);

  const Superalgebra& algebra() const noexcept { return *algebra_; }
  const std::shared_ptr<const Superalgebra>& algebra_ptr() const noexcept { return algebra_; }
  const std::string& name() const noexcept { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }
  std::size_t dim() const noexcept { return parity_.size(); }
  Parity parity(std::size_t j) const { return parity_.at(j); }
  const std::vector<Parity>& parities() const noexcept { return parity_; }
  const std::string& label(std::size_t j) const { return labels_.at(j); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }

  const SparseVector& action(std::size_t a, std::size_t j) const { return action_[a * dim() + j]; }
  /// ℓ[a][j][k] += value; throws UsageError when the entry would break the grading.
  void add_action(std::size_t a, std::size_t j, std::size_t k, const Rational& value);
  /// Left multiplication by basis element a as a dim×dim matrix (column j = a·m_j).
  RatMatrix action_matrix(std::size_t a) const;

  friend bool operator==(const Superbimodule& x, const Superbimodule& y) {
    return same_structure(*x.algebra_, *y.algebra_) && x.name_ == y.name_ && x.labels_ == y.labels_ &&
           x.parity_ == y.parity_ && x.action_ == y.action_;
  }

 private:
  std::shared_ptr<const Superalgebra> algebra_;
  std::string name_;
  std::vector<std::string> labels_;
  std::vector<Parity> parity_;
  std::vector<SparseVector> action_;
};

/// True when both modules have equal parities and action tensors (names and labels ignored).
bool same_action(const Superbimodule& x, const Superbimodule& y);

/// Reg(A): A acting on itself. Labels are "r.<label>".
Superbimodule regular_bimodule(const Superalgebra& a);
Superbimodule regular_bimodule(std::shared_ptr<const Superalgebra> a);

/// Basis index of the skew part Skew(M_{n|2m}, osp); first/second are 1-based.
/// A(i,j) i<j; At(p,q) (ã); F(p,q) p<=q; Ft(p,q) p<=q (f̃); B(i,p); C(i,p).
struct SkewIndex {
  enum class Kind { kA, kAt, kF, kFt, kB, kC };
  Kind kind;
  std::size_t first;
  std::size_t second;

  Parity parity() const noexcept { return kind == Kind::kB || kind == Kind::kC ? Parity::kOdd : Parity::kEven; }
  friend bool operator==(const SkewIndex&, const SkewIndex&) = default;
};

std::string label(const SkewIndex& index);
std::vector<SkewIndex> skew_basis(std::size_t n, std::size_t m);
/// ((n+2m)² - n + 2m) / 2
std::size_t skew_dimension(std::size_t n, std::size_t m);
/// a_ij = e_ij - e_ji, ã_pq = e_{n+p,n+q} - e_{n+m+q,n+m+p}, f_pq = e_{n+p,n+m+q} + e_{n+q,n+m+p},
/// f̃_pq = e_{n+m+p,n+q} + e_{n+m+q,n+p}, b_ip = e_{i,n+p} - e_{n+m+p,i}, c_ip = e_{i,n+m+p} + e_{n+p,i}.
SuperMatrix skew_matrix(std::size_t n, std::size_t m, const SkewIndex& index);

/// The skew bimodule over build_josp_table(n, m), from the action tables.
Superbimodule skew_bimodule(std::size_t n, std::size_t m);
/// The same module computed from ∘-products of matrices; used to cross-check the tables.
Superbimodule skew_bimodule_from_matrices(std::size_t n, std::size_t m);

/// M^op: parities flipped, a·m^op = (-1)^{|a|}(a·m)^op. A trailing "^op" on labels is toggled.
Superbimodule opposite(const Superbimodule& m);

/// M1 ⊕ M2 over a common algebra; labels are suffixed "#1" and "#2".
Superbimodule direct_sum(const Superbimodule& m1, const Superbimodule& m2);

struct SplitNullExtension {
  Superalgebra algebra;
  /// Indices of the module block inside the extension.
  std::vector<std::size_t> ideal;
};

/// A ⊕ M with M² = 0. The unit of A is kept when it acts as the identity on M.
SplitNullExtension split_null_extension(const Superbimodule& m);

/// Basis of graded maps φ: M1 → M2 of parity `parity_shift` with φ(a·m) = (-1)^{shift·|a|} a·φ(m).
/// Each map is a dim M2 × dim M1 matrix. Throws UsageError when the base algebras differ.
std::vector<RatMatrix> hom_space(const Superbimodule& m1, const Superbimodule& m2, Parity parity_shift);

/// An invertible element of hom_space(m1, m2, shift): a basis map or a combination Σ (i+1)·φ_i.
/// Empty when dimensions differ or no tried combination is invertible.
std::optional<RatMatrix> find_isomorphism(const Superbimodule& m1, const Superbimodule& m2, Parity parity_shift);

struct BurnsideResult {
  enum class Verdict { kYes, kNo, kUnknown };
  Verdict verdict;
  /// Dimension of the associative span of the action operators and the identity.
  std::size_t span_dim;
  /// Basis of a proper nonzero invariant subspace when verdict is kNo.
  std::vector<RationalVector> witness;
};

std::string to_string(BurnsideResult::Verdict v);

/// Burnside test: irreducible when the action operators span all of End(M).
/// Otherwise looks for a proper invariant subspace generated by a basis vector or a kernel vector
/// of a span element. Over ℚ a smaller span does not prove reducibility, so the result can be kUnknown.
BurnsideResult is_irreducible_burnside(const Superbimodule& m);

/// The invariant subspace generated by v (as an echelon basis).
std::vector<RationalVector> generated_submodule(const Superbimodule& m, const RationalVector& v);

}  // namespace jsplit
