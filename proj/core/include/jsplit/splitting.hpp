#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "jsplit/bimodule.hpp"
#include "jsplit/identities.hpp"
#include "jsplit/linalg.hpp"
#include "jsplit/superalgebra.hpp"

namespace jsplit {

/// An algebra E with a square-zero graded ideal N spanned by basis vectors, a model algebra
/// (the expected quotient E/N) and a parity-preserving section σ: model → E.
struct MarkedExtension {
  Superalgebra algebra;
  std::vector<std::size_t> ideal;
  Superalgebra model;
  /// section[a] = σ(x_a) in E coordinates.
  std::vector<RationalVector> section;
};

/// Every violated extension invariant, as human-readable messages; empty when valid.
std::vector<std::string> extension_problems(const MarkedExtension& ext);
/// Throws UsageError naming the first violated invariant.
void validate_extension(const MarkedExtension& ext);

/// τ(x_a) = Σ_r coeff(a, r)·n_r where n_r = E basis vector ext.ideal[r].
struct CorrectionMap {
  RatMatrix coeff;

  static CorrectionMap zero(const MarkedExtension& ext);
  bool is_zero() const { return coeff.is_zero(); }
  /// τ(x_a) in E coordinates.
  RationalVector image(const MarkedExtension& ext, std::size_t a) const;
  bool parity_preserving(const MarkedExtension& ext) const;
  friend bool operator==(const CorrectionMap&, const CorrectionMap&) = default;
};

struct SplittingRow {
  std::size_t x;
  std::size_t y;
  /// Position in ext.ideal.
  std::size_t radical;
};

/// Linear system in the coefficients of τ. For each model pair x <= y and each radical coordinate r
/// of parity |x|+|y|:
///   [σ(x)·τ(y) + τ(x)·σ(y) - τ(xy)]_r = -[σ(x)σ(y) - σ(xy)]_r.
/// Rows that are identically 0 = 0 are dropped; the remaining rows keep the (x, y, r) order.
struct SplittingSystem {
  RatMatrix matrix;
  RationalVector rhs;
  /// Unknown u stands for coeff(model index, radical position); only parity-matching pairs occur.
  std::vector<std::pair<std::size_t, std::size_t>> unknowns;
  std::vector<SplittingRow> rows;

  CorrectionMap correction(const MarkedExtension& ext, const RationalVector& solution) const;
  /// Index of the unknown coeff(a, r), if it exists.
  std::optional<std::size_t> unknown_index(std::size_t a, std::size_t r) const;
};

/// Throws UsageError when the extension is invalid.
SplittingSystem splitting_system(const MarkedExtension& ext);

struct SplitCertificate {
  enum class Kind { kSplit, kNoSplit };
  Kind kind;
  /// Set when kind == kSplit.
  CorrectionMap tau;
  /// Set when kind == kNoSplit: witnessᵀ·A = 0 and witnessᵀ·b ≠ 0 over the system rows.
  RationalVector witness;
  /// Model pairs (x, y) whose rows carry nonzero witness weight.
  std::vector<std::pair<std::size_t, std::size_t>> violated_pairs;
  /// The system that produced the certificate.
  SplittingSystem system;

  bool split() const noexcept { return kind == Kind::kSplit; }
};

SplitCertificate solve_splitting(const MarkedExtension& ext);

/// True iff S = span{σ(x_a) + τ(x_a)} multiplies exactly like the model and E = S ⊕ N.
bool verify_splitting(const MarkedExtension& ext, const CorrectionMap& tau);

/// Relations among lifted Josp elements on all valid indices, with X = σ(x) + τ(x):
///   U_ip·H_ij = ½U_jp, U_ip·V_pq = ½U_iq, K_ip·H_ij = ½K_jp, K_ip·V_qp = ½K_iq,
///   U_ip·S_pq = ½K_iq, K_ip·S̃_pq = ½U_iq (p ≠ q), U_ip·U_iq = ½S̃_pq, K_jp·K_jq = ½S_qp,
///   U_ip·K_iq = ½V_qp (p ≠ q), U_ip·K_jp = -½H_ij (i ≠ j), U_ip·K_ip = ½V_pp - H_ii.
/// Violation indices are (relation number 1..11, i, j, p, q). The model must use Josp labels.
IdentityReport verify_lemma_relations(const MarkedExtension& ext, const CorrectionMap& tau);

/// The radical N as a bimodule over the model via σ. Labels are the E labels of N.
Superbimodule radical_bimodule(const MarkedExtension& ext);

/// Split null extension of a bimodule, marked with the inclusion of its algebra as the section.
MarkedExtension marked_split_null_extension(const Superbimodule& m);

/// The eight-dimensional counter-example: even h, v, g, w; odd u, k, y, x; N = {g, w, y, x};
/// model Josp(1|2) with h11 ↦ h, v11 ↦ v, u11 ↦ u, k11 ↦ k.
MarkedExtension build_counterexample();

enum class Skew11Variant {
  /// k·ã = -½c, the sign that makes the extension a Jordan superalgebra.
  kCorrected,
  /// k·ã = +½c; rejected by the identity validator.
  kAsPrinted,
};

/// Josp(1|2) extended by the skew module {ã, f, f̃; b, c} with u·k = ½v - h + ξ_ã ã + ξ_f f + ξ_f̃ f̃.
/// Throws ValidationError naming the first violating quadruple if the result is not Jordan.
MarkedExtension build_skew11_extension(const Rational& xi_at, const Rational& xi_f, const Rational& xi_ft,
                                       Skew11Variant variant = Skew11Variant::kCorrected);

/// σ' = σ + d. Throws UsageError when d is not parity-preserving or has the wrong shape.
MarkedExtension perturb_section(const MarkedExtension& ext, const CorrectionMap& d);

/// Random parity-preserving correction with entries p/q, |p| <= 3, 1 <= q <= 3; deterministic in the seed.
CorrectionMap random_correction(const MarkedExtension& ext, std::uint64_t seed);

}  // namespace jsplit
