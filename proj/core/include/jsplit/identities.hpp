#pragma once

#include <cstddef>
#include <vector>

#include "jsplit/rational.hpp"
#include "jsplit/superalgebra.hpp"

namespace jsplit {

struct Violation {
  /// Basis index tuple the identity was evaluated on.
  std::vector<std::size_t> indices;
  SparseVector residual;

  friend bool operator==(const Violation&, const Violation&) = default;
};

struct IdentityReport {
  std::vector<Violation> violations;

  bool holds() const noexcept { return violations.empty(); }
  /// Sorts by index tuple so reports compare equal regardless of scan order.
  void canonicalize();
};

struct CheckOptions {
  /// Worker threads for the quadruple scan; results are identical for any value.
  unsigned jobs = 1;
};

/// xy = (-1)^{|x||y|} yx on all basis pairs i <= j.
IdentityReport check_supercommutative(const Superalgebra& a);

/// Degree-4 super-Jordan identity
///   ((xy)z)t + s₂((xt)z)y + s₃((yt)z)x = (xy)(zt) + s₅(xt)(yz) + s₆(xz)(yt)
/// on every basis quadruple, with s₂ = (-1)^{|t|(|z|+|y|)+|z||y|}, s₃ = (-1)^{|x|(|y|+|z|+|t|)+|t||z|},
/// s₅ = (-1)^{|t||z|+|t||y|}, s₆ = (-1)^{|y||z|}.
/// Quadruples with all six products zero are skipped by enumerating nonzero product chains only.
IdentityReport check_super_jordan(const Superalgebra& a, const CheckOptions& options = {});

/// Commutativity plus the Jordan identity with trivial signs; every parity must be even.
IdentityReport check_plain_jordan(const Superalgebra& a, const CheckOptions& options = {});

/// Supercommutative and super-Jordan.
bool is_jordan_superalgebra(const Superalgebra& a, const CheckOptions& options = {});

}  // namespace jsplit
