#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "jsplit/identities.hpp"
#include "jsplit/superalgebra.hpp"

namespace jsplit {

/// Even elements of an algebra meant to be pairwise orthogonal idempotents summing to the unit.
struct IdempotentFamily {
  std::vector<RationalVector> members;
};

/// Resolves comma-separated basis labels ("h11,h22,v11") to basis vectors; throws UsageError on unknown labels.
IdempotentFamily family_from_labels(const Superalgebra& a, const std::string& labels);

/// e² = e, e_i·e_j = 0 (i ≠ j), Σ e_i = 1, every member even. Throws UsageError if A has no unit.
bool verify_idempotent_family(const Superalgebra& a, const IdempotentFamily& family);

/// J_ii when first == second, otherwise J_ij (first < second); indices are family positions.
struct PeirceComponent {
  std::size_t first;
  std::size_t second;
  std::vector<RationalVector> basis;

  bool diagonal() const noexcept { return first == second; }
};

struct PeirceDecomposition {
  Superalgebra algebra;
  IdempotentFamily family;
  /// All J_ii in family order, then J_ij for i < j in lexicographic order.
  std::vector<PeirceComponent> components;

  std::vector<std::size_t> dimensions() const;
  /// Index of the component containing basis vector `index`, or components.size() if it is split.
  std::size_t component_of_basis_vector(std::size_t index) const;
};

/// Joint eigenspaces: J_ii = {x : e_i x = x, e_k x = 0 for k ≠ i},
/// J_ij = {x : e_i x = ½x, e_j x = ½x, e_k x = 0 otherwise}.
/// Throws UsageError if the family fails verification and StructureError if the components do not span A.
PeirceDecomposition peirce_decompose(const Superalgebra& a, const IdempotentFamily& family);

/// Checks every product of component basis vectors against the Peirce rules
///   J_ii² ⊆ J_ii, J_ij² ⊆ J_ii + J_jj, J_ii·J_ij ⊆ J_ij, J_ij·J_jk ⊆ J_ik, and all other products zero.
/// Violations carry indices (component, component, basis position, basis position) and the
/// out-of-place part of the product in algebra coordinates.
IdentityReport verify_peirce_relations(const PeirceDecomposition& d);

}  // namespace jsplit
