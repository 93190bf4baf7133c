#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "jsplit/supermatrix.hpp"
#include "jsplit/superalgebra.hpp"

namespace jsplit {

/// Basis index of Josp(n|2m). First/second are 1-based.
/// H(i,j) i<=j; V(p,q); S(p,q) p<q; St(p,q) p<q (the s-tilde family); U(i,p); K(i,p).
struct JospIndex {
  enum class Kind { kH, kV, kS, kSt, kU, kK };
  Kind kind;
  std::size_t first;
  std::size_t second;

  Parity parity() const noexcept { return kind == Kind::kU || kind == Kind::kK ? Parity::kOdd : Parity::kEven; }
  friend bool operator==(const JospIndex&, const JospIndex&) = default;
};

/// Label such as "h12", "st12", "u21"; indices are joined with '_' when any exceeds 9.
std::string label(const JospIndex& index);

/// Canonical basis order: all H, V, S, St (even), then U, K (odd).
std::vector<JospIndex> josp_basis(std::size_t n, std::size_t m);

/// ((n+2m)² + n - 2m) / 2
std::size_t josp_dimension(std::size_t n, std::size_t m);

/// "Josp(n|2m)"
std::string josp_name(std::size_t n, std::size_t m);

/// Matrix realization of a basis element:
///   h_ij = e_ij + e_ji (i≠j), h_ii = e_ii, v_pq = e_{n+p,n+q} + e_{n+m+q,n+m+p},
///   s_pq = e_{n+p,n+m+q} - e_{n+q,n+m+p}, s̃_pq = e_{n+m+p,n+q} - e_{n+m+q,n+p},
///   u_ip = e_{i,n+p} + e_{n+m+p,i}, k_ip = e_{i,n+m+p} - e_{n+p,i}.
SuperMatrix josp_matrix(std::size_t n, std::size_t m, const JospIndex& index);

/// Josp(n|2m) from its multiplication table. Unit = Σ h_ii + Σ v_pp.
Superalgebra build_josp_table(std::size_t n, std::size_t m);

/// Josp(n|2m) as osp-symmetric supermatrices under a∘b = ½(ab + (-1)^{|a||b|}ba),
/// re-expressed in the josp_basis by exact solves.
Superalgebra build_josp_matrix(std::size_t n, std::size_t m);

/// Coordinates of X in the given matrix basis; throws InternalError if X is outside the span.
RationalVector matrix_coordinates(const std::vector<SuperMatrix>& basis, const SuperMatrix& x);

/// True iff c_A[i][j][k] = c_B[map[i]][map[j]][map[k]] for all i, j, k.
/// Throws UsageError on dimension mismatch, a non-bijective map, or a parity-changing map.
bool structure_iso_check(const Superalgebra& a, const Superalgebra& b, const std::vector<std::size_t>& basis_map);

/// Bijection matching equal labels; throws UsageError if the label sets differ.
std::vector<std::size_t> label_basis_map(const Superalgebra& a, const Superalgebra& b);

}  // namespace jsplit
