#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "jsplit/superalgebra.hpp"

namespace jsplit {

/// Grassmann (exterior) algebra on k generators e_1..e_k with e_i e_j = -e_j e_i.
/// Monomials are bitmasks over the generators; the basis is ordered by mask value.
class GrassmannAlgebra {
 public:
  using Monomial = std::uint32_t;

  explicit GrassmannAlgebra(unsigned generators);

  unsigned generators() const noexcept { return generators_; }
  std::size_t dim() const noexcept { return std::size_t{1} << generators_; }
  static Parity parity(Monomial m) noexcept;
  /// Sign of the product of two monomials: 0 if they share a generator, otherwise
  /// (-1)^{#{(i in a, j in b) : i > j}} so that a·b = sign·(a|b).
  static int product_sign(Monomial a, Monomial b) noexcept;
  static std::string label(Monomial m);

 private:
  unsigned generators_;
};

/// Grassmann envelope Γ₀⊗A₀ + Γ₁⊗A₁ over k generators, as an ungraded algebra
/// (all parities even). Basis ordered by (monomial mask, index in A).
Superalgebra grassmann_envelope(const Superalgebra& a, unsigned generators);

}  // namespace jsplit
