#include "jsplit/grassmann.hpp"

#include <bit>
#include <map>

#include "jsplit/errors.hpp"

namespace jsplit {

GrassmannAlgebra::GrassmannAlgebra(unsigned generators) : generators_(generators) {
  if (generators < 1 || generators > 16) throw UsageError("GrassmannAlgebra: generator count must be in 1..16");
}

Parity GrassmannAlgebra::parity(Monomial m) noexcept {
  return (std::popcount(m) & 1) ? Parity::kOdd : Parity::kEven;
}

int GrassmannAlgebra::product_sign(Monomial a, Monomial b) noexcept {
  if ((a & b) != 0) return 0;
  int swaps = 0;
  for (Monomial rest = b; rest != 0; rest &= rest - 1) {
    const Monomial low = rest & (~rest + 1);
    // Generators of a with larger index than this generator of b must move past it.
    swaps += std::popcount(a & ~((low << 1) - 1));
  }
  return sign_of(swaps);
}

std::string GrassmannAlgebra::label(Monomial m) {
  if (m == 0) return "1";
  std::string out;
  for (unsigned g = 0; g < 32; ++g) {
    if (m & (Monomial{1} << g)) out += "e" + std::to_string(g + 1);
  }
  return out;
}

Superalgebra grassmann_envelope(const Superalgebra& a, unsigned generators) {
  const GrassmannAlgebra gamma(generators);
  std::vector<std::string> labels;
  std::vector<std::pair<GrassmannAlgebra::Monomial, std::size_t>> basis;
  std::map<std::pair<GrassmannAlgebra::Monomial, std::size_t>, std::size_t> position;
  for (GrassmannAlgebra::Monomial m = 0; m < gamma.dim(); ++m) {
    for (std::size_t i = 0; i < a.dim(); ++i) {
      if (GrassmannAlgebra::parity(m) != a.parity(i)) continue;
      position[{m, i}] = basis.size();
      basis.emplace_back(m, i);
      labels.push_back(GrassmannAlgebra::label(m) + "*" + a.label(i));
    }
  }
  Superalgebra env("Gamma" + std::to_string(generators) + "(" + a.name() + ")", labels,
                   std::vector<Parity>(basis.size(), Parity::kEven));
  for (std::size_t p = 0; p < basis.size(); ++p) {
    const auto [gm, ai] = basis[p];
    for (std::size_t q = 0; q < basis.size(); ++q) {
      const auto [dm, bj] = basis[q];
      const int s = GrassmannAlgebra::product_sign(gm, dm);
      if (s == 0) continue;
      for (const auto& t : a.product(ai, bj)) {
        env.add_constant(p, q, position.at({gm | dm, t.index}), s * t.coeff);
      }
    }
  }
  return env;
}

}  // namespace jsplit
