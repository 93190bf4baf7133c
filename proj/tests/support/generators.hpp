#pragma once

// Seeded generators for property tests.

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "jsplit/linalg.hpp"
#include "jsplit/superalgebra.hpp"

namespace gen {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [lo, hi].
  long integer(long lo, long hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<long>(engine_() % span);
  }
  bool chance(unsigned percent) { return engine_() % 100 < percent; }

  /// p/q with |p| <= bound, 1 <= q <= bound; zero with the given probability.
  jsplit::Rational rational(long bound = 5, unsigned zero_percent = 30) {
    if (chance(zero_percent)) return 0;
    jsplit::Rational r(integer(-bound, bound), integer(1, bound));
    r.canonicalize();
    return r;
  }

  jsplit::RationalVector vector(std::size_t n, long bound = 5, unsigned zero_percent = 30) {
    jsplit::RationalVector v(n);
    for (auto& x : v) x = rational(bound, zero_percent);
    return v;
  }

  jsplit::RatMatrix matrix(std::size_t rows, std::size_t cols, long bound = 4, unsigned zero_percent = 40) {
    jsplit::RatMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < cols; ++c) m(r, c) = rational(bound, zero_percent);
    return m;
  }

  /// Rank-deficient matrix: product of rows×k and k×cols random factors.
  jsplit::RatMatrix low_rank(std::size_t rows, std::size_t cols, std::size_t k) {
    return matrix(rows, k, 3, 20) * matrix(k, cols, 3, 20);
  }

  /// Random graded superalgebra: each grading-compatible constant is nonzero with the given probability.
  jsplit::Superalgebra superalgebra(std::size_t dim, unsigned density_percent, bool supersymmetric) {
    std::vector<std::string> labels;
    std::vector<jsplit::Parity> parity;
    for (std::size_t i = 0; i < dim; ++i) {
      labels.push_back("x" + std::to_string(i));
      parity.push_back(chance(50) ? jsplit::Parity::kOdd : jsplit::Parity::kEven);
    }
    jsplit::Superalgebra a("random", labels, parity);
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = supersymmetric ? i : 0; j < dim; ++j) {
        jsplit::SparseVector v;
        for (std::size_t k = 0; k < dim; ++k)
          if (parity[k] == parity[i] + parity[j] && chance(density_percent))
            jsplit::add_term(v, k, rational(3, 0));
        if (supersymmetric) {
          a.set_supersymmetric(i, j, v);
        } else {
          for (const auto& t : v) a.add_constant(i, j, t.index, t.coeff);
        }
      }
    return a;
  }

  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace gen
