#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace jsplit {

/// Exact rational scalar. GMP keeps every value in lowest terms with a positive denominator.
using Rational = mpq_class;
using RationalVector = std::vector<Rational>;

/// "p/q" in lowest terms, or "p" when q == 1.
std::string to_string(const Rational& value);

/// Parses "p", "-p" or "p/q"; throws UsageError on malformed text or zero denominator.
Rational parse_rational(std::string_view text);

bool is_zero(const RationalVector& v);

/// One nonzero coordinate of a sparse vector.
struct Term {
  std::size_t index;
  Rational coeff;

  friend bool operator==(const Term&, const Term&) = default;
};

/// Sorted by index, no zero coefficients.
using SparseVector = std::vector<Term>;

/// Adds `scale * v` into the dense accumulator `acc`.
void axpy(RationalVector& acc, const Rational& scale, const SparseVector& v);

/// Adds `coeff * e_index` into a sparse vector, keeping it sorted and zero-free.
void add_term(SparseVector& v, std::size_t index, const Rational& coeff);

SparseVector to_sparse(const RationalVector& dense);
RationalVector to_dense(const SparseVector& sparse, std::size_t dim);

}  // namespace jsplit
