#include "jsplit/rational.hpp"

#include <algorithm>
#include <cctype>

#include "jsplit/errors.hpp"

namespace jsplit {

std::string to_string(const Rational& value) { return value.get_str(); }

namespace {

bool is_integer_text(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  return !s.empty() &&
         std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c) != 0; });
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const auto num = text.substr(0, slash);
  const auto den = slash == std::string_view::npos ? std::string_view{} : text.substr(slash + 1);
  if (!is_integer_text(num) || (slash != std::string_view::npos && !is_integer_text(den))) {
    throw UsageError("malformed rational: '" + std::string(text) + "'");
  }
  mpz_class p(std::string(num.front() == '+' ? num.substr(1) : num));
  mpz_class q(1);
  if (slash != std::string_view::npos) {
    q = mpz_class(std::string(den.front() == '+' ? den.substr(1) : den));
  }
  if (q == 0) throw UsageError("zero denominator: '" + std::string(text) + "'");
  Rational r(p, q);
  r.canonicalize();
  return r;
}

bool is_zero(const RationalVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return sgn(x) == 0; });
}

void axpy(RationalVector& acc, const Rational& scale, const SparseVector& v) {
  for (const auto& t : v) acc[t.index] += scale * t.coeff;
}

void add_term(SparseVector& v, std::size_t index, const Rational& coeff) {
  if (sgn(coeff) == 0) return;
  auto it = std::lower_bound(v.begin(), v.end(), index,
                             [](const Term& t, std::size_t i) { return t.index < i; });
  if (it != v.end() && it->index == index) {
    it->coeff += coeff;
    if (sgn(it->coeff) == 0) v.erase(it);
  } else {
    v.insert(it, Term{index, coeff});
  }
}

SparseVector to_sparse(const RationalVector& dense) {
  SparseVector out;
  for (std::size_t i = 0; i < dense.size(); ++i) {
    if (sgn(dense[i]) != 0) out.push_back(Term{i, dense[i]});
  }
  return out;
}

RationalVector to_dense(const SparseVector& sparse, std::size_t dim) {
  RationalVector out(dim);
  for (const auto& t : sparse) out[t.index] = t.coeff;
  return out;
}

}  // namespace jsplit
