#include <doctest.h>

#include <algorithm>

#include "generators.hpp"
#include "jsplit/errors.hpp"
#include "jsplit/identities.hpp"
#include "jsplit/josp.hpp"
#include "jsplit/splitting.hpp"
#include "jsplit/superalgebra.hpp"
#include "oracle.hpp"

using jsplit::Parity;
using jsplit::Rational;
using jsplit::Superalgebra;

namespace {

std::vector<std::vector<std::size_t>> indices_of(const jsplit::IdentityReport& r) {
  std::vector<std::vector<std::size_t>> out;
  for (const auto& v : r.violations) out.push_back(v.indices);
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t idx(const Superalgebra& a, const std::string& label) { return a.index_of(label).value(); }

}  // namespace

TEST_CASE("multiplication examples") {
  const Superalgebra j = jsplit::build_josp_table(1, 1);
  const auto h = idx(j, "h11"), v = idx(j, "v11"), u = idx(j, "u11"), k = idx(j, "k11");
  CHECK(j.product(h, h) == jsplit::SparseVector{{h, 1}});
  CHECK(j.product(h, v).empty());
  CHECK(j.product(u, u).empty());
  CHECK(j.multiply(j.basis_vector(u), j.basis_vector(k)) ==
        jsplit::to_dense({{h, -1}, {v, Rational(1, 2)}}, j.dim()));
  CHECK(j.multiply(j.basis_vector(k), j.basis_vector(u)) ==
        jsplit::to_dense({{h, 1}, {v, Rational(-1, 2)}}, j.dim()));
}

TEST_CASE("elements of different algebras cannot be multiplied") {
  const Superalgebra a = jsplit::build_josp_table(1, 1);
  const Superalgebra b = jsplit::build_josp_table(2, 1);
  const auto x = jsplit::Element::basis(a, 0);
  const auto y = jsplit::Element::basis(b, 0);
  CHECK_THROWS_AS(jsplit::multiply(a, x, y), jsplit::UsageError);
  CHECK(jsplit::multiply(a, x, x) == x);
}

TEST_CASE("grading is enforced on constants") {
  Superalgebra a("g", {"e", "o"}, {Parity::kEven, Parity::kOdd});
  CHECK_THROWS_AS(a.add_constant(0, 0, 1, 1), jsplit::UsageError);
  CHECK_THROWS_AS(a.add_constant(1, 1, 1, 1), jsplit::UsageError);
  CHECK_NOTHROW(a.add_constant(0, 1, 1, 1));
  CHECK_NOTHROW(a.add_constant(1, 1, 0, 1));
}

TEST_CASE("homogeneous parity of elements") {
  const Superalgebra j = jsplit::build_josp_table(1, 1);
  CHECK(jsplit::Element::basis(j, idx(j, "u11")).homogeneous_parity() == Parity::kOdd);
  CHECK_FALSE(jsplit::Element::zero(j).homogeneous_parity().has_value());
  const auto mixed = jsplit::Element::basis(j, idx(j, "u11")) + jsplit::Element::basis(j, idx(j, "h11"));
  CHECK_FALSE(mixed.homogeneous_parity().has_value());
}

TEST_CASE("unit detection") {
  const Superalgebra j = jsplit::build_josp_table(2, 1);
  const auto unit = jsplit::find_unit(j);
  REQUIRE(unit.has_value());
  CHECK(*unit == j.unit().value());
  Superalgebra nil("nil", {"x"}, {Parity::kEven});
  CHECK_FALSE(jsplit::find_unit(nil).has_value());
  Superalgebra one("one", {"e"}, {Parity::kEven});
  one.add_constant(0, 0, 0, 1);
  CHECK(jsplit::find_unit(one) == jsplit::RationalVector{1});
  CHECK_THROWS_AS(nil.set_unit({1}), jsplit::UsageError);
}

TEST_CASE("supercommutativity examples") {
  CHECK(jsplit::check_supercommutative(jsplit::build_josp_table(2, 2)).holds());
  Superalgebra a = jsplit::build_josp_table(1, 1);
  a.add_constant(idx(a, "h11"), idx(a, "v11"), idx(a, "v11"), 1);
  const auto r = jsplit::check_supercommutative(a);
  REQUIRE(r.violations.size() == 1);
  CHECK(r.violations[0].indices == std::vector<std::size_t>{idx(a, "h11"), idx(a, "v11")});
}

TEST_CASE("super-Jordan examples") {
  CHECK(jsplit::check_super_jordan(jsplit::build_josp_table(1, 1)).holds());
  CHECK(jsplit::check_super_jordan(jsplit::build_josp_table(1, 0)).holds());
  CHECK(jsplit::check_super_jordan(jsplit::build_counterexample().algebra).holds());
  Superalgebra one("one", {"e"}, {Parity::kEven});
  one.add_constant(0, 0, 0, 1);
  CHECK(jsplit::is_jordan_superalgebra(one));
}

TEST_CASE("property: identity checkers agree with the brute-force oracle on random algebras") {
  gen::Rng rng(5);
  int failing = 0;
  for (int trial = 0; trial < 40; ++trial) {
    const auto dim = static_cast<std::size_t>(rng.integer(2, 4));
    const Superalgebra a = rng.superalgebra(dim, static_cast<unsigned>(rng.integer(10, 40)), rng.chance(70));
    const auto commutative = jsplit::check_supercommutative(a);
    CHECK(indices_of(commutative) == oracle::supercommutative_failures(a));
    const auto jordan = jsplit::check_super_jordan(a);
    CHECK(indices_of(jordan) == oracle::jordan_failures(a));
    if (!jordan.holds()) ++failing;
  }
  CHECK(failing > 0);
}

TEST_CASE("property: residuals match the oracle's values, including non-integral constants") {
  gen::Rng rng(6);
  for (int trial = 0; trial < 10; ++trial) {
    Superalgebra a = rng.superalgebra(3, 40, true);
    const auto report = jsplit::check_super_jordan(a);
    const oracle::Dense t(a);
    for (const auto& v : report.violations) {
      const auto& q = v.indices;
      const auto e = [&](std::size_t i) { return t.basis(i); };
      const int px = t.parity(q[0]), py = t.parity(q[1]), pz = t.parity(q[2]), pw = t.parity(q[3]);
      oracle::Vec lhs = t.mul(t.mul(t.mul(e(q[0]), e(q[1])), e(q[2])), e(q[3]));
      lhs = oracle::axpy(lhs, oracle::pm(pw * (pz + py) + pz * py), t.mul(t.mul(t.mul(e(q[0]), e(q[3])), e(q[2])), e(q[1])));
      lhs = oracle::axpy(lhs, oracle::pm(px * (py + pz + pw) + pw * pz), t.mul(t.mul(t.mul(e(q[1]), e(q[3])), e(q[2])), e(q[0])));
      lhs = oracle::axpy(lhs, -1, t.mul(t.mul(e(q[0]), e(q[1])), t.mul(e(q[2]), e(q[3]))));
      lhs = oracle::axpy(lhs, -oracle::pm(pw * pz + pw * py), t.mul(t.mul(e(q[0]), e(q[3])), t.mul(e(q[1]), e(q[2]))));
      lhs = oracle::axpy(lhs, -oracle::pm(py * pz), t.mul(t.mul(e(q[0]), e(q[2])), t.mul(e(q[1]), e(q[3]))));
      CHECK(jsplit::to_dense(v.residual, a.dim()) == lhs);
    }
  }
}

TEST_CASE("large constants fall back to exact rational scanning") {
  // Constants beyond the int64 fast path; the result must match the oracle regardless.
  Superalgebra a("big", {"e", "x"}, {Parity::kEven, Parity::kEven});
  const Rational big(mpz_class("123456789012345"), mpz_class(7));
  a.add_constant(0, 0, 0, 1);
  a.add_constant(0, 1, 1, big);
  a.add_constant(1, 0, 1, big);
  CHECK(indices_of(jsplit::check_super_jordan(a)) == oracle::jordan_failures(a));
  CHECK_FALSE(jsplit::check_super_jordan(a).holds());
}

TEST_CASE("property: reports are independent of the worker count") {
  gen::Rng rng(7);
  for (int trial = 0; trial < 10; ++trial) {
    const Superalgebra a = rng.superalgebra(4, 35, true);
    const auto one = jsplit::check_super_jordan(a, {1});
    CHECK(one.violations == jsplit::check_super_jordan(a, {3}).violations);
    CHECK(one.violations == jsplit::check_super_jordan(a, {8}).violations);
  }
  const Superalgebra j = jsplit::build_josp_table(2, 1);
  CHECK(jsplit::check_super_jordan(j, {4}).holds());
}

TEST_CASE("property: multiplication is bilinear") {
  gen::Rng rng(8);
  const std::vector<Superalgebra> algebras = {jsplit::build_josp_table(2, 1), jsplit::build_counterexample().algebra,
                                              rng.superalgebra(5, 30, false)};
  for (const auto& a : algebras) {
    for (int trial = 0; trial < 20; ++trial) {
      const auto x = rng.vector(a.dim()), x2 = rng.vector(a.dim()), y = rng.vector(a.dim());
      const Rational s = rng.rational(5, 0);
      jsplit::RationalVector sum(a.dim()), scaled(a.dim());
      for (std::size_t i = 0; i < a.dim(); ++i) {
        sum[i] = x[i] + x2[i];
        scaled[i] = s * x[i];
      }
      auto expect = a.multiply(x, y);
      const auto second = a.multiply(x2, y);
      for (std::size_t i = 0; i < a.dim(); ++i) expect[i] += second[i];
      CHECK(a.multiply(sum, y) == expect);
      auto lhs = a.multiply(y, sum);
      auto r1 = a.multiply(y, x), r2 = a.multiply(y, x2);
      for (std::size_t i = 0; i < a.dim(); ++i) CHECK(lhs[i] == r1[i] + r2[i]);
      auto sc = a.multiply(scaled, y);
      auto base = a.multiply(x, y);
      for (std::size_t i = 0; i < a.dim(); ++i) CHECK(sc[i] == s * base[i]);
      CHECK(jsplit::to_dense(a.multiply(jsplit::to_sparse(x), jsplit::to_sparse(y)), a.dim()) == a.multiply(x, y));
    }
  }
}

TEST_CASE("structural equality ignores names and labels") {
  Superalgebra a = jsplit::build_josp_table(1, 1);
  Superalgebra b = a;
  b.set_name("other");
  CHECK(jsplit::same_structure(a, b));
  b.add_constant(0, 0, 0, 1);
  CHECK_FALSE(jsplit::same_structure(a, b));
}
