#include <doctest.h>

#include <numeric>

#include "generators.hpp"
#include "jsplit/bimodule.hpp"
#include "jsplit/errors.hpp"
#include "jsplit/identities.hpp"
#include "jsplit/josp.hpp"
#include "jsplit/supermatrix.hpp"
#include "oracle.hpp"

using jsplit::JospIndex;
using jsplit::Parity;
using jsplit::Rational;
using jsplit::SuperMatrix;

namespace {

using Size = std::pair<std::size_t, std::size_t>;
const std::vector<Size> kGrid = {{1, 0}, {1, 1}, {2, 1}, {1, 2}, {3, 1}, {2, 2}};

oracle::Mat to_mat(const SuperMatrix& x) {
  oracle::Mat out = oracle::zeros(x.size());
  for (std::size_t r = 0; r < x.size(); ++r)
    for (std::size_t c = 0; c < x.size(); ++c) out[r][c] = x(r, c);
  return out;
}

std::size_t idx(const jsplit::Superalgebra& a, const std::string& l) { return a.index_of(l).value(); }

}  // namespace

TEST_CASE("dimension formula") {
  for (std::size_t n = 1; n <= 4; ++n)
    for (std::size_t m = 0; m <= 3; ++m) {
      const std::size_t s = n + 2 * m;
      CHECK(jsplit::josp_dimension(n, m) * 2 == s * s + n - 2 * m);
      CHECK(jsplit::josp_basis(n, m).size() == jsplit::josp_dimension(n, m));
      if (n + m <= 4) CHECK(jsplit::build_josp_table(n, m).dim() == jsplit::josp_dimension(n, m));
    }
  CHECK(jsplit::josp_dimension(1, 1) == 4);
  CHECK(jsplit::josp_dimension(2, 1) == 8);
  CHECK(jsplit::josp_dimension(2, 2) == 17);
  CHECK(jsplit::josp_name(1, 1) == "Josp(1|2)");
}

TEST_CASE("basis labels and order") {
  const auto a = jsplit::build_josp_table(1, 1);
  CHECK(a.labels() == std::vector<std::string>{"h11", "v11", "u11", "k11"});
  CHECK(a.parities() == std::vector<Parity>{Parity::kEven, Parity::kEven, Parity::kOdd, Parity::kOdd});
  CHECK(jsplit::label(JospIndex{JospIndex::Kind::kSt, 1, 2}) == "st12");
  CHECK(jsplit::label(JospIndex{JospIndex::Kind::kH, 3, 12}) == "h3_12");
  const auto b = jsplit::josp_basis(2, 2);
  const auto first_odd = std::find_if(b.begin(), b.end(), [](const JospIndex& i) { return i.parity() == Parity::kOdd; });
  CHECK(std::all_of(first_odd, b.end(), [](const JospIndex& i) { return i.parity() == Parity::kOdd; }));
  CHECK_THROWS_AS(jsplit::build_josp_table(0, 1), jsplit::UsageError);
}

TEST_CASE("table examples") {
  const auto one = jsplit::build_josp_table(1, 0);
  CHECK(one.dim() == 1);
  CHECK(one.product(0, 0) == jsplit::SparseVector{{0, 1}});

  const auto a = jsplit::build_josp_table(2, 1);
  const auto h11 = idx(a, "h11"), h12 = idx(a, "h12"), h22 = idx(a, "h22"), u11 = idx(a, "u11"), u21 = idx(a, "u21");
  CHECK(a.product(h12, h12) == jsplit::SparseVector{{h11, 1}, {h22, 1}});
  CHECK(a.product(h11, h12) == jsplit::SparseVector{{h12, Rational(1, 2)}});
  CHECK(a.product(u11, h12) == jsplit::SparseVector{{u21, Rational(1, 2)}});
  CHECK(a.unit().has_value());
}

TEST_CASE("osp matches the blockwise oracle on every matrix unit") {
  for (const auto& [n, m] : kGrid) {
    const std::size_t s = n + 2 * m;
    for (std::size_t r = 1; r <= s; ++r)
      for (std::size_t c = 1; c <= s; ++c) {
        const SuperMatrix e = SuperMatrix::unit(n, m, r, c);
        CHECK(to_mat(jsplit::osp(e)) == oracle::osp(to_mat(e), n, m));
      }
  }
}

TEST_CASE("osp examples") {
  CHECK(jsplit::osp(SuperMatrix::identity(1, 1)) == SuperMatrix::identity(1, 1));
  const SuperMatrix e11 = SuperMatrix::unit(1, 1, 1, 1);
  CHECK(jsplit::osp(e11) == e11);
  const SuperMatrix u = jsplit::josp_matrix(1, 1, {JospIndex::Kind::kU, 1, 1});
  CHECK(jsplit::osp(u) == u);
}

TEST_CASE("superinvolution laws") {
  CHECK(jsplit::superinvolution_laws(1, 1).holds());
  CHECK(jsplit::superinvolution_laws(2, 1).holds());
  CHECK(jsplit::superinvolution_laws(1, 2).holds());
  // With U = I the map is still a signed antihomomorphism, but it squares to −1 on odd matrices.
  const jsplit::OspInvolution wrong(1, 1, jsplit::RatMatrix::identity(2));
  const auto report = jsplit::superinvolution_laws(wrong, 1, 1);
  REQUIRE_FALSE(report.holds());
  for (const auto& v : report.violations) {
    REQUIRE(v.indices.size() == 2);
    CHECK(SuperMatrix::unit(1, 1, v.indices[0] + 1, v.indices[1] + 1).parity() == Parity::kOdd);
  }
  CHECK(report.violations.size() == 4);
}

TEST_CASE("every basis matrix is osp-symmetric and homogeneous of the right parity") {
  for (const auto& [n, m] : kGrid)
    for (const auto& i : jsplit::josp_basis(n, m)) {
      const SuperMatrix x = jsplit::josp_matrix(n, m, i);
      CHECK(jsplit::osp(x) == x);
      CHECK(x.parity() == i.parity());
    }
}

TEST_CASE("H plus Skew decomposition of matrix units") {
  for (const auto& [n, m] : kGrid) {
    const std::size_t s = n + 2 * m;
    for (std::size_t r = 1; r <= s; ++r)
      for (std::size_t c = 1; c <= s; ++c) {
        const SuperMatrix x = SuperMatrix::unit(n, m, r, c);
        const SuperMatrix star = jsplit::osp(x);
        const SuperMatrix sym = (x + star).scaled(Rational(1, 2));
        const SuperMatrix skew = (x - star).scaled(Rational(1, 2));
        CHECK(jsplit::osp(sym) == sym);
        CHECK(jsplit::osp(skew) == skew.scaled(-1));
        CHECK(sym + skew == x);
      }
  }
}

TEST_CASE("table and matrix realizations coincide") {
  for (const auto& [n, m] : std::vector<Size>{{1, 0}, {1, 1}, {2, 1}, {1, 2}, {3, 1}}) {
    const auto table = jsplit::build_josp_table(n, m);
    const auto matrix = jsplit::build_josp_matrix(n, m);
    std::vector<std::size_t> identity(table.dim());
    std::iota(identity.begin(), identity.end(), 0);
    CHECK(jsplit::structure_iso_check(table, matrix, identity));
    CHECK(jsplit::label_basis_map(table, matrix) == identity);
    CHECK(jsplit::is_jordan_superalgebra(table));
  }
}

TEST_CASE("structure iso check rejects bad maps") {
  const auto a = jsplit::build_josp_table(1, 1);
  const auto b = jsplit::build_josp_table(2, 1);
  CHECK_THROWS_AS(jsplit::structure_iso_check(a, b, {0, 1, 2, 3}), jsplit::UsageError);
  CHECK_THROWS_AS(jsplit::structure_iso_check(a, a, {0, 0, 2, 3}), jsplit::UsageError);
  CHECK_THROWS_AS(jsplit::structure_iso_check(a, a, {2, 1, 0, 3}), jsplit::UsageError);
  // Swapping h11 and v11 is parity-preserving but not a homomorphism: u·k = ½v − h.
  CHECK_FALSE(jsplit::structure_iso_check(a, a, {1, 0, 2, 3}));
  CHECK(jsplit::structure_iso_check(a, a, {0, 1, 2, 3}));
}

TEST_CASE("matrix coordinates outside the span are rejected") {
  std::vector<SuperMatrix> basis;
  for (const auto& i : jsplit::josp_basis(1, 1)) basis.push_back(jsplit::josp_matrix(1, 1, i));
  const auto coords = jsplit::matrix_coordinates(basis, SuperMatrix::identity(1, 1));
  CHECK(coords == jsplit::RationalVector{1, 1, 0, 0});
  CHECK_THROWS_AS(jsplit::matrix_coordinates(basis, SuperMatrix::unit(1, 1, 1, 2)), jsplit::InternalError);
}

TEST_CASE("even part is a subalgebra and odd squares are even") {
  for (const auto& [n, m] : std::vector<Size>{{1, 1}, {2, 1}, {1, 2}, {2, 2}}) {
    const auto a = jsplit::build_josp_table(n, m);
    for (std::size_t i = 0; i < a.dim(); ++i)
      for (std::size_t j = 0; j < a.dim(); ++j)
        for (const auto& t : a.product(i, j)) CHECK(a.parity(t.index) == a.parity(i) + a.parity(j));
  }
}

TEST_CASE("property: the table agrees with matrix products on random elements") {
  gen::Rng rng(12);
  for (const auto& [n, m] : std::vector<Size>{{1, 1}, {2, 1}, {1, 2}}) {
    const auto a = jsplit::build_josp_table(n, m);
    const auto basis = jsplit::josp_basis(n, m);
    std::vector<SuperMatrix> mats;
    for (const auto& i : basis) mats.push_back(jsplit::josp_matrix(n, m, i));
    const auto realize = [&](const jsplit::RationalVector& v) {
      SuperMatrix x(n, m);
      for (std::size_t i = 0; i < v.size(); ++i) x = x + mats[i].scaled(v[i]);
      return x;
    };
    for (int trial = 0; trial < 10; ++trial) {
      // Homogeneous random elements: zero out one parity.
      auto x = rng.vector(a.dim()), y = rng.vector(a.dim());
      const Parity px = rng.chance(50) ? Parity::kOdd : Parity::kEven;
      const Parity py = rng.chance(50) ? Parity::kOdd : Parity::kEven;
      for (std::size_t i = 0; i < a.dim(); ++i) {
        if (a.parity(i) != px) x[i] = 0;
        if (a.parity(i) != py) y[i] = 0;
      }
      CHECK(realize(a.multiply(x, y)) == jsplit::jordan_product(realize(x), realize(y)));
    }
  }
}
