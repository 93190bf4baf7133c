#include <doctest.h>

#include "jsplit/bimodule.hpp"
#include "jsplit/errors.hpp"
#include "jsplit/josp.hpp"
#include "jsplit/peirce.hpp"
#include "jsplit/splitting.hpp"

using jsplit::Parity;
using jsplit::RationalVector;
using jsplit::Superalgebra;

namespace {

using Dims = std::vector<std::size_t>;

/// e1, e2 orthogonal idempotents with unit e1 + e2, and x with e1·x = ⅓x, e2·x = ⅔x.
Superalgebra lopsided() {
  Superalgebra a("lopsided", {"e1", "e2", "x"}, {Parity::kEven, Parity::kEven, Parity::kEven});
  a.add_constant(0, 0, 0, 1);
  a.add_constant(1, 1, 1, 1);
  for (const auto& [e, c] : std::vector<std::pair<std::size_t, jsplit::Rational>>{{0, {1, 3}}, {1, {2, 3}}}) {
    a.add_constant(e, 2, 2, c);
    a.add_constant(2, e, 2, c);
  }
  a.set_unit({1, 1, 0});
  return a;
}

/// The component's span contains basis vector i.
bool holds_basis_vector(const jsplit::PeirceComponent& c, std::size_t i, std::size_t dim) {
  jsplit::RatMatrix m = jsplit::rows_matrix(c.basis, dim);
  const std::size_t r = jsplit::rank(m);
  RationalVector e(dim);
  e[i] = 1;
  m.append_row(e);
  return jsplit::rank(m) == r;
}

}  // namespace

TEST_CASE("idempotent family verification") {
  const auto j = jsplit::build_josp_table(2, 1);
  CHECK(jsplit::verify_idempotent_family(j, jsplit::family_from_labels(j, "h11,h22,v11")));
  CHECK(jsplit::verify_idempotent_family(j, {{j.unit().value()}}));
  CHECK_FALSE(jsplit::verify_idempotent_family(j, jsplit::family_from_labels(j, "h11,h11,v11")));
  CHECK_FALSE(jsplit::verify_idempotent_family(j, jsplit::family_from_labels(j, "h11,h22")));
  CHECK_FALSE(jsplit::verify_idempotent_family(j, jsplit::family_from_labels(j, "h11,h12,v11")));
  CHECK_THROWS_AS(jsplit::family_from_labels(j, "h11,zz"), jsplit::UsageError);
  Superalgebra nil("nil", {"x"}, {Parity::kEven});
  CHECK_THROWS_AS(jsplit::verify_idempotent_family(nil, {{{1}}}), jsplit::UsageError);
}

TEST_CASE("Josp(1|2) decomposition") {
  const auto j = jsplit::build_josp_table(1, 1);
  const auto d = jsplit::peirce_decompose(j, jsplit::family_from_labels(j, "h11,v11"));
  CHECK(d.dimensions() == Dims{1, 1, 2});
  CHECK(d.components[0].diagonal());
  CHECK(d.components[2].first == 0);
  CHECK(d.components[2].second == 1);
  CHECK(d.component_of_basis_vector(j.index_of("h11").value()) == 0);
  CHECK(d.component_of_basis_vector(j.index_of("v11").value()) == 1);
  CHECK(d.component_of_basis_vector(j.index_of("u11").value()) == 2);
  CHECK(d.component_of_basis_vector(j.index_of("k11").value()) == 2);
  CHECK(jsplit::verify_peirce_relations(d).holds());
}

TEST_CASE("decomposition examples") {
  const auto j21 = jsplit::build_josp_table(2, 1);
  const auto d = jsplit::peirce_decompose(j21, jsplit::family_from_labels(j21, "h11,h22,v11"));
  CHECK(d.dimensions() == Dims{1, 1, 1, 1, 2, 2});
  CHECK(jsplit::verify_peirce_relations(d).holds());
  const auto j22 = jsplit::build_josp_table(2, 2);
  const auto fine = jsplit::peirce_decompose(j22, jsplit::family_from_labels(j22, "h11,h22,v11,v22"));
  CHECK(jsplit::verify_peirce_relations(fine).holds());

  const auto one = jsplit::peirce_decompose(j22, {{j22.unit().value()}});
  CHECK(one.dimensions() == Dims{17});
  CHECK(jsplit::verify_peirce_relations(one).holds());

  const auto ce = jsplit::build_counterexample().algebra;
  const auto dce = jsplit::peirce_decompose(ce, jsplit::family_from_labels(ce, "h,v"));
  CHECK(dce.dimensions() == Dims{2, 2, 4});
  CHECK(jsplit::verify_peirce_relations(dce).holds());
}

TEST_CASE("odd Josp basis vectors lie in mixed components") {
  for (const auto& [n, m] : std::vector<std::pair<std::size_t, std::size_t>>{{1, 1}, {2, 1}, {1, 2}, {2, 2}}) {
    const auto a = jsplit::build_josp_table(n, m);
    std::string labels;
    for (std::size_t i = 1; i <= n; ++i) labels += "h" + std::to_string(i) + std::to_string(i) + ",";
    for (std::size_t p = 1; p <= m; ++p) labels += "v" + std::to_string(p) + std::to_string(p) + ",";
    labels.pop_back();
    const auto d = jsplit::peirce_decompose(a, jsplit::family_from_labels(a, labels));
    CHECK(jsplit::verify_peirce_relations(d).holds());
    for (std::size_t i = 1; i <= n; ++i)
      for (std::size_t p = 1; p <= m; ++p)
        for (const char* kind : {"u", "k"}) {
          const std::size_t b = a.index_of(kind + std::to_string(i) + std::to_string(p)).value();
          const std::size_t c = d.component_of_basis_vector(b);
          REQUIRE(c < d.components.size());
          CHECK(d.components[c].first == i - 1);
          CHECK(d.components[c].second == n + p - 1);
          CHECK(holds_basis_vector(d.components[c], b, a.dim()));
        }
  }
}

TEST_CASE("property: components sum to the algebra with invertible change of basis") {
  std::vector<std::pair<Superalgebra, std::string>> cases = {
      {jsplit::build_josp_table(2, 1), "h11,h22,v11"},
      {jsplit::build_josp_table(2, 2), "h11,h22,v11,v22"},
      {jsplit::build_josp_table(3, 1), "h11,h22,h33,v11"},
      {jsplit::build_counterexample().algebra, "h,v"},
      {jsplit::split_null_extension(jsplit::skew_bimodule(2, 1)).algebra, "h11,h22,v11"},
      {jsplit::split_null_extension(jsplit::opposite(jsplit::regular_bimodule(jsplit::build_josp_table(1, 2)))).algebra,
       "h11,v11,v22"},
  };
  for (const auto& [a, labels] : cases) {
    const auto d = jsplit::peirce_decompose(a, jsplit::family_from_labels(a, labels));
    std::size_t total = 0;
    std::vector<RationalVector> all;
    for (const auto& c : d.components) {
      total += c.basis.size();
      all.insert(all.end(), c.basis.begin(), c.basis.end());
    }
    CHECK(total == a.dim());
    CHECK(jsplit::rank(jsplit::rows_matrix(all, a.dim())) == a.dim());
    CHECK(jsplit::verify_peirce_relations(d).holds());
  }
}

TEST_CASE("decomposition errors") {
  const auto j = jsplit::build_josp_table(2, 1);
  CHECK_THROWS_AS(jsplit::peirce_decompose(j, jsplit::family_from_labels(j, "h11,h12,v11")), jsplit::UsageError);
  const auto bad = lopsided();
  const jsplit::IdempotentFamily family{{{1, 0, 0}, {0, 1, 0}}};
  CHECK(jsplit::verify_idempotent_family(bad, family));
  CHECK_THROWS_AS(jsplit::peirce_decompose(bad, family), jsplit::StructureError);
}

TEST_CASE("relation violations are reported") {
  // Components come from a Jordan algebra, but the product is changed afterwards.
  const auto j = jsplit::build_josp_table(1, 1);
  auto d = jsplit::peirce_decompose(j, jsplit::family_from_labels(j, "h11,v11"));
  const std::size_t h = j.index_of("h11").value(), v = j.index_of("v11").value();
  d.algebra.add_constant(h, h, v, 1);
  const auto r = jsplit::verify_peirce_relations(d);
  REQUIRE_FALSE(r.holds());
  CHECK(r.violations[0].indices == std::vector<std::size_t>{0, 0, 0, 0});
}
