#include <doctest.h>

#include <hypernil/catalog.hpp>
#include <hypernil/error.hpp>

#include "support/generators.hpp"

using namespace hypernil;

namespace {

Subspace span_of(std::size_t n, std::initializer_list<std::size_t> indices) {
  std::vector<Vector> vs;
  for (auto i : indices) vs.push_back(Vector::basis(n, i - 1));
  return Subspace::span(vs, n);
}

std::array<std::optional<std::size_t>, 3> j_steps(const HypercomplexLieAlgebra& h) {
  return {j_nilpotency_step(h.algebra, h.j(1)), j_nilpotency_step(h.algebra, h.j(2)),
          j_nilpotency_step(h.algebra, h.j(3))};
}

}  // namespace

TEST_CASE("the standard structure on R^4k is quaternionic") {
  for (std::size_t k = 1; k <= 3; ++k) {
    const HypercomplexLieAlgebra h{"", LieAlgebra(4 * k), standard_quaternionic_structure(k)};
    CHECK(validate_hypercomplex(h).empty());
  }
  const auto i = standard_quaternionic_structure(1);
  CHECK(i[0] * Vector::basis(4, 0) == Vector::basis(4, 1));
  CHECK(i[1] * Vector::basis(4, 1) == -Vector::basis(4, 3));
  CHECK(i[2] * Vector::basis(4, 1) == Vector::basis(4, 2));
}

TEST_CASE("broken relations are reported") {
  auto h = catalog::n8();
  std::swap(h.structures[1], h.structures[2]);
  const auto violations = validate_hypercomplex(h);
  REQUIRE(!violations.empty());
  CHECK(violations.front().relation == "J1 J2 = J3");
  CHECK_THROWS_AS(require_hypercomplex(h), PreconditionError);

  // A complex structure on n8 that squares to -I but is not integrable:
  // pair e1 with e8 instead of e2.
  Matrix j(8, 8);
  const std::array<std::pair<int, int>, 4> pairs{{{0, 7}, {1, 2}, {3, 4}, {5, 6}}};
  for (const auto& [a, b] : pairs) {
    j(b, a) = 1;
    j(a, b) = -1;
  }
  CHECK(squares_to_minus_identity(j));
  CHECK_FALSE(is_integrable(catalog::n8().algebra, j));

  const HypercomplexLieAlgebra odd{"", LieAlgebra(6), {Matrix(6, 6), Matrix(6, 6), Matrix(6, 6)}};
  CHECK(validate_hypercomplex(odd).front().relation == "dimension");
}

TEST_CASE("points of the sphere give complex structures") {
  const auto h = catalog::n8();
  const auto j = sphere_structure(h, {Rational(3, 5), Rational(4, 5), Rational(0)});
  CHECK(squares_to_minus_identity(j));
  CHECK(is_integrable(h.algebra, j));
  CHECK_THROWS_AS(sphere_structure(h, {Rational(1), Rational(1), Rational(0)}), PreconditionError);
}

TEST_CASE("ascending series of n8") {
  const auto h = catalog::n8();
  for (int a = 1; a <= 3; ++a) {
    const auto series = ascending_series(h.algebra, h.j(a));
    REQUIRE(series.size() == 3);
    CHECK(series[1] == span_of(8, {5, 6, 7, 8}));
    CHECK(series[2].is_full());
    CHECK(two_step_criterion(h.algebra, h.j(a)));
  }
}

TEST_CASE("J-steps of the catalog") {
  using Steps = std::array<std::optional<std::size_t>, 3>;
  CHECK(j_steps(catalog::n8()) == Steps{2, 2, 2});
  CHECK(j_steps(catalog::ex_2_2_3()) == Steps{2, 2, 3});
  CHECK(j_steps(catalog::ex_2_3_3()) == Steps{2, 3, 3});
  CHECK(j_steps(catalog::ex_nonflat()) == Steps{3, 3, 3});
  CHECK(j_steps(catalog::torus(2)) == Steps{1, 1, 1});
}

TEST_CASE("a bounded series reports no step") {
  const auto h = catalog::ex_nonflat();
  CHECK_FALSE(j_nilpotency_step(h.algebra, h.j(1), 2).has_value());
  CHECK(j_nilpotency_step(h.algebra, h.j(1), 3) == 3);
}

TEST_CASE("two-step criterion agrees with the ascending series on 2-step algebras") {
  for (const auto& ext : gen::random_extensions(21, catalog::n8(), 12)) {
    const auto& h = ext.algebra;
    REQUIRE(nilpotency_step(h.algebra) == 2);
    for (int a = 1; a <= 3; ++a) {
      CHECK(two_step_criterion(h.algebra, h.j(a)) == (j_nilpotency_step(h.algebra, h.j(a)) == 2));
    }
  }
  const auto h = catalog::ex_3step_16();
  CHECK_THROWS_AS(two_step_criterion(h.algebra, h.j(1)), PreconditionError);
}

TEST_CASE("H-solvable series of n8") {
  const auto h = catalog::n8();
  const auto series = h_solvable_series(h);
  REQUIRE(series.size() == 3);
  CHECK(series[0].is_full());
  CHECK(series[1] == span_of(8, {5, 6, 7, 8}));
  CHECK(series[2].is_zero());
  CHECK(h_series_terms_are_nested_ideals(h.algebra, series));
  CHECK(h_solvability_step(h) == 2);
  CHECK(h_solvability_step(catalog::torus(1)) == 1);
}

TEST_CASE("quaternionic spans") {
  const auto h = catalog::n8();
  const auto q = quaternionic_span(h, span_of(8, {8}));
  CHECK(q == span_of(8, {5, 6, 7, 8}));
  CHECK(is_quaternionic_subspace(h, q));
  CHECK_FALSE(is_quaternionic_subspace(h, span_of(8, {8})));
}
