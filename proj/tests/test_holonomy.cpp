#include <doctest.h>

#include <hypernil/catalog.hpp>
#include <hypernil/error.hpp>

#include "support/generators.hpp"
#include "support/oracle.hpp"

using namespace hypernil;

TEST_CASE("holonomy matches the naive closure oracle") {
  std::vector<HypercomplexLieAlgebra> sample{catalog::torus(1), catalog::n8(), catalog::ex_2_2_3(),
                                             catalog::ex_nonflat(), catalog::ex_3step_16()};
  for (auto& ext : gen::random_extensions(41, catalog::n8(), 4)) sample.push_back(std::move(ext.algebra));
  for (const auto& h : sample) {
    CAPTURE(h.name);
    CHECK(holonomy_algebra(h).span == oracle::holonomy(h));
  }
}

TEST_CASE("holonomy of the catalog") {
  CHECK(holonomy_algebra(catalog::n8()).dim() == 0);
  CHECK(holonomy_algebra(catalog::torus(2)).dim() == 0);
  const auto h = catalog::ex_nonflat();
  const auto hol = holonomy_algebra(h);
  CHECK(hol.dim() == 5);
  CHECK(is_abelian(hol));
  CHECK(has_trivial_product(hol));
  CHECK(in_sl_n_H(hol, h));
  CHECK(hol.generators_log.front() == "R(e1,e2)");
  for (const auto& m : hol.basis()) CHECK(hol.contains(m));
}

TEST_CASE("curvature values stay in the bound for 2-step algebras") {
  for (const auto* name : {"ex_nonflat", "ex_2_3_3"}) {
    const auto h = catalog::get(name);
    const auto bound = curvature_value_bound(h);
    const auto r = curvature(h.algebra, obata_connection(h));
    const auto n = h.dim();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) CHECK(bound.contains(r.basis_value(i, j, k)));
  }
}

TEST_CASE("curvature equals minus ad of the bracket when J maps g1 into the center") {
  const auto h = catalog::ex_3step_16();
  REQUIRE(structures_map_commutator_into_center(h));
  const auto r = curvature(h.algebra, obata_connection(h));
  const auto n = h.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) CHECK(r(i, j) == -h.algebra.ad(h.algebra.bracket_basis(i, j)));
  const auto hol = holonomy_algebra(h);
  CHECK(compare_with_ad(hol, h));
  CHECK(hol.span == ad_commutator_span(h.algebra));
  CHECK_THROWS_AS(compare_with_ad(holonomy_algebra(catalog::ex_nonflat()), catalog::ex_nonflat()), PreconditionError);
}

TEST_CASE("block inclusion and round limits") {
  const auto hol = holonomy_algebra(catalog::ex_nonflat());
  const auto big = block_inclusion(hol, 20);
  CHECK(big.dim() == 5);
  CHECK(big.ambient_dim() == 400);
  CHECK_THROWS_AS(block_inclusion(hol, 8), DimensionError);
  CHECK_THROWS_AS(holonomy_algebra(catalog::ex_3step_16(), 0), Error);
}
