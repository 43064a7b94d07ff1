#include <doctest.h>

#include <hypernil/catalog.hpp>
#include <hypernil/error.hpp>

#include "support/generators.hpp"
#include "support/oracle.hpp"

using namespace hypernil;

namespace {

Vector e(std::size_t n, std::size_t i) { return Vector::basis(n, i - 1); }

std::vector<HypercomplexLieAlgebra> sample() {
  std::vector<HypercomplexLieAlgebra> out{catalog::torus(1), catalog::n8(),        catalog::ex_2_2_3(),
                                          catalog::ex_2_3_3(), catalog::ex_nonflat(), catalog::ex_3step_16()};
  for (auto& ext : gen::random_extensions(31, catalog::n8(), 4)) out.push_back(std::move(ext.algebra));
  return out;
}

}  // namespace

TEST_CASE("Obata connection of ex_nonflat at e1") {
  const auto h = catalog::ex_nonflat();
  const auto conn = obata_connection(h);
  CHECK(conn.apply(e(12, 1), e(12, 1)) == Rational(-1, 2) * e(12, 7));
  CHECK(conn.apply(e(12, 8), e(12, 1)).is_zero());
  const auto r = curvature(h.algebra, conn);
  CHECK(r.apply(e(12, 8), e(12, 1), e(12, 1)) == Rational(-1, 4) * e(12, 9));
}

TEST_CASE("connection and curvature match the vector-formula oracle") {
  for (const auto& h : sample()) {
    CAPTURE(h.name);
    const auto n = h.dim();
    for (int alpha = 1; alpha <= 3; ++alpha) {
      const auto conn = obata_connection(h, alpha);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) CHECK(conn.apply(e(n, i + 1), e(n, j + 1)) == oracle::nabla(h, e(n, i + 1), e(n, j + 1), alpha));
    }
    const auto r = curvature(h.algebra, obata_connection(h));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) CHECK(r(i, j) == oracle::curvature_matrix(h, i, j));
  }
}

TEST_CASE("structural identities of the Obata connection") {
  for (const auto& h : sample()) {
    CAPTURE(h.name);
    const auto conn = obata_connection(h);
    const auto r = curvature(h.algebra, conn);
    CHECK(verify_cyclic_forms(h));
    CHECK(is_torsion_free(h.algebra, conn));
    CHECK(preserves_structures(h, conn));
    CHECK(satisfies_first_bianchi(r));
    CHECK(curvature_commutes_with_structures(h, r));
  }
}

TEST_CASE("closed-form 2-step curvature agrees with the direct curvature") {
  for (const auto& h : sample()) {
    if (nilpotency_step(h.algebra) > 2) continue;
    CAPTURE(h.name);
    const auto n = h.dim();
    const auto r = curvature(h.algebra, obata_connection(h));
    for (int alpha = 1; alpha <= 3; ++alpha) {
      const TwoStepCurvature formula(h, alpha);
      CHECK(curvature_2step(h, e(n, 1), e(n, 2), e(n, n), alpha) == formula(e(n, 1), e(n, 2), e(n, n)));
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          for (std::size_t k = 0; k < n; ++k)
            CHECK(formula(e(n, i + 1), e(n, j + 1), e(n, k + 1)) == r.basis_value(i, j, k));
    }
  }
}

TEST_CASE("closed-form curvature refuses algebras beyond 2-step") {
  const auto h = catalog::ex_3step_16();
  CHECK_THROWS_AS(curvature_2step(h, e(16, 1), e(16, 2), e(16, 3)), PreconditionError);
  CHECK_THROWS_AS(TwoStepCurvature(h, 2), PreconditionError);
}

TEST_CASE("flatness") {
  CHECK(is_flat(catalog::torus(1)));
  CHECK(is_flat(catalog::n8()));
  CHECK(is_flat(catalog::ex_2_2_3()));
  CHECK(is_flat(catalog::ex_2_3_3()));
  CHECK_FALSE(is_flat(catalog::ex_nonflat()));
  CHECK_FALSE(is_flat(catalog::ex_3step_16()));
}

TEST_CASE("the connection requires a hypercomplex input") {
  auto h = catalog::n8();
  h.structures[2] = -h.structures[2];
  CHECK_THROWS_AS(obata_connection(h), PreconditionError);
  CHECK_THROWS_AS(cyclic_permutation(4), PreconditionError);
  CHECK(cyclic_permutation(2) == std::array<int, 3>{2, 3, 1});
}
