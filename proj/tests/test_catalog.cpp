#include <doctest.h>

#include <hypernil/catalog.hpp>
#include <hypernil/error.hpp>

using namespace hypernil;

TEST_CASE("catalog names resolve") {
  CHECK(catalog::names().size() == 8);
  CHECK(catalog::get("torus(1)").dim() == 4);
  CHECK(catalog::get("torus(3)").algebra.is_abelian());
  CHECK(catalog::get("ex_kstep(4)").dim() == 28);
  CHECK(catalog::get("ex_3step_16").dim() == 16);
  CHECK_THROWS_AS(catalog::get("n9"), Error);
  CHECK_THROWS_AS(catalog::get("torus(0)"), Error);
  CHECK_THROWS_AS(catalog::get("torus(x)"), Error);
  CHECK_THROWS_AS(catalog::get("ex_kstep(2)"), Error);
  CHECK_THROWS_AS(catalog::get("ex_kstep()"), Error);
}

TEST_CASE("catalog entries are valid hypercomplex Lie algebras") {
  for (const auto* name : {"torus(1)", "n8", "ex_2_2_3", "ex_2_3_3", "ex_nonflat", "ex_semidirect", "ex_kstep(3)",
                           "ex_3step_16"}) {
    const auto h = catalog::get(name);
    CAPTURE(std::string(name));
    CHECK(h.name == name);
    CHECK(check_jacobi(h.algebra).empty());
    CHECK(validate_hypercomplex(h).empty());
  }
}

TEST_CASE("the 16-dimensional 3-step entry maps g1 into the center") {
  const auto h = catalog::ex_3step_16();
  CHECK(nilpotency_step(h.algebra) == 3);
  const auto g1 = commutator_ideal(h.algebra);
  const auto z = center(h.algebra);
  for (int a = 1; a <= 3; ++a) CHECK(z.contains(g1.mapped(h.j(a))));
}

TEST_CASE("block shifts") {
  const auto rho = catalog::block_shift(12, 3, 0);
  CHECK(rho.fiber_dim() == 12);
  CHECK(rho.images[0](4, 0) == 1);
  CHECK(rho.images[0](8, 4) == 1);
  CHECK(rho.images[0](8, 0) == 0);
  CHECK(rho.images[1].is_zero());
}
