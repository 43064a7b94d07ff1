#include <doctest.h>

#include <hypernil/catalog.hpp>
#include <hypernil/error.hpp>

#include "support/generators.hpp"

using namespace hypernil;

namespace {

Vector e(std::size_t n, std::size_t i) { return Vector::basis(n, i - 1); }

}  // namespace

TEST_CASE("extension brackets are base brackets plus mu") {
  const auto h = catalog::ex_nonflat();
  CHECK(h.algebra.bracket(e(12, 5), e(12, 6)) == e(12, 9));
  CHECK(h.algebra.bracket(e(12, 6), e(12, 7)) == -e(12, 11));
  CHECK(h.algebra.bracket(e(12, 5), e(12, 7)) == e(12, 12));
  CHECK(h.algebra.bracket(e(12, 1), e(12, 2)) == -e(12, 8));
  CHECK(nilpotency_step(h.algebra) == 2);
}

TEST_CASE("the e10-valued variant of the nonflat mu violates integrability") {
  const auto failures = extension_integrability_failures(catalog::n8(), catalog::mu_nonflat_e10_variant());
  REQUIRE(!failures.empty());
  CHECK(failures.front().alpha == 1);
  try {
    mu_extension(catalog::n8(), catalog::mu_nonflat_e10_variant());
    FAIL("extension accepted");
  } catch (const PreconditionError& err) {
    CHECK(std::string(err.what()).find("alpha = 1 on (e5, e7)") != std::string::npos);
  }
  CHECK(extension_integrability_failures(catalog::n8(), catalog::mu_nonflat()).empty());
}

TEST_CASE("extensions reject bad fibers and mu not vanishing on the commutator") {
  CHECK_THROWS_AS(mu_extension(catalog::n8(), MuForm(8, 3)), PreconditionError);
  MuForm mu(8, 4);
  mu.add(7, 0, e(4, 1));
  CHECK_FALSE(commutator_in_kernel(catalog::n8().algebra, mu));
  CHECK_THROWS_AS(mu_extension(catalog::n8(), mu), PreconditionError);
  CHECK_THROWS_AS(mu_extension(catalog::n8(), MuForm(4, 4)), DimensionError);
}

TEST_CASE("zero mu gives the direct product") {
  const auto h = mu_extension(catalog::n8(), MuForm(8, 4));
  CHECK(h.dim() == 12);
  CHECK(commutator_ideal(h.algebra).dim() == 1);
  CHECK(is_flat(h));
  for (int a = 1; a <= 3; ++a) {
    CHECK(step_of_extension(catalog::n8(), MuForm(8, 4), a) == 2);
    CHECK(j_nilpotency_step(h.algebra, h.j(a)) == 2);
  }
}

TEST_CASE("predicted extension steps") {
  const auto base = catalog::n8();
  CHECK(step_of_extension(base, catalog::mu_2_2_3(), 1) == 2);
  CHECK(step_of_extension(base, catalog::mu_2_2_3(), 2) == 2);
  CHECK(step_of_extension(base, catalog::mu_2_2_3(), 3) == 3);
  for (const auto& ext : gen::random_extensions(51, base, 15)) {
    for (int a = 1; a <= 3; ++a) {
      const auto predicted = step_of_extension(base, ext.mu, a);
      CHECK(j_nilpotency_step(ext.algebra.algebra, ext.algebra.j(a)) == static_cast<std::size_t>(predicted));
      if (ext.two_step_alphas.count(a)) CHECK(predicted == 2);
    }
    CHECK(nilpotency_step(ext.algebra.algebra) == 2);
  }
  CHECK_THROWS_AS(step_of_extension(catalog::ex_nonflat(), MuForm(12, 4), 1), PreconditionError);
}

TEST_CASE("every basis element of the integrable mu space is integrable") {
  const auto base = catalog::n8();
  const auto basis = integrable_mu_basis(base, 4);
  CHECK(!basis.empty());
  for (const auto& mu : basis) {
    CHECK(extension_integrability_failures(base, mu).empty());
    CHECK(commutator_in_kernel(base.algebra, mu));
  }
}

TEST_CASE("semidirect products") {
  const auto base = catalog::ex_nonflat();
  const auto rho = catalog::block_shift(12, 2, 0);
  const auto h = catalog::ex_semidirect();
  CHECK(h.dim() == 20);
  // [e1, f1] = ρ(e1) f1 = f5.
  CHECK(h.algebra.bracket(e(20, 1), e(20, 13)) == e(20, 17));
  CHECK(nilpotency_step(h.algebra) == 2);
  CHECK(obata_connection(h) == predicted_semidirect_connection(base, rho));
  CHECK(product_nilpotency_index(rho) == 2);
  CHECK(product_nilpotency_index(zero_representation(12, 2)) == 1);

  const auto r = curvature(h.algebra, obata_connection(h));
  const auto rb = curvature(base.algebra, obata_connection(base));
  for (std::size_t i = 0; i < 20; ++i)
    for (std::size_t j = i + 1; j < 20; ++j)
      for (std::size_t k = 0; k < 20; ++k) {
        Vector expected(20);
        if (i < 12 && j < 12 && k < 12) {
          const auto v = rb.basis_value(i, j, k);
          for (std::size_t c = 0; c < 12; ++c) expected[c] = v[c];
        }
        CHECK(r.basis_value(i, j, k) == expected);
      }
}

TEST_CASE("representations must be quaternionic homomorphisms") {
  const auto base = catalog::ex_nonflat();
  auto rho = zero_representation(12, 1);
  rho.images[0] = Matrix(4, 4);
  rho.images[0](1, 0) = 1;
  auto failures = representation_failures(base.algebra, rho);
  REQUIRE(!failures.empty());
  CHECK(failures.front().find("I1 != I1") != std::string::npos);
  CHECK_THROWS_AS(semidirect(base, rho), PreconditionError);

  // ρ(e8) ≠ 0 while e8 = −[e1,e2] and ρ(e1) = ρ(e2) = 0.
  auto bad = zero_representation(12, 2);
  bad.images[7] = catalog::block_shift(12, 2, 0).images[0];
  failures = representation_failures(base.algebra, bad);
  REQUIRE(!failures.empty());
  CHECK(failures.front().find("rho([e1,e2])") != std::string::npos);
}

TEST_CASE("semidirect invariants match direct computation") {
  gen::Random r(61);
  for (int trial = 0; trial < 16; ++trial) {
    const auto base = trial % 2 ? catalog::ex_nonflat() : catalog::n8();
    const auto blocks = static_cast<std::size_t>(r.integer(1, 4));
    const auto rho = gen::random_rho(r, base.dim(), blocks, 0);
    const auto h = semidirect(base, rho);
    const auto predicted = predict_semidirect_invariants(base, rho);
    CHECK(predicted.center == center(h.algebra));
    CHECK(predicted.commutator == commutator_ideal(h.algebra));
    CHECK(predicted.step == nilpotency_step(h.algebra));
    CHECK(obata_connection(h) == predicted_semidirect_connection(base, rho));
    if (nilpotency_step(h.algebra) == 2) {
      const auto g1 = commutator_ideal(base.algebra);
      const auto z = center(base.algebra);
      for (int a = 1; a <= 3; ++a) {
        // J̃_α is 2-step iff J_α g^1 ⊆ z(g) ∩ ker ρ.
        bool inside = true;
        for (const auto& v : g1.basis()) {
          const Vector jv = base.j(a) * v;
          inside = inside && z.contains(jv) && rho(jv).is_zero();
        }
        CHECK(inside == (j_nilpotency_step(h.algebra, h.j(a)) == 2));
      }
    }
  }
}

TEST_CASE("k-block shifts give k-step algebras") {
  for (std::size_t k = 3; k <= 5; ++k) {
    const auto h = catalog::ex_kstep(k);
    CHECK(h.dim() == 12 + 4 * k);
    CHECK(nilpotency_step(h.algebra) == k);
    CHECK(product_nilpotency_index(catalog::block_shift(12, k, 0)) == k);
  }
}
