#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "hypernil/lie_algebra.hpp"

namespace hypernil {

/// A Lie algebra with a triple of endomorphisms meant to form a
/// hypercomplex structure. Nothing is enforced on construction;
/// validate_hypercomplex reports what fails.
struct HypercomplexLieAlgebra {
  std::string name;
  LieAlgebra algebra;
  std::array<Matrix, 3> structures;

  std::size_t dim() const { return algebra.dim(); }
  /// alpha in {1, 2, 3}.
  const Matrix& j(int alpha) const { return structures.at(static_cast<std::size_t>(alpha - 1)); }
};

/// Standard hypercomplex structure on R^{4k} (0-based blocks of four):
/// I1 e1 = e2, I1 e3 = e4; I2 e1 = e3, I2 e2 = −e4; I3 e1 = e4, I3 e2 = e3.
std::array<Matrix, 3> standard_quaternionic_structure(std::size_t blocks);

/// N_J(x,y) = [x,y] + J([Jx,y] + [x,Jy]) − [Jx,Jy].
Vector nijenhuis(const LieAlgebra& g, const Matrix& j, const Vector& x, const Vector& y);

/// N_J vanishes on every basis pair.
bool is_integrable(const LieAlgebra& g, const Matrix& j);

bool squares_to_minus_identity(const Matrix& j);

struct Violation {
  std::string relation;
  std::string detail;
};

/// Checks shapes, J_α² = −I, J1 J2 = J3 = −J2 J1 and integrability of each
/// J_α. Empty result means the triple is a hypercomplex structure.
std::vector<Violation> validate_hypercomplex(const HypercomplexLieAlgebra& h);

/// Throws PreconditionError listing the violations (Jacobi included) when
/// h is not a valid hypercomplex Lie algebra.
void require_hypercomplex(const HypercomplexLieAlgebra& h);

/// J_y = y1 J1 + y2 J2 + y3 J3 for a rational point y on the unit sphere.
Matrix sphere_structure(const HypercomplexLieAlgebra& h, const std::array<Rational, 3>& y);

/// Default iteration bound for the series below: dim + 1.
std::size_t default_series_bound(const LieAlgebra& g);

/// a_0 = 0, a_k = {x : [x,g] ⊆ a_{k-1} and [Jx,g] ⊆ a_{k-1}}. Stops at the
/// full space, at stabilisation, or after max_iterations terms.
std::vector<Subspace> ascending_series(const LieAlgebra& g, const Matrix& j,
                                       std::optional<std::size_t> max_iterations = std::nullopt);

/// First k with a_k = g, or nullopt.
std::optional<std::size_t> j_nilpotency_step(const LieAlgebra& g, const Matrix& j,
                                             std::optional<std::size_t> max_iterations = std::nullopt);

/// J g^1 ⊆ z. Requires g to be exactly 2-step nilpotent.
bool two_step_criterion(const LieAlgebra& g, const Matrix& j);

/// S + J1 S + J2 S + J3 S.
Subspace quaternionic_span(const HypercomplexLieAlgebra& h, const Subspace& s);

/// Invariant under every J_α.
bool is_quaternionic_subspace(const HypercomplexLieAlgebra& h, const Subspace& s);

/// g_0 = g, g_k = H[g_{k-1}, g_{k-1}]; ends at zero or stabilisation.
std::vector<Subspace> h_solvable_series(const HypercomplexLieAlgebra& h,
                                        std::optional<std::size_t> max_iterations = std::nullopt);

/// Every term after the first is a subalgebra and an ideal in its predecessor.
bool h_series_terms_are_nested_ideals(const LieAlgebra& g, const std::vector<Subspace>& series);

/// First k with g_k = 0, or nullopt. Throws Error if the nested-ideal
/// property fails on the computed series.
std::optional<std::size_t> h_solvability_step(const HypercomplexLieAlgebra& h,
                                              std::optional<std::size_t> max_iterations = std::nullopt);

}  // namespace hypernil
