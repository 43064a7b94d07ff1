#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "hypernil/obata.hpp"

namespace hypernil {

/// Restricted holonomy algebra of a left-invariant connection, as a
/// subspace of the n²-dimensional endomorphism space (row-major).
struct HolonomyAlgebra {
  std::size_t n = 0;
  Subspace span{0};
  /// Origin of each generator that enlarged the span, in insertion order.
  std::vector<std::string> generators_log;
  /// Closure rounds run after the curvature generators.
  std::size_t rounds = 0;

  std::size_t dim() const { return span.dim(); }
  /// Canonical basis as n×n matrices.
  std::vector<Matrix> basis() const;
  bool contains(const Matrix& m) const { return span.contains(m.flatten()); }
};

/// Smallest subspace containing every R(e_i,e_j) and closed under
/// commutators among its elements and with every ∇_{e_i}.
/// Throws Error if max_rounds is given and exceeded.
HolonomyAlgebra holonomy_algebra(const LieAlgebra& g, const Connection& conn, const Curvature& r,
                                 std::optional<std::size_t> max_rounds = std::nullopt);

/// Convenience overload computing the Obata connection and its curvature.
HolonomyAlgebra holonomy_algebra(const HypercomplexLieAlgebra& h,
                                 std::optional<std::size_t> max_rounds = std::nullopt);

bool is_abelian(const HolonomyAlgebra& hol);

/// A·B = 0 for all basis elements A, B.
bool has_trivial_product(const HolonomyAlgebra& hol);

/// Every basis element commutes with J1, J2, J3 and is traceless.
bool in_sl_n_H(const HolonomyAlgebra& hol, const HypercomplexLieAlgebra& h);

/// J_α g^1 ⊆ z for α = 1, 2, 3.
bool structures_map_commutator_into_center(const HypercomplexLieAlgebra& h);

/// span{−ad([e_i,e_j])} in the endomorphism space.
Subspace ad_commutator_span(const LieAlgebra& g);

/// hol = span{−ad([e_i,e_j])}. Throws PreconditionError unless
/// structures_map_commutator_into_center(h).
bool compare_with_ad(const HolonomyAlgebra& hol, const HypercomplexLieAlgebra& h);

/// (g^1 ∩ J2 g^1) + (J1 g^1 ∩ J3 g^1): contains every R(x,y)z and is
/// annihilated by ∇ when g is 2-step.
Subspace curvature_value_bound(const HypercomplexLieAlgebra& h);

/// Image of the span under A ↦ diag(A, 0) into endomorphisms of a larger
/// space whose first n coordinates are the original ones.
Subspace block_inclusion(const HolonomyAlgebra& hol, std::size_t target_dim);

}  // namespace hypernil
