#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "hypernil/hypercomplex.hpp"

namespace hypernil {

/// Left-invariant connection: nabla[i] is the matrix of Y ↦ ∇_{e_i} Y.
struct Connection {
  std::vector<Matrix> nabla;

  std::size_t dim() const { return nabla.size(); }
  /// ∇_x y.
  Vector apply(const Vector& x, const Vector& y) const;
  /// Matrix of Y ↦ ∇_x Y.
  Matrix along(const Vector& x) const;

  friend bool operator==(const Connection&, const Connection&) = default;
};

/// R(e_i,e_j) for i < j; the other pairs follow from antisymmetry.
class Curvature {
public:
  Curvature(std::size_t dim, std::vector<Matrix> upper);

  std::size_t dim() const { return dim_; }
  /// R(e_i, e_j) for any i, j.
  Matrix operator()(std::size_t i, std::size_t j) const;
  /// R(e_i, e_j) e_k without materialising the matrix.
  Vector basis_value(std::size_t i, std::size_t j, std::size_t k) const;
  /// R(x, y) z.
  Vector apply(const Vector& x, const Vector& y, const Vector& z) const;
  /// All stored R(e_i, e_j), i < j, in lexicographic order.
  const std::vector<Matrix>& upper() const { return upper_; }

  bool is_zero() const;

private:
  std::size_t index(std::size_t i, std::size_t j) const;

  std::size_t dim_;
  std::vector<Matrix> upper_;
};

/// Cyclic permutation (α, β, γ) of (1, 2, 3) selected by its first entry.
std::array<int, 3> cyclic_permutation(int alpha);

/// ∇_X Y = ½([X,Y] + J_α[J_α X,Y] − J_β[X,J_β Y] + J_γ[J_α X,J_β Y]) with
/// (α,β,γ) = cyclic_permutation(alpha). Requires a valid hypercomplex input.
Connection obata_connection(const HypercomplexLieAlgebra& h, int alpha = 1);

/// The same formula without validating the input.
Connection obata_formula(const HypercomplexLieAlgebra& h, int alpha);

/// The three cyclic forms of the formula agree.
bool verify_cyclic_forms(const HypercomplexLieAlgebra& h);

/// ∇_{e_i} e_j − ∇_{e_j} e_i = [e_i, e_j] for all i, j.
bool is_torsion_free(const LieAlgebra& g, const Connection& conn);

/// ∇_{e_i} commutes with every J_α.
bool preserves_structures(const HypercomplexLieAlgebra& h, const Connection& conn);

/// R(e_i,e_j) = ∇_i ∇_j − ∇_j ∇_i − ∇_{[e_i,e_j]}.
Curvature curvature(const LieAlgebra& g, const Connection& conn);

/// Closed-form 2-step curvature R(x,y)z, evaluated term by term with the
/// cyclic permutation selected by alpha. Throws PreconditionError unless g
/// is at most 2-step nilpotent.
Vector curvature_2step(const HypercomplexLieAlgebra& h, const Vector& x, const Vector& y, const Vector& z,
                       int alpha = 1);

/// curvature_2step with the step check done once, for evaluating many triples.
class TwoStepCurvature {
public:
  explicit TwoStepCurvature(HypercomplexLieAlgebra h, int alpha = 1);

  Vector operator()(const Vector& x, const Vector& y, const Vector& z) const;

private:
  HypercomplexLieAlgebra h_;
  std::array<int, 3> permutation_;
};

bool is_flat(const HypercomplexLieAlgebra& h);

/// R(e_i,e_j)e_k + R(e_j,e_k)e_i + R(e_k,e_i)e_j = 0 for all triples.
bool satisfies_first_bianchi(const Curvature& r);

/// Every R(e_i,e_j) commutes with every J_α.
bool curvature_commutes_with_structures(const HypercomplexLieAlgebra& h, const Curvature& r);

}  // namespace hypernil
