#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "hypernil/matrix.hpp"
#include "hypernil/subspace.hpp"

namespace hypernil {

/// One summand c·e^{ij} of a structure equation de^k = Σ c·e^{ij}.
/// Indices are 0-based.
struct FormTerm {
  Rational coefficient;
  std::size_t i = 0;
  std::size_t j = 0;
  friend bool operator==(const FormTerm&, const FormTerm&) = default;
};

struct StructureEquation {
  std::size_t k = 0;
  std::vector<FormTerm> terms;
  friend bool operator==(const StructureEquation&, const StructureEquation&) = default;
};

/// [e_i, e_j] = value, 0-based, i < j.
struct BracketEntry {
  std::size_t i = 0;
  std::size_t j = 0;
  Vector value;
  friend bool operator==(const BracketEntry&, const BracketEntry&) = default;
};

/// Lie algebra given by structure constants [e_i, e_j] = Σ_k c[i][j][k] e_k
/// on a fixed basis. Antisymmetry is enforced on construction; the Jacobi
/// identity is checked separately by check_jacobi.
class LieAlgebra {
public:
  /// Abelian algebra of the given dimension.
  explicit LieAlgebra(std::size_t dim);

  /// Throws PreconditionError if an entry has i == j or two entries name
  /// the same pair, DimensionError on out-of-range indices.
  static LieAlgebra from_brackets(std::size_t dim, const std::vector<BracketEntry>& brackets);

  /// Chevalley–Eilenberg convention dα(X,Y) = −α([X,Y]): the term c·e^{ij}
  /// in de^k contributes [e_i, e_j] ∋ −c·e_k. Thus de8 = e12 − e34 gives
  /// [e1,e2] = −e8 and [e3,e4] = e8.
  static LieAlgebra from_structure_equations(std::size_t dim,
                                             const std::vector<StructureEquation>& equations);

  std::size_t dim() const { return dim_; }

  const Vector& bracket_basis(std::size_t i, std::size_t j) const { return table_[i * dim_ + j]; }
  const Rational& constant(std::size_t i, std::size_t j, std::size_t k) const {
    return table_[i * dim_ + j][k];
  }

  Vector bracket(const Vector& x, const Vector& y) const;
  /// Matrix of Y ↦ [x, Y].
  Matrix ad(const Vector& x) const;
  Matrix ad_basis(std::size_t i) const;

  bool is_abelian() const;

  /// Nonzero brackets with i < j, ordered by (i, j).
  std::vector<BracketEntry> brackets() const;
  /// Dual description under the convention above, one equation per k in
  /// ascending order; terms ordered lexicographically by (i, j).
  std::vector<StructureEquation> structure_equations() const;

  friend bool operator==(const LieAlgebra&, const LieAlgebra&) = default;

private:
  void set(std::size_t i, std::size_t j, const Vector& value);
  void require_vector(const Vector& v, const char* what) const;

  std::size_t dim_;
  std::vector<Vector> table_;
};

struct JacobiViolation {
  std::size_t i, j, k;
  /// [[e_i,e_j],e_k] + [[e_j,e_k],e_i] + [[e_k,e_i],e_j].
  Vector defect;
};

/// All basis triples i < j < k on which the Jacobi identity fails.
std::vector<JacobiViolation> check_jacobi(const LieAlgebra& g);

/// span{[x, y] : x ∈ basis(a), y ∈ basis(b)}.
Subspace bracket_subspaces(const LieAlgebra& g, const Subspace& a, const Subspace& b);

Subspace commutator_ideal(const LieAlgebra& g);
Subspace center(const LieAlgebra& g);

/// g^0 = g, g^k = [g, g^{k-1}]; ends at the first zero term, or at the
/// first repeated term when g is not nilpotent.
std::vector<Subspace> lower_central_series(const LieAlgebra& g);

/// First k with g^k = 0; nullopt when the series stabilises above zero.
std::optional<std::size_t> nilpotency_step(const LieAlgebra& g);

bool is_subalgebra(const LieAlgebra& g, const Subspace& a);
/// [outer, a] ⊆ a.
bool is_ideal_in(const LieAlgebra& g, const Subspace& a, const Subspace& outer);

}  // namespace hypernil
