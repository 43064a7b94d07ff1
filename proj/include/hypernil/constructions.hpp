#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "hypernil/obata.hpp"

namespace hypernil {

/// coefficient · e^{ij} ⊗ f_k with 0-based base indices i, j and fiber index k.
struct MuTerm {
  std::size_t i = 0;
  std::size_t j = 0;
  std::size_t k = 0;
  Rational coefficient;
};

/// Antisymmetric bilinear map μ: n × n → R^r, stored on basis pairs.
class MuForm {
public:
  MuForm(std::size_t base_dim, std::size_t fiber_dim);
  static MuForm from_terms(std::size_t base_dim, std::size_t fiber_dim, const std::vector<MuTerm>& terms);

  std::size_t base_dim() const { return base_dim_; }
  std::size_t fiber_dim() const { return fiber_dim_; }

  /// μ(e_i, e_j).
  const Vector& operator()(std::size_t i, std::size_t j) const { return values_[i * base_dim_ + j]; }
  /// μ(x, y).
  Vector apply(const Vector& x, const Vector& y) const;
  /// Adds value to μ(e_i, e_j) and subtracts it from μ(e_j, e_i).
  void add(std::size_t i, std::size_t j, const Vector& value);

  bool is_zero() const;

private:
  std::size_t base_dim_;
  std::size_t fiber_dim_;
  std::vector<Vector> values_;
};

/// A failing instance of I_α μ(X,Y) = μ(J_α X,Y) + μ(X,J_α Y) + I_α μ(J_α X,J_α Y).
struct ExtensionFailure {
  int alpha = 0;
  std::size_t i = 0;
  std::size_t j = 0;
};

/// Every (α, i, j), i < j, on which the integrability condition fails.
std::vector<ExtensionFailure> extension_integrability_failures(const HypercomplexLieAlgebra& base,
                                                               const MuForm& mu);

/// μ(v, ·) = 0 for every v in the commutator ideal of the base.
bool commutator_in_kernel(const LieAlgebra& base, const MuForm& mu);

/// n ⊕ R^r with [X,Y]' = ([X,Y], μ(X,Y)) and J'_α = J_α ⊕ I_α. Throws
/// PreconditionError when r is not a multiple of 4, when n^1 ⊄ ker μ, or
/// when the integrability condition fails (naming the first (α, i, j)).
HypercomplexLieAlgebra mu_extension(const HypercomplexLieAlgebra& base, const MuForm& mu,
                                    std::string name = {});

/// Predicted nilpotency step of J'_α: 3 if μ(J_α x, ·) ≠ 0 for some x in a
/// basis of n^1, else 2. Requires a 2-step base whose J_α is 2-step.
int step_of_extension(const HypercomplexLieAlgebra& base, const MuForm& mu, int alpha);

/// Basis of all μ: n × n → R^r (r = 4·blocks) with n^1 ⊆ ker μ that
/// satisfy the integrability condition for α = 1, 2, 3. For every α in
/// two_step_alphas the extra linear condition μ(J_α n^1, ·) = 0 is added,
/// which keeps J'_α 2-step on a 2-step base.
std::vector<MuForm> integrable_mu_basis(const HypercomplexLieAlgebra& base, std::size_t fiber_dim,
                                        const std::set<int>& two_step_alphas = {});

/// Linear map ρ: g → gl(4k, R), given on basis vectors.
struct Representation {
  std::size_t blocks = 0;
  std::vector<Matrix> images;

  std::size_t fiber_dim() const { return 4 * blocks; }
  /// ρ(x).
  Matrix operator()(const Vector& x) const;
};

/// Zero representation on R^{4k}.
Representation zero_representation(std::size_t base_dim, std::size_t blocks);

/// Homomorphism failures "rho([e_i,e_j]) != [rho(e_i),rho(e_j)]" and
/// quaternionic failures "rho(e_i) I_a != I_a rho(e_i)", 1-based.
std::vector<std::string> representation_failures(const LieAlgebra& base, const Representation& rho);

/// g ⋉_ρ R^{4k} with [(X,V),(Y,W)] = ([X,Y], ρ(X)W − ρ(Y)V) and
/// J̃_α = J_α ⊕ I_α. Throws PreconditionError on a failing pair.
HypercomplexLieAlgebra semidirect(const HypercomplexLieAlgebra& base, const Representation& rho,
                                  std::string name = {});

/// ∇̃_{(X,V)}(Y,W) = (∇_X Y, ρ(X) W) assembled from the base connection.
Connection predicted_semidirect_connection(const HypercomplexLieAlgebra& base, const Representation& rho);

/// Minimal j with ρ(X_1)···ρ(X_j) = 0 for all X_1..X_j, by closing the
/// span of products of generator images. nullopt if products never vanish.
std::optional<std::size_t> product_nilpotency_index(const Representation& rho);

struct SemidirectInvariants {
  Subspace center{0};
  Subspace commutator{0};
  std::optional<std::size_t> m_rho;
  /// max{step(g), m_ρ}; absent when either is undefined.
  std::optional<std::size_t> step;
};

/// Closed-form center, commutator ideal and step of g ⋉_ρ R^{4k}.
SemidirectInvariants predict_semidirect_invariants(const HypercomplexLieAlgebra& base,
                                                   const Representation& rho);

}  // namespace hypernil
