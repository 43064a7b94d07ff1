#include "hypernil/lie_algebra.hpp"

#include <map>
#include <string>
#include <utility>

#include "hypernil/error.hpp"

namespace hypernil {

LieAlgebra::LieAlgebra(std::size_t dim) : dim_(dim), table_(dim * dim, Vector(dim)) {}

void LieAlgebra::require_vector(const Vector& v, const char* what) const {
  if (v.size() != dim_) {
    throw DimensionError(std::string(what) + ": vector of length " + std::to_string(v.size()) +
                         " in a Lie algebra of dimension " + std::to_string(dim_));
  }
}

void LieAlgebra::set(std::size_t i, std::size_t j, const Vector& value) {
  table_[i * dim_ + j] = value;
  table_[j * dim_ + i] = -value;
}

LieAlgebra LieAlgebra::from_brackets(std::size_t dim, const std::vector<BracketEntry>& brackets) {
  LieAlgebra g(dim);
  std::vector<bool> seen(dim * dim, false);
  for (const auto& b : brackets) {
    if (b.i >= dim || b.j >= dim) {
      throw DimensionError("bracket index (" + std::to_string(b.i + 1) + ", " + std::to_string(b.j + 1) +
                           ") out of range for dimension " + std::to_string(dim));
    }
    if (b.i == b.j) {
      throw PreconditionError("bracket [e" + std::to_string(b.i + 1) + ", e" + std::to_string(b.i + 1) +
                              "] must vanish");
    }
    g.require_vector(b.value, "bracket value");
    const auto key = std::min(b.i, b.j) * dim + std::max(b.i, b.j);
    if (seen[key]) {
      throw PreconditionError("bracket of (e" + std::to_string(b.i + 1) + ", e" + std::to_string(b.j + 1) +
                              ") given twice");
    }
    seen[key] = true;
    g.set(b.i, b.j, b.value);
  }
  return g;
}

LieAlgebra LieAlgebra::from_structure_equations(std::size_t dim,
                                                const std::vector<StructureEquation>& equations) {
  LieAlgebra g(dim);
  for (const auto& eq : equations) {
    if (eq.k >= dim) {
      throw DimensionError("structure equation de" + std::to_string(eq.k + 1) + " beyond dimension " +
                           std::to_string(dim));
    }
    for (const auto& t : eq.terms) {
      if (t.i >= dim || t.j >= dim) {
        throw DimensionError("form index out of range in de" + std::to_string(eq.k + 1));
      }
      if (t.i == t.j) {
        throw PreconditionError("degenerate 2-form e" + std::to_string(t.i + 1) + std::to_string(t.j + 1) +
                                " in de" + std::to_string(eq.k + 1));
      }
      Vector v = g.bracket_basis(t.i, t.j);
      v[eq.k] -= t.coefficient;
      g.set(t.i, t.j, v);
    }
  }
  return g;
}

Vector LieAlgebra::bracket(const Vector& x, const Vector& y) const {
  require_vector(x, "bracket");
  require_vector(y, "bracket");
  Vector out(dim_);
  Rational coeff;
  for (std::size_t i = 0; i < dim_; ++i) {
    if (is_zero(x[i])) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (i == j || is_zero(y[j])) continue;
      const Vector& b = table_[i * dim_ + j];
      coeff = x[i] * y[j];
      for (std::size_t k = 0; k < dim_; ++k) {
        if (!is_zero(b[k])) out[k] += coeff * b[k];
      }
    }
  }
  return out;
}

Matrix LieAlgebra::ad(const Vector& x) const {
  require_vector(x, "ad");
  Matrix m(dim_, dim_);
  for (std::size_t j = 0; j < dim_; ++j) {
    const Vector col = bracket(x, Vector::basis(dim_, j));
    for (std::size_t r = 0; r < dim_; ++r) m(r, j) = col[r];
  }
  return m;
}

Matrix LieAlgebra::ad_basis(std::size_t i) const {
  Matrix m(dim_, dim_);
  for (std::size_t j = 0; j < dim_; ++j)
    for (std::size_t r = 0; r < dim_; ++r) m(r, j) = constant(i, j, r);
  return m;
}

bool LieAlgebra::is_abelian() const {
  for (const auto& v : table_)
    if (!v.is_zero()) return false;
  return true;
}

std::vector<BracketEntry> LieAlgebra::brackets() const {
  std::vector<BracketEntry> out;
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = i + 1; j < dim_; ++j)
      if (!bracket_basis(i, j).is_zero()) out.push_back({i, j, bracket_basis(i, j)});
  return out;
}

std::vector<StructureEquation> LieAlgebra::structure_equations() const {
  std::vector<StructureEquation> out(dim_);
  for (std::size_t k = 0; k < dim_; ++k) {
    out[k].k = k;
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = i + 1; j < dim_; ++j)
        if (!is_zero(constant(i, j, k))) out[k].terms.push_back({-constant(i, j, k), i, j});
  }
  return out;
}

std::vector<JacobiViolation> check_jacobi(const LieAlgebra& g) {
  std::vector<JacobiViolation> out;
  const auto n = g.dim();
  for (std::size_t i = 0; i < n; ++i) {
    const Vector ei = Vector::basis(n, i);
    for (std::size_t j = i + 1; j < n; ++j) {
      const Vector ej = Vector::basis(n, j);
      for (std::size_t k = j + 1; k < n; ++k) {
        const Vector ek = Vector::basis(n, k);
        Vector defect = g.bracket(g.bracket_basis(i, j), ek);
        defect += g.bracket(g.bracket_basis(j, k), ei);
        defect += g.bracket(g.bracket_basis(k, i), ej);
        if (!defect.is_zero()) out.push_back({i, j, k, std::move(defect)});
      }
    }
  }
  return out;
}

Subspace bracket_subspaces(const LieAlgebra& g, const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != g.dim() || b.ambient_dim() != g.dim()) {
    throw DimensionError("bracket_subspaces: subspaces of ambient dimension " +
                         std::to_string(a.ambient_dim()) + " and " + std::to_string(b.ambient_dim()) +
                         " in a Lie algebra of dimension " + std::to_string(g.dim()));
  }
  EchelonBasis out(g.dim());
  for (const auto& x : a.basis())
    for (const auto& y : b.basis()) out.insert(g.bracket(x, y));
  return Subspace::from_basis(out);
}

Subspace commutator_ideal(const LieAlgebra& g) {
  EchelonBasis out(g.dim());
  for (const auto& b : g.brackets()) out.insert(b.value);
  return Subspace::from_basis(out);
}

Subspace center(const LieAlgebra& g) {
  const auto n = g.dim();
  // Stack ad(e_i) for all i; the center is the common kernel.
  Matrix stacked(n * n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) stacked(i * n + k, j) = g.constant(i, j, k);
  return Subspace::kernel(stacked);
}

std::vector<Subspace> lower_central_series(const LieAlgebra& g) {
  const auto full = Subspace::full(g.dim());
  std::vector<Subspace> series{full};
  while (!series.back().is_zero()) {
    auto next = bracket_subspaces(g, full, series.back());
    if (next == series.back()) break;
    series.push_back(std::move(next));
  }
  return series;
}

std::optional<std::size_t> nilpotency_step(const LieAlgebra& g) {
  const auto series = lower_central_series(g);
  if (!series.back().is_zero()) return std::nullopt;
  return series.size() - 1;
}

bool is_subalgebra(const LieAlgebra& g, const Subspace& a) {
  return a.contains(bracket_subspaces(g, a, a));
}

bool is_ideal_in(const LieAlgebra& g, const Subspace& a, const Subspace& outer) {
  return a.contains(bracket_subspaces(g, outer, a));
}

}  // namespace hypernil
