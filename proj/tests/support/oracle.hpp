#pragma once

// Straightforward re-derivations used as test oracles. They work on vectors
// through brackets and J only, and share no code with the matrix-based
// implementations they check.

#include <hypernil/holonomy.hpp>

namespace oracle {

using hypernil::HypercomplexLieAlgebra;
using hypernil::Matrix;
using hypernil::Rational;
using hypernil::Subspace;
using hypernil::Vector;

/// Obata formula with the cyclic form starting at alpha.
inline Vector nabla(const HypercomplexLieAlgebra& h, const Vector& x, const Vector& y, int alpha = 1) {
  const int a = alpha;
  const int b = alpha % 3 + 1;
  const int c = b % 3 + 1;
  const auto& g = h.algebra;
  const Matrix& ja = h.j(a);
  const Matrix& jb = h.j(b);
  const Matrix& jc = h.j(c);
  Vector v = g.bracket(x, y);
  v += ja * g.bracket(ja * x, y);
  v -= jb * g.bracket(x, jb * y);
  v += jc * g.bracket(ja * x, jb * y);
  return Rational(1, 2) * v;
}

/// R(x,y)z = ∇_x∇_y z − ∇_y∇_x z − ∇_{[x,y]} z.
inline Vector curvature(const HypercomplexLieAlgebra& h, const Vector& x, const Vector& y, const Vector& z,
                        int alpha = 1) {
  Vector v = nabla(h, x, nabla(h, y, z, alpha), alpha);
  v -= nabla(h, y, nabla(h, x, z, alpha), alpha);
  v -= nabla(h, h.algebra.bracket(x, y), z, alpha);
  return v;
}

/// Matrix of z ↦ R(e_i, e_j) z.
inline Matrix curvature_matrix(const HypercomplexLieAlgebra& h, std::size_t i, std::size_t j) {
  const auto n = h.dim();
  std::vector<Vector> columns;
  for (std::size_t k = 0; k < n; ++k)
    columns.push_back(curvature(h, Vector::basis(n, i), Vector::basis(n, j), Vector::basis(n, k)));
  return Matrix::from_columns(columns, n);
}

inline Matrix nabla_matrix(const HypercomplexLieAlgebra& h, std::size_t i) {
  const auto n = h.dim();
  std::vector<Vector> columns;
  for (std::size_t k = 0; k < n; ++k) columns.push_back(nabla(h, Vector::basis(n, i), Vector::basis(n, k)));
  return Matrix::from_columns(columns, n);
}

/// Holonomy algebra by recomputing the full span of curvature matrices,
/// their commutators and their ∇-commutators until the dimension is stable.
inline Subspace holonomy(const HypercomplexLieAlgebra& h) {
  const auto n = h.dim();
  std::vector<Matrix> nablas;
  for (std::size_t i = 0; i < n; ++i) nablas.push_back(nabla_matrix(h, i));
  std::vector<Vector> generators;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) generators.push_back(curvature_matrix(h, i, j).flatten());
  Subspace span = Subspace::span(generators, n * n);
  while (true) {
    std::vector<Vector> grown = span.basis();
    for (const auto& a : span.basis()) {
      const Matrix ma = Matrix::unflatten(a, n);
      for (const auto& b : span.basis()) grown.push_back(hypernil::commutator(ma, Matrix::unflatten(b, n)).flatten());
      for (const auto& m : nablas) grown.push_back(hypernil::commutator(m, ma).flatten());
    }
    Subspace next = Subspace::span(grown, n * n);
    if (next.dim() == span.dim()) return span;
    span = std::move(next);
  }
}

}  // namespace oracle
