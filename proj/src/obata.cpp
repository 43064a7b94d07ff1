#include "hypernil/obata.hpp"

#include <string>
#include <utility>

#include "hypernil/error.hpp"

namespace hypernil {

Vector Connection::apply(const Vector& x, const Vector& y) const { return along(x) * y; }

Matrix Connection::along(const Vector& x) const {
  if (x.size() != nabla.size()) throw DimensionError("connection applied to a vector of the wrong length");
  Matrix out(nabla.size(), nabla.size());
  for (std::size_t i = 0; i < nabla.size(); ++i) {
    if (!is_zero(x[i])) out += x[i] * nabla[i];
  }
  return out;
}

Curvature::Curvature(std::size_t dim, std::vector<Matrix> upper) : dim_(dim), upper_(std::move(upper)) {
  if (upper_.size() != dim_ * (dim_ - (dim_ ? 1 : 0)) / 2) {
    throw DimensionError("curvature needs one matrix per pair i < j");
  }
}

std::size_t Curvature::index(std::size_t i, std::size_t j) const {
  // Row-major position of (i, j), i < j, in the strict upper triangle.
  return i * dim_ - i * (i + 1) / 2 + (j - i - 1);
}

Matrix Curvature::operator()(std::size_t i, std::size_t j) const {
  if (i == j) return Matrix(dim_, dim_);
  if (i < j) return upper_[index(i, j)];
  return -upper_[index(j, i)];
}

Vector Curvature::basis_value(std::size_t i, std::size_t j, std::size_t k) const {
  if (i == j) return Vector(dim_);
  if (i < j) return upper_[index(i, j)].column(k);
  return -upper_[index(j, i)].column(k);
}

Vector Curvature::apply(const Vector& x, const Vector& y, const Vector& z) const {
  Vector out(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = i + 1; j < dim_; ++j) {
      const Rational coeff = x[i] * y[j] - x[j] * y[i];
      if (!hypernil::is_zero(coeff)) out += coeff * (upper_[index(i, j)] * z);
    }
  }
  return out;
}

bool Curvature::is_zero() const {
  for (const auto& m : upper_)
    if (!m.is_zero()) return false;
  return true;
}

std::array<int, 3> cyclic_permutation(int alpha) {
  switch (alpha) {
    case 1: return {1, 2, 3};
    case 2: return {2, 3, 1};
    case 3: return {3, 1, 2};
    default: throw PreconditionError("cyclic permutation index must be 1, 2 or 3, got " + std::to_string(alpha));
  }
}

Connection obata_formula(const HypercomplexLieAlgebra& h, int alpha) {
  const auto [a, b, c] = cyclic_permutation(alpha);
  const Matrix& ja = h.j(a);
  const Matrix& jb = h.j(b);
  const Matrix& jc = h.j(c);
  const auto n = h.dim();
  const Rational half(1, 2);

  Connection conn;
  conn.nabla.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Vector ei = Vector::basis(n, i);
    const Matrix ad_x = h.algebra.ad_basis(i);
    const Matrix ad_jx = h.algebra.ad(ja * ei);
    // Y ↦ [X,Y] + J_α[J_α X,Y] − J_β[X,J_β Y] + J_γ[J_α X,J_β Y]
    Matrix m = ad_x;
    m += ja * ad_jx;
    m -= jb * ad_x * jb;
    m += jc * ad_jx * jb;
    conn.nabla.push_back(half * std::move(m));
  }
  return conn;
}

Connection obata_connection(const HypercomplexLieAlgebra& h, int alpha) {
  require_hypercomplex(h);
  return obata_formula(h, alpha);
}

bool verify_cyclic_forms(const HypercomplexLieAlgebra& h) {
  const auto first = obata_formula(h, 1);
  return obata_formula(h, 2) == first && obata_formula(h, 3) == first;
}

bool is_torsion_free(const LieAlgebra& g, const Connection& conn) {
  const auto n = g.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (conn.nabla[i].column(j) - conn.nabla[j].column(i) != g.bracket_basis(i, j)) return false;
  return true;
}

bool preserves_structures(const HypercomplexLieAlgebra& h, const Connection& conn) {
  for (const auto& m : conn.nabla)
    for (int a = 1; a <= 3; ++a)
      if (m * h.j(a) != h.j(a) * m) return false;
  return true;
}

Curvature curvature(const LieAlgebra& g, const Connection& conn) {
  const auto n = g.dim();
  std::vector<Matrix> upper;
  upper.reserve(n * (n ? n - 1 : 0) / 2);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      Matrix r = commutator(conn.nabla[i], conn.nabla[j]);
      const Vector& b = g.bracket_basis(i, j);
      for (std::size_t k = 0; k < n; ++k) {
        if (!is_zero(b[k])) r -= b[k] * conn.nabla[k];
      }
      upper.push_back(std::move(r));
    }
  }
  return Curvature(n, std::move(upper));
}

Vector curvature_2step(const HypercomplexLieAlgebra& h, const Vector& x, const Vector& y, const Vector& z,
                       int alpha) {
  return TwoStepCurvature(h, alpha)(x, y, z);
}

TwoStepCurvature::TwoStepCurvature(HypercomplexLieAlgebra h, int alpha)
    : h_(std::move(h)), permutation_(cyclic_permutation(alpha)) {
  const auto step = nilpotency_step(h_.algebra);
  if (!step || *step > 2) {
    throw PreconditionError("curvature_2step requires an at most 2-step nilpotent Lie algebra");
  }
}

Vector TwoStepCurvature::operator()(const Vector& x, const Vector& y, const Vector& z) const {
  const auto& h = h_;
  const auto [a, b, c] = permutation_;
  const Matrix& ja = h.j(a);
  const Matrix& jb = h.j(b);
  const Matrix& jc = h.j(c);
  auto br = [&](const Vector& u, const Vector& v) { return h.algebra.bracket(u, v); };

  const Vector jax = ja * x;
  const Vector jay = ja * y;
  const Vector jaz = ja * z;
  const Vector jbz = jb * z;

  const Vector jb_yz = jb * br(y, z);
  const Vector jb_jay_z = jb * br(jay, z);
  const Vector jb_y_jbz = jb * br(y, jbz);
  const Vector jb_jay_jbz = jb * br(jay, jbz);
  const Vector jb_xz = jb * br(x, z);
  const Vector jb_jax_z = jb * br(jax, z);
  const Vector jb_x_jbz = jb * br(x, jbz);
  const Vector jb_jax_jbz = jb * br(jax, jbz);
  const Vector jb_xy = jb * br(x, y);

  Vector four_r(h.dim());
  four_r -= jb * br(x, jb_yz);
  four_r += jc * br(jax, jb_yz);
  four_r -= jc * br(x, jb_jay_z);
  four_r -= jb * br(jax, jb_jay_z);
  four_r -= br(x, jb_y_jbz);
  four_r -= ja * br(jax, jb_y_jbz);
  four_r += ja * br(x, jb_jay_jbz);
  four_r -= br(jax, jb_jay_jbz);
  four_r += jb * br(y, jb_xz);
  four_r -= jc * br(jay, jb_xz);
  four_r += jc * br(y, jb_jax_z);
  four_r += jb * br(jay, jb_jax_z);
  four_r += br(y, jb_x_jbz);
  four_r += ja * br(jay, jb_x_jbz);
  four_r -= ja * br(y, jb_jax_jbz);
  four_r += br(jay, jb_jax_jbz);
  four_r -= Rational(2) * br(jb_xy, jbz);
  four_r += Rational(2) * (jc * br(jb_xy, jaz));
  return Rational(1, 4) * std::move(four_r);
}

bool is_flat(const HypercomplexLieAlgebra& h) {
  return curvature(h.algebra, obata_connection(h)).is_zero();
}

bool satisfies_first_bianchi(const Curvature& r) {
  const auto n = r.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        Vector sum = r.basis_value(i, j, k);
        sum += r.basis_value(j, k, i);
        sum += r.basis_value(k, i, j);
        if (!sum.is_zero()) return false;
      }
  return true;
}

bool curvature_commutes_with_structures(const HypercomplexLieAlgebra& h, const Curvature& r) {
  for (const auto& m : r.upper())
    for (int a = 1; a <= 3; ++a)
      if (m * h.j(a) != h.j(a) * m) return false;
  return true;
}

}  // namespace hypernil
