#include "hypernil/subspace.hpp"

#include <algorithm>
#include <string>

#include "hypernil/error.hpp"

namespace hypernil {

RrefResult rref(const Matrix& m) {
  EchelonBasis basis(m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) basis.insert(m.row(r));
  RrefResult out;
  out.rank = basis.dim();
  out.pivot_columns = basis.pivots();
  out.matrix = Matrix(m.rows(), m.cols());
  for (std::size_t r = 0; r < basis.dim(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out.matrix(r, c) = basis.rows()[r][c];
  return out;
}

Vector EchelonBasis::reduce(Vector v) const {
  if (v.size() != ambient_dim_) {
    throw DimensionError("vector of length " + std::to_string(v.size()) +
                         " reduced against subspace of ambient dimension " +
                         std::to_string(ambient_dim_));
  }
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const Rational factor = v[pivots_[r]];
    if (is_zero(factor)) continue;
    const Vector& row = rows_[r];
    for (std::size_t c = pivots_[r]; c < ambient_dim_; ++c) {
      if (!is_zero(row[c])) v[c] -= factor * row[c];
    }
  }
  return v;
}

bool EchelonBasis::insert(const Vector& v) {
  Vector w = reduce(v);
  std::size_t pivot = 0;
  while (pivot < ambient_dim_ && is_zero(w[pivot])) ++pivot;
  if (pivot == ambient_dim_) return false;

  w *= Rational(1) / w[pivot];
  for (auto& row : rows_) {
    const Rational factor = row[pivot];
    if (is_zero(factor)) continue;
    for (std::size_t c = pivot; c < ambient_dim_; ++c) {
      if (!is_zero(w[c])) row[c] -= factor * w[c];
    }
  }
  const auto at = std::lower_bound(pivots_.begin(), pivots_.end(), pivot);
  const auto index = at - pivots_.begin();
  pivots_.insert(at, pivot);
  rows_.insert(rows_.begin() + index, std::move(w));
  return true;
}

Subspace Subspace::full(std::size_t ambient_dim) {
  Subspace s(ambient_dim);
  for (std::size_t i = 0; i < ambient_dim; ++i) {
    s.basis_.push_back(Vector::basis(ambient_dim, i));
    s.pivots_.push_back(i);
  }
  return s;
}

Subspace Subspace::span(const std::vector<Vector>& vectors, std::size_t ambient_dim) {
  EchelonBasis basis(ambient_dim);
  for (const auto& v : vectors) basis.insert(v);
  return from_basis(basis);
}

Subspace Subspace::from_basis(const EchelonBasis& basis) {
  Subspace s(basis.ambient_dim());
  s.basis_ = basis.rows();
  s.pivots_ = basis.pivots();
  return s;
}

Subspace Subspace::kernel(const Matrix& m) {
  const auto reduced = rref(m);
  const std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto p : reduced.pivot_columns) is_pivot[p] = true;

  std::vector<Vector> generators;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    Vector v(n);
    v[free] = 1;
    for (std::size_t r = 0; r < reduced.rank; ++r) v[reduced.pivot_columns[r]] = -reduced.matrix(r, free);
    generators.push_back(std::move(v));
  }
  return span(generators, n);
}

Subspace Subspace::image(const Matrix& m) {
  std::vector<Vector> columns;
  for (std::size_t c = 0; c < m.cols(); ++c) columns.push_back(m.column(c));
  return span(columns, m.rows());
}

void Subspace::require_ambient(std::size_t n, const char* what) const {
  if (n != ambient_dim_) {
    throw DimensionError(std::string(what) + ": ambient dimensions " + std::to_string(ambient_dim_) +
                         " and " + std::to_string(n) + " differ");
  }
}

Vector Subspace::reduce(Vector v) const {
  require_ambient(v.size(), "reduce");
  for (std::size_t r = 0; r < basis_.size(); ++r) {
    const Rational factor = v[pivots_[r]];
    if (hypernil::is_zero(factor)) continue;
    for (std::size_t c = pivots_[r]; c < ambient_dim_; ++c) {
      if (!hypernil::is_zero(basis_[r][c])) v[c] -= factor * basis_[r][c];
    }
  }
  return v;
}

bool Subspace::contains(const Vector& v) const {
  require_ambient(v.size(), "contains");
  return reduce(v).is_zero();
}

bool Subspace::contains(const Subspace& other) const {
  require_ambient(other.ambient_dim_, "contains");
  return std::all_of(other.basis_.begin(), other.basis_.end(),
                     [this](const Vector& v) { return contains(v); });
}

Matrix Subspace::quotient_map() const {
  std::vector<bool> is_pivot(ambient_dim_, false);
  for (auto p : pivots_) is_pivot[p] = true;
  std::vector<std::size_t> free;
  for (std::size_t c = 0; c < ambient_dim_; ++c)
    if (!is_pivot[c]) free.push_back(c);

  // reduce(e_c) restricted to the free coordinates, column by column.
  Matrix q(free.size(), ambient_dim_);
  for (std::size_t row = 0; row < free.size(); ++row) q(row, free[row]) = 1;
  for (std::size_t r = 0; r < basis_.size(); ++r) {
    for (std::size_t row = 0; row < free.size(); ++row) q(row, pivots_[r]) = -basis_[r][free[row]];
  }
  return q;
}

Subspace Subspace::mapped(const Matrix& m) const {
  require_ambient(m.cols(), "mapped");
  EchelonBasis out(m.rows());
  for (const auto& v : basis_) out.insert(m * v);
  return from_basis(out);
}

Subspace Subspace::sum(const Subspace& other) const {
  require_ambient(other.ambient_dim_, "sum");
  EchelonBasis out(ambient_dim_);
  for (const auto& v : basis_) out.insert(v);
  for (const auto& v : other.basis_) out.insert(v);
  return from_basis(out);
}

Subspace Subspace::intersect(const Subspace& other) const {
  require_ambient(other.ambient_dim_, "intersect");
  const Matrix qa = quotient_map();
  const Matrix qb = other.quotient_map();
  Matrix stacked(qa.rows() + qb.rows(), ambient_dim_);
  for (std::size_t r = 0; r < qa.rows(); ++r)
    for (std::size_t c = 0; c < ambient_dim_; ++c) stacked(r, c) = qa(r, c);
  for (std::size_t r = 0; r < qb.rows(); ++r)
    for (std::size_t c = 0; c < ambient_dim_; ++c) stacked(qa.rows() + r, c) = qb(r, c);
  return kernel(stacked);
}

}  // namespace hypernil
