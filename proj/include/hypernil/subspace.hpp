#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "hypernil/matrix.hpp"

namespace hypernil {

struct RrefResult {
  Matrix matrix;
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_columns;
};

/// Unique reduced row-echelon form; pivots are the first nonzero entry in
/// column order.
RrefResult rref(const Matrix& m);

/// Reduced row-echelon basis grown one vector at a time. Rows stay sorted
/// by pivot column and fully reduced after every insertion.
class EchelonBasis {
public:
  explicit EchelonBasis(std::size_t ambient_dim) : ambient_dim_(ambient_dim) {}

  std::size_t ambient_dim() const { return ambient_dim_; }
  std::size_t dim() const { return rows_.size(); }

  /// v minus its components along the pivots; zero iff v is in the span.
  Vector reduce(Vector v) const;
  /// Adds v to the span. Returns false (and leaves the basis alone) when v
  /// already lies in it.
  bool insert(const Vector& v);

  const std::vector<Vector>& rows() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

private:
  std::size_t ambient_dim_;
  std::vector<Vector> rows_;
  std::vector<std::size_t> pivots_;
};

/// Linear subspace of Q^n stored canonically as the RREF of a basis, so
/// equality of subspaces is equality of basis matrices.
class Subspace {
public:
  explicit Subspace(std::size_t ambient_dim) : ambient_dim_(ambient_dim) {}

  static Subspace zero(std::size_t ambient_dim) { return Subspace(ambient_dim); }
  static Subspace full(std::size_t ambient_dim);
  static Subspace span(const std::vector<Vector>& vectors, std::size_t ambient_dim);
  static Subspace from_basis(const EchelonBasis& basis);
  /// {v : m v = 0}.
  static Subspace kernel(const Matrix& m);
  /// Column space of m.
  static Subspace image(const Matrix& m);

  std::size_t ambient_dim() const { return ambient_dim_; }
  std::size_t dim() const { return basis_.size(); }
  bool is_zero() const { return basis_.empty(); }
  bool is_full() const { return basis_.size() == ambient_dim_; }

  const std::vector<Vector>& basis() const& { return basis_; }
  std::vector<Vector> basis() && { return std::move(basis_); }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  Matrix basis_matrix() const { return Matrix::from_rows(basis_, ambient_dim_); }

  bool contains(const Vector& v) const;
  /// Subset test: other ⊆ *this.
  bool contains(const Subspace& other) const;

  /// v reduced against the basis: zero on every pivot coordinate.
  Vector reduce(Vector v) const;
  /// Matrix with kernel equal to this subspace: the non-pivot coordinates
  /// of reduce(v). Realises the projection onto the coordinate complement
  /// spanned by the non-pivot standard vectors.
  Matrix quotient_map() const;

  /// m applied to every basis vector, spanned.
  Subspace mapped(const Matrix& m) const;

  Subspace sum(const Subspace& other) const;
  Subspace intersect(const Subspace& other) const;

  friend bool operator==(const Subspace&, const Subspace&) = default;

private:
  void require_ambient(std::size_t n, const char* what) const;

  std::size_t ambient_dim_;
  std::vector<Vector> basis_;
  std::vector<std::size_t> pivots_;
};

inline Subspace operator+(const Subspace& a, const Subspace& b) { return a.sum(b); }

}  // namespace hypernil
