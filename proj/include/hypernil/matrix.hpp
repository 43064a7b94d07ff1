#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <vector>

#include "hypernil/rational.hpp"

namespace hypernil {

/// Dense column vector of rationals.
class Vector {
public:
  Vector() = default;
  explicit Vector(std::size_t size) : entries_(size) {}
  Vector(std::initializer_list<Rational> entries) : entries_(entries) {}
  explicit Vector(std::vector<Rational> entries) : entries_(std::move(entries)) {}

  /// The i-th standard basis vector (0-based).
  static Vector basis(std::size_t size, std::size_t i);

  std::size_t size() const { return entries_.size(); }
  Rational& operator[](std::size_t i) { return entries_[i]; }
  const Rational& operator[](std::size_t i) const { return entries_[i]; }
  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }
  std::span<const Rational> entries() const { return entries_; }

  bool is_zero() const;

  Vector& operator+=(const Vector& other);
  Vector& operator-=(const Vector& other);
  Vector& operator*=(const Rational& scalar);

  friend bool operator==(const Vector&, const Vector&) = default;

private:
  std::vector<Rational> entries_;
};

Vector operator+(Vector lhs, const Vector& rhs);
Vector operator-(Vector lhs, const Vector& rhs);
Vector operator-(Vector v);
Vector operator*(const Rational& scalar, Vector v);

std::ostream& operator<<(std::ostream& os, const Vector& v);

/// Dense row-major matrix of rationals. The shape is fixed at construction.
class Matrix {
public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols);
  static Matrix from_columns(const std::vector<Vector>& columns, std::size_t rows);
  /// Inverse of flatten(): n×n matrix from its row-major n² entries.
  static Matrix unflatten(const Vector& flat, std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  /// Bounds-checked access; throws DimensionError.
  const Rational& at(std::size_t r, std::size_t c) const;

  Vector row(std::size_t r) const;
  Vector column(std::size_t c) const;
  /// Row-major n² coordinates; the ambient space of endomorphism subspaces.
  Vector flatten() const;

  bool is_zero() const;
  Rational trace() const;
  Matrix transpose() const;

  Matrix& operator+=(const Matrix& other);
  Matrix& operator-=(const Matrix& other);
  Matrix& operator*=(const Rational& scalar);

  friend bool operator==(const Matrix&, const Matrix&) = default;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> entries_;
};

Matrix operator+(Matrix lhs, const Matrix& rhs);
Matrix operator-(Matrix lhs, const Matrix& rhs);
Matrix operator-(Matrix m);
Matrix operator*(const Rational& scalar, Matrix m);
/// Skips zero entries of the left factor; the endomorphisms handled here
/// are overwhelmingly sparse.
Matrix operator*(const Matrix& lhs, const Matrix& rhs);
Vector operator*(const Matrix& m, const Vector& v);

/// AB - BA.
Matrix commutator(const Matrix& a, const Matrix& b);

/// Block-diagonal matrix diag(a, b).
Matrix direct_sum(const Matrix& a, const Matrix& b);

std::ostream& operator<<(std::ostream& os, const Matrix& m);

}  // namespace hypernil
