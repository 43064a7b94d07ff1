#include "hypernil/matrix.hpp"

#include <ostream>
#include <string>

#include "hypernil/error.hpp"

namespace hypernil {

namespace {

void require_same_size(std::size_t a, std::size_t b, const char* what) {
  if (a != b) {
    throw DimensionError(std::string(what) + ": size mismatch " + std::to_string(a) + " vs " +
                         std::to_string(b));
  }
}

}  // namespace

Vector Vector::basis(std::size_t size, std::size_t i) {
  Vector v(size);
  v[i] = 1;
  return v;
}

bool Vector::is_zero() const {
  for (const auto& x : entries_) {
    if (!hypernil::is_zero(x)) return false;
  }
  return true;
}

Vector& Vector::operator+=(const Vector& other) {
  require_same_size(size(), other.size(), "vector addition");
  for (std::size_t i = 0; i < size(); ++i) {
    if (!hypernil::is_zero(other[i])) entries_[i] += other[i];
  }
  return *this;
}

Vector& Vector::operator-=(const Vector& other) {
  require_same_size(size(), other.size(), "vector subtraction");
  for (std::size_t i = 0; i < size(); ++i) {
    if (!hypernil::is_zero(other[i])) entries_[i] -= other[i];
  }
  return *this;
}

Vector& Vector::operator*=(const Rational& scalar) {
  for (auto& x : entries_) x *= scalar;
  return *this;
}

Vector operator+(Vector lhs, const Vector& rhs) { return lhs += rhs; }
Vector operator-(Vector lhs, const Vector& rhs) { return lhs -= rhs; }
Vector operator-(Vector v) { return v *= Rational(-1); }
Vector operator*(const Rational& scalar, Vector v) { return v *= scalar; }

std::ostream& operator<<(std::ostream& os, const Vector& v) {
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ", ";
    os << to_string(v[i]);
  }
  return os << ')';
}

Matrix::Matrix(std::initializer_list<std::initializer_list<Rational>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  entries_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    require_same_size(r.size(), cols_, "matrix literal row");
    entries_.insert(entries_.end(), r.begin(), r.end());
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows, std::size_t cols) {
  Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    require_same_size(rows[r].size(), cols, "matrix row");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Matrix Matrix::from_columns(const std::vector<Vector>& columns, std::size_t rows) {
  Matrix m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    require_same_size(columns[c].size(), rows, "matrix column");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
  }
  return m;
}

Matrix Matrix::unflatten(const Vector& flat, std::size_t n) {
  require_same_size(flat.size(), n * n, "unflatten");
  Matrix m(n, n);
  for (std::size_t i = 0; i < n * n; ++i) m.entries_[i] = flat[i];
  return m;
}

const Rational& Matrix::at(std::size_t r, std::size_t c) const {
  if (r >= rows_ || c >= cols_) {
    throw DimensionError("matrix index (" + std::to_string(r) + ", " + std::to_string(c) +
                         ") out of range for " + std::to_string(rows_) + "x" + std::to_string(cols_));
  }
  return (*this)(r, c);
}

Vector Matrix::row(std::size_t r) const {
  Vector v(cols_);
  for (std::size_t c = 0; c < cols_; ++c) v[c] = (*this)(r, c);
  return v;
}

Vector Matrix::column(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

Vector Matrix::flatten() const { return Vector(entries_); }

bool Matrix::is_zero() const {
  for (const auto& x : entries_) {
    if (!hypernil::is_zero(x)) return false;
  }
  return true;
}

Rational Matrix::trace() const {
  Rational t = 0;
  for (std::size_t i = 0; i < rows_ && i < cols_; ++i) t += (*this)(i, i);
  return t;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Matrix& Matrix::operator+=(const Matrix& other) {
  require_same_size(rows_, other.rows_, "matrix addition (rows)");
  require_same_size(cols_, other.cols_, "matrix addition (cols)");
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (!hypernil::is_zero(other.entries_[i])) entries_[i] += other.entries_[i];
  }
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& other) {
  require_same_size(rows_, other.rows_, "matrix subtraction (rows)");
  require_same_size(cols_, other.cols_, "matrix subtraction (cols)");
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (!hypernil::is_zero(other.entries_[i])) entries_[i] -= other.entries_[i];
  }
  return *this;
}

Matrix& Matrix::operator*=(const Rational& scalar) {
  for (auto& x : entries_) x *= scalar;
  return *this;
}

Matrix operator+(Matrix lhs, const Matrix& rhs) { return lhs += rhs; }
Matrix operator-(Matrix lhs, const Matrix& rhs) { return lhs -= rhs; }
Matrix operator-(Matrix m) { return m *= Rational(-1); }
Matrix operator*(const Rational& scalar, Matrix m) { return m *= scalar; }

Matrix operator*(const Matrix& lhs, const Matrix& rhs) {
  require_same_size(lhs.cols(), rhs.rows(), "matrix product");
  Matrix out(lhs.rows(), rhs.cols());
  Rational term;
  for (std::size_t i = 0; i < lhs.rows(); ++i) {
    for (std::size_t k = 0; k < lhs.cols(); ++k) {
      const Rational& a = lhs(i, k);
      if (is_zero(a)) continue;
      for (std::size_t j = 0; j < rhs.cols(); ++j) {
        const Rational& b = rhs(k, j);
        if (is_zero(b)) continue;
        term = a * b;
        out(i, j) += term;
      }
    }
  }
  return out;
}

Vector operator*(const Matrix& m, const Vector& v) {
  require_same_size(m.cols(), v.size(), "matrix-vector product");
  Vector out(m.rows());
  for (std::size_t c = 0; c < m.cols(); ++c) {
    if (is_zero(v[c])) continue;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (!is_zero(m(r, c))) out[r] += m(r, c) * v[c];
    }
  }
  return out;
}

Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

Matrix direct_sum(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = a(r, c);
  for (std::size_t r = 0; r < b.rows(); ++r)
    for (std::size_t c = 0; c < b.cols(); ++c) out(a.rows() + r, a.cols() + c) = b(r, c);
  return out;
}

std::ostream& operator<<(std::ostream& os, const Matrix& m) {
  os << '[';
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (r) os << ", ";
    os << m.row(r);
  }
  return os << ']';
}

}  // namespace hypernil
