#include "hypernil/hypercomplex.hpp"

#include <sstream>

#include "hypernil/error.hpp"

namespace hypernil {

std::array<Matrix, 3> standard_quaternionic_structure(std::size_t blocks) {
  const std::size_t n = 4 * blocks;
  std::array<Matrix, 3> out{Matrix(n, n), Matrix(n, n), Matrix(n, n)};
  // J e_a = s e_b together with J e_b = −s e_a.
  auto pair = [](Matrix& j, std::size_t a, std::size_t b, int s) {
    j(b, a) = s;
    j(a, b) = -s;
  };
  for (std::size_t blk = 0; blk < blocks; ++blk) {
    const std::size_t o = 4 * blk;
    pair(out[0], o, o + 1, 1);
    pair(out[0], o + 2, o + 3, 1);
    pair(out[1], o, o + 2, 1);
    pair(out[1], o + 1, o + 3, -1);
    pair(out[2], o, o + 3, 1);
    pair(out[2], o + 1, o + 2, 1);
  }
  return out;
}

Vector nijenhuis(const LieAlgebra& g, const Matrix& j, const Vector& x, const Vector& y) {
  const Vector jx = j * x;
  const Vector jy = j * y;
  Vector inner = g.bracket(jx, y);
  inner += g.bracket(x, jy);
  Vector out = g.bracket(x, y);
  out += j * inner;
  out -= g.bracket(jx, jy);
  return out;
}

bool is_integrable(const LieAlgebra& g, const Matrix& j) {
  const auto n = g.dim();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      if (!nijenhuis(g, j, Vector::basis(n, a), Vector::basis(n, b)).is_zero()) return false;
  return true;
}

bool squares_to_minus_identity(const Matrix& j) {
  return j.is_square() && j * j == -Matrix::identity(j.rows());
}

std::vector<Violation> validate_hypercomplex(const HypercomplexLieAlgebra& h) {
  std::vector<Violation> out;
  const auto n = h.dim();
  if (n % 4 != 0) out.push_back({"dimension", "dimension " + std::to_string(n) + " is not divisible by 4"});
  bool shapes_ok = true;
  for (int a = 1; a <= 3; ++a) {
    if (h.j(a).rows() != n || h.j(a).cols() != n) {
      out.push_back({"shape", "J" + std::to_string(a) + " is " + std::to_string(h.j(a).rows()) + "x" +
                                  std::to_string(h.j(a).cols()) + ", expected " + std::to_string(n) + "x" +
                                  std::to_string(n)});
      shapes_ok = false;
    }
  }
  if (!shapes_ok) return out;

  for (int a = 1; a <= 3; ++a) {
    if (!squares_to_minus_identity(h.j(a))) {
      out.push_back({"J" + std::to_string(a) + "^2 = -I", "fails"});
    }
  }
  if (h.j(1) * h.j(2) != h.j(3)) out.push_back({"J1 J2 = J3", "fails"});
  if (h.j(2) * h.j(1) != -h.j(3)) out.push_back({"J2 J1 = -J3", "fails"});

  for (int a = 1; a <= 3; ++a) {
    const auto& j = h.j(a);
    for (std::size_t x = 0; x < n; ++x) {
      bool found = false;
      for (std::size_t y = x + 1; y < n && !found; ++y) {
        const Vector value = nijenhuis(h.algebra, j, Vector::basis(n, x), Vector::basis(n, y));
        if (!value.is_zero()) {
          std::ostringstream os;
          os << "N(e" << x + 1 << ", e" << y + 1 << ") = " << value;
          out.push_back({"J" + std::to_string(a) + " integrable", os.str()});
          found = true;
        }
      }
      if (found) break;
    }
  }
  return out;
}

void require_hypercomplex(const HypercomplexLieAlgebra& h) {
  std::ostringstream os;
  const auto jacobi = check_jacobi(h.algebra);
  if (!jacobi.empty()) {
    const auto& v = jacobi.front();
    os << "Jacobi identity fails on (e" << v.i + 1 << ", e" << v.j + 1 << ", e" << v.k + 1 << ")";
  }
  for (const auto& v : validate_hypercomplex(h)) {
    if (os.tellp() > 0) os << "; ";
    os << v.relation << ": " << v.detail;
  }
  if (os.tellp() > 0) {
    throw PreconditionError("'" + h.name + "' is not a hypercomplex Lie algebra: " + os.str());
  }
}

Matrix sphere_structure(const HypercomplexLieAlgebra& h, const std::array<Rational, 3>& y) {
  if (y[0] * y[0] + y[1] * y[1] + y[2] * y[2] != 1) {
    throw PreconditionError("sphere_structure: y is not a unit vector");
  }
  return y[0] * h.j(1) + y[1] * h.j(2) + y[2] * h.j(3);
}

std::size_t default_series_bound(const LieAlgebra& g) { return g.dim() + 1; }

std::vector<Subspace> ascending_series(const LieAlgebra& g, const Matrix& j,
                                       std::optional<std::size_t> max_iterations) {
  const auto n = g.dim();
  const auto bound = max_iterations.value_or(default_series_bound(g));
  std::vector<Matrix> ad;
  std::vector<Matrix> ad_j;
  for (std::size_t i = 0; i < n; ++i) {
    ad.push_back(g.ad_basis(i));
    ad_j.push_back(ad.back() * j);
  }

  std::vector<Subspace> series{Subspace::zero(n)};
  while (!series.back().is_full() && series.size() <= bound) {
    // x ↦ [e_i, x] and x ↦ [e_i, Jx] modulo a_{k-1}, stacked over i.
    const Matrix q = series.back().quotient_map();
    Matrix stacked(2 * n * q.rows(), n);
    std::size_t row = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (const Matrix* m : {&ad[i], &ad_j[i]}) {
        const Matrix block = q * *m;
        for (std::size_t r = 0; r < block.rows(); ++r, ++row)
          for (std::size_t c = 0; c < n; ++c) stacked(row, c) = block(r, c);
      }
    }
    auto next = Subspace::kernel(stacked);
    if (next == series.back()) break;
    series.push_back(std::move(next));
  }
  return series;
}

std::optional<std::size_t> j_nilpotency_step(const LieAlgebra& g, const Matrix& j,
                                             std::optional<std::size_t> max_iterations) {
  const auto series = ascending_series(g, j, max_iterations);
  if (!series.back().is_full()) return std::nullopt;
  return series.size() - 1;
}

bool two_step_criterion(const LieAlgebra& g, const Matrix& j) {
  const auto step = nilpotency_step(g);
  if (step != std::size_t{2}) {
    throw PreconditionError("two_step_criterion requires a 2-step nilpotent Lie algebra");
  }
  return center(g).contains(commutator_ideal(g).mapped(j));
}

Subspace quaternionic_span(const HypercomplexLieAlgebra& h, const Subspace& s) {
  return s + s.mapped(h.j(1)) + s.mapped(h.j(2)) + s.mapped(h.j(3));
}

bool is_quaternionic_subspace(const HypercomplexLieAlgebra& h, const Subspace& s) {
  for (int a = 1; a <= 3; ++a)
    if (!s.contains(s.mapped(h.j(a)))) return false;
  return true;
}

std::vector<Subspace> h_solvable_series(const HypercomplexLieAlgebra& h,
                                        std::optional<std::size_t> max_iterations) {
  const auto bound = max_iterations.value_or(default_series_bound(h.algebra));
  std::vector<Subspace> series{Subspace::full(h.dim())};
  while (!series.back().is_zero() && series.size() <= bound) {
    auto next = quaternionic_span(h, bracket_subspaces(h.algebra, series.back(), series.back()));
    if (next == series.back()) break;
    series.push_back(std::move(next));
  }
  return series;
}

bool h_series_terms_are_nested_ideals(const LieAlgebra& g, const std::vector<Subspace>& series) {
  for (std::size_t k = 1; k < series.size(); ++k) {
    if (!is_subalgebra(g, series[k]) || !is_ideal_in(g, series[k], series[k - 1])) return false;
  }
  return true;
}

std::optional<std::size_t> h_solvability_step(const HypercomplexLieAlgebra& h,
                                              std::optional<std::size_t> max_iterations) {
  const auto series = h_solvable_series(h, max_iterations);
  if (!h_series_terms_are_nested_ideals(h.algebra, series)) {
    throw Error("H-solvable series of '" + h.name + "' is not a chain of nested ideals");
  }
  if (!series.back().is_zero()) return std::nullopt;
  return series.size() - 1;
}

}  // namespace hypernil
