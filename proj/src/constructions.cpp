#include "hypernil/constructions.hpp"

#include <algorithm>
#include <sstream>

#include "hypernil/error.hpp"

namespace hypernil {

namespace {

std::string one_based(std::size_t i) { return std::to_string(i + 1); }

/// Q^a ⊕ Q^b as a subspace of Q^{a+b}.
Subspace direct_sum(const Subspace& first, const Subspace& second) {
  const auto n = first.ambient_dim();
  const auto m = second.ambient_dim();
  EchelonBasis echelon(n + m);
  for (const auto& v : first.basis()) {
    Vector w(n + m);
    for (std::size_t i = 0; i < n; ++i) w[i] = v[i];
    echelon.insert(w);
  }
  for (const auto& v : second.basis()) {
    Vector w(n + m);
    for (std::size_t i = 0; i < m; ++i) w[n + i] = v[i];
    echelon.insert(w);
  }
  return Subspace::from_basis(echelon);
}

/// Coefficients of μ(x, y) in the unknowns u[p(i,j)·r + k], i < j, as an
/// r × (pairs·r) matrix.
class MuUnknowns {
public:
  MuUnknowns(std::size_t base_dim, std::size_t fiber_dim) : n_(base_dim), r_(fiber_dim) {}

  std::size_t count() const { return n_ * (n_ ? n_ - 1 : 0) / 2 * r_; }

  Matrix linear(const Vector& x, const Vector& y) const {
    Matrix m(r_, count());
    std::size_t pair = 0;
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = i + 1; j < n_; ++j, ++pair) {
        const Rational w = x[i] * y[j] - x[j] * y[i];
        if (is_zero(w)) continue;
        for (std::size_t k = 0; k < r_; ++k) m(k, pair * r_ + k) = w;
      }
    }
    return m;
  }

  MuForm form(const Vector& solution) const {
    MuForm mu(n_, r_);
    std::size_t pair = 0;
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = i + 1; j < n_; ++j, ++pair) {
        Vector value(r_);
        for (std::size_t k = 0; k < r_; ++k) value[k] = solution[pair * r_ + k];
        if (!value.is_zero()) mu.add(i, j, value);
      }
    }
    return mu;
  }

private:
  std::size_t n_;
  std::size_t r_;
};

void append_rows(std::vector<Vector>& rows, const Matrix& block) {
  for (std::size_t r = 0; r < block.rows(); ++r) {
    Vector row = block.row(r);
    if (!row.is_zero()) rows.push_back(std::move(row));
  }
}

}  // namespace

MuForm::MuForm(std::size_t base_dim, std::size_t fiber_dim)
    : base_dim_(base_dim), fiber_dim_(fiber_dim), values_(base_dim * base_dim, Vector(fiber_dim)) {}

MuForm MuForm::from_terms(std::size_t base_dim, std::size_t fiber_dim, const std::vector<MuTerm>& terms) {
  MuForm mu(base_dim, fiber_dim);
  for (const auto& t : terms) {
    if (t.i >= base_dim || t.j >= base_dim || t.k >= fiber_dim) {
      throw DimensionError("mu term index out of range");
    }
    if (t.i == t.j) throw PreconditionError("mu term e^{ii} is degenerate");
    Vector value(fiber_dim);
    value[t.k] = t.coefficient;
    mu.add(t.i, t.j, value);
  }
  return mu;
}

Vector MuForm::apply(const Vector& x, const Vector& y) const {
  Vector out(fiber_dim_);
  for (std::size_t i = 0; i < base_dim_; ++i) {
    if (hypernil::is_zero(x[i])) continue;
    for (std::size_t j = 0; j < base_dim_; ++j) {
      if (hypernil::is_zero(y[j])) continue;
      const Vector& v = values_[i * base_dim_ + j];
      if (!v.is_zero()) out += (x[i] * y[j]) * Vector(v);
    }
  }
  return out;
}

void MuForm::add(std::size_t i, std::size_t j, const Vector& value) {
  values_[i * base_dim_ + j] += value;
  values_[j * base_dim_ + i] -= value;
}

bool MuForm::is_zero() const {
  return std::all_of(values_.begin(), values_.end(), [](const Vector& v) { return v.is_zero(); });
}

std::vector<ExtensionFailure> extension_integrability_failures(const HypercomplexLieAlgebra& base,
                                                               const MuForm& mu) {
  const auto n = base.dim();
  const auto fiber = standard_quaternionic_structure(mu.fiber_dim() / 4);
  std::vector<ExtensionFailure> out;
  for (int a = 1; a <= 3; ++a) {
    const Matrix& j = base.j(a);
    const Matrix& i_a = fiber[static_cast<std::size_t>(a - 1)];
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = x + 1; y < n; ++y) {
        const Vector ex = Vector::basis(n, x);
        const Vector ey = Vector::basis(n, y);
        const Vector jx = j * ex;
        const Vector jy = j * ey;
        const Vector lhs = i_a * mu.apply(ex, ey);
        Vector rhs = mu.apply(jx, ey);
        rhs += mu.apply(ex, jy);
        rhs += i_a * mu.apply(jx, jy);
        if (lhs != rhs) out.push_back({a, x, y});
      }
    }
  }
  return out;
}

bool commutator_in_kernel(const LieAlgebra& base, const MuForm& mu) {
  const auto n = base.dim();
  const auto g1 = commutator_ideal(base);
  for (const auto& v : g1.basis())
    for (std::size_t j = 0; j < n; ++j)
      if (!mu.apply(v, Vector::basis(n, j)).is_zero()) return false;
  return true;
}

HypercomplexLieAlgebra mu_extension(const HypercomplexLieAlgebra& base, const MuForm& mu, std::string name) {
  require_hypercomplex(base);
  const auto n = base.dim();
  const auto r = mu.fiber_dim();
  if (mu.base_dim() != n) {
    throw DimensionError("mu is defined on a " + std::to_string(mu.base_dim()) + "-dimensional base, expected " +
                         std::to_string(n));
  }
  if (r % 4 != 0) throw PreconditionError("mu fiber dimension " + std::to_string(r) + " is not a multiple of 4");
  if (!commutator_in_kernel(base.algebra, mu)) {
    throw PreconditionError("mu does not vanish on the commutator ideal of the base");
  }
  const auto failures = extension_integrability_failures(base, mu);
  if (!failures.empty()) {
    const auto& f = failures.front();
    throw PreconditionError("integrability condition fails for alpha = " + std::to_string(f.alpha) + " on (e" +
                            one_based(f.i) + ", e" + one_based(f.j) + ")");
  }

  std::vector<BracketEntry> brackets;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      Vector value(n + r);
      const Vector& b = base.algebra.bracket_basis(i, j);
      for (std::size_t k = 0; k < n; ++k) value[k] = b[k];
      for (std::size_t k = 0; k < r; ++k) value[n + k] = mu(i, j)[k];
      if (!value.is_zero()) brackets.push_back({i, j, std::move(value)});
    }
  }
  const auto fiber = standard_quaternionic_structure(r / 4);
  HypercomplexLieAlgebra out{
      name.empty() ? base.name + "+mu" : std::move(name),
      LieAlgebra::from_brackets(n + r, brackets),
      {direct_sum(base.j(1), fiber[0]), direct_sum(base.j(2), fiber[1]), direct_sum(base.j(3), fiber[2])}};
  require_hypercomplex(out);
  return out;
}

int step_of_extension(const HypercomplexLieAlgebra& base, const MuForm& mu, int alpha) {
  if (!two_step_criterion(base.algebra, base.j(alpha))) {
    throw PreconditionError("step_of_extension requires J" + std::to_string(alpha) + " of the base to be 2-step");
  }
  const auto n = base.dim();
  const auto g1 = commutator_ideal(base.algebra);
  for (const auto& v : g1.basis()) {
    const Vector jv = base.j(alpha) * v;
    for (std::size_t j = 0; j < n; ++j)
      if (!mu.apply(jv, Vector::basis(n, j)).is_zero()) return 3;
  }
  return 2;
}

std::vector<MuForm> integrable_mu_basis(const HypercomplexLieAlgebra& base, std::size_t fiber_dim,
                                        const std::set<int>& two_step_alphas) {
  if (fiber_dim % 4 != 0) throw PreconditionError("fiber dimension must be a multiple of 4");
  const auto n = base.dim();
  const MuUnknowns unknowns(n, fiber_dim);
  const auto fiber = standard_quaternionic_structure(fiber_dim / 4);
  const auto g1 = commutator_ideal(base.algebra);

  std::vector<Vector> rows;
  for (const auto& v : g1.basis())
    for (std::size_t j = 0; j < n; ++j) append_rows(rows, unknowns.linear(v, Vector::basis(n, j)));

  for (int a = 1; a <= 3; ++a) {
    const Matrix& j = base.j(a);
    const Matrix& i_a = fiber[static_cast<std::size_t>(a - 1)];
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = x + 1; y < n; ++y) {
        const Vector ex = Vector::basis(n, x);
        const Vector ey = Vector::basis(n, y);
        const Vector jx = j * ex;
        const Vector jy = j * ey;
        Matrix condition = i_a * unknowns.linear(ex, ey);
        condition -= unknowns.linear(jx, ey);
        condition -= unknowns.linear(ex, jy);
        condition -= i_a * unknowns.linear(jx, jy);
        append_rows(rows, condition);
      }
    }
  }

  for (int a : two_step_alphas) {
    for (const auto& v : g1.basis()) {
      const Vector jv = base.j(a) * v;
      for (std::size_t j = 0; j < n; ++j) append_rows(rows, unknowns.linear(jv, Vector::basis(n, j)));
    }
  }

  const auto solutions = Subspace::kernel(Matrix::from_rows(rows, unknowns.count()));
  std::vector<MuForm> out;
  for (const auto& s : solutions.basis()) out.push_back(unknowns.form(s));
  return out;
}

Matrix Representation::operator()(const Vector& x) const {
  Matrix out(fiber_dim(), fiber_dim());
  for (std::size_t i = 0; i < images.size(); ++i)
    if (!is_zero(x[i])) out += x[i] * images[i];
  return out;
}

Representation zero_representation(std::size_t base_dim, std::size_t blocks) {
  return {blocks, std::vector<Matrix>(base_dim, Matrix(4 * blocks, 4 * blocks))};
}

std::vector<std::string> representation_failures(const LieAlgebra& base, const Representation& rho) {
  std::vector<std::string> out;
  const auto n = base.dim();
  const auto m = rho.fiber_dim();
  if (rho.images.size() != n) {
    out.push_back("rho has " + std::to_string(rho.images.size()) + " images, expected " + std::to_string(n));
    return out;
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (rho.images[i].rows() != m || rho.images[i].cols() != m) {
      out.push_back("rho(e" + one_based(i) + ") is not " + std::to_string(m) + "x" + std::to_string(m));
    }
  }
  if (!out.empty()) return out;

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (rho(base.bracket_basis(i, j)) != commutator(rho.images[i], rho.images[j])) {
        out.push_back("rho([e" + one_based(i) + ",e" + one_based(j) + "]) != [rho(e" + one_based(i) + "),rho(e" +
                      one_based(j) + ")]");
      }
  const auto quaternions = standard_quaternionic_structure(rho.blocks);
  for (std::size_t i = 0; i < n; ++i)
    for (int a = 1; a <= 3; ++a) {
      const Matrix& q = quaternions[static_cast<std::size_t>(a - 1)];
      if (rho.images[i] * q != q * rho.images[i]) {
        out.push_back("rho(e" + one_based(i) + ") I" + std::to_string(a) + " != I" + std::to_string(a) + " rho(e" +
                      one_based(i) + ")");
      }
    }
  return out;
}

HypercomplexLieAlgebra semidirect(const HypercomplexLieAlgebra& base, const Representation& rho, std::string name) {
  require_hypercomplex(base);
  const auto failures = representation_failures(base.algebra, rho);
  if (!failures.empty()) throw PreconditionError("invalid representation: " + failures.front());

  const auto n = base.dim();
  const auto m = rho.fiber_dim();
  std::vector<BracketEntry> brackets;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const Vector& b = base.algebra.bracket_basis(i, j);
      if (b.is_zero()) continue;
      Vector value(n + m);
      for (std::size_t k = 0; k < n; ++k) value[k] = b[k];
      brackets.push_back({i, j, std::move(value)});
    }
    // [e_i, f_a] = ρ(e_i) f_a.
    for (std::size_t a = 0; a < m; ++a) {
      Vector value(n + m);
      for (std::size_t k = 0; k < m; ++k) value[n + k] = rho.images[i](k, a);
      if (!value.is_zero()) brackets.push_back({i, n + a, std::move(value)});
    }
  }
  const auto fiber = standard_quaternionic_structure(rho.blocks);
  HypercomplexLieAlgebra out{
      name.empty() ? base.name + "x|rho" : std::move(name),
      LieAlgebra::from_brackets(n + m, brackets),
      {direct_sum(base.j(1), fiber[0]), direct_sum(base.j(2), fiber[1]), direct_sum(base.j(3), fiber[2])}};
  require_hypercomplex(out);
  return out;
}

Connection predicted_semidirect_connection(const HypercomplexLieAlgebra& base, const Representation& rho) {
  const auto conn = obata_connection(base);
  const auto n = base.dim();
  const auto m = rho.fiber_dim();
  Connection out;
  for (std::size_t i = 0; i < n; ++i) out.nabla.push_back(direct_sum(conn.nabla[i], rho.images[i]));
  for (std::size_t a = 0; a < m; ++a) out.nabla.emplace_back(n + m, n + m);
  return out;
}

std::optional<std::size_t> product_nilpotency_index(const Representation& rho) {
  const auto m = rho.fiber_dim();
  std::vector<Matrix> generators;
  for (const auto& image : rho.images)
    if (!image.is_zero()) generators.push_back(image);

  // products holds a spanning set of all j-fold products.
  std::vector<Matrix> products = generators;
  for (std::size_t j = 1; j <= m + 1; ++j) {
    if (products.empty()) return j;
    EchelonBasis echelon(m * m);
    std::vector<Matrix> next;
    for (const auto& p : products)
      for (const auto& g : generators) {
        Matrix q = p * g;
        if (echelon.insert(q.flatten())) next.push_back(std::move(q));
      }
    products = std::move(next);
  }
  return std::nullopt;
}

SemidirectInvariants predict_semidirect_invariants(const HypercomplexLieAlgebra& base, const Representation& rho) {
  const auto n = base.dim();
  const auto m = rho.fiber_dim();

  // ker ρ ⊆ g: kernel of x ↦ flatten(ρ(x)).
  Matrix rho_flat(m * m, n);
  for (std::size_t i = 0; i < n; ++i) {
    const Vector f = rho.images[i].flatten();
    for (std::size_t r = 0; r < m * m; ++r) rho_flat(r, i) = f[r];
  }
  const auto kernel_rho = Subspace::kernel(rho_flat);

  // ∩_Y ker ρ(Y) and ρ(g) R^{4k}.
  Matrix stacked(n * m, m);
  std::vector<Vector> image_columns;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t r = 0; r < m; ++r)
      for (std::size_t c = 0; c < m; ++c) stacked(i * m + r, c) = rho.images[i](r, c);
    for (std::size_t c = 0; c < m; ++c) image_columns.push_back(rho.images[i].column(c));
  }

  SemidirectInvariants out;
  out.center = direct_sum(center(base.algebra).intersect(kernel_rho), Subspace::kernel(stacked));
  out.commutator = direct_sum(commutator_ideal(base.algebra), Subspace::span(image_columns, m));
  out.m_rho = product_nilpotency_index(rho);
  const auto base_step = nilpotency_step(base.algebra);
  if (out.m_rho && base_step) out.step = std::max(*base_step, *out.m_rho);
  return out;
}

}  // namespace hypernil
