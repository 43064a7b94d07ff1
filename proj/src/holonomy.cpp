#include "hypernil/holonomy.hpp"

#include <string>

#include "hypernil/error.hpp"

namespace hypernil {

namespace {


std::string pair_label(std::size_t i, std::size_t j) {
  return "R(e" + std::to_string(i + 1) + ",e" + std::to_string(j + 1) + ")";
}

}  // namespace

std::vector<Matrix> HolonomyAlgebra::basis() const {
  std::vector<Matrix> out;
  for (const auto& v : span.basis()) out.push_back(Matrix::unflatten(v, n));
  return out;
}

HolonomyAlgebra holonomy_algebra(const LieAlgebra& g, const Connection& conn, const Curvature& r,
                                 std::optional<std::size_t> max_rounds) {
  const auto n = g.dim();
  EchelonBasis echelon(n * n);
  std::vector<Matrix> generators;
  HolonomyAlgebra out;
  out.n = n;

  auto offer = [&](Matrix m, std::string origin) {
    if (echelon.insert(m.flatten())) {
      generators.push_back(std::move(m));
      out.generators_log.push_back(std::move(origin));
    }
  };

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) offer(r(i, j), pair_label(i, j));

  // Semi-naive closure: only brackets involving a generator added in the
  // previous round can produce something new.
  std::size_t fresh_begin = 0;
  while (fresh_begin < generators.size()) {
    if (max_rounds && out.rounds >= *max_rounds) {
      throw Error("holonomy closure did not stabilise within " + std::to_string(*max_rounds) + " rounds");
    }
    ++out.rounds;
    const std::size_t fresh_end = generators.size();
    const std::string round = " (round " + std::to_string(out.rounds) + ")";
    for (std::size_t b = fresh_begin; b < fresh_end; ++b) {
      for (std::size_t a = 0; a < b; ++a) {
        offer(commutator(generators[a], generators[b]),
              "[G" + std::to_string(a + 1) + ",G" + std::to_string(b + 1) + "]" + round);
      }
      for (std::size_t i = 0; i < n; ++i) {
        offer(commutator(conn.nabla[i], generators[b]),
              "[nabla_e" + std::to_string(i + 1) + ",G" + std::to_string(b + 1) + "]" + round);
      }
    }
    fresh_begin = fresh_end;
  }
  out.span = Subspace::from_basis(echelon);
  return out;
}

HolonomyAlgebra holonomy_algebra(const HypercomplexLieAlgebra& h, std::optional<std::size_t> max_rounds) {
  const auto conn = obata_connection(h);
  return holonomy_algebra(h.algebra, conn, curvature(h.algebra, conn), max_rounds);
}

bool is_abelian(const HolonomyAlgebra& hol) {
  const auto basis = hol.basis();
  for (std::size_t a = 0; a < basis.size(); ++a)
    for (std::size_t b = a + 1; b < basis.size(); ++b)
      if (!commutator(basis[a], basis[b]).is_zero()) return false;
  return true;
}

bool has_trivial_product(const HolonomyAlgebra& hol) {
  const auto basis = hol.basis();
  for (const auto& a : basis)
    for (const auto& b : basis)
      if (!(a * b).is_zero()) return false;
  return true;
}

bool in_sl_n_H(const HolonomyAlgebra& hol, const HypercomplexLieAlgebra& h) {
  for (const auto& m : hol.basis()) {
    if (!is_zero(m.trace())) return false;
    for (int a = 1; a <= 3; ++a)
      if (m * h.j(a) != h.j(a) * m) return false;
  }
  return true;
}

bool structures_map_commutator_into_center(const HypercomplexLieAlgebra& h) {
  const auto g1 = commutator_ideal(h.algebra);
  const auto z = center(h.algebra);
  for (int a = 1; a <= 3; ++a)
    if (!z.contains(g1.mapped(h.j(a)))) return false;
  return true;
}

Subspace ad_commutator_span(const LieAlgebra& g) {
  const auto n = g.dim();
  EchelonBasis echelon(n * n);
  for (const auto& b : g.brackets()) echelon.insert((-g.ad(b.value)).flatten());
  return Subspace::from_basis(echelon);
}

bool compare_with_ad(const HolonomyAlgebra& hol, const HypercomplexLieAlgebra& h) {
  if (!structures_map_commutator_into_center(h)) {
    throw PreconditionError("compare_with_ad requires J_a g^1 inside the center for a = 1, 2, 3");
  }
  return hol.span == ad_commutator_span(h.algebra);
}

Subspace curvature_value_bound(const HypercomplexLieAlgebra& h) {
  const auto g1 = commutator_ideal(h.algebra);
  const auto j1 = g1.mapped(h.j(1));
  const auto j2 = g1.mapped(h.j(2));
  const auto j3 = g1.mapped(h.j(3));
  return g1.intersect(j2) + j1.intersect(j3);
}

Subspace block_inclusion(const HolonomyAlgebra& hol, std::size_t target_dim) {
  if (target_dim < hol.n) throw DimensionError("block_inclusion into a smaller space");
  EchelonBasis echelon(target_dim * target_dim);
  for (const auto& m : hol.basis()) {
    Matrix big(target_dim, target_dim);
    for (std::size_t r = 0; r < hol.n; ++r)
      for (std::size_t c = 0; c < hol.n; ++c) big(r, c) = m(r, c);
    echelon.insert(big.flatten());
  }
  return Subspace::from_basis(echelon);
}

}  // namespace hypernil
