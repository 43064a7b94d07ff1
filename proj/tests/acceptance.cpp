// Runs the acceptance criteria and prints one PASS/FAIL line per criterion.

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <hypernil/catalog.hpp>
#include <hypernil/cli.hpp>
#include <hypernil/dsl.hpp>
#include <hypernil/error.hpp>
#include <hypernil/holonomy.hpp>
#include <hypernil/obata.hpp>
#include <iostream>
#include <sstream>

#include "support/generators.hpp"
#include "support/oracle.hpp"

using namespace hypernil;

namespace {

/// Collects the first few failed checks of one criterion.
class Checker {
public:
  void operator()(bool ok, const std::string& what) {
    ++checks_;
    if (ok) return;
    if (failures_.size() < 5) failures_.push_back(what);
    ++failed_;
  }
  bool ok() const { return failed_ == 0 && checks_ > 0; }
  std::string summary() const {
    std::ostringstream os;
    os << checks_ << " checks";
    if (failed_ > 0) {
      os << ", " << failed_ << " failed:";
      for (const auto& f : failures_) os << " [" << f << "]";
    }
    return os.str();
  }

private:
  std::size_t checks_ = 0;
  std::size_t failed_ = 0;
  std::vector<std::string> failures_;
};

Vector e(std::size_t n, std::size_t i) { return Vector::basis(n, i - 1); }

std::vector<HypercomplexLieAlgebra> two_step_entries() {
  return {catalog::n8(), catalog::ex_2_2_3(),
          catalog::ex_2_3_3(), catalog::ex_nonflat(), catalog::ex_semidirect()};
}

std::vector<HypercomplexLieAlgebra> exactly_two_step(std::vector<HypercomplexLieAlgebra> hs) {
  std::erase_if(hs, [](const auto& h) { return nilpotency_step(h.algebra) != 2; });
  return hs;
}

std::vector<HypercomplexLieAlgebra> random_sample(std::uint32_t seed, std::size_t count) {
  std::vector<HypercomplexLieAlgebra> out;
  const auto bases = std::array{catalog::n8(), catalog::ex_2_2_3()};
  for (std::size_t b = 0; b < bases.size(); ++b)
    for (auto& ext : gen::random_extensions(seed + static_cast<std::uint32_t>(b), bases[b], count / 2))
      out.push_back(std::move(ext.algebra));
  return out;
}

std::string name_of(const HypercomplexLieAlgebra& h) { return h.name.empty() ? "random" : h.name; }

void pinned_curvature(Checker& check) {
  const auto h = catalog::ex_nonflat();
  const auto x = e(12, 8), y = e(12, 1);
  const Vector expected = Rational(-1, 4) * e(12, 9);
  const auto r = curvature(h.algebra, obata_connection(h));
  check(r.apply(x, y, y) == expected, "curvature R(e8,e1)e1");
  check(oracle::curvature(h, x, y, y) == expected, "oracle R(e8,e1)e1");
  for (int alpha = 1; alpha <= 3; ++alpha)
    check(curvature_2step(h, x, y, y, alpha) == expected, "curvature_2step permutation " + std::to_string(alpha));
}

void flatness_table(Checker& check) {
  for (const auto& h : {catalog::n8(), catalog::ex_2_2_3(), catalog::ex_2_3_3(), catalog::torus(1),
                        catalog::torus(2), catalog::torus(3)})
    check(is_flat(h), name_of(h) + " flat");
  for (const auto& h : {catalog::ex_nonflat(), catalog::ex_semidirect(), catalog::ex_kstep(3), catalog::ex_kstep(4),
                        catalog::ex_3step_16()})
    check(!is_flat(h), name_of(h) + " not flat");
}

void j_step_table(Checker& check) {
  const std::vector<std::pair<HypercomplexLieAlgebra, std::array<std::size_t, 3>>> table{
      {catalog::n8(), {2, 2, 2}},
      {catalog::ex_2_2_3(), {2, 2, 3}},
      {catalog::ex_2_3_3(), {2, 3, 3}},
      {catalog::ex_nonflat(), {3, 3, 3}},
  };
  for (const auto& [h, steps] : table) {
    for (int a = 1; a <= 3; ++a) {
      const auto label = h.name + " J" + std::to_string(a);
      const auto series = ascending_series(h.algebra, h.j(a));
      const auto step = j_nilpotency_step(h.algebra, h.j(a));
      const auto expected = steps[static_cast<std::size_t>(a - 1)];
      check(step == expected, label + " step");
      check(series.size() == expected + 1 && series.back().is_full(), label + " series ends at g");
      check(two_step_criterion(h.algebra, h.j(a)) == (expected == 2), label + " two-step criterion");
    }
  }
}

void two_step_curvature_formula(Checker& check) {
  auto sample = exactly_two_step(two_step_entries());
  const auto random = random_sample(401, 20);
  sample.insert(sample.end(), random.begin(), random.end());
  check(random.size() >= 20, "at least 20 random extensions");
  for (const auto& h : sample) {
    const auto n = h.dim();
    const auto r = curvature(h.algebra, obata_connection(h));
    const std::array formulas{TwoStepCurvature(h, 1), TwoStepCurvature(h, 2), TwoStepCurvature(h, 3)};
    bool equal = true;
    for (std::size_t i = 0; i < n && equal; ++i)
      for (std::size_t j = 0; j < n && equal; ++j)
        for (std::size_t k = 0; k < n && equal; ++k) {
          const auto direct = r.basis_value(i, j, k);
          for (const auto& formula : formulas)
            equal = equal && formula(Vector::basis(n, i), Vector::basis(n, j), Vector::basis(n, k)) == direct;
        }
    check(equal, name_of(h) + " closed form equals direct curvature");
  }
}

void h_solvability(Checker& check) {
  for (const auto& h : exactly_two_step(two_step_entries())) {
    const auto series = h_solvable_series(h);
    const auto step = h_solvability_step(h);
    check(step.has_value() && *step <= 3, h.name + " H-step at most 3");
    check(series.size() >= 2 && series[1].dim() < h.dim(), h.name + " first term proper");
    for (std::size_t k = 1; k < series.size(); ++k) {
      check(is_subalgebra(h.algebra, series[k]), h.name + " term " + std::to_string(k) + " subalgebra");
      check(is_ideal_in(h.algebra, series[k], series[k - 1]), h.name + " term " + std::to_string(k) + " ideal");
      check(is_quaternionic_subspace(h, series[k]), h.name + " term " + std::to_string(k) + " quaternionic");
    }
  }
}

void holonomy_of_two_step(Checker& check) {
  auto sample = exactly_two_step(two_step_entries());
  const auto random = random_sample(601, 10);
  sample.insert(sample.end(), random.begin(), random.end());
  for (const auto& h : sample) {
    const auto hol = holonomy_algebra(h);
    check(hol.span == oracle::holonomy(h), name_of(h) + " matches naive closure");
    check(is_abelian(hol), name_of(h) + " abelian");
    check(has_trivial_product(hol), name_of(h) + " trivial product");
    check(in_sl_n_H(hol, h), name_of(h) + " in sl(n,H)");
  }
  check(holonomy_algebra(catalog::ex_nonflat()).dim() == 5, "ex_nonflat holonomy has dimension 5");
}

void semidirect_products(Checker& check) {
  const auto base = catalog::ex_nonflat();
  const auto rho = catalog::block_shift(12, 2, 0);
  const auto h = catalog::ex_semidirect();
  const auto conn = obata_connection(h);
  const auto base_conn = obata_connection(base);
  bool block_formula = true;
  for (std::size_t i = 0; i < 20; ++i)
    for (std::size_t j = 0; j < 20; ++j) {
      Vector expected(20);
      if (i < 12 && j < 12) {
        const auto v = base_conn.apply(Vector::basis(12, i), Vector::basis(12, j));
        for (std::size_t c = 0; c < 12; ++c) expected[c] = v[c];
      } else if (i < 12) {
        const auto w = rho(Vector::basis(12, i)) * Vector::basis(8, j - 12);
        for (std::size_t c = 0; c < 8; ++c) expected[12 + c] = w[c];
      }
      const auto actual = conn.apply(Vector::basis(20, i), Vector::basis(20, j));
      block_formula = block_formula && actual == expected &&
                      oracle::nabla(h, Vector::basis(20, i), Vector::basis(20, j)) == expected;
    }
  check(block_formula, "semidirect connection is (nabla_X Y, rho(X) W)");
  check(conn == predicted_semidirect_connection(base, rho), "predicted_semidirect_connection");

  const auto hol = holonomy_algebra(h);
  const auto hol_base = holonomy_algebra(base);
  check(hol.dim() == 5, "ex_semidirect holonomy has dimension 5");
  check(hol.span == block_inclusion(hol_base, 20), "holonomy equals block inclusion of ex_nonflat holonomy");
  check(block_inclusion(hol_base, 20).dim() == hol_base.dim(), "block inclusion is injective");

  for (std::size_t k = 3; k <= 10; ++k) {
    const auto hk = catalog::ex_kstep(k);
    const auto m = product_nilpotency_index(catalog::block_shift(12, k, 0));
    const auto step = nilpotency_step(hk.algebra);
    check(m == k, "m_rho = " + std::to_string(k));
    check(step == k && m && step == std::max<std::size_t>(2, *m), "ex_kstep(" + std::to_string(k) + ") step");
  }
}

void three_step_example(Checker& check) {
  const auto h = catalog::ex_3step_16();
  const auto& g = h.algebra;
  const auto r = curvature(g, obata_connection(h));
  bool ad_formula = true;
  for (std::size_t i = 0; i < 16; ++i)
    for (std::size_t j = 0; j < 16; ++j) {
      const Matrix ad = g.ad(g.bracket_basis(i, j));
      ad_formula = ad_formula && r(i, j) == Rational(-1) * ad && oracle::curvature_matrix(h, i, j) == Rational(-1) * ad;
    }
  check(ad_formula, "R(e_i,e_j) = -ad([e_i,e_j])");
  const auto hol = holonomy_algebra(h);
  check(compare_with_ad(hol, h), "holonomy = span{ad_z : z in g^1}");
  std::vector<Vector> ads;
  for (const auto& z : commutator_ideal(g).basis()) ads.push_back(g.ad(z).flatten());
  check(hol.span == Subspace::span(ads, 256), "holonomy equals ad of a commutator basis");
  check(is_abelian(hol), "abelian");
  check(in_sl_n_H(hol, h), "in sl(n,H)");
  check(nilpotency_step(g) == 3, "3-step");
  check(structures_map_commutator_into_center(h), "J_alpha g^1 in center");
  for (int a = 1; a <= 3; ++a)
    for (const auto& v : commutator_ideal(g).basis()) check(center(g).contains(h.j(a) * v), "J g^1 in z direct");
}

void flat_when_some_structure_is_two_step(Checker& check) {
  std::size_t with_two_step = 0;
  std::size_t without = 0;
  for (const auto& ext : gen::random_extensions(901, catalog::n8(), 60)) {
    const auto& h = ext.algebra;
    bool any_two_step = false;
    for (int a = 1; a <= 3; ++a) any_two_step = any_two_step || j_nilpotency_step(h.algebra, h.j(a)) == 2;
    if (any_two_step) {
      ++with_two_step;
      check(curvature(h.algebra, obata_connection(h)).is_zero(), "extension with a 2-step structure is flat");
    } else {
      ++without;
    }
  }
  check(with_two_step >= 10, "non-vacuous: " + std::to_string(with_two_step) + " extensions with a 2-step structure");
  check(without >= 1, "sample also contains extensions without a 2-step structure");
}

void connection_invariants(Checker& check) {
  auto sample = std::vector{catalog::torus(1),      catalog::torus(2),         catalog::n8(),
                            catalog::ex_2_2_3(),    catalog::ex_2_3_3(),       catalog::ex_nonflat(),
                            catalog::ex_semidirect(), catalog::ex_kstep(3),    catalog::ex_3step_16()};
  const auto random = random_sample(1001, 4);
  sample.insert(sample.end(), random.begin(), random.end());
  for (const auto& h : sample) {
    const auto conn = obata_connection(h);
    const auto r = curvature(h.algebra, conn);
    const auto name = name_of(h);
    check(is_torsion_free(h.algebra, conn), name + " torsion-free");
    check(preserves_structures(h, conn), name + " nabla J = 0");
    check(verify_cyclic_forms(h), name + " cyclic forms agree");
    check(satisfies_first_bianchi(r), name + " first Bianchi identity");
    check(curvature_commutes_with_structures(h, r), name + " curvature commutes with J");
  }
}

std::string read(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void parser(Checker& check) {
  const std::string dir = HYPERNIL_TEST_DATA;
  for (const auto* name : {"n8", "ex_2_2_3", "ex_2_3_3", "ex_nonflat", "ex_3step_16"}) {
    const auto spec = parse_dsl(read(dir + "/" + name + ".tex"));
    const auto h = catalog::get(name);
    check(spec.algebra == h.algebra && spec.structures == h.structures, std::string(name) + " fixture parses exactly");
  }
  for (const auto& name : catalog::names()) {
    std::string concrete = name;
    if (name == "torus(n)") concrete = "torus(2)";
    if (name == "ex_kstep(k)") concrete = "ex_kstep(4)";
    for (auto form : {AlgebraSpec::Form::structure_equations, AlgebraSpec::Form::brackets}) {
      const auto spec = to_spec(catalog::get(concrete), form);
      const auto text = serialize_dsl(spec);
      check(parse_dsl(text) == spec, concrete + " parse(serialize) is the identity");
      check(serialize_dsl(parse_dsl(text)) == text, concrete + " serialization is stable");
    }
  }

  const std::vector<std::tuple<std::string, std::string, std::string>> malformed{
      {"bad1.dsl", "de8 = e12 -- e34\n", "line 1, column 12"},
      {"bad2.dsl", "dim: 4\nde3 = e1\n", "line 2, column 8"},
      {"bad3.dsl", "de5 = e12\nde5 = e34\n", "line 2, column 3"},
      {"bad4.json", "{\n  \"dim\": 4,\n  \"brackets\": [,]\n}\n", "line 3, column"},
  };
  for (const auto& [file, content, position] : malformed) {
    const auto path = std::filesystem::temp_directory_path() / ("hypernil_acceptance_" + file);
    std::ofstream(path) << content;
    std::ostringstream out, err;
    const int code = cli::run({"validate", path.string()}, out, err);
    std::filesystem::remove(path);
    check(code == 1, file + " exits 1 (got " + std::to_string(code) + ")");
    check(err.str().find(position) != std::string::npos, file + " reports " + position + ": " + err.str());
  }
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Checker&)>>> criteria{
      {"pinned curvature value R(e8,e1)e1 = -1/4 e9", pinned_curvature},
      {"flatness table", flatness_table},
      {"J-step table", j_step_table},
      {"closed-form 2-step curvature equals direct curvature", two_step_curvature_formula},
      {"H-solvability of 2-step algebras", h_solvability},
      {"holonomy of 2-step algebras", holonomy_of_two_step},
      {"semidirect products and k-step examples", semidirect_products},
      {"3-step example with J g^1 in the center", three_step_example},
      {"extensions with a 2-step structure are flat", flat_when_some_structure_is_two_step},
      {"Obata connection invariants", connection_invariants},
      {"parser and serializer", parser},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Checker check;
    std::string detail;
    const auto started = std::chrono::steady_clock::now();
    try {
      criteria[i].second(check);
      detail = check.summary();
    } catch (const std::exception& ex) {
      check(false, "exception");
      detail = std::string("exception: ") + ex.what();
    }
    const auto ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - started).count();
    detail += ", " + std::to_string(ms) + " ms";
    const bool ok = check.ok();
    if (!ok) ++failed;
    std::cout << (ok ? "PASS" : "FAIL") << " " << i + 1 << ". " << criteria[i].first << " (" << detail << ")\n";
  }
  std::cout << criteria.size() - static_cast<std::size_t>(failed) << "/" << criteria.size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
