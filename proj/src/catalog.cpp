#include "hypernil/catalog.hpp"

#include <charconv>
#include <tuple>

#include "hypernil/error.hpp"

namespace hypernil::catalog {

namespace {

/// (k, coefficient, i, j), 1-based: coefficient · e^{ij} in de^k.
using EquationTerm = std::tuple<std::size_t, int, std::size_t, std::size_t>;

LieAlgebra from_display(std::size_t dim, const std::vector<EquationTerm>& terms) {
  std::vector<StructureEquation> equations;
  for (const auto& [k, c, i, j] : terms) equations.push_back({k - 1, {{Rational(c), i - 1, j - 1}}});
  return LieAlgebra::from_structure_equations(dim, equations);
}

/// (a, b, s), 1-based: J e_a = s e_b, hence J e_b = −s e_a.
using Pairing = std::tuple<std::size_t, std::size_t, int>;

Matrix from_pairings(std::size_t dim, const std::vector<Pairing>& pairs) {
  Matrix j(dim, dim);
  for (const auto& [a, b, s] : pairs) {
    j(b - 1, a - 1) = s;
    j(a - 1, b - 1) = -s;
  }
  return j;
}

std::size_t parse_parameter(std::string_view name, std::string_view prefix) {
  const auto arg = name.substr(prefix.size() + 1, name.size() - prefix.size() - 2);
  std::size_t value = 0;
  const auto [ptr, ec] = std::from_chars(arg.data(), arg.data() + arg.size(), value);
  if (ec != std::errc{} || ptr != arg.data() + arg.size()) {
    throw Error("bad parameter in catalog name '" + std::string(name) + "'");
  }
  return value;
}

bool is_call(std::string_view name, std::string_view prefix) {
  return name.size() > prefix.size() + 2 && name.substr(0, prefix.size()) == prefix &&
         name[prefix.size()] == '(' && name.back() == ')';
}

HypercomplexLieAlgebra validated(HypercomplexLieAlgebra h) {
  require_hypercomplex(h);
  return h;
}

}  // namespace

std::vector<std::string> names() {
  return {"torus(n)", "n8", "ex_2_2_3", "ex_2_3_3", "ex_nonflat", "ex_semidirect", "ex_kstep(k)", "ex_3step_16"};
}

HypercomplexLieAlgebra get(std::string_view name) {
  if (name == "n8") return n8();
  if (name == "ex_2_2_3") return ex_2_2_3();
  if (name == "ex_2_3_3") return ex_2_3_3();
  if (name == "ex_nonflat") return ex_nonflat();
  if (name == "ex_semidirect") return ex_semidirect();
  if (name == "ex_3step_16") return ex_3step_16();
  if (is_call(name, "torus")) return torus(parse_parameter(name, "torus"));
  if (is_call(name, "ex_kstep")) return ex_kstep(parse_parameter(name, "ex_kstep"));
  throw Error("unknown catalog entry '" + std::string(name) + "'");
}

HypercomplexLieAlgebra torus(std::size_t n) {
  if (n == 0) throw Error("torus(n) needs n >= 1");
  return validated({"torus(" + std::to_string(n) + ")", LieAlgebra(4 * n), standard_quaternionic_structure(n)});
}

HypercomplexLieAlgebra n8() {
  const auto g = from_display(8, {{8, 1, 1, 2}, {8, -1, 3, 4}});
  return validated({"n8",
                    g,
                    {from_pairings(8, {{1, 2, 1}, {3, 4, 1}, {5, 6, 1}, {7, 8, 1}}),
                     from_pairings(8, {{1, 3, 1}, {2, 4, -1}, {5, 7, 1}, {6, 8, -1}}),
                     from_pairings(8, {{1, 4, 1}, {2, 3, 1}, {5, 8, 1}, {6, 7, 1}})}});
}

MuForm mu_2_2_3() {
  // Fiber index 0..3 stands for e9..e12.
  return MuForm::from_terms(8, 4, {{0, 4, 0, 1}, {1, 4, 1, 1}, {2, 4, 2, 1}, {3, 4, 3, 1}});
}

MuForm mu_2_3_3() {
  return MuForm::from_terms(8, 4,
                            {{0, 4, 0, 1},
                             {0, 5, 0, 1},
                             {1, 4, 1, 1},
                             {1, 5, 1, 1},
                             {2, 4, 2, 1},
                             {2, 5, 2, 1},
                             {3, 4, 3, 1},
                             {3, 5, 3, 1}});
}

MuForm mu_nonflat() { return MuForm::from_terms(8, 4, {{4, 5, 0, 1}, {5, 6, 2, -1}, {4, 6, 3, 1}}); }

MuForm mu_nonflat_e10_variant() { return MuForm::from_terms(8, 4, {{4, 5, 0, 1}, {5, 6, 1, -1}, {4, 6, 3, 1}}); }

HypercomplexLieAlgebra ex_2_2_3() { return mu_extension(n8(), mu_2_2_3(), "ex_2_2_3"); }
HypercomplexLieAlgebra ex_2_3_3() { return mu_extension(n8(), mu_2_3_3(), "ex_2_3_3"); }
HypercomplexLieAlgebra ex_nonflat() { return mu_extension(n8(), mu_nonflat(), "ex_nonflat"); }

Representation block_shift(std::size_t base_dim, std::size_t blocks, std::size_t generator) {
  auto rho = zero_representation(base_dim, blocks);
  Matrix& shift = rho.images.at(generator);
  for (std::size_t b = 0; b + 1 < blocks; ++b)
    for (std::size_t d = 0; d < 4; ++d) shift(4 * (b + 1) + d, 4 * b + d) = 1;
  return rho;
}

HypercomplexLieAlgebra ex_semidirect() {
  return semidirect(ex_nonflat(), block_shift(12, 2, 0), "ex_semidirect");
}

HypercomplexLieAlgebra ex_kstep(std::size_t k) {
  if (k < 3) throw Error("ex_kstep(k) needs k >= 3");
  return semidirect(ex_nonflat(), block_shift(12, k, 0), "ex_kstep(" + std::to_string(k) + ")");
}

HypercomplexLieAlgebra ex_3step_16() {
  const auto g = from_display(16, {{5, 1, 1, 2},
                                   {5, -1, 3, 4},
                                   {9, 1, 1, 3},
                                   {9, -1, 4, 2},
                                   {13, -1, 2, 5},
                                   {13, 1, 3, 9},
                                   {14, 1, 1, 5},
                                   {14, 1, 4, 9},
                                   {15, 1, 4, 5},
                                   {15, -1, 1, 9},
                                   {16, -1, 3, 5},
                                   {16, -1, 2, 9}});
  return validated({"ex_3step_16",
                    g,
                    {from_pairings(16, {{1, 2, 1}, {3, 4, 1}, {5, 6, 1}, {7, 8, 1},
                                        {9, 10, 1}, {11, 12, 1}, {13, 14, 1}, {15, 16, 1}}),
                     from_pairings(16, {{1, 3, 1}, {2, 4, -1}, {5, 7, 1}, {6, 8, -1},
                                        {9, 11, 1}, {10, 12, -1}, {13, 15, 1}, {14, 16, -1}}),
                     from_pairings(16, {{1, 4, 1}, {2, 3, 1}, {5, 8, 1}, {6, 7, 1},
                                        {9, 12, 1}, {10, 11, 1}, {13, 16, 1}, {14, 15, 1}})}});
}

}  // namespace hypernil::catalog
