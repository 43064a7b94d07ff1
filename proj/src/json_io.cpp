#include "hypernil/json_io.hpp"

#include <json.hpp>

#include "hypernil/error.hpp"

namespace hypernil {

namespace {

using nlohmann::json;

[[noreturn]] void schema_error(const std::string& path, const std::string& message) {
  throw ParseError(path + ": " + message, 0, 0);
}

json parse_document(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    // Translate the byte offset into a line and column.
    const std::size_t offset = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    std::size_t line = 1;
    std::size_t column = 1;
    for (std::size_t n = 0; n < offset; ++n) {
      if (text[n] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    std::string what = e.what();
    if (const auto colon = what.rfind(": "); colon != std::string::npos) what = what.substr(colon + 2);
    throw ParseError("invalid JSON: " + what, line, column);
  }
}

const json& member(const json& object, const std::string& key, const std::string& path) {
  if (!object.is_object()) schema_error(path, "expected an object");
  const auto it = object.find(key);
  if (it == object.end()) schema_error(path, "missing \"" + key + "\"");
  return *it;
}

std::size_t count(const json& value, const std::string& path) {
  if (!value.is_number_unsigned()) schema_error(path, "expected a non-negative integer");
  return value.get<std::size_t>();
}

std::size_t index(const json& value, std::size_t limit, const std::string& path) {
  const auto i = count(value, path);
  if (i == 0 || i > limit) schema_error(path, "index " + std::to_string(i) + " outside 1.." + std::to_string(limit));
  return i - 1;
}

Rational rational(const json& value, const std::string& path) {
  try {
    if (value.is_string()) return parse_rational(value.get<std::string>());
    if (value.is_number_integer()) return Rational(std::to_string(value.get<long long>()));
  } catch (const ParseError& e) {
    schema_error(path, e.what());
  }
  schema_error(path, "expected a rational string \"p/q\" or an integer");
}

json rational_json(const Rational& r) { return to_string(r); }

json matrix_json(const Matrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(rational_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix matrix_from(const json& value, std::size_t n, const std::string& path) {
  if (!value.is_array() || value.size() != n) schema_error(path, "expected " + std::to_string(n) + " rows");
  Matrix m(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    const auto row_path = path + "[" + std::to_string(r) + "]";
    const auto& row = value[r];
    if (!row.is_array() || row.size() != n) schema_error(row_path, "expected " + std::to_string(n) + " entries");
    for (std::size_t c = 0; c < n; ++c) m(r, c) = rational(row[c], row_path + "[" + std::to_string(c) + "]");
  }
  return m;
}

/// {"k": "p/q"} → vector of the given size; keys are 1-based.
Vector coefficients(const json& value, std::size_t size, const std::string& path) {
  if (!value.is_object()) schema_error(path, "expected an object of coefficients");
  Vector v(size);
  for (const auto& [key, c] : value.items()) {
    const auto key_path = path + "." + key;
    std::size_t k = 0;
    try {
      std::size_t used = 0;
      k = std::stoul(key, &used);
      if (used != key.size()) k = 0;
    } catch (const std::exception&) {
      k = 0;
    }
    if (k == 0 || k > size) schema_error(key_path, "key must be an index in 1.." + std::to_string(size));
    v[k - 1] = rational(c, key_path);
  }
  return v;
}

json coefficients_json(const Vector& v) {
  json out = json::object();
  for (std::size_t k = 0; k < v.size(); ++k)
    if (!is_zero(v[k])) out[std::to_string(k + 1)] = rational_json(v[k]);
  return out;
}

}  // namespace

std::string serialize_json(const AlgebraSpec& spec) {
  json doc;
  doc["dim"] = spec.dim();
  doc["name"] = spec.name;
  if (!spec.notes.empty()) doc["notes"] = spec.notes;
  json brackets = json::array();
  for (const auto& b : spec.algebra.brackets()) {
    brackets.push_back({{"i", b.i + 1}, {"j", b.j + 1}, {"coeffs", coefficients_json(b.value)}});
  }
  doc["brackets"] = std::move(brackets);
  json structures = json::array();
  for (const auto& j : spec.structures) structures.push_back(matrix_json(j));
  doc["J"] = std::move(structures);
  return doc.dump(2) + "\n";
}

AlgebraSpec parse_json(std::string_view text) {
  const json doc = parse_document(text);
  AlgebraSpec spec;
  spec.form = AlgebraSpec::Form::brackets;
  const auto n = count(member(doc, "dim", "$"), "$.dim");
  if (n == 0) schema_error("$.dim", "dimension must be positive");
  if (const auto it = doc.find("name"); it != doc.end()) {
    if (!it->is_string()) schema_error("$.name", "expected a string");
    spec.name = it->get<std::string>();
  }
  if (const auto it = doc.find("notes"); it != doc.end()) {
    if (!it->is_string()) schema_error("$.notes", "expected a string");
    spec.notes = it->get<std::string>();
  }
  const auto& brackets = member(doc, "brackets", "$");
  if (!brackets.is_array()) schema_error("$.brackets", "expected an array");
  std::vector<BracketEntry> entries;
  for (std::size_t e = 0; e < brackets.size(); ++e) {
    const auto path = "$.brackets[" + std::to_string(e) + "]";
    const auto i = index(member(brackets[e], "i", path), n, path + ".i");
    const auto j = index(member(brackets[e], "j", path), n, path + ".j");
    if (i == j) schema_error(path, "bracket of a basis vector with itself");
    Vector value = coefficients(member(brackets[e], "coeffs", path), n, path + ".coeffs");
    if (i < j) {
      entries.push_back({i, j, std::move(value)});
    } else {
      entries.push_back({j, i, -value});
    }
  }
  try {
    spec.algebra = LieAlgebra::from_brackets(n, entries);
  } catch (const Error& e) {
    schema_error("$.brackets", e.what());
  }
  const auto& structures = member(doc, "J", "$");
  if (!structures.is_array() || structures.size() != 3) schema_error("$.J", "expected three matrices");
  for (std::size_t a = 0; a < 3; ++a) {
    spec.structures[a] = matrix_from(structures[a], n, "$.J[" + std::to_string(a) + "]");
  }
  return spec;
}

MuForm parse_mu_json(std::string_view text, std::size_t base_dim) {
  const json doc = parse_document(text);
  const auto r = count(member(doc, "fiber_dim", "$"), "$.fiber_dim");
  if (r == 0) schema_error("$.fiber_dim", "fiber dimension must be positive");
  MuForm mu(base_dim, r);
  const auto& terms = member(doc, "terms", "$");
  if (!terms.is_array()) schema_error("$.terms", "expected an array");
  for (std::size_t t = 0; t < terms.size(); ++t) {
    const auto path = "$.terms[" + std::to_string(t) + "]";
    const auto i = index(member(terms[t], "i", path), base_dim, path + ".i");
    const auto j = index(member(terms[t], "j", path), base_dim, path + ".j");
    if (i == j) schema_error(path, "mu is antisymmetric; i and j must differ");
    mu.add(i, j, coefficients(member(terms[t], "coeffs", path), r, path + ".coeffs"));
  }
  return mu;
}

std::string serialize_mu_json(const MuForm& mu) {
  json doc;
  doc["fiber_dim"] = mu.fiber_dim();
  json terms = json::array();
  for (std::size_t i = 0; i < mu.base_dim(); ++i)
    for (std::size_t j = i + 1; j < mu.base_dim(); ++j)
      if (!mu(i, j).is_zero()) terms.push_back({{"i", i + 1}, {"j", j + 1}, {"coeffs", coefficients_json(mu(i, j))}});
  doc["terms"] = std::move(terms);
  return doc.dump(2) + "\n";
}

Representation parse_rho_json(std::string_view text, std::size_t base_dim) {
  const json doc = parse_document(text);
  const auto blocks = count(member(doc, "blocks", "$"), "$.blocks");
  if (blocks == 0) schema_error("$.blocks", "need at least one block");
  auto rho = zero_representation(base_dim, blocks);
  std::vector<bool> seen(base_dim, false);
  const auto& images = member(doc, "images", "$");
  if (!images.is_array()) schema_error("$.images", "expected an array");
  for (std::size_t e = 0; e < images.size(); ++e) {
    const auto path = "$.images[" + std::to_string(e) + "]";
    const auto g = index(member(images[e], "generator", path), base_dim, path + ".generator");
    if (seen[g]) schema_error(path, "generator " + std::to_string(g + 1) + " given twice");
    seen[g] = true;
    rho.images[g] = matrix_from(member(images[e], "matrix", path), rho.fiber_dim(), path + ".matrix");
  }
  return rho;
}

std::string serialize_rho_json(const Representation& rho) {
  json doc;
  doc["blocks"] = rho.blocks;
  json images = json::array();
  for (std::size_t g = 0; g < rho.images.size(); ++g)
    if (!rho.images[g].is_zero()) images.push_back({{"generator", g + 1}, {"matrix", matrix_json(rho.images[g])}});
  doc["images"] = std::move(images);
  return doc.dump(2) + "\n";
}

}  // namespace hypernil
