#include "hypernil/report.hpp"

#include <json.hpp>
#include <sstream>

namespace hypernil {

namespace {

using nlohmann::json;

constexpr std::size_t kMaxCurvatureSamples = 64;
constexpr std::size_t kTextCurvatureSamples = 8;

Validity check_validity(const HypercomplexLieAlgebra& h) {
  Validity v;
  const auto jacobi = check_jacobi(h.algebra);
  if (!jacobi.empty()) {
    v.jacobi = false;
    std::ostringstream os;
    const auto& first = jacobi.front();
    os << "Jacobi identity fails on (e" << first.i + 1 << ", e" << first.j + 1 << ", e" << first.k + 1
       << "): " << first.defect;
    if (jacobi.size() > 1) os << " and " << jacobi.size() - 1 << " more triples";
    v.violations.push_back(os.str());
  }
  for (const auto& violation : validate_hypercomplex(h)) {
    const auto& r = violation.relation;
    if (r == "dimension" || r == "shape") {
      v.dimension = false;
    } else if (r == "J1 J2 = J3" || r == "J2 J1 = -J3") {
      v.quaternionic = false;
    } else if (r.size() >= 2 && r[0] == 'J' && r.find("integrable") != std::string::npos) {
      v.integrable[static_cast<std::size_t>(r[1] - '1')] = false;
    } else if (r.size() >= 2 && r[0] == 'J') {
      v.squares[static_cast<std::size_t>(r[1] - '1')] = false;
    }
    v.violations.push_back(r + ": " + violation.detail);
  }
  return v;
}

StructureSummary summarize_structure(const HypercomplexLieAlgebra& h, const ReportOptions& options) {
  StructureSummary s;
  const auto& g = h.algebra;
  s.step = nilpotency_step(g);
  s.center_dim = center(g).dim();
  s.commutator_dim = commutator_ideal(g).dim();
  for (int a = 1; a <= 3; ++a) s.j_steps[a - 1] = j_nilpotency_step(g, h.j(a), options.max_iter);
  if (s.step == 2) {
    std::array<bool, 3> criterion{};
    for (int a = 1; a <= 3; ++a) criterion[a - 1] = two_step_criterion(g, h.j(a));
    s.two_step_criterion = criterion;
  }
  return s;
}

ObataSummary summarize_obata(const HypercomplexLieAlgebra& h, const Connection& conn, const Curvature& r,
                             int permutation) {
  ObataSummary o;
  o.permutation = permutation;
  o.cyclic_forms_agree = verify_cyclic_forms(h);
  o.torsion_free = is_torsion_free(h.algebra, conn);
  o.parallel_structures = preserves_structures(h, conn);
  o.first_bianchi = satisfies_first_bianchi(r);
  o.curvature_commutes = curvature_commutes_with_structures(h, r);
  o.flat = r.is_zero();
  const auto n = h.dim();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        Vector value = r.basis_value(i, j, k);
        if (value.is_zero()) continue;
        ++o.nonzero_curvature;
        if (o.curvature_samples.size() < kMaxCurvatureSamples) o.curvature_samples.push_back({i, j, k, std::move(value)});
      }
    }
  }
  return o;
}

HSeriesSummary summarize_h_series(const HypercomplexLieAlgebra& h, const ReportOptions& options) {
  HSeriesSummary s;
  const auto series = h_solvable_series(h, options.max_iter);
  for (const auto& term : series) s.dims.push_back(term.dim());
  s.nested_ideals = h_series_terms_are_nested_ideals(h.algebra, series);
  if (s.nested_ideals) s.step = h_solvability_step(h, options.max_iter);
  return s;
}

HolonomySummary summarize_holonomy(const HypercomplexLieAlgebra& h, const Connection& conn, const Curvature& r,
                                   const ReportOptions& options) {
  HolonomySummary s;
  const auto hol = holonomy_algebra(h.algebra, conn, r, options.max_iter);
  s.dim = hol.dim();
  s.abelian = is_abelian(hol);
  s.trivial_product = has_trivial_product(hol);
  s.in_sl_n_H = in_sl_n_H(hol, h);
  s.rounds = hol.rounds;
  if (options.kind == ReportKind::holonomy) {
    s.generators = hol.generators_log;
    s.basis = hol.basis();
    s.commutator_into_center = structures_map_commutator_into_center(h);
    if (s.commutator_into_center) s.equals_ad_commutator = compare_with_ad(hol, h);
    s.curvature_value_bound_dim = curvature_value_bound(h).dim();
  }
  return s;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }
std::string ok_fail(bool b) { return b ? "ok" : "FAILS"; }

std::string optional_count(const std::optional<std::size_t>& v) { return v ? std::to_string(*v) : "none"; }

std::string vector_text(const Vector& v) {
  std::string out;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (is_zero(v[k])) continue;
    const bool negative = sgn(v[k]) < 0;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    const Rational magnitude = abs(v[k]);
    if (magnitude != 1) out += to_string(magnitude) + " ";
    out += "e" + std::to_string(k + 1);
  }
  return out.empty() ? "0" : out;
}

std::string curvature_label(const CurvatureEntry& c) {
  return "R(e" + std::to_string(c.i + 1) + ",e" + std::to_string(c.j + 1) + ")e" + std::to_string(c.k + 1);
}

/// "label: value" padded so that the provenance tags line up.
class TextWriter {
public:
  void heading(const std::string& text) { out_ << text << "\n"; }
  void line(const std::string& label, const std::string& value, const std::string& source = {}) {
    std::string body = "  " + label + ": " + value;
    if (!source.empty()) {
      if (body.size() < 44) body.append(44 - body.size(), ' ');
      body += "  [" + source + "]";
    }
    out_ << body << "\n";
  }
  void raw(const std::string& text) { out_ << text << "\n"; }
  std::string str() const { return out_.str(); }

private:
  std::ostringstream out_;
};

json vector_json(const Vector& v) {
  json out = json::object();
  for (std::size_t k = 0; k < v.size(); ++k)
    if (!is_zero(v[k])) out[std::to_string(k + 1)] = to_string(v[k]);
  return out;
}

json optional_json(const std::optional<std::size_t>& v) { return v ? json(*v) : json(nullptr); }

json matrix_json(const Matrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_string(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string kind_name(ReportKind kind) {
  switch (kind) {
    case ReportKind::validate:
      return "validate";
    case ReportKind::holonomy:
      return "holonomy";
    case ReportKind::analyze:
      break;
  }
  return "analyze";
}

}  // namespace

bool Validity::ok() const { return violations.empty(); }

Report build_report(const HypercomplexLieAlgebra& h, const ReportOptions& options) {
  Report report;
  report.kind = options.kind;
  report.name = h.name;
  report.dim = h.dim();
  report.validity = check_validity(h);
  if (!report.validity.ok() || options.kind == ReportKind::validate) return report;

  const Connection conn = obata_connection(h, options.permutation);
  const Curvature r = curvature(h.algebra, conn);
  if (options.kind == ReportKind::analyze) {
    report.structure = summarize_structure(h, options);
    report.obata = summarize_obata(h, conn, r, options.permutation);
    report.h_series = summarize_h_series(h, options);
  }
  report.holonomy = summarize_holonomy(h, conn, r, options);
  return report;
}

std::string render_text(const Report& report) {
  TextWriter w;
  w.heading("algebra: " + (report.name.empty() ? std::string("(unnamed)") : report.name) + " (dim " +
            std::to_string(report.dim) + ")");
  const auto& v = report.validity;
  w.heading("validity");
  w.line("Jacobi identity", ok_fail(v.jacobi), "check_jacobi");
  w.line("dimension divisible by 4", ok_fail(v.dimension), "validate_hypercomplex");
  w.line("J1^2 = J2^2 = J3^2 = -I",
         ok_fail(v.squares[0]) + " " + ok_fail(v.squares[1]) + " " + ok_fail(v.squares[2]), "validate_hypercomplex");
  w.line("J1 J2 = J3 = -J2 J1", ok_fail(v.quaternionic), "validate_hypercomplex");
  w.line("integrable J1 J2 J3",
         ok_fail(v.integrable[0]) + " " + ok_fail(v.integrable[1]) + " " + ok_fail(v.integrable[2]), "nijenhuis");
  w.line("structure constants rational", "yes");
  for (const auto& violation : v.violations) w.raw("  violation: " + violation);

  if (report.structure) {
    const auto& s = *report.structure;
    w.heading("structure");
    w.line("nilpotency step", optional_count(s.step), "lower_central_series");
    w.line("dim center", std::to_string(s.center_dim), "center");
    w.line("dim commutator", std::to_string(s.commutator_dim), "commutator_ideal");
    w.line("J-steps", "(" + optional_count(s.j_steps[0]) + ", " + optional_count(s.j_steps[1]) + ", " +
                          optional_count(s.j_steps[2]) + ")",
           "ascending_series");
    if (s.two_step_criterion) {
      const auto& c = *s.two_step_criterion;
      w.line("J g1 in center", yes_no(c[0]) + " " + yes_no(c[1]) + " " + yes_no(c[2]), "two_step_criterion");
    }
  }
  if (report.obata) {
    const auto& o = *report.obata;
    w.heading("obata connection (cyclic form " + std::to_string(o.permutation) + ")");
    w.line("cyclic forms agree", yes_no(o.cyclic_forms_agree), "verify_cyclic_forms");
    w.line("torsion-free", yes_no(o.torsion_free), "is_torsion_free");
    w.line("J1, J2, J3 parallel", yes_no(o.parallel_structures), "preserves_structures");
    w.line("first Bianchi identity", yes_no(o.first_bianchi), "satisfies_first_bianchi");
    w.line("R commutes with J1, J2, J3", yes_no(o.curvature_commutes), "curvature_commutes_with_structures");
    w.line("flat", yes_no(o.flat), "curvature");
    w.line("nonzero R(ei,ej)ek, i<j", std::to_string(o.nonzero_curvature), "curvature");
    for (std::size_t n = 0; n < o.curvature_samples.size() && n < kTextCurvatureSamples; ++n) {
      const auto& c = o.curvature_samples[n];
      w.raw("    " + curvature_label(c) + " = " + vector_text(c.value));
    }
    if (o.nonzero_curvature > kTextCurvatureSamples) {
      w.raw("    ... " + std::to_string(o.nonzero_curvature - kTextCurvatureSamples) + " more");
    }
  }
  if (report.h_series) {
    const auto& s = *report.h_series;
    std::string dims;
    for (const auto d : s.dims) dims += (dims.empty() ? "" : ", ") + std::to_string(d);
    w.heading("H-solvable series");
    w.line("dimensions", dims, "h_solvable_series");
    w.line("nested subalgebras and ideals", yes_no(s.nested_ideals), "h_series_terms_are_nested_ideals");
    w.line("H-solvability step", optional_count(s.step), "h_solvability_step");
  }
  if (report.holonomy) {
    const auto& s = *report.holonomy;
    w.heading("holonomy algebra");
    w.line("dimension", std::to_string(s.dim), "holonomy_algebra");
    w.line("abelian", yes_no(s.abelian), "is_abelian");
    w.line("trivial product", yes_no(s.trivial_product), "has_trivial_product");
    w.line("in sl(" + std::to_string(report.dim / 4) + ",H)", yes_no(s.in_sl_n_H), "in_sl_n_H");
    w.line("closure rounds", std::to_string(s.rounds), "holonomy_algebra");
    if (report.kind == ReportKind::holonomy) {
      w.line("J g1 in center", yes_no(s.commutator_into_center), "structures_map_commutator_into_center");
      if (s.equals_ad_commutator) {
        w.line("equals span{ad z : z in g1}", yes_no(*s.equals_ad_commutator), "compare_with_ad");
      }
      w.line("dim curvature value bound", std::to_string(s.curvature_value_bound_dim), "curvature_value_bound");
      for (const auto& g : s.generators) w.raw("    generator " + g);
    }
  }
  return w.str();
}

std::string render_json(const Report& report) {
  json doc;
  json provenance;
  doc["command"] = kind_name(report.kind);
  doc["name"] = report.name;
  doc["dim"] = report.dim;

  const auto& v = report.validity;
  doc["validity"] = {{"ok", v.ok()},
                     {"jacobi", v.jacobi},
                     {"dimension", v.dimension},
                     {"squares", v.squares},
                     {"quaternionic", v.quaternionic},
                     {"integrable", v.integrable},
                     {"rational_structure_constants", true},
                     {"violations", v.violations}};
  provenance["validity.jacobi"] = "check_jacobi";
  provenance["validity.dimension"] = "validate_hypercomplex";
  provenance["validity.squares"] = "validate_hypercomplex";
  provenance["validity.quaternionic"] = "validate_hypercomplex";
  provenance["validity.integrable"] = "nijenhuis";

  if (report.structure) {
    const auto& s = *report.structure;
    json j_steps = json::array();
    for (const auto& step : s.j_steps) j_steps.push_back(optional_json(step));
    doc["structure"] = {{"step", optional_json(s.step)},
                        {"center_dim", s.center_dim},
                        {"commutator_dim", s.commutator_dim},
                        {"j_steps", j_steps},
                        {"two_step_criterion", s.two_step_criterion ? json(*s.two_step_criterion) : json(nullptr)}};
    provenance["structure.step"] = "lower_central_series";
    provenance["structure.center_dim"] = "center";
    provenance["structure.commutator_dim"] = "commutator_ideal";
    provenance["structure.j_steps"] = "ascending_series";
    provenance["structure.two_step_criterion"] = "two_step_criterion";
  }
  if (report.obata) {
    const auto& o = *report.obata;
    json samples = json::array();
    for (const auto& c : o.curvature_samples) {
      samples.push_back({{"i", c.i + 1}, {"j", c.j + 1}, {"k", c.k + 1}, {"value", vector_json(c.value)}});
    }
    doc["obata"] = {{"permutation", o.permutation},
                    {"cyclic_forms_agree", o.cyclic_forms_agree},
                    {"torsion_free", o.torsion_free},
                    {"parallel_structures", o.parallel_structures},
                    {"first_bianchi", o.first_bianchi},
                    {"curvature_commutes", o.curvature_commutes},
                    {"flat", o.flat},
                    {"nonzero_curvature", o.nonzero_curvature},
                    {"curvature_samples", samples}};
    provenance["obata.cyclic_forms_agree"] = "verify_cyclic_forms";
    provenance["obata.torsion_free"] = "is_torsion_free";
    provenance["obata.parallel_structures"] = "preserves_structures";
    provenance["obata.first_bianchi"] = "satisfies_first_bianchi";
    provenance["obata.curvature_commutes"] = "curvature_commutes_with_structures";
    provenance["obata.flat"] = "curvature";
    provenance["obata.curvature_samples"] = "curvature";
  }
  if (report.h_series) {
    const auto& s = *report.h_series;
    doc["h_series"] = {{"dims", s.dims}, {"nested_ideals", s.nested_ideals}, {"step", optional_json(s.step)}};
    provenance["h_series.dims"] = "h_solvable_series";
    provenance["h_series.nested_ideals"] = "h_series_terms_are_nested_ideals";
    provenance["h_series.step"] = "h_solvability_step";
  }
  if (report.holonomy) {
    const auto& s = *report.holonomy;
    json hol = {{"dim", s.dim},
                {"abelian", s.abelian},
                {"trivial_product", s.trivial_product},
                {"in_sl_n_H", s.in_sl_n_H},
                {"rounds", s.rounds}};
    provenance["holonomy.dim"] = "holonomy_algebra";
    provenance["holonomy.abelian"] = "is_abelian";
    provenance["holonomy.trivial_product"] = "has_trivial_product";
    provenance["holonomy.in_sl_n_H"] = "in_sl_n_H";
    if (report.kind == ReportKind::holonomy) {
      json basis = json::array();
      for (const auto& m : s.basis) basis.push_back(matrix_json(m));
      hol["generators"] = s.generators;
      hol["basis"] = std::move(basis);
      hol["commutator_into_center"] = s.commutator_into_center;
      hol["equals_ad_commutator"] = s.equals_ad_commutator ? json(*s.equals_ad_commutator) : json(nullptr);
      hol["curvature_value_bound_dim"] = s.curvature_value_bound_dim;
      provenance["holonomy.commutator_into_center"] = "structures_map_commutator_into_center";
      provenance["holonomy.equals_ad_commutator"] = "compare_with_ad";
      provenance["holonomy.curvature_value_bound_dim"] = "curvature_value_bound";
    }
    doc["holonomy"] = std::move(hol);
  }
  doc["provenance"] = std::move(provenance);
  return doc.dump(2) + "\n";
}

}  // namespace hypernil
