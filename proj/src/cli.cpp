#include "hypernil/cli.hpp"

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <ostream>
#include <sstream>

#include "hypernil/catalog.hpp"
#include "hypernil/error.hpp"
#include "hypernil/json_io.hpp"
#include "hypernil/report.hpp"

namespace hypernil::cli {

namespace {

/// Error already phrased for the user; maps to exit code 1.
class InputError : public Error {
public:
  using Error::Error;
};

struct Settings {
  bool json = false;
  int permutation = 1;
  std::size_t max_iter = 0;
  std::string source;
  std::string construction;
  std::string base;
  std::string data;
  std::string catalog_name;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(path + ": cannot open file");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw InputError(path + ": read error");
  return buffer.str();
}

bool looks_like_json(const std::string& path, const std::string& text) {
  if (std::filesystem::path(path).extension() == ".json") return true;
  const auto first = text.find_first_not_of(" \t\r\n");
  return first != std::string::npos && text[first] == '{';
}

/// A readable file is parsed (JSON or DSL); anything else is looked up in
/// the catalog.
HypercomplexLieAlgebra load_algebra(const std::string& source) {
  std::error_code ec;
  if (std::filesystem::is_regular_file(source, ec)) {
    const std::string text = read_file(source);
    try {
      AlgebraSpec spec = looks_like_json(source, text) ? parse_json(text) : parse_dsl(text);
      if (spec.name.empty()) spec.name = std::filesystem::path(source).stem().string();
      return to_hypercomplex(spec);
    } catch (const Error& e) {
      throw InputError(source + ": " + e.what());
    }
  }
  try {
    return catalog::get(source);
  } catch (const Error& e) {
    throw InputError("'" + source + "' is neither a readable file nor a catalog entry (" + e.what() + ")");
  }
}

ReportOptions report_options(const Settings& s, ReportKind kind) {
  ReportOptions options;
  options.kind = kind;
  options.permutation = s.permutation;
  if (s.max_iter > 0) options.max_iter = s.max_iter;
  return options;
}

int report_command(const Settings& s, ReportKind kind, std::ostream& out) {
  const auto h = load_algebra(s.source);
  const Report report = build_report(h, report_options(s, kind));
  out << (s.json ? render_json(report) : render_text(report));
  return report.validity.ok() ? ExitCode::ok : ExitCode::invalid;
}

std::string algebra_text(const HypercomplexLieAlgebra& h, bool json) {
  const auto spec = to_spec(h);
  return json ? serialize_json(spec) : serialize_dsl(spec);
}

int construct_command(const Settings& s, std::ostream& out, std::ostream& err) {
  const auto base = load_algebra(s.base);
  const std::string data = read_file(s.data);
  try {
    require_hypercomplex(base);
  } catch (const PreconditionError& e) {
    err << "error: base " << e.what() << "\n";
    return ExitCode::invalid;
  }
  std::vector<std::string> comments;
  HypercomplexLieAlgebra result{"", LieAlgebra(0), {}};
  try {
    if (s.construction == "mu") {
      MuForm mu(0, 0);
      try {
        mu = parse_mu_json(data, base.dim());
      } catch (const ParseError& e) {
        throw InputError(s.data + ": " + e.what());
      }
      result = mu_extension(base, mu, base.name + "+mu");
      if (nilpotency_step(base.algebra) == 2) {
        std::string steps;
        for (int a = 1; a <= 3; ++a) {
          if (!two_step_criterion(base.algebra, base.j(a))) continue;
          steps += " J" + std::to_string(a) + "':" + std::to_string(step_of_extension(base, mu, a));
        }
        if (!steps.empty()) comments.push_back("predicted steps" + steps);
      }
    } else {
      Representation rho;
      try {
        rho = parse_rho_json(data, base.dim());
      } catch (const ParseError& e) {
        throw InputError(s.data + ": " + e.what());
      }
      result = semidirect(base, rho, base.name + "+rho");
      const auto predicted = predict_semidirect_invariants(base, rho);
      comments.push_back("predicted dim center " + std::to_string(predicted.center.dim()) + ", dim commutator " +
                         std::to_string(predicted.commutator.dim()));
      comments.push_back("m_rho " + (predicted.m_rho ? std::to_string(*predicted.m_rho) : std::string("undefined")) +
                         ", step " + (predicted.step ? std::to_string(*predicted.step) : std::string("unknown")));
    }
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << "\n";
    return ExitCode::invalid;
  }
  if (!s.json)
    for (const auto& c : comments) out << "# " << c << "\n";
  out << algebra_text(result, s.json);
  return ExitCode::ok;
}

int catalog_list(const Settings& s, std::ostream& out) {
  if (s.json) {
    out << nlohmann::json(catalog::names()).dump(2) << "\n";
  } else {
    for (const auto& name : catalog::names()) out << name << "\n";
  }
  return ExitCode::ok;
}

int catalog_show(const Settings& s, std::ostream& out) {
  HypercomplexLieAlgebra h{"", LieAlgebra(0), {}};
  try {
    h = catalog::get(s.catalog_name);
  } catch (const Error& e) {
    throw InputError(e.what());
  }
  out << algebra_text(h, s.json);
  return ExitCode::ok;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Settings s;
  CLI::App app{"Exact analysis of hypercomplex nilpotent Lie algebras", "hypernil"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--json", s.json, "Emit JSON instead of text");
  app.add_option("--permutation", s.permutation, "Cyclic form of the Obata formula to use")
      ->check(CLI::Range(1, 3));
  app.add_option("--max-iter", s.max_iter, "Bound on series iterations and holonomy closure rounds")
      ->check(CLI::PositiveNumber);

  const std::string source_help = "DSL or JSON file, or catalog entry name";
  auto* validate = app.add_subcommand("validate", "Check the Jacobi identity and the hypercomplex relations");
  validate->add_option("source", s.source, source_help)->required();
  auto* analyze = app.add_subcommand("analyze", "Full report: steps, Obata curvature, H-series, holonomy");
  analyze->add_option("source", s.source, source_help)->required();
  auto* holonomy = app.add_subcommand("holonomy", "Holonomy algebra of the Obata connection");
  holonomy->add_option("source", s.source, source_help)->required();

  auto* construct = app.add_subcommand("construct", "Build a central extension or semidirect product");
  construct->add_option("kind", s.construction, "mu or semidirect")
      ->required()
      ->check(CLI::IsMember({"mu", "semidirect"}));
  construct->add_option("base", s.base, source_help)->required();
  construct->add_option("data", s.data, "JSON file with mu or rho")->required();

  auto* catalog_cmd = app.add_subcommand("catalog", "Built-in examples");
  catalog_cmd->require_subcommand(1);
  auto* list = catalog_cmd->add_subcommand("list", "List catalog entries");
  auto* show = catalog_cmd->add_subcommand("show", "Print a catalog entry as DSL (or JSON)");
  show->add_option("name", s.catalog_name, "Entry name, e.g. n8 or ex_kstep(4)")->required();

  std::vector<const char*> argv{"hypernil"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return ExitCode::ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return ExitCode::failure;
  }

  try {
    if (*validate) return report_command(s, ReportKind::validate, out);
    if (*analyze) return report_command(s, ReportKind::analyze, out);
    if (*holonomy) return report_command(s, ReportKind::holonomy, out);
    if (*construct) return construct_command(s, out, err);
    if (*list) return catalog_list(s, out);
    if (*show) return catalog_show(s, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return ExitCode::failure;
  }
  return ExitCode::failure;
}

}  // namespace hypernil::cli
