#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "hypernil/holonomy.hpp"

namespace hypernil {

enum class ReportKind { validate, analyze, holonomy };

struct ReportOptions {
  ReportKind kind = ReportKind::analyze;
  /// Cyclic form (1, 2 or 3) used to build the Obata connection.
  int permutation = 1;
  /// Bound for series iterations and holonomy closure rounds.
  std::optional<std::size_t> max_iter;
};

/// R(e_i, e_j) e_k, 0-based, i < j.
struct CurvatureEntry {
  std::size_t i = 0;
  std::size_t j = 0;
  std::size_t k = 0;
  Vector value;
};

struct Validity {
  bool jacobi = true;
  bool dimension = true;
  std::array<bool, 3> squares{true, true, true};
  bool quaternionic = true;
  std::array<bool, 3> integrable{true, true, true};
  std::vector<std::string> violations;

  bool ok() const;
};

struct StructureSummary {
  std::optional<std::size_t> step;
  std::size_t center_dim = 0;
  std::size_t commutator_dim = 0;
  std::array<std::optional<std::size_t>, 3> j_steps;
  /// J_α g^1 ⊆ z, reported for 2-step algebras only.
  std::optional<std::array<bool, 3>> two_step_criterion;
};

struct ObataSummary {
  int permutation = 1;
  bool cyclic_forms_agree = false;
  bool torsion_free = false;
  bool parallel_structures = false;
  bool first_bianchi = false;
  bool curvature_commutes = false;
  bool flat = false;
  std::size_t nonzero_curvature = 0;
  std::vector<CurvatureEntry> curvature_samples;
};

struct HSeriesSummary {
  std::vector<std::size_t> dims;
  std::optional<std::size_t> step;
  bool nested_ideals = false;
};

struct HolonomySummary {
  std::size_t dim = 0;
  bool abelian = false;
  bool trivial_product = false;
  bool in_sl_n_H = false;
  std::size_t rounds = 0;
  std::vector<std::string> generators;
  std::vector<Matrix> basis;
  /// J_α g^1 ⊆ z for every α, and in that case whether hol = span{ad_z : z ∈ g^1}.
  bool commutator_into_center = false;
  std::optional<bool> equals_ad_commutator;
  std::size_t curvature_value_bound_dim = 0;
};

struct Report {
  ReportKind kind = ReportKind::analyze;
  std::string name;
  std::size_t dim = 0;
  Validity validity;
  std::optional<StructureSummary> structure;
  std::optional<ObataSummary> obata;
  std::optional<HSeriesSummary> h_series;
  std::optional<HolonomySummary> holonomy;
};

/// Checks validity first; the remaining sections are computed only for a
/// valid hypercomplex Lie algebra.
Report build_report(const HypercomplexLieAlgebra& h, const ReportOptions& options = {});

std::string render_text(const Report& report);
/// One JSON document, keys sorted; includes everything in the text form,
/// plus the operation behind each field under "provenance".
std::string render_json(const Report& report);

}  // namespace hypernil
