#pragma once

#include <array>
#include <string>
#include <string_view>

#include "hypernil/hypercomplex.hpp"

namespace hypernil {

/// Parsed description of a hypercomplex Lie algebra. The structure
/// constants are kept in canonical form; `form` records whether the source
/// used structure equations (de^k = ...) or explicit brackets ([e_i,e_j] = ...)
/// so that serialization reproduces the same style.
struct AlgebraSpec {
  enum class Form { structure_equations, brackets };

  std::string name;
  std::string notes;
  Form form = Form::structure_equations;
  LieAlgebra algebra{0};
  std::array<Matrix, 3> structures;

  std::size_t dim() const { return algebra.dim(); }

  friend bool operator==(const AlgebraSpec&, const AlgebraSpec&) = default;
};

/// Parses the structure-equation language. A file is a sequence of
/// statements separated by newlines, commas or semicolons:
///
///   name: n8
///   dim: 8                      (optional; otherwise the largest index)
///   de8 = e12 - e34             (missing de^k are zero; `de5 = 0` allowed)
///   de^{13} = -e^{25} + 1/2 e^{39}
///   de{14} = e{1}{10}           (indices >= 10 need braces in 2-forms)
///   de^i = 0, i = 1, \dots, 7
///   [e5, e6] = e9               (bracket style; not mixed with de^k)
///   J1 e1 = e2                  (also J_1 e_1 = e_2; linear combinations ok)
///   I_1 e_9 = e_{10}            (same as J1; for a fiber R^{4k} written separately)
///
/// `#` starts a comment. LaTeX spacing (`\ `, `\,`, `&`, `\\`, `\nonumber`)
/// is ignored, so displayed equation blocks can be pasted as they are.
/// A column J e_a left unspecified is filled from J e_b = s e_a via
/// J e_a = -(1/s) e_b. Throws ParseError with the line and column.
AlgebraSpec parse_dsl(std::string_view text);

/// Canonical text: metadata, de^k (or brackets) in ascending order with
/// terms ordered by (i, j), then every column of J1, J2, J3. An abelian
/// algebra in bracket form is written as `[e1, e2] = 0`.
std::string serialize_dsl(const AlgebraSpec& spec);

AlgebraSpec to_spec(const HypercomplexLieAlgebra& h,
                    AlgebraSpec::Form form = AlgebraSpec::Form::structure_equations);
HypercomplexLieAlgebra to_hypercomplex(const AlgebraSpec& spec);

}  // namespace hypernil
