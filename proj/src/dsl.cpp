#include "hypernil/dsl.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <sstream>

#include "hypernil/error.hpp"

namespace hypernil {

namespace {

enum class Tok {
  number,
  ident,
  plus,
  minus,
  star,
  slash,
  equals,
  caret,
  underscore,
  lbrace,
  rbrace,
  lbracket,
  rbracket,
  comma,
  ellipsis,
  separator,
  end
};

struct Token {
  Tok kind = Tok::end;
  std::string text;
  std::size_t line = 0;
  std::size_t column = 0;
};

[[noreturn]] void fail(const Token& at, const std::string& message) { throw ParseError(message, at.line, at.column); }

std::string describe(const Token& t) {
  switch (t.kind) {
    case Tok::separator:
      return "end of statement";
    case Tok::end:
      return "end of input";
    case Tok::ellipsis:
      return "'...'";
    default:
      return "'" + t.text + "'";
  }
}

void skip_group(const std::string& s, std::size_t& pos) {
  if (pos < s.size() && s[pos] == '{') {
    const auto close = s.find('}', pos);
    pos = close == std::string::npos ? s.size() : close + 1;
  }
}

void lex_line(const std::string& s, std::size_t line, std::vector<Token>& out) {
  std::size_t pos = 0;
  auto push = [&](Tok kind, std::size_t start, std::size_t length) {
    out.push_back({kind, s.substr(start, length), line, start + 1});
  };
  while (pos < s.size()) {
    const char c = s[pos];
    const std::size_t start = pos;
    if (c == ' ' || c == '\t' || c == '\r' || c == '&' || c == '$') {
      ++pos;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
      push(Tok::number, start, pos - start);
    } else if (std::isalpha(static_cast<unsigned char>(c))) {
      // "de" is the only multi-letter word; everything else is one letter so
      // that "J_3e_1" and "e12" split naturally.
      if (c == 'd' && pos + 1 < s.size() && s[pos + 1] == 'e') {
        pos += 2;
      } else {
        ++pos;
      }
      push(Tok::ident, start, pos - start);
    } else if (c == '\\') {
      if (pos + 1 >= s.size()) {
        ++pos;
        continue;
      }
      const char next = s[pos + 1];
      if (next == '\\') {
        pos += 2;
        push(Tok::separator, start, 2);
      } else if (next == ' ' || next == ',' || next == ';' || next == '!' || next == ':') {
        pos += 2;
      } else if (std::isalpha(static_cast<unsigned char>(next))) {
        pos += 1;
        while (pos < s.size() && std::isalpha(static_cast<unsigned char>(s[pos]))) ++pos;
        const std::string command = s.substr(start + 1, pos - start - 1);
        if (command == "dots" || command == "ldots" || command == "cdots") {
          push(Tok::ellipsis, start, pos - start);
        } else if (command == "begin" || command == "end" || command == "label") {
          skip_group(s, pos);
        } else if (command != "quad" && command != "qquad" && command != "nonumber" && command != "notag" &&
                   command != "left" && command != "right") {
          throw ParseError("unknown command '\\" + command + "'", line, start + 1);
        }
      } else {
        throw ParseError(std::string("unexpected character '") + next + "' after '\\'", line, start + 2);
      }
    } else if (c == '.') {
      if (s.compare(pos, 3, "...") == 0) {
        pos += 3;
        push(Tok::ellipsis, start, 3);
      } else {
        ++pos;
        push(Tok::separator, start, 1);
      }
    } else if (s.compare(pos, 3, "\xE2\x88\x92") == 0) {
      pos += 3;
      out.push_back({Tok::minus, "-", line, start + 1});
    } else {
      Tok kind;
      switch (c) {
        case '+': kind = Tok::plus; break;
        case '-': kind = Tok::minus; break;
        case '*': kind = Tok::star; break;
        case '/': kind = Tok::slash; break;
        case '=': kind = Tok::equals; break;
        case '^': kind = Tok::caret; break;
        case '_': kind = Tok::underscore; break;
        case '{': kind = Tok::lbrace; break;
        case '}': kind = Tok::rbrace; break;
        case '[': kind = Tok::lbracket; break;
        case ']': kind = Tok::rbracket; break;
        case ',': kind = Tok::comma; break;
        case ';': kind = Tok::separator; break;
        default:
          throw ParseError(std::string("unexpected character '") + c + "'", line, start + 1);
      }
      ++pos;
      push(kind, start, 1);
    }
  }
  out.push_back({Tok::separator, "", line, s.size() + 1});
}

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

struct IndexUse {
  std::size_t index;  // 1-based
  Token at;
};

struct FormSummand {
  Rational coefficient;
  std::size_t i;  // 1-based
  std::size_t j;
};

struct VectorSummand {
  Rational coefficient;
  std::size_t index;  // 1-based
};

struct PendingRange {
  Token at;
  std::string variable;
};

class Parser {
public:
  explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  void run();

  std::map<std::size_t, std::vector<FormSummand>> equations;
  std::map<std::pair<std::size_t, std::size_t>, std::vector<VectorSummand>> brackets;
  std::array<std::map<std::size_t, std::vector<VectorSummand>>, 3> columns;
  std::array<std::optional<Token>, 3> first_structure_statement;
  std::optional<Token> first_equation;
  std::optional<Token> first_bracket;
  std::vector<IndexUse> index_uses;
  Token end_token;

private:
  const Token& peek(std::size_t ahead = 0) const {
    return tokens_[std::min(pos_ + ahead, tokens_.size() - 1)];
  }
  Token take() { return tokens_[std::min(pos_++, tokens_.size() - 1)]; }
  bool at(Tok kind, std::size_t ahead = 0) const { return peek(ahead).kind == kind; }
  bool at_ident(std::string_view text) const { return at(Tok::ident) && peek().text == text; }
  bool at_statement_end() const { return at(Tok::separator) || at(Tok::comma) || at(Tok::end); }
  Token expect(Tok kind, const std::string& what) {
    if (!at(kind)) fail(peek(), "expected " + what + ", found " + describe(peek()));
    return take();
  }

  std::size_t number_value(const Token& t) {
    try {
      return static_cast<std::size_t>(std::stoull(t.text));
    } catch (const std::exception&) {
      fail(t, "number '" + t.text + "' is too large");
    }
  }
  std::size_t index_value(const Token& t) {
    const auto v = number_value(t);
    if (v == 0) fail(t, "basis indices start at 1");
    index_uses.push_back({v, t});
    return v;
  }
  Token braced_number() {
    expect(Tok::lbrace, "'{'");
    Token t = expect(Tok::number, "an index");
    expect(Tok::rbrace, "'}'");
    return t;
  }

  void equation();
  void structure();
  void bracket();
  void range();

  Rational coefficient();
  std::vector<FormSummand> form_sum();
  std::pair<std::size_t, std::size_t> form_indices();
  std::vector<VectorSummand> vector_sum();
  std::size_t vector_index();
  bool at_lone_zero() const {
    return at(Tok::number) && peek().text == "0" && (at(Tok::separator, 1) || at(Tok::comma, 1) || at(Tok::end, 1));
  }
  template <typename Term>
  std::vector<Term> sum(Term (Parser::*summand)(const Rational&));
  FormSummand form_summand(const Rational& c);
  VectorSummand vector_summand(const Rational& c);

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  std::optional<PendingRange> pending_;
};

void Parser::run() {
  end_token = tokens_.back();
  while (!at(Tok::end)) {
    if (at(Tok::separator) || at(Tok::comma)) {
      take();
      continue;
    }
    if (pending_ && !(at(Tok::ident) && peek().text == pending_->variable)) {
      fail(pending_->at, "expected '" + pending_->variable + " = <indices>' after this ranged equation");
    }
    if (at_ident("de")) {
      equation();
    } else if (at_ident("J") || at_ident("I")) {
      structure();
    } else if (at(Tok::lbracket)) {
      bracket();
    } else if (pending_) {
      range();
    } else {
      fail(peek(), "expected a statement (de<k> = ..., [e<i>, e<j>] = ... or J<a> e<i> = ...), found " +
                       describe(peek()));
    }
    if (!at_statement_end()) fail(peek(), "unexpected " + describe(peek()) + " after statement");
  }
  if (pending_) fail(pending_->at, "expected '" + pending_->variable + " = <indices>' after this ranged equation");
}

Rational Parser::coefficient() {
  const Token num = take();
  Rational value(num.text);
  if (at(Tok::slash)) {
    take();
    const Token den = expect(Tok::number, "a denominator");
    const Rational d(den.text);
    if (d == 0) fail(den, "zero denominator");
    value /= d;
  }
  value.canonicalize();
  if (at(Tok::star)) take();
  return value;
}

template <typename Term>
std::vector<Term> Parser::sum(Term (Parser::*summand)(const Rational&)) {
  std::vector<Term> terms;
  if (at_lone_zero()) {
    take();
    return terms;
  }
  bool first = true;
  while (true) {
    Rational sign = 1;
    if (at(Tok::plus) || at(Tok::minus)) {
      if (take().kind == Tok::minus) sign = -1;
    } else if (!first) {
      fail(peek(), "expected '+' or '-', found " + describe(peek()));
    }
    Rational c = sign;
    if (at(Tok::number)) c *= coefficient();
    terms.push_back((this->*summand)(c));
    first = false;
    if (at_statement_end()) break;
  }
  return terms;
}

FormSummand Parser::form_summand(const Rational& c) {
  if (!at_ident("e")) fail(peek(), "expected a 2-form e<i><j>, found " + describe(peek()));
  take();
  if (at(Tok::caret) || at(Tok::underscore)) take();
  const auto [i, j] = form_indices();
  return {c, i, j};
}

std::pair<std::size_t, std::size_t> Parser::form_indices() {
  const Token first = peek();
  auto split = [&](const Token& t) -> std::pair<std::size_t, std::size_t> {
    if (t.text.size() != 2) {
      fail(t, "cannot split '" + t.text + "' into two indices; write e{i}{j}");
    }
    Token a = t, b = t;
    a.text = t.text.substr(0, 1);
    b.text = t.text.substr(1, 1);
    ++b.column;
    return {index_value(a), index_value(b)};
  };
  auto second_atom = [&]() -> std::size_t {
    if (at(Tok::lbrace)) return index_value(braced_number());
    const Token t = expect(Tok::number, "a second index");
    if (t.text.size() != 1) fail(t, "ambiguous index '" + t.text + "'; write multi-digit indices in braces");
    return index_value(t);
  };
  std::pair<std::size_t, std::size_t> ij;
  if (at(Tok::number)) {
    const Token t = take();
    if (at(Tok::lbrace)) {
      if (t.text.size() != 1) fail(t, "ambiguous index '" + t.text + "'; write multi-digit indices in braces");
      ij = {index_value(t), second_atom()};
    } else {
      ij = split(t);
    }
  } else if (at(Tok::lbrace)) {
    const Token t = braced_number();
    if (at(Tok::lbrace) || at(Tok::number)) {
      ij = {index_value(t), second_atom()};
    } else {
      ij = split(t);
    }
  } else {
    fail(first, "expected 2-form indices, found " + describe(first));
  }
  if (ij.first == ij.second) fail(first, "degenerate 2-form e" + std::to_string(ij.first) + std::to_string(ij.second));
  return ij;
}

VectorSummand Parser::vector_summand(const Rational& c) { return {c, vector_index()}; }

std::size_t Parser::vector_index() {
  if (!at_ident("e")) fail(peek(), "expected a basis vector e<i>, found " + describe(peek()));
  take();
  if (at(Tok::caret) || at(Tok::underscore)) take();
  if (at(Tok::lbrace)) return index_value(braced_number());
  return index_value(expect(Tok::number, "a basis index"));
}

std::vector<FormSummand> Parser::form_sum() { return sum<FormSummand>(&Parser::form_summand); }
std::vector<VectorSummand> Parser::vector_sum() { return sum<VectorSummand>(&Parser::vector_summand); }

void Parser::equation() {
  const Token start = take();
  if (!first_equation) first_equation = start;
  if (at(Tok::caret)) take();
  const bool braced_var = at(Tok::lbrace) && at(Tok::ident, 1) && at(Tok::rbrace, 2);
  if (braced_var || (at(Tok::ident) && peek().text != "e")) {
    if (braced_var) take();
    const Token var = take();
    if (braced_var) take();
    expect(Tok::equals, "'='");
    if (!at_lone_zero()) fail(peek(), "a ranged equation de^" + var.text + " must be '= 0'");
    take();
    pending_ = PendingRange{start, var.text};
    return;
  }
  const Token k_token = at(Tok::lbrace) ? braced_number() : expect(Tok::number, "an equation index");
  const auto k = index_value(k_token);
  expect(Tok::equals, "'='");
  auto terms = form_sum();
  if (!equations.emplace(k, std::move(terms)).second) {
    fail(k_token, "duplicate equation for de" + std::to_string(k));
  }
}

void Parser::range() {
  const Token var = take();
  expect(Tok::equals, "'='");
  std::vector<std::size_t> values;
  std::vector<bool> ellipsis_before;
  bool saw_ellipsis = false;
  while (true) {
    if (at(Tok::ellipsis)) {
      const Token e = take();
      if (values.empty() || saw_ellipsis) fail(e, "'...' must stand between two indices");
      saw_ellipsis = true;
    } else {
      const Token t = expect(Tok::number, "an index");
      const auto v = index_value(t);
      if (saw_ellipsis && v <= values.back()) fail(t, "range end must exceed its start");
      values.push_back(v);
      ellipsis_before.push_back(saw_ellipsis);
      saw_ellipsis = false;
    }
    if (at(Tok::comma) && (at(Tok::number, 1) || at(Tok::ellipsis, 1))) {
      take();
    } else if (at(Tok::ellipsis)) {
      continue;
    } else {
      break;
    }
  }
  if (saw_ellipsis) fail(peek(), "'...' must be followed by an index");
  std::vector<std::size_t> ks;
  for (std::size_t n = 0; n < values.size(); ++n) {
    if (ellipsis_before[n])
      for (std::size_t k = values[n - 1] + 1; k < values[n]; ++k) ks.push_back(k);
    ks.push_back(values[n]);
  }
  for (const auto k : ks) {
    if (!equations.emplace(k, std::vector<FormSummand>{}).second) {
      fail(var, "duplicate equation for de" + std::to_string(k));
    }
  }
  pending_.reset();
}

void Parser::structure() {
  const Token start = take();
  if (at(Tok::underscore)) take();
  const Token a = at(Tok::lbrace) ? braced_number() : expect(Tok::number, "1, 2 or 3 after " + start.text);
  if (a.text != "1" && a.text != "2" && a.text != "3") fail(a, "complex structure index must be 1, 2 or 3");
  const auto alpha = static_cast<std::size_t>(a.text[0] - '1');
  if (!first_structure_statement[alpha]) first_structure_statement[alpha] = start;
  const Token column_token = peek();
  const auto column = vector_index();
  expect(Tok::equals, "'='");
  auto image = vector_sum();
  if (!columns[alpha].emplace(column, std::move(image)).second) {
    fail(column_token, "image of e" + std::to_string(column) + " under J" + a.text + " given twice");
  }
}

void Parser::bracket() {
  const Token start = take();
  if (!first_bracket) first_bracket = start;
  const Token i_token = peek();
  const auto i = vector_index();
  expect(Tok::comma, "','");
  const auto j = vector_index();
  expect(Tok::rbracket, "']'");
  expect(Tok::equals, "'='");
  auto value = vector_sum();
  if (i == j) fail(i_token, "bracket of e" + std::to_string(i) + " with itself");
  auto key = std::minmax(i, j);
  if (i > j)
    for (auto& t : value) t.coefficient = -t.coefficient;
  if (!brackets.emplace(key, std::move(value)).second) {
    fail(start, "bracket [e" + std::to_string(key.first) + ", e" + std::to_string(key.second) + "] given twice");
  }
}

Vector to_vector(std::size_t dim, const std::vector<VectorSummand>& terms) {
  Vector v(dim);
  for (const auto& t : terms) v[t.index - 1] += t.coefficient;
  return v;
}

Matrix complete_structure(const Parser& p, std::size_t alpha, std::size_t dim) {
  const auto& given = p.columns[alpha];
  const std::string label = "J" + std::to_string(alpha + 1);
  const Token& where = p.first_structure_statement[alpha] ? *p.first_structure_statement[alpha] : p.end_token;
  if (given.empty()) fail(where, label + " is not given");
  std::map<std::size_t, Vector> images;
  for (const auto& [column, terms] : given) images.emplace(column, to_vector(dim, terms));
  std::map<std::size_t, Vector> implied;
  for (const auto& [column, image] : images) {
    std::optional<std::size_t> target;
    std::size_t nonzero = 0;
    for (std::size_t r = 0; r < dim; ++r) {
      if (!is_zero(image[r])) {
        ++nonzero;
        target = r + 1;
      }
    }
    if (nonzero != 1 || images.count(*target)) continue;
    Vector back(dim);
    back[column - 1] = -1 / image[*target - 1];
    const auto [it, inserted] = implied.emplace(*target, back);
    if (!inserted && it->second != back) {
      fail(where, "conflicting images implied for " + label + " e" + std::to_string(*target));
    }
  }
  images.merge(implied);
  Matrix j(dim, dim);
  for (std::size_t c = 1; c <= dim; ++c) {
    const auto it = images.find(c);
    if (it == images.end()) {
      fail(where, label + " e" + std::to_string(c) + " is not determined; add '" + label + " e" + std::to_string(c) +
                      " = ...'");
    }
    for (std::size_t r = 0; r < dim; ++r) j(r, c - 1) = it->second[r];
  }
  return j;
}

std::string vector_atom(std::size_t index) { return "e" + std::to_string(index + 1); }

std::string form_atoms(std::size_t i, std::size_t j) {
  auto atom = [](std::size_t n) { return n < 9 ? std::to_string(n + 1) : "{" + std::to_string(n + 1) + "}"; };
  return "e" + atom(i) + atom(j);
}

/// Appends c·atom to a sum, writing "- e12", "+ 3/2 e12", etc.
void append_term(std::string& out, bool first, const Rational& c, const std::string& atom) {
  const bool negative = sgn(c) < 0;
  if (first) {
    if (negative) out += "-";
  } else {
    out += negative ? " - " : " + ";
  }
  const Rational magnitude = abs(c);
  if (magnitude != 1) out += to_string(magnitude) + " ";
  out += atom;
}

}  // namespace

AlgebraSpec parse_dsl(std::string_view text) {
  AlgebraSpec spec;
  std::vector<Token> tokens;
  std::optional<std::size_t> declared_dim;
  Token dim_token;
  std::vector<std::string> notes;
  std::size_t line_number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto stop = text.find('\n', start);
    if (stop == std::string_view::npos) stop = text.size();
    std::string line(text.substr(start, stop - start));
    ++line_number;
    start = stop + 1;

    const auto key_end = line.find(':');
    const std::string key = key_end == std::string::npos ? "" : trim(std::string_view(line).substr(0, key_end));
    if (key == "name" || key == "notes" || key == "dim") {
      const std::string value = trim(std::string_view(line).substr(key_end + 1));
      const std::size_t value_column = line.find_first_not_of(" \t", key_end + 1) + 1;
      if (key == "name") {
        spec.name = value;
      } else if (key == "notes") {
        notes.push_back(value);
      } else {
        if (declared_dim) throw ParseError("dim given twice", line_number, value_column);
        if (value.empty() || !std::all_of(value.begin(), value.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }) ||
            value.size() > 6 || std::stoul(value) == 0) {
          throw ParseError("dim must be a positive integer", line_number, value_column);
        }
        declared_dim = std::stoul(value);
        dim_token = {Tok::number, value, line_number, value_column};
      }
      continue;
    }
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    lex_line(line, line_number, tokens);
  }
  tokens.push_back({Tok::end, "", line_number + 1, 1});
  for (std::size_t n = 0; n < notes.size(); ++n) spec.notes += (n ? "\n" : "") + notes[n];

  Parser p(std::move(tokens));
  p.run();

  if (p.first_equation && p.first_bracket) {
    const Token& later = p.first_equation->line > p.first_bracket->line ||
                                 (p.first_equation->line == p.first_bracket->line &&
                                  p.first_equation->column > p.first_bracket->column)
                             ? *p.first_equation
                             : *p.first_bracket;
    fail(later, "structure equations and brackets cannot be mixed");
  }

  std::size_t dim = 0;
  for (const auto& use : p.index_uses) {
    if (declared_dim && use.index > *declared_dim) {
      fail(use.at, "index " + std::to_string(use.index) + " out of range for dim " + std::to_string(*declared_dim));
    }
    dim = std::max(dim, use.index);
  }
  if (declared_dim) dim = *declared_dim;
  if (dim == 0) fail(p.end_token, "empty algebra");

  if (p.first_bracket) {
    spec.form = AlgebraSpec::Form::brackets;
    std::vector<BracketEntry> entries;
    for (const auto& [key, terms] : p.brackets) {
      entries.push_back({key.first - 1, key.second - 1, to_vector(dim, terms)});
    }
    spec.algebra = LieAlgebra::from_brackets(dim, entries);
  } else {
    std::vector<StructureEquation> equations;
    for (const auto& [k, terms] : p.equations) {
      StructureEquation eq{k - 1, {}};
      for (const auto& t : terms) eq.terms.push_back({t.coefficient, t.i - 1, t.j - 1});
      equations.push_back(std::move(eq));
    }
    spec.algebra = LieAlgebra::from_structure_equations(dim, equations);
  }
  for (std::size_t alpha = 0; alpha < 3; ++alpha) spec.structures[alpha] = complete_structure(p, alpha, dim);
  return spec;
}

std::string serialize_dsl(const AlgebraSpec& spec) {
  std::ostringstream out;
  if (!spec.name.empty()) out << "name: " << spec.name << "\n";
  if (!spec.notes.empty()) {
    std::istringstream lines(spec.notes);
    for (std::string line; std::getline(lines, line);) out << "notes: " << line << "\n";
  }
  const auto n = spec.dim();
  out << "dim: " << n << "\n";
  if (spec.form == AlgebraSpec::Form::structure_equations) {
    for (const auto& eq : spec.algebra.structure_equations()) {
      std::string rhs;
      for (const auto& t : eq.terms) append_term(rhs, rhs.empty(), t.coefficient, form_atoms(t.i, t.j));
      out << "de" << eq.k + 1 << " = " << (rhs.empty() ? "0" : rhs) << "\n";
    }
  } else {
    for (const auto& b : spec.algebra.brackets()) {
      std::string rhs;
      for (std::size_t k = 0; k < n; ++k)
        if (!is_zero(b.value[k])) append_term(rhs, rhs.empty(), b.value[k], vector_atom(k));
      out << "[" << vector_atom(b.i) << ", " << vector_atom(b.j) << "] = " << rhs << "\n";
    }
    if (spec.algebra.brackets().empty() && n >= 2) out << "[e1, e2] = 0\n";
  }
  for (std::size_t alpha = 0; alpha < 3; ++alpha) {
    const Matrix& j = spec.structures[alpha];
    for (std::size_t c = 0; c < n; ++c) {
      std::string rhs;
      for (std::size_t r = 0; r < n; ++r)
        if (!is_zero(j(r, c))) append_term(rhs, rhs.empty(), j(r, c), vector_atom(r));
      out << "J" << alpha + 1 << " " << vector_atom(c) << " = " << (rhs.empty() ? "0" : rhs) << "\n";
    }
  }
  return out.str();
}

AlgebraSpec to_spec(const HypercomplexLieAlgebra& h, AlgebraSpec::Form form) {
  AlgebraSpec spec;
  spec.name = h.name;
  spec.form = form;
  spec.algebra = h.algebra;
  spec.structures = h.structures;
  return spec;
}

HypercomplexLieAlgebra to_hypercomplex(const AlgebraSpec& spec) {
  return {spec.name, spec.algebra, spec.structures};
}

}  // namespace hypernil
