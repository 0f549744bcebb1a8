#ifndef LOOPS_IDENTITY_HPP
#define LOOPS_IDENTITY_HPP

// Universally quantified equations and quasi-identities over the loop
// signature, with a parser, printer and finite-model evaluator.
//
// Grammar, loosest binding first:
//
//   statement  := [name ':'] [equation ('&' equation)* '=>'] conclusion
//   conclusion := equation ['|' equation]
//   equation   := term '=' term
//   term       := product (('\' | '/') product)*     left-associative
//   product    := postfix ('*' postfix)*              left-associative
//   postfix    := primary ('^' ['-'] integer)*
//   primary    := '1' | variable | macro '(' term (',' term)* ')' | '(' term ')'
//   macro line := 'let' name '(' param (',' param)* ')' ':=' term
//
// Translations are written with divisions: (y)R_x^-1 is y/x, (y)L_x^-1
// is x\y and (y)T_x is x\(y*x).

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "loops/loop.hpp"

namespace loops {

struct Term;
using TermPtr = std::shared_ptr<const Term>;

struct Term {
  enum class Kind : std::uint8_t { variable, one, mul, ldiv, rdiv, inverse, power, call };

  Kind kind = Kind::one;
  /// Variable or macro name.
  std::string name;
  /// For Kind::power only.
  int exponent = 0;
  std::vector<TermPtr> args;

  friend bool operator==(const Term& a, const Term& b);
};

namespace term {
TermPtr variable(std::string name);
TermPtr one();
TermPtr mul(TermPtr a, TermPtr b);
TermPtr ldiv(TermPtr a, TermPtr b);
TermPtr rdiv(TermPtr a, TermPtr b);
TermPtr inverse(TermPtr a);
TermPtr power(TermPtr a, int exponent);
TermPtr call(std::string macro, std::vector<TermPtr> args);
}  // namespace term

inline constexpr int kMaxExponent = 16;
inline constexpr std::size_t kMaxAlternatives = 2;

struct Equation {
  TermPtr lhs, rhs;
  friend bool operator==(const Equation& a, const Equation& b) {
    return *a.lhs == *b.lhs && *a.rhs == *b.rhs;
  }
};

struct IdentityStatement {
  std::string name;
  /// Free variables, sorted.
  std::vector<std::string> variables;
  std::vector<Equation> hypotheses;
  /// One equation, or two alternatives joined by '|'.
  std::vector<Equation> conclusion;

  friend bool operator==(const IdentityStatement&, const IdentityStatement&) = default;
};

struct Macro {
  std::string name;
  std::vector<std::string> params;
  TermPtr body;
};

using MacroTable = std::map<std::string, Macro, std::less<>>;

/// R_inv(y, x) := y/x, L_inv(y, x) := x\y, T(y, x) := x\(y*x) and
/// T_inv(y, x) := x^-1\(y*x^-1). T_inv relies on T_x^-1 = T_(x^-1), which
/// holds in automorphic loops.
const MacroTable& standard_macros();

class ParseError : public std::runtime_error {
 public:
  ParseError(std::string message, std::size_t position, std::vector<std::string> expected,
             std::size_t line = 0);
  /// 0-based offset into the parsed text (or line).
  std::size_t position() const { return position_; }
  const std::vector<std::string>& expected() const { return expected_; }
  /// 1-based line in an identity file; 0 when parsing a single statement.
  std::size_t line() const { return line_; }

 private:
  std::size_t position_;
  std::vector<std::string> expected_;
  std::size_t line_;
};

TermPtr parse_term(std::string_view text, const MacroTable& macros = standard_macros());
IdentityStatement parse_identity(std::string_view text,
                                 const MacroTable& macros = standard_macros());
/// "let name(a, b) := term". Only macros already in `known` may be called.
Macro parse_macro(std::string_view text, const MacroTable& known);

/// One statement per line, '#' comments, 'let' lines before use. Starts
/// from standard_macros(); a 'let' may redefine one of them.
struct IdentityFile {
  MacroTable macros;
  std::vector<IdentityStatement> statements;
};
IdentityFile parse_identity_file(std::string_view text);

std::string print_term(const Term& t);
std::string print_identity(const IdentityStatement& s);
std::string print_macro(const Macro& m);

class InverseUnavailable : public LoopError {
 public:
  explicit InverseUnavailable(Element element);
  Element element() const { return element_; }

 private:
  Element element_;
};

class VariableCapExceeded : public LoopError {
 public:
  VariableCapExceeded(std::size_t count, std::size_t cap);
};

struct EvalOptions {
  std::size_t max_variables = 4;
  /// Skips recomputing is_automorphic() for the T_inv warning.
  std::optional<bool> automorphic;
};

struct EvalResult {
  bool holds = true;
  /// Values of `variables` in order (0-based), lexicographically least.
  std::vector<Element> counterexample;
  std::vector<std::string> warnings;

  explicit operator bool() const { return holds; }
};

/// Checks every assignment of loop elements to the statement's variables.
/// Throws InverseUnavailable when the statement needs inverses the loop
/// lacks, VariableCapExceeded past `max_variables`, and
/// std::invalid_argument for an unknown macro.
EvalResult evaluate(const LoopTable& loop, const IdentityStatement& statement,
                    const MacroTable& macros = standard_macros(),
                    const EvalOptions& options = {});

/// Value of a single term under an assignment of `variables`.
Element evaluate_term(const LoopTable& loop, const Term& t, const MacroTable& macros,
                      const std::vector<std::string>& variables,
                      const std::vector<Element>& values);

struct IdentityLibrary {
  MacroTable macros;
  std::vector<IdentityStatement> statements;

  /// Throws std::out_of_range for an unknown name.
  const IdentityStatement& get(std::string_view name) const;
};

/// The shipped identity corpus for automorphic loops.
const IdentityLibrary& builtin_library();
/// The corpus as identity-file text; printing the parsed corpus gives
/// back exactly this text.
std::string_view builtin_library_source();

}  // namespace loops

#endif  // LOOPS_IDENTITY_HPP
