#include "loops/identity.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include "loops/groups.hpp"

namespace loops {

bool operator==(const Term& a, const Term& b) {
  if (a.kind != b.kind || a.name != b.name || a.exponent != b.exponent ||
      a.args.size() != b.args.size())
    return false;
  for (std::size_t i = 0; i < a.args.size(); ++i)
    if (!(*a.args[i] == *b.args[i])) return false;
  return true;
}

namespace term {

namespace {
TermPtr node(Term::Kind kind, std::vector<TermPtr> args, std::string name = {},
             int exponent = 0) {
  auto t = std::make_shared<Term>();
  t->kind = kind;
  t->name = std::move(name);
  t->exponent = exponent;
  t->args = std::move(args);
  return t;
}
}  // namespace

TermPtr variable(std::string name) { return node(Term::Kind::variable, {}, std::move(name)); }
TermPtr one() { return node(Term::Kind::one, {}); }
TermPtr mul(TermPtr a, TermPtr b) { return node(Term::Kind::mul, {std::move(a), std::move(b)}); }
TermPtr ldiv(TermPtr a, TermPtr b) { return node(Term::Kind::ldiv, {std::move(a), std::move(b)}); }
TermPtr rdiv(TermPtr a, TermPtr b) { return node(Term::Kind::rdiv, {std::move(a), std::move(b)}); }
TermPtr inverse(TermPtr a) { return node(Term::Kind::inverse, {std::move(a)}); }
TermPtr power(TermPtr a, int exponent) {
  return node(Term::Kind::power, {std::move(a)}, {}, exponent);
}
TermPtr call(std::string macro, std::vector<TermPtr> args) {
  return node(Term::Kind::call, std::move(args), std::move(macro));
}

}  // namespace term

ParseError::ParseError(std::string message, std::size_t position,
                       std::vector<std::string> expected, std::size_t line)
    : std::runtime_error(std::move(message)),
      position_(position),
      expected_(std::move(expected)),
      line_(line) {}

InverseUnavailable::InverseUnavailable(Element element)
    : LoopError("inverse unavailable: element " + std::to_string(element + 1) +
                " has no two-sided inverse"),
      element_(element) {}

VariableCapExceeded::VariableCapExceeded(std::size_t count, std::size_t cap)
    : LoopError("statement has " + std::to_string(count) + " variables; the cap is " +
                std::to_string(cap)) {}

// ---------------------------------------------------------------------------
// Lexer and parser

namespace {

enum class Tok : std::uint8_t {
  ident, integer, star, backslash, slash, caret, minus, lparen, rparen, comma,
  equals, implies, amp, bar, define, end,
};

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
};

std::string describe(Tok kind) {
  switch (kind) {
    case Tok::ident: return "identifier";
    case Tok::integer: return "integer";
    case Tok::star: return "'*'";
    case Tok::backslash: return "'\\'";
    case Tok::slash: return "'/'";
    case Tok::caret: return "'^'";
    case Tok::minus: return "'-'";
    case Tok::lparen: return "'('";
    case Tok::rparen: return "')'";
    case Tok::comma: return "','";
    case Tok::equals: return "'='";
    case Tok::implies: return "'=>'";
    case Tok::amp: return "'&'";
    case Tok::bar: return "'|'";
    case Tok::define: return "':='";
    case Tok::end: return "end of input";
  }
  return "?";
}

std::vector<Token> lex(std::string_view text) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (i < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_'))
        ++i;
      out.push_back({Tok::ident, std::string(text.substr(start, i - start)), start});
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      out.push_back({Tok::integer, std::string(text.substr(start, i - start)), start});
      continue;
    }
    auto two = text.substr(i, 2);
    if (two == "=>") {
      out.push_back({Tok::implies, "=>", start});
      i += 2;
      continue;
    }
    if (two == ":=") {
      out.push_back({Tok::define, ":=", start});
      i += 2;
      continue;
    }
    Tok kind;
    switch (c) {
      case '*': kind = Tok::star; break;
      case '\\': kind = Tok::backslash; break;
      case '/': kind = Tok::slash; break;
      case '^': kind = Tok::caret; break;
      case '-': kind = Tok::minus; break;
      case '(': kind = Tok::lparen; break;
      case ')': kind = Tok::rparen; break;
      case ',': kind = Tok::comma; break;
      case '=': kind = Tok::equals; break;
      case '&': kind = Tok::amp; break;
      case '|': kind = Tok::bar; break;
      default:
        throw ParseError("unexpected character '" + std::string(1, c) + "' at offset " +
                             std::to_string(i),
                         i, {});
    }
    out.push_back({kind, std::string(1, c), start});
    ++i;
  }
  out.push_back({Tok::end, "", text.size()});
  return out;
}

class Parser {
 public:
  Parser(std::string_view text, const MacroTable& macros)
      : tokens_(lex(text)), macros_(macros) {}

  TermPtr parse_whole_term() {
    auto t = term();
    expect(Tok::end);
    return t;
  }

  void parse_statement(IdentityStatement& out) {
    std::vector<Equation> eqs{equation()};
    while (accept(Tok::amp)) eqs.push_back(equation());
    if (accept(Tok::implies)) {
      out.hypotheses = std::move(eqs);
      out.conclusion.push_back(equation());
    } else {
      if (eqs.size() > 1) fail({Tok::implies});
      out.conclusion = std::move(eqs);
    }
    if (accept(Tok::bar)) out.conclusion.push_back(equation());
    if (peek().kind == Tok::bar)
      throw ParseError("at most " + std::to_string(kMaxAlternatives) +
                           " alternatives are allowed in a conclusion",
                       peek().pos, {describe(Tok::end)});
    expect(Tok::end);
    out.variables.assign(variables_.begin(), variables_.end());
  }

  Macro parse_macro_definition() {
    Macro m;
    const Token& kw = expect(Tok::ident);
    if (kw.text != "let") throw ParseError("expected 'let'", kw.pos, {"'let'"});
    m.name = expect(Tok::ident).text;
    expect(Tok::lparen);
    m.params.push_back(expect(Tok::ident).text);
    while (accept(Tok::comma)) m.params.push_back(expect(Tok::ident).text);
    expect(Tok::rparen);
    expect(Tok::define);
    m.body = term();
    expect(Tok::end);
    for (const auto& v : variables_)
      if (std::find(m.params.begin(), m.params.end(), v) == m.params.end())
        throw ParseError("macro '" + m.name + "' uses undeclared variable '" + v + "'", 0,
                         {});
    return m;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }

  bool accept(Tok kind) {
    if (peek().kind != kind) return false;
    ++pos_;
    return true;
  }

  [[noreturn]] void fail(std::initializer_list<Tok> expected) const {
    std::vector<std::string> names;
    for (Tok k : expected) names.push_back(describe(k));
    std::string msg = "parse error at offset " + std::to_string(peek().pos) + ": expected ";
    for (std::size_t i = 0; i < names.size(); ++i) msg += (i ? ", " : "") + names[i];
    msg += ", found " + (peek().kind == Tok::end ? describe(Tok::end)
                                                  : "'" + peek().text + "'");
    throw ParseError(msg, peek().pos, std::move(names));
  }

  const Token& expect(Tok kind) {
    if (peek().kind != kind) fail({kind});
    return tokens_[pos_++];
  }

  Equation equation() {
    auto lhs = term();
    expect(Tok::equals);
    auto rhs = term();
    return {std::move(lhs), std::move(rhs)};
  }

  TermPtr term() {
    auto t = product();
    for (;;) {
      if (accept(Tok::backslash)) {
        t = term::ldiv(std::move(t), product());
      } else if (accept(Tok::slash)) {
        t = term::rdiv(std::move(t), product());
      } else {
        return t;
      }
    }
  }

  TermPtr product() {
    auto t = postfix();
    while (accept(Tok::star)) t = term::mul(std::move(t), postfix());
    return t;
  }

  TermPtr postfix() {
    auto t = primary();
    while (accept(Tok::caret)) {
      const bool negative = accept(Tok::minus);
      const Token& k = peek();
      if (k.kind != Tok::integer) fail({Tok::integer});
      ++pos_;
      long value = std::stol(k.text);
      if (value > kMaxExponent)
        throw ParseError("exponent exceeds " + std::to_string(kMaxExponent), k.pos,
                         {describe(Tok::integer)});
      const int e = static_cast<int>(negative ? -value : value);
      t = e == -1 ? term::inverse(std::move(t)) : term::power(std::move(t), e);
    }
    return t;
  }

  TermPtr primary() {
    const Token& tok = peek();
    switch (tok.kind) {
      case Tok::integer:
        if (tok.text != "1")
          throw ParseError("only the constant 1 may appear outside an exponent", tok.pos,
                           {describe(Tok::ident), "'1'", describe(Tok::lparen)});
        ++pos_;
        return term::one();
      case Tok::lparen: {
        ++pos_;
        auto t = term();
        expect(Tok::rparen);
        return t;
      }
      case Tok::ident: {
        ++pos_;
        if (peek().kind == Tok::lparen) return call(tok);
        variables_.insert(tok.text);
        return term::variable(tok.text);
      }
      default:
        throw ParseError(
            "parse error at offset " + std::to_string(tok.pos) +
                ": expected identifier, '1' or '(', found " +
                (tok.kind == Tok::end ? describe(Tok::end) : "'" + tok.text + "'"),
            tok.pos, {describe(Tok::ident), "'1'", describe(Tok::lparen)});
    }
  }

  TermPtr call(const Token& name) {
    auto it = macros_.find(name.text);
    if (it == macros_.end())
      throw ParseError("unknown macro '" + name.text + "'", name.pos, {"macro name"});
    expect(Tok::lparen);
    std::vector<TermPtr> args{term()};
    while (accept(Tok::comma)) args.push_back(term());
    expect(Tok::rparen);
    if (args.size() != it->second.params.size())
      throw ParseError("macro '" + name.text + "' takes " +
                           std::to_string(it->second.params.size()) + " arguments, got " +
                           std::to_string(args.size()),
                       name.pos, {});
    return term::call(name.text, std::move(args));
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  const MacroTable& macros_;
  std::set<std::string> variables_;
};

// Offset of the ':' that ends a "name:" prefix, if any.
std::optional<std::size_t> name_separator(std::string_view text) {
  for (std::size_t i = 0; i < text.size(); ++i)
    if (text[i] == ':' && (i + 1 == text.size() || text[i + 1] != '=')) return i;
  return std::nullopt;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

TermPtr parse_term(std::string_view text, const MacroTable& macros) {
  return Parser(text, macros).parse_whole_term();
}

IdentityStatement parse_identity(std::string_view text, const MacroTable& macros) {
  IdentityStatement out;
  std::size_t offset = 0;
  if (auto sep = name_separator(text)) {
    auto name = trim(text.substr(0, *sep));
    if (name.empty() || std::any_of(name.begin(), name.end(), [](char c) {
          return std::isspace(static_cast<unsigned char>(c));
        }))
      throw ParseError("malformed statement name", 0, {"name"});
    out.name = std::string(name);
    offset = *sep + 1;
  }
  try {
    Parser(text.substr(offset), macros).parse_statement(out);
  } catch (const ParseError& e) {
    if (offset == 0) throw;
    throw ParseError(e.what(), e.position() + offset, e.expected());
  }
  return out;
}

Macro parse_macro(std::string_view text, const MacroTable& known) {
  return Parser(text, known).parse_macro_definition();
}

const MacroTable& standard_macros() {
  static const MacroTable table = [] {
    MacroTable t;
    for (const char* line : {"let R_inv(y, x) := y/x", "let L_inv(y, x) := x\\y",
                             "let T(y, x) := x\\(y*x)", "let T_inv(y, x) := x^-1\\(y*x^-1)"}) {
      Macro m = parse_macro(line, t);
      t.emplace(m.name, std::move(m));
    }
    return t;
  }();
  return table;
}

IdentityFile parse_identity_file(std::string_view text) {
  IdentityFile file;
  file.macros = standard_macros();
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    if (trim(line).empty()) continue;
    try {
      const auto body = trim(line);
      if (body.starts_with("let") &&
          (body.size() == 3 || std::isspace(static_cast<unsigned char>(body[3])))) {
        Macro m = parse_macro(body, file.macros);
        file.macros.insert_or_assign(m.name, std::move(m));
      } else {
        file.statements.push_back(parse_identity(body, file.macros));
      }
    } catch (const ParseError& e) {
      throw ParseError("line " + std::to_string(line_no) + ": " + e.what(), e.position(),
                       e.expected(), line_no);
    }
  }
  return file;
}

// ---------------------------------------------------------------------------
// Printer

namespace {

int level(const Term& t) {
  switch (t.kind) {
    case Term::Kind::ldiv:
    case Term::Kind::rdiv: return 1;
    case Term::Kind::mul: return 2;
    case Term::Kind::inverse:
    case Term::Kind::power: return 3;
    default: return 4;
  }
}

void print_into(std::string& out, const Term& t);

void print_operand(std::string& out, const Term& t, int min_level) {
  if (level(t) >= min_level) {
    print_into(out, t);
  } else {
    out += '(';
    print_into(out, t);
    out += ')';
  }
}

// Products inside a division are always parenthesized, which the grammar
// does not require but keeps x\(y*x) readable.
void print_into(std::string& out, const Term& t) {
  switch (t.kind) {
    case Term::Kind::variable: out += t.name; break;
    case Term::Kind::one: out += '1'; break;
    case Term::Kind::mul:
      print_operand(out, *t.args[0], 2);
      out += '*';
      print_operand(out, *t.args[1], 3);
      break;
    case Term::Kind::ldiv:
    case Term::Kind::rdiv:
      print_operand(out, *t.args[0], 3);
      out += t.kind == Term::Kind::ldiv ? '\\' : '/';
      print_operand(out, *t.args[1], 3);
      break;
    case Term::Kind::inverse:
      print_operand(out, *t.args[0], 3);
      out += "^-1";
      break;
    case Term::Kind::power:
      print_operand(out, *t.args[0], 3);
      out += '^';
      out += std::to_string(t.exponent);
      break;
    case Term::Kind::call:
      out += t.name;
      out += '(';
      for (std::size_t i = 0; i < t.args.size(); ++i) {
        if (i) out += ", ";
        print_into(out, *t.args[i]);
      }
      out += ')';
      break;
  }
}

std::string print_equation(const Equation& e) {
  return print_term(*e.lhs) + " = " + print_term(*e.rhs);
}

}  // namespace

std::string print_term(const Term& t) {
  std::string out;
  print_into(out, t);
  return out;
}

std::string print_identity(const IdentityStatement& s) {
  std::string out;
  if (!s.name.empty()) out += s.name + ": ";
  for (std::size_t i = 0; i < s.hypotheses.size(); ++i) {
    if (i) out += " & ";
    out += print_equation(s.hypotheses[i]);
  }
  if (!s.hypotheses.empty()) out += " => ";
  for (std::size_t i = 0; i < s.conclusion.size(); ++i) {
    if (i) out += " | ";
    out += print_equation(s.conclusion[i]);
  }
  return out;
}

std::string print_macro(const Macro& m) {
  std::string out = "let " + m.name + "(";
  for (std::size_t i = 0; i < m.params.size(); ++i) out += (i ? ", " : "") + m.params[i];
  return out + ") := " + print_term(*m.body);
}

// ---------------------------------------------------------------------------
// Evaluator

namespace {

// Macro-expanded statement as a DAG in evaluation order.
struct Program {
  enum class Op : std::uint8_t { variable, one, mul, ldiv, rdiv, inverse, power };
  struct Node {
    Op op;
    int a = -1, b = -1;
    int exponent = 0;
  };

  std::vector<Node> nodes;
  std::vector<std::pair<int, int>> hypotheses, conclusion;
  bool needs_inverses = false;
  bool uses_t_inv = false;
};

class Compiler {
 public:
  Compiler(const MacroTable& macros, const std::vector<std::string>& variables)
      : macros_(macros), variables_(variables) {}

  int compile(const Term& t, const std::map<std::string, int>& env) {
    using K = Term::Kind;
    switch (t.kind) {
      case K::variable: {
        if (auto it = env.find(t.name); it != env.end()) return it->second;
        auto pos = std::find(variables_.begin(), variables_.end(), t.name);
        if (pos == variables_.end())
          throw std::invalid_argument("undeclared variable '" + t.name + "'");
        return emit({Program::Op::variable, static_cast<int>(pos - variables_.begin())});
      }
      case K::one: return emit({Program::Op::one});
      case K::mul:
      case K::ldiv:
      case K::rdiv: {
        const int a = compile(*t.args[0], env), b = compile(*t.args[1], env);
        const auto op = t.kind == K::mul    ? Program::Op::mul
                        : t.kind == K::ldiv ? Program::Op::ldiv
                                            : Program::Op::rdiv;
        return emit({op, a, b});
      }
      case K::inverse:
        program.needs_inverses = true;
        return emit({Program::Op::inverse, compile(*t.args[0], env)});
      case K::power:
        if (t.exponent < 0) program.needs_inverses = true;
        return emit({Program::Op::power, compile(*t.args[0], env), -1, t.exponent});
      case K::call: {
        auto it = macros_.find(t.name);
        if (it == macros_.end()) throw std::invalid_argument("unknown macro '" + t.name + "'");
        const Macro& m = it->second;
        if (m.params.size() != t.args.size())
          throw std::invalid_argument("macro '" + t.name + "' arity mismatch");
        if (t.name == "T_inv") program.uses_t_inv = true;
        std::map<std::string, int> inner;
        for (std::size_t i = 0; i < m.params.size(); ++i)
          inner[m.params[i]] = compile(*t.args[i], env);
        return compile(*m.body, inner);
      }
    }
    return -1;
  }

  Program program;

 private:
  int emit(Program::Node node) {
    program.nodes.push_back(node);
    return static_cast<int>(program.nodes.size() - 1);
  }

  const MacroTable& macros_;
  const std::vector<std::string>& variables_;
};

Program compile_statement(const IdentityStatement& s, const MacroTable& macros) {
  Compiler c(macros, s.variables);
  const std::map<std::string, int> empty;
  for (const auto& e : s.hypotheses)
    c.program.hypotheses.emplace_back(c.compile(*e.lhs, empty), c.compile(*e.rhs, empty));
  for (const auto& e : s.conclusion)
    c.program.conclusion.emplace_back(c.compile(*e.lhs, empty), c.compile(*e.rhs, empty));
  return std::move(c.program);
}

void run(const Program& p, const LoopTable& loop, const std::vector<Element>& inverses,
         const std::vector<Element>& values, std::vector<Element>& out) {
  using Op = Program::Op;
  for (std::size_t i = 0; i < p.nodes.size(); ++i) {
    const auto& n = p.nodes[i];
    switch (n.op) {
      case Op::variable: out[i] = values[n.a]; break;
      case Op::one: out[i] = loop.identity(); break;
      case Op::mul: out[i] = loop.mul(out[n.a], out[n.b]); break;
      case Op::ldiv: out[i] = loop.ldiv(out[n.a], out[n.b]); break;
      case Op::rdiv: out[i] = loop.rdiv(out[n.b], out[n.a]); break;
      case Op::inverse: out[i] = inverses[out[n.a]]; break;
      case Op::power: {
        Element base = out[n.a];
        if (n.exponent < 0) base = inverses[base];
        Element x = loop.identity();
        for (int k = 0; k < std::abs(n.exponent); ++k) x = loop.mul(x, base);
        out[i] = x;
        break;
      }
    }
  }
}

std::vector<Element> required_inverses(const LoopTable& loop, bool needed) {
  if (!needed) return {};
  auto inv = inverse_table(loop);
  if (inv.empty()) {
    for (std::size_t a = 0; a < loop.order(); ++a) {
      const auto e = static_cast<Element>(a);
      if (loop.ldiv(e, loop.identity()) != loop.rdiv(e, loop.identity()))
        throw InverseUnavailable(e);
    }
  }
  return inv;
}

}  // namespace

EvalResult evaluate(const LoopTable& loop, const IdentityStatement& statement,
                    const MacroTable& macros, const EvalOptions& options) {
  const std::size_t k = statement.variables.size();
  if (k > options.max_variables) throw VariableCapExceeded(k, options.max_variables);

  const Program program = compile_statement(statement, macros);
  const auto inverses = required_inverses(loop, program.needs_inverses);

  EvalResult result;
  if (program.uses_t_inv) {
    const bool automorphic = options.automorphic.value_or(is_automorphic(loop).holds);
    if (!automorphic)
      result.warnings.push_back(
          "T_inv assumes T_x^-1 = T_(x^-1), which is only guaranteed in automorphic loops");
  }

  const std::size_t n = loop.order();
  std::vector<Element> values(k, 0), scratch(program.nodes.size());
  auto holds = [&](const std::pair<int, int>& eq) {
    return scratch[eq.first] == scratch[eq.second];
  };
  for (;;) {
    run(program, loop, inverses, values, scratch);
    const bool premise = std::all_of(program.hypotheses.begin(), program.hypotheses.end(), holds);
    if (premise && std::none_of(program.conclusion.begin(), program.conclusion.end(), holds)) {
      result.holds = false;
      result.counterexample = values;
      return result;
    }
    // Odometer, last variable fastest.
    std::size_t i = k;
    while (i > 0 && ++values[i - 1] == n) values[--i] = 0;
    if (i == 0) break;
  }
  return result;
}

Element evaluate_term(const LoopTable& loop, const Term& t, const MacroTable& macros,
                      const std::vector<std::string>& variables,
                      const std::vector<Element>& values) {
  Compiler c(macros, variables);
  const int root = c.compile(t, {});
  const auto inverses = required_inverses(loop, c.program.needs_inverses);
  std::vector<Element> scratch(c.program.nodes.size());
  run(c.program, loop, inverses, values, scratch);
  return scratch[root];
}

const IdentityStatement& IdentityLibrary::get(std::string_view name) const {
  for (const auto& s : statements)
    if (s.name == name) return s;
  throw std::out_of_range("no builtin identity named '" + std::string(name) + "'");
}

}  // namespace loops
