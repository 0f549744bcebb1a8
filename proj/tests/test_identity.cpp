#include <doctest.h>

#include <algorithm>

#include "fixtures.hpp"
#include "loops/catalog.hpp"
#include "loops/groups.hpp"
#include "loops/identity.hpp"
#include "loops/structure.hpp"

using namespace loops;

TEST_CASE("parse examples") {
  const auto aaip = parse_identity("(x*y)^-1 = y^-1 * x^-1");
  CHECK(aaip.variables == std::vector<std::string>{"x", "y"});
  CHECK(aaip.hypotheses.empty());
  CHECK(aaip.conclusion.size() == 1);

  const auto co1 = parse_identity("x*(x*y) = (y*x)*x => x*y = y*x");
  CHECK(co1.hypotheses.size() == 1);
  CHECK(co1.conclusion.size() == 1);

  const auto named = parse_identity("demo: x = x | x = 1");
  CHECK(named.name == "demo");
  CHECK(named.conclusion.size() == 2);

  CHECK_THROWS_AS(parse_identity("x*y = z \\"), ParseError);
}

TEST_CASE("precedence and associativity") {
  CHECK(*parse_term("x*y*z") == *term::mul(term::mul(term::variable("x"), term::variable("y")),
                                           term::variable("z")));
  CHECK(*parse_term("x/y*z") ==
        *term::rdiv(term::variable("x"), term::mul(term::variable("y"), term::variable("z"))));
  CHECK(*parse_term("x\\y/z") ==
        *term::rdiv(term::ldiv(term::variable("x"), term::variable("y")), term::variable("z")));
  CHECK(*parse_term("x*y^2") == *term::mul(term::variable("x"), term::power(term::variable("y"), 2)));
  CHECK(parse_term("x^-1")->kind == Term::Kind::inverse);
}

TEST_CASE("parse errors carry position and expectations") {
  try {
    parse_identity("x * = y");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.position() == 4);
    CHECK_FALSE(e.expected().empty());
  }
  CHECK_THROWS_AS(parse_identity("x = y^17"), ParseError);
  CHECK_THROWS_AS(parse_identity("x = 2"), ParseError);
  CHECK_THROWS_AS(parse_identity("x = F(y)"), ParseError);
  CHECK_THROWS_AS(parse_identity("a = b | b = c | c = a"), ParseError);
  CHECK_THROWS_AS(parse_identity("x = T(y)"), ParseError);
  try {
    parse_identity_file("ok: x = x\nbad: x = \n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }
}

TEST_CASE("print and parse round-trip the builtin corpus") {
  const auto& lib = builtin_library();
  CHECK(lib.statements.size() > 40);
  for (const auto& s : lib.statements) {
    const auto printed = print_identity(s);
    CHECK(parse_identity(printed, lib.macros) == s);
    CHECK(print_identity(parse_identity(printed, lib.macros)) == printed);
  }
  std::string reprinted;
  for (const auto& s : lib.statements) reprinted += print_identity(s) + "\n";
  std::string source(builtin_library_source()), stripped;
  for (std::size_t pos = 0; pos < source.size();) {
    const auto end = source.find('\n', pos);
    const auto line = source.substr(pos, end - pos);
    if (!line.starts_with("#")) stripped += line + "\n";
    pos = end + 1;
  }
  CHECK(reprinted == stripped);
}

TEST_CASE("macros") {
  const auto file = parse_identity_file(
      "let sq(a) := a*a\n"
      "let comm(a, b) := (b*a)\\(a*b)\n"
      "s: sq(x) = x^2\n"
      "c: comm(x, y) = 1\n");
  CHECK(file.statements.size() == 2);
  const auto c7 = cyclic_group(7);
  for (const auto& s : file.statements) CHECK(evaluate(c7, s, file.macros));
  CHECK_FALSE(evaluate(example21_dot(), file.statements[1], file.macros));
  CHECK_THROWS_AS(parse_identity_file("x: f(x) = x\nlet f(a) := a\n"), ParseError);
}

TEST_CASE("division macros are faithful") {
  const auto& macros = standard_macros();
  const std::vector<std::string> vars{"x", "y"};
  const auto r_inv = parse_term("R_inv(y, x)"), l_inv = parse_term("L_inv(y, x)"),
             t = parse_term("T(y, x)");
  for (const auto& l : fixtures::all_loops(5)) {
    const auto n = static_cast<Element>(l.order());
    for (Element x = 0; x < n; ++x) {
      const auto tx = inner_t(l, x);
      for (Element y = 0; y < n; ++y) {
        CHECK(evaluate_term(l, *r_inv, macros, vars, {x, y}) == l.rdiv(x, y));
        CHECK(evaluate_term(l, *l_inv, macros, vars, {x, y}) == l.ldiv(x, y));
        CHECK(evaluate_term(l, *t, macros, vars, {x, y}) == tx(y));
      }
    }
  }
}

TEST_CASE("evaluation") {
  const auto& lib = builtin_library();
  CHECK(evaluate(cyclic_group(7), lib.get("aaip"), lib.macros));
  CHECK_THROWS_AS(evaluate(example21_dot(), lib.get("aaip"), lib.macros), InverseUnavailable);
  CHECK_THROWS_AS(evaluate(cyclic_group(3), parse_identity("a*b*c*d*e = e*d*c*b*a")),
                  VariableCapExceeded);
  CHECK(evaluate(cyclic_group(2), parse_identity("a*b*c*d*e = e*d*c*b*a"), standard_macros(),
                 {.max_variables = 5}));
  CHECK_THROWS_AS(lib.get("no_such_statement"), std::out_of_range);
}

TEST_CASE("counterexample is the lexicographically least assignment") {
  const auto dot = example21_dot();
  const auto r = evaluate(dot, parse_identity("x*y = y*x"));
  REQUIRE_FALSE(r);
  std::vector<Element> least;
  for (Element x = 0; x < 7 && least.empty(); ++x)
    for (Element y = 0; y < 7; ++y)
      if (dot.mul(x, y) != dot.mul(y, x)) {
        least = {x, y};
        break;
      }
  CHECK(r.counterexample == least);
  // Variables are sorted, so the same statement written with swapped
  // names reports in (a, b) order.
  CHECK(parse_identity("b*a = a*b").variables == std::vector<std::string>{"a", "b"});
}

TEST_CASE("hypotheses filter assignments") {
  const auto dot = example21_dot();
  CHECK(evaluate(dot, parse_identity("x*y = y*x => y*x = x*y")));
  CHECK(evaluate(dot, parse_identity("x = 1 => x*y = y")));
  CHECK(evaluate(dot, parse_identity("x*y = x*y | x = y")));
}

TEST_CASE("T_inv warns outside automorphic loops") {
  const auto& lib = builtin_library();
  const auto s = parse_identity("T(T_inv(y, x), x) = y", lib.macros);
  CHECK(evaluate(fixtures::automorphic6(), s, lib.macros).warnings.empty());
  bool warned = false;
  for (const auto& e : generate_loops(5).entries) {
    if (inverse_table(e.loop).empty() || is_automorphic(e.loop)) continue;
    const auto r = evaluate(e.loop, s, lib.macros);
    warned = !r.warnings.empty();
    break;
  }
  CHECK(warned);
}

TEST_CASE("corpus holds on every automorphic loop of order <= 6") {
  const auto& lib = builtin_library();
  for (const auto& l : fixtures::automorphic_loops(6))
    for (const auto& s : lib.statements) {
      if (s.name.starts_with("co1_") || s.name.starts_with("cor32_")) continue;
      CAPTURE(s.name);
      CAPTURE(l.name());
      CHECK(evaluate(l, s, lib.macros, {.automorphic = true}));
    }
}

TEST_CASE("quasi-identity corollaries and co1 on automorphic loops") {
  const auto& lib = builtin_library();
  for (const auto& l : fixtures::automorphic_loops(6)) {
    const bool co1 = satisfies_co1(l).verdict.holds;
    CHECK(evaluate(l, lib.get("co1_fwd"), lib.macros).holds == co1);
    CHECK(evaluate(l, lib.get("co1_bwd"), lib.macros));
  }
}

TEST_CASE("lemma31_a has a counterexample on a non-automorphic order-5 loop") {
  const auto& lib = builtin_library();
  bool found = false;
  for (const auto& e : generate_loops(5).entries) {
    if (e.flags.automorphic || inverse_table(e.loop).empty()) continue;
    if (!evaluate(e.loop, lib.get("lemma31_a"), lib.macros)) found = true;
  }
  CHECK(found);
}
