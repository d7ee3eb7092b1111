#include "doctest.h"
#include "helpers.hpp"
#include "reif/goal.hpp"
#include "reif/parser.hpp"

using namespace reif;
using namespace reif::testing;

TEST_CASE("lists desugar to dotted pairs") {
  const Term t = parse_term("[1,2|T]");
  REQUIRE(t.is_functor(".", 2));
  CHECK(t.arg(0) == i(1));
  CHECK(t.arg(1).is_functor(".", 2));
  CHECK(t.arg(1).arg(1).is_var());
  CHECK(t.arg(1).arg(1).name() == "T");
  CHECK(parse_term("[]").is_atom("[]"));
}

TEST_CASE("pairs and partial applications") {
  CHECK(parse_term("k-1") == f("-", {a("k"), i(1)}));
  CHECK(parse_term("a-b-c") == f("-", {f("-", {a("a"), a("b")}), a("c")}));
  CHECK(parse_term("k - -1") == f("-", {a("k"), i(-1)}));
  const Term c = parse_term("=(X)");
  REQUIRE(c.is_functor("=", 1));
  CHECK(Closure::from_term(c, 2).name == "=");
}

TEST_CASE("operator precedence") {
  const Term t = parse_term("a, b ; c");
  REQUIRE(t.is_functor(";", 2));
  CHECK(t.arg(0) == f(",", {a("a"), a("b")}));
  CHECK(t.arg(1) == a("c"));
  CHECK(parse_term("a ; b ; c") == f(";", {a("a"), f(";", {a("b"), a("c")})}));
  CHECK(parse_term("X = a, Y = b").is_functor(",", 2));
  CHECK(parse_term("(a :- b)").is_functor(":-", 2));
  CHECK(parse_term("f((a, b))").arg(0).is_functor(",", 2));
}

TEST_CASE("quoted atoms and escapes") {
  CHECK(parse_term("' '") == a(" "));
  CHECK(parse_term("'it''s'") == a("it's"));
  CHECK(parse_term("'a\\nb'") == a("a\nb"));
  CHECK(parse_term("'\\\\'") == a("\\"));
  CHECK(parse_term("'\\''") == a("'"));
  CHECK(parse_term("','(a, b)") == f(",", {a("a"), a("b")}));
}

TEST_CASE("clauses") {
  const auto cs = parse_program(
      "% comment\n"
      "memberd(X, [E|Es]) :-\n"
      "   if_( X = E\n"
      "      , true\n"
      "      , memberd(X, Es)\n"
      "      ).\n"
      "/* block */ l_memberd_t([], _, false).\n"
      "l_memberd_t([E|Es], X, T) :-\n"
      "   if_( X = E\n"
      "      , T = true\n"
      "      , l_memberd_t(Es, X, T) ).\n"
      "a :- b ; c.\n");
  REQUIRE(cs.size() == 4);
  CHECK(cs[0].body.is_functor("if_", 3));
  CHECK(cs[1].body.is_atom("true"));
  CHECK(cs[1].head.arg(0).is_atom("[]"));
  CHECK(cs[2].head.arg(0).is_functor(".", 2));
  CHECK(cs[3].body.is_functor(";", 2));
  CHECK(cs[2].pos.line == 8);

  Symbols s;
  const Clause first = compile_clause(cs[0].head, cs[0].body, s);
  CHECK(first.body.kind == GoalKind::IfReified);
  const Clause disj = compile_clause(cs[3].head, cs[3].body, s);
  CHECK(disj.body.kind == GoalKind::Disj);
}

TEST_CASE("variables are per clause and _ is always fresh") {
  const auto cs = parse_program("p(X, _, _) :- q(X). r(X).");
  const Term& h = cs[0].head;
  CHECK(h.arg(0).var_id() == cs[0].body.arg(0).var_id());
  CHECK(h.arg(1).var_id() != h.arg(2).var_id());
  CHECK(cs[1].head.arg(0).var_id() == 0);
}

TEST_CASE("queries") {
  const QuerySyntax q = parse_query("memberd(1, [1,X]).");
  CHECK(q.goal.is_functor("memberd", 2));
  REQUIRE(q.vars.size() == 1);
  CHECK(q.vars[0].first == "X");

  const QuerySyntax t = parse_query("tfilter(=(X), [1,2,3,2,3,3], Fs).");
  REQUIRE(t.vars.size() == 2);
  CHECK(t.vars[1].first == "Fs");
  CHECK(t.goal.arg(0).is_functor("=", 1));

  Symbols s;
  const CompiledQuery c = compile_query(parse_query("X = 1, dif(X, Y).").goal, s);
  REQUIRE(c.body.kind == GoalKind::Conj);
  CHECK(c.body.first->kind == GoalKind::Unify);
  CHECK(c.body.second->kind == GoalKind::Dif);
  CHECK(c.vars.size() == 2);
}

TEST_CASE("parsing is deterministic") {
  const char* text = "tfilter(=(X), [1,2,3,2,3,3], Fs).";
  CHECK(parse_query(text).goal == parse_query(text).goal);
}

TEST_CASE("syntax errors carry a position") {
  auto pos_of = [](const char* text) {
    try {
      parse_program(text);
    } catch (const SyntaxError& e) {
      return e.pos();
    }
    return SourcePos{0, 0};
  };
  CHECK(pos_of("p(a").line == 1);
  CHECK(pos_of("p.\nq(,).").line == 2);
  CHECK_THROWS_AS(parse_query("p(a)"), SyntaxError);
  CHECK_THROWS_AS(parse_term("1.5"), SyntaxError);
  CHECK_THROWS_AS(parse_program("p :- !."), SyntaxError);
  CHECK_THROWS_AS(parse_program("p :- (a -> b ; c)."), SyntaxError);
  CHECK_THROWS_AS(parse_program(":- initialization(main)."), SyntaxError);
  CHECK_THROWS_AS(parse_term("a foo b"), SyntaxError);
  try {
    parse_term("a foo b");
  } catch (const SyntaxError& e) {
    CHECK(std::string(e.what()).find("1:") == 0);
    CHECK_FALSE(e.expected().empty());
  }
}
