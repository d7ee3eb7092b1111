#include <stdexcept>

#include "doctest.h"
#include "helpers.hpp"
#include "reif/error.hpp"
#include "reif/goal.hpp"
#include "reif/parser.hpp"

using namespace reif;
using namespace reif::testing;

TEST_CASE("disjunction answers in order with one choicepoint") {
  Engine e;
  CHECK(transcript(e, "X = a ; X = b.") == "   X = a\n;  X = b.\n");
  CHECK(e.last_stats().choicepoints_created == 1);
  CHECK(e.last_stats().answers == 2);
}

TEST_CASE("unify then dif has no answers") {
  Engine e;
  CHECK(all_answers(e, "X = a, dif(X, a).").empty());
  CHECK(all_answers(e, "dif(X, a), X = a.").empty());
}

TEST_CASE("member with a partial list") {
  Engine e;
  const auto as = all_answers(e, "member(1, [1,X]).");
  REQUIRE(as.size() == 2);
  CHECK(as[0].bindings.empty());
  REQUIRE(as[1].bindings.size() == 1);
  CHECK(as[1].bindings[0].first == "X");
  CHECK(as[1].bindings[0].second == i(1));
}

TEST_CASE("closures are completed with extra arguments") {
  const Term x = v(0, "X");
  const Closure eq = Closure::from_term(f("=", {x}), 2);
  CHECK(apply_closure(eq, std::vector<Term>{v(1, "E"), v(2, "T")}) == f("=", {x, v(1, "E"), v(2, "T")}));
  const Closure m = Closure::from_term(f("memberd_t", {v(1, "E"), v(2, "Es")}), 1);
  CHECK(apply_closure(m, std::vector<Term>{v(3, "T")}) == f("memberd_t", {v(1, "E"), v(2, "Es"), v(3, "T")}));
  const Closure d = Closure::from_term(f("dif", {x}), 1);
  CHECK(apply_closure(d, std::vector<Term>{v(1, "E")}) == f("dif", {x, v(1, "E")}));
  const Closure atom = Closure::from_term(a("true"), 1);
  CHECK(apply_closure(atom, std::vector<Term>{v(1, "T")}) == f("true", {v(1, "T")}));
  CHECK_THROWS_AS(apply_closure(d, std::vector<Term>{}), std::invalid_argument);
  CHECK_THROWS_AS(Closure::from_term(i(3), 1), CompileError);
}

TEST_CASE("run_query answers and pending choicepoints") {
  Engine e;
  auto as = e.run_query("memberd(1, [1,2,3]).");
  REQUIRE(as.size() == 1);
  CHECK(as[0].bindings.empty());
  CHECK(as[0].residuals.empty());
  CHECK(as[0].pending_choicepoints == 0);

  as = e.run_query("memberd(1, [1,X]).");
  REQUIRE(as.size() == 1);
  CHECK(as[0].bindings.empty());
  CHECK(as[0].pending_choicepoints == 0);

  as = e.run_query("duplicate(X, [1,2,3,2,3,3]).");
  REQUIRE(as.size() == 2);
  CHECK(as[0].bindings[0].second == i(2));
  CHECK(as[1].bindings[0].second == i(3));
  CHECK(as[1].pending_choicepoints > 0);

  CHECK(e.run_query("member(X, [a,b,c]).", 2).size() == 2);
}

TEST_CASE("clause order gives answer order") {
  Engine e;
  e.consult("p(c). p(a). p(b).");
  CHECK(transcript(e, "p(X).") == "   X = c\n;  X = a\n;  X = b.\n");
}

TEST_CASE("indexing skips clashing clauses without choicepoints") {
  Engine e;
  e.consult("q([], empty). q([_|_], cons). r(a, 1). r(b, 2). r(c, 3).");
  CHECK(transcript(e, "q([x], K).") == "   K = cons.\n");
  CHECK(e.last_stats().choicepoints_created == 0);
  CHECK(transcript(e, "r(b, N).") == "   N = 2.\n");
  CHECK(e.last_stats().choicepoints_created == 0);
  CHECK(transcript(e, "r(K, 3).") == "   K = c.\n");
  CHECK(e.last_stats().choicepoints_created == 0);
  CHECK(transcript(e, "r(K, N).") == "   K = a, N = 1\n;  K = b, N = 2\n;  K = c, N = 3.\n");
}

TEST_CASE("once commits to the first answer") {
  Engine e;
  CHECK(transcript(e, "once(member(X, [a,b])).") == "   X = a.\n");
  CHECK(transcript(e, "memberchk(b, [a,b,b]).") == "   true.\n");
}

TEST_CASE("call/N adds arguments") {
  Engine e;
  CHECK(transcript(e, "call(=(X), a).") == "   X = a.\n");
  CHECK(transcript(e, "call(member, X, [a]).") == "   X = a.\n");
  CHECK(transcript(e, "G = (X = 1 ; X = 2), call(G).") ==
        "   G = ;(=(1, 1), =(1, 2)), X = 1\n;  G = ;(=(2, 1), =(2, 2)), X = 2.\n");
  CHECK(transcript(e, "maplist(dif(X), [1,2]).") == "   dif(X, 1), dif(X, 2).\n");
}

TEST_CASE("errors abort the query") {
  Engine e;
  try {
    e.run_query("foo(1).");
    FAIL("expected an error");
  } catch (const ThrownError& err) {
    CHECK(format_term(err.formal()) == "existence_error(procedure, /(foo, 1))");
  }
  try {
    e.run_query("call(X).");
    FAIL("expected an error");
  } catch (const ThrownError& err) {
    CHECK(err.formal().is_atom("instantiation_error"));
  }
  try {
    e.run_query("call(3).");
    FAIL("expected an error");
  } catch (const ThrownError& err) {
    CHECK(format_term(err.formal()) == "type_error(callable, 3)");
  }
}

TEST_CASE("step limit") {
  Engine e;
  e.consult("loop :- loop.");
  e.set_max_steps(1000);
  try {
    e.run_query("loop.");
    FAIL("expected an error");
  } catch (const ThrownError& err) {
    CHECK(format_term(err.formal()) == "resource_error(steps)");
  }
  e.set_max_steps(0);
  CHECK(e.run_query("member(z, [a,b,z]).").size() == 1);
}

TEST_CASE("cyclic query bindings are reported as an error") {
  Engine e;
  CHECK_THROWS_AS(e.run_query("X = f(X)."), ThrownError);
  e.set_occurs_check(true);
  CHECK(e.run_query("X = f(X).").empty());
}

TEST_CASE("consult rejects bad programs atomically") {
  Engine e;
  CHECK_THROWS_AS(e.consult("ok(1). bad( :- ."), SyntaxError);
  CHECK_FALSE(e.has_predicate("ok", 1));
  CHECK_THROWS_AS(e.consult("ok(1). dif(a, b)."), CompileError);
  CHECK_FALSE(e.has_predicate("ok", 1));
  e.consult("ok(1).");
  CHECK(e.has_predicate("ok", 1));
  CHECK(e.has_predicate("memberd", 2));
}

TEST_CASE("a superseded query may not be advanced") {
  Engine e;
  Query q1 = e.query("member(X, [a,b]).");
  REQUIRE(q1.next().has_value());
  Query q2 = e.query("true.");
  CHECK_THROWS_AS(q1.next(), std::logic_error);
  CHECK(q2.next().has_value());
}

TEST_CASE("prepared queries restart") {
  Engine e;
  const PreparedQuery p = e.prepare(parse_query("member(X, [a,b,c]).").goal);
  for (int k = 0; k < 3; ++k) {
    Query q = e.query(p);
    CHECK(q.drain() == 3);
    CHECK(q.exhausted());
  }
}

TEST_CASE("counters are deterministic") {
  Engine e;
  SolveStats first;
  for (int k = 0; k < 3; ++k) {
    e.run_query("tfilter(=(X), [1,2,3,2,3,3], Fs).");
    const SolveStats s = e.last_stats();
    if (k == 0) first = s;
    CHECK(s.steps == first.steps);
    CHECK(s.cells_visited == first.cells_visited);
    CHECK(s.choicepoints_created == first.choicepoints_created);
  }
}

TEST_CASE("backtracking restores the machine state") {
  EngineOptions opts;
  opts.check_trail = true;
  Engine e(opts);
  for (const char* q : {"tfilter(=(X), [1,2,3,2,3,3], Fs).", "firstduplicate(X, [A,B,C]).",
                        "memberd_dif(X, [a,b,c]).", "';'(=(X, a), =(X, b), T).",
                        "treemember_t(E, t(a,t(b,nil,nil),nil), T)."}) {
    CHECK_NOTHROW(e.run_query(q));
  }
  Query q = e.query("member(X, [a,b,c]), dif(X, Y), Y = b.");
  const auto h = e.state_hash();
  CHECK(q.drain() == 2);
  CHECK(e.state_hash() == h);
}

TEST_CASE("answers name fresh variables and hide underscored ones") {
  Engine e;
  CHECK(transcript(e, "X = f(_Y, Z).") == "   X = f(_A, Z).\n");
  CHECK(transcript(e, "X = Y.") == "   X = Y.\n");
  CHECK(transcript(e, "X = Y, Y = Z.") == "   X = Y, Y = Z.\n");
  CHECK(transcript(e, "dif(X, _).") == "   dif(X, _A).\n");
}
