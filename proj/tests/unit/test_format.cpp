#include "doctest.h"
#include "helpers.hpp"
#include "reif/parser.hpp"

using namespace reif;
using namespace reif::testing;

TEST_CASE("terms") {
  CHECK(format_term(Term::list({i(2), i(2)})) == "[2,2]");
  CHECK(format_term(Term::list({a("a")}, v(0, "T"))) == "[a|T]");
  CHECK(format_term(Term::pair(a("k"), i(1))) == "k-1");
  CHECK(format_term(Term::pair(a("k"), i(-1))) == "k-(-1)");
  CHECK(format_term(Term::pair(a("a"), Term::pair(a("b"), a("c")))) == "a-(b-c)");
  CHECK(format_term(f("dif", {v(0, "X"), i(1)})) == "dif(X, 1)");
  CHECK(format_term(a(" ")) == "' '");
  CHECK(format_term(a("it's")) == "'it\\'s'");
  CHECK(format_term(a("[]")) == "[]");
  CHECK(format_term(a("Abc")) == "'Abc'");
  CHECK(format_term(a("hello")) == "hello");
  CHECK(format_term(a("=")) == "=");
  CHECK(format_atom("non_list") == "non_list");
}

TEST_CASE("formatted terms read back") {
  const char* texts[] = {"[1,2|T]", "k-1", "f(X, 'a b', -3)", "[a-(b-c), -(1)]", "g(=, [], ';')",
                         "'\\n'", "dif(X, 1)", "t(a, nil, nil)", "(-)-(-)", "- - 1"};
  for (const char* s : texts) {
    const Term t = parse_term(s);
    CAPTURE(s);
    CAPTURE(format_term(t));
    CHECK(is_variant(parse_term(format_term(t)), t));
  }
}

TEST_CASE("answer lines") {
  Answer two;
  two.bindings = {{"X", i(2)}, {"Fs", Term::list({i(2), i(2)})}};
  two.pending_choicepoints = 1;
  CHECK(format_answer(two, false) == ";  X = 2, Fs = [2,2]");

  Answer yes;
  CHECK(format_answer(yes, true) == "   true");
  CHECK(format_answers({yes}, true) == "   true.\n");

  Answer mixed;
  mixed.bindings = {{"X", i(1)}};
  mixed.residuals = {f("dif", {v(1, "Y"), i(1)})};
  CHECK(format_answers({mixed}, true) == "   X = 1, dif(Y, 1).\n");
}

TEST_CASE("transcript terminators") {
  Answer open;
  open.pending_choicepoints = 2;
  Answer closed;
  CHECK(format_answers({}, true) == "   false.\n");
  CHECK(format_answers({open}, true) == "   true\n;  false.\n");
  CHECK(format_answers({open}, false) == "   true.\n");
  CHECK(format_answers({open, closed}, true) == "   true\n;  true.\n");
}
