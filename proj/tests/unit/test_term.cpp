#include "doctest.h"
#include "helpers.hpp"
#include "reif/term.hpp"

using namespace reif;
using namespace reif::testing;

TEST_CASE("ref tags and payloads") {
  CHECK(Ref::var(7).is_var());
  CHECK(Ref::var(7).index() == 7);
  CHECK(Ref::integer(-5).int_value() == -5);
  CHECK(Ref::integer(Ref::kMaxInt).int_value() == Ref::kMaxInt);
  CHECK(Ref::integer(Ref::kMinInt).int_value() == Ref::kMinInt);
  const Ref fc = Ref::functor(9, 3);
  CHECK(fc.is_functor());
  CHECK(fc.index() == 9);
  CHECK(fc.functor_arity() == 3);
  CHECK_FALSE(Ref::atom(1) == Ref::integer(1));
}

TEST_CASE("symbols are interned once") {
  Symbols s;
  CHECK(s.name(Symbols::kNil) == "[]");
  CHECK(s.name(Symbols::kTrue) == "true");
  const AtomId x = s.intern("zebra");
  CHECK(s.intern("zebra") == x);
  CHECK(s.find("zebra") == x);
  CHECK_FALSE(s.find("nope").has_value());
  CHECK(s.functor("-", 2) == Symbols::kPair);
  CHECK(s.functor("t", 3) == Symbols::kTree);
  CHECK(s.indicator(s.functor("foo", 1)) == "foo/1");
}

TEST_CASE("import then walk gives the term back") {
  Symbols s;
  Bindings b;
  ImportMap m;
  const Term t = f("g", {Term::list({i(1), a("x")}, v(0, "T")), Term::pair(a("k"), i(-3)), v(0, "T")});
  const Ref r = import_term(t, b, s, m);
  const Term back = walk_star(r, b, s);
  CHECK(is_variant(t, back));
  CHECK(term_variables(r, b).size() == 1);
}

TEST_CASE("undo restores bindings and discards new cells") {
  Symbols s;
  Bindings b;
  ImportMap m;
  const Ref x = import_term(v(0, "X"), b, s, m);
  const auto before = b.hash();
  const Bindings::Mark mk = b.mark();
  ImportMap m2;
  const Ref t = import_term(f("f", {v(0, "Y")}), b, s, m2);
  b.bind(x.index(), t);
  CHECK(b.hash() != before);
  b.undo_to(mk, nullptr);
  CHECK(b.hash() == before);
  CHECK(b.heap_size() == mk.heap);
  CHECK(b.var_count() == mk.vars);
  CHECK(b.is_unbound(x.index()));
}

TEST_CASE("variants and standard order") {
  CHECK(is_variant(f("f", {v(0, "X"), v(1, "Y")}), f("f", {v(5, "A"), v(6, "B")})));
  CHECK_FALSE(is_variant(f("f", {v(0, "X"), v(0, "X")}), f("f", {v(5, "A"), v(6, "B")})));
  CHECK_FALSE(is_variant(f("f", {v(0, "X"), v(1, "Y")}), f("f", {v(5, "A"), v(5, "A")})));
  CHECK(compare_terms(v(0, "X"), i(1)) < 0);
  CHECK(compare_terms(i(9), a("a")) < 0);
  CHECK(compare_terms(a("z"), f("f", {a("a")})) < 0);
  CHECK(compare_terms(f("f", {a("a")}), f("f", {a("b")})) < 0);
  CHECK(compare_terms(f("dif", {v(0, "X"), i(1)}), f("dif", {v(0, "X"), i(2)})) < 0);
}

TEST_CASE("zero-argument compound is an atom") {
  CHECK(Term::compound("foo", {}).is_atom("foo"));
  CHECK(Term::list({}).is_atom("[]"));
}
