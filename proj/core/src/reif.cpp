#include "reif/reif.hpp"

#include "reif/error.hpp"

namespace reif {

ThrownError::ThrownError(Term error_term)
    : std::runtime_error("uncaught error"), term_(std::move(error_term)) {}

ThrownError ThrownError::instantiation() {
  return ThrownError(Term::compound("error", {Term::atom("instantiation_error"), Term::var(0, "_")}));
}

ThrownError ThrownError::type(std::string type, Term culprit) {
  return ThrownError(Term::compound(
      "error", {Term::compound("type_error", {Term::atom(std::move(type)), std::move(culprit)}), Term::var(0, "_")}));
}

ThrownError ThrownError::existence(std::string name, std::size_t arity) {
  Term indicator = Term::compound("/", {Term::atom(std::move(name)), Term::integer(static_cast<std::int64_t>(arity))});
  return ThrownError(Term::compound(
      "error", {Term::compound("existence_error", {Term::atom("procedure"), std::move(indicator)}),
                Term::var(0, "_")}));
}

ThrownError ThrownError::resource(std::string what) {
  return ThrownError(Term::compound(
      "error", {Term::compound("resource_error", {Term::atom(std::move(what))}), Term::var(0, "_")}));
}

TruthValue classify_truth(Ref t, const Bindings& b) {
  t = b.deref(t);
  if (t == Ref::atom(Symbols::kTrue)) return TruthValue::True;
  if (t == Ref::atom(Symbols::kFalse)) return TruthValue::False;
  if (t.is_var()) return TruthValue::Unbound;
  return TruthValue::NotBoolean;
}

void throw_truth_error(TruthValue v, Ref t, const Bindings& b, const Symbols& syms) {
  if (v == TruthValue::Unbound) throw ThrownError::instantiation();
  throw ThrownError::type("boolean", walk_star(t, b, syms));
}

Eq3Plan plan_eq3(Ref x, Ref y, Bindings& b) {
  x = b.deref(x);
  y = b.deref(y);
  if (x == y) return Eq3Plan::DecidedTrue;
  switch (trial_unify(x, y, b).kind) {
    case TrialOutcome::Kind::Identical: return Eq3Plan::DecidedTrue;
    case TrialOutcome::Kind::Clash: return Eq3Plan::DecidedFalse;
    case TrialOutcome::Kind::UnifiesWith: return Eq3Plan::Branch;
  }
  return Eq3Plan::Branch;
}

Goal specialize(const Goal& g, std::span<const Ref> cells) {
  Goal out(g.kind);
  out.a = g.a;
  out.b = g.b;
  out.functor = g.functor;
  out.args = g.args;
  if (g.first) out.first = std::make_unique<Goal>(specialize(*g.first, cells));
  if (g.second) out.second = std::make_unique<Goal>(specialize(*g.second, cells));

  if (g.kind == GoalKind::IfReified && g.a.is_str()) {
    const Ref functor_cell = cells[g.a.index()];
    if (functor_cell.index() == Symbols::kEq2) {
      out.kind = GoalKind::TestEq;
      out.a = cells[g.a.index() + 1];
      out.b = cells[g.a.index() + 2];
    }
  }
  return out;
}

}  // namespace reif
