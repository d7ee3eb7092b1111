#include "reif/goal.hpp"

#include <unordered_map>

#include "reif/reif.hpp"

namespace reif {

Closure Closure::from_term(const Term& callable, std::uint32_t missing) {
  if (!callable.is_callable()) {
    throw CompileError("closure expected, found a " +
                       std::string(callable.is_var() ? "variable" : "number"));
  }
  Closure c;
  c.name = callable.name();
  c.bound_args.assign(callable.args().begin(), callable.args().end());
  c.missing = missing;
  return c;
}

Term apply_closure(const Closure& c, std::span<const Term> extra) {
  if (extra.size() != c.missing) {
    throw std::invalid_argument("type_error: closure " + c.name + "/" + std::to_string(c.bound_args.size()) +
                                " expects " + std::to_string(c.missing) + " extra arguments, got " +
                                std::to_string(extra.size()));
  }
  std::vector<Term> args = c.bound_args;
  args.insert(args.end(), extra.begin(), extra.end());
  return Term::compound(c.name, std::move(args));
}

Goal Goal::clone() const {
  Goal g(kind);
  g.a = a;
  g.b = b;
  g.functor = functor;
  g.args = args;
  if (first) g.first = std::make_unique<Goal>(first->clone());
  if (second) g.second = std::make_unique<Goal>(second->clone());
  return g;
}

Goal Goal::binary(GoalKind k, Goal lhs, Goal rhs) {
  Goal g(k);
  g.first = std::make_unique<Goal>(std::move(lhs));
  g.second = std::make_unique<Goal>(std::move(rhs));
  return g;
}

namespace {

class TemplateBuilder {
 public:
  explicit TemplateBuilder(Symbols& syms) : syms_(syms) {}

  Ref add(const Term& t) {
    switch (t.kind()) {
      case Term::Kind::Var: {
        auto [it, fresh] = vars_.emplace(t.var_id(), tmpl_.var_count);
        if (fresh) ++tmpl_.var_count;
        return Ref::var(it->second);
      }
      case Term::Kind::Atom: return Ref::atom(syms_.intern(t.name()));
      case Term::Kind::Int:
        if (t.value() < Ref::kMinInt || t.value() > Ref::kMaxInt) {
          throw CompileError("integer out of range: " + std::to_string(t.value()));
        }
        return Ref::integer(t.value());
      case Term::Kind::Compound: {
        const auto n = static_cast<std::uint32_t>(t.arity());
        const auto at = static_cast<std::uint32_t>(tmpl_.cells.size());
        tmpl_.cells.resize(at + 1 + n);
        tmpl_.cells[at] = Ref::functor(syms_.functor(t.name(), n), n);
        for (std::uint32_t i = 0; i < n; ++i) {
          const Ref r = add(t.arg(i));
          tmpl_.cells[at + 1 + i] = r;
        }
        return Ref::str(at);
      }
    }
    return Ref::atom(Symbols::kNil);
  }

  std::uint32_t local_index(VarId term_var) const { return vars_.at(term_var); }
  const TermTemplate& tmpl() const { return tmpl_; }
  TermTemplate take() { return std::move(tmpl_); }
  Symbols& syms() { return syms_; }

 private:
  Symbols& syms_;
  TermTemplate tmpl_;
  std::unordered_map<VarId, std::uint32_t> vars_;
};

std::string describe(const Term& t) {
  switch (t.kind()) {
    case Term::Kind::Var: return "variable " + t.name();
    case Term::Kind::Int: return std::to_string(t.value());
    case Term::Kind::Atom: return t.name();
    case Term::Kind::Compound: return t.name() + "/" + std::to_string(t.arity());
  }
  return "?";
}

Goal compile_goal(const Term& t, TemplateBuilder& tb) {
  switch (t.kind()) {
    case Term::Kind::Var: {
      Goal g(GoalKind::CallN);
      g.a = tb.add(t);
      return g;
    }
    case Term::Kind::Int: throw CompileError("type_error(callable, " + std::to_string(t.value()) + ")");
    case Term::Kind::Atom: {
      if (t.name() == "true") return Goal(GoalKind::True);
      if (t.name() == "fail" || t.name() == "false") return Goal(GoalKind::Fail);
      Goal g(GoalKind::Call);
      g.functor = tb.syms().functor(t.name(), 0);
      return g;
    }
    case Term::Kind::Compound: break;
  }

  if (t.is_functor(",", 2)) {
    return Goal::binary(GoalKind::Conj, compile_goal(t.arg(0), tb), compile_goal(t.arg(1), tb));
  }
  if (t.is_functor(";", 2)) {
    return Goal::binary(GoalKind::Disj, compile_goal(t.arg(0), tb), compile_goal(t.arg(1), tb));
  }
  if (t.is_functor("=", 2) || t.is_functor("dif", 2)) {
    Goal g(t.name() == "=" ? GoalKind::Unify : GoalKind::Dif);
    g.a = tb.add(t.arg(0));
    g.b = tb.add(t.arg(1));
    return g;
  }
  if (t.is_functor("if_", 3)) {
    const Term& cond = t.arg(0);
    if (cond.is_int()) {
      throw CompileError("if_/3: condition must be a closure missing one argument, found " + describe(cond));
    }
    Goal g = Goal::binary(GoalKind::IfReified, compile_goal(t.arg(1), tb), compile_goal(t.arg(2), tb));
    g.a = tb.add(cond);
    return g;
  }
  if (t.name() == "call") {
    Goal g(GoalKind::CallN);
    g.a = tb.add(t.arg(0));
    for (std::size_t i = 1; i < t.arity(); ++i) g.args.push_back(tb.add(t.arg(i)));
    return g;
  }
  Goal g(GoalKind::Call);
  g.functor = tb.syms().functor(t.name(), static_cast<std::uint32_t>(t.arity()));
  for (const Term& a : t.args()) g.args.push_back(tb.add(a));
  return g;
}

void collect_named_vars(const Term& t, std::vector<std::pair<std::string, VarId>>& out) {
  if (t.is_var()) {
    if (t.name().empty() || t.name() == "_") return;
    for (const auto& [name, id] : out) {
      if (id == t.var_id()) return;
    }
    out.emplace_back(t.name(), t.var_id());
    return;
  }
  for (const Term& a : t.args()) collect_named_vars(a, out);
}

}  // namespace

Clause compile_clause(const Term& head, const Term& body, Symbols& syms) {
  if (!head.is_callable()) throw CompileError("clause head must be callable, found " + describe(head));
  TemplateBuilder tb(syms);
  Clause c;
  c.head = tb.add(head);
  c.functor = syms.functor(head.name(), static_cast<std::uint32_t>(head.arity()));
  if (c.head.is_str()) {
    const auto& cells = tb.tmpl().cells;
    for (std::uint32_t i = 0; i < head.arity(); ++i) {
      const Ref arg = cells[c.head.index() + 1 + i];
      c.head_args.push_back(arg);
      if (arg.is_var()) {
        c.keys.push_back(0);
      } else if (arg.is_str()) {
        c.keys.push_back(cells[arg.index()].bits());
      } else {
        c.keys.push_back(arg.bits());
      }
    }
  }
  c.body = compile_goal(body, tb);
  c.expanded = specialize(c.body, tb.tmpl().cells);
  c.tmpl = tb.take();
  return c;
}

CompiledQuery compile_query(const Term& goal, Symbols& syms) {
  TemplateBuilder tb(syms);
  CompiledQuery q;
  std::vector<std::pair<std::string, VarId>> named;
  collect_named_vars(goal, named);
  for (const auto& [name, id] : named) tb.add(Term::var(id, name));
  q.body = compile_goal(goal, tb);
  q.expanded = specialize(q.body, tb.tmpl().cells);
  for (const auto& [name, id] : named) q.vars.emplace_back(name, tb.local_index(id));
  q.tmpl = tb.take();
  return q;
}

}  // namespace reif
