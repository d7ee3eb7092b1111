#include "reif/unify.hpp"

namespace reif {

namespace {

bool occurs_in(VarId v, Ref t, const Bindings& b) {
  std::vector<Ref> todo{t};
  while (!todo.empty()) {
    const Ref x = b.deref(todo.back());
    todo.pop_back();
    if (x.is_var()) {
      if (x.index() == v) return true;
    } else if (x.is_str()) {
      for (std::uint32_t i = 0; i < b.arity_of(x); ++i) todo.push_back(b.arg(x, i));
    }
  }
  return false;
}

bool bind_var(VarId v, Ref value, Bindings& b) {
  if (b.occurs_check() && value.is_str() && occurs_in(v, value, b)) return false;
  b.bind(v, value);
  return true;
}

// Trailing always happens, so collecting the new bindings of a trial is a
// scan of the trail between two marks.
TrialOutcome collect_and_rewind(bool ok, std::uint32_t mark, Bindings& b) {
  TrialOutcome out;
  if (!ok) {
    out.kind = TrialOutcome::Kind::Clash;
  } else {
    for (const TrailEntry& e : b.trail_since(mark)) {
      if (e.kind == TrailKind::Bind) out.pairs.emplace_back(e.a, b.value_of(e.a));
    }
    out.kind = out.pairs.empty() ? TrialOutcome::Kind::Identical : TrialOutcome::Kind::UnifiesWith;
  }
  b.undo_trail_to(mark, nullptr);
  return out;
}

}  // namespace

bool unify(Ref a, Ref b, Bindings& bindings, std::uint64_t* list_cells) {
  a = bindings.deref(a);
  b = bindings.deref(b);
  if (a == b) return true;
  if (a.is_var() && b.is_var()) {
    if (a.index() < b.index()) std::swap(a, b);
    bindings.bind(a.index(), b);
    return true;
  }
  if (a.is_var()) return bind_var(a.index(), b, bindings);
  if (b.is_var()) return bind_var(b.index(), a, bindings);
  if (!a.is_str() || !b.is_str()) return false;

  std::vector<Ref>& stack = bindings.scratch();
  const std::size_t base = stack.size();
  stack.push_back(a);
  stack.push_back(b);
  std::uint64_t cells = 0;

  while (stack.size() > base) {
    Ref y = bindings.deref(stack.back());
    stack.pop_back();
    Ref x = bindings.deref(stack.back());
    stack.pop_back();
    if (x == y) continue;

    if (x.is_var() && y.is_var()) {
      // Younger variable points at the older one.
      if (x.index() < y.index()) std::swap(x, y);
      bindings.bind(x.index(), y);
      continue;
    }
    if (x.is_var() || y.is_var()) {
      if (y.is_var()) std::swap(x, y);
      if (!bind_var(x.index(), y, bindings)) {
        stack.resize(base);
        return false;
      }
      continue;
    }
    if (!x.is_str() || !y.is_str()) {
      stack.resize(base);
      return false;
    }
    const Ref fx = bindings.heap_cell(x.index());
    if (fx != bindings.heap_cell(y.index())) {
      stack.resize(base);
      return false;
    }
    if (fx.index() == Symbols::kList || fx.index() == Symbols::kTree) ++cells;
    // Push in reverse so arguments are processed left to right.
    for (std::uint32_t i = fx.functor_arity(); i-- > 0;) {
      stack.push_back(bindings.arg(x, i));
      stack.push_back(bindings.arg(y, i));
    }
  }
  if (list_cells != nullptr) *list_cells += cells;
  return true;
}

TrialOutcome trial_unify(Ref a, Ref b, Bindings& bindings) {
  a = bindings.deref(a);
  b = bindings.deref(b);
  if (a.is_atomic() && b.is_atomic()) {
    return a == b ? TrialOutcome::identical() : TrialOutcome::clash();
  }
  const std::uint32_t mark = static_cast<std::uint32_t>(bindings.trail_size());
  const bool ok = unify(a, b, bindings);
  return collect_and_rewind(ok, mark, bindings);
}

TrialOutcome trial_unify_pairs(std::span<const BindingPair> pairs, Bindings& bindings) {
  const std::uint32_t mark = static_cast<std::uint32_t>(bindings.trail_size());
  bool ok = true;
  for (const auto& [var, term] : pairs) {
    if (!unify(Ref::var(var), term, bindings)) {
      ok = false;
      break;
    }
  }
  return collect_and_rewind(ok, mark, bindings);
}

}  // namespace reif
