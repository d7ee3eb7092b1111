#include "reif/term.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace reif {

Term Term::compound(std::string functor, std::vector<Term> args) {
  if (args.empty()) return atom(std::move(functor));
  Term t(Kind::Compound, 0, std::move(functor));
  t.args_ = std::move(args);
  return t;
}

Term Term::list(std::vector<Term> items, Term tail) {
  Term result = std::move(tail);
  for (auto it = items.rbegin(); it != items.rend(); ++it) {
    result = compound(".", {std::move(*it), std::move(result)});
  }
  return result;
}

Term Term::pair(Term key, Term value) { return compound("-", {std::move(key), std::move(value)}); }

bool operator==(const Term& a, const Term& b) {
  if (a.kind_ != b.kind_) return false;
  switch (a.kind_) {
    case Term::Kind::Var: return a.num_ == b.num_;
    case Term::Kind::Int: return a.num_ == b.num_;
    case Term::Kind::Atom: return a.name_ == b.name_;
    case Term::Kind::Compound: return a.name_ == b.name_ && a.args_ == b.args_;
  }
  return false;
}

namespace {

struct VariantMatcher {
  std::unordered_map<std::string, std::string> forward;
  std::unordered_map<std::string, std::string> backward;

  static std::string key(const Term& v) {
    return v.name().empty() || v.name() == "_" ? "#" + std::to_string(v.var_id()) : v.name();
  }

  bool match(const Term& a, const Term& b) {
    if (a.kind() != b.kind()) return false;
    switch (a.kind()) {
      case Term::Kind::Var: {
        const auto ka = key(a);
        const auto kb = key(b);
        auto [fit, fnew] = forward.emplace(ka, kb);
        auto [bit, bnew] = backward.emplace(kb, ka);
        return fit->second == kb && bit->second == ka;
      }
      case Term::Kind::Int: return a.value() == b.value();
      case Term::Kind::Atom: return a.name() == b.name();
      case Term::Kind::Compound:
        if (a.name() != b.name() || a.arity() != b.arity()) return false;
        for (std::size_t i = 0; i < a.arity(); ++i) {
          if (!match(a.arg(i), b.arg(i))) return false;
        }
        return true;
    }
    return false;
  }
};

int kind_rank(Term::Kind k) {
  switch (k) {
    case Term::Kind::Var: return 0;
    case Term::Kind::Int: return 1;
    case Term::Kind::Atom: return 2;
    case Term::Kind::Compound: return 3;
  }
  return 4;
}

}  // namespace

bool is_variant(const Term& a, const Term& b) { return VariantMatcher{}.match(a, b); }

int compare_terms(const Term& a, const Term& b) {
  const int ra = kind_rank(a.kind());
  const int rb = kind_rank(b.kind());
  if (ra != rb) return ra < rb ? -1 : 1;
  switch (a.kind()) {
    case Term::Kind::Var:
      if (a.name() != b.name()) return a.name() < b.name() ? -1 : 1;
      if (a.var_id() != b.var_id()) return a.var_id() < b.var_id() ? -1 : 1;
      return 0;
    case Term::Kind::Int:
      if (a.value() != b.value()) return a.value() < b.value() ? -1 : 1;
      return 0;
    case Term::Kind::Atom: return a.name().compare(b.name()) < 0 ? -1 : (a.name() == b.name() ? 0 : 1);
    case Term::Kind::Compound: {
      if (a.arity() != b.arity()) return a.arity() < b.arity() ? -1 : 1;
      if (a.name() != b.name()) return a.name() < b.name() ? -1 : 1;
      for (std::size_t i = 0; i < a.arity(); ++i) {
        if (int c = compare_terms(a.arg(i), b.arg(i)); c != 0) return c;
      }
      return 0;
    }
  }
  return 0;
}

// ---------------------------------------------------------------------------

Symbols::Symbols() {
  for (const char* name : {"[]", "true", "false", ".", "-", "t", "=", "dif", ",", ";", "call", "if_",
                           "fail", "once"}) {
    intern(name);
  }
  functor(kDot, 2);
  functor(kMinus, 2);
  functor(kTreeNode, 3);
  functor(kEquals, 2);
  functor(kEquals, 3);
  functor(kDif, 2);
}

AtomId Symbols::intern(std::string_view name) {
  if (auto it = atom_index_.find(std::string(name)); it != atom_index_.end()) return it->second;
  const auto id = static_cast<AtomId>(atoms_.size());
  atoms_.emplace_back(name);
  atom_index_.emplace(atoms_.back(), id);
  return id;
}

std::optional<AtomId> Symbols::find(std::string_view name) const {
  if (auto it = atom_index_.find(std::string(name)); it != atom_index_.end()) return it->second;
  return std::nullopt;
}

FunctorId Symbols::functor(AtomId name, std::uint32_t arity) {
  const auto key = functor_key(name, arity);
  if (auto it = functor_index_.find(key); it != functor_index_.end()) return it->second;
  const auto id = static_cast<FunctorId>(functors_.size());
  functors_.push_back({name, arity});
  functor_index_.emplace(key, id);
  return id;
}

std::optional<FunctorId> Symbols::find_functor(AtomId name, std::uint32_t arity) const {
  if (auto it = functor_index_.find(functor_key(name, arity)); it != functor_index_.end()) {
    return it->second;
  }
  return std::nullopt;
}

std::string Symbols::indicator(FunctorId f) const {
  return name(functor_name(f)) + "/" + std::to_string(functor_arity(f));
}

// ---------------------------------------------------------------------------

Ref Bindings::make_struct(FunctorId f, std::span<const Ref> args) {
  const auto at = static_cast<std::uint32_t>(heap_.size());
  heap_.push_back(Ref::functor(f, static_cast<std::uint32_t>(args.size())));
  heap_.insert(heap_.end(), args.begin(), args.end());
  return Ref::str(at);
}

Bindings::Frame Bindings::instantiate(const TermTemplate& tmpl) {
  const Frame frame{static_cast<std::uint32_t>(vars_.size()), static_cast<std::uint32_t>(heap_.size())};
  vars_.resize(vars_.size() + tmpl.var_count);
  for (std::uint32_t i = 0; i < tmpl.var_count; ++i) vars_[frame.var_base + i] = Ref::var(frame.var_base + i);
  heap_.resize(heap_.size() + tmpl.cells.size());
  Ref* out = heap_.data() + frame.heap_base;
  for (Ref cell : tmpl.cells) *out++ = resolve(cell, frame);
  return frame;
}

void Bindings::undo_trail_to(std::uint32_t trail_mark, TrailListener* listener) {
  while (trail_.size() > trail_mark) {
    const TrailEntry e = trail_.back();
    trail_.pop_back();
    if (e.kind == TrailKind::Bind) {
      vars_[e.a] = Ref::var(e.a);
    } else if (listener != nullptr) {
      listener->undo(e);
    }
  }
}

void Bindings::undo_to(const Mark& m, TrailListener* listener) {
  undo_trail_to(m.trail, listener);
  heap_.resize(m.heap);
  vars_.resize(m.vars);
}

std::uint64_t Bindings::hash() const {
  std::uint64_t h = 1469598103934665603ull;
  for (Ref r : vars_) {
    h ^= r.bits();
    h *= 1099511628211ull;
  }
  return h;
}

// ---------------------------------------------------------------------------

Ref import_term(const Term& t, Bindings& b, Symbols& syms, ImportMap& vars) {
  switch (t.kind()) {
    case Term::Kind::Var: {
      auto it = vars.find(t.var_id());
      if (it == vars.end()) it = vars.emplace(t.var_id(), b.new_var()).first;
      return Ref::var(it->second);
    }
    case Term::Kind::Atom: return Ref::atom(syms.intern(t.name()));
    case Term::Kind::Int:
      if (t.value() < Ref::kMinInt || t.value() > Ref::kMaxInt) {
        throw std::out_of_range("integer out of range: " + std::to_string(t.value()));
      }
      return Ref::integer(t.value());
    case Term::Kind::Compound: {
      std::vector<Ref> args;
      args.reserve(t.arity());
      for (const Term& a : t.args()) args.push_back(import_term(a, b, syms, vars));
      const auto f = syms.functor(t.name(), static_cast<std::uint32_t>(t.arity()));
      return b.make_struct(f, args);
    }
  }
  return Ref::atom(Symbols::kNil);
}

Term walk_star(Ref t, const Bindings& b, const Symbols& syms) {
  t = b.deref(t);
  switch (t.tag()) {
    case Ref::Tag::Var: return Term::var(t.index());
    case Ref::Tag::Atom: return Term::atom(syms.name(t.index()));
    case Ref::Tag::Int: return Term::integer(t.int_value());
    case Ref::Tag::Str: {
      const FunctorId f = b.functor_of(t);
      const std::uint32_t n = b.arity_of(t);
      // Walk list spines iteratively so long lists do not recurse deeply.
      if (f == Symbols::kList) {
        std::vector<Term> items;
        Ref cur = t;
        while (cur.is_str() && b.functor_of(cur) == Symbols::kList) {
          items.push_back(walk_star(b.arg(cur, 0), b, syms));
          cur = b.deref(b.arg(cur, 1));
        }
        return Term::list(std::move(items), walk_star(cur, b, syms));
      }
      std::vector<Term> args;
      args.reserve(n);
      for (std::uint32_t i = 0; i < n; ++i) args.push_back(walk_star(b.arg(t, i), b, syms));
      return Term::compound(syms.name(syms.functor_name(f)), std::move(args));
    }
    case Ref::Tag::Functor: break;
  }
  throw std::logic_error("walk_star: functor cell is not a term");
}

bool term_identical(Ref a, Ref b, const Bindings& bindings) {
  std::vector<std::pair<Ref, Ref>> todo{{a, b}};
  while (!todo.empty()) {
    auto [x, y] = todo.back();
    todo.pop_back();
    x = bindings.deref(x);
    y = bindings.deref(y);
    if (x == y) continue;
    if (!x.is_str() || !y.is_str()) return false;
    if (bindings.heap_cell(x.index()) != bindings.heap_cell(y.index())) return false;
    const std::uint32_t n = bindings.arity_of(x);
    for (std::uint32_t i = n; i-- > 0;) todo.emplace_back(bindings.arg(x, i), bindings.arg(y, i));
  }
  return true;
}

void collect_variables(Ref t, const Bindings& b, std::vector<VarId>& out) {
  std::unordered_set<VarId> seen(out.begin(), out.end());
  std::vector<Ref> todo{t};
  while (!todo.empty()) {
    const Ref x = b.deref(todo.back());
    todo.pop_back();
    if (x.is_var()) {
      if (seen.insert(x.index()).second) out.push_back(x.index());
    } else if (x.is_str()) {
      for (std::uint32_t i = b.arity_of(x); i-- > 0;) todo.push_back(b.arg(x, i));
    }
  }
}

std::vector<VarId> term_variables(Ref t, const Bindings& b) {
  std::vector<VarId> out;
  collect_variables(t, b, out);
  return out;
}

}  // namespace reif
