#include "reif/engine.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "reif/dif.hpp"
#include "reif/error.hpp"
#include "reif/goal.hpp"
#include "reif/parser.hpp"
#include "reif/reif.hpp"
#include "reif/stdlib.hpp"
#include "reif/unify.hpp"

namespace reif {

namespace {

constexpr std::uint32_t kDone = 0xffffffffu;
constexpr std::uint32_t kMaxCallArity = 8;

enum class ContKind : std::uint8_t { Goal, IfCheck, CutBarrier };

struct Cont {
  ContKind kind;
  const Goal* goal;
  Bindings::Frame frame;
  std::uint32_t next;
  std::uint32_t aux;  // IfCheck: truth variable; CutBarrier: choicepoint height
};

enum class AltKind : std::uint8_t { Disj, Clauses, Eq3False, TestEqElse };

struct ChoicePoint {
  AltKind kind;
  Bindings::Mark mark;
  std::uint32_t conts_size;
  std::uint32_t args_begin;
  const Goal* goal;
  Bindings::Frame frame;
  std::uint32_t cont;
  FunctorId pred;
  std::uint32_t next_clause;
  std::uint64_t hash;
};

enum class Native : std::uint8_t { None, Unify, Dif, Eq3, True, Fail, Call, Once };

struct Predicate {
  std::vector<Clause> clauses;
};

}  // namespace

class Machine {
 public:
  explicit Machine(EngineOptions opts) : opts_(opts) {
    b_.set_occurs_check(opts.occurs_check);
    set_native(Symbols::kEq2, Native::Unify);
    set_native(Symbols::kDif2, Native::Dif);
    set_native(Symbols::kEq3, Native::Eq3);
    set_native(syms_.functor("true", 0), Native::True);
    set_native(syms_.functor("fail", 0), Native::Fail);
    set_native(syms_.functor("false", 0), Native::Fail);
    set_native(syms_.functor("once", 1), Native::Once);
    for (std::uint32_t n = 1; n <= kMaxCallArity; ++n) set_native(syms_.functor("call", n), Native::Call);
    consult(embedded_prelude_source());
    if (opts.load_stdlib) consult(embedded_stdlib_source());
  }

  // -- database ------------------------------------------------------------

  void consult(std::string_view source) {
    const std::vector<ClauseSyntax> parsed = parse_program(source);
    std::vector<Clause> compiled;
    compiled.reserve(parsed.size());
    for (const ClauseSyntax& c : parsed) {
      Clause cl = compile_clause(c.head, c.body, syms_);
      if (native_of(cl.functor) != Native::None) {
        throw CompileError(std::to_string(c.pos.line) + ":" + std::to_string(c.pos.column) +
                           ": cannot define clauses for built-in " + syms_.indicator(cl.functor));
      }
      compiled.push_back(std::move(cl));
    }
    ++generation_;
    for (Clause& cl : compiled) {
      if (preds_.size() <= cl.functor) preds_.resize(cl.functor + 1);
      preds_[cl.functor].clauses.push_back(std::move(cl));
    }
  }

  bool defined(FunctorId f) const { return f < preds_.size() && !preds_[f].clauses.empty(); }

  // -- query lifecycle -------------------------------------------------------

  std::shared_ptr<const CompiledQuery> compile(const Term& goal) {
    return std::make_shared<const CompiledQuery>(compile_query(goal, syms_));
  }

  std::uint64_t start(std::shared_ptr<const CompiledQuery> q) {
    ++generation_;
    reset();
    query_ = std::move(q);
    visible_.clear();
    for (const auto& [name, local] : query_->vars) {
      if (!name.empty() && name[0] != '_') visible_.emplace_back(name, local);
    }
    qframe_ = b_.instantiate(query_->tmpl);
    base_ = b_.mark();
    goal_ = opts_.expand ? &query_->expanded : &query_->body;
    frame_ = qframe_;
    cont_ = kDone;
    started_ = false;
    exhausted_ = false;
    return generation_;
  }

  std::optional<Answer> next(std::uint64_t generation) {
    if (!advance(generation)) return std::nullopt;
    return make_answer();
  }

  bool advance(std::uint64_t generation) {
    if (generation != generation_) throw std::logic_error("query was superseded by a newer query or consult");
    if (exhausted_) return false;
    try {
      if (started_ && !backtrack()) {
        exhausted_ = true;
        return false;
      }
      started_ = true;
      if (!run()) {
        exhausted_ = true;
        return false;
      }
    } catch (...) {
      exhausted_ = true;
      throw;
    }
    ++stats_.answers;
    return true;
  }

  bool exhausted(std::uint64_t generation) const { return generation != generation_ || exhausted_; }

  const SolveStats& stats() const { return stats_; }
  EngineOptions& options() { return opts_; }
  Symbols& symbols() { return syms_; }
  void set_occurs_check(bool on) {
    opts_.occurs_check = on;
    b_.set_occurs_check(on);
  }

  std::uint64_t state_hash() const { return b_.hash() * 31u + store_.hash(b_); }

 private:
  void set_native(FunctorId f, Native n) {
    if (native_.size() <= f) native_.resize(f + 1, Native::None);
    native_[f] = n;
  }
  Native native_of(FunctorId f) const { return f < native_.size() ? native_[f] : Native::None; }

  void reset() {
    b_.clear();
    store_.clear();
    conts_.clear();
    cps_.clear();
    argstack_.clear();
    stats_ = {};
  }

  void tick() {
    ++stats_.steps;
    if (opts_.max_steps != 0 && stats_.steps > opts_.max_steps) throw ThrownError::resource("steps");
  }

  Ref resolve(Ref t) const { return Bindings::resolve(t, frame_); }

  std::uint32_t push_cont(ContKind kind, const Goal* goal, Bindings::Frame frame, std::uint32_t next,
                          std::uint32_t aux = 0) {
    conts_.push_back(Cont{kind, goal, frame, next, aux});
    return static_cast<std::uint32_t>(conts_.size() - 1);
  }

  ChoicePoint& push_cp(AltKind kind, const Goal* goal, std::span<const Ref> args = {}) {
    ChoicePoint cp{};
    cp.kind = kind;
    cp.mark = b_.mark();
    cp.conts_size = static_cast<std::uint32_t>(conts_.size());
    cp.args_begin = static_cast<std::uint32_t>(argstack_.size());
    cp.goal = goal;
    cp.frame = frame_;
    cp.cont = cont_;
    if (opts_.check_trail) cp.hash = state_hash();
    argstack_.insert(argstack_.end(), args.begin(), args.end());
    cps_.push_back(cp);
    ++stats_.choicepoints_created;
    return cps_.back();
  }

  void pop_cp() {
    argstack_.resize(cps_.back().args_begin);
    cps_.pop_back();
  }

  void cut_to(std::uint32_t height) {
    if (height >= cps_.size()) return;
    argstack_.resize(cps_[height].args_begin);
    cps_.resize(height);
  }

  bool unify_wake(Ref a, Ref b) {
    const auto tm = static_cast<std::uint32_t>(b_.trail_size());
    std::uint64_t cells = 0;
    if (!unify(a, b, b_, &cells)) return false;
    stats_.cells_visited += cells;
    return !store_.has_watchers() || store_.wake_since(b_, tm);
  }

  bool post_dif(Ref a, Ref b) { return store_.post_dif(a, b, b_) != DifOutcome::Failed; }

  // -- main loop -------------------------------------------------------------

  /// Runs until an answer (true) or until no alternative is left (false).
  bool run() {
    for (;;) {
      if (goal_ == nullptr) {
        if (cont_ == kDone) return true;
        const Cont c = conts_[cont_];
        cont_ = c.next;
        frame_ = c.frame;
        switch (c.kind) {
          case ContKind::Goal: goal_ = c.goal; break;
          case ContKind::IfCheck: {
            const Ref t = Ref::var(c.aux);
            const TruthValue v = classify_truth(t, b_);
            if (v == TruthValue::True) {
              goal_ = c.goal->first.get();
            } else if (v == TruthValue::False) {
              goal_ = c.goal->second.get();
            } else {
              throw_truth_error(v, t, b_, syms_);
            }
            break;
          }
          case ContKind::CutBarrier: cut_to(c.aux); break;
        }
        continue;
      }
      if (!step() && !backtrack()) return false;
    }
  }

  /// Executes goal_; false means failure.
  bool step() {
    const Goal& g = *goal_;
    switch (g.kind) {
      case GoalKind::True: goal_ = nullptr; return true;
      case GoalKind::Fail: return false;
      case GoalKind::Conj:
        cont_ = push_cont(ContKind::Goal, g.second.get(), frame_, cont_);
        goal_ = g.first.get();
        return true;
      case GoalKind::Disj:
        tick();
        push_cp(AltKind::Disj, g.second.get());
        goal_ = g.first.get();
        return true;
      case GoalKind::Unify:
        tick();
        goal_ = nullptr;
        return unify_wake(resolve(g.a), resolve(g.b));
      case GoalKind::Dif:
        tick();
        goal_ = nullptr;
        return post_dif(resolve(g.a), resolve(g.b));
      case GoalKind::Call: {
        tick();
        argbuf_.clear();
        for (Ref a : g.args) argbuf_.push_back(resolve(a));
        goal_ = nullptr;
        return dispatch(g.functor, argbuf_);
      }
      case GoalKind::CallN: {
        Ref extra[kMaxCallArity];
        const std::size_t n = g.args.size();
        if (n > kMaxCallArity) throw ThrownError::existence("call", n + 1);
        for (std::size_t i = 0; i < n; ++i) extra[i] = resolve(g.args[i]);
        goal_ = nullptr;
        return meta_call(resolve(g.a), std::span<const Ref>(extra, n));
      }
      case GoalKind::IfReified: {
        tick();
        const VarId t = b_.new_var();
        cont_ = push_cont(ContKind::IfCheck, &g, frame_, cont_, t);
        const Ref extra[1] = {Ref::var(t)};
        goal_ = nullptr;
        return meta_call(resolve(g.a), extra);
      }
      case GoalKind::TestEq: {
        tick();
        const Ref x = resolve(g.a);
        const Ref y = resolve(g.b);
        switch (plan_eq3(x, y, b_)) {
          case Eq3Plan::DecidedTrue: goal_ = g.first.get(); return true;
          case Eq3Plan::DecidedFalse: goal_ = g.second.get(); return true;
          case Eq3Plan::Branch:
            push_cp(AltKind::TestEqElse, &g);
            goal_ = g.first.get();
            return unify_wake(x, y);
        }
        return false;
      }
    }
    return false;
  }

  /// Calls `goal` completed by `extra` (call/N).
  bool meta_call(Ref goal, std::span<const Ref> extra) {
    goal = b_.deref(goal);
    Ref tmp[kMaxCallArity + 1];
    std::copy(extra.begin(), extra.end(), tmp);
    const std::size_t n_extra = extra.size();
    metabuf_.clear();
    FunctorId f = 0;
    switch (goal.tag()) {
      case Ref::Tag::Var: throw ThrownError::instantiation();
      case Ref::Tag::Int: throw ThrownError::type("callable", walk_star(goal, b_, syms_));
      case Ref::Tag::Atom: f = syms_.functor(goal.index(), static_cast<std::uint32_t>(n_extra)); break;
      case Ref::Tag::Str: {
        const std::uint32_t n = b_.arity_of(goal);
        const FunctorId g = b_.functor_of(goal);
        for (std::uint32_t i = 0; i < n; ++i) metabuf_.push_back(b_.arg(goal, i));
        f = n_extra == 0 ? g
                         : syms_.functor(syms_.functor_name(g), n + static_cast<std::uint32_t>(n_extra));
        break;
      }
      case Ref::Tag::Functor: throw std::logic_error("meta_call on a functor cell");
    }
    metabuf_.insert(metabuf_.end(), tmp, tmp + n_extra);
    tick();
    argbuf_.assign(metabuf_.begin(), metabuf_.end());
    return dispatch(f, argbuf_);
  }

  /// Runs predicate `f` on `args` (which must not alias argstack_).
  bool dispatch(FunctorId f, std::span<const Ref> args) {
    switch (native_of(f)) {
      case Native::Unify: return unify_wake(args[0], args[1]);
      case Native::Dif: return post_dif(args[0], args[1]);
      case Native::Eq3: return eq3(args[0], args[1], args[2]);
      case Native::True: return true;
      case Native::Fail: return false;
      case Native::Call: {
        Ref extra[kMaxCallArity];
        std::copy(args.begin() + 1, args.end(), extra);
        return meta_call(args[0], std::span<const Ref>(extra, args.size() - 1));
      }
      case Native::Once: {
        cont_ = push_cont(ContKind::CutBarrier, nullptr, frame_, cont_, static_cast<std::uint32_t>(cps_.size()));
        const Ref g = args[0];
        return meta_call(g, {});
      }
      case Native::None: break;
    }
    if (!defined(f)) throw ThrownError::existence(syms_.name(syms_.functor_name(f)), syms_.functor_arity(f));
    return call_pred(f, args);
  }

  bool eq3(Ref x, Ref y, Ref t) {
    switch (plan_eq3(x, y, b_)) {
      case Eq3Plan::DecidedTrue: return unify_wake(t, Ref::atom(Symbols::kTrue));
      case Eq3Plan::DecidedFalse: return unify_wake(t, Ref::atom(Symbols::kFalse));
      case Eq3Plan::Branch: {
        const Ref saved[3] = {x, y, t};
        push_cp(AltKind::Eq3False, nullptr, saved);
        return unify_wake(t, Ref::atom(Symbols::kTrue)) && unify_wake(x, y);
      }
    }
    return false;
  }

  // -- clause resolution -------------------------------------------------

  void compute_keys(std::span<const Ref> args) {
    keybuf_.clear();
    for (Ref a : args) keybuf_.push_back(index_key(b_.deref(a), b_));
  }

  bool candidate(const Clause& c) const {
    for (std::size_t i = 0; i < c.keys.size(); ++i) {
      const IndexKey k = c.keys[i];
      if (k != 0 && keybuf_[i] != 0 && k != keybuf_[i]) return false;
    }
    return true;
  }

  std::uint32_t next_candidate(const Predicate& p, std::uint32_t from) const {
    const auto n = static_cast<std::uint32_t>(p.clauses.size());
    while (from < n && !candidate(p.clauses[from])) ++from;
    return from;
  }

  bool call_pred(FunctorId f, std::span<const Ref> args) {
    const Predicate& p = preds_[f];
    compute_keys(args);
    const std::uint32_t i = next_candidate(p, 0);
    if (i == p.clauses.size()) return false;
    const std::uint32_t j = next_candidate(p, i + 1);
    if (j < p.clauses.size()) {
      ChoicePoint& cp = push_cp(AltKind::Clauses, nullptr, args);
      cp.pred = f;
      cp.next_clause = j;
    }
    return try_clause(p.clauses[i], args);
  }

  bool try_clause(const Clause& c, std::span<const Ref> args) {
    const auto tm = static_cast<std::uint32_t>(b_.trail_size());
    const Bindings::Frame frame = b_.instantiate(c.tmpl);
    std::uint64_t cells = 0;
    for (std::size_t k = 0; k < args.size(); ++k) {
      if (!unify(Bindings::resolve(c.head_args[k], frame), args[k], b_, &cells)) return false;
    }
    stats_.cells_visited += cells;
    if (store_.has_watchers() && !store_.wake_since(b_, tm)) return false;
    goal_ = opts_.expand ? &c.expanded : &c.body;
    frame_ = frame;
    return true;
  }

  bool backtrack() {
    while (!cps_.empty()) {
      ChoicePoint& cp = cps_.back();
      b_.undo_to(cp.mark, &store_);
      conts_.resize(cp.conts_size);
      if (opts_.check_trail && state_hash() != cp.hash) {
        throw std::logic_error("backtracking did not restore the machine state");
      }
      frame_ = cp.frame;
      cont_ = cp.cont;
      switch (cp.kind) {
        case AltKind::Disj:
          goal_ = cp.goal;
          pop_cp();
          return true;
        case AltKind::TestEqElse: {
          const Goal* g = cp.goal;
          pop_cp();
          goal_ = g->second.get();
          if (post_dif(resolve(g->a), resolve(g->b))) return true;
          break;
        }
        case AltKind::Eq3False: {
          const Ref x = argstack_[cp.args_begin];
          const Ref y = argstack_[cp.args_begin + 1];
          const Ref t = argstack_[cp.args_begin + 2];
          pop_cp();
          goal_ = nullptr;
          if (unify_wake(t, Ref::atom(Symbols::kFalse)) && post_dif(x, y)) return true;
          break;
        }
        case AltKind::Clauses: {
          const Predicate& p = preds_[cp.pred];
          const std::uint32_t i = cp.next_clause;
          const std::size_t arity = p.clauses[i].head_args.size();
          argbuf_.assign(argstack_.begin() + cp.args_begin, argstack_.begin() + cp.args_begin + arity);
          compute_keys(argbuf_);
          const std::uint32_t j = next_candidate(p, i + 1);
          if (j < p.clauses.size()) {
            cp.next_clause = j;
          } else {
            pop_cp();
          }
          if (try_clause(p.clauses[i], argbuf_)) return true;
          break;
        }
      }
    }
    b_.undo_to(base_, &store_);
    return false;
  }

  // -- answers -----------------------------------------------------------

  bool cyclic(Ref t) const {
    // Iterative DFS; a Str reached again while still on the path is a cycle.
    std::unordered_set<std::uint32_t> on_path;
    std::unordered_set<std::uint32_t> done;
    std::vector<std::pair<Ref, bool>> todo{{t, false}};
    while (!todo.empty()) {
      auto [x, leaving] = todo.back();
      todo.pop_back();
      if (leaving) {
        on_path.erase(x.index());
        done.insert(x.index());
        continue;
      }
      x = b_.deref(x);
      if (!x.is_str() || done.count(x.index())) continue;
      if (!on_path.insert(x.index()).second) return true;
      todo.emplace_back(x, true);
      for (std::uint32_t i = b_.arity_of(x); i-- > 0;) todo.emplace_back(b_.arg(x, i), false);
    }
    return false;
  }

  Answer make_answer() {
    Answer ans;
    ans.pending_choicepoints = cps_.size();

    struct Entry {
      std::string name;
      VarId var;
      Ref value;
    };
    std::vector<Entry> entries;
    std::vector<VarId> query_vars;
    for (const auto& [name, local] : visible_) {
      const VarId v = qframe_.var_base + local;
      const Ref value = b_.deref(Ref::var(v));
      if (cyclic(value)) throw ThrownError::resource("cyclic_term");
      entries.push_back({name, v, value});
      query_vars.push_back(v);
    }

    // Display name of an unbound variable shared by query variables: the
    // last of them in query order.
    std::unordered_map<VarId, std::string> names;
    std::unordered_map<VarId, std::vector<std::size_t>> groups;
    for (std::size_t i = 0; i < entries.size(); ++i) {
      if (entries[i].value.is_var()) groups[entries[i].value.index()].push_back(i);
    }
    for (const auto& [var, members] : groups) names[var] = entries[members.back()].name;

    std::unordered_set<std::string> taken;
    for (const Entry& e : entries) taken.insert(e.name);
    std::size_t fresh = 0;
    auto fresh_name = [&]() {
      for (;;) {
        std::string n = "_";
        std::size_t k = fresh++;
        std::string suffix;
        do {
          suffix.insert(suffix.begin(), static_cast<char>('A' + k % 26));
          k /= 26;
        } while (k-- > 0);
        n += suffix;
        if (!taken.count(n)) return n;
      }
    };
    auto rename = [&](auto&& self, Term& t) -> void {
      if (t.is_var()) {
        auto it = names.find(t.var_id());
        if (it == names.end()) it = names.emplace(t.var_id(), fresh_name()).first;
        t.set_name(it->second);
        return;
      }
      for (Term& a : t.mutable_args()) self(self, a);
    };

    for (const Entry& e : entries) {
      if (e.value.is_var()) {
        const auto& members = groups[e.value.index()];
        auto pos = std::find_if(members.begin(), members.end(),
                                [&](std::size_t m) { return entries[m].name == e.name; });
        if (pos + 1 == members.end()) continue;
        ans.bindings.emplace_back(e.name, Term::var(e.value.index(), entries[*(pos + 1)].name));
        continue;
      }
      Term t = walk_star(e.value, b_, syms_);
      rename(rename, t);
      ans.bindings.emplace_back(e.name, std::move(t));
    }

    ans.residuals = store_.residual_goals(b_, syms_, query_vars);
    for (Term& r : ans.residuals) rename(rename, r);
    return ans;
  }

  EngineOptions opts_;
  Symbols syms_;
  Bindings b_;
  ConstraintStore store_;
  std::vector<Native> native_;
  std::vector<Predicate> preds_;

  std::shared_ptr<const CompiledQuery> query_;
  std::vector<std::pair<std::string, std::uint32_t>> visible_;
  Bindings::Frame qframe_;
  const Goal* goal_ = nullptr;
  Bindings::Frame frame_;
  std::uint32_t cont_ = kDone;
  std::vector<Cont> conts_;
  std::vector<ChoicePoint> cps_;
  std::vector<Ref> argstack_;
  std::vector<Ref> argbuf_;
  std::vector<Ref> metabuf_;
  std::vector<IndexKey> keybuf_;
  SolveStats stats_;
  bool started_ = false;
  bool exhausted_ = true;
  Bindings::Mark base_;
  std::uint64_t generation_ = 0;
};

// ---------------------------------------------------------------------------

std::optional<Answer> Query::next() { return machine_->next(generation_); }

bool Query::advance() { return machine_->advance(generation_); }

std::size_t Query::drain() {
  std::size_t n = 0;
  while (advance()) ++n;
  return n;
}

bool Query::exhausted() const { return machine_->exhausted(generation_); }

const SolveStats& Query::stats() const { return machine_->stats(); }

Engine::Engine(EngineOptions options) : machine_(std::make_unique<Machine>(options)) {}
Engine::~Engine() = default;
Engine::Engine(Engine&&) noexcept = default;
Engine& Engine::operator=(Engine&&) noexcept = default;

void Engine::consult(std::string_view source) { machine_->consult(source); }

void Engine::consult_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream text;
  text << in.rdbuf();
  machine_->consult(text.str());
}

Query Engine::query(std::string_view text) {
  return query(parse_query(text).goal);
}

Query Engine::query(const Term& goal) { return query(prepare(goal)); }

PreparedQuery Engine::prepare(const Term& goal) { return PreparedQuery(machine_->compile(goal)); }

Query Engine::query(const PreparedQuery& prepared) {
  if (!prepared.compiled_) throw std::invalid_argument("empty prepared query");
  return Query(machine_.get(), machine_->start(prepared.compiled_));
}

std::vector<Answer> Engine::run_query(std::string_view text, std::size_t max_answers) {
  Query q = query(text);
  std::vector<Answer> out;
  while (out.size() < max_answers) {
    auto a = q.next();
    if (!a) break;
    out.push_back(std::move(*a));
  }
  return out;
}

const EngineOptions& Engine::options() const { return machine_->options(); }
void Engine::set_expand(bool on) { machine_->options().expand = on; }
void Engine::set_occurs_check(bool on) { machine_->set_occurs_check(on); }
void Engine::set_max_steps(std::uint64_t n) { machine_->options().max_steps = n; }

bool Engine::has_predicate(std::string_view name, std::uint32_t arity) const {
  Symbols& syms = machine_->symbols();
  auto atom = syms.find(name);
  if (!atom) return false;
  auto f = syms.find_functor(*atom, arity);
  return f && machine_->defined(*f);
}

std::uint64_t Engine::state_hash() const { return machine_->state_hash(); }

const SolveStats& Engine::last_stats() const { return machine_->stats(); }

}  // namespace reif
