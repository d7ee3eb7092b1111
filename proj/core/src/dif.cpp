#include "reif/dif.hpp"

#include <algorithm>
#include <unordered_set>

namespace reif {

DifOutcome ConstraintStore::post_dif(Ref a, Ref b, Bindings& bindings) {
  TrialOutcome t = trial_unify(a, b, bindings);
  switch (t.kind) {
    case TrialOutcome::Kind::Clash: return DifOutcome::Entailed;
    case TrialOutcome::Kind::Identical: return DifOutcome::Failed;
    case TrialOutcome::Kind::UnifiesWith: break;
  }
  const auto id = static_cast<std::uint32_t>(diseqs_.size());
  diseqs_.push_back(Disequation{id, a, b, std::move(t.pairs), true});
  bindings.push_trail({TrailKind::DifAdded, id});
  watch_pairs(diseqs_.back(), bindings);
  return DifOutcome::Suspended;
}

void ConstraintStore::watch(VarId v, std::uint32_t id, Bindings& bindings) {
  auto& ids = watch_[v];
  if (std::find(ids.begin(), ids.end(), id) != ids.end()) return;
  ids.push_back(id);
  bindings.push_trail({TrailKind::WatchAdded, v});
}

void ConstraintStore::watch_pairs(const Disequation& d, Bindings& bindings) {
  std::vector<VarId> vars;
  for (const auto& [v, t] : d.pending) {
    collect_variables(Ref::var(v), bindings, vars);
    collect_variables(t, bindings, vars);
  }
  for (VarId v : vars) watch(v, d.id, bindings);
}

bool ConstraintStore::recheck(std::uint32_t id, Bindings& bindings) {
  Disequation& d = diseqs_[id];
  TrialOutcome t = trial_unify_pairs(d.pending, bindings);
  switch (t.kind) {
    case TrialOutcome::Kind::Identical: return false;
    case TrialOutcome::Kind::Clash:
      d.live = false;
      bindings.push_trail({TrailKind::DifKilled, id});
      return true;
    case TrialOutcome::Kind::UnifiesWith:
      if (t.pairs != d.pending) {
        saved_pending_.push_back(std::move(d.pending));
        d.pending = std::move(t.pairs);
        bindings.push_trail({TrailKind::DifPending, id});
        watch_pairs(d, bindings);
      }
      return true;
  }
  return true;
}

bool ConstraintStore::wake(Bindings& bindings, std::span<const VarId> bound) {
  if (watch_.empty()) return true;
  wake_queue_.clear();
  for (VarId v : bound) {
    auto it = watch_.find(v);
    if (it == watch_.end()) continue;
    for (std::uint32_t id : it->second) {
      if (std::find(wake_queue_.begin(), wake_queue_.end(), id) == wake_queue_.end()) {
        wake_queue_.push_back(id);
      }
    }
  }
  // Rechecks add watches, which may grow watch_ vectors; iterate a copy.
  const std::vector<std::uint32_t> queue = wake_queue_;
  for (std::uint32_t id : queue) {
    if (!diseqs_[id].live) continue;
    if (!recheck(id, bindings)) return false;
  }
  return true;
}

bool ConstraintStore::wake_since(Bindings& bindings, std::uint32_t trail_mark) {
  if (watch_.empty()) return true;
  std::vector<VarId> bound;
  for (const TrailEntry& e : bindings.trail_since(trail_mark)) {
    if (e.kind == TrailKind::Bind) bound.push_back(e.a);
  }
  return wake(bindings, bound);
}

std::vector<Term> ConstraintStore::residual_goals(const Bindings& bindings, const Symbols& syms,
                                                  std::span<const VarId> vars) const {
  struct Candidate {
    Term goal;
    std::vector<VarId> vars;
    bool taken = false;
  };
  std::vector<Candidate> candidates;
  for (const Disequation& d : diseqs_) {
    if (!d.live) continue;
    Candidate c;
    if (d.pending.size() == 1) {
      const auto& [v, t] = d.pending.front();
      Term wv = walk_star(Ref::var(v), bindings, syms);
      Term wt = walk_star(t, bindings, syms);
      // Variable first; between two variables keep the orientation of the
      // posted goal.
      Term wl = walk_star(d.lhs, bindings, syms);
      Term wr = walk_star(d.rhs, bindings, syms);
      if (wt.is_var() && ((wl == wv && wr == wt) || (wl == wt && wr == wv))) {
        c.goal = Term::compound("dif", {std::move(wl), std::move(wr)});
      } else {
        c.goal = Term::compound("dif", {std::move(wv), std::move(wt)});
      }
      collect_variables(Ref::var(v), bindings, c.vars);
      collect_variables(t, bindings, c.vars);
    } else {
      c.goal = Term::compound("dif", {walk_star(d.lhs, bindings, syms), walk_star(d.rhs, bindings, syms)});
      collect_variables(d.lhs, bindings, c.vars);
      collect_variables(d.rhs, bindings, c.vars);
    }
    candidates.push_back(std::move(c));
  }

  std::unordered_set<VarId> reachable;
  for (VarId v : vars) {
    std::vector<VarId> vs;
    collect_variables(Ref::var(v), bindings, vs);
    reachable.insert(vs.begin(), vs.end());
  }
  for (bool changed = true; changed;) {
    changed = false;
    for (Candidate& c : candidates) {
      if (c.taken) continue;
      const bool touches =
          std::any_of(c.vars.begin(), c.vars.end(), [&](VarId v) { return reachable.count(v) != 0; });
      if (!touches) continue;
      c.taken = true;
      changed = true;
      reachable.insert(c.vars.begin(), c.vars.end());
    }
  }

  std::vector<Term> out;
  for (Candidate& c : candidates) {
    if (c.taken) out.push_back(std::move(c.goal));
  }
  std::sort(out.begin(), out.end(), [](const Term& a, const Term& b) { return compare_terms(a, b) < 0; });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::size_t ConstraintStore::live_count() const {
  return static_cast<std::size_t>(
      std::count_if(diseqs_.begin(), diseqs_.end(), [](const Disequation& d) { return d.live; }));
}

std::uint64_t ConstraintStore::hash(const Bindings& bindings) const {
  std::uint64_t h = 0xcbf29ce484222325ull;
  auto mix = [&h](std::uint64_t x) {
    h ^= x;
    h *= 0x100000001b3ull;
  };
  for (const Disequation& d : diseqs_) {
    if (!d.live) continue;
    mix(d.id);
    for (const auto& [v, t] : d.pending) {
      mix(v);
      mix(bindings.deref(t).bits());
    }
  }
  // Order-independent over the watch index.
  std::uint64_t watches = 0;
  for (const auto& [v, ids] : watch_) {
    watches += (static_cast<std::uint64_t>(v) * 0x9e3779b97f4a7c15ull) ^ ids.size();
  }
  mix(watches);
  return h;
}

void ConstraintStore::clear() {
  diseqs_.clear();
  watch_.clear();
  saved_pending_.clear();
}

void ConstraintStore::undo(const TrailEntry& entry) {
  switch (entry.kind) {
    case TrailKind::DifAdded: diseqs_.pop_back(); break;
    case TrailKind::DifKilled: diseqs_[entry.a].live = true; break;
    case TrailKind::DifPending:
      diseqs_[entry.a].pending = std::move(saved_pending_.back());
      saved_pending_.pop_back();
      break;
    case TrailKind::WatchAdded: {
      auto it = watch_.find(entry.a);
      it->second.pop_back();
      if (it->second.empty()) watch_.erase(it);
      break;
    }
    case TrailKind::Bind: break;
  }
}

}  // namespace reif
