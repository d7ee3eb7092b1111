#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "reif/term.hpp"

namespace reif {

using BindingPair = std::pair<VarId, Ref>;

/// Three-way classification of a pair of terms under the current bindings.
struct TrialOutcome {
  enum class Kind : std::uint8_t { Identical, Clash, UnifiesWith };

  Kind kind = Kind::Clash;
  /// For UnifiesWith: the bindings a most general unifier adds, in
  /// left-to-right, depth-first discovery order.
  std::vector<BindingPair> pairs;

  static TrialOutcome identical() { return {Kind::Identical, {}}; }
  static TrialOutcome clash() { return {Kind::Clash, {}}; }
};

/// Unifies `a` and `b`, trailing every binding.  On failure the bindings
/// made so far stay on the trail; the caller rewinds.
///
/// `list_cells`, when given, is incremented by the number of list ('.'/2)
/// and tree (t/3) nodes destructured, but only if unification succeeds.
bool unify(Ref a, Ref b, Bindings& bindings, std::uint64_t* list_cells = nullptr);

/// Classifies `a` against `b` without changing `bindings`.
TrialOutcome trial_unify(Ref a, Ref b, Bindings& bindings);

/// Classifies the simultaneous equality of every (var, term) pair.
TrialOutcome trial_unify_pairs(std::span<const BindingPair> pairs, Bindings& bindings);

}  // namespace reif
