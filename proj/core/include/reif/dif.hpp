#pragma once

#include <cstdint>
#include <span>
#include <unordered_map>
#include <vector>

#include "reif/term.hpp"
#include "reif/unify.hpp"

namespace reif {

/// One suspended dif/2: violated exactly when every pending pair becomes
/// identical at the same time.
struct Disequation {
  std::uint32_t id = 0;
  Ref lhs;  // original arguments, kept for display
  Ref rhs;
  std::vector<BindingPair> pending;
  bool live = true;
};

enum class DifOutcome : std::uint8_t { Entailed, Failed, Suspended };

/// Suspension-based disequality store.  Every mutation goes through the
/// trail of the Bindings it is used with, so backtracking restores it.
class ConstraintStore final : public TrailListener {
 public:
  /// Posts dif(a, b).  Never creates alternatives.
  DifOutcome post_dif(Ref a, Ref b, Bindings& bindings);

  /// Rechecks every live disequation watching one of `bound`.  Returns
  /// false if one of them became violated.
  bool wake(Bindings& bindings, std::span<const VarId> bound);

  /// Wakes for every binding on the trail after `trail_mark`.
  bool wake_since(Bindings& bindings, std::uint32_t trail_mark);

  /// dif/2 goals for the live disequations connected (transitively,
  /// through shared variables) to `vars`; deduplicated and in standard
  /// order.  Variables carry their machine ids and no names.
  std::vector<Term> residual_goals(const Bindings& bindings, const Symbols& syms,
                                   std::span<const VarId> vars) const;

  bool has_watchers() const { return !watch_.empty(); }
  std::size_t live_count() const;
  std::span<const Disequation> all() const { return diseqs_; }

  std::uint64_t hash(const Bindings& bindings) const;

  void clear();

  void undo(const TrailEntry& entry) override;

 private:
  void watch(VarId v, std::uint32_t id, Bindings& bindings);
  void watch_pairs(const Disequation& d, Bindings& bindings);
  bool recheck(std::uint32_t id, Bindings& bindings);

  std::vector<Disequation> diseqs_;
  std::unordered_map<VarId, std::vector<std::uint32_t>> watch_;
  std::vector<std::vector<BindingPair>> saved_pending_;
  std::vector<std::uint32_t> wake_queue_;
};

}  // namespace reif
