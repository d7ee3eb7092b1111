#pragma once

#include <span>
#include <string_view>

#include "reif/goal.hpp"
#include "reif/term.hpp"
#include "reif/unify.hpp"

namespace reif {

/// Reading of the reified slot of if_/3 after the condition has run.
enum class TruthValue : std::uint8_t { True, False, NotBoolean, Unbound };

TruthValue classify_truth(Ref t, const Bindings& b);

/// Throws the error term if_/3 raises for a slot that is not true/false.
[[noreturn]] void throw_truth_error(TruthValue v, Ref t, const Bindings& b, const Symbols& syms);

/// How (=)/3 proceeds for a pair: decided outright, or two branches
/// (true with unification first, then false with dif).
enum class Eq3Plan : std::uint8_t { DecidedTrue, DecidedFalse, Branch };

Eq3Plan plan_eq3(Ref x, Ref y, Bindings& b);

/// Rewrites every if_/3 whose condition is the closure `=(A, B)` into an
/// inline TestEq, recursively.  `cells` is the template the goal's refs
/// point into.  Answers and their order are unchanged.
Goal specialize(const Goal& g, std::span<const Ref> cells);

/// Clause definitions of the meta-level connectives: call/N of ','/2 and
/// ;/2, if_/3 reached through call/N, and the reified ','/3 and ;/3.
std::string_view embedded_prelude_source();

}  // namespace reif
