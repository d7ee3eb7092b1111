#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "reif/term.hpp"

namespace reif {

/// Raised when a clause or query body cannot be turned into a goal.
class CompileError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A goal missing `missing` trailing arguments: the `If_1` of if_/3 or the
/// `CT_2` of tfilter/3.
struct Closure {
  std::string name;
  std::vector<Term> bound_args;
  std::uint32_t missing = 1;

  /// Reads a callable term as a closure; throws CompileError otherwise.
  static Closure from_term(const Term& callable, std::uint32_t missing);
};

/// The goal term `name(bound_args..., extra...)`.  Throws std::invalid_argument
/// (a type error) when `extra` does not supply exactly `missing` terms.
Term apply_closure(const Closure& c, std::span<const Term> extra);

enum class GoalKind : std::uint8_t {
  True,
  Fail,
  Unify,       // a = b
  Dif,         // dif(a, b)
  Conj,        // first, second
  Disj,        // first ; second
  Call,        // functor(args...)
  CallN,       // call(a, args...): a is completed at run time
  IfReified,   // if_(a, first, second)
  TestEq,      // inline (=)/3 test of a and b selecting first or second
};

/// Executable goal tree.  Term operands are template refs, resolved against
/// the frame of the clause activation that runs the goal.
struct Goal {
  GoalKind kind = GoalKind::True;
  Ref a;
  Ref b;
  FunctorId functor = 0;
  std::vector<Ref> args;
  std::unique_ptr<Goal> first;
  std::unique_ptr<Goal> second;

  Goal() = default;
  explicit Goal(GoalKind k) : kind(k) {}
  Goal(Goal&&) noexcept = default;
  Goal& operator=(Goal&&) noexcept = default;

  Goal clone() const;

  static Goal binary(GoalKind k, Goal lhs, Goal rhs);
};

/// First-argument-style index key of one argument: 0 matches anything.
using IndexKey = std::uint64_t;

struct Clause {
  TermTemplate tmpl;
  Ref head;  // template ref of the head term
  std::vector<Ref> head_args;
  std::vector<IndexKey> keys;
  Goal body;
  Goal expanded;  // body after specialize()
  FunctorId functor = 0;
};

/// A query compiled like a headless clause.
struct CompiledQuery {
  TermTemplate tmpl;
  Goal body;
  Goal expanded;
  /// Named variables in first-occurrence order, with template indices.
  std::vector<std::pair<std::string, std::uint32_t>> vars;
};

/// Index key for a dereferenced, non-template ref.
inline IndexKey index_key(Ref r, const Bindings& b) {
  if (r.is_var()) return 0;
  if (r.is_str()) return b.heap_cell(r.index()).bits();
  return r.bits();
}

Clause compile_clause(const Term& head, const Term& body, Symbols& syms);
CompiledQuery compile_query(const Term& goal, Symbols& syms);

}  // namespace reif
