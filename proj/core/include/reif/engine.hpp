#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "reif/term.hpp"

namespace reif {

struct EngineOptions {
  /// Run clause bodies after specialize(): inline (=)/3 conditions of if_/3.
  bool expand = false;
  bool occurs_check = false;
  /// Per query; exceeding it throws resource_error(steps).  0 disables.
  std::uint64_t max_steps = 1'000'000;
  bool load_stdlib = true;
  /// After every backtrack, verify the bindings and dif store hash to the
  /// values recorded when the choicepoint was pushed.  Slow.
  bool check_trail = false;
};

struct SolveStats {
  /// Predicate calls (user or built-in) plus inline =/2, dif/2, disjunction,
  /// if_/3 and specialized tests.
  std::uint64_t steps = 0;
  /// List and t/3 nodes destructured by successful unifications.
  std::uint64_t cells_visited = 0;
  std::uint64_t choicepoints_created = 0;
  std::uint64_t answers = 0;
};

struct Answer {
  /// Query variables in first-occurrence order.  Variables aliased to each
  /// other appear as a chain `X = Y`; fresh variables are named _A, _B, ...
  std::vector<std::pair<std::string, Term>> bindings;
  /// Suspended dif/2 goals connected to the query variables.
  std::vector<Term> residuals;
  /// Alternatives still open when this answer was produced.
  std::size_t pending_choicepoints = 0;
};

class Machine;
class Engine;
struct CompiledQuery;

/// A query compiled once and started any number of times.
class PreparedQuery {
 public:
  PreparedQuery() = default;

 private:
  friend class Engine;
  explicit PreparedQuery(std::shared_ptr<const CompiledQuery> q) : compiled_(std::move(q)) {}
  std::shared_ptr<const CompiledQuery> compiled_;
};

/// Lazily enumerates the answers of one query.  Only the most recently
/// started query of an engine may be advanced.
class Query {
 public:
  std::optional<Answer> next();
  /// Like next() but without building the answer.
  bool advance();
  /// Advances to exhaustion, discarding answers; returns how many there were.
  std::size_t drain();
  bool exhausted() const;
  const SolveStats& stats() const;

 private:
  friend class Engine;
  Query(Machine* m, std::uint64_t generation) : machine_(m), generation_(generation) {}

  Machine* machine_;
  std::uint64_t generation_;
};

class Engine {
 public:
  explicit Engine(EngineOptions options = {});
  ~Engine();
  Engine(Engine&&) noexcept;
  Engine& operator=(Engine&&) noexcept;

  /// Adds the clauses of `source` to the database.  Throws SyntaxError or
  /// CompileError; on error no clause of `source` is added.
  void consult(std::string_view source);
  /// Throws std::runtime_error when the file cannot be read.
  void consult_file(const std::string& path);

  /// Parses `text` (terminated by '.') and starts it.  Any previous query
  /// is abandoned.
  Query query(std::string_view text);
  /// Starts `goal`.  Answers report its named variables, except those
  /// whose name starts with '_'.
  Query query(const Term& goal);
  PreparedQuery prepare(const Term& goal);
  Query query(const PreparedQuery& prepared);

  /// Collects up to `max_answers` answers.
  std::vector<Answer> run_query(std::string_view text,
                                std::size_t max_answers = std::numeric_limits<std::size_t>::max());

  const EngineOptions& options() const;
  void set_expand(bool on);
  void set_occurs_check(bool on);
  void set_max_steps(std::uint64_t n);

  bool has_predicate(std::string_view name, std::uint32_t arity) const;

  /// Hash of the current bindings and constraint store.
  std::uint64_t state_hash() const;
  /// Statistics of the most recent query.
  const SolveStats& last_stats() const;

 private:
  std::unique_ptr<Machine> machine_;
};

}  // namespace reif
