#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "reif/engine.hpp"
#include "reif/term.hpp"

namespace reif {

struct BenchContender {
  std::string name;  // once_member, memberd_dif, memberd_if, memberd_expanded
  Term goal;
  bool expand = false;
};

struct BenchWorkload {
  std::string name;
  std::vector<BenchContender> contenders;
};

struct BenchRow {
  std::string workload;
  std::string contender;
  /// Per repetition; every repetition is run to exhaustion.
  std::size_t answers = 0;
  std::uint64_t steps = 0;
  std::uint64_t cells_visited = 0;
  std::uint64_t choicepoints_created = 0;
  /// False if some repetition reported different counts than the first.
  bool deterministic = true;
  /// Median over the timed runs of the wall time for all repetitions.
  double median_ms = 0.0;
};

/// [a, b, ..., z, ' ']
Term letters_list();
/// [k1-v1, ..., k26-v26]
Term keyed_list();

/// letters: search z with once(member/2), memberd_dif/2, memberd/2 and
/// memberd/2 expanded.  keyed: search key k10 with once(member/2),
/// memberk_dif/3, memberk/3 and memberk/3 expanded.
std::vector<BenchWorkload> default_workloads();

BenchRow run_contender(Engine& engine, const std::string& workload, const BenchContender& c,
                       std::size_t reps, int runs = 5);

/// All contenders of `w`; timed runs alternate between contenders.
std::vector<BenchRow> run_workload(Engine& engine, const BenchWorkload& w, std::size_t reps, int runs = 5);

std::vector<BenchRow> run_bench(std::size_t reps, int runs = 5);

std::string format_bench_table(const std::vector<BenchRow>& rows);
/// Header `workload,contender,steps,cells,cps,ms` then one line per row.
std::string format_bench_csv(const std::vector<BenchRow>& rows);

}  // namespace reif
