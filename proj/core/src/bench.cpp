#include "reif/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <sstream>

namespace reif {

Term letters_list() {
  std::vector<Term> items;
  for (char c = 'a'; c <= 'z'; ++c) items.push_back(Term::atom(std::string(1, c)));
  items.push_back(Term::atom(" "));
  return Term::list(std::move(items));
}

Term keyed_list() {
  std::vector<Term> items;
  for (int i = 1; i <= 26; ++i) {
    items.push_back(Term::pair(Term::atom("k" + std::to_string(i)), Term::atom("v" + std::to_string(i))));
  }
  return Term::list(std::move(items));
}

std::vector<BenchWorkload> default_workloads() {
  const Term z = Term::atom("z");
  const Term letters = letters_list();
  BenchWorkload l{"letters", {}};
  l.contenders.push_back({"once_member", Term::compound("once", {Term::compound("member", {z, letters})}), false});
  l.contenders.push_back({"memberd_dif", Term::compound("memberd_dif", {z, letters}), false});
  l.contenders.push_back({"memberd_if", Term::compound("memberd", {z, letters}), false});
  l.contenders.push_back({"memberd_expanded", Term::compound("memberd", {z, letters}), true});

  // The key list is ours: k1-v1 .. k26-v26, looking up the 10th key.
  const Term key = Term::atom("k10");
  const Term v = Term::var(0, "V");
  const Term pairs = keyed_list();
  BenchWorkload k{"keyed", {}};
  k.contenders.push_back(
      {"once_member", Term::compound("once", {Term::compound("member", {Term::pair(key, v), pairs})}), false});
  k.contenders.push_back({"memberd_dif", Term::compound("memberk_dif", {key, pairs, v}), false});
  k.contenders.push_back({"memberd_if", Term::compound("memberk", {key, pairs, v}), false});
  k.contenders.push_back({"memberd_expanded", Term::compound("memberk", {key, pairs, v}), true});
  return {l, k};
}

namespace {

struct Timed {
  BenchRow row;
  PreparedQuery prepared;
  std::vector<double> times;
  bool first = true;
};

void timed_run(Engine& engine, const BenchContender& c, Timed& t, std::size_t reps) {
  engine.set_expand(c.expand);
  const auto t0 = std::chrono::steady_clock::now();
  for (std::size_t rep = 0; rep < reps; ++rep) {
    Query q = engine.query(t.prepared);
    const std::size_t answers = q.drain();
    const SolveStats& s = q.stats();
    BenchRow& row = t.row;
    if (t.first) {
      row.answers = answers;
      row.steps = s.steps;
      row.cells_visited = s.cells_visited;
      row.choicepoints_created = s.choicepoints_created;
      t.first = false;
    } else if (answers != row.answers || s.steps != row.steps || s.cells_visited != row.cells_visited ||
               s.choicepoints_created != row.choicepoints_created) {
      row.deterministic = false;
    }
  }
  const auto t1 = std::chrono::steady_clock::now();
  t.times.push_back(std::chrono::duration<double, std::milli>(t1 - t0).count());
}

double median(std::vector<double> v) {
  if (v.empty()) return 0.0;
  std::sort(v.begin(), v.end());
  return v[v.size() / 2];
}

}  // namespace

BenchRow run_contender(Engine& engine, const std::string& workload, const BenchContender& c,
                       std::size_t reps, int runs) {
  Timed t;
  t.row.workload = workload;
  t.row.contender = c.name;
  t.prepared = engine.prepare(c.goal);
  for (int run = 0; run < runs; ++run) timed_run(engine, c, t, reps);
  t.row.median_ms = median(t.times);
  return t.row;
}

std::vector<BenchRow> run_workload(Engine& engine, const BenchWorkload& w, std::size_t reps, int runs) {
  std::vector<Timed> timed(w.contenders.size());
  for (std::size_t i = 0; i < timed.size(); ++i) {
    timed[i].row.workload = w.name;
    timed[i].row.contender = w.contenders[i].name;
    timed[i].prepared = engine.prepare(w.contenders[i].goal);
  }
  // Runs are interleaved across contenders so drift in machine load
  // affects all of them alike.
  for (int run = 0; run < runs; ++run) {
    for (std::size_t i = 0; i < timed.size(); ++i) timed_run(engine, w.contenders[i], timed[i], reps);
  }
  std::vector<BenchRow> rows;
  for (Timed& t : timed) {
    t.row.median_ms = median(t.times);
    rows.push_back(t.row);
  }
  return rows;
}

std::vector<BenchRow> run_bench(std::size_t reps, int runs) {
  Engine engine;
  std::vector<BenchRow> rows;
  for (const BenchWorkload& w : default_workloads()) {
    for (BenchRow& r : run_workload(engine, w, reps, runs)) rows.push_back(std::move(r));
  }
  engine.set_expand(false);
  return rows;
}

std::string format_bench_table(const std::vector<BenchRow>& rows) {
  std::ostringstream out;
  char line[160];
  std::snprintf(line, sizeof line, "%-9s %-17s %7s %7s %7s %6s %10s\n", "workload", "contender", "answers", "steps",
                "cells", "cps", "median ms");
  out << line;
  for (const BenchRow& r : rows) {
    std::snprintf(line, sizeof line, "%-9s %-17s %7zu %7llu %7llu %6llu %10.1f\n", r.workload.c_str(),
                  r.contender.c_str(), r.answers, static_cast<unsigned long long>(r.steps),
                  static_cast<unsigned long long>(r.cells_visited),
                  static_cast<unsigned long long>(r.choicepoints_created), r.median_ms);
    out << line;
  }
  return out.str();
}

std::string format_bench_csv(const std::vector<BenchRow>& rows) {
  std::ostringstream out;
  out << "workload,contender,steps,cells,cps,ms\n";
  char ms[32];
  for (const BenchRow& r : rows) {
    std::snprintf(ms, sizeof ms, "%.3f", r.median_ms);
    out << r.workload << ',' << r.contender << ',' << r.steps << ',' << r.cells_visited << ','
        << r.choicepoints_created << ',' << ms << '\n';
  }
  return out.str();
}

}  // namespace reif
