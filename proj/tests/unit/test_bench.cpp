#include "doctest.h"
#include "helpers.hpp"
#include "reif/bench.hpp"

using namespace reif;
using namespace reif::testing;

namespace {

const BenchRow& row(const std::vector<BenchRow>& rows, const std::string& w, const std::string& c) {
  for (const BenchRow& r : rows) {
    if (r.workload == w && r.contender == c) return r;
  }
  FAIL("missing row " << w << "/" << c);
  return rows.front();
}

}  // namespace

TEST_CASE("workload inputs") {
  const Term l = letters_list();
  int n = 0;
  Term last;
  for (const Term* t = &l; t->is_functor(".", 2); t = &t->arg(1)) {
    ++n;
    last = t->arg(0);
  }
  CHECK(n == 27);
  CHECK(last == a(" "));
  CHECK(format_term(keyed_list()).rfind("[k1-v1,k2-v2,", 0) == 0);
  const auto ws = default_workloads();
  REQUIRE(ws.size() == 2);
  for (const auto& w : ws) CHECK(w.contenders.size() == 4);
}

TEST_CASE("per-rep counts") {
  const auto rows = run_bench(3, 1);
  REQUIRE(rows.size() == 8);
  for (const BenchRow& r : rows) {
    CAPTURE(r.workload);
    CAPTURE(r.contender);
    CHECK(r.deterministic);
    CHECK(r.answers == 1);
  }
  CHECK(row(rows, "letters", "memberd_expanded").cells_visited == 26);
  CHECK(row(rows, "letters", "once_member").cells_visited == 26);
  CHECK(row(rows, "letters", "memberd_expanded").choicepoints_created == 0);
  CHECK(row(rows, "letters", "memberd_dif").choicepoints_created >= 25);
  CHECK(row(rows, "keyed", "memberd_expanded").cells_visited == 10);
  for (const char* w : {"letters", "keyed"}) {
    const auto once = row(rows, w, "once_member").steps;
    const auto dif = row(rows, w, "memberd_dif").steps;
    const auto iff = row(rows, w, "memberd_if").steps;
    const auto exp = row(rows, w, "memberd_expanded").steps;
    CHECK(once <= exp);
    CHECK(exp <= iff);
    CHECK(exp < dif);
  }
}

TEST_CASE("report formats") {
  const auto rows = run_bench(1, 1);
  const std::string csv = format_bench_csv(rows);
  CHECK(csv.rfind("workload,contender,steps,cells,cps,ms\n", 0) == 0);
  CHECK(csv.find("\nletters,memberd_expanded,") != std::string::npos);
  const std::string table = format_bench_table(rows);
  CHECK(table.find("memberd_if") != std::string::npos);
}
