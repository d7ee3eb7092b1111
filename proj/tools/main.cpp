#include <iostream>

#include <CLI11.hpp>

#include "cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"reif: pure logic programs with reified conditions"};
  app.require_subcommand(1);

  reif::cli::CliConfig config;

  auto* run = app.add_subcommand("run", "Load FILEs and answer one query");
  std::string query;
  std::size_t n = 0;
  run->add_option("files", config.files, "Program files")->check(CLI::ExistingFile);
  run->add_option("-q,--query", query, "Query, e.g. \"memberd(1, [1,2,3]).\"")->required();
  auto* all = run->add_flag("--all", "Print all answers (default)");
  run->add_option("-n", n, "Stop after N answers")->excludes(all)->check(CLI::PositiveNumber);
  run->add_flag("--expand", config.expand, "Inline (=)/3 conditions of if_/3");
  run->add_flag("--stats", config.stats, "Print step, cell and choicepoint counts");
  run->add_flag("--occurs-check", config.occurs_check, "Unify with occurs check");

  auto* repl = app.add_subcommand("repl", "Interactive top level");
  repl->add_option("files", config.files, "Program files")->check(CLI::ExistingFile);
  repl->add_flag("--expand", config.expand, "Inline (=)/3 conditions of if_/3");
  repl->add_flag("--stats", config.stats, "Print counts after each query");
  repl->add_flag("--occurs-check", config.occurs_check, "Unify with occurs check");

  auto* bench = app.add_subcommand("bench", "Run the membership benchmarks");
  std::size_t reps = 100000;
  int runs = 5;
  bench->add_option("--reps", reps, "Repetitions per timed run")->check(CLI::PositiveNumber);
  bench->add_option("--runs", runs, "Timed runs; the median is reported")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (run->parsed()) {
    config.query = query;
    if (run->count("-n") > 0) config.max_answers = n;
    return reif::cli::cmd_run(config, std::cout, std::cerr);
  }
  if (repl->parsed()) return reif::cli::repl(config, std::cin, std::cout, std::cerr);
  return reif::cli::cmd_bench(reps, runs, std::cout);
}
