#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace reif::cli {

struct CliConfig {
  std::vector<std::string> files;
  std::optional<std::string> query;
  /// nullopt: all answers.
  std::optional<std::size_t> max_answers;
  bool expand = false;
  bool stats = false;
  bool occurs_check = false;
};

/// Exit status: 0 with at least one answer, 1 with none, 2 on errors.
int cmd_run(const CliConfig& config, std::ostream& out, std::ostream& err);

/// Interactive top level.  Returns 0 at end of input.
int repl(const CliConfig& config, std::istream& in, std::ostream& out, std::ostream& err);

int cmd_bench(std::size_t reps, int runs, std::ostream& out);

}  // namespace reif::cli
