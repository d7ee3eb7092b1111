#include "cli.hpp"

#include <istream>
#include <ostream>

#include "reif/bench.hpp"
#include "reif/engine.hpp"
#include "reif/error.hpp"
#include "reif/format.hpp"
#include "reif/goal.hpp"
#include "reif/parser.hpp"

namespace reif::cli {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::string terminated(std::string text) {
  text = trim(text);
  if (text.empty() || text.back() != '.') text += '.';
  return text;
}

Engine make_engine(const CliConfig& config) {
  EngineOptions opts;
  opts.expand = config.expand;
  opts.occurs_check = config.occurs_check;
  return Engine(opts);
}

/// Runs `fn`, printing any error to `err`.  Returns false on error.
template <typename Fn>
bool guarded(std::ostream& err, Fn&& fn) {
  try {
    fn();
    return true;
  } catch (const ThrownError& e) {
    err << "error: " << format_term(e.term()) << '\n';
  } catch (const SyntaxError& e) {
    err << "error: syntax error: " << e.what() << '\n';
  } catch (const CompileError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
  }
  return false;
}

bool load_files(Engine& engine, const std::vector<std::string>& files, std::ostream& err) {
  for (const std::string& f : files) {
    const bool ok = guarded(err, [&] {
      try {
        engine.consult_file(f);
      } catch (const SyntaxError& e) {
        throw SyntaxError(e.pos(), f + ": " + e.message(), e.expected());
      }
    });
    if (!ok) return false;
  }
  return true;
}

void print_stats(const SolveStats& s, std::ostream& out) {
  out << "% steps=" << s.steps << " cells=" << s.cells_visited << " cps=" << s.choicepoints_created << '\n';
}

}  // namespace

int cmd_run(const CliConfig& config, std::ostream& out, std::ostream& err) {
  Engine engine = make_engine(config);
  if (!load_files(engine, config.files, err)) return 2;
  if (!config.query) {
    err << "error: no query given\n";
    return 2;
  }

  std::vector<Answer> answers;
  bool exhausted = false;
  std::optional<Query> query;
  const bool ok = guarded(err, [&] {
    query.emplace(engine.query(terminated(*config.query)));
    while (!config.max_answers || answers.size() < *config.max_answers) {
      auto a = query->next();
      if (!a) {
        exhausted = true;
        break;
      }
      answers.push_back(std::move(*a));
    }
  });
  if (!ok) {
    for (std::size_t i = 0; i < answers.size(); ++i) out << format_answer(answers[i], i == 0) << '\n';
    if (config.stats && query) print_stats(query->stats(), out);
    return 2;
  }
  out << format_answers(answers, exhausted);
  if (config.stats) print_stats(query->stats(), out);
  return answers.empty() ? 1 : 0;
}

int repl(const CliConfig& config, std::istream& in, std::ostream& out, std::ostream& err) {
  Engine engine = make_engine(config);
  load_files(engine, config.files, err);

  std::string line;
  for (;;) {
    out << "?- " << std::flush;
    if (!std::getline(in, line)) {
      out << '\n';
      return 0;
    }
    line = trim(line);
    if (line.rfind("?-", 0) == 0) line = trim(line.substr(2));
    if (line.empty()) continue;
    if (line == "halt." || line == ":quit") return 0;
    if (line.rfind(":load", 0) == 0) {
      const std::string path = trim(line.substr(5));
      if (load_files(engine, {path}, err)) out << "% loaded " << path << '\n';
      continue;
    }

    std::optional<Query> query;
    bool first = true;
    guarded(err, [&] {
      query.emplace(engine.query(terminated(line)));
      for (;;) {
        auto a = query->next();
        if (!a) {
          out << (first ? "   false.\n" : "\n;  false.\n");
          return;
        }
        if (!first) out << '\n';
        out << format_answer(*a, first);
        first = false;
        if (a->pending_choicepoints == 0) {
          out << ".\n";
          return;
        }
        out << ' ' << std::flush;
        std::string reply;
        if (!std::getline(in, reply) || trim(reply) != ";") {
          out << ".\n";
          return;
        }
      }
    });
    if (config.stats && query) print_stats(query->stats(), out);
  }
}

int cmd_bench(std::size_t reps, int runs, std::ostream& out) {
  const std::vector<BenchRow> rows = run_bench(reps, runs);
  out << format_bench_table(rows) << '\n' << format_bench_csv(rows);
  return 0;
}

}  // namespace reif::cli
