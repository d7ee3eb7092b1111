#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "reif/engine.hpp"
#include "reif/format.hpp"

namespace reif::testing {

inline std::vector<Answer> all_answers(Engine& e, std::string_view text) {
  Query q = e.query(text);
  std::vector<Answer> out;
  while (auto a = q.next()) out.push_back(std::move(*a));
  return out;
}

inline std::string transcript(Engine& e, std::string_view text) {
  return format_answers(all_answers(e, text), true);
}

inline Term v(VarId id, std::string name) { return Term::var(id, std::move(name)); }
inline Term a(std::string name) { return Term::atom(std::move(name)); }
inline Term i(std::int64_t n) { return Term::integer(n); }
inline Term f(std::string name, std::vector<Term> args) { return Term::compound(std::move(name), std::move(args)); }

}  // namespace reif::testing
