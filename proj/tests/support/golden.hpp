#pragma once

#include <string_view>
#include <vector>

namespace reif::testing {

struct GoldenCase {
  std::string_view query;
  std::string_view expected;  // stdout of `reif run -q`
  int exit_status;
};

// Query transcripts from the reified-membership corpus.  Queries without
// the trailing '.' get one appended by the CLI.
inline const std::vector<GoldenCase>& golden_corpus() {
  static const std::vector<GoldenCase> cases = {
      {"member(1, [1,2,3,4,5]).", "   true\n;  false.\n", 0},
      {"member(1, [1,2,1,4,5]).", "   true\n;  true\n;  false.\n", 0},
      {"member(1, [1,X]).", "   true\n;  X = 1.\n", 0},
      {"memberd(1, [1,X]).", "   true.\n", 0},
      {"memberd(1, [1,2,3]).", "   true.\n", 0},
      {"tfilter(=(X), [1,2,3,2,3,3], Fs).",
       "   X = 1, Fs = [1]\n"
       ";  X = 2, Fs = [2,2]\n"
       ";  X = 3, Fs = [3,3,3]\n"
       ";  Fs = [], dif(X, 1), dif(X, 2), dif(X, 3).\n",
       0},
      {"duplicate(X, [1,2,3,2,3,3]).", "   X = 2\n;  X = 3\n;  false.\n", 0},
      {"firstduplicate(1, [1,2,3,1]).", "   true.\n", 0},
      {"firstduplicate(X, [1,2,2,1]).", "   X = 1.\n", 0},
      {"memberd_t(1, [1|non_list], T).", "   T = true.\n", 0},
      {"memberd_t(X, non_list, T).", "   false.\n", 1},
  };
  return cases;
}

// Further transcripts exercised by the differential and round-trip checks.
inline const std::vector<GoldenCase>& extended_corpus() {
  static const std::vector<GoldenCase> cases = {
      {"memberd_dif(1, [1,2,3]).", "   true\n;  false.\n", 0},
      {"memberd(1, [X,1]).", "   X = 1\n;  dif(X, 1).\n", 0},
      {"firstduplicate(X, [A,B,C]).",
       "   X = A, A = B\n"
       ";  X = A, A = C, dif(C, B)\n"
       ";  X = B, B = C, dif(A, C)\n"
       ";  false.\n",
       0},
      {"=(X, Y, T).", "   X = Y, T = true\n;  T = false, dif(X, Y).\n", 0},
      {"=(1, 1, T).", "   T = true.\n", 0},
      {"=(1, 2, T).", "   T = false.\n", 0},
      {"','(=(X, a), =(X, b), T).", "   X = a, T = false\n;  T = false, dif(X, a).\n", 0},
      {"';'(=(X, a), =(X, b), T).",
       "   X = a, T = true\n;  X = b, T = true\n;  T = false, dif(X, a), dif(X, b).\n", 0},
      {"memberk(k3, [k1-v1,k2-v2,k3-v3], V).", "   V = v3.\n", 0},
      {"memberd_t(2, [1,2,3], T).", "   T = true.\n", 0},
      {"treememberd_t(x, t(a,t(b,nil,nil),nil), T).", "   T = false.\n", 0},
      {"tfilter(=(a), [], Fs).", "   Fs = [].\n", 0},
      {"dif(a, a).", "   false.\n", 1},
      {"X = f(Y, 'hello world', -3), Y = [a|T].",
       "   X = f([a|T], 'hello world', -3), Y = [a|T].\n", 0},
  };
  return cases;
}

}  // namespace reif::testing
