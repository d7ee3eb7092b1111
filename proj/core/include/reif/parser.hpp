#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "reif/term.hpp"

namespace reif {

struct SourcePos {
  std::size_t line = 1;
  std::size_t column = 1;
};

class SyntaxError : public std::runtime_error {
 public:
  SyntaxError(SourcePos pos, std::string message, std::vector<std::string> expected = {});

  SourcePos pos() const { return pos_; }
  const std::string& message() const { return message_; }
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  SourcePos pos_;
  std::string message_;
  std::vector<std::string> expected_;
};

/// One clause as read: `Head.` has body `true`.  Variables are numbered
/// from 0 per clause and carry their source names ("_" when anonymous).
struct ClauseSyntax {
  Term head;
  Term body;
  SourcePos pos;
};

struct QuerySyntax {
  Term goal;
  /// Named variables in first-occurrence order.
  std::vector<std::pair<std::string, VarId>> vars;
};

/// Reads a single term; a trailing '.' is optional.
Term parse_term(std::string_view text);

std::vector<ClauseSyntax> parse_program(std::string_view text);

/// Reads `Goal.`; the terminating '.' is required.
QuerySyntax parse_query(std::string_view text);

}  // namespace reif
