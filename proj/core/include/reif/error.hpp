#pragma once

#include <stdexcept>
#include <string>

#include "reif/term.hpp"

namespace reif {

/// An error term thrown during execution, e.g.
/// error(type_error(boolean, maybe), _).  Aborts the running query.
class ThrownError : public std::runtime_error {
 public:
  explicit ThrownError(Term error_term);

  /// The complete error(Formal, Context) term.
  const Term& term() const { return term_; }
  /// The Formal part, e.g. instantiation_error.
  const Term& formal() const { return term_.arg(0); }

  static ThrownError instantiation();
  static ThrownError type(std::string type, Term culprit);
  static ThrownError existence(std::string name, std::size_t arity);
  static ThrownError resource(std::string what);

 private:
  Term term_;
};

}  // namespace reif
