#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "reif/engine.hpp"
#include "reif/term.hpp"

namespace reif {

/// Renders a term so that parse_term() reads it back: lists as [a,b|T],
/// pairs as K-V, everything else in canonical f(a, b) form, atoms quoted
/// where needed.  Unnamed variables print as _G<id>.
std::string format_term(const Term& t);

/// Atom text, quoted if it would not read back as the same atom.
std::string format_atom(std::string_view name);

/// "X = 1, Fs = [1], dif(X, 2)", or "true" when there is nothing to show.
std::string format_answer_body(const Answer& a);

/// One answer line without its terminator: "   " before the first answer,
/// ";  " before later ones.
std::string format_answer(const Answer& a, bool is_first);

/// The whole transcript of a query, as the top level prints it.
/// `exhausted` says whether enumeration ran past the last answer and
/// found nothing more.
std::string format_answers(const std::vector<Answer>& answers, bool exhausted);

}  // namespace reif
