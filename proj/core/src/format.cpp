#include "reif/format.hpp"

#include <cctype>

namespace reif {

namespace {

bool symbol_char(char c) {
  switch (c) {
    case '+': case '-': case '*': case '/': case '\\': case '^': case '<': case '>':
    case '=': case '~': case ':': case '.': case '?': case '@': case '#': case '&': case '$':
      return true;
    default: return false;
  }
}

bool plain_atom(std::string_view s) {
  if (s.empty()) return false;
  if (s == "[]" || s == ";") return true;
  if (std::islower(static_cast<unsigned char>(s[0]))) {
    for (char c : s) {
      if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
    }
    return true;
  }
  for (char c : s) {
    if (!symbol_char(c)) return false;
  }
  // A lone '.' would end the clause.
  return s != ".";
}

void write(const Term& t, std::string& out);

bool is_pair(const Term& t) { return t.is_functor("-", 2); }

void write_operand(const Term& t, bool right, std::string& out) {
  const bool symbolic = t.is_atom() && !t.name().empty() && symbol_char(t.name()[0]);
  const bool parens = symbolic || (right && (is_pair(t) || (t.is_int() && t.value() < 0)));
  if (parens) out += '(';
  write(t, out);
  if (parens) out += ')';
}

void write(const Term& t, std::string& out) {
  switch (t.kind()) {
    case Term::Kind::Var:
      out += t.name().empty() ? "_G" + std::to_string(t.var_id()) : t.name();
      return;
    case Term::Kind::Int: out += std::to_string(t.value()); return;
    case Term::Kind::Atom: out += format_atom(t.name()); return;
    case Term::Kind::Compound: break;
  }
  if (t.is_functor(".", 2)) {
    out += '[';
    const Term* cur = &t;
    bool first = true;
    while (cur->is_functor(".", 2)) {
      if (!first) out += ',';
      first = false;
      write(cur->arg(0), out);
      cur = &cur->arg(1);
    }
    if (!cur->is_atom("[]")) {
      out += '|';
      write(*cur, out);
    }
    out += ']';
    return;
  }
  if (is_pair(t)) {
    write_operand(t.arg(0), false, out);
    out += '-';
    write_operand(t.arg(1), true, out);
    return;
  }
  out += format_atom(t.name());
  out += '(';
  for (std::size_t i = 0; i < t.arity(); ++i) {
    if (i) out += ", ";
    write(t.arg(i), out);
  }
  out += ')';
}

}  // namespace

std::string format_atom(std::string_view name) {
  if (plain_atom(name)) return std::string(name);
  std::string out = "'";
  for (char c : name) {
    switch (c) {
      case '\\': out += "\\\\"; break;
      case '\'': out += "\\'"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default: out += c;
    }
  }
  out += '\'';
  return out;
}

std::string format_term(const Term& t) {
  std::string out;
  write(t, out);
  return out;
}

std::string format_answer_body(const Answer& a) {
  std::string out;
  for (const auto& [name, value] : a.bindings) {
    if (!out.empty()) out += ", ";
    out += name + " = " + format_term(value);
  }
  for (const Term& r : a.residuals) {
    if (!out.empty()) out += ", ";
    out += format_term(r);
  }
  return out.empty() ? "true" : out;
}

std::string format_answer(const Answer& a, bool is_first) {
  return (is_first ? "   " : ";  ") + format_answer_body(a);
}

std::string format_answers(const std::vector<Answer>& answers, bool exhausted) {
  if (answers.empty()) return "   false.\n";
  std::string out;
  for (std::size_t i = 0; i < answers.size(); ++i) {
    out += format_answer(answers[i], i == 0);
    const bool last = i + 1 == answers.size();
    if (!last) {
      out += '\n';
    } else if (answers[i].pending_choicepoints > 0 && exhausted) {
      out += "\n;  false.\n";
    } else {
      out += ".\n";
    }
  }
  return out;
}

}  // namespace reif
