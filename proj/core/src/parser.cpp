#include "reif/parser.hpp"

#include <cctype>
#include <charconv>
#include <string>
#include <unordered_map>

namespace reif {

namespace {

std::string join_expected(const std::vector<std::string>& expected) {
  std::string out;
  for (std::size_t i = 0; i < expected.size(); ++i) {
    if (i) out += i + 1 == expected.size() ? " or " : ", ";
    out += expected[i];
  }
  return out;
}

std::string render(SourcePos pos, const std::string& message, const std::vector<std::string>& expected) {
  std::string out = std::to_string(pos.line) + ":" + std::to_string(pos.column) + ": " + message;
  if (!expected.empty()) out += " (expected " + join_expected(expected) + ")";
  return out;
}

}  // namespace

SyntaxError::SyntaxError(SourcePos pos, std::string message, std::vector<std::string> expected)
    : std::runtime_error(render(pos, message, expected)),
      pos_(pos),
      message_(std::move(message)),
      expected_(std::move(expected)) {}

namespace {

enum class Tok : std::uint8_t { Name, Var, Int, Punct, End, Eof };

struct Token {
  Tok kind = Tok::Eof;
  std::string text;
  std::int64_t value = 0;
  std::size_t begin = 0;
  std::size_t end = 0;
  SourcePos pos;
  bool functional = false;  // name immediately followed by '('
};

bool is_symbol_char(char c) {
  switch (c) {
    case '+': case '-': case '*': case '/': case '\\': case '^': case '<': case '>':
    case '=': case '~': case ':': case '.': case '?': case '@': case '#': case '&': case '$':
      return true;
    default: return false;
  }
}

bool is_alnum(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    for (;;) {
      Token t = next();
      const bool done = t.kind == Tok::Eof;
      out.push_back(std::move(t));
      if (done) return out;
    }
  }

 private:
  char peek(std::size_t k = 0) const { return i_ + k < text_.size() ? text_[i_ + k] : '\0'; }
  bool at_end(std::size_t k = 0) const { return i_ + k >= text_.size(); }

  void advance() {
    if (text_[i_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++i_;
  }

  SourcePos here() const { return {line_, col_}; }

  void skip_layout() {
    while (!at_end()) {
      const char c = peek();
      if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else if (c == '%') {
        while (!at_end() && peek() != '\n') advance();
      } else if (c == '/' && peek(1) == '*') {
        const SourcePos start = here();
        advance();
        advance();
        while (!(peek() == '*' && peek(1) == '/')) {
          if (at_end()) throw SyntaxError(start, "unterminated block comment");
          advance();
        }
        advance();
        advance();
      } else {
        return;
      }
    }
  }

  Token next() {
    skip_layout();
    Token t;
    t.begin = i_;
    t.pos = here();
    if (at_end()) {
      t.kind = Tok::Eof;
      t.end = i_;
      return t;
    }
    const char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (std::isdigit(static_cast<unsigned char>(peek()))) advance();
      if (peek() == '.' && std::isdigit(static_cast<unsigned char>(peek(1)))) {
        throw SyntaxError(t.pos, "floating point numbers are not supported");
      }
      t.kind = Tok::Int;
      t.text = std::string(text_.substr(t.begin, i_ - t.begin));
      auto [p, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), t.value);
      if (ec != std::errc()) throw SyntaxError(t.pos, "integer too large: " + t.text);
    } else if (c == '_' || std::isupper(static_cast<unsigned char>(c))) {
      while (is_alnum(peek())) advance();
      t.kind = Tok::Var;
      t.text = std::string(text_.substr(t.begin, i_ - t.begin));
    } else if (std::islower(static_cast<unsigned char>(c))) {
      while (is_alnum(peek())) advance();
      t.kind = Tok::Name;
      t.text = std::string(text_.substr(t.begin, i_ - t.begin));
    } else if (c == '\'') {
      t.kind = Tok::Name;
      t.text = quoted();
    } else if (c == '.' && (at_end(1) || std::isspace(static_cast<unsigned char>(peek(1))) || peek(1) == '%')) {
      advance();
      t.kind = Tok::End;
      t.text = ".";
    } else if (is_symbol_char(c)) {
      while (is_symbol_char(peek())) advance();
      t.kind = Tok::Name;
      t.text = std::string(text_.substr(t.begin, i_ - t.begin));
    } else if (c == '!') {
      throw SyntaxError(t.pos, "the cut (!) is not supported");
    } else if (c == ';') {
      advance();
      t.kind = Tok::Name;
      t.text = ";";
    } else if (c == '(' || c == ')' || c == '[' || c == ']' || c == '{' || c == '}' || c == ',' || c == '|') {
      advance();
      t.kind = Tok::Punct;
      t.text = std::string(1, c);
    } else {
      throw SyntaxError(t.pos, std::string("unexpected character '") + c + "'");
    }
    t.end = i_;
    t.functional = t.kind == Tok::Name && peek() == '(';
    return t;
  }

  std::string quoted() {
    const SourcePos start = here();
    advance();
    std::string out;
    for (;;) {
      if (at_end()) throw SyntaxError(start, "unterminated quoted atom");
      const char c = peek();
      advance();
      if (c == '\'') {
        if (peek() == '\'') {
          out += '\'';
          advance();
          continue;
        }
        return out;
      }
      if (c == '\\') {
        if (at_end()) throw SyntaxError(start, "unterminated quoted atom");
        const char e = peek();
        advance();
        switch (e) {
          case 'n': out += '\n'; break;
          case 't': out += '\t'; break;
          case '\\': out += '\\'; break;
          case '\'': out += '\''; break;
          case '"': out += '"'; break;
          case '\n': break;
          default: throw SyntaxError(start, std::string("unknown escape \\") + e);
        }
        continue;
      }
      out += c;
    }
  }

  std::string_view text_;
  std::size_t i_ = 0;
  std::size_t line_ = 1;
  std::size_t col_ = 1;
};

struct InfixOp {
  int prec;
  int left_max;   // highest precedence allowed on the left
  int right_max;
};

const InfixOp* infix_op(const std::string& name) {
  static const std::unordered_map<std::string, InfixOp> ops = {
      {":-", {1200, 1199, 1199}}, {";", {1100, 1099, 1100}}, {",", {1000, 999, 1000}},
      {"=", {700, 699, 699}},     {"-", {500, 500, 499}},
  };
  auto it = ops.find(name);
  return it == ops.end() ? nullptr : &it->second;
}

const char* unsupported(const std::string& name) {
  if (name == "->") return "if-then-else (->) is not supported; use if_/3";
  if (name == "*->") return "soft cut (*->) is not supported";
  if (name == "\\+") return "negation as failure (\\+) is not supported; use dif/2 or if_/3";
  return nullptr;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : toks_(Lexer(text).run()) {}

  bool at_eof() const { return cur().kind == Tok::Eof; }

  /// Starts a fresh variable scope.
  void reset_vars() {
    vars_.clear();
    named_.clear();
    next_var_ = 0;
  }

  const std::vector<std::pair<std::string, VarId>>& named_vars() const { return named_; }

  Term expr(int max_prec) {
    int left_prec = 0;
    Term left = primary(left_prec);
    for (;;) {
      const Token& t = cur();
      std::string name;
      if (t.kind == Tok::Punct && t.text == ",") {
        name = ",";
      } else if (t.kind == Tok::Name) {
        name = t.text;
      } else {
        return left;
      }
      const InfixOp* op = infix_op(name);
      if (op == nullptr) {
        if (const char* msg = unsupported(name)) throw SyntaxError(t.pos, msg);
        if (t.kind == Tok::Name) {
          throw SyntaxError(t.pos, "unknown operator '" + name + "'", {"operator", "'.'"});
        }
        return left;
      }
      if (op->prec > max_prec || left_prec > op->left_max) return left;
      ++pos_;
      Term right = expr(op->right_max);
      left = Term::compound(name, {std::move(left), std::move(right)});
      left_prec = op->prec;
    }
  }

  void expect_end(const char* what) {
    if (cur().kind != Tok::End) {
      throw SyntaxError(cur().pos, std::string("unexpected ") + describe(cur()) + " after " + what,
                        {"operator", "'.'"});
    }
    ++pos_;
  }

  void expect_eof() {
    if (!at_eof()) throw SyntaxError(cur().pos, "unexpected " + describe(cur()), {"end of input"});
  }

  const Token& cur() const { return toks_[pos_]; }
  void skip_end() {
    if (cur().kind == Tok::End) ++pos_;
  }

 private:
  static std::string describe(const Token& t) {
    switch (t.kind) {
      case Tok::Eof: return "end of input";
      case Tok::End: return "'.'";
      default: return "'" + t.text + "'";
    }
  }

  const Token& peek(std::size_t k) const {
    const std::size_t at = pos_ + k;
    return at < toks_.size() ? toks_[at] : toks_.back();
  }

  void expect_punct(const char* p, std::vector<std::string> expected) {
    if (cur().kind != Tok::Punct || cur().text != p) {
      throw SyntaxError(cur().pos, "unexpected " + describe(cur()), std::move(expected));
    }
    ++pos_;
  }

  Term variable(const std::string& name) {
    if (name == "_") return Term::var(next_var_++, "_");
    auto [it, fresh] = vars_.emplace(name, next_var_);
    if (fresh) {
      ++next_var_;
      named_.emplace_back(name, it->second);
    }
    return Term::var(it->second, name);
  }

  std::vector<Term> arglist() {
    std::vector<Term> args;
    ++pos_;  // '('
    args.push_back(expr(999));
    while (cur().kind == Tok::Punct && cur().text == ",") {
      ++pos_;
      args.push_back(expr(999));
    }
    expect_punct(")", {"','", "')'"});
    return args;
  }

  Term list() {
    ++pos_;  // '['
    if (cur().kind == Tok::Punct && cur().text == "]") {
      ++pos_;
      return Term::nil();
    }
    std::vector<Term> items;
    items.push_back(expr(999));
    while (cur().kind == Tok::Punct && cur().text == ",") {
      ++pos_;
      items.push_back(expr(999));
    }
    Term tail = Term::nil();
    if (cur().kind == Tok::Punct && cur().text == "|") {
      ++pos_;
      tail = expr(999);
    }
    expect_punct("]", {"','", "'|'", "']'"});
    return Term::list(std::move(items), std::move(tail));
  }

  Term primary(int& prec) {
    prec = 0;
    const Token t = cur();
    switch (t.kind) {
      case Tok::Int:
        ++pos_;
        return Term::integer(t.value);
      case Tok::Var:
        ++pos_;
        return variable(t.text);
      case Tok::Name: {
        if (const char* msg = unsupported(t.text)) throw SyntaxError(t.pos, msg);
        if (t.text == "-" && !t.functional && peek(1).kind == Tok::Int && peek(1).begin == t.end) {
          const std::int64_t v = peek(1).value;
          pos_ += 2;
          return Term::integer(-v);
        }
        ++pos_;
        if (t.functional) return Term::compound(t.text, arglist());
        if (t.text == ":-" && cur().kind != Tok::End) {
          throw SyntaxError(t.pos, "directives are not supported");
        }
        return Term::atom(t.text);
      }
      case Tok::Punct:
        if (t.text == "(") {
          ++pos_;
          Term inner = expr(1200);
          expect_punct(")", {"operator", "')'"});
          return inner;
        }
        if (t.text == "[") return list();
        if (t.text == "{") throw SyntaxError(t.pos, "curly-brace terms are not supported");
        break;
      case Tok::End:
      case Tok::Eof:
        break;
    }
    throw SyntaxError(t.pos, "unexpected " + describe(t), {"term"});
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  std::unordered_map<std::string, VarId> vars_;
  std::vector<std::pair<std::string, VarId>> named_;
  VarId next_var_ = 0;
};

}  // namespace

Term parse_term(std::string_view text) {
  Parser p(text);
  Term t = p.expr(1200);
  p.skip_end();
  p.expect_eof();
  return t;
}

std::vector<ClauseSyntax> parse_program(std::string_view text) {
  Parser p(text);
  std::vector<ClauseSyntax> out;
  while (!p.at_eof()) {
    p.reset_vars();
    const SourcePos pos = p.cur().pos;
    Term t = p.expr(1200);
    p.expect_end("clause");
    ClauseSyntax c;
    c.pos = pos;
    if (t.is_functor(":-", 2)) {
      c.head = t.arg(0);
      c.body = t.arg(1);
    } else {
      c.head = std::move(t);
      c.body = Term::atom("true");
    }
    if (!c.head.is_callable()) {
      throw SyntaxError(pos, "clause head must be an atom or compound term");
    }
    out.push_back(std::move(c));
  }
  return out;
}

QuerySyntax parse_query(std::string_view text) {
  Parser p(text);
  if (p.at_eof()) throw SyntaxError(p.cur().pos, "empty query", {"term"});
  QuerySyntax q;
  q.goal = p.expr(1200);
  p.expect_end("query");
  p.expect_eof();
  q.vars = p.named_vars();
  return q;
}

}  // namespace reif
