#pragma once

#include <cctype>
#include <stdexcept>
#include <string>
#include <vector>

#include "odsq/term.hpp"

namespace odsq {

class parse_error : public std::runtime_error {
public:
  parse_error(int line, int col, const std::string& msg)
      : std::runtime_error("line " + std::to_string(line) + ", col " + std::to_string(col) + ": " +
                           msg),
        line_(line),
        col_(col) {}

  int line() const noexcept { return line_; }
  int col() const noexcept { return col_; }

private:
  int line_, col_;
};

namespace detail {

// Recursive-descent parser for one equation line. Grammar:
//   equation := term '=' term
//   term     := factor (infix factor)*          (left-associative)
//   factor   := IDENT | 'R1' '(' term ',' term ')' | 'R2' '(' ... ')'
//             | '(' term ')'
//   infix    := '*' | '*1' | '*2' | '/' | '/1' | '/2'
// '#' starts a comment; bare '*' and '/' alias '*1' and '/1'.
class LineParser {
public:
  LineParser(RelationSystem& sys, const std::string& text, int line_no)
      : sys_(sys), text_(text), line_(line_no) {}

  void parse_equation() {
    int lhs = parse_term();
    skip_ws();
    expect('=');
    int rhs = parse_term();
    skip_ws();
    if (!done()) fail("unexpected trailing input");
    sys_.equate(lhs, rhs);
  }

private:
  RelationSystem& sys_;
  const std::string& text_;
  int line_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& msg) const {
    throw parse_error(line_, static_cast<int>(pos_) + 1, msg);
  }

  bool done() const { return pos_ >= text_.size() || text_[pos_] == '#'; }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void skip_ws() {
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\r'))
      ++pos_;
  }

  void expect(char c) {
    if (done() || text_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  static bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
  static bool ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  }

  std::string read_ident() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && ident_char(text_[pos_])) ++pos_;
    return text_.substr(start, pos_ - start);
  }

  int parse_term() {
    int acc = parse_factor();
    for (;;) {
      skip_ws();
      char c = done() ? '\0' : peek();
      if (c != '*' && c != '/') return acc;
      ++pos_;
      OpKind op;
      if (peek() == '1') {
        ++pos_;
        op = (c == '*') ? OpKind::Star1 : OpKind::Bar1;
      } else if (peek() == '2') {
        ++pos_;
        op = (c == '*') ? OpKind::Star2 : OpKind::Bar2;
      } else {
        op = (c == '*') ? OpKind::Star1 : OpKind::Bar1;
      }
      int rhs = parse_factor();
      acc = sys_.app(op, acc, rhs);
    }
  }

  int parse_factor() {
    skip_ws();
    if (done()) fail("expected a term");
    char c = peek();
    if (c == '(') {
      ++pos_;
      int inner = parse_term();
      skip_ws();
      expect(')');
      return inner;
    }
    if (!ident_start(c)) fail(std::string("unexpected character '") + c + "'");
    std::size_t at = pos_;
    std::string name = read_ident();
    if (name == "R1" || name == "R2") {
      skip_ws();
      if (peek() != '(') fail(name + " must be applied as " + name + "(t,t)");
      ++pos_;
      int a = parse_term();
      skip_ws();
      expect(',');
      int b = parse_term();
      skip_ws();
      expect(')');
      return sys_.app(name == "R1" ? OpKind::R1 : OpKind::R2, a, b);
    }
    if (name.size() > 1 && (name[0] == 'R')) {
      // R3(...), Rx(...) and the like are not part of the language
      bool digits = true;
      for (std::size_t i = 1; i < name.size(); ++i)
        digits = digits && std::isdigit(static_cast<unsigned char>(name[i]));
      if (digits) {
        pos_ = at;
        fail("undeclared crossing map '" + name + "' (only R1 and R2 exist)");
      }
    }
    return sys_.var_term(name);
  }
};

}  // namespace detail

// Parses relation text: optional leading "vars a b c" declaration lines,
// then one equation per line. Variables otherwise appear in first-occurrence
// order.
inline RelationSystem parse_relation_dsl(const std::string& text) {
  RelationSystem sys;
  std::size_t start = 0;
  int line_no = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    std::string line =
        end == std::string::npos ? text.substr(start) : text.substr(start, end - start);
    ++line_no;

    std::size_t first = line.find_first_not_of(" \t\r");
    if (first != std::string::npos && line[first] != '#') {
      std::size_t tok_end = first;
      while (tok_end < line.size() && line[tok_end] != ' ' && line[tok_end] != '\t' &&
             line[tok_end] != '\r' && line[tok_end] != '#')
        ++tok_end;
      if (line.substr(first, tok_end - first) == "vars") {
        std::string rest = line.substr(tok_end);
        std::size_t p = 0;
        while (p < rest.size()) {
          while (p < rest.size() && (rest[p] == ' ' || rest[p] == '\t' || rest[p] == '\r')) ++p;
          if (p >= rest.size() || rest[p] == '#') break;
          std::size_t q = p;
          while (q < rest.size() && rest[q] != ' ' && rest[q] != '\t' && rest[q] != '\r' &&
                 rest[q] != '#')
            ++q;
          sys.var(rest.substr(p, q - p));
          p = q;
        }
      } else {
        detail::LineParser(sys, line, line_no).parse_equation();
      }
    }
    if (end == std::string::npos) break;
    start = end + 1;
  }
  return sys;
}

// Relation file: a leading "format=1" line, then the DSL.
inline RelationSystem parse_relation_file(const std::string& content) {
  std::size_t end = content.find('\n');
  std::string first = end == std::string::npos ? content : content.substr(0, end);
  while (!first.empty() && (first.back() == '\r' || first.back() == ' ')) first.pop_back();
  if (first != "format=1")
    throw structural_error("relation file must start with 'format=1'");
  return parse_relation_dsl(end == std::string::npos ? "" : content.substr(end + 1));
}

}  // namespace odsq
