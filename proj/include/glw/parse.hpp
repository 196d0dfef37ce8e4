#pragma once

// Recursive-descent parser for the term syntax.
//
//   formula := disj
//   disj    := conj ('|' conj)*
//   conj    := unary ('&' unary)*
//   unary   := '!' unary | '<' game '>' unary | ident | '(' formula ')'
//   game    := seq (('u' | 'n') seq)*
//   seq     := postfix (';' postfix)*
//   postfix := base ('^d' | '^*' | '^x')*
//   base    := ident | ident ('?' | '!') | '(' formula ')' ('?' | '!')
//            | '(' game ')'
//
// 'u' and 'n' are soft keywords: operators in infix position, ordinary game
// names in operand position. The one ambiguity, '(' in game operand position,
// is resolved by trying the test reading first and backtracking. Errors
// report the furthest point reached, with the tokens expected there.

#include <cctype>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "glw/term.hpp"

namespace glw {

struct ParseError : std::runtime_error {
  int line;
  int column;
  ParseError(const std::string& msg, int line_, int col_)
      : std::runtime_error(msg), line(line_), column(col_) {}
};

namespace detail {

enum class Tok { Ident, Bang, Amp, Pipe, Lt, Gt, LParen, RParen, Semi, Question, CaretD, CaretStar, CaretX, End };

struct Token {
  Tok kind;
  std::string text;
  int line;
  int col;
};

inline bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_' || c == '$'; }
inline bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

inline std::vector<Token> lex(const std::string& src) {
  std::vector<Token> out;
  int line = 1, col = 1;
  std::size_t i = 0;
  auto push = [&](Tok k, std::string text, int l, int c) { out.push_back({k, std::move(text), l, c}); };
  while (i < src.size()) {
    char c = src[i];
    if (c == '\n') {
      ++line;
      col = 1;
      ++i;
      continue;
    }
    if (c == ' ' || c == '\t' || c == '\r') {
      ++col;
      ++i;
      continue;
    }
    int l = line, cl = col;
    if (ident_start(c)) {
      std::size_t j = i + 1;
      while (j < src.size() && ident_char(src[j])) ++j;
      push(Tok::Ident, src.substr(i, j - i), l, cl);
      col += static_cast<int>(j - i);
      i = j;
      continue;
    }
    if (c == '^') {
      if (i + 1 < src.size() && (src[i + 1] == 'd' || src[i + 1] == '*' || src[i + 1] == 'x')) {
        Tok k = src[i + 1] == 'd' ? Tok::CaretD : src[i + 1] == '*' ? Tok::CaretStar : Tok::CaretX;
        push(k, src.substr(i, 2), l, cl);
        i += 2;
        col += 2;
        continue;
      }
      throw ParseError("lex error at line " + std::to_string(l) + ", column " + std::to_string(cl) +
                           ": '^' must be followed by 'd', '*' or 'x'",
                       l, cl);
    }
    Tok k;
    switch (c) {
      case '!': k = Tok::Bang; break;
      case '&': k = Tok::Amp; break;
      case '|': k = Tok::Pipe; break;
      case '<': k = Tok::Lt; break;
      case '>': k = Tok::Gt; break;
      case '(': k = Tok::LParen; break;
      case ')': k = Tok::RParen; break;
      case ';': k = Tok::Semi; break;
      case '?': k = Tok::Question; break;
      default:
        throw ParseError("lex error at line " + std::to_string(l) + ", column " + std::to_string(cl) +
                             ": unexpected character '" + std::string(1, c) + "'",
                         l, cl);
    }
    push(k, std::string(1, c), l, cl);
    ++i;
    ++col;
  }
  out.push_back({Tok::End, "", line, col});
  return out;
}

inline std::string describe(const Token& t) {
  if (t.kind == Tok::End) return "end of input";
  if (t.kind == Tok::Ident) return "identifier '" + t.text + "'";
  return "'" + t.text + "'";
}

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  Formula formula_top() {
    Formula f = disj();
    expect_end();
    return f;
  }

  Game game_top() {
    Game g = game();
    expect_end();
    return g;
  }

 private:
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  std::size_t best_pos_ = 0;
  std::set<std::string> best_expected_;

  const Token& peek() const { return toks_[pos_]; }

  bool at(Tok k) const { return toks_[pos_].kind == k; }

  bool accept(Tok k) {
    if (at(k)) {
      ++pos_;
      return true;
    }
    return false;
  }

  void note(const std::string& what) {
    if (pos_ > best_pos_) {
      best_pos_ = pos_;
      best_expected_.clear();
    }
    if (pos_ == best_pos_) best_expected_.insert(what);
  }

  [[noreturn]] void fail() {
    const Token& t = toks_[best_pos_];
    std::string msg = "parse error at line " + std::to_string(t.line) + ", column " + std::to_string(t.col) +
                      ": unexpected " + describe(t) + "; expected ";
    bool first = true;
    for (const auto& e : best_expected_) {
      if (!first) msg += " or ";
      msg += e;
      first = false;
    }
    throw ParseError(msg, t.line, t.col);
  }

  void expect(Tok k, const std::string& what) {
    if (!accept(k)) {
      note(what);
      fail();
    }
  }

  void expect_end() { expect(Tok::End, "end of input"); }

  std::string ident(const std::string& what) {
    if (!at(Tok::Ident)) {
      note(what);
      fail();
    }
    const Token& t = peek();
    if (!t.text.empty() && t.text[0] == '$')
      throw ParseError("parse error at line " + std::to_string(t.line) + ", column " + std::to_string(t.col) +
                           ": identifier '" + t.text + "' is reserved (names beginning with '$')",
                       t.line, t.col);
    ++pos_;
    return t.text;
  }

  Formula disj() {
    Formula a = conj();
    while (accept(Tok::Pipe)) a = mk_or(a, conj());
    return a;
  }

  Formula conj() {
    Formula a = unary();
    while (accept(Tok::Amp)) a = mk_and(a, unary());
    return a;
  }

  Formula unary() {
    if (accept(Tok::Bang)) return mk_neg(unary());
    if (accept(Tok::Lt)) {
      Game g = game();
      expect(Tok::Gt, "'>'");
      return mk_dia(g, unary());
    }
    if (at(Tok::Ident)) return mk_atom(ident("atom"));
    if (accept(Tok::LParen)) {
      Formula f = disj();
      expect(Tok::RParen, "')'");
      return f;
    }
    note("'!'");
    note("'<'");
    note("atom");
    note("'('");
    fail();
  }

  bool at_choice_op() const { return at(Tok::Ident) && (peek().text == "u" || peek().text == "n"); }

  Game game() {
    Game a = seqg();
    while (at_choice_op()) {
      bool cup = peek().text == "u";
      ++pos_;
      Game b = seqg();
      a = cup ? mk_cup(a, b) : mk_cap(a, b);
    }
    return a;
  }

  Game seqg() {
    Game a = postfix();
    while (accept(Tok::Semi)) a = mk_seq(a, postfix());
    return a;
  }

  Game postfix() {
    Game a = base();
    for (;;) {
      if (accept(Tok::CaretD))
        a = mk_dual(a);
      else if (accept(Tok::CaretStar))
        a = mk_star(a);
      else if (accept(Tok::CaretX))
        a = mk_cross(a);
      else
        break;
    }
    return a;
  }

  Game base() {
    if (at(Tok::Ident)) {
      std::string name = ident("game");
      if (accept(Tok::Question)) return mk_test(mk_atom(name));
      if (accept(Tok::Bang)) return mk_dual_test(mk_atom(name));
      return mk_game(name);
    }
    if (at(Tok::LParen)) {
      // Try the test reading '(' formula ')' ('?'|'!') first; on anything
      // else fall back to '(' game ')'.
      std::size_t snap = pos_;
      ++pos_;
      bool have_formula = false;
      Formula f;
      try {
        f = disj();
        if (accept(Tok::RParen)) have_formula = true;
      } catch (const ParseError&) {
        have_formula = false;
      }
      if (have_formula) {
        if (accept(Tok::Question)) return mk_test(f);
        if (accept(Tok::Bang)) return mk_dual_test(f);
        note("'?'");
        note("'!'");
      }
      pos_ = snap;
      expect(Tok::LParen, "'('");
      Game g = game();
      expect(Tok::RParen, "')'");
      return g;
    }
    note("game");
    note("'('");
    fail();
  }
};

}  // namespace detail

inline Formula parse_formula(const std::string& src) {
  detail::Parser p(detail::lex(src));
  return p.formula_top();
}

inline Game parse_game(const std::string& src) {
  detail::Parser p(detail::lex(src));
  return p.game_top();
}

}  // namespace glw
