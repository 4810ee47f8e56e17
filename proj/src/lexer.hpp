#pragma once

// Shared tokenizer for formula text and the line-oriented input files.

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "teamlogic/error.hpp"

namespace teamlogic::detail {

enum class Tok {
  ident,
  lparen,
  rparen,
  lbrace,
  rbrace,
  comma,
  dot,
  bar,
  barbar,
  amp,
  eq,
  neq,
  bang,
  question,
  semicolon,
  lt,
  gt,
  otimes,  // (+)
  ocap,    // (&)
  star,
  dual,  // ^d
  arrow,
  slash,
  end
};

struct Token {
  Tok kind = Tok::end;
  std::string_view text;
  std::size_t offset = 0;
};

inline const char* describe(Tok t) {
  switch (t) {
    case Tok::ident: return "identifier";
    case Tok::lparen: return "'('";
    case Tok::rparen: return "')'";
    case Tok::lbrace: return "'{'";
    case Tok::rbrace: return "'}'";
    case Tok::comma: return "','";
    case Tok::dot: return "'.'";
    case Tok::bar: return "'|'";
    case Tok::barbar: return "'||'";
    case Tok::amp: return "'&'";
    case Tok::eq: return "'='";
    case Tok::neq: return "'!='";
    case Tok::bang: return "'!'";
    case Tok::question: return "'?'";
    case Tok::semicolon: return "';'";
    case Tok::lt: return "'<'";
    case Tok::gt: return "'>'";
    case Tok::otimes: return "'(+)'";
    case Tok::ocap: return "'(&)'";
    case Tok::star: return "'*'";
    case Tok::dual: return "'^d'";
    case Tok::arrow: return "'->'";
    case Tok::slash: return "'/'";
    case Tok::end: return "end of input";
  }
  return "token";
}

/// 1-based line and column of a byte offset.
inline std::pair<std::size_t, std::size_t> position(std::string_view text, std::size_t offset) {
  std::size_t line = 1, column = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

[[noreturn]] inline void fail_at(std::string_view text, std::size_t offset, const std::string& message) {
  auto [line, column] = position(text, offset);
  throw ParseError(message, line, column);
}

inline bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

/// Identifiers are runs of [A-Za-z0-9_]; `#` starts a comment running to the
/// end of the line.
inline std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  std::size_t i = 0;
  auto push = [&](Tok k, std::size_t len) {
    out.push_back(Token{k, text.substr(i, len), i});
    i += len;
  };
  while (i < text.size()) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (c == '#') {
      while (i < text.size() && text[i] != '\n') ++i;
      continue;
    }
    if (ident_char(c)) {
      std::size_t j = i;
      while (j < text.size() && ident_char(text[j])) ++j;
      push(Tok::ident, j - i);
      continue;
    }
    const char n = i + 1 < text.size() ? text[i + 1] : '\0';
    const char n2 = i + 2 < text.size() ? text[i + 2] : '\0';
    switch (c) {
      case '(':
        if (n == '+' && n2 == ')') push(Tok::otimes, 3);
        else if (n == '&' && n2 == ')') push(Tok::ocap, 3);
        else push(Tok::lparen, 1);
        break;
      case ')': push(Tok::rparen, 1); break;
      case '{': push(Tok::lbrace, 1); break;
      case '}': push(Tok::rbrace, 1); break;
      case ',': push(Tok::comma, 1); break;
      case '.': push(Tok::dot, 1); break;
      case '|': n == '|' ? push(Tok::barbar, 2) : push(Tok::bar, 1); break;
      case '&': push(Tok::amp, 1); break;
      case '=': push(Tok::eq, 1); break;
      case '!': n == '=' ? push(Tok::neq, 2) : push(Tok::bang, 1); break;
      case '?': push(Tok::question, 1); break;
      case ';': push(Tok::semicolon, 1); break;
      case '<': push(Tok::lt, 1); break;
      case '>': push(Tok::gt, 1); break;
      case '*': push(Tok::star, 1); break;
      case '/': push(Tok::slash, 1); break;
      case '-':
        if (n != '>') fail_at(text, i, "unexpected character '-'");
        push(Tok::arrow, 2);
        break;
      case '^':
        if (n != 'd' || (i + 2 < text.size() && ident_char(n2))) fail_at(text, i, "expected '^d'");
        push(Tok::dual, 2);
        break;
      default:
        fail_at(text, i, std::string("unexpected character '") + c + "'");
    }
  }
  out.push_back(Token{Tok::end, {}, text.size()});
  return out;
}

/// Cursor over a token vector with error reporting against the source text.
class TokenStream {
 public:
  explicit TokenStream(std::string_view text) : text_(text), tokens_(tokenize(text)) {}

  const Token& peek(std::size_t ahead = 0) const {
    const std::size_t k = pos_ + ahead;
    return k < tokens_.size() ? tokens_[k] : tokens_.back();
  }
  bool at(Tok k, std::size_t ahead = 0) const { return peek(ahead).kind == k; }
  bool at_word(std::string_view w, std::size_t ahead = 0) const {
    return peek(ahead).kind == Tok::ident && peek(ahead).text == w;
  }
  const Token& next() {
    const Token& t = peek();
    if (pos_ < tokens_.size() - 1) ++pos_;
    return t;
  }
  bool accept(Tok k) {
    if (!at(k)) return false;
    next();
    return true;
  }
  bool accept_word(std::string_view w) {
    if (!at_word(w)) return false;
    next();
    return true;
  }
  const Token& expect(Tok k) {
    if (!at(k)) fail(std::string("expected ") + describe(k) + ", found " + found());
    return next();
  }
  void expect_word(std::string_view w) {
    if (!at_word(w)) fail("expected '" + std::string(w) + "', found " + found());
    next();
  }
  std::string found() const {
    return at(Tok::end) ? "end of input" : "'" + std::string(peek().text) + "'";
  }
  [[noreturn]] void fail(const std::string& message) const { fail_at(text_, peek().offset, message); }
  [[noreturn]] void fail_at_offset(std::size_t offset, const std::string& message) const {
    fail_at(text_, offset, message);
  }

  /// Offset just past the previously consumed token.
  std::size_t last_end() const {
    if (pos_ == 0) return 0;
    const Token& t = tokens_[pos_ - 1];
    return t.offset + t.text.size();
  }
  std::string_view text() const { return text_; }

 private:
  std::string_view text_;
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

}  // namespace teamlogic::detail
