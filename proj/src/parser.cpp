#include "fml/formula.hpp"

#include <cctype>
#include <sstream>

namespace fml {

namespace {

enum class Tok { Ident, Top, Bot, Not, Box, Dia, And, Or, Turnstile, LParen, RParen, End, Invalid };

const char* describe(Tok t) {
  switch (t) {
    case Tok::Ident: return "atom";
    case Tok::Top: return "'T'";
    case Tok::Bot: return "'_|_'";
    case Tok::Not: return "'~'";
    case Tok::Box: return "'[]'";
    case Tok::Dia: return "'<>'";
    case Tok::And: return "'&'";
    case Tok::Or: return "'|'";
    case Tok::Turnstile: return "'|-'";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::End: return "end of input";
    case Tok::Invalid: return "invalid character";
  }
  return "?";
}

struct Token {
  Tok kind = Tok::End;
  std::size_t offset = 0;
  std::string text;
};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  Token next() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    Token t;
    t.offset = pos_;
    if (pos_ >= src_.size()) return t;
    const char c = src_[pos_];
    auto take = [&](Tok kind, std::size_t len) {
      t.kind = kind;
      t.text = std::string(src_.substr(pos_, len));
      pos_ += len;
      return t;
    };
    if (c >= 'a' && c <= 'z') {
      std::size_t end = pos_ + 1;
      while (end < src_.size() &&
             ((src_[end] >= 'a' && src_[end] <= 'z') || (src_[end] >= '0' && src_[end] <= '9') ||
              src_[end] == '_')) {
        ++end;
      }
      return take(Tok::Ident, end - pos_);
    }
    if (starts_with("_|_")) return take(Tok::Bot, 3);
    if (starts_with("|-")) return take(Tok::Turnstile, 2);
    if (starts_with("[]")) return take(Tok::Box, 2);
    if (starts_with("<>")) return take(Tok::Dia, 2);
    switch (c) {
      case 'T': return take(Tok::Top, 1);
      case '~': return take(Tok::Not, 1);
      case '&': return take(Tok::And, 1);
      case '|': return take(Tok::Or, 1);
      case '(': return take(Tok::LParen, 1);
      case ')': return take(Tok::RParen, 1);
      default: return take(Tok::Invalid, 1);
    }
  }

 private:
  bool starts_with(std::string_view s) const { return src_.substr(pos_, s.size()) == s; }

  std::string_view src_;
  std::size_t pos_ = 0;
};

class Parser {
 public:
  explicit Parser(std::string_view src) : lexer_(src) { advance(); }

  Formula formula() { return disjunction(); }

  /// Consumes `kind`, reporting `expected` as the acceptable set on mismatch.
  void expect(Tok kind, std::initializer_list<Tok> expected) {
    if (cur_.kind != kind) fail(expected);
    advance();
  }

  bool at(Tok kind) const { return cur_.kind == kind; }

 private:
  void advance() { cur_ = lexer_.next(); }

  [[noreturn]] void fail(std::initializer_list<Tok> expected) const {
    std::vector<std::string> names;
    for (Tok t : expected) names.emplace_back(describe(t));
    throw ParseError(cur_.offset, std::move(names),
                     cur_.kind == Tok::End ? describe(Tok::End) : "'" + cur_.text + "'");
  }

  Formula disjunction() {
    Formula acc = conjunction();
    while (at(Tok::Or)) {
      advance();
      acc = Formula::disj(acc, conjunction());
    }
    return acc;
  }

  Formula conjunction() {
    Formula acc = unary();
    while (at(Tok::And)) {
      advance();
      acc = Formula::conj(acc, unary());
    }
    return acc;
  }

  Formula unary() {
    switch (cur_.kind) {
      case Tok::Not: advance(); return Formula::neg(unary());
      case Tok::Box: advance(); return Formula::box(unary());
      case Tok::Dia: advance(); return Formula::dia(unary());
      default: return primary();
    }
  }

  Formula primary() {
    switch (cur_.kind) {
      case Tok::Ident: {
        Formula f = Formula::atom(cur_.text);
        advance();
        return f;
      }
      case Tok::Top: advance(); return Formula::top();
      case Tok::Bot: advance(); return Formula::bot();
      case Tok::LParen: {
        advance();
        Formula f = disjunction();
        if (!at(Tok::RParen)) fail({Tok::RParen, Tok::And, Tok::Or});
        advance();
        return f;
      }
      default:
        fail({Tok::Ident, Tok::Top, Tok::Bot, Tok::Not, Tok::Box, Tok::Dia, Tok::LParen});
    }
  }

  Lexer lexer_;
  Token cur_;
};

std::string join_expected(const std::vector<std::string>& expected) {
  std::ostringstream os;
  for (std::size_t i = 0; i < expected.size(); ++i) os << (i ? ", " : "") << expected[i];
  return os.str();
}

}  // namespace

ParseError::ParseError(std::size_t offset, std::vector<std::string> expected, const std::string& found)
    : std::runtime_error("syntax error at offset " + std::to_string(offset) + ": expected " +
                         join_expected(expected) + ", found " + found),
      offset_(offset),
      expected_(std::move(expected)) {}

Formula parse(std::string_view text) {
  Parser p(text);
  Formula f = p.formula();
  p.expect(Tok::End, {Tok::And, Tok::Or, Tok::End});
  return f;
}

Consecution parse_consecution(std::string_view text, LogicId logic) {
  Parser p(text);
  Formula lhs = p.formula();
  p.expect(Tok::Turnstile, {Tok::And, Tok::Or, Tok::Turnstile});
  Formula rhs = p.formula();
  p.expect(Tok::End, {Tok::And, Tok::Or, Tok::End});
  check_language(lhs, logic);
  check_language(rhs, logic);
  return {lhs, rhs, logic};
}

}  // namespace fml
