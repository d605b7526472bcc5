#include <cctype>
#include <stdexcept>

#include "heisred/diophantine.hpp"
#include "heisred/errors.hpp"

namespace heisred {

namespace {

constexpr unsigned kMaxExponent = 64;

// Recursive descent over
//   equation := expr '=' expr
//   expr     := [+|-] term { (+|-) term }
//   term     := power { '*' power }
//   power    := primary [ '^' integer ]
//   primary  := integer | identifier | '(' expr ')'
class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  DiophEquation equation() {
    Polynomial lhs = expr();
    skip_space();
    if (!consume('=')) {
      fail("expected '='");
    }
    std::size_t rhs_at = pos_;
    Polynomial rhs = expr();
    skip_space();
    if (pos_ != text_.size()) {
      fail(peek() == '=' ? "more than one '='" : "unexpected character '" + std::string(1, peek()) + "'");
    }
    try {
      return DiophEquation::from_sides(lhs, rhs);
    } catch (std::invalid_argument const &e) {
      throw ParseError(rhs_at, e.what());
    }
  }

 private:
  [[noreturn]] void fail(std::string const &message) const { throw ParseError(pos_, message); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  bool consume(char c) {
    skip_space();
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Polynomial expr() {
    skip_space();
    bool negate = false;
    if (peek() == '+' || peek() == '-') {
      negate = peek() == '-';
      ++pos_;
    }
    Polynomial out = term();
    if (negate) {
      out = -out;
    }
    for (;;) {
      skip_space();
      char op = peek();
      if (op != '+' && op != '-') {
        return out;
      }
      ++pos_;
      Polynomial rhs = term();
      if (op == '+') {
        out += rhs;
      } else {
        out -= rhs;
      }
    }
  }

  Polynomial term() {
    Polynomial out = power();
    while (consume('*')) {
      out = out * power();
    }
    skip_space();
    char next = peek();
    if (std::isalnum(static_cast<unsigned char>(next)) || next == '(' || next == '_') {
      fail("expected an operator before '" + std::string(1, next) + "'");
    }
    return out;
  }

  Polynomial power() {
    Polynomial base = primary();
    if (!consume('^')) {
      return base;
    }
    skip_space();
    std::size_t at = pos_;
    Integer exponent = literal();
    if (exponent > kMaxExponent) {
      throw ParseError(at, "exponent larger than " + std::to_string(kMaxExponent));
    }
    return pow(base, static_cast<unsigned>(exponent.get_ui()));
  }

  Polynomial primary() {
    skip_space();
    char c = peek();
    if (c == '(') {
      ++pos_;
      Polynomial inner = expr();
      if (!consume(')')) {
        fail("expected ')'");
      }
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      return Polynomial::constant(literal());
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      return Polynomial::variable(std::string(text_.substr(start, pos_ - start)));
    }
    if (c == '\0') {
      fail("unexpected end of input");
    }
    fail("unexpected character '" + std::string(1, c) + "'");
  }

  Integer literal() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
    if (start == pos_) {
      fail("expected an integer literal");
    }
    if (peek() == '.' || peek() == 'e' || peek() == 'E') {
      fail("non-integer literal");
    }
    return Integer(std::string(text_.substr(start, pos_ - start)), 10);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

DiophEquation parse_equation(std::string_view text) { return Parser(text).equation(); }

}  // namespace heisred
