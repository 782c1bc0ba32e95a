#include "parser.hpp"

#include <cctype>

namespace lazcad {

namespace {

class Parser {
 public:
  Parser(const std::string& text, VarOrderPtr ord) : s_(text), ord_(std::move(ord)) {}

  Polynomial run() {
    Polynomial p = expr();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected trailing input");
    return p;
  }

 private:
  const std::string& s_;
  VarOrderPtr ord_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg, static_cast<int>(pos_) + 1);
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  Polynomial expr() {
    bool neg = false;
    skip_ws();
    while (true) {
      if (eat('-'))
        neg = !neg;
      else if (eat('+'))
        ;
      else
        break;
    }
    Polynomial acc = term();
    if (neg) acc = -acc;
    while (true) {
      char c = peek();
      if (c == '+') {
        ++pos_;
        acc = acc + term();
      } else if (c == '-') {
        ++pos_;
        acc = acc - term();
      } else {
        break;
      }
    }
    return acc;
  }

  Polynomial term() {
    Polynomial acc = factor();
    while (peek() == '*') {
      ++pos_;
      acc = acc * factor();
    }
    return acc;
  }

  Polynomial factor() {
    Polynomial base = atom();
    if (peek() == '^') {
      ++pos_;
      skip_ws();
      if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) fail("expected exponent");
      unsigned long e = 0;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
        e = e * 10 + static_cast<unsigned long>(s_[pos_] - '0');
        if (e > 1000000) fail("exponent too large");
        ++pos_;
      }
      return base.pow(static_cast<unsigned>(e));
    }
    return base;
  }

  Polynomial atom() {
    skip_ws();
    if (pos_ >= s_.size()) fail("unexpected end of expression");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial p = expr();
      if (!eat(')')) fail("expected ')'");
      return p;
    }
    if (c == '-' || c == '+') {
      ++pos_;
      Polynomial p = atom();
      return c == '-' ? -p : p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return number();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return identifier();
    fail(std::string("unexpected character '") + c + "'");
  }

  Polynomial number() {
    Integer n = read_integer();
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == '/') {
      // rational literal p/q (q must be a positive integer literal)
      std::size_t save = pos_;
      ++pos_;
      skip_ws();
      if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
        Integer d = read_integer();
        if (d == 0) fail("zero denominator");
        return Polynomial::constant(ord_, Rational(n, d));
      }
      pos_ = save;
      fail("'/' is only allowed in rational literals");
    }
    return Polynomial::constant(ord_, Rational(n));
  }

  Integer read_integer() {
    Integer n = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      n = n * 10 + (s_[pos_] - '0');
      ++pos_;
    }
    return n;
  }

  Polynomial identifier() {
    std::size_t start = pos_;
    while (pos_ < s_.size() &&
           (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
      ++pos_;
    std::string name = s_.substr(start, pos_ - start);
    auto idx = ord_->index_of(name);
    if (!idx) {
      pos_ = start;
      fail("unknown variable '" + name + "'");
    }
    return Polynomial::variable(ord_, *idx);
  }
};

}  // namespace

Polynomial parse_polynomial(const std::string& text, const VarOrderPtr& ord) {
  return Parser(text, ord).run();
}

}  // namespace lazcad
