#include <cctype>
#include <string>

#include "extfin/errors.hpp"
#include "extfin/exactnum/ratfun.hpp"

namespace extfin {

namespace {

// expr  := term (('+' | '-') term)*
// term  := unary (('*' | '/')? unary)*      juxtaposition multiplies
// unary := ('+' | '-') unary | power
// power := atom ('^' ['+' | '-'] integer)?
// atom  := integer | 'q' | '(' expr ')'
class ExprParser {
 public:
  explicit ExprParser(std::string_view text) : text_(text) {}

  RatFun parse() {
    RatFun value = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return value;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw InputError("malformed expression '" + std::string(text_) + "': " + what +
                     " at offset " + std::to_string(pos_));
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_space();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  bool starts_atom() {
    skip_space();
    if (pos_ >= text_.size()) return false;
    char c = text_[pos_];
    return std::isdigit(static_cast<unsigned char>(c)) || c == 'q' || c == '(';
  }

  RatFun expr() {
    RatFun acc = term();
    while (true) {
      if (peek('+')) {
        ++pos_;
        acc += term();
      } else if (peek('-')) {
        ++pos_;
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  RatFun term() {
    RatFun acc = unary();
    while (true) {
      if (peek('*')) {
        ++pos_;
        acc *= unary();
      } else if (peek('/')) {
        ++pos_;
        acc /= unary();
      } else if (starts_atom()) {
        acc *= power();
      } else {
        return acc;
      }
    }
  }

  RatFun unary() {
    if (peek('-')) {
      ++pos_;
      return -unary();
    }
    if (peek('+')) {
      ++pos_;
      return unary();
    }
    return power();
  }

  RatFun power() {
    RatFun base = atom();
    if (!peek('^')) return base;
    ++pos_;
    bool negative = false;
    if (peek('-') || peek('+')) negative = text_[pos_++] == '-';
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer exponent");
    long e = std::stol(std::string(text_.substr(start, pos_ - start)));
    return base.pow(negative ? -e : e);
  }

  RatFun atom() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == 'q') {
      ++pos_;
      return RatFun::q();
    }
    if (c == '(') {
      ++pos_;
      RatFun inner = expr();
      if (!peek(')')) fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return RatFun(Rational(BigInt(std::string(text_.substr(start, pos_ - start)), 10)));
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

RatFun parse_ratfun(std::string_view text) { return ExprParser(text).parse(); }

}  // namespace extfin
