#include "opcalc/cli/expression.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <memory>
#include <utility>

#include "opcalc/errors.hpp"

namespace opcalc::cli {
namespace {

using Fn = std::function<Complex(double)>;

// Recursive-descent parser over
//   expr   := term (('+' | '-') term)*
//   term   := factor ('*' factor)*
//   factor := atom ('^' digits)?
//   atom   := number | 'x' | 'i' | ('exp'|'sin'|'cos') '(' expr ')'
//           | '(' expr ')' | '-' factor
class Parser {
 public:
  explicit Parser(const std::string& text) : text_(text) {}

  Fn parse() {
    Fn f = expr();
    skip_space();
    if (pos_ != text_.size())
      throw ExpressionError("unexpected input at position " + std::to_string(pos_));
    return f;
  }

 private:
  Fn expr() {
    Fn acc = term();
    for (;;) {
      skip_space();
      if (consume('+')) {
        acc = [acc, rhs = term()](double x) { return acc(x) + rhs(x); };
      } else if (consume('-')) {
        acc = [acc, rhs = term()](double x) { return acc(x) - rhs(x); };
      } else {
        return acc;
      }
    }
  }

  Fn term() {
    Fn acc = factor();
    for (;;) {
      skip_space();
      if (!consume('*')) return acc;
      acc = [acc, rhs = factor()](double x) { return acc(x) * rhs(x); };
    }
  }

  Fn factor() {
    Fn base = atom();
    skip_space();
    if (!consume('^')) return base;
    skip_space();
    size_t digits = 0;
    int power = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      power = power * 10 + (text_[pos_] - '0');
      ++pos_;
      ++digits;
    }
    if (digits == 0) throw ExpressionError("'^' needs a nonnegative integer exponent");
    return [base, power](double x) {
      Complex acc = 1.0;
      const Complex b = base(x);
      for (int k = 0; k < power; ++k) acc *= b;
      return acc;
    };
  }

  Fn atom() {
    skip_space();
    if (pos_ >= text_.size()) throw ExpressionError("expression ends unexpectedly");
    const char c = text_[pos_];

    if (c == '(') {
      ++pos_;
      Fn inner = expr();
      expect(')');
      return inner;
    }
    if (c == '-') {
      ++pos_;
      Fn inner = factor();
      return [inner](double x) { return -inner(x); };
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      const char* begin = text_.c_str() + pos_;
      char* end = nullptr;
      const double value = std::strtod(begin, &end);
      pos_ += end - begin;
      return [value](double) { return Complex(value); };
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::string name;
      while (pos_ < text_.size() &&
             std::isalpha(static_cast<unsigned char>(text_[pos_])))
        name += text_[pos_++];
      if (name == "x") return [](double x) { return Complex(x); };
      if (name == "i") return [](double) { return Complex(0.0, 1.0); };
      if (name == "exp" || name == "sin" || name == "cos") {
        expect('(');
        Fn inner = expr();
        expect(')');
        if (name == "exp") return [inner](double x) { return std::exp(inner(x)); };
        if (name == "sin") return [inner](double x) { return std::sin(inner(x)); };
        return [inner](double x) { return std::cos(inner(x)); };
      }
      throw ExpressionError("unknown name '" + name + "'");
    }
    throw ExpressionError(std::string("unexpected character '") + c + "'");
  }

  void expect(char c) {
    skip_space();
    if (!consume(c))
      throw ExpressionError(std::string("expected '") + c + "' at position " +
                            std::to_string(pos_));
  }

  bool consume(char c) {
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  const std::string& text_;
  size_t pos_ = 0;
};

}  // namespace

std::function<Complex(double)> parse_expression(const std::string& text) {
  return Parser(text).parse();
}

}  // namespace opcalc::cli
