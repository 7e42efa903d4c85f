#include "gwdn/errors.hpp"
#include "gwdn/io.hpp"

#include <cctype>

namespace gwdn {

namespace {

class ExprParser {
 public:
  explicit ExprParser(std::string_view t) : text_(t) {}

  QDOperator run() {
    QDOperator v = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected character");
    return v;
  }

 private:
  QDOperator expr() {
    QDOperator v;
    bool negate = false;
    if (eat('-')) negate = true;
    else eat('+');
    v = term();
    if (negate) v = -v;
    while (true) {
      if (eat('+')) v += term();
      else if (eat('-')) v -= term();
      else return v;
    }
  }

  QDOperator term() {
    QDOperator v = factor();
    while (true) {
      if (eat('*')) {
        v = v * factor();
      } else if (eat('/')) {
        const QDOperator d = factor();
        const Rational c = constant_of(d);
        if (c.is_zero()) fail("division by zero");
        v = v * QDOperator(CoefPoly(c.inverse()));
      } else {
        return v;
      }
    }
  }

  QDOperator factor() {
    if (eat('-')) return -factor();
    QDOperator base = primary();
    if (eat('^')) {
      const unsigned long e = natural();
      QDOperator r(1);
      for (unsigned long k = 0; k < e; ++k) r = r * base;
      return r;
    }
    return base;
  }

  QDOperator primary() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      QDOperator v = expr();
      if (!eat(')')) fail("expected ')'");
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return QDOperator(CoefPoly(Rational::parse(text_.substr(start, pos_ - start))));
    }
    if (c == 'q') {
      ++pos_;
      return QDOperator::q();
    }
    if (c == 'D') {
      ++pos_;
      return QDOperator::D();
    }
    if (c == 'a') {
      ++pos_;
      if (!eat_raw('_')) fail("expected a_i_j");
      const auto i = natural_raw();
      if (!eat_raw('_')) fail("expected a_i_j");
      const auto j = natural_raw();
      return QDOperator(CoefPoly::var(static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j)));
    }
    fail("unexpected character");
  }

  Rational constant_of(const QDOperator& op) {
    if (op.is_zero()) return Rational(0);
    if (op.terms().size() != 1 || op.q_degree() != 0 || op.d_order() != 0 ||
        !op.slice(0).coeff(0).is_constant())
      fail("divisor must be a rational constant");
    return op.slice(0).coeff(0).constant_term();
  }

  unsigned long natural() {
    skip_ws();
    return natural_raw();
  }

  unsigned long natural_raw() {
    const std::size_t start = pos_;
    unsigned long v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + static_cast<unsigned long>(text_[pos_] - '0');
      if (v > 100000) fail("integer too large");
      ++pos_;
    }
    if (pos_ == start) fail("expected a non-negative integer");
    return v;
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool eat_raw(char c) {
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  bool eat(char c) {
    skip_ws();
    return eat_raw(c);
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("cannot parse '" + std::string(text_) + "' at offset " + std::to_string(pos_) +
                     ": " + what);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

QDOperator parse_operator(std::string_view text) { return ExprParser(text).run(); }

CoefPoly parse_coefpoly(std::string_view text) {
  const QDOperator op = parse_operator(text);
  if (op.is_zero()) return {};
  if (op.terms().size() != 1 || op.q_degree() != 0 || op.d_order() != 0)
    throw ParseError("expected a polynomial in the a_i_j, got '" + std::string(text) + "'");
  return op.slice(0).coeff(0);
}

}  // namespace gwdn
