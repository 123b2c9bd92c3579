#include "gwpairs/io/expression.hpp"

#include <cctype>
#include <stdexcept>

namespace gwpairs {

namespace {

class Parser {
 public:
  explicit Parser(const std::string& text) : s_(text) {}

  PTSeries parse() {
    PTSeries v = expr();
    skip_space();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("expression error at position " + std::to_string(pos_) + ": " + what);
  }

  void skip_space() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  PTSeries expr() {
    PTSeries v = term();
    while (true) {
      if (accept('+')) {
        v = v + term();
      } else if (accept('-')) {
        v = v - term();
      } else {
        return v;
      }
    }
  }

  PTSeries term() {
    PTSeries v = unary();
    while (true) {
      if (accept('*')) {
        v = v * unary();
      } else if (accept('/')) {
        v = v / unary();
      } else {
        return v;
      }
    }
  }

  PTSeries unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  PTSeries power() {
    PTSeries base = primary();
    if (!accept('^')) return base;
    const bool paren = accept('(');
    const bool negative = accept('-');
    skip_space();
    const size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer exponent");
    const int e = std::stoi(s_.substr(start, pos_ - start));
    if (paren && !accept(')')) fail("expected ')'");
    return base.pow(negative ? -e : e);
  }

  PTSeries primary() {
    skip_space();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      PTSeries v = expr();
      if (!accept(')')) fail("expected ')'");
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return PTSeries(SymRatFunc(GaussianRational(mpz_class(s_.substr(start, pos_ - start)))));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const size_t start = pos_;
      while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      const std::string id = s_.substr(start, pos_ - start);
      const SymRatFunc a = SymRatFunc::s1();
      const SymRatFunc b = SymRatFunc::s2();
      const SymRatFunc d = SymRatFunc::s3();
      if (id == "i") return PTSeries(SymRatFunc(GaussianRational::i()));
      if (id == "q") return PTSeries::q_power(1);
      if (id == "s1") return PTSeries(a);
      if (id == "s2") return PTSeries(b);
      if (id == "s3") return PTSeries(d);
      if (id == "c1") return PTSeries(a + b + d);
      if (id == "c2") return PTSeries(a * b + a * d + b * d);
      if (id == "c3") return PTSeries(a * b * d);
      pos_ = start;
      fail("unknown symbol '" + id + "'");
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  const std::string& s_;
  size_t pos_ = 0;
};

}  // namespace

PTSeries parse_expression(const std::string& text) { return Parser(text).parse(); }

SymRatFunc parse_sym_expression(const std::string& text) {
  const PTSeries v = parse_expression(text);
  if (!v.is_q_free()) throw std::invalid_argument("expression depends on q: " + text);
  return v.is_zero() ? SymRatFunc(0) : v.num().coeffs().front();
}

}  // namespace gwpairs
