#include <cctype>

#include "ratcurve/error.hpp"
#include "ratcurve/ratfunc.hpp"

namespace ratcurve {

namespace {

class ExprParser {
 public:
  ExprParser(std::string_view s, FieldPtr K, std::string_view var, bool allow_gen)
      : s_(s), K_(std::move(K)), var_(var), allow_gen_(allow_gen) {}

  RationalFunction parse() {
    RationalFunction r = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(ErrorKind::ParseError, msg + " at position " + std::to_string(pos_) + " in '" + std::string(s_) + "'");
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  RationalFunction expr() {
    RationalFunction acc = term();
    for (;;) {
      if (accept('+'))
        acc = acc + term();
      else if (accept('-'))
        acc = acc - term();
      else
        return acc;
    }
  }
  RationalFunction term() {
    RationalFunction acc = unary();
    for (;;) {
      if (accept('*')) {
        acc = acc * unary();
      } else if (accept('/')) {
        RationalFunction d = unary();
        if (d.num().is_zero()) fail("division by zero");
        acc = acc / d;
      } else {
        return acc;
      }
    }
  }
  RationalFunction unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }
  RationalFunction power() {
    RationalFunction base = atom();
    if (!accept('^')) return base;
    bool neg = accept('-');
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer exponent");
    long e = std::stol(std::string(s_.substr(start, pos_ - start)));
    if (e > 4096) fail("exponent too large");
    RationalFunction r = RationalFunction::constant(K_->one());
    RationalFunction b = base;
    while (e) {
      if (e & 1) r = r * b;
      e >>= 1;
      if (e) b = b * b;
    }
    if (neg) {
      if (r.num().is_zero()) fail("zero raised to a negative power");
      r = RationalFunction::constant(K_->one()) / r;
    }
    return r;
  }
  RationalFunction atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      RationalFunction r = expr();
      if (!accept(')')) fail("expected ')'");
      return r;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      std::string digits(s_.substr(start, pos_ - start));
      Rational v = digits.empty() ? Rational(0) : Rational(Integer(digits));
      if (pos_ < s_.size() && s_[pos_] == '.') {
        ++pos_;
        std::size_t fs = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        std::string frac(s_.substr(fs, pos_ - fs));
        if (!frac.empty()) {
          Integer scale;
          mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
          v += Rational(Integer(frac), scale);
          v.canonicalize();
        }
      }
      return RationalFunction::constant(K_->from_rational(v));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      std::string_view id = s_.substr(start, pos_ - start);
      if (id == var_) return RationalFunction::identity(K_);
      if (allow_gen_ && id == "t") return RationalFunction::constant(K_->gen());
      pos_ = start;
      fail("unknown symbol '" + std::string(id) + "'");
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view s_;
  FieldPtr K_;
  std::string_view var_;
  bool allow_gen_;
  std::size_t pos_ = 0;
};

}  // namespace

RationalFunction parse_rational_function(std::string_view s, const FieldPtr& K, std::string_view var) {
  return ExprParser(s, K, var, var != "t").parse();
}

FieldElement parse_field_element(std::string_view s, const FieldPtr& K) {
  RationalFunction r = ExprParser(s, K, "\x01", true).parse();
  return r.num().coeff(0) / r.den().coeff(0);
}

QPoly parse_qpoly(std::string_view s, std::string_view var) {
  RationalFunction r = ExprParser(s, NumberField::rationals(), var, false).parse();
  if (r.den().degree() != 0) throw Error(ErrorKind::ParseError, "expected a polynomial: '" + std::string(s) + "'");
  return to_qpoly(r.num());
}

}  // namespace ratcurve
