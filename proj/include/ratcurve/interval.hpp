#pragma once

#include <string>

#include "ratcurve/rational.hpp"

namespace ratcurve {

// Closed real interval with exact rational endpoints.  Results of arithmetic
// are rounded outward to the dyadic grid 2^-prec, where prec is the finest
// precision among the operands; exact operands (prec < 0) are never rounded.
class Interval {
 public:
  static constexpr long kExact = -1;

  Interval() = default;
  Interval(const Rational& v) : lo_(v), hi_(v) {}  // NOLINT(google-explicit-constructor)
  Interval(const Rational& lo, const Rational& hi, long prec = kExact);

  const Rational& lo() const { return lo_; }
  const Rational& hi() const { return hi_; }
  long precision() const { return prec_; }
  Rational mid() const { return Rational((lo_ + hi_) / 2); }
  Rational width() const { return Rational(hi_ - lo_); }
  Rational mag() const;
  bool contains(const Rational& v) const { return lo_ <= v && v <= hi_; }
  bool contains_zero() const { return sgn(lo_) <= 0 && sgn(hi_) >= 0; }
  bool strictly_inside(const Interval& outer) const { return outer.lo_ < lo_ && hi_ < outer.hi_; }
  bool overlaps(const Interval& o) const { return !(hi_ < o.lo_ || o.hi_ < lo_); }
  // +1 or -1 when the sign is certified, 0 otherwise.
  int sign() const;

  Interval operator-() const;
  friend Interval operator+(const Interval& a, const Interval& b);
  friend Interval operator-(const Interval& a, const Interval& b);
  friend Interval operator*(const Interval& a, const Interval& b);
  friend Interval operator/(const Interval& a, const Interval& b);
  Interval sqr() const;
  Interval hull(const Interval& o) const;
  Interval with_precision(long prec) const;

  std::string to_string() const;

 private:
  void round_out();

  Rational lo_{0}, hi_{0};
  long prec_ = kExact;
};

struct ComplexInterval {
  Interval re, im;

  ComplexInterval() = default;
  ComplexInterval(Interval r, Interval i) : re(std::move(r)), im(std::move(i)) {}

  ComplexInterval operator-() const { return {-re, -im}; }
  friend ComplexInterval operator+(const ComplexInterval& a, const ComplexInterval& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend ComplexInterval operator-(const ComplexInterval& a, const ComplexInterval& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend ComplexInterval operator*(const ComplexInterval& a, const ComplexInterval& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend ComplexInterval operator/(const ComplexInterval& a, const ComplexInterval& b);
  ComplexInterval conj() const { return {re, -im}; }
  Interval norm2() const { return re.sqr() + im.sqr(); }
  bool contains_zero() const { return re.contains_zero() && im.contains_zero(); }
  Rational max_width() const;
  Rational mag() const;
  double re_mid() const { return to_double(re.mid()); }
  double im_mid() const { return to_double(im.mid()); }
  std::string to_string() const;
};

}  // namespace ratcurve
