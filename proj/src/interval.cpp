#include "ratcurve/interval.hpp"

#include <algorithm>

#include "ratcurve/error.hpp"

namespace ratcurve {

namespace {

long combine(long a, long b) {
  if (a < 0) return b;
  if (b < 0) return a;
  return std::max(a, b);
}

}  // namespace

Interval::Interval(const Rational& lo, const Rational& hi, long prec) : lo_(lo), hi_(hi), prec_(prec) {
  if (hi_ < lo_) throw Error(ErrorKind::InvalidArgument, "interval with lo > hi");
  round_out();
}

void Interval::round_out() {
  if (prec_ < 0) return;
  if (lo_.get_den() != 1) lo_ = dyadic_floor(lo_, prec_);
  if (hi_.get_den() != 1) hi_ = dyadic_ceil(hi_, prec_);
}

Rational Interval::mag() const {
  Rational a = abs(lo_), b = abs(hi_);
  return a < b ? b : a;
}

int Interval::sign() const {
  if (sgn(lo_) > 0) return 1;
  if (sgn(hi_) < 0) return -1;
  return 0;
}

Interval Interval::operator-() const {
  Interval r;
  r.lo_ = -hi_;
  r.hi_ = -lo_;
  r.prec_ = prec_;
  return r;
}

Interval operator+(const Interval& a, const Interval& b) {
  Interval r;
  r.lo_ = a.lo_ + b.lo_;
  r.hi_ = a.hi_ + b.hi_;
  r.prec_ = combine(a.prec_, b.prec_);
  r.round_out();
  return r;
}

Interval operator-(const Interval& a, const Interval& b) { return a + (-b); }

Interval operator*(const Interval& a, const Interval& b) {
  Interval r;
  r.prec_ = combine(a.prec_, b.prec_);
  if (a.lo_ == a.hi_ && b.lo_ == b.hi_) {
    r.lo_ = a.lo_ * b.lo_;
    r.hi_ = r.lo_;
  } else {
    Rational p1 = a.lo_ * b.lo_, p2 = a.lo_ * b.hi_, p3 = a.hi_ * b.lo_, p4 = a.hi_ * b.hi_;
    r.lo_ = std::min({p1, p2, p3, p4});
    r.hi_ = std::max({p1, p2, p3, p4});
  }
  r.round_out();
  return r;
}

Interval operator/(const Interval& a, const Interval& b) {
  if (b.contains_zero()) throw Error(ErrorKind::DivisionByZero, "interval division by an interval containing 0");
  Interval inv;
  inv.prec_ = b.prec_;
  inv.lo_ = 1 / b.hi_;
  inv.hi_ = 1 / b.lo_;
  inv.round_out();
  return a * inv;
}

Interval Interval::sqr() const {
  Interval r;
  r.prec_ = prec_;
  Rational a = lo_ * lo_, b = hi_ * hi_;
  if (contains_zero()) {
    r.lo_ = 0;
    r.hi_ = std::max(a, b);
  } else {
    r.lo_ = std::min(a, b);
    r.hi_ = std::max(a, b);
  }
  r.round_out();
  return r;
}

Interval Interval::hull(const Interval& o) const {
  Interval r;
  r.lo_ = std::min(lo_, o.lo_);
  r.hi_ = std::max(hi_, o.hi_);
  r.prec_ = combine(prec_, o.prec_);
  return r;
}

Interval Interval::with_precision(long prec) const {
  Interval r = *this;
  r.prec_ = prec;
  r.round_out();
  return r;
}

std::string Interval::to_string() const { return "[" + lo_.get_str() + ", " + hi_.get_str() + "]"; }

ComplexInterval operator/(const ComplexInterval& a, const ComplexInterval& b) {
  Interval n = b.norm2();
  if (n.contains_zero()) throw Error(ErrorKind::DivisionByZero, "complex interval division by a box containing 0");
  ComplexInterval num = a * b.conj();
  return {num.re / n, num.im / n};
}

Rational ComplexInterval::max_width() const {
  Rational a = re.width(), b = im.width();
  return a < b ? b : a;
}

Rational ComplexInterval::mag() const { return Rational(re.mag() + im.mag()); }

std::string ComplexInterval::to_string() const { return re.to_string() + " + i*" + im.to_string(); }

}  // namespace ratcurve
