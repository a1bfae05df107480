#pragma once

// Dense univariate polynomials over a coefficient ring T.  T is a Rational,
// a FieldElement, or a Poly itself (recursive multivariate).  Every Poly
// carries a zero prototype so that coefficient contexts (number fields,
// nested rings) survive arithmetic on empty polynomials.

#include <algorithm>
#include <utility>
#include <vector>

#include "ratcurve/error.hpp"
#include "ratcurve/rational.hpp"

namespace ratcurve {

inline bool is_zero(const Rational& a) { return sgn(a) == 0; }
inline Rational zero_like(const Rational&) { return Rational(0); }
inline Rational one_like(const Rational&) { return Rational(1); }
inline Rational times_int(const Rational& a, long n) { return Rational(a * n); }
inline Rational exact_div(const Rational& a, const Rational& b) {
  if (sgn(b) == 0) throw Error(ErrorKind::DivisionByZero, "rational division by zero");
  return Rational(a / b);
}

template <class U>
bool coeff_is_zero(const U& u) { return is_zero(u); }

template <class T>
class Poly {
 public:
  using coeff_type = T;

  explicit Poly(T zero) : zero_(std::move(zero)) {}
  Poly(std::vector<T> coeffs, T zero) : c_(std::move(coeffs)), zero_(std::move(zero)) { trim(); }

  static Poly constant(const T& c) {
    Poly p(zero_like(c));
    if (!coeff_is_zero(c)) p.c_.push_back(c);
    return p;
  }
  static Poly monomial(const T& c, std::size_t k) {
    Poly p(zero_like(c));
    if (!coeff_is_zero(c)) {
      p.c_.assign(k + 1, p.zero_);
      p.c_[k] = c;
    }
    return p;
  }
  static Poly variable(const T& zero) { return monomial(one_like(zero), 1); }

  int degree() const { return int(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  const T& coeff(std::size_t i) const { return i < c_.size() ? c_[i] : zero_; }
  const T& lead() const { return c_.empty() ? zero_ : c_.back(); }
  const std::vector<T>& coeffs() const { return c_; }
  const T& zero() const { return zero_; }
  T one() const { return one_like(zero_); }
  Poly zero_poly() const { return Poly(zero_); }

  void set_coeff(std::size_t i, const T& v) {
    if (i >= c_.size()) {
      if (coeff_is_zero(v)) return;
      c_.resize(i + 1, zero_);
    }
    c_[i] = v;
    trim();
  }

  Poly& operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), zero_);
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), zero_);
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly(a.zero_);
    std::vector<T> r(a.c_.size() + b.c_.size() - 1, a.zero_);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (coeff_is_zero(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return Poly(std::move(r), a.zero_);
  }
  Poly operator-() const {
    Poly r(*this);
    for (auto& x : r.c_) x = -x;
    return r;
  }
  Poly scaled(const T& s) const {
    if (coeff_is_zero(s)) return Poly(zero_);
    Poly r(*this);
    for (auto& x : r.c_) x *= s;
    r.trim();
    return r;
  }
  Poly shifted(std::size_t k) const {
    if (is_zero()) return *this;
    Poly r(zero_);
    r.c_.assign(k, zero_);
    r.c_.insert(r.c_.end(), c_.begin(), c_.end());
    return r;
  }

  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  T operator()(const T& x) const {
    T acc = zero_;
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
  }

  Poly derivative() const {
    Poly r(zero_);
    if (c_.size() <= 1) return r;
    r.c_.reserve(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) r.c_.push_back(times_int(c_[i], long(i)));
    r.trim();
    return r;
  }

  Poly compose(const Poly& inner) const {
    Poly acc(zero_);
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * inner + Poly::constant(c_[i]);
    return acc;
  }

  template <class F>
  Poly map(F f) const {
    Poly r(zero_);
    r.c_.reserve(c_.size());
    for (const auto& x : c_) r.c_.push_back(f(x));
    r.trim();
    return r;
  }

 private:
  void trim() {
    while (!c_.empty() && coeff_is_zero(c_.back())) c_.pop_back();
  }

  std::vector<T> c_;
  T zero_;
};

template <class T>
bool is_zero(const Poly<T>& p) { return p.is_zero(); }
template <class T>
Poly<T> zero_like(const Poly<T>& p) { return Poly<T>(p.zero()); }
template <class T>
Poly<T> one_like(const Poly<T>& p) { return Poly<T>::constant(one_like(p.zero())); }
template <class T>
Poly<T> times_int(const Poly<T>& p, long n) {
  return p.map([n](const T& c) { return times_int(c, n); });
}

template <class T>
Poly<T> pow(const Poly<T>& p, unsigned n) {
  Poly<T> r = one_like(p);
  Poly<T> b = p;
  while (n) {
    if (n & 1) r = r * b;
    n >>= 1;
    if (n) b = b * b;
  }
  return r;
}

// Exact division in R[x] where R is an integral domain supporting exact_div.
template <class T>
Poly<T> exact_div(const Poly<T>& a, const Poly<T>& b) {
  if (b.is_zero()) throw Error(ErrorKind::DivisionByZero, "polynomial division by zero");
  if (a.is_zero()) return a;
  if (a.degree() < b.degree()) throw Error(ErrorKind::Internal, "inexact polynomial division");
  Poly<T> r = a;
  std::vector<T> q(std::size_t(a.degree() - b.degree() + 1), a.zero());
  const int db = b.degree();
  while (!r.is_zero() && r.degree() >= db) {
    int k = r.degree() - db;
    T c = exact_div(r.lead(), b.lead());
    q[std::size_t(k)] = c;
    r -= (b.scaled(c)).shifted(std::size_t(k));
  }
  if (!r.is_zero()) throw Error(ErrorKind::Internal, "inexact polynomial division");
  return Poly<T>(std::move(q), a.zero());
}

// Quotient and remainder over a field.
template <class T>
std::pair<Poly<T>, Poly<T>> divmod(const Poly<T>& a, const Poly<T>& b) {
  if (b.is_zero()) throw Error(ErrorKind::DivisionByZero, "polynomial division by zero");
  Poly<T> r = a;
  if (a.degree() < b.degree()) return {Poly<T>(a.zero()), r};
  std::vector<T> q(std::size_t(a.degree() - b.degree() + 1), a.zero());
  T inv = one_like(b.lead()) / b.lead();
  const int db = b.degree();
  while (!r.is_zero() && r.degree() >= db) {
    int k = r.degree() - db;
    T c = r.lead() * inv;
    q[std::size_t(k)] = c;
    r -= (b.scaled(c)).shifted(std::size_t(k));
  }
  return {Poly<T>(std::move(q), a.zero()), r};
}

template <class T>
Poly<T> rem(const Poly<T>& a, const Poly<T>& b) { return divmod(a, b).second; }

template <class T>
Poly<T> make_monic(const Poly<T>& p) {
  if (p.is_zero()) return p;
  T inv = one_like(p.lead()) / p.lead();
  return p.scaled(inv);
}

// Monic gcd over a field.
template <class T>
Poly<T> gcd(Poly<T> a, Poly<T> b) {
  while (!b.is_zero()) {
    Poly<T> r = rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(a);
}

template <class T>
Poly<T> squarefree_part(const Poly<T>& p) {
  if (p.degree() <= 0) return make_monic(p);
  Poly<T> g = gcd(p, p.derivative());
  return make_monic(divmod(p, g).first);
}

// lc(b)^(deg a - deg b + 1) * a mod b, computed without division.
template <class T>
Poly<T> prem(const Poly<T>& a, const Poly<T>& b) {
  if (b.is_zero()) throw Error(ErrorKind::DivisionByZero, "pseudo-remainder by zero");
  Poly<T> r = a;
  const int db = b.degree();
  int e = a.degree() - db + 1;
  if (e <= 0) return r;
  const T& lb = b.lead();
  while (!r.is_zero() && r.degree() >= db) {
    int k = r.degree() - db;
    T c = r.lead();
    r = r.scaled(lb) - (b.scaled(c)).shifted(std::size_t(k));
    --e;
  }
  T f = one_like(lb);
  for (int i = 0; i < e; ++i) f = f * lb;
  return r.scaled(f);
}

// Content of a polynomial whose coefficients are univariate polynomials over
// a field: the monic gcd of the coefficients.
template <class T>
Poly<T> content(const Poly<Poly<T>>& p) {
  Poly<T> g(p.zero().zero());
  for (const auto& c : p.coeffs()) {
    g = gcd(g, c);
    if (g.degree() == 0) break;
  }
  return g;
}

template <class T>
Poly<Poly<T>> primitive_part(const Poly<Poly<T>>& p) {
  if (p.is_zero()) return p;
  Poly<T> c = content(p);
  Poly<Poly<T>> r = p.map([&](const Poly<T>& x) { return exact_div(x, c); });
  // normalize so the leading coefficient is monic in the inner variable
  T inv = one_like(r.lead().lead()) / r.lead().lead();
  return r.map([&](const Poly<T>& x) { return x.scaled(inv); });
}

// gcd in F[u][v] (outer variable v), primitive PRS.
template <class T>
Poly<Poly<T>> gcd(const Poly<Poly<T>>& a, const Poly<Poly<T>>& b) {
  if (a.is_zero()) return b.is_zero() ? b : primitive_part(b).scaled(content(b));
  if (b.is_zero()) return primitive_part(a).scaled(content(a));
  Poly<T> c = gcd(content(a), content(b));
  Poly<Poly<T>> x = primitive_part(a);
  Poly<Poly<T>> y = primitive_part(b);
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.is_zero()) {
    Poly<Poly<T>> r = prem(x, y);
    x = std::move(y);
    y = r.is_zero() ? r : primitive_part(r);
  }
  return x.scaled(c);
}

}  // namespace ratcurve
