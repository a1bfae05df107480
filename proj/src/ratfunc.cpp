#include "ratcurve/ratfunc.hpp"

#include <array>

#include "ratcurve/error.hpp"

namespace ratcurve {

KPoly kpoly(const FieldPtr& K, std::vector<FieldElement> coeffs) { return KPoly(std::move(coeffs), K->zero()); }
KPoly kpoly_zero(const FieldPtr& K) { return KPoly(K->zero()); }
KPoly kpoly_x(const FieldPtr& K) { return KPoly::variable(K->zero()); }

KPoly to_kpoly(const QPoly& p, const FieldPtr& K) {
  std::vector<FieldElement> c;
  c.reserve(p.coeffs().size());
  for (const auto& q : p.coeffs()) c.push_back(K->from_rational(q));
  return kpoly(K, std::move(c));
}

bool has_rational_coefficients(const KPoly& p) {
  for (const auto& c : p.coeffs())
    if (!c.is_rational()) return false;
  return true;
}

QPoly to_qpoly(const KPoly& p) {
  std::vector<Rational> c;
  c.reserve(p.coeffs().size());
  for (const auto& x : p.coeffs()) {
    if (!x.is_rational()) throw Error(ErrorKind::NotRationalCoefficients, "polynomial has non-rational coefficients");
    c.push_back(x.rational_value());
  }
  return qpoly(std::move(c));
}

KPoly conjugate(const KPoly& p) {
  return p.map([](const FieldElement& c) { return c.conjugate(); });
}

const FieldElement& ExtPoint::value() const {
  if (!v_) throw Error(ErrorKind::InvalidArgument, "the point at infinity has no finite value");
  return *v_;
}

bool operator==(const ExtPoint& a, const ExtPoint& b) {
  if (a.is_infinity() || b.is_infinity()) return a.is_infinity() && b.is_infinity();
  return *a.v_ == *b.v_;
}

std::string ExtPoint::to_string() const { return is_infinity() ? std::string("inf") : v_->to_string(); }

RationalFunction::RationalFunction(KPoly num, KPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw Error(ErrorKind::ZeroDenominator, "rational function with zero denominator");
  if (num_.is_zero()) {
    den_ = KPoly::constant(den_.zero().field().one());
    return;
  }
  if (den_.degree() > 0 && num_.degree() > 0) {
    KPoly g = gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = divmod(num_, g).first;
      den_ = divmod(den_, g).first;
    }
  }
  FieldElement inv = den_.lead().inverse();
  if (!inv.is_one()) {
    num_ = num_.scaled(inv);
    den_ = den_.scaled(inv);
  }
}

RationalFunction RationalFunction::from_poly(KPoly p) {
  FieldElement one = p.zero().field().one();
  return RationalFunction(std::move(p), KPoly::constant(one));
}

RationalFunction RationalFunction::identity(const FieldPtr& K) { return from_poly(kpoly_x(K)); }

RationalFunction RationalFunction::constant(const FieldElement& c) { return from_poly(KPoly::constant(c)); }

ExtPoint RationalFunction::operator()(const ExtPoint& z) const {
  if (z.is_infinity()) {
    if (num_.degree() > den_.degree()) return ExtPoint::infinity();
    if (num_.degree() < den_.degree()) return ExtPoint(field()->zero());
    return ExtPoint(num_.lead() / den_.lead());
  }
  FieldElement d = den_(z.value());
  if (d.is_zero()) return ExtPoint::infinity();
  return ExtPoint(num_(z.value()) / d);
}

ExtPoint eval_at_rational(const RationalFunction& f, const Rational& x) {
  FieldElement d = eval_at(f.den(), x);
  if (d.is_zero()) return ExtPoint::infinity();
  return ExtPoint(eval_at(f.num(), x) / d);
}

RationalFunction RationalFunction::conjugate() const {
  return RationalFunction(ratcurve::conjugate(num_), ratcurve::conjugate(den_));
}

bool RationalFunction::is_real() const {
  for (const auto& c : num_.coeffs())
    if (!c.is_fixed()) return false;
  for (const auto& c : den_.coeffs())
    if (!c.is_fixed()) return false;
  return true;
}

RationalFunction RationalFunction::derivative() const {
  return RationalFunction(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  if (a.den_ == b.den_) return RationalFunction(a.num_ + b.num_, a.den_);
  return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}
RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }
RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
}
RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
  if (b.num_.is_zero()) throw Error(ErrorKind::DivisionByZero, "division by the zero rational function");
  return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
}
RationalFunction RationalFunction::operator-() const {
  RationalFunction r(*this);
  r.num_ = -r.num_;
  return r;
}

std::pair<KPoly, KPoly> compose_unreduced(const RationalFunction& outer, const RationalFunction& inner) {
  const int d = outer.degree();
  const KPoly& p = inner.num();
  const KPoly& q = inner.den();
  std::vector<KPoly> pp{one_like(p)}, qp{one_like(q)};
  for (int i = 1; i <= d; ++i) {
    pp.push_back(pp.back() * p);
    qp.push_back(qp.back() * q);
  }
  KPoly num = p.zero_poly(), den = p.zero_poly();
  for (int i = 0; i <= d; ++i) {
    KPoly mon = pp[std::size_t(i)] * qp[std::size_t(d - i)];
    const FieldElement& a = outer.num().coeff(std::size_t(i));
    const FieldElement& b = outer.den().coeff(std::size_t(i));
    if (!a.is_zero()) num += mon.scaled(a);
    if (!b.is_zero()) den += mon.scaled(b);
  }
  return {num, den};
}

RationalFunction compose(const RationalFunction& outer, const RationalFunction& inner) {
  if (outer.is_constant()) return outer;
  if (inner.is_constant()) {
    ExtPoint v = outer(ExtPoint(inner.num().coeff(0)));
    if (v.is_infinity()) throw Error(ErrorKind::DivisionByZero, "composition with a constant at a pole");
    return RationalFunction::constant(v.value());
  }
  auto [num, den] = compose_unreduced(outer, inner);
  return RationalFunction(std::move(num), std::move(den));
}

namespace {

int term_count(const FieldElement& c) {
  int n = 0;
  for (const auto& v : c.coords())
    if (sgn(v) != 0) ++n;
  return n;
}

std::string monomial(std::string_view var, int k) {
  if (k == 0) return "";
  if (k == 1) return std::string(var);
  return std::string(var) + "^" + std::to_string(k);
}

// Returns (negative?, body) for coefficient c times the monomial.
std::pair<bool, std::string> term(const FieldElement& c, const std::string& mon) {
  if (term_count(c) == 1) {
    std::size_t j = 0;
    while (sgn(c.coords()[j]) == 0) ++j;
    const Rational& q = c.coords()[j];
    Rational a = abs(q);
    std::string gen = monomial("t", int(j));
    std::string body;
    if (gen.empty())
      body = a.get_str();
    else if (a == 1)
      body = gen;
    else
      body = a.get_str() + "*" + gen;
    if (!mon.empty()) body = (body == "1") ? mon : body + "*" + mon;
    return {sgn(q) < 0, body};
  }
  std::string body = "(" + c.to_string() + ")";
  if (!mon.empty()) body += "*" + mon;
  return {false, body};
}

}  // namespace

std::string poly_to_string(const KPoly& p, std::string_view var) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int k = p.degree(); k >= 0; --k) {
    const FieldElement& c = p.coeff(std::size_t(k));
    if (c.is_zero()) continue;
    auto [neg, body] = term(c, monomial(var, k));
    if (neg)
      out += "-" + body;
    else
      out += (out.empty() ? "" : "+") + body;
  }
  return out;
}

std::string RationalFunction::to_string(std::string_view var) const {
  if (den_.degree() == 0) return poly_to_string(num_, var);
  return "(" + poly_to_string(num_, var) + ")/(" + poly_to_string(den_, var) + ")";
}

Moebius::Moebius(FieldElement a, FieldElement b, FieldElement c, FieldElement d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
  if ((a_ * d_ - b_ * c_).is_zero()) throw Error(ErrorKind::DegenerateTriple, "Moebius transform with ad - bc = 0");
}

Moebius Moebius::identity(const FieldPtr& K) { return Moebius(K->one(), K->zero(), K->zero(), K->one()); }

Moebius Moebius::from_function(const RationalFunction& f) {
  if (f.degree() != 1) throw Error(ErrorKind::InvalidArgument, "not a degree-1 rational function");
  return Moebius(f.num().coeff(1), f.num().coeff(0), f.den().coeff(1), f.den().coeff(0));
}

ExtPoint Moebius::operator()(const ExtPoint& z) const {
  if (z.is_infinity()) {
    if (c_.is_zero()) return ExtPoint::infinity();
    return ExtPoint(a_ / c_);
  }
  FieldElement den = c_ * z.value() + d_;
  if (den.is_zero()) return ExtPoint::infinity();
  return ExtPoint((a_ * z.value() + b_) / den);
}

RationalFunction Moebius::to_function() const {
  const FieldPtr& K = a_.field_ptr();
  return RationalFunction(kpoly(K, {b_, a_}), kpoly(K, {d_, c_}));
}

Moebius Moebius::inverse() const { return Moebius(d_, -b_, -c_, a_); }

Moebius Moebius::conjugate() const { return Moebius(a_.conjugate(), b_.conjugate(), c_.conjugate(), d_.conjugate()); }

Moebius operator*(const Moebius& m, const Moebius& n) {
  return Moebius(m.a_ * n.a_ + m.b_ * n.c_, m.a_ * n.b_ + m.b_ * n.d_, m.c_ * n.a_ + m.d_ * n.c_,
                 m.c_ * n.b_ + m.d_ * n.d_);
}

namespace {

// The map sending (z1, z2, z3) to (0, 1, infinity).
Moebius to_standard(const std::array<ExtPoint, 3>& z, const FieldPtr& K) {
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      if (z[std::size_t(i)] == z[std::size_t(j)])
        throw Error(ErrorKind::DegenerateTriple, "points of a triple are not pairwise distinct");
  const FieldElement one = K->one(), zero = K->zero();
  if (z[0].is_infinity()) {
    // (z2 - z3) / (z - z3)
    const auto &z2 = z[1].value(), &z3 = z[2].value();
    return Moebius(zero, z2 - z3, one, -z3);
  }
  if (z[1].is_infinity()) {
    const auto &z1 = z[0].value(), &z3 = z[2].value();
    return Moebius(one, -z1, one, -z3);
  }
  if (z[2].is_infinity()) {
    const auto &z1 = z[0].value(), &z2 = z[1].value();
    return Moebius(one, -z1, zero, z2 - z1);
  }
  const auto &z1 = z[0].value(), &z2 = z[1].value(), &z3 = z[2].value();
  FieldElement u = z2 - z3, v = z2 - z1;
  return Moebius(u, -(z1 * u), v, -(z3 * v));
}

FieldPtr field_of(const std::array<ExtPoint, 3>& a, const std::array<ExtPoint, 3>& b) {
  for (const auto& p : a)
    if (!p.is_infinity()) return p.value().field_ptr();
  for (const auto& p : b)
    if (!p.is_infinity()) return p.value().field_ptr();
  throw Error(ErrorKind::DegenerateTriple, "triples consist of infinity only");
}

}  // namespace

Moebius moebius_from_triples(const std::array<ExtPoint, 3>& src, const std::array<ExtPoint, 3>& dst) {
  FieldPtr K = field_of(src, dst);
  return to_standard(dst, K).inverse() * to_standard(src, K);
}

int sturm_count(const KPoly& p, const ExtReal& lo, const ExtReal& hi) {
  for (const auto& c : p.coeffs())
    if (!c.is_rational())
      throw Error(ErrorKind::NotRationalCoefficients, "Sturm counting needs rational coefficients");
  return sturm_count_open(to_qpoly(p), lo, hi);
}

FieldElement imaginary_unit_delta(const FieldPtr& K) {
  FieldElement t = K->gen();
  return t - t.conjugate();
}

std::pair<KBiPoly, KBiPoly> split_real_imag_fixed(const KBiPoly& H) {
  const FieldPtr& K = H.zero().zero().field_ptr();
  FieldElement delta = imaginary_unit_delta(K);
  KPoly zx = kpoly_zero(K);
  KBiPoly A(zx), B(zx);
  FieldElement half = K->from_rational(Rational(1, 2));
  FieldElement inv2d = delta.is_zero() ? K->zero() : (half / delta);
  for (int j = 0; j <= H.degree(); ++j) {
    const KPoly& c = H.coeff(std::size_t(j));
    KPoly a = zx, b = zx;
    for (int i = 0; i <= c.degree(); ++i) {
      const FieldElement& v = c.coeff(std::size_t(i));
      FieldElement s = v.conjugate();
      if (delta.is_zero()) {
        if (s != v) throw Error(ErrorKind::Internal, "non-real coefficient in a field with trivial conjugation");
        a.set_coeff(std::size_t(i), v);
        continue;
      }
      a.set_coeff(std::size_t(i), (v + s) * half);
      b.set_coeff(std::size_t(i), (v - s) * inv2d);
    }
    A.set_coeff(std::size_t(j), a);
    B.set_coeff(std::size_t(j), b);
  }
  return {A, B};
}

std::pair<QBiPoly, QBiPoly> split_real_imag(const KBiPoly& H) {
  const FieldPtr& K = H.zero().zero().field_ptr();
  if (!K->fixed_field_is_rational())
    throw Error(ErrorKind::FixedFieldNotRational, "the fixed field of the conjugation is larger than Q");
  auto [A, B] = split_real_imag_fixed(H);
  auto conv = [](const KBiPoly& P) {
    QPoly zq(Rational(0));
    QBiPoly out(zq);
    for (int j = 0; j <= P.degree(); ++j) out.set_coeff(std::size_t(j), to_qpoly(P.coeff(std::size_t(j))));
    return out;
  };
  return {conv(A), conv(B)};
}

KBiPoly bipoly_from_y_poly(const KPoly& p) {
  const FieldPtr& K = p.zero().field_ptr();
  KBiPoly out(kpoly_zero(K));
  for (int j = 0; j <= p.degree(); ++j) out.set_coeff(std::size_t(j), KPoly::constant(p.coeff(std::size_t(j))));
  return out;
}

KBiPoly bipoly_from_x_poly(const KPoly& p) { return KBiPoly::constant(p); }

KPoly resultant_y(const KBiPoly& A, const KBiPoly& B) { return resultant(A, B); }
QPoly resultant_y(const QBiPoly& A, const QBiPoly& B) { return resultant(A, B); }

}  // namespace ratcurve
