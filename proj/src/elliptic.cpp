#include "ratcurve/elliptic.hpp"

#include <functional>
#include <map>

#include "ratcurve/error.hpp"

namespace ratcurve {

EllipticCurve::EllipticCurve(FieldElement a, FieldElement b) : a_(std::move(a)), b_(std::move(b)) {
  if (discriminant().is_zero()) throw Error(ErrorKind::InvalidArgument, "singular curve: 4a^3 + 27b^2 = 0");
}

FieldElement EllipticCurve::discriminant() const {
  return (a_ * a_ * a_ * Rational(4) + b_ * b_ * Rational(27)) * Rational(-16);
}

FieldElement EllipticCurve::j_invariant() const {
  FieldElement a3 = a_ * a_ * a_ * Rational(4);
  return a3 * Rational(1728) / (a3 + b_ * b_ * Rational(27));
}

KPoly EllipticCurve::rhs_poly() const {
  const FieldPtr& K = field();
  return kpoly(K, {b_, a_, K->zero(), K->one()});
}

std::string EllipticCurve::to_string() const {
  return "Y^2 = X^3 + (" + a_.to_string() + ")*X + (" + b_.to_string() + ")";
}

CurvePoint::CurvePoint(const EllipticCurve& E, FieldElement x, FieldElement y) : E_(E) {
  if (!E.contains(x, y)) throw Error(ErrorKind::PointNotOnCurve, "(" + x.to_string() + ", " + y.to_string() + ") is not on " + E.to_string());
  xy_.emplace(std::move(x), std::move(y));
}

const FieldElement& CurvePoint::x() const {
  if (!xy_) throw Error(ErrorKind::InvalidArgument, "the point at infinity has no coordinates");
  return xy_->first;
}
const FieldElement& CurvePoint::y() const {
  if (!xy_) throw Error(ErrorKind::InvalidArgument, "the point at infinity has no coordinates");
  return xy_->second;
}

CurvePoint CurvePoint::conjugate() const {
  EllipticCurve Ec = E_.conjugate();
  if (!xy_) return CurvePoint(Ec);
  return CurvePoint(Ec, xy_->first.conjugate(), xy_->second.conjugate());
}

CurvePoint CurvePoint::operator-() const {
  if (!xy_) return *this;
  CurvePoint r(*this);
  r.xy_->second = -r.xy_->second;
  return r;
}

bool operator==(const CurvePoint& P, const CurvePoint& Q) {
  if (P.is_infinity() || Q.is_infinity()) return P.is_infinity() && Q.is_infinity();
  return P.xy_->first == Q.xy_->first && P.xy_->second == Q.xy_->second;
}

std::string CurvePoint::to_string() const {
  if (!xy_) return "0_E";
  return "(" + xy_->first.to_string() + ", " + xy_->second.to_string() + ")";
}

CurvePoint ec_add(const CurvePoint& P, const CurvePoint& Q) {
  if (!(P.curve() == Q.curve())) throw Error(ErrorKind::CurveMismatch, "points lie on different curves");
  const EllipticCurve& E = P.curve();
  if (P.is_infinity()) return Q;
  if (Q.is_infinity()) return P;
  FieldElement lambda;
  if (P.x() == Q.x()) {
    if ((P.y() + Q.y()).is_zero()) return CurvePoint::infinity(E);
    lambda = (P.x() * P.x() * Rational(3) + E.a()) / (P.y() * Rational(2));
  } else {
    lambda = (Q.y() - P.y()) / (Q.x() - P.x());
  }
  FieldElement x3 = lambda * lambda - P.x() - Q.x();
  FieldElement y3 = lambda * (P.x() - x3) - P.y();
  return CurvePoint(E, x3, y3);
}

CurvePoint ec_mul(long n, const CurvePoint& P) {
  if (n < 0) return -ec_mul(-n, P);
  CurvePoint acc = CurvePoint::infinity(P.curve());
  CurvePoint base = P;
  while (n) {
    if (n & 1) acc = ec_add(acc, base);
    n >>= 1;
    if (n) base = ec_add(base, base);
  }
  return acc;
}

bool is_odd_prime(long l) {
  if (l < 3 || l % 2 == 0) return false;
  for (long d = 3; d * d <= l; d += 2)
    if (l % d == 0) return false;
  return true;
}

KPoly division_poly_reduced(const EllipticCurve& E, int n) {
  if (n < 0) throw Error(ErrorKind::InvalidArgument, "negative division polynomial index");
  const FieldPtr& K = E.field();
  const FieldElement& a = E.a();
  const FieldElement& b = E.b();
  std::map<int, KPoly> memo;
  KPoly F = E.rhs_poly();
  KPoly F2 = F * F;
  auto c = [&](long v) { return K->from_rational(Rational(v)); };
  memo.emplace(0, kpoly_zero(K));
  memo.emplace(1, KPoly::constant(c(1)));
  memo.emplace(2, KPoly::constant(c(2)));
  memo.emplace(3, kpoly(K, {-(a * a), b * Rational(12), a * Rational(6), K->zero(), c(3)}));
  memo.emplace(4, kpoly(K, {(b * b * Rational(-8) - a * a * a) * Rational(4), a * b * Rational(-16),
                            a * a * Rational(-20), b * Rational(80), a * Rational(20), K->zero(), c(4)}));
  std::function<const KPoly&(int)> f = [&](int k) -> const KPoly& {
    auto it = memo.find(k);
    if (it != memo.end()) return it->second;
    KPoly r = kpoly_zero(K);
    if (k % 2 == 1) {
      int m = (k - 1) / 2;
      KPoly t1 = f(m + 2) * pow(f(m), 3);
      KPoly t2 = f(m - 1) * pow(f(m + 1), 3);
      r = (m % 2 == 0) ? F2 * t1 - t2 : t1 - F2 * t2;
    } else {
      int m = k / 2;
      KPoly inner = f(m + 2) * pow(f(m - 1), 2) - f(m - 2) * pow(f(m + 1), 2);
      r = (f(m) * inner).scaled(K->from_rational(Rational(1, 2)));
    }
    return memo.emplace(k, std::move(r)).first->second;
  };
  return f(n);
}

KPoly division_poly(const EllipticCurve& E, int l) {
  if (!is_odd_prime(l)) throw Error(ErrorKind::InvalidArgument, "l must be an odd prime");
  return division_poly_reduced(E, l);
}

RationalFunction mult_by_ell_xmap(const EllipticCurve& E, int l) {
  if (!is_odd_prime(l)) throw Error(ErrorKind::InvalidArgument, "l must be an odd prime");
  KPoly fm = division_poly_reduced(E, l - 1);
  KPoly fp = division_poly_reduced(E, l + 1);
  KPoly fl = division_poly_reduced(E, l);
  KPoly den = fl * fl;
  KPoly num = kpoly_x(E.field()) * den - E.rhs_poly() * fm * fp;
  return RationalFunction(num, den);
}

bool torsion_conjugate_check(const EllipticCurve& E, const CurvePoint& c, int l) {
  if (!(c.curve() == E)) throw Error(ErrorKind::CurveMismatch, "point is not on the given curve");
  if (c.is_infinity() || !ec_mul(l, c).is_infinity())
    throw Error(ErrorKind::NotTorsion, "point is not a nonzero l-torsion point");
  CurvePoint cb = c.conjugate();
  if (cb.is_infinity()) return false;
  CurvePoint m = c;
  for (int k = 1; k < l; ++k) {
    if (!m.is_infinity() && m.x() == cb.x() && m.y() == cb.y()) return false;
    m = ec_add(m, c);
  }
  return true;
}

CurvePoint Isogeny::operator()(const CurvePoint& P) const {
  if (!(P.curve() == domain)) throw Error(ErrorKind::CurveMismatch, "point is not on the isogeny domain");
  if (P.is_infinity()) return CurvePoint::infinity(codomain);
  if (kernel_polynomial(P.x()).is_zero()) return CurvePoint::infinity(codomain);
  ExtPoint X = xmap(ExtPoint(P.x()));
  ExtPoint B = ymap_factor(ExtPoint(P.x()));
  return CurvePoint(codomain, X.value(), B.value() * P.y());
}

Isogeny velu(const EllipticCurve& E, const CurvePoint& c, int l) {
  if (!is_odd_prime(l)) throw Error(ErrorKind::InvalidArgument, "l must be an odd prime");
  if (!(c.curve() == E)) throw Error(ErrorKind::CurveMismatch, "kernel generator is not on the curve");
  if (c.is_infinity() || !ec_mul(l, c).is_infinity())
    throw Error(ErrorKind::NotTorsion, "kernel generator does not have order " + std::to_string(l));
  const FieldPtr& K = E.field();
  FieldElement v = K->zero(), w = K->zero();
  RationalFunction A = RationalFunction::identity(K);
  RationalFunction B = RationalFunction::constant(K->one());
  KPoly ker = KPoly::constant(K->one());
  CurvePoint Q = c;
  for (int i = 1; i <= (l - 1) / 2; ++i) {
    const FieldElement& xq = Q.x();
    const FieldElement& yq = Q.y();
    FieldElement vq = (xq * xq * Rational(3) + E.a()) * Rational(2);
    FieldElement uq = yq * yq * Rational(4);
    v += vq;
    w += uq + xq * vq;
    KPoly lin = kpoly(K, {-xq, K->one()});
    RationalFunction r1(KPoly::constant(K->one()), lin);
    RationalFunction r2 = r1 * r1;
    RationalFunction r3 = r2 * r1;
    RationalFunction cv = RationalFunction::constant(vq), cu = RationalFunction::constant(uq);
    A = A + cv * r1 + cu * r2;
    B = B - cv * r2 - RationalFunction::constant(uq * Rational(2)) * r3;
    ker = ker * lin;
    Q = ec_add(Q, c);
  }
  EllipticCurve Ep(E.a() - v * Rational(5), E.b() - w * Rational(7));
  return Isogeny{E, Ep, A, B, ker, l, c};
}

Isogeny dual_isogeny(const Isogeny& phi, int l) {
  if (phi.degree != l) throw Error(ErrorKind::InvalidArgument, "isogeny degree does not match l");
  if (!phi.kernel_generator) throw Error(ErrorKind::DualVerificationFailed, "isogeny has no recorded kernel generator");
  const EllipticCurve& E = phi.domain;
  const CurvePoint& c = *phi.kernel_generator;
  if (!E.is_fixed() || !torsion_conjugate_check(E, c, l))
    throw Error(ErrorKind::DualVerificationFailed, "no point of E[l] outside the kernel is available over K");
  CurvePoint cb = c.conjugate();
  CurvePoint gen = phi(cb);
  Isogeny V = velu(phi.codomain, gen, l);
  const FieldPtr& K = E.field();
  // E'' -> E by (X, Y) -> (u^2 X, u^3 Y) with a = u^4 a'', b = u^6 b''
  FieldElement u2;
  const FieldElement &a2 = V.codomain.a(), &b2 = V.codomain.b();
  if (!a2.is_zero() && !b2.is_zero())
    u2 = (E.b() * a2) / (b2 * E.a());
  else if (!a2.is_zero())
    u2 = K->from_rational(Rational(1, l * l));
  else
    u2 = K->from_rational(Rational(1, l * l));
  if (u2 * u2 * a2 != E.a() || u2 * u2 * u2 * b2 != E.b())
    throw Error(ErrorKind::DualVerificationFailed, "codomain of the second Velu step is not a twist-free model of E");
  if (u2 != K->from_rational(Rational(1, l * l)))
    throw Error(ErrorKind::DualVerificationFailed, "isomorphism scale is not 1/l^2");
  // the checks below compare cross products; reducing degree l^2 functions is slow over larger fields
  KPoly fm = division_poly_reduced(E, l - 1), fp = division_poly_reduced(E, l + 1), fl = division_poly_reduced(E, l);
  KPoly Md = fl * fl;
  KPoly Mn = kpoly_x(K) * Md - E.rhs_poly() * fm * fp;
  RationalFunction Aprime = RationalFunction::constant(u2) * V.xmap;
  auto [An, Ad] = compose_unreduced(Aprime, phi.xmap);
  if (An * Md != Mn * Ad) throw Error(ErrorKind::DualVerificationFailed, "A'(A(x)) differs from the x-map of [l]");
  // M'/l
  KPoly Tn = (Mn.derivative() * Md - Mn * Md.derivative()).scaled(K->from_rational(Rational(1, l)));
  KPoly Td = Md * Md;
  for (int s : {1, -1}) {
    FieldElement u3 = K->from_rational(Rational(s, l * l * l));
    RationalFunction Bprime = RationalFunction::constant(u3) * V.ymap_factor;
    auto [Bn, Bd] = compose_unreduced(Bprime, phi.xmap);
    if (Bn * phi.ymap_factor.num() * Td == Tn * Bd * phi.ymap_factor.den()) {
      KPoly ker = V.kernel_polynomial;
      return Isogeny{phi.codomain, E, Aprime, Bprime, ker, l, gen};
    }
  }
  throw Error(ErrorKind::DualVerificationFailed, "no sign of the isomorphism matches the y-map of [l]");
}

std::string qpoly_to_string(const QPoly& p, std::string_view var) {
  return poly_to_string(to_kpoly(p, NumberField::rationals()), var);
}

namespace {

QPoly monic(const QPoly& p) { return make_monic(p); }

// Yun's square-free decomposition: p = c * prod a_i^i.
std::vector<std::pair<QPoly, int>> squarefree_decomposition(const QPoly& p) {
  std::vector<std::pair<QPoly, int>> out;
  QPoly a = monic(p);
  if (a.degree() <= 0) return out;
  QPoly b = a.derivative();
  QPoly c = gcd(a, b);
  QPoly w = divmod(a, c).first;
  QPoly y = divmod(b, c).first;
  QPoly z = y - w.derivative();
  int i = 1;
  while (w.degree() > 0) {
    QPoly g = gcd(w, z);
    if (g.degree() > 0) out.emplace_back(monic(g), i);
    w = divmod(w, g).first;
    y = divmod(z, g).first;
    z = y - w.derivative();
    ++i;
  }
  return out;
}

std::optional<QPoly> quadratic_factor(const QPoly& p) {
  if (p.degree() != 4) return std::nullopt;
  using QQPoly = Poly<QPoly>;
  QPoly zq(Rational(0));
  std::vector<QPoly> pc;
  for (const auto& c : p.coeffs()) pc.push_back(QPoly::constant(c));
  QQPoly px(pc, zq);
  QQPoly inner(std::vector<QPoly>{QPoly::variable(Rational(0)), QPoly::constant(Rational(-1))}, zq);
  QPoly res = resultant(px, px.compose(inner));
  for (const auto& s : rational_roots(res)) {
    QPoly g = gcd(p, p.compose(qpoly({s, Rational(-1)})));
    if (g.degree() == 2) return g;
  }
  return std::nullopt;
}

}  // namespace

std::vector<std::pair<QPoly, int>> factor_small(const QPoly& p) {
  std::vector<std::pair<QPoly, int>> out;
  for (auto& [f, mult] : squarefree_decomposition(p)) {
    QPoly rest = f;
    for (const auto& r : rational_roots(f)) {
      QPoly lin = qpoly({Rational(-r), Rational(1)});
      out.emplace_back(lin, mult);
      rest = divmod(rest, lin).first;
    }
    if (rest.degree() <= 0) continue;
    if (auto q = quadratic_factor(rest)) {
      out.emplace_back(*q, mult);
      out.emplace_back(monic(divmod(rest, *q).first), mult);
    } else {
      out.emplace_back(monic(rest), mult);
    }
  }
  return out;
}

HalvingReport halving_analysis(const EllipticCurve& E, const CurvePoint& w) {
  if (w.is_infinity()) throw Error(ErrorKind::InvalidArgument, "w must not be the neutral element");
  if (!E.is_rational() || !w.x().is_rational() || !w.y().is_rational())
    throw Error(ErrorKind::NotRationalCurve, "halving analysis needs a curve and point over Q");
  Rational a = E.a().rational_value(), b = E.b().rational_value(), wx = w.x().rational_value();
  // num(d(X) - w_x) with d(X) = (X^4 - 2aX^2 - 8bX + a^2) / (4(X^3 + aX + b))
  QPoly F = qpoly({b, a, Rational(0), Rational(1)});
  QPoly num = qpoly({Rational(a * a), Rational(-8 * b), Rational(-2 * a), Rational(0), Rational(1)});
  QPoly q = num - F.scaled(Rational(4 * wx));
  HalvingReport rep;
  rep.quartic = q;
  rep.factors = factor_small(q);
  // roots shared with F are x-coordinates of 2-torsion points, never halvings
  QPoly common = gcd(q, F);
  QPoly sf = squarefree_part(q);
  auto roots = isolate_real_roots(q);
  rep.real_roots = int(roots.size());
  int on_curve = 0;
  for (auto& r : roots) {
    int s = 0;
    if (r.exact) {
      s = sgn(F(r.lo));
    } else if (common.degree() > 0 &&
               sturm_count_open(common, ExtReal::finite(r.lo), ExtReal::finite(r.hi)) > 0) {
      s = 0;
    } else {
      // F(X) > 0 makes both square roots real, and one of 2(X, +-Y) equals w
      for (;;) {
        Interval X(r.lo, r.hi);
        s = ((X * X + Interval(a)) * X + Interval(b)).sign();
        if (s != 0 || r.exact) break;
        refine_root(sf, r);
      }
      if (r.exact) s = sgn(F(r.lo));
    }
    if (s > 0) ++on_curve;
  }
  rep.real_roots_on_curve = on_curve;
  rep.obstructed = on_curve == 0;
  return rep;
}

bool halving_obstruction(const EllipticCurve& E, const CurvePoint& w) { return halving_analysis(E, w).obstructed; }

}  // namespace ratcurve
