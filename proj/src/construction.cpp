#include "ratcurve/construction.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <numeric>

#include "ratcurve/error.hpp"

namespace ratcurve {

namespace {

RationalFunction rf_const(const FieldElement& c) { return RationalFunction::constant(c); }
RationalFunction rf_zero(const FieldPtr& K) { return RationalFunction::constant(K->zero()); }

}  // namespace

CurveFunction CurveFunction::constant(const FieldElement& c) {
  return {rf_const(c), rf_zero(c.field_ptr())};
}
CurveFunction CurveFunction::x(const FieldPtr& K) { return {RationalFunction::identity(K), rf_zero(K)}; }
CurveFunction CurveFunction::y(const FieldPtr& K) { return {rf_zero(K), rf_const(K->one())}; }

FunctionField::FunctionField(EllipticCurve E) : E_(std::move(E)), F_(RationalFunction::from_poly(E_.rhs_poly())) {}

CurveFunction FunctionField::add(const CurveFunction& a, const CurveFunction& b) const { return {a.u + b.u, a.v + b.v}; }
CurveFunction FunctionField::sub(const CurveFunction& a, const CurveFunction& b) const { return {a.u - b.u, a.v - b.v}; }

CurveFunction FunctionField::mul(const CurveFunction& a, const CurveFunction& b) const {
  return {a.u * b.u + a.v * b.v * F_, a.u * b.v + a.v * b.u};
}

CurveFunction FunctionField::inv(const CurveFunction& a) const {
  RationalFunction n = a.u * a.u - a.v * a.v * F_;
  if (n.num().is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of zero in the function field");
  return {a.u / n, -(a.v / n)};
}

CurveFunction FunctionField::apply(const RationalFunction& G, const CurveFunction& a) const {
  auto horner = [&](const KPoly& p) {
    CurveFunction acc = CurveFunction::constant(p.zero());
    for (int i = p.degree(); i >= 0; --i)
      acc = add(mul(acc, a), CurveFunction::constant(p.coeff(std::size_t(i))));
    return acc;
  };
  return div(horner(G.num()), horner(G.den()));
}

CurveFunction FunctionField::pullback(const Isogeny& phi, const CurveFunction& a) const {
  return {compose(a.u, phi.xmap), compose(a.v, phi.xmap) * phi.ymap_factor};
}

namespace {

CurveFunction quotient_expression(const EllipticCurve& E, const CurvePoint& w) {
  const FieldPtr& K = E.field();
  if (w.is_infinity()) return CurveFunction::x(K);
  // z = w_y/(w_x - x) + y/(w_x - x)
  RationalFunction den = RationalFunction::from_poly(kpoly(K, {w.x(), -K->one()}));
  RationalFunction inv = rf_const(K->one()) / den;
  return {rf_const(w.y()) * inv, inv};
}

}  // namespace

QuotientMap::QuotientMap(EllipticCurve E, CurvePoint w)
    : E_(std::move(E)), w_(std::move(w)), z_(quotient_expression(E_, w_)) {
  if (!(w_.curve() == E_)) throw Error(ErrorKind::PointNotOnCurve, "w does not lie on the curve");
}

QuotientMap quotient_map(const EllipticCurve& E, const CurvePoint& w) { return QuotientMap(E, w); }

ExtPoint QuotientMap::operator()(const CurvePoint& P) const {
  if (!(P.curve() == E_)) throw Error(ErrorKind::CurveMismatch, "point is not on the quotient's curve");
  if (P.is_infinity()) return ExtPoint::infinity();
  if (is_lattes()) return ExtPoint(P.x());
  if (P.x() != w_.x()) return ExtPoint((w_.y() + P.y()) / (w_.x() - P.x()));
  if (P == -w_ && !w_.y().is_zero())
    // tangent slope at -w
    return ExtPoint((w_.x() * w_.x() * Rational(3) + E_.a()) / (w_.y() * Rational(2)));
  return ExtPoint::infinity();
}

bool QuotientMap::verify_beta_invariance() const {
  FunctionField KE(E_);
  const FieldPtr& K = E_.field();
  if (is_lattes()) {
    // beta = negation fixes x
    return z_ == CurveFunction::x(K);
  }
  CurveFunction wx = CurveFunction::constant(w_.x()), wy = CurveFunction::constant(w_.y());
  CurveFunction x = CurveFunction::x(K), y = CurveFunction::y(K);
  // w + (-p): the chord slope is z itself
  CurveFunction lam = KE.div(KE.add(y, wy), KE.sub(wx, x));
  CurveFunction X = KE.sub(KE.sub(KE.mul(lam, lam), x), wx);
  CurveFunction Y = KE.sub(KE.mul(lam, KE.sub(wx, X)), wy);
  CurveFunction on_curve = KE.sub(KE.mul(Y, Y), KE.add(KE.mul(KE.mul(X, X), X),
                                                        KE.add(KE.mul(CurveFunction::constant(E_.a()), X),
                                                               CurveFunction::constant(E_.b()))));
  if (!on_curve.is_zero()) return false;
  CurveFunction bz = KE.div(KE.add(wy, Y), KE.sub(wx, X));
  return bz == z_;
}

Poly<KPoly> QuotientMap::cubic_relation() const {
  const FieldPtr& K = E_.field();
  KPoly zx = kpoly_zero(K);
  using XZ = Poly<KPoly>;
  auto cst = [&](const FieldElement& c) { return XZ::constant(KPoly::constant(c)); };
  XZ x = XZ::variable(zx);
  XZ rhs = x * x * x + cst(E_.a()) * x + cst(E_.b());
  if (is_lattes()) return x - XZ::constant(kpoly_x(K));
  XZ Z = XZ::constant(kpoly_x(K));
  XZ Y = Z * (cst(w_.x()) - x) - cst(w_.y());
  return Y * Y - rhs;
}

bool QuotientMap::verify_cubic_relation() const {
  FunctionField KE(E_);
  Poly<KPoly> rel = cubic_relation();
  // substitute x and z = psi in K(E)
  const FieldPtr& K = E_.field();
  CurveFunction acc = CurveFunction::constant(K->zero());
  for (int i = rel.degree(); i >= 0; --i) {
    const KPoly& c = rel.coeff(std::size_t(i));
    CurveFunction ci = KE.apply(RationalFunction::from_poly(c.is_zero() ? kpoly_zero(K) : c), z_);
    acc = KE.add(KE.mul(acc, CurveFunction::x(K)), ci);
  }
  return acc.is_zero();
}

std::string QuotientMap::to_string() const {
  if (is_lattes()) return "z = x";
  std::string num = w_.y().is_zero() ? "y" : "(" + w_.y().to_string() + "+y)";
  std::string wx = w_.x().is_zero() ? "" : w_.x().to_string();
  bool compound = w_.x().coords().size() > 1 && !w_.x().is_rational();
  if (compound) wx = "(" + wx + ")";
  return "z = " + num + "/(" + wx + "-x)";
}

namespace {

using ZPoly = KPoly;            // in Z
using WZPoly = Poly<ZPoly>;     // outer W
using XWZPoly = Poly<WZPoly>;   // outer x

struct Lift {
  FieldPtr K;
  XWZPoly cst(const FieldElement& c) const { return XWZPoly::constant(WZPoly::constant(ZPoly::constant(c))); }
  XWZPoly x() const { return XWZPoly::variable(WZPoly(kpoly_zero(K))); }
  XWZPoly Z() const { return XWZPoly::constant(WZPoly::constant(kpoly_x(K))); }
  XWZPoly W() const { return XWZPoly::constant(WZPoly::variable(kpoly_zero(K))); }
  XWZPoly in_x(const KPoly& p) const {
    XWZPoly acc(WZPoly(kpoly_zero(K)));
    XWZPoly X = x();
    for (int i = p.degree(); i >= 0; --i) acc = acc * X + cst(p.coeff(std::size_t(i)));
    return acc;
  }
};

RationalFunction solve_linear(const WZPoly& R, int expected_degree) {
  if (R.is_zero()) throw Error(ErrorKind::NoLinearFactor, "elimination produced the zero polynomial");
  WZPoly L = R;
  if (R.degree() != 1) {
    L = gcd(R, R.derivative());
    if (L.degree() != 1)
      throw Error(ErrorKind::NoLinearFactor,
                  "no factor of degree 1 in W (W-degree " + std::to_string(R.degree()) + ", gcd degree " +
                      std::to_string(L.degree()) + ")");
  }
  RationalFunction G(-L.coeff(0), L.coeff(1));
  if (G.degree() != expected_degree)
    throw Error(ErrorKind::NoLinearFactor, "eliminated map has degree " + std::to_string(G.degree()) +
                                               ", expected " + std::to_string(expected_degree));
  return G;
}

}  // namespace

RationalFunction eliminate_pushforward(const Isogeny& iso, const QuotientMap& src, const QuotientMap& dst) {
  if (!(iso.domain == src.curve())) throw Error(ErrorKind::CurveMismatch, "source quotient is not on the isogeny's domain");
  if (!(iso.codomain == dst.curve()))
    throw Error(ErrorKind::CurveMismatch, "target quotient is not on the isogeny's codomain");
  if (iso(src.w()) != dst.w())
    throw Error(ErrorKind::CurveMismatch, "target involution is not the pushforward of the source involution");
  const FieldPtr& K = src.curve().field();
  const KPoly& NA = iso.xmap.num();
  const KPoly& DA = iso.xmap.den();
  const KPoly& NB = iso.ymap_factor.num();
  const KPoly& DB = iso.ymap_factor.den();

  if (src.is_lattes()) {
    // Z = x and W = A(x)
    WZPoly R(kpoly_zero(K));
    R.set_coeff(1, DA);
    R.set_coeff(0, -NA);
    return solve_linear(R, iso.degree);
  }

  Lift L{K};
  const EllipticCurve& E = src.curve();
  const FieldElement &wx = src.w().x(), &wy = src.w().y();
  XWZPoly x = L.x(), Z = L.Z(), W = L.W();
  // relation (i) is linear in y
  XWZPoly Y = Z * (L.cst(wx) - x) - L.cst(wy);
  XWZPoly cubic = Y * Y - L.in_x(E.rhs_poly());
  // x = w_x is a root for every Z; the quotient is quadratic with leading coefficient -1
  XWZPoly Q = exact_div(cubic, x - L.cst(wx));
  if (Q.degree() != 2) throw Error(ErrorKind::Internal, "unexpected degree of the reduced curve relation");

  XWZPoly P(WZPoly(kpoly_zero(K)));
  if (dst.is_lattes()) {
    P = W * L.in_x(DA) - L.in_x(NA);
  } else {
    if (NA.degree() <= 0 && DA.degree() <= 0 && (NA.coeff(0) / DA.coeff(0)) == dst.w().x())
      throw Error(ErrorKind::DegenerateQuotient, "w'_x - A(x) vanishes identically");
    const FieldElement &vx = dst.w().x(), &vy = dst.w().y();
    XWZPoly dA = L.in_x(DA), dB = L.in_x(DB);
    P = W * (L.cst(vx) * dA - L.in_x(NA)) * dB - (L.cst(vy) * dA * dB + L.in_x(NB) * dA * Y);
  }
  XWZPoly Pr = prem(P, Q);
  const WZPoly &P1 = Pr.coeff(1), &P0 = Pr.coeff(0);
  const WZPoly &q2 = Q.coeff(2), &q1 = Q.coeff(1), &q0 = Q.coeff(0);
  // Res_x(Q, P1 x + P0)
  WZPoly R = q2 * P0 * P0 - q1 * P0 * P1 + q0 * P1 * P1;
  return solve_linear(R, iso.degree);
}

namespace {

// (u + v y) / d with polynomial parts; products are reduced by y^2 = F only.
struct RawCF {
  KPoly u, v, d;
};

std::pair<KPoly, KPoly> raw_mul(const std::pair<KPoly, KPoly>& a, const std::pair<KPoly, KPoly>& b, const KPoly& F) {
  return {a.first * b.first + a.second * b.second * F, a.first * b.second + a.second * b.first};
}

RawCF raw_of(const CurveFunction& c) {
  return {c.u.num() * c.v.den(), c.v.num() * c.u.den(), c.u.den() * c.v.den()};
}

}  // namespace

bool diagram_commutes(const Isogeny& iso, const QuotientMap& src, const QuotientMap& dst, const RationalFunction& G) {
  // compared by cross multiplication, avoiding gcd reductions in K(x)
  const KPoly F = src.curve().rhs_poly();
  const KPoly &NA = iso.xmap.num(), &DA = iso.xmap.den(), &NB = iso.ymap_factor.num(), &DB = iso.ymap_factor.den();
  const FieldPtr& K = src.curve().field();
  auto pull = [&]() -> RawCF {
    if (dst.is_lattes()) return {NA, kpoly_zero(K), DA};
    const FieldElement &vx = dst.w().x(), &vy = dst.w().y();
    return {(DA * DB).scaled(vy), NB * DA, (DA.scaled(vx) - NA) * DB};
  };
  RawCF lhs = pull();
  RawCF z = raw_of(src.expression());
  const int deg = G.degree();
  std::vector<std::pair<KPoly, KPoly>> zn{{KPoly::constant(K->one()), kpoly_zero(K)}};
  std::vector<KPoly> zd{KPoly::constant(K->one())};
  for (int i = 1; i <= deg; ++i) {
    zn.push_back(raw_mul(zn.back(), {z.u, z.v}, F));
    zd.push_back(zd.back() * z.d);
  }
  std::pair<KPoly, KPoly> num{kpoly_zero(K), kpoly_zero(K)}, den = num;
  for (int i = 0; i <= deg; ++i) {
    const FieldElement& a = G.num().coeff(std::size_t(i));
    const FieldElement& b = G.den().coeff(std::size_t(i));
    KPoly w = zd[std::size_t(deg - i)];
    if (!a.is_zero()) {
      num.first += (zn[std::size_t(i)].first * w).scaled(a);
      num.second += (zn[std::size_t(i)].second * w).scaled(a);
    }
    if (!b.is_zero()) {
      den.first += (zn[std::size_t(i)].first * w).scaled(b);
      den.second += (zn[std::size_t(i)].second * w).scaled(b);
    }
  }
  auto right = raw_mul({lhs.u, lhs.v}, den, F);
  return num.first * lhs.d == right.first && num.second * lhs.d == right.second;
}

Certificates certify_pair(const RationalFunction& g, const RationalFunction& h, const CertifyOptions& opts) {
  Certificates c;
  c.real = h.is_real();
  c.circle = circle_test(g, opts.circle_search);
  c.injective = certify_injective(g, opts);
  return c;
}

ConstructionPair build_pair(const EllipticCurve& E, const CurvePoint& c, const CurvePoint& w, int ell,
                            const BuildOptions& opts) {
  if (!is_odd_prime(ell)) throw Error(ErrorKind::InvalidArgument, "l must be an odd prime");
  if (!E.is_rational()) throw Error(ErrorKind::InvalidArgument, "the curve must be defined over Q");
  if (!(c.curve() == E) || !(w.curve() == E)) throw Error(ErrorKind::CurveMismatch, "c and w must lie on E");
  if (!w.is_infinity() && !(w.x().is_rational() && w.y().is_rational()))
    throw Error(ErrorKind::InvalidArgument, "w must be a rational point");
  if (!torsion_conjugate_check(E, c, ell))
    throw Error(ErrorKind::NotTorsion, "c fails the torsion check: need l c = 0, c != 0 and conj(c) not in <c>");
  if (!halving_obstruction(E, w))
    throw Error(ErrorKind::InvalidArgument, "w is halved by a real point");

  Isogeny phi = velu(E, c, ell);
  Isogeny dual = dual_isogeny(phi, ell);
  QuotientMap psi(E, w);
  CurvePoint w1 = phi(w);
  QuotientMap psi1(phi.codomain, w1);
  CurvePoint w2 = dual(w1);
  if (w2 != ec_mul(ell, w)) throw Error(ErrorKind::DualVerificationFailed, "dual(phi(w)) differs from l w");
  QuotientMap psi2(E, w2);

  RationalFunction g = eliminate_pushforward(phi, psi, psi1);
  RationalFunction f = eliminate_pushforward(dual, psi1, psi2);
  if (!diagram_commutes(phi, psi, psi1, g) || !diagram_commutes(dual, psi1, psi2, f))
    throw Error(ErrorKind::Internal, "eliminated maps do not satisfy the diagram");
  RationalFunction h = compose(f, g);
  if (!h.is_real()) throw Error(ErrorKind::RealnessFailed, "f o g is not fixed by the conjugation");

  const FieldPtr& K = E.field();
  ConstructionPair out{f, g, h, ell,
                       Provenance{E, c, w, phi, dual, psi, psi1, psi2, g, f},
                       Normalization{Moebius::identity(K), Moebius::identity(K), Moebius::identity(K), false},
                       {}};
  if (opts.certify) out.certificates = certify_pair(g, h, opts.certify_options);
  else out.certificates.real = true;
  return out;
}

ConstructionPair make_pair(const RationalFunction& f, const RationalFunction& g, const BuildOptions& opts) {
  const FieldPtr& K = g.field();
  if (!f.field()->same_as(*K)) throw Error(ErrorKind::FieldMismatch, "f and g are over different fields");
  RationalFunction h = compose(f, g);
  ConstructionPair out{f, g, h, g.degree(), std::nullopt,
                       Normalization{Moebius::identity(K), Moebius::identity(K), Moebius::identity(K), false},
                       {}};
  if (opts.certify) out.certificates = certify_pair(g, h, opts.certify_options);
  else out.certificates.real = h.is_real();
  return out;
}

ConstructionPair normalize_pair(const ConstructionPair& pair, const Moebius& inner, const Moebius& outer,
                                const std::optional<Moebius>& mu, const BuildOptions& opts) {
  if (!inner.is_real() || !outer.is_real())
    throw Error(ErrorKind::NonRealMoebius, "normalizing maps must have conjugation-fixed coefficients");
  const FieldPtr& K = pair.g.field();
  Moebius m = mu ? *mu : Moebius::identity(K);
  ConstructionPair out = pair;
  out.g = compose(m.to_function(), compose(pair.g, inner.to_function()));
  out.f = compose(outer.to_function(), compose(pair.f, m.inverse().to_function()));
  out.h = compose(outer.to_function(), compose(pair.h, inner.to_function()));
  if (compose(out.f, out.g) != out.h) throw Error(ErrorKind::Internal, "normalization broke h = f o g");
  out.normalization.inner = pair.normalization.inner * inner;
  out.normalization.outer = outer * pair.normalization.outer;
  out.normalization.mu = m * pair.normalization.mu;
  if (opts.certify) out.certificates = certify_pair(out.g, out.h, opts.certify_options);
  else out.certificates.real = out.h.is_real();
  return out;
}

namespace {

using cd = std::complex<double>;

struct Approx {
  std::vector<cd> num, den;
  explicit Approx(const RationalFunction& f) {
    for (const auto& c : f.num().coeffs()) num.push_back(c.approx());
    for (const auto& c : f.den().coeffs()) den.push_back(c.approx());
  }
  static cd horner(const std::vector<cd>& p, cd x) {
    cd acc = 0;
    for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
    return acc;
  }
  // false at (numerical) poles
  bool eval(cd x, cd& out) const {
    cd d = horner(den, x);
    cd n = horner(num, x);
    if (std::abs(d) <= 1e-12 * std::max(1.0, std::abs(n))) return false;
    out = n / d;
    return std::isfinite(out.real()) && std::isfinite(out.imag());
  }
};

cd cross_ratio(cd a, cd b, cd c, cd d) { return ((a - c) * (b - d)) / ((a - d) * (b - c)); }

struct Cand {
  long a, b, c, d;
};

constexpr int kProbe = 6;
const double kProbePoints[kProbe] = {0.3183, -1.4142, 2.7183, -0.5772, 0.7071, 1.6180};

bool prefilter(const Approx& src, const std::array<cd, kProbe>& dst, const Cand& m) {
  std::array<cd, kProbe> s;
  for (int i = 0; i < kProbe; ++i) {
    double r = kProbePoints[i];
    double den = double(m.c) * r + double(m.d);
    if (std::abs(den) < 1e-9) return false;
    if (!src.eval(cd((double(m.a) * r + double(m.b)) / den, 0.0), s[std::size_t(i)])) return false;
  }
  for (int i = 0; i < kProbe; ++i)
    for (int j = i + 1; j < kProbe; ++j)
      if (std::abs(s[std::size_t(i)] - s[std::size_t(j)]) < 1e-9 * (1 + std::abs(s[std::size_t(i)]))) return false;
  for (int k = 3; k < kProbe; ++k) {
    cd x = cross_ratio(s[0], s[1], s[2], s[std::size_t(k)]);
    cd y = cross_ratio(dst[0], dst[1], dst[2], dst[std::size_t(k)]);
    if (std::abs(x - y) > 1e-6 * (1 + std::abs(y))) return false;
  }
  return true;
}

long icd(long a, long b) { return std::gcd(std::labs(a), std::labs(b)); }

// Inner maps whose largest entry is exactly h, up to sign and scaling.
std::vector<Cand> inner_layer(long h) {
  std::vector<Cand> out;
  for (long a = -h; a <= h; ++a)
    for (long b = -h; b <= h; ++b)
      for (long c = -h; c <= h; ++c)
        for (long d = -h; d <= h; ++d) {
          if (std::max({std::labs(a), std::labs(b), std::labs(c), std::labs(d)}) != h) continue;
          if (a * d - b * c == 0) continue;
          if (icd(icd(a, b), icd(c, d)) != 1) continue;
          long first = a != 0 ? a : (b != 0 ? b : c);
          if (first < 0) continue;
          out.push_back({a, b, c, d});
        }
  return out;
}

std::optional<Moebius> exact_outer(const RationalFunction& src, const RationalFunction& dst, const Moebius& inner) {
  RationalFunction s = compose(src, inner.to_function());
  std::array<ExtPoint, 3> from{ExtPoint::infinity(), ExtPoint::infinity(), ExtPoint::infinity()};
  std::array<ExtPoint, 3> to = from;
  int k = 0;
  for (const Rational& r : small_height_rationals(64)) {
    ExtPoint a = eval_at_rational(s, r);
    bool dup = false;
    for (int i = 0; i < k; ++i) dup = dup || from[std::size_t(i)] == a;
    if (dup) continue;
    from[std::size_t(k)] = a;
    to[std::size_t(k)] = eval_at_rational(dst, r);
    if (++k == 3) break;
  }
  if (k < 3) return std::nullopt;
  try {
    Moebius out = moebius_from_triples(from, to);
    if (compose(out.to_function(), s) == dst) return out;
  } catch (const Error&) {
  }
  return std::nullopt;
}

}  // namespace

std::optional<MoebiusPairMatch> search_normalization(const RationalFunction& src, const RationalFunction& dst,
                                                     const SearchOptions& opts) {
  if (src.degree() != dst.degree()) return std::nullopt;
  if (!src.field()->same_as(*dst.field())) throw Error(ErrorKind::FieldMismatch, "functions over different fields");
  const FieldPtr& K = src.field();
  Approx as(src), ad(dst);
  std::array<cd, kProbe> dv;
  for (int i = 0; i < kProbe; ++i)
    if (!ad.eval(cd(kProbePoints[i], 0.0), dv[std::size_t(i)]))
      throw Error(ErrorKind::Internal, "probe point hits a pole of the target");
  long total = 0, hits = 0;
  for (long h = 1; h <= opts.height; ++h) {
    std::vector<Cand> cands = inner_layer(h);
    const long n = long(cands.size());
    total += n;
    std::vector<char> hit(cands.size(), 0);
    if (opts.exec == Exec::Parallel) {
#pragma omp parallel for schedule(dynamic, 4096)
      for (long i = 0; i < n; ++i) hit[std::size_t(i)] = prefilter(as, dv, cands[std::size_t(i)]) ? 1 : 0;
    } else {
      for (long i = 0; i < n; ++i) hit[std::size_t(i)] = prefilter(as, dv, cands[std::size_t(i)]) ? 1 : 0;
    }
    for (long i = 0; i < n; ++i) {
      if (!hit[std::size_t(i)]) continue;
      ++hits;
      const Cand& m = cands[std::size_t(i)];
      auto q = [&](long v) { return K->from_rational(Rational(v)); };
      Moebius inner(q(m.a), q(m.b), q(m.c), q(m.d));
      if (auto outer = exact_outer(src, dst, inner); outer && outer->is_real())
        return MoebiusPairMatch{inner, *outer, total, hits};
    }
  }
  return std::nullopt;
}

std::optional<Normalization> match_pair(const ConstructionPair& raw, const RationalFunction& f_target,
                                        const RationalFunction& g_target, const SearchOptions& opts) {
  RationalFunction h_target = compose(f_target, g_target);
  auto m = search_normalization(raw.h, h_target, opts);
  if (!m) return std::nullopt;
  for (bool conj : {false, true}) {
    RationalFunction g0 = conj ? raw.g.conjugate() : raw.g;
    RationalFunction f0 = conj ? raw.f.conjugate() : raw.f;
    RationalFunction gi = compose(g0, m->inner.to_function());
    // mu is pinned by three values of g
    std::array<ExtPoint, 3> from{ExtPoint::infinity(), ExtPoint::infinity(), ExtPoint::infinity()};
    std::array<ExtPoint, 3> to = from;
    int k = 0;
    for (const Rational& r : small_height_rationals(64)) {
      ExtPoint a = eval_at_rational(gi, r);
      bool dup = false;
      for (int i = 0; i < k; ++i) dup = dup || from[std::size_t(i)] == a;
      if (dup) continue;
      from[std::size_t(k)] = a;
      to[std::size_t(k)] = eval_at_rational(g_target, r);
      if (++k == 3) break;
    }
    if (k < 3) continue;
    try {
      Moebius mu = moebius_from_triples(from, to);
      if (compose(mu.to_function(), gi) != g_target) continue;
      RationalFunction f1 = compose(m->outer.to_function(), compose(f0, mu.inverse().to_function()));
      if (f1 != f_target) continue;
      return Normalization{m->inner, m->outer, mu, conj};
    } catch (const Error&) {
    }
  }
  return std::nullopt;
}

}  // namespace ratcurve
