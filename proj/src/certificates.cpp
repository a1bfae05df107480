#include "ratcurve/certificates.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>

#include "ratcurve/error.hpp"

namespace ratcurve {

std::vector<Rational> small_height_rationals(int count) {
  std::vector<Rational> out;
  if (count <= 0) return out;
  out.emplace_back(0);
  for (long h = 1; int(out.size()) < count; ++h) {
    // p/q with max(|p|, q) = h, in order h/1, 1/h, then the rest by denominator
    std::vector<Rational> layer;
    for (long q = 1; q <= h; ++q)
      for (long p = 1; p <= h; ++p) {
        if (std::max(p, q) != h || std::gcd(p, q) != 1) continue;
        layer.emplace_back(p, q);
      }
    std::stable_sort(layer.begin(), layer.end(), [h](const Rational& a, const Rational& b) {
      auto key = [h](const Rational& r) {
        long p = r.get_num().get_si(), q = r.get_den().get_si();
        if (q == 1) return 0L;
        if (p == 1) return 1L;
        return 2 + q * (h + 1) + p;
      };
      return key(a) < key(b);
    });
    for (const Rational& r : layer) {
      out.push_back(r);
      out.push_back(-r);
    }
  }
  out.resize(std::size_t(count));
  return out;
}

std::string to_string(Injectivity v) {
  switch (v) {
    case Injectivity::Injective: return "Injective";
    case Injectivity::NotInjective: return "NotInjective";
    default: return "Undecided";
  }
}

std::string RealPoint::to_string() const {
  if (infinity) return "inf";
  if (box.lo() == box.hi()) return box.lo().get_str();
  return box.to_string();
}

CircleVerdict circle_test(const RationalFunction& g, int search_bound) {
  if (g.is_constant()) throw Error(ErrorKind::InvalidArgument, "circle test of a constant function");
  CircleVerdict out;
  std::array<ExtPoint, 3> vals{ExtPoint::infinity(), ExtPoint::infinity(), ExtPoint::infinity()};
  int k = 0;
  for (const Rational& r : small_height_rationals(search_bound)) {
    ExtPoint v = eval_at_rational(g, r);
    if (v.is_infinity()) continue;
    bool dup = false;
    for (int i = 0; i < k; ++i) dup = dup || vals[std::size_t(i)] == v;
    if (dup) continue;
    vals[std::size_t(k)] = v;
    out.points.push_back(r);
    if (++k == 3) break;
  }
  if (k < 3) throw Error(ErrorKind::InsufficientPoints, "no three rationals with distinct finite images");
  const FieldPtr& K = g.field();
  Moebius mu = moebius_from_triples(vals, {ExtPoint::infinity(), ExtPoint(K->zero()), ExtPoint(K->one())});
  if (compose(mu.to_function(), g).is_real()) {
    out.circle = true;
    out.lambda = mu;
    return out;
  }
  std::array<ExtPoint, 3> cv{vals[0].conjugate(), vals[1].conjugate(), vals[2].conjugate()};
  Moebius rho = moebius_from_triples(vals, cv);
  if (compose(rho.to_function(), g) == g.conjugate()) {
    // conj(g) = rho o g with g(R) meeting the fixed circle of rho forces mu o g real
    throw Error(ErrorKind::Internal, "circle test: rho verified but the normalized map is not real");
  }
  return out;
}

namespace {

Interval enclose(const Rational& c, long) { return Interval(c); }
Interval enclose(const FieldElement& c, long prec) {
  if (c.is_rational()) return Interval(c.rational_value());
  return real_enclosure(c, prec);
}

template <class T>
using BP = Poly<Poly<T>>;  // outer y, inner x

template <class T>
Poly<T> specialize_x(const BP<T>& P, const Rational& x0) {
  Poly<T> out(P.zero().zero());
  for (int j = 0; j <= P.degree(); ++j) out.set_coeff(std::size_t(j), eval_at(P.coeff(std::size_t(j)), x0));
  return out;
}

template <class T>
struct IPoly2 {
  // enclosures of the coefficients, [y-degree][x-degree]
  std::vector<std::vector<Interval>> c;
  IPoly2(const BP<T>& P, long prec) {
    for (const auto& row : P.coeffs()) {
      std::vector<Interval> r;
      for (const auto& v : row.coeffs()) r.push_back(enclose(v, prec));
      c.push_back(std::move(r));
    }
  }
  static Interval horner(const std::vector<Interval>& p, const Interval& x) {
    Interval acc(Rational(0));
    for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
    return acc;
  }
  Interval operator()(const Interval& x, const Interval& y) const {
    Interval acc(Rational(0));
    for (std::size_t j = c.size(); j-- > 0;) acc = acc * y + horner(c[j], x);
    return acc;
  }
};

template <class T>
BP<T> d_dx(const BP<T>& P) {
  return P.map([](const Poly<T>& r) { return r.derivative(); });
}

// Interval Krawczyk test for a unique root of (A, B) in the box X x Y.
template <class T>
bool krawczyk2(const BP<T>& A, const BP<T>& B, const Interval& X, const Interval& Y, long prec) {
  IPoly2<T> a(A, prec), b(B, prec), ax(d_dx(A), prec), ay(A.derivative(), prec), bx(d_dx(B), prec),
      by(B.derivative(), prec);
  Rational mx = X.mid(), my = Y.mid();
  Interval Mx(mx), My(my);
  // preconditioner: inverse of the Jacobian at the midpoint, rounded
  double j11 = to_double(ax(Mx, My).mid()), j12 = to_double(ay(Mx, My).mid());
  double j21 = to_double(bx(Mx, My).mid()), j22 = to_double(by(Mx, My).mid());
  double det = j11 * j22 - j12 * j21;
  if (det == 0 || !std::isfinite(det)) return false;
  Rational c11 = from_double(j22 / det), c12 = from_double(-j12 / det);
  Rational c21 = from_double(-j21 / det), c22 = from_double(j11 / det);
  Interval fa = a(Mx, My), fb = b(Mx, My);
  Interval J11 = ax(X, Y), J12 = ay(X, Y), J21 = bx(X, Y), J22 = by(X, Y);
  Interval dX = X - Mx, dY = Y - My;
  Interval one(Rational(1));
  Interval m11 = one - (Interval(c11) * J11 + Interval(c12) * J21);
  Interval m12 = Interval(Rational(0)) - (Interval(c11) * J12 + Interval(c12) * J22);
  Interval m21 = Interval(Rational(0)) - (Interval(c21) * J11 + Interval(c22) * J21);
  Interval m22 = one - (Interval(c21) * J12 + Interval(c22) * J22);
  Interval kx = Mx - (Interval(c11) * fa + Interval(c12) * fb) + m11 * dX + m12 * dY;
  Interval ky = My - (Interval(c21) * fa + Interval(c22) * fb) + m21 * dX + m22 * dY;
  return kx.strictly_inside(X) && ky.strictly_inside(Y);
}

template <class T>
Poly<T> gcd_pair(const Poly<T>& a, const Poly<T>& b) {
  if (a.is_zero()) return make_monic(b);
  if (b.is_zero()) return make_monic(a);
  return gcd(a, b);
}

// Removes every factor (y - y0).
template <class T>
Poly<T> strip_root(Poly<T> p, const Rational& y0) {
  while (p.degree() > 0 && sign_of(eval_at(p, y0)) == 0) {
    T c0 = p.one() * y0;
    Poly<T> lin(std::vector<T>{-c0, p.one()}, p.zero());
    p = divmod(p, lin).first;
  }
  return p;
}

template <class T>
bool total_degree_positive(const BP<T>& P) {
  if (P.degree() > 0) return true;
  return P.degree() == 0 && P.coeff(0).degree() > 0;
}

template <class T>
InjectivityCertificate injective_engine(const BP<T>& A, const BP<T>& B, const Poly<T>& pa, const Poly<T>& pb,
                                        bool partner_is_pole, const CertifyOptions& opts) {
  InjectivityCertificate out;
  // the point at infinity: real x with g(x) = g(inf)
  {
    Poly<T> u = gcd_pair(pa, pb);
    if (u.degree() > 0 && sturm_count_open(u, ExtReal::neg_inf(), ExtReal::pos_inf()) > 0) {
      auto roots = isolate_real_roots(u);
      out.verdict = Injectivity::NotInjective;
      RealPoint inf{true, Interval()};
      out.witness = std::make_pair(inf, RealPoint{false, Interval(roots[0].lo, roots[0].hi)});
      out.method = partner_is_pole ? "real pole shares the value at infinity" : "real point shares the value at infinity";
      return out;
    }
  }

  BP<T> G = B.is_zero() ? A : gcd(A, B);
  if (total_degree_positive(G)) {
    // a curve of common zeros; look for a real off-diagonal point on it
    out.method = "common component; rational specialization";
    for (const Rational& x0 : small_height_rationals(opts.grid)) {
      Poly<T> a = specialize_x(A, x0), b = specialize_x(B, x0);
      if (a.is_zero() && b.is_zero()) {
        out.verdict = Injectivity::NotInjective;
        out.witness = std::make_pair(RealPoint{false, Interval(x0)}, RealPoint{false, Interval(Rational(x0 + 1))});
        return out;
      }
      Poly<T> u = strip_root(gcd_pair(a, b), x0);
      if (u.degree() <= 0) continue;
      auto roots = isolate_real_roots(u);
      if (roots.empty()) continue;
      RealPoint y;
      for (int it = 0; it < 256 && !roots[0].exact && roots[0].hi - roots[0].lo > Rational(1, 1 << 20); ++it)
        refine_root(squarefree_part(u), roots[0]);
      y.box = roots[0].exact ? Interval(roots[0].lo) : Interval(roots[0].lo, roots[0].hi);
      out.verdict = Injectivity::NotInjective;
      out.witness = std::make_pair(RealPoint{false, Interval(x0)}, y);
      return out;
    }
    out.verdict = Injectivity::Undecided;
    return out;
  }

  Poly<T> R = resultant(A, B);
  if (R.is_zero()) {
    out.verdict = Injectivity::Undecided;
    out.method = "vanishing resultant";
    return out;
  }
  out.resultant_degree = R.degree();
  Poly<T> sf = squarefree_part(R);
  std::vector<RootInterval> roots = sf.degree() > 0 ? isolate_real_roots(sf) : std::vector<RootInterval>{};
  out.real_candidates = int(roots.size());
  out.method = "resultant root isolation with interval exclusion";
  const int n = int(roots.size());
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);

  // 0 excluded, 1 root proven, 2 unresolved
  std::vector<int> status(pairs.size(), 2);
  std::vector<std::pair<Interval, Interval>> boxes(pairs.size());
  auto work = [&](std::size_t k) {
    RootInterval rx = roots[std::size_t(pairs[k].first)], ry = roots[std::size_t(pairs[k].second)];
    long prec = opts.precision;
    for (int round = 0; round <= opts.max_doublings; ++round) {
      Interval X = rx.exact ? Interval(rx.lo) : Interval(rx.lo, rx.hi);
      Interval Y = ry.exact ? Interval(ry.lo) : Interval(ry.lo, ry.hi);
      IPoly2<T> ia(A, prec), ib(B, prec);
      if (!ia(X, Y).contains_zero() || !ib(X, Y).contains_zero()) {
        status[k] = 0;
        return;
      }
      if (round >= 4 && !rx.exact && !ry.exact && krawczyk2(A, B, X, Y, prec)) {
        status[k] = 1;
        boxes[k] = {X, Y};
        return;
      }
      for (int s = 0; s < 4; ++s) {
        refine_root(sf, rx);
        refine_root(sf, ry);
      }
      Rational w = std::max(Rational(rx.hi - rx.lo), Rational(ry.hi - ry.lo));
      if (sgn(w) > 0) prec = std::max(prec, 2 * (-floor_log2(w)) + 64);
    }
    boxes[k] = {Interval(rx.lo, rx.hi), Interval(ry.lo, ry.hi)};
  };
  const long np = long(pairs.size());
  if (opts.exec == Exec::Parallel) {
#pragma omp parallel for schedule(dynamic, 1)
    for (long k = 0; k < np; ++k) work(std::size_t(k));
  } else {
    for (long k = 0; k < np; ++k) work(std::size_t(k));
  }
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    if (status[k] == 0) ++out.pairs_excluded;
    if (status[k] == 1 && !out.witness) {
      out.witness = std::make_pair(RealPoint{false, boxes[k].first}, RealPoint{false, boxes[k].second});
    }
  }
  if (out.witness) {
    out.verdict = Injectivity::NotInjective;
    return out;
  }
  out.verdict = out.pairs_excluded == int(pairs.size()) ? Injectivity::Injective : Injectivity::Undecided;
  return out;
}

// Product of the square-free factors of odd multiplicity (Yun).
template <class T>
Poly<T> odd_multiplicity_part(const Poly<T>& f) {
  Poly<T> out = Poly<T>::constant(f.one());
  if (f.degree() <= 0) return out;
  Poly<T> a = gcd(f, f.derivative());
  Poly<T> b = divmod(f, a).first, c = divmod(f.derivative(), a).first;
  Poly<T> d = c - b.derivative();
  for (int i = 1; b.degree() > 0; ++i) {
    Poly<T> g = gcd(b, d);
    if (i % 2 == 1) out = out * g;
    b = divmod(b, g).first;
    c = divmod(d, g).first;
    d = c - b.derivative();
  }
  return out;
}

// Distinct real preimages of a value v in K (or infinity) under p/q: roots of
// the preimage polynomial, plus infinity when the degree drops.
template <class T>
std::pair<Poly<T>, bool> preimage_poly(const Poly<T>& p, const Poly<T>& q, const std::optional<T>& v) {
  int d = std::max(p.degree(), q.degree());
  Poly<T> u = v ? p - q.scaled(*v) : q;
  return {u, u.degree() < d};
}

template <class T>
std::optional<T> value_at(const Poly<T>& p, const Poly<T>& q, const Rational& x) {
  T den = eval_at(q, x);
  if (is_zero(den)) return std::nullopt;
  return T(eval_at(p, x) / den);
}

// Another real preimage of g(x0), if there is one.
template <class T>
std::optional<RealPoint> other_preimage(const Poly<T>& p, const Poly<T>& q, const Rational& x0) {
  auto [u, at_inf] = preimage_poly(p, q, value_at(p, q, x0));
  if (at_inf) return RealPoint{true, Interval()};
  u = strip_root(squarefree_part(u), x0);
  if (u.degree() <= 0) return std::nullopt;
  auto roots = isolate_real_roots(u);
  if (roots.empty()) return std::nullopt;
  RootInterval r = roots[0];
  while (!r.exact && r.lo <= x0 && x0 <= r.hi) refine_root(u, r);
  return RealPoint{false, r.exact ? Interval(r.lo) : Interval(r.lo, r.hi)};
}

// A real g is injective on the real projective line iff it is a local
// homeomorphism everywhere (no fold) and some regular value has one preimage.
template <class T>
InjectivityCertificate real_injective(const Poly<T>& p, const Poly<T>& q, const CertifyOptions& opts) {
  InjectivityCertificate out;
  out.method = "real function: folds of the Wronskian and one regular fibre";
  Poly<T> W = p.derivative() * q - p * q.derivative();
  std::vector<Rational> probes;
  bool fold = false;
  Poly<T> odd = odd_multiplicity_part(W);
  if (odd.degree() > 0) {
    for (const auto& r : isolate_real_roots(odd)) {
      fold = true;
      probes.push_back(r.lo);
      probes.push_back(r.hi);
    }
  }
  int e = std::abs(p.degree() - q.degree());
  if (e == 0) e = q.degree() - (p - q.scaled(p.lead() / q.lead())).degree();
  if (e % 2 == 0) fold = true;
  for (const Rational& x : small_height_rationals(opts.grid)) probes.push_back(x);
  if (fold) {
    for (const Rational& x : probes) {
      if (auto y = other_preimage(p, q, x)) {
        out.verdict = Injectivity::NotInjective;
        out.witness = std::make_pair(RealPoint{false, Interval(x)}, *y);
        return out;
      }
    }
    out.verdict = Injectivity::Undecided;
    return out;
  }
  for (const Rational& x : probes) {
    if (W.degree() >= 0 && sign_of(eval_at(W, x)) == 0) continue;
    auto y = other_preimage(p, q, x);
    out.verdict = y ? Injectivity::NotInjective : Injectivity::Injective;
    if (y) out.witness = std::make_pair(RealPoint{false, Interval(x)}, *y);
    return out;
  }
  out.verdict = Injectivity::Undecided;
  return out;
}

QBiPoly to_q(const KBiPoly& P) {
  QBiPoly out(QPoly(Rational(0)));
  for (int j = 0; j <= P.degree(); ++j) out.set_coeff(std::size_t(j), to_qpoly(P.coeff(std::size_t(j))));
  return out;
}

std::pair<KPoly, KPoly> split_univariate(const KPoly& p) {
  auto [a, b] = split_real_imag_fixed(bipoly_from_x_poly(p));
  return {a.coeff(0), b.coeff(0)};
}

}  // namespace

InjectivityCertificate certify_injective(const RationalFunction& g, const CertifyOptions& opts) {
  if (g.is_constant()) throw Error(ErrorKind::InvalidArgument, "injectivity of a constant function");
  const FieldPtr& K = g.field();
  if (g.degree() == 1) {
    InjectivityCertificate out;
    out.verdict = Injectivity::Injective;
    out.method = "degree one";
    return out;
  }
  const KPoly &p = g.num(), &q = g.den();
  if (g.is_real()) {
    if (K->fixed_field_is_rational()) return real_injective<Rational>(to_qpoly(p), to_qpoly(q), opts);
    return real_injective<FieldElement>(p, q, opts);
  }
  // H0(x, y) = p(x) q(y) - p(y) q(x), outer variable y
  KBiPoly H0 = bipoly_from_x_poly(p) * bipoly_from_y_poly(q) - bipoly_from_y_poly(p) * bipoly_from_x_poly(q);
  KBiPoly diag(std::vector<KPoly>{kpoly_x(K), KPoly::constant(-K->one())}, kpoly_zero(K));  // x - y
  KBiPoly H = exact_div(H0, diag);
  auto [A, B] = split_real_imag_fixed(H);
  KPoly pinf = kpoly_zero(K);
  bool pole = p.degree() > q.degree();
  if (pole) {
    pinf = q;
  } else {
    FieldElement L = g(ExtPoint::infinity()).value();
    pinf = p - q.scaled(L);
  }
  auto [pa, pb] = split_univariate(pinf);
  InjectivityCertificate out =
      K->fixed_field_is_rational()
          ? injective_engine<Rational>(to_q(A), to_q(B), to_qpoly(pa), to_qpoly(pb), pole, opts)
          : injective_engine<FieldElement>(A, B, pa, pb, pole, opts);
  if (out.verdict != Injectivity::Undecided) return out;
  // g(R) may still be a circle: then lambda o g is real with the same injectivity
  CircleVerdict cv = circle_test(g, opts.circle_search);
  if (!cv.lambda) return out;
  InjectivityCertificate r = certify_injective(compose(cv.lambda->to_function(), g), opts);
  r.method = "after a Moebius map to a real function; " + r.method;
  return r;
}

WeakInjectivity certify_weakly_injective(const RationalFunction& g, const std::vector<Rational>& candidates) {
  if (g.is_constant()) throw Error(ErrorKind::InvalidArgument, "weak injectivity of a constant function");
  const FieldPtr& K = g.field();
  if (!K->fixed_field_is_rational())
    throw Error(ErrorKind::FixedFieldNotRational, "weak injectivity search needs Fix(sigma) = Q");
  WeakInjectivity out;
  RationalFunction dg = g.derivative();
  ExtPoint ginf = g(ExtPoint::infinity());
  for (const Rational& z0 : candidates) {
    ExtPoint v = eval_at_rational(g, z0);
    ExtPoint dv = eval_at_rational(dg, z0);
    if (v.is_infinity()) continue;  // poles are handled through 1/g elsewhere; skip
    if (!dv.is_infinity() && dv.value().is_zero()) continue;
    if (ginf == v) continue;
    KPoly P = g.num() - g.den().scaled(v.value());
    auto [a, b] = split_univariate(P);
    QPoly u = b.is_zero() ? make_monic(to_qpoly(a)) : gcd(to_qpoly(a), to_qpoly(b));
    u = strip_root(u, z0);
    int others = u.degree() > 0 ? sturm_count_open(u, ExtReal::neg_inf(), ExtReal::pos_inf()) : 0;
    if (others != 0) continue;
    out.found = true;
    out.z0 = z0;
    out.certificate = "g'(" + z0.get_str() + ") != 0; p(y) - g(z0) q(y) has no real root other than " + z0.get_str() +
                      " (Sturm on the rational gcd); g(inf) != g(z0)";
    out.search = std::to_string(candidates.size()) + " candidates";
    return out;
  }
  out.search = "no witness among " + std::to_string(candidates.size()) + " small-height rationals";
  return out;
}

WeakInjectivity certify_weakly_injective(const RationalFunction& g) {
  return certify_weakly_injective(g, small_height_rationals(40));
}

}  // namespace ratcurve
