#include <algorithm>
#include <random>

#include "doctest.h"
#include "ratcurve/catalog.hpp"
#include "ratcurve/error.hpp"
#include "ratcurve/ratfunc.hpp"

using namespace ratcurve;

namespace {

FieldPtr eis() { return NumberField::builtin("eisenstein"); }
FieldPtr QQ() { return NumberField::rationals(); }

RationalFunction rf(const char* s, const FieldPtr& K) { return parse_rational_function(s, K); }

KPoly random_kpoly(const FieldPtr& K, int deg, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> d(-5, 5);
  std::vector<FieldElement> c;
  for (int i = 0; i <= deg; ++i) {
    std::vector<Rational> co;
    for (int j = 0; j < K->degree(); ++j) co.emplace_back(d(rng));
    c.push_back(K->from_coords(co));
  }
  if (c.back().is_zero()) c.back() = K->one();
  return kpoly(K, c);
}

RationalFunction random_rf(const FieldPtr& K, int deg, std::mt19937_64& rng) {
  for (;;) {
    RationalFunction r(random_kpoly(K, deg, rng), random_kpoly(K, deg, rng));
    if (!r.is_constant()) return r;
  }
}

}  // namespace

TEST_CASE("reduction to canonical form") {
  auto K = QQ();
  CHECK(rf("(z^2-1)/(z-1)", K) == rf("z+1", K));
  auto E = eis();
  RationalFunction g = rf("(2*z^3+(t+1)*z)/(z^2-t)", E);
  CHECK(g.to_string() == "(2*z^3+(t+1)*z)/(z^2-t)");
  CHECK(rf("0/z", K).num().is_zero());
  CHECK_THROWS_AS(RationalFunction(kpoly_x(K), kpoly_zero(K)), Error);
  CHECK(rf("z/(2*z+2)", K).den().lead() == K->one());
}

TEST_CASE("printed composition") {
  auto K = eis();
  RationalFunction h = compose(printed_f(K), printed_g(K));
  CHECK(h == rf("(8*z^9-24*z^5-13*z^3-6*z)/(12*z^8+13*z^6+12*z^4-1)", K));
  CHECK(h.is_real());
  CHECK(h.degree() == 9);
  CHECK(compose(RationalFunction::identity(K), printed_g(K)) == printed_g(K));
  CHECK(compose(rf("z^2", K), rf("z^3", K)) == rf("z^6", K));
}

TEST_CASE("conjugation and realness") {
  auto K = eis();
  RationalFunction g = printed_g(K);
  CHECK(g.conjugate() == rf("(2*z^3-t*z)/(z^2+1+t)", K));
  CHECK(g.conjugate().conjugate() == g);
  CHECK_FALSE(g.is_real());
  CHECK(compose(printed_f(K), g).conjugate() == compose(printed_f(K), g));
  CHECK(rf("z+t-(-1-t)+(-1-t-t)", K).is_real());
}

TEST_CASE("evaluation at infinity") {
  auto K = QQ();
  CHECK(rf("z^2/(z+1)", K)(ExtPoint::infinity()).is_infinity());
  CHECK(rf("z/(z^2+1)", K)(ExtPoint::infinity()).value().is_zero());
  CHECK(rf("(3*z+1)/(2*z)", K)(ExtPoint::infinity()).value() == K->from_rational(Rational(3, 2)));
  CHECK(rf("1/z", K)(ExtPoint(K->zero())).is_infinity());
}

TEST_CASE("moebius from triples") {
  auto K = NumberField::builtin("gaussian");
  FieldElement i = K->gen();
  ExtPoint inf = ExtPoint::infinity(), zero(K->zero()), one(K->one());
  CHECK(moebius_from_triples({zero, one, inf}, {zero, one, inf}) == Moebius::identity(K));
  Moebius r = moebius_from_triples({zero, one, inf}, {inf, one, zero});
  CHECK(r.to_function() == rf("1/z", K));
  Moebius mu = moebius_from_triples({ExtPoint(i), ExtPoint(-i), inf}, {inf, zero, one});
  CHECK(mu.to_function() == rf("(z+t)/(z-t)", K));
  CHECK(mu(ExtPoint(-i)) == zero);
  CHECK(mu(ExtPoint(i)).is_infinity());
  CHECK(mu(inf) == one);
  CHECK_THROWS_AS(moebius_from_triples({zero, zero, inf}, {zero, one, inf}), Error);
}

TEST_CASE("resultants") {
  auto K = QQ();
  KPoly x = kpoly_x(K), one = KPoly::constant(K->one()), zero = kpoly_zero(K);
  // outer variable y
  KBiPoly a(std::vector<KPoly>{-x, one}, zero), b(std::vector<KPoly>{-(x + x), one}, zero);
  KPoly r = resultant_y(a, b);
  CHECK((r == x || r == -x));
  KBiPoly c(std::vector<KPoly>{-x, zero, one}, zero), d(std::vector<KPoly>{zero, one}, zero);
  KPoly r2 = resultant_y(c, d);
  CHECK((r2 == x || r2 == -x));
  KBiPoly e(std::vector<KPoly>{x * x, zero, one}, zero), f(std::vector<KPoly>{x, -one}, zero);
  CHECK(resultant_y(e, f) == (x * x).scaled(K->from_rational(2)));
}

TEST_CASE("sturm counts") {
  auto K = QQ();
  CHECK(sturm_count(to_kpoly(qpoly_from_ints({33867, 156, 1}), K), ExtReal::neg_inf(), ExtReal::pos_inf()) == 0);
  CHECK(sturm_count(to_kpoly(qpoly_from_ints({-1, 0, 1}), K), ExtReal::neg_inf(), ExtReal::pos_inf()) == 2);
  CHECK(sturm_count(to_kpoly(qpoly_from_ints({0, 0, 0, 1}), K), ExtReal::finite(-1), ExtReal::finite(1)) == 1);
  auto E = eis();
  CHECK_THROWS_AS(sturm_count(kpoly(E, {E->gen(), E->one()}), ExtReal::neg_inf(), ExtReal::pos_inf()), Error);
}

TEST_CASE("real/imaginary split") {
  auto K = eis();
  FieldElement w = K->gen();
  KPoly x = kpoly_x(K), zero = kpoly_zero(K);
  KBiPoly H(std::vector<KPoly>{x, KPoly::constant(w)}, zero);  // x + w y
  auto [A, B] = split_real_imag(H);
  QPoly qx = qpoly_from_ints({0, 1}), qz(Rational(0));
  CHECK(A == QBiPoly(std::vector<QPoly>{qx, qpoly({Rational(-1, 2)})}, qz));
  CHECK(B == QBiPoly(std::vector<QPoly>{qz, qpoly({Rational(1, 2)})}, qz));
  KBiPoly R(std::vector<KPoly>{x * x, KPoly::constant(K->from_rational(3))}, zero);
  auto [A2, B2] = split_real_imag(R);
  CHECK(B2.is_zero());
  FieldElement delta = imaginary_unit_delta(K);
  KBiPoly D(std::vector<KPoly>{zero, x.scaled(delta)}, zero);  // delta x y
  auto [A3, B3] = split_real_imag(D);
  CHECK(A3.is_zero());
  CHECK(B3 == QBiPoly(std::vector<QPoly>{qz, qx}, qz));
  auto Z5 = NumberField::builtin("cyclotomic:5");
  KBiPoly H5(std::vector<KPoly>{kpoly_x(Z5)}, kpoly_zero(Z5));
  CHECK_THROWS_AS(split_real_imag(H5), Error);
}

TEST_CASE("parse and print round trip") {
  auto K = eis();
  for (const char* s : {"(2*z^3+(t+1)*z)/(z^2-t)", "z", "(1/3*z^3+(-288*t-288)*z)/(z^2+48)", "-z^2+t"}) {
    RationalFunction r = rf(s, K);
    CHECK(rf(r.to_string().c_str(), K) == r);
  }
  CHECK_THROWS_AS(rf("(z+", K), Error);
}

TEST_CASE("property: composition laws on random functions") {
  std::mt19937_64 rng(5);
  for (const char* name : {"rationals", "eisenstein", "gaussian"}) {
    auto K = NumberField::builtin(name);
    for (int it = 0; it < 15; ++it) {
      RationalFunction a = random_rf(K, 2, rng), b = random_rf(K, 2, rng), c = random_rf(K, 1 + it % 2, rng);
      CHECK(compose(compose(a, b), c) == compose(a, compose(b, c)));
      CHECK(compose(a, b).conjugate() == compose(a.conjugate(), b.conjugate()));
      CHECK(compose(a, b).degree() == a.degree() * b.degree());
    }
  }
}

TEST_CASE("property: moebius group laws") {
  std::mt19937_64 rng(9);
  auto K = eis();
  std::uniform_int_distribution<long> d(-6, 6);
  auto el = [&] { return K->from_coords({Rational(d(rng)), Rational(d(rng))}); };
  for (int it = 0; it < 30; ++it) {
    FieldElement a = el(), b = el(), c = el(), e = el();
    if ((a * e - b * c).is_zero()) continue;
    Moebius m(a, b, c, e);
    FieldElement a2 = el(), b2 = el(), c2 = el(), e2 = el();
    if ((a2 * e2 - b2 * c2).is_zero()) continue;
    Moebius n(a2, b2, c2, e2);
    CHECK((m * n).to_function() == compose(m.to_function(), n.to_function()));
    CHECK((m * m.inverse()) == Moebius::identity(K));
  }
}

TEST_CASE("property: sturm counts against constructed roots") {
  std::mt19937_64 rng(17);
  auto K = QQ();
  std::uniform_int_distribution<long> num(-30, 30), den(1, 6), nroots(0, 4), mult(1, 2), quad(0, 1);
  for (int it = 0; it < 500; ++it) {
    QPoly p = qpoly_from_ints({1});
    std::vector<Rational> roots;
    int k = int(nroots(rng));
    for (int j = 0; j < k; ++j) {
      Rational r(num(rng), den(rng));
      r.canonicalize();
      bool fresh = std::find(roots.begin(), roots.end(), r) == roots.end();
      if (fresh) roots.push_back(r);
      int m = int(mult(rng));
      for (int e = 0; e < m; ++e) p = p * qpoly({-r, Rational(1)});
    }
    if (quad(rng)) p = p * qpoly_from_ints({1 + long(den(rng)), 0, 1});  // no real roots
    if (p.degree() > 8) continue;
    if (p.degree() < 1) p = qpoly_from_ints({2, 0, 1});
    KPoly kp = to_kpoly(p, K);
    CHECK(sturm_count(kp, ExtReal::neg_inf(), ExtReal::pos_inf()) == int(roots.size()));
    Rational lo(-3), hi(4);
    int inside = 0;
    for (const auto& r : roots) inside += (lo < r && r < hi);
    CHECK(sturm_count(kp, ExtReal::finite(lo), ExtReal::finite(hi)) == inside);
    QPoly sf = squarefree_part(p);
    auto iso = isolate_real_roots(sf);
    CHECK(int(iso.size()) == int(roots.size()));
  }
}

TEST_CASE("property: resultant vanishes at common roots") {
  std::mt19937_64 rng(23);
  auto K = QQ();
  std::uniform_int_distribution<long> d(-4, 4);
  for (int it = 0; it < 40; ++it) {
    Rational x0(d(rng)), y0(d(rng));
    auto randbi = [&] {
      std::vector<KPoly> rows;
      for (int j = 0; j <= 2; ++j) rows.push_back(to_kpoly(qpoly({Rational(d(rng)), Rational(d(rng)), Rational(1)}), K));
      KBiPoly P(rows, kpoly_zero(K));
      FieldElement v = K->zero();
      for (int j = P.degree(); j >= 0; --j) v = v * y0 + eval_at(P.coeff(std::size_t(j)), x0);
      P.set_coeff(0, P.coeff(0) - KPoly::constant(v));
      return P;
    };
    KBiPoly A = randbi(), B = randbi();
    KPoly R = resultant_y(A, B);
    CHECK(eval_at(R, x0).is_zero());
  }
}
