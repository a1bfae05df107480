#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "doctest.h"
#include "ratcurve/catalog.hpp"
#include "ratcurve/construction.hpp"
#include "ratcurve/error.hpp"
#include "ratcurve/families.hpp"
#include "ratcurve/sampling.hpp"

using namespace ratcurve;

namespace {

RationalFunction rf(const char* s, const FieldPtr& K) { return parse_rational_function(s, K); }

const ConstructionPair& pair_14a2() {
  static const ConstructionPair p = [] {
    auto ci = catalog_curve("14a2");
    return build_pair(ci.E, ci.c, ci.w, 3);
  }();
  return p;
}

CurveSample at(double x, double y, bool skipped = false) {
  return {Rational(0), ComplexInterval(Interval(from_double(x)), Interval(from_double(y))), skipped};
}

int count(const std::string& s, char c) { return int(std::count(s.begin(), s.end(), c)); }

}  // namespace

TEST_CASE("quotient map on 14a2") {
  auto ci = catalog_curve("14a2");
  QuotientMap psi = quotient_map(ci.E, ci.w);
  CHECK(psi.to_string() == "z = y/(-78-x)");
  CHECK_FALSE(psi.is_lattes());
  CHECK(psi.verify_beta_invariance());
  CHECK(psi.verify_cubic_relation());
  // psi(p) == psi(w - p)
  CurvePoint p = ci.c;
  CHECK(psi(p) == psi(ec_add(ci.w, -p)));
  CHECK(psi(ci.w).is_infinity() == psi(CurvePoint::infinity(ci.E)).is_infinity());
}

TEST_CASE("Lattes quotient") {
  auto ci = catalog_curve("14a2");
  QuotientMap psi = quotient_map(ci.E, CurvePoint::infinity(ci.E));
  CHECK(psi.is_lattes());
  CHECK(psi.to_string() == "z = x");
  CHECK(psi.verify_beta_invariance());
  CHECK(psi(ci.c) == ExtPoint(ci.c.x()));
}

TEST_CASE("pushforward through the isogeny commutes with the quotients") {
  const auto& P = pair_14a2();
  REQUIRE(P.provenance);
  const auto& pv = *P.provenance;
  CHECK(diagram_commutes(pv.phi, pv.psi, pv.psi1, pv.g_raw));
  CHECK(diagram_commutes(pv.phi_dual, pv.psi1, pv.psi2, pv.f_raw));
  CHECK(pv.g_raw.degree() == 3);
  CHECK(pv.f_raw.degree() == 3);
  CHECK(eliminate_pushforward(pv.phi, pv.psi, pv.psi1) == pv.g_raw);
}

TEST_CASE("construction on 14a2") {
  const auto& P = pair_14a2();
  CHECK(P.ell == 3);
  CHECK(P.f.degree() == 3);
  CHECK(P.g.degree() == 3);
  CHECK(P.h.degree() == 9);
  CHECK(P.h.is_real());
  CHECK(P.h == compose(P.f, P.g));
  CHECK(P.certificates.real);
  CHECK(P.certificates.injective.verdict == Injectivity::Injective);
  CHECK_FALSE(P.certificates.circle.circle);
}

TEST_CASE("the printed pair is reachable by a real normalization") {
  auto K = NumberField::builtin("eisenstein");
  const auto& P = pair_14a2();
  auto m = match_pair(P, printed_f(K), printed_g(K));
  REQUIRE(m);
  CHECK(m->inner.is_real());
  CHECK(m->outer.is_real());
  BuildOptions no_cert;
  no_cert.certify = false;
  ConstructionPair N = normalize_pair(P, m->inner, m->outer, m->mu, no_cert);
  CHECK(N.g == printed_g(K));
  CHECK(N.f == printed_f(K));
  CHECK(N.h == printed_h(K));
}

TEST_CASE("certificates are invariant under a real reparametrization") {
  auto K = NumberField::builtin("eisenstein");
  ConstructionPair p = make_pair(printed_f(K), printed_g(K));
  Moebius dbl(K->from_rational(2), K->zero(), K->zero(), K->one());
  ConstructionPair q = normalize_pair(p, dbl, Moebius::identity(K));
  CHECK(q.g == compose(printed_g(K), rf("2*z", K)));
  CHECK(q.certificates.real == p.certificates.real);
  CHECK(q.certificates.injective.verdict == p.certificates.injective.verdict);
  CHECK(q.certificates.circle.circle == p.certificates.circle.circle);
  Moebius bad(K->gen(), K->zero(), K->zero(), K->one());
  CHECK_THROWS_AS(normalize_pair(p, bad, Moebius::identity(K)), Error);
}

TEST_CASE("circle test") {
  auto K = NumberField::builtin("eisenstein");
  CircleVerdict v = circle_test(printed_g(K));
  CHECK_FALSE(v.circle);
  auto G = NumberField::builtin("gaussian");
  CircleVerdict m = circle_test(rf("(z-t)/(z+t)", G));
  CHECK(m.circle);
  REQUIRE(m.lambda);
  CHECK(compose(m.lambda->to_function(), rf("(z-t)/(z+t)", G)).is_real());
  CHECK(circle_test(rf("z^3", G)).circle);
  auto Z5 = NumberField::builtin("cyclotomic:5");
  RationalFunction g = rf("t*z", Z5) + RationalFunction::constant(Z5->one()) / rf("t*z", Z5);
  CHECK_FALSE(circle_test(g).circle);
}

TEST_CASE("injectivity certificates") {
  auto K = NumberField::builtin("eisenstein");
  CHECK(certify_injective(printed_g(K)).verdict == Injectivity::Injective);
  auto Q = NumberField::rationals();
  InjectivityCertificate sq = certify_injective(rf("z^2", Q));
  CHECK(sq.verdict == Injectivity::NotInjective);
  CHECK(sq.witness);
  CHECK(certify_injective(rf("z^3", Q)).verdict == Injectivity::Injective);
  CHECK(certify_injective(rf("(2*z+1)/(z-3)", Q)).verdict == Injectivity::Injective);
  FamilyOptions opts;
  opts.samples = 0;
  FamilyInstance az = build_family("avanzi-zannier:n=3,k=1,zeta_order=1", opts);
  CHECK(certify_injective(az.g).verdict == Injectivity::NotInjective);
  CHECK_THROWS_AS(certify_injective(rf("t", K)), Error);
}

TEST_CASE("weak injectivity") {
  auto Q = NumberField::rationals();
  WeakInjectivity c = certify_weakly_injective(rf("z^3", Q));
  CHECK(c.found);
  REQUIRE(c.z0);
  CHECK(*c.z0 != 0);
  CHECK_FALSE(certify_weakly_injective(rf("z^2", Q)).found);
  auto K = NumberField::builtin("eisenstein");
  CHECK_FALSE(certify_weakly_injective(printed_h(K)).found);
}

TEST_CASE("sampling a Moebius image of the real line") {
  auto G = NumberField::builtin("gaussian");
  auto s = sample_curve(rf("(z-t)/(z+t)", G), std::nullopt, 64, 80, Exec::Serial);
  CHECK(s.size() == 64);
  for (const auto& x : s) {
    REQUIRE_FALSE(x.skipped);
    CHECK(x.image.norm2().contains(Rational(1)));
  }
  CHECK(self_intersections(s, Exec::Serial) == 0);
  CHECK(fit_circle(s).residual < 1e-9);
  CHECK(sample_curve(rf("(z-t)/(z+t)", G), std::nullopt, 64, 80, Exec::Parallel).size() == 64);
}

TEST_CASE("pole samples are marked") {
  auto Q = NumberField::rationals();
  auto s = sample_curve(rf("z", Q), std::nullopt, 8, 64, Exec::Serial);
  CHECK(s[0].skipped);
  CHECK_FALSE(s[1].skipped);
}

TEST_CASE("svg emission") {
  std::ostringstream two;
  write_svg(two, {at(0, 0), at(1, 1)});
  CHECK(count(two.str(), 'M') == 1);
  CHECK(count(two.str(), 'L') == 1);
  CHECK(two.str().find(" Z") == std::string::npos);
  std::ostringstream split;
  write_svg(split, {at(0, 0), at(1, 1), at(0, 0, true), at(2, 0), at(3, 1)});
  CHECK(count(split.str(), 'M') == 2);
  std::ostringstream one;
  CHECK_THROWS_AS(write_svg(one, {at(0, 0), at(1, 1, true)}), Error);
  std::ostringstream a, b;
  write_svg(a, {at(0, 0), at(1, 1), at(1, 0)});
  write_svg(b, {at(0, 0), at(1, 1), at(1, 0)});
  CHECK(a.str() == b.str());
}

TEST_CASE("property: sampling is deterministic across execution modes") {
  auto K = NumberField::builtin("eisenstein");
  auto post = rf("1/(1+z)", K);
  auto a = sample_curve(printed_g(K), post, 300, 64, Exec::Serial);
  auto b = sample_curve(printed_g(K), post, 300, 64, Exec::Parallel);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].skipped == b[i].skipped);
    CHECK(a[i].image.re.lo() == b[i].image.re.lo());
    CHECK(a[i].image.im.hi() == b[i].image.im.hi());
  }
  CHECK(self_intersections(a, Exec::Serial) == self_intersections(b, Exec::Parallel));
}

TEST_CASE("property: injectivity verdicts on random real functions") {
  std::mt19937_64 rng(77);
  std::uniform_int_distribution<long> d(-4, 4), deg(2, 4);
  auto Q = NumberField::rationals();
  int injective = 0, folded = 0;
  for (int it = 0; it < 60; ++it) {
    std::vector<long> a, b;
    for (long i = 0, n = deg(rng); i <= n; ++i) a.push_back(d(rng));
    for (long i = 0, n = deg(rng) - 1; i <= n; ++i) b.push_back(d(rng));
    if (a.back() == 0 || b.back() == 0) continue;
    RationalFunction g(to_kpoly(qpoly_from_ints(a), Q), to_kpoly(qpoly_from_ints(b), Q));
    if (g.is_constant()) continue;
    InjectivityCertificate c = certify_injective(g);
    REQUIRE(c.verdict != Injectivity::Undecided);
    // angle of g on the circle, around the real projective line
    auto angle = [&](double x) {
      double p = 0, q = 0;
      for (std::size_t i = g.num().coeffs().size(); i-- > 0;) p = p * x + to_double(g.num().coeff(i).rational_value());
      for (std::size_t i = g.den().coeffs().size(); i-- > 0;) q = q * x + to_double(g.den().coeff(i).rational_value());
      return 2 * std::atan2(p, q);
    };
    if (c.verdict == Injectivity::Injective) {
      ++injective;
      double total = 0;
      int sgn_seen = 0;
      bool monotone = true;
      const int N = 4000;
      double prev = angle(std::tan(-M_PI / 2 + 1e-9));
      for (int j = 1; j <= N; ++j) {
        double th = angle(std::tan(-M_PI / 2 + M_PI * j / N - 1e-9));
        double step = std::remainder(th - prev, 2 * M_PI);
        prev = th;
        total += step;
        if (std::abs(step) < 1e-12) continue;
        int s = step > 0 ? 1 : -1;
        if (sgn_seen && s != sgn_seen) monotone = false;
        sgn_seen = s;
      }
      CHECK(monotone);
      CHECK(std::abs(std::abs(total) - 2 * M_PI) < 1e-3);
    } else {
      ++folded;
      REQUIRE(c.witness);
      const auto& [x, y] = *c.witness;
      REQUIRE(!x.infinity);
      CHECK(x.box.lo() == x.box.hi());
      ExtPoint v = eval_at_rational(g, x.box.lo());
      if (y.infinity) {
        CHECK(v == g(ExtPoint::infinity()));
      } else {
        KPoly u = v.is_infinity() ? g.den() : g.num() - g.den().scaled(v.value());
        QPoly uq = to_qpoly(u);
        int s0 = sgn(eval_at(uq, y.box.lo())), s1 = sgn(eval_at(uq, y.box.hi()));
        CHECK((s0 * s1 < 0 || y.box.lo() == y.box.hi()));
        CHECK_FALSE(y.box.contains(x.box.lo()));
      }
    }
  }
  CHECK(injective > 0);
  CHECK(folded > 0);
}
