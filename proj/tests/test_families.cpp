#include <numeric>
#include <random>

#include "doctest.h"
#include "ratcurve/error.hpp"
#include "ratcurve/families.hpp"

using namespace ratcurve;

namespace {

RationalFunction rf(const char* s, const FieldPtr& K) { return parse_rational_function(s, K); }

FamilyOptions quick() {
  FamilyOptions o;
  o.samples = 0;
  return o;
}

}  // namespace

TEST_CASE("chebyshev polynomials") {
  CHECK(chebyshev(1) == qpoly_from_ints({0, 1}));
  CHECK(chebyshev(2) == qpoly_from_ints({-2, 0, 1}));
  CHECK(chebyshev(3) == qpoly_from_ints({0, -3, 0, 1}));
  for (int n = 1; n <= 12; ++n) CHECK(chebyshev_identity_holds(n));
  for (int m = 1; m <= 12; ++m)
    for (int n = 1; m * n <= 12; ++n) CHECK(chebyshev_semigroup_holds(m, n));
  CHECK_THROWS_AS(chebyshev(0), Error);
}

TEST_CASE("roots of unity and fields") {
  CHECK(suggested_field(1) == "cyclotomic:4");
  CHECK(suggested_field(3) == "cyclotomic:12");
  CHECK(suggested_field(4) == "cyclotomic:8");
  auto K = NumberField::builtin("cyclotomic:8");
  CHECK(root_of_unity_order(K->gen()) == 8);
  CHECK(root_of_unity_order(root_of_unity(K, 4)) == 4);
  CHECK(root_of_unity_order(K->from_rational(2)) == 0);
  auto i = imaginary_unit(K);
  REQUIRE(i);
  CHECK(*i * *i == -K->one());
  CHECK(i->approx().imag() > 0);
  CHECK_FALSE(imaginary_unit(NumberField::builtin("eisenstein")));
  CHECK_FALSE(imaginary_unit(NumberField::rationals()));
}

TEST_CASE("pakovich pairs") {
  auto Q = NumberField::rationals();
  FamilyInstance a = pakovich_pair(2, -Q->one(), quick());
  CHECK(a.g == rf("(-z^2-1)/z", Q));
  CHECK(a.checks.identity);
  CHECK(a.checks.real);
  CHECK(a.checks.degree);
  REQUIRE(a.checks.circle);
  CHECK(*a.checks.circle);
  auto Z5 = NumberField::builtin("cyclotomic:5");
  FamilyInstance b = pakovich_pair(5, Z5->gen(), quick());
  CHECK(b.checks.identity);
  CHECK(b.checks.real);
  REQUIRE(b.checks.circle);
  CHECK_FALSE(*b.checks.circle);
  auto G = NumberField::builtin("gaussian");
  FamilyInstance c = pakovich_pair(4, G->gen(), quick());
  REQUIRE(c.checks.circle);
  CHECK(*c.checks.circle);
  CHECK_THROWS_AS(pakovich_pair(3, G->gen(), quick()), Error);
}

TEST_CASE("avanzi-zannier pairs") {
  auto G = NumberField::builtin("gaussian");
  FieldElement i = G->gen();
  FamilyInstance a = avanzi_zannier_pair(2, 1, -G->one(), i, quick());
  CHECK(a.checks.identity);
  CHECK(a.checks.real);
  FamilyInstance b = avanzi_zannier_pair(3, 1, G->one(), G->one(), quick());
  CHECK(b.checks.identity);
  CHECK(b.checks.real);
  auto Z8 = NumberField::builtin("cyclotomic:8");
  FieldElement z8 = Z8->gen();
  FamilyInstance c = avanzi_zannier_pair(2, 1, z8 * z8, z8.pow(7), quick());
  CHECK(c.checks.identity);
  CHECK(c.checks.real);
  CHECK_THROWS_AS(avanzi_zannier_pair(2, 1, -G->one(), G->one(), quick()), Error);
  auto E = NumberField::builtin("eisenstein");
  CHECK_THROWS_AS(avanzi_zannier_pair(3, 1, E->one(), E->one(), quick()), Error);
  FamilyInstance d = avanzi_zannier_pair(3, 1, G->one(), G->one());
  REQUIRE(d.checks.self_intersections);
  CHECK(*d.checks.self_intersections > 0);
}

TEST_CASE("family specifiers") {
  FamilyInstance p = build_family("pakovich:n=5,zeta_order=5", quick());
  CHECK(p.field->name() == "cyclotomic:5");
  CHECK(p.checks.identity);
  FamilyInstance a = build_family("avanzi-zannier:n=3,k=1,zeta_order=1", quick());
  CHECK(a.checks.identity);
  CHECK(a.checks.real);
  FamilyInstance s = build_family("avanzi-zannier:n=4,k=1,zeta_order=4,zeta_power=3,rho_sign=-1", quick());
  CHECK(s.checks.real);
  CHECK_THROWS_AS(build_family("pakovich:n=5,zeta_order=3"), Error);
  CHECK_THROWS_AS(build_family("avanzi-zannier:n=3"), Error);
  CHECK_THROWS_AS(build_family("unknown:n=3"), Error);
}

TEST_CASE("linear realization of a polynomial inner function") {
  auto G = NumberField::builtin("gaussian");
  Moebius l = realize_polynomial_inner(rf("(z-t)^2", G), rf("z^2+t", G));
  CHECK(compose(l.to_function(), rf("z^2+t", G)) == rf("z^2", G));
  Moebius m = realize_polynomial_inner(rf("((z-t)/2)^2", G), rf("2*z+t", G));
  CHECK(compose(m.to_function(), rf("2*z+t", G)).is_real());
  CHECK(compose(m.to_function(), rf("2*z+t", G)).degree() == 1);
  Moebius r = realize_polynomial_inner(rf("z^2", G), rf("z^3-z", G));
  CHECK(r.is_real());
  CHECK_THROWS_AS(realize_polynomial_inner(rf("z", G), rf("z^2+t", G)), Error);
}

TEST_CASE("property: the functional identity for small parameters") {
  for (const char* name : {"cyclotomic:4", "cyclotomic:8", "cyclotomic:12"}) {
    auto K = NumberField::builtin(name);
    int N = root_of_unity_order(K->gen());
    for (int m : {1, 2, 4, N / 2, N})
      for (int n = 2; n <= (N == 12 ? 4 : 6); ++n)
        for (int k = 1; k < n; ++k) CHECK(fg_identity_holds(n, k, root_of_unity(K, m)));
  }
}

TEST_CASE("property: Avanzi-Zannier compositions are real") {
  for (auto [n, k] : std::vector<std::pair<int, int>>{{2, 1}, {3, 1}, {3, 2}, {4, 1}, {5, 2}})
    for (int m : {1, 2, 4}) {
      FamilyInstance f = build_family("avanzi-zannier:n=" + std::to_string(n) + ",k=" + std::to_string(k) +
                                          ",zeta_order=" + std::to_string(m),
                                      quick());
      CHECK(f.checks.identity);
      CHECK(f.checks.real);
      CHECK(f.checks.degree);
      // rho^(2m) = 1, so z^(2m) o f is real already and is fed g and conj(g) alike
      if (2 * m * n > 12) continue;
      RationalFunction fm = compose(rf(("z^" + std::to_string(2 * m)).c_str(), f.field), f.f);
      CHECK(fm.is_real());
      CHECK(compose(fm, f.g) == compose(fm, f.g.conjugate()));
    }
}

TEST_CASE("property: Pakovich circle dichotomy") {
  for (int m : {1, 2, 3, 4, 5, 6, 8})
    for (int j = 1; j <= m; ++j) {
      if (std::gcd(j, m) != 1) continue;
      FamilyInstance f = build_family("pakovich:n=" + std::to_string(m) + ",zeta_order=" + std::to_string(m) +
                                          ",zeta_power=" + std::to_string(j),
                                      quick());
      REQUIRE(f.checks.circle);
      CHECK(*f.checks.circle == (4 % m == 0));
      CHECK(f.checks.identity);
    }
}

TEST_CASE("property: linear realization on random real polynomials") {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<long> d(-5, 5);
  auto G = NumberField::builtin("gaussian");
  FieldElement i = G->gen();
  for (int it = 0; it < 30; ++it) {
    std::vector<long> c;
    for (int j = 0; j <= 3; ++j) c.push_back(d(rng));
    c.back() = c.back() == 0 ? 1 : c.back();
    KPoly p = to_kpoly(qpoly_from_ints(c), G);
    if (p.degree() < 1) continue;
    // g = (a p + b) with complex a, b; f = p o lambda0 for lambda0 = (z - b)/a
    FieldElement a = G->from_coords({Rational(d(rng)), Rational(1 + std::abs(d(rng)))});
    FieldElement b = G->from_coords({Rational(d(rng)), Rational(d(rng))});
    RationalFunction g = RationalFunction::from_poly(p.scaled(a) + KPoly::constant(b));
    RationalFunction f = Moebius(a.inverse(), -b / a, G->zero(), G->one()).to_function();
    REQUIRE(compose(f, g).is_real());
    Moebius l = realize_polynomial_inner(f, g);
    CHECK(compose(l.to_function(), g).is_real());
    CHECK_FALSE((l.a() * l.d() - l.b() * l.c()).is_zero());
  }
}
