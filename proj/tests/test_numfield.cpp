#include <random>

#include "doctest.h"
#include "ratcurve/error.hpp"
#include "ratcurve/ratfunc.hpp"

using namespace ratcurve;

namespace {

FieldElement random_element(const FieldPtr& K, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-20, 20), den(1, 7);
  std::vector<Rational> c;
  for (int i = 0; i < K->degree(); ++i) c.emplace_back(num(rng), den(rng));
  for (auto& x : c) x.canonicalize();
  return K->from_coords(c);
}

}  // namespace

TEST_CASE("eisenstein arithmetic") {
  auto K = NumberField::builtin("eisenstein");
  FieldElement w = K->gen();
  CHECK(w * w == -K->one() - w);
  CHECK(w + K->zero() == w);
  CHECK(K->one() / w == -K->one() - w);
  CHECK((K->one() / w) * w == K->one());
  CHECK_THROWS_AS(K->one() / K->zero(), Error);
}

TEST_CASE("conjugation") {
  auto K = NumberField::builtin("eisenstein");
  FieldElement w = K->gen();
  CHECK(w.conjugate() == -K->one() - w);
  CHECK(K->from_rational(Rational(5, 3)).conjugate() == K->from_rational(Rational(5, 3)));
  FieldElement c = w * Rational(72) - K->from_rational(33);
  CHECK(c.conjugate().conjugate() == c);
  CHECK(K->from_rational(-78).is_fixed());
  CHECK_FALSE(w.is_fixed());
  CHECK((w + w.conjugate()).is_fixed());
}

TEST_CASE("field mismatch") {
  auto K = NumberField::builtin("eisenstein");
  auto L = NumberField::builtin("gaussian");
  CHECK_THROWS_AS(K->gen() + L->gen(), Error);
}

TEST_CASE("embedding") {
  auto K = NumberField::builtin("eisenstein");
  FieldElement w = K->gen();
  ComplexInterval e = w.embed(53);
  CHECK(e.re.contains(Rational(-1, 2)));
  CHECK(e.im.lo() > Rational(866025, 1000000));
  CHECK(e.im.hi() < Rational(866026, 1000000));
  ComplexInterval q = K->from_rational(Rational(3, 2)).embed(53);
  CHECK(q.re.contains(Rational(3, 2)));
  CHECK(q.im.contains_zero());
  ComplexInterval n = (w * w.conjugate()).embed(53);
  CHECK(n.re.contains(Rational(1)));
}

TEST_CASE("irreducibility bookkeeping") {
  CHECK(NumberField::builtin("eisenstein")->irreducibility_verified());
  CHECK(NumberField::builtin("cyclotomic:8")->irreducibility_verified());
  FieldSpec bad;
  bad.name = "reducible";
  bad.modulus = qpoly_from_ints({-1, 0, 1});
  bad.conjugation = qpoly_from_ints({0, -1});
  bad.embedding_hint = {1.0, 0.0};
  CHECK_THROWS_AS(NumberField::create(bad), Error);
}

TEST_CASE("fixed field dimension") {
  CHECK(NumberField::builtin("eisenstein")->fixed_field_is_rational());
  CHECK(NumberField::builtin("gaussian")->fixed_field_is_rational());
  CHECK(NumberField::builtin("cyclotomic:5")->fixed_dimension() == 2);
}

TEST_CASE("property: conjugation is a ring homomorphism and commutes with the embedding") {
  std::mt19937_64 rng(11);
  for (const char* name : {"eisenstein", "gaussian", "cyclotomic:5", "cyclotomic:8", "cyclotomic:12"}) {
    auto K = NumberField::builtin(name);
    for (int it = 0; it < 40; ++it) {
      FieldElement a = random_element(K, rng), b = random_element(K, rng);
      CHECK((a * b).conjugate() == a.conjugate() * b.conjugate());
      CHECK((a + b).conjugate() == a.conjugate() + b.conjugate());
      CHECK((a * b) * a == a * (b * a));
      CHECK(a * (a + b) == a * a + a * b);
      if (!b.is_zero()) CHECK((a / b) * b == a);
      ComplexInterval ea = a.embed(80), ec = a.conjugate().embed(80);
      CHECK(ec.re.overlaps(ea.re));
      CHECK(ec.im.overlaps(-ea.im));
      FieldElement s = a + a.conjugate();
      CHECK(s.is_fixed());
      CHECK(s.embed(80).im.contains_zero());
      CHECK(s.embed(200).im.width() <= s.embed(80).im.width());
    }
  }
}

TEST_CASE("property: rationals embed as plain rational arithmetic") {
  std::mt19937_64 rng(3);
  auto K = NumberField::builtin("cyclotomic:7");
  std::uniform_int_distribution<long> d(-50, 50), e(1, 9);
  for (int it = 0; it < 100; ++it) {
    Rational x(d(rng), e(rng)), y(d(rng), e(rng));
    x.canonicalize();
    y.canonicalize();
    CHECK(K->from_rational(x) * K->from_rational(y) == K->from_rational(x * y));
    CHECK(K->from_rational(x) - K->from_rational(y) == K->from_rational(x - y));
    if (sgn(y) != 0) CHECK(K->from_rational(x) / K->from_rational(y) == K->from_rational(x / y));
  }
}
