#include "ratcurve/families.hpp"

#include <map>
#include <numeric>
#include <sstream>

#include "ratcurve/error.hpp"
#include "ratcurve/sampling.hpp"

namespace ratcurve {

QPoly chebyshev(int n) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "Chebyshev index must be positive");
  QPoly z = qpoly_from_ints({0, 1});
  QPoly prev = qpoly_from_ints({2}), cur = z;  // T_0 = 2 in this normalization
  for (int m = 1; m < n; ++m) {
    QPoly next = z * cur - prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

namespace {

FieldPtr Q() { return NumberField::rationals(); }

RationalFunction rf(const QPoly& p) { return RationalFunction::from_poly(to_kpoly(p, Q())); }

// z^n + 1/z^n
RationalFunction laurent_sum(const FieldPtr& K, int n) {
  KPoly num = KPoly::monomial(K->one(), std::size_t(2 * n)) + KPoly::constant(K->one());
  return RationalFunction(num, KPoly::monomial(K->one(), std::size_t(n)));
}

RationalFunction scale(const FieldElement& c, const RationalFunction& r) { return RationalFunction::constant(c) * r; }

KPoly monomial(const FieldPtr& K, int k) { return KPoly::monomial(K->one(), std::size_t(k)); }

}  // namespace

bool chebyshev_identity_holds(int n) {
  RationalFunction z = RationalFunction::identity(Q());
  RationalFunction w = z + RationalFunction(kpoly(Q(), {Q()->one()}), kpoly_x(Q()));
  return compose(rf(chebyshev(n)), w) == laurent_sum(Q(), n);
}

bool chebyshev_semigroup_holds(int m, int n) {
  return compose(rf(chebyshev(m)), rf(chebyshev(n))) == rf(chebyshev(m * n));
}

int root_of_unity_order(const FieldElement& a, int bound) {
  if (a.is_zero()) return 0;
  FieldElement p = a;
  for (int m = 1; m <= bound; ++m) {
    if (p.is_one()) return m;
    p *= a;
  }
  return 0;
}

std::optional<FieldElement> imaginary_unit(const FieldPtr& K) {
  if (K->degree() == 1) return std::nullopt;
  const FieldElement minus_one = -K->one();
  auto pick = [](FieldElement x) { return x.approx().imag() < 0 ? -x : x; };
  FieldElement t = K->gen();
  FieldElement p = t;
  for (int e = 1; e <= 4 * K->degree() * K->degree() + 8; ++e, p *= t)
    if (p * p == minus_one) return pick(p);
  // delta / r with delta^2 = -r^2
  FieldElement d = imaginary_unit_delta(K);
  FieldElement d2 = -(d * d);
  if (!d.is_zero() && d2.is_rational() && sgn(d2.rational_value()) > 0) {
    Rational q = d2.rational_value();
    mpz_class a = q.get_num(), b = q.get_den();
    if (mpz_perfect_square_p(a.get_mpz_t()) && mpz_perfect_square_p(b.get_mpz_t())) {
      mpz_class ra = sqrt(a), rb = sqrt(b);
      return pick(d * Rational(rb, ra));
    }
  }
  return std::nullopt;
}

std::string suggested_field(int zeta_order) {
  if (zeta_order < 1) throw Error(ErrorKind::InvalidArgument, "order must be positive");
  return "cyclotomic:" + std::to_string(std::lcm(4, 2 * zeta_order));
}

FieldElement root_of_unity(const FieldPtr& K, int order, int power) {
  if (order < 1) throw Error(ErrorKind::InvalidArgument, "order must be positive");
  if (std::gcd(order, power) != 1 && order > 1)
    throw Error(ErrorKind::InvalidArgument, "power must be coprime to the order");
  if (order == 1) return K->one();
  if (order == 2) return -K->one();
  int N = root_of_unity_order(K->gen());
  if (N == 0 || N % order != 0)
    throw Error(ErrorKind::NotRootOfUnity,
                "no root of unity of order " + std::to_string(order) + " among powers of the generator of " + K->name());
  return K->gen().pow(long(N / order) * ((power % order + order) % order));
}

namespace {

std::optional<long> count_crossings(const RationalFunction& g, const FieldElement& avoid, const FamilyOptions& opts) {
  if (opts.samples <= 0) return std::nullopt;
  const FieldPtr& K = g.field();
  // 1/(z - a) with a off the curve keeps the sampled image bounded
  RationalFunction post(kpoly(K, {K->one()}), kpoly(K, {-avoid, K->one()}));
  auto samples = sample_curve(g, post, opts.samples, opts.precision, opts.exec);
  return self_intersections(samples, opts.exec);
}

std::string str(long v) { return std::to_string(v); }

}  // namespace

FamilyInstance pakovich_pair(int n, const FieldElement& zeta, const FamilyOptions& opts) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "n must be positive");
  const FieldPtr& K = zeta.field_ptr();
  if (!zeta.pow(n).is_one()) throw Error(ErrorKind::NotRootOfUnity, "zeta^n != 1");
  int ord = root_of_unity_order(zeta, n);
  FieldElement z2 = zeta * zeta;
  RationalFunction g(kpoly(K, {K->one(), K->zero(), z2}), kpoly(K, {K->zero(), zeta}));
  RationalFunction f = RationalFunction::from_poly(to_kpoly(chebyshev(n), K));
  RationalFunction h = compose(f, g);
  FamilyInstance out{"pakovich", {{"n", str(n)}, {"zeta_order", str(ord)}, {"zeta", zeta.to_string()}}, f, g, K, {}};
  out.checks.identity = h == laurent_sum(K, n);
  out.checks.real = h.is_real();
  out.checks.degree = h.degree() == f.degree() * g.degree();
  out.checks.circle = circle_test(g).circle;
  // a circle image is covered twice and has no meaningful crossing count
  FieldElement d = imaginary_unit_delta(K);
  if (!d.is_zero() && !*out.checks.circle)
    out.checks.self_intersections = count_crossings(g, K->from_rational(Rational(1, 7)) + d * Rational(3, 11), opts);
  return out;
}

bool fg_identity_holds(int n, int k, const FieldElement& zeta) {
  if (k < 1 || k >= n) throw Error(ErrorKind::InvalidArgument, "need 1 <= k < n");
  const FieldPtr& K = zeta.field_ptr();
  KPoly one_minus_z = kpoly(K, {K->one(), -K->one()});
  KPoly F = monomial(K, k) * pow(one_minus_z, unsigned(n - k));
  RationalFunction Fr = RationalFunction::from_poly(F);
  RationalFunction G(KPoly::constant(K->one()) - monomial(K, k).scaled(zeta),
                     KPoly::constant(K->one()) - monomial(K, n).scaled(zeta));
  RationalFunction inv(kpoly(K, {K->one()}), kpoly_x(K));
  RationalFunction lhs = compose(Fr, compose(G.conjugate(), inv));
  RationalFunction rhs = scale(zeta.pow(k - n), compose(Fr, G));
  return lhs == rhs;
}

FamilyInstance avanzi_zannier_pair(int n, int k, const FieldElement& zeta, const FieldElement& rho,
                                   const FamilyOptions& opts) {
  if (k < 1 || k >= n) throw Error(ErrorKind::InvalidArgument, "need 1 <= k < n");
  const FieldPtr& K = zeta.field_ptr();
  int ord = root_of_unity_order(zeta);
  if (ord == 0) throw Error(ErrorKind::NotRootOfUnity, "zeta is not a root of unity");
  if (!(rho * rho == zeta.pow(k - n))) throw Error(ErrorKind::BadRho, "rho^2 != zeta^(k-n)");
  auto i = imaginary_unit(K);
  if (!i) throw Error(ErrorKind::MissingI, "the field " + K->name() + " does not contain i");
  KPoly F = monomial(K, k) * pow(kpoly(K, {K->one(), -K->one()}), unsigned(n - k));
  RationalFunction f = RationalFunction::from_poly(F.scaled(rho));
  RationalFunction G(KPoly::constant(K->one()) - monomial(K, k).scaled(zeta),
                     KPoly::constant(K->one()) - monomial(K, n).scaled(zeta));
  RationalFunction mu(kpoly(K, {*i, K->one()}), kpoly(K, {-*i, K->one()}));
  RationalFunction g = compose(G, mu);
  RationalFunction h = compose(f, g);
  FamilyInstance out{"avanzi-zannier",
                     {{"n", str(n)}, {"k", str(k)}, {"zeta_order", str(ord)}, {"zeta", zeta.to_string()},
                      {"rho", rho.to_string()}},
                     f, g, K, {}};
  out.checks.identity = fg_identity_holds(n, k, zeta);
  out.checks.real = h.is_real();
  out.checks.degree = h.degree() == f.degree() * g.degree();
  out.checks.circle = circle_test(g).circle;
  out.checks.self_intersections = count_crossings(g, K->from_rational(Rational(1, 7)) + *i * Rational(3, 11), opts);
  return out;
}

FamilyInstance build_family(const std::string& spec, const FamilyOptions& opts) {
  auto colon = spec.find(':');
  std::string kind = spec.substr(0, colon);
  std::map<std::string, long> kv;
  if (colon != std::string::npos) {
    std::stringstream ss(spec.substr(colon + 1));
    std::string item;
    while (std::getline(ss, item, ',')) {
      auto eq = item.find('=');
      if (eq == std::string::npos) throw Error(ErrorKind::ParseError, "expected key=value in '" + item + "'");
      try {
        kv[item.substr(0, eq)] = std::stol(item.substr(eq + 1));
      } catch (...) {
        throw Error(ErrorKind::ParseError, "bad value in '" + item + "'");
      }
    }
  }
  auto get = [&](const std::string& key, std::optional<long> dflt = std::nullopt) -> int {
    auto it = kv.find(key);
    if (it != kv.end()) return int(it->second);
    if (!dflt) throw Error(ErrorKind::ParseError, "family spec is missing '" + key + "'");
    return int(*dflt);
  };
  if (kind == "pakovich") {
    int n = get("n"), m = get("zeta_order", 1), j = get("zeta_power", 1);
    if (m < 1 || n % m != 0) throw Error(ErrorKind::NotRootOfUnity, "zeta_order must divide n");
    FieldPtr K = m <= 2 ? NumberField::rationals() : NumberField::builtin("cyclotomic:" + std::to_string(m));
    return pakovich_pair(n, root_of_unity(K, m, j), opts);
  }
  if (kind == "avanzi-zannier") {
    int n = get("n"), k = get("k"), m = get("zeta_order", 1), j = get("zeta_power", 1), s = get("rho_sign", 1);
    if (s != 1 && s != -1) throw Error(ErrorKind::InvalidArgument, "rho_sign must be 1 or -1");
    FieldPtr K = NumberField::builtin(suggested_field(m));
    FieldElement zeta = root_of_unity(K, m, j);
    int N = root_of_unity_order(K->gen());
    // zeta^(k-n) = t^e with e even, so t^(e/2) is a square root
    long e = long(N / m) * ((j % m + m) % m) * (k - n);
    FieldElement rho = K->gen().pow(((e / 2) % N + N) % N);
    if (s < 0) rho = -rho;
    return avanzi_zannier_pair(n, k, zeta, rho, opts);
  }
  throw Error(ErrorKind::InvalidArgument, "unknown family '" + kind + "'");
}

Moebius realize_polynomial_inner(const RationalFunction& f, const RationalFunction& g) {
  if (!g.is_polynomial() || g.is_constant())
    throw Error(ErrorKind::InvalidArgument, "inner function must be a nonconstant polynomial");
  if (!compose(f, g).is_real()) throw Error(ErrorKind::HypothesisViolated, "f o g is not real");
  const FieldPtr& K = g.field();
  KPoly p = g.num().scaled(g.den().lead().inverse());
  FieldElement alpha = p.lead().inverse();
  KPoly g1 = p.scaled(alpha);
  KPoly diff = conjugate(g1) - g1;
  if (diff.degree() > 0) throw Error(ErrorKind::HypothesisViolated, "conj(g) - g is not constant after normalization");
  FieldElement b = diff.is_zero() ? K->zero() : diff.coeff(0);
  Moebius lambda(alpha, b * Rational(1, 2), K->zero(), K->one());
  if (!compose(lambda.to_function(), g).is_real())
    throw Error(ErrorKind::Internal, "lambda o g is not real");
  return lambda;
}

}  // namespace ratcurve
