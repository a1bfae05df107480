#include "ratcurve/number_field.hpp"

#include <cmath>
#include <map>
#include <numbers>

#include "ratcurve/error.hpp"
#include "ratcurve/resultant.hpp"
#include "ratcurve/sturm.hpp"

namespace ratcurve {

QPoly qpoly(std::vector<Rational> coeffs) { return QPoly(std::move(coeffs), Rational(0)); }

QPoly qpoly_from_ints(std::vector<long> coeffs) {
  std::vector<Rational> c;
  c.reserve(coeffs.size());
  for (long v : coeffs) c.emplace_back(v);
  return qpoly(std::move(c));
}

namespace {

struct CRat {
  Rational re, im;
};

CRat cmul(const CRat& a, const CRat& b) {
  return {Rational(a.re * b.re - a.im * b.im), Rational(a.re * b.im + a.im * b.re)};
}
CRat cadd(const CRat& a, const CRat& b) { return {Rational(a.re + b.re), Rational(a.im + b.im)}; }
CRat csub(const CRat& a, const CRat& b) { return {Rational(a.re - b.re), Rational(a.im - b.im)}; }
CRat cdiv(const CRat& a, const CRat& b) {
  Rational n = b.re * b.re + b.im * b.im;
  if (sgn(n) == 0) throw Error(ErrorKind::DivisionByZero, "complex division by zero");
  CRat c = cmul(a, CRat{b.re, Rational(-b.im)});
  return {Rational(c.re / n), Rational(c.im / n)};
}
CRat cround(const CRat& a, long bits) {
  return {dyadic_floor(a.re, bits), dyadic_floor(a.im, bits)};
}
CRat ceval(const QPoly& p, const CRat& z) {
  CRat acc{Rational(0), Rational(0)};
  for (std::size_t i = p.coeffs().size(); i-- > 0;) acc = cadd(cmul(acc, z), CRat{p.coeffs()[i], Rational(0)});
  return acc;
}
ComplexInterval ieval(const QPoly& p, const ComplexInterval& z) {
  ComplexInterval acc;
  for (std::size_t i = p.coeffs().size(); i-- > 0;)
    acc = acc * z + ComplexInterval(Interval(p.coeffs()[i]), Interval(Rational(0)));
  return acc;
}

Rational pow2(long e) {
  Rational r = 1;
  if (e >= 0)
    mpq_mul_2exp(r.get_mpq_t(), r.get_mpq_t(), e);
  else
    mpq_div_2exp(r.get_mpq_t(), r.get_mpq_t(), -e);
  return r;
}

// Krawczyk test for the box center +- rad; returns the verified box or nothing.
bool krawczyk(const QPoly& m, const CRat& c, const Rational& rad, long wp, ComplexInterval& out) {
  QPoly dm = m.derivative();
  CRat dmc = ceval(dm, c);
  if (sgn(dmc.re) == 0 && sgn(dmc.im) == 0) return false;
  CRat y = cround(cdiv(CRat{Rational(1), Rational(0)}, dmc), wp);
  ComplexInterval box(Interval(Rational(c.re - rad), Rational(c.re + rad), wp),
                      Interval(Rational(c.im - rad), Rational(c.im + rad), wp));
  ComplexInterval Y(Interval(y.re), Interval(y.im));
  ComplexInterval C(Interval(c.re), Interval(c.im));
  ComplexInterval mc = ieval(m, C);
  ComplexInterval dB = ieval(dm, box);
  ComplexInterval one(Interval(Rational(1)), Interval(Rational(0)));
  ComplexInterval K = C - Y * mc + (one - Y * dB) * (box - C);
  if (K.re.strictly_inside(box.re) && K.im.strictly_inside(box.im)) {
    out = box;
    return true;
  }
  return false;
}

ComplexInterval certify_root(const QPoly& m, std::complex<double> hint, long prec) {
  const long wp = prec + 24;
  CRat z{from_double(hint.real()), from_double(hint.imag())};
  Rational tol = pow2(-(prec + 8));
  for (int it = 0; it < 400; ++it) {
    CRat dz = ceval(m.derivative(), z);
    if (sgn(dz.re) == 0 && sgn(dz.im) == 0) break;
    CRat step = cdiv(ceval(m, z), dz);
    z = cround(csub(z, step), wp);
    if (abs(step.re) < tol && abs(step.im) < tol) break;
  }
  ComplexInterval box;
  for (long extra = 1; extra <= 4; ++extra) {
    if (krawczyk(m, z, pow2(-(prec + extra)), wp, box)) return box;
  }
  throw Error(ErrorKind::PrecisionExhausted, "could not certify the embedding root");
}

std::vector<Rational> poly_to_coords(const QPoly& p, int n) {
  std::vector<Rational> c(std::size_t(n), Rational(0));
  for (int i = 0; i < n && i <= p.degree(); ++i) c[std::size_t(i)] = p.coeff(std::size_t(i));
  return c;
}

int rank_of(std::vector<std::vector<Rational>> a) {
  int rows = int(a.size());
  if (rows == 0) return 0;
  int cols = int(a[0].size());
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int piv = -1;
    for (int i = r; i < rows; ++i)
      if (sgn(a[std::size_t(i)][std::size_t(c)]) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(a[std::size_t(piv)], a[std::size_t(r)]);
    for (int i = 0; i < rows; ++i) {
      if (i == r || sgn(a[std::size_t(i)][std::size_t(c)]) == 0) continue;
      Rational f = a[std::size_t(i)][std::size_t(c)] / a[std::size_t(r)][std::size_t(c)];
      for (int j = c; j < cols; ++j) a[std::size_t(i)][std::size_t(j)] -= f * a[std::size_t(r)][std::size_t(j)];
    }
    ++r;
  }
  return r;
}

}  // namespace

Rational simplest_rational_between(const Rational& lo, const Rational& hi) {
  if (hi < lo) return simplest_rational_between(hi, lo);
  if (sgn(lo) <= 0 && sgn(hi) >= 0) return Rational(0);
  if (sgn(hi) < 0) return Rational(-simplest_rational_between(Rational(-hi), Rational(-lo)));
  Integer f;
  mpz_fdiv_q(f.get_mpz_t(), lo.get_num_mpz_t(), lo.get_den_mpz_t());
  if (Rational(f) == lo) return lo;
  if (Rational(f + 1) <= hi) return Rational(f + 1);
  Rational inner = simplest_rational_between(Rational(1 / (hi - f)), Rational(1 / (lo - f)));
  return Rational(Rational(f) + 1 / inner);
}

QPoly cyclotomic_polynomial(int n) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "cyclotomic index must be positive");
  QPoly p = QPoly::monomial(Rational(1), std::size_t(n)) - QPoly::constant(Rational(1));
  for (int d = 1; d < n; ++d)
    if (n % d == 0) p = exact_div(p, cyclotomic_polynomial(d));
  return p;
}

std::vector<Rational> rational_roots(const QPoly& p) {
  std::vector<Rational> out;
  if (p.degree() <= 0) return out;
  QPoly sf = squarefree_part(p);
  // clear denominators: the leading coefficient of the integer form bounds denominators
  Integer den = 1;
  for (const auto& c : sf.coeffs()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  Integer lead = Integer(sf.lead() * den);
  lead = abs(lead);
  // A rational root p/q has q | lead; once the isolating interval is narrower
  // than 1/(4 lead^2) it is the simplest rational in that interval.
  Rational sep = Rational(1, 4) / (Rational(lead) * Rational(lead));
  for (auto& root : isolate_real_roots(sf)) {
    if (root.exact) {
      out.push_back(root.lo);
      continue;
    }
    while (root.hi - root.lo >= sep && !root.exact) refine_root(sf, root);
    if (root.exact) {
      out.push_back(root.lo);
      continue;
    }
    Rational cand = simplest_rational_between(root.lo, root.hi);
    if (sgn(sf(cand)) == 0) out.push_back(cand);
  }
  return out;
}

bool is_irreducible_small(const QPoly& p) {
  int d = p.degree();
  if (d <= 1) return d == 1;
  if (!rational_roots(p).empty()) return false;
  if (d <= 3) return true;
  if (d > 4) throw Error(ErrorKind::InvalidArgument, "irreducibility check limited to degree <= 4");
  // A quadratic factor with roots r1, r2 gives s = r1 + r2 as a rational root of
  // Res_x(p(x), p(s - x)); its gcd then recovers the factor.
  using QQPoly = Poly<QPoly>;
  QPoly zero_q(Rational(0));
  std::vector<QPoly> pc;
  for (const auto& c : p.coeffs()) pc.push_back(QPoly::constant(c));
  QQPoly px(pc, zero_q);
  // s - x as a polynomial in x with coefficients in Q[s]
  QQPoly inner(std::vector<QPoly>{QPoly::variable(Rational(0)), QPoly::constant(Rational(-1))}, zero_q);
  QQPoly pshift = px.compose(inner);
  QPoly res = resultant(px, pshift);
  for (const auto& s : rational_roots(res)) {
    QPoly shifted = p.compose(qpoly(std::vector<Rational>{s, Rational(-1)}));
    if (gcd(p, shifted).degree() == 2) return false;
  }
  return true;
}

std::shared_ptr<const NumberField> NumberField::create(FieldSpec spec) {
  std::shared_ptr<NumberField> f(new NumberField());
  f->init(std::move(spec));
  return f;
}

void NumberField::init(FieldSpec spec) {
  name_ = spec.name;
  if (spec.modulus.degree() < 1) throw Error(ErrorKind::InvalidArgument, "field modulus must have degree >= 1");
  modulus_ = make_monic(spec.modulus);
  n_ = modulus_.degree();
  hint_ = spec.embedding_hint;
  if (n_ <= 4) {
    if (!is_irreducible_small(modulus_))
      throw Error(ErrorKind::InvalidArgument, "field modulus is reducible over Q");
    irreducible_verified_ = true;
  } else {
    irreducible_verified_ = false;
  }
  reduction_.clear();
  {
    // t^n = -(m_0 + ... + m_{n-1} t^{n-1})
    std::vector<Rational> cur(static_cast<std::size_t>(n_));
    for (int i = 0; i < n_; ++i) cur[std::size_t(i)] = -modulus_.coeff(std::size_t(i));
    reduction_.push_back(cur);
    for (int k = 1; k <= n_ - 2; ++k) {
      std::vector<Rational> next(std::size_t(n_), Rational(0));
      const Rational top = cur[std::size_t(n_ - 1)];
      for (int i = n_ - 1; i >= 1; --i) next[std::size_t(i)] = cur[std::size_t(i - 1)];
      for (int i = 0; i < n_; ++i) next[std::size_t(i)] += top * reduction_[0][std::size_t(i)];
      reduction_.push_back(next);
      cur = std::move(next);
    }
  }
  std::vector<Rational> sc = reduce_poly(spec.conjugation);
  conj_ = qpoly(sc);
  conj_cols_.clear();
  std::vector<Rational> power(std::size_t(n_), Rational(0));
  power[0] = 1;
  for (int k = 0; k < n_; ++k) {
    conj_cols_.push_back(power);
    power = mul(power, sc);
  }
  // sigma must respect the modulus and square to the identity
  {
    std::vector<Rational> acc(std::size_t(n_), Rational(0));
    std::vector<Rational> pw(std::size_t(n_), Rational(0));
    pw[0] = 1;
    for (int k = 0; k <= n_; ++k) {
      for (int i = 0; i < n_; ++i) acc[std::size_t(i)] += modulus_.coeff(std::size_t(k)) * pw[std::size_t(i)];
      pw = mul(pw, sc);
    }
    for (const auto& v : acc)
      if (sgn(v) != 0) throw Error(ErrorKind::InvalidArgument, "conjugation image is not a root of the modulus");
    std::vector<Rational> t(std::size_t(n_), Rational(0));
    if (n_ > 1) t[1] = 1; else t[0] = -modulus_.coeff(0);
    if (conjugate(conjugate(t)) != t) throw Error(ErrorKind::InvalidArgument, "conjugation does not square to the identity");
  }
  {
    std::vector<std::vector<Rational>> m(static_cast<std::size_t>(n_), std::vector<Rational>(static_cast<std::size_t>(n_)));
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j)
        m[std::size_t(i)][std::size_t(j)] = conj_cols_[std::size_t(j)][std::size_t(i)] - (i == j ? 1 : 0);
    fixed_dim_ = n_ - rank_of(m);
  }
  default_embedding_ = embedding(kDefaultPrecision);
  // sigma must act as complex conjugation under the chosen embedding
  {
    std::vector<Rational> t(std::size_t(n_), Rational(0));
    if (n_ > 1) t[1] = 1; else t[0] = -modulus_.coeff(0);
    ComplexInterval et = default_embedding_(t);
    ComplexInterval ec = default_embedding_(conjugate(t));
    ComplexInterval cj = et.conj();
    if (!ec.re.overlaps(cj.re) || !ec.im.overlaps(cj.im))
      throw Error(ErrorKind::InvalidArgument, "conjugation does not act as complex conjugation under the embedding");
  }
}

std::shared_ptr<const NumberField> NumberField::builtin(std::string_view name) {
  FieldSpec s;
  s.name = std::string(name);
  if (name == "rationals") {
    s.modulus = qpoly_from_ints({0, 1});
    s.conjugation = qpoly_from_ints({0, 1});
    s.embedding_hint = {0.0, 0.0};
  } else if (name == "eisenstein") {
    s.modulus = qpoly_from_ints({1, 1, 1});
    s.conjugation = qpoly_from_ints({-1, -1});
    s.embedding_hint = {-0.5, std::sqrt(3.0) / 2};
  } else if (name == "gaussian") {
    s.modulus = qpoly_from_ints({1, 0, 1});
    s.conjugation = qpoly_from_ints({0, -1});
    s.embedding_hint = {0.0, 1.0};
  } else if (name.rfind("cyclotomic:", 0) == 0) {
    int n = 0;
    try {
      n = std::stoi(std::string(name.substr(11)));
    } catch (...) {
      throw Error(ErrorKind::ParseError, "bad cyclotomic field name '" + std::string(name) + "'");
    }
    if (n < 1 || n > 200) throw Error(ErrorKind::InvalidArgument, "cyclotomic index out of range");
    s.modulus = cyclotomic_polynomial(n);
    s.conjugation = QPoly::monomial(Rational(1), std::size_t(n > 1 ? n - 1 : 0));
    double ang = 2 * std::numbers::pi / n;
    s.embedding_hint = {std::cos(ang), std::sin(ang)};
    s.irreducible_by_construction = true;
  } else {
    throw Error(ErrorKind::InvalidArgument, "unknown field '" + std::string(name) + "'");
  }
  return create(std::move(s));
}

std::shared_ptr<const NumberField> NumberField::rationals() {
  static const std::shared_ptr<const NumberField> q = builtin("rationals");
  return q;
}

Embedding NumberField::embedding(long prec) const {
  const long wp = prec + 16 + 4 * n_;
  ComplexInterval root;
  if (n_ == 1) {
    Rational r = -modulus_.coeff(0);
    root = ComplexInterval(Interval(r), Interval(Rational(0)));
  } else {
    root = certify_root(modulus_, hint_, wp);
    if (std::abs(std::complex<double>(root.re_mid(), root.im_mid()) - hint_) > 1e-3 * std::max(1.0, std::abs(hint_)))
      throw Error(ErrorKind::InvalidArgument, "embedding hint is not close to a root of the modulus");
  }
  std::vector<ComplexInterval> powers;
  ComplexInterval p(Interval(Rational(1)), Interval(Rational(0)));
  for (int k = 0; k < n_; ++k) {
    powers.push_back(p);
    p = p * root;
  }
  return Embedding(root, std::move(powers), prec);
}

ComplexInterval Embedding::operator()(const std::vector<Rational>& coords) const {
  ComplexInterval acc;
  for (std::size_t k = 0; k < coords.size() && k < powers_.size(); ++k) {
    if (sgn(coords[k]) == 0) continue;
    Interval c(coords[k]);
    acc = acc + ComplexInterval(powers_[k].re * c, powers_[k].im * c);
  }
  return acc;
}

ComplexInterval Embedding::operator()(const FieldElement& a) const { return (*this)(a.coords()); }

FieldElement NumberField::zero() const {
  return FieldElement(shared_from_this(), std::vector<Rational>(std::size_t(n_), Rational(0)));
}
FieldElement NumberField::one() const { return from_rational(Rational(1)); }
FieldElement NumberField::gen() const {
  std::vector<Rational> c(std::size_t(n_), Rational(0));
  if (n_ > 1)
    c[1] = 1;
  else
    c[0] = -modulus_.coeff(0);
  return FieldElement(shared_from_this(), std::move(c));
}
FieldElement NumberField::from_rational(const Rational& q) const {
  std::vector<Rational> c(std::size_t(n_), Rational(0));
  c[0] = q;
  return FieldElement(shared_from_this(), std::move(c));
}
FieldElement NumberField::from_coords(std::vector<Rational> coords) const {
  if (int(coords.size()) != n_) throw Error(ErrorKind::InvalidArgument, "coordinate vector has wrong length");
  return FieldElement(shared_from_this(), std::move(coords));
}
FieldElement NumberField::from_poly(const QPoly& p) const { return FieldElement(shared_from_this(), reduce_poly(p)); }

bool NumberField::same_as(const NumberField& o) const {
  return this == &o || (modulus_ == o.modulus_ && conj_ == o.conj_ && hint_ == o.hint_);
}

std::string NumberField::describe() const {
  std::string s = name_.empty() ? std::string("custom") : name_;
  return s;
}

std::vector<Rational> NumberField::reduce_poly(const QPoly& p) const {
  std::vector<Rational> out(std::size_t(n_), Rational(0));
  for (int i = 0; i <= p.degree(); ++i) {
    const Rational& c = p.coeff(std::size_t(i));
    if (sgn(c) == 0) continue;
    if (i < n_) {
      out[std::size_t(i)] += c;
    } else if (i - n_ < int(reduction_.size())) {
      const auto& r = reduction_[std::size_t(i - n_)];
      for (int j = 0; j < n_; ++j) out[std::size_t(j)] += c * r[std::size_t(j)];
    } else {
      auto rem = divmod(p, modulus_).second;
      return reduce_poly(rem);
    }
  }
  return out;
}

std::vector<Rational> NumberField::mul(const std::vector<Rational>& a, const std::vector<Rational>& b) const {
  if (n_ == 1) return {Rational(a[0] * b[0])};
  std::vector<Rational> prod(std::size_t(2 * n_ - 1), Rational(0));
  for (int i = 0; i < n_; ++i) {
    if (sgn(a[std::size_t(i)]) == 0) continue;
    for (int j = 0; j < n_; ++j) {
      if (sgn(b[std::size_t(j)]) == 0) continue;
      prod[std::size_t(i + j)] += a[std::size_t(i)] * b[std::size_t(j)];
    }
  }
  std::vector<Rational> out(prod.begin(), prod.begin() + n_);
  for (int k = n_; k < 2 * n_ - 1; ++k) {
    const Rational& c = prod[std::size_t(k)];
    if (sgn(c) == 0) continue;
    const auto& r = reduction_[std::size_t(k - n_)];
    for (int j = 0; j < n_; ++j) out[std::size_t(j)] += c * r[std::size_t(j)];
  }
  return out;
}

std::vector<Rational> NumberField::conjugate(const std::vector<Rational>& a) const {
  std::vector<Rational> out(std::size_t(n_), Rational(0));
  for (int k = 0; k < n_; ++k) {
    if (sgn(a[std::size_t(k)]) == 0) continue;
    for (int j = 0; j < n_; ++j) out[std::size_t(j)] += a[std::size_t(k)] * conj_cols_[std::size_t(k)][std::size_t(j)];
  }
  return out;
}

std::vector<Rational> NumberField::inverse(const std::vector<Rational>& a) const {
  bool zero = true;
  for (const auto& v : a)
    if (sgn(v) != 0) zero = false;
  if (zero) throw Error(ErrorKind::DivisionByZero, "inverse of zero field element");
  if (n_ == 1) return {Rational(1 / a[0])};
  // extended Euclid: u*a + v*m = 1
  QPoly r0 = modulus_, r1 = qpoly(a);
  QPoly s0(Rational(0)), s1 = QPoly::constant(Rational(1));
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    QPoly s = s0 - q * s1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  if (r0.degree() != 0) throw Error(ErrorKind::Internal, "element not invertible: modulus is reducible");
  Rational inv = 1 / r0.lead();
  return poly_to_coords(s0.scaled(inv), n_);
}

FieldElement::FieldElement(std::shared_ptr<const NumberField> f, std::vector<Rational> coords)
    : field_(std::move(f)), c_(std::move(coords)) {}

void FieldElement::check_same(const FieldElement& o) const {
  if (!field_ || !o.field_) throw Error(ErrorKind::FieldMismatch, "uninitialized field element");
  if (field_ != o.field_ && !field_->same_as(*o.field_))
    throw Error(ErrorKind::FieldMismatch, "elements belong to different number fields");
}

bool FieldElement::is_zero() const {
  for (const auto& v : c_)
    if (sgn(v) != 0) return false;
  return true;
}
bool FieldElement::is_one() const {
  if (c_.empty() || c_[0] != 1) return false;
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (sgn(c_[i]) != 0) return false;
  return true;
}
bool FieldElement::is_rational() const {
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (sgn(c_[i]) != 0) return false;
  return true;
}
Rational FieldElement::rational_value() const {
  if (!is_rational()) throw Error(ErrorKind::NotRationalCoefficients, "field element is not rational");
  return c_.empty() ? Rational(0) : c_[0];
}
bool FieldElement::is_fixed() const { return field_->conjugate(c_) == c_; }

FieldElement FieldElement::conjugate() const { return FieldElement(field_, field_->conjugate(c_)); }
FieldElement FieldElement::inverse() const { return FieldElement(field_, field_->inverse(c_)); }

FieldElement FieldElement::operator-() const {
  FieldElement r(*this);
  for (auto& v : r.c_) v = -v;
  return r;
}
FieldElement& FieldElement::operator+=(const FieldElement& o) {
  check_same(o);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}
FieldElement& FieldElement::operator-=(const FieldElement& o) {
  check_same(o);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}
FieldElement& FieldElement::operator*=(const FieldElement& o) {
  check_same(o);
  if (o.is_rational()) return *this *= o.c_[0];
  if (is_rational()) {
    Rational q = c_[0];
    *this = o;
    return *this *= q;
  }
  c_ = field_->mul(c_, o.c_);
  return *this;
}
FieldElement& FieldElement::operator/=(const FieldElement& o) {
  check_same(o);
  if (o.is_zero()) throw Error(ErrorKind::DivisionByZero, "field division by zero");
  if (o.is_rational()) {
    Rational inv = 1 / o.c_[0];
    return *this *= inv;
  }
  c_ = field_->mul(c_, field_->inverse(o.c_));
  return *this;
}
FieldElement& FieldElement::operator*=(const Rational& q) {
  for (auto& v : c_) v *= q;
  return *this;
}
bool operator==(const FieldElement& a, const FieldElement& b) {
  if (a.field_ && b.field_ && a.field_ != b.field_ && !a.field_->same_as(*b.field_)) return false;
  return a.c_ == b.c_;
}

FieldElement FieldElement::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  FieldElement r = field_->one(), b = *this;
  while (e) {
    if (e & 1) r *= b;
    e >>= 1;
    if (e) b *= b;
  }
  return r;
}

ComplexInterval FieldElement::embed(long prec) const {
  if (prec < 16) throw Error(ErrorKind::InvalidArgument, "embedding precision must be at least 16 bits");
  long guard = 8;
  for (const auto& v : c_)
    if (sgn(v) != 0) guard = std::max(guard, bit_size(v) + 8);
  Rational target = pow2(1 - prec);
  for (int attempt = 0; attempt < 6; ++attempt) {
    Embedding e = field_->embedding(prec + guard);
    ComplexInterval r = e(c_);
    if (r.max_width() <= target) return r;
    guard *= 2;
  }
  throw Error(ErrorKind::PrecisionExhausted, "embedding refinement failed");
}

std::complex<double> FieldElement::approx() const {
  ComplexInterval r = field_->default_embedding()(c_);
  return {r.re_mid(), r.im_mid()};
}

std::string FieldElement::to_string(std::string_view var) const {
  std::string out;
  for (std::size_t k = c_.size(); k-- > 0;) {
    const Rational& c = c_[k];
    if (sgn(c) == 0) continue;
    std::string mon;
    if (k == 1)
      mon = std::string(var);
    else if (k > 1)
      mon = std::string(var) + "^" + std::to_string(k);
    Rational a = abs(c);
    std::string term;
    if (mon.empty())
      term = a.get_str();
    else if (a == 1)
      term = mon;
    else
      term = a.get_str() + "*" + mon;
    if (sgn(c) < 0)
      out += "-" + term;
    else
      out += (out.empty() ? "" : "+") + term;
  }
  return out.empty() ? "0" : out;
}

FieldElement exact_div(const FieldElement& a, const FieldElement& b) { return a / b; }

Interval real_enclosure(const FieldElement& a, long prec) { return a.embed(prec).re; }

Rational abs_upper(const FieldElement& a) {
  if (a.is_rational()) return abs(a.coords()[0]);
  return a.field().default_embedding()(a).mag();
}

int real_sign(const FieldElement& a) {
  if (a.is_zero()) return 0;
  if (a.is_rational()) return sgn(a.coords()[0]);
  if (!a.is_fixed()) throw Error(ErrorKind::InvalidArgument, "sign of a non-real field element");
  int s = a.field().default_embedding()(a).re.sign();
  if (s != 0) return s;
  for (long prec = 256; prec <= (1L << 16); prec *= 2) {
    s = real_enclosure(a, prec).sign();
    if (s != 0) return s;
  }
  throw Error(ErrorKind::PrecisionExhausted, "could not decide the sign of a real field element");
}

}  // namespace ratcurve
