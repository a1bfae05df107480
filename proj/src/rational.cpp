#include "ratcurve/rational.hpp"

#include <cmath>

#include "ratcurve/error.hpp"

namespace ratcurve {

Rational parse_rational(std::string_view s) {
  std::string str(s);
  Rational q;
  if (str.empty() || q.set_str(str, 10) != 0)
    throw Error(ErrorKind::ParseError, "not a rational number: '" + str + "'");
  if (q.get_den() == 0) throw Error(ErrorKind::DivisionByZero, "zero denominator in '" + str + "'");
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

Rational dyadic_floor(const Rational& q, long bits) {
  Rational s = q;
  if (bits >= 0)
    mpq_mul_2exp(s.get_mpq_t(), s.get_mpq_t(), bits);
  else
    mpq_div_2exp(s.get_mpq_t(), s.get_mpq_t(), -bits);
  Integer f;
  mpz_fdiv_q(f.get_mpz_t(), s.get_num_mpz_t(), s.get_den_mpz_t());
  Rational r(f);
  if (bits >= 0)
    mpq_div_2exp(r.get_mpq_t(), r.get_mpq_t(), bits);
  else
    mpq_mul_2exp(r.get_mpq_t(), r.get_mpq_t(), -bits);
  return r;
}

Rational dyadic_ceil(const Rational& q, long bits) {
  Rational n = -q;
  return -dyadic_floor(n, bits);
}

Rational from_double(double d) {
  if (!std::isfinite(d)) throw Error(ErrorKind::InvalidArgument, "non-finite double");
  return Rational(d);
}

double to_double(const Rational& q) { return q.get_d(); }

Rational pow(const Rational& q, unsigned long n) {
  Rational r;
  mpz_pow_ui(r.get_num_mpz_t(), q.get_num_mpz_t(), n);
  mpz_pow_ui(r.get_den_mpz_t(), q.get_den_mpz_t(), n);
  r.canonicalize();
  return r;
}

long floor_log2(const Rational& q) {
  Integer num = abs(q.get_num());
  const Integer& den = q.get_den();
  long e = long(mpz_sizeinbase(num.get_mpz_t(), 2)) - long(mpz_sizeinbase(den.get_mpz_t(), 2));
  // 2^e is within a factor 2 of |q|; adjust once.
  Rational a = abs(q);
  Rational p = 1;
  if (e >= 0)
    mpq_mul_2exp(p.get_mpq_t(), p.get_mpq_t(), e);
  else
    mpq_div_2exp(p.get_mpq_t(), p.get_mpq_t(), -e);
  if (a < p) return e - 1;
  Rational p2 = p * 2;
  if (a >= p2) return e + 1;
  return e;
}

long bit_size(const Rational& q) {
  return long(mpz_sizeinbase(q.get_num_mpz_t(), 2) + mpz_sizeinbase(q.get_den_mpz_t(), 2));
}

}  // namespace ratcurve
