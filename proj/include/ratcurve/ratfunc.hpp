#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "ratcurve/number_field.hpp"
#include "ratcurve/poly.hpp"
#include "ratcurve/resultant.hpp"
#include "ratcurve/sturm.hpp"

namespace ratcurve {

using FieldPtr = std::shared_ptr<const NumberField>;
using KPoly = Poly<FieldElement>;
// Recursive bivariate polynomials: outer variable y, coefficients in x.
using KBiPoly = Poly<KPoly>;
using QBiPoly = Poly<QPoly>;

KPoly kpoly(const FieldPtr& K, std::vector<FieldElement> coeffs);
KPoly kpoly_zero(const FieldPtr& K);
KPoly kpoly_x(const FieldPtr& K);
KPoly to_kpoly(const QPoly& p, const FieldPtr& K);
// Requires every coefficient to be rational.
QPoly to_qpoly(const KPoly& p);
bool has_rational_coefficients(const KPoly& p);
KPoly conjugate(const KPoly& p);

// A point of the extended line: a field element or infinity.
class ExtPoint {
 public:
  ExtPoint(FieldElement v) : v_(std::move(v)) {}  // NOLINT(google-explicit-constructor)
  static ExtPoint infinity() { return ExtPoint(); }
  bool is_infinity() const { return !v_.has_value(); }
  const FieldElement& value() const;
  ExtPoint conjugate() const { return is_infinity() ? *this : ExtPoint(v_->conjugate()); }
  friend bool operator==(const ExtPoint& a, const ExtPoint& b);
  friend bool operator!=(const ExtPoint& a, const ExtPoint& b) { return !(a == b); }
  std::string to_string() const;

 private:
  ExtPoint() = default;
  std::optional<FieldElement> v_;
};

class RationalFunction {
 public:
  // Reduces num/den to the canonical form: coprime, monic denominator.
  RationalFunction(KPoly num, KPoly den);
  static RationalFunction from_poly(KPoly p);
  static RationalFunction identity(const FieldPtr& K);
  static RationalFunction constant(const FieldElement& c);

  const KPoly& num() const { return num_; }
  const KPoly& den() const { return den_; }
  const FieldPtr& field() const { return num_.zero().field_ptr(); }
  int degree() const { return std::max(num_.degree(), den_.degree()); }
  bool is_constant() const { return degree() <= 0; }
  bool is_polynomial() const { return den_.degree() == 0; }

  ExtPoint operator()(const ExtPoint& z) const;
  ExtPoint eval(const ExtPoint& z) const { return (*this)(z); }
  RationalFunction conjugate() const;
  bool is_real() const;
  RationalFunction derivative() const;

  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
  RationalFunction operator-() const;
  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RationalFunction& a, const RationalFunction& b) { return !(a == b); }

  std::string to_string(std::string_view var = "z") const;

 private:
  KPoly num_, den_;
};

// outer(inner(z)), reduced.
RationalFunction compose(const RationalFunction& outer, const RationalFunction& inner);
// Homogenized numerator and denominator of outer(inner(z)) before cancellation.
std::pair<KPoly, KPoly> compose_unreduced(const RationalFunction& outer, const RationalFunction& inner);
// Image of the rational function at a rational parameter, or infinity.
ExtPoint eval_at_rational(const RationalFunction& f, const Rational& x);

class Moebius {
 public:
  Moebius(FieldElement a, FieldElement b, FieldElement c, FieldElement d);
  static Moebius identity(const FieldPtr& K);
  static Moebius from_function(const RationalFunction& f);

  const FieldElement& a() const { return a_; }
  const FieldElement& b() const { return b_; }
  const FieldElement& c() const { return c_; }
  const FieldElement& d() const { return d_; }

  ExtPoint operator()(const ExtPoint& z) const;
  RationalFunction to_function() const;
  Moebius inverse() const;
  Moebius conjugate() const;
  // Real up to a common scalar, i.e. the associated function is real.
  bool is_real() const { return to_function().is_real(); }
  friend Moebius operator*(const Moebius& m, const Moebius& n);  // m o n
  friend bool operator==(const Moebius& m, const Moebius& n) { return m.to_function() == n.to_function(); }
  std::string to_string(std::string_view var = "z") const { return to_function().to_string(var); }

 private:
  FieldElement a_, b_, c_, d_;
};

Moebius moebius_from_triples(const std::array<ExtPoint, 3>& src, const std::array<ExtPoint, 3>& dst);

std::string poly_to_string(const KPoly& p, std::string_view var = "z");

// Parsing: expressions in the variable var with generator symbol "t".
RationalFunction parse_rational_function(std::string_view s, const FieldPtr& K, std::string_view var = "z");
FieldElement parse_field_element(std::string_view s, const FieldPtr& K);
QPoly parse_qpoly(std::string_view s, std::string_view var = "t");

// Number of distinct real roots in the open interval; coefficients must be rational.
int sturm_count(const KPoly& p, const ExtReal& lo, const ExtReal& hi);

// H = A + delta*B with delta = t - sigma(t); requires Fix(sigma) = Q.
std::pair<QBiPoly, QBiPoly> split_real_imag(const KBiPoly& H);
// Same decomposition over the fixed field: A, B have sigma-fixed coefficients.
std::pair<KBiPoly, KBiPoly> split_real_imag_fixed(const KBiPoly& H);
FieldElement imaginary_unit_delta(const FieldPtr& K);

// Bivariate helpers for polynomial resultants.
KBiPoly bipoly_from_y_poly(const KPoly& p);   // p(y)
KBiPoly bipoly_from_x_poly(const KPoly& p);   // p(x)
KPoly resultant_y(const KBiPoly& A, const KBiPoly& B);
QPoly resultant_y(const QBiPoly& A, const QBiPoly& B);

}  // namespace ratcurve
