#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ratcurve/ratfunc.hpp"

namespace ratcurve {

class EllipticCurve {
 public:
  EllipticCurve(FieldElement a, FieldElement b);

  const FieldElement& a() const { return a_; }
  const FieldElement& b() const { return b_; }
  const FieldPtr& field() const { return a_.field_ptr(); }
  FieldElement discriminant() const;
  FieldElement j_invariant() const;
  FieldElement rhs(const FieldElement& x) const { return (x * x + a_) * x + b_; }
  KPoly rhs_poly() const;
  bool is_fixed() const { return a_.is_fixed() && b_.is_fixed(); }
  bool is_rational() const { return a_.is_rational() && b_.is_rational(); }
  bool contains(const FieldElement& x, const FieldElement& y) const { return y * y == rhs(x); }
  EllipticCurve conjugate() const { return EllipticCurve(a_.conjugate(), b_.conjugate()); }
  friend bool operator==(const EllipticCurve& e, const EllipticCurve& f) { return e.a_ == f.a_ && e.b_ == f.b_; }
  std::string to_string() const;

 private:
  FieldElement a_, b_;
};

class CurvePoint {
 public:
  static CurvePoint infinity(const EllipticCurve& E) { return CurvePoint(E); }
  CurvePoint(const EllipticCurve& E, FieldElement x, FieldElement y);

  const EllipticCurve& curve() const { return E_; }
  bool is_infinity() const { return !xy_.has_value(); }
  const FieldElement& x() const;
  const FieldElement& y() const;
  // Coordinatewise conjugation; the result lies on the conjugate curve.
  CurvePoint conjugate() const;
  CurvePoint operator-() const;
  friend bool operator==(const CurvePoint& P, const CurvePoint& Q);
  friend bool operator!=(const CurvePoint& P, const CurvePoint& Q) { return !(P == Q); }
  std::string to_string() const;

 private:
  explicit CurvePoint(const EllipticCurve& E) : E_(E) {}
  EllipticCurve E_;
  std::optional<std::pair<FieldElement, FieldElement>> xy_;
};

CurvePoint ec_add(const CurvePoint& P, const CurvePoint& Q);
CurvePoint ec_mul(long n, const CurvePoint& P);

// Reduced division polynomial f_n: psi_n for odd n, psi_n / y for even n.
KPoly division_poly_reduced(const EllipticCurve& E, int n);
// For odd l: the degree (l^2-1)/2 polynomial whose roots are x(E[l] \ 0).
KPoly division_poly(const EllipticCurve& E, int l);
RationalFunction mult_by_ell_xmap(const EllipticCurve& E, int l);
bool torsion_conjugate_check(const EllipticCurve& E, const CurvePoint& c, int l);
bool is_odd_prime(long l);

struct Isogeny {
  EllipticCurve domain;
  EllipticCurve codomain;
  RationalFunction xmap;        // A(u)
  RationalFunction ymap_factor; // B(u), so (u, v) -> (A(u), B(u) v)
  KPoly kernel_polynomial;
  int degree = 0;
  std::optional<CurvePoint> kernel_generator;

  CurvePoint operator()(const CurvePoint& P) const;
};

Isogeny velu(const EllipticCurve& E, const CurvePoint& c, int l);
Isogeny dual_isogeny(const Isogeny& phi, int l);

struct HalvingReport {
  bool obstructed = false;
  QPoly quartic{Rational(0)};
  std::vector<std::pair<QPoly, int>> factors;
  int real_roots = 0;
  int real_roots_on_curve = 0;
};

HalvingReport halving_analysis(const EllipticCurve& E, const CurvePoint& w);
bool halving_obstruction(const EllipticCurve& E, const CurvePoint& w);

// Square-free decomposition followed by splitting off rational linear factors
// and, for quartic pieces, rational quadratic factors.
std::vector<std::pair<QPoly, int>> factor_small(const QPoly& p);
std::string qpoly_to_string(const QPoly& p, std::string_view var = "X");

}  // namespace ratcurve
