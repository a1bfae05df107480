#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ratcurve/certificates.hpp"
#include "ratcurve/elliptic.hpp"

namespace ratcurve {

// An element u(x) + v(x) y of the function field K(E).
struct CurveFunction {
  RationalFunction u, v;

  static CurveFunction constant(const FieldElement& c);
  static CurveFunction x(const FieldPtr& K);
  static CurveFunction y(const FieldPtr& K);
  bool is_zero() const { return u.num().is_zero() && v.num().is_zero(); }
  friend bool operator==(const CurveFunction& a, const CurveFunction& b) { return a.u == b.u && a.v == b.v; }
};

class FunctionField {
 public:
  explicit FunctionField(EllipticCurve E);
  const EllipticCurve& curve() const { return E_; }
  CurveFunction add(const CurveFunction& a, const CurveFunction& b) const;
  CurveFunction sub(const CurveFunction& a, const CurveFunction& b) const;
  CurveFunction mul(const CurveFunction& a, const CurveFunction& b) const;
  CurveFunction inv(const CurveFunction& a) const;
  CurveFunction div(const CurveFunction& a, const CurveFunction& b) const { return mul(a, inv(b)); }
  // G applied to a function, evaluated by Horner on numerator and denominator.
  CurveFunction apply(const RationalFunction& G, const CurveFunction& a) const;
  // Pullback along (x, y) -> (A(x), B(x) y).
  CurveFunction pullback(const Isogeny& phi, const CurveFunction& a) const;

 private:
  EllipticCurve E_;
  RationalFunction F_;
};

// The degree-2 quotient of E by beta(p) = w - p, given by z = (w_y + y)/(w_x - x),
// or z = x when w is the origin.
class QuotientMap {
 public:
  QuotientMap(EllipticCurve E, CurvePoint w);

  const EllipticCurve& curve() const { return E_; }
  const CurvePoint& w() const { return w_; }
  bool is_lattes() const { return w_.is_infinity(); }
  const CurveFunction& expression() const { return z_; }

  ExtPoint operator()(const CurvePoint& P) const;
  // beta^*(z) == z in K(E), with beta^*(x), beta^*(y) from the addition law.
  bool verify_beta_invariance() const;
  // (z (w_x - x) - w_y)^2 - (x^3 + a x + b) as a polynomial in x over K[z].
  Poly<KPoly> cubic_relation() const;
  bool verify_cubic_relation() const;
  std::string to_string() const;

 private:
  EllipticCurve E_;
  CurvePoint w_;
  CurveFunction z_;
};

QuotientMap quotient_map(const EllipticCurve& E, const CurvePoint& w);

RationalFunction eliminate_pushforward(const Isogeny& iso, const QuotientMap& src, const QuotientMap& dst);
// psi_dst o iso == G o psi_src exactly in K(E).
bool diagram_commutes(const Isogeny& iso, const QuotientMap& src, const QuotientMap& dst, const RationalFunction& G);

struct Provenance {
  EllipticCurve E;
  CurvePoint c, w;
  Isogeny phi, phi_dual;
  QuotientMap psi, psi1, psi2;
  RationalFunction g_raw, f_raw;
};

struct Normalization {
  Moebius inner, outer, mu;
  bool conjugated = false;
};

struct Certificates {
  bool real = false;
  InjectivityCertificate injective;
  CircleVerdict circle;
};

struct ConstructionPair {
  RationalFunction f, g, h;
  int ell = 0;
  std::optional<Provenance> provenance;
  Normalization normalization;
  Certificates certificates;
};

struct BuildOptions {
  bool certify = true;
  CertifyOptions certify_options;
};

ConstructionPair build_pair(const EllipticCurve& E, const CurvePoint& c, const CurvePoint& w, int ell,
                            const BuildOptions& opts = {});
// A pair given as data, e.g. printed functions; h = f o g.
ConstructionPair make_pair(const RationalFunction& f, const RationalFunction& g, const BuildOptions& opts = {});
Certificates certify_pair(const RationalFunction& g, const RationalFunction& h, const CertifyOptions& opts);

// g -> mu o g o inner, f -> outer o f o mu^-1, h -> outer o h o inner.
ConstructionPair normalize_pair(const ConstructionPair& pair, const Moebius& inner, const Moebius& outer,
                                const std::optional<Moebius>& mu = std::nullopt, const BuildOptions& opts = {});

struct SearchOptions {
  int height = 24;
  Exec exec = Exec::Parallel;
};

struct MoebiusPairMatch {
  Moebius inner, outer;
  long candidates = 0;
  long prefilter_hits = 0;
};

// Real Moebius maps with outer o src o inner == dst.  Inner maps have integer
// entries bounded by the height; the outer map is solved from three values.
std::optional<MoebiusPairMatch> search_normalization(const RationalFunction& src, const RationalFunction& dst,
                                                     const SearchOptions& opts = {});

// Normalization of a raw pair onto target (f, g): h-equivalence first, then mu
// from g, then f verified.
std::optional<Normalization> match_pair(const ConstructionPair& raw, const RationalFunction& f_target,
                                        const RationalFunction& g_target, const SearchOptions& opts = {});

}  // namespace ratcurve
