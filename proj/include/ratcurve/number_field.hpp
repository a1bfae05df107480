#pragma once

#include <complex>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "ratcurve/interval.hpp"
#include "ratcurve/poly.hpp"
#include "ratcurve/rational.hpp"

namespace ratcurve {

using QPoly = Poly<Rational>;

QPoly qpoly(std::vector<Rational> coeffs);
QPoly qpoly_from_ints(std::vector<long> coeffs);

class NumberField;
class FieldElement;

// Certified complex embedding of K at a fixed working precision: a box around
// the chosen root of the modulus together with boxes for its powers.
class Embedding {
 public:
  Embedding() = default;
  Embedding(ComplexInterval root, std::vector<ComplexInterval> powers, long prec)
      : root_(std::move(root)), powers_(std::move(powers)), prec_(prec) {}

  ComplexInterval operator()(const FieldElement& a) const;
  ComplexInterval operator()(const std::vector<Rational>& coords) const;
  const ComplexInterval& root() const { return root_; }
  long precision() const { return prec_; }

 private:
  ComplexInterval root_;
  std::vector<ComplexInterval> powers_;
  long prec_ = 0;
};

struct FieldSpec {
  std::string name;
  QPoly modulus = QPoly(Rational(0));
  QPoly conjugation = QPoly(Rational(0));
  std::complex<double> embedding_hint{0.0, 0.0};
  // Set for families whose irreducibility is known (cyclotomic).
  bool irreducible_by_construction = false;
};

class NumberField : public std::enable_shared_from_this<NumberField> {
 public:
  static std::shared_ptr<const NumberField> create(FieldSpec spec);
  // "rationals", "eisenstein", "gaussian", "cyclotomic:<n>".
  static std::shared_ptr<const NumberField> builtin(std::string_view name);
  static std::shared_ptr<const NumberField> rationals();

  const std::string& name() const { return name_; }
  int degree() const { return n_; }
  const QPoly& modulus() const { return modulus_; }
  const QPoly& conjugation_image() const { return conj_; }
  std::complex<double> embedding_hint() const { return hint_; }
  bool irreducibility_verified() const { return irreducible_verified_; }
  // Dimension over Q of the subfield fixed by the conjugation.
  int fixed_dimension() const { return fixed_dim_; }
  bool fixed_field_is_rational() const { return fixed_dim_ == 1; }

  FieldElement zero() const;
  FieldElement one() const;
  FieldElement gen() const;
  FieldElement from_rational(const Rational& q) const;
  FieldElement from_coords(std::vector<Rational> coords) const;
  FieldElement from_poly(const QPoly& p) const;

  // Embedding with root box radius at most 2^-prec.
  Embedding embedding(long prec) const;
  const Embedding& default_embedding() const { return default_embedding_; }

  bool same_as(const NumberField& o) const;
  std::string describe() const;

  // Coordinate-level arithmetic used by FieldElement.
  std::vector<Rational> mul(const std::vector<Rational>& a, const std::vector<Rational>& b) const;
  std::vector<Rational> reduce_poly(const QPoly& p) const;
  std::vector<Rational> conjugate(const std::vector<Rational>& a) const;
  std::vector<Rational> inverse(const std::vector<Rational>& a) const;

  static constexpr long kDefaultPrecision = 128;

 private:
  NumberField() = default;
  void init(FieldSpec spec);

  std::string name_;
  int n_ = 0;
  QPoly modulus_{Rational(0)};
  QPoly conj_{Rational(0)};
  std::complex<double> hint_;
  bool irreducible_verified_ = false;
  int fixed_dim_ = 0;
  std::vector<std::vector<Rational>> reduction_;  // t^(n+k) mod m, k = 0..n-2
  std::vector<std::vector<Rational>> conj_cols_;  // sigma(t)^k mod m
  Embedding default_embedding_;
};

class FieldElement {
 public:
  FieldElement() = default;
  FieldElement(std::shared_ptr<const NumberField> f, std::vector<Rational> coords);

  const NumberField& field() const { return *field_; }
  const std::shared_ptr<const NumberField>& field_ptr() const { return field_; }
  bool has_field() const { return field_ != nullptr; }
  const std::vector<Rational>& coords() const { return c_; }

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const;
  Rational rational_value() const;
  bool is_fixed() const;  // sigma(a) == a

  FieldElement conjugate() const;
  FieldElement inverse() const;

  FieldElement operator-() const;
  FieldElement& operator+=(const FieldElement& o);
  FieldElement& operator-=(const FieldElement& o);
  FieldElement& operator*=(const FieldElement& o);
  FieldElement& operator/=(const FieldElement& o);
  FieldElement& operator*=(const Rational& q);
  friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
  friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
  friend FieldElement operator*(FieldElement a, const FieldElement& b) { return a *= b; }
  friend FieldElement operator/(FieldElement a, const FieldElement& b) { return a /= b; }
  friend FieldElement operator*(FieldElement a, const Rational& q) { return a *= q; }
  friend FieldElement operator*(const Rational& q, FieldElement a) { return a *= q; }
  friend bool operator==(const FieldElement& a, const FieldElement& b);
  friend bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }

  FieldElement pow(long e) const;
  FieldElement embed_rational(const Rational& q) const { return field_->from_rational(q); }

  ComplexInterval embed(long prec = NumberField::kDefaultPrecision) const;
  std::complex<double> approx() const;
  std::string to_string(std::string_view var = "t") const;

 private:
  void check_same(const FieldElement& o) const;

  std::shared_ptr<const NumberField> field_;
  std::vector<Rational> c_;
};

inline bool is_zero(const FieldElement& a) { return a.is_zero(); }
inline FieldElement zero_like(const FieldElement& a) { return a.field().zero(); }
inline FieldElement one_like(const FieldElement& a) { return a.field().one(); }
inline FieldElement times_int(const FieldElement& a, long n) { return a * Rational(n); }
FieldElement exact_div(const FieldElement& a, const FieldElement& b);

// Sign of a conjugation-fixed (hence real) element, certified through the
// embedding.  Throws InvalidArgument if a is not fixed.
int real_sign(const FieldElement& a);
// Real enclosure of a fixed element at the given precision.
Interval real_enclosure(const FieldElement& a, long prec);
inline int sign_of(const FieldElement& a) { return real_sign(a); }
// Rational upper bound for |a| under the embedding.
Rational abs_upper(const FieldElement& a);

QPoly cyclotomic_polynomial(int n);
std::vector<Rational> rational_roots(const QPoly& p);
Rational simplest_rational_between(const Rational& lo, const Rational& hi);
bool is_irreducible_small(const QPoly& p);

}  // namespace ratcurve
