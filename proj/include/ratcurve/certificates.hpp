#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ratcurve/interval.hpp"
#include "ratcurve/ratfunc.hpp"

namespace ratcurve {

enum class Exec { Serial, Parallel };

struct CertifyOptions {
  long precision = NumberField::kDefaultPrecision;
  int max_doublings = 64;
  int grid = 24;             // rational specializations tried on curve components
  int circle_search = 64;    // rationals scanned by the circle test
  Exec exec = Exec::Parallel;
};

// 0, 1, -1, 2, -2, 1/2, -1/2, 3, -3, 1/3, -1/3, 3/2, ... by height.
std::vector<Rational> small_height_rationals(int count);

struct CircleVerdict {
  bool circle = false;
  std::optional<Moebius> lambda;  // lambda o g is real
  std::optional<Moebius> rho;     // conj(g) = rho o g, when it exists
  std::vector<Rational> points;
};

CircleVerdict circle_test(const RationalFunction& g, int search_bound = 64);

enum class Injectivity { Injective, NotInjective, Undecided };
std::string to_string(Injectivity v);

// A point of the real projective line, located in a closed interval.
struct RealPoint {
  bool infinity = false;
  Interval box;
  std::string to_string() const;
};

struct InjectivityCertificate {
  Injectivity verdict = Injectivity::Undecided;
  std::optional<std::pair<RealPoint, RealPoint>> witness;
  std::string method;
  int resultant_degree = 0;
  int real_candidates = 0;
  int pairs_excluded = 0;
};

InjectivityCertificate certify_injective(const RationalFunction& g, const CertifyOptions& opts = {});

struct WeakInjectivity {
  bool found = false;
  std::optional<Rational> z0;
  std::string certificate;
  std::string search;
};

WeakInjectivity certify_weakly_injective(const RationalFunction& g, const std::vector<Rational>& candidates);
WeakInjectivity certify_weakly_injective(const RationalFunction& g);

}  // namespace ratcurve
