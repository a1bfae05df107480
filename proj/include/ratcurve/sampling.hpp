#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "ratcurve/certificates.hpp"
#include "ratcurve/interval.hpp"
#include "ratcurve/ratfunc.hpp"

namespace ratcurve {

struct CurveSample {
  std::optional<Rational> param;  // empty for the point at infinity
  ComplexInterval image;
  bool skipped = false;  // pole of the sampled map
};

// t_j = s/(1 - s^2) with s = -1 + 2j/n, j = 0..n-1; j = 0 is infinity.
std::vector<std::optional<Rational>> sample_parameters(int n);

std::vector<CurveSample> sample_curve(const RationalFunction& g, const std::optional<RationalFunction>& post, int n,
                                      long precision = 64, Exec exec = Exec::Parallel);

// Proper crossings of the closed polyline through the unskipped samples.
long self_intersections(const std::vector<CurveSample>& samples, Exec exec = Exec::Parallel);

struct CircleFit {
  double cx = 0, cy = 0, r = 0;
  double residual = 0;  // max |dist - r| / r
};
CircleFit fit_circle(const std::vector<CurveSample>& samples);

void write_csv(std::ostream& os, const std::vector<CurveSample>& samples);
void write_svg(std::ostream& os, const std::vector<CurveSample>& samples);

}  // namespace ratcurve
