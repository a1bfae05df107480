#include "ratcurve/sampling.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <iomanip>
#include <limits>

#include "ratcurve/error.hpp"

namespace ratcurve {

std::vector<std::optional<Rational>> sample_parameters(int n) {
  if (n < 2) throw Error(ErrorKind::TooFewSamples, "at least two samples are needed");
  std::vector<std::optional<Rational>> out;
  out.reserve(std::size_t(n));
  out.emplace_back(std::nullopt);
  for (int j = 1; j < n; ++j) {
    Rational s(2 * j - n, n);
    s.canonicalize();
    out.emplace_back(Rational(s / (1 - s * s)));
  }
  return out;
}

namespace {

ComplexInterval enclose_value(const FieldElement& v, const Embedding& e, long precision) {
  ComplexInterval r = e(v);
  Rational target = 1;
  mpq_div_2exp(target.get_mpq_t(), target.get_mpq_t(), mp_bitcnt_t(std::max(0L, precision - 1)));
  if (r.max_width() <= target) return r;
  return v.embed(std::max(16L, precision));
}

}  // namespace

std::vector<CurveSample> sample_curve(const RationalFunction& g, const std::optional<RationalFunction>& post, int n,
                                      long precision, Exec exec) {
  RationalFunction F = post ? compose(*post, g) : g;
  auto params = sample_parameters(n);
  const FieldPtr& K = F.field();
  Embedding e = K->embedding(precision + 64);
  std::vector<CurveSample> out(params.size());
  auto one = [&](std::size_t j) {
    CurveSample s;
    s.param = params[j];
    ExtPoint v = s.param ? eval_at_rational(F, *s.param) : F(ExtPoint::infinity());
    if (v.is_infinity())
      s.skipped = true;
    else
      s.image = enclose_value(v.value(), e, precision);
    out[j] = std::move(s);
  };
  const long m = long(params.size());
  if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(dynamic, 16)
    for (long j = 0; j < m; ++j) one(std::size_t(j));
  } else {
    for (long j = 0; j < m; ++j) one(std::size_t(j));
  }
  return out;
}

namespace {

struct Pt {
  double x, y;
};

std::vector<Pt> polyline(const std::vector<CurveSample>& samples) {
  std::vector<Pt> pts;
  for (const auto& s : samples)
    if (!s.skipped) pts.push_back({s.image.re_mid(), s.image.im_mid()});
  return pts;
}

double orient(const Pt& a, const Pt& b, const Pt& c) { return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x); }

bool crosses(const Pt& a, const Pt& b, const Pt& c, const Pt& d) {
  double o1 = orient(a, b, c), o2 = orient(a, b, d), o3 = orient(c, d, a), o4 = orient(c, d, b);
  return ((o1 > 0 && o2 < 0) || (o1 < 0 && o2 > 0)) && ((o3 > 0 && o4 < 0) || (o3 < 0 && o4 > 0));
}

}  // namespace

long self_intersections(const std::vector<CurveSample>& samples, Exec exec) {
  std::vector<Pt> p = polyline(samples);
  const long n = long(p.size());
  if (n < 4) return 0;
  long count = 0;
  auto row = [&](long i) {
    long c = 0;
    const Pt &a = p[std::size_t(i)], &b = p[std::size_t((i + 1) % n)];
    for (long j = i + 2; j < n; ++j) {
      if (i == 0 && j == n - 1) continue;  // closing edge shares a vertex
      if (crosses(a, b, p[std::size_t(j)], p[std::size_t((j + 1) % n)])) ++c;
    }
    return c;
  };
  if (exec == Exec::Parallel) {
#pragma omp parallel for reduction(+ : count) schedule(dynamic, 32)
    for (long i = 0; i < n; ++i) count += row(i);
  } else {
    for (long i = 0; i < n; ++i) count += row(i);
  }
  return count;
}

CircleFit fit_circle(const std::vector<CurveSample>& samples) {
  std::vector<Pt> p = polyline(samples);
  if (p.size() < 3) throw Error(ErrorKind::TooFewSamples, "circle fit needs three points");
  // x^2 + y^2 + D x + E y + F = 0 in the least squares sense
  std::array<std::array<double, 4>, 3> M{};
  for (const Pt& q : p) {
    double row[3] = {q.x, q.y, 1.0};
    double rhs = -(q.x * q.x + q.y * q.y);
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) M[std::size_t(i)][std::size_t(j)] += row[i] * row[j];
      M[std::size_t(i)][3] += row[i] * rhs;
    }
  }
  for (int c = 0; c < 3; ++c) {
    int piv = c;
    for (int r = c + 1; r < 3; ++r)
      if (std::abs(M[std::size_t(r)][std::size_t(c)]) > std::abs(M[std::size_t(piv)][std::size_t(c)])) piv = r;
    std::swap(M[std::size_t(c)], M[std::size_t(piv)]);
    double d = M[std::size_t(c)][std::size_t(c)];
    if (d == 0) throw Error(ErrorKind::TooFewSamples, "degenerate circle fit");
    for (int r = 0; r < 3; ++r) {
      if (r == c) continue;
      double f = M[std::size_t(r)][std::size_t(c)] / d;
      for (int k = c; k < 4; ++k) M[std::size_t(r)][std::size_t(k)] -= f * M[std::size_t(c)][std::size_t(k)];
    }
  }
  double D = M[0][3] / M[0][0], E = M[1][3] / M[1][1], F = M[2][3] / M[2][2];
  CircleFit out;
  out.cx = -D / 2;
  out.cy = -E / 2;
  out.r = std::sqrt(std::max(0.0, out.cx * out.cx + out.cy * out.cy - F));
  for (const Pt& q : p) {
    double dist = std::hypot(q.x - out.cx, q.y - out.cy);
    out.residual = std::max(out.residual, std::abs(dist - out.r) / out.r);
  }
  return out;
}

void write_csv(std::ostream& os, const std::vector<CurveSample>& samples) {
  os << "param,re,im,skipped\n";
  os << std::setprecision(17);
  for (const auto& s : samples) {
    os << (s.param ? s.param->get_str() : std::string("inf")) << ',';
    if (s.skipped)
      os << ",,1\n";
    else
      os << s.image.re_mid() << ',' << s.image.im_mid() << ",0\n";
  }
}

void write_svg(std::ostream& os, const std::vector<CurveSample>& samples) {
  std::vector<Pt> p = polyline(samples);
  if (p.size() < 2) throw Error(ErrorKind::TooFewSamples, "a plot needs two unskipped samples");
  double x0 = std::numeric_limits<double>::infinity(), y0 = x0, x1 = -x0, y1 = -x0;
  for (const Pt& q : p) {
    x0 = std::min(x0, q.x);
    x1 = std::max(x1, q.x);
    y0 = std::min(y0, -q.y);
    y1 = std::max(y1, -q.y);
  }
  double pad = 0.05 * std::max({x1 - x0, y1 - y0, 1e-9});
  os << std::setprecision(9);
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << x0 - pad << ' ' << y0 - pad << ' '
     << (x1 - x0) + 2 * pad << ' ' << (y1 - y0) + 2 * pad << "\">\n";
  os << "<path fill=\"none\" stroke=\"black\" stroke-width=\"" << pad / 10 << "\" d=\"";
  // a skipped sample starts a new subpath; an unbroken loop is closed
  bool pen = false, broken = false, first = true;
  for (const auto& s : samples) {
    if (s.skipped) {
      pen = false;
      broken = true;
      continue;
    }
    os << (first ? "" : " ") << (pen ? "L" : "M") << s.image.re_mid() << ' ' << 0.0 - s.image.im_mid();
    pen = true;
    first = false;
  }
  if (!broken && p.size() > 2) os << " Z";
  os << "\"/>\n</svg>\n";
}

}  // namespace ratcurve
