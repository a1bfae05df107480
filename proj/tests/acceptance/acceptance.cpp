// One PASS/FAIL line per acceptance criterion; nonzero exit if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <sstream>
#include <string>

#include "ratcurve/catalog.hpp"
#include "ratcurve/construction.hpp"
#include "ratcurve/families.hpp"
#include "ratcurve/permcheck.hpp"
#include "ratcurve/sampling.hpp"

using namespace ratcurve;

namespace {

struct Outcome {
  bool ok = false;
  std::string detail;
};

int failures = 0;

void run(int id, const char* title, double budget_s, const std::function<Outcome()>& body) {
  auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (dt > budget_s) {
    o.ok = false;
    o.detail += " (over the " + std::to_string(int(budget_s)) + " s budget)";
  }
  if (!o.ok) ++failures;
  std::printf("[%s] %2d. %s  %.2fs  %s\n", o.ok ? "PASS" : "FAIL", id, title, dt, o.detail.c_str());
  std::fflush(stdout);
}

std::string yes(bool b) { return b ? "yes" : "no"; }

}  // namespace

int main() {
  auto K = NumberField::builtin("eisenstein");

  run(1, "printed composition f o g", 1, [&] {
    RationalFunction h = compose(printed_f(K), printed_g(K));
    auto want = parse_rational_function("(8*z^9-24*z^5-13*z^3-6*z)/(12*z^8+13*z^6+12*z^4-1)", K);
    return Outcome{h == want, "h = " + h.to_string()};
  });

  run(2, "construction on 14a2, l = 3", 60, [&] {
    auto ci = catalog_curve("14a2");
    ConstructionPair P = build_pair(ci.E, ci.c, ci.w, 3);
    const auto& c = P.certificates;
    auto m = search_normalization(P.h, printed_h(K));
    bool ok = P.h.degree() == 9 && P.h.is_real() && c.real && c.injective.verdict == Injectivity::Injective &&
              !c.circle.circle && m.has_value() && m->inner.is_real() && m->outer.is_real();
    std::string d = "deg h " + std::to_string(P.h.degree()) + ", real " + yes(P.h.is_real()) + ", injective " +
                    to_string(c.injective.verdict) + ", circle " + (c.circle.circle ? "Circle" : "NotCircle");
    if (m) d += ", inner " + m->inner.to_string() + ", outer " + m->outer.to_string();
    return Outcome{ok, d};
  });

  run(3, "torsion and kernel facts", 5, [&] {
    auto ci = catalog_curve("14a2");
    bool order3 = ec_mul(3, ci.c).is_infinity();
    bool conj = torsion_conjugate_check(ci.E, ci.c, 3);
    Isogeny phi = velu(ci.E, ci.c, 3);
    bool j = phi.codomain.j_invariant() == printed_codomain(K).j_invariant();
    return Outcome{order3 && conj && j, "3c = 0: " + yes(order3) + ", C and conj(C) meet in 0: " + yes(conj) +
                                            ", j(E') matches: " + yes(j)};
  });

  run(4, "halving obstruction at w = (-78, 0)", 1, [&] {
    auto ci = catalog_curve("14a2");
    HalvingReport r = halving_analysis(ci.E, ci.w);
    QPoly q = qpoly_from_ints({33867, 156, 1});
    bool factor = false;
    for (const auto& [p, e] : r.factors) factor = factor || p == q;
    int real = sturm_count_open(q, ExtReal::neg_inf(), ExtReal::pos_inf());
    return Outcome{r.obstructed && halving_obstruction(ci.E, ci.w) && factor && real == 0,
                   "obstructed " + yes(r.obstructed) + ", factor X^2+156X+33867 " + yes(factor) + ", real roots " +
                       std::to_string(real)};
  });

  run(5, "dual isogeny composes to [3]", 10, [&] {
    auto ci = catalog_curve("14a2");
    Isogeny phi = velu(ci.E, ci.c, 3);
    Isogeny dual = dual_isogeny(phi, 3);
    RationalFunction M = mult_by_ell_xmap(ci.E, 3);
    bool ok = compose(dual.xmap, phi.xmap) == M;
    return Outcome{ok, "deg [3]_x = " + std::to_string(M.degree())};
  });

  run(6, "construction with l = 5 (split5)", 600, [&] {
    auto ci = catalog_curve("split5");
    ConstructionPair P = build_pair(ci.E, ci.c, ci.w, 5);
    const auto& c = P.certificates;
    bool ok = P.f.degree() == 5 && P.g.degree() == 5 && P.h.is_real() && c.real &&
              c.injective.verdict == Injectivity::Injective && !c.circle.circle;
    return Outcome{ok, "deg f " + std::to_string(P.f.degree()) + ", deg g " + std::to_string(P.g.degree()) +
                           ", real " + yes(c.real) + ", injective " + to_string(c.injective.verdict) + ", circle " +
                           (c.circle.circle ? "Circle" : "NotCircle")};
  });

  run(7, "block/intermediate-subgroup sweep", 300, [&] {
    SearchParams p;
    p.max_degree = 9;
    p.group_budget = 50;
    p.seed = 7;
    SearchReport r = search(p);
    bool ok = r.violations == 0 && r.pairs_checked >= 300 && r.triples_checked >= 1000;
    return Outcome{ok, std::to_string(r.groups_checked) + " groups, " + std::to_string(r.pairs_checked) +
                           " pairs, " + std::to_string(r.triples_checked) + " triples, " +
                           std::to_string(r.violations) + " violations"};
  });

  run(8, "Chebyshev, Pakovich and Avanzi-Zannier identities", 60, [&] {
    int bad = 0, checked = 0;
    for (int n = 1; n <= 12; ++n, ++checked) bad += !chebyshev_identity_holds(n);
    for (int m = 1; m <= 12; ++m)
      for (int n = 1; m * n <= 12; ++n, ++checked) bad += !chebyshev_semigroup_holds(m, n);
    FamilyOptions quick;
    quick.samples = 0;
    for (int n = 2; n <= 6; ++n, ++checked) {
      FamilyInstance f = build_family("pakovich:n=" + std::to_string(n) + ",zeta_order=" + std::to_string(n), quick);
      bad += !(f.checks.identity && f.checks.real);
    }
    auto Z4 = NumberField::builtin("cyclotomic:4");
    for (auto [n, k] : std::vector<std::pair<int, int>>{{2, 1}, {3, 1}, {3, 2}, {4, 1}})
      for (int m : {1, 2, 4}) {
        bad += !fg_identity_holds(n, k, root_of_unity(Z4, m));
        FamilyInstance f = build_family("avanzi-zannier:n=" + std::to_string(n) + ",k=" + std::to_string(k) +
                                            ",zeta_order=" + std::to_string(m),
                                        quick);
        bad += !(f.checks.identity && f.checks.real);
        checked += 2;
      }
    return Outcome{bad == 0, std::to_string(checked) + " identities, " + std::to_string(bad) + " failed"};
  });

  run(9, "circle dichotomy for zeta z + 1/(zeta z)", 30, [&] {
    FamilyOptions quick;
    quick.samples = 0;
    int bad = 0, checked = 0;
    std::string d;
    for (int m : {1, 2, 3, 4, 5, 6, 8}) {
      int circles = 0;
      for (int j = 1; j <= m; ++j) {
        if (std::gcd(j, m) != 1) continue;
        FamilyInstance f = build_family("pakovich:n=" + std::to_string(m) + ",zeta_order=" + std::to_string(m) +
                                            ",zeta_power=" + std::to_string(j),
                                        quick);
        bool circle = f.checks.circle.value_or(4 % m != 0);
        circles += circle;
        bad += circle != (4 % m == 0) || !f.checks.circle;
        ++checked;
      }
      d += "ord " + std::to_string(m) + ": " + (circles ? "Circle" : "NotCircle") + "; ";
    }
    return Outcome{bad == 0, d + std::to_string(checked) + " instances"};
  });

  run(10, "weak injectivity consistency", 60, [&] {
    WeakInjectivity h = certify_weakly_injective(printed_h(K));
    WeakInjectivity c = certify_weakly_injective(parse_rational_function("z^3", NumberField::rationals()));
    bool ok = !h.found && c.found && c.z0;
    return Outcome{ok, std::string("h: ") + (h.found ? "Witness" : "NoWitnessFound") + ", z^3: " +
                           (c.found ? "Witness z0 = " + c.z0->get_str() : "NoWitnessFound")};
  });

  run(11, "figure: Jordan curve that is not a circle", 30, [&] {
    auto post = parse_rational_function("1/(1+z)", K);
    auto s = sample_curve(printed_g(K), post, 2000, 128);
    bool closed = true;
    for (const auto& x : s) closed = closed && !x.skipped;
    long crossings = self_intersections(s);
    CircleFit fit = fit_circle(s);
    std::ostringstream d;
    d << "closed " << yes(closed) << ", self-intersections " << crossings << ", circle residual " << fit.residual;
    return Outcome{closed && crossings == 0 && fit.residual > 0.05, d.str()};
  });

  std::printf("%d of 11 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
