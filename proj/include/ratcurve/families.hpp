#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ratcurve/certificates.hpp"
#include "ratcurve/ratfunc.hpp"

namespace ratcurve {

// T_1 = z, T_2 = z^2 - 2, T_{m+1} = z T_m - T_{m-1}.
QPoly chebyshev(int n);
// T_n(z + 1/z) == z^n + 1/z^n as rational functions.
bool chebyshev_identity_holds(int n);
// T_m o T_n == T_{mn}.
bool chebyshev_semigroup_holds(int m, int n);

// Smallest m with a^m = 1, or 0 if there is none up to the bound.
int root_of_unity_order(const FieldElement& a, int bound = 1000);
// A square root of -1 in K, chosen with positive imaginary part.
std::optional<FieldElement> imaginary_unit(const FieldPtr& K);
// "cyclotomic:lcm(4, 2 ord)", a field holding zeta, i and a square root of any power of zeta.
std::string suggested_field(int zeta_order);

struct FamilyChecks {
  bool identity = false;     // the defining functional identity
  bool real = false;         // f o g is real
  bool degree = false;       // deg(f o g) = deg f deg g
  std::optional<bool> circle;
  std::optional<long> self_intersections;  // at sampling resolution
};

struct FamilyInstance {
  std::string name;
  std::vector<std::pair<std::string, std::string>> parameters;
  RationalFunction f, g;
  FieldPtr field;
  FamilyChecks checks;
};

struct FamilyOptions {
  int samples = 600;  // 0 disables the self-intersection count
  long precision = 64;
  Exec exec = Exec::Parallel;
};

FamilyInstance pakovich_pair(int n, const FieldElement& zeta, const FamilyOptions& opts = {});
FamilyInstance avanzi_zannier_pair(int n, int k, const FieldElement& zeta, const FieldElement& rho,
                                   const FamilyOptions& opts = {});

// F(conj(G)(1/z)) == zeta^(k-n) F(G(z)) for F = z^k (1-z)^(n-k), G = (1 - zeta z^k)/(1 - zeta z^n).
bool fg_identity_holds(int n, int k, const FieldElement& zeta);

// zeta = t^(j N/m) in cyclotomic:N, N from suggested_field (rationals when m <= 2 for Pakovich).
FieldElement root_of_unity(const FieldPtr& K, int order, int power = 1);

// "pakovich:n=5,zeta_order=5", "avanzi-zannier:n=3,k=1,zeta_order=1[,zeta_power=j][,rho_sign=-1]".
FamilyInstance build_family(const std::string& spec, const FamilyOptions& opts = {});

// Linear lambda with lambda o g real, for polynomial g with f o g real.
Moebius realize_polynomial_inner(const RationalFunction& f, const RationalFunction& g);

}  // namespace ratcurve
