#pragma once

#include <string>
#include <vector>

#include "ratcurve/elliptic.hpp"

namespace ratcurve {

struct CurveInstance {
  std::string name;
  FieldPtr field;
  EllipticCurve E;
  CurvePoint c, w;
  int ell = 0;
};

// "14a2" (l = 3 over the Eisenstein field) and "split5" (l = 5 over Q(zeta5)).
CurveInstance catalog_curve(const std::string& name);
std::vector<std::string> catalog_names();

// The printed l = 3 functions over the Eisenstein field.
RationalFunction printed_f(const FieldPtr& K);
RationalFunction printed_g(const FieldPtr& K);
RationalFunction printed_h(const FieldPtr& K);
// Printed codomain of the 3-isogeny.
EllipticCurve printed_codomain(const FieldPtr& K);

}  // namespace ratcurve
