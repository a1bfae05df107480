#include "ratcurve/catalog.hpp"

#include "ratcurve/error.hpp"

namespace ratcurve {

namespace {

FieldElement el(const FieldPtr& K, const std::string& s) { return parse_field_element(s, K); }

}  // namespace

std::vector<std::string> catalog_names() { return {"14a2", "split5"}; }

CurveInstance catalog_curve(const std::string& name) {
  if (name == "14a2") {
    FieldPtr K = NumberField::builtin("eisenstein");
    EllipticCurve E(el(K, "-46035"), el(K, "-3116178"));
    CurvePoint c(E, el(K, "72*t-33"), el(K, "1080*t-648"));
    CurvePoint w(E, el(K, "-78"), el(K, "0"));
    return {name, K, E, c, w, 3};
  }
  if (name == "split5") {
    FieldPtr K = NumberField::builtin("cyclotomic:5");
    FieldElement s5 = el(K, "1+2*t+2*t^4");
    FieldElement d = el(K, "t-t^4");
    EllipticCurve E(el(K, "-6087312675"), el(K, "-181864595081250"));
    CurvePoint P(E, el(K, "345855"), s5 * el(K, "88410960"));
    CurvePoint Q(E, el(K, "-76875") - s5 * el(K, "12078"), d * (el(K, "6159780") + s5 * el(K, "3333528")));
    CurvePoint w(E, el(K, "-43325"), el(K, "738100"));
    return {name, K, E, ec_add(P, Q), w, 5};
  }
  throw Error(ErrorKind::InvalidArgument, "unknown catalog curve '" + name + "'");
}

RationalFunction printed_f(const FieldPtr& K) { return parse_rational_function("(z^3-6*(t+1)*z)/(3*z^2+1)", K); }
RationalFunction printed_g(const FieldPtr& K) { return parse_rational_function("(2*z^3+(t+1)*z)/(z^2-t)", K); }
RationalFunction printed_h(const FieldPtr& K) {
  return parse_rational_function("(8*z^9-24*z^5-13*z^3-6*z)/(12*z^8+13*z^6+12*z^4-1)", K);
}

EllipticCurve printed_codomain(const FieldPtr& K) {
  return EllipticCurve(el(K, "298080*t+537165"), el(K, "86819040*t-39204594"));
}

}  // namespace ratcurve
