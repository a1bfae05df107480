#pragma once

// Sturm sequences and real root isolation over an ordered coefficient domain:
// rationals, or conjugation-fixed number-field elements whose signs are
// decided through the certified embedding.

#include <vector>

#include "ratcurve/poly.hpp"
#include "ratcurve/rational.hpp"

namespace ratcurve {

inline int sign_of(const Rational& a) { return sgn(a); }
inline Rational abs_upper(const Rational& a) { return abs(a); }

struct ExtReal {
  enum Kind { NegInf, Finite, PosInf };
  Kind kind = Finite;
  Rational value;

  static ExtReal neg_inf() { return {NegInf, Rational(0)}; }
  static ExtReal pos_inf() { return {PosInf, Rational(0)}; }
  static ExtReal finite(const Rational& v) { return {Finite, v}; }
};

struct RootInterval {
  Rational lo, hi;
  bool exact = false;
  int sign_lo = 0;
};

template <class T>
T eval_at(const Poly<T>& p, const Rational& x) {
  T acc = p.zero();
  for (std::size_t i = p.coeffs().size(); i-- > 0;) acc = acc * x + p.coeffs()[i];
  return acc;
}

template <class T>
int sign_at(const Poly<T>& p, const ExtReal& x) {
  if (p.is_zero()) return 0;
  switch (x.kind) {
    case ExtReal::PosInf: return sign_of(p.lead());
    case ExtReal::NegInf: return (p.degree() % 2 == 0 ? 1 : -1) * sign_of(p.lead());
    default: return sign_of(eval_at(p, x.value));
  }
}

template <class T>
Poly<T> positive_normalized(const Poly<T>& p) {
  if (p.is_zero()) return p;
  T inv = one_like(p.lead()) / p.lead();
  if (sign_of(p.lead()) < 0) inv = -inv;
  return p.scaled(inv);
}

template <class T>
std::vector<Poly<T>> sturm_sequence(const Poly<T>& p) {
  std::vector<Poly<T>> seq;
  seq.push_back(positive_normalized(p));
  if (p.degree() <= 0) return seq;
  seq.push_back(positive_normalized(p.derivative()));
  while (seq.back().degree() > 0) {
    Poly<T> r = rem(seq[seq.size() - 2], seq.back());
    if (r.is_zero()) break;
    seq.push_back(positive_normalized(-r));
  }
  return seq;
}

template <class T>
int sign_variations(const std::vector<Poly<T>>& seq, const ExtReal& x) {
  int v = 0, last = 0;
  for (const auto& q : seq) {
    int s = sign_at(q, x);
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

// Number of distinct real roots in the open interval (lo, hi).
template <class T>
int sturm_count_open(const Poly<T>& p, const ExtReal& lo, const ExtReal& hi) {
  if (p.is_zero()) throw Error(ErrorKind::InvalidArgument, "root count of the zero polynomial");
  Poly<T> sf = squarefree_part(p);
  if (sf.degree() <= 0) return 0;
  auto seq = sturm_sequence(sf);
  int c = sign_variations(seq, lo) - sign_variations(seq, hi);
  if (hi.kind == ExtReal::Finite && sign_at(sf, hi) == 0) --c;
  return c;
}

// Cauchy bound: every root lies strictly inside (-B, B).
template <class T>
Rational root_bound(const Poly<T>& p) {
  Poly<T> m = make_monic(p);
  Rational mx = 0;
  for (int i = 0; i < m.degree(); ++i) {
    Rational c = abs_upper(m.coeff(std::size_t(i)));
    if (c > mx) mx = c;
  }
  return Rational(1 + mx);
}

template <class T>
void refine_root(const Poly<T>& sf, RootInterval& r) {
  if (r.exact) return;
  if (r.sign_lo == 0) r.sign_lo = sign_of(eval_at(sf, r.lo));
  Rational mid = (r.lo + r.hi) / 2;
  int s = sign_of(eval_at(sf, mid));
  if (s == 0) {
    r.lo = r.hi = mid;
    r.exact = true;
  } else if (s == r.sign_lo) {
    r.lo = mid;
  } else {
    r.hi = mid;
  }
}

// Isolating intervals (lo, hi) with nonzero endpoint signs, in increasing order.
template <class T>
std::vector<RootInterval> isolate_real_roots(const Poly<T>& p) {
  std::vector<RootInterval> out;
  if (p.is_zero()) throw Error(ErrorKind::InvalidArgument, "root isolation of the zero polynomial");
  Poly<T> sf = squarefree_part(p);
  if (sf.degree() <= 0) return out;
  auto seq = sturm_sequence(sf);
  Rational B = root_bound(sf);
  auto V = [&](const Rational& x) { return sign_variations(seq, ExtReal::finite(x)); };
  struct Job {
    Rational lo, hi;
    int vlo, vhi;
  };
  std::vector<Job> stack{{Rational(-B), B, V(Rational(-B)), V(B)}};
  while (!stack.empty()) {
    Job j = stack.back();
    stack.pop_back();
    int c = j.vlo - j.vhi;
    if (c <= 0) continue;
    if (c == 1) {
      out.push_back({j.lo, j.hi, false, sign_of(eval_at(sf, j.lo))});
      continue;
    }
    // split at a point that is not a root
    Rational w = j.hi - j.lo;
    Rational mid = (j.lo + j.hi) / 2;
    for (int k = 3; sign_of(eval_at(sf, mid)) == 0; ++k) mid = j.lo + w * Rational(k - 1, 2 * k);
    int vm = V(mid);
    stack.push_back({mid, j.hi, vm, j.vhi});
    stack.push_back({j.lo, mid, j.vlo, vm});
  }
  std::sort(out.begin(), out.end(), [](const RootInterval& a, const RootInterval& b) { return a.lo < b.lo; });
  return out;
}

}  // namespace ratcurve
