#pragma once

#include <vector>

#include "ratcurve/poly.hpp"

namespace ratcurve {

// Determinant of the Sylvester matrix of a and b (rows of a first), computed
// by fraction-free Bareiss elimination over the coefficient ring R.
template <class R>
R resultant(const Poly<R>& a, const Poly<R>& b) {
  const R zero = a.zero();
  if (a.is_zero() || b.is_zero()) return zero;
  const int m = a.degree(), n = b.degree();
  if (m == 0 && n == 0) return one_like(zero);
  if (m == 0) {
    R r = one_like(zero);
    for (int i = 0; i < n; ++i) r = r * a.lead();
    return r;
  }
  if (n == 0) {
    R r = one_like(zero);
    for (int i = 0; i < m; ++i) r = r * b.lead();
    return r;
  }
  const int N = m + n;
  std::vector<std::vector<R>> M(std::size_t(N), std::vector<R>(std::size_t(N), zero));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= m; ++j) M[std::size_t(i)][std::size_t(i + j)] = a.coeff(std::size_t(m - j));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j <= n; ++j) M[std::size_t(n + i)][std::size_t(i + j)] = b.coeff(std::size_t(n - j));
  bool negate = false;
  R prev = one_like(zero);
  for (int k = 0; k < N - 1; ++k) {
    if (coeff_is_zero(M[std::size_t(k)][std::size_t(k)])) {
      int piv = -1;
      for (int i = k + 1; i < N; ++i)
        if (!coeff_is_zero(M[std::size_t(i)][std::size_t(k)])) {
          piv = i;
          break;
        }
      if (piv < 0) return zero;
      std::swap(M[std::size_t(k)], M[std::size_t(piv)]);
      negate = !negate;
    }
    const R& p = M[std::size_t(k)][std::size_t(k)];
    for (int i = k + 1; i < N; ++i) {
      for (int j = k + 1; j < N; ++j) {
        R v = p * M[std::size_t(i)][std::size_t(j)] - M[std::size_t(i)][std::size_t(k)] * M[std::size_t(k)][std::size_t(j)];
        M[std::size_t(i)][std::size_t(j)] = exact_div(v, prev);
      }
      M[std::size_t(i)][std::size_t(k)] = zero;
    }
    prev = p;
  }
  R det = M[std::size_t(N - 1)][std::size_t(N - 1)];
  return negate ? R(-det) : det;
}

}  // namespace ratcurve
