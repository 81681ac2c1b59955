#pragma once

#include <cmath>
#include <vector>

#include "bernlab/precision.hpp"

namespace bernlab::remez {

// Affine map [lo, hi] -> [-1, 1].  Works for complex y as well.
template <class Real, class Arg>
Arg to_unit(const Arg& y, const Real& lo, const Real& hi) {
  return (Arg(2) * y - Arg(lo + hi)) / Arg(hi - lo);
}

// sum_j c_j T_j(s) by Clenshaw's recurrence.
template <class Real, class Arg>
Arg clenshaw(const std::vector<Real>& c, const Arg& s) {
  Arg b1(0), b2(0);
  const Arg two_s = Arg(2) * s;
  for (std::size_t j = c.size(); j-- > 1;) {
    Arg b0 = two_s * b1 - b2 + Arg(c[j]);
    b2 = b1;
    b1 = b0;
  }
  return s * b1 - b2 + Arg(c.empty() ? Real(0) : c[0]);
}

// Chebyshev-Lobatto points cos(pi j / n), j = 0..n (descending).
template <class Real>
std::vector<Real> lobatto_points(int n) {
  using std::cos;
  std::vector<Real> s(n + 1);
  if (n == 0) {
    s[0] = 0;
    return s;
  }
  for (int j = 0; j <= n; ++j)
    s[j] = cos(pi<Real>() * Real(j) / Real(n));
  return s;
}

// Coefficients of the degree-n interpolant of values sampled at
// lobatto_points(n), via the type-I discrete cosine transform.
template <class Real>
std::vector<Real> lobatto_values_to_coeffs(const std::vector<Real>& f) {
  using std::cos;
  const int n = static_cast<int>(f.size()) - 1;
  if (n == 0)
    return {f[0]};
  std::vector<Real> c(n + 1, Real(0));
  // cos(pi j k / n) is periodic in jk with period 2n.
  std::vector<Real> table(2 * n);
  for (int r = 0; r < 2 * n; ++r)
    table[r] = cos(pi<Real>() * Real(r) / Real(n));
  for (int k = 0; k <= n; ++k) {
    Real sum = 0;
    for (int j = 0; j <= n; ++j) {
      const Real w = (j == 0 || j == n) ? Real(0.5) : Real(1);
      sum += w * f[j] * table[(static_cast<long>(j) * k) % (2 * n)];
    }
    c[k] = sum * 2 / Real(n);
  }
  c[0] /= 2;
  c[n] /= 2;
  return c;
}

// Monomial coefficients in y of sum_j c_j T_j((2y - lo - hi)/(hi - lo)).
// Ill-conditioned for large degree; callers pass a wider type.
template <class Real>
std::vector<Real> chebyshev_to_monomial(const std::vector<Real>& c, const Real& lo, const Real& hi) {
  const std::size_t n = c.size();
  std::vector<Real> out(n, Real(0));
  if (n == 0)
    return out;
  const Real alpha = Real(2) / (hi - lo);
  const Real beta = -(lo + hi) / (hi - lo);
  // T_{j+1} = 2 s T_j - T_{j-1}, s = alpha y + beta, kept as monomial vectors.
  std::vector<Real> t_prev(n, Real(0)), t_cur(n, Real(0)), t_next(n, Real(0));
  t_prev[0] = 1;
  out[0] += c[0];
  if (n == 1)
    return out;
  t_cur[0] = beta;
  t_cur[1] = alpha;
  for (std::size_t i = 0; i < n; ++i)
    out[i] += c[1] * t_cur[i];
  for (std::size_t j = 2; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) {
      Real v = 2 * beta * t_cur[i] - t_prev[i];
      if (i > 0)
        v += 2 * alpha * t_cur[i - 1];
      t_next[i] = v;
    }
    for (std::size_t i = 0; i < n; ++i)
      out[i] += c[j] * t_next[i];
    std::swap(t_prev, t_cur);
    std::swap(t_cur, t_next);
  }
  return out;
}

} // namespace bernlab::remez
