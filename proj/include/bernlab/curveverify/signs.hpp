#pragma once

#include <cmath>
#include <vector>

#include "bernlab/remez/chebyshev.hpp"
#include "bernlab/remez/solver.hpp"

namespace bernlab::curveverify {

template <class Real>
struct SignPatternReport {
  Real t = 0;
  // Coefficients of P(x) - x^p - tE ordered by exponent; the -1 for x^p is
  // inserted between x^{2j} and x^{2j+2}.
  std::vector<Real> coefficients;
  std::vector<Real> exponents;
  int sign_changes = 0;
  int expected_changes = 0;
  int first_sign = 0;
  int last_sign = 0;
  int expected_first_sign = 0;
  int expected_last_sign = 0;
  bool passed = false;
};

inline constexpr int max_sign_pattern_degree = 16;

namespace detail {

template <class Real>
int sign_of(const Real& x) {
  return x > 0 ? 1 : (x < 0 ? -1 : 0);
}

} // namespace detail

// Gantmacher-Krein check: P_m(x) - x^p - tE, |t| < 1, has exactly m + 1
// coefficient sign changes.  The Chebyshev-to-monomial conversion loses
// about 2m log2(1 + 2/(1 - a^2)) bits and is done in doubled precision.
template <class Real>
SignPatternReport<Real> sign_pattern_check(const remez::MinimaxSolution<Real>& sol,
                                           const remez::MinimaxProblem<Real>& pr, const Real& t) {
  using std::floor;
  using W = wider_t<Real>;
  if (pr.kind != remez::ProblemKind::AbsXp)
    throw InvalidArgument("sign_pattern_check: needs an AbsXp solution");
  if (!(t > -1 && t < 1))
    throw InvalidArgument("sign_pattern_check: t must lie in (-1, 1), got " + format_real(t, 10));
  const int m = pr.degree;
  if (m > max_sign_pattern_degree)
    throw PrecisionError("sign_pattern_check: monomial conversion is too ill-conditioned for m = " +
                         std::to_string(m) + " (limit " +
                         std::to_string(max_sign_pattern_degree) + ")");

  std::vector<W> cw(sol.coeffs.begin(), sol.coeffs.end());
  const std::vector<W> mono = remez::chebyshev_to_monomial(cw, W(sol.lo), W(sol.hi));

  SignPatternReport<Real> rep;
  rep.t = t;
  bool inserted = false;
  const auto push = [&](const Real& c, const Real& e) {
    rep.coefficients.push_back(c);
    rep.exponents.push_back(e);
  };
  for (int j = 0; j < static_cast<int>(mono.size()); ++j) {
    if (!inserted && pr.p < 2 * j) {
      push(Real(-1), pr.p);
      inserted = true;
    }
    W c = mono[j];
    if (j == 0)
      c -= W(t) * W(sol.error_E);
    push(Real(c), Real(2 * j));
  }
  if (!inserted)
    push(Real(-1), pr.p);

  int last = 0;
  for (const Real& c : rep.coefficients) {
    const int s = detail::sign_of(c);
    if (s == 0)
      continue;
    if (last != 0 && s != last)
      ++rep.sign_changes;
    last = s;
  }
  rep.first_sign = detail::sign_of(rep.coefficients.front());
  rep.last_sign = detail::sign_of(rep.coefficients.back());
  const int half = static_cast<int>(to_double(Real(floor(pr.p / 2))));
  rep.expected_first_sign = half % 2 == 0 ? 1 : -1;
  rep.expected_last_sign = (half + m + 1) % 2 == 0 ? 1 : -1;
  rep.expected_changes = m + 1;
  rep.passed = rep.sign_changes == rep.expected_changes &&
               rep.first_sign == rep.expected_first_sign && rep.last_sign == rep.expected_last_sign;
  return rep;
}

} // namespace bernlab::curveverify
