#pragma once

#include <cmath>
#include <string>

#include <boost/math/special_functions/bernoulli.hpp>

#include "bernlab/precision.hpp"

namespace bernlab::specialfn {

template <class Real>
struct LogGamma {
  Real value; // log|Gamma(x)|
  int sign;   // sign of Gamma(x)
};

namespace detail {

// log Gamma(z) for z large enough that the Stirling series converges to full
// working precision before its terms start growing.
template <class Real>
Real stirling_log_gamma(const Real& z) {
  using std::abs;
  using std::log;
  const Real eps = std::numeric_limits<Real>::epsilon();
  Real sum = (z - Real(0.5)) * log(z) - z + log(2 * pi<Real>()) / 2;
  const Real z2 = z * z;
  Real zpow = z; // z^(2j-1)
  Real prev = -1;
  for (int j = 1; j < 4000; ++j) {
    const Real b2j = boost::math::bernoulli_b2n<Real>(j);
    const Real term = b2j / (Real(2 * j) * Real(2 * j - 1) * zpow);
    const Real mag = abs(term);
    if (prev >= 0 && mag > prev)
      throw NumericalError("Stirling series diverged before reaching working precision");
    sum += term;
    if (mag <= eps * abs(sum) / 16)
      return sum;
    prev = mag;
    zpow *= z2;
  }
  throw NumericalError("Stirling series did not converge");
}

} // namespace detail

// log|Gamma(x)| with the sign of Gamma(x).  Positive arguments are shifted up
// until the Stirling series is accurate; negative ones go through reflection.
template <class Real>
LogGamma<Real> log_gamma(const Real& x, const PrecisionConfig& cfg) {
  using std::abs;
  using std::floor;
  using std::log;
  using std::sin;
  require_precision<Real>(cfg);

  if (x <= 0 && x == floor(x))
    throw PoleError("log_gamma: pole at non-positive integer " + format_real(x, 6));

  if (x < 0) {
    // Gamma(x) Gamma(1-x) = pi / sin(pi x); Gamma(1-x) > 0 here.
    const Real n = floor(x + Real(0.5));
    const bool n_even = floor(n / 2) * 2 == n;
    const Real s = sin(pi<Real>() * (x - n)) * (n_even ? 1 : -1);
    const LogGamma<Real> reflected = log_gamma(Real(1) - x, cfg);
    return {log(pi<Real>() / abs(s)) - reflected.value, s > 0 ? 1 : -1};
  }

  const double shift_target = 0.25 * mantissa_digits<Real>() + 10.0;
  Real z = x;
  Real product = 1;
  while (z < shift_target) {
    product *= z;
    z += 1;
  }
  return {detail::stirling_log_gamma(z) - log(product), 1};
}

// |Gamma(x)|.
template <class Real>
Real abs_gamma(const Real& x, const PrecisionConfig& cfg) {
  using std::exp;
  return exp(log_gamma(x, cfg).value);
}

} // namespace bernlab::specialfn
