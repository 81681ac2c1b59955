#pragma once

#include <cmath>
#include <complex>
#include <functional>
#include <vector>

#include "bernlab/precision.hpp"
#include "bernlab/specialfn/quadrature.hpp"

namespace bernlab::specialfn {

enum class Decay { exponential, none };

// Density tau on (0, inf) with tau(t) ~ t^alpha at 0.  With Decay::none the
// density is taken to vanish beyond cfg.tail_cut.
template <class Real>
struct DensitySpec {
  Real exponent_alpha = 0;
  Decay decay = Decay::exponential;
  std::function<Real(const Real&)> values;

  void validate() const {
    if (!(exponent_alpha > -1))
      throw InvalidArgument("density exponent must exceed -1, got " + format_real(exponent_alpha, 6));
    if (!values)
      throw InvalidArgument("density has no values");
  }
};

// t^alpha e^{-t}.
template <class Real>
DensitySpec<Real> power_exp_density(const Real& alpha, const Real& scale = Real(1)) {
  using std::exp;
  using std::pow;
  return {alpha, Decay::exponential,
          [alpha, scale](const Real& t) { return scale * pow(t, alpha) * exp(-t); }};
}

namespace detail {

template <class Real>
Real support_end(const DensitySpec<Real>& tau, const PrecisionConfig& cfg) {
  return tau.decay == Decay::exponential ? effective_tail_cut(cfg, tau.exponent_alpha)
                                         : Real(cfg.tail_cut);
}

// Geometric breakpoints around `centre` at distances d, 4d, 16d, ...
template <class Real>
std::vector<Real> geometric_breaks(const Real& centre, const Real& d, const Real& lo,
                                   const Real& hi) {
  std::vector<Real> out;
  if (!(d > 0))
    return out;
  if (centre > lo && centre < hi)
    out.push_back(centre);
  for (Real r = d; r < hi - lo; r *= 4) {
    if (centre - r > lo)
      out.push_back(centre - r);
    if (centre + r < hi)
      out.push_back(centre + r);
  }
  return out;
}

} // namespace detail

// (1/pi) * integral_0^inf tau(t) dt / (t - zeta) for zeta off [0, inf).
template <class Real>
complex_t<Real> cauchy_integral(const DensitySpec<Real>& tau, const complex_t<Real>& zeta,
                                const PrecisionConfig& cfg) {
  using std::abs;
  using std::max;
  require_precision<Real>(cfg);
  tau.validate();
  const Real x = zeta.real(), y = zeta.imag();
  if (y == 0 && x >= 0)
    throw BranchCutError("cauchy_integral: zeta = " + format_real(x, 10) + " lies on the cut [0, inf)");
  if (y < 0)
    return std::conj(cauchy_integral(tau, std::conj(zeta), cfg));

  const Real T = detail::support_end(tau, cfg);
  const auto f = [&](const Real& t) -> complex_t<Real> {
    return complex_t<Real>(tau.values(t), 0) / complex_t<Real>(t - x, -y);
  };
  // Resolve the near-pole peak (width ~ Im zeta around Re zeta) or, for
  // zeta near the origin, the scale |zeta|.
  const auto breaks = x > 0 ? detail::geometric_breaks(x, y, Real(0), T)
                            : detail::geometric_breaks(Real(0), abs(zeta), Real(0), T);
  const auto r = integrate_finite(f, Real(0), T, cfg, EndpointSingularity<Real>{tau.exponent_alpha},
                                  std::span<const Real>(breaks));
  return r / pi<Real>();
}

// Boundary value at zeta = xi + i0: (1/pi) PV integral plus i tau(xi).
template <class Real>
complex_t<Real> cauchy_boundary(const DensitySpec<Real>& tau, const Real& xi,
                                const PrecisionConfig& cfg) {
  using std::min;
  require_precision<Real>(cfg);
  tau.validate();
  if (!(xi > 0))
    throw InvalidArgument("cauchy_boundary: xi must be positive, got " + format_real(xi, 10));

  const Real T = detail::support_end(tau, cfg);
  const bool inside = xi < T;
  const Real tau_xi = (tau.decay == Decay::none && !inside) ? Real(0) : tau.values(xi);
  const Real eps = min(Real(cfg.pv_epsilon), xi / 2);
  const auto tau_eff = [&](const Real& t) -> Real {
    return (tau.decay == Decay::none && t > T) ? Real(0) : tau.values(t);
  };
  const auto plain = [&](const Real& t) -> Real { return tau_eff(t) / (t - xi); };
  const EndpointSingularity<Real> at_zero{tau.exponent_alpha};

  Real pv = 0;
  const Real left_end = min(xi - eps, T);
  pv += integrate_finite(plain, Real(0), left_end, cfg, at_zero);
  if (xi - eps < T) {
    // Symmetric window: the subtracted 1/(t - xi) integrates to zero.
    const auto subtracted = [&](const Real& t) -> Real { return (tau_eff(t) - tau_xi) / (t - xi); };
    const Real mid[] = {xi, T};
    pv += integrate_finite(subtracted, xi - eps, xi + eps, cfg, {}, std::span<const Real>(mid));
  }
  if (xi + eps < T)
    pv += integrate_finite(plain, xi + eps, T, cfg);
  return {pv / pi<Real>(), tau_xi};
}

} // namespace bernlab::specialfn
