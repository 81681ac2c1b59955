#pragma once

#include <cmath>

#include "bernlab/conformal/maps.hpp"
#include "bernlab/specialfn/quadrature.hpp"

namespace bernlab::conformal {

namespace detail {

// int_0^inf g(mu) e^{-mu^2} 2 mu dmu / (lambda^2 + mu^2), g smooth.
template <class Real, class G>
Real gaussian_mu_integral(const G& g, const Real& lambda, const Real& mu_alpha,
                          const PrecisionConfig& cfg) {
  using std::exp;
  using std::sqrt;
  const Real l2 = lambda * lambda;
  const auto f = [&](const Real& mu) {
    const Real m2 = mu * mu;
    return g(mu) * exp(-m2) * 2 * mu / (l2 + m2);
  };
  const Real top = sqrt(specialfn::effective_tail_cut(cfg, mu_alpha));
  std::vector<Real> bp;
  for (Real r = lambda / 8; r < top; r *= 2)
    if (r > 0)
      bp.push_back(r);
  return specialfn::integrate_finite(f, Real(0), top, cfg,
                                     specialfn::EndpointSingularity<Real>{mu_alpha},
                                     std::span<const Real>(bp));
}

} // namespace detail

// Laurent limit profile
//   1 + ((-1)^{k+1}/pi) int (mu/lambda)^{2k-1} e^{-(lambda^2+mu^2)} 2 mu dmu/(lambda^2+mu^2).
template <class Real>
Real profile_f12(int k, const Real& lambda, const PrecisionConfig& cfg) {
  using std::exp;
  using std::pow;
  if (k < 1)
    throw InvalidArgument("profile_f12: k must be >= 1");
  if (!(lambda > 0))
    throw InvalidArgument("profile_f12: lambda must be positive, got " + format_real(lambda, 10));
  require_precision<Real>(cfg);
  const int power = 2 * k - 1;
  const auto g = [&](const Real& mu) { return Real(pow(mu / lambda, power)); };
  const Real I = detail::gaussian_mu_integral(g, lambda, Real(power), cfg);
  const Real sign = (k % 2 == 1) ? Real(1) : Real(-1);
  return 1 + sign * exp(-lambda * lambda) * I / pi<Real>();
}

// Same profile through t = mu^2:
//   1 + (-1)^{k+1} e^{-lambda^2} lambda^{1-2k} C_k(-lambda^2),
// C_k the Cauchy integral of t^{k-1/2} e^{-t}.
template <class Real>
Real profile_f12_cauchy(int k, const Real& lambda, const PrecisionConfig& cfg) {
  using std::exp;
  using std::pow;
  if (!(lambda > 0))
    throw InvalidArgument("profile_f12: lambda must be positive");
  const auto c = specialfn::cauchy_integral(hk_density<Real>(k), complex_t<Real>(-lambda * lambda, 0), cfg);
  const Real sign = (k % 2 == 1) ? Real(1) : Real(-1);
  return 1 + sign * exp(-lambda * lambda) * pow(lambda, 1 - 2 * k) * c.real();
}

// Polynomial limit profile
//   lambda^p + (sin(pi p/2)/pi) int mu^p e^{-(lambda^2+mu^2)} 2 mu dmu/(lambda^2+mu^2).
template <class Real>
Real profile_f13(const Real& p, const Real& lambda, const PrecisionConfig& cfg) {
  using std::exp;
  using std::pow;
  using std::sin;
  detail::check_p(p, "profile_f13");
  if (lambda < 0)
    throw InvalidArgument("profile_f13: lambda must be nonnegative, got " + format_real(lambda, 10));
  require_precision<Real>(cfg);
  const Real s = sin(pi<Real>() * p / 2) / pi<Real>();
  if (lambda == 0) {
    // 2 mu^{p-1} e^{-mu^2} dmu = t^{p/2-1} e^{-t} dt.
    const Real alpha = p / 2 - 1;
    const auto f = [&](const Real& t) { return pow(t, alpha) * exp(-t); };
    return s * specialfn::integrate_exp_decay(f, alpha, cfg);
  }
  const auto g = [&](const Real& mu) { return Real(pow(mu, p)); };
  const Real I = detail::gaussian_mu_integral(g, lambda, Real(p + 1), cfg);
  return pow(lambda, p) + s * exp(-lambda * lambda) * I;
}

// Same profile through t = mu^2 and the Cauchy integral of t^{p/2} e^{-t}.
template <class Real>
Real profile_f13_cauchy(const Real& p, const Real& lambda, const PrecisionConfig& cfg) {
  using std::exp;
  using std::pow;
  using std::sin;
  detail::check_p(p, "profile_f13");
  if (!(lambda > 0))
    throw InvalidArgument("profile_f13_cauchy: lambda must be positive");
  const auto c = specialfn::cauchy_integral(specialfn::power_exp_density(Real(p / 2)),
                                            complex_t<Real>(-lambda * lambda, 0), cfg);
  return pow(lambda, p) + sin(pi<Real>() * p / 2) * exp(-lambda * lambda) * c.real();
}

} // namespace bernlab::conformal
