#pragma once

#include <cmath>
#include <complex>
#include <optional>

#include "bernlab/precision.hpp"
#include "bernlab/specialfn/cauchy.hpp"
#include "bernlab/specialfn/gamma.hpp"

namespace bernlab::conformal {

// value = linear_part + log_part + cauchy_part.
template <class Real>
struct ConformalSample {
  complex_t<Real> zeta;
  complex_t<Real> value;
  complex_t<Real> linear_part;
  complex_t<Real> log_part;
  complex_t<Real> cauchy_part;
};

// Constants attached to one map.  Fields not computed stay empty.
template <class Real>
struct MapConstants {
  std::optional<int> k;
  std::optional<Real> D_k;
  std::optional<Real> Y_k;
  std::optional<Real> p;
  std::optional<Real> Lambda;
  std::optional<Real> c;
  std::optional<Real> norm_quadrature; // (1/pi) int tau(t)/t dt, should be 1
};

namespace detail {

// log(-zeta), principal branch; cut along [0, inf), real for zeta < 0.
template <class Real>
complex_t<Real> log_minus(const complex_t<Real>& zeta) {
  if (zeta.imag() == 0 && zeta.real() < 0)
    return {log(-zeta.real()), Real(0)};
  return std::log(-zeta);
}

template <class Real>
void check_off_cut(const complex_t<Real>& zeta, const char* who) {
  if (zeta.imag() == 0 && zeta.real() >= 0)
    throw BranchCutError(std::string(who) + ": zeta = " + format_real(zeta.real(), 10) +
                         " lies on the cut [0, inf)");
}

// log of a Cauchy integral value: real for real positive input.
template <class Real>
complex_t<Real> log_cauchy(const complex_t<Real>& c) {
  if (c.imag() == 0 && c.real() > 0)
    return {log(c.real()), Real(0)};
  return std::log(c);
}

} // namespace detail

// t^{k-1/2} e^{-t}; k = 0 gives the H_0 density.
template <class Real>
specialfn::DensitySpec<Real> hk_density(int k) {
  return specialfn::power_exp_density(Real(k) - Real(0.5));
}

// H_k(zeta) = zeta - (k - 1/2) log(-zeta) + log{(1/pi) int t^{k-1/2} e^{-t}/(t-zeta) dt}.
// k = 0 is the H_0 map normalized by H_0(0) = 0.
template <class Real>
ConformalSample<Real> eval_Hk(int k, const complex_t<Real>& zeta, const PrecisionConfig& cfg) {
  if (k < 0)
    throw InvalidArgument("eval_Hk: k must be >= 0, got " + std::to_string(k));
  detail::check_off_cut(zeta, "eval_Hk");
  ConformalSample<Real> s;
  s.zeta = zeta;
  s.linear_part = zeta;
  s.log_part = -(Real(k) - Real(0.5)) * detail::log_minus(zeta);
  s.cauchy_part = detail::log_cauchy(specialfn::cauchy_integral(hk_density<Real>(k), zeta, cfg));
  s.value = s.linear_part + s.log_part + s.cauchy_part;
  return s;
}

template <class Real>
ConformalSample<Real> eval_H0(const complex_t<Real>& zeta, const PrecisionConfig& cfg) {
  return eval_Hk(0, zeta, cfg);
}

template <class Real>
Real eval_Hk_negative(int k, const Real& D, const PrecisionConfig& cfg) {
  return eval_Hk(k, complex_t<Real>(-D, 0), cfg).value.real();
}

// rho_k(t) = (1/pi) Im H_k(t + i0) = (k - 1/2) + arg C(t + i0) / pi.
template <class Real>
Real rho_k(int k, const Real& t, const PrecisionConfig& cfg) {
  using std::atan2;
  const auto b = specialfn::cauchy_boundary(hk_density<Real>(k), t, cfg);
  return Real(k) - Real(0.5) + atan2(b.imag(), b.real()) / pi<Real>();
}

// Closed form log Gamma(k + 1/2) - log pi.
template <class Real>
Real Yk_closed_form(int k, const PrecisionConfig& cfg) {
  if (k < 1)
    throw InvalidArgument("Y_k: k must be >= 1");
  return specialfn::log_gamma(Real(k) + Real(0.5), cfg).value - log(pi<Real>());
}

// Root of H_k(-D) = 0.  H_k(-D) decreases from +inf to -inf, so bisection in
// log D on [1e-6, 1e6] is safe.
template <class Real>
Real find_Dk(int k, const PrecisionConfig& cfg) {
  using std::exp;
  using std::log;
  if (k < 1)
    throw InvalidArgument("find_Dk: k must be >= 1, got " + std::to_string(k));
  Real lo = log(Real("1e-6")), hi = log(Real("1e6"));
  const Real f_lo = eval_Hk_negative(k, Real(exp(lo)), cfg);
  const Real f_hi = eval_Hk_negative(k, Real(exp(hi)), cfg);
  if (!(f_lo > 0 && f_hi < 0))
    throw BracketFailure("find_Dk: H_k(-D) does not change sign on [1e-6, 1e6] (values " +
                         format_real(f_lo, 6) + ", " + format_real(f_hi, 6) + ")");
  const Real tol("1e-13");
  for (int it = 0; it < 200 && hi - lo > tol; ++it) {
    const Real mid = (lo + hi) / 2;
    if (eval_Hk_negative(k, Real(exp(mid)), cfg) > 0)
      lo = mid;
    else
      hi = mid;
  }
  return exp((lo + hi) / 2);
}

// Y_k by Richardson extrapolation of H_k(-R) + R + (k + 1/2) log R over
// R = 1e4, 1e5, 1e6.  The correction is a power series in 1/R.
template <class Real>
Real Yk_asymptotic(int k, const PrecisionConfig& cfg) {
  using std::log;
  if (k < 1)
    throw InvalidArgument("Y_k: k must be >= 1");
  const auto g = [&](const Real& R) {
    return eval_Hk_negative(k, R, cfg) + R + (Real(k) + Real(0.5)) * log(R);
  };
  const Real g4 = g(Real(10000)), g5 = g(Real(100000)), g6 = g(Real(1000000));
  const Real a = (10 * g5 - g4) / 9;
  const Real b = (10 * g6 - g5) / 9;
  return (100 * b - a) / 99;
}

// Y_k = D_k + (k+1/2) log D_k - int_0^inf (rho_k(t) - (k+1/2)) / (t + D_k) dt.
template <class Real>
Real Yk_integral(int k, const PrecisionConfig& cfg, std::optional<Real> D = {}) {
  using std::log;
  if (k < 1)
    throw InvalidArgument("Y_k: k must be >= 1");
  const Real Dk = D ? *D : find_Dk<Real>(k, cfg);
  const Real kp = Real(k) + Real(0.5);
  const auto f = [&](const Real& t) { return (rho_k(k, t, cfg) - kp) / (t + Dk); };
  const Real T = specialfn::effective_tail_cut(cfg, Real(k) - Real(0.5));
  // rho_k - (k - 1/2) behaves like t^{k-1/2} at 0.
  const Real bp[] = {Real(1), Real(4), Real(16)};
  const Real tail = specialfn::integrate_finite(f, Real(0), T, cfg,
                                                specialfn::EndpointSingularity<Real>{Real(0.5)},
                                                std::span<const Real>(bp));
  return Dk + kp * log(Dk) - tail;
}

template <class Real>
MapConstants<Real> hk_constants(int k, const PrecisionConfig& cfg) {
  MapConstants<Real> mc;
  mc.k = k;
  mc.D_k = find_Dk<Real>(k, cfg);
  mc.Y_k = Yk_closed_form<Real>(k, cfg);
  return mc;
}

namespace detail {

template <class Real>
void check_p(const Real& p, const char* who) {
  using std::floor;
  if (!(p > 0))
    throw InvalidArgument(std::string(who) + ": p must be positive");
  if (p / 2 == floor(p / 2))
    throw InvalidArgument(std::string(who) + ": p = " + format_real(p, 10) +
                          " is an even integer; sin(pi p / 2) vanishes");
}

} // namespace detail

// Lambda = |sin(pi p/2)| Gamma(p/2) / pi and c = -log(Lambda |Gamma(-p/2)|),
// with the normalization (1/pi) int tau(t)/t dt = 1 checked by quadrature.
template <class Real>
MapConstants<Real> lambda_constant(const Real& p, const PrecisionConfig& cfg) {
  using std::abs;
  using std::exp;
  using std::log;
  using std::pow;
  using std::sin;
  detail::check_p(p, "lambda_constant");
  const Real sabs = abs(sin(pi<Real>() * p / 2));
  MapConstants<Real> mc;
  mc.p = p;
  const Real Lambda = sabs * specialfn::abs_gamma(Real(p / 2), cfg) / pi<Real>();
  mc.Lambda = Lambda;
  mc.c = -(log(Lambda) + specialfn::log_gamma(Real(-p / 2), cfg).value);
  const Real alpha = p / 2 - 1;
  const auto integrand = [&](const Real& t) { return sabs / Lambda * pow(t, alpha) * exp(-t); };
  mc.norm_quadrature = specialfn::integrate_exp_decay(integrand, alpha, cfg) / pi<Real>();
  return mc;
}

// tau(t) = (|sin(pi p/2)| / Lambda) t^{p/2} e^{-t}.
template <class Real>
specialfn::DensitySpec<Real> w_density(const Real& p, const PrecisionConfig& cfg) {
  using std::abs;
  using std::sin;
  detail::check_p(p, "w density");
  const Real Lambda = *lambda_constant(p, cfg).Lambda;
  return specialfn::power_exp_density(Real(p / 2), Real(abs(sin(pi<Real>() * p / 2)) / Lambda));
}

// w(zeta) = zeta + log{(1/pi) int tau(t)/(t - zeta) dt}.
template <class Real>
ConformalSample<Real> eval_w(const Real& p, const complex_t<Real>& zeta, const PrecisionConfig& cfg) {
  detail::check_off_cut(zeta, "eval_w");
  ConformalSample<Real> s;
  s.zeta = zeta;
  s.linear_part = zeta;
  s.log_part = 0;
  s.cauchy_part = detail::log_cauchy(specialfn::cauchy_integral(w_density(p, cfg), zeta, cfg));
  s.value = s.linear_part + s.log_part + s.cauchy_part;
  return s;
}

} // namespace bernlab::conformal
