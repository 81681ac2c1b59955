#pragma once

#include <cmath>

#include "bernlab/precision.hpp"
#include "bernlab/specialfn/gamma.hpp"

namespace bernlab::asymptotics {

namespace detail {

template <class Real>
void check_a(const Real& a, const char* who) {
  if (!(a > 0 && a < 1))
    throw InvalidArgument(std::string(who) + ": a must lie in (0, 1), got " + format_real(a, 10));
}

// |Gamma(-p/2)| has poles at p = 0, 2, 4, ...
template <class Real>
void check_p(const Real& p, const char* who) {
  using std::floor;
  if (p >= 0 && p / 2 == floor(p / 2))
    throw InvalidArgument(std::string(who) + ": p = " + format_real(p, 10) +
                          " is a nonnegative even integer");
}

} // namespace detail

// b = (1 + a^2)/(1 - a^2) and back.
template <class Real>
Real b_from_a(const Real& a) {
  detail::check_a(a, "b_from_a");
  const Real a2 = a * a;
  return (1 + a2) / (1 - a2);
}

template <class Real>
Real a_from_b(const Real& b) {
  using std::sqrt;
  if (!(b > 1))
    throw InvalidArgument("a_from_b: b must exceed 1, got " + format_real(b, 10));
  return sqrt((b - 1) / (b + 1));
}

// sqrt(b^2 - 1) = 2a/(1 - a^2).
template <class Real>
Real sqrt_b2m1(const Real& a) {
  detail::check_a(a, "sqrt_b2m1");
  return 2 * a / (1 - a * a);
}

// b - sqrt(b^2 - 1) = (1 - a)/(1 + a).
template <class Real>
Real akhiezer_ratio(const Real& a) {
  detail::check_a(a, "akhiezer_ratio");
  return (1 - a) / (1 + a);
}

// E_{2m}(p, a) ~ ((1-a)/(1+a))^{m+1} m^{-p/2-1} a^{p/2-1} (1+a)^2 / (2 |Gamma(-p/2)|).
// Negative p is accepted; it is the form reached from the Akhiezer problem.
template <class Real>
Real predict_E_f1(const Real& p, const Real& a, int m, const PrecisionConfig& cfg) {
  using std::pow;
  detail::check_a(a, "predict_E_f1");
  detail::check_p(p, "predict_E_f1");
  if (m < 1)
    throw InvalidArgument("predict_E_f1: m must be >= 1");
  const Real q = (1 - a) / (1 + a);
  const Real M(m);
  return pow(q, m + 1) * pow(M, -p / 2 - 1) * pow(a, p / 2 - 1) * (1 + a) * (1 + a) /
         (2 * specialfn::abs_gamma(Real(-p / 2), cfg));
}

// Same limit written as (a/m)^{p/2} ((1-a)/(1+a))^m (1-a^2) / (2 a m |Gamma(-p/2)|).
template <class Real>
Real predict_E_rearranged(const Real& p, const Real& a, int m, const PrecisionConfig& cfg) {
  using std::pow;
  detail::check_a(a, "predict_E_rearranged");
  detail::check_p(p, "predict_E_rearranged");
  if (m < 1)
    throw InvalidArgument("predict_E_rearranged: m must be >= 1");
  const Real M(m);
  return pow(a / M, p / 2) * pow((1 - a) / (1 + a), m) * (1 - a * a) /
         (2 * a * M * specialfn::abs_gamma(Real(-p / 2), cfg));
}

// B ~ (m - 1/2) log((1+a)/(1-a)) + (k+1/2) log(2m-1) + (k+1/2) log(a/(1-a^2))
//     - log(Gamma(k+1/2)/pi).
template <class Real>
Real predict_B_41(int k, const Real& a, int m, const PrecisionConfig& cfg) {
  using std::log;
  detail::check_a(a, "predict_B_41");
  if (k < 1 || m < 1)
    throw InvalidArgument("predict_B_41: k and m must be >= 1");
  const Real kp = Real(k) + Real(0.5);
  return (Real(m) - Real(0.5)) * log((1 + a) / (1 - a)) + kp * log(Real(2 * m - 1)) +
         kp * log(a / (1 - a * a)) - (specialfn::log_gamma(kp, cfg).value - log(pi<Real>()));
}

// L ~ 1 / cosh(B).
template <class Real>
Real predict_L_41(int k, const Real& a, int m, const PrecisionConfig& cfg) {
  using std::cosh;
  return 1 / cosh(predict_B_41(k, a, m, cfg));
}

// B recovered from a computed Laurent error: arccosh(1/L).
template <class Real>
Real recovered_B(const Real& L) {
  using std::acosh;
  if (!(L > 0 && L <= 1))
    throw InvalidArgument("recovered_B: L must lie in (0, 1], got " + format_real(L, 10));
  return acosh(1 / L);
}

// E_{2l}(-2s, a) = (1 + b)^s E_l[(b + x)^{-s}], b = (1+a^2)/(1-a^2).
template <class Real>
Real akhiezer_convert(const Real& s, const Real& a, int l, const Real& E_akhiezer) {
  using std::pow;
  if (s == 0)
    throw InvalidArgument("akhiezer_convert: s must be nonzero");
  if (l < 0)
    throw InvalidArgument("akhiezer_convert: l must be >= 0");
  return pow(1 + b_from_a(a), s) * E_akhiezer;
}

// E_l ~ (l^{s-1} / |Gamma(s)|) (b - sqrt(b^2-1))^l / (b^2 - 1)^{(s+1)/2}.
template <class Real>
Real predict_akhiezer_61(const Real& s, const Real& b, int l, const PrecisionConfig& cfg) {
  using std::pow;
  using std::sqrt;
  if (!(b > 1))
    throw InvalidArgument("predict_akhiezer_61: b must exceed 1, got " + format_real(b, 10));
  if (s == 0)
    throw InvalidArgument("predict_akhiezer_61: s must be nonzero");
  if (l < 1)
    throw InvalidArgument("predict_akhiezer_61: l must be >= 1");
  const Real b2m1 = b * b - 1;
  return pow(Real(l), s - 1) / specialfn::abs_gamma(s, cfg) * pow(b - sqrt(b2m1), l) /
         pow(b2m1, (s + 1) / 2);
}

} // namespace bernlab::asymptotics
