#pragma once

#include <cmath>
#include <string>

#include "bernlab/precision.hpp"

namespace bernlab::remez {

enum class ProblemKind { AbsXp, SgnLaurent, AkhiezerPower };

inline const char* to_string(ProblemKind kind) {
  switch (kind) {
  case ProblemKind::AbsXp:
    return "absxp";
  case ProblemKind::SgnLaurent:
    return "sgn-laurent";
  case ProblemKind::AkhiezerPower:
    return "akhiezer";
  }
  return "?";
}

// Weighted problem  min_P max_{y in [lo,hi]} |weight(y) (target(y) - P(y))|
// over polynomials P of the given degree in the reduced variable y.
//   AbsXp:       |x|^p on [-1,-a] u [a,1]; y = x^2, target y^{p/2}.
//   SgnLaurent:  sgn x by odd Laurent polynomials of degree (2k-1, 2m-1);
//                y = x^2, target y^{k-1/2}, weight y^{-(k-1/2)}.
//   AkhiezerPower: (b+y)^{-s} on [-1,1]; degree l is stored in m.
template <class Real>
struct MinimaxProblem {
  ProblemKind kind = ProblemKind::AbsXp;
  Real p = 0;
  Real a = 0;
  int k = 0;
  int m = 0;
  Real s = 0;
  Real b = 0;
  Real lo = 0, hi = 1;
  int degree = 0;

  Real target(const Real& y) const {
    using std::pow;
    switch (kind) {
    case ProblemKind::AbsXp:
      return pow(y, p / 2);
    case ProblemKind::SgnLaurent:
      return pow(y, Real(k) - Real(0.5));
    case ProblemKind::AkhiezerPower:
      return pow(b + y, -s);
    }
    return Real(0);
  }

  Real weight(const Real& y) const {
    using std::pow;
    if (kind == ProblemKind::SgnLaurent)
      return pow(y, Real(0.5) - Real(k));
    return Real(1);
  }

  // Per-degree geometric decay factor of the minimax error.
  Real decay_rate() const {
    using std::sqrt;
    if (kind == ProblemKind::AkhiezerPower)
      return b - sqrt(b * b - 1);
    return (1 - a) / (1 + a);
  }

  std::string describe() const {
    std::string out = to_string(kind);
    switch (kind) {
    case ProblemKind::AbsXp:
      out += " p=" + format_real(p, 8) + " a=" + format_real(a, 8) + " m=" + std::to_string(m);
      break;
    case ProblemKind::SgnLaurent:
      out += " k=" + std::to_string(k) + " a=" + format_real(a, 8) + " m=" + std::to_string(m);
      break;
    case ProblemKind::AkhiezerPower:
      out += " s=" + format_real(s, 8) + " b=" + format_real(b, 8) + " l=" + std::to_string(m);
      break;
    }
    return out;
  }
};

namespace detail {

template <class Real>
void check_inner_endpoint(const Real& a) {
  if (!(a > 0 && a < 1))
    throw InvalidArgument("inner endpoint a must lie in (0, 1), got " + format_real(a, 10));
}

template <class Real>
bool is_even_integer(const Real& p) {
  using std::floor;
  const Real half = p / 2;
  return half == floor(half);
}

} // namespace detail

// |x|^p on the two intervals for any real p that is not a nonnegative even
// integer.  Negative p is used for the Akhiezer change of variable.
template <class Real>
MinimaxProblem<Real> build_abs_power(const Real& p, const Real& a, int m) {
  detail::check_inner_endpoint(a);
  if (p >= 0 && detail::is_even_integer(p))
    throw InvalidArgument("abs power: p = " + format_real(p, 10) +
                          " is a nonnegative even integer; |x|^p is itself a polynomial");
  if (m < 0)
    throw InvalidArgument("abs power: m must be >= 0, got " + std::to_string(m));
  MinimaxProblem<Real> pr;
  pr.kind = ProblemKind::AbsXp;
  pr.p = p;
  pr.a = a;
  pr.m = m;
  pr.lo = a * a;
  pr.hi = 1;
  pr.degree = m;
  return pr;
}

template <class Real>
MinimaxProblem<Real> build_absxp(const Real& p, const Real& a, int m) {
  detail::check_inner_endpoint(a);
  if (!(p > 0))
    throw InvalidArgument("absxp: p must be positive, got " + format_real(p, 10));
  if (detail::is_even_integer(p))
    throw InvalidArgument("absxp: p = " + format_real(p, 10) +
                          " is an even integer; |x|^p is itself a polynomial");
  if (!(Real(2 * m) > p))
    throw InvalidArgument("absxp: need 2m > p (m = " + std::to_string(m) + ", p = " +
                          format_real(p, 10) + ")");
  return build_abs_power(p, a, m);
}

template <class Real>
MinimaxProblem<Real> build_sgn_laurent(int k, const Real& a, int m) {
  if (k < 1)
    throw InvalidArgument("sgn-laurent: k must be >= 1, got " + std::to_string(k));
  if (m < 1)
    throw InvalidArgument("sgn-laurent: m must be >= 1, got " + std::to_string(m));
  detail::check_inner_endpoint(a);
  MinimaxProblem<Real> pr;
  pr.kind = ProblemKind::SgnLaurent;
  pr.a = a;
  pr.k = k;
  pr.m = m;
  pr.lo = a * a;
  pr.hi = 1;
  pr.degree = m + k - 1;
  return pr;
}

template <class Real>
MinimaxProblem<Real> build_akhiezer(const Real& s, const Real& b, int l) {
  if (!(b > 1))
    throw InvalidArgument("akhiezer: b must exceed 1, got " + format_real(b, 10));
  if (s == 0)
    throw InvalidArgument("akhiezer: s must be nonzero");
  if (l < 0)
    throw InvalidArgument("akhiezer: degree l must be >= 0, got " + std::to_string(l));
  MinimaxProblem<Real> pr;
  pr.kind = ProblemKind::AkhiezerPower;
  pr.s = s;
  pr.b = b;
  pr.m = l;
  pr.lo = -1;
  pr.hi = 1;
  pr.degree = l;
  return pr;
}

} // namespace bernlab::remez
