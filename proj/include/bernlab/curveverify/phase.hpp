#pragma once

#include <cmath>
#include <complex>
#include <vector>

#include "bernlab/remez/solver.hpp"

namespace bernlab::curveverify {

// phi(iy) = u + i v along the imaginary axis.
template <class Real>
struct PhaseTrace {
  std::vector<Real> y_grid;
  std::vector<Real> u;
  std::vector<Real> v;
  // phi = sign * acos(g) + 2 pi winding at each node.
  std::vector<int> branch_windings;
  std::vector<int> branch_signs;
  int refinements = 0; // extra points inserted to keep u continuous
  Real E = 0;
  Real p = 0;
};

namespace detail {

inline int floor_half(double p) { return static_cast<int>(std::floor(p / 2)); }

// (-1)^{[p/2]} (P(z) - z^p) / E at z = iy, with (iy)^p = y^p e^{i pi p / 2}.
template <class Real>
complex_t<Real> phase_argument(const remez::MinimaxSolution<Real>& sol, const Real& p,
                               const Real& y) {
  using std::cos;
  using std::pow;
  using std::sin;
  const Real Py = remez::eval_reduced(sol, Real(-y * y));
  const Real yp = pow(y, p);
  const Real half_angle = pi<Real>() * p / 2;
  const complex_t<Real> diff(Py - yp * cos(half_angle), -yp * sin(half_angle));
  const Real sign = floor_half(to_double(p)) % 2 == 0 ? Real(1) : Real(-1);
  return diff * (sign / sol.error_E);
}

// Principal complex arccos (Kahan).  std::acos on non-builtin types goes
// through pi/2 - asin(z) with a long double pi/2, which caps the absolute
// accuracy of the real part near 1e-19.
template <class Real>
complex_t<Real> acos_principal(const complex_t<Real>& z) {
  using std::asinh;
  using std::atan2;
  const complex_t<Real> one(1, 0);
  const complex_t<Real> s1 = std::sqrt(one - z);
  const complex_t<Real> s2 = std::sqrt(one + z);
  return {2 * atan2(s1.real(), s2.real()), asinh((std::conj(s2) * s1).imag())};
}

template <class Real>
struct Branch {
  complex_t<Real> phi;
  int sign = 1;
  int winding = 0;
};

// The preimage of g under cos nearest to `prev`: candidates are
// +-acos(g) + 2 pi n.
template <class Real>
Branch<Real> nearest_branch(const complex_t<Real>& g, const complex_t<Real>& prev) {
  using std::floor;
  using std::round;
  const complex_t<Real> base = acos_principal(g);
  const Real two_pi = 2 * pi<Real>();
  Branch<Real> best;
  Real best_dist = -1;
  for (int sign : {1, -1}) {
    const complex_t<Real> c = base * Real(sign);
    const int n = static_cast<int>(to_double(Real(round((prev.real() - c.real()) / two_pi))));
    for (int w : {n - 1, n, n + 1}) {
      const complex_t<Real> cand = c + complex_t<Real>(two_pi * w, 0);
      const Real d = abs(cand - prev);
      if (best_dist < 0 || d < best_dist) {
        best_dist = d;
        best = {cand, sign, w};
      }
    }
  }
  return best;
}

} // namespace detail

// Continues phi(iy) = acos((-1)^{[p/2]} (P(iy) - (iy)^p) / E) along the
// grid from phi(0) = i arccosh(...), the image of the segment (0, a).
// Steps with |delta u| >= pi/2 are bisected (up to 2^12 pieces) before
// giving up.
template <class Real>
PhaseTrace<Real> reconstruct_phase(const remez::MinimaxSolution<Real>& sol,
                                   const remez::MinimaxProblem<Real>& pr,
                                   const std::vector<Real>& y_grid) {
  using std::abs;
  if (pr.kind != remez::ProblemKind::AbsXp)
    throw InvalidArgument("reconstruct_phase: needs an AbsXp solution, got " +
                          std::string(remez::to_string(pr.kind)));
  if (!(sol.error_E > 0))
    throw InvalidArgument("reconstruct_phase: minimax error is zero");
  if (y_grid.empty())
    throw InvalidArgument("reconstruct_phase: empty grid");
  for (std::size_t i = 0; i < y_grid.size(); ++i)
    if (!(y_grid[i] > 0) || (i > 0 && !(y_grid[i] > y_grid[i - 1])))
      throw InvalidArgument("reconstruct_phase: grid must be positive and increasing");

  PhaseTrace<Real> tr;
  tr.E = sol.error_E;
  tr.p = pr.p;
  const Real half_pi = pi<Real>() / 2;

  // At y = 0 the argument is real and beyond 1 in absolute value; phi(0) is
  // on the imaginary axis with v > 0.
  complex_t<Real> prev(0, abs(detail::acos_principal(detail::phase_argument(sol, pr.p, Real(0))).imag()));
  Real y_prev = 0;
  for (const Real& y : y_grid) {
    std::vector<Real> todo{y};
    int pieces = 0;
    detail::Branch<Real> br;
    while (!todo.empty()) {
      const Real target = todo.back();
      br = detail::nearest_branch(detail::phase_argument(sol, pr.p, target), prev);
      if (abs(br.phi.real() - prev.real()) >= half_pi) {
        if (++pieces > 4096)
          throw BranchTrackingFailure("reconstruct_phase: u jumps by more than pi/2 near y = " +
                                      format_real(target, 10) + " even after refinement");
        todo.push_back((y_prev + target) / 2);
        ++tr.refinements;
        continue;
      }
      prev = br.phi;
      y_prev = target;
      todo.pop_back();
    }
    tr.y_grid.push_back(y);
    tr.u.push_back(br.phi.real());
    tr.v.push_back(br.phi.imag());
    tr.branch_signs.push_back(br.sign);
    tr.branch_windings.push_back(br.winding);
  }
  return tr;
}

// (E sin u sinh v - |sin(pi p/2)| y^p) / (|sin(pi p/2)| y^p) at each node.
// For large y, u = pi - delta with delta ~ e^{-v}; once delta drops below
// the absolute rounding of u the residual measures nothing, so keep
// v well under bits * log(2) (y up to ~100 for m near 8 at 256 bits).
template <class Real>
std::vector<Real> curve_residual(const PhaseTrace<Real>& tr, const Real& E, const Real& p) {
  using std::abs;
  using std::pow;
  using std::sin;
  using std::floor;
  using std::sinh;
  if (p / 2 == floor(p / 2))
    throw InvalidArgument("curve_residual: p is an even integer");
  const Real s = abs(sin(pi<Real>() * p / 2));
  std::vector<Real> out;
  out.reserve(tr.y_grid.size());
  for (std::size_t i = 0; i < tr.y_grid.size(); ++i) {
    const Real rhs = s * pow(tr.y_grid[i], p);
    out.push_back((E * sin(tr.u[i]) * sinh(tr.v[i]) - rhs) / rhs);
  }
  return out;
}

template <class Real>
Real max_abs(const std::vector<Real>& v) {
  using std::abs;
  Real m = 0;
  for (const Real& x : v)
    m = std::max(m, Real(abs(x)));
  return m;
}

} // namespace bernlab::curveverify
