#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <optional>
#include <type_traits>
#include <vector>

#include <boost/math/tools/minima.hpp>

#include "bernlab/precision.hpp"
#include "bernlab/remez/chebyshev.hpp"
#include "bernlab/remez/problem.hpp"

namespace bernlab::remez {

template <class Real>
struct MinimaxSolution {
  ProblemKind kind = ProblemKind::AbsXp;
  Real lo = 0, hi = 1;
  int degree = 0;
  std::vector<Real> coeffs;      // Chebyshev coefficients on [lo, hi]
  Real error_E = 0;              // max |weighted deviation| on the alternation set
  Real levelled_E = 0;           // |E| of the last levelled reference (lower bound)
  std::vector<Real> alternation; // reduced variable, increasing
  std::vector<int> signs;
  std::vector<Real> deviations;  // weighted deviation at each alternation point
  int iterations = 0;
  Real levelling_ratio = 0;
  bool exact = false; // target lies in the approximation space
};

struct SolveOptions {
  int max_iterations = 80;
  int stagnation_window = 6;
  int samples_per_gap = 16;
};

// P(y) in the reduced variable.
template <class Real, class Arg>
Arg eval_reduced(const MinimaxSolution<Real>& sol, const Arg& y) {
  return clenshaw(sol.coeffs, to_unit<Real, Arg>(y, sol.lo, sol.hi));
}

// weight(y) (target(y) - P(y)).
template <class Real>
Real weighted_deviation(const MinimaxSolution<Real>& sol, const MinimaxProblem<Real>& pr,
                        const Real& y) {
  return pr.weight(y) * (pr.target(y) - eval_reduced(sol, y));
}

// The approximant in the original variable x.
template <class Real, class Arg>
Arg eval_solution(const MinimaxSolution<Real>& sol, const MinimaxProblem<Real>& pr, const Arg& x) {
  using std::abs;
  switch (pr.kind) {
  case ProblemKind::AbsXp:
    return eval_reduced(sol, Arg(x * x));
  case ProblemKind::SgnLaurent: {
    if (abs(x) == 0)
      throw PoleError("eval_solution: Laurent form has a pole at x = 0");
    Arg denom = x;
    const Arg x2 = x * x;
    for (int j = 1; j < pr.k; ++j)
      denom *= x2;
    return eval_reduced(sol, x2) / denom;
  }
  case ProblemKind::AkhiezerPower:
    return eval_reduced(sol, x);
  }
  return Arg(0);
}

// Bits needed to resolve the minimax error of `pr` to the levelling
// tolerance: the error decays like decay_rate()^m.
template <class Real>
double required_bits(const MinimaxProblem<Real>& pr, const PrecisionConfig& cfg) {
  using std::log2;
  const double lost = -static_cast<double>(pr.m) * to_double(Real(log2(pr.decay_rate())));
  return lost + cfg.mantissa_bits / 4.0 + 32.0;
}

namespace detail {

template <class Real>
struct Levelled {
  std::vector<Real> coeffs;
  Real E;
};

// Polynomial of degree n = ref.size() - 2 with
//   weight(y_i) (target(y_i) - P(y_i)) = (-1)^i E.
template <class Real>
Levelled<Real> level(const MinimaxProblem<Real>& pr, const std::vector<Real>& ref) {
  const std::size_t npts = ref.size();
  const int n = static_cast<int>(npts) - 2;
  std::vector<Real> s(npts), f(npts), w(npts), lambda(npts);
  for (std::size_t i = 0; i < npts; ++i) {
    s[i] = to_unit<Real, Real>(ref[i], pr.lo, pr.hi);
    f[i] = pr.target(ref[i]);
    w[i] = pr.weight(ref[i]);
  }
  for (std::size_t i = 0; i < npts; ++i) {
    Real prod = 1;
    for (std::size_t j = 0; j < npts; ++j)
      if (j != i)
        prod *= s[i] - s[j];
    lambda[i] = 1 / prod;
  }
  // A degree-n polynomial is annihilated by the (n+1)-st divided difference.
  Real num = 0, den = 0;
  for (std::size_t i = 0; i < npts; ++i) {
    num += lambda[i] * f[i];
    den += lambda[i] * ((i % 2 == 0) ? Real(1) : Real(-1)) / w[i];
  }
  const Real E = num / den;
  std::vector<Real> g(npts);
  for (std::size_t i = 0; i < npts; ++i)
    g[i] = f[i] - ((i % 2 == 0) ? E : Real(-E)) / w[i];

  // Barycentric evaluation at Lobatto points, then DCT to coefficients.
  const auto lob = lobatto_points<Real>(n);
  std::vector<Real> vals(n + 1);
  for (int q = 0; q <= n; ++q) {
    Real numq = 0, denq = 0;
    bool hit = false;
    for (std::size_t i = 0; i < npts; ++i) {
      const Real d = lob[q] - s[i];
      if (d == 0) {
        vals[q] = g[i];
        hit = true;
        break;
      }
      const Real t = lambda[i] / d;
      numq += t * g[i];
      denq += t;
    }
    if (!hit)
      vals[q] = numq / denq;
  }
  return {lobatto_values_to_coeffs(vals), E};
}

template <class Real>
struct Extremum {
  Real y;
  Real e;
};

// Local extrema of the weighted deviation, one per sign lobe.
template <class Real, class Dev>
std::vector<Extremum<Real>> find_lobes(const Dev& dev, const std::vector<Real>& ref, const Real& lo,
                                       const Real& hi, int per_gap) {
  using std::abs;
  std::vector<Real> knots;
  knots.push_back(lo);
  for (const Real& r : ref)
    if (r > knots.back() && r < hi)
      knots.push_back(r);
  knots.push_back(hi);
  std::vector<Real> t;
  for (std::size_t i = 0; i + 1 < knots.size(); ++i)
    for (int q = 0; q < per_gap; ++q)
      t.push_back(knots[i] + (knots[i + 1] - knots[i]) * Real(q) / Real(per_gap));
  t.push_back(hi);
  std::vector<Real> e(t.size());
  for (std::size_t i = 0; i < t.size(); ++i)
    e[i] = dev(t[i]);

  const int bits = std::numeric_limits<Real>::digits / 2;
  std::vector<Extremum<Real>> out;
  std::size_t a = 0;
  while (a < t.size()) {
    const int sg = e[a] >= 0 ? 1 : -1;
    std::size_t b = a;
    while (b + 1 < t.size() && ((e[b + 1] >= 0 ? 1 : -1) == sg))
      ++b;
    std::size_t best = a;
    for (std::size_t i = a; i <= b; ++i)
      if (sg * e[i] > sg * e[best])
        best = i;
    Extremum<Real> ext{t[best], e[best]};
    const Real left = a > 0 ? t[a - 1] : t[a];
    const Real right = b + 1 < t.size() ? t[b + 1] : t[b];
    if (right > left) {
      const auto neg = [&](const Real& y) { return Real(-sg * dev(y)); };
      std::uintmax_t iters = 400;
      const auto r = boost::math::tools::brent_find_minima(neg, left, right, bits, iters);
      if (-r.second > sg * ext.e)
        ext = {r.first, Real(-sg * r.second)};
    }
    out.push_back(ext);
    a = b + 1;
  }
  return out;
}

// Reduce an alternating list of lobes to exactly `want` entries.
template <class Real>
void trim_lobes(std::vector<Extremum<Real>>& lobes, std::size_t want) {
  using std::abs;
  while (lobes.size() > want) {
    const std::size_t excess = lobes.size() - want;
    std::size_t weakest = 0;
    for (std::size_t i = 1; i < lobes.size(); ++i)
      if (abs(lobes[i].e) < abs(lobes[weakest].e))
        weakest = i;
    const bool interior = weakest > 0 && weakest + 1 < lobes.size();
    if (excess >= 2 && interior) {
      // Dropping an interior lobe leaves two same-sign neighbours; drop the
      // smaller of them too.
      const std::size_t nb =
          abs(lobes[weakest - 1].e) < abs(lobes[weakest + 1].e) ? weakest - 1 : weakest + 1;
      const std::size_t first = std::min(weakest, nb);
      lobes.erase(lobes.begin() + first, lobes.begin() + first + 2);
    } else if (abs(lobes.front().e) < abs(lobes.back().e)) {
      lobes.erase(lobes.begin());
    } else {
      lobes.pop_back();
    }
  }
}

template <class Real>
std::vector<Real> chebyshev_reference(const Real& lo, const Real& hi, int npts) {
  using std::cos;
  std::vector<Real> ref(npts);
  const Real mid = (lo + hi) / 2, half = (hi - lo) / 2;
  for (int j = 0; j < npts; ++j)
    ref[j] = mid - half * cos(pi<Real>() * Real(j) / Real(npts - 1));
  ref.front() = lo;
  ref.back() = hi;
  return ref;
}

} // namespace detail

// Weighted Remez exchange.  Starts from the Chebyshev extrema of the reduced
// interval unless `initial_reference` (degree + 2 increasing points) is given.
template <class Real>
using OptionalReference = std::type_identity_t<std::optional<std::vector<Real>>>;

template <class Real>
MinimaxSolution<Real> solve(const MinimaxProblem<Real>& pr, const PrecisionConfig& cfg,
                            const SolveOptions& opt = {},
                            const OptionalReference<Real>& initial_reference = {}) {
  using std::abs;
  require_precision<Real>(cfg);
  const int n = pr.degree;
  const std::size_t npts = static_cast<std::size_t>(n) + 2;

  const double need = required_bits(pr, cfg);
  if (need > cfg.mantissa_bits)
    throw PrecisionError(pr.describe() + ": minimax error near 2^-" +
                         std::to_string(static_cast<int>(need - cfg.mantissa_bits / 4.0 - 32.0)) +
                         " needs about " + std::to_string(static_cast<int>(need)) +
                         " mantissa bits, have " + std::to_string(cfg.mantissa_bits));

  std::vector<Real> ref;
  if (initial_reference) {
    ref = *initial_reference;
    if (ref.size() != npts)
      throw InvalidArgument("initial reference needs " + std::to_string(npts) + " points");
    for (std::size_t i = 0; i < npts; ++i) {
      if (ref[i] < pr.lo || ref[i] > pr.hi || (i > 0 && !(ref[i] > ref[i - 1])))
        throw InvalidArgument("initial reference must be increasing inside the interval");
    }
  } else {
    ref = detail::chebyshev_reference(pr.lo, pr.hi, static_cast<int>(npts));
  }

  const Real lev_tol(cfg.levelling_tolerance());
  const Real eps = std::numeric_limits<Real>::epsilon();
  MinimaxSolution<Real> sol;
  sol.kind = pr.kind;
  sol.lo = pr.lo;
  sol.hi = pr.hi;
  sol.degree = n;

  Real best_ratio = -1;
  int since_best = 0;
  int per_gap = opt.samples_per_gap;
  for (int it = 1; it <= opt.max_iterations; ++it) {
    auto lev = detail::level(pr, ref);
    sol.coeffs = std::move(lev.coeffs);
    sol.levelled_E = abs(lev.E);
    sol.iterations = it;
    const auto dev = [&](const Real& y) { return weighted_deviation(sol, pr, y); };

    // Exact representation: deviation at rounding level everywhere.
    {
      Real worst = 0, scale = 0;
      const int probes = 8 * (n + 2);
      for (int q = 0; q <= probes; ++q) {
        const Real y = pr.lo + (pr.hi - pr.lo) * Real(q) / Real(probes);
        worst = std::max(worst, Real(abs(dev(y))));
        scale = std::max(scale, Real(abs(pr.weight(y) * pr.target(y))));
      }
      if (worst <= 64 * eps * scale * Real(n + 1)) {
        sol.exact = true;
        sol.error_E = 0;
        sol.levelled_E = 0;
        sol.levelling_ratio = 1;
        sol.alternation = ref;
        sol.deviations.assign(npts, Real(0));
        sol.signs.resize(npts);
        for (std::size_t i = 0; i < npts; ++i)
          sol.signs[i] = (i % 2 == 0) ? 1 : -1;
        return sol;
      }
    }

    auto lobes = detail::find_lobes(dev, ref, pr.lo, pr.hi, per_gap);
    if (lobes.size() < npts) {
      if (per_gap < 256) {
        per_gap *= 4;
        --it;
        continue;
      }
      throw NonConvergence(pr.describe() + ": deviation has only " + std::to_string(lobes.size()) +
                               " sign lobes, need " + std::to_string(npts),
                           it, to_double(Real(1 - best_ratio)));
    }
    detail::trim_lobes(lobes, npts);

    Real emin = abs(lobes[0].e), emax = abs(lobes[0].e);
    for (const auto& l : lobes) {
      emin = std::min(emin, Real(abs(l.e)));
      emax = std::max(emax, Real(abs(l.e)));
    }
    const Real ratio = emin / emax;
    for (std::size_t i = 0; i < npts; ++i)
      ref[i] = lobes[i].y;

    if (ratio >= 1 - lev_tol) {
      sol.error_E = emax;
      sol.levelling_ratio = ratio;
      sol.alternation = ref;
      sol.deviations.resize(npts);
      sol.signs.resize(npts);
      for (std::size_t i = 0; i < npts; ++i) {
        sol.deviations[i] = lobes[i].e;
        sol.signs[i] = lobes[i].e >= 0 ? 1 : -1;
      }
      return sol;
    }
    if (ratio > best_ratio) {
      best_ratio = ratio;
      since_best = 0;
    } else if (++since_best >= opt.stagnation_window) {
      throw NonConvergence(pr.describe() + ": exchange stagnated at levelling ratio " +
                               format_real(ratio, 12),
                           it, to_double(Real(1 - best_ratio)));
    }
  }
  throw NonConvergence(pr.describe() + ": no convergence within " +
                           std::to_string(opt.max_iterations) + " iterations",
                       opt.max_iterations, to_double(Real(1 - best_ratio)));
}

} // namespace bernlab::remez
