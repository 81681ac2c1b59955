#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <queue>
#include <span>
#include <type_traits>
#include <vector>

#include "bernlab/precision.hpp"

namespace bernlab::specialfn {

// Gauss-Legendre rule on [-1, 1].
template <class Real>
struct GaussRule {
  std::vector<Real> nodes;
  std::vector<Real> weights;
};

namespace detail {

template <class Real>
std::shared_ptr<const GaussRule<Real>> build_gauss_legendre(int n) {
  using std::abs;
  using std::cos;
  auto rule = std::make_shared<GaussRule<Real>>();
  rule->nodes.resize(n);
  rule->weights.resize(n);
  const Real eps = std::numeric_limits<Real>::epsilon();
  const int half = (n + 1) / 2;
  for (int i = 0; i < half; ++i) {
    // Newton on P_n from the usual asymptotic guess.
    Real x = cos(pi<Real>() * (Real(i) + Real(0.75)) / (Real(n) + Real(0.5)));
    Real dp = 0;
    for (int it = 0; it < 100; ++it) {
      Real p0 = 1, p1 = x;
      for (int j = 2; j <= n; ++j) {
        Real p2 = ((2 * j - 1) * x * p1 - (j - 1) * p0) / j;
        p0 = p1;
        p1 = p2;
      }
      if (n == 1) {
        p1 = x;
        p0 = 1;
      }
      dp = n * (x * p1 - p0) / (x * x - 1);
      const Real dx = p1 / dp;
      x -= dx;
      if (abs(dx) <= 4 * eps)
        break;
    }
    const Real w = 2 / ((1 - x * x) * dp * dp);
    rule->nodes[i] = -x;
    rule->weights[i] = w;
    rule->nodes[n - 1 - i] = x;
    rule->weights[n - 1 - i] = w;
  }
  return rule;
}

} // namespace detail

// Cached per (Real, n); safe to call from several threads.
template <class Real>
std::shared_ptr<const GaussRule<Real>> gauss_legendre(int n) {
  if (n < 1)
    throw InvalidArgument("gauss_legendre: order must be positive");
  static std::mutex mutex;
  static std::map<int, std::shared_ptr<const GaussRule<Real>>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(n);
  if (it != cache.end())
    return it->second;
  auto rule = detail::build_gauss_legendre<Real>(n);
  cache.emplace(n, rule);
  return rule;
}

template <class Real, class Value>
struct QuadResult {
  Value value;
  Real error; // self-reported absolute error estimate
  int panels;
};

// Power-law behaviour (t - lo)^alpha of the integrand at the left endpoint.
template <class Real>
struct EndpointSingularity {
  Real alpha = 0;
};

struct AdaptiveLimits {
  int max_panels = 40000;
};

namespace detail {

template <class Real, class Value>
Real magnitude(const Value& v) {
  using std::abs;
  return abs(v);
}

template <class Real, class F>
auto gauss_panel(const F& f, const GaussRule<Real>& rule, const Real& a, const Real& b) {
  using Value = std::invoke_result_t<const F&, const Real&>;
  const Real half = (b - a) / 2;
  const Real mid = (a + b) / 2;
  Value sum = Value(0);
  for (std::size_t i = 0; i < rule.nodes.size(); ++i)
    sum += rule.weights[i] * f(mid + half * rule.nodes[i]);
  return Value(sum * half);
}

template <class Real, class Value>
struct Panel {
  Real a, b;
  Value coarse;  // one rule on [a, b]
  Value refined; // the rule on each half
  Real error;
  bool operator<(const Panel& other) const { return error < other.error; }
};

template <class Real, class F>
auto make_panel(const F& f, const GaussRule<Real>& rule, const Real& a, const Real& b,
                const std::invoke_result_t<const F&, const Real&>& coarse) {
  using Value = std::invoke_result_t<const F&, const Real&>;
  const Real mid = (a + b) / 2;
  Value refined = gauss_panel(f, rule, a, mid) + gauss_panel(f, rule, mid, b);
  Real err = magnitude<Real>(Value(refined - coarse));
  return Panel<Real, Value>{a, b, coarse, refined, err};
}

// Globally adaptive bisection on [lo, hi] with optional interior breakpoints.
template <class Real, class F>
auto adaptive(const F& f, const Real& lo, const Real& hi, std::span<const Real> breakpoints,
              const PrecisionConfig& cfg, const AdaptiveLimits& limits) {
  using Value = std::invoke_result_t<const F&, const Real&>;
  using PanelT = Panel<Real, Value>;
  const auto rule_ptr = gauss_legendre<Real>(cfg.quad_order);
  const GaussRule<Real>& rule = *rule_ptr;

  std::vector<Real> cuts{lo};
  for (const Real& p : breakpoints)
    if (p > lo && p < hi)
      cuts.push_back(p);
  cuts.push_back(hi);
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  std::priority_queue<PanelT> queue;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i)
    queue.push(make_panel(f, rule, cuts[i], cuts[i + 1], gauss_panel(f, rule, cuts[i], cuts[i + 1])));

  const Real tol = Real(cfg.tolerance());
  const Real floor_eps = std::numeric_limits<Real>::epsilon() * 64;
  int panels = static_cast<int>(queue.size());
  while (true) {
    // Totals are rebuilt from the queue so they never drift.
    Value total = Value(0);
    Real err = 0, scale = 0;
    {
      auto copy = queue;
      while (!copy.empty()) {
        total += copy.top().refined;
        err += copy.top().error;
        scale += magnitude<Real>(copy.top().refined);
        copy.pop();
      }
    }
    if (err <= tol * magnitude<Real>(total) || err <= floor_eps * scale || err == 0)
      return QuadResult<Real, Value>{total, err, panels};
    if (panels >= limits.max_panels)
      throw QuadratureDivergence("adaptive quadrature: no convergence after " +
                                 std::to_string(panels) + " panels (error estimate " +
                                 format_real(err, 6) + ")");
    // Split a batch of the worst panels before re-summing.
    const int batch = std::max<int>(1, static_cast<int>(queue.size()) / 8);
    for (int i = 0; i < batch && !queue.empty(); ++i) {
      PanelT worst = queue.top();
      queue.pop();
      const Real mid = (worst.a + worst.b) / 2;
      const Value left = gauss_panel(f, rule, worst.a, mid);
      const Value right = gauss_panel(f, rule, mid, worst.b);
      queue.push(make_panel(f, rule, worst.a, mid, left));
      queue.push(make_panel(f, rule, mid, worst.b, right));
      ++panels;
    }
  }
}

} // namespace detail

// Integral of f over [lo, hi] with adaptive panel bisection until the
// self-reported error falls below 2^(-mantissa_bits/2) relative.
template <class Real, class F>
auto integrate_finite_ex(const F& f, const Real& lo, const Real& hi, const PrecisionConfig& cfg,
                         const EndpointSingularity<Real>& sing = {},
                         std::span<const Real> breakpoints = {}, const AdaptiveLimits& limits = {}) {
  using std::floor;
  using std::pow;
  using Value = std::invoke_result_t<const F&, const Real&>;
  require_precision<Real>(cfg);
  if (!(hi > lo)) {
    if (hi == lo)
      return QuadResult<Real, Value>{Value(0), Real(0), 0};
    throw InvalidArgument("integrate_finite: need lo < hi");
  }
  if (!(sing.alpha > -1))
    throw InvalidArgument("integrate_finite: endpoint exponent must exceed -1");

  // Substitution t = lo + u^beta.  Half-integer exponents use beta = 2, which
  // leaves an integrand analytic in u; other negative exponents use
  // beta = 1/(1+alpha), which cancels the power exactly.
  Real beta = 1;
  const Real twice = 2 * sing.alpha;
  if (twice == floor(twice) && sing.alpha != floor(sing.alpha))
    beta = 2;
  else if (sing.alpha < 0)
    beta = 1 / (1 + sing.alpha);
  if (beta == 1)
    return detail::adaptive(f, lo, hi, breakpoints, cfg, limits);

  const auto g = [&](const Real& u) -> Value {
    const Real ub1 = pow(u, beta - 1);
    return f(lo + ub1 * u) * (beta * ub1);
  };
  std::vector<Real> mapped;
  for (const Real& p : breakpoints)
    if (p > lo && p < hi)
      mapped.push_back(pow(p - lo, 1 / beta));
  return detail::adaptive(g, Real(0), pow(hi - lo, 1 / beta), std::span<const Real>(mapped), cfg,
                          limits);
}

template <class Real, class F>
auto integrate_finite(const F& f, const Real& lo, const Real& hi, const PrecisionConfig& cfg,
                      const EndpointSingularity<Real>& sing = {},
                      std::span<const Real> breakpoints = {}) {
  return integrate_finite_ex(f, lo, hi, cfg, sing, breakpoints).value;
}

// Fixed composite rule: `panels` equal panels, each also evaluated on its two
// halves; the error estimate is the sum of the per-panel discrepancies.
template <class Real, class F>
auto integrate_uniform(const F& f, const Real& lo, const Real& hi, int panels,
                       const PrecisionConfig& cfg) {
  using Value = std::invoke_result_t<const F&, const Real&>;
  if (panels < 1)
    throw InvalidArgument("integrate_uniform: panels must be positive");
  const auto rule_ptr = gauss_legendre<Real>(cfg.quad_order);
  Value total = Value(0);
  Real err = 0;
  const Real h = (hi - lo) / panels;
  for (int i = 0; i < panels; ++i) {
    const Real a = lo + h * i;
    const Real b = (i + 1 == panels) ? hi : lo + h * (i + 1);
    auto p = detail::make_panel(f, *rule_ptr, a, b, detail::gauss_panel(f, *rule_ptr, a, b));
    total += p.refined;
    err += p.error;
  }
  return QuadResult<Real, Value>{total, err, panels};
}

// Truncation point for (0, inf) integrands carrying t^alpha e^{-t}.
template <class Real>
Real effective_tail_cut(const PrecisionConfig& cfg, const Real& alpha) {
  using std::abs;
  const Real by_precision = Real(cfg.mantissa_bits) * boost::math::constants::ln_two<Real>() +
                            20 * abs(alpha);
  return std::max(Real(cfg.tail_cut), by_precision);
}

// Integral over (0, inf) of f, where f(t) ~ t^alpha at 0 and decays like e^{-t}.
template <class Real, class F>
auto integrate_exp_decay(const F& f, const Real& alpha, const PrecisionConfig& cfg,
                         std::span<const Real> breakpoints = {}) {
  const Real T = effective_tail_cut(cfg, alpha);
  return integrate_finite(f, Real(0), T, cfg, EndpointSingularity<Real>{alpha}, breakpoints);
}

} // namespace bernlab::specialfn
