#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "bernlab/error.hpp"
#include "bernlab/precision.hpp"
#include "bernlab/specialfn/hilbert.hpp"

namespace bernlab::conjecture {

// Solves  L sin rho(x) sinh(rho~(x) + x) = x  on [-X, X] for an even rho with
// rho(0) = pi (phi(0) = 0) and rho(+-X) = 0, rho~ the Hilbert transform.
//
// Discretisation: nodes x_i = i h, |i| <= N; rho is unknown at 0 < i < N.
// The equation is collocated at the midpoints (j + 1/2) h, 0 <= j < N, with
// rho averaged over the cell and rho~ from the midpoint rule, in log form
//   log sin rho_bar + log L + log sinh(u) - log x = 0.
// N equations for rho_1..rho_{N-1} and log L, solved by damped Newton.
// Everything runs in double: the discretisation error is far above rounding.

struct TrigeqOptions {
  double X = 40;
  int half_nodes = 1024; // N; the full grid has 2N + 1 nodes
  int max_iterations = 100;
  double tolerance = 1e-12; // on the max collocation residual in log form
  // Returns the best state with `failed` once the residual has not improved
  // for this many consecutive iterations.
  int stall_window = 5;
};

struct TrigeqTraceRow {
  int iteration = 0;
  double residual = 0; // max |L sin rho sinh(u) - x| at collocation points
  double log_residual = 0;
  double L = 0;
  double step = 0; // accepted Newton step fraction
  int domain_rejections = 0;
};

struct ConjectureState {
  double p = 0;
  double X = 0;
  double h = 0;
  std::vector<double> grid;      // full symmetric grid, 2N + 1 nodes
  std::vector<double> rho;       // on grid
  std::vector<double> rho_tilde; // on grid, odd-offset rule
  double L = 0;
  double residual_norm = 0; // max collocation residual of the equation
  int iterations = 0;
  bool converged = false;
  bool failed = false;
  // Trial steps rejected because sin rho_bar <= 0 or u <= 0 somewhere.
  int domain_rejections = 0;
  std::vector<TrigeqTraceRow> trace;
};

namespace detail {

struct Discretisation {
  int N = 0;
  double h = 0;
  Eigen::VectorXd mid;  // (j + 1/2) h
  Eigen::MatrixXd W;    // N x (N + 1): rho~ at midpoints from even rho at nodes 0..N
};

inline Discretisation discretise(double X, int N) {
  Discretisation d;
  d.N = N;
  d.h = X / N;
  d.mid.resize(N);
  d.W.resize(N, N + 1);
  const double inv_pi = 1 / std::numbers::pi;
  for (int j = 0; j < N; ++j) {
    d.mid(j) = (j + 0.5) * d.h;
    for (int i = 0; i <= N; ++i) {
      double w = 1 / (j + 0.5 - i);
      if (i > 0)
        w += 1 / (j + 0.5 + i); // mirror node -i
      d.W(j, i) = inv_pi * w;
    }
  }
  return d;
}

struct Evaluation {
  bool in_domain = false;
  Eigen::VectorXd G;  // log-form residual
  Eigen::VectorXd rb; // cell averages of rho
  Eigen::VectorXd u;
};

inline Evaluation evaluate(const Discretisation& d, const Eigen::VectorXd& rho, double logL) {
  Evaluation e;
  const int N = d.N;
  e.rb = 0.5 * (rho.head(N) + rho.tail(N));
  e.u = d.mid + d.W * rho;
  for (int j = 0; j < N; ++j)
    if (!(e.rb(j) > 0 && e.rb(j) < std::numbers::pi && e.u(j) > 0))
      return e;
  e.in_domain = true;
  e.G.resize(N);
  for (int j = 0; j < N; ++j)
    e.G(j) = std::log(std::sin(e.rb(j))) + logL + std::log(std::sinh(e.u(j))) - std::log(d.mid(j));
  return e;
}

inline double plain_residual(const Discretisation& d, const Evaluation& e, double L) {
  double r = 0;
  for (int j = 0; j < d.N; ++j)
    r = std::max(r, std::abs(L * std::sin(e.rb(j)) * std::sinh(e.u(j)) - d.mid(j)));
  return r;
}

inline void check_p(double p) {
  if (!(p > 0) || std::fmod(p, 2.0) == 0)
    throw InvalidArgument("solve_trigeq: p must be positive and not an even integer");
}

} // namespace detail

// Even extension of node values 0..N to the full grid.
inline std::vector<double> mirror_even(const Eigen::VectorXd& half) {
  const int N = static_cast<int>(half.size()) - 1;
  std::vector<double> full(2 * N + 1);
  for (int i = 0; i <= N; ++i)
    full[N + i] = full[N - i] = half(i);
  return full;
}

// Initial guess pi exp(-sqrt|x|): starts at pi, decays, stays in (0, pi).
inline Eigen::VectorXd default_initial_rho(double X, int N) {
  Eigen::VectorXd r(N + 1);
  for (int i = 0; i <= N; ++i)
    r(i) = std::numbers::pi * std::exp(-std::sqrt(i * X / N));
  r(0) = std::numbers::pi;
  r(N) = 0;
  return r;
}

// p does not enter the equation; it is validated and carried as a label.
inline ConjectureState solve_trigeq(double p, double L_init, const TrigeqOptions& opt = {},
                                    const Eigen::VectorXd* initial_rho = nullptr) {
  detail::check_p(p);
  if (!(L_init > 0))
    throw InvalidArgument("solve_trigeq: L_init must be positive");
  if (!(opt.X > 0) || opt.half_nodes < 4)
    throw InvalidArgument("solve_trigeq: need X > 0 and at least 4 half-grid nodes");
  const int N = opt.half_nodes;
  const auto d = detail::discretise(opt.X, N);

  Eigen::VectorXd rho = initial_rho ? *initial_rho : default_initial_rho(opt.X, N);
  if (rho.size() != N + 1)
    throw InvalidArgument("solve_trigeq: initial rho must have N + 1 node values");
  rho(0) = std::numbers::pi;
  rho(N) = 0;
  double logL = std::log(L_init);

  ConjectureState st;
  st.p = p;
  st.X = opt.X;
  st.h = d.h;

  auto e = detail::evaluate(d, rho, logL);
  if (!e.in_domain)
    throw InvalidArgument("solve_trigeq: initial guess leaves the domain sin rho > 0, u > 0");
  double gnorm = e.G.cwiseAbs().maxCoeff();
  Eigen::VectorXd best_rho = rho;
  double best_logL = logL, best_g = gnorm;
  int since_best = 0;

  Eigen::MatrixXd J(N, N);
  for (int it = 1; it <= opt.max_iterations && gnorm > opt.tolerance; ++it) {
    // dG_j/drho_i = cot(rb_j)/2 [i in {j, j+1}] + coth(u_j) W_ji; dG/dlogL = 1.
    for (int j = 0; j < N; ++j) {
      const double coth = 1 / std::tanh(e.u(j));
      for (int i = 1; i < N; ++i)
        J(j, i - 1) = coth * d.W(j, i);
      const double half_cot = 0.5 / std::tan(e.rb(j));
      if (j >= 1)
        J(j, j - 1) += half_cot;
      if (j + 1 <= N - 1)
        J(j, j) += half_cot;
      J(j, N - 1) = 1;
    }
    const Eigen::VectorXd delta = J.partialPivLu().solve(-e.G);

    double t = 1;
    int rejected = 0;
    detail::Evaluation trial;
    Eigen::VectorXd rho_t;
    double logL_t = logL;
    bool accepted = false;
    while (t > 1e-10) {
      rho_t = rho;
      rho_t.segment(1, N - 1) += t * delta.head(N - 1);
      logL_t = logL + t * delta(N - 1);
      trial = detail::evaluate(d, rho_t, logL_t);
      if (!trial.in_domain) {
        ++rejected;
      } else if (trial.G.cwiseAbs().maxCoeff() < (1 - 1e-4 * t) * gnorm) {
        accepted = true;
        break;
      }
      t /= 2;
    }
    st.domain_rejections += rejected;
    if (!accepted) {
      st.failed = true;
      break;
    }
    rho = rho_t;
    logL = logL_t;
    e = std::move(trial);
    gnorm = e.G.cwiseAbs().maxCoeff();
    st.iterations = it;
    st.trace.push_back({it, detail::plain_residual(d, e, std::exp(logL)), gnorm, std::exp(logL), t,
                        rejected});
    if (gnorm < best_g) {
      best_g = gnorm;
      best_rho = rho;
      best_logL = logL;
      since_best = 0;
    } else if (++since_best >= opt.stall_window) {
      st.failed = true;
      break;
    }
  }
  if (st.failed) {
    rho = best_rho;
    logL = best_logL;
    e = detail::evaluate(d, rho, logL);
    gnorm = best_g;
  }
  st.converged = !st.failed && gnorm <= opt.tolerance;
  st.L = std::exp(logL);
  st.residual_norm = detail::plain_residual(d, e, st.L);
  st.grid.resize(2 * N + 1);
  for (int i = -N; i <= N; ++i)
    st.grid[N + i] = i * d.h;
  st.rho = mirror_even(rho);
  st.rho_tilde = specialfn::hilbert_grid<double>(st.grid, st.rho);
  return st;
}

// Max |L sin rho_bar sinh(rho~ + x) - x| over the cell midpoints of the full
// grid, recomputed from the node values of `st`.
inline double trigeq_residual(const ConjectureState& st) {
  const std::size_t n = st.grid.size();
  const auto rt = specialfn::hilbert_midpoints<double>(st.grid, st.rho);
  double r = 0;
  for (std::size_t j = 0; j + 1 < n; ++j) {
    const double x = 0.5 * (st.grid[j] + st.grid[j + 1]);
    const double rb = 0.5 * (st.rho[j] + st.rho[j + 1]);
    r = std::max(r, std::abs(st.L * std::sin(rb) * std::sinh(rt[j] + x) - x));
  }
  return r;
}

// Same residual through L sin v sinh u = x, u = rho~ + x, v = pi - rho.
// Far out rho ~ e^{-|x|} is lost in pi - rho at double precision while
// sinh u ~ e^{|x|}, so v and its sine are formed in 128 bits.
inline double trigeq_residual_complement(const ConjectureState& st) {
  const std::size_t n = st.grid.size();
  const auto rt = specialfn::hilbert_midpoints<double>(st.grid, st.rho);
  const real128 pi128 = pi<real128>();
  double r = 0;
  for (std::size_t j = 0; j + 1 < n; ++j) {
    const double x = 0.5 * (st.grid[j] + st.grid[j + 1]);
    const double u = rt[j] + x;
    const real128 v = pi128 - (real128(st.rho[j]) + real128(st.rho[j + 1])) / 2;
    const double sv = to_double(real128(sin(v)));
    r = std::max(r, std::abs(st.L * sv * std::sinh(u) - x));
  }
  return r;
}

// L sin rho sinh(rho~ + x) - x at the nodes (rho~ from the odd-offset rule).
// Not imposed by the solver; a discretisation diagnostic.  Near +-X the
// truncation rho = 0 makes it of order |x|.
inline std::vector<double> node_residuals(const ConjectureState& st) {
  std::vector<double> out(st.grid.size());
  for (std::size_t i = 0; i < st.grid.size(); ++i)
    out[i] = st.L * std::sin(st.rho[i]) * std::sinh(st.rho_tilde[i] + st.grid[i]) - st.grid[i];
  return out;
}

// (L_N - L_2N) / (L_2N - L_4N) for three runs with N, 2N, 4N half-grid nodes.
inline double discretisation_ratio(double L_N, double L_2N, double L_4N) {
  const double den = L_2N - L_4N;
  if (den == 0)
    return std::numeric_limits<double>::infinity();
  return (L_N - L_2N) / den;
}

} // namespace bernlab::conjecture
