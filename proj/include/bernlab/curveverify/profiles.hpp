#pragma once

#include <cmath>
#include <vector>

#include "bernlab/asymptotics/report.hpp"
#include "bernlab/conformal/profiles.hpp"
#include "bernlab/remez/solver.hpp"

namespace bernlab::curveverify {

// AbsXp uses p and a; SgnLaurent uses k and a.
template <class Real>
struct ProfileInput {
  remez::ProblemKind family = remez::ProblemKind::AbsXp;
  Real p = 0;
  int k = 1;
  Real a = 0;
};

template <class Real>
struct ProfileRow {
  int m = 0;
  std::vector<Real> rescaled; // rescaled extremal values on the lambda grid
  Real sup_distance = 0;
  // SgnLaurent: sign of (rescaled - 1) equals sign of (profile - 1) everywhere.
  bool sign_matches = true;
};

template <class Real>
struct ProfileTable {
  ProfileInput<Real> input;
  std::vector<Real> lambda;
  std::vector<Real> profile;
  std::vector<ProfileRow<Real>> rows; // in m_list order
};

// Value of the degree-m extremal function after the limit rescaling:
//   AbsXp:      (m/a)^{p/2} P_m(sqrt(a/m) lambda)
//   SgnLaurent: f(sqrt(2a/(2m-1)) lambda)
template <class Real>
Real rescaled_value(const ProfileInput<Real>& in, const remez::MinimaxSolution<Real>& sol,
                    const remez::MinimaxProblem<Real>& pr, int m, const Real& lambda) {
  using std::pow;
  using std::sqrt;
  if (in.family == remez::ProblemKind::AbsXp) {
    const Real x = sqrt(in.a / m) * lambda;
    return pow(Real(m) / in.a, in.p / 2) * remez::eval_solution(sol, pr, x);
  }
  const Real x = sqrt(2 * in.a / (2 * m - 1)) * lambda;
  return remez::eval_solution(sol, pr, x);
}

template <class Real>
Real limit_profile(const ProfileInput<Real>& in, const Real& lambda, const PrecisionConfig& cfg) {
  if (in.family == remez::ProblemKind::AbsXp)
    return conformal::profile_f13(in.p, lambda, cfg);
  return conformal::profile_f12(in.k, lambda, cfg);
}

template <class Real>
ProfileTable<Real> profile_convergence(const ProfileInput<Real>& in, const std::vector<int>& m_list,
                                       const std::vector<Real>& lambda_grid,
                                       const PrecisionConfig& cfg, unsigned threads = 0) {
  using std::abs;
  if (in.family == remez::ProblemKind::AkhiezerPower)
    throw InvalidArgument("profile_convergence: no limit profile for the Akhiezer family");
  if (lambda_grid.empty() || m_list.empty())
    throw InvalidArgument("profile_convergence: empty m list or lambda grid");
  asymptotics::CompareInput<Real> ci;
  ci.family = in.family;
  ci.p = in.p;
  ci.k = in.k;
  ci.a = in.a;
  for (int m : m_list)
    (void)asymptotics::build_problem(ci, m);

  ProfileTable<Real> tab;
  tab.input = in;
  tab.lambda = lambda_grid;
  for (const Real& l : lambda_grid)
    tab.profile.push_back(limit_profile(in, l, cfg));

  tab.rows.resize(m_list.size());
  asymptotics::parallel_for(m_list.size(), threads, [&](std::size_t i) {
    const int m = m_list[i];
    const auto pr = asymptotics::build_problem(ci, m);
    const auto sol = remez::solve(pr, cfg);
    ProfileRow<Real>& row = tab.rows[i];
    row.m = m;
    for (std::size_t j = 0; j < lambda_grid.size(); ++j) {
      const Real v = rescaled_value(in, sol, pr, m, lambda_grid[j]);
      row.rescaled.push_back(v);
      row.sup_distance = std::max(row.sup_distance, Real(abs(v - tab.profile[j])));
      if (in.family == remez::ProblemKind::SgnLaurent && (v - 1) * (tab.profile[j] - 1) <= 0)
        row.sign_matches = false;
    }
  });
  return tab;
}

} // namespace bernlab::curveverify
