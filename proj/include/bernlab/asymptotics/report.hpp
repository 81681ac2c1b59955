#pragma once

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <optional>
#include <thread>
#include <vector>

#include "bernlab/asymptotics/predict.hpp"
#include "bernlab/remez/problem.hpp"
#include "bernlab/remez/solver.hpp"

namespace bernlab::asymptotics {

using remez::ProblemKind;

// One family and a degree range.  Fields not used by the family are ignored:
//   AbsXp: p, a.   SgnLaurent: k, a.   AkhiezerPower: s, b (degree is l).
template <class Real>
struct CompareInput {
  ProblemKind family = ProblemKind::AbsXp;
  Real p = 0;
  int k = 1;
  Real s = 0;
  Real a = 0;
  Real b = 0;
  int m_first = 1;
  int m_last = 1;
  bool rearranged_form = false; // AbsXp only: use the rearranged predictor
};

template <class Real>
struct SweepRow {
  int m = 0;
  Real computed_E = 0;
  Real predicted_E = 0;
  Real ratio = 0; // computed / predicted
  Real log_computed = 0;
  Real log_predicted = 0;
  std::optional<Real> B_gap; // SgnLaurent: arccosh(1/L) - predicted B
  int iterations = 0;
  Real levelling_ratio = 0;
};

template <class Real>
struct Trend {
  Real final_ratio = 0;
  std::optional<Real> final_B_gap;
  // |log ratio| (or |B gap|) non-increasing from monotone_from to the end.
  int monotone_from = 0;
  bool monotone = false; // over the whole sweep
  bool within_half_to_double = false;
  // Last step of log E against the geometric rate log(decay).
  Real final_log_step = 0;
  Real expected_log_step = 0;
};

template <class Real>
struct AsymptoticsReport {
  CompareInput<Real> input;
  std::vector<SweepRow<Real>> sweep; // ordered by m
  Trend<Real> trend;
};

template <class Real>
remez::MinimaxProblem<Real> build_problem(const CompareInput<Real>& in, int m) {
  switch (in.family) {
  case ProblemKind::AbsXp:
    return remez::build_absxp(in.p, in.a, m);
  case ProblemKind::SgnLaurent:
    return remez::build_sgn_laurent(in.k, in.a, m);
  case ProblemKind::AkhiezerPower:
    return remez::build_akhiezer(in.s, in.b, m);
  }
  throw InvalidArgument("unknown problem family");
}

template <class Real>
Real predicted_error(const CompareInput<Real>& in, int m, const PrecisionConfig& cfg) {
  switch (in.family) {
  case ProblemKind::AbsXp:
    return in.rearranged_form ? predict_E_rearranged(in.p, in.a, m, cfg) : predict_E_f1(in.p, in.a, m, cfg);
  case ProblemKind::SgnLaurent:
    return predict_L_41(in.k, in.a, m, cfg);
  case ProblemKind::AkhiezerPower:
    return predict_akhiezer_61(in.s, in.b, m, cfg);
  }
  throw InvalidArgument("unknown problem family");
}

// Runs fn(i) for i in [0, n) on up to `threads` workers (0 = hardware).
// The first exception in index order is rethrown after all workers finish.
template <class Fn>
void parallel_for(std::size_t n, unsigned threads, Fn&& fn) {
  if (threads == 0)
    threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, n));
  std::vector<std::exception_ptr> errors(n);
  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < n;) {
      try {
        fn(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t)
      pool.emplace_back(worker);
  }
  for (auto& e : errors)
    if (e)
      std::rethrow_exception(e);
}

template <class Real>
Trend<Real> summarize(const std::vector<SweepRow<Real>>& rows, const Real& decay) {
  using std::abs;
  using std::log;
  Trend<Real> t;
  if (rows.empty())
    return t;
  const auto distance = [](const SweepRow<Real>& r) {
    return r.B_gap ? Real(abs(*r.B_gap)) : Real(abs(log(r.ratio)));
  };
  std::size_t start = rows.size() - 1;
  while (start > 0 && distance(rows[start - 1]) >= distance(rows[start]))
    --start;
  t.monotone_from = rows[start].m;
  t.monotone = start == 0;
  t.final_ratio = rows.back().ratio;
  t.final_B_gap = rows.back().B_gap;
  t.within_half_to_double = std::all_of(rows.begin(), rows.end(), [](const SweepRow<Real>& r) {
    return r.ratio >= Real(0.5) && r.ratio <= 2;
  });
  t.expected_log_step = log(decay);
  if (rows.size() >= 2)
    t.final_log_step = rows.back().log_computed - rows[rows.size() - 2].log_computed;
  return t;
}

// Solves every degree in the range (in parallel) and sets each error beside
// its asymptotic prediction.
template <class Real>
AsymptoticsReport<Real> compare(const CompareInput<Real>& in, const PrecisionConfig& cfg,
                                unsigned threads = 0, const remez::SolveOptions& opt = {}) {
  using std::log;
  if (in.m_first < 1 || in.m_last < in.m_first)
    throw InvalidArgument("compare: need 1 <= m_first <= m_last");
  require_precision<Real>(cfg);
  // Validate every instance and the precision budget before spending time.
  for (int m = in.m_first; m <= in.m_last; ++m) {
    const auto pr = build_problem(in, m);
    if (remez::required_bits(pr, cfg) > cfg.mantissa_bits)
      throw PrecisionError("compare: " + pr.describe() + " exceeds the precision budget of " +
                           std::to_string(cfg.mantissa_bits) + " bits");
  }
  // Lazily initialised constants are filled in before the workers start.
  (void)pi<Real>();
  (void)predicted_error(in, in.m_first, cfg);

  const std::size_t n = static_cast<std::size_t>(in.m_last - in.m_first + 1);
  AsymptoticsReport<Real> rep;
  rep.input = in;
  rep.sweep.resize(n);
  parallel_for(n, threads, [&](std::size_t i) {
    const int m = in.m_first + static_cast<int>(i);
    const auto pr = build_problem(in, m);
    const auto sol = remez::solve(pr, cfg, opt);
    SweepRow<Real>& r = rep.sweep[i];
    r.m = m;
    r.computed_E = sol.error_E;
    r.predicted_E = predicted_error(in, m, cfg);
    r.ratio = r.computed_E / r.predicted_E;
    r.log_computed = log(r.computed_E);
    r.log_predicted = log(r.predicted_E);
    r.iterations = sol.iterations;
    r.levelling_ratio = sol.levelling_ratio;
    if (in.family == ProblemKind::SgnLaurent)
      r.B_gap = recovered_B(r.computed_E) - predict_B_41(in.k, in.a, m, cfg);
  });
  rep.trend = summarize(rep.sweep, build_problem(in, in.m_first).decay_rate());
  return rep;
}

} // namespace bernlab::asymptotics
