#pragma once

#include <charconv>
#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"

#include "bernlab/asymptotics/report.hpp"
#include "bernlab/conformal/maps.hpp"
#include "bernlab/conjecture/trigeq.hpp"
#include "bernlab/curveverify/phase.hpp"
#include "bernlab/curveverify/profiles.hpp"
#include "bernlab/curveverify/signs.hpp"
#include "bernlab/remez/solver.hpp"

// Report serialisation.  Every real is written as a decimal string with all
// the digits its type carries, so reports round-trip and identical runs give
// identical bytes.  The layout is described in docs/report-schema.md.
namespace bernlab::io {

using json = nlohmann::ordered_json;

inline constexpr const char* schema_tag = "bernlab.report/1";

template <class Real>
std::string num(const Real& x) {
  return format_real(x);
}

// Shortest round-trip form for doubles.
inline std::string num(double x) {
  char buf[64];
  const auto r = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, r.ptr);
}

template <class Real>
json nums(const std::vector<Real>& v) {
  json a = json::array();
  for (const auto& x : v)
    a.push_back(num(x));
  return a;
}

template <class Real>
json complex_num(const complex_t<Real>& z) {
  return json{{"re", num(z.real())}, {"im", num(z.imag())}};
}

inline json precision_json(const PrecisionConfig& cfg, int arithmetic_bits) {
  return json{{"mantissa_bits", cfg.mantissa_bits},
              {"arithmetic_bits", arithmetic_bits},
              {"quad_order", cfg.quad_order},
              {"pv_epsilon", num(cfg.pv_epsilon)},
              {"tail_cut", num(cfg.tail_cut)}};
}

// Top-level envelope shared by all commands.
inline json envelope(const std::string& command, json input, json precision) {
  return json{{"schema", schema_tag},
              {"command", command},
              {"input", std::move(input)},
              {"precision", std::move(precision)},
              {"status", "ok"}};
}

template <class Real>
json to_json(const remez::MinimaxProblem<Real>& pr) {
  json j{{"kind", remez::to_string(pr.kind)}, {"lo", num(pr.lo)}, {"hi", num(pr.hi)},
         {"degree", pr.degree}};
  switch (pr.kind) {
  case remez::ProblemKind::AbsXp:
    j["p"] = num(pr.p);
    j["a"] = num(pr.a);
    j["m"] = pr.m;
    break;
  case remez::ProblemKind::SgnLaurent:
    j["k"] = pr.k;
    j["a"] = num(pr.a);
    j["m"] = pr.m;
    break;
  case remez::ProblemKind::AkhiezerPower:
    j["s"] = num(pr.s);
    j["b"] = num(pr.b);
    j["l"] = pr.m;
    break;
  }
  return j;
}

template <class Real>
json to_json(const remez::MinimaxSolution<Real>& sol) {
  return json{{"error_E", num(sol.error_E)},
              {"levelled_E", num(sol.levelled_E)},
              {"levelling_ratio", num(sol.levelling_ratio)},
              {"iterations", sol.iterations},
              {"exact", sol.exact},
              {"alternation", nums(sol.alternation)},
              {"signs", sol.signs},
              {"deviations", nums(sol.deviations)},
              {"chebyshev_coefficients", nums(sol.coeffs)}};
}

template <class Real>
json to_json(const asymptotics::AsymptoticsReport<Real>& rep, bool with_prediction = true) {
  json rows = json::array();
  for (const auto& r : rep.sweep) {
    json row{{"m", r.m}, {"E", num(r.computed_E)}, {"log_E", num(r.log_computed)}};
    if (with_prediction) {
      row["predicted"] = num(r.predicted_E);
      row["log_predicted"] = num(r.log_predicted);
      row["ratio"] = num(r.ratio);
      if (r.B_gap)
        row["B_gap"] = num(*r.B_gap);
    }
    row["iterations"] = r.iterations;
    row["levelling_ratio"] = num(r.levelling_ratio);
    rows.push_back(std::move(row));
  }
  json j{{"family", remez::to_string(rep.input.family)}, {"sweep", std::move(rows)}};
  json t{{"final_log_step", num(rep.trend.final_log_step)},
         {"expected_log_step", num(rep.trend.expected_log_step)}};
  if (with_prediction) {
    t["final_ratio"] = num(rep.trend.final_ratio);
    if (rep.trend.final_B_gap)
      t["final_B_gap"] = num(*rep.trend.final_B_gap);
    t["monotone"] = rep.trend.monotone;
    t["monotone_from"] = rep.trend.monotone_from;
    t["within_half_to_double"] = rep.trend.within_half_to_double;
  }
  j["trend"] = std::move(t);
  return j;
}

template <class Real>
json to_json(const curveverify::PhaseTrace<Real>& tr, const std::vector<Real>& residual) {
  return json{{"y", nums(tr.y_grid)},
              {"u", nums(tr.u)},
              {"v", nums(tr.v)},
              {"branch_windings", tr.branch_windings},
              {"branch_signs", tr.branch_signs},
              {"refinements", tr.refinements},
              {"relative_residual", nums(residual)},
              {"max_relative_residual", num(curveverify::max_abs(residual))}};
}

template <class Real>
json to_json(const curveverify::SignPatternReport<Real>& rep) {
  return json{{"t", num(rep.t)},
              {"sign_changes", rep.sign_changes},
              {"expected_changes", rep.expected_changes},
              {"first_sign", rep.first_sign},
              {"expected_first_sign", rep.expected_first_sign},
              {"last_sign", rep.last_sign},
              {"expected_last_sign", rep.expected_last_sign},
              {"passed", rep.passed},
              {"exponents", nums(rep.exponents)},
              {"coefficients", nums(rep.coefficients)}};
}

template <class Real>
json to_json(const curveverify::ProfileTable<Real>& tab) {
  json rows = json::array();
  for (const auto& r : tab.rows) {
    json row{{"m", r.m}, {"sup_distance", num(r.sup_distance)}, {"rescaled", nums(r.rescaled)}};
    if (tab.input.family == remez::ProblemKind::SgnLaurent)
      row["sign_matches"] = r.sign_matches;
    rows.push_back(std::move(row));
  }
  return json{{"family", remez::to_string(tab.input.family)},
              {"lambda", nums(tab.lambda)},
              {"profile", nums(tab.profile)},
              {"rows", std::move(rows)}};
}

template <class Real>
json to_json(const conformal::ConformalSample<Real>& s) {
  return json{{"zeta", complex_num(s.zeta)},
              {"value", complex_num(s.value)},
              {"linear_part", complex_num(s.linear_part)},
              {"log_part", complex_num(s.log_part)},
              {"cauchy_part", complex_num(s.cauchy_part)}};
}

template <class Real>
json to_json(const conformal::MapConstants<Real>& mc) {
  json j = json::object();
  if (mc.k)
    j["k"] = *mc.k;
  if (mc.D_k)
    j["D_k"] = num(*mc.D_k);
  if (mc.Y_k)
    j["Y_k"] = num(*mc.Y_k);
  if (mc.p)
    j["p"] = num(*mc.p);
  if (mc.Lambda)
    j["Lambda"] = num(*mc.Lambda);
  if (mc.c)
    j["c"] = num(*mc.c);
  if (mc.norm_quadrature)
    j["norm_quadrature"] = num(*mc.norm_quadrature);
  return j;
}

inline json to_json(const conjecture::ConjectureState& st, bool with_profile) {
  json trace = json::array();
  for (const auto& r : st.trace)
    trace.push_back(json{{"iteration", r.iteration},
                         {"residual", num(r.residual)},
                         {"log_residual", num(r.log_residual)},
                         {"L", num(r.L)},
                         {"step", num(r.step)},
                         {"domain_rejections", r.domain_rejections}});
  json j{{"p", num(st.p)},
         {"X", num(st.X)},
         {"h", num(st.h)},
         {"nodes", st.grid.size()},
         {"L", num(st.L)},
         {"residual_norm", num(st.residual_norm)},
         {"iterations", st.iterations},
         {"converged", st.converged},
         {"failed", st.failed},
         {"domain_rejections", st.domain_rejections},
         {"trace", std::move(trace)}};
  if (with_profile) {
    j["x"] = nums(st.grid);
    j["rho"] = nums(st.rho);
    j["rho_tilde"] = nums(st.rho_tilde);
  }
  return j;
}

// Plain CSV: one header line, then rows of already-formatted cells.
struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  void write(std::ostream& os) const {
    const auto line = [&](const std::vector<std::string>& cells) {
      for (std::size_t i = 0; i < cells.size(); ++i)
        os << (i ? "," : "") << cells[i];
      os << '\n';
    };
    line(header);
    for (const auto& r : rows)
      line(r);
  }
};

} // namespace bernlab::io
