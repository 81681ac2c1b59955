#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "bernlab/bernlab.hpp"

namespace {

using namespace bernlab;
using io::json;

constexpr int exit_ok = 0;
constexpr int exit_invalid = 1;
constexpr int exit_nonconvergence = 2;

struct Options {
  std::string command;
  // Raw text of every numeric option, echoed verbatim and parsed at the
  // working precision.
  std::map<std::string, std::string> raw;
  std::vector<std::string> zeta;
  std::vector<std::string> t_values;
  bool predict = false;
  bool rearranged = false;
  bool constants = false;
  bool all_routes = false;
  PrecisionConfig cfg;
  std::string format = "json";
  std::string out;
  unsigned threads = 0;
  std::string table = "trace";
};

bool has(const Options& o, const std::string& key) { return o.raw.count(key) > 0; }

std::string get(const Options& o, const std::string& key, const std::string& fallback = "") {
  const auto it = o.raw.find(key);
  if (it != o.raw.end())
    return it->second;
  if (fallback.empty())
    throw InvalidArgument(o.command + ": --" + key + " is required");
  return fallback;
}

template <class Real>
Real real_opt(const Options& o, const std::string& key, const std::string& fallback = "") {
  return parse_real<Real>(get(o, key, fallback));
}

int int_opt(const Options& o, const std::string& key, const std::string& fallback = "") {
  const std::string s = get(o, key, fallback);
  std::size_t pos = 0;
  int v = 0;
  try {
    v = std::stoi(s, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos == 0 || pos != s.size())
    throw InvalidArgument("--" + key + ": expected an integer, got '" + s + "'");
  return v;
}

double double_opt(const Options& o, const std::string& key, const std::string& fallback) {
  return parse_real<double>(get(o, key, fallback));
}

int parse_int(const std::string& s, const std::string& what) {
  std::size_t pos = 0;
  int v = 0;
  try {
    v = std::stoi(s, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos == 0 || pos != s.size())
    throw InvalidArgument(what + ": expected an integer, got '" + s + "'");
  return v;
}

// "8", "5..20" or "10,20,40".
std::vector<int> parse_degrees(const std::string& s) {
  std::vector<int> out;
  if (const auto dots = s.find(".."); dots != std::string::npos) {
    const int lo = parse_int(s.substr(0, dots), "--m");
    const int hi = parse_int(s.substr(dots + 2), "--m");
    if (hi < lo)
      throw InvalidArgument("--m: empty range '" + s + "'");
    for (int m = lo; m <= hi; ++m)
      out.push_back(m);
    return out;
  }
  std::stringstream ss(s);
  for (std::string part; std::getline(ss, part, ',');)
    out.push_back(parse_int(part, "--m"));
  if (out.empty())
    throw InvalidArgument("--m: no degrees given");
  return out;
}

remez::ProblemKind parse_family(const std::string& s) {
  if (s == "absxp")
    return remez::ProblemKind::AbsXp;
  if (s == "sgn-laurent")
    return remez::ProblemKind::SgnLaurent;
  if (s == "akhiezer")
    return remez::ProblemKind::AkhiezerPower;
  throw InvalidArgument("--family: expected absxp, sgn-laurent or akhiezer, got '" + s + "'");
}

template <class Real>
std::vector<Real> linspace(const Real& lo, const Real& hi, int n) {
  std::vector<Real> v;
  for (int i = 0; i < n; ++i)
    v.push_back(n == 1 ? lo : lo + (hi - lo) * i / (n - 1));
  return v;
}

template <class Real>
std::vector<Real> logspace(const Real& lo, const Real& hi, int n) {
  using std::exp;
  using std::log;
  auto v = linspace<Real>(log(lo), log(hi), n);
  for (auto& x : v)
    x = exp(x);
  v.front() = lo;
  v.back() = hi;
  return v;
}

json input_echo(const Options& o) {
  json in = json::object();
  for (const auto& [k, v] : o.raw)
    in[k] = v;
  if (!o.zeta.empty())
    in["zeta"] = o.zeta;
  if (!o.t_values.empty())
    in["t"] = o.t_values;
  for (const auto& [flag, on] : {std::pair{"predict", o.predict}, std::pair{"rearranged", o.rearranged},
                                 std::pair{"constants", o.constants},
                                 std::pair{"all-routes", o.all_routes}})
    if (on)
      in[flag] = true;
  in["format"] = o.format;
  if (o.command == "conjecture" && o.format == "csv")
    in["table"] = o.table;
  in["threads"] = o.threads;
  return in;
}

// What a command hands back: the JSON result, the CSV table and whether the
// numerics converged.
struct Outcome {
  json result;
  io::CsvTable csv;
  bool converged = true;
  std::string diagnostic;
};

template <class Real>
std::pair<remez::MinimaxProblem<Real>, int> problem_from(const Options& o, int m) {
  const auto family = parse_family(get(o, "family"));
  switch (family) {
  case remez::ProblemKind::AbsXp:
    return {remez::build_absxp(real_opt<Real>(o, "p"), real_opt<Real>(o, "a"), m), m};
  case remez::ProblemKind::SgnLaurent:
    return {remez::build_sgn_laurent(int_opt(o, "k", "1"), real_opt<Real>(o, "a"), m), m};
  case remez::ProblemKind::AkhiezerPower: {
    const Real b = has(o, "b") ? real_opt<Real>(o, "b")
                               : asymptotics::b_from_a(real_opt<Real>(o, "a"));
    return {remez::build_akhiezer(real_opt<Real>(o, "s"), b, m), m};
  }
  }
  throw InvalidArgument("unknown family");
}

template <class Real>
Outcome run_solve(const Options& o) {
  const auto degrees = parse_degrees(get(o, "m"));
  if (degrees.size() != 1)
    throw InvalidArgument("solve: --m takes a single degree; use sweep for ranges");
  const auto [pr, m] = problem_from<Real>(o, degrees.front());
  const auto sol = remez::solve(pr, o.cfg);
  Outcome out;
  out.result = json{{"problem", io::to_json(pr)}, {"solution", io::to_json(sol)}};
  out.csv.header = {"index", "alternation", "sign", "deviation"};
  for (std::size_t i = 0; i < sol.alternation.size(); ++i)
    out.csv.rows.push_back({std::to_string(i), io::num(sol.alternation[i]),
                            std::to_string(sol.signs[i]), io::num(sol.deviations[i])});
  return out;
}

template <class Real>
Outcome run_sweep(const Options& o) {
  const auto degrees = parse_degrees(get(o, "m"));
  for (std::size_t i = 1; i < degrees.size(); ++i)
    if (degrees[i] != degrees[i - 1] + 1)
      throw InvalidArgument("sweep: --m must be a contiguous range such as 5..20");
  asymptotics::CompareInput<Real> in;
  in.family = parse_family(get(o, "family"));
  in.m_first = degrees.front();
  in.m_last = degrees.back();
  in.rearranged_form = o.rearranged;
  switch (in.family) {
  case remez::ProblemKind::AbsXp:
    in.p = real_opt<Real>(o, "p");
    in.a = real_opt<Real>(o, "a");
    break;
  case remez::ProblemKind::SgnLaurent:
    in.k = int_opt(o, "k", "1");
    in.a = real_opt<Real>(o, "a");
    break;
  case remez::ProblemKind::AkhiezerPower:
    in.s = real_opt<Real>(o, "s");
    in.b = has(o, "b") ? real_opt<Real>(o, "b") : asymptotics::b_from_a(real_opt<Real>(o, "a"));
    break;
  }
  const auto rep = asymptotics::compare(in, o.cfg, o.threads);
  Outcome out;
  out.result = io::to_json(rep, o.predict);
  const bool laurent = in.family == remez::ProblemKind::SgnLaurent;
  out.csv.header = {"m", "E"};
  if (o.predict) {
    out.csv.header.insert(out.csv.header.end(), {"predicted", "ratio"});
    if (laurent)
      out.csv.header.push_back("B_gap");
  }
  for (const auto& r : rep.sweep) {
    std::vector<std::string> row{std::to_string(r.m), io::num(r.computed_E)};
    if (o.predict) {
      row.push_back(io::num(r.predicted_E));
      row.push_back(io::num(r.ratio));
      if (laurent)
        row.push_back(io::num(*r.B_gap));
    }
    out.csv.rows.push_back(std::move(row));
  }
  return out;
}

template <class Real>
Outcome run_verify_curve(const Options& o) {
  const auto degrees = parse_degrees(get(o, "m"));
  if (degrees.size() != 1)
    throw InvalidArgument("verify-curve: --m takes a single degree");
  const Real p = real_opt<Real>(o, "p");
  const auto pr = remez::build_absxp(p, real_opt<Real>(o, "a"), degrees.front());
  const int points = int_opt(o, "points", "51");
  if (points < 2)
    throw InvalidArgument("verify-curve: --points must be >= 2");
  const Real y_lo = real_opt<Real>(o, "y-min", "1e-3");
  const Real y_hi = real_opt<Real>(o, "y-max", "100");
  if (!(y_lo > 0 && y_hi > y_lo))
    throw InvalidArgument("verify-curve: need 0 < y-min < y-max");
  const auto sol = remez::solve(pr, o.cfg);
  const auto trace = curveverify::reconstruct_phase(sol, pr, logspace(y_lo, y_hi, points));
  const auto residual = curveverify::curve_residual(trace, sol.error_E, p);

  Outcome out;
  out.result = json{{"problem", io::to_json(pr)},
                    {"error_E", io::num(sol.error_E)},
                    {"curve", io::to_json(trace, residual)}};
  if (pr.degree <= curveverify::max_sign_pattern_degree) {
    std::vector<Real> ts;
    if (o.t_values.empty()) {
      for (int i = 0; i < 11; ++i)
        ts.push_back(Real(-1) + Real(2 * (i + 1)) / 12);
    } else {
      for (const auto& s : o.t_values)
        ts.push_back(parse_real<Real>(s));
    }
    json checks = json::array();
    bool all = true;
    for (const Real& t : ts) {
      const auto rep = curveverify::sign_pattern_check(sol, pr, t);
      all = all && rep.passed;
      checks.push_back(io::to_json(rep));
    }
    out.result["sign_patterns"] = json{{"all_passed", all}, {"checks", std::move(checks)}};
  } else {
    out.result["sign_patterns"] =
        json{{"skipped", "degree above " + std::to_string(curveverify::max_sign_pattern_degree)}};
  }
  out.csv.header = {"y", "u", "v", "relative_residual"};
  for (std::size_t i = 0; i < trace.y_grid.size(); ++i)
    out.csv.rows.push_back({io::num(trace.y_grid[i]), io::num(trace.u[i]), io::num(trace.v[i]),
                            io::num(residual[i])});
  return out;
}

template <class Real>
Outcome run_profiles(const Options& o) {
  curveverify::ProfileInput<Real> in;
  in.family = parse_family(get(o, "family"));
  if (in.family == remez::ProblemKind::AbsXp)
    in.p = real_opt<Real>(o, "p");
  else
    in.k = int_opt(o, "k", "1");
  in.a = real_opt<Real>(o, "a");
  const auto degrees = parse_degrees(get(o, "m", "10,20"));
  const int points = int_opt(o, "points", "30");
  if (points < 1)
    throw InvalidArgument("profiles: --points must be >= 1");
  const auto lambda = linspace(real_opt<Real>(o, "lambda-min", "0.1"),
                               real_opt<Real>(o, "lambda-max", "3"), points);
  const auto tab = curveverify::profile_convergence(in, degrees, lambda, o.cfg, o.threads);
  Outcome out;
  out.result = io::to_json(tab);
  out.csv.header = {"lambda", "profile"};
  for (const auto& r : tab.rows)
    out.csv.header.push_back("m" + std::to_string(r.m));
  for (std::size_t j = 0; j < lambda.size(); ++j) {
    std::vector<std::string> row{io::num(lambda[j]), io::num(tab.profile[j])};
    for (const auto& r : tab.rows)
      row.push_back(io::num(r.rescaled[j]));
    out.csv.rows.push_back(std::move(row));
  }
  return out;
}

// "re" or "re,im".
template <class Real>
complex_t<Real> parse_complex(const std::string& s) {
  const auto comma = s.find(',');
  if (comma == std::string::npos)
    return {parse_real<Real>(s), Real(0)};
  return {parse_real<Real>(s.substr(0, comma)), parse_real<Real>(s.substr(comma + 1))};
}

template <class Real>
Outcome run_conformal(const Options& o) {
  const std::string map = get(o, "map", "hk");
  if (map != "hk" && map != "h0" && map != "w")
    throw InvalidArgument("conformal: --map must be hk, h0 or w, got '" + map + "'");
  const int k = map == "hk" ? int_opt(o, "k", "1") : 0;
  if (map == "hk" && k < 1)
    throw InvalidArgument("conformal: k must be >= 1");
  std::optional<Real> p;
  if (map == "w")
    p = real_opt<Real>(o, "p");

  Outcome out;
  out.result = json{{"map", map}};
  if (map == "hk")
    out.result["k"] = k;
  if (p)
    out.result["p"] = io::num(*p);

  json samples = json::array();
  out.csv.header = {"zeta_re", "zeta_im", "value_re", "value_im"};
  for (const auto& text : o.zeta) {
    const auto z = parse_complex<Real>(text);
    const auto s = map == "hk" ? conformal::eval_Hk(k, z, o.cfg)
                   : map == "h0" ? conformal::eval_H0(z, o.cfg)
                                 : conformal::eval_w(*p, z, o.cfg);
    samples.push_back(io::to_json(s));
    out.csv.rows.push_back({io::num(z.real()), io::num(z.imag()), io::num(s.value.real()),
                            io::num(s.value.imag())});
  }
  out.result["samples"] = std::move(samples);

  if (o.constants) {
    if (map == "hk") {
      auto mc = conformal::hk_constants<Real>(k, o.cfg);
      json c = io::to_json(mc);
      if (o.all_routes) {
        c["Y_k_asymptotic"] = io::num(conformal::Yk_asymptotic<Real>(k, o.cfg));
        c["Y_k_integral"] = io::num(conformal::Yk_integral<Real>(k, o.cfg, mc.D_k));
      }
      out.result["constants"] = std::move(c);
    } else if (map == "w") {
      out.result["constants"] = io::to_json(conformal::lambda_constant(*p, o.cfg));
    }
  }
  if (o.zeta.empty() && !o.constants)
    throw InvalidArgument("conformal: give at least one --zeta or --constants");
  return out;
}

Outcome run_conjecture(const Options& o) {
  conjecture::TrigeqOptions opt;
  opt.X = double_opt(o, "X", "40");
  opt.half_nodes = int_opt(o, "nodes", "512");
  opt.max_iterations = int_opt(o, "max-iterations", "100");
  opt.tolerance = double_opt(o, "tolerance", "1e-12");
  if (o.table != "trace" && o.table != "profile")
    throw InvalidArgument("conjecture: --table must be trace or profile");
  const auto st =
      conjecture::solve_trigeq(double_opt(o, "p", "1"), double_opt(o, "L-init", "0.3"), opt);
  Outcome out;
  out.result = io::to_json(st, true);
  out.result["residual"] = io::num(conjecture::trigeq_residual(st));
  out.result["residual_complement_form"] = io::num(conjecture::trigeq_residual_complement(st));
  if (o.table == "trace") {
    out.csv.header = {"iteration", "residual", "log_residual", "L", "step", "domain_rejections"};
    for (const auto& r : st.trace)
      out.csv.rows.push_back({std::to_string(r.iteration), io::num(r.residual),
                              io::num(r.log_residual), io::num(r.L), io::num(r.step),
                              std::to_string(r.domain_rejections)});
  } else {
    out.csv.header = {"x", "rho", "rho_tilde"};
    for (std::size_t i = 0; i < st.grid.size(); ++i)
      out.csv.rows.push_back({io::num(st.grid[i]), io::num(st.rho[i]), io::num(st.rho_tilde[i])});
  }
  out.converged = st.converged;
  if (!st.converged)
    out.diagnostic = "trigeq iteration did not reach the tolerance; best state reported";
  return out;
}

template <class Real>
Outcome run_convert(const Options& o) {
  using std::pow;
  if (has(o, "a") == has(o, "b"))
    throw InvalidArgument("convert: give exactly one of --a and --b");
  const Real a = has(o, "a") ? real_opt<Real>(o, "a") : asymptotics::a_from_b(real_opt<Real>(o, "b"));
  const Real b = has(o, "b") ? real_opt<Real>(o, "b") : asymptotics::b_from_a(a);
  const Real s = real_opt<Real>(o, "s");
  if (!(s > 0))
    throw InvalidArgument("convert: s must be positive");
  Outcome out;
  out.result = json{{"s", io::num(s)},
                    {"a", io::num(a)},
                    {"b", io::num(b)},
                    {"sqrt_b2_minus_1", io::num(asymptotics::sqrt_b2m1(a))},
                    {"ratio", io::num(asymptotics::akhiezer_ratio(a))},
                    {"p", io::num(Real(-2 * s))},
                    {"scale", io::num(Real(pow(1 + b, s)))}};
  if (has(o, "l")) {
    const int l = int_opt(o, "l");
    out.result["l"] = l;
    out.result["predicted_akhiezer"] = io::num(asymptotics::predict_akhiezer_61(s, b, l, o.cfg));
    out.result["predicted_abs_power"] = io::num(asymptotics::predict_E_f1(Real(-2 * s), a, l, o.cfg));
    if (has(o, "E"))
      out.result["converted_E"] = io::num(asymptotics::akhiezer_convert(s, a, l, real_opt<Real>(o, "E")));
  } else if (has(o, "E")) {
    throw InvalidArgument("convert: --E needs --l");
  }
  out.csv.header = {"key", "value"};
  for (const auto& [k, v] : out.result.items())
    out.csv.rows.push_back({k, v.is_string() ? v.template get<std::string>() : v.dump()});
  return out;
}

template <class Real>
Outcome dispatch(const Options& o) {
  if (o.command == "solve")
    return run_solve<Real>(o);
  if (o.command == "sweep")
    return run_sweep<Real>(o);
  if (o.command == "verify-curve")
    return run_verify_curve<Real>(o);
  if (o.command == "profiles")
    return run_profiles<Real>(o);
  if (o.command == "conformal")
    return run_conformal<Real>(o);
  return run_convert<Real>(o);
}

std::filesystem::path output_path(const Options& o) {
  if (!o.out.empty())
    return o.out;
  if (const char* dir = std::getenv("BERNLAB_OUTPUT_DIR"); dir && *dir)
    return std::filesystem::path(dir) / (o.command + "." + o.format);
  return {};
}

void emit(const Options& o, const std::string& text) {
  const auto path = output_path(o);
  if (path.empty()) {
    std::cout << text;
    return;
  }
  if (path.has_parent_path())
    std::filesystem::create_directories(path.parent_path());
  std::ofstream f(path, std::ios::binary);
  if (!(f << text))
    throw InvalidArgument("cannot write " + path.string());
}

int run(const Options& o) {
  json report = io::envelope(o.command, input_echo(o), json::object());
  int arithmetic_bits = 53;
  try {
    o.cfg.validate();
    Outcome out;
    if (o.command == "conjecture") {
      out = run_conjecture(o);
    } else {
      out = dispatch_precision(o.cfg.mantissa_bits, [&](auto tag) {
        using Real = typename decltype(tag)::type;
        arithmetic_bits = mantissa_digits<Real>();
        (void)pi<Real>();
        return dispatch<Real>(o);
      });
    }
    report["precision"] = io::precision_json(o.cfg, arithmetic_bits);
    report["result"] = std::move(out.result);
    if (!out.converged) {
      report["status"] = "non-convergence";
      report["diagnostics"] = json::array({out.diagnostic});
    } else {
      report["diagnostics"] = json::array();
    }
    if (o.format == "csv") {
      std::ostringstream os;
      out.csv.write(os);
      emit(o, os.str());
    } else {
      emit(o, report.dump(2) + "\n");
    }
    if (!out.converged) {
      std::cerr << "bernlab " << o.command << ": " << out.diagnostic << "\n";
      return exit_nonconvergence;
    }
    return exit_ok;
  } catch (const PrecisionError& e) {
    // A budget the caller can fix with --bits counts as invalid input.
    std::cerr << "bernlab " << o.command << ": " << e.what() << " (raise --bits)\n";
    return exit_invalid;
  } catch (const InvalidArgument& e) {
    std::cerr << "bernlab " << o.command << ": " << e.what() << "\n";
    return exit_invalid;
  } catch (const NumericalError& e) {
    // Always JSON so the failure is machine-readable even for --format csv.
    report["precision"] = io::precision_json(o.cfg, arithmetic_bits);
    report["status"] = "non-convergence";
    report["diagnostics"] = json::array({e.what()});
    std::cerr << "bernlab " << o.command << ": " << e.what() << "\n";
    try {
      Options diag = o;
      diag.format = "json";
      if (!diag.out.empty())
        diag.out += ".diagnostic.json";
      emit(diag, report.dump(2) + "\n");
    } catch (const std::exception& w) {
      std::cerr << "bernlab: " << w.what() << "\n";
    }
    return exit_nonconvergence;
  }
}

void add_real(CLI::App* sub, Options& o, const std::string& name, const std::string& help) {
  sub->add_option_function<std::string>(
      "--" + name, [&o, name](const std::string& v) { o.raw[name] = v; }, help);
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"bernlab: minimax errors, conformal maps and asymptotic checks"};
  app.require_subcommand(1);
  Options o;

  const auto common = [&](CLI::App* sub) {
    sub->add_option("--bits", o.cfg.mantissa_bits, "mantissa bits (default 256)");
    sub->add_option("--quad-order", o.cfg.quad_order, "Gauss-Legendre nodes per panel");
    sub->add_option("--pv-epsilon", o.cfg.pv_epsilon, "principal-value window half-width");
    sub->add_option("--tail-cut", o.cfg.tail_cut, "lower bound on the quadrature truncation point");
    sub->add_option("--format", o.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--out", o.out,
                    "output file (default: $BERNLAB_OUTPUT_DIR/<command>.<format>, else stdout)");
  };
  const auto family = [&](CLI::App* sub) {
    add_real(sub, o, "family", "absxp, sgn-laurent or akhiezer");
    add_real(sub, o, "p", "exponent of |x|^p");
    add_real(sub, o, "k", "Laurent order k >= 1");
    add_real(sub, o, "a", "gap half-width, 0 < a < 1");
    add_real(sub, o, "s", "Akhiezer exponent s > 0");
    add_real(sub, o, "b", "Akhiezer pole location b > 1");
    add_real(sub, o, "m", "degree: 8, 5..20 or 10,20");
  };

  auto* solve = app.add_subcommand("solve", "minimax error and alternation set for one degree");
  family(solve);
  common(solve);

  auto* sweep = app.add_subcommand("sweep", "errors over a degree range beside the asymptotics");
  family(sweep);
  common(sweep);
  sweep->add_flag("--predict", o.predict, "include predicted errors and ratios");
  sweep->add_flag("--rearranged", o.rearranged, "absxp: use the rearranged predictor");
  sweep->add_option("--threads", o.threads, "worker threads (0 = hardware)");

  auto* verify = app.add_subcommand("verify-curve", "phase curve and sign-pattern checks (absxp)");
  add_real(verify, o, "p", "exponent of |x|^p");
  add_real(verify, o, "a", "gap half-width");
  add_real(verify, o, "m", "degree");
  add_real(verify, o, "y-min", "smallest y on the imaginary axis (default 1e-3)");
  add_real(verify, o, "y-max", "largest y (default 100)");
  add_real(verify, o, "points", "log-spaced grid points (default 51)");
  verify->add_option("--t", o.t_values, "sign-pattern parameters in (-1, 1)");
  common(verify);

  auto* profiles = app.add_subcommand("profiles", "rescaled extremal values against limit profiles");
  add_real(profiles, o, "family", "absxp or sgn-laurent");
  add_real(profiles, o, "p", "exponent (absxp)");
  add_real(profiles, o, "k", "Laurent order (sgn-laurent)");
  add_real(profiles, o, "a", "gap half-width");
  add_real(profiles, o, "m", "degrees (default 10,20)");
  add_real(profiles, o, "lambda-min", "default 0.1");
  add_real(profiles, o, "lambda-max", "default 3");
  add_real(profiles, o, "points", "lambda grid points (default 30)");
  profiles->add_option("--threads", o.threads, "worker threads (0 = hardware)");
  common(profiles);

  auto* conf = app.add_subcommand("conformal", "evaluate H_k, H_0 or w and their constants");
  add_real(conf, o, "map", "hk, h0 or w");
  add_real(conf, o, "k", "order of H_k");
  add_real(conf, o, "p", "exponent for w");
  conf->add_option("--zeta", o.zeta, "evaluation point 're' or 're,im' (repeatable)")
      ->allow_extra_args(false);
  conf->add_flag("--constants", o.constants, "report the map constants");
  conf->add_flag("--all-routes", o.all_routes, "hk: also the asymptotic and integral Y_k (slow)");
  common(conf);

  auto* conj = app.add_subcommand("conjecture", "solve L sin rho sinh(rho~ + x) = x");
  add_real(conj, o, "p", "label exponent (default 1)");
  add_real(conj, o, "X", "half-width of the grid (default 40)");
  add_real(conj, o, "nodes", "half-grid node count N (default 512)");
  add_real(conj, o, "L-init", "initial L (default 0.3)");
  add_real(conj, o, "max-iterations", "default 100");
  add_real(conj, o, "tolerance", "default 1e-12");
  conj->add_option("--table", o.table, "CSV content: trace or profile");
  common(conj);

  auto* conv = app.add_subcommand("convert", "Akhiezer parameters and error conversion");
  add_real(conv, o, "s", "exponent s > 0");
  add_real(conv, o, "a", "gap half-width");
  add_real(conv, o, "b", "pole location b > 1");
  add_real(conv, o, "l", "Akhiezer degree");
  add_real(conv, o, "E", "Akhiezer error to convert");
  common(conv);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return exit_invalid;
  }
  o.command = app.get_subcommands().front()->get_name();
  return run(o);
}
