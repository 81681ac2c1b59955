#include <gtest/gtest.h>

#include <cmath>

#include "bernlab/curveverify/phase.hpp"
#include "bernlab/curveverify/profiles.hpp"
#include "bernlab/curveverify/signs.hpp"

using namespace bernlab;
using namespace bernlab::curveverify;
using R = real256;

namespace {

const PrecisionConfig cfg{};

template <class T>
std::vector<T> log_grid(const T& lo, const T& hi, int n) {
  std::vector<T> out;
  for (int i = 0; i < n; ++i)
    out.push_back(lo * pow(hi / lo, T(i) / (n - 1)));
  return out;
}

template <class T>
T curve_max_residual(const char* p, int bits) {
  PrecisionConfig c;
  c.mantissa_bits = bits;
  const auto pr = remez::build_absxp(T(p), T("0.5"), 8);
  const auto sol = remez::solve(pr, c);
  const auto tr = reconstruct_phase(sol, pr, log_grid(T("1e-3"), T(100), 51));
  return max_abs(curve_residual(tr, sol.error_E, pr.p));
}

} // namespace

TEST(Phase, CurveShapeForM8) {
  const auto pr = remez::build_absxp(R("1.5"), R("0.5"), 8);
  const auto sol = remez::solve(pr, cfg);
  const auto tr = reconstruct_phase(sol, pr, log_grid(R("1e-3"), R(100), 51));
  ASSERT_EQ(tr.u.size(), 51u);
  for (std::size_t i = 0; i < tr.u.size(); ++i) {
    EXPECT_GT(tr.v[i], 0);
    if (i > 0)
      EXPECT_LT(abs(tr.u[i] - tr.u[i - 1]), pi<R>() / 2);
  }
  EXPECT_LT(abs(tr.u.back() - pi<R>()), R("0.05"));
  EXPECT_GT(tr.u.front(), 0);
  EXPECT_LT(tr.u.front(), 9 * pi<R>());
  // phi(a) = 0: the argument of arccos is exactly 1 at x = a.
  const R ga = (remez::eval_reduced(sol, R(pr.a * pr.a)) - pow(pr.a, pr.p)) / sol.error_E;
  EXPECT_LT(abs(ga - 1), R("1e-20"));
}

TEST(Phase, ResidualSmallAndShrinksWithPrecision) {
  for (const char* p : {"1.5", "1"}) {
    const R r256 = curve_max_residual<R>(p, 256);
    const real512 r512 = curve_max_residual<real512>(p, 512);
    EXPECT_LT(r256, R("1e-6")) << p;
    EXPECT_LT(r512, real512(r256)) << p;
  }
}

TEST(Phase, OtherExponentsAndSigns) {
  // [p/2] odd flips the sign convention.
  for (const char* p : {"3", "0.5", "2.5"}) {
    const auto pr = remez::build_absxp(R(p), R("0.5"), 6);
    const auto sol = remez::solve(pr, cfg);
    const auto tr = reconstruct_phase(sol, pr, log_grid(R("1e-2"), R(50), 31));
    EXPECT_LT(max_abs(curve_residual(tr, sol.error_E, pr.p)), R("1e-6")) << p;
    for (const R& v : tr.v)
      EXPECT_GT(v, 0);
    EXPECT_LT(abs(tr.u.back() - pi<R>()), R("0.05")) << p;
  }
}

TEST(Phase, GridRefinementConsistent) {
  const auto pr = remez::build_absxp(R("1.5"), R("0.5"), 8);
  const auto sol = remez::solve(pr, cfg);
  const auto coarse = log_grid(R("1e-3"), R(100), 26);
  const auto fine = log_grid(R("1e-3"), R(100), 51);
  const auto a = reconstruct_phase(sol, pr, coarse);
  const auto b = reconstruct_phase(sol, pr, fine);
  for (std::size_t i = 0; i < coarse.size(); ++i) {
    EXPECT_LT(abs(a.u[i] - b.u[2 * i]), R("1e-8"));
    EXPECT_LT(abs(a.v[i] - b.v[2 * i]), R("1e-8"));
  }
  const R ra = max_abs(curve_residual(a, sol.error_E, pr.p));
  const R rb = max_abs(curve_residual(b, sol.error_E, pr.p));
  EXPECT_LT(abs(ra - rb), R(10 * cfg.tolerance()));
  // A two-point grid across the whole range still continues correctly.
  const auto two = reconstruct_phase(sol, pr, std::vector<R>{R("1e-3"), R(100)});
  EXPECT_LT(abs(two.u.back() - b.u.back()), R("1e-8"));
  EXPECT_GT(two.refinements, 0);
}

TEST(Phase, Rejects) {
  const auto lp = remez::build_sgn_laurent(1, R("0.5"), 3);
  const auto lsol = remez::solve(lp, cfg);
  EXPECT_THROW(reconstruct_phase(lsol, lp, std::vector<R>{R(1)}), InvalidArgument);
  const auto pr = remez::build_absxp(R("1.5"), R("0.5"), 3);
  const auto sol = remez::solve(pr, cfg);
  EXPECT_THROW(reconstruct_phase(sol, pr, std::vector<R>{R(2), R(1)}), InvalidArgument);
  EXPECT_THROW(reconstruct_phase(sol, pr, std::vector<R>{R(0)}), InvalidArgument);
  PhaseTrace<R> tr;
  EXPECT_THROW(curve_residual(tr, R(1), R(2)), InvalidArgument);
}

TEST(Signs, GantmacherKreinPattern) {
  for (int m : {3, 5}) {
    const auto pr = remez::build_absxp(R("1.5"), R("0.5"), m);
    const auto sol = remez::solve(pr, cfg);
    for (int i = 0; i <= 10; ++i) {
      const R t = R("-0.99") + R("1.98") * i / 10;
      const auto rep = sign_pattern_check(sol, pr, t);
      EXPECT_TRUE(rep.passed) << m << " " << t;
      EXPECT_EQ(rep.sign_changes, m + 1);
    }
    for (const char* t : {"-0.999999", "0.999999"})
      EXPECT_EQ(sign_pattern_check(sol, pr, R(t)).sign_changes, m + 1) << t;
    const auto zero = sign_pattern_check(sol, pr, R(0));
    EXPECT_EQ(zero.first_sign, 1);
    EXPECT_GT(remez::eval_reduced(sol, R(0)), sol.error_E);
    ASSERT_EQ(zero.coefficients.size(), static_cast<std::size_t>(m + 2));
    EXPECT_EQ(zero.exponents[1], R("1.5"));
  }
}

TEST(Signs, OddHalfExponentAndLimits) {
  // [p/2] = 1: P(0) < -E and the first sign is negative.
  const auto pr = remez::build_absxp(R(3), R("0.5"), 4);
  const auto sol = remez::solve(pr, cfg);
  const auto rep = sign_pattern_check(sol, pr, R("0.3"));
  EXPECT_TRUE(rep.passed);
  EXPECT_EQ(rep.first_sign, -1);
  EXPECT_LT(remez::eval_reduced(sol, R(0)), -sol.error_E);
  EXPECT_THROW(sign_pattern_check(sol, pr, R(1)), InvalidArgument);
  const auto big = remez::build_absxp(R("1.5"), R("0.5"), 17);
  EXPECT_THROW(sign_pattern_check(remez::solve(big, cfg), big, R(0)), PrecisionError);
}

TEST(Profiles, F13DistanceShrinks) {
  ProfileInput<R> in;
  in.p = R("1.5");
  in.a = R("0.5");
  std::vector<R> lambda;
  for (int i = 0; i < 30; ++i)
    lambda.push_back(R("0.1") + R("2.9") * i / 29);
  const auto tab = profile_convergence(in, {10, 20}, lambda, cfg);
  ASSERT_EQ(tab.rows.size(), 2u);
  EXPECT_LT(tab.rows[1].sup_distance, tab.rows[0].sup_distance);
  EXPECT_LT(tab.rows[1].sup_distance, R("0.01"));
}

TEST(Profiles, F13CauchySequenceAtLambdaOne) {
  ProfileInput<R> in;
  in.p = R("1.5");
  in.a = R("0.5");
  const auto tab = profile_convergence(in, {5, 10, 15, 20, 25}, std::vector<R>{R(1)}, cfg);
  R prev = -1;
  for (std::size_t i = 1; i < tab.rows.size(); ++i) {
    const R d = abs(tab.rows[i].rescaled[0] - tab.rows[i - 1].rescaled[0]);
    if (prev >= 0)
      EXPECT_LT(d, prev) << tab.rows[i].m;
    prev = d;
  }
}

TEST(Profiles, F12SignAndDistance) {
  ProfileInput<R> in;
  in.family = remez::ProblemKind::SgnLaurent;
  in.k = 1;
  in.a = R("0.5");
  std::vector<R> lambda;
  for (int i = 0; i < 30; ++i)
    lambda.push_back(R("0.1") + R("2.9") * i / 29);
  const auto tab = profile_convergence(in, {10, 20}, lambda, cfg);
  EXPECT_LT(tab.rows[1].sup_distance, tab.rows[0].sup_distance);
  // At m = 20 the whole grid rescales into (0, a).
  EXPECT_TRUE(tab.rows[1].sign_matches);
  in.family = remez::ProblemKind::AkhiezerPower;
  EXPECT_THROW(profile_convergence(in, {3}, lambda, cfg), InvalidArgument);
}

TEST(Phase, PrincipalArccos) {
  using C = complex_t<R>;
  for (const C z : {C(R("0.3"), R("0.2")), C(R(-5), R("-1e-3")), C(R(7), R(-2)), C(R("-1e30"), R("-1e5")),
                    C(R(2), R(0)), C(R(-3), R(0))}) {
    const C w = curveverify::detail::acos_principal(z);
    EXPECT_LT(abs(std::cos(w) - z) / abs(z), R("1e-70"));
    EXPECT_GE(w.real(), 0);
    EXPECT_LE(w.real(), pi<R>());
  }
  // Near pi the real part keeps full relative accuracy in pi - u.
  const C w = curveverify::detail::acos_principal(C(R("-1e30"), R("-1e5")));
  EXPECT_LT(abs((pi<R>() - w.real()) / R("1e-25") - 1), R("1e-40"));
}
