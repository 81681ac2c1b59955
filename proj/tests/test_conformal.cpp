#include <gtest/gtest.h>

#include <cmath>

#include "bernlab/conformal/maps.hpp"
#include "bernlab/conformal/profiles.hpp"

using namespace bernlab;
using namespace bernlab::conformal;
using R = real256;
using C = complex_t<R>;
using R64 = real64;

namespace {

const PrecisionConfig cfg{};

PrecisionConfig cfg64() {
  PrecisionConfig c;
  c.mantissa_bits = 64;
  return c;
}

R rel(const R& a, const R& b) { return abs(a - b) / abs(b); }

std::vector<R> log_grid(const R& lo, const R& hi, int n) {
  std::vector<R> out;
  for (int i = 0; i < n; ++i)
    out.push_back(lo * pow(hi / lo, R(i) / (n - 1)));
  return out;
}

} // namespace

TEST(Hk, DecompositionAndRealAxis) {
  for (int k : {0, 1, 2}) {
    const auto s = eval_Hk(k, C(R(-2), 0), cfg);
    EXPECT_EQ(s.value.imag(), 0) << k;
    EXPECT_LT(abs(s.value - (s.linear_part + s.log_part + s.cauchy_part)), R("1e-70"));
    EXPECT_EQ(s.linear_part, C(R(-2), 0));
    EXPECT_LT(abs(s.log_part - C(-(R(k) - R("0.5")) * log(R(2)), 0)), R("1e-70"));
  }
}

TEST(Hk, NevanlinnaAndBoundsInUpperHalfPlane) {
  for (int k : {1, 2}) {
    for (const C z : {C(R("0.5"), R("0.1")), C(R(3), R(2)), C(R(-4), R("0.5")), C(R(20), R(1)),
                      C(R(0), R(10))}) {
      const auto s = eval_Hk(k, z, cfg);
      EXPECT_GT(s.value.imag(), 0);
      // Im of the non-linear part lies in (0, (k + 1/2) pi).
      const R bounded = (s.value - z).imag();
      EXPECT_GT(bounded, 0);
      EXPECT_LT(bounded, (R(k) + R("0.5")) * pi<R>());
      EXPECT_LT(abs(s.value - (s.linear_part + s.log_part + s.cauchy_part)), R("1e-60"));
      const auto c = eval_Hk(k, std::conj(z), cfg);
      EXPECT_LT(abs(c.value - std::conj(s.value)), R("1e-50"));
    }
  }
}

TEST(Hk, IncreasingOnNegativeAxis) {
  for (int k : {1, 2, 3}) {
    R prev = -1e9;
    for (const R& D : log_grid(R(1000), R("0.001"), 13)) {
      const R v = eval_Hk_negative(k, D, cfg);
      EXPECT_GT(v, prev) << k << " " << D;
      prev = v;
    }
  }
}

TEST(Hk, BoundaryIdentity) {
  // e^xi xi^{-(k-1/2)} Im C(xi + i0) = 1.
  for (int k : {0, 1, 2}) {
    const auto tau = hk_density<R>(k);
    for (const R& xi : log_grid(R("0.1"), R(10), 9)) {
      const auto b = specialfn::cauchy_boundary(tau, xi, cfg);
      const R v = exp(xi) * pow(xi, -(R(k) - R("0.5"))) * b.imag();
      EXPECT_LT(abs(v - 1), R("1e-8")) << k << " " << xi;
    }
  }
}

TEST(Hk, AsymptoticConstantAtMillion) {
  const R R6(1000000);
  const R v = eval_Hk_negative(1, R6, cfg) - (-R6 - R("1.5") * log(R6));
  EXPECT_NEAR(to_double(v), -1.2655121, 1e-5);
}

TEST(Hk, DensityOfImaginaryPartTendsToKPlusHalf) {
  EXPECT_NEAR(to_double(rho_k(1, R(10000), cfg)), 1.5, 0.015);
  EXPECT_NEAR(to_double(rho_k(2, R(10000), cfg)), 2.5, 0.025);
  // Near 0 the boundary density approaches k - 1/2.
  EXPECT_NEAR(to_double(rho_k(1, R("1e-6"), cfg)), 0.5, 0.01);
}

TEST(Hk, CutRejected) {
  EXPECT_THROW(eval_Hk(1, C(R(1), 0), cfg), BranchCutError);
  EXPECT_THROW(eval_Hk(1, C(R(0), 0), cfg), BranchCutError);
  EXPECT_THROW(eval_H0(C(R(2), 0), cfg), BranchCutError);
  EXPECT_THROW(eval_Hk(-1, C(R(-1), 0), cfg), InvalidArgument);
}

TEST(H0, Normalization) {
  const auto s = eval_H0(C(R("-1e-6"), 0), cfg);
  EXPECT_LT(abs(s.value), R("1e-2"));
  EXPECT_EQ(eval_H0(C(R(-2), 0), cfg).value.imag(), 0);
  // Approaches 0 as zeta -> 0-.
  R prev = 1;
  for (const char* z : {"-1e-2", "-1e-4", "-1e-6", "-1e-8"}) {
    const R v = abs(eval_H0(C(R(z), 0), cfg).value);
    EXPECT_LT(v, prev);
    prev = v;
  }
}

TEST(Dk, BracketAndResidual) {
  EXPECT_GT(eval_Hk_negative(1, R("1e-3"), cfg), 0);
  EXPECT_LT(eval_Hk_negative(1, R("1e3"), cfg), 0);
  for (int k : {1, 2}) {
    const R D = find_Dk<R>(k, cfg);
    EXPECT_GT(D, 0);
    EXPECT_LT(abs(eval_Hk_negative(k, D, cfg)), R("1e-10"));
  }
  EXPECT_THROW(find_Dk<R>(0, cfg), InvalidArgument);
}

TEST(Yk, ThreeRoutesAgree) {
  const auto c = cfg64();
  for (int k : {1, 2, 3}) {
    const R64 closed = Yk_closed_form<R64>(k, c);
    const R64 asym = Yk_asymptotic<R64>(k, c);
    const R64 integral = Yk_integral<R64>(k, c);
    EXPECT_LT(abs(closed - asym), R64("1e-6")) << k;
    EXPECT_LT(abs(closed - integral), R64("1e-6")) << k;
    EXPECT_LT(abs(asym - integral), R64("1e-6")) << k;
  }
  EXPECT_NEAR(to_double(Yk_closed_form<R>(1, cfg)), -1.2655121235, 1e-10);
}

TEST(Lambda, ClosedFormsAndNormalization) {
  const auto one = lambda_constant(R(1), cfg);
  EXPECT_LT(rel(*one.Lambda, 1 / sqrt(pi<R>())), R("1e-60"));
  EXPECT_LT(rel(exp(*one.c), R("0.5")), R("1e-60"));
  for (const char* ps : {"0.5", "1", "1.5", "3"}) {
    const R p(ps);
    const auto mc = lambda_constant(p, cfg);
    EXPECT_LT(abs(*mc.norm_quadrature - 1), R("1e-10")) << ps;
    const R g = specialfn::abs_gamma(R(-p / 2), cfg);
    EXPECT_LT(abs(exp(*mc.c) * *mc.Lambda * g - 1), R("1e-12")) << ps;
    EXPECT_LT(rel(exp(*mc.c), p / 2), R("1e-60")) << ps;
    // Reflection form Lambda = 1/|Gamma(1 - p/2)|.
    EXPECT_LT(rel(*mc.Lambda, 1 / specialfn::abs_gamma(R(1 - p / 2), cfg)), R("1e-60")) << ps;
  }
  EXPECT_THROW(lambda_constant(R(2), cfg), InvalidArgument);
  EXPECT_THROW(lambda_constant(R(-1), cfg), InvalidArgument);
}

TEST(WMap, NormalizationAndAsymptote) {
  const R p("1.5");
  EXPECT_LT(abs(eval_w(p, C(R("-1e-6"), 0), cfg).value), R("1e-3"));
  const R big(1000000);
  const R c = *lambda_constant(p, cfg).c;
  const R gap = eval_w(p, C(-big, 0), cfg).value.real() - (-big - log(big) + c);
  EXPECT_LT(abs(gap), R("0.01"));
  EXPECT_THROW(eval_w(p, C(R(3), 0), cfg), BranchCutError);
}

TEST(WMap, NevanlinnaAndSymmetry) {
  for (const char* ps : {"1", "1.5"}) {
    const R p(ps);
    for (const C z : {C(R(1), R("0.2")), C(R(-2), R(3)), C(R(8), R("0.5"))}) {
      const auto s = eval_w(p, z, cfg);
      EXPECT_GT(s.value.imag(), 0);
      EXPECT_LT(abs(eval_w(p, std::conj(z), cfg).value - std::conj(s.value)), R("1e-50"));
    }
  }
}

TEST(WMap, BoundaryEquation) {
  // Lambda e^xi Im C(xi + i0) = |sin(pi p/2)| xi^{p/2}.
  for (const char* ps : {"1", "1.5"}) {
    const R p(ps);
    const R Lambda = *lambda_constant(p, cfg).Lambda;
    const auto tau = w_density(p, cfg);
    for (const R& xi : log_grid(R("0.1"), R(10), 7)) {
      const auto b = specialfn::cauchy_boundary(tau, xi, cfg);
      const R lhs = Lambda * exp(xi) * b.imag();
      const R rhs = abs(sin(pi<R>() * p / 2)) * pow(xi, p / 2);
      EXPECT_LT(rel(lhs, rhs), R("1e-8")) << ps << " " << xi;
    }
  }
}

TEST(Profiles, F12) {
  EXPECT_LT(abs(profile_f12(1, R(6), cfg) - 1), R("1e-8"));
  EXPECT_LT(abs(profile_f12(2, R(6), cfg) - 1), R("1e-8"));
  EXPECT_GT(profile_f12(1, R("0.5"), cfg) - 1, 0);
  EXPECT_LT(profile_f12(2, R("0.5"), cfg) - 1, 0);
  for (int k : {1, 2, 3})
    for (const char* ls : {"0.3", "1", "2.2"}) {
      const R l(ls);
      const R v = profile_f12(k, l, cfg);
      EXPECT_LT(abs(v - profile_f12_cauchy(k, l, cfg)), R("1e-10")) << k << " " << ls;
      EXPECT_GT((v - 1) * (k % 2 == 1 ? 1 : -1), 0);
    }
  EXPECT_THROW(profile_f12(1, R(0), cfg), InvalidArgument);
  EXPECT_THROW(profile_f12(1, R(-1), cfg), InvalidArgument);
}

TEST(Profiles, F13) {
  EXPECT_LT(abs(profile_f13(R(1), R(0), cfg) - 1 / sqrt(pi<R>())), R("1e-10"));
  // sin(pi p/2) Gamma(p/2) / pi = 1/Gamma(1 - p/2) at lambda = 0.
  for (const char* ps : {"0.5", "1.5", "3"}) {
    const R p(ps);
    const R expect = sin(pi<R>() * p / 2) * specialfn::abs_gamma(R(p / 2), cfg) / pi<R>();
    EXPECT_LT(abs(profile_f13(p, R(0), cfg) - expect), R("1e-30")) << ps;
  }
  EXPECT_LT(rel(profile_f13(R(1), R(4), cfg), R(4)), R("1e-4"));
  // Doubled-precision oracle through the Cauchy route.
  PrecisionConfig c512;
  c512.mantissa_bits = 512;
  const R oracle(profile_f13_cauchy(real512("1.5"), real512(1), c512));
  EXPECT_LT(abs(profile_f13(R("1.5"), R(1), cfg) - oracle), R("1e-10"));
  EXPECT_THROW(profile_f13(R(2), R(1), cfg), InvalidArgument);
  EXPECT_THROW(profile_f13(R(1), R(-1), cfg), InvalidArgument);
}
