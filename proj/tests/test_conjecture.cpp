#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "bernlab/conjecture/trigeq.hpp"

using namespace bernlab;
using namespace bernlab::conjecture;

namespace {

ConjectureState run(double X, int N) {
  TrigeqOptions opt;
  opt.X = X;
  opt.half_nodes = N;
  return solve_trigeq(1.0, 1.0, opt);
}

const ConjectureState& reference() {
  static const ConjectureState st = run(40, 512);
  return st;
}

} // namespace

TEST(Trigeq, ConvergesWithSmallResidual) {
  const auto& st = reference();
  EXPECT_TRUE(st.converged);
  EXPECT_FALSE(st.failed);
  EXPECT_LT(st.residual_norm, 1e-6);
  EXPECT_NEAR(st.L, 0.27678, 1e-4);
  ASSERT_EQ(st.grid.size(), 1025u);
  EXPECT_EQ(st.rho[512], std::numbers::pi);
  EXPECT_EQ(st.rho.front(), 0);
  for (std::size_t i = 1; i + 1 < st.rho.size(); ++i) {
    if (i == 512)
      continue;
    EXPECT_GT(st.rho[i], 0);
    EXPECT_LT(st.rho[i], std::numbers::pi);
  }
}

TEST(Trigeq, Symmetry) {
  const auto& st = reference();
  const std::size_t n = st.grid.size();
  for (std::size_t i = 0; i < n; ++i) {
    EXPECT_EQ(st.rho[i], st.rho[n - 1 - i]);
    EXPECT_NEAR(st.rho_tilde[i], -st.rho_tilde[n - 1 - i], 1e-12);
  }
  EXPECT_NEAR(st.rho_tilde[n / 2], 0, 1e-12);
}

TEST(Trigeq, NodeResidualVanishesAtOrigin) {
  const auto& st = reference();
  const auto r = node_residuals(st);
  EXPECT_NEAR(r[st.grid.size() / 2], 0, 1e-12);
}

TEST(Trigeq, ResidualForms) {
  const auto& st = reference();
  EXPECT_NEAR(trigeq_residual(st), st.residual_norm, 1e-10);
  EXPECT_LT(std::abs(trigeq_residual(st) - trigeq_residual_complement(st)), 1e-12);
  ConjectureState zero = st;
  std::fill(zero.rho.begin(), zero.rho.end(), 0.0);
  const double sup = st.X - st.h / 2; // outermost collocation point
  EXPECT_NEAR(trigeq_residual(zero), sup, 1e-12);
  EXPECT_LT(std::abs(trigeq_residual(zero) - trigeq_residual_complement(zero)), 1e-12);
}

TEST(Trigeq, ResidualDecreasesOverLastIterations) {
  const auto& st = reference();
  ASSERT_GE(st.trace.size(), 10u);
  for (std::size_t i = st.trace.size() - 9; i < st.trace.size(); ++i)
    EXPECT_LT(st.trace[i].log_residual, st.trace[i - 1].log_residual);
}

TEST(Trigeq, DiscretisationOrderUnderDoubling) {
  const double L1 = run(40, 256).L;
  const double L2 = reference().L;
  const double L3 = run(40, 1024).L;
  const double ratio = discretisation_ratio(L1, L2, L3);
  EXPECT_GE(ratio, 2);
  EXPECT_LE(ratio, 6);
}

TEST(Trigeq, StableUnderDomainDoubling) {
  // Same spacing, twice the domain.
  const double L20 = run(20, 256).L;
  const double L40 = reference().L;
  EXPECT_LT(std::abs(L20 - L40) / L40, 0.01);
}

TEST(Trigeq, FailureIsReported) {
  TrigeqOptions opt;
  opt.half_nodes = 128;
  opt.max_iterations = 2;
  const auto st = solve_trigeq(1.0, 1.0, opt);
  EXPECT_FALSE(st.converged);
  EXPECT_GT(st.residual_norm, 0);
  EXPECT_EQ(st.trace.size(), 2u);
}

TEST(Trigeq, Rejects) {
  EXPECT_THROW(solve_trigeq(2.0, 1.0), InvalidArgument);
  EXPECT_THROW(solve_trigeq(-1.0, 1.0), InvalidArgument);
  EXPECT_THROW(solve_trigeq(1.0, 0.0), InvalidArgument);
  TrigeqOptions opt;
  opt.half_nodes = 2;
  EXPECT_THROW(solve_trigeq(1.0, 1.0, opt), InvalidArgument);
}
