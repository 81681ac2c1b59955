#include <gtest/gtest.h>

#include <cmath>

#include "bernlab/asymptotics/predict.hpp"
#include "bernlab/asymptotics/report.hpp"

using namespace bernlab;
using namespace bernlab::asymptotics;
using R = real256;

namespace {

const PrecisionConfig cfg{};

R rel(const R& a, const R& b) { return abs(a - b) / abs(b); }

} // namespace

TEST(PredictF1, Constant) {
  const R a("0.5");
  const R q = (1 - a) / (1 + a);
  for (int m : {1, 7, 30}) {
    const R constant = predict_E_f1(R(1), a, m, cfg) / (pow(q, m + 1) * pow(R(m), R("-1.5")));
    EXPECT_LT(rel(constant, sqrt(R(2)) * R("2.25") / (4 * sqrt(pi<R>()))), R("1e-60"));
  }
  EXPECT_NEAR(to_double(sqrt(R(2)) * R("2.25") / (4 * sqrt(pi<R>()))), 0.448815, 5e-6);
}

TEST(PredictF1, GeometricStep) {
  const R a("0.5"), p(1);
  const R q = (1 - a) / (1 + a);
  // Exact finite-m step: q (m/(m+1))^{p/2+1}.
  for (int m : {5, 50, 200}) {
    const R step = predict_E_f1(p, a, m + 1, cfg) / predict_E_f1(p, a, m, cfg);
    EXPECT_LT(rel(step, q * pow(R(m) / (m + 1), p / 2 + 1)), R("1e-60"));
  }
  const R far = predict_E_f1(p, a, 201, cfg) / predict_E_f1(p, a, 200, cfg);
  EXPECT_LT(rel(far, q), R("0.01"));
}

TEST(PredictF1, RearrangedFormAgrees) {
  for (const char* ps : {"1", "1.5", "3"})
    for (int m : {20, 40, 80}) {
      const R p(ps), a("0.5");
      const R r = predict_E_rearranged(p, a, m, cfg) / predict_E_f1(p, a, m, cfg);
      EXPECT_LT(abs(r - 1), R(1) / m);
      EXPECT_LT(abs(r - 1), R("1e-60")); // the two forms are algebraically identical
    }
}

TEST(PredictF1, Rejects) {
  EXPECT_THROW(predict_E_f1(R(2), R("0.5"), 3, cfg), InvalidArgument);
  EXPECT_THROW(predict_E_f1(R(0), R("0.5"), 3, cfg), InvalidArgument);
  EXPECT_THROW(predict_E_f1(R(1), R(1), 3, cfg), InvalidArgument);
  EXPECT_NO_THROW(predict_E_f1(R(-2), R("0.5"), 3, cfg));
}

TEST(PredictB, LeadingTermAndMonotonicity) {
  const R a("0.5");
  const auto lead = [&](int m) { return predict_B_41(1, a, m, cfg) / (m * log(R(3))); };
  EXPECT_GT(lead(100), lead(200));
  EXPECT_LT(abs(lead(200) - 1), R("0.05"));
  EXPECT_LT(abs(lead(5000) - 1), R("0.005"));
  EXPECT_GT(predict_B_41(1, R("0.6"), 10, cfg), predict_B_41(1, R("0.4"), 10, cfg));
  EXPECT_LT(rel(predict_L_41(1, a, 10, cfg), 1 / cosh(predict_B_41(1, a, 10, cfg))), R("1e-60"));
  EXPECT_THROW(predict_B_41(0, a, 10, cfg), InvalidArgument);
}

TEST(Akhiezer, Identities) {
  EXPECT_LT(rel(b_from_a(R("0.5")), R(5) / 3), R("1e-70"));
  EXPECT_LT(rel(akhiezer_ratio(R("0.5")), R(1) / 3), R("1e-70"));
  for (const char* as : {"0.2", "0.5", "0.8"}) {
    const R a(as);
    const R b = b_from_a(a);
    EXPECT_LT(rel(a_from_b(b), a), R("1e-70"));
    EXPECT_LT(rel(sqrt(b * b - 1), sqrt_b2m1(a)), R("1e-70"));
    EXPECT_LT(rel(b - sqrt(b * b - 1), akhiezer_ratio(a)), R("1e-70"));
  }
  EXPECT_THROW(a_from_b(R(1)), InvalidArgument);
  EXPECT_THROW(akhiezer_convert(R(0), R("0.5"), 3, R(1)), InvalidArgument);
}

TEST(Akhiezer, PredictorConstantAndStep) {
  const R b = R(5) / 3;
  EXPECT_LT(rel(predict_akhiezer_61(R(1), b, 1, cfg) / (b - sqrt(b * b - 1)), R(9) / 16), R("1e-70"));
  const R q = b - sqrt(b * b - 1);
  const R s(2);
  const auto step = [&](int l) { return predict_akhiezer_61(s, b, l + 1, cfg) / predict_akhiezer_61(s, b, l, cfg); };
  EXPECT_LT(abs(step(400) - q), abs(step(40) - q));
  EXPECT_LT(rel(step(400), q), R("0.003"));
}

TEST(Akhiezer, ChainReproducesF1) {
  const R a("0.5");
  for (const char* ss : {"0.5", "1", "2"}) {
    const R s(ss);
    for (int l : {3, 10, 40}) {
      const R chained = akhiezer_convert(s, a, l, predict_akhiezer_61(s, b_from_a(a), l, cfg));
      EXPECT_LT(rel(chained, predict_E_f1(R(-2 * s), a, l, cfg)), R("1e-60")) << ss << " " << l;
    }
  }
}

TEST(Akhiezer, DualRemezIdentity) {
  const R s(1), a("0.6");
  const int l = 3;
  const auto direct = remez::solve(remez::build_abs_power(R(-2 * s), a, l), cfg);
  const auto akh = remez::solve(remez::build_akhiezer(s, b_from_a(a), l), cfg);
  EXPECT_LT(rel(akhiezer_convert(s, a, l, akh.error_E), direct.error_E), R("1e-10"));
  // Holds at every degree, not only asymptotically.
  for (int d : {0, 1, 6}) {
    const auto x = remez::solve(remez::build_abs_power(R(-1), R("0.3"), d), cfg);
    const auto y = remez::solve(remez::build_akhiezer(R("0.5"), b_from_a(R("0.3")), d), cfg);
    EXPECT_LT(rel(akhiezer_convert(R("0.5"), R("0.3"), d, y.error_E), x.error_E), R("1e-10")) << d;
  }
}

TEST(Compare, AbsXpTrend) {
  CompareInput<R> in;
  in.family = ProblemKind::AbsXp;
  in.p = R("1.5");
  in.a = R("0.5");
  in.m_first = 5;
  in.m_last = 20;
  const auto rep = compare(in, cfg);
  ASSERT_EQ(rep.sweep.size(), 16u);
  for (std::size_t i = 0; i < rep.sweep.size(); ++i) {
    const auto& r = rep.sweep[i];
    EXPECT_EQ(r.m, 5 + static_cast<int>(i));
    EXPECT_GT(r.ratio, 0);
    EXPECT_LT(rel(r.log_computed, log(r.computed_E)), R("1e-60"));
  }
  EXPECT_GE(rep.trend.final_ratio, R("0.9"));
  EXPECT_LE(rep.trend.final_ratio, R("1.1"));
  EXPECT_TRUE(rep.trend.within_half_to_double);
  EXPECT_LE(rep.trend.monotone_from, 10);
  EXPECT_LT(abs(rep.trend.final_log_step - rep.trend.expected_log_step), R("0.1"));
}

TEST(Compare, AkhiezerTrend) {
  CompareInput<R> in;
  in.family = ProblemKind::AkhiezerPower;
  in.s = R(1);
  in.b = R(5) / 3;
  in.m_first = 5;
  in.m_last = 20;
  const auto rep = compare(in, cfg);
  EXPECT_GE(rep.trend.final_ratio, R("0.9"));
  EXPECT_LE(rep.trend.final_ratio, R("1.1"));
  EXPECT_TRUE(rep.trend.within_half_to_double);
}

TEST(Compare, LaurentGapDecreases) {
  CompareInput<R> in;
  in.family = ProblemKind::SgnLaurent;
  in.k = 1;
  in.a = R("0.5");
  in.m_first = 5;
  in.m_last = 20;
  const auto rep = compare(in, cfg, 4);
  for (const auto& r : rep.sweep) {
    ASSERT_TRUE(r.B_gap.has_value());
    EXPECT_LT(rel(*r.B_gap, recovered_B(r.computed_E) - predict_B_41(1, in.a, r.m, cfg)), R("1e-60"));
  }
  EXPECT_TRUE(rep.trend.monotone);
  EXPECT_LT(abs(*rep.sweep.back().B_gap), abs(*rep.sweep[5].B_gap));
}

TEST(Compare, SequentialAndParallelAgree) {
  CompareInput<R> in;
  in.p = R(1);
  in.a = R("0.4");
  in.m_first = 2;
  in.m_last = 7;
  const auto one = compare(in, cfg, 1);
  const auto many = compare(in, cfg, 6);
  for (std::size_t i = 0; i < one.sweep.size(); ++i)
    EXPECT_EQ(one.sweep[i].computed_E, many.sweep[i].computed_E);
}

TEST(Compare, Rejects) {
  CompareInput<R> in;
  in.p = R(1);
  in.a = R("0.5");
  in.m_first = 4;
  in.m_last = 3;
  EXPECT_THROW(compare(in, cfg), InvalidArgument);
  in.m_last = 400;
  PrecisionConfig small;
  small.mantissa_bits = 64;
  EXPECT_THROW(compare<real64>(CompareInput<real64>{ProblemKind::AbsXp, real64(1), 1, real64(0),
                                                    real64("0.5"), real64(0), 4, 400},
                               small),
               PrecisionError);
}
