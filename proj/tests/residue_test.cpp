#include "altlab/hankel.hpp"
#include "altlab/residue.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

using namespace altlab;

TEST(Residue, MatchesContourIntegral) {
  // (1 / 2 pi i) of a small circle around the pole
  const double y = 0.8;
  const double lambda = 5.0;
  for (const auto branch : {Branch::plus, Branch::minus}) {
    const ComplexValue z0 = z_branch(y, branch);
    const int n = 256;
    const double r = 1e-2;
    ComplexValue acc = 0.0;
    for (int k = 0; k < n; ++k) {
      const ComplexValue w = std::polar(r, 2.0 * std::numbers::pi * k / n);
      const ComplexValue z = z0 + w;
      acc += std::exp(ComplexValue(0.0, lambda) * z) / q_eval(z, y) * w;
    }
    acc /= static_cast<double>(n);
    const auto res = residue_at_pole(y, lambda, branch);
    EXPECT_NEAR(acc.real(), res.real(), 1e-12);
    EXPECT_NEAR(acc.imag(), res.imag(), 1e-12);
  }
}

TEST(Residue, RejectsPolesOutsideStrip) {
  EXPECT_THROW(residue_at_pole(default_strip().b, 1.0, Branch::plus), DomainError);
  EXPECT_THROW(scaled_i2(0.0), DomainError);
}

TEST(ScaledI2, SaddleIntegralReferenceValues) {
  const struct {
    double lambda;
    ComplexValue value;
  } refs[] = {{10.0, {-0.55556178731567903118, -0.20568427831824098432}},
              {30.0, {-0.3287138452991360816, -0.098583377688938607463}},
              {40.0, {-0.28744238182234660864, -0.076019051598554515303}}};
  for (const auto& r : refs) {
    const auto out = scaled_i2(r.lambda);
    EXPECT_NEAR(out.saddle_integral.real(), r.value.real(), 1e-13) << r.lambda;
    EXPECT_NEAR(out.saddle_integral.imag(), r.value.imag(), 1e-13) << r.lambda;
    EXPECT_LE(out.error_estimate, 1e-13);
    EXPECT_GT(out.min_magnitude, 1e-100);
  }
}

TEST(ScaledI2, PairSumIsRealAndMatches) {
  for (const double lambda : {8.0, 20.0, 60.0}) {
    const auto out = scaled_i2(lambda);
    EXPECT_LE(std::abs(out.pair_sum.imag()), 1e-13) << lambda;
    EXPECT_NEAR(out.pair_sum.real(), 2.0 * std::numbers::pi * out.saddle_integral.real(), 1e-12)
        << lambda;
  }
}

TEST(ScaledI2, ConvergesAcrossLargeLambda) {
  for (double lambda = 8.0; lambda <= 120.0; lambda += 2.0)
    EXPECT_NO_THROW(scaled_i2(lambda)) << lambda;
}

TEST(ResidueRoute, AgreesWithHankelWithinBound) {
  for (const double lambda : {8.0, 10.0, 12.0, 16.0, 20.0}) {
    const auto r = s_star_via_residue(lambda);
    const auto h = hankel_s_star(lambda);
    const double scale = std::exp(lambda * kSqrtHalfPi);
    EXPECT_LE(std::abs(r.scaled_value - h.value * scale), r.scaled_error() + h.error_estimate * scale)
        << lambda;
  }
}

TEST(ResidueRoute, ReferenceValues) {
  const auto r16 = residue_outcome(16.0);
  EXPECT_LE(std::abs(r16.value - -4.0963566449974286463e-11), r16.error_estimate);
  const auto r20 = residue_outcome(20.0);
  EXPECT_LE(std::abs(r20.value - 1.0349298050651604833e-11), r20.error_estimate);
  EXPECT_EQ(r20.method, Method::residue);
}

TEST(ResidueRoute, NeglectedBoundDecreases) {
  double prev = std::numeric_limits<double>::infinity();
  for (const double lambda : {8.0, 12.0, 16.0, 20.0, 30.0}) {
    const auto r = s_star_via_residue(lambda);
    EXPECT_LT(r.neglected_bound, prev);
    EXPECT_NEAR(r.neglected_bound, kResidueKappa * neglected_model(lambda, default_strip()),
                1e-300);
    prev = r.neglected_bound;
  }
}

TEST(ResidueRoute, KappaDominatesCalibration) {
  const auto samples = calibrate_kappa(default_kappa_grid());
  ASSERT_EQ(samples.size(), 9u);
  const auto worst = std::max_element(samples.begin(), samples.end(),
                                      [](auto& a, auto& b) { return a.ratio < b.ratio; });
  EXPECT_LT(worst->ratio, kResidueKappa);
  EXPECT_GT(worst->ratio, 0.0);
}

TEST(ResidueConfig, Validation) {
  ResidueConfig cfg;
  cfg.kappa = -1.0;
  EXPECT_THROW(cfg.validate(), DomainError);
  cfg = {};
  cfg.max_refinements = 0;
  cfg.max_panel_width = 1.0;
  cfg.width_scale = 10.0;
  cfg.rule_order = 8;
  ToleranceSpec tight;
  tight.abs_tol = 1e-300;
  tight.rel_tol = 1e-300;
  EXPECT_THROW(scaled_i2(200.0, default_strip(), tight, cfg), WorkLimitError);
}
