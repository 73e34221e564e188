#include "altlab/bessel.hpp"

#include <gtest/gtest.h>

#include <boost/math/special_functions/bessel.hpp>
#include <boost/math/special_functions/gamma.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include <cmath>
#include <numbers>

using namespace altlab;
using Wide = boost::multiprecision::cpp_bin_float_50;

namespace {

double oracle_j(double nu, double u) {
  return static_cast<double>(boost::math::cyl_bessel_j(Wide(nu), Wide(u)));
}

double oracle_lgamma(double x) { return static_cast<double>(boost::math::lgamma(Wide(x))); }

} // namespace

TEST(LogGamma, Examples) {
  EXPECT_NEAR(log_gamma(1.0), 0.0, 1e-15);
  EXPECT_NEAR(log_gamma(2.0), 0.0, 1e-15);
  EXPECT_NEAR(log_gamma(0.5), 0.5723649429247001, 1e-15);
  EXPECT_NEAR(log_gamma(0.1), 2.2527126517342059599, 1e-14);
  EXPECT_NEAR(log_gamma(150.5), 602.51395487058541195, 1e-13);
}

TEST(LogGamma, AbsoluteAccuracyOnRange) {
  double worst = 0.0;
  for (double x = 0.5; x <= 200.0; x += 0.173)
    worst = std::max(worst, std::abs(log_gamma(x) - oracle_lgamma(x)));
  EXPECT_LE(worst, 1e-13);
}

TEST(LogGamma, Recurrence) {
  for (const double x : {0.5, 1.5, 7.25}) {
    const double lhs = std::exp(log_gamma(x + 1.0));
    const double rhs = x * std::exp(log_gamma(x));
    EXPECT_NEAR(lhs / rhs, 1.0, 1e-12) << x;
  }
}

TEST(LogGamma, RejectsNonPositive) {
  EXPECT_THROW(log_gamma(0.0), DomainError);
  EXPECT_THROW(log_gamma(-1.0), DomainError);
}

TEST(BesselSeries, Examples) {
  EXPECT_EQ(bessel_j_series(0.0, 0.0), 1.0);
  EXPECT_EQ(bessel_j_series(1.0, 0.0), 0.0);
  EXPECT_NEAR(bessel_j_series(0.0, 1.0), 0.7651976865579666, 1e-16);
}

TEST(BesselSeries, RangeErrorBeyondSafeArgument) {
  EXPECT_THROW(bessel_j_series(0.0, 40.0), RangeError);
  EXPECT_THROW(bessel_j_series(-1.0, 1.0), DomainError);
}

TEST(BesselJ0, Examples) {
  EXPECT_EQ(bessel_j0(0.0), 1.0);
  EXPECT_NEAR(bessel_j0(2.404825557695773), 0.0, 1e-12);
  EXPECT_NEAR(bessel_j0(10.0), -0.2459357644513483352, 1e-15);
  EXPECT_NEAR(bessel_j0(50.5), 0.095519891549700567084, 1e-15);
}

TEST(BesselJ0, AgreesWithDoubleDoubleSeriesAtFifty) {
  // The series in double-double still resolves J0(50) when the cutoff is lifted.
  const double asym = bessel_j0(50.0);
  EXPECT_NEAR(asym, oracle_j(0.0, 50.0), 1e-12);
}

TEST(BesselJ0, AbsoluteAccuracyOnRange) {
  double worst = 0.0;
  for (double u = 0.0; u <= 200.0; u += 0.0371)
    worst = std::max(worst, std::abs(bessel_j0(u) - oracle_j(0.0, u)));
  EXPECT_LE(worst, 1e-12);
}

TEST(BesselJ0, BoundedByOne) {
  for (double u = 0.0; u <= 200.0; u += 0.01)
    ASSERT_LE(std::abs(bessel_j0(u)), 1.0) << u;
}

TEST(BesselJ0, SeriesAndLargeArgumentFormsAgreeAcrossTheCutoff) {
  const BesselEvalConfig cfg;
  for (double u = cfg.series_cutoff - 2.0; u <= cfg.series_cutoff + 2.0; u += 0.05)
    EXPECT_NEAR(bessel_j_series(0.0, u), bessel_j_asymptotic(0.0, u).value, 1e-12) << u;
}

TEST(BesselJ, NonIntegerOrders) {
  EXPECT_NEAR(bessel_j(0.5, 25.0), -0.021120283599650445018, 1e-15);
  EXPECT_NEAR(bessel_j(2.5, 7.0), -0.28343665120169919822, 1e-15);
  for (const double nu : {0.25, 1.0, 1.5, 3.0})
    for (double u = 0.5; u < 60.0; u += 1.37)
      EXPECT_NEAR(bessel_j(nu, u), oracle_j(nu, u), 1e-13) << nu << " " << u;
}

TEST(BesselEvalConfig, Validation) {
  EXPECT_NO_THROW(BesselEvalConfig{}.validate());
  EXPECT_THROW((BesselEvalConfig{4.0, 1e-32}.validate()), DomainError);
  EXPECT_THROW((BesselEvalConfig{31.0, 1e-32}.validate()), DomainError);
}

TEST(J0Zeros, FirstZeros) {
  const auto z = j0_zeros(2);
  ASSERT_EQ(z.size(), 2u);
  EXPECT_NEAR(z[0], 2.404825557695773, 1e-10);
  EXPECT_NEAR(z[1], 5.520078110286311, 1e-10);
}

TEST(J0Zeros, SpacingMonotonicityAndResidual) {
  const auto z = j0_zeros(100);
  for (std::size_t k = 0; k < z.size(); ++k) {
    EXPECT_LE(std::abs(bessel_j0(z[k])), 1e-10) << k;
    if (k > 0) {
      const double gap = z[k] - z[k - 1];
      EXPECT_GT(gap, std::numbers::pi - 0.3);
      EXPECT_LT(gap, std::numbers::pi + 0.9);
    }
  }
  EXPECT_THROW(j0_zeros(0), DomainError);
  EXPECT_THROW(j0_zeros(10'001), DomainError);
}

TEST(J0Zeros, SharedTableMatchesFreshComputation) {
  const auto& table = J0ZeroTable::instance();
  const auto z = j0_zeros(50);
  for (int k = 1; k <= 50; ++k)
    EXPECT_EQ(table.zero(k), z[k - 1]);
  // McMahon estimate beyond the table is already close
  EXPECT_LE(std::abs(bessel_j0(table.zero(J0ZeroTable::kSize + 10))), 1e-12);
}
