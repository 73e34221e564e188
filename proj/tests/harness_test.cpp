#include "altlab/harness.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <sstream>

using namespace altlab;

TEST(Harness, ParseMethod) {
  EXPECT_EQ(parse_method("series"), Method::series);
  EXPECT_EQ(parse_method("fourier2d"), Method::fourier2d);
  EXPECT_EQ(parse_method("asym"), Method::asymptotic);
  EXPECT_FALSE(parse_method("simpson").has_value());
}

TEST(Harness, AutoMethod) {
  EXPECT_EQ(auto_method(3.0), Method::hankel);
  EXPECT_EQ(auto_method(25.0), Method::hankel);
  EXPECT_EQ(auto_method(26.0), Method::residue);
}

TEST(Harness, FormatReal) {
  EXPECT_EQ(format_real(-std::numbers::ln2), "-0.69314718055994529");
  EXPECT_EQ(format_real(0.5), "0.5");
  EXPECT_EQ(std::stod(format_real(0.1)), 0.1);
}

TEST(Harness, StatusesAtZero) {
  const auto all = evaluate_all(0.0, {}, 0.0);
  ASSERT_EQ(all.size(), kAllMethods.size());
  for (const auto& v : all) {
    if (v.method == Method::residue || v.method == Method::asymptotic) {
      EXPECT_EQ(v.status, MethodStatus::out_of_range);
    } else {
      EXPECT_EQ(v.status, MethodStatus::ok) << to_string(v.method);
      EXPECT_NEAR(v.value, -std::numbers::ln2, 1e-15);
    }
  }
}

TEST(Harness, StatusesAtLargeT) {
  const double t = 150.0;
  const auto all = evaluate_all(lambda_of_t(t), {}, t);
  const auto status = [&](Method m) {
    for (const auto& v : all)
      if (v.method == m)
        return v.status;
    return MethodStatus::failed;
  };
  EXPECT_EQ(status(Method::series), MethodStatus::precision_limited);
  EXPECT_EQ(status(Method::hankel), MethodStatus::out_of_range);
  EXPECT_EQ(status(Method::fourier2d), MethodStatus::out_of_range);
  EXPECT_EQ(status(Method::residue), MethodStatus::ok);
  EXPECT_EQ(status(Method::asymptotic), MethodStatus::ok);
  EXPECT_EQ(to_string(MethodStatus::precision_limited), "precision-limited");
}

TEST(Harness, NegativeLambdaRejected) {
  EXPECT_THROW(evaluate_method(Method::hankel, -1.0), DomainError);
}

TEST(Harness, CrossValidationPasses) {
  const auto report = cross_validate({0.0, 0.5, 1.0, 4.0, 10.0, 25.0, 64.0, 150.0});
  EXPECT_GT(report.checks.size(), 10u);
  for (const auto& c : report.checks)
    EXPECT_TRUE(c.passed) << c.name << " " << c.measured << " > " << c.threshold;
  EXPECT_TRUE(report.all_passed());
  EXPECT_EQ(report.entries.size(), 8 * kAllMethods.size());
}

TEST(Sweep, TableShapeAndScaledColumns) {
  const auto table = sweep_data(5.0, 30.0, 6, true);
  ASSERT_EQ(table.rows.size(), 6u);
  EXPECT_EQ(table.rows.front().lambda, 5.0);
  EXPECT_EQ(table.rows.back().lambda, 30.0);
  for (const auto& row : table.rows) {
    EXPECT_EQ(row.methods.size(), kAllMethods.size());
    EXPECT_EQ(row.numeric_method, auto_method(row.lambda));
    EXPECT_NEAR(row.scaled_asym, -asym_s_star_scaled(row.lambda), 1e-15);
    EXPECT_LE(std::abs(row.scaled_numeric - row.scaled_asym),
              kEnvelopeConstant * std::pow(row.lambda, -1.5) + 1e-9)
        << row.lambda;
  }
  EXPECT_THROW(sweep_data(5.0, 4.0, 10, false), DomainError);
  EXPECT_THROW(sweep_data(5.0, 6.0, 1, false), DomainError);
}

TEST(Sweep, CsvRoundTrip) {
  const auto table = figure_data(5.0, 25.0, 11);
  const std::string text = csv_string(table);
  EXPECT_EQ(text.find('\r'), std::string::npos);
  EXPECT_EQ(text, csv_string(figure_data(5.0, 25.0, 11)));
  const auto rows = parse_csv(text);
  ASSERT_EQ(rows.size(), 12u);
  EXPECT_EQ(rows[0][0], "lambda");
  EXPECT_EQ(rows[0][4], "scaled_asym");
  for (std::size_t i = 1; i < rows.size(); ++i) {
    ASSERT_EQ(rows[i].size(), rows[0].size());
    const auto& row = table.rows[i - 1];
    EXPECT_EQ(std::stod(rows[i][0]), row.lambda);
    EXPECT_EQ(std::stod(rows[i][3]), row.scaled_numeric);
    EXPECT_EQ(std::stod(rows[i][4]), row.scaled_asym);
  }
}

TEST(Sweep, SvgHasTwoPolylines) {
  std::ostringstream out;
  write_svg(out, figure_data(5.0, 25.0, 21));
  const std::string svg = out.str();
  EXPECT_EQ(svg.rfind("<svg", 0), 0u);
  std::size_t count = 0;
  for (auto pos = svg.find("<polyline"); pos != std::string::npos;
       pos = svg.find("<polyline", pos + 1))
    ++count;
  EXPECT_EQ(count, 2u);
  EXPECT_THROW(write_svg(out, SweepTable{}), DomainError);
}

TEST(ErrorStudy, RatiosBoundedByEnvelopeConstant) {
  std::vector<double> grid;
  for (int l = 8; l <= 40; l += 4)
    grid.push_back(l);
  const auto study = error_scaling_study(grid);
  EXPECT_EQ(study.rows.size(), grid.size());
  EXPECT_LE(study.max_ratio, kEnvelopeConstant);
  EXPECT_LE(study.median_ratio, study.max_ratio);
  EXPECT_GT(study.median_ratio, 0.0);
  EXPECT_THROW(error_scaling_study({5.0}), DomainError);
}
