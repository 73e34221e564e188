#pragma once

/// \file acceptance.hpp
/// The acceptance suite shared by `altlab verify` and the acceptance test
/// binary. Each criterion yields one Check; runtime limits are part of it.

#include "altlab/asymptotic.hpp"
#include "altlab/fourier2d.hpp"
#include "altlab/harness.hpp"
#include "altlab/hankel.hpp"
#include "altlab/poles.hpp"
#include "altlab/residue.hpp"
#include "altlab/series.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <string>
#include <vector>

namespace altlab {

namespace detail {

struct CriterionResult {
  bool passed = false;
  double measured = 0.0;
  double threshold = 0.0;
  std::string detail;
};

inline std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

inline Check timed_check(const std::string& name, double time_limit_s,
                         const std::function<CriterionResult()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Check c;
  c.name = name;
  try {
    const auto r = body();
    c.passed = r.passed;
    c.measured = r.measured;
    c.threshold = r.threshold;
    c.detail = r.detail;
  } catch (const std::exception& e) {
    c.passed = false;
    c.detail = std::string("exception: ") + e.what();
  }
  const double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (elapsed >= time_limit_s) {
    c.passed = false;
    c.detail += "; runtime limit exceeded";
  }
  c.detail += "; runtime " + fmt(elapsed) + " s of " + fmt(time_limit_s) + " s";
  return c;
}

inline bool strictly_decreasing(const std::vector<double>& v) {
  for (std::size_t i = 1; i < v.size(); ++i)
    if (!(v[i] < v[i - 1]))
      return false;
  return true;
}

inline std::string join(const std::vector<double>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i)
    s += (i ? " " : "") + fmt(v[i]);
  return s;
}

} // namespace detail

/// S(0) = -ln 2 by series, Hankel and 2D Fourier quadrature.
inline Check acceptance_value_at_zero() {
  return detail::timed_check("1 value at t=0 equals -ln2", 1.0, [] {
    const double exact = -std::numbers::ln2;
    const double e_series = std::abs(sum_alternating_s(0.0).value - exact);
    const double e_hankel = std::abs(hankel_s_star(0.0).value - exact);
    const double e_fourier = std::abs(fourier2d_s_star(0.0).value - exact);
    const double worst = std::max({e_series, e_hankel, e_fourier});
    return detail::CriterionResult{worst <= 1e-10, worst, 1e-10,
                                   "series " + detail::fmt(e_series) + ", hankel " +
                                       detail::fmt(e_hankel) + ", fourier2d " +
                                       detail::fmt(e_fourier)};
  });
}

/// Series against Hankel in t, 2D Fourier against Hankel in lambda.
inline Check acceptance_cross_method() {
  return detail::timed_check("2 series~hankel and fourier2d~hankel agreement", 60.0, [] {
    double worst_sh = 0.0;
    for (const double t : {1.0, 2.0, 5.0, 10.0, 25.0, 50.0})
      worst_sh = std::max(worst_sh, std::abs(sum_alternating_s(t).value -
                                             hankel_s_star(lambda_of_t(t)).value));
    double worst_fh = 0.0;
    for (const double lambda : {1.0, 2.0, 4.0, 8.0})
      worst_fh = std::max(worst_fh, std::abs(fourier2d_s_star(lambda).value -
                                             hankel_s_star(lambda).value));
    return detail::CriterionResult{
        worst_sh <= 1e-11 && worst_fh <= 1e-8, worst_sh, 1e-11,
        "series~hankel " + detail::fmt(worst_sh) + " (<= 1e-11), fourier2d~hankel " +
            detail::fmt(worst_fh) + " (<= 1e-8)"};
  });
}

/// Pole residuals and strip geometry.
inline Check acceptance_pole_geometry() {
  return detail::timed_check("3 pole geometry", 1.0, [] {
    const auto strip = default_strip();
    double root = 0.0;
    for (int i = 1; i <= 50; ++i) {
      const double y = -strip.b + 2.0 * strip.b * i / 51.0;
      root = std::max({root, std::abs(q_eval(z_plus(y), y)), std::abs(q_eval(z_minus(y), y))});
    }
    const double at_zero = std::abs(u_star(0.0) - kSqrtHalfPi);
    const double at_b = std::abs(u_star(strip.b) - strip.a);
    double quartic = 0.0;
    for (const double y : {1.0, 2.0, 3.0}) {
      const double u = u_star(y);
      quartic = std::max(quartic, std::abs(u * u * u * u - y * y * u * u -
                                           0.25 * std::numbers::pi * std::numbers::pi));
    }
    const bool ok = root <= 1e-12 && at_zero <= 1e-14 && at_b <= 1e-12 && quartic <= 1e-10;
    return detail::CriterionResult{ok, root, 1e-12,
                                   "|Q(z+-)| " + detail::fmt(root) + ", u*(0) " +
                                       detail::fmt(at_zero) + ", u*(b)-a " + detail::fmt(at_b) +
                                       ", quartic " + detail::fmt(quartic)};
  });
}

/// Scaled residue-vs-Hankel discrepancy falls with lambda.
inline Check acceptance_residue_convergence() {
  return detail::timed_check("4 residue method convergence", 30.0, [] {
    std::vector<double> d;
    for (const double lambda : {10.0, 12.0, 14.0, 16.0})
      d.push_back(std::exp(lambda * kSqrtHalfPi) *
                  std::abs(hankel_s_star(lambda).value - s_star_via_residue(lambda).unscaled_value));
    const double at14 = d[2];
    return detail::CriterionResult{detail::strictly_decreasing(d) && at14 <= 0.02, at14, 0.02,
                                   "scaled discrepancy on {10,12,14,16}: " + detail::join(d)};
  });
}

/// Numeric saddle integral against its closed form.
inline Check acceptance_saddle_point() {
  return detail::timed_check("5 saddle point estimate", 30.0, [] {
    const auto deviation = [](double lambda) {
      const ComplexValue num = scaled_i2(lambda).saddle_integral;
      const ComplexValue closed = saddle_rhs_closed(lambda, true);
      return std::abs(num - closed) / std::abs(closed);
    };
    const double at30 = deviation(30.0);
    std::vector<double> scaled;
    for (const double lambda : {20.0, 40.0, 60.0})
      scaled.push_back(lambda * deviation(lambda));
    const double spread = *std::max_element(scaled.begin(), scaled.end()) /
                          *std::min_element(scaled.begin(), scaled.end());
    return detail::CriterionResult{at30 <= 0.1 && spread < 3.0, at30, 0.1,
                                   "relative deviation at 30: " + detail::fmt(at30) +
                                       "; lambda*dev on {20,40,60}: " + detail::join(scaled) +
                                       " (spread " + detail::fmt(spread) + " < 3)"};
  });
}

/// Envelope ratio spread and the lambda/t forms of the asymptotic law.
inline Check acceptance_asymptotic_law(bool quick) {
  return detail::timed_check("6 asymptotic law and error envelope", 60.0, [quick] {
    const auto study = error_scaling_study({15.0, 20.0, 25.0, 30.0, 35.0, 40.0});
    const double spread = study.max_ratio / study.median_ratio;
    std::mt19937_64 rng(20240601);
    std::uniform_real_distribution<double> dist(0.1, 400.0);
    const int samples = quick ? 20 : 100;
    double worst_ulps = 0.0;
    for (int i = 0; i < samples; ++i) {
      const double t = dist(rng);
      const auto a = asym_s_star(2.0 * std::sqrt(t));
      const auto b = asym_s_t(t);
      worst_ulps = std::max(worst_ulps, std::abs(a.value - b.value) / (kEpsilon * a.amplitude));
    }
    return detail::CriterionResult{spread <= 10.0 && worst_ulps <= 4.0, spread, 10.0,
                                   "envelope ratio max/median " + detail::fmt(spread) + " (max " +
                                       detail::fmt(study.max_ratio) + "); lambda/t forms differ by " +
                                       detail::fmt(worst_ulps) + " ulp of the amplitude over " +
                                       std::to_string(samples) + " points"};
  });
}

/// e^{1.2 lambda} |S*(lambda)| decreases.
inline Check acceptance_rough_bound() {
  return detail::timed_check("7 rough exponential bound", 30.0, [] {
    const auto trace = rough_bound_trace(1.2, {10.0, 15.0, 20.0, 25.0});
    return detail::CriterionResult{detail::strictly_decreasing(trace), trace.back(), trace.front(),
                                   "e^{1.2 lambda}|S*| on {10,15,20,25}: " + detail::join(trace)};
  });
}

/// Figure table: asymptotic fit improving across the range, byte-stable CSV.
inline Check acceptance_figure() {
  return detail::timed_check("8 figure reproduction", 60.0, [] {
    const std::string first = csv_string(figure_data(5.0, 25.0, 200));
    const std::string second = csv_string(figure_data(5.0, 25.0, 200));
    const auto rows = parse_csv(first);
    std::array<double, 3> sup{0.0, 0.0, 0.0};
    for (std::size_t i = 1; i < rows.size(); ++i) {
      const double lambda = std::stod(rows[i][0]);
      const double diff = std::abs(std::stod(rows[i][3]) - std::stod(rows[i][4]));
      const int third = std::min(2, static_cast<int>(3.0 * (lambda - 5.0) / 20.0));
      sup[third] = std::max(sup[third], diff);
    }
    const double overall = std::max({sup[0], sup[1], sup[2]});
    const bool identical = first == second;
    const bool ok = rows.size() == 201 && overall <= 0.5 && sup[0] > sup[1] && sup[1] > sup[2] &&
                    identical;
    return detail::CriterionResult{ok, overall, 0.5,
                                   "per-third sup " + detail::fmt(sup[0]) + " " +
                                       detail::fmt(sup[1]) + " " + detail::fmt(sup[2]) +
                                       (identical ? "; byte-identical" : "; runs differ")};
  });
}

/// Differential relations, Gaussian term identity, radial transform.
inline Check acceptance_identities() {
  return detail::timed_check("9 derivative and transform identities", 30.0, [] {
    const auto r = derivative_residuals({{0.5, 0.0}, 1.0, 1.0}, 1e-4);
    const double deriv = std::max({r.dt_relation, r.dz_relation, r.mixed_relation});
    double gauss = 0.0;
    for (int m = 1; m <= 6; ++m)
      for (const double lambda : {0.0, 1.0, 3.0}) {
        const auto g = gaussian_term_identity(m, lambda);
        gauss = std::max({gauss, std::abs(g.numeric - g.closed_form), std::abs(g.numeric_imag)});
      }
    double radial = 0.0;
    for (const double rho : {0.0, 2.0}) {
      const double v = radial_transform([](double x) { return std::exp(-x * x); }, rho);
      radial = std::max(radial, std::abs(v - std::numbers::pi * std::exp(-0.25 * rho * rho)));
    }
    const bool ok = deriv <= 1e-6 && gauss <= 1e-9 && radial <= 1e-10;
    return detail::CriterionResult{ok, deriv, 1e-6,
                                   "derivative residuals " + detail::fmt(deriv) +
                                       ", gaussian identity " + detail::fmt(gauss) +
                                       ", radial transform " + detail::fmt(radial)};
  });
}

/// Error estimates admit the precision walls instead of hiding them.
inline Check acceptance_precision_honesty() {
  return detail::timed_check("10 precision honesty", 10.0, [] {
    const auto s = sum_alternating_s(150.0);
    const double series_rel = s.error_estimate / std::abs(s.value);
    bool hankel_ok = false;
    std::string hankel_note;
    try {
      const auto h = hankel_s_star(40.0);
      hankel_ok = h.error_estimate >= std::abs(h.value);
      hankel_note = "hankel(40) error " + detail::fmt(h.error_estimate) + " vs |value| " +
                    detail::fmt(std::abs(h.value));
    } catch (const RangeError& e) {
      hankel_ok = true;
      hankel_note = std::string("hankel(40) range error: ") + e.what();
    }
    return detail::CriterionResult{series_rel >= 1e-4 && hankel_ok, series_rel, 1e-4,
                                   "series(150) relative error estimate " +
                                       detail::fmt(series_rel) + "; " + hankel_note};
  });
}

/// All criteria in order.
inline VerifyReport run_acceptance(bool quick = false) {
  VerifyReport report;
  report.checks.push_back(acceptance_value_at_zero());
  report.checks.push_back(acceptance_cross_method());
  report.checks.push_back(acceptance_pole_geometry());
  report.checks.push_back(acceptance_residue_convergence());
  report.checks.push_back(acceptance_saddle_point());
  report.checks.push_back(acceptance_asymptotic_law(quick));
  report.checks.push_back(acceptance_rough_bound());
  report.checks.push_back(acceptance_figure());
  report.checks.push_back(acceptance_identities());
  report.checks.push_back(acceptance_precision_honesty());
  return report;
}

} // namespace altlab
