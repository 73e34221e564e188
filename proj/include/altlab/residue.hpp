#pragma once

/// \file residue.hpp
/// S*(lambda) for large lambda from the residues of 1/Q(z, y) at z_+(y) and
/// z_-(y), |y| <= b:
///
///     -pi S*(lambda) = I_1 + I_2,
///     I_2 = 2 pi Re int_{-b}^{b} e^{i lambda z_+(y)} / (i z_+(y)) dy + O(e^{-lambda a2}),
///     I_1 = O(e^{-lambda a1}).
///
/// |e^{i lambda z_+}| = e^{-lambda u*(y)} <= e^{-lambda sqrt(pi/2)}, so the
/// integrand is summed with that factor removed and the scaled result
/// e^{lambda sqrt(pi/2)} S*(lambda) stays O(lambda^{-1/2}) at any lambda.
/// I_1 and the remainder are not computed; their size is modelled as
/// kappa (e^{-lambda (a1 - sqrt(pi/2))} + e^{-lambda (a2 - sqrt(pi/2))}) with
/// kappa fitted against the Hankel quadrature on the overlap range.

#include "altlab/core_types.hpp"
#include "altlab/hankel.hpp"
#include "altlab/panel_quadrature.hpp"
#include "altlab/poles.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

namespace altlab {

/// Fitted by calibrate_kappa() on lambda = 8, 9, ..., 16 with the default
/// strip (largest ratio 0.15, at lambda = 8), then rounded up past double.
inline constexpr double kResidueKappa = 0.35;

struct ResidueConfig {
  int rule_order = 16;
  /// Panel width is min(max_panel_width, width_scale / sqrt(lambda)).
  double max_panel_width = 0.1;
  double width_scale = 0.5;
  int max_refinements = 6;
  double kappa = kResidueKappa;

  void validate() const {
    if (rule_order < 8)
      throw DomainError("ResidueConfig: rule_order must be >= 8");
    if (!(max_panel_width > 0.0) || !(width_scale > 0.0))
      throw DomainError("ResidueConfig: panel widths must be positive");
    if (max_refinements < 0)
      throw DomainError("ResidueConfig: max_refinements must be >= 0");
    if (!(kappa >= 0.0))
      throw DomainError("ResidueConfig: kappa must be >= 0");
  }
};

/// e^{i lambda z} / (-2 z) at z = z_+(y) or z_-(y), i.e. Res e^{i lambda z} / Q(z, y).
inline ComplexValue residue_at_pole(double y, double lambda, Branch branch,
                                    const StripParams& strip = default_strip()) {
  require_finite(lambda, "residue_at_pole: lambda");
  if (!(std::abs(y) < strip.b))
    throw DomainError("residue_at_pole: |y| must be below the strip half-width b");
  const auto pole = pole_location(y, branch);
  const ComplexValue z = pole.z();
  return std::exp(-lambda * pole.u_star) * std::polar(1.0, lambda * z.real()) / (-2.0 * z);
}

/// The scaled integrand e^{lambda sqrt(pi/2)} e^{i lambda z_+(y)} / (i z_+(y)).
inline ComplexValue scaled_saddle_integrand(double y, double lambda) {
  const auto pole = pole_location(y, Branch::plus);
  const ComplexValue iz(-pole.u_star, pole.x_star);
  return std::exp(-lambda * (pole.u_star - kSqrtHalfPi)) * std::polar(1.0, lambda * pole.x_star) /
         iz;
}

struct ScaledI2 {
  /// e^{lambda sqrt(pi/2)} int_{-b}^{b} e^{i lambda z_+} / (i z_+) dy
  ComplexValue saddle_integral;
  /// e^{lambda sqrt(pi/2)} 2 pi i sum_{+-} int Res dy; real up to rounding
  ComplexValue pair_sum;
  double error_estimate = 0.0; ///< on saddle_integral
  /// Smallest |scaled integrand| met, to confirm nothing went subnormal.
  double min_magnitude = std::numeric_limits<double>::infinity();
  std::int64_t work = 0;
};

inline ScaledI2 scaled_i2(double lambda, const StripParams& strip = default_strip(),
                          const ToleranceSpec& tol = {}, const ResidueConfig& cfg = {}) {
  if (!(lambda > 0.0) || !std::isfinite(lambda))
    throw DomainError("residue: lambda must be finite and positive");
  strip.validate();
  tol.validate();
  cfg.validate();
  const double b = strip.b;
  double width = std::min(cfg.max_panel_width, cfg.width_scale / std::sqrt(lambda));
  ScaledI2 out;
  double previous_disc = std::numeric_limits<double>::infinity();
  for (int attempt = 0;; ++attempt) {
    const auto breaks = subdivide_breaks({-b, 0.0, b}, width);
    double min_mag = std::numeric_limits<double>::infinity();
    const auto saddle = integrate_breaks(
        [&](double y) {
          const ComplexValue v = scaled_saddle_integrand(y, lambda);
          min_mag = std::min(min_mag, std::abs(v));
          return v;
        },
        [&](double y) { return std::abs(scaled_saddle_integrand(y, lambda)); }, breaks,
        cfg.rule_order);
    const double floor = 8.0 * kEpsilon * saddle.weight_mass;
    out.saddle_integral = saddle.value;
    out.error_estimate = saddle.discretization + floor;
    out.min_magnitude = min_mag;
    out.work += saddle.nodes;
    // A difference that no longer shrinks under refinement is rounding noise.
    const bool done = saddle.discretization <= std::max(tol.target(std::abs(saddle.value)), floor) ||
                      saddle.discretization > 0.5 * previous_disc;
    previous_disc = saddle.discretization;
    if (done || attempt >= cfg.max_refinements) {
      if (!done)
        throw WorkLimitError("residue: saddle integral tolerance unreachable",
                             -2.0 * saddle.value.real(), out.error_estimate, out.work);
      break;
    }
    width *= 0.5;
  }
  // Independent evaluation of the +- pair from the residues themselves.
  const auto breaks = subdivide_breaks({-b, 0.0, b}, width);
  const double shift = lambda * kSqrtHalfPi;
  const auto pair = integrate_breaks(
      [&](double y) {
        const ComplexValue sum = residue_at_pole(y, lambda, Branch::plus, strip) +
                                 residue_at_pole(y, lambda, Branch::minus, strip);
        return 2.0 * std::numbers::pi * ComplexValue(0.0, 1.0) * sum * std::exp(shift);
      },
      [](double) { return 1.0; }, breaks, cfg.rule_order);
  out.pair_sum = pair.value;
  out.work += pair.nodes;
  return out;
}

/// int_{-b}^{b} e^{i lambda z_+(y)} / (i z_+(y)) dy (the true, unscaled value).
inline ComplexValue saddle_lhs_numeric(double lambda, const StripParams& strip = default_strip(),
                                       const ToleranceSpec& tol = {}) {
  return scaled_i2(lambda, strip, tol).saddle_integral * std::exp(-lambda * kSqrtHalfPi);
}

/// Principal part of I_2: 2 pi Re of the saddle integral.
inline double residue_integral_i2(double lambda, const StripParams& strip = default_strip(),
                                  const ToleranceSpec& tol = {}) {
  const auto r = scaled_i2(lambda, strip, tol);
  return 2.0 * std::numbers::pi * r.saddle_integral.real() * std::exp(-lambda * kSqrtHalfPi);
}

/// e^{-lambda (a1 - sqrt(pi/2))} + e^{-lambda (a2 - sqrt(pi/2))}
inline double neglected_model(double lambda, const StripParams& strip) {
  return std::exp(-lambda * (strip.a1 - kSqrtHalfPi)) +
         std::exp(-lambda * (strip.a2 - kSqrtHalfPi));
}

struct ResidueResult {
  double scaled_value = 0.0;   ///< e^{lambda sqrt(pi/2)} S*(lambda)
  double unscaled_value = 0.0; ///< S*(lambda)
  double neglected_bound = 0.0; ///< scaled model bound on I_1 and the remainder
  double quadrature_error = 0.0; ///< scaled
  double imag_residual = 0.0;  ///< |Im| of the independent +- pair sum, scaled
  double min_magnitude = 0.0;
  std::int64_t work = 0;

  /// Total scaled error estimate.
  double scaled_error() const { return neglected_bound + quadrature_error; }
};

inline ResidueResult s_star_via_residue(double lambda, const StripParams& strip = default_strip(),
                                        const ToleranceSpec& tol = {},
                                        const ResidueConfig& cfg = {}) {
  const auto r = scaled_i2(lambda, strip, tol, cfg);
  ResidueResult out;
  out.scaled_value = -2.0 * r.saddle_integral.real();
  out.unscaled_value = out.scaled_value * std::exp(-lambda * kSqrtHalfPi);
  out.neglected_bound = cfg.kappa * neglected_model(lambda, strip);
  out.quadrature_error = 2.0 * r.error_estimate;
  out.imag_residual = std::abs(r.pair_sum.imag());
  out.min_magnitude = r.min_magnitude;
  out.work = r.work;
  return out;
}

inline EvalOutcome residue_outcome(double lambda, const StripParams& strip = default_strip(),
                                   const ToleranceSpec& tol = {}, const ResidueConfig& cfg = {}) {
  const auto r = s_star_via_residue(lambda, strip, tol, cfg);
  EvalOutcome out;
  out.value = r.unscaled_value;
  out.error_estimate = r.scaled_error() * std::exp(-lambda * kSqrtHalfPi);
  out.work = r.work;
  out.method = Method::residue;
  return out;
}

struct KappaSample {
  double lambda = 0.0;
  double scaled_discrepancy = 0.0;
  double ratio = 0.0; ///< scaled_discrepancy / neglected_model
};

/// Ratios of the scaled residue-vs-Hankel discrepancy to the neglected-term
/// model; kappa must dominate the largest of them.
inline std::vector<KappaSample> calibrate_kappa(const std::vector<double>& grid,
                                                const StripParams& strip = default_strip()) {
  std::vector<KappaSample> out;
  out.reserve(grid.size());
  for (const double lambda : grid) {
    const double h = hankel_s_star(lambda).value * std::exp(lambda * kSqrtHalfPi);
    const double r = s_star_via_residue(lambda, strip).scaled_value;
    const double d = std::abs(h - r);
    out.push_back({lambda, d, d / neglected_model(lambda, strip)});
  }
  return out;
}

inline std::vector<double> default_kappa_grid() {
  std::vector<double> grid;
  for (int l = 8; l <= 16; ++l)
    grid.push_back(l);
  return grid;
}

} // namespace altlab
