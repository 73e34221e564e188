#pragma once

/// \file asymptotic.hpp
/// Leading-order asymptotics of S*(lambda) and S(t), the saddle-point value
/// of the residue integral, and the error envelope
/// e^{-lambda sqrt(pi/2)} lambda^{-3/2}.

#include "altlab/core_types.hpp"
#include "altlab/hankel.hpp"
#include "altlab/residue.hpp"

#include <cmath>
#include <numbers>
#include <vector>

namespace altlab {

/// 2^{3/2} pi^{1/4}
inline constexpr double kAsymConstant = 3.7655850551068593;
/// 2^{1/2} pi^{1/4}
inline constexpr double kSaddleConstant = 1.8827925275534296;
/// lambda above which the Hankel route is past its double-precision floor.
inline constexpr double kHankelMaxLambda = 25.0;

struct AsymptoticTerm {
  double amplitude = 0.0;
  double phase = 0.0;
  double value = 0.0;
};

/// S*(lambda) ~ 2^{3/2} pi^{1/4} e^{-lambda sqrt(pi/2)} lambda^{-1/2} cos(lambda sqrt(pi/2) + pi/8)
inline AsymptoticTerm asym_s_star(double lambda) {
  if (!(lambda > 0.0) || !std::isfinite(lambda))
    throw DomainError("asym_s_star: lambda must be finite and positive");
  const double theta = lambda * kSqrtHalfPi;
  AsymptoticTerm out;
  out.amplitude = kAsymConstant * std::exp(-theta) / std::sqrt(lambda);
  out.phase = theta + std::numbers::pi / 8.0;
  out.value = out.amplitude * std::cos(out.phase);
  return out;
}

/// e^{lambda sqrt(pi/2)} asym_s_star(lambda).value, finite for any lambda.
inline double asym_s_star_scaled(double lambda) {
  if (!(lambda > 0.0) || !std::isfinite(lambda))
    throw DomainError("asym_s_star_scaled: lambda must be finite and positive");
  return kAsymConstant * std::cos(lambda * kSqrtHalfPi + std::numbers::pi / 8.0) /
         std::sqrt(lambda);
}

/// S(t) ~ 2 pi^{1/4} e^{-sqrt(2 pi t)} t^{-1/4} cos(sqrt(2 pi t) + pi/8)
inline AsymptoticTerm asym_s_t(double t) {
  if (!(t > 0.0) || !std::isfinite(t))
    throw DomainError("asym_s_t: t must be finite and positive");
  const double root_t = std::sqrt(t);
  // sqrt(2 pi t), formed the same way as lambda sqrt(pi/2) with lambda = 2 sqrt(t)
  const double theta = (2.0 * root_t) * kSqrtHalfPi;
  constexpr double two_pi_quarter = 2.6626707276007794; // 2 pi^{1/4}
  AsymptoticTerm out;
  out.amplitude = two_pi_quarter * std::exp(-theta) / std::sqrt(root_t);
  out.phase = theta + std::numbers::pi / 8.0;
  out.value = out.amplitude * std::cos(out.phase);
  return out;
}

/// Saddle-point value of int_{-b}^{b} e^{i lambda z_+(y)} / (i z_+(y)) dy:
///     -2^{1/2} pi^{1/4} lambda^{-1/2} e^{-lambda sqrt(pi/2)} e^{i (lambda sqrt(pi/2) + pi/8)}.
/// With `scaled` the factor e^{-lambda sqrt(pi/2)} is left out.
inline ComplexValue saddle_rhs_closed(double lambda, bool scaled = false) {
  if (!(lambda > 0.0) || !std::isfinite(lambda))
    throw DomainError("saddle_rhs_closed: lambda must be finite and positive");
  const double theta = lambda * kSqrtHalfPi;
  const double modulus =
      kSaddleConstant / std::sqrt(lambda) * (scaled ? 1.0 : std::exp(-theta));
  return -std::polar(modulus, theta + std::numbers::pi / 8.0);
}

/// e^{-lambda sqrt(pi/2)} lambda^{-3/2}
inline double error_envelope(double lambda) {
  if (!(lambda > 0.0) || !std::isfinite(lambda))
    throw DomainError("error_envelope: lambda must be finite and positive");
  return std::exp(-lambda * kSqrtHalfPi) * std::pow(lambda, -1.5);
}

/// S*(lambda) from the best numeric route: Hankel quadrature up to
/// lambda = 25, the residue split beyond.
inline EvalOutcome best_numeric_s_star(double lambda, const ToleranceSpec& tol = {},
                                       const QuadConfig& quad = {},
                                       const StripParams& strip = default_strip(),
                                       const ResidueConfig& residue = {}) {
  if (lambda <= kHankelMaxLambda)
    return hankel_s_star(lambda, tol, quad);
  return residue_outcome(lambda, strip, tol, residue);
}

/// e^{a lambda} |S*(lambda)| along the grid, for 0 <= a < sqrt(pi/2).
inline std::vector<double> rough_bound_trace(double a, const std::vector<double>& lambda_grid) {
  if (!(a >= 0.0 && a < kSqrtHalfPi))
    throw DomainError("rough_bound_trace: a must lie in [0, sqrt(pi/2))");
  std::vector<double> out;
  out.reserve(lambda_grid.size());
  for (const double lambda : lambda_grid)
    out.push_back(std::exp(a * lambda) * std::abs(best_numeric_s_star(lambda).value));
  return out;
}

} // namespace altlab
