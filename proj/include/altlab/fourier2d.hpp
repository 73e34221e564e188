#pragma once

/// \file fourier2d.hpp
/// S*(lambda) from the two-dimensional Fourier integral
///
///     S*(lambda) = -(1/pi) int int e^{i lambda x} / (1 + e^{x^2 + y^2}) dx dy,
///
/// evaluated as an outer y-quadrature over the inner cosine transform
/// T(y, lambda). Two nested quadratures leave an absolute floor near 1e-13,
/// so the route is only offered for lambda <= 12.

#include "altlab/core_types.hpp"
#include "altlab/hankel.hpp"
#include "altlab/panel_quadrature.hpp"

#include <cmath>
#include <numbers>
#include <vector>

namespace altlab {

inline constexpr double kFourier2dMaxLambda = 12.0;

struct Fourier2dConfig {
  double y_truncation = 6.0;
  double x_truncation = 6.5;
  double inner_tol = 1e-15;
  double outer_tol = 1e-13;
  int rule_order = 16;
  double max_panel_width = 0.5;

  void validate() const {
    if (!(y_truncation >= 6.0) || !(x_truncation >= 6.0))
      throw DomainError("Fourier2dConfig: truncations must be >= 6");
    if (!(inner_tol > 0.0) || !(outer_tol > 0.0))
      throw DomainError("Fourier2dConfig: tolerances must be positive");
    if (rule_order < 8)
      throw DomainError("Fourier2dConfig: rule_order must be >= 8");
  }
};

namespace detail {

/// 1 / (1 + e^{s}) without overflow.
inline double fermi(double s) {
  const double e = std::exp(-s);
  return e / (1.0 + e);
}

/// Zeros of cos(lambda x) on (0, x_max), plus the end points.
inline std::vector<double> cosine_breaks(double lambda, double x_max, double max_width) {
  std::vector<double> breaks{0.0};
  if (lambda > 0.0) {
    for (int k = 0;; ++k) {
      const double x = (k + 0.5) * std::numbers::pi / lambda;
      if (x >= x_max)
        break;
      breaks.push_back(x);
    }
  }
  breaks.push_back(x_max);
  return subdivide_breaks(breaks, max_width);
}

} // namespace detail

/// T(y, lambda) = int e^{i lambda x} / (1 + e^{x^2+y^2}) dx as
/// 2 int_0^X cos(lambda x) / (1 + e^{x^2+y^2}) dx, with its error estimate.
inline EvalOutcome inner_t_outcome(double y, double lambda, const Fourier2dConfig& cfg = {}) {
  if (!std::isfinite(y) || !std::isfinite(lambda))
    throw DomainError("inner_t: arguments must be finite");
  const double y2 = y * y;
  const double x_max = cfg.x_truncation;
  const auto breaks = detail::cosine_breaks(std::abs(lambda), x_max, cfg.max_panel_width);
  const auto envelope = [y2](double x) { return detail::fermi(x * x + y2); };
  const auto r = integrate_breaks(
      [&](double x) { return std::cos(lambda * x) * envelope(x); }, envelope, breaks,
      cfg.rule_order);
  // int_X^inf e^{-x^2 - y^2} dx <= e^{-X^2 - y^2} / (2X)
  const double truncation = std::exp(-x_max * x_max - y2) / x_max;
  EvalOutcome out;
  out.value = 2.0 * r.value;
  out.error_estimate = 2.0 * (r.discretization + 4.0 * kEpsilon * r.weight_mass) + truncation;
  out.work = r.nodes;
  out.method = Method::fourier2d;
  if (out.error_estimate > std::max(cfg.inner_tol, 1e-15 * std::abs(out.value)) &&
      r.discretization > 4.0 * kEpsilon * r.weight_mass)
    throw WorkLimitError("inner_t: tolerance unreachable", out.value, out.error_estimate, out.work);
  return out;
}

inline double inner_t(double y, double lambda, const ToleranceSpec& tol = {}) {
  Fourier2dConfig cfg;
  cfg.inner_tol = std::max(tol.abs_tol, cfg.inner_tol);
  return inner_t_outcome(y, lambda, cfg).value;
}

/// The inner integral over [-X, X] without using the even symmetry; its
/// imaginary part vanishes up to rounding.
inline ComplexValue inner_t_full(double y, double lambda, const Fourier2dConfig& cfg = {}) {
  const double y2 = y * y;
  const double x_max = cfg.x_truncation;
  auto half = detail::cosine_breaks(std::abs(lambda), x_max, cfg.max_panel_width);
  std::vector<double> breaks;
  for (auto it = half.rbegin(); it != half.rend(); ++it)
    breaks.push_back(-*it);
  breaks.insert(breaks.end(), half.begin() + 1, half.end());
  const auto envelope = [y2](double x) { return detail::fermi(x * x + y2); };
  const auto r = integrate_breaks(
      [&](double x) { return std::polar(envelope(x), lambda * x); }, envelope, breaks,
      cfg.rule_order);
  return r.value;
}

/// S*(lambda) = -(1/pi) int T(y, lambda) dy over [-Y, Y].
inline EvalOutcome fourier2d_s_star(double lambda, const ToleranceSpec& tol = {},
                                    const Fourier2dConfig& cfg = {}) {
  if (!(lambda >= 0.0) || !std::isfinite(lambda))
    throw DomainError("fourier2d_s_star: lambda must be finite and >= 0");
  if (lambda > kFourier2dMaxLambda)
    throw RangeError("fourier2d_s_star: lambda beyond 12 is below the nested-quadrature floor");
  tol.validate();
  cfg.validate();
  const double y_max = cfg.y_truncation;
  const auto breaks = subdivide_breaks({-y_max, 0.0, y_max}, cfg.max_panel_width);
  double inner_error = 0.0;
  std::int64_t inner_work = 0;
  const auto outer = integrate_breaks(
      [&](double y) {
        const auto t = inner_t_outcome(y, lambda, cfg);
        inner_error = std::max(inner_error, t.error_estimate);
        inner_work += t.work;
        return t.value;
      },
      [](double y) { return std::sqrt(std::numbers::pi) * detail::fermi(y * y); }, breaks,
      cfg.rule_order);
  // |T(y)| <= sqrt(pi) e^{-y^2}; the two tails contribute at most sqrt(pi) e^{-Y^2} / Y.
  const double truncation = std::sqrt(std::numbers::pi) * std::exp(-y_max * y_max) / y_max;
  EvalOutcome out;
  out.value = -outer.value / std::numbers::pi;
  out.error_estimate =
      (outer.discretization + 2.0 * y_max * inner_error + truncation +
       8.0 * kEpsilon * outer.weight_mass) /
      std::numbers::pi;
  out.work = inner_work;
  out.method = Method::fourier2d;
  if (out.error_estimate > std::max(cfg.outer_tol, tol.target(out.value)))
    throw WorkLimitError("fourier2d_s_star: tolerance unreachable", out.value,
                         out.error_estimate, out.work);
  return out;
}

struct GaussianTermIdentity {
  double numeric = 0.0;      ///< real part of the quadrature value
  double numeric_imag = 0.0; ///< must vanish
  double closed_form = 0.0;  ///< (pi / m) e^{-lambda^2 / (4m)}
};

/// int int e^{i lambda x - m (x^2 + y^2)} dx dy by a tensor Gauss-Legendre
/// rule, next to its closed form. Summing (-1)^{m+1} of these over m
/// reproduces -pi S*(lambda) term by term.
inline GaussianTermIdentity gaussian_term_identity(int m, double lambda) {
  if (m < 1)
    throw DomainError("gaussian_term_identity: m must be >= 1");
  if (!(lambda >= 0.0))
    throw DomainError("gaussian_term_identity: lambda must be >= 0");
  const double dm = static_cast<double>(m);
  const double half_width = std::sqrt(42.0 / dm);
  const auto breaks = subdivide_breaks({-half_width, 0.0, half_width}, 0.5 / std::sqrt(dm));
  const auto& rule = gauss_legendre(20);
  std::vector<double> nodes;
  std::vector<double> weights;
  for (std::size_t i = 1; i < breaks.size(); ++i) {
    const double a = breaks[i - 1];
    const double b = breaks[i];
    for (int k = 0; k < rule.order(); ++k) {
      nodes.push_back(0.5 * (a + b) + 0.5 * (b - a) * rule.nodes()[k]);
      weights.push_back(0.5 * (b - a) * rule.weights()[k]);
    }
  }
  CompensatedSum<double> re;
  CompensatedSum<double> im;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const double x = nodes[i];
    for (std::size_t j = 0; j < nodes.size(); ++j) {
      const double y = nodes[j];
      const ComplexValue v =
          weights[i] * weights[j] * std::polar(std::exp(-dm * (x * x + y * y)), lambda * x);
      re.add(v.real());
      im.add(v.imag());
    }
  }
  return {re.value(), im.value(),
          std::numbers::pi / dm * std::exp(-lambda * lambda / (4.0 * dm))};
}

/// 2 pi int_0^inf J_0(r rho) f(r) r dr, the 2D Fourier transform of a radial
/// function, by the zero-partitioned Hankel panels up to cfg.truncation_x.
template <typename F>
EvalOutcome radial_transform_outcome(F&& f, double rho, const ToleranceSpec& tol = {},
                                     const QuadConfig& cfg = {}) {
  if (!(rho >= 0.0) || !std::isfinite(rho))
    throw DomainError("radial_transform: rho must be finite and >= 0");
  tol.validate();
  cfg.validate();
  const auto g = [&](double r) { return f(r) * r; };
  const auto g_abs = [&](double r) { return std::abs(f(r)) * r; };
  const auto res = integrate_j0_weighted(g, g_abs, rho, cfg.truncation_x, cfg.panel_rule_order,
                                         cfg.max_panel_width);
  EvalOutcome out;
  out.value = 2.0 * std::numbers::pi * res.value;
  out.error_estimate =
      2.0 * std::numbers::pi * (res.discretization + 8.0 * kEpsilon * res.weight_mass);
  out.work = res.nodes;
  out.method = Method::hankel;
  if (res.discretization > std::max(tol.target(res.value), 8.0 * kEpsilon * res.weight_mass))
    throw WorkLimitError("radial_transform: tolerance unreachable", out.value,
                         out.error_estimate, out.work);
  return out;
}

template <typename F>
double radial_transform(F&& f, double rho, const ToleranceSpec& tol = {},
                        const QuadConfig& cfg = {}) {
  return radial_transform_outcome(std::forward<F>(f), rho, tol, cfg).value;
}

} // namespace altlab
