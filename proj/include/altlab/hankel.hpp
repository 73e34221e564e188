#pragma once

/// \file hankel.hpp
/// S*(lambda) and S(z, nu, t) through their one-dimensional Bessel-kernel
/// integrals:
///
///     S*(lambda)  = -int_0^inf J_0(lambda x) 2x / (e^{x^2} + 1) dx,
///     S(z, nu, t) =  int_0^inf z e^{-x} / (1 - z e^{-x}) (x/t)^{(nu-1)/2} J_{nu-1}(2 sqrt(tx)) dx.
///
/// Both are integrated panel by panel between consecutive zeros of the Bessel
/// factor. In doubles the absolute error cannot drop below about 1e-15 times
/// the weight mass, which is what the error estimate reports; S*(lambda)
/// falls under that floor near lambda = 27.

#include "altlab/bessel.hpp"
#include "altlab/core_types.hpp"
#include "altlab/panel_quadrature.hpp"
#include "altlab/series.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

namespace altlab {

struct QuadConfig {
  /// Upper limit for Gaussian-type weights; 2x/(e^{x^2}+1) < 1e-26 at x = 8.
  double truncation_x = 8.0;
  /// Upper limit for the e^{-x} weight of the general representation.
  double exp_truncation_x = 46.0;
  int panel_rule_order = 16;
  int max_panels = 20'000;
  int acceleration_depth = 0;
  double max_panel_width = 0.5;

  void validate() const {
    if (!(truncation_x >= 6.0))
      throw DomainError("QuadConfig: truncation_x must be >= 6");
    if (!(exp_truncation_x >= 20.0))
      throw DomainError("QuadConfig: exp_truncation_x must be >= 20");
    if (panel_rule_order < 8)
      throw DomainError("QuadConfig: panel_rule_order must be >= 8");
    if (max_panels < 1)
      throw DomainError("QuadConfig: max_panels must be positive");
    if (acceleration_depth < 0)
      throw DomainError("QuadConfig: acceleration_depth must be >= 0");
    if (!(max_panel_width > 0.0))
      throw DomainError("QuadConfig: max_panel_width must be positive");
  }
};

/// Panel breaks for int_0^x_max J_0(lambda x) g(x) dx: the origin, the scaled
/// zeros j_{0,k}/lambda below x_max, and x_max, refined to max_width.
inline std::vector<double> j0_panel_breaks(double lambda, double x_max, double max_width) {
  std::vector<double> breaks{0.0};
  if (lambda > 0.0) {
    const auto& table = J0ZeroTable::instance();
    for (int k = 1;; ++k) {
      const double x = table.zero(k) / lambda;
      if (x >= x_max)
        break;
      breaks.push_back(x);
    }
  }
  breaks.push_back(x_max);
  return subdivide_breaks(breaks, max_width);
}

namespace detail {

template <typename Value>
Outcome<Value> finish_panel_outcome(const PanelResult<Value>& r, Value value, double truncation,
                                    std::size_t panels, const QuadConfig& cfg, Method method) {
  const double floor = 8.0 * kEpsilon * r.weight_mass;
  Outcome<Value> out;
  out.value = value;
  out.error_estimate = truncation + r.discretization + floor;
  out.work = r.nodes;
  out.method = method;
  if (panels > static_cast<std::size_t>(cfg.max_panels))
    throw WorkLimitError("hankel: " + std::to_string(panels) + " panels exceed max_panels",
                         std::real(value), out.error_estimate, out.work);
  return out;
}

/// Runs `attempt(order)` with doubling orders until the discretization part
/// meets the tolerance; the floor and truncation are reported, not enforced.
template <typename Attempt>
auto refine_until(Attempt&& attempt, const QuadConfig& cfg, const ToleranceSpec& tol) {
  int order = cfg.panel_rule_order;
  for (;;) {
    auto out = attempt(order);
    const double floor_and_trunc = out.second;
    const double disc = out.first.error_estimate - floor_and_trunc;
    // Refinement differences below the rounding floor are noise.
    const double goal = std::max(tol.target(std::abs(out.first.value)), floor_and_trunc);
    if (disc <= goal || order >= 128) {
      if (disc > goal)
        throw WorkLimitError("hankel: tolerance unreachable at panel rule order 128",
                             std::real(out.first.value), out.first.error_estimate,
                             out.first.work);
      return out.first;
    }
    order *= 2;
  }
}

} // namespace detail

/// int_0^x_max J_0(lambda x) g(x) dx by zero-partitioned panels. `g_abs`
/// is the envelope |g| used for the rounding floor.
template <typename G, typename GAbs>
PanelResult<double> integrate_j0_weighted(G&& g, GAbs&& g_abs, double lambda, double x_max,
                                          int order, double max_width) {
  const auto breaks = j0_panel_breaks(lambda, x_max, max_width);
  return integrate_breaks([&](double x) { return bessel_j0(lambda * x) * g(x); }, g_abs, breaks,
                          order);
}

/// S*(lambda) by zero-partitioned panel quadrature of the Hankel transform.
inline EvalOutcome hankel_s_star(double lambda, const ToleranceSpec& tol = {},
                                 const QuadConfig& cfg = {}) {
  if (!(lambda >= 0.0) || !std::isfinite(lambda))
    throw DomainError("hankel_s_star: lambda must be finite and >= 0");
  tol.validate();
  cfg.validate();
  // 2x / (e^{x^2} + 1) written without overflow
  const auto weight = [](double x) {
    const double e = std::exp(-x * x);
    return 2.0 * x * e / (1.0 + e);
  };
  const double x_max = cfg.truncation_x;
  // int_X^inf 2x e^{-x^2} dx = e^{-X^2}, and |J_0| <= 1
  const double truncation = std::exp(-x_max * x_max);
  auto attempt = [&](int order) {
    const auto breaks = j0_panel_breaks(lambda, x_max, cfg.max_panel_width);
    const auto r = integrate_breaks([&](double x) { return bessel_j0(lambda * x) * weight(x); },
                                    weight, breaks, order);
    double value = r.value;
    if (cfg.acceleration_depth > 0)
      value = accelerate_partial_sums(r.panel_sums, cfg.acceleration_depth);
    auto out = detail::finish_panel_outcome(r, -value, truncation, breaks.size() - 1, cfg,
                                            Method::hankel);
    return std::pair{out, truncation + 8.0 * kEpsilon * r.weight_mass};
  };
  return detail::refine_until(attempt, cfg, tol);
}

/// (x/t)^{mu/2} J_mu(2 sqrt(t x)), continuous at t = 0 where it equals x^mu / Gamma(mu + 1).
inline double bessel_kernel(double mu, double t, double x) {
  if (x == 0.0)
    return mu == 0.0 ? 1.0 : 0.0;
  const double u = 2.0 * std::sqrt(t * x);
  const BesselEvalConfig cfg;
  if (u <= cfg.series_cutoff) {
    const double scaled = bessel_j_scaled_series(mu, t * x, cfg);
    return mu == 0.0 ? scaled : std::pow(x, mu) * scaled;
  }
  return std::pow(x / t, 0.5 * mu) * bessel_j(mu, u, cfg);
}

/// S(z, nu, t) from its Bessel-kernel integral; requires nu >= 1.
inline ComplexOutcome hankel_general(const SeriesParams& p, const ToleranceSpec& tol = {},
                                     const QuadConfig& cfg = {}) {
  p.validate();
  tol.validate();
  cfg.validate();
  if (p.nu < 1.0)
    throw DomainError("hankel_general: the integral representation needs nu >= 1");
  const double mu = p.nu - 1.0;
  const double t = p.t;
  const ComplexValue z = p.z;
  const double x_max = cfg.exp_truncation_x;

  std::vector<double> breaks{0.0};
  if (t > 0.0) {
    for (int k = 1;; ++k) {
      const double j = mu == 0.0 ? J0ZeroTable::instance().zero(k) : mcmahon_zero(mu, k);
      const double x = j * j / (4.0 * t);
      if (x >= x_max)
        break;
      breaks.push_back(x);
    }
  }
  breaks.push_back(x_max);
  breaks = subdivide_breaks(breaks, 2.0 * cfg.max_panel_width);
  if (mu != std::floor(mu)) {
    // x^mu endpoint behaviour: grade the first panel geometrically toward 0.
    const double first = breaks[1];
    std::vector<double> graded{0.0};
    for (int k = 40; k >= 1; --k)
      graded.push_back(std::ldexp(first, -k));
    graded.insert(graded.end(), breaks.begin() + 1, breaks.end());
    breaks = std::move(graded);
  }

  const auto weight = [z](double x) {
    const ComplexValue ze = z * std::exp(-x);
    return ze / (1.0 - ze);
  };
  const auto integrand = [&](double x) { return weight(x) * bessel_kernel(mu, t, x); };
  const auto envelope = [&](double x) {
    return std::abs(weight(x)) * std::max(1.0, std::abs(bessel_kernel(mu, 0.0, x)));
  };
  // |kernel| <= x^mu / Gamma(nu); the weight is below 2|z| e^{-x} out there.
  const double truncation =
      4.0 * std::abs(z) * std::exp(-x_max + mu * std::log(x_max) - log_gamma(p.nu));

  auto attempt = [&](int order) {
    const auto r = integrate_breaks(integrand, envelope, breaks, order);
    auto out = detail::finish_panel_outcome(r, r.value, truncation, breaks.size() - 1, cfg,
                                            Method::hankel);
    return std::pair{out, truncation + 8.0 * kEpsilon * r.weight_mass};
  };
  return detail::refine_until(attempt, cfg, tol);
}

} // namespace altlab
