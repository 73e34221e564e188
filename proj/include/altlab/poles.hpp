#pragma once

/// \file poles.hpp
/// Zeros of Q(z, y) = 1 + e^{z^2 + y^2} in the z-plane and the strip
/// parameters that decide which of them contribute residues.
///
/// Writing z = x + iu, Q = 0 on the k = 0 branch means
///     x^2 + y^2 = u^2,   x u = pi/2,
/// so u^4 - y^2 u^2 - (pi/2)^2 = 0.

#include "altlab/core_types.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

namespace altlab {

enum class Branch { plus, minus };

inline constexpr double kSqrtThreeHalfPi = 2.1708037636748029; // sqrt(3 pi / 2)

/// 1 + e^{z^2 + y^2}.
inline ComplexValue q_eval(ComplexValue z, double y) {
  const ComplexValue w = z * z + y * y;
  if (w.real() > 700.0)
    throw RangeError("q_eval: Re(z^2 + y^2) > 700 overflows");
  return 1.0 + std::exp(w);
}

/// Positive root of u^4 - y^2 u^2 - pi^2/4 = 0.
inline double u_star(double y) {
  const double y2 = y * y;
  constexpr double pi2 = std::numbers::pi * std::numbers::pi;
  return std::sqrt(0.5 * (y2 + std::sqrt(y2 * y2 + pi2)));
}

inline double x_star(double y) { return 0.5 * std::numbers::pi / u_star(y); }

inline ComplexValue z_plus(double y) { return {x_star(y), u_star(y)}; }
inline ComplexValue z_minus(double y) { return {-x_star(y), u_star(y)}; }
inline ComplexValue z_branch(double y, Branch branch) {
  return branch == Branch::plus ? z_plus(y) : z_minus(y);
}

struct PoleLocation {
  double y = 0.0;
  double x_star = 0.0;
  double u_star = 0.0;
  Branch branch = Branch::plus;

  ComplexValue z() const {
    return {branch == Branch::plus ? x_star : -x_star, u_star};
  }
};

inline PoleLocation pole_location(double y, Branch branch = Branch::plus) {
  require_finite(y, "pole_location: y");
  const double u = u_star(y);
  return {y, 0.5 * std::numbers::pi / u, u, branch};
}

/// Half-width b of the y-interval on which u_star(y) < a.
inline double strip_width_b(double a) {
  if (!(a > kSqrtHalfPi && a < kSqrtThreeHalfPi))
    throw DomainError("strip_width_b: a must lie in (sqrt(pi/2), sqrt(3 pi/2))");
  const double x0 = 0.5 * std::numbers::pi / a;
  return std::sqrt(a * a - x0 * x0);
}

struct StripParams {
  double a1 = 0.0;
  double a = 0.0;
  double a2 = 0.0;
  double b = 0.0;

  void validate() const {
    if (!(kSqrtHalfPi < a1 && a1 < a && a < a2 && a2 < kSqrtThreeHalfPi))
      throw DomainError("StripParams: need sqrt(pi/2) < a1 < a < a2 < sqrt(3 pi/2)");
    if (!(b > 0.0) || std::abs(b - strip_width_b(a)) > 1e-12 * b)
      throw DomainError("StripParams: b must equal strip_width_b(a)");
  }
};

inline StripParams make_strip(double a1, double a, double a2) {
  if (!(a > kSqrtHalfPi && a < kSqrtThreeHalfPi))
    throw DomainError("make_strip: a must lie in (sqrt(pi/2), sqrt(3 pi/2))");
  StripParams s{a1, a, a2, strip_width_b(a)};
  s.validate();
  return s;
}

inline StripParams default_strip() { return make_strip(1.9, 2.0, 2.15); }

struct YInterval {
  double lo = 0.0;
  double hi = 0.0;
};

/// Union of closed y-intervals.
using YRegion = std::vector<YInterval>;

/// |y| <= b.
inline YRegion region_inside(double b) { return {{-b, b}}; }

/// |y| >= b, cut at |y| = y_max (the grid never needs more).
inline YRegion region_outside(double b, double y_max) {
  if (!(y_max > b))
    return {};
  return {{-y_max, -b}, {b, y_max}};
}

inline bool region_contains(const YRegion& region, double y) {
  return std::any_of(region.begin(), region.end(),
                     [y](const YInterval& iv) { return iv.lo <= y && y <= iv.hi; });
}

/// |Q(x + iu, y)| e^{-(x^2+y^2)}, without overflow for any x, y.
inline double q_scaled_modulus(double x, double u, double y) {
  const double s = x * x + y * y - u * u;
  const ComplexValue inner = std::exp(-s) + std::polar(1.0, 2.0 * x * u);
  return std::exp(-u * u) * std::abs(inner);
}

/// alpha with |Q(x + iu, y)| >= alpha e^{x^2 + y^2} for all real x and y in
/// the region. Outside Omega = {x^2 + y^2 <= u^2 + ln 2} the bound e^{-u^2}/2
/// holds analytically; inside, 1/C is sampled at grid_step and cut by 10%.
inline double q_lower_bound_alpha(double u, const YRegion& region, double grid_step = 0.01) {
  if (!(u > 0.0) || !std::isfinite(u))
    throw DomainError("q_lower_bound_alpha: u must be finite and positive");
  if (!(grid_step > 0.0))
    throw DomainError("q_lower_bound_alpha: grid_step must be positive");
  // Poles on the line Im z = u: x = (2k+1) pi / (2u), y^2 = u^2 - x^2.
  for (int k = 0;; ++k) {
    const double x = (2 * k + 1) * 0.5 * std::numbers::pi / u;
    if (x > u)
      break;
    const double y = std::sqrt(u * u - x * x);
    if (region_contains(region, y) || region_contains(region, -y))
      throw DomainError("q_lower_bound_alpha: Q(. + i u, y) has a pole at y = " +
                        std::to_string(y) + " inside the region");
  }
  const double radius = std::sqrt(u * u + std::numbers::ln2);
  double c_max = 0.0;
  for (const auto& iv : region) {
    const double lo = std::max(iv.lo, -radius);
    const double hi = std::min(iv.hi, radius);
    if (lo > hi)
      continue;
    const int ny = std::max(1, static_cast<int>(std::ceil((hi - lo) / grid_step)));
    for (int j = 0; j <= ny; ++j) {
      const double y = lo + (hi - lo) * j / ny;
      const double x_lim = std::sqrt(std::max(0.0, radius * radius - y * y));
      const int nx = std::max(1, static_cast<int>(std::ceil(2.0 * x_lim / grid_step)));
      for (int i = 0; i <= nx; ++i) {
        const double x = -x_lim + 2.0 * x_lim * i / nx;
        c_max = std::max(c_max, 1.0 / q_scaled_modulus(x, u, y));
      }
    }
  }
  const double analytic = 0.5 * std::exp(-u * u);
  if (c_max == 0.0)
    return analytic;
  return std::min(analytic, 0.9 / c_max);
}

} // namespace altlab
