#pragma once

/// \file panel_quadrature.hpp
/// Composite Gauss-Legendre integration over caller-supplied panel breaks,
/// with a two-order refinement estimate per panel.

#include "altlab/core_types.hpp"
#include "altlab/double_double.hpp"
#include "altlab/gauss_legendre.hpp"

#include <cmath>
#include <complex>
#include <cstdint>
#include <vector>

namespace altlab {

template <typename Value>
struct PanelResult {
  Value value{};
  /// sum over panels of |Q_2p - Q_p|; Q_2p is the returned value.
  double discretization = 0.0;
  /// Integral of |weight|, the scale for rounding floors.
  double weight_mass = 0.0;
  std::int64_t nodes = 0;
  std::vector<Value> panel_sums;
};

/// Refines `breaks` so that no panel is wider than `max_width`.
inline std::vector<double> subdivide_breaks(const std::vector<double>& breaks, double max_width) {
  std::vector<double> out;
  if (breaks.empty())
    return out;
  out.push_back(breaks.front());
  for (std::size_t i = 1; i < breaks.size(); ++i) {
    const double a = breaks[i - 1];
    const double b = breaks[i];
    const int pieces = std::max(1, static_cast<int>(std::ceil((b - a) / max_width)));
    for (int k = 1; k < pieces; ++k)
      out.push_back(a + (b - a) * k / pieces);
    out.push_back(b);
  }
  return out;
}

namespace detail {

inline void add_compensated(CompensatedSum<double>& re, CompensatedSum<double>&, double v) {
  re.add(v);
}

inline void add_compensated(CompensatedSum<double>& re, CompensatedSum<double>& im,
                            std::complex<double> v) {
  re.add(v.real());
  im.add(v.imag());
}

template <typename Value>
Value read_compensated(const CompensatedSum<double>& re, const CompensatedSum<double>& im) {
  if constexpr (std::is_same_v<Value, double>)
    return re.value();
  else
    return Value(re.value(), im.value());
}

} // namespace detail

/// Integrates f over consecutive panels [breaks[i], breaks[i+1]] with rules
/// of order p and 2p. `weight_abs(x)` gives the non-oscillatory envelope used
/// for the rounding-floor scale.
template <typename F, typename W>
auto integrate_breaks(F&& f, W&& weight_abs, const std::vector<double>& breaks, int order) {
  using Value = decltype(f(0.0));
  const auto& coarse = gauss_legendre(order);
  const auto& fine = gauss_legendre(2 * order);
  PanelResult<Value> result;
  CompensatedSum<double> re;
  CompensatedSum<double> im;
  CompensatedSum<double> mass;
  result.panel_sums.reserve(breaks.size());
  for (std::size_t i = 1; i < breaks.size(); ++i) {
    const double a = breaks[i - 1];
    const double b = breaks[i];
    if (!(b > a))
      continue;
    const Value q_fine = integrate_panel(f, a, b, fine);
    const Value q_coarse = integrate_panel(f, a, b, coarse);
    result.discretization += std::abs(q_fine - q_coarse);
    detail::add_compensated(re, im, q_fine);
    mass.add(integrate_panel(weight_abs, a, b, coarse));
    result.panel_sums.push_back(q_fine);
    result.nodes += 3 * order;
  }
  result.value = detail::read_compensated<Value>(re, im);
  result.weight_mass = mass.value();
  return result;
}

/// Repeated averaging of the last depth+1 partial sums of an alternating
/// sequence of panel contributions (Euler-type acceleration).
template <typename Value>
Value accelerate_partial_sums(const std::vector<Value>& panel_sums, int depth) {
  std::vector<Value> partial;
  partial.reserve(panel_sums.size());
  Value s{};
  for (const auto& v : panel_sums) {
    s += v;
    partial.push_back(s);
  }
  if (depth <= 0 || partial.size() < static_cast<std::size_t>(depth) + 1)
    return partial.empty() ? Value{} : partial.back();
  std::vector<Value> tail(partial.end() - (depth + 1), partial.end());
  for (int level = 0; level < depth; ++level)
    for (std::size_t i = 0; i + 1 < tail.size() - level; ++i)
      tail[i] = 0.5 * (tail[i] + tail[i + 1]);
  return tail.front();
}

} // namespace altlab
