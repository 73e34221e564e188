#pragma once

/// \file gauss_legendre.hpp
/// Gauss-Legendre rules and fixed-order panel integration.

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace altlab {

/// Nodes and weights of the n-point Gauss-Legendre rule on [-1, 1].
class GaussLegendreRule {
public:
  explicit GaussLegendreRule(int n) : nodes_(n), weights_(n) {
    if (n < 1)
      throw std::invalid_argument("GaussLegendreRule: order must be >= 1");
    // Newton iteration on P_n in extended precision, seeded with the
    // Tricomi-style cosine guess. Nodes come out symmetric by construction.
    const int half = (n + 1) / 2;
    for (int i = 0; i < half; ++i) {
      long double x = std::cos(std::numbers::pi_v<long double> * (i + 0.75L) / (n + 0.5L));
      long double dp = 0.0L;
      for (int iter = 0; iter < 100; ++iter) {
        long double p0 = 1.0L;
        long double p1 = x;
        for (int k = 2; k <= n; ++k) {
          const long double p2 = ((2.0L * k - 1.0L) * x * p1 - (k - 1.0L) * p0) / k;
          p0 = p1;
          p1 = p2;
        }
        dp = n * (x * p1 - p0) / (x * x - 1.0L);
        const long double dx = p1 / dp;
        x -= dx;
        if (std::fabs(dx) < 1e-19L)
          break;
      }
      const long double w = 2.0L / ((1.0L - x * x) * dp * dp);
      nodes_[i] = static_cast<double>(-x);
      nodes_[n - 1 - i] = static_cast<double>(x);
      weights_[i] = static_cast<double>(w);
      weights_[n - 1 - i] = static_cast<double>(w);
    }
    if (n % 2 == 1)
      nodes_[n / 2] = 0.0;
  }

  int order() const noexcept { return static_cast<int>(nodes_.size()); }
  const std::vector<double>& nodes() const noexcept { return nodes_; }
  const std::vector<double>& weights() const noexcept { return weights_; }

private:
  std::vector<double> nodes_;
  std::vector<double> weights_;
};

/// Shared immutable rule of order n; built once per order.
inline const GaussLegendreRule& gauss_legendre(int n) {
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<const GaussLegendreRule>> cache;
  const std::lock_guard lock(mutex);
  auto& slot = cache[n];
  if (!slot)
    slot = std::make_unique<const GaussLegendreRule>(n);
  return *slot;
}

/// Applies `rule` to f on [a, b]. The value type follows f's return type, so
/// complex integrands work unchanged.
template <typename F>
auto integrate_panel(F&& f, double a, double b, const GaussLegendreRule& rule) {
  const double half = 0.5 * (b - a);
  const double mid = 0.5 * (a + b);
  using Value = decltype(f(mid));
  Value acc{};
  const auto& x = rule.nodes();
  const auto& w = rule.weights();
  for (int i = 0; i < rule.order(); ++i)
    acc += w[i] * f(mid + half * x[i]);
  return acc * half;
}

} // namespace altlab
