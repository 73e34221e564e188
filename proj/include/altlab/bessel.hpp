#pragma once

/// \file bessel.hpp
/// Bessel functions of the first kind J_nu (nu >= 0, real argument), ln Gamma,
/// and the zeros of J_0.
///
/// Small arguments use the power series summed in double-double arithmetic,
/// which absorbs the cancellation of the alternating terms (the largest term
/// near u = 30 is about 1e11). Large arguments use the Hankel amplitude/phase
/// expansion truncated at its smallest term; above u = 20 that term is below
/// 1e-17 for small orders.

#include "altlab/core_types.hpp"
#include "altlab/double_double.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <numbers>
#include <vector>

namespace altlab {

/// Largest argument for which the double-double power series is used.
inline constexpr double kBesselSeriesSafeLimit = 32.0;

struct BesselEvalConfig {
  /// Arguments at or below the cutoff go to the power series.
  double series_cutoff = 20.0;
  /// Relative size of the last retained series term.
  double series_tol = 1e-32;

  void validate() const {
    if (!(series_cutoff >= 5.0 && series_cutoff <= 30.0))
      throw DomainError("BesselEvalConfig: series_cutoff must lie in [5, 30]");
    if (!(series_tol > 0.0))
      throw DomainError("BesselEvalConfig: series_tol must be positive");
  }
};

/// ln Gamma(x) for x > 0.
///
/// [0.5, 10): Lanczos approximation, g = 7, nine coefficients (the widely
/// reproduced set due to P. Godfrey), relative accuracy about 1e-15 in Gamma.
/// [10, inf): Stirling series through the B_16 term; the next term is below
/// 2e-18 at x = 10. (0, 0.5): shifted by ln Gamma(x) = ln Gamma(x+1) - ln x.
inline double log_gamma(double x) {
  if (!(x > 0.0) || !std::isfinite(x))
    throw DomainError("log_gamma: x must be a finite positive number");
  if (x < 0.5)
    return log_gamma(x + 1.0) - std::log(x);
  if (x >= 10.0) {
    // B_2k / (2k (2k-1)) for k = 1..8
    static constexpr double c[] = {1.0 / 12.0,       -1.0 / 360.0,        1.0 / 1260.0,
                                   -1.0 / 1680.0,    1.0 / 1188.0,        -691.0 / 360360.0,
                                   1.0 / 156.0,      -3617.0 / 122400.0};
    const double inv = 1.0 / x;
    const double inv2 = inv * inv;
    double series = 0.0;
    for (int k = 7; k >= 0; --k)
      series = series * inv2 + c[k];
    series *= inv;
    // (x - 1/2) ln x - x reaches ~1000 here; one Newton step on ln x in
    // double-double keeps its rounding below an ulp of the result.
    const double l0 = std::log(x);
    const DoubleDouble log_x = DoubleDouble(l0) + (DoubleDouble(x) / exp(DoubleDouble(l0)) - 1.0);
    const DoubleDouble main = (DoubleDouble(x) - 0.5) * log_x - x;
    constexpr double half_log_two_pi = 0.91893853320467274178032973640562;
    return (main + (half_log_two_pi + series)).to_double();
  }
  static constexpr double g = 7.0;
  static constexpr double p[] = {0.99999999999980993,  676.5203681218851,
                                 -1259.1392167224028,  771.32342877765313,
                                 -176.61502916214059,  12.507343278686905,
                                 -0.13857109526572012, 9.9843695780195716e-6,
                                 1.5056327351493116e-7};
  const double xm1 = x - 1.0;
  double a = p[0];
  for (int i = 1; i < 9; ++i)
    a += p[i] / (xm1 + i);
  const double tt = xm1 + g + 0.5;
  constexpr double half_log_two_pi = 0.91893853320467274178032973640562;
  return half_log_two_pi + (xm1 + 0.5) * std::log(tt) - tt + std::log(a);
}

/// sum_k (-w)^k / (k! Gamma(k + mu + 1)), i.e. J_mu(u) / (u/2)^mu with w = (u/2)^2.
/// Entire in w; used directly by kernels that need J_mu(2 sqrt(tx)) (x/t)^{mu/2}.
inline double bessel_j_scaled_series(double mu, double w, const BesselEvalConfig& cfg = {}) {
  if (!(mu >= 0.0))
    throw DomainError("bessel_j_scaled_series: order must be >= 0");
  if (!(w >= 0.0))
    throw DomainError("bessel_j_scaled_series: w must be >= 0");
  if (2.0 * std::sqrt(w) > kBesselSeriesSafeLimit + 1e-12)
    throw RangeError("bessel_j_scaled_series: argument beyond the series-safe range; use bessel_j");
  const DoubleDouble minus_w = -DoubleDouble(w);
  DoubleDouble term(1.0);
  DoubleDouble sum(1.0);
  double max_term = 1.0;
  const double k_peak = std::sqrt(w);
  for (int k = 1; k < 500; ++k) {
    const DoubleDouble dk(static_cast<double>(k));
    term = term * minus_w / (dk * (dk + DoubleDouble(mu)));
    sum += term;
    const double mag = std::abs(term.to_double());
    max_term = std::max(max_term, mag);
    if (k > k_peak && mag <= cfg.series_tol * max_term)
      break;
  }
  const double inv_gamma = mu == 0.0 ? 1.0 : std::exp(-log_gamma(mu + 1.0));
  return sum.to_double() * inv_gamma;
}

/// J_nu(u) from its power series.
inline double bessel_j_series(double nu, double u, const BesselEvalConfig& cfg = {}) {
  if (!(nu >= 0.0))
    throw DomainError("bessel_j_series: order must be >= 0");
  if (!(u >= 0.0))
    throw DomainError("bessel_j_series: argument must be >= 0");
  if (u > kBesselSeriesSafeLimit)
    throw RangeError("bessel_j_series: argument beyond the series-safe range; use bessel_j0");
  const double scaled = bessel_j_scaled_series(nu, 0.25 * u * u, cfg);
  if (nu == 0.0)
    return scaled;
  if (u == 0.0)
    return 0.0;
  return std::pow(0.5 * u, nu) * scaled;
}

struct AsymptoticBessel {
  double value = 0.0;
  double truncation = 0.0; ///< size of the first omitted term, times the amplitude
};

/// Hankel expansion J_nu(u) ~ sqrt(2/(pi u)) (P cos w - Q sin w),
/// w = u - (nu/2 + 1/4) pi, truncated at the smallest term.
inline AsymptoticBessel bessel_j_asymptotic(double nu, double u) {
  if (!(u > 0.0))
    throw DomainError("bessel_j_asymptotic: argument must be positive");
  const double mu = 4.0 * nu * nu;
  double p = 1.0;
  double q = 0.0;
  double c = 1.0; // a_k(nu) / u^k
  double prev = 1.0;
  double omitted = 0.0;
  for (int k = 1; k < 200; ++k) {
    const double odd = 2.0 * k - 1.0;
    const double next = c * (mu - odd * odd) / (k * 8.0 * u);
    const double mag = std::abs(next);
    if (mag >= prev && k > 2) {
      omitted = mag;
      break;
    }
    if (mag < 1e-18 * std::max(std::abs(p), std::abs(q))) {
      omitted = mag;
      break;
    }
    c = next;
    prev = mag;
    // signs: P = c0 - c2 + c4 ..., Q = c1 - c3 + c5 ...
    switch (k % 4) {
    case 0: p += c; break;
    case 1: q += c; break;
    case 2: p -= c; break;
    case 3: q -= c; break;
    }
    if (mag == 0.0)
      break;
  }
  const double phase = (0.5 * nu + 0.25) * std::numbers::pi;
  const double cp = std::cos(phase);
  const double sp = std::sin(phase);
  const double cu = std::cos(u);
  const double su = std::sin(u);
  const double cos_w = cu * cp + su * sp;
  const double sin_w = su * cp - cu * sp;
  const double amp = std::sqrt(2.0 / (std::numbers::pi * u));
  return {amp * (p * cos_w - q * sin_w), amp * omitted};
}

/// J_nu(u) for nu >= 0, u >= 0.
inline double bessel_j(double nu, double u, const BesselEvalConfig& cfg = {}) {
  if (!(nu >= 0.0))
    throw DomainError("bessel_j: order must be >= 0");
  if (!(u >= 0.0) || !std::isfinite(u))
    throw DomainError("bessel_j: argument must be finite and >= 0");
  if (u <= cfg.series_cutoff)
    return bessel_j_series(nu, u, cfg);
  const auto asym = bessel_j_asymptotic(nu, u);
  if (asym.truncation > 1e-17 && u <= kBesselSeriesSafeLimit)
    return bessel_j_series(nu, u, cfg);
  return asym.value;
}

/// J_0(u), absolute error near 1e-16 on [0, 200].
inline double bessel_j0(double u, const BesselEvalConfig& cfg = {}) {
  if (!(u >= 0.0))
    throw DomainError("bessel_j0: argument must be >= 0");
  return bessel_j(0.0, u, cfg);
}

/// McMahon's estimate of the k-th positive zero of J_mu (k >= 1).
inline double mcmahon_zero(double mu, int k) {
  const double m = 4.0 * mu * mu;
  const double beta = (k + 0.5 * mu - 0.25) * std::numbers::pi;
  const double e = 8.0 * beta;
  const double e2 = e * e;
  return beta - (m - 1.0) / e - 4.0 * (m - 1.0) * (7.0 * m - 31.0) / (3.0 * e * e2) -
         32.0 * (m - 1.0) * (83.0 * m * m - 982.0 * m + 3779.0) / (15.0 * e * e2 * e2);
}

namespace detail {

/// Illinois false position on a sign-changing bracket.
template <typename F>
double illinois_root(F&& f, double a, double b, double fa, double fb) {
  int side = 0;
  for (int iter = 0; iter < 200; ++iter) {
    const double c = (a * fb - b * fa) / (fb - fa);
    const double fc = f(c);
    if (fc == 0.0 || std::abs(b - a) <= 4.0 * kEpsilon * std::abs(c))
      return c;
    if ((fc > 0.0) == (fb > 0.0)) {
      b = c;
      fb = fc;
      if (side == -1)
        fa *= 0.5;
      side = -1;
    } else {
      a = c;
      fa = fc;
      if (side == 1)
        fb *= 0.5;
      side = 1;
    }
  }
  return 0.5 * (a + b);
}

inline double polish_j0_zero(int k) {
  const double guess = mcmahon_zero(0.0, k);
  double half = 0.1;
  for (;;) {
    const double a = guess - half;
    const double b = guess + half;
    const double fa = bessel_j0(a);
    const double fb = bessel_j0(b);
    if ((fa > 0.0) != (fb > 0.0))
      return illinois_root([](double x) { return bessel_j0(x); }, a, b, fa, fb);
    half *= 1.5;
  }
}

} // namespace detail

/// First k_max positive zeros of J_0, ascending.
inline std::vector<double> j0_zeros(int k_max) {
  if (k_max < 1 || k_max > 10'000)
    throw DomainError("j0_zeros: k_max must lie in [1, 10000]");
  std::vector<double> zeros(static_cast<std::size_t>(k_max));
  for (int k = 1; k <= k_max; ++k)
    zeros[k - 1] = detail::polish_j0_zero(k);
  return zeros;
}

/// Immutable shared table of J_0 zeros, built on first use.
class J0ZeroTable {
public:
  static constexpr int kSize = 2048;

  static const J0ZeroTable& instance() {
    static const J0ZeroTable table;
    return table;
  }

  /// k-th zero (k >= 1); McMahon's estimate beyond the table.
  double zero(int k) const {
    if (k <= kSize)
      return zeros_[k - 1];
    return mcmahon_zero(0.0, k);
  }

private:
  J0ZeroTable() : zeros_(j0_zeros(kSize)) {}
  std::vector<double> zeros_;
};

} // namespace altlab
