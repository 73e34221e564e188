#pragma once

/// \file series.hpp
/// Direct summation of S(z, nu, t) = sum_{n>=1} z^n n^{-nu} exp(-t/n) and of
/// the alternating case S(t) = S(-1, 1, t).
///
/// Terms are generated independently for every n (no recurrences). Inside the
/// unit disk the sum is cut off with the geometric majorant. On the unit
/// circle the first N terms are summed directly and the remainder
/// sum_{k>=0} z^k a_{N+k} is evaluated with the Euler transform
///
///     sum_j z^j Delta^j a_N / (1 - z)^{j+1},
///
/// whose forward differences shrink like (j + nu)! / N^j once N is large
/// compared with t. For z = -1 the remainder is additionally capped by the
/// alternating-series bound a_N, valid for N > t / nu where the terms decrease.

#include "altlab/core_types.hpp"
#include "altlab/double_double.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <span>
#include <string>
#include <type_traits>
#include <vector>

namespace altlab {

enum class Accumulation {
  compensated,   ///< double terms, Neumaier accumulation
  double_double, ///< double-double terms and accumulation (z = -1, integer nu)
};

struct SeriesConfig {
  Accumulation accumulation = Accumulation::compensated;
  /// Highest forward difference used by the boundary tail transform.
  int euler_terms = 40;
};

struct SeriesParams {
  ComplexValue z{-1.0, 0.0};
  double nu = 1.0;
  double t = 0.0;

  bool on_boundary() const noexcept { return std::abs(std::abs(z) - 1.0) <= 4.0 * kEpsilon; }

  void validate() const {
    require_finite(z, "SeriesParams.z");
    if (!(nu > 0.0) || !std::isfinite(nu))
      throw DomainError("SeriesParams: nu must be a finite positive number");
    if (!(t >= 0.0) || !std::isfinite(t))
      throw DomainError("SeriesParams: t must be finite and >= 0");
    if (std::abs(z) > 1.0 + 4.0 * kEpsilon)
      throw DomainError("SeriesParams: |z| must not exceed 1");
    if (on_boundary() && std::abs(z - 1.0) <= 1e-9)
      throw DomainError("SeriesParams: z = 1 on the unit circle is excluded");
  }
};

struct TailBound {
  std::int64_t n_start = 0;
  double bound = 0.0;
};

/// a_n = n^{-nu} exp(-t/n), the modulus of the n-th term on the unit circle.
inline double term_magnitude(double nu, double t, std::int64_t n) {
  const double dn = static_cast<double>(n);
  return std::exp(-t / dn - nu * std::log(dn));
}

/// Smallest n from which a_n is strictly decreasing: h^nu e^{-h} increases
/// for h = t/n < nu, i.e. for n > t/nu.
inline std::int64_t monotone_threshold(double nu, double t) {
  return static_cast<std::int64_t>(std::floor(t / nu)) + 1;
}

/// Checks a_{n+1} < a_n for n in [n_from, n_from + count).
inline bool terms_decreasing(double nu, double t, std::int64_t n_from, std::int64_t count) {
  double prev = term_magnitude(nu, t, n_from);
  for (std::int64_t n = n_from + 1; n <= n_from + count; ++n) {
    const double cur = term_magnitude(nu, t, n);
    if (!(cur < prev))
      return false;
    prev = cur;
  }
  return true;
}

/// |sum_{m>n} (-1)^m a_m| <= a_{n+1} once n + 1 > t / nu.
inline TailBound alternating_tail_bound(double nu, double t, std::int64_t n) {
  if (n + 1 < monotone_threshold(nu, t))
    throw DomainError("alternating_tail_bound: terms are not yet decreasing at n");
  return {n, term_magnitude(nu, t, n + 1)};
}

/// |sum_{m>n} z^m m^{-nu} e^{-t/m}| <= r^{n+1} (n+1)^{-nu} / (1 - r) for |z| = r < 1.
inline TailBound geometric_tail_bound(double r, double nu, std::int64_t n) {
  if (!(r >= 0.0 && r < 1.0))
    throw DomainError("geometric_tail_bound: requires 0 <= r < 1");
  const double dn = static_cast<double>(n + 1);
  return {n, std::exp(dn * std::log(r) - nu * std::log(dn)) / (1.0 - r)};
}

namespace detail {

inline void check_work(std::int64_t used, const ToleranceSpec& tol, double partial, double err) {
  if (used > tol.max_work)
    throw WorkLimitError("series: work budget of " + std::to_string(tol.max_work) +
                             " terms exhausted",
                         partial, err, used);
}

template <typename Real>
Real alternating_term(double nu, double t, std::int64_t n);

template <>
inline double alternating_term<double>(double nu, double t, std::int64_t n) {
  return term_magnitude(nu, t, n);
}

template <>
inline DoubleDouble alternating_term<DoubleDouble>(double nu, double t, std::int64_t n) {
  const DoubleDouble dn(static_cast<double>(n));
  DoubleDouble a = exp(-(DoubleDouble(t) / dn));
  for (int k = 0; k < static_cast<int>(nu); ++k)
    a /= dn;
  return a;
}

template <typename Real>
constexpr double unit_roundoff() {
  if constexpr (std::is_same_v<Real, DoubleDouble>)
    return 1.25e-32;
  else
    return kEpsilon;
}

template <typename Real>
Real ldexp_half(const Real& w) {
  if constexpr (std::is_same_v<Real, DoubleDouble>)
    return ldexp(w, -1);
  else
    return 0.5 * w;
}

/// S(-1, nu, t) with working precision Real. Returns the value in double.
template <typename Real>
EvalOutcome sum_alternating_kernel(double nu, double t, const ToleranceSpec& tol,
                                   const SeriesConfig& cfg) {
  const double u = unit_roundoff<Real>();
  const int max_j = std::max(4, cfg.euler_terms);
  std::int64_t n_cut = std::max<std::int64_t>(
      {32, monotone_threshold(nu, t) + 1,
       static_cast<std::int64_t>(std::ceil(4.0 * t + 2.0 * (max_j + nu)))});

  CompensatedSum<Real> head;
  Real abs_sum{0};
  double max_partial = 0.0;
  std::int64_t summed = 0; // terms n = 1..summed are in head

  for (;;) {
    check_work(n_cut + max_j, tol, to_double(head.value()),
               std::numeric_limits<double>::infinity());
    for (std::int64_t n = summed + 1; n < n_cut; ++n) {
      const Real a = alternating_term<Real>(nu, t, n);
      head.add(n % 2 == 0 ? a : -a);
      abs_sum += a;
      max_partial = std::max(max_partial, std::abs(to_double(head.value())));
    }
    summed = std::max(summed, n_cut - 1);

    // Euler transform of sum_{k>=0} (-1)^k a_{n_cut+k}.
    std::vector<Real> diff(static_cast<std::size_t>(max_j) + 1);
    for (int i = 0; i <= max_j; ++i)
      diff[i] = alternating_term<Real>(nu, t, n_cut + i);
    const double a_cut = to_double(diff[0]);
    const double a_max = a_cut;
    CompensatedSum<Real> tail;
    Real weight(0.5);
    double last = 0.0;
    double prev = std::numeric_limits<double>::infinity();
    double rounding = 0.0;
    bool converged = false;
    for (int j = 0; j <= max_j; ++j) {
      const Real term = weight * diff[0];
      tail.add(j % 2 == 0 ? term : -term);
      last = std::abs(to_double(term));
      // Delta^j carries at most 2^j u a_max rounding, weighted by 2^{-j-1}.
      rounding += 0.5 * u * a_max;
      for (int i = 0; i + 1 <= max_j - j; ++i)
        diff[i] = diff[i + 1] - diff[i];
      weight = ldexp_half(weight);
      const double head_mag = std::abs(to_double(head.value()));
      if (j >= 2 && last < prev && last <= 0.01 * tol.target(head_mag)) {
        converged = true;
        break;
      }
      prev = last;
    }

    const double sign = (n_cut % 2 == 0) ? 1.0 : -1.0;
    const Real total = head.value() + (sign > 0 ? tail.value() : -tail.value());
    const double value = to_double(total);
    // Tail truncation: the next Euler term is below the last one; the
    // alternating bound a_N caps the whole remainder.
    const double truncation = std::min(2.0 * last, a_cut);
    const double err = truncation + rounding + 4.0 * u * to_double(abs_sum) +
                       0.5 * kEpsilon * std::abs(value);
    const std::int64_t work = n_cut - 1 + max_j + 1;
    if (converged || truncation <= tol.target(value)) {
      EvalOutcome out;
      out.value = value;
      out.error_estimate = err;
      out.work = work;
      out.method = Method::series;
      out.cancellation_ratio =
          value != 0.0 ? std::max(1.0, max_partial / std::abs(value))
                       : std::numeric_limits<double>::infinity();
      return out;
    }
    check_work(2 * n_cut + max_j, tol, value, err);
    n_cut *= 2;
  }
}

inline ComplexValue unit_power(double log_r, double theta, std::int64_t n) {
  const double dn = static_cast<double>(n);
  return std::polar(std::exp(dn * log_r), dn * theta);
}

/// General z (interior or boundary, z != -1 handled here too) in double.
inline ComplexOutcome sum_series_complex(const SeriesParams& p, const ToleranceSpec& tol,
                                         const SeriesConfig& cfg) {
  const double r = std::abs(p.z);
  ComplexOutcome out;
  out.method = Method::series;
  if (r == 0.0)
    return out;

  const double log_r = std::log(r);
  const double theta = std::arg(p.z);
  CompensatedSum<double> re;
  CompensatedSum<double> im;
  double abs_sum = 0.0;
  double max_partial = 0.0;
  auto add_term = [&](std::int64_t n) {
    const double a = term_magnitude(p.nu, p.t, n);
    const ComplexValue term = a * unit_power(log_r, theta, n);
    re.add(term.real());
    im.add(term.imag());
    abs_sum += std::abs(term);
    max_partial = std::max(max_partial, std::abs(ComplexValue(re.value(), im.value())));
  };
  auto finish = [&](ComplexValue value, double truncation, double rounding, std::int64_t work) {
    out.value = value;
    out.error_estimate = truncation + rounding + 4.0 * kEpsilon * abs_sum +
                         0.5 * kEpsilon * std::abs(value);
    out.work = work;
    out.cancellation_ratio = std::abs(value) != 0.0
                                 ? std::max(1.0, max_partial / std::abs(value))
                                 : std::numeric_limits<double>::infinity();
    return out;
  };

  if (!p.on_boundary()) {
    for (std::int64_t n = 1;; ++n) {
      add_term(n);
      const ComplexValue s(re.value(), im.value());
      const double bound = geometric_tail_bound(r, p.nu, n).bound;
      if (bound <= tol.target(std::abs(s)) || bound == 0.0)
        return finish(s, bound, 0.0, n);
      check_work(n + 1, tol, s.real(), bound);
    }
  }

  const int max_j = std::max(4, cfg.euler_terms);
  const ComplexValue one_minus_z = 1.0 - p.z;
  const ComplexValue q = p.z / one_minus_z;
  std::int64_t n_cut = std::max<std::int64_t>(
      {32, monotone_threshold(p.nu, p.t) + 1,
       static_cast<std::int64_t>(std::ceil(4.0 * p.t + 4.0 * std::abs(q) * (max_j + p.nu)))});
  std::int64_t summed = 0;
  for (;;) {
    check_work(n_cut + max_j, tol, re.value(), std::numeric_limits<double>::infinity());
    for (std::int64_t n = summed + 1; n < n_cut; ++n)
      add_term(n);
    summed = std::max(summed, n_cut - 1);

    std::vector<double> diff(static_cast<std::size_t>(max_j) + 1);
    for (int i = 0; i <= max_j; ++i)
      diff[i] = term_magnitude(p.nu, p.t, n_cut + i);
    const double a_max = diff[0];
    ComplexValue tail{};
    ComplexValue weight = 1.0 / one_minus_z;
    double last = 0.0;
    double prev = std::numeric_limits<double>::infinity();
    double rounding = 0.0;
    bool converged = false;
    const ComplexValue head(re.value(), im.value());
    for (int j = 0; j <= max_j; ++j) {
      const ComplexValue term = weight * diff[0];
      tail += term;
      last = std::abs(term);
      rounding += std::abs(weight) * std::ldexp(kEpsilon * a_max, j);
      for (int i = 0; i + 1 <= max_j - j; ++i)
        diff[i] = diff[i + 1] - diff[i];
      weight *= q;
      if (j >= 2 && last < prev && last <= 0.01 * tol.target(std::abs(head))) {
        converged = true;
        break;
      }
      prev = last;
    }
    const ComplexValue value = head + unit_power(log_r, theta, n_cut) * tail;
    if (converged)
      return finish(value, 2.0 * last, rounding, n_cut + max_j);
    n_cut *= 2;
  }
}

} // namespace detail

/// S(z, nu, t) by direct summation.
///
/// The returned error estimate is the truncation bound plus a rounding term
/// 4 eps sum |term|. Only the truncation part is held to `tol`; the rounding
/// part is a precision wall that is reported, not enforced.
inline ComplexOutcome sum_series(const SeriesParams& p, const ToleranceSpec& tol = {},
                                 const SeriesConfig& cfg = {}) {
  p.validate();
  tol.validate();
  if (p.on_boundary() && std::abs(p.z + 1.0) <= 4.0 * kEpsilon) {
    EvalOutcome real;
    if (cfg.accumulation == Accumulation::double_double) {
      if (p.nu != std::floor(p.nu))
        throw DomainError("sum_series: double-double mode requires an integer nu");
      real = detail::sum_alternating_kernel<DoubleDouble>(p.nu, p.t, tol, cfg);
    } else {
      real = detail::sum_alternating_kernel<double>(p.nu, p.t, tol, cfg);
    }
    ComplexOutcome out;
    out.value = real.value;
    out.error_estimate = real.error_estimate;
    out.work = real.work;
    out.method = Method::series;
    out.cancellation_ratio = real.cancellation_ratio;
    return out;
  }
  return detail::sum_series_complex(p, tol, cfg);
}

/// S(t) = sum (-1)^n n^{-1} e^{-t/n}.
///
/// `cancellation_ratio` is max |partial sum| / |S(t)|; S(t) decays like
/// exp(-sqrt(2 pi t)) while the partial sums stay near max_n a_n, so for
/// t beyond roughly 120 the double result carries few correct digits and
/// the error estimate says so.
inline EvalOutcome sum_alternating_s(double t, const ToleranceSpec& tol = {},
                                     const SeriesConfig& cfg = {}) {
  if (!(t >= 0.0) || !std::isfinite(t))
    throw DomainError("sum_alternating_s: t must be finite and >= 0");
  const auto c = sum_series({{-1.0, 0.0}, 1.0, t}, tol, cfg);
  EvalOutcome out;
  out.value = c.value.real();
  out.error_estimate = c.error_estimate;
  out.work = c.work;
  out.method = Method::series;
  out.cancellation_ratio = c.cancellation_ratio;
  return out;
}

/// S(z rho, nu, t) for every rho, approaching the boundary value along a radius.
inline std::vector<ComplexOutcome> radial_limit_probe(const SeriesParams& p,
                                                      std::span<const double> rhos,
                                                      const ToleranceSpec& tol = {}) {
  p.validate();
  if (!p.on_boundary())
    throw DomainError("radial_limit_probe: |z| must equal 1");
  std::vector<ComplexOutcome> out;
  out.reserve(rhos.size());
  for (const double rho : rhos) {
    if (!(rho >= 0.0 && rho < 1.0))
      throw DomainError("radial_limit_probe: rho must lie in [0, 1)");
    out.push_back(sum_series({p.z * rho, p.nu, p.t}, tol));
  }
  return out;
}

struct DerivativeResiduals {
  double dt_relation = 0.0;    ///< |dS/dt + S(z, nu+1, t)|
  double dz_relation = 0.0;    ///< |dS(z, nu+1, t)/dz - S(z, nu, t)/z|
  double mixed_relation = 0.0; ///< |d2S/dt dz + S(z, nu, t)/z|
};

/// Central-difference residuals of the three differentiation identities of
/// S(z, nu, t) in t and z. Each residual is O(h^2).
inline DerivativeResiduals derivative_residuals(const SeriesParams& p, double h) {
  p.validate();
  if (!(h > 0.0))
    throw DomainError("derivative_residuals: step h must be positive");
  if (p.t - h < 0.0)
    throw DomainError("derivative_residuals: t - h leaves the domain t >= 0");
  if (std::abs(p.z) + h >= 1.0 || std::abs(p.z) == 0.0)
    throw DomainError("derivative_residuals: z +- h must stay inside the open unit disk");

  const ToleranceSpec tight{1e-18, 1e-16, 10'000'000};
  auto s = [&](ComplexValue z, double nu, double t) {
    return sum_series({z, nu, t}, tight).value;
  };
  const ComplexValue z = p.z;
  const double nu = p.nu;
  const double t = p.t;

  DerivativeResiduals r;
  const ComplexValue ds_dt = (s(z, nu, t + h) - s(z, nu, t - h)) / (2.0 * h);
  r.dt_relation = std::abs(ds_dt + s(z, nu + 1.0, t));

  const ComplexValue ds_dz = (s(z + h, nu + 1.0, t) - s(z - h, nu + 1.0, t)) / (2.0 * h);
  const ComplexValue s0 = s(z, nu, t);
  r.dz_relation = std::abs(ds_dz - s0 / z);

  const ComplexValue mixed = (s(z + h, nu, t + h) - s(z + h, nu, t - h) -
                              s(z - h, nu, t + h) + s(z - h, nu, t - h)) /
                             (4.0 * h * h);
  r.mixed_relation = std::abs(mixed + s0 / z);
  return r;
}

} // namespace altlab
