#pragma once

/// \file core_types.hpp
/// Shared scalar types, result records and error classes for altlab.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>
#include <string_view>

namespace altlab {

using ComplexValue = std::complex<double>;

inline constexpr double kEpsilon = std::numeric_limits<double>::epsilon();

/// sqrt(pi/2): the exponential rate of the leading asymptotic term in lambda.
inline constexpr double kSqrtHalfPi = 1.2533141373155002512078826424055226;

class DomainError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

class RangeError : public std::range_error {
public:
  using std::range_error::range_error;
};

/// Raised when a work budget runs out before the tolerance is met. The
/// partial value and its (too large) error estimate travel with the error.
class WorkLimitError : public std::runtime_error {
public:
  WorkLimitError(const std::string& what, double partial_value, double partial_error,
                 std::int64_t work)
      : std::runtime_error(what), partial_value_(partial_value),
        partial_error_(partial_error), work_(work) {}

  double partial_value() const noexcept { return partial_value_; }
  double partial_error() const noexcept { return partial_error_; }
  std::int64_t work() const noexcept { return work_; }

private:
  double partial_value_;
  double partial_error_;
  std::int64_t work_;
};

enum class Method { series, hankel, fourier2d, residue, asymptotic };

inline constexpr std::string_view to_string(Method m) noexcept {
  switch (m) {
  case Method::series: return "series";
  case Method::hankel: return "hankel";
  case Method::fourier2d: return "fourier2d";
  case Method::residue: return "residue";
  case Method::asymptotic: return "asymptotic";
  }
  return "unknown";
}

struct ToleranceSpec {
  double abs_tol = 1e-16;
  double rel_tol = 1e-15;
  std::int64_t max_work = 10'000'000;

  void validate() const {
    if (!(abs_tol >= 0.0) || !(rel_tol >= 0.0))
      throw DomainError("ToleranceSpec: tolerances must be non-negative");
    if (abs_tol == 0.0 && rel_tol == 0.0)
      throw DomainError("ToleranceSpec: at least one of abs_tol, rel_tol must be positive");
    if (max_work <= 0)
      throw DomainError("ToleranceSpec: max_work must be positive");
  }

  /// Absolute target implied by both tolerances for a value of size `magnitude`.
  double target(double magnitude) const noexcept {
    return std::max(abs_tol, rel_tol * std::abs(magnitude));
  }
};

/// A computed value with its error estimate, work counter and producing method.
template <typename Value>
struct Outcome {
  Value value{};
  double error_estimate = 0.0;
  std::int64_t work = 0;
  Method method = Method::series;
  /// max |partial sum| / |value| for summation routes; 1 elsewhere.
  double cancellation_ratio = 1.0;
};

using EvalOutcome = Outcome<double>;
using ComplexOutcome = Outcome<ComplexValue>;

inline void require_finite(double v, const char* what) {
  if (!std::isfinite(v))
    throw RangeError(std::string(what) + ": non-finite value");
}

inline void require_finite(ComplexValue v, const char* what) {
  if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
    throw RangeError(std::string(what) + ": non-finite value");
}

inline double lambda_of_t(double t) {
  if (!(t >= 0.0))
    throw DomainError("lambda_of_t: t must be >= 0");
  return 2.0 * std::sqrt(t);
}

inline double t_of_lambda(double lambda) {
  if (!(lambda >= 0.0))
    throw DomainError("t_of_lambda: lambda must be >= 0");
  return 0.25 * lambda * lambda;
}

} // namespace altlab
