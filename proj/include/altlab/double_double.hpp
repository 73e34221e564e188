#pragma once

/// \file double_double.hpp
/// Unevaluated-sum double-double arithmetic (about 32 significant digits) and
/// a compensated accumulator for plain doubles.
///
/// The error-free transformations follow the classical Dekker/Knuth
/// constructions; multiplication relies on a hardware fused multiply-add.

#include <cmath>
#include <cstdlib>
#include <limits>

namespace altlab {

namespace eft {

struct Pair {
  double hi;
  double lo;
};

inline Pair two_sum(double a, double b) noexcept {
  const double s = a + b;
  const double bb = s - a;
  return {s, (a - (s - bb)) + (b - bb)};
}

inline Pair quick_two_sum(double a, double b) noexcept {
  const double s = a + b;
  return {s, b - (s - a)};
}

inline Pair two_prod(double a, double b) noexcept {
  const double p = a * b;
  return {p, std::fma(a, b, -p)};
}

} // namespace eft

class DoubleDouble {
public:
  constexpr DoubleDouble() noexcept = default;
  constexpr DoubleDouble(double hi) noexcept : hi_(hi) {} // NOLINT: implicit widening is intended
  constexpr DoubleDouble(double hi, double lo) noexcept : hi_(hi), lo_(lo) {}

  constexpr double hi() const noexcept { return hi_; }
  constexpr double lo() const noexcept { return lo_; }
  constexpr double to_double() const noexcept { return hi_ + lo_; }
  explicit constexpr operator double() const noexcept { return hi_ + lo_; }

  friend DoubleDouble operator+(const DoubleDouble& a, const DoubleDouble& b) noexcept {
    auto s = eft::two_sum(a.hi_, b.hi_);
    const auto t = eft::two_sum(a.lo_, b.lo_);
    s.lo += t.hi;
    s = eft::quick_two_sum(s.hi, s.lo);
    s.lo += t.lo;
    s = eft::quick_two_sum(s.hi, s.lo);
    return {s.hi, s.lo};
  }

  friend DoubleDouble operator-(const DoubleDouble& a) noexcept { return {-a.hi_, -a.lo_}; }
  friend DoubleDouble operator-(const DoubleDouble& a, const DoubleDouble& b) noexcept {
    return a + (-b);
  }

  friend DoubleDouble operator*(const DoubleDouble& a, const DoubleDouble& b) noexcept {
    auto p = eft::two_prod(a.hi_, b.hi_);
    p.lo += a.hi_ * b.lo_ + a.lo_ * b.hi_;
    p = eft::quick_two_sum(p.hi, p.lo);
    return {p.hi, p.lo};
  }

  friend DoubleDouble operator/(const DoubleDouble& a, const DoubleDouble& b) noexcept {
    const double q1 = a.hi_ / b.hi_;
    DoubleDouble r = a - b * q1;
    const double q2 = r.hi_ / b.hi_;
    r = r - b * q2;
    const double q3 = r.hi_ / b.hi_;
    const auto q = eft::quick_two_sum(q1, q2);
    return DoubleDouble(q.hi, q.lo) + q3;
  }

  DoubleDouble& operator+=(const DoubleDouble& b) noexcept { return *this = *this + b; }
  DoubleDouble& operator-=(const DoubleDouble& b) noexcept { return *this = *this - b; }
  DoubleDouble& operator*=(const DoubleDouble& b) noexcept { return *this = *this * b; }
  DoubleDouble& operator/=(const DoubleDouble& b) noexcept { return *this = *this / b; }

  friend bool operator<(const DoubleDouble& a, const DoubleDouble& b) noexcept {
    return a.hi_ < b.hi_ || (a.hi_ == b.hi_ && a.lo_ < b.lo_);
  }
  friend bool operator>(const DoubleDouble& a, const DoubleDouble& b) noexcept { return b < a; }
  friend bool operator>=(const DoubleDouble& a, const DoubleDouble& b) noexcept { return !(a < b); }

  friend DoubleDouble abs(const DoubleDouble& a) noexcept { return a.hi_ < 0.0 ? -a : a; }

  friend DoubleDouble ldexp(const DoubleDouble& a, int e) noexcept {
    return {std::ldexp(a.hi_, e), std::ldexp(a.lo_, e)};
  }

  /// exp to full double-double accuracy for arguments in [-745, 709].
  friend DoubleDouble exp(const DoubleDouble& x) noexcept {
    if (x.hi_ > 709.0)
      return {std::numeric_limits<double>::infinity(), 0.0};
    if (x.hi_ < -745.0)
      return {0.0, 0.0};
    constexpr DoubleDouble ln2(6.931471805599452862e-01, 2.319046813846299558e-17);
    constexpr int squarings = 10;
    const double k = std::nearbyint(x.hi_ / ln2.hi_);
    const DoubleDouble r = ldexp(x - ln2 * k, -squarings);
    // expm1(r) by Taylor; |r| < 3.4e-4 so nine terms reach 1e-37.
    DoubleDouble term = r;
    DoubleDouble s = r;
    for (int n = 2; n <= 10; ++n) {
      term = term * r / DoubleDouble(static_cast<double>(n));
      s += term;
    }
    // expm1(2r) = expm1(r) * (expm1(r) + 2)
    for (int i = 0; i < squarings; ++i)
      s = s * (s + 2.0);
    return ldexp(s + 1.0, static_cast<int>(k));
  }

private:
  double hi_ = 0.0;
  double lo_ = 0.0;
};

inline double to_double(double x) noexcept { return x; }
inline double to_double(const DoubleDouble& x) noexcept { return x.to_double(); }

/// Neumaier's variant of Kahan summation: exact compensation also when the
/// incoming term is larger than the running sum.
template <typename Real = double>
struct CompensatedSum {
  Real sum = Real{0};
  Real compensation = Real{0};

  void add(Real value) noexcept {
    using std::abs;
    const Real t = sum + value;
    if (abs(sum) >= abs(value))
      compensation += (sum - t) + value;
    else
      compensation += (value - t) + sum;
    sum = t;
  }

  CompensatedSum& operator+=(Real value) noexcept {
    add(value);
    return *this;
  }

  Real value() const noexcept { return sum + compensation; }
};

} // namespace altlab
