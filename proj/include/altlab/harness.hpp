#pragma once

/// \file harness.hpp
/// Cross-validation of the evaluation routes, figure and sweep tables, the
/// error-scaling study, and CSV / SVG emission.

#include "altlab/asymptotic.hpp"
#include "altlab/config.hpp"
#include "altlab/core_types.hpp"
#include "altlab/fourier2d.hpp"
#include "altlab/hankel.hpp"
#include "altlab/residue.hpp"
#include "altlab/series.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace altlab {

/// Fitted envelope constant: e^{lambda sqrt(pi/2)} lambda^{3/2} |S* - asym|
/// stays below 0.26 on lambda in [5, 40]; twice that is used as the
/// asymptotic route's error estimate.
inline constexpr double kEnvelopeConstant = 0.5;

/// Residue route lower limit; below it the neglected-term model is not small.
inline constexpr double kResidueMinLambda = 8.0;
/// Asymptotic route lower limit for comparisons.
inline constexpr double kAsymMinLambda = 5.0;

inline constexpr std::array<Method, 5> kAllMethods{Method::series, Method::hankel,
                                                   Method::fourier2d, Method::residue,
                                                   Method::asymptotic};

enum class MethodStatus { ok, precision_limited, out_of_range, failed };

inline constexpr std::string_view to_string(MethodStatus s) noexcept {
  switch (s) {
  case MethodStatus::ok: return "ok";
  case MethodStatus::precision_limited: return "precision-limited";
  case MethodStatus::out_of_range: return "out-of-range";
  case MethodStatus::failed: return "failed";
  }
  return "unknown";
}

struct MethodValue {
  Method method = Method::series;
  double value = 0.0;
  double error_estimate = 0.0;
  std::int64_t work = 0;
  MethodStatus status = MethodStatus::ok;
  std::string note;

  bool usable() const noexcept { return status == MethodStatus::ok; }
};

inline std::optional<Method> parse_method(std::string_view name) {
  for (const Method m : kAllMethods)
    if (name == to_string(m))
      return m;
  if (name == "asym")
    return Method::asymptotic;
  return std::nullopt;
}

/// Evaluates S*(lambda) = S(lambda^2 / 4) by one route. Range and precision
/// limits are reported through the status, never thrown. The series route
/// uses `t` when given instead of lambda^2 / 4.
inline MethodValue evaluate_method(Method m, double lambda, const LabConfig& cfg = {},
                                   std::optional<double> t = std::nullopt) {
  if (!(lambda >= 0.0) || !std::isfinite(lambda))
    throw DomainError("evaluate_method: lambda must be finite and >= 0");
  MethodValue out;
  out.method = m;
  const auto fill = [&out](const EvalOutcome& r) {
    out.value = r.value;
    out.error_estimate = r.error_estimate;
    out.work = r.work;
  };
  const auto relative_error = [&out] {
    return out.error_estimate / std::max(std::abs(out.value), 1e-300);
  };
  try {
    switch (m) {
    case Method::series:
      fill(sum_alternating_s(t ? *t : t_of_lambda(lambda), cfg.tol, cfg.series));
      if (relative_error() > 1e-4) {
        out.status = MethodStatus::precision_limited;
        out.note = "cancellation: error estimate above 1e-4 relative";
      }
      break;
    case Method::hankel:
      fill(hankel_s_star(lambda, cfg.tol, cfg.quad));
      if (lambda > kHankelMaxLambda || relative_error() > 1e-4) {
        out.status = MethodStatus::out_of_range;
        out.note = "below the double-precision quadrature floor";
      }
      break;
    case Method::fourier2d:
      fill(fourier2d_s_star(lambda, cfg.tol, cfg.fourier2d));
      break;
    case Method::residue:
      if (lambda < kResidueMinLambda) {
        out.status = MethodStatus::out_of_range;
        out.note = "lambda below 8";
        if (lambda == 0.0)
          break;
      }
      fill(residue_outcome(lambda, cfg.strip, cfg.tol, cfg.residue));
      break;
    case Method::asymptotic:
      if (lambda == 0.0) {
        out.status = MethodStatus::out_of_range;
        out.note = "lambda must be positive";
        break;
      }
      out.value = asym_s_star(lambda).value;
      out.error_estimate = kEnvelopeConstant * error_envelope(lambda);
      if (lambda < kAsymMinLambda) {
        out.status = MethodStatus::out_of_range;
        out.note = "lambda below 5";
      }
      break;
    }
  } catch (const RangeError& e) {
    out.status = MethodStatus::out_of_range;
    out.note = e.what();
  } catch (const WorkLimitError& e) {
    out.value = e.partial_value();
    out.error_estimate = e.partial_error();
    out.work = e.work();
    out.status = MethodStatus::precision_limited;
    out.note = e.what();
  } catch (const DomainError& e) {
    out.status = MethodStatus::failed;
    out.note = e.what();
  }
  return out;
}

inline std::vector<MethodValue> evaluate_all(double lambda, const LabConfig& cfg = {},
                                             std::optional<double> t = std::nullopt) {
  std::vector<MethodValue> out;
  for (const Method m : kAllMethods)
    out.push_back(evaluate_method(m, lambda, cfg, t));
  return out;
}

/// Hankel up to lambda = 25, residue beyond.
inline Method auto_method(double lambda) {
  return lambda <= kHankelMaxLambda ? Method::hankel : Method::residue;
}

struct Check {
  std::string name;
  bool passed = false;
  double measured = 0.0;
  double threshold = 0.0;
  std::string detail;
};

struct Calibration {
  double kappa = kResidueKappa;
  double c_envelope = kEnvelopeConstant;
};

struct VerifyReport {
  std::vector<Check> checks;
  Calibration calibration;
  /// Every route evaluated, including the skipped or flagged ones.
  std::vector<std::pair<double, MethodValue>> entries;

  bool all_passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
  }
};

/// 17 significant digits.
inline std::string format_real(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

/// Pairwise comparison of every usable route at each t, in scaled form
/// e^{lambda sqrt(pi/2)} S so that large-t values stay O(1).
inline VerifyReport cross_validate(const std::vector<double>& points, const LabConfig& cfg = {}) {
  VerifyReport report;
  report.calibration.kappa = cfg.residue.kappa;
  for (const double t : points) {
    const double lambda = lambda_of_t(t);
    const double scale = std::exp(lambda * kSqrtHalfPi);
    const auto values = evaluate_all(lambda, cfg, t);
    for (const auto& v : values)
      report.entries.emplace_back(t, v);
    for (std::size_t i = 0; i < values.size(); ++i) {
      for (std::size_t j = i + 1; j < values.size(); ++j) {
        const auto& a = values[i];
        const auto& b = values[j];
        if (!a.usable() || !b.usable())
          continue;
        const double diff = scale * std::abs(a.value - b.value);
        const double allowed =
            scale * (a.error_estimate + b.error_estimate +
                     4.0 * kEpsilon * std::max(std::abs(a.value), std::abs(b.value)));
        Check c;
        c.name = "t=" + format_real(t) + " " + std::string(to_string(a.method)) + "~" +
                 std::string(to_string(b.method));
        c.measured = diff;
        c.threshold = allowed;
        c.passed = diff <= allowed;
        c.detail = "scaled by e^{lambda sqrt(pi/2)}";
        report.checks.push_back(std::move(c));
      }
    }
  }
  return report;
}

struct SweepRow {
  double lambda = 0.0;
  std::vector<MethodValue> methods;
  Method numeric_method = Method::hankel;
  double scaled_numeric = 0.0;
  double scaled_asym = 0.0;

  const MethodValue* find(Method m) const {
    for (const auto& v : methods)
      if (v.method == m)
        return &v;
    return nullptr;
  }
};

struct SweepTable {
  std::vector<SweepRow> rows;
};

/// `n` equispaced lambdas in [lambda_min, lambda_max]. Scaled fields are
/// -e^{lambda sqrt(pi/2)} S*(lambda). With `all_methods` every route is
/// attempted; otherwise only the numeric truth and the asymptotics.
inline SweepTable sweep_data(double lambda_min, double lambda_max, int n, bool all_methods,
                             const LabConfig& cfg = {}) {
  if (!(lambda_min > 0.0) || !(lambda_max > lambda_min) || !std::isfinite(lambda_max))
    throw DomainError("sweep: need 0 < lambda_min < lambda_max");
  if (n < 2)
    throw DomainError("sweep: need at least 2 points");
  SweepTable table;
  table.rows.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const double lambda =
        i == n - 1 ? lambda_max : lambda_min + (lambda_max - lambda_min) * i / (n - 1);
    SweepRow row;
    row.lambda = lambda;
    row.numeric_method = auto_method(lambda);
    for (const Method m : kAllMethods) {
      if (all_methods || m == row.numeric_method || m == Method::asymptotic)
        row.methods.push_back(evaluate_method(m, lambda, cfg));
    }
    const double scale = std::exp(lambda * kSqrtHalfPi);
    if (row.numeric_method == Method::residue)
      row.scaled_numeric = -s_star_via_residue(lambda, cfg.strip, cfg.tol, cfg.residue).scaled_value;
    else
      row.scaled_numeric = -scale * row.find(row.numeric_method)->value;
    row.scaled_asym = -asym_s_star_scaled(lambda);
    table.rows.push_back(std::move(row));
  }
  return table;
}

inline SweepTable figure_data(double lambda_min, double lambda_max, int n,
                              const LabConfig& cfg = {}) {
  return sweep_data(lambda_min, lambda_max, n, false, cfg);
}

struct ErrorScalingRow {
  double lambda = 0.0;
  double scaled_error = 0.0;
  double envelope_ratio = 0.0;
};

struct ErrorScalingStudy {
  std::vector<ErrorScalingRow> rows;
  double max_ratio = 0.0;
  double median_ratio = 0.0;
};

/// Residue value against the leading asymptotic term, in envelope units.
inline ErrorScalingStudy error_scaling_study(const std::vector<double>& lambda_grid,
                                             const LabConfig& cfg = {}) {
  if (lambda_grid.empty())
    throw DomainError("error_scaling_study: empty grid");
  ErrorScalingStudy study;
  std::vector<double> ratios;
  for (const double lambda : lambda_grid) {
    if (lambda < kResidueMinLambda)
      throw DomainError("error_scaling_study: grid must lie in the residue range lambda >= 8");
    const double numeric = s_star_via_residue(lambda, cfg.strip, cfg.tol, cfg.residue).scaled_value;
    ErrorScalingRow row;
    row.lambda = lambda;
    row.scaled_error = std::abs(numeric - asym_s_star_scaled(lambda));
    row.envelope_ratio = row.scaled_error * std::pow(lambda, 1.5);
    ratios.push_back(row.envelope_ratio);
    study.rows.push_back(row);
  }
  std::sort(ratios.begin(), ratios.end());
  const std::size_t m = ratios.size();
  study.max_ratio = ratios.back();
  study.median_ratio = m % 2 == 1 ? ratios[m / 2] : 0.5 * (ratios[m / 2 - 1] + ratios[m / 2]);
  return study;
}

/// Header plus one row per lambda, LF line endings. Method columns are left
/// empty where a route was not attempted.
inline void write_csv(std::ostream& out, const SweepTable& table) {
  out << "lambda,t,numeric_method,scaled_numeric,scaled_asym";
  for (const Method m : kAllMethods)
    out << ',' << to_string(m) << ',' << to_string(m) << "_error," << to_string(m) << "_status";
  out << '\n';
  for (const auto& row : table.rows) {
    out << format_real(row.lambda) << ',' << format_real(t_of_lambda(row.lambda)) << ','
        << to_string(row.numeric_method) << ',' << format_real(row.scaled_numeric) << ','
        << format_real(row.scaled_asym);
    for (const Method m : kAllMethods) {
      const auto* v = row.find(m);
      if (v && v->status != MethodStatus::failed && v->status != MethodStatus::out_of_range)
        out << ',' << format_real(v->value) << ',' << format_real(v->error_estimate) << ','
            << to_string(v->status);
      else if (v)
        out << ",,," << to_string(v->status);
      else
        out << ",,,";
    }
    out << '\n';
  }
}

inline std::string csv_string(const SweepTable& table) {
  std::ostringstream s;
  write_csv(s, table);
  return s.str();
}

/// Splits CSV text into rows of fields (no quoting is ever emitted).
inline std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> fields;
    std::size_t start = 0;
    for (;;) {
      const auto comma = line.find(',', start);
      fields.push_back(line.substr(start, comma - start));
      if (comma == std::string::npos)
        break;
      start = comma + 1;
    }
    rows.push_back(std::move(fields));
  }
  return rows;
}

/// Two polylines, numeric (red) and asymptotic (black), over labelled axes.
inline void write_svg(std::ostream& out, const SweepTable& table) {
  if (table.rows.empty())
    throw DomainError("write_svg: empty table");
  constexpr double width = 800.0;
  constexpr double height = 500.0;
  constexpr double margin = 60.0;
  double x_lo = table.rows.front().lambda;
  double x_hi = table.rows.back().lambda;
  double y_lo = 0.0;
  double y_hi = 0.0;
  for (const auto& r : table.rows) {
    y_lo = std::min({y_lo, r.scaled_numeric, r.scaled_asym});
    y_hi = std::max({y_hi, r.scaled_numeric, r.scaled_asym});
  }
  const double pad = 0.05 * (y_hi - y_lo + 1e-300);
  y_lo -= pad;
  y_hi += pad;
  const auto px = [&](double x) { return margin + (x - x_lo) / (x_hi - x_lo) * (width - 2 * margin); };
  const auto py = [&](double y) {
    return height - margin - (y - y_lo) / (y_hi - y_lo) * (height - 2 * margin);
  };
  char buf[128];
  const auto num = [&buf](double v) {
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return std::string(buf);
  };
  const auto label = [&buf](double v) {
    std::snprintf(buf, sizeof buf, "%.3g", v);
    return std::string(buf);
  };
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
      << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out << "<line x1=\"" << num(margin) << "\" y1=\"" << num(py(0.0)) << "\" x2=\""
      << num(width - margin) << "\" y2=\"" << num(py(0.0)) << "\" stroke=\"gray\"/>\n";
  out << "<line x1=\"" << num(margin) << "\" y1=\"" << num(margin) << "\" x2=\"" << num(margin)
      << "\" y2=\"" << num(height - margin) << "\" stroke=\"gray\"/>\n";
  for (int k = 0; k <= 4; ++k) {
    const double x = x_lo + (x_hi - x_lo) * k / 4.0;
    out << "<text x=\"" << num(px(x)) << "\" y=\"" << num(height - margin + 20)
        << "\" font-size=\"12\" text-anchor=\"middle\">" << label(x) << "</text>\n";
    const double y = y_lo + (y_hi - y_lo) * k / 4.0;
    out << "<text x=\"" << num(margin - 8) << "\" y=\"" << num(py(y) + 4)
        << "\" font-size=\"12\" text-anchor=\"end\">" << label(y) << "</text>\n";
  }
  out << "<text x=\"" << num(width / 2) << "\" y=\"" << num(height - 15)
      << "\" font-size=\"14\" text-anchor=\"middle\">lambda</text>\n";
  const auto polyline = [&](const char* colour, auto field) {
    out << "<polyline fill=\"none\" stroke=\"" << colour << "\" stroke-width=\"1.5\" points=\"";
    for (std::size_t i = 0; i < table.rows.size(); ++i) {
      const auto& r = table.rows[i];
      out << (i ? " " : "") << num(px(r.lambda)) << ',' << num(py(field(r)));
    }
    out << "\"/>\n";
  };
  polyline("red", [](const SweepRow& r) { return r.scaled_numeric; });
  polyline("black", [](const SweepRow& r) { return r.scaled_asym; });
  out << "</svg>\n";
}

} // namespace altlab
