// altlab: command-line front end for the S(t) evaluation lab.

#include "altlab/altlab.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

namespace {

using namespace altlab;

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out)
    throw DomainError("cannot open '" + path + "' for writing");
  return out;
}

int run_eval(std::optional<double> t, std::optional<double> lambda, const std::string& method_name,
             std::optional<double> tol, bool json, LabConfig cfg) {
  if (t.has_value() == lambda.has_value())
    throw DomainError("eval: give exactly one of --t and --lambda");
  if (tol) {
    cfg.tol.abs_tol = *tol;
    cfg.tol.validate();
  }
  const double lam = lambda ? *lambda : lambda_of_t(*t);
  const std::optional<double> t_exact = t;
  Method method;
  if (method_name == "auto") {
    method = auto_method(lam);
  } else {
    const auto parsed = parse_method(method_name);
    if (!parsed)
      throw DomainError("eval: unknown method '" + method_name + "'");
    method = *parsed;
  }
  const auto v = evaluate_method(method, lam, cfg, t_exact);
  double scaled = -std::exp(lam * kSqrtHalfPi) * v.value;
  if (method == Method::residue && v.status != MethodStatus::out_of_range && lam > 0.0)
    scaled = -s_star_via_residue(lam, cfg.strip, cfg.tol, cfg.residue).scaled_value;
  const std::string name(to_string(method));
  if (json) {
    nlohmann::ordered_json doc;
    doc["lambda"] = format_real(lam);
    doc["t"] = format_real(t ? *t : t_of_lambda(lam));
    nlohmann::ordered_json entry;
    entry["value"] = format_real(v.value);
    entry["error_estimate"] = format_real(v.error_estimate);
    entry["work"] = std::to_string(v.work);
    entry["status"] = std::string(to_string(v.status));
    if (!v.note.empty())
      entry["note"] = v.note;
    doc["methods"][name] = entry;
    doc["scaled"][name] = format_real(scaled);
    doc["scaled"]["asymptotic"] = lam > 0.0 ? format_real(-asym_s_star_scaled(lam)) : "nan";
    std::cout << doc.dump(2) << '\n';
  } else {
    std::cout << "lambda          " << format_real(lam) << '\n'
              << "method          " << name << '\n'
              << "value           " << format_real(v.value) << '\n'
              << "error_estimate  " << format_real(v.error_estimate) << '\n'
              << "scaled          " << format_real(scaled) << '\n'
              << "work            " << v.work << '\n'
              << "status          " << to_string(v.status) << '\n';
    if (!v.note.empty())
      std::cout << "note            " << v.note << '\n';
  }
  return v.status == MethodStatus::failed ? 1 : 0;
}

int run_poles(std::optional<double> y, std::optional<int> grid, const LabConfig& cfg) {
  if (y.has_value() == grid.has_value())
    throw DomainError("poles: give exactly one of --y and --grid");
  std::cout << "y,x_star,u_star,q_residual\n";
  const auto row = [](double yy) {
    const auto p = pole_location(yy);
    std::cout << format_real(yy) << ',' << format_real(p.x_star) << ',' << format_real(p.u_star)
              << ',' << format_real(std::abs(q_eval(p.z(), yy))) << '\n';
  };
  if (y) {
    row(*y);
  } else {
    if (*grid < 1)
      throw DomainError("poles: --grid must be positive");
    // interior of (-b, b)
    const double b = cfg.strip.b;
    for (int i = 1; i <= *grid; ++i)
      row(-b + 2.0 * b * i / (*grid + 1));
  }
  return 0;
}

int run_verify(bool quick) {
  const auto report = run_acceptance(quick);
  for (const auto& c : report.checks)
    std::cout << (c.passed ? "PASS " : "FAIL ") << c.name << ": " << c.detail << '\n';
  std::cout << "calibration: kappa " << format_real(report.calibration.kappa) << ", C_envelope "
            << format_real(report.calibration.c_envelope) << '\n';
  return report.all_passed() ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Evaluation lab for S(t) = sum (-1)^n n^-1 e^{-t/n}"};
  app.require_subcommand(1);
  std::string config_path;
  app.add_option("--config", config_path, "key=value configuration file")->check(CLI::ExistingFile);

  auto* eval = app.add_subcommand("eval", "evaluate S(t) or S*(lambda)");
  std::optional<double> t;
  std::optional<double> lambda;
  std::optional<double> tol;
  std::string method = "auto";
  bool json = false;
  auto* t_opt = eval->add_option("--t", t, "t >= 0");
  auto* lambda_opt = eval->add_option("--lambda", lambda, "lambda >= 0");
  t_opt->excludes(lambda_opt);
  eval->add_option("--method", method, "series|hankel|fourier2d|residue|asym|auto")
      ->check(CLI::IsMember({"series", "hankel", "fourier2d", "residue", "asym", "auto"}));
  eval->add_option("--tol", tol, "absolute tolerance");
  eval->add_flag("--json", json, "JSON output");

  auto* sweep = app.add_subcommand("sweep", "all routes over a lambda grid, as CSV");
  double sweep_min = 5.0;
  double sweep_max = 25.0;
  int sweep_points = 50;
  std::string sweep_out;
  sweep->add_option("--lambda-min", sweep_min);
  sweep->add_option("--lambda-max", sweep_max);
  sweep->add_option("--points", sweep_points);
  sweep->add_option("--out", sweep_out)->required();

  auto* figure = app.add_subcommand("figure", "scaled numeric and asymptotic curves");
  double fig_min = 5.0;
  double fig_max = 25.0;
  int fig_points = 200;
  std::string fig_csv;
  std::string fig_svg;
  figure->add_option("--lambda-min", fig_min);
  figure->add_option("--lambda-max", fig_max);
  figure->add_option("--points", fig_points);
  figure->add_option("--csv", fig_csv)->required();
  figure->add_option("--svg", fig_svg);

  auto* poles = app.add_subcommand("poles", "pole locations z = +-x* + i u*");
  std::optional<double> pole_y;
  std::optional<int> pole_grid;
  auto* y_opt = poles->add_option("--y", pole_y);
  auto* grid_opt = poles->add_option("--grid", pole_grid);
  y_opt->excludes(grid_opt);

  auto* verify = app.add_subcommand("verify", "run the acceptance suite");
  bool quick = false;
  verify->add_flag("--quick", quick);

  CLI11_PARSE(app, argc, argv);

  try {
    LabConfig cfg;
    if (!config_path.empty())
      cfg = load_config(config_path);
    if (*eval)
      return run_eval(t, lambda, method, tol, json, cfg);
    if (*sweep) {
      auto out = open_output(sweep_out);
      write_csv(out, sweep_data(sweep_min, sweep_max, sweep_points, true, cfg));
      return 0;
    }
    if (*figure) {
      const auto table = figure_data(fig_min, fig_max, fig_points, cfg);
      auto csv = open_output(fig_csv);
      write_csv(csv, table);
      if (!fig_svg.empty()) {
        auto svg = open_output(fig_svg);
        write_svg(svg, table);
      }
      return 0;
    }
    if (*poles)
      return run_poles(pole_y, pole_grid, cfg);
    if (*verify)
      return run_verify(quick);
  } catch (const std::exception& e) {
    std::cerr << "altlab: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
