#pragma once

/// \file config.hpp
/// Run-wide settings and the optional key=value configuration file.
///
///     # comment
///     strip.a1 = 1.9
///     hankel.panel_rule_order = 32
///
/// Unknown keys and malformed values are errors.

#include "altlab/core_types.hpp"
#include "altlab/fourier2d.hpp"
#include "altlab/hankel.hpp"
#include "altlab/poles.hpp"
#include "altlab/residue.hpp"
#include "altlab/series.hpp"

#include <charconv>
#include <fstream>
#include <functional>
#include <istream>
#include <map>
#include <sstream>
#include <string>

namespace altlab {

struct LabConfig {
  ToleranceSpec tol;
  SeriesConfig series;
  QuadConfig quad;
  Fourier2dConfig fourier2d;
  StripParams strip = default_strip();
  ResidueConfig residue;

  void validate() const {
    tol.validate();
    quad.validate();
    fourier2d.validate();
    strip.validate();
    residue.validate();
  }
};

class ConfigError : public DomainError {
public:
  using DomainError::DomainError;
};

namespace detail {

inline std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos)
    return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

inline double parse_real(const std::string& key, const std::string& v) {
  std::size_t used = 0;
  double out = 0.0;
  try {
    out = std::stod(v, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != v.size() || v.empty())
    throw ConfigError("config: '" + key + "' expects a real number, got '" + v + "'");
  return out;
}

inline long long parse_integer(const std::string& key, const std::string& v) {
  long long out = 0;
  const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc() || ptr != v.data() + v.size())
    throw ConfigError("config: '" + key + "' expects an integer, got '" + v + "'");
  return out;
}

} // namespace detail

/// Applies key=value lines on top of `base`.
inline LabConfig parse_config(std::istream& in, LabConfig base = {}) {
  double a1 = base.strip.a1;
  double a = base.strip.a;
  double a2 = base.strip.a2;
  using Setter = std::function<void(const std::string&, const std::string&)>;
  auto real = [](double& field) -> Setter {
    return [&field](const std::string& k, const std::string& v) { field = detail::parse_real(k, v); };
  };
  auto integer = [](auto& field) -> Setter {
    return [&field](const std::string& k, const std::string& v) {
      field = static_cast<std::remove_reference_t<decltype(field)>>(detail::parse_integer(k, v));
    };
  };
  const std::map<std::string, Setter> setters{
      {"tol.abs", real(base.tol.abs_tol)},
      {"tol.rel", real(base.tol.rel_tol)},
      {"tol.max_work", integer(base.tol.max_work)},
      {"series.euler_terms", integer(base.series.euler_terms)},
      {"hankel.truncation_x", real(base.quad.truncation_x)},
      {"hankel.panel_rule_order", integer(base.quad.panel_rule_order)},
      {"hankel.max_panels", integer(base.quad.max_panels)},
      {"hankel.max_panel_width", real(base.quad.max_panel_width)},
      {"fourier2d.rule_order", integer(base.fourier2d.rule_order)},
      {"fourier2d.x_truncation", real(base.fourier2d.x_truncation)},
      {"fourier2d.y_truncation", real(base.fourier2d.y_truncation)},
      {"strip.a1", real(a1)},
      {"strip.a", real(a)},
      {"strip.a2", real(a2)},
      {"residue.rule_order", integer(base.residue.rule_order)},
      {"residue.kappa", real(base.residue.kappa)},
      {"residue.max_refinements", integer(base.residue.max_refinements)},
  };
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos)
      line.erase(hash);
    line = detail::trim(line);
    if (line.empty())
      continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError("config line " + std::to_string(lineno) + ": expected key=value");
    const std::string key = detail::trim(line.substr(0, eq));
    const std::string value = detail::trim(line.substr(eq + 1));
    const auto it = setters.find(key);
    if (it == setters.end())
      throw ConfigError("config line " + std::to_string(lineno) + ": unknown key '" + key + "'");
    it->second(key, value);
  }
  base.strip = make_strip(a1, a, a2);
  base.validate();
  return base;
}

inline LabConfig parse_config_string(const std::string& text, LabConfig base = {}) {
  std::istringstream in(text);
  return parse_config(in, std::move(base));
}

inline LabConfig load_config(const std::string& path, LabConfig base = {}) {
  std::ifstream in(path);
  if (!in)
    throw ConfigError("config: cannot open '" + path + "'");
  return parse_config(in, std::move(base));
}

} // namespace altlab
