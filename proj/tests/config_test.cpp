#include "altlab/config.hpp"

#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

using namespace altlab;

TEST(Config, DefaultsValidate) {
  const LabConfig cfg;
  EXPECT_NO_THROW(cfg.validate());
  EXPECT_EQ(cfg.strip.a, 2.0);
}

TEST(Config, ParsesKeysCommentsAndBlanks) {
  const auto cfg = parse_config_string(
      "# strip\n"
      "strip.a1 = 1.85\n"
      "strip.a = 1.95   # inline comment\n"
      "\n"
      "hankel.panel_rule_order=32\r\n"
      "residue.kappa = 0.5\n"
      "tol.abs = 1e-12\n"
      "series.euler_terms = 40\n");
  EXPECT_EQ(cfg.strip.a1, 1.85);
  EXPECT_EQ(cfg.strip.a, 1.95);
  EXPECT_NEAR(cfg.strip.b, strip_width_b(1.95), 0.0);
  EXPECT_EQ(cfg.quad.panel_rule_order, 32);
  EXPECT_EQ(cfg.residue.kappa, 0.5);
  EXPECT_EQ(cfg.tol.abs_tol, 1e-12);
  EXPECT_EQ(cfg.series.euler_terms, 40);
}

TEST(Config, Errors) {
  EXPECT_THROW(parse_config_string("nonsense.key = 1\n"), ConfigError);
  EXPECT_THROW(parse_config_string("strip.a\n"), ConfigError);
  EXPECT_THROW(parse_config_string("strip.a = two\n"), ConfigError);
  EXPECT_THROW(parse_config_string("hankel.max_panels = 3.5\n"), ConfigError);
  EXPECT_THROW(parse_config_string("strip.a = 2.5\n"), DomainError);
  EXPECT_THROW(parse_config_string("hankel.panel_rule_order = 4\n"), DomainError);
  EXPECT_THROW(load_config("/nonexistent/altlab.cfg"), ConfigError);
}

TEST(Config, LoadsFromFile) {
  const auto path = std::filesystem::temp_directory_path() / "altlab_config_test.cfg";
  {
    std::ofstream out(path);
    out << "fourier2d.rule_order = 24\nresidue.max_refinements = 3\n";
  }
  const auto cfg = load_config(path.string());
  EXPECT_EQ(cfg.fourier2d.rule_order, 24);
  EXPECT_EQ(cfg.residue.max_refinements, 3);
  std::filesystem::remove(path);
}
