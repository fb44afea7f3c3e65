#pragma once

// Grid-driven invariant checks over every module, with machine-readable
// reports. The CLI's `verify` subcommand is a thin wrapper over run_verify.

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace koebe {

enum class Suite { Coeffs, Shear, Norms, Growth, Area, Univalence, Hyp, All };

std::string_view to_string(Suite s) noexcept;
// Throws ConfigError for unknown names.
Suite parse_suite(std::string_view name);

struct VerifyConfig {
  std::vector<double> a_values{-2.0, -1.5, -1.0, -0.5, 0.0, 0.5, 1.0, 1.5, 2.0};
  std::vector<double> lambda_values{0.0, 0.25, 0.5, 0.75};
  std::vector<double> r_values{0.3, 0.6, 0.9};
  // Extra a values (|a| > 2) exercised only by the univalence suite.
  std::vector<double> nonunivalent_a{2.5, 3.0};
  int random_points = 200;
  int angles = 64;
  int scan_samples = 1024;
  double scan_radius = 0.9;
  std::uint64_t seed = 20240917;
  double rel_tol = 1e-10;

  void validate() const;
};

// Reads a JSON object with any of the keys
//   "a", "lambda", "r", "nonunivalent_a", "random_points", "angles",
//   "scan_samples", "scan_radius", "seed", "rel_tol";
// unspecified keys keep their defaults. Throws ConfigError.
VerifyConfig load_verify_config(const std::string& json_text);

using CheckValue = std::variant<double, std::string>;

struct Check {
  std::string name;
  std::vector<std::pair<std::string, double>> params;
  CheckValue measured;
  CheckValue bound_or_expected;
  double tol = 0.0;
  bool pass = false;
};

struct VerifyReport {
  std::string suite;
  VerifyConfig grid;
  std::vector<Check> checks;
  double elapsed_ms = 0.0;

  bool all_passed() const noexcept;
  std::size_t failures() const noexcept;
};

VerifyReport run_verify(Suite suite, const VerifyConfig& config = {});

// {suite, grid, checks:[{name, params, measured, bound_or_expected, tol, pass}], elapsed_ms}
std::string to_json(const VerifyReport& report, int indent = 2);

// One line per check plus a summary line.
std::string to_text(const VerifyReport& report);

}  // namespace koebe
