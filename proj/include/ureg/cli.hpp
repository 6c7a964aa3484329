// cli.hpp
// Command-line front end. Every command is a plain function of a RunConfig
// and two streams so it can be driven in-process by tests.

#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace ureg {

enum class OutputFormat { Csv, Svg };

struct RunConfig {
  std::string command;
  std::optional<std::string> theta;  // pi/4 for qubit-region, pi/2 for extended-region
  std::optional<std::size_t> grid;  // analytic samples per curve
  std::optional<std::size_t> samples;
  std::uint64_t seed = 0;
  double tol = 5e-3;
  std::string out;  // empty = standard output
  OutputFormat format = OutputFormat::Csv;
  bool overlay_oracle = false;
  std::vector<double> slices = {0.0, 0.25, 0.5, 0.75, 1.0};
  std::vector<double> ells = {0.5, 1.0, 2.0};
  std::string suite;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

int cmd_qubit_region(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_triple_region(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_qp_envelope(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_extended_region(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_gellmann_region(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// Parses argv and dispatches. Exit codes: 0 success, 1 verification or I/O
/// failure, 2 usage error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ureg
