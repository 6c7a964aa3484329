// verify.hpp
// Named verification suites comparing analytic results against the oracle
// and against exact identities. Each check reports one line:
//
//   name status max_gap tol [# note]

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ureg/quantum_core.hpp"

namespace ureg {

class UnknownSuite : public ContractViolation {
 public:
  using ContractViolation::ContractViolation;
};

struct CheckResult {
  std::string name;
  bool pass = false;
  double max_gap = 0.0;
  double tol = 0.0;
  std::string note;

  [[nodiscard]] std::string line() const;
};

struct VerifyOptions {
  double tol = kEnvelopeTol;        // used by oracle comparisons only
  std::uint64_t seed = 0;
  std::size_t samples = 100'000;    // in-plane grid states; the ball gets ten times as many
  std::size_t threads = 0;
};

const std::vector<std::string>& suite_names();

/// Runs a suite by name; throws UnknownSuite for names not in suite_names().
std::vector<CheckResult> run_suite(const std::string& name, const VerifyOptions& options);

/// Uniform unit vector from three counter draws.
Vec3 counter_unit_vector(std::uint64_t seed, std::uint64_t index);
/// Uniform point of the closed unit ball (inverse-CDF radius).
Vec3 counter_ball_point(std::uint64_t seed, std::uint64_t index);

/// Angle tokens pi/16, pi/8, pi/4, 3pi/8, 7pi/16, pi/2, or literal radians.
double parse_angle(const std::string& text);

}  // namespace ureg
