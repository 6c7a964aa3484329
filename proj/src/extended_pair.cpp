#include <cmath>
#include <limits>

#include "ureg/qutrit_regions.hpp"

namespace ureg {

namespace {

constexpr double kTol = 1e-12;

void require_unit_interval(double v, const char* what) {
  if (!(v >= 0.0 && v <= 1.0)) throw ContractViolation(std::string(what) + " must lie in [0, 1]");
}

}  // namespace

ExtendedPairParams ExtendedPairParams::make(double w, double r_a, double r_b) {
  if (!std::isfinite(w) || !std::isfinite(r_a) || !std::isfinite(r_b))
    throw ContractViolation("extended parameters must be finite");
  if (w < 0.0 || w > 1.0) throw ContractViolation("block weight w must lie in [0, 1]");
  if (r_a * r_a + r_b * r_b > 1.0 + kTol) throw ContractViolation("in-plane Bloch vector lies outside the unit disk");
  return {w, r_a, r_b};
}

QutritState ExtendedPairParams::to_state() const {
  // w/2 (I + r_a sigma_x + r_b sigma_y) on the first two levels, 1 - w on the third.
  Matrix3 m;
  m(0, 0) = 0.5 * w;
  m(1, 1) = 0.5 * w;
  m(0, 1) = 0.5 * w * Complex(r_a, -r_b);
  m(1, 0) = 0.5 * w * Complex(r_a, r_b);
  m(2, 2) = 1.0 - w;
  return QutritState::make(m);
}

std::pair<double, double> extended_variances(const ExtendedPairParams& p, double cos_ab) {
  if (!(cos_ab >= -1.0 && cos_ab <= 1.0)) throw ContractViolation("cos_ab must lie in [-1, 1]");
  const double sin_ab = std::sqrt(1.0 - cos_ab * cos_ab);
  const double ar = p.r_a;
  const double br = cos_ab * p.r_a + sin_ab * p.r_b;
  return {clamp_variance(p.w - p.w * p.w * ar * ar), clamp_variance(p.w - p.w * p.w * br * br)};
}

WRoots extended_w_solutions(double X, double u) {
  require_unit_interval(X, "X");
  require_unit_interval(u, "u");
  if (u == 0.0) return {X, std::numeric_limits<double>::infinity()};
  const double disc = 1.0 - 4.0 * X * u;
  if (disc < 0.0) throw ContractViolation("no real block weight: 1 - 4 X u < 0");
  const double root = std::sqrt(disc);
  // w_- in rationalized form so it stays accurate as u -> 0.
  return {2.0 * X / (1.0 + root), (1.0 + root) / (2.0 * u)};
}

double extended_y_minus(double X, double u) {
  const double w = extended_w_solutions(X, u).w_minus;
  return w - w * w * (1.0 - u);
}

double extended_min_var_B(double X) {
  require_unit_interval(X, "X");
  return X * (1.0 - X);
}

bool extended_region_contains(double dA, double dB) {
  require_unit_interval(dA, "dA");
  require_unit_interval(dB, "dB");
  return dB >= dA * std::sqrt(1.0 - dA * dA) - kTol && dA >= dB * std::sqrt(1.0 - dB * dB) - kTol;
}

MonotonicityWitness extended_monotonicity_witness(double X, double u) {
  require_unit_interval(X, "X");
  if (!(u > 0.0 && u <= 1.0)) throw ContractViolation("u must lie in (0, 1]");
  const double disc = 1.0 - 4.0 * X * u;
  if (!(disc > 0.0)) throw ContractViolation("derivatives diverge where 1 - 4 X u <= 0");
  const double root = std::sqrt(disc);
  const double w = 2.0 * X / (1.0 + root);
  // (w_- - X) / u = 4 X^2 / (1 + sqrt(disc))^2, finite as u -> 0.
  const double excess_over_u = 4.0 * X * X / ((1.0 + root) * (1.0 + root));
  return {excess_over_u / root, 2.0 * excess_over_u * (1.0 - w) / root};
}

std::vector<CurveSegment> extended_boundary_segments() {
  return {
      CurveSegment::make(FormulaId::ExtendedLower, {0.0, 1.0}, Scale::StdDev),
      CurveSegment::make(FormulaId::ExtendedMirrorLow, {0.0, 0.5}, Scale::StdDev),
      CurveSegment::make(FormulaId::ExtendedMirrorHigh, {0.0, 0.5}, Scale::StdDev),
      CurveSegment::make(FormulaId::OrthogonalQubitLower, {0.0, 1.0}, Scale::StdDev),
  };
}

}  // namespace ureg
