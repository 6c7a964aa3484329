#include <algorithm>
#include <cmath>

#include "ureg/qutrit_regions.hpp"

namespace ureg {

namespace {

constexpr double kTol = 1e-12;

void require_unit_interval(double v, const char* what) {
  if (!(v >= 0.0 && v <= 1.0)) throw ContractViolation(std::string(what) + " must lie in [0, 1]");
}

double sqrt0(double v) { return std::sqrt(std::max(0.0, v)); }
double f(FormulaId id, double x) { return evaluate_formula(id, x); }

// Breakpoints of the boundary description.
constexpr double k3_16 = 3.0 / 16.0;
constexpr double k15_64 = 15.0 / 64.0;
constexpr double k13_16 = 13.0 / 16.0;
constexpr double k15_16 = 15.0 / 16.0;

}  // namespace

GellMannStateParams GellMannStateParams::make(double rho11, double rho33, double re13, double im13) {
  if (!std::isfinite(rho11) || !std::isfinite(rho33) || !std::isfinite(re13) || !std::isfinite(im13))
    throw ContractViolation("state parameters must be finite");
  if (rho11 < -kTol || rho33 < -kTol || rho11 + rho33 > 1.0 + kTol)
    throw ContractViolation("diagonal entries must be non-negative and sum to at most 1");
  if (re13 * re13 + im13 * im13 > rho11 * rho33 + kTol)
    throw ContractViolation("|rho13|^2 must not exceed rho11 rho33");
  return {rho11, rho33, re13, im13};
}

QutritState GellMannStateParams::to_state() const {
  Matrix3 m;
  m(0, 0) = rho11;
  m(1, 1) = rho22();
  m(2, 2) = rho33;
  m(0, 2) = Complex(re13, im13);
  m(2, 0) = Complex(re13, -im13);
  return QutritState::make(m);
}

std::pair<double, double> gm_variances(const GellMannStateParams& p) {
  const double r22 = p.rho22();
  const double mean_a = p.rho11 - r22;
  return {clamp_variance(p.rho11 + r22 - mean_a * mean_a), clamp_variance(p.rho11 + p.rho33 - 4.0 * p.re13 * p.re13)};
}

double gm_rho33(double x, double rho11, GmBranch branch) {
  const double disc = 1.0 + 8.0 * rho11 - 4.0 * x;
  if (disc < -kTol) throw ContractViolation("no real rho33: 1 + 8 rho11 - 4x < 0");
  const double sign = branch == GmBranch::Plus ? 1.0 : -1.0;
  return 0.5 * (1.0 - 4.0 * rho11 + sign * sqrt0(disc));
}

std::vector<Interval> gm_feasible_rho11(double x, GmBranch branch) {
  require_unit_interval(x, "x");
  const double p = sqrt0(1.0 - x);
  if (branch == GmBranch::Plus) {
    if (x <= 0.25) {
      const double q = sqrt0(1.0 - 4.0 * x);
      const Interval left{0.0, 0.5 * (1.0 - q)};
      const Interval right{0.5 * (1.0 + q), 0.5 * (1.0 + p)};
      if (left.hi >= right.lo) return {{left.lo, right.hi}};
      return {left, right};
    }
    if (x <= 0.75) return {{(4.0 * x - 1.0) / 8.0, 0.5 * (1.0 + p)}};
    return {{0.5 * (1.0 - p), 0.5 * (1.0 + p)}};
  }
  if (x <= 0.25) return {{0.0, 0.5 * (1.0 - p)}};
  if (x <= 0.75) return {{(4.0 * x - 1.0) / 8.0, 0.5 * (1.0 - p)}};
  return {};
}

std::vector<StationaryRoot> gm_stationary_rho11_min(double x) {
  require_unit_interval(x, "x");
  std::vector<StationaryRoot> out;
  if (x >= k3_16 && x <= k15_16) out.push_back({StationaryRoot::Kind::Linear, (16.0 * x - 3.0) / 32.0});
  if (13.0 - 16.0 * x >= 0.0) {
    const double root = std::sqrt(13.0 - 16.0 * x);
    if (x >= 0.25 && x <= k13_16) out.push_back({StationaryRoot::Kind::PlusRoot, (5.0 + root) / 16.0});
    if (std::abs(x - 9.0 / 16.0) <= kTol || (x >= 0.75 && x <= k13_16))
      out.push_back({StationaryRoot::Kind::MinusRoot, (5.0 - root) / 16.0});
  }
  return out;
}

double gm_stationary_rho11_max(double x) {
  require_unit_interval(x, "x");
  return (3.0 + 4.0 * x) / 8.0;
}

std::vector<CurveSegment> gm_boundary_segments() {
  const Scale v = Scale::Variance;
  return {
      CurveSegment::make(FormulaId::ConstantOne, {0.0, 0.25}, v),
      CurveSegment::make(FormulaId::GmLinearUpper, {0.25, 0.75}, v),
      CurveSegment::make(FormulaId::GmSqrtUpper, {0.75, 1.0}, v),
      CurveSegment::make(FormulaId::GmSqrtLower, {k15_16, 1.0}, v),
      CurveSegment::make(FormulaId::GmQuadratic, {k13_16, k15_16}, v),
      CurveSegment::make(FormulaId::GmLinearLower, {0.25, k13_16}, v),
      CurveSegment::make(FormulaId::GmOneMinusFourX, {k15_64, 0.25}, v),
      CurveSegment::make(FormulaId::GmSqrtLower, {0.0, k15_64}, v),
      CurveSegment::make(FormulaId::GmSqrtFourX, {0.0, k3_16}, v),
      CurveSegment::make(FormulaId::GmOneMinusFourX, {0.0, k3_16}, v),
  };
}

double gm_min_var_B(double x) {
  require_unit_interval(x, "x");
  if (x <= k15_64) return f(FormulaId::GmSqrtLower, x);
  if (x <= 0.25) return f(FormulaId::GmOneMinusFourX, x);
  if (x <= k13_16) return f(FormulaId::GmLinearLower, x);
  if (x <= k15_16) return f(FormulaId::GmQuadratic, x);
  return f(FormulaId::GmSqrtLower, x);
}

double gm_max_var_B(double x) {
  require_unit_interval(x, "x");
  if (x <= 0.25) return 1.0;
  if (x <= 0.75) return f(FormulaId::GmLinearUpper, x);
  return f(FormulaId::GmSqrtUpper, x);
}

std::vector<Interval> gm_region_intervals(double x) {
  require_unit_interval(x, "x");
  if (x < k3_16) {
    // Two lobes: one growing out of the common eigenstate at the origin,
    // one hanging down from Var B = 1.
    return {{gm_min_var_B(x), f(FormulaId::GmSqrtFourX, x)}, {f(FormulaId::GmOneMinusFourX, x), 1.0}};
  }
  return {{gm_min_var_B(x), gm_max_var_B(x)}};
}

bool gm_region_contains(double x, double y, double tol) {
  if (!(x >= -tol && x <= 1.0 + tol)) return false;
  for (const auto& iv : gm_region_intervals(std::clamp(x, 0.0, 1.0)))
    if (iv.contains(y, tol)) return true;
  return false;
}

double gm_schrodinger_objective(double x, double rho11, double lambda) {
  const double rho33 = std::max(0.0, gm_rho33(x, rho11, GmBranch::Plus));
  const double mod2 = rho11 * rho33;  // |rho13|^2 at its maximum
  // S = Im^2 + Re^2 (1 - 2<A>)^2 with <A> = 2 rho11 + rho33 - 1.
  const double k = 3.0 - 4.0 * rho11 - 2.0 * rho33;
  return (lambda + (1.0 - lambda) * k * k) * mod2 / x;
}

SchrodingerGap gm_schrodinger_gap(double x) {
  if (!(x >= 0.75 && x <= 1.0)) throw ContractViolation("Schrodinger gap is defined for Var A in [3/4, 1]");
  const double half_width = 0.5 * sqrt0(1.0 - x);
  const double lo = 0.5 - half_width;
  const double hi = 0.5 + half_width;

  // The objective is linear in lambda, so the inner maximum sits at an end.
  auto objective = [x](double r) {
    return std::max(gm_schrodinger_objective(x, r, 0.0), gm_schrodinger_objective(x, r, 1.0));
  };

  SchrodingerGap out;
  out.min_var_B = gm_min_var_B(x);
  if (hi <= lo) {
    out.argmax_rho11 = 0.5;
    out.f = objective(0.5);
    return out;
  }

  constexpr int kGrid = 2001;
  const double step = (hi - lo) / (kGrid - 1);
  int best = 0;
  double best_val = -1.0;
  for (int i = 0; i < kGrid; ++i) {
    const double v = objective(lo + step * i);
    if (v > best_val) {
      best_val = v;
      best = i;
    }
  }
  // Golden-section refinement on the bracketing grid cells.
  double a = lo + step * std::max(0, best - 1);
  double b = lo + step * std::min(kGrid - 1, best + 1);
  const double g = 0.5 * (std::sqrt(5.0) - 1.0);
  double c = b - g * (b - a);
  double d = a + g * (b - a);
  for (int it = 0; it < 100 && b - a > 1e-15; ++it) {
    if (objective(c) > objective(d)) {
      b = d;
    } else {
      a = c;
    }
    c = b - g * (b - a);
    d = a + g * (b - a);
  }
  const double mid = 0.5 * (a + b);
  out.argmax_rho11 = objective(mid) > best_val ? mid : lo + step * best;
  out.f = std::max(best_val, objective(mid));
  return out;
}

}  // namespace ureg
