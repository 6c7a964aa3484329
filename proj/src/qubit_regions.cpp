#include "ureg/qubit_regions.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace ureg {

namespace {

constexpr double kMembershipTol = 1e-12;

void require_unit_interval(double v, const char* what) {
  if (!(v >= 0.0 && v <= 1.0)) throw ContractViolation(std::string(what) + " must lie in [0, 1]");
}

void require_unit(const Vec3& v, const char* what) {
  if (!v.finite() || std::abs(norm(v) - 1.0) > kAlgebraicTol)
    throw ContractViolation(std::string(what) + " must be a unit vector");
}

Vec3 any_orthogonal(const Vec3& a) {
  const Vec3 trial = std::abs(a.x) < 0.9 ? Vec3{1, 0, 0} : Vec3{0, 1, 0};
  return normalized(trial - a * dot(a, trial));
}

}  // namespace

QubitPair::QubitPair(const Vec3& a, const Vec3& b, bool flipped) : a_(a), b_(b), flipped_(flipped) {
  c_ = std::clamp(dot(a, b), 0.0, 1.0);
  s_ = norm(cross(a, b));
  const Vec3 rest = b - a * dot(a, b);
  a_perp_ = norm(rest) > 1e-14 ? normalized(rest) : any_orthogonal(a);
}

QubitPair QubitPair::make(const Vec3& a, const Vec3& b) {
  require_unit(a, "a");
  require_unit(b, "b");
  if (dot(a, b) < 0.0) return QubitPair(a, -b, true);
  return QubitPair(a, b, false);
}

QubitPair QubitPair::from_angle(double theta) {
  if (!(theta >= 0.0 && theta <= std::numbers::pi / 2 + 1e-15))
    throw ContractViolation("pair angle must lie in [0, pi/2]");
  return make({1, 0, 0}, {std::cos(theta), std::sin(theta), 0});
}

Vec3 QubitPair::in_plane_direction(double phi) const {
  return a_ * std::cos(phi) + a_perp_ * std::sin(phi);
}

double min_sdev_B(const QubitPair& pair, double dA) {
  require_unit_interval(dA, "dA");
  return evaluate_formula(FormulaId::QubitLower, dA, pair.cos_angle(), pair.sin_angle());
}

double max_sdev_B(const QubitPair& pair, double dA) {
  require_unit_interval(dA, "dA");
  if (dA < pair.cos_angle()) return evaluate_formula(FormulaId::QubitUpperArc, dA, pair.cos_angle(), pair.sin_angle());
  return 1.0;
}

bool pair_region_contains(const QubitPair& pair, const UncertaintyPoint& point) {
  if (point.scale != Scale::StdDev) throw ContractViolation("qubit pair membership expects standard deviations");
  if (point.u1 > 1.0 || point.u2 > 1.0) return false;
  const double lo = min_sdev_B(pair, point.u1);
  const double hi = max_sdev_B(pair, point.u1);
  return point.u2 >= lo - kMembershipTol && point.u2 <= hi + kMembershipTol;
}

double prior_straight_bound(const QubitPair& pair) { return pair.sin_angle(); }

double prior_curved_bound(const QubitPair& pair) {
  const double s = pair.sin_angle();
  return 1.0 - std::sqrt(std::max(0.0, 1.0 - s * s));
}

bool triple_region_contains(double dx, double dy, double dz) {
  require_unit_interval(dx, "dx");
  require_unit_interval(dy, "dy");
  require_unit_interval(dz, "dz");
  return dx * dx + dy * dy + dz * dz >= 2.0 - kMembershipTol;
}

std::optional<Interval> triple_slice(double dz, double dx) {
  require_unit_interval(dz, "dz");
  require_unit_interval(dx, "dx");
  const double rest = 2.0 - dz * dz - dx * dx;
  if (rest > 1.0 + kMembershipTol) return std::nullopt;
  return Interval{std::sqrt(std::clamp(rest, 0.0, 1.0)), 1.0};
}

double orthogonal_triple_variance_sum(const QubitState& state) {
  return variance(QubitObservable::sigma_x(), state) + variance(QubitObservable::sigma_y(), state) +
         variance(QubitObservable::sigma_z(), state);
}

LagrangeResiduals lagrange_identity_residuals(const Vec3& a, const Vec3& b, const Vec3& r) {
  require_unit(a, "a");
  require_unit(b, "b");
  const Vec3 axb = cross(a, b);
  const double s2 = dot(axb, axb);
  const double r2 = dot(r, r);
  const double ar = dot(a, r);
  const double br = dot(b, r);
  const double ab = dot(a, b);
  const double cr = dot(axb, r);
  const Vec3 cxr = cross(axb, r);

  LagrangeResiduals out;
  out.pythagoras = std::abs(s2 * r2 - cr * cr - dot(cxr, cxr));
  out.additive = std::abs((1 - ar * ar) + (1 - br * br) + (s2 - cr * cr) - s2 * (1 - r2) - 2 * (1 - ab * ar * br));
  const double cov = ab - ar * br;
  out.product = std::abs((1 - ar * ar) * (1 - br * br) - (cr * cr + cov * cov) - s2 * (1 - r2));
  return out;
}

double planar_decomposition_check(const Vec3& a, const Vec3& b, const Vec3& r) {
  require_unit(a, "a");
  require_unit(b, "b");
  require_unit(r, "r");
  const Vec3 axb = cross(a, b);
  if (std::abs(dot(axb, r)) > 1e-10) throw ContractViolation("r must lie in the plane spanned by a and b");
  const Vec3 x = r - a * dot(a, r);
  const Vec3 y = r - b * dot(b, r);
  return std::abs(norm(axb) - norm(x - y));
}

double schrodinger_equality_residual(const QubitPair& pair, const QubitState& state) {
  const Observable A = pair.observable_a();
  const Observable B = pair.observable_b();
  const DensityState rho = state;
  const double s = pair.sin_angle();
  const double r2 = dot(state.bloch(), state.bloch());
  return std::abs(variance(A, rho) * variance(B, rho) - schrodinger_bound(A, B, rho) - s * s * (1.0 - r2));
}

PairBoundary pair_boundary_segments(const QubitPair& pair, std::size_t grid_n) {
  if (grid_n < 2) throw ContractViolation("boundary grid needs at least two points");
  const double c = pair.cos_angle();
  const double s = pair.sin_angle();

  PairBoundary out;
  out.grid = uniform_grid(0.0, 1.0, grid_n);
  out.lower.reserve(grid_n);
  out.upper.reserve(grid_n);
  for (double x : out.grid) {
    out.lower.push_back(min_sdev_B(pair, x));
    out.upper.push_back(max_sdev_B(pair, x));
  }

  auto add = [&](FormulaId id, Interval dom) {
    if (dom.hi <= dom.lo) return;
    out.curves.push_back(sample_segment(CurveSegment::make(id, dom, Scale::StdDev, c, s), out.grid));
  };
  add(FormulaId::QubitLower, {0.0, 1.0});
  add(FormulaId::QubitUpperArc, {0.0, c});
  add(FormulaId::ConstantOne, {c, 1.0});
  add(FormulaId::PriorStraight, {0.0, s});
  add(FormulaId::PriorCurved, {0.0, std::sqrt(std::max(0.0, 1.0 - c))});
  return out;
}

}  // namespace ureg
