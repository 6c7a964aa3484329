// qubit_regions.hpp
// Closed-form uncertainty regions for sharp +-1 valued qubit observables.
//
// For A = a.sigma and B = b.sigma with c = a.b >= 0 and s = |a x b| the
// region in the (dA, dB) standard-deviation plane is
//
//   |dA c - s sqrt(1 - dA^2)|  <=  dB  <=  dA c + s sqrt(1 - dA^2)   (dA < c)
//                                        1                            (dA >= c)
//
// The orthogonal triple sigma_x, sigma_y, sigma_z satisfies
// Var x + Var y + Var z = 3 - |r|^2 >= 2.

#pragma once

#include <optional>
#include <vector>

#include "ureg/curves.hpp"
#include "ureg/quantum_core.hpp"

namespace ureg {

/// Canonicalized pair of unit Bloch vectors (b is flipped when a.b < 0,
/// which relabels outcomes of B and leaves every variance unchanged).
class QubitPair {
 public:
  static QubitPair make(const Vec3& a, const Vec3& b);
  /// a = x-axis, b at angle theta in the x-y plane; theta in [0, pi/2].
  static QubitPair from_angle(double theta);

  [[nodiscard]] const Vec3& a() const { return a_; }
  [[nodiscard]] const Vec3& b() const { return b_; }
  [[nodiscard]] double cos_angle() const { return c_; }
  [[nodiscard]] double sin_angle() const { return s_; }
  [[nodiscard]] bool flipped() const { return flipped_; }
  [[nodiscard]] QubitObservable observable_a() const { return QubitObservable::make(a_); }
  [[nodiscard]] QubitObservable observable_b() const { return QubitObservable::make(b_); }

  /// Unit vector in span{a, b} orthogonal to a (any orthogonal unit vector
  /// when a and b are parallel).
  [[nodiscard]] const Vec3& a_perp() const { return a_perp_; }
  /// Pure state cos(phi) a + sin(phi) a_perp.
  [[nodiscard]] Vec3 in_plane_direction(double phi) const;

 private:
  QubitPair(const Vec3& a, const Vec3& b, bool flipped);
  Vec3 a_;
  Vec3 b_;
  Vec3 a_perp_;
  double c_ = 1.0;
  double s_ = 0.0;
  bool flipped_ = false;
};

double min_sdev_B(const QubitPair& pair, double dA);
double max_sdev_B(const QubitPair& pair, double dA);

/// Membership of a standard-deviation pair; boundary points count as inside.
bool pair_region_contains(const QubitPair& pair, const UncertaintyPoint& point);

/// dA + dB >= s
double prior_straight_bound(const QubitPair& pair);
/// Var A + Var B >= 1 - sqrt(1 - s^2) = 1 - |c|
double prior_curved_bound(const QubitPair& pair);

/// dx^2 + dy^2 + dz^2 >= 2 for standard deviations of sigma_x, sigma_y, sigma_z.
bool triple_region_contains(double dx, double dy, double dz);
/// Attainable dy at fixed (dz, dx) inside the unit cube, or nullopt when the
/// column misses the region. The inner boundary is dx^2 + dy^2 = 2 - dz^2.
std::optional<Interval> triple_slice(double dz, double dx);
/// Var sigma_x + Var sigma_y + Var sigma_z, computed from the state matrix.
double orthogonal_triple_variance_sum(const QubitState& state);

struct LagrangeResiduals {
  double pythagoras = 0.0;  // |a x b|^2 |r|^2 = ((a x b).r)^2 + |(a x b) x r|^2
  double additive = 0.0;    // sum of three variances form
  double product = 0.0;     // product-minus-Schrodinger form
  [[nodiscard]] double max() const { return std::max({pythagoras, additive, product}); }
};

LagrangeResiduals lagrange_identity_residuals(const Vec3& a, const Vec3& b, const Vec3& r);

/// | |a x b| - |x - y| | with x = r - a(a.r), y = r - b(b.r) for unit r in span{a, b}.
double planar_decomposition_check(const Vec3& a, const Vec3& b, const Vec3& r);

/// |Var A Var B - S(A, B, rho) - s^2 (1 - |r|^2)|
double schrodinger_equality_residual(const QubitPair& pair, const QubitState& state);

struct PairBoundary {
  std::vector<double> grid;   // dA samples, uniform on [0, 1]
  std::vector<double> lower;  // min dB at each grid point
  std::vector<double> upper;  // max dB at each grid point
  std::vector<SampledCurve> curves;  // tight arcs followed by the two prior bound curves
};

PairBoundary pair_boundary_segments(const QubitPair& pair, std::size_t grid_n);

}  // namespace ureg
