#include <doctest.h>

#include <cmath>
#include <numbers>

#include "test_support.hpp"
#include "ureg/qubit_regions.hpp"

using namespace ureg;
using doctest::Approx;

namespace {

constexpr double kPi = std::numbers::pi;

// In-plane pure states r = cos(phi) a + sin(phi) a_perp give dA = |sin phi|
// and dB = |sin(phi - theta)|. Returns the extreme dB over the four phi with
// the requested dA.
std::pair<double, double> in_plane_extremes(double theta, double dA) {
  const double p = std::asin(dA);
  double lo = 2, hi = -1;
  for (double phi : {p, kPi - p, -p, kPi + p}) {
    const double dB = std::abs(std::sin(phi - theta));
    lo = std::min(lo, dB);
    hi = std::max(hi, dB);
  }
  return {lo, hi};
}

}  // namespace

TEST_CASE("pair canonicalization") {
  const auto p = QubitPair::make({1, 0, 0}, normalized({-1, 1, 0}));
  CHECK(p.flipped());
  CHECK(p.cos_angle() == Approx(std::sqrt(0.5)));
  CHECK(p.cos_angle() >= 0);
  CHECK(p.cos_angle() * p.cos_angle() + p.sin_angle() * p.sin_angle() == Approx(1.0).epsilon(1e-11));
  CHECK_THROWS_AS(QubitPair::make({1, 0, 0}, {0, 2, 0}), ContractViolation);
  CHECK_THROWS_AS(QubitPair::from_angle(2.0), ContractViolation);
  // Flipping b leaves the variance of B unchanged.
  const Vec3 r{0.3, -0.4, 0.5};
  CHECK(variance(p.observable_b(), QubitState::make(r)) ==
        Approx(variance(QubitObservable::make(normalized({-1, 1, 0})), QubitState::make(r))));
}

TEST_CASE("min and max dB examples") {
  CHECK(min_sdev_B(QubitPair::from_angle(kPi / 2), 0.0) == Approx(1.0));
  for (double th : {0.2, kPi / 4, 1.3}) CHECK(min_sdev_B(QubitPair::from_angle(th), std::sin(th)) == Approx(0.0));
  CHECK(min_sdev_B(QubitPair::from_angle(kPi / 4), 1.0) == Approx(0.70711).epsilon(1e-5));
  CHECK(max_sdev_B(QubitPair::from_angle(kPi / 6), 0.0) == Approx(0.5));
  CHECK(max_sdev_B(QubitPair::from_angle(kPi / 8), std::cos(kPi / 8)) == 1.0);
  CHECK(max_sdev_B(QubitPair::from_angle(kPi / 8), 0.99) == 1.0);
  CHECK(max_sdev_B(QubitPair::from_angle(kPi / 4), 0.5) == Approx(0.96593).epsilon(1e-5));
  CHECK_THROWS_AS(min_sdev_B(QubitPair::from_angle(0.3), 1.2), ContractViolation);
}

TEST_CASE("qubit envelope formulas against in-plane pure states") {
  for (double th : uniform_grid(0.0, kPi / 2, 25)) {
    const auto pair = QubitPair::from_angle(th);
    for (double dA : uniform_grid(0.0, 1.0, 201)) {
      const auto [lo, hi] = in_plane_extremes(th, dA);
      CHECK(min_sdev_B(pair, dA) == Approx(lo).epsilon(1e-12));
      if (dA < pair.cos_angle()) CHECK(max_sdev_B(pair, dA) == Approx(hi).epsilon(1e-12));
    }
  }
}

TEST_CASE("all sampled states lie inside the region") {
  for (double th : {kPi / 16, kPi / 4, 7 * kPi / 16}) {
    const auto pair = QubitPair::from_angle(th);
    const Observable A = pair.observable_a(), B = pair.observable_b();
    for (std::uint64_t i = 0; i < 20'000; ++i) {
      const DensityState rho = QubitState::make(counter_ball_point(41, i));
      const auto pt = UncertaintyPoint::make(std_dev(A, rho), std_dev(B, rho), Scale::StdDev);
      CHECK(pair_region_contains(pair, pt));
    }
  }
}

TEST_CASE("membership examples") {
  const auto ortho = QubitPair::from_angle(kPi / 2);
  CHECK(pair_region_contains(ortho, UncertaintyPoint::make(0.8, 0.6, Scale::StdDev)));
  CHECK_FALSE(pair_region_contains(ortho, UncertaintyPoint::make(0.5, 0.5, Scale::StdDev)));
  CHECK_FALSE(pair_region_contains(QubitPair::from_angle(kPi / 4), UncertaintyPoint::make(0.2, 0.9, Scale::StdDev)));
  CHECK_THROWS_AS(pair_region_contains(ortho, UncertaintyPoint::make(0.5, 0.5, Scale::Variance)), ContractViolation);
}

TEST_CASE("region properties") {
  for (double th : uniform_grid(0.05, kPi / 2, 12)) {
    const auto pair = QubitPair::from_angle(th);
    const double s = pair.sin_angle();
    // Endpoint pinch.
    CHECK(min_sdev_B(pair, 0.0) == Approx(s));
    CHECK(max_sdev_B(pair, 0.0) == Approx(s));
    std::size_t zeros = 0;
    for (double u : uniform_grid(0.0, 1.0, 101)) {
      for (double v : uniform_grid(0.0, 1.0, 101)) {
        const bool uv = pair_region_contains(pair, UncertaintyPoint::make(u, v, Scale::StdDev));
        const bool vu = pair_region_contains(pair, UncertaintyPoint::make(v, u, Scale::StdDev));
        CHECK(uv == vu);
      }
      const double lo = min_sdev_B(pair, u);
      // The earlier bounds never exceed the tight boundary.
      CHECK(lo + u >= prior_straight_bound(pair) - 1e-12);
      CHECK(lo * lo + u * u >= prior_curved_bound(pair) - 1e-12);
      if (lo < 1e-12) ++zeros;
    }
    CHECK(zeros <= 1);
  }
}

TEST_CASE("prior bound examples") {
  CHECK(prior_straight_bound(QubitPair::from_angle(kPi / 2)) == Approx(1.0));
  CHECK(prior_straight_bound(QubitPair::from_angle(0.0)) == 0.0);
  CHECK(prior_curved_bound(QubitPair::from_angle(0.0)) == Approx(0.0));
  CHECK(prior_curved_bound(QubitPair::from_angle(kPi / 4)) == Approx(0.29289).epsilon(1e-5));
}

TEST_CASE("triple region") {
  CHECK(triple_region_contains(1, 1, 0));
  CHECK(triple_region_contains(1, 1, 1));
  CHECK_FALSE(triple_region_contains(0.5, 0.5, 0.5));
  for (std::uint64_t i = 0; i < 1000; ++i) {
    const Vec3 r = counter_ball_point(7, i);
    CHECK(orthogonal_triple_variance_sum(QubitState::make(r)) == Approx(3 - dot(r, r)).epsilon(1e-12));
  }
  // Slices at fixed dz.
  CHECK(triple_slice(1.0, 0.6)->lo == Approx(0.8));
  CHECK(triple_slice(0.5, 1.0)->lo == Approx(std::sqrt(0.75)));
  CHECK(triple_slice(0.5, 0.0) == std::nullopt);  // inner radius sqrt(1.75) > 1
  CHECK(triple_slice(0.0, 1.0)->lo == Approx(1.0));
  CHECK(triple_slice(0.0, 0.99) == std::nullopt);
}

TEST_CASE("Lagrange identities") {
  const Vec3 a{1, 0, 0}, b = normalized({1, 2, 0});
  CHECK(lagrange_identity_residuals(a, b, cross(a, b)).max() < 1e-12);
  CHECK(lagrange_identity_residuals(a, b, {0, 0, 0}).max() < 1e-12);
  for (std::uint64_t i = 0; i < 1000; ++i) {
    const auto res = lagrange_identity_residuals(counter_unit_vector(9, 3 * i), counter_unit_vector(9, 3 * i + 1),
                                                 counter_ball_point(9, 3 * i + 2));
    CHECK(res.max() < 1e-12);
  }
  CHECK(planar_decomposition_check(a, b, a) < 1e-15);
  CHECK(planar_decomposition_check(a, b, b) < 1e-15);
  CHECK_THROWS_AS(planar_decomposition_check(a, b, {0, 0, 1}), ContractViolation);
  const auto pair = QubitPair::make(counter_unit_vector(2, 0), counter_unit_vector(2, 1));
  for (double phi : uniform_grid(0.0, 2 * kPi, 1000))
    CHECK(planar_decomposition_check(pair.a(), pair.b(), pair.in_plane_direction(phi)) < 1e-11);
}

TEST_CASE("Schrodinger equality") {
  const auto pair = QubitPair::from_angle(0.7);
  CHECK(schrodinger_equality_residual(pair, QubitState::make(normalized({0.3, 0.2, 0.9}))) < 1e-12);
  CHECK(schrodinger_equality_residual(pair, QubitState::maximally_mixed()) < 1e-12);
  // On in-plane pure states the commutator term vanishes.
  const Observable A = pair.observable_a(), B = pair.observable_b();
  for (double phi : uniform_grid(0.0, 2 * kPi, 50)) {
    const DensityState rho = QubitState::make(pair.in_plane_direction(phi));
    CHECK(commutator_expectation(A, B, rho) < 1e-12);
  }
}

TEST_CASE("S / Var A over in-plane pure states traces the boundary") {
  for (double th : {kPi / 8, kPi / 3}) {
    const auto pair = QubitPair::from_angle(th);
    const Observable A = pair.observable_a(), B = pair.observable_b();
    // Each dA in (0, 1) has four in-plane pure states; S / Var A = Var B there.
    for (double dA : uniform_grid(0.05, 0.95, 19)) {
      const double p = std::asin(dA);
      double lo = 2, hi = -1;
      for (double phi : {p, kPi - p, -p, kPi + p}) {
        const DensityState rho = QubitState::make(pair.in_plane_direction(phi));
        const double ratio = schrodinger_bound(A, B, rho) / variance(A, rho);
        lo = std::min(lo, ratio);
        hi = std::max(hi, ratio);
      }
      CHECK(std::abs(lo - std::pow(min_sdev_B(pair, dA), 2)) < 5e-3);
      if (dA < pair.cos_angle()) CHECK(std::abs(hi - std::pow(max_sdev_B(pair, dA), 2)) < 5e-3);
    }
  }
}

TEST_CASE("Heisenberg saturation for sigma_x, sigma_y forces a unit variance") {
  const Observable sx = QubitObservable::sigma_x(), sy = QubitObservable::sigma_y();
  std::size_t saturating = 0;
  for (std::uint64_t i = 0; i < 200'000; ++i) {
    // Pure states concentrated near the r_x = 0 and r_y = 0 great circles.
    const Vec3 u = counter_unit_vector(13, i);
    const double squeeze = 1e-7 * (counter_uniform(13, i, 7) - 0.5);
    const Vec3 r = normalized(i % 2 ? Vec3{squeeze, u.y, u.z} : Vec3{u.x, squeeze, u.z});
    const DensityState rho = QubitState::make(r);
    const double vx = variance(sx, rho), vy = variance(sy, rho);
    if (std::abs(vx * vy - r.z * r.z) > 1e-9) continue;
    ++saturating;
    // vx vy - rz^2 = (rx ry)^2 for pure states, so one of rx, ry is below 1e-4.
    const bool x_zero = std::abs(r.x) <= 1e-4, y_zero = std::abs(r.y) <= 1e-4;
    CHECK((x_zero || y_zero));
    if (x_zero) CHECK(vx >= 1.0 - 1e-8);
    if (y_zero) CHECK(vy >= 1.0 - 1e-8);
  }
  CHECK(saturating > 1000);
}

TEST_CASE("pair boundary sampling") {
  const auto b = pair_boundary_segments(QubitPair::from_angle(kPi / 2), 200);
  REQUIRE(b.grid.size() == 200);
  for (std::size_t i = 0; i < b.grid.size(); ++i)
    CHECK(std::abs(b.lower[i] - std::sqrt(1 - b.grid[i] * b.grid[i])) < 1e-12);
  const auto d = pair_boundary_segments(QubitPair::from_angle(0.0), 11);
  for (std::size_t i = 0; i < d.grid.size(); ++i) {
    CHECK(d.lower[i] == Approx(d.grid[i]));
    CHECK(d.upper[i] == Approx(d.grid[i]));
  }
  std::size_t prior = 0;
  for (const auto& c : pair_boundary_segments(QubitPair::from_angle(kPi / 8), 50).curves)
    if (c.segment.formula == FormulaId::PriorStraight || c.segment.formula == FormulaId::PriorCurved) ++prior;
  CHECK(prior == 2);
}

TEST_CASE("orthogonal pair lower boundary is the unit circle") {
  const auto b = pair_boundary_segments(QubitPair::from_angle(kPi / 2), 200);
  REQUIRE(b.grid.size() == 200);
  for (std::size_t i = 0; i < b.grid.size(); ++i)
    CHECK(std::abs(b.lower[i] - std::sqrt(1 - b.grid[i] * b.grid[i])) < 1e-12);
}
