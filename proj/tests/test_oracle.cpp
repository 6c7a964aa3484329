#include <doctest.h>

#include <cmath>
#include <cstdlib>

#include "ureg/oracle.hpp"

using namespace ureg;
using doctest::Approx;

namespace {

QubitScanConfig small_qubit(std::size_t threads = 1) {
  QubitScanConfig cfg;
  cfg.n_ball = 100'000;
  cfg.n_sphere = 20'000;
  cfg.threads = threads;
  return cfg;
}

}  // namespace

TEST_CASE("counter uniform") {
  CHECK(counter_uniform(0, 0, 0) == counter_uniform(0, 0, 0));
  CHECK(counter_uniform(0, 0, 0) != counter_uniform(0, 0, 1));
  CHECK(counter_uniform(0, 0, 0) != counter_uniform(0, 1, 0));
  CHECK(counter_uniform(0, 0, 0) != counter_uniform(1, 0, 0));
  double sum = 0;
  for (std::uint64_t i = 0; i < 100'000; ++i) {
    const double u = counter_uniform(7, 3, i);
    REQUIRE(u >= 0.0);
    REQUIRE(u < 1.0);
    sum += u;
  }
  CHECK(sum / 100'000 == Approx(0.5).epsilon(0.01));
}

TEST_CASE("region scan bookkeeping") {
  RegionScan s("t", Scale::Variance, 4, 10, 0);
  CHECK(s.total_samples() == 0);
  s.add_sample(0.1, 0.3);
  s.add_sample(0.15, 0.7);
  s.add_sample(1.0, 0.5);  // right edge lands in the last bin
  CHECK(s.total_samples() == 3);
  CHECK(s.bin(0).count == 2);
  CHECK(s.bin(0).min_u2 == 0.3);
  CHECK(s.bin(0).max_u2 == 0.7);
  CHECK(s.bin(3).count == 1);
  CHECK(s.bin(1).empty());
  CHECK(s.occupied(0, s.row_index(0.3)));
  CHECK_FALSE(s.occupied(1, 0));

  s.add_run(0.6, 0.2, 0.45);
  const auto col = s.column(2);
  for (std::size_t j = 0; j < 10; ++j) CHECK((col[j] > 0) == (j >= 2 && j <= 4));
  CHECK(s.bin(2).empty());  // runs mark the raster only

  RegionScan a("t", Scale::Variance, 4, 10, 0), b("t", Scale::Variance, 4, 10, 0);
  a.add_sample(0.1, 0.3);
  b.add_sample(0.15, 0.7);
  a.merge(b);
  RegionScan c("t", Scale::Variance, 4, 10, 0);
  c.add_sample(0.1, 0.3);
  c.add_sample(0.15, 0.7);
  CHECK(a == c);
  CHECK_THROWS_AS(a.merge(RegionScan("t", Scale::Variance, 5, 10, 0)), ContractViolation);
  CHECK_THROWS_AS(RegionScan("t", Scale::Variance, 0, 10, 0), ContractViolation);
}

TEST_CASE("qubit scan is deterministic and thread-count invariant") {
  const auto pair = QubitPair::from_angle(M_PI / 8);
  const RegionScan one = scan_qubit_pair(pair, small_qubit(1));
  CHECK(one == scan_qubit_pair(pair, small_qubit(1)));
  CHECK(one == scan_qubit_pair(pair, small_qubit(3)));
  CHECK(one.total_samples() == 120'000);
  QubitScanConfig other = small_qubit(1);
  other.seed = 1;
  CHECK_FALSE(one == scan_qubit_pair(pair, other));
  QubitScanConfig bad = small_qubit(1);
  bad.n_ball = 0;
  CHECK_THROWS_AS(scan_qubit_pair(pair, bad), ContractViolation);
}

TEST_CASE("qubit scan envelopes") {
  const auto pair = QubitPair::from_angle(M_PI / 2);
  const RegionScan scan = scan_qubit_pair(pair, small_qubit());
  const std::size_t b = scan.bin_index(0.6);
  // Every in-plane state in the bin has dB = sqrt(1 - dA^2) on a circle.
  const double lo = std::sqrt(1 - scan.bin_hi(b) * scan.bin_hi(b));
  CHECK(scan.bin(b).min_u2 >= lo - 1e-12);
  CHECK(std::abs(scan.bin(b).min_u2 - 0.8) < 5e-3);

  const auto pi4 = QubitPair::from_angle(M_PI / 4);
  QubitScanConfig cfg = small_qubit();
  cfg.n_sphere = 100'000;
  const RegionScan s4 = scan_qubit_pair(pi4, cfg);
  const auto lower = compare_envelopes([&](double x) { return min_sdev_B(pi4, x); }, s4, EnvelopeSide::Min, 5e-3);
  const auto upper = compare_envelopes([&](double x) { return max_sdev_B(pi4, x); }, s4, EnvelopeSide::Max, 5e-3);
  CHECK(lower.pass);
  CHECK(upper.pass);
  CHECK(lower.entries.size() + lower.excluded_bins.size() == 200);
}

TEST_CASE("compare envelopes") {
  const auto pair = QubitPair::from_angle(M_PI / 8);
  const RegionScan scan = scan_qubit_pair(pair, small_qubit());
  const auto good = compare_envelopes([&](double x) { return min_sdev_B(pair, x); }, scan, EnvelopeSide::Min, 5e-3);
  CHECK(good.pass);
  CHECK(good.max_gap <= 5e-3);
  CHECK(good.tolerance == 5e-3);

  const auto bad =
      compare_envelopes([&](double x) { return min_sdev_B(pair, x) + 0.1; }, scan, EnvelopeSide::Min, 5e-3);
  CHECK_FALSE(bad.pass);
  CHECK(bad.max_gap == Approx(0.1).epsilon(0.05));

  const RegionScan empty("e", Scale::StdDev, 200, 200, 0);
  CHECK_THROWS_AS(compare_envelopes([](double) { return 0.0; }, empty, EnvelopeSide::Min, 5e-3),
                  InconclusiveComparison);

  // Sparse bins fall under the count floor and are reported.
  RegionScan sparse("s", Scale::StdDev, 4, 4, 0);
  for (int i = 0; i < 60; ++i) sparse.add_sample(0.1, 0.5);
  sparse.add_sample(0.9, 0.5);
  EnvelopeOptions opt;
  const auto rep = compare_envelopes([](double) { return 0.5; }, sparse, EnvelopeSide::Min, 1e-9, opt);
  CHECK(rep.entries.size() == 1);
  CHECK(rep.excluded_bins.size() == 3);
  CHECK(rep.pass);
}

TEST_CASE("more samples never shrink coverage") {
  const auto pair = QubitPair::from_angle(3 * M_PI / 8);
  QubitScanConfig small = small_qubit(), big = small_qubit();
  small.n_ball = 10'000;
  small.n_sphere = 1'000;
  const RegionScan a = scan_qubit_pair(pair, small), b = scan_qubit_pair(pair, big);
  for (std::size_t i = 0; i < a.bin_count(); ++i) {
    if (a.bin(i).empty()) continue;
    REQUIRE_FALSE(b.bin(i).empty());
    CHECK(b.bin(i).min_u2 <= a.bin(i).min_u2 + 2e-2);
    CHECK(b.bin(i).max_u2 >= a.bin(i).max_u2 - 2e-2);
  }
}

TEST_CASE("extended scan") {
  ExtendedScanConfig cfg;
  cfg.grid_w = 101;
  cfg.grid_r = 101;
  cfg.threads = 2;
  const RegionScan s = scan_extended_pair(0.0, cfg);
  const std::size_t b = s.bin_index(0.5);
  CHECK(std::abs(s.bin(b).min_u2 - 0.25) < 5e-3);
  CHECK(s.occupied(0, 0));
  CHECK(s.occupied(s.bin_count() - 1, 0));
  CHECK(s.occupied(0, s.raster_rows() - 1));
  cfg.threads = 1;
  CHECK(s == scan_extended_pair(0.0, cfg));
  const RegionScan tilted = scan_extended_pair(std::cos(M_PI / 4), cfg);
  CHECK(tilted.total_samples() > 0);
  cfg.grid_w = 1;
  CHECK_THROWS_AS(scan_extended_pair(0.0, cfg), ContractViolation);
}

TEST_CASE("Gell-Mann lattice") {
  GellMannGrid g;
  g.diag = 201;
  g.modulus = 5;
  g.phase = 3;
  g.bins = 100;
  CHECK(g.state_count() == 201ull * 202 / 2 * 5 * 3);
  std::uint64_t n = 0;
  for_each_gellmann_lattice_point(g, [&](const GellMannStateParams& p) {
    ++n;
    if (n % 97 == 0) CHECK(is_positive_semidefinite(p.to_state().matrix().matrix()));
  });
  CHECK(n == g.state_count());

  const RegionScan s = scan_gellmann(g);
  // Var A = 1 column holds Var B = 1/2 only.
  const auto& last = s.bin(s.bin_count() - 1);
  CHECK(last.min_u2 >= 0.5 - 5e-2);
  CHECK(last.max_u2 <= 0.5 + 5e-2);
  g.threads = 2;
  CHECK(s == scan_gellmann(g));
  g.diag = 1;
  CHECK_THROWS_AS(scan_gellmann(g), ContractViolation);
}

TEST_CASE("boundary comparison flags a displaced arc") {
  GellMannGrid g;
  g.diag = 801;
  const RegionScan s = scan_gellmann(g);
  auto segs = gm_boundary_segments();
  const auto good = compare_boundary(segs, s, 1e-2);
  CHECK(good.pass);
  CHECK(good.boundary_cells > 0);
  // Dropping an arc leaves part of the empirical boundary uncovered.
  segs.erase(segs.begin() + 5);
  const auto missing = compare_boundary(segs, s, 1e-2);
  CHECK_FALSE(missing.pass);
  CHECK(missing.completeness > 1e-2);
  CHECK_THROWS_AS(compare_boundary({}, s, 1e-2), ContractViolation);
}
