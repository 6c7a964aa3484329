// oracle.hpp
// Brute-force ground truth for uncertainty regions: deterministic scans over
// state families, binned into RegionScan rasters, and comparisons of those
// rasters against analytic envelopes and boundary arcs.
//
// Nothing in this module evaluates an analytic boundary formula; the scans
// only compute variances of explicitly constructed states.

#pragma once

#include <cstdint>
#include <functional>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "ureg/curves.hpp"
#include "ureg/qubit_regions.hpp"
#include "ureg/qutrit_regions.hpp"

namespace ureg {

/// Comparison had nothing to compare (every bin empty or under-populated).
class InconclusiveComparison : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Counter-based uniform in [0, 1): a pure function of (seed, stream, counter),
/// so any partition of the work reproduces the same draws.
double counter_uniform(std::uint64_t seed, std::uint64_t stream, std::uint64_t counter);

/// Worker count from UA_THREADS, else the machine's hardware concurrency.
std::size_t default_thread_count();

struct ScanBin {
  double min_u2 = std::numeric_limits<double>::infinity();
  double max_u2 = -std::numeric_limits<double>::infinity();
  std::uint64_t count = 0;

  [[nodiscard]] bool empty() const { return count == 0; }
  bool operator==(const ScanBin&) const = default;
};

/// Binned scan of a region over u1 in [0, 1]. Each bin keeps the extreme u2
/// seen; a raster of (u1, u2) cells keeps occupancy. Bins are half-open
/// [lo, hi) except the last, which is closed.
class RegionScan {
 public:
  RegionScan(std::string id, Scale scale, std::size_t bin_count, std::size_t raster_rows, std::uint64_t seed);

  void add_sample(double u1, double u2);
  /// Marks raster cells covered by the vertical segment u1 x [u2_lo, u2_hi]
  /// (a one-parameter family at fixed u1 that moves u2 continuously).
  void add_run(double u1, double u2_lo, double u2_hi);
  /// Interval union with another scan of the same geometry.
  void merge(const RegionScan& other);

  [[nodiscard]] const std::string& id() const { return id_; }
  [[nodiscard]] Scale scale() const { return scale_; }
  [[nodiscard]] std::uint64_t seed() const { return seed_; }
  [[nodiscard]] std::uint64_t total_samples() const { return total_samples_; }
  [[nodiscard]] std::size_t bin_count() const { return bins_.size(); }
  [[nodiscard]] std::size_t raster_rows() const { return rows_; }
  [[nodiscard]] const std::vector<ScanBin>& bins() const { return bins_; }
  [[nodiscard]] const ScanBin& bin(std::size_t i) const { return bins_.at(i); }

  [[nodiscard]] double bin_lo(std::size_t i) const;
  [[nodiscard]] double bin_hi(std::size_t i) const;
  [[nodiscard]] double bin_center(std::size_t i) const { return 0.5 * (bin_lo(i) + bin_hi(i)); }
  [[nodiscard]] std::size_t bin_index(double u1) const;
  [[nodiscard]] std::size_t row_index(double u2) const;
  [[nodiscard]] double row_center(std::size_t j) const;

  /// Samples plus run coverage in cell (column i, row j).
  [[nodiscard]] std::uint64_t cell(std::size_t i, std::size_t j) const;
  [[nodiscard]] bool occupied(std::size_t i, std::size_t j) const { return cell(i, j) > 0; }
  /// cell(i, j) for every row j of column i.
  [[nodiscard]] std::vector<std::uint64_t> column(std::size_t i) const;

  bool operator==(const RegionScan& other) const;

 private:
  std::string id_;
  Scale scale_;
  std::uint64_t seed_;
  std::uint64_t total_samples_ = 0;
  std::vector<ScanBin> bins_;
  std::size_t rows_;
  std::vector<std::uint64_t> points_;   // bins x rows
  std::vector<std::int64_t> run_diff_;  // bins x (rows + 1), difference form
};

struct QubitScanConfig {
  std::size_t n_ball = 1'000'000;
  std::size_t n_sphere = 100'000;
  std::uint64_t seed = 0;
  std::size_t bins = 200;
  std::size_t threads = 0;  // 0 = default_thread_count()
};

/// Uniform Bloch-ball samples (inverse-CDF radius) plus a uniform angular grid
/// of in-plane pure states. Standard-deviation scale.
RegionScan scan_qubit_pair(const QubitPair& pair, const QubitScanConfig& config);
/// Same sample set, binned in variance scale.
RegionScan scan_qubit_pair_variance(const QubitPair& pair, const QubitScanConfig& config);

struct ExtendedScanConfig {
  std::size_t grid_w = 401;
  std::size_t grid_r = 401;  // per axis over [-1, 1], restricted to the unit disk
  std::size_t bins = 400;
  std::size_t threads = 0;
  Scale scale = Scale::Variance;
};

/// Lattice over w in [0, 1] and (r_a, r_b) in the closed unit disk.
RegionScan scan_extended_pair(double cos_ab, const ExtendedScanConfig& config);

struct GellMannGrid {
  std::size_t diag = 2401;    // rho11, rho33 on the simplex
  std::size_t modulus = 11;   // mu = |rho13|^2 / (rho11 rho33) in [0, 1]
  std::size_t phase = 4;      // arg rho13 in [0, pi]
  std::size_t bins = 400;
  std::size_t threads = 0;

  [[nodiscard]] std::uint64_t state_count() const;
};

/// The lattice state with indices (rho11, rho33, modulus, phase).
GellMannStateParams gellmann_lattice_point(const GellMannGrid& grid, std::size_t i, std::size_t j, std::size_t k,
                                           std::size_t l);
void for_each_gellmann_lattice_point(const GellMannGrid& grid,
                                     const std::function<void(const GellMannStateParams&)>& fn);

/// Lattice scan of rho12 = rho23 = 0 states. Variance scale. Runs over the
/// modulus at fixed (rho11, rho33, phase) are marked in the raster.
RegionScan scan_gellmann(const GellMannGrid& grid);

enum class EnvelopeSide { Min, Max };

struct EnvelopeEntry {
  std::size_t bin = 0;
  double x = 0.0;  // bin center
  double analytic = 0.0;
  double empirical = 0.0;
  double gap = 0.0;
  std::uint64_t count = 0;
};

struct EnvelopeReport {
  std::vector<EnvelopeEntry> entries;
  std::vector<std::size_t> excluded_bins;
  double max_gap = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

struct EnvelopeOptions {
  std::uint64_t min_count = 50;
  Interval domain{0.0, 1.0};
  /// Points per bin used to take the analytic extremum over the bin.
  std::size_t analytic_samples = 33;
};

/// Compares the per-bin empirical extreme of u2 against the analytic envelope's
/// extreme over the same bin. Bins with fewer than min_count samples are
/// excluded and listed.
EnvelopeReport compare_envelopes(const std::function<double(double)>& analytic, const RegionScan& scan,
                                 EnvelopeSide side, double tol, const EnvelopeOptions& options = {});

struct SegmentFit {
  CurveSegment segment;
  double soundness = 0.0;  // worst distance from the arc to the empirical boundary
};

struct BoundaryReport {
  std::vector<SegmentFit> segments;
  double completeness = 0.0;  // worst distance from the empirical boundary to any arc
  std::size_t boundary_cells = 0;
  double tolerance = 0.0;
  bool pass = false;
};

/// Cells of the occupancy raster with an empty (or off-grid) 4-neighbour.
std::vector<Point2> empirical_boundary(const RegionScan& scan);

/// Soundness: every arc point lies within tol of the empirical boundary.
/// Completeness: every empirical boundary cell lies within tol of some arc.
/// Distances are Euclidean in the (u1, u2) plane, measured to cell centers.
BoundaryReport compare_boundary(const std::vector<CurveSegment>& segments, const RegionScan& scan, double tol,
                                std::size_t samples_per_segment = 2000);

}  // namespace ureg
