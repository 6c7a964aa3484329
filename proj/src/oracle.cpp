#include "ureg/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <sstream>
#include <thread>

namespace ureg {

namespace {

std::uint64_t splitmix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::size_t clamp_index(double u, std::size_t n) {
  if (!(u > 0.0)) return 0;
  const double scaled = u * static_cast<double>(n);
  if (scaled >= static_cast<double>(n)) return n - 1;
  return static_cast<std::size_t>(scaled);
}

std::size_t resolve_threads(std::size_t requested) {
  return requested == 0 ? default_thread_count() : requested;
}

// Splits [0, count) into contiguous ranges, scans each into its own
// RegionScan, and merges them in range order.
template <typename Body>
RegionScan parallel_scan(const RegionScan& prototype, std::size_t count, std::size_t threads, Body body) {
  threads = std::max<std::size_t>(1, std::min(threads, count == 0 ? 1 : count));
  std::vector<RegionScan> partial(threads, prototype);
  std::vector<std::thread> pool;
  const std::size_t chunk = (count + threads - 1) / threads;
  for (std::size_t t = 0; t < threads; ++t) {
    const std::size_t lo = std::min(count, t * chunk);
    const std::size_t hi = std::min(count, lo + chunk);
    pool.emplace_back([&, t, lo, hi] {
      for (std::size_t i = lo; i < hi; ++i) body(partial[t], i);
    });
  }
  for (auto& th : pool) th.join();
  RegionScan out = prototype;
  for (const auto& p : partial) out.merge(p);
  return out;
}

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(6);
  os << v;
  return os.str();
}

}  // namespace

double counter_uniform(std::uint64_t seed, std::uint64_t stream, std::uint64_t counter) {
  const std::uint64_t h = splitmix64(splitmix64(splitmix64(seed) ^ stream) ^ counter);
  return static_cast<double>(h >> 11) * 0x1.0p-53;
}

std::size_t default_thread_count() {
  if (const char* env = std::getenv("UA_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && v > 0) return static_cast<std::size_t>(v);
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

// ---------------------------------------------------------------------------
// RegionScan

RegionScan::RegionScan(std::string id, Scale scale, std::size_t bin_count, std::size_t raster_rows,
                       std::uint64_t seed)
    : id_(std::move(id)), scale_(scale), seed_(seed), rows_(raster_rows) {
  if (bin_count == 0 || raster_rows == 0) throw ContractViolation("scan needs at least one bin and one row");
  bins_.resize(bin_count);
  points_.assign(bin_count * rows_, 0);
  run_diff_.assign(bin_count * (rows_ + 1), 0);
}

double RegionScan::bin_lo(std::size_t i) const { return static_cast<double>(i) / static_cast<double>(bins_.size()); }
double RegionScan::bin_hi(std::size_t i) const {
  return static_cast<double>(i + 1) / static_cast<double>(bins_.size());
}
std::size_t RegionScan::bin_index(double u1) const { return clamp_index(u1, bins_.size()); }
std::size_t RegionScan::row_index(double u2) const { return clamp_index(u2, rows_); }
double RegionScan::row_center(std::size_t j) const {
  return (static_cast<double>(j) + 0.5) / static_cast<double>(rows_);
}

void RegionScan::add_sample(double u1, double u2) {
  if (!std::isfinite(u1) || !std::isfinite(u2)) throw ContractViolation("non-finite sample");
  const std::size_t i = bin_index(u1);
  ScanBin& b = bins_[i];
  b.min_u2 = std::min(b.min_u2, u2);
  b.max_u2 = std::max(b.max_u2, u2);
  ++b.count;
  ++points_[i * rows_ + row_index(u2)];
  ++total_samples_;
}

void RegionScan::add_run(double u1, double u2_lo, double u2_hi) {
  if (u2_lo > u2_hi) std::swap(u2_lo, u2_hi);
  const std::size_t i = bin_index(u1);
  const std::size_t j0 = row_index(u2_lo);
  const std::size_t j1 = row_index(u2_hi);
  run_diff_[i * (rows_ + 1) + j0] += 1;
  run_diff_[i * (rows_ + 1) + j1 + 1] -= 1;
}

void RegionScan::merge(const RegionScan& other) {
  if (other.bins_.size() != bins_.size() || other.rows_ != rows_ || other.scale_ != scale_)
    throw ContractViolation("cannot merge scans of different geometry");
  for (std::size_t i = 0; i < bins_.size(); ++i) {
    ScanBin& b = bins_[i];
    const ScanBin& o = other.bins_[i];
    b.min_u2 = std::min(b.min_u2, o.min_u2);
    b.max_u2 = std::max(b.max_u2, o.max_u2);
    b.count += o.count;
  }
  for (std::size_t k = 0; k < points_.size(); ++k) points_[k] += other.points_[k];
  for (std::size_t k = 0; k < run_diff_.size(); ++k) run_diff_[k] += other.run_diff_[k];
  total_samples_ += other.total_samples_;
}

std::uint64_t RegionScan::cell(std::size_t i, std::size_t j) const {
  if (i >= bins_.size() || j >= rows_) throw ContractViolation("cell index out of range");
  std::int64_t runs = 0;
  const std::int64_t* col = &run_diff_[i * (rows_ + 1)];
  for (std::size_t k = 0; k <= j; ++k) runs += col[k];
  return points_[i * rows_ + j] + static_cast<std::uint64_t>(std::max<std::int64_t>(0, runs));
}

std::vector<std::uint64_t> RegionScan::column(std::size_t i) const {
  if (i >= bins_.size()) throw ContractViolation("column index out of range");
  std::vector<std::uint64_t> out(rows_);
  std::int64_t runs = 0;
  for (std::size_t j = 0; j < rows_; ++j) {
    runs += run_diff_[i * (rows_ + 1) + j];
    out[j] = points_[i * rows_ + j] + static_cast<std::uint64_t>(std::max<std::int64_t>(0, runs));
  }
  return out;
}

bool RegionScan::operator==(const RegionScan& other) const {
  return id_ == other.id_ && scale_ == other.scale_ && seed_ == other.seed_ &&
         total_samples_ == other.total_samples_ && bins_ == other.bins_ && rows_ == other.rows_ &&
         points_ == other.points_ && run_diff_ == other.run_diff_;
}

// ---------------------------------------------------------------------------
// Qubit pair

namespace {

RegionScan scan_qubit_impl(const QubitPair& pair, const QubitScanConfig& cfg, Scale scale) {
  if (cfg.n_ball == 0 || cfg.n_sphere == 0) throw ContractViolation("qubit scan needs n_ball, n_sphere >= 1");
  const Observable A = pair.observable_a();
  const Observable B = pair.observable_b();
  const std::string id = "qubit c=" + fmt(pair.cos_angle()) + " s=" + fmt(pair.sin_angle());
  const RegionScan proto(id, scale, cfg.bins, cfg.bins, cfg.seed);
  const std::size_t total = cfg.n_ball + cfg.n_sphere;

  auto body = [&](RegionScan& scan, std::size_t i) {
    Vec3 r;
    if (i < cfg.n_ball) {
      const double radius = std::cbrt(counter_uniform(cfg.seed, i, 0));
      const double z = 2.0 * counter_uniform(cfg.seed, i, 1) - 1.0;
      const double phi = 2.0 * std::numbers::pi * counter_uniform(cfg.seed, i, 2);
      const double rho = std::sqrt(std::max(0.0, 1.0 - z * z));
      r = Vec3{rho * std::cos(phi), rho * std::sin(phi), z} * radius;
    } else {
      const double k = static_cast<double>(i - cfg.n_ball);
      r = pair.in_plane_direction(2.0 * std::numbers::pi * k / static_cast<double>(cfg.n_sphere));
    }
    const DensityState rho = QubitState::make(r);
    const double va = variance(A, rho);
    const double vb = variance(B, rho);
    if (scale == Scale::StdDev)
      scan.add_sample(std::sqrt(va), std::sqrt(vb));
    else
      scan.add_sample(va, vb);
  };
  return parallel_scan(proto, total, resolve_threads(cfg.threads), body);
}

}  // namespace

RegionScan scan_qubit_pair(const QubitPair& pair, const QubitScanConfig& config) {
  return scan_qubit_impl(pair, config, Scale::StdDev);
}

RegionScan scan_qubit_pair_variance(const QubitPair& pair, const QubitScanConfig& config) {
  return scan_qubit_impl(pair, config, Scale::Variance);
}

// ---------------------------------------------------------------------------
// Extended qubit pair

RegionScan scan_extended_pair(double cos_ab, const ExtendedScanConfig& cfg) {
  if (!(cos_ab >= -1.0 && cos_ab <= 1.0)) throw ContractViolation("cos_ab must lie in [-1, 1]");
  if (cfg.grid_w < 2 || cfg.grid_r < 2) throw ContractViolation("extended grids need at least two points");
  const double sin_ab = std::sqrt(1.0 - cos_ab * cos_ab);
  const std::vector<double> ws = uniform_grid(0.0, 1.0, cfg.grid_w);
  const std::vector<double> rs = uniform_grid(-1.0, 1.0, cfg.grid_r);
  const RegionScan proto("extended cos=" + fmt(cos_ab), cfg.scale, cfg.bins, cfg.bins, 0);
  const bool sdev = cfg.scale == Scale::StdDev;

  // One work item per w value. For the qubit block w/2 (I + r.sigma) and
  // A = a.sigma + 0: <A> = w (a.r), <A^2> = w.
  auto body = [&](RegionScan& scan, std::size_t iw) {
    const double w = ws[iw];
    for (double ra : rs)
      for (double rb : rs) {
        if (ra * ra + rb * rb > 1.0 + 1e-12) continue;
        const double ma = w * ra;
        const double mb = w * (cos_ab * ra + sin_ab * rb);
        const double va = clamp_variance(w - ma * ma);
        const double vb = clamp_variance(w - mb * mb);
        if (sdev)
          scan.add_sample(std::sqrt(va), std::sqrt(vb));
        else
          scan.add_sample(va, vb);
      }
  };
  return parallel_scan(proto, ws.size(), resolve_threads(cfg.threads), body);
}

// ---------------------------------------------------------------------------
// Gell-Mann pair

std::uint64_t GellMannGrid::state_count() const {
  return static_cast<std::uint64_t>(diag) * (diag + 1) / 2 * modulus * phase;
}

GellMannStateParams gellmann_lattice_point(const GellMannGrid& g, std::size_t i, std::size_t j, std::size_t k,
                                           std::size_t l) {
  if (g.diag < 2 || g.modulus < 2 || g.phase < 1) throw ContractViolation("Gell-Mann grid too small");
  const std::size_t n = g.diag - 1;
  if (i + j > n || k >= g.modulus || l >= g.phase) throw ContractViolation("lattice index out of range");
  const double r11 = static_cast<double>(i) / static_cast<double>(n);
  const double r33 = static_cast<double>(j) / static_cast<double>(n);
  const double mu = static_cast<double>(k) / static_cast<double>(g.modulus - 1);
  const double phi = g.phase == 1 ? 0.0 : std::numbers::pi * static_cast<double>(l) / static_cast<double>(g.phase - 1);
  const double mod = std::sqrt(mu * r11 * r33);
  return GellMannStateParams::make(r11, r33, mod * std::cos(phi), mod * std::sin(phi));
}

void for_each_gellmann_lattice_point(const GellMannGrid& g,
                                     const std::function<void(const GellMannStateParams&)>& fn) {
  const std::size_t n = g.diag - 1;
  for (std::size_t i = 0; i <= n; ++i)
    for (std::size_t j = 0; i + j <= n; ++j)
      for (std::size_t l = 0; l < g.phase; ++l)
        for (std::size_t k = 0; k < g.modulus; ++k) fn(gellmann_lattice_point(g, i, j, k, l));
}

RegionScan scan_gellmann(const GellMannGrid& g) {
  if (g.diag < 2 || g.modulus < 2 || g.phase < 1) throw ContractViolation("Gell-Mann grid too small");
  const RegionScan proto("gellmann", Scale::Variance, g.bins, g.bins, 0);
  const std::size_t n = g.diag - 1;
  const double dn = static_cast<double>(n);

  std::vector<double> cos2(g.phase);
  for (std::size_t l = 0; l < g.phase; ++l) {
    const double phi = g.phase == 1 ? 0.0 : std::numbers::pi * static_cast<double>(l) / static_cast<double>(g.phase - 1);
    cos2[l] = std::cos(phi) * std::cos(phi);
  }

  // <A> = rho11 - rho22, <A^2> = rho11 + rho22; <B> = 2 Re rho13, <B^2> = rho11 + rho33.
  auto body = [&](RegionScan& scan, std::size_t i) {
    const double r11 = static_cast<double>(i) / dn;
    for (std::size_t j = 0; i + j <= n; ++j) {
      const double r33 = static_cast<double>(j) / dn;
      const double r22 = static_cast<double>(n - i - j) / dn;
      const double mean_a = r11 - r22;
      const double x = clamp_variance(r11 + r22 - mean_a * mean_a);
      const double top = r11 + r33;
      for (std::size_t l = 0; l < g.phase; ++l) {
        const double full = 4.0 * r11 * r33 * cos2[l];  // 4 Re^2 rho13 at mu = 1
        for (std::size_t k = 0; k < g.modulus; ++k) {
          const double mu = static_cast<double>(k) / static_cast<double>(g.modulus - 1);
          scan.add_sample(x, clamp_variance(top - mu * full));
        }
        // Var B moves continuously in mu at fixed Var A.
        scan.add_run(x, clamp_variance(top - full), top);
      }
    }
  };
  return parallel_scan(proto, n + 1, resolve_threads(g.threads), body);
}

// ---------------------------------------------------------------------------
// Comparisons

EnvelopeReport compare_envelopes(const std::function<double(double)>& analytic, const RegionScan& scan,
                                 EnvelopeSide side, double tol, const EnvelopeOptions& options) {
  if (!(tol > 0.0)) throw ContractViolation("tolerance must be positive");
  const std::size_t m = std::max<std::size_t>(2, options.analytic_samples);
  EnvelopeReport report;
  report.tolerance = tol;
  for (std::size_t i = 0; i < scan.bin_count(); ++i) {
    const double lo = std::max(scan.bin_lo(i), options.domain.lo);
    const double hi = std::min(scan.bin_hi(i), options.domain.hi);
    if (!options.domain.contains(scan.bin_center(i))) continue;
    const ScanBin& b = scan.bin(i);
    if (b.count < options.min_count) {
      report.excluded_bins.push_back(i);
      continue;
    }
    // The empirical extreme in a bin may come from anywhere inside it, so
    // compare against the analytic extreme over the same stretch of u1.
    double ext = side == EnvelopeSide::Min ? std::numeric_limits<double>::infinity()
                                           : -std::numeric_limits<double>::infinity();
    for (double x : uniform_grid(lo, std::max(lo, hi), m)) {
      const double v = analytic(x);
      ext = side == EnvelopeSide::Min ? std::min(ext, v) : std::max(ext, v);
    }
    const double emp = side == EnvelopeSide::Min ? b.min_u2 : b.max_u2;
    EnvelopeEntry e{i, scan.bin_center(i), ext, emp, std::abs(emp - ext), b.count};
    report.max_gap = std::max(report.max_gap, e.gap);
    report.entries.push_back(e);
  }
  if (report.entries.empty())
    throw InconclusiveComparison("no bin of scan '" + scan.id() + "' has enough samples to compare");
  report.pass = report.max_gap <= tol;
  return report;
}

std::vector<Point2> empirical_boundary(const RegionScan& scan) {
  const std::size_t nx = scan.bin_count();
  const std::size_t ny = scan.raster_rows();
  std::vector<char> occ(nx * ny, 0);
  for (std::size_t i = 0; i < nx; ++i) {
    const auto col = scan.column(i);
    for (std::size_t j = 0; j < ny; ++j) occ[i * ny + j] = col[j] > 0 ? 1 : 0;
  }
  auto at = [&](long i, long j) {
    if (i < 0 || j < 0 || i >= static_cast<long>(nx) || j >= static_cast<long>(ny)) return false;
    return occ[static_cast<std::size_t>(i) * ny + static_cast<std::size_t>(j)] != 0;
  };
  std::vector<Point2> out;
  for (long i = 0; i < static_cast<long>(nx); ++i)
    for (long j = 0; j < static_cast<long>(ny); ++j) {
      if (!at(i, j)) continue;
      if (!at(i - 1, j) || !at(i + 1, j) || !at(i, j - 1) || !at(i, j + 1))
        out.push_back({scan.bin_center(static_cast<std::size_t>(i)), scan.row_center(static_cast<std::size_t>(j))});
    }
  return out;
}

BoundaryReport compare_boundary(const std::vector<CurveSegment>& segments, const RegionScan& scan, double tol,
                                std::size_t samples_per_segment) {
  if (segments.empty()) throw ContractViolation("no boundary segments to compare");
  const std::vector<Point2> cells = empirical_boundary(scan);
  if (cells.empty()) throw InconclusiveComparison("scan '" + scan.id() + "' has an empty raster");

  auto dist2 = [](const Point2& a, const Point2& b) {
    const double dx = a.x - b.x, dy = a.y - b.y;
    return dx * dx + dy * dy;
  };

  BoundaryReport report;
  report.tolerance = tol;
  report.boundary_cells = cells.size();
  std::vector<Point2> arc_points;
  for (const auto& seg : segments) {
    const SampledCurve sc = sample_segment(seg, std::max<std::size_t>(2, samples_per_segment));
    double worst = 0.0;
    for (const auto& p : sc.points) {
      double best = std::numeric_limits<double>::infinity();
      for (const auto& c : cells) best = std::min(best, dist2(p, c));
      worst = std::max(worst, best);
    }
    report.segments.push_back({seg, std::sqrt(worst)});
    arc_points.insert(arc_points.end(), sc.points.begin(), sc.points.end());
  }
  double worst = 0.0;
  for (const auto& c : cells) {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& p : arc_points) best = std::min(best, dist2(p, c));
    worst = std::max(worst, best);
  }
  report.completeness = std::sqrt(worst);
  report.pass = report.completeness <= tol;
  for (const auto& s : report.segments) report.pass = report.pass && s.soundness <= tol;
  return report;
}

}  // namespace ureg
