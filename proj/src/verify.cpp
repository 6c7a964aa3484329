#include "ureg/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <numbers>

#include "ureg/oracle.hpp"
#include "ureg/plot.hpp"
#include "ureg/qubit_regions.hpp"
#include "ureg/qutrit_regions.hpp"

namespace ureg {

namespace {

constexpr double kPi = std::numbers::pi;

struct AngleToken {
  const char* token;
  double value;
};

constexpr AngleToken kAngleTokens[] = {
    {"pi/16", kPi / 16}, {"pi/8", kPi / 8}, {"pi/4", kPi / 4},
    {"3pi/8", 3 * kPi / 8}, {"7pi/16", 7 * kPi / 16}, {"pi/2", kPi / 2},
};

CheckResult check_le(std::string name, double gap, double tol, std::string note = {}) {
  return {std::move(name), gap <= tol, gap, tol, std::move(note)};
}

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

// ---------------------------------------------------------------------------

std::vector<CheckResult> suite_qubit_thm1(const VerifyOptions& opt) {
  std::vector<CheckResult> out;
  QubitScanConfig cfg;
  cfg.n_sphere = opt.samples;
  cfg.n_ball = 10 * opt.samples;
  cfg.seed = opt.seed;
  cfg.threads = opt.threads;
  for (const auto& t : kAngleTokens) {
    const QubitPair pair = QubitPair::from_angle(t.value);
    const RegionScan scan = scan_qubit_pair(pair, cfg);
    const auto lo =
        compare_envelopes([&](double x) { return min_sdev_B(pair, x); }, scan, EnvelopeSide::Min, opt.tol);
    const auto hi =
        compare_envelopes([&](double x) { return max_sdev_B(pair, x); }, scan, EnvelopeSide::Max, opt.tol);
    out.push_back(check_le(std::string("thm1-lower@") + t.token, lo.max_gap, opt.tol));
    out.push_back(check_le(std::string("thm1-upper@") + t.token, hi.max_gap, opt.tol));
  }
  return out;
}

std::vector<CheckResult> suite_qubit_identities(const VerifyOptions& opt) {
  constexpr std::size_t n = 10'000;
  double pyth = 0, add = 0, prod = 0, schr = 0, planar = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const Vec3 a = counter_unit_vector(opt.seed, 4 * i);
    const Vec3 b = counter_unit_vector(opt.seed, 4 * i + 1);
    const Vec3 r = counter_ball_point(opt.seed, 4 * i + 2);
    const auto res = lagrange_identity_residuals(a, b, r);
    pyth = std::max(pyth, res.pythagoras);
    add = std::max(add, res.additive);
    prod = std::max(prod, res.product);
    schr = std::max(schr, schrodinger_equality_residual(QubitPair::make(a, b), QubitState::make(r)));
    // Unit vector in span{a, b}.
    const double phi = 2.0 * kPi * counter_uniform(opt.seed, 4 * i + 3, 0);
    const QubitPair pair = QubitPair::make(a, b);
    planar = std::max(planar, planar_decomposition_check(pair.a(), pair.b(), pair.in_plane_direction(phi)));
  }

  // Pure states with r_x = 0 or r_y = 0 saturating dx dy >= |<[x, y]>| / 2.
  double sat = 0, fixed_var = 0;
  const Observable sx = QubitObservable::sigma_x();
  const Observable sy = QubitObservable::sigma_y();
  for (std::size_t i = 0; i < n; ++i) {
    const double t = 2.0 * kPi * counter_uniform(opt.seed ^ 0x5a7u, i, 0);
    const bool zero_x = (i % 2) == 0;
    const Vec3 r = zero_x ? Vec3{0.0, std::cos(t), std::sin(t)} : Vec3{std::cos(t), 0.0, std::sin(t)};
    const DensityState rho = QubitState::make(r);
    const double lhs = std_dev(sx, rho) * std_dev(sy, rho);
    const double rhs = 0.5 * commutator_expectation(sx, sy, rho);
    sat = std::max(sat, std::abs(lhs - rhs));
    fixed_var = std::max(fixed_var, std::abs(variance(zero_x ? sx : sy, rho) - 1.0));
  }

  return {
      check_le("lagrange-pythagoras", pyth, 1e-12),
      check_le("lagrange-additive", add, 1e-12),
      check_le("lagrange-product", prod, 1e-12),
      check_le("schrodinger-equality", schr, 1e-11),
      check_le("planar-decomposition", planar, 1e-12),
      check_le("heisenberg-saturation", sat, 1e-12),
      check_le("heisenberg-saturated-variance-one", fixed_var, 1e-12),
  };
}

std::vector<CheckResult> suite_triple(const VerifyOptions& opt) {
  constexpr std::size_t n = 100'000;
  double sum_gap = 0;
  std::size_t mismatches = 0, saturated = 0;
  for (std::size_t i = 0; i < n; ++i) {
    // Alternate mixed states (radius at most 1 - 1e-6) and pure states, so
    // the tolerance bands of the two sides of the equivalence do not overlap.
    Vec3 r;
    if (i % 2 == 0) {
      r = counter_ball_point(opt.seed, i) * (1.0 - 1e-6);
    } else {
      r = counter_unit_vector(opt.seed, i);
    }
    const QubitState st = QubitState::make(r);
    const double sum = orthogonal_triple_variance_sum(st);
    sum_gap = std::max(sum_gap, std::abs(sum - (3.0 - dot(r, r))));
    const bool sat = std::abs(sum - 2.0) <= 1e-9;
    const bool pure = std::abs(norm(r) - 1.0) <= 1e-9;
    if (sat != pure) ++mismatches;
    if (sat) ++saturated;
  }
  return {
      check_le("triple-sum", sum_gap, 1e-12),
      check_le("triple-saturation-iff-pure", static_cast<double>(mismatches), 0.0,
               "saturated=" + std::to_string(saturated) + "/" + std::to_string(n)),
  };
}

std::vector<CheckResult> suite_extended(const VerifyOptions& opt) {
  ExtendedScanConfig cfg;
  cfg.threads = opt.threads;
  const RegionScan scan = scan_extended_pair(0.0, cfg);

  double worst = 0;
  for (int k = 1; k <= 19; ++k) {
    const double X = 0.05 * k;
    const std::size_t i = scan.bin_index(X);
    double analytic = std::numeric_limits<double>::infinity();
    for (double x : uniform_grid(scan.bin_lo(i), scan.bin_hi(i), 33))
      analytic = std::min(analytic, extended_min_var_B(x));
    worst = std::max(worst, std::abs(scan.bin(i).min_u2 - analytic));
  }

  const std::size_t last = scan.bin_count() - 1;
  const int missing = !scan.occupied(0, 0) + !scan.occupied(last, 0) + !scan.occupied(0, scan.raster_rows() - 1);

  // Y_-(u) - Y_-(0) >= 0 wherever the w_- root exists and is a weight.
  double mono = 0;
  for (double X : uniform_grid(0.0, 1.0, 201))
    for (double u : uniform_grid(0.0, 1.0, 201)) {
      if (4.0 * X * u > 1.0 || extended_w_solutions(X, u).w_minus > 1.0) continue;
      mono = std::max(mono, extended_y_minus(X, 0.0) - extended_y_minus(X, u));
    }

  // Every lattice-style state lies in the analytic region.
  std::size_t outside = 0;
  for (std::size_t i = 0; i < 10'000; ++i) {
    const double w = counter_uniform(opt.seed, i, 0);
    const double rad = std::sqrt(counter_uniform(opt.seed, i, 1));
    const double phi = 2.0 * kPi * counter_uniform(opt.seed, i, 2);
    const auto p = ExtendedPairParams::make(w, rad * std::cos(phi), rad * std::sin(phi));
    const auto [va, vb] = extended_variances(p, 0.0);
    const double da = std::min(1.0, std::sqrt(va)), db = std::min(1.0, std::sqrt(vb));
    if (!extended_region_contains(da, db)) ++outside;
  }

  return {
      check_le("extended-min-var-b", worst, opt.tol),
      check_le("extended-corners-occupied", missing, 0.0),
      check_le("extended-monotonicity", mono, 1e-12),
      check_le("extended-states-inside", static_cast<double>(outside), 0.0),
  };
}

std::vector<CheckResult> suite_gellmann_curves(const VerifyOptions& opt) {
  GellMannGrid grid;
  grid.threads = opt.threads;
  const RegionScan scan = scan_gellmann(grid);
  std::vector<CheckResult> out;

  const auto segments = gm_boundary_segments();
  const BoundaryReport br = compare_boundary(segments, scan, opt.tol);
  for (std::size_t k = 0; k < br.segments.size(); ++k) {
    const auto& s = br.segments[k];
    out.push_back(check_le("gm-segment-" + std::to_string(k + 1) + "-" + to_string(s.segment.formula),
                           s.soundness, opt.tol));
  }
  out.push_back(check_le("gm-completeness", br.completeness, opt.tol,
                         "boundary_cells=" + std::to_string(br.boundary_cells) +
                             " states=" + std::to_string(scan.total_samples())));

  // Shared endpoints of adjacent arcs.
  struct Joint {
    std::size_t a, b;
    double x, y;
  };
  const Joint joints[] = {
      {0, 1, 0.25, 1.0},           {1, 2, 0.75, 0.75},           {2, 3, 1.0, 0.5},
      {3, 4, 15.0 / 16, 3.0 / 8},  {4, 5, 13.0 / 16, 9.0 / 32},  {5, 6, 0.25, 0.0},
      {6, 7, 15.0 / 64, 1.0 / 16}, {8, 9, 3.0 / 16, 0.25},
  };
  double joint_gap = 0;
  for (const auto& j : joints)
    joint_gap = std::max({joint_gap, std::abs(segments[j.a](j.x) - j.y), std::abs(segments[j.b](j.x) - j.y)});
  // (1/4, 0) is the B eigenstate (|1> + |3>) / sqrt 2.
  const auto [ex, ey] = gm_variances(GellMannStateParams::make(0.5, 0.5, 0.5, 0.0));
  joint_gap = std::max({joint_gap, std::abs(ex - 0.25), std::abs(ey)});
  out.push_back(check_le("gm-endpoints", joint_gap, 1e-12));

  // Lattice states with Var A = 1.
  double top_gap = 0;
  std::size_t top_count = 0;
  for_each_gellmann_lattice_point(grid, [&](const GellMannStateParams& p) {
    const auto [x, y] = gm_variances(p);
    if (x >= 1.0 - 1e-9) {
      ++top_count;
      top_gap = std::max(top_gap, std::abs(y - 0.5));
    }
  });
  out.push_back({"gm-var-a-one", top_count > 0 && top_gap <= opt.tol, top_gap, opt.tol,
                 "states=" + std::to_string(top_count)});

  // Var A = 0 column: nothing between the two lobes.
  const auto col = scan.column(0);
  std::size_t in_gap = 0;
  for (std::size_t j = 0; j < col.size(); ++j) {
    const double lo = static_cast<double>(j) / static_cast<double>(col.size());
    const double hi = static_cast<double>(j + 1) / static_cast<double>(col.size());
    if (col[j] > 0 && hi > 0.1 && lo < 0.9) ++in_gap;
  }
  out.push_back(check_le("gm-var-a-zero-lobe-gap", static_cast<double>(in_gap), 0.0));

  const ScanBin& half = scan.bin(scan.bin_index(0.5));
  out.push_back(check_le("gm-min-at-half", std::abs(half.min_u2 - 0.125), opt.tol));

  // Spot-check 10^4 lattice states: positivity through the 3x3 matrix, moments
  // through the matrix route, membership in the analytic region.
  double moment_gap = 0;
  std::size_t bad = 0;
  const std::size_t n = grid.diag - 1;
  for (std::size_t s = 0; s < 10'000; ++s) {
    const std::size_t i = std::min(n, static_cast<std::size_t>(counter_uniform(opt.seed, s, 0) * (n + 1)));
    const std::size_t j = std::min(n - i, static_cast<std::size_t>(counter_uniform(opt.seed, s, 1) * (n - i + 1)));
    const std::size_t k = static_cast<std::size_t>(counter_uniform(opt.seed, s, 2) * grid.modulus);
    const std::size_t l = static_cast<std::size_t>(counter_uniform(opt.seed, s, 3) * grid.phase);
    const auto p = gellmann_lattice_point(grid, i, j, k, l);
    const DensityState rho = p.to_state();
    const Observable A = HermitianMatrix3::gell_mann_a();
    const Observable B = HermitianMatrix3::gell_mann_b();
    const auto [x, y] = gm_variances(p);
    moment_gap = std::max({moment_gap, std::abs(variance(A, rho) - x), std::abs(variance(B, rho) - y)});
    if (!gm_region_contains(x, y)) ++bad;
  }
  out.push_back(check_le("gm-lattice-spot-check", moment_gap, 1e-12,
                         "outside_region=" + std::to_string(bad)));
  if (bad > 0) out.back().pass = false;
  return out;
}

std::vector<CheckResult> suite_gellmann_gap(const VerifyOptions&) {
  const SchrodingerGap at_one = gm_schrodinger_gap(1.0);
  std::vector<CheckResult> out;
  out.push_back({"gm-f-at-1", at_one.f == 0.0, std::abs(at_one.f), 0.0, "f(1)=" + num(at_one.f)});
  out.push_back(check_le("gm-gap-at-1", std::abs(at_one.gap() - 0.5), 1e-12, "gap=" + num(at_one.gap())));
  double min_gap = std::numeric_limits<double>::infinity();
  double worst_x = 1.0;
  for (double x : uniform_grid(0.99, 1.0, 101)) {
    const double g = gm_schrodinger_gap(x).gap();
    if (g < min_gap) {
      min_gap = g;
      worst_x = x;
    }
  }
  // Reported as a deficit: passes when strictly negative.
  out.push_back({"gm-gap-positive", min_gap > 0.0, -min_gap, 0.0,
                 "min_gap=" + num(min_gap) + " at x=" + num(worst_x)});
  return out;
}

std::vector<CheckResult> suite_qp_equivalence(const VerifyOptions&) {
  constexpr double C = 0.5;
  const QpEnvelope env = qp_envelope_curves(C, {0.25, 0.5, 1.0, 2.0, 4.0}, 2001);
  std::vector<CheckResult> out;
  for (const auto& t : env.tangencies) {
    const double on_hyperbola = std::abs(t.x * t.y - C);
    const double line_gap = std::max({on_hyperbola, std::abs(t.line_value - 2.0 * std::sqrt(C)), t.line_excess});
    const double ell_gap = std::max({on_hyperbola, std::abs(t.ellipse_value - 2.0 * C), t.ellipse_excess});
    CheckResult line = check_le("qp-line-tangency@ell=" + num(t.ell), line_gap, 1e-10,
                                "touches=" + std::to_string(t.line_touches));
    CheckResult ell = check_le("qp-ellipse-tangency@ell=" + num(t.ell), ell_gap, 1e-10,
                               "touches=" + std::to_string(t.ellipse_touches));
    line.pass = line.pass && t.line_touches == 1;
    ell.pass = ell.pass && t.ellipse_touches == 1;
    out.push_back(line);
    out.push_back(ell);
  }

  struct Case {
    double xi, eta, C;
  };
  const Case cases[] = {
      {1.0, 1.0, 1.0},   {1.0, 0.4, 0.5},        {2.0, 1.0, 0.5},     {1.0, 0.5 - 1e-9, 0.5},
      {1.0, 0.5, 0.5},   {1e6, 1e-6, 0.5},       {1e-3, 400.0, 0.5},  {3.0, 0.1, 0.5},
      {0.7, 0.7, 0.48},  {0.7, 0.7, 0.4901},
  };
  std::vector<double> xs;
  for (int k = -30; k <= 30; ++k) xs.push_back(std::pow(10.0, k / 10.0));
  std::size_t disagreements = 0;
  for (const auto& c : cases)
    if (!equivalence_scan(c.xi, c.eta, c.C, xs)) ++disagreements;
  out.push_back(check_le("qp-equivalence", static_cast<double>(disagreements), 0.0,
                         "cases=" + std::to_string(std::size(cases))));
  return out;
}

using SuiteFn = std::function<std::vector<CheckResult>(const VerifyOptions&)>;

const std::map<std::string, SuiteFn>& registry() {
  static const std::map<std::string, SuiteFn> r = {
      {"qubit-thm1", suite_qubit_thm1},
      {"qubit-identities", suite_qubit_identities},
      {"triple", suite_triple},
      {"extended", suite_extended},
      {"gellmann-curves", suite_gellmann_curves},
      {"gellmann-gap", suite_gellmann_gap},
      {"qp-equivalence", suite_qp_equivalence},
  };
  return r;
}

}  // namespace

std::string CheckResult::line() const {
  char buf[64];
  std::snprintf(buf, sizeof buf, " %.6e %g", max_gap, tol);
  std::string s = name + (pass ? " pass" : " fail") + buf;
  if (!note.empty()) s += " # " + note;
  return s;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"qubit-thm1",      "qubit-identities", "triple",        "extended",
                                                 "gellmann-curves", "gellmann-gap",     "qp-equivalence"};
  return names;
}

std::vector<CheckResult> run_suite(const std::string& name, const VerifyOptions& options) {
  const auto it = registry().find(name);
  if (it == registry().end()) throw UnknownSuite("unknown suite '" + name + "'");
  if (!(options.tol > 0.0)) throw ContractViolation("tolerance must be positive");
  if (options.samples == 0) throw ContractViolation("sample count must be at least 1");
  return it->second(options);
}

Vec3 counter_unit_vector(std::uint64_t seed, std::uint64_t index) {
  const double z = 2.0 * counter_uniform(seed, index, 0) - 1.0;
  const double phi = 2.0 * kPi * counter_uniform(seed, index, 1);
  const double rho = std::sqrt(std::max(0.0, 1.0 - z * z));
  return normalized({rho * std::cos(phi), rho * std::sin(phi), z});
}

Vec3 counter_ball_point(std::uint64_t seed, std::uint64_t index) {
  const Vec3 dir = counter_unit_vector(seed, index);
  return dir * std::cbrt(counter_uniform(seed, index, 2));
}

double parse_angle(const std::string& text) {
  for (const auto& t : kAngleTokens)
    if (text == t.token) return t.value;
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    throw ContractViolation("cannot parse angle '" + text + "'");
  }
  if (used != text.size() || !std::isfinite(v)) throw ContractViolation("cannot parse angle '" + text + "'");
  return v;
}

}  // namespace ureg
