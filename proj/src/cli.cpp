#include "ureg/cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>

#include "ureg/oracle.hpp"
#include "ureg/plot.hpp"
#include "ureg/qubit_regions.hpp"
#include "ureg/qutrit_regions.hpp"
#include "ureg/verify.hpp"

namespace ureg {

namespace {

constexpr double kHalfPi = std::numbers::pi / 2;

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

double checked_angle(const std::string& text) {
  const double theta = parse_angle(text);
  if (theta < -1e-12 || theta > kHalfPi + 1e-12) throw ContractViolation("theta must lie in [0, pi/2]");
  return std::clamp(theta, 0.0, kHalfPi);
}

void emit(const RunConfig& cfg, const std::vector<RegionRow>& rows, const PlotSpec& spec, std::ostream& out) {
  const std::string text = cfg.format == OutputFormat::Csv ? format_region_csv(rows) : render_svg_string(spec);
  if (cfg.out.empty())
    out << text;
  else
    write_text_file(cfg.out, text);
}

const char* style_for(FormulaId id) {
  switch (id) {
    case FormulaId::PriorStraight:
    case FormulaId::OrthogonalQubitLower: return "dashed";
    case FormulaId::PriorCurved: return "dotted";
    default: return "solid";
  }
}

}  // namespace

int cmd_qubit_region(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const std::string token = cfg.theta.value_or("pi/4");
  const double theta = checked_angle(token);
  const QubitPair pair = QubitPair::from_angle(theta);
  if (pair.sin_angle() == 0.0)
    err << "warning: theta = 0 makes A and B identical; the region is the diagonal dB = dA\n";

  const PairBoundary boundary = pair_boundary_segments(pair, cfg.grid.value_or(200));
  std::vector<RegionRow> rows = region_rows(boundary, "qubit-region");
  PlotSpec spec;
  spec.title = "Qubit uncertainty region, theta = " + token;
  spec.x_label = "dA";
  spec.y_label = "dB";
  for (const auto& c : boundary.curves) {
    spec.curves.push_back(to_plot_curve(c, style_for(c.segment.formula)));
    if (c.segment.formula == FormulaId::PriorStraight || c.segment.formula == FormulaId::PriorCurved) {
      const auto extra = curve_rows(c);
      rows.insert(rows.end(), extra.begin(), extra.end());
    }
  }
  if (cfg.overlay_oracle) {
    QubitScanConfig sc;
    sc.n_sphere = cfg.samples.value_or(100'000);
    sc.n_ball = 10 * sc.n_sphere;
    sc.seed = cfg.seed;
    RegionScan scan = scan_qubit_pair(pair, sc);
    const auto extra = scan_rows(scan);
    rows.insert(rows.end(), extra.begin(), extra.end());
    spec.raster = std::move(scan);
  }
  emit(cfg, rows, spec, out);
  return kExitOk;
}

int cmd_triple_region(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  if (cfg.slices.empty()) throw ContractViolation("at least one slice is required");
  const auto xs = uniform_grid(0.0, 1.0, cfg.grid.value_or(200));
  std::vector<RegionRow> rows;
  PlotSpec spec;
  spec.title = "Orthogonal triple: slices at fixed dz";
  spec.x_label = "dx";
  spec.y_label = "dy (inner boundary)";
  for (double dz : cfg.slices) {
    if (!(dz >= 0.0 && dz <= 1.0)) throw ContractViolation("slice values must lie in [0, 1]");
    const std::string source = "triple-dz=" + num(dz);
    PlotCurve curve{{}, "solid", source};
    for (double x : xs)
      if (const auto iv = triple_slice(dz, x)) {
        rows.push_back({x, iv->lo, iv->hi, "analytic", source});
        curve.points.push_back({x, iv->lo});
      }
    spec.curves.push_back(std::move(curve));
  }
  emit(cfg, rows, spec, out);
  return kExitOk;
}

int cmd_qp_envelope(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  constexpr double C = 0.5;  // hbar = 1
  const QpEnvelope env = qp_envelope_curves(C, cfg.ells, cfg.grid.value_or(400));
  std::vector<std::string> sources = {"hyperbola"};
  for (double l : cfg.ells) {
    sources.push_back("tangent-line@ell=" + num(l));
    sources.push_back("tangent-ellipse@ell=" + num(l));
  }
  std::vector<RegionRow> rows;
  for (std::size_t k = 0; k < env.spec.curves.size(); ++k)
    for (const auto& p : env.spec.curves[k].points) rows.push_back({p.x, p.y, p.y, "analytic", sources[k]});
  emit(cfg, rows, env.spec, out);
  return kExitOk;
}

int cmd_extended_region(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const std::string token = cfg.theta.value_or("pi/2");
  const double theta = checked_angle(token);
  const bool orthogonal = std::abs(theta - kHalfPi) <= 1e-12;
  bool overlay = cfg.overlay_oracle;
  if (!orthogonal && !overlay) {
    err << "warning: no closed-form boundary for non-orthogonal Bloch vectors; emitting the oracle raster only\n";
    overlay = true;
  }

  std::vector<RegionRow> rows;
  PlotSpec spec;
  spec.title = "Extended qubit observables, theta = " + token;
  spec.x_label = "dA";
  spec.y_label = "dB";
  if (orthogonal) {
    const std::size_t n = cfg.grid.value_or(200);
    for (const auto& seg : extended_boundary_segments()) {
      const SampledCurve c = sample_segment(seg, n);
      spec.curves.push_back(to_plot_curve(c, style_for(seg.formula)));
      const auto extra = curve_rows(c);
      rows.insert(rows.end(), extra.begin(), extra.end());
    }
  }
  if (overlay) {
    ExtendedScanConfig sc;
    sc.grid_w = sc.grid_r = cfg.samples.value_or(401);
    sc.scale = Scale::StdDev;
    RegionScan scan = scan_extended_pair(std::cos(theta), sc);
    const auto extra = scan_rows(scan);
    rows.insert(rows.end(), extra.begin(), extra.end());
    spec.raster = std::move(scan);
  }
  emit(cfg, rows, spec, out);
  return kExitOk;
}

int cmd_gellmann_region(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  const std::size_t n = cfg.grid.value_or(200);
  std::vector<RegionRow> rows;
  PlotSpec spec;
  spec.title = "Gell-Mann observables";
  spec.x_label = "Var A";
  spec.y_label = "Var B";
  const auto segments = gm_boundary_segments();
  for (std::size_t k = 0; k < segments.size(); ++k) {
    const SampledCurve c = sample_segment(segments[k], n);
    spec.curves.push_back(to_plot_curve(c, "solid"));
    const auto extra = curve_rows(c, "curve" + std::to_string(k + 1) + "-" + to_string(segments[k].formula));
    rows.insert(rows.end(), extra.begin(), extra.end());
  }
  if (cfg.overlay_oracle) {
    GellMannGrid grid;
    if (cfg.samples) grid.diag = *cfg.samples;
    RegionScan scan = scan_gellmann(grid);
    const auto extra = scan_rows(scan);
    rows.insert(rows.end(), extra.begin(), extra.end());
    spec.raster = std::move(scan);
  }
  emit(cfg, rows, spec, out);
  return kExitOk;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  VerifyOptions opt;
  opt.tol = cfg.tol;
  opt.seed = cfg.seed;
  opt.samples = cfg.samples.value_or(opt.samples);
  std::vector<CheckResult> results;
  try {
    results = run_suite(cfg.suite, opt);
  } catch (const UnknownSuite& e) {
    err << "error: " << e.what() << "\nknown suites:";
    for (const auto& s : suite_names()) err << ' ' << s;
    err << '\n';
    return kExitUsage;
  }
  bool ok = true;
  for (const auto& r : results) {
    out << r.line() << '\n';
    ok = ok && r.pass;
  }
  return ok ? kExitOk : kExitFailure;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Uncertainty regions for qubit and qutrit observables"};
  app.name("uncertainty");
  app.require_subcommand(1);

  RunConfig cfg;
  std::string theta, format = "csv";
  std::size_t grid = 0, samples = 0;

  struct Options {
    CLI::Option* theta = nullptr;
    CLI::Option* grid = nullptr;
    CLI::Option* samples = nullptr;
  };
  std::vector<std::pair<CLI::App*, Options>> subs;

  auto add_common = [&](CLI::App* sub) {
    Options o;
    o.grid = sub->add_option("--grid", grid, "analytic samples per curve")->check(CLI::PositiveNumber);
    o.samples = sub->add_option("--samples", samples, "oracle sample count or lattice resolution")
                    ->check(CLI::PositiveNumber);
    sub->add_option("--seed", cfg.seed, "seed for all randomness");
    sub->add_option("--tol", cfg.tol, "comparison tolerance")->check(CLI::PositiveNumber);
    sub->add_option("--out", cfg.out, "output path (default: standard output)");
    sub->add_option("--format", format, "csv or svg")->check(CLI::IsMember({"csv", "svg"}));
    sub->add_flag("--overlay-oracle", cfg.overlay_oracle, "add the brute-force raster");
    subs.emplace_back(sub, o);
    return o;
  };

  auto* qubit = app.add_subcommand("qubit-region", "sharp qubit observables at angle theta");
  add_common(qubit);
  subs.back().second.theta = qubit->add_option("--theta", theta, "angle: pi/16 ... pi/2 or radians");

  auto* triple = app.add_subcommand("triple-region", "slices of the sigma_x, sigma_y, sigma_z region");
  add_common(triple);
  triple->add_option("--slices", cfg.slices, "comma-separated dz values")->delimiter(',');

  auto* qp = app.add_subcommand("qp-envelope", "product bound with tangent lines and ellipses");
  add_common(qp);
  qp->add_option("--ell", cfg.ells, "comma-separated length scales")->delimiter(',');

  auto* ext = app.add_subcommand("extended-region", "extended qubit observables on a qutrit");
  add_common(ext);
  subs.back().second.theta = ext->add_option("--theta", theta, "angle between the Bloch vectors");

  auto* gm = app.add_subcommand("gellmann-region", "Gell-Mann observables in variance scale");
  add_common(gm);

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  add_common(verify);
  verify->add_option("suite", cfg.suite, "suite name")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kExitUsage;
  }

  CLI::App* chosen = app.get_subcommands().front();
  cfg.command = chosen->get_name();
  cfg.format = format == "svg" ? OutputFormat::Svg : OutputFormat::Csv;
  for (const auto& [sub, o] : subs) {
    if (sub != chosen) continue;
    if (o.theta && o.theta->count() > 0) cfg.theta = theta;
    if (o.grid->count() > 0) cfg.grid = grid;
    if (o.samples->count() > 0) cfg.samples = samples;
  }
  if (cfg.grid && *cfg.grid < 2) {
    err << "error: --grid must be at least 2\n" << chosen->help();
    return kExitUsage;
  }

  try {
    if (cfg.command == "qubit-region") return cmd_qubit_region(cfg, out, err);
    if (cfg.command == "triple-region") return cmd_triple_region(cfg, out, err);
    if (cfg.command == "qp-envelope") return cmd_qp_envelope(cfg, out, err);
    if (cfg.command == "extended-region") return cmd_extended_region(cfg, out, err);
    if (cfg.command == "gellmann-region") return cmd_gellmann_region(cfg, out, err);
    return cmd_verify(cfg, out, err);
  } catch (const ContractViolation& e) {
    err << "error: " << e.what() << "\n" << chosen->help();
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
}

}  // namespace ureg
