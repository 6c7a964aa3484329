// plot.hpp
// CSV and SVG emission for boundary curves and oracle scans, plus the
// position-momentum tangent envelope and its additive/product equivalence.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ureg/curves.hpp"
#include "ureg/oracle.hpp"

namespace ureg {

/// I/O failure, message carries the path.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct AxisRange {
  double lo = 0.0;
  double hi = 1.0;
};

/// Style ids understood by render_svg: "solid", "dashed", "dotted", "thin".
struct PlotCurve {
  std::vector<Point2> points;
  std::string style = "solid";
  std::string label;
};

struct PlotSpec {
  std::string title;
  std::string x_label;
  std::string y_label;
  AxisRange x_range;
  AxisRange y_range;
  std::vector<PlotCurve> curves;
  std::optional<RegionScan> raster;

  /// Throws ContractViolation unless both ranges are finite with lo < hi.
  void validate() const;
};

PlotCurve to_plot_curve(const SampledCurve& curve, const std::string& style);

// ---------------------------------------------------------------------------
// Tangent envelope of the product bound xy >= C (C = 1/2 for hbar = 1)

struct Tangency {
  double ell = 0.0;
  double x = 0.0;  // touching point on xy = C
  double y = 0.0;
  double line_value = 0.0;     // x / ell + ell y at the touching point
  double ellipse_value = 0.0;  // x^2 / ell^2 + ell^2 y^2 at the touching point
  /// Grid points where each tangent meets the hyperbola within 1e-10.
  std::size_t line_touches = 0;
  std::size_t ellipse_touches = 0;
  /// Largest excess of a tangent over the hyperbola on the grid (should be <= 0).
  double line_excess = 0.0;
  double ellipse_excess = 0.0;
};

struct QpEnvelope {
  PlotSpec spec;
  std::vector<Tangency> tangencies;
};

/// Hyperbola xy = C plus, per ell, the line x/ell + ell y = 2 sqrt(C) and the
/// ellipse x^2/ell^2 + ell^2 y^2 = 2C. Each curve is sampled on grid_n points
/// (with its tangency abscissa inserted).
QpEnvelope qp_envelope_curves(double C, const std::vector<double>& ells, std::size_t grid_n);

/// Checks xi eta >= C  <=>  xi/x + x eta >= 2 sqrt(C) for all x in the grid
/// (the minimizer sqrt(xi/eta) is always added). True iff both sides agree.
bool equivalence_scan(double xi, double eta, double C, const std::vector<double>& x_grid);

// ---------------------------------------------------------------------------
// CSV

struct RegionRow {
  double x = 0.0;
  double y_min = 0.0;
  double y_max = 0.0;
  std::string kind;    // "analytic" or "empirical"
  std::string source;  // formula id or scan id
};

/// One analytic row per grid point of the tight qubit region.
std::vector<RegionRow> region_rows(const PairBoundary& boundary, const std::string& source);
/// One analytic row per sample of a single curve (y_min = y_max). The source
/// defaults to the formula id.
std::vector<RegionRow> curve_rows(const SampledCurve& curve, const std::string& source = "");
/// One empirical row per non-empty bin.
std::vector<RegionRow> scan_rows(const RegionScan& scan);

/// Header `x,y_min,y_max,kind,source`, 12 significant digits, rows stably
/// sorted by x, '\n' line endings.
std::string format_region_csv(std::vector<RegionRow> rows);
void write_region_csv(const std::string& path, const std::vector<RegionRow>& rows);
std::vector<RegionRow> parse_region_csv(const std::string& text);
std::vector<RegionRow> read_region_csv(const std::string& path);

// ---------------------------------------------------------------------------
// SVG

/// Self-contained SVG with an 800x800 viewBox, using only svg, g, polyline,
/// rect and text elements. Output bytes depend only on the spec.
std::string render_svg_string(const PlotSpec& spec);
void render_svg(const PlotSpec& spec, const std::string& path);

/// Writes `content` to `path` verbatim, throwing IoError on failure.
void write_text_file(const std::string& path, const std::string& content);

}  // namespace ureg
