#include "ureg/plot.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace ureg {

namespace {

constexpr double kTouchTol = 1e-10;

std::string num12(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string px(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string escape_xml(const std::string& s) {
  std::string out;
  for (char ch : s) {
    switch (ch) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += ch;
    }
  }
  return out;
}

void require_positive(double v, const char* what) {
  if (!(v > 0.0) || !std::isfinite(v)) throw ContractViolation(std::string(what) + " must be positive and finite");
}

// Sorted grid over [lo, hi] with extra abscissae merged in.
std::vector<double> grid_with(double lo, double hi, std::size_t n, std::vector<double> extra) {
  std::vector<double> xs = uniform_grid(lo, hi, n);
  for (double e : extra)
    if (e > lo && e < hi) xs.push_back(e);
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  return xs;
}

double parse_double(const std::string& field, std::size_t line_no) {
  double v = 0.0;
  const char* b = field.data();
  const char* e = b + field.size();
  auto [ptr, ec] = std::from_chars(b, e, v);
  if (ec != std::errc() || ptr != e)
    throw ContractViolation("bad number '" + field + "' on CSV line " + std::to_string(line_no));
  return v;
}

const char* const kPalette[] = {"#1f3b73", "#b23a48", "#2e7d32", "#8e5b00", "#6a3d9a", "#00796b", "#5d4037"};

}  // namespace

void PlotSpec::validate() const {
  for (const AxisRange* r : {&x_range, &y_range})
    if (!std::isfinite(r->lo) || !std::isfinite(r->hi) || !(r->lo < r->hi))
      throw ContractViolation("axis range must be finite with lo < hi");
}

PlotCurve to_plot_curve(const SampledCurve& curve, const std::string& style) {
  return {curve.points, style, curve.segment.label()};
}

// ---------------------------------------------------------------------------
// Tangent envelope

QpEnvelope qp_envelope_curves(double C, const std::vector<double>& ells, std::size_t grid_n) {
  require_positive(C, "C");
  if (ells.empty()) throw ContractViolation("need at least one ell value");
  for (double l : ells) require_positive(l, "ell");
  if (grid_n < 2) throw ContractViolation("grid_n must be at least 2");

  const double root = std::sqrt(C);
  const double ell_max = *std::max_element(ells.begin(), ells.end());
  const double ell_min = *std::min_element(ells.begin(), ells.end());
  const double x_hi = 1.1 * 2.0 * root * ell_max;
  const double y_hi = 1.1 * 2.0 * root / ell_min;

  QpEnvelope env;
  env.spec.title = "Product bound xy >= " + num12(C) + " and its tangent families";
  env.spec.x_label = "dQ";
  env.spec.y_label = "dP";
  env.spec.x_range = {0.0, x_hi};
  env.spec.y_range = {0.0, y_hi};

  std::vector<double> touch_xs;
  for (double l : ells) touch_xs.push_back(l * root);

  const auto hyper = CurveSegment::make(FormulaId::Hyperbola, {C / y_hi, x_hi}, Scale::StdDev, C, 1.0);
  env.spec.curves.push_back(
      to_plot_curve(sample_segment(hyper, grid_with(hyper.domain.lo, hyper.domain.hi, grid_n, touch_xs)), "solid"));

  for (double l : ells) {
    Tangency t;
    t.ell = l;
    t.x = l * root;
    t.y = root / l;
    t.line_value = t.x / l + l * t.y;
    t.ellipse_value = t.x * t.x / (l * l) + l * l * t.y * t.y;

    const auto line = CurveSegment::make(FormulaId::TangentLine, {0.0, 2.0 * root * l}, Scale::StdDev, C, l);
    const auto ellipse =
        CurveSegment::make(FormulaId::TangentEllipse, {0.0, l * std::sqrt(2.0 * C)}, Scale::StdDev, C, l);
    const SampledCurve sl = sample_segment(line, grid_with(line.domain.lo, line.domain.hi, grid_n, {t.x}));
    const SampledCurve se = sample_segment(ellipse, grid_with(ellipse.domain.lo, ellipse.domain.hi, grid_n, {t.x}));

    t.line_excess = -std::numeric_limits<double>::infinity();
    t.ellipse_excess = -std::numeric_limits<double>::infinity();
    for (const auto& p : sl.points) {
      if (p.x <= 0.0) continue;
      const double d = p.y - C / p.x;
      t.line_excess = std::max(t.line_excess, d);
      if (std::abs(d) <= kTouchTol) ++t.line_touches;
    }
    for (const auto& p : se.points) {
      if (p.x <= 0.0) continue;
      const double d = p.y - C / p.x;
      t.ellipse_excess = std::max(t.ellipse_excess, d);
      if (std::abs(d) <= kTouchTol) ++t.ellipse_touches;
    }
    env.spec.curves.push_back(to_plot_curve(sl, "dashed"));
    env.spec.curves.push_back(to_plot_curve(se, "dotted"));
    env.tangencies.push_back(t);
  }
  return env;
}

bool equivalence_scan(double xi, double eta, double C, const std::vector<double>& x_grid) {
  require_positive(xi, "xi");
  require_positive(eta, "eta");
  require_positive(C, "C");
  std::vector<double> xs = x_grid;
  xs.push_back(std::sqrt(xi / eta));
  const double bound = 2.0 * std::sqrt(C);
  bool additive_holds = true;
  for (double x : xs) {
    require_positive(x, "grid abscissa");
    if (xi / x + x * eta < bound - 1e-12) additive_holds = false;
  }
  const bool product_holds = xi * eta >= C;
  return product_holds == additive_holds;
}

// ---------------------------------------------------------------------------
// CSV

std::vector<RegionRow> region_rows(const PairBoundary& boundary, const std::string& source) {
  std::vector<RegionRow> rows;
  for (std::size_t i = 0; i < boundary.grid.size(); ++i)
    rows.push_back({boundary.grid[i], boundary.lower[i], boundary.upper[i], "analytic", source});
  return rows;
}

std::vector<RegionRow> curve_rows(const SampledCurve& curve, const std::string& source) {
  std::vector<RegionRow> rows;
  const std::string src = source.empty() ? to_string(curve.segment.formula) : source;
  for (const auto& p : curve.points) rows.push_back({p.x, p.y, p.y, "analytic", src});
  return rows;
}

std::vector<RegionRow> scan_rows(const RegionScan& scan) {
  std::vector<RegionRow> rows;
  for (std::size_t i = 0; i < scan.bin_count(); ++i) {
    const ScanBin& b = scan.bin(i);
    if (b.empty()) continue;
    rows.push_back({scan.bin_center(i), b.min_u2, b.max_u2, "empirical", scan.id()});
  }
  return rows;
}

std::string format_region_csv(std::vector<RegionRow> rows) {
  std::stable_sort(rows.begin(), rows.end(), [](const RegionRow& a, const RegionRow& b) { return a.x < b.x; });
  std::string out = "x,y_min,y_max,kind,source\n";
  for (const auto& r : rows) {
    if (r.source.find_first_of(",\n") != std::string::npos || r.kind.find_first_of(",\n") != std::string::npos)
      throw ContractViolation("CSV text fields must not contain commas or newlines");
    out += num12(r.x) + ',' + num12(r.y_min) + ',' + num12(r.y_max) + ',' + r.kind + ',' + r.source + '\n';
  }
  return out;
}

void write_region_csv(const std::string& path, const std::vector<RegionRow>& rows) {
  write_text_file(path, format_region_csv(rows));
}

std::vector<RegionRow> parse_region_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line != "x,y_min,y_max,kind,source")
    throw ContractViolation("missing CSV header");
  std::vector<RegionRow> rows;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::vector<std::string> f;
    std::size_t start = 0;
    for (;;) {
      const std::size_t comma = line.find(',', start);
      f.push_back(line.substr(start, comma == std::string::npos ? std::string::npos : comma - start));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    if (f.size() != 5) throw ContractViolation("expected 5 fields on CSV line " + std::to_string(line_no));
    rows.push_back({parse_double(f[0], line_no), parse_double(f[1], line_no), parse_double(f[2], line_no), f[3],
                    f[4]});
  }
  return rows;
}

std::vector<RegionRow> read_region_csv(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "' for reading");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_region_csv(ss.str());
}

// ---------------------------------------------------------------------------
// SVG

std::string render_svg_string(const PlotSpec& spec) {
  spec.validate();
  constexpr double left = 90.0, right = 770.0, top = 60.0, bottom = 720.0;
  const auto sx = [&](double x) {
    return left + (x - spec.x_range.lo) / (spec.x_range.hi - spec.x_range.lo) * (right - left);
  };
  const auto sy = [&](double y) {
    return bottom - (y - spec.y_range.lo) / (spec.y_range.hi - spec.y_range.lo) * (bottom - top);
  };
  const auto inside = [&](const Point2& p) {
    const double mx = 1e-9 * (spec.x_range.hi - spec.x_range.lo);
    const double my = 1e-9 * (spec.y_range.hi - spec.y_range.lo);
    return std::isfinite(p.x) && std::isfinite(p.y) && p.x >= spec.x_range.lo - mx && p.x <= spec.x_range.hi + mx &&
           p.y >= spec.y_range.lo - my && p.y <= spec.y_range.hi + my;
  };

  std::ostringstream o;
  o << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
    << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"800\" height=\"800\" "
       "viewBox=\"0 0 800 800\">\n";
  o << "<rect x=\"0\" y=\"0\" width=\"800\" height=\"800\" fill=\"white\"/>\n";

  if (spec.raster) {
    const RegionScan& scan = *spec.raster;
    o << "<g fill=\"#4a7fb5\" fill-opacity=\"0.35\" stroke=\"none\">\n";
    const double rows = static_cast<double>(scan.raster_rows());
    for (std::size_t i = 0; i < scan.bin_count(); ++i) {
      const auto col = scan.column(i);
      std::size_t j = 0;
      while (j < scan.raster_rows()) {
        if (col[j] == 0) {
          ++j;
          continue;
        }
        std::size_t k = j;
        while (k + 1 < scan.raster_rows() && col[k + 1] > 0) ++k;
        const double x0 = sx(scan.bin_lo(i)), x1 = sx(scan.bin_hi(i));
        const double y0 = sy(static_cast<double>(k + 1) / rows), y1 = sy(static_cast<double>(j) / rows);
        o << "<rect x=\"" << px(x0) << "\" y=\"" << px(y0) << "\" width=\"" << px(x1 - x0) << "\" height=\""
          << px(y1 - y0) << "\"/>\n";
        j = k + 1;
      }
    }
    o << "</g>\n";
  }

  // Frame, ticks and labels.
  o << "<g stroke=\"black\" fill=\"none\" stroke-width=\"1\">\n"
    << "<rect x=\"" << px(left) << "\" y=\"" << px(top) << "\" width=\"" << px(right - left) << "\" height=\""
    << px(bottom - top) << "\"/>\n</g>\n";
  o << "<g font-family=\"sans-serif\" font-size=\"14\" fill=\"black\">\n";
  for (int t = 0; t <= 4; ++t) {
    const double fx = spec.x_range.lo + (spec.x_range.hi - spec.x_range.lo) * t / 4.0;
    const double fy = spec.y_range.lo + (spec.y_range.hi - spec.y_range.lo) * t / 4.0;
    o << "<rect x=\"" << px(sx(fx) - 0.5) << "\" y=\"" << px(bottom) << "\" width=\"1\" height=\"6\"/>\n";
    o << "<text x=\"" << px(sx(fx)) << "\" y=\"" << px(bottom + 22) << "\" text-anchor=\"middle\">" << num12(fx)
      << "</text>\n";
    o << "<rect x=\"" << px(left - 6) << "\" y=\"" << px(sy(fy) - 0.5) << "\" width=\"6\" height=\"1\"/>\n";
    o << "<text x=\"" << px(left - 10) << "\" y=\"" << px(sy(fy) + 5) << "\" text-anchor=\"end\">" << num12(fy)
      << "</text>\n";
  }
  o << "<text x=\"400\" y=\"35\" text-anchor=\"middle\" font-size=\"18\">" << escape_xml(spec.title) << "</text>\n";
  o << "<text x=\"" << px((left + right) / 2) << "\" y=\"765\" text-anchor=\"middle\">" << escape_xml(spec.x_label)
    << "</text>\n";
  o << "<text x=\"25\" y=\"" << px((top + bottom) / 2) << "\" text-anchor=\"middle\" transform=\"rotate(-90 25 "
    << px((top + bottom) / 2) << ")\">" << escape_xml(spec.y_label) << "</text>\n";
  o << "</g>\n";

  for (std::size_t c = 0; c < spec.curves.size(); ++c) {
    const PlotCurve& curve = spec.curves[c];
    std::string attrs = "fill=\"none\" stroke=\"" + std::string(kPalette[c % std::size(kPalette)]) + "\"";
    if (curve.style == "solid")
      attrs += " stroke-width=\"2\"";
    else if (curve.style == "dashed")
      attrs += " stroke-width=\"2\" stroke-dasharray=\"8,5\"";
    else if (curve.style == "dotted")
      attrs += " stroke-width=\"2\" stroke-dasharray=\"2,4\"";
    else if (curve.style == "thin")
      attrs += " stroke-width=\"1\"";
    else
      throw ContractViolation("unknown curve style '" + curve.style + "'");
    o << "<g " << attrs << ">\n";
    // Points outside the axis ranges split the curve into separate polylines.
    std::vector<Point2> run;
    auto flush = [&] {
      if (run.size() >= 2) {
        o << "<polyline points=\"";
        for (std::size_t k = 0; k < run.size(); ++k)
          o << (k ? " " : "") << px(sx(run[k].x)) << ',' << px(sy(run[k].y));
        o << "\"/>\n";
      }
      run.clear();
    };
    for (const auto& p : curve.points) {
      if (inside(p))
        run.push_back(p);
      else
        flush();
    }
    flush();
    o << "</g>\n";
  }
  o << "</svg>\n";
  return o.str();
}

void render_svg(const PlotSpec& spec, const std::string& path) { write_text_file(path, render_svg_string(spec)); }

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out << content;
  out.flush();
  if (!out) throw IoError("write to '" + path + "' failed");
}

}  // namespace ureg
