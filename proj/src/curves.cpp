#include "ureg/curves.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace ureg {

namespace {

double sqrt0(double v) { return std::sqrt(std::max(0.0, v)); }

}  // namespace

std::string to_string(FormulaId id) {
  switch (id) {
    case FormulaId::QubitLower: return "qubit-lower";
    case FormulaId::QubitUpperArc: return "qubit-upper-arc";
    case FormulaId::ConstantOne: return "constant-one";
    case FormulaId::PriorStraight: return "prior-straight";
    case FormulaId::PriorCurved: return "prior-curved";
    case FormulaId::ExtendedLower: return "extended-lower";
    case FormulaId::ExtendedMirrorLow: return "extended-mirror-low";
    case FormulaId::ExtendedMirrorHigh: return "extended-mirror-high";
    case FormulaId::OrthogonalQubitLower: return "orthogonal-qubit-lower";
    case FormulaId::GmLinearUpper: return "gm-linear-upper";
    case FormulaId::GmSqrtUpper: return "gm-sqrt-upper";
    case FormulaId::GmSqrtLower: return "gm-sqrt-lower";
    case FormulaId::GmQuadratic: return "gm-quadratic";
    case FormulaId::GmLinearLower: return "gm-linear-lower";
    case FormulaId::GmOneMinusFourX: return "gm-one-minus-four-x";
    case FormulaId::GmSqrtFourX: return "gm-sqrt-four-x";
    case FormulaId::Hyperbola: return "hyperbola";
    case FormulaId::TangentLine: return "tangent-line";
    case FormulaId::TangentEllipse: return "tangent-ellipse";
  }
  return "unknown";
}

double evaluate_formula(FormulaId id, double x, double p0, double p1) {
  switch (id) {
    case FormulaId::QubitLower: return std::abs(x * p0 - p1 * sqrt0(1.0 - x * x));
    case FormulaId::QubitUpperArc: return x * p0 + p1 * sqrt0(1.0 - x * x);
    case FormulaId::ConstantOne: return 1.0;
    case FormulaId::PriorStraight: return p1 - x;
    case FormulaId::PriorCurved: return sqrt0(1.0 - std::abs(p0) - x * x);
    case FormulaId::ExtendedLower: return x * sqrt0(1.0 - x * x);
    case FormulaId::ExtendedMirrorLow: return sqrt0(0.5 * (1.0 - sqrt0(1.0 - 4.0 * x * x)));
    case FormulaId::ExtendedMirrorHigh: return sqrt0(0.5 * (1.0 + sqrt0(1.0 - 4.0 * x * x)));
    case FormulaId::OrthogonalQubitLower: return sqrt0(1.0 - x * x);
    case FormulaId::GmLinearUpper: return (9.0 - 4.0 * x) / 8.0;
    case FormulaId::GmSqrtUpper: return 0.5 * (1.0 + sqrt0(1.0 - x));
    case FormulaId::GmSqrtLower: return 0.5 * (1.0 - sqrt0(1.0 - x));
    case FormulaId::GmQuadratic: return 2.0 * x * x - 11.0 / 4.0 * x + 153.0 / 128.0;
    case FormulaId::GmLinearLower: return (4.0 * x - 1.0) / 8.0;
    case FormulaId::GmOneMinusFourX: return 1.0 - 4.0 * x;
    case FormulaId::GmSqrtFourX: return 0.5 * (1.0 - sqrt0(1.0 - 4.0 * x));
    case FormulaId::Hyperbola: return p0 / x;
    case FormulaId::TangentLine: return (2.0 * std::sqrt(p0) - x / p1) / p1;
    case FormulaId::TangentEllipse: return sqrt0(2.0 * p0 - x * x / (p1 * p1)) / p1;
  }
  return 0.0;
}

CurveSegment CurveSegment::make(FormulaId formula, Interval domain, Scale scale, double p0, double p1) {
  if (!(domain.lo <= domain.hi) || !std::isfinite(domain.lo) || !std::isfinite(domain.hi))
    throw ContractViolation("curve segment domain must satisfy lo <= hi");
  return {formula, domain, scale, p0, p1};
}

double CurveSegment::operator()(double x) const {
  if (!domain.contains(x, kAlgebraicTol)) {
    std::ostringstream os;
    os << "x = " << x << " outside the domain [" << domain.lo << ", " << domain.hi << "] of " << label();
    throw ContractViolation(os.str());
  }
  return evaluate_formula(formula, std::clamp(x, domain.lo, domain.hi), p0, p1);
}

std::string CurveSegment::label() const { return to_string(formula); }

std::vector<double> uniform_grid(double lo, double hi, std::size_t n) {
  if (n < 2) throw ContractViolation("a grid needs at least two points");
  std::vector<double> g(n);
  const double step = (hi - lo) / static_cast<double>(n - 1);
  for (std::size_t i = 0; i < n; ++i) g[i] = lo + step * static_cast<double>(i);
  g.back() = hi;
  return g;
}

SampledCurve sample_segment(const CurveSegment& seg, const std::vector<double>& grid) {
  std::vector<double> xs;
  xs.reserve(grid.size() + 2);
  xs.push_back(seg.domain.lo);
  for (double x : grid)
    if (x > seg.domain.lo && x < seg.domain.hi) xs.push_back(x);
  if (seg.domain.hi > seg.domain.lo) xs.push_back(seg.domain.hi);
  SampledCurve out{seg, {}};
  out.points.reserve(xs.size());
  for (double x : xs) out.points.push_back({x, seg(x)});
  return out;
}

SampledCurve sample_segment(const CurveSegment& seg, std::size_t n) {
  return sample_segment(seg, uniform_grid(seg.domain.lo, seg.domain.hi, n));
}

}  // namespace ureg
