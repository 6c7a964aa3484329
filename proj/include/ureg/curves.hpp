// curves.hpp
// Analytic boundary arcs: a formula identifier, its domain and its scale.

#pragma once

#include <string>
#include <vector>

#include "ureg/quantum_core.hpp"

namespace ureg {

enum class FormulaId {
  // Qubit pair, standard-deviation scale. Parameterized by (cos, sin) of the
  // angle between the Bloch vectors.
  QubitLower,       // |x c - s sqrt(1 - x^2)|
  QubitUpperArc,    // x c + s sqrt(1 - x^2)
  ConstantOne,      // 1
  PriorStraight,      // s - x
  PriorCurved,        // sqrt(1 - c - x^2)
  // Extended qubit pair with orthogonal Bloch vectors, standard-deviation scale.
  ExtendedLower,       // x sqrt(1 - x^2)
  ExtendedMirrorLow,   // lower root t of t sqrt(1 - t^2) = x
  ExtendedMirrorHigh,  // upper root t of t sqrt(1 - t^2) = x
  OrthogonalQubitLower,  // sqrt(1 - x^2)
  // Gell-Mann pair, variance scale.
  GmLinearUpper,    // (9 - 4x) / 8
  GmSqrtUpper,      // (1 + sqrt(1 - x)) / 2
  GmSqrtLower,      // (1 - sqrt(1 - x)) / 2
  GmQuadratic,      // 2x^2 - 11x/4 + 153/128
  GmLinearLower,    // (4x - 1) / 8
  GmOneMinusFourX,  // 1 - 4x
  GmSqrtFourX,      // (1 - sqrt(1 - 4x)) / 2
  // Position-momentum envelope, parameterized by (constant C, length ell).
  Hyperbola,        // C / x
  TangentLine,      // (2 sqrt(C) - x / ell) / ell
  TangentEllipse,   // sqrt(2C - x^2 / ell^2) / ell
};

std::string to_string(FormulaId id);

struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  [[nodiscard]] bool contains(double x, double tol = 0.0) const { return x >= lo - tol && x <= hi + tol; }
  [[nodiscard]] double width() const { return hi - lo; }
};

/// One analytic boundary arc. `p0` and `p1` carry the family parameters
/// (cos/sin of the pair angle, or C/ell for the envelope curves).
struct CurveSegment {
  FormulaId formula = FormulaId::ConstantOne;
  Interval domain;
  Scale scale = Scale::StdDev;
  double p0 = 0.0;
  double p1 = 0.0;

  static CurveSegment make(FormulaId formula, Interval domain, Scale scale, double p0 = 0.0, double p1 = 0.0);

  /// Formula value at x; x must lie in the domain (within 1e-12).
  [[nodiscard]] double operator()(double x) const;
  [[nodiscard]] std::string label() const;
};

/// Unchecked formula evaluation.
double evaluate_formula(FormulaId id, double x, double p0 = 0.0, double p1 = 0.0);

struct Point2 {
  double x = 0.0;
  double y = 0.0;
};

struct SampledCurve {
  CurveSegment segment;
  std::vector<Point2> points;
};

/// Uniform grid of n points over [lo, hi] with both endpoints exact.
std::vector<double> uniform_grid(double lo, double hi, std::size_t n);

/// Samples the segment on the part of `grid` inside its domain, adding the
/// domain endpoints when the grid misses them.
SampledCurve sample_segment(const CurveSegment& seg, const std::vector<double>& grid);
SampledCurve sample_segment(const CurveSegment& seg, std::size_t n);

}  // namespace ureg
