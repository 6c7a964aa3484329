// qutrit_regions.hpp
// Analytic uncertainty regions for two families of qutrit observables:
//
//  * extended qubit observables (a.sigma) + 0 and (b.sigma) + 0, analysed for
//    orthogonal Bloch vectors, whose states reduce to w/2 (I + r.sigma) + (1 - w);
//  * the Gell-Mann pair A = diag(1, -1, 0), B = |1><3| + |3><1|, whose states
//    reduce to rho12 = rho23 = 0. All Gell-Mann work is in variance scale.

#pragma once

#include <utility>
#include <vector>

#include "ureg/curves.hpp"
#include "ureg/quantum_core.hpp"

namespace ureg {

// ---------------------------------------------------------------------------
// Extended qubit observables

struct ExtendedPairParams {
  double w = 0.0;    // weight of the qubit block
  double r_a = 0.0;  // Bloch component along a
  double r_b = 0.0;  // in-plane Bloch component orthogonal to a

  static ExtendedPairParams make(double w, double r_a, double r_b);
  [[nodiscard]] QutritState to_state() const;
};

/// (Var A, Var B) for B at angle acos(cos_ab) from A in the a/r_b plane.
std::pair<double, double> extended_variances(const ExtendedPairParams& p, double cos_ab);

struct WRoots {
  double w_minus = 0.0;
  double w_plus = 0.0;  // +infinity at u = 0
};

/// Roots w of X = w - w^2 u (u = r_a^2).
WRoots extended_w_solutions(double X, double u);
/// Var B along the w_minus root with r_b^2 = 1 - u.
double extended_y_minus(double X, double u);
/// X (1 - X)
double extended_min_var_B(double X);
/// dB >= dA sqrt(1 - dA^2) and dA >= dB sqrt(1 - dB^2), standard deviations.
bool extended_region_contains(double dA, double dB);

struct MonotonicityWitness {
  double dw_minus = 0.0;  // w_-'(u)
  double dy_minus = 0.0;  // Y_-'(u)
};

MonotonicityWitness extended_monotonicity_witness(double X, double u);

/// Boundary arcs of the orthogonal extended region in standard-deviation
/// scale, plus the dashed lower boundary of the qubit sub-family rho2 + 0.
std::vector<CurveSegment> extended_boundary_segments();

// ---------------------------------------------------------------------------
// Gell-Mann observables

struct GellMannStateParams {
  double rho11 = 0.0;
  double rho33 = 0.0;
  double re13 = 0.0;
  double im13 = 0.0;

  static GellMannStateParams make(double rho11, double rho33, double re13, double im13);
  [[nodiscard]] double rho22() const { return 1.0 - rho11 - rho33; }
  [[nodiscard]] QutritState to_state() const;
};

/// (Var A, Var B) from the reduced moments.
std::pair<double, double> gm_variances(const GellMannStateParams& p);

enum class GmBranch { Plus, Minus };

/// rho33 solving Var A = x at fixed rho11.
double gm_rho33(double x, double rho11, GmBranch branch);

/// rho11 values for which the branch gives a positive state at Var A = x.
std::vector<Interval> gm_feasible_rho11(double x, GmBranch branch);

struct StationaryRoot {
  enum class Kind { Linear, PlusRoot, MinusRoot };
  Kind kind = Kind::Linear;
  double rho11 = 0.0;
};

/// Interior stationary points of Var B (with maximal Re rho13) on the plus
/// branch that are admissible at Var A = x.
std::vector<StationaryRoot> gm_stationary_rho11_min(double x);
/// Stationary point of Var B with Re rho13 = 0 on the plus branch.
double gm_stationary_rho11_max(double x);

/// The ten bounding arcs, in order: three upper arcs, then the lower
/// boundary from x = 1 back to the origin, then the two arcs bounding the gap
/// between the lobes at small Var A.
std::vector<CurveSegment> gm_boundary_segments();

/// Attainable Var B at Var A = x, as disjoint closed intervals (two of them
/// for x < 3/16, one otherwise).
std::vector<Interval> gm_region_intervals(double x);
double gm_min_var_B(double x);
double gm_max_var_B(double x);
bool gm_region_contains(double x, double y, double tol = 1e-9);

/// max S(A, B, rho) / Var A over plus-branch states at Var A = x with the
/// given rho11 and fraction lambda of |rho13|^2 carried by Im rho13.
double gm_schrodinger_objective(double x, double rho11, double lambda);

struct SchrodingerGap {
  double min_var_B = 0.0;
  double f = 0.0;
  double argmax_rho11 = 0.0;
  [[nodiscard]] double gap() const { return min_var_B - f; }
};

/// f(x) = max S / Var A over states with Var A = x, for x in [3/4, 1].
SchrodingerGap gm_schrodinger_gap(double x);

}  // namespace ureg
