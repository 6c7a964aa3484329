#include <doctest.h>

#include <cmath>
#include <set>

#include "ureg/curves.hpp"

using namespace ureg;
using doctest::Approx;

TEST_CASE("uniform grid keeps exact endpoints") {
  const auto g = uniform_grid(0.1, 0.7, 7);
  REQUIRE(g.size() == 7);
  CHECK(g.front() == 0.1);
  CHECK(g.back() == 0.7);
  CHECK(g[3] == Approx(0.4));
  CHECK_THROWS_AS(uniform_grid(0.0, 1.0, 1), ContractViolation);
}

TEST_CASE("segment domain is enforced") {
  CHECK_THROWS_AS(CurveSegment::make(FormulaId::ConstantOne, {0.5, 0.2}, Scale::StdDev), ContractViolation);
  const auto seg = CurveSegment::make(FormulaId::GmLinearLower, {0.25, 13.0 / 16}, Scale::Variance);
  CHECK(seg(0.5) == Approx(0.125));
  CHECK_THROWS_AS((void)seg(0.2), ContractViolation);
  CHECK_NOTHROW((void)seg(0.25 - 1e-13));
}

TEST_CASE("formula values") {
  const double c = std::cos(M_PI / 4), s = std::sin(M_PI / 4);
  CHECK(evaluate_formula(FormulaId::QubitLower, 1.0, c, s) == Approx(1 / std::sqrt(2.0)));
  CHECK(evaluate_formula(FormulaId::QubitUpperArc, 0.5, c, s) == Approx(0.96593).epsilon(1e-5));
  CHECK(evaluate_formula(FormulaId::PriorCurved, 0.0, c, s) == Approx(std::sqrt(1 - c)));
  CHECK(evaluate_formula(FormulaId::ExtendedLower, 0.6) == Approx(0.48));
  // The two mirror roots solve t sqrt(1 - t^2) = x.
  for (double x : {0.1, 0.3, 0.45}) {
    for (FormulaId id : {FormulaId::ExtendedMirrorLow, FormulaId::ExtendedMirrorHigh}) {
      const double t = evaluate_formula(id, x);
      CHECK(t * std::sqrt(1 - t * t) == Approx(x).epsilon(1e-12));
    }
  }
  CHECK(evaluate_formula(FormulaId::GmQuadratic, 13.0 / 16) == Approx(9.0 / 32));
  CHECK(evaluate_formula(FormulaId::GmQuadratic, 15.0 / 16) == Approx(3.0 / 8));
  CHECK(evaluate_formula(FormulaId::GmSqrtFourX, 3.0 / 16) == Approx(0.25));
  // Touching point of the ell = 1/2 line with xy = 1/2 is (ell/sqrt2, 1/(ell sqrt2)).
  CHECK(evaluate_formula(FormulaId::TangentLine, 0.5 / std::sqrt(2.0), 0.5, 0.5) == Approx(std::sqrt(2.0)));
}

TEST_CASE("sampling adds domain endpoints") {
  const auto seg = CurveSegment::make(FormulaId::GmOneMinusFourX, {15.0 / 64, 0.25}, Scale::Variance);
  const auto sc = sample_segment(seg, uniform_grid(0.0, 1.0, 11));  // grid misses the domain entirely
  REQUIRE(sc.points.size() == 2);
  CHECK(sc.points.front().x == 15.0 / 64);
  CHECK(sc.points.front().y == Approx(1.0 / 16));
  CHECK(sc.points.back().y == Approx(0.0));
  const auto dense = sample_segment(seg, 50);
  CHECK(dense.points.size() == 50);
}

TEST_CASE("formula ids are unique strings") {
  std::set<std::string> seen;
  for (int k = 0; k <= static_cast<int>(FormulaId::TangentEllipse); ++k)
    CHECK(seen.insert(to_string(static_cast<FormulaId>(k))).second);
}
