#include "ureg/quantum_core.hpp"

#include <algorithm>
#include <sstream>

namespace ureg {

namespace {

template <std::size_t N>
SquareMatrix<N> to_matrix(const Observable& obs) {
  if constexpr (N == 2) {
    return std::get<QubitObservable>(obs).matrix();
  } else {
    return std::get<HermitianMatrix3>(obs).matrix();
  }
}

template <std::size_t N>
SquareMatrix<N> to_matrix(const DensityState& state) {
  if constexpr (N == 2) {
    return bloch_to_matrix(std::get<QubitState>(state));
  } else {
    return std::get<QutritState>(state).matrix().matrix();
  }
}

std::size_t require_same_dimension(const Observable& obs, const DensityState& state) {
  const std::size_t d = dimension(obs);
  if (d != dimension(state)) {
    std::ostringstream os;
    os << "dimension mismatch: observable acts on C^" << d << ", state on C^" << dimension(state);
    throw ContractViolation(os.str());
  }
  return d;
}

std::size_t require_same_dimension(const Observable& a, const Observable& b, const DensityState& state) {
  const std::size_t d = require_same_dimension(a, state);
  require_same_dimension(b, state);
  return d;
}

template <std::size_t N>
double expectation_n(const Observable& obs, const DensityState& state) {
  return (to_matrix<N>(state) * to_matrix<N>(obs)).trace().real();
}

template <std::size_t N>
double variance_n(const Observable& obs, const DensityState& state) {
  const auto rho = to_matrix<N>(state);
  const auto a = to_matrix<N>(obs);
  const double mean = (rho * a).trace().real();
  const double second = (rho * (a * a)).trace().real();
  return clamp_variance(second - mean * mean);
}

template <std::size_t N>
Complex commutator_n(const Observable& a, const Observable& b, const DensityState& state) {
  const auto ma = to_matrix<N>(a);
  const auto mb = to_matrix<N>(b);
  return (to_matrix<N>(state) * (ma * mb - mb * ma)).trace();
}

template <std::size_t N>
double anticommutator_n(const Observable& a, const Observable& b, const DensityState& state) {
  const auto ma = to_matrix<N>(a);
  const auto mb = to_matrix<N>(b);
  return (to_matrix<N>(state) * (ma * mb + mb * ma)).trace().real();
}

}  // namespace

Vec3 normalized(const Vec3& v) {
  const double n = norm(v);
  if (!(n > 0.0) || !std::isfinite(n)) throw ContractViolation("cannot normalize a zero or non-finite vector");
  return v * (1.0 / n);
}

const std::array<Matrix2, 3>& pauli() {
  static const std::array<Matrix2, 3> sigma = [] {
    std::array<Matrix2, 3> s{};
    s[0](0, 1) = 1.0;
    s[0](1, 0) = 1.0;
    s[1](0, 1) = Complex(0.0, -1.0);
    s[1](1, 0) = Complex(0.0, 1.0);
    s[2](0, 0) = 1.0;
    s[2](1, 1) = -1.0;
    return s;
  }();
  return sigma;
}

Matrix2 pauli_dot(const Vec3& v) {
  const auto& s = pauli();
  return s[0] * v.x + s[1] * v.y + s[2] * v.z;
}

double spectral_norm(const Matrix2& m) {
  // Largest eigenvalue of the Hermitian matrix M^dagger M.
  const Matrix2 h = m.adjoint() * m;
  const double p = h(0, 0).real();
  const double q = h(1, 1).real();
  const double off = std::norm(h(0, 1));
  const double mid = 0.5 * (p + q);
  const double rad = std::sqrt(std::max(0.0, 0.25 * (p - q) * (p - q) + off));
  return std::sqrt(std::max(0.0, mid + rad));
}

QubitObservable QubitObservable::make(const Vec3& bloch) {
  if (!bloch.finite()) throw ContractViolation("observable Bloch vector is not finite");
  if (std::abs(norm(bloch) - 1.0) > kAlgebraicTol)
    throw ContractViolation("observable Bloch vector must have unit length");
  return QubitObservable(bloch);
}

QubitState QubitState::make(const Vec3& bloch) {
  if (!bloch.finite()) throw ContractViolation("state Bloch vector is not finite");
  if (norm(bloch) > 1.0 + kAlgebraicTol) throw ContractViolation("state Bloch vector lies outside the unit ball");
  return QubitState(bloch);
}

HermitianMatrix3 HermitianMatrix3::make(const Matrix3& entries) {
  for (const auto& z : entries.m)
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) throw ContractViolation("matrix entry is not finite");
  if (entries.hermiticity_defect() > kAlgebraicTol) throw ContractViolation("matrix is not Hermitian");
  return HermitianMatrix3(entries);
}

HermitianMatrix3 HermitianMatrix3::gell_mann_a() {
  Matrix3 m;
  m(0, 0) = 1.0;
  m(1, 1) = -1.0;
  return HermitianMatrix3(m);
}

HermitianMatrix3 HermitianMatrix3::gell_mann_b() {
  Matrix3 m;
  m(0, 2) = 1.0;
  m(2, 0) = 1.0;
  return HermitianMatrix3(m);
}

double min_principal_minor(const Matrix3& m) {
  const double d0 = m(0, 0).real();
  const double d1 = m(1, 1).real();
  const double d2 = m(2, 2).real();
  const double m01 = d0 * d1 - std::norm(m(0, 1));
  const double m02 = d0 * d2 - std::norm(m(0, 2));
  const double m12 = d1 * d2 - std::norm(m(1, 2));
  const Complex det = m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
                      m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
                      m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
  return std::min({d0, d1, d2, m01, m02, m12, det.real()});
}

bool is_positive_semidefinite(const Matrix3& m, double tol) { return min_principal_minor(m) >= -tol; }

QutritState QutritState::make(const HermitianMatrix3& m) {
  const double tr = m.matrix().trace().real();
  if (std::abs(tr - 1.0) > kAlgebraicTol) throw ContractViolation("density matrix trace must equal 1");
  if (!is_positive_semidefinite(m.matrix())) throw ContractViolation("density matrix is not positive semidefinite");
  return QutritState(m);
}

QutritState QutritState::diagonal(double p11, double p22, double p33) {
  Matrix3 m;
  m(0, 0) = p11;
  m(1, 1) = p22;
  m(2, 2) = p33;
  return make(m);
}

std::string to_string(Scale s) { return s == Scale::StdDev ? "stddev" : "variance"; }

UncertaintyPoint UncertaintyPoint::make(double u1, double u2, Scale scale) {
  if (!std::isfinite(u1) || !std::isfinite(u2) || u1 < 0.0 || u2 < 0.0)
    throw ContractViolation("uncertainty values must be finite and non-negative");
  return {u1, u2, scale};
}

std::size_t dimension(const Observable& obs) { return std::holds_alternative<QubitObservable>(obs) ? 2 : 3; }
std::size_t dimension(const DensityState& state) { return std::holds_alternative<QubitState>(state) ? 2 : 3; }

Matrix2 bloch_to_matrix(const QubitState& state) {
  return (Matrix2::identity() + pauli_dot(state.bloch())) * 0.5;
}

QubitState matrix_to_bloch(const Matrix2& rho) {
  if (rho.hermiticity_defect() > kAlgebraicTol) throw ContractViolation("qubit matrix is not Hermitian");
  if (std::abs(rho.trace() - 1.0) > kAlgebraicTol) throw ContractViolation("qubit matrix trace must equal 1");
  // r_k = tr[rho sigma_k]
  const auto& s = pauli();
  return QubitState::make({(rho * s[0]).trace().real(), (rho * s[1]).trace().real(), (rho * s[2]).trace().real()});
}

double expectation(const Observable& obs, const DensityState& state) {
  return require_same_dimension(obs, state) == 2 ? expectation_n<2>(obs, state) : expectation_n<3>(obs, state);
}

double variance(const Observable& obs, const DensityState& state) {
  return require_same_dimension(obs, state) == 2 ? variance_n<2>(obs, state) : variance_n<3>(obs, state);
}

double commutator_expectation(const Observable& a, const Observable& b, const DensityState& state) {
  const Complex c = require_same_dimension(a, b, state) == 2 ? commutator_n<2>(a, b, state)
                                                            : commutator_n<3>(a, b, state);
  return std::abs(c);
}

double anticommutator_expectation(const Observable& a, const Observable& b, const DensityState& state) {
  return require_same_dimension(a, b, state) == 2 ? anticommutator_n<2>(a, b, state)
                                                  : anticommutator_n<3>(a, b, state);
}

double schrodinger_bound(const Observable& a, const Observable& b, const DensityState& state) {
  const double comm = commutator_expectation(a, b, state);
  const double cov = anticommutator_expectation(a, b, state) - 2.0 * expectation(a, state) * expectation(b, state);
  return 0.25 * comm * comm + 0.25 * cov * cov;
}

}  // namespace ureg
