// quantum_core.hpp
// Qubit and qutrit states and observables: moments, commutator algebra and
// the Schrodinger bound. Everything here is a small immutable value type.

#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <variant>

namespace ureg {

using Complex = std::complex<double>;

/// Raised when a caller breaks an operation's precondition.
class ContractViolation : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Tolerances shared across the library.
inline constexpr double kAlgebraicTol = 1e-12;
inline constexpr double kPositivityTol = 1e-10;
inline constexpr double kEnvelopeTol = 5e-3;

struct Vec3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  constexpr Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
  constexpr Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
  constexpr Vec3 operator-() const { return {-x, -y, -z}; }
  constexpr Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
  friend constexpr Vec3 operator*(double s, const Vec3& v) { return v * s; }
  constexpr bool operator==(const Vec3&) const = default;

  [[nodiscard]] bool finite() const {
    return std::isfinite(x) && std::isfinite(y) && std::isfinite(z);
  }
};

constexpr double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
constexpr Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
inline double norm(const Vec3& v) { return std::sqrt(dot(v, v)); }
Vec3 normalized(const Vec3& v);

/// Dense N x N complex matrix, row-major.
template <std::size_t N>
struct SquareMatrix {
  std::array<Complex, N * N> m{};

  Complex& operator()(std::size_t i, std::size_t j) { return m[i * N + j]; }
  const Complex& operator()(std::size_t i, std::size_t j) const { return m[i * N + j]; }

  static SquareMatrix identity() {
    SquareMatrix r;
    for (std::size_t i = 0; i < N; ++i) r(i, i) = 1.0;
    return r;
  }

  SquareMatrix operator+(const SquareMatrix& o) const {
    SquareMatrix r;
    for (std::size_t k = 0; k < N * N; ++k) r.m[k] = m[k] + o.m[k];
    return r;
  }
  SquareMatrix operator-(const SquareMatrix& o) const {
    SquareMatrix r;
    for (std::size_t k = 0; k < N * N; ++k) r.m[k] = m[k] - o.m[k];
    return r;
  }
  SquareMatrix operator*(Complex s) const {
    SquareMatrix r;
    for (std::size_t k = 0; k < N * N; ++k) r.m[k] = m[k] * s;
    return r;
  }
  SquareMatrix operator*(const SquareMatrix& o) const {
    SquareMatrix r;
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t k = 0; k < N; ++k) {
        const Complex aik = (*this)(i, k);
        for (std::size_t j = 0; j < N; ++j) r(i, j) += aik * o(k, j);
      }
    return r;
  }

  [[nodiscard]] Complex trace() const {
    Complex t = 0.0;
    for (std::size_t i = 0; i < N; ++i) t += (*this)(i, i);
    return t;
  }

  [[nodiscard]] SquareMatrix adjoint() const {
    SquareMatrix r;
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = 0; j < N; ++j) r(i, j) = std::conj((*this)(j, i));
    return r;
  }

  /// Largest entrywise deviation from Hermiticity.
  [[nodiscard]] double hermiticity_defect() const {
    double worst = 0.0;
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = 0; j < N; ++j)
        worst = std::max(worst, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
    return worst;
  }
};

using Matrix2 = SquareMatrix<2>;
using Matrix3 = SquareMatrix<3>;

/// Pauli matrices sigma_x, sigma_y, sigma_z.
const std::array<Matrix2, 3>& pauli();
/// v . sigma
Matrix2 pauli_dot(const Vec3& v);
/// Largest singular value of a 2x2 matrix.
double spectral_norm(const Matrix2& m);

/// A sharp +-1 valued qubit observable a . sigma with unit Bloch vector a.
class QubitObservable {
 public:
  static QubitObservable make(const Vec3& bloch);
  static QubitObservable sigma_x() { return make({1, 0, 0}); }
  static QubitObservable sigma_y() { return make({0, 1, 0}); }
  static QubitObservable sigma_z() { return make({0, 0, 1}); }

  [[nodiscard]] const Vec3& bloch() const { return bloch_; }
  [[nodiscard]] Matrix2 matrix() const { return pauli_dot(bloch_); }

 private:
  explicit QubitObservable(const Vec3& b) : bloch_(b) {}
  Vec3 bloch_;
};

/// rho = (I + r . sigma) / 2 with |r| <= 1.
class QubitState {
 public:
  static QubitState make(const Vec3& bloch);
  static QubitState maximally_mixed() { return make({0, 0, 0}); }

  [[nodiscard]] const Vec3& bloch() const { return bloch_; }
  [[nodiscard]] bool is_pure(double tol = 1e-12) const { return std::abs(norm(bloch_) - 1.0) <= tol; }

 private:
  explicit QubitState(const Vec3& b) : bloch_(b) {}
  Vec3 bloch_;
};

class HermitianMatrix3 {
 public:
  static HermitianMatrix3 make(const Matrix3& entries);
  /// diag(1, -1, 0)
  static HermitianMatrix3 gell_mann_a();
  /// the symmetric 1 <-> 3 flip
  static HermitianMatrix3 gell_mann_b();

  [[nodiscard]] const Matrix3& matrix() const { return m_; }
  const Complex& operator()(std::size_t i, std::size_t j) const { return m_(i, j); }

 private:
  explicit HermitianMatrix3(const Matrix3& m) : m_(m) {}
  Matrix3 m_;
};

/// Trace-one positive semidefinite 3x3 density matrix.
class QutritState {
 public:
  static QutritState make(const HermitianMatrix3& m);
  static QutritState make(const Matrix3& m) { return make(HermitianMatrix3::make(m)); }
  static QutritState diagonal(double p11, double p22, double p33);

  [[nodiscard]] const HermitianMatrix3& matrix() const { return m_; }
  const Complex& operator()(std::size_t i, std::size_t j) const { return m_(i, j); }

 private:
  explicit QutritState(const HermitianMatrix3& m) : m_(m) {}
  HermitianMatrix3 m_;
};

/// Smallest principal minor of a Hermitian 3x3 matrix (all seven of them).
double min_principal_minor(const Matrix3& m);
bool is_positive_semidefinite(const Matrix3& m, double tol = kPositivityTol);

enum class Scale { StdDev, Variance };
std::string to_string(Scale s);

struct UncertaintyPoint {
  double u1 = 0.0;
  double u2 = 0.0;
  Scale scale = Scale::StdDev;

  static UncertaintyPoint make(double u1, double u2, Scale scale);
};

using Observable = std::variant<QubitObservable, HermitianMatrix3>;
using DensityState = std::variant<QubitState, QutritState>;

/// Dimension of the Hilbert space the value acts on.
std::size_t dimension(const Observable& obs);
std::size_t dimension(const DensityState& state);

Matrix2 bloch_to_matrix(const QubitState& state);
QubitState matrix_to_bloch(const Matrix2& rho);

/// tr[rho A]
double expectation(const Observable& obs, const DensityState& state);
/// <A^2> - <A>^2, clamped to zero when within -1e-12 of it.
double variance(const Observable& obs, const DensityState& state);
inline double std_dev(const Observable& obs, const DensityState& state) {
  return std::sqrt(variance(obs, state));
}
/// |tr[rho (AB - BA)]|
double commutator_expectation(const Observable& a, const Observable& b, const DensityState& state);
/// tr[rho (AB + BA)]
double anticommutator_expectation(const Observable& a, const Observable& b, const DensityState& state);
/// 1/4 |<[A,B]>|^2 + 1/4 (<{A,B}> - 2<A><B>)^2
double schrodinger_bound(const Observable& a, const Observable& b, const DensityState& state);

/// Clamp tiny negative round-off to zero; larger negatives are left alone.
inline double clamp_variance(double v) { return (v < 0.0 && v >= -kAlgebraicTol) ? 0.0 : v; }

}  // namespace ureg
