// Small helpers shared by the unit tests.
#pragma once

#include <cmath>
#include <cstdint>

#include "ureg/oracle.hpp"
#include "ureg/quantum_core.hpp"
#include "ureg/verify.hpp"

namespace test_support {

// Direct 3x3 arithmetic: tr(rho M) without going through the library.
inline double trace_product(const ureg::Matrix3& rho, const ureg::Matrix3& m) {
  std::complex<double> t = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int k = 0; k < 3; ++k) t += rho(i, k) * m(k, i);
  return t.real();
}

// Random valid qutrit state: V diag(p) V^dagger with V from Gram-Schmidt on
// counter-generated complex vectors.
inline ureg::Matrix3 random_qutrit(std::uint64_t seed, std::uint64_t index) {
  using ureg::Complex;
  Complex v[3][3];
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      v[i][j] = Complex(ureg::counter_uniform(seed, index, 6 * i + 2 * j) - 0.5,
                        ureg::counter_uniform(seed, index, 6 * i + 2 * j + 1) - 0.5);
  for (int i = 0; i < 3; ++i) {
    for (int k = 0; k < i; ++k) {
      Complex d = 0.0;
      for (int j = 0; j < 3; ++j) d += std::conj(v[k][j]) * v[i][j];
      for (int j = 0; j < 3; ++j) v[i][j] -= d * v[k][j];
    }
    double n = 0.0;
    for (int j = 0; j < 3; ++j) n += std::norm(v[i][j]);
    for (int j = 0; j < 3; ++j) v[i][j] /= std::sqrt(n);
  }
  double p[3], s = 0.0;
  for (int i = 0; i < 3; ++i) s += p[i] = ureg::counter_uniform(seed, index, 100 + i);
  ureg::Matrix3 rho;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      for (int i = 0; i < 3; ++i) rho(a, b) += (p[i] / s) * v[i][a] * std::conj(v[i][b]);
  return rho;
}

}  // namespace test_support
