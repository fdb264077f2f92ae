#pragma once

#include <numbers>
#include <random>

#include "octant/state.hpp"

namespace octant::test {

inline constexpr double kPi = std::numbers::pi;

/// Equal-amplitude superposition with phi1 = pi/2, phi2 = 3*pi/4.
inline PureState equal_superposition() {
  return make_pure(1.0, 1.0, 1.0, kPi / 2.0, 3.0 * kPi / 4.0);
}

/// Showcase mixed matrix: equal populations 1/3, coherences
/// (3/4) e^{i pi/2}, (1/2) e^{i 3pi/4} and e^{i pi/4} (times 1/3).
/// Hermitian with unit trace but not positive semidefinite (its smallest
/// eigenvalue is about -0.0157), so it is display-only material.
inline Matrix3c demo_mixed_matrix() {
  const complexd i{0.0, 1.0};
  Matrix3c m;
  m(0, 0) = m(1, 1) = m(2, 2) = 1.0;
  m(0, 1) = 0.75 * std::exp(i * (kPi / 2.0));
  m(0, 2) = 0.50 * std::exp(i * (3.0 * kPi / 4.0));
  m(1, 2) = std::exp(i * (kPi / 4.0));
  m(1, 0) = std::conj(m(0, 1));
  m(2, 0) = std::conj(m(0, 2));
  m(2, 1) = std::conj(m(1, 2));
  return m / 3.0;
}

inline DensityMatrix random_density(std::mt19937& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Matrix3c a;
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) {
      a(r, c) = complexd(normal(rng), normal(rng));
    }
  }
  Matrix3c rho = a * a.adjoint();
  rho /= rho.trace().real();
  return DensityMatrix{rho};
}

inline PureState random_pure(std::mt19937& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  std::uniform_real_distribution<double> phase(0.0, 2.0 * kPi);
  return make_pure(std::abs(normal(rng)), std::abs(normal(rng)), std::abs(normal(rng)),
                   phase(rng), phase(rng));
}

/// Random pure state with every population comfortably above kEpsPop.
inline PureState random_populated_pure(std::mt19937& rng) {
  std::uniform_real_distribution<double> amp(0.1, 1.0);
  std::uniform_real_distribution<double> phase(0.0, 2.0 * kPi);
  return make_pure(amp(rng), amp(rng), amp(rng), phase(rng), phase(rng));
}

}  // namespace octant::test
