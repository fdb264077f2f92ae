#include "octant/state.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace octant {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kHermTol = 1e-10;
constexpr double kTraceTol = 1e-10;
constexpr double kEigFloor = -1e-9;

const complexd kI{0.0, 1.0};

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(6);
  os << v;
  return os.str();
}

void check_hermitian_trace(const Matrix3c& m) {
  if (!m.allFinite()) {
    throw ValidationError(ValidationError::Kind::state,
                          "density matrix entries must be finite");
  }
  const double herm = (m - m.adjoint()).cwiseAbs().maxCoeff();
  if (herm > kHermTol) {
    throw ValidationError(ValidationError::Kind::hermiticity,
                          "hermiticity violated: max |m - m^dag| = " + fmt(herm), herm);
  }
  const complexd tr = m.trace();
  if (std::abs(tr.imag()) > kTraceTol || tr.real() <= 0.0 ||
      tr.real() > 1.0 + kTraceTol) {
    throw ValidationError(ValidationError::Kind::trace,
                          "trace out of range (0, 1]: trace = " + fmt(tr.real()) +
                              (std::abs(tr.imag()) > kTraceTol ? " with imaginary part" : ""),
                          tr.real());
  }
}

}  // namespace

double wrap_angle(double phi) {
  double x = std::fmod(phi, kTwoPi);
  if (x < 0.0) x += kTwoPi;
  if (x >= kTwoPi) x = 0.0;
  return x;
}

Vector3c PureState::amplitudes() const {
  return Vector3c(complexd(alpha, 0.0),
                  beta * std::exp(-kI * phi1),
                  gamma * std::exp(-kI * phi2));
}

PureState make_pure(double alpha, double beta, double gamma, double phi1, double phi2) {
  if (!std::isfinite(alpha) || !std::isfinite(beta) || !std::isfinite(gamma) ||
      !std::isfinite(phi1) || !std::isfinite(phi2)) {
    throw ValidationError(ValidationError::Kind::state,
                          "pure-state parameters must be finite");
  }
  if (alpha < 0.0 || beta < 0.0 || gamma < 0.0) {
    throw ValidationError(ValidationError::Kind::state,
                          "pure-state amplitudes must be non-negative");
  }
  const double norm = std::sqrt(alpha * alpha + beta * beta + gamma * gamma);
  if (norm == 0.0) {
    throw ValidationError(ValidationError::Kind::state,
                          "invalid state: all amplitudes are zero");
  }
  return PureState{alpha / norm, beta / norm, gamma / norm,
                   wrap_angle(phi1), wrap_angle(phi2)};
}

DensityMatrix pure_to_density(const PureState& state) {
  const Vector3c v = state.amplitudes();
  return DensityMatrix{v * v.adjoint()};
}

DensityMatrix validate_density(const Matrix3c& entries) {
  check_hermitian_trace(entries);
  Eigen::SelfAdjointEigenSolver<Matrix3c> solver(
      Matrix3c(0.5 * (entries + entries.adjoint())));
  const double min_eig = solver.eigenvalues().minCoeff();
  if (min_eig < kEigFloor) {
    throw ValidationError(ValidationError::Kind::positivity,
                          "positivity violated: minimum eigenvalue = " + fmt(min_eig),
                          min_eig);
  }
  return DensityMatrix{entries};
}

DensityMatrix validate_density_lax(const Matrix3c& entries) {
  check_hermitian_trace(entries);
  for (int j = 0; j < 3; ++j) {
    const double p = entries(j, j).real();
    if (p < 0.0) {
      throw ValidationError(ValidationError::Kind::positivity,
                            "positivity violated: population rho" + std::to_string(j) +
                                std::to_string(j) + " = " + fmt(p),
                            p);
    }
  }
  return DensityMatrix{entries};
}

const PairReadout& PhaseReadout::pair(int j, int k) const {
  if (j == 0 && k == 1) return r01;
  if (j == 0 && k == 2) return r02;
  if (j == 1 && k == 2) return r12;
  throw ConfigError("no readout pair (" + std::to_string(j) + "," + std::to_string(k) + ")");
}

PhaseReadout phase_readout(const DensityMatrix& rho) {
  PhaseReadout out;
  const auto fill = [&rho](int j, int k, PairReadout& pr) {
    const double pj = rho.population(j);
    const double pk = rho.population(k);
    if (pj <= kEpsPop || pk <= kEpsPop) return;
    const complexd c = rho.m(j, k);
    pr.magnitude = std::abs(c) / std::sqrt(pj * pk);
    pr.magnitude_defined = true;
    if (std::abs(c) >= kCoherenceFloor) {
      pr.phase = wrap_angle(std::arg(c));
      pr.phase_defined = true;
    }
  };
  fill(0, 1, out.r01);
  fill(0, 2, out.r02);
  fill(1, 2, out.r12);
  return out;
}

const std::array<Matrix3c, 8>& gellmann_matrices() {
  static const std::array<Matrix3c, 8> basis = [] {
    std::array<Matrix3c, 8> lam;
    for (auto& l : lam) l = Matrix3c::Zero();
    lam[0](0, 1) = lam[0](1, 0) = 1.0;
    lam[1](0, 1) = -kI; lam[1](1, 0) = kI;
    lam[2](0, 0) = 1.0; lam[2](1, 1) = -1.0;
    lam[3](0, 2) = lam[3](2, 0) = 1.0;
    lam[4](0, 2) = -kI; lam[4](2, 0) = kI;
    lam[5](1, 2) = lam[5](2, 1) = 1.0;
    lam[6](1, 2) = -kI; lam[6](2, 1) = kI;
    const double s = 1.0 / std::sqrt(3.0);
    lam[7](0, 0) = s; lam[7](1, 1) = s; lam[7](2, 2) = -2.0 * s;
    return lam;
  }();
  return basis;
}

GellMannCoefficients gellmann_decompose(const DensityMatrix& rho) {
  GellMannCoefficients out;
  const auto& basis = gellmann_matrices();
  for (int j = 0; j < 8; ++j) {
    out.a[j] = 0.5 * (rho.m * basis[j]).trace().real();
  }
  out.identity_coeff = rho.trace_real() / 3.0;
  return out;
}

Matrix3c gellmann_compose(const GellMannCoefficients& coeffs) {
  Matrix3c m = coeffs.identity_coeff * Matrix3c::Identity();
  const auto& basis = gellmann_matrices();
  for (int j = 0; j < 8; ++j) {
    m += coeffs.a[j] * basis[j];
  }
  return m;
}

PureState dark_state(double omega1, double omega2) {
  if (!std::isfinite(omega1) || !std::isfinite(omega2)) {
    throw ValidationError(ValidationError::Kind::state,
                          "dark state requires finite drive amplitudes");
  }
  if (!(omega1 > 0.0)) {
    throw ValidationError(ValidationError::Kind::state,
                          "dark state degenerate: omega1 must be positive");
  }
  if (omega2 < 0.0) {
    throw ValidationError(ValidationError::Kind::state,
                          "dark state requires omega2 >= 0");
  }
  const double ratio = omega2 / omega1;
  const double norm = std::sqrt(ratio * ratio + 1.0);
  return PureState{ratio / norm, 0.0, 1.0 / norm, 0.0, std::numbers::pi};
}

double purity(const DensityMatrix& rho) {
  return (rho.m * rho.m).trace().real();
}

}  // namespace octant
