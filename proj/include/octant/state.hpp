#pragma once

#include <Eigen/Dense>
#include <array>
#include <complex>

#include "octant/errors.hpp"

namespace octant {

using complexd = std::complex<double>;
using Matrix3c = Eigen::Matrix3cd;
using Vector3c = Eigen::Vector3cd;

/// Populations at or below this give undefined phases/magnitudes for the
/// pairs they support; it separates genuine depopulation from solver noise.
inline constexpr double kEpsPop = 1e-6;

/// Coherences smaller than this have no numerically meaningful argument.
inline constexpr double kCoherenceFloor = 1e-12;

/// Wrap an angle into [0, 2*pi).
double wrap_angle(double phi);

/// Pure qutrit state (alpha, beta e^{-i phi1}, gamma e^{-i phi2}) with
/// non-negative amplitudes of unit norm and phases in [0, 2*pi).
struct PureState {
  double alpha = 1.0;
  double beta = 0.0;
  double gamma = 0.0;
  double phi1 = 0.0;
  double phi2 = 0.0;

  Vector3c amplitudes() const;
};

/// Normalize amplitudes and wrap phases. Throws ValidationError for negative
/// or all-zero amplitudes.
PureState make_pure(double alpha, double beta, double gamma, double phi1, double phi2);

/// 3x3 density matrix with basis order |0>, |1>, |2>. Use validate_density
/// for untrusted entries; operations that build states themselves keep the
/// invariants by construction.
struct DensityMatrix {
  Matrix3c m = Matrix3c::Zero();

  double population(int j) const { return m(j, j).real(); }
  double trace_real() const { return m.trace().real(); }
};

DensityMatrix pure_to_density(const PureState& state);

/// Check Hermiticity, trace and positivity; throws a ValidationError naming
/// the violated invariant and the offending quantity.
DensityMatrix validate_density(const Matrix3c& entries);

/// Like validate_density but skips the eigenvalue (positivity) test, only
/// requiring non-negative populations on the diagonal. Lets deliberately
/// idealised demonstration matrices through for display purposes.
DensityMatrix validate_density_lax(const Matrix3c& entries);

/// Normalized coherence magnitude and phase of one level pair.
struct PairReadout {
  double magnitude = 0.0;  ///< R_jk = |rho_jk| / sqrt(rho_jj rho_kk)
  bool magnitude_defined = false;
  double phase = 0.0;      ///< arg(rho_jk) wrapped to [0, 2*pi)
  bool phase_defined = false;
};

struct PhaseReadout {
  PairReadout r01, r02, r12;

  const PairReadout& pair(int j, int k) const;
};

/// Extract phases (phi1 = arg rho01, phi2 = arg rho02, phi12 = arg rho12)
/// and normalized magnitudes. A pair's magnitude is defined only when both
/// populations exceed kEpsPop; its phase additionally requires the coherence
/// to sit above kCoherenceFloor.
PhaseReadout phase_readout(const DensityMatrix& rho);

/// Coefficients of rho in the Gell-Mann basis plus the identity component.
struct GellMannCoefficients {
  std::array<double, 8> a{};   ///< a_j = Tr(rho lambda_j) / 2
  double identity_coeff = 0.0; ///< Tr(rho) / 3
};

/// The eight Gell-Mann matrices, normalized as Tr(lambda_j lambda_k) = 2 delta_jk.
const std::array<Matrix3c, 8>& gellmann_matrices();

GellMannCoefficients gellmann_decompose(const DensityMatrix& rho);

/// Exact linear reconstruction; Hermitian by construction but not
/// necessarily positive, so untrusted coefficients need validate_density.
Matrix3c gellmann_compose(const GellMannCoefficients& coeffs);

/// Zero-detuning dark state of the two-field ladder drive, proportional to
/// (omega2/omega1, 0, -1); the sign is carried as phi2 = pi. Throws for
/// omega1 = 0 where the amplitude ratio degenerates.
PureState dark_state(double omega1, double omega2);

/// Tr(rho^2); 1 for pure states, 1/3 for the maximally mixed qutrit.
double purity(const DensityMatrix& rho);

}  // namespace octant
