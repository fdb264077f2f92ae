#pragma once

#include <span>
#include <vector>

#include "octant/pulse.hpp"
#include "octant/state.hpp"

namespace octant {

/// Two-field ladder Hamiltonian in hbar = 1 units:
///   [ 0        omega1/2   0        ]
///   [ omega1/2 -delta1    omega2/2 ]
///   [ 0        omega2/2   -(delta1 + delta2) ]
Matrix3c build_hamiltonian(double omega1, double omega2, double delta1, double delta2);

/// Hamiltonian of a schedule at time t.
Matrix3c schedule_hamiltonian(const ControlSchedule& schedule, double t);

/// Right-hand side of the master equation,
///   -i [H, rho] + sum_j gamma_j (C_j rho C_j^dag - 1/2 {rho, C_j^dag C_j})
/// with collapse operators C_1 = |0><1| (rate gamma10) and C_2 = |1><2|
/// (rate gamma21). Hermitian and traceless for Hermitian input.
Matrix3c lindblad_rhs(const Matrix3c& rho, const Matrix3c& hamiltonian,
                      double gamma10, double gamma21);

struct IntegratorOptions {
  double atol = 1e-10;
  double rtol = 1e-10;
};

/// Time grid plus one density matrix per sample.
struct Trajectory {
  std::vector<double> times;
  std::vector<DensityMatrix> states;
  ControlSchedule schedule;     // metadata
  IntegratorOptions integrator; // metadata

  std::size_t size() const { return times.size(); }
  /// Index of an exactly sampled time; throws ConfigError otherwise.
  std::size_t index_of(double t) const;
};

/// Integrate the master equation with an adaptive embedded Runge-Kutta 5(4)
/// scheme (dense output at the sample times, Hermitian projection after each
/// accepted step). sample_times must be strictly increasing within
/// [0, duration]. Throws IntegrationError carrying the failing time when the
/// step size underflows or the trace drifts beyond 1e-8.
Trajectory evolve(const DensityMatrix& initial, const ControlSchedule& schedule,
                  std::span<const double> sample_times,
                  const IntegratorOptions& options = {});

/// Exact propagation for piecewise-constant schedules: per constant segment
/// the 9x9 Liouvillian is exponentiated (scaling and squaring) and applied to
/// vec(rho). Independent of the stepping integrator; used as its oracle.
/// Throws UnsupportedScheduleError for shaped (gaussian) pulses.
Trajectory evolve_oracle(const DensityMatrix& initial, const ControlSchedule& schedule,
                         std::span<const double> sample_times);

/// Integrate the Schroedinger equation for a decay-free schedule and return
/// one PureState per sample time. Throws UnsupportedScheduleError when either
/// decay rate is nonzero.
std::vector<PureState> schrodinger_evolve(const PureState& initial,
                                          const ControlSchedule& schedule,
                                          std::span<const double> sample_times,
                                          const IntegratorOptions& options = {});

}  // namespace octant
