#include "octant/dynamics.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

namespace octant {

namespace {

const complexd kI{0.0, 1.0};

// Dormand-Prince 5(4) tableau.
constexpr double kA21 = 1.0 / 5;
constexpr double kA31 = 3.0 / 40, kA32 = 9.0 / 40;
constexpr double kA41 = 44.0 / 45, kA42 = -56.0 / 15, kA43 = 32.0 / 9;
constexpr double kA51 = 19372.0 / 6561, kA52 = -25360.0 / 2187,
                 kA53 = 64448.0 / 6561, kA54 = -212.0 / 729;
constexpr double kA61 = 9017.0 / 3168, kA62 = -355.0 / 33, kA63 = 46732.0 / 5247,
                 kA64 = 49.0 / 176, kA65 = -5103.0 / 18656;
constexpr double kB1 = 35.0 / 384, kB3 = 500.0 / 1113, kB4 = 125.0 / 192,
                 kB5 = -2187.0 / 6784, kB6 = 11.0 / 84;
constexpr double kC2 = 1.0 / 5, kC3 = 3.0 / 10, kC4 = 4.0 / 5, kC5 = 8.0 / 9;
// Error coefficients (5th order solution minus embedded 4th order).
constexpr double kE1 = 71.0 / 57600, kE3 = -71.0 / 16695, kE4 = 71.0 / 1920,
                 kE5 = -17253.0 / 339200, kE6 = 22.0 / 525, kE7 = -1.0 / 40;
// Dense-output coefficients.
constexpr double kD1 = -12715105075.0 / 11282082432.0;
constexpr double kD3 = 87487479700.0 / 32700410799.0;
constexpr double kD4 = -10690763975.0 / 1880347072.0;
constexpr double kD5 = 701980252875.0 / 199316789632.0;
constexpr double kD6 = -1453857185.0 / 822651844.0;
constexpr double kD7 = 69997945.0 / 29380423.0;

constexpr double kTraceDriftTol = 1e-8;
constexpr int kMaxRejections = 40;

std::string fmt_time(double t) {
  std::ostringstream os;
  os.precision(9);
  os << t;
  return os.str();
}

// Adaptive Dormand-Prince 5(4) over one smooth interval [t0, t1] with dense
// output at the requested sample times and a post-acceptance transform
// (Hermitian projection for density matrices, identity otherwise).
//
// State must support Eigen-style linear arithmetic, size(), linear indexing
// and setZero-free copy semantics (Matrix3cd and Vector3cd both do).
template <class State, class Rhs, class Project, class Emit>
void integrate_segment(double t0, double t1, State& y, const Rhs& rhs,
                       const Project& project, const IntegratorOptions& opt,
                       std::span<const double> samples, std::size_t& next_sample,
                       const Emit& emit) {
  const double span = t1 - t0;
  double t = t0;
  double h = 0.01 * span;
  State k1 = rhs(t, y);
  bool recompute_k1 = false;

  const auto error_norm = [&](const State& err, const State& y0, const State& y1) {
    double sum = 0.0;
    for (Eigen::Index i = 0; i < err.size(); ++i) {
      const double scale =
          opt.atol + opt.rtol * std::max(std::abs(y0.data()[i]), std::abs(y1.data()[i]));
      const double r = std::abs(err.data()[i]) / scale;
      sum += r * r;
    }
    return std::sqrt(sum / static_cast<double>(err.size()));
  };

  while (t < t1) {
    const double remaining = t1 - t;
    bool final_step = false;
    if (h >= remaining) {
      h = remaining;
      final_step = true;
    }
    if (recompute_k1) {
      k1 = rhs(t, y);
      recompute_k1 = false;
    }

    int rejections = 0;
    for (;;) {
      if (!(h > 0.0) || t + h == t) {
        throw IntegrationError(t, "integration step size underflow at t = " + fmt_time(t));
      }
      const State k2 = rhs(t + kC2 * h, State(y + h * (kA21 * k1)));
      const State k3 = rhs(t + kC3 * h, State(y + h * (kA31 * k1 + kA32 * k2)));
      const State k4 = rhs(t + kC4 * h, State(y + h * (kA41 * k1 + kA42 * k2 + kA43 * k3)));
      const State k5 = rhs(t + kC5 * h,
                           State(y + h * (kA51 * k1 + kA52 * k2 + kA53 * k3 + kA54 * k4)));
      const State k6 = rhs(t + h, State(y + h * (kA61 * k1 + kA62 * k2 + kA63 * k3 +
                                                 kA64 * k4 + kA65 * k5)));
      State y_new = y + h * (kB1 * k1 + kB3 * k3 + kB4 * k4 + kB5 * k5 + kB6 * k6);
      const State k7 = rhs(t + h, y_new);
      const State err = h * (kE1 * k1 + kE3 * k3 + kE4 * k4 + kE5 * k5 + kE6 * k6 + kE7 * k7);

      const double norm = error_norm(err, y, y_new);
      if (norm <= 1.0) {
        const double t_new = final_step ? t1 : t + h;
        // Dense-output polynomial for samples inside (t, t_new].
        if (next_sample < samples.size() && samples[next_sample] <= t_new) {
          const State ydiff = y_new - y;
          const State bspl = State(h * k1) - ydiff;
          const State r4 = ydiff - State(h * k7) - bspl;
          const State r5 = h * (kD1 * k1 + kD3 * k3 + kD4 * k4 + kD5 * k5 +
                                kD6 * k6 + kD7 * k7);
          while (next_sample < samples.size() && samples[next_sample] <= t_new) {
            const double theta = (samples[next_sample] - t) / h;
            State ys = y + theta * (ydiff + (1.0 - theta) * (bspl + theta * (r4 + (1.0 - theta) * r5)));
            project(ys);
            emit(samples[next_sample], ys);
            ++next_sample;
          }
        }
        y = y_new;
        project(y);
        t = t_new;
        k1 = k7;        // FSAL; invalidated by the projection only at rounding level
        recompute_k1 = final_step;
        const double grow = 0.9 * std::pow(std::max(norm, 1e-12), -0.2);
        h *= std::clamp(grow, 0.2, rejections > 0 ? 1.0 : 5.0);
        break;
      }
      final_step = false;
      if (++rejections > kMaxRejections) {
        throw IntegrationError(t, "integration tolerance failure at t = " + fmt_time(t));
      }
      h *= std::clamp(0.9 * std::pow(norm, -0.2), 0.1, 0.5);
    }
  }
}

// Piecewise envelopes are frozen to their segment value so that stage
// evaluations at segment edges never read across a discontinuity.
struct SegmentDrive {
  const PulseEnvelope* env;
  bool frozen;
  double frozen_value;

  double operator()(double t) const { return frozen ? frozen_value : env->value(t); }
};

SegmentDrive freeze(const PulseEnvelope& env, double a, double b) {
  if (std::holds_alternative<GaussianPulse>(env.shape())) {
    return SegmentDrive{&env, false, 0.0};
  }
  return SegmentDrive{&env, true, env.value(0.5 * (a + b))};
}

std::vector<double> segment_boundaries(const ControlSchedule& schedule) {
  std::vector<double> pts{0.0, schedule.duration};
  for (double t : schedule.pulse1.breakpoints(schedule.duration)) pts.push_back(t);
  for (double t : schedule.pulse2.breakpoints(schedule.duration)) pts.push_back(t);
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

void check_samples(std::span<const double> samples, double duration) {
  double prev = -1.0;
  for (double s : samples) {
    if (!(s >= 0.0) || s > duration) {
      throw ConfigError("sample time " + fmt_time(s) + " outside [0, duration]");
    }
    if (s <= prev) {
      throw ConfigError("sample times must be strictly increasing");
    }
    prev = s;
  }
}

using Matrix9c = Eigen::Matrix<complexd, 9, 9>;
using Vector9c = Eigen::Matrix<complexd, 9, 1>;

Matrix3c collapse_lower(int j) {
  Matrix3c c = Matrix3c::Zero();
  c(j - 1, j) = 1.0;  // |j-1><j|
  return c;
}

// Vectorized generator: d vec(rho)/dt = L vec(rho), column-major stacking.
Matrix9c liouvillian(const Matrix3c& h, double gamma10, double gamma21) {
  const Matrix3c id = Matrix3c::Identity();
  const auto kron = [](const Matrix3c& a, const Matrix3c& b) {
    Matrix9c out;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        out.block<3, 3>(3 * i, 3 * j) = a(i, j) * b;
    return out;
  };
  Matrix9c l = -kI * (kron(id, h) - kron(h.transpose(), id));
  const double rates[2] = {gamma10, gamma21};
  for (int j = 1; j <= 2; ++j) {
    const Matrix3c c = collapse_lower(j);
    const Matrix3c cdc = c.adjoint() * c;
    l += rates[j - 1] * (kron(c.conjugate(), c) -
                         0.5 * (kron(id, cdc) + kron(cdc.transpose(), id)));
  }
  return l;
}

}  // namespace

Matrix3c build_hamiltonian(double omega1, double omega2, double delta1, double delta2) {
  Matrix3c h = Matrix3c::Zero();
  h(0, 1) = h(1, 0) = 0.5 * omega1;
  h(1, 2) = h(2, 1) = 0.5 * omega2;
  h(1, 1) = -delta1;
  h(2, 2) = -(delta1 + delta2);
  return h;
}

Matrix3c schedule_hamiltonian(const ControlSchedule& schedule, double t) {
  return build_hamiltonian(schedule.pulse1.value(t), schedule.pulse2.value(t),
                           schedule.delta1, schedule.delta2);
}

Matrix3c lindblad_rhs(const Matrix3c& rho, const Matrix3c& hamiltonian,
                      double gamma10, double gamma21) {
  Matrix3c out = -kI * (hamiltonian * rho - rho * hamiltonian);
  const double rates[2] = {gamma10, gamma21};
  for (int j = 1; j <= 2; ++j) {
    const Matrix3c c = collapse_lower(j);
    const Matrix3c cdc = c.adjoint() * c;
    out += rates[j - 1] *
           (c * rho * c.adjoint() - 0.5 * (rho * cdc + cdc * rho));
  }
  return out;
}

std::size_t Trajectory::index_of(double t) const {
  const auto it = std::lower_bound(times.begin(), times.end(), t);
  if (it == times.end() || *it != t) {
    throw ConfigError("time " + fmt_time(t) + " is not a trajectory sample");
  }
  return static_cast<std::size_t>(it - times.begin());
}

Trajectory evolve(const DensityMatrix& initial, const ControlSchedule& schedule,
                  std::span<const double> sample_times, const IntegratorOptions& options) {
  validate_schedule(schedule);
  check_samples(sample_times, schedule.duration);

  Trajectory traj;
  traj.schedule = schedule;
  traj.integrator = options;
  traj.times.reserve(sample_times.size());
  traj.states.reserve(sample_times.size());

  const double trace0 = initial.trace_real();
  const auto emit = [&](double t, const Matrix3c& m) {
    if (std::abs(m.trace().real() - trace0) > kTraceDriftTol) {
      throw IntegrationError(t, "trace drift beyond tolerance at t = " + fmt_time(t));
    }
    traj.times.push_back(t);
    traj.states.push_back(DensityMatrix{m});
  };
  const auto project = [](Matrix3c& m) { m = 0.5 * (m + m.adjoint()).eval(); };

  Matrix3c y = initial.m;
  std::size_t next_sample = 0;
  const std::vector<double> bounds = segment_boundaries(schedule);
  for (std::size_t i = 0; i + 1 < bounds.size(); ++i) {
    const double a = bounds[i];
    const double b = bounds[i + 1];
    while (next_sample < sample_times.size() && sample_times[next_sample] <= a) {
      emit(sample_times[next_sample], y);
      ++next_sample;
    }
    if (b - a <= 0.0) continue;
    const SegmentDrive drive1 = freeze(schedule.pulse1, a, b);
    const SegmentDrive drive2 = freeze(schedule.pulse2, a, b);
    const auto rhs = [&](double t, const Matrix3c& rho) {
      return lindblad_rhs(rho,
                          build_hamiltonian(drive1(t), drive2(t), schedule.delta1,
                                            schedule.delta2),
                          schedule.gamma10, schedule.gamma21);
    };
    integrate_segment(a, b, y, rhs, project, options, sample_times, next_sample, emit);
  }
  while (next_sample < sample_times.size()) {
    emit(sample_times[next_sample], y);
    ++next_sample;
  }
  return traj;
}

Trajectory evolve_oracle(const DensityMatrix& initial, const ControlSchedule& schedule,
                         std::span<const double> sample_times) {
  validate_schedule(schedule);
  check_samples(sample_times, schedule.duration);
  if (!schedule.pulse1.piecewise_constant() || !schedule.pulse2.piecewise_constant()) {
    throw UnsupportedScheduleError(
        "evolve_oracle supports piecewise-constant pulses only");
  }

  Trajectory traj;
  traj.schedule = schedule;
  traj.times.reserve(sample_times.size());
  traj.states.reserve(sample_times.size());

  const double trace0 = initial.trace_real();
  const auto emit = [&](double t, const Matrix3c& m) {
    Matrix3c h = 0.5 * (m + m.adjoint());
    if (std::abs(h.trace().real() - trace0) > kTraceDriftTol) {
      throw IntegrationError(t, "trace drift beyond tolerance at t = " + fmt_time(t));
    }
    traj.times.push_back(t);
    traj.states.push_back(DensityMatrix{h});
  };

  Vector9c v = Eigen::Map<const Vector9c>(initial.m.data());
  std::size_t next_sample = 0;
  const std::vector<double> bounds = segment_boundaries(schedule);
  for (std::size_t i = 0; i + 1 < bounds.size(); ++i) {
    const double a = bounds[i];
    const double b = bounds[i + 1];
    while (next_sample < sample_times.size() && sample_times[next_sample] <= a) {
      emit(sample_times[next_sample], Eigen::Map<const Matrix3c>(v.data()));
      ++next_sample;
    }
    if (b - a <= 0.0) continue;
    const double mid = 0.5 * (a + b);
    const Matrix9c gen = liouvillian(
        build_hamiltonian(schedule.pulse1.value(mid), schedule.pulse2.value(mid),
                          schedule.delta1, schedule.delta2),
        schedule.gamma10, schedule.gamma21);
    double cursor = a;
    while (next_sample < sample_times.size() && sample_times[next_sample] <= b) {
      const double ts = sample_times[next_sample];
      v = (Matrix9c(gen * (ts - cursor)).exp() * v).eval();
      cursor = ts;
      emit(ts, Eigen::Map<const Matrix3c>(v.data()));
      ++next_sample;
    }
    v = (Matrix9c(gen * (b - cursor)).exp() * v).eval();
  }
  return traj;
}

std::vector<PureState> schrodinger_evolve(const PureState& initial,
                                          const ControlSchedule& schedule,
                                          std::span<const double> sample_times,
                                          const IntegratorOptions& options) {
  validate_schedule(schedule);
  check_samples(sample_times, schedule.duration);
  if (schedule.gamma10 != 0.0 || schedule.gamma21 != 0.0) {
    throw UnsupportedScheduleError(
        "schrodinger_evolve requires zero decay rates (use evolve)");
  }

  std::vector<PureState> out;
  out.reserve(sample_times.size());
  const auto to_pure = [](const Vector3c& v) {
    // Gauge away the global phase on the first populated component so the
    // result matches the (alpha, beta e^{-i phi1}, gamma e^{-i phi2}) form.
    int ref = 0;
    while (ref < 2 && std::abs(v(ref)) <= kCoherenceFloor) ++ref;
    const complexd g = v(ref) / std::abs(v(ref));
    const Vector3c w = v * std::conj(g);
    return make_pure(std::abs(w(0)), std::abs(w(1)), std::abs(w(2)),
                     -std::arg(w(1)), -std::arg(w(2)));
  };
  const auto emit = [&](double, const Vector3c& v) { out.push_back(to_pure(v)); };
  const auto project = [](Vector3c&) {};

  Vector3c y = initial.amplitudes();
  std::size_t next_sample = 0;
  const std::vector<double> bounds = segment_boundaries(schedule);
  for (std::size_t i = 0; i + 1 < bounds.size(); ++i) {
    const double a = bounds[i];
    const double b = bounds[i + 1];
    while (next_sample < sample_times.size() && sample_times[next_sample] <= a) {
      emit(sample_times[next_sample], y);
      ++next_sample;
    }
    if (b - a <= 0.0) continue;
    const SegmentDrive drive1 = freeze(schedule.pulse1, a, b);
    const SegmentDrive drive2 = freeze(schedule.pulse2, a, b);
    const auto rhs = [&](double t, const Vector3c& psi) {
      return Vector3c(-kI * (build_hamiltonian(drive1(t), drive2(t), schedule.delta1,
                                               schedule.delta2) *
                             psi));
    };
    integrate_segment(a, b, y, rhs, project, options, sample_times, next_sample, emit);
  }
  while (next_sample < sample_times.size()) {
    emit(sample_times[next_sample], y);
    ++next_sample;
  }
  return out;
}

}  // namespace octant
