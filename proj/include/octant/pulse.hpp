#pragma once

#include <variant>
#include <vector>

#include "octant/errors.hpp"

namespace octant {

struct ConstantPulse {
  double amplitude = 0.0;  // rad/s
};

/// One piece of a piecewise-constant envelope, active on [t0, t1).
struct PulseSegment {
  double t0 = 0.0;
  double t1 = 0.0;
  double amplitude = 0.0;
};

struct PiecewisePulse {
  std::vector<PulseSegment> segments;  // sorted, non-overlapping; zero elsewhere
};

/// Gaussian envelope truncated at center +- 5 sigma. When built from an area
/// the peak is rescaled so the truncated area equals the request.
struct GaussianPulse {
  double center = 0.0;  // s
  double sigma = 1.0;   // s
  double peak = 0.0;    // rad/s
};

class PulseEnvelope {
 public:
  using Shape = std::variant<ConstantPulse, PiecewisePulse, GaussianPulse>;

  PulseEnvelope() : shape_(ConstantPulse{}) {}

  static PulseEnvelope off() { return constant(0.0); }
  static PulseEnvelope constant(double amplitude);
  static PulseEnvelope piecewise(std::vector<PulseSegment> segments);
  static PulseEnvelope gaussian_area(double center, double sigma, double area);
  static PulseEnvelope gaussian_peak(double center, double sigma, double peak);

  double value(double t) const;
  double operator()(double t) const { return value(t); }

  /// True for shapes evolve_oracle can propagate exactly.
  bool piecewise_constant() const;

  /// Discontinuity times strictly inside (0, duration), sorted ascending.
  std::vector<double> breakpoints(double duration) const;

  /// Definite integral over [0, duration].
  double area(double duration) const;

  const Shape& shape() const { return shape_; }

 private:
  explicit PulseEnvelope(Shape shape) : shape_(std::move(shape)) {}
  Shape shape_;
};

/// Drive and decay description for one run; times in seconds, rates in rad/s.
struct ControlSchedule {
  PulseEnvelope pulse1;  ///< probe, couples |0> <-> |1>
  PulseEnvelope pulse2;  ///< coupling, couples |1> <-> |2>
  double delta1 = 0.0;
  double delta2 = 0.0;
  double gamma10 = 0.0;
  double gamma21 = 0.0;
  double duration = 0.0;
};

/// Throws ConfigError for non-finite parameters, negative decay rates or a
/// non-positive duration.
void validate_schedule(const ControlSchedule& schedule);

}  // namespace octant
