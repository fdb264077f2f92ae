#include "octant/pulse.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace octant {

namespace {

constexpr double kTruncationSigmas = 5.0;

void require_finite(double v, const char* what) {
  if (!std::isfinite(v)) {
    throw ConfigError(std::string("pulse parameter not finite: ") + what);
  }
}

double gaussian_value(const GaussianPulse& g, double t) {
  const double u = (t - g.center) / g.sigma;
  if (std::abs(u) > kTruncationSigmas) return 0.0;
  return g.peak * std::exp(-0.5 * u * u);
}

// Integral of the truncated gaussian over [a, b].
double gaussian_integral(const GaussianPulse& g, double a, double b) {
  const double lo = std::max(a, g.center - kTruncationSigmas * g.sigma);
  const double hi = std::min(b, g.center + kTruncationSigmas * g.sigma);
  if (hi <= lo) return 0.0;
  const double root_half = 1.0 / std::sqrt(2.0);
  const double scale = g.peak * g.sigma * std::sqrt(std::numbers::pi / 2.0);
  return scale * (std::erf((hi - g.center) / g.sigma * root_half) -
                  std::erf((lo - g.center) / g.sigma * root_half));
}

}  // namespace

PulseEnvelope PulseEnvelope::constant(double amplitude) {
  require_finite(amplitude, "amplitude");
  return PulseEnvelope(ConstantPulse{amplitude});
}

PulseEnvelope PulseEnvelope::piecewise(std::vector<PulseSegment> segments) {
  std::sort(segments.begin(), segments.end(),
            [](const PulseSegment& a, const PulseSegment& b) { return a.t0 < b.t0; });
  double prev_end = -std::numeric_limits<double>::infinity();
  for (const auto& s : segments) {
    require_finite(s.t0, "segment t0");
    require_finite(s.t1, "segment t1");
    require_finite(s.amplitude, "segment amplitude");
    if (!(s.t0 < s.t1)) {
      throw ConfigError("pulse segment must satisfy t0 < t1");
    }
    if (s.t0 < prev_end) {
      throw ConfigError("pulse segments overlap");
    }
    prev_end = s.t1;
  }
  return PulseEnvelope(PiecewisePulse{std::move(segments)});
}

PulseEnvelope PulseEnvelope::gaussian_area(double center, double sigma, double area) {
  require_finite(center, "center");
  require_finite(sigma, "sigma");
  require_finite(area, "area");
  if (!(sigma > 0.0)) throw ConfigError("gaussian sigma must be positive");
  // Rescale so the +-5 sigma truncated area equals the requested area.
  const double truncated_fraction = std::erf(kTruncationSigmas / std::sqrt(2.0));
  const double peak =
      area / (truncated_fraction * sigma * std::sqrt(2.0 * std::numbers::pi));
  return PulseEnvelope(GaussianPulse{center, sigma, peak});
}

PulseEnvelope PulseEnvelope::gaussian_peak(double center, double sigma, double peak) {
  require_finite(center, "center");
  require_finite(sigma, "sigma");
  require_finite(peak, "peak");
  if (!(sigma > 0.0)) throw ConfigError("gaussian sigma must be positive");
  return PulseEnvelope(GaussianPulse{center, sigma, peak});
}

double PulseEnvelope::value(double t) const {
  return std::visit(
      [t](const auto& shape) -> double {
        using T = std::decay_t<decltype(shape)>;
        if constexpr (std::is_same_v<T, ConstantPulse>) {
          return shape.amplitude;
        } else if constexpr (std::is_same_v<T, PiecewisePulse>) {
          for (const auto& s : shape.segments) {
            if (t >= s.t0 && t < s.t1) return s.amplitude;
          }
          return 0.0;
        } else {
          return gaussian_value(shape, t);
        }
      },
      shape_);
}

bool PulseEnvelope::piecewise_constant() const {
  return !std::holds_alternative<GaussianPulse>(shape_);
}

std::vector<double> PulseEnvelope::breakpoints(double duration) const {
  std::vector<double> pts;
  if (const auto* pw = std::get_if<PiecewisePulse>(&shape_)) {
    for (const auto& s : pw->segments) {
      pts.push_back(s.t0);
      pts.push_back(s.t1);
    }
  } else if (const auto* g = std::get_if<GaussianPulse>(&shape_)) {
    pts.push_back(g->center - kTruncationSigmas * g->sigma);
    pts.push_back(g->center + kTruncationSigmas * g->sigma);
  }
  std::erase_if(pts, [duration](double t) { return t <= 0.0 || t >= duration; });
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

double PulseEnvelope::area(double duration) const {
  return std::visit(
      [duration](const auto& shape) -> double {
        using T = std::decay_t<decltype(shape)>;
        if constexpr (std::is_same_v<T, ConstantPulse>) {
          return shape.amplitude * duration;
        } else if constexpr (std::is_same_v<T, PiecewisePulse>) {
          double total = 0.0;
          for (const auto& s : shape.segments) {
            const double lo = std::max(0.0, s.t0);
            const double hi = std::min(duration, s.t1);
            if (hi > lo) total += s.amplitude * (hi - lo);
          }
          return total;
        } else {
          return gaussian_integral(shape, 0.0, duration);
        }
      },
      shape_);
}

void validate_schedule(const ControlSchedule& schedule) {
  if (!std::isfinite(schedule.delta1) || !std::isfinite(schedule.delta2)) {
    throw ConfigError("detunings must be finite");
  }
  if (!std::isfinite(schedule.gamma10) || schedule.gamma10 < 0.0 ||
      !std::isfinite(schedule.gamma21) || schedule.gamma21 < 0.0) {
    throw ConfigError("decay rates must be finite and non-negative");
  }
  if (!std::isfinite(schedule.duration) || !(schedule.duration > 0.0)) {
    throw ConfigError("schedule duration must be positive");
  }
}

}  // namespace octant
