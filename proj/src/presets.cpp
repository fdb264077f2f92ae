#include "octant/presets.hpp"

#include <cmath>
#include <numbers>

namespace octant {

namespace {

constexpr double kPi = std::numbers::pi;

// Consumes overrides so unknown keys can be reported afterwards.
class Params {
 public:
  explicit Params(std::map<std::string, double> overrides)
      : overrides_(std::move(overrides)) {}

  double get(const std::string& key, double fallback) {
    const auto it = overrides_.find(key);
    if (it == overrides_.end()) return fallback;
    const double v = it->second;
    overrides_.erase(it);
    return v;
  }

  void finish(const std::string& preset) const {
    if (!overrides_.empty()) {
      throw ConfigError("unknown override '" + overrides_.begin()->first +
                        "' for preset " + preset);
    }
  }

 private:
  std::map<std::string, double> overrides_;
};

std::vector<double> linspace(double a, double b, int n) {
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    out.push_back(n == 1 ? b : a + (b - a) * static_cast<double>(i) / (n - 1));
  }
  return out;
}

ControlSchedule rabi_schedule(Params& p) {
  ControlSchedule s;
  const double omega = p.get("omega", 0.02 / (2.0 * kPi));
  const double t_switch = p.get("t_switch", 75.0);
  s.duration = p.get("duration", 150.0);
  s.pulse1 = PulseEnvelope::piecewise({{0.0, t_switch, omega}});
  s.pulse2 = PulseEnvelope::piecewise({{t_switch, s.duration, omega}});
  return s;
}

ControlSchedule two_pulse_schedule(Params& p, const std::string& variant) {
  const double duration = p.get("duration", 1.0);
  const double area1 = p.get("area1", kPi);
  const double area2 = p.get("area2", 2.0 * kPi);
  const double sigma = p.get("sigma", duration / 8.0);
  ControlSchedule s;
  s.duration = duration;
  s.pulse1 = PulseEnvelope::constant(area1 / duration);
  if (variant == "omega2-on") {
    s.pulse2 = PulseEnvelope::gaussian_area(0.5 * duration, sigma, area2);
  } else if (variant == "omega2-off" || variant.empty()) {
    s.pulse2 = PulseEnvelope::off();
  } else {
    throw ConfigError("unknown two-pulse variant '" + variant +
                      "' (expected omega2-off or omega2-on)");
  }
  return s;
}

ControlSchedule eit_schedule(Params& p, const std::string& variant) {
  const double gamma10 = p.get("gamma10", 1.0);
  const double omega = p.get("omega", 2.0) * gamma10;
  ControlSchedule s;
  s.gamma10 = gamma10;
  s.gamma21 = p.get("gamma21", 1e-5) * gamma10;
  s.duration = p.get("duration", 40.0) / gamma10;
  s.pulse1 = PulseEnvelope::constant(omega);
  s.pulse2 = PulseEnvelope::constant(omega);
  if (variant == "detuned") {
    s.delta1 = p.get("delta1", 2.0) * gamma10;
  } else if (variant == "resonant" || variant.empty()) {
    s.delta1 = p.get("delta1", 0.0) * gamma10;
  } else {
    throw ConfigError("unknown eit variant '" + variant +
                      "' (expected resonant or detuned)");
  }
  return s;
}

ControlSchedule fwm_schedule(Params& p) {
  const double gamma10 = p.get("gamma10", 1.0);
  const double omega = p.get("omega", 10.0) * gamma10;
  const double stage = p.get("stage", 1.0) / gamma10;
  ControlSchedule s;
  s.gamma10 = gamma10;
  s.gamma21 = p.get("gamma21", 1e-3) * gamma10;
  s.duration = 3.0 * stage;
  // write: both fields on; hold: none; read: coupling only
  s.pulse1 = PulseEnvelope::piecewise({{0.0, stage, omega}});
  s.pulse2 = PulseEnvelope::piecewise({{0.0, stage, omega},
                                       {2.0 * stage, 3.0 * stage, omega}});
  return s;
}

}  // namespace

ControlSchedule preset_rabi() {
  Params p({});
  return rabi_schedule(p);
}

ControlSchedule preset_two_pulse(const std::string& variant) {
  Params p({});
  return two_pulse_schedule(p, variant);
}

ControlSchedule preset_eit(const std::string& variant) {
  Params p({});
  return eit_schedule(p, variant);
}

ControlSchedule preset_fwm() {
  Params p({});
  return fwm_schedule(p);
}

PresetRun build_preset(const PresetSpec& spec) {
  PresetRun run;
  run.name = spec.name;
  run.variant = spec.variant;
  Params params(spec.overrides);

  if (spec.name == "rabi") {
    if (!spec.variant.empty()) {
      throw ConfigError("preset rabi has no variants");
    }
    run.schedule = rabi_schedule(params);
    run.frame_times = linspace(0.0, run.schedule.duration, 9);
  } else if (spec.name == "two-pulse") {
    run.variant = spec.variant.empty() ? "omega2-off" : spec.variant;
    run.schedule = two_pulse_schedule(params, run.variant);
    run.frame_times = linspace(0.0, run.schedule.duration, 5);
  } else if (spec.name == "eit") {
    run.variant = spec.variant.empty() ? "resonant" : spec.variant;
    run.schedule = eit_schedule(params, run.variant);
    run.frame_times = linspace(0.0, run.schedule.duration, 6);
  } else if (spec.name == "fwm") {
    if (!spec.variant.empty()) {
      throw ConfigError("preset fwm has no variants");
    }
    run.schedule = fwm_schedule(params);
    const double stage = run.schedule.duration / 3.0;
    // four frames in the write stage, four from the start of the read stage
    for (double f : {0.1, 0.4, 0.7, 1.0}) run.frame_times.push_back(f * stage);
    for (double f : {2.0, 2.3, 2.6, 2.9}) run.frame_times.push_back(f * stage);
  } else {
    throw ConfigError("unknown preset '" + spec.name +
                      "' (expected rabi, two-pulse, eit or fwm)");
  }
  params.finish(spec.name);
  validate_schedule(run.schedule);

  run.initial = spec.initial ? *spec.initial
                             : pure_to_density(make_pure(1, 0, 0, 0, 0));
  return run;
}

std::vector<std::string> preset_names() {
  return {"rabi", "two-pulse", "eit", "fwm"};
}

std::string presets_listing() {
  return
      "available presets (rates quoted in Gamma10 units, times in tau10 = 1/Gamma10)\n"
      "\n"
      "rabi: (no variants)\n"
      "  sequential resonant drive of both transitions, no decay\n"
      "  omega = 0.02/(2*pi) rad/s on 0<->1 for t < 75 s, then on 1<->2 until 150 s\n"
      "  gamma10 = gamma21 = 0\n"
      "  overrides: omega, t_switch, duration\n"
      "\n"
      "two-pulse: omega2-off, omega2-on\n"
      "  constant pi pulse on 0<->1 spanning the full duration T = 1 s\n"
      "  omega2-on adds a gaussian 2*pi pulse on 1<->2 (center T/2, sigma T/8)\n"
      "  gamma10 = gamma21 = 0\n"
      "  overrides: duration, area1, area2, sigma\n"
      "\n"
      "eit: resonant, detuned\n"
      "  omega1 = omega2 = 2 Gamma10 held constant for 40 tau10\n"
      "  gamma21 = 1e-5 Gamma10; detuned variant uses delta1 = 2 Gamma10\n"
      "  Gamma10 defaults to 1 rad/s\n"
      "  overrides: gamma10, omega, gamma21, delta1, duration\n"
      "\n"
      "fwm: (no variants)\n"
      "  write / hold / read stages of one tau10 each (duration 3 tau10)\n"
      "  write: omega1 = omega2 = 10 Gamma10; read: omega2 = 10 Gamma10 only\n"
      "  gamma21 = 1e-3 Gamma10; Gamma10 defaults to 1 rad/s\n"
      "  overrides: gamma10, omega, gamma21, stage\n";
}

}  // namespace octant
