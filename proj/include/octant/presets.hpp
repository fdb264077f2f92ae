#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "octant/dynamics.hpp"
#include "octant/pulse.hpp"
#include "octant/state.hpp"

namespace octant {

/// Request for one of the built-in experiment presets.
struct PresetSpec {
  std::string name;                         ///< rabi | two-pulse | eit | fwm
  std::string variant;                      ///< preset specific; empty = default
  std::map<std::string, double> overrides;  ///< per-preset parameter map
  std::optional<DensityMatrix> initial;     ///< defaults to |0><0|
};

/// A fully resolved preset: schedule, initial state and default frame times.
struct PresetRun {
  std::string name;
  std::string variant;
  ControlSchedule schedule;
  DensityMatrix initial;
  std::vector<double> frame_times;
};

ControlSchedule preset_rabi();
ControlSchedule preset_two_pulse(const std::string& variant);  // omega2-off | omega2-on
ControlSchedule preset_eit(const std::string& variant);        // resonant | detuned
ControlSchedule preset_fwm();

/// Resolve a PresetSpec (name, variant, overrides, initial state).
/// Throws ConfigError for unknown names, variants or override keys.
PresetRun build_preset(const PresetSpec& spec);

std::vector<std::string> preset_names();

/// Human-readable catalogue of presets, variants and default parameters.
std::string presets_listing();

}  // namespace octant
