#pragma once

#include <optional>
#include <string>

#include "json.hpp"
#include "octant/dynamics.hpp"
#include "octant/pulse.hpp"
#include "octant/state.hpp"

namespace octant {

/// {"amplitudes": [a, b, g], "phases": [phi1, phi2]}
nlohmann::json pure_to_json(const PureState& state);
PureState pure_from_json(const nlohmann::json& j);

/// {"re": 3x3 row-major, "im": 3x3 row-major}
nlohmann::json density_to_json(const DensityMatrix& rho);
Matrix3c matrix_from_json(const nlohmann::json& j);

/// Accepts either state form. Pure states are converted to their projector;
/// raw matrices go through validate_density (or the lax variant).
DensityMatrix state_from_json(const nlohmann::json& j, bool lax = false);

/// Schedule JSON. Rates and times may be plain numbers (rad/s, s) or
/// unit-tagged objects {"value": v, "unit": "Gamma10" | "tau10" | "rad/s" | "s"}.
/// "gamma10" itself must be a plain rate; it anchors the unit conversions.
struct ScheduleFile {
  ControlSchedule schedule;
  std::optional<DensityMatrix> initial;
};
ScheduleFile schedule_from_json(const nlohmann::json& j);

/// CSV export: header t,rho00,rho11,rho22,R01,R02,R12,phi1,phi2,phi12,purity
/// one row per sample, 12 significant digits, empty cells where a readout is
/// undefined.
std::string trajectory_csv(const Trajectory& trajectory);

}  // namespace octant
