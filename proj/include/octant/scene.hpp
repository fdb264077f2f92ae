#pragma once

#include <array>
#include <span>
#include <string>
#include <vector>

#include "octant/dynamics.hpp"
#include "octant/state.hpp"

namespace octant {

/// Display threshold: hands with R below this are dropped from the scene so
/// coherence decay reads as a vanishing hand. Sits above the residual R level
/// that a weak leak (gamma21 ~ 1e-5 Gamma10) sustains indefinitely.
inline constexpr double kEpsHand = 5e-3;

/// One clock hand: a coherence phase (angle from the phi = 0 reference,
/// counterclockwise) with the normalized magnitude R_jk as its length.
struct Hand {
  std::string pair;     ///< "01", "02" or "12"
  double angle = 0.0;   ///< radians in [0, 2*pi)
  double length = 0.0;  ///< R_jk in [0, 1]
};

/// Reference state drawn alongside the main state (e.g. the EIT dark state).
struct Overlay {
  std::string label;
  std::array<double, 3> tip{};
  std::vector<Hand> hands;
};

struct SceneOptions {
  bool guides = true;                  ///< dashed projection lines to the axes
  double hand_threshold = kEpsHand;
};

/// Renderer-independent description of one octant plot.
struct OctantScene {
  std::array<double, 3> tip{};  ///< (sqrt(rho00), sqrt(rho11), sqrt(rho22))
  double length = 0.0;          ///< |tip| = sqrt(Tr rho)
  std::vector<Hand> hands;
  bool guides = true;
  std::vector<std::array<double, 3>> path;
  std::vector<Overlay> overlays;
};

/// Map a state to its octant scene. history, when given, becomes the traced
/// path with the current tip appended.
OctantScene scene_from_state(const DensityMatrix& rho, const SceneOptions& options = {},
                             std::span<const std::array<double, 3>> history = {});

/// One scene per frame time; the path accumulates every trajectory tip up to
/// each frame. Frame times must be exact trajectory samples; a ConfigError
/// listing the missing times is thrown otherwise.
std::vector<OctantScene> scene_series(const Trajectory& trajectory,
                                      std::span<const double> frame_times,
                                      const SceneOptions& options = {});

/// Add the zero-detuning dark state for (omega1, omega2) as an overlay.
OctantScene overlay_dark_state(OctantScene scene, double omega1, double omega2);

/// Stable JSON form ("schema": 1).
std::string scene_to_json(const OctantScene& scene);

}  // namespace octant
