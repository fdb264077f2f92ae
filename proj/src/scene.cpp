#include "octant/scene.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "json.hpp"

namespace octant {

namespace {

std::array<double, 3> tip_of(const DensityMatrix& rho) {
  std::array<double, 3> tip;
  for (int j = 0; j < 3; ++j) {
    tip[static_cast<std::size_t>(j)] = std::sqrt(std::max(rho.population(j), 0.0));
  }
  return tip;
}

void add_hand(std::vector<Hand>& hands, const char* pair, const PairReadout& pr,
              double threshold) {
  if (!pr.magnitude_defined || !pr.phase_defined) return;
  if (pr.magnitude < threshold) return;
  hands.push_back(Hand{pair, pr.phase, pr.magnitude});
}

}  // namespace

OctantScene scene_from_state(const DensityMatrix& rho, const SceneOptions& options,
                             std::span<const std::array<double, 3>> history) {
  OctantScene scene;
  scene.tip = tip_of(rho);
  scene.length = std::sqrt(scene.tip[0] * scene.tip[0] + scene.tip[1] * scene.tip[1] +
                           scene.tip[2] * scene.tip[2]);
  const PhaseReadout readout = phase_readout(rho);
  add_hand(scene.hands, "01", readout.r01, options.hand_threshold);
  add_hand(scene.hands, "02", readout.r02, options.hand_threshold);
  add_hand(scene.hands, "12", readout.r12, options.hand_threshold);
  scene.guides = options.guides;
  scene.path.assign(history.begin(), history.end());
  scene.path.push_back(scene.tip);
  return scene;
}

std::vector<OctantScene> scene_series(const Trajectory& trajectory,
                                      std::span<const double> frame_times,
                                      const SceneOptions& options) {
  std::vector<std::size_t> indices;
  indices.reserve(frame_times.size());
  std::string missing;
  for (double t : frame_times) {
    try {
      indices.push_back(trajectory.index_of(t));
    } catch (const ConfigError&) {
      std::ostringstream os;
      os.precision(9);
      os << t;
      missing += missing.empty() ? os.str() : ", " + os.str();
    }
  }
  if (!missing.empty()) {
    throw ConfigError("frame times not sampled by the trajectory: " + missing);
  }

  std::vector<std::array<double, 3>> tips;
  tips.reserve(trajectory.size());
  for (const auto& state : trajectory.states) tips.push_back(tip_of(state));

  std::vector<OctantScene> frames;
  frames.reserve(indices.size());
  for (const std::size_t idx : indices) {
    // history = every sample before the frame; the frame tip completes it
    std::span<const std::array<double, 3>> history(tips.data(), idx);
    frames.push_back(scene_from_state(trajectory.states[idx], options, history));
  }
  return frames;
}

OctantScene overlay_dark_state(OctantScene scene, double omega1, double omega2) {
  const PureState dark = dark_state(omega1, omega2);
  Overlay overlay;
  overlay.label = "dark state";
  overlay.tip = {dark.alpha, dark.beta, dark.gamma};
  overlay.hands.push_back(Hand{"02", dark.phi2, 1.0});
  scene.overlays.push_back(std::move(overlay));
  return scene;
}

std::string scene_to_json(const OctantScene& scene) {
  nlohmann::json j;
  j["schema"] = 1;
  j["tip"] = scene.tip;
  j["length"] = scene.length;
  auto hands = nlohmann::json::array();
  for (const auto& h : scene.hands) {
    hands.push_back({{"pair", h.pair}, {"angle", h.angle}, {"length", h.length}});
  }
  j["hands"] = hands;
  j["guides"] = scene.guides;
  j["path"] = scene.path;
  auto overlays = nlohmann::json::array();
  for (const auto& o : scene.overlays) {
    auto ohands = nlohmann::json::array();
    for (const auto& h : o.hands) {
      ohands.push_back({{"pair", h.pair}, {"angle", h.angle}, {"length", h.length}});
    }
    overlays.push_back({{"label", o.label}, {"tip", o.tip}, {"hands", ohands}});
  }
  j["overlays"] = overlays;
  return j.dump(2) + "\n";
}

}  // namespace octant
