#pragma once

#include <array>
#include <span>
#include <string>

#include "octant/dynamics.hpp"
#include "octant/scene.hpp"

namespace octant {

/// Deterministic styling for the SVG emitters. All lengths in px.
struct RenderStyle {
  double width = 480.0;
  double height = 480.0;
  double anchor_x = 240.0;  ///< octant origin on the canvas
  double anchor_y = 252.0;
  double scale = 150.0;     ///< px per unit of octant coordinate
  double hand_scale = 56.0; ///< px hand length at R = 1
  double stroke = 1.6;
  double font_size = 13.0;
  bool labels = true;

  std::string col_wire = "#555555";
  std::string col_vector = "#2ca02c";
  std::string col_guide = "#2ca02c";
  std::string col_path = "#ff7f0e";
  std::string col_pair01 = "#d62728";
  std::string col_pair02 = "#1f77b4";
  std::string col_pair12 = "#d4a017";
  std::string col_overlay = "#e377c2";
  std::string col_overlay_marker = "#000000";
  std::string col_reference = "#000000";
};

/// Fixed isometric projection: x toward lower-left, y toward lower-right,
/// z up. Linear in the input point.
std::array<double, 2> project(const std::array<double, 3>& point,
                              const RenderStyle& style = {});

/// Render one octant scene. Element order is fixed (wireframe, guides, path,
/// state vector, overlays, hands) and numbers use fixed 3-decimal precision,
/// so identical inputs give byte-identical output.
std::string render_scene(const OctantScene& scene, const RenderStyle& style = {});

/// Population-vs-time chart with optional dashed frame-time markers.
std::string render_timeseries(const Trajectory& trajectory, const RenderStyle& style = {},
                              std::span<const double> marker_times = {});

}  // namespace octant
