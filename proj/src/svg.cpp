#include "octant/svg.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

namespace octant {

namespace {

// Fixed 3-decimal formatting keeps the output byte-deterministic.
std::string fmt3(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3f", v);
  std::string s(buf);
  if (s == "-0.000") s = "0.000";
  return s;
}

std::string attr_xy(const char* xa, const char* ya, const std::array<double, 2>& p) {
  return std::string(xa) + "=\"" + fmt3(p[0]) + "\" " + ya + "=\"" + fmt3(p[1]) + "\"";
}

void line(std::ostringstream& os, const std::array<double, 2>& a,
          const std::array<double, 2>& b, const std::string& color, double width,
          const char* extra = "") {
  os << "<line " << attr_xy("x1", "y1", a) << " " << attr_xy("x2", "y2", b)
     << " stroke=\"" << color << "\" stroke-width=\"" << fmt3(width) << "\"" << extra
     << "/>\n";
}

void polyline(std::ostringstream& os, const std::vector<std::array<double, 2>>& pts,
              const std::string& color, double width, const char* extra = "") {
  os << "<polyline points=\"";
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (i) os << " ";
    os << fmt3(pts[i][0]) << "," << fmt3(pts[i][1]);
  }
  os << "\" fill=\"none\" stroke=\"" << color << "\" stroke-width=\"" << fmt3(width)
     << "\"" << extra << "/>\n";
}

void text(std::ostringstream& os, const std::array<double, 2>& p, double size,
          const std::string& content, const char* extra = "") {
  os << "<text " << attr_xy("x", "y", p) << " font-family=\"Helvetica,Arial,sans-serif\""
     << " font-size=\"" << fmt3(size) << "\"" << extra << ">" << content << "</text>\n";
}

// Screen direction of a hand angle: 0 points up, angles grow counterclockwise.
std::array<double, 2> hand_direction(double angle) {
  return {-std::sin(angle), -std::cos(angle)};
}

void draw_hands(std::ostringstream& os, const std::array<double, 2>& anchor,
                const std::vector<Hand>& hands, const RenderStyle& st,
                bool overlay_palette) {
  // phi = 0 reference tick
  line(os, anchor,
       {anchor[0], anchor[1] - st.hand_scale}, st.col_reference, 0.8 * st.stroke);
  for (const auto& h : hands) {
    const std::array<double, 2> dir = hand_direction(h.angle);
    const double len = st.hand_scale * h.length;
    std::string color = st.col_overlay;
    if (!overlay_palette) {
      color = h.pair == "01" ? st.col_pair01
            : h.pair == "02" ? st.col_pair02
                             : st.col_pair12;
    }
    line(os, anchor, {anchor[0] + len * dir[0], anchor[1] + len * dir[1]}, color,
         1.6 * st.stroke, " stroke-linecap=\"round\"");
  }
}

}  // namespace

std::array<double, 2> project(const std::array<double, 3>& point, const RenderStyle& style) {
  const double half_root3 = 0.5 * std::sqrt(3.0);
  const double u = half_root3 * (point[1] - point[0]);
  const double v = 0.5 * (point[0] + point[1]) - point[2];
  return {style.anchor_x + style.scale * u, style.anchor_y + style.scale * v};
}

std::string render_scene(const OctantScene& scene, const RenderStyle& st) {
  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << fmt3(st.width)
     << "\" height=\"" << fmt3(st.height) << "\" viewBox=\"0 0 " << fmt3(st.width) << " "
     << fmt3(st.height) << "\">\n";
  os << "<rect x=\"0\" y=\"0\" width=\"" << fmt3(st.width) << "\" height=\""
     << fmt3(st.height) << "\" fill=\"#ffffff\"/>\n";

  const std::array<double, 3> ex{1, 0, 0}, ey{0, 1, 0}, ez{0, 0, 1};
  const std::array<double, 2> origin = project({0, 0, 0}, st);

  // wireframe: axes and the three quarter arcs between axis endpoints
  for (const auto& axis : {ex, ey, ez}) {
    line(os, origin, project(axis, st), st.col_wire, st.stroke);
  }
  const auto arc = [&](const std::array<double, 3>& a, const std::array<double, 3>& b) {
    std::vector<std::array<double, 2>> pts;
    constexpr int kArcPoints = 33;
    for (int i = 0; i < kArcPoints; ++i) {
      const double u = 0.5 * std::numbers::pi * i / (kArcPoints - 1);
      const double ca = std::cos(u), cb = std::sin(u);
      pts.push_back(project({ca * a[0] + cb * b[0], ca * a[1] + cb * b[1],
                             ca * a[2] + cb * b[2]}, st));
    }
    polyline(os, pts, st.col_wire, 0.8 * st.stroke);
  };
  arc(ex, ey);
  arc(ex, ez);
  arc(ey, ez);

  if (st.labels) {
    const auto label = [&](const std::array<double, 3>& axis, const std::string& s) {
      std::array<double, 3> pos{1.13 * axis[0], 1.13 * axis[1], 1.08 * axis[2]};
      text(os, project(pos, st), st.font_size, s, " text-anchor=\"middle\"");
    };
    label(ex, "|0&#x27E9; (x)");
    label(ey, "|1&#x27E9; (y)");
    label(ez, "|2&#x27E9; (z)");
  }

  // dashed guides from the tip to each axis
  if (scene.guides && scene.length > 0.0) {
    const std::array<double, 2> tip_px = project(scene.tip, st);
    for (const std::array<double, 3>& foot :
         {std::array<double, 3>{scene.tip[0], 0, 0}, {0, scene.tip[1], 0},
          {0, 0, scene.tip[2]}}) {
      line(os, tip_px, project(foot, st), st.col_guide, 0.7 * st.stroke,
           " stroke-dasharray=\"4,4\" opacity=\"0.65\"");
    }
  }

  // traced path
  if (scene.path.size() >= 2) {
    std::vector<std::array<double, 2>> pts;
    pts.reserve(scene.path.size());
    for (const auto& p : scene.path) pts.push_back(project(p, st));
    polyline(os, pts, st.col_path, st.stroke, " stroke-dasharray=\"5,4\"");
  }

  // state vector and tip marker (omitted for a stateless scene)
  const std::array<double, 2> tip_px = project(scene.tip, st);
  if (scene.length > 0.0) {
    line(os, origin, tip_px, st.col_vector, 1.4 * st.stroke);
    os << "<circle " << attr_xy("cx", "cy", tip_px) << " r=\"" << fmt3(3.2)
       << "\" fill=\"" << st.col_vector << "\"/>\n";
  }

  // overlays: vector, diamond marker and overlay hands
  for (const auto& o : scene.overlays) {
    const std::array<double, 2> op = project(o.tip, st);
    line(os, origin, op, st.col_overlay_marker, 0.9 * st.stroke);
    const double r = 5.0;
    os << "<path d=\"M " << fmt3(op[0]) << " " << fmt3(op[1] - r) << " L "
       << fmt3(op[0] + r) << " " << fmt3(op[1]) << " L " << fmt3(op[0]) << " "
       << fmt3(op[1] + r) << " L " << fmt3(op[0] - r) << " " << fmt3(op[1])
       << " Z\" fill=\"none\" stroke=\"" << st.col_overlay_marker << "\" stroke-width=\""
       << fmt3(st.stroke) << "\"/>\n";
    draw_hands(os, op, o.hands, st, true);
  }

  // clock hands with the phi = 0 reference tick
  if (!scene.hands.empty()) {
    draw_hands(os, tip_px, scene.hands, st, false);
  }

  os << "</svg>\n";
  return os.str();
}

std::string render_timeseries(const Trajectory& traj, const RenderStyle& st,
                              std::span<const double> marker_times) {
  const double width = 640.0, height = 360.0;
  const double ml = 58.0, mr = 16.0, mt = 20.0, mb = 42.0;
  const double t0 = traj.times.empty() ? 0.0 : traj.times.front();
  double t1 = traj.times.empty() ? 1.0 : traj.times.back();
  if (t1 <= t0) t1 = t0 + 1.0;
  const double ymax = 1.02;

  const auto px = [&](double t) { return ml + (width - ml - mr) * (t - t0) / (t1 - t0); };
  const auto py = [&](double v) {
    return mt + (height - mt - mb) * (1.0 - v / ymax);
  };

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << fmt3(width)
     << "\" height=\"" << fmt3(height) << "\" viewBox=\"0 0 " << fmt3(width) << " "
     << fmt3(height) << "\">\n";
  os << "<rect x=\"0\" y=\"0\" width=\"" << fmt3(width) << "\" height=\"" << fmt3(height)
     << "\" fill=\"#ffffff\"/>\n";

  // axes
  line(os, {ml, py(0.0)}, {width - mr, py(0.0)}, "#333333", 1.2);
  line(os, {ml, py(0.0)}, {ml, mt}, "#333333", 1.2);
  for (double v : {0.0, 0.5, 1.0}) {
    line(os, {ml - 4, py(v)}, {ml, py(v)}, "#333333", 1.2);
    text(os, {ml - 8, py(v) + 4}, st.font_size * 0.85, fmt3(v), " text-anchor=\"end\"");
  }
  for (double tv : {t0, 0.5 * (t0 + t1), t1}) {
    line(os, {px(tv), py(0.0)}, {px(tv), py(0.0) + 4}, "#333333", 1.2);
    text(os, {px(tv), py(0.0) + 18}, st.font_size * 0.85, fmt3(tv),
         " text-anchor=\"middle\"");
  }
  text(os, {0.5 * width, height - 6}, st.font_size, "t (s)", " text-anchor=\"middle\"");

  // frame-time markers, lettered
  for (std::size_t i = 0; i < marker_times.size(); ++i) {
    const double x = px(marker_times[i]);
    line(os, {x, py(0.0)}, {x, mt}, "#000000", 0.9, " stroke-dasharray=\"4,4\"");
    const std::string letter = i < 26 ? std::string(1, static_cast<char>('A' + i))
                                      : std::to_string(i + 1);
    text(os, {x, mt - 5}, st.font_size * 0.85, letter, " text-anchor=\"middle\"");
  }

  // population curves
  const std::string colors[3] = {"#2ca02c", "#d62728", "#1f77b4"};
  const char* names[3] = {"rho00", "rho11", "rho22"};
  for (int level = 0; level < 3; ++level) {
    std::vector<std::array<double, 2>> pts;
    pts.reserve(traj.size());
    for (std::size_t i = 0; i < traj.size(); ++i) {
      pts.push_back({px(traj.times[i]), py(traj.states[i].population(level))});
    }
    if (pts.size() >= 2) polyline(os, pts, colors[level], 1.8);
  }

  // legend
  for (int level = 0; level < 3; ++level) {
    const double lx = width - mr - 150.0, ly = mt + 16.0 * level + 10.0;
    line(os, {lx, ly - 4}, {lx + 24, ly - 4}, colors[level], 2.2);
    text(os, {lx + 30, ly}, st.font_size * 0.9, names[level]);
  }

  os << "</svg>\n";
  return os.str();
}

}  // namespace octant
