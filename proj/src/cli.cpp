#include "octant/cli.hpp"

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "octant/io.hpp"
#include "octant/presets.hpp"
#include "octant/scene.hpp"
#include "octant/svg.hpp"

namespace octant {

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

std::string fmt6(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.6f", v);
  return buf;
}

json parse_json_text(const std::string& text, const std::string& what) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(what + ": " + e.what());
  }
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot read " + path.string());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const fs::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("cannot write " + path.string());
  out << content;
  if (!out) throw ConfigError("write failed for " + path.string());
}

// Inline JSON or @path indirection.
json json_argument(const std::string& arg, const std::string& what) {
  if (!arg.empty() && arg[0] == '@') {
    return parse_json_text(read_file(arg.substr(1)), what);
  }
  return parse_json_text(arg, what);
}

std::vector<double> linspace(double a, double b, int n) {
  std::vector<double> out;
  if (n <= 1) {
    out.push_back(b);
    return out;
  }
  out.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    out.push_back(a + (b - a) * static_cast<double>(i) / (n - 1));
  }
  return out;
}

double parse_double(const std::string& text, const std::string& what) {
  char* end = nullptr;
  const double v = std::strtod(text.c_str(), &end);
  if (end != text.c_str() + text.size() || text.empty()) {
    throw ConfigError(what + ": '" + text + "' is not a number");
  }
  return v;
}

// "--frames 6" or "--frames 0.5,1.0,2.5"
std::vector<double> parse_frames(const std::string& spec, double duration) {
  if (spec.find(',') == std::string::npos &&
      spec.find('.') == std::string::npos) {
    const int n = static_cast<int>(parse_double(spec, "--frames"));
    if (n < 1 || n > 10000) throw ConfigError("--frames count out of range");
    return linspace(0.0, duration, n);
  }
  std::vector<double> times;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    times.push_back(parse_double(item, "--frames"));
  }
  for (double t : times) {
    if (t < 0.0 || t > duration) {
      throw ConfigError("frame time " + fmt6(t) + " outside [0, duration]");
    }
  }
  std::sort(times.begin(), times.end());
  times.erase(std::unique(times.begin(), times.end()), times.end());
  if (times.empty()) throw ConfigError("--frames lists no times");
  return times;
}

std::map<std::string, double> parse_overrides(const std::vector<std::string>& sets) {
  std::map<std::string, double> out;
  for (const auto& kv : sets) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos || eq == 0) {
      throw ConfigError("--set expects key=value, got '" + kv + "'");
    }
    out[kv.substr(0, eq)] = parse_double(kv.substr(eq + 1), "--set " + kv.substr(0, eq));
  }
  return out;
}

void print_readout(std::ostream& out, const DensityMatrix& rho) {
  const PhaseReadout readout = phase_readout(rho);
  out << "populations: rho00=" << fmt6(rho.population(0))
      << " rho11=" << fmt6(rho.population(1))
      << " rho22=" << fmt6(rho.population(2)) << "\n";
  const auto show = [&](const char* pair, const PairReadout& pr) {
    out << "pair " << pair << ": ";
    if (!pr.magnitude_defined) {
      out << "undefined (population at or below threshold)\n";
    } else if (!pr.phase_defined) {
      out << "R=" << fmt6(pr.magnitude) << " phi=undefined\n";
    } else {
      out << "R=" << fmt6(pr.magnitude) << " phi=" << fmt6(pr.phase) << " rad\n";
    }
  };
  show("01", readout.r01);
  show("02", readout.r02);
  show("12", readout.r12);
  out << "purity: " << fmt6(purity(rho)) << "\n";
}

int cmd_render_state(const std::string& input_path, const std::string& inline_state,
                     const std::string& out_path, bool lax, std::ostream& out) {
  if (input_path.empty() == inline_state.empty()) {
    throw ConfigError("render-state needs exactly one of --input or --state");
  }
  const json j = input_path.empty()
                     ? json_argument(inline_state, "--state")
                     : parse_json_text(read_file(input_path), input_path);
  const DensityMatrix rho = state_from_json(j, lax);
  const OctantScene scene = scene_from_state(rho);
  write_file(out_path, render_scene(scene));
  print_readout(out, rho);
  out << "wrote " << out_path << "\n";
  return 0;
}

struct SimulateArgs {
  std::string preset;
  std::string variant;
  std::string config_path;
  std::string initial;
  std::string frames;
  std::string out_dir;
  std::vector<std::string> sets;
  bool csv = true;
  bool scenes = true;
  bool timeseries = true;
};

int cmd_simulate(const SimulateArgs& args, std::ostream& out) {
  if (args.preset.empty() == args.config_path.empty()) {
    throw ConfigError("simulate needs exactly one of --preset or --config");
  }

  ControlSchedule schedule;
  DensityMatrix initial = pure_to_density(make_pure(1, 0, 0, 0, 0));
  std::vector<double> frame_times;
  bool eit_overlay = false;
  double overlay_omega1 = 0.0, overlay_omega2 = 0.0;

  if (!args.preset.empty()) {
    PresetSpec spec;
    spec.name = args.preset;
    spec.variant = args.variant;
    spec.overrides = parse_overrides(args.sets);
    if (!args.initial.empty()) {
      spec.initial = state_from_json(json_argument(args.initial, "--initial"));
    }
    PresetRun run = build_preset(spec);
    schedule = run.schedule;
    initial = run.initial;
    frame_times = run.frame_times;
    if (args.preset == "eit") {
      eit_overlay = true;
      overlay_omega1 = schedule.pulse1.value(0.0);
      overlay_omega2 = schedule.pulse2.value(0.0);
    }
  } else {
    if (!args.variant.empty()) throw ConfigError("--variant requires --preset");
    if (!args.sets.empty()) throw ConfigError("--set requires --preset");
    ScheduleFile file = schedule_from_json(
        parse_json_text(read_file(args.config_path), args.config_path));
    schedule = file.schedule;
    if (!args.initial.empty()) {
      initial = state_from_json(json_argument(args.initial, "--initial"));
    } else if (file.initial) {
      initial = *file.initial;
    }
    frame_times = linspace(0.0, schedule.duration, 8);
  }

  if (!args.frames.empty()) {
    frame_times = parse_frames(args.frames, schedule.duration);
  }

  // sample grid: an even base grid merged with the frame times
  std::vector<double> samples = linspace(0.0, schedule.duration, 401);
  samples.insert(samples.end(), frame_times.begin(), frame_times.end());
  std::sort(samples.begin(), samples.end());
  samples.erase(std::unique(samples.begin(), samples.end()), samples.end());

  const Trajectory traj = evolve(initial, schedule, samples);
  std::vector<OctantScene> scenes = scene_series(traj, frame_times);
  if (eit_overlay) {
    for (auto& scene : scenes) {
      scene = overlay_dark_state(std::move(scene), overlay_omega1, overlay_omega2);
    }
  }

  fs::path dir = args.out_dir;
  if (dir.empty()) {
    if (const char* env = std::getenv("OCTANT_OUT")) dir = env;
    if (dir.empty()) dir = "octant_out";
  }
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw ConfigError("cannot create output directory " + dir.string());

  for (std::size_t i = 0; i < scenes.size(); ++i) {
    char stem[64];
    std::snprintf(stem, sizeof(stem), "%03zu_%s", i, fmt6(frame_times[i]).c_str());
    write_file(dir / ("frame_" + std::string(stem) + ".svg"),
               render_scene(scenes[i]));
    if (args.scenes) {
      write_file(dir / ("scene_" + std::string(stem) + ".json"),
                 scene_to_json(scenes[i]));
    }
  }
  if (args.csv) write_file(dir / "trajectory.csv", trajectory_csv(traj));
  if (args.timeseries) {
    write_file(dir / "timeseries.svg", render_timeseries(traj, {}, frame_times));
  }

  out << "wrote " << scenes.size() << " frame(s)";
  if (args.scenes) out << " + scene JSON";
  if (args.csv) out << " + trajectory.csv";
  if (args.timeseries) out << " + timeseries.svg";
  out << " to " << dir.string() << "\n";
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"octant plots for three-level (qutrit) states"};
  app.require_subcommand(1);

  auto* render = app.add_subcommand("render-state", "render one state as an octant SVG");
  std::string input_path, inline_state, render_out = "state.svg";
  bool lax = false;
  render->add_option("--input", input_path, "state JSON file (pure or density form)");
  render->add_option("--state", inline_state, "inline state JSON");
  render->add_option("--out", render_out, "output SVG path");
  render->add_flag("--lax", lax,
                   "skip the eigenvalue positivity check (display-only inputs)");

  auto* simulate = app.add_subcommand("simulate", "integrate a schedule and emit files");
  SimulateArgs sim;
  simulate->add_option("--preset", sim.preset, "preset name (see: octant presets)");
  simulate->add_option("--variant", sim.variant, "preset variant");
  simulate->add_option("--config", sim.config_path, "schedule JSON file");
  simulate->add_option("--initial", sim.initial, "initial state JSON (inline or @file)");
  simulate->add_option("--frames", sim.frames, "frame count or comma-separated times");
  simulate->add_option("--out", sim.out_dir, "output directory (default $OCTANT_OUT)");
  simulate->add_option("--set", sim.sets, "preset parameter override key=value")
      ->take_all();
  simulate->add_flag("--csv,!--no-csv", sim.csv, "write trajectory.csv (default on)");
  simulate->add_flag("--scenes,!--no-scenes", sim.scenes,
                     "write per-frame scene JSON (default on)");
  simulate->add_flag("--timeseries,!--no-timeseries", sim.timeseries,
                     "write timeseries.svg (default on)");

  auto* presets = app.add_subcommand("presets", "list presets and their defaults");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (render->parsed()) {
      return cmd_render_state(input_path, inline_state, render_out, lax, out);
    }
    if (simulate->parsed()) {
      return cmd_simulate(sim, out);
    }
    if (presets->parsed()) {
      out << presets_listing();
      return 0;
    }
  } catch (const IntegrationError& e) {
    err << "integration failure: " << e.what() << "\n";
    return 3;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

}  // namespace octant
