#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "octant/cli.hpp"
#include "octant/io.hpp"
#include "octant/presets.hpp"
#include "octant/scene.hpp"
#include "octant/svg.hpp"

#include <sstream>

namespace py = pybind11;
using namespace octant;

namespace {

Trajectory evolve_py(const DensityMatrix& initial, const ControlSchedule& schedule,
                     const std::vector<double>& sample_times, double atol, double rtol) {
  return evolve(initial, schedule, sample_times, IntegratorOptions{atol, rtol});
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "octant plots and Lindblad dynamics for three-level (qutrit) states";

  py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);
  py::register_exception<ValidationError>(m, "StateValidationError", PyExc_ValueError);
  py::register_exception<UnsupportedScheduleError>(m, "UnsupportedScheduleError",
                                                   PyExc_ValueError);
  py::register_exception<IntegrationError>(m, "IntegrationError", PyExc_RuntimeError);

  m.attr("EPS_POP") = kEpsPop;
  m.attr("EPS_HAND") = kEpsHand;
  m.attr("COHERENCE_FLOOR") = kCoherenceFloor;

  py::class_<PureState>(m, "PureState")
      .def_readonly("alpha", &PureState::alpha)
      .def_readonly("beta", &PureState::beta)
      .def_readonly("gamma", &PureState::gamma)
      .def_readonly("phi1", &PureState::phi1)
      .def_readonly("phi2", &PureState::phi2)
      .def("amplitudes", &PureState::amplitudes)
      .def("__repr__", [](const PureState& s) {
        std::ostringstream os;
        os << "PureState(alpha=" << s.alpha << ", beta=" << s.beta
           << ", gamma=" << s.gamma << ", phi1=" << s.phi1 << ", phi2=" << s.phi2 << ")";
        return os.str();
      });

  py::class_<DensityMatrix>(m, "DensityMatrix")
      .def_property_readonly("matrix",
                             [](const DensityMatrix& d) { return d.m; })
      .def("population", &DensityMatrix::population, py::arg("level"))
      .def("trace", &DensityMatrix::trace_real)
      .def("__repr__", [](const DensityMatrix& d) {
        std::ostringstream os;
        os << "DensityMatrix(populations=[" << d.population(0) << ", "
           << d.population(1) << ", " << d.population(2) << "])";
        return os.str();
      });

  py::class_<PairReadout>(m, "PairReadout")
      .def_readonly("magnitude", &PairReadout::magnitude)
      .def_readonly("magnitude_defined", &PairReadout::magnitude_defined)
      .def_readonly("phase", &PairReadout::phase)
      .def_readonly("phase_defined", &PairReadout::phase_defined);

  py::class_<PhaseReadout>(m, "PhaseReadout")
      .def_readonly("r01", &PhaseReadout::r01)
      .def_readonly("r02", &PhaseReadout::r02)
      .def_readonly("r12", &PhaseReadout::r12);

  py::class_<GellMannCoefficients>(m, "GellMannCoefficients")
      .def_readonly("a", &GellMannCoefficients::a)
      .def_readonly("identity_coeff", &GellMannCoefficients::identity_coeff);

  py::class_<PulseEnvelope>(m, "PulseEnvelope")
      .def_static("off", &PulseEnvelope::off)
      .def_static("constant", &PulseEnvelope::constant, py::arg("amplitude"))
      .def_static("piecewise",
                  [](const std::vector<std::tuple<double, double, double>>& segments) {
                    std::vector<PulseSegment> s;
                    s.reserve(segments.size());
                    for (const auto& [t0, t1, amplitude] : segments) {
                      s.push_back(PulseSegment{t0, t1, amplitude});
                    }
                    return PulseEnvelope::piecewise(std::move(s));
                  },
                  py::arg("segments"))
      .def_static("gaussian_area", &PulseEnvelope::gaussian_area, py::arg("center"),
                  py::arg("sigma"), py::arg("area"))
      .def_static("gaussian_peak", &PulseEnvelope::gaussian_peak, py::arg("center"),
                  py::arg("sigma"), py::arg("peak"))
      .def("value", &PulseEnvelope::value, py::arg("t"))
      .def("__call__", &PulseEnvelope::value, py::arg("t"))
      .def("piecewise_constant", &PulseEnvelope::piecewise_constant)
      .def("breakpoints", &PulseEnvelope::breakpoints, py::arg("duration"))
      .def("area", &PulseEnvelope::area, py::arg("duration"));

  py::class_<ControlSchedule>(m, "ControlSchedule")
      .def(py::init<>())
      .def_readwrite("pulse1", &ControlSchedule::pulse1)
      .def_readwrite("pulse2", &ControlSchedule::pulse2)
      .def_readwrite("delta1", &ControlSchedule::delta1)
      .def_readwrite("delta2", &ControlSchedule::delta2)
      .def_readwrite("gamma10", &ControlSchedule::gamma10)
      .def_readwrite("gamma21", &ControlSchedule::gamma21)
      .def_readwrite("duration", &ControlSchedule::duration);

  py::class_<Trajectory>(m, "Trajectory")
      .def_readonly("times", &Trajectory::times)
      .def_readonly("states", &Trajectory::states)
      .def("index_of", &Trajectory::index_of, py::arg("t"))
      .def("csv", [](const Trajectory& t) { return trajectory_csv(t); })
      .def("__len__", &Trajectory::size);

  py::class_<Hand>(m, "Hand")
      .def_readonly("pair", &Hand::pair)
      .def_readonly("angle", &Hand::angle)
      .def_readonly("length", &Hand::length);

  py::class_<Overlay>(m, "Overlay")
      .def_readonly("label", &Overlay::label)
      .def_readonly("tip", &Overlay::tip)
      .def_readonly("hands", &Overlay::hands);

  py::class_<SceneOptions>(m, "SceneOptions")
      .def(py::init<>())
      .def_readwrite("guides", &SceneOptions::guides)
      .def_readwrite("hand_threshold", &SceneOptions::hand_threshold);

  py::class_<OctantScene>(m, "OctantScene")
      .def_readonly("tip", &OctantScene::tip)
      .def_readonly("length", &OctantScene::length)
      .def_readonly("hands", &OctantScene::hands)
      .def_readonly("guides", &OctantScene::guides)
      .def_readonly("path", &OctantScene::path)
      .def_readonly("overlays", &OctantScene::overlays)
      .def("to_json", [](const OctantScene& s) { return scene_to_json(s); });

  py::class_<RenderStyle>(m, "RenderStyle").def(py::init<>());

  py::class_<PresetSpec>(m, "PresetSpec")
      .def(py::init([](const std::string& name, const std::string& variant,
                       const std::map<std::string, double>& overrides) {
             return PresetSpec{name, variant, overrides, std::nullopt};
           }),
           py::arg("name"), py::arg("variant") = "",
           py::arg("overrides") = std::map<std::string, double>{});

  py::class_<PresetRun>(m, "PresetRun")
      .def_readonly("name", &PresetRun::name)
      .def_readonly("variant", &PresetRun::variant)
      .def_readonly("schedule", &PresetRun::schedule)
      .def_readonly("initial", &PresetRun::initial)
      .def_readonly("frame_times", &PresetRun::frame_times);

  m.def("wrap_angle", &wrap_angle, py::arg("phi"));
  m.def("make_pure", &make_pure, py::arg("alpha"), py::arg("beta"), py::arg("gamma"),
        py::arg("phi1") = 0.0, py::arg("phi2") = 0.0);
  m.def("pure_to_density", &pure_to_density, py::arg("state"));
  m.def("validate_density", &validate_density, py::arg("entries"));
  m.def("validate_density_lax", &validate_density_lax, py::arg("entries"));
  m.def("phase_readout", &phase_readout, py::arg("rho"));
  m.def("gellmann_matrices", [] { return gellmann_matrices(); });
  m.def("gellmann_decompose", &gellmann_decompose, py::arg("rho"));
  m.def("gellmann_compose", &gellmann_compose, py::arg("coeffs"));
  m.def("dark_state", &dark_state, py::arg("omega1"), py::arg("omega2"));
  m.def("purity", &purity, py::arg("rho"));

  m.def("build_hamiltonian", &build_hamiltonian, py::arg("omega1"), py::arg("omega2"),
        py::arg("delta1") = 0.0, py::arg("delta2") = 0.0);
  m.def("schedule_hamiltonian", &schedule_hamiltonian, py::arg("schedule"), py::arg("t"));
  m.def("lindblad_rhs", &lindblad_rhs, py::arg("rho"), py::arg("hamiltonian"),
        py::arg("gamma10"), py::arg("gamma21"));
  m.def("evolve", &evolve_py, py::arg("initial"), py::arg("schedule"),
        py::arg("sample_times"), py::arg("atol") = 1e-10, py::arg("rtol") = 1e-10);
  m.def("evolve_oracle",
        [](const DensityMatrix& initial, const ControlSchedule& schedule,
           const std::vector<double>& sample_times) {
          return evolve_oracle(initial, schedule, sample_times);
        },
        py::arg("initial"), py::arg("schedule"), py::arg("sample_times"));
  m.def("schrodinger_evolve",
        [](const PureState& initial, const ControlSchedule& schedule,
           const std::vector<double>& sample_times) {
          return schrodinger_evolve(initial, schedule, sample_times);
        },
        py::arg("initial"), py::arg("schedule"), py::arg("sample_times"));

  m.def("preset_rabi", &preset_rabi);
  m.def("preset_two_pulse", &preset_two_pulse, py::arg("variant"));
  m.def("preset_eit", &preset_eit, py::arg("variant"));
  m.def("preset_fwm", &preset_fwm);
  m.def("build_preset", &build_preset, py::arg("spec"));
  m.def("preset_names", &preset_names);
  m.def("presets_listing", &presets_listing);

  m.def("scene_from_state",
        [](const DensityMatrix& rho, const SceneOptions& options,
           const std::vector<std::array<double, 3>>& history) {
          return scene_from_state(rho, options, history);
        },
        py::arg("rho"), py::arg("options") = SceneOptions{},
        py::arg("history") = std::vector<std::array<double, 3>>{});
  m.def("scene_series",
        [](const Trajectory& trajectory, const std::vector<double>& frame_times,
           const SceneOptions& options) {
          return scene_series(trajectory, frame_times, options);
        },
        py::arg("trajectory"), py::arg("frame_times"),
        py::arg("options") = SceneOptions{});
  m.def("overlay_dark_state", &overlay_dark_state, py::arg("scene"), py::arg("omega1"),
        py::arg("omega2"));
  m.def("scene_to_json", &scene_to_json, py::arg("scene"));

  m.def("project",
        [](const std::array<double, 3>& p, const RenderStyle& style) {
          return project(p, style);
        },
        py::arg("point"), py::arg("style") = RenderStyle{});
  m.def("render_scene",
        [](const OctantScene& scene, const RenderStyle& style) {
          return render_scene(scene, style);
        },
        py::arg("scene"), py::arg("style") = RenderStyle{});
  m.def("render_timeseries",
        [](const Trajectory& trajectory, const RenderStyle& style,
           const std::vector<double>& marker_times) {
          return render_timeseries(trajectory, style, marker_times);
        },
        py::arg("trajectory"), py::arg("style") = RenderStyle{},
        py::arg("marker_times") = std::vector<double>{});
  m.def("trajectory_csv", &trajectory_csv, py::arg("trajectory"));

  m.def("run_cli",
        [](const std::vector<std::string>& args) {
          std::ostringstream out, err;
          const int code = run_cli(args, out, err);
          return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"),
        "Run the command-line interface; returns (exit_code, stdout, stderr).");
}
