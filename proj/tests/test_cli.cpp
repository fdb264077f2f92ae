#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "octant/cli.hpp"
#include "octant/io.hpp"
#include "test_util.hpp"

using namespace octant;
using namespace octant::test;
namespace fs = std::filesystem;

namespace {

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path fresh_dir(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("octant_test_" + name);
  fs::remove_all(dir);
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::string last_row(const std::string& csv) {
  const std::size_t end = csv.find_last_not_of('\n');
  const std::size_t start = csv.find_last_of('\n', end);
  return csv.substr(start + 1, end - start);
}

std::vector<double> row_values(const std::string& row) {
  std::vector<double> vals;
  std::stringstream ss(row);
  std::string item;
  while (std::getline(ss, item, ',')) {
    vals.push_back(item.empty() ? std::nan("") : std::stod(item));
  }
  return vals;
}

}  // namespace

TEST_CASE("presets subcommand lists the catalogue") {
  const CliResult r = run({"presets"});
  CHECK(r.code == 0);
  CHECK(r.out.find("rabi") != std::string::npos);
  CHECK(r.out.find("two-pulse") != std::string::npos);
  CHECK(r.out.find("eit: resonant, detuned") != std::string::npos);
  CHECK(r.out.find("fwm") != std::string::npos);
  CHECK(r.out.find("1e-5 Gamma10") != std::string::npos);
  CHECK(r.out.find("1e-3 Gamma10") != std::string::npos);
}

TEST_CASE("render-state validates and reports the readout") {
  const fs::path dir = fresh_dir("render");
  fs::create_directories(dir);
  const fs::path input = dir / "demo.json";
  {
    std::ofstream out(input);
    out << density_to_json(DensityMatrix{demo_mixed_matrix()}).dump();
  }
  const fs::path svg = dir / "demo.svg";

  const CliResult strict = run({"render-state", "--input", input.string(),
                                "--out", svg.string()});
  CHECK(strict.code == 2);
  CHECK(strict.err.find("positivity") != std::string::npos);

  const CliResult lax = run({"render-state", "--input", input.string(),
                             "--out", svg.string(), "--lax"});
  CHECK(lax.code == 0);
  CHECK(lax.out.find("R=0.750000") != std::string::npos);
  CHECK(lax.out.find("R=0.500000") != std::string::npos);
  CHECK(lax.out.find("R=1.000000") != std::string::npos);
  CHECK(fs::exists(svg));
  CHECK(slurp(svg).rfind("<?xml", 0) == 0);

  const CliResult ground = run({"render-state", "--state",
                                R"({"amplitudes":[1,0,0],"phases":[0,0]})",
                                "--out", (dir / "ground.svg").string()});
  CHECK(ground.code == 0);
  CHECK(ground.out.find("undefined") != std::string::npos);

  const CliResult rejected = run({"render-state", "--state",
                                  R"({"re":[[1.5,0,0],[0,-0.5,0],[0,0,0]],)"
                                  R"("im":[[0,0,0],[0,0,0],[0,0,0]]})",
                                  "--out", (dir / "bad.svg").string()});
  CHECK(rejected.code == 2);
  CHECK(rejected.err.find("positivity") != std::string::npos);

  CHECK(run({"render-state"}).code == 2);
  CHECK(run({"render-state", "--state", "{not json"}).code == 2);
}

TEST_CASE("simulate writes the advertised files") {
  const fs::path dir = fresh_dir("simulate");
  const CliResult r = run({"simulate", "--preset", "two-pulse", "--variant", "omega2-off",
                           "--frames", "3", "--out", dir.string()});
  CHECK(r.code == 0);
  CHECK(fs::exists(dir / "trajectory.csv"));
  CHECK(fs::exists(dir / "timeseries.svg"));
  CHECK(fs::exists(dir / "frame_000_0.000000.svg"));
  CHECK(fs::exists(dir / "frame_001_0.500000.svg"));
  CHECK(fs::exists(dir / "frame_002_1.000000.svg"));
  CHECK(fs::exists(dir / "scene_002_1.000000.json"));

  const auto final_vals = row_values(last_row(slurp(dir / "trajectory.csv")));
  CHECK(final_vals[0] == doctest::Approx(1.0));
  CHECK(final_vals[2] >= 0.999);  // rho11 column

  const fs::path no_extras = fresh_dir("simulate_min");
  const CliResult r2 = run({"simulate", "--preset", "two-pulse", "--frames", "2",
                            "--out", no_extras.string(), "--no-csv", "--no-scenes",
                            "--no-timeseries"});
  CHECK(r2.code == 0);
  CHECK_FALSE(fs::exists(no_extras / "trajectory.csv"));
  CHECK_FALSE(fs::exists(no_extras / "timeseries.svg"));
  CHECK(fs::exists(no_extras / "frame_001_1.000000.svg"));
}

TEST_CASE("simulate eit resonant leaves no intermediate population") {
  const fs::path dir = fresh_dir("eit");
  const CliResult r = run({"simulate", "--preset", "eit", "--variant", "resonant",
                           "--frames", "6", "--out", dir.string()});
  CHECK(r.code == 0);
  std::size_t frames = 0;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.path().filename().string().rfind("frame_", 0) == 0) ++frames;
  }
  CHECK(frames == 6);
  const auto final_vals = row_values(last_row(slurp(dir / "trajectory.csv")));
  CHECK(final_vals[2] <= 1e-3);  // rho11
  // the dark-state overlay reaches the frame SVGs and scene JSON
  CHECK(slurp(dir / "frame_005_40.000000.svg").find("#e377c2") != std::string::npos);
  CHECK(slurp(dir / "scene_005_40.000000.json").find("dark state") != std::string::npos);
}

TEST_CASE("simulate fwm defaults to eight frames split across write and read") {
  const fs::path dir = fresh_dir("fwm");
  const CliResult r = run({"simulate", "--preset", "fwm", "--out", dir.string(),
                           "--no-scenes", "--no-timeseries"});
  CHECK(r.code == 0);
  std::vector<std::string> frames;
  for (const auto& entry : fs::directory_iterator(dir)) {
    const std::string name = entry.path().filename().string();
    if (name.rfind("frame_", 0) == 0) frames.push_back(name);
  }
  CHECK(frames.size() == 8);
  std::sort(frames.begin(), frames.end());
  CHECK(frames[4] == "frame_004_2.000000.svg");  // read stage entry
}

TEST_CASE("simulate is deterministic byte for byte") {
  const fs::path a = fresh_dir("det_a");
  const fs::path b = fresh_dir("det_b");
  for (const auto& dir : {a, b}) {
    const CliResult r = run({"simulate", "--preset", "two-pulse", "--variant",
                             "omega2-on", "--frames", "4", "--out", dir.string()});
    REQUIRE(r.code == 0);
  }
  std::size_t compared = 0;
  for (const auto& entry : fs::directory_iterator(a)) {
    const fs::path twin = b / entry.path().filename();
    REQUIRE(fs::exists(twin));
    CHECK(slurp(entry.path()) == slurp(twin));
    ++compared;
  }
  CHECK(compared >= 6);
}

TEST_CASE("simulate honors overrides and the OCTANT_OUT default") {
  const fs::path dir = fresh_dir("override");
  const CliResult r = run({"simulate", "--preset", "eit", "--set", "gamma10=0.5",
                           "--frames", "2", "--out", dir.string(), "--no-scenes",
                           "--no-timeseries"});
  CHECK(r.code == 0);
  const auto final_vals = row_values(last_row(slurp(dir / "trajectory.csv")));
  CHECK(final_vals[0] == doctest::Approx(80.0));  // 40 tau10 at gamma10 = 0.5

  const fs::path env_dir = fresh_dir("envout");
  setenv("OCTANT_OUT", env_dir.c_str(), 1);
  const CliResult via_env = run({"simulate", "--preset", "two-pulse", "--frames", "2",
                                 "--no-scenes", "--no-timeseries", "--no-csv"});
  unsetenv("OCTANT_OUT");
  CHECK(via_env.code == 0);
  CHECK(fs::exists(env_dir / "frame_000_0.000000.svg"));
}

TEST_CASE("simulate configuration failures exit with code 2") {
  CHECK(run({"simulate"}).code == 2);
  CHECK(run({"simulate", "--preset", "warp"}).code == 2);
  CHECK(run({"simulate", "--preset", "eit", "--variant", "nope"}).code == 2);
  CHECK(run({"simulate", "--preset", "eit", "--set", "bogus=1"}).code == 2);
  CHECK(run({"simulate", "--preset", "eit", "--config", "x.json"}).code == 2);
  CHECK(run({"simulate", "--config", "/nonexistent/schedule.json"}).code == 2);
  CHECK(run({"simulate", "--preset", "rabi", "--frames", "0"}).code == 2);
  CHECK(run({"simulate", "--preset", "rabi", "--frames", "10,200"}).code == 2);
  CHECK(run({"unknown-subcommand"}).code == 2);
}

TEST_CASE("simulate integration failures exit with code 3") {
  const fs::path dir = fresh_dir("stiff");
  fs::create_directories(dir);
  const fs::path config = dir / "overflow.json";
  {
    std::ofstream out(config);
    out << R"({"duration": 1.0, "pulse1": 1e308})";
  }
  const CliResult r = run({"simulate", "--config", config.string(),
                           "--out", (dir / "out").string()});
  CHECK(r.code == 3);
  CHECK(r.err.find("integration failure") != std::string::npos);
}

TEST_CASE("simulate with a schedule config file") {
  const fs::path dir = fresh_dir("config");
  fs::create_directories(dir);
  const fs::path config = dir / "decay.json";
  {
    std::ofstream out(config);
    out << R"({
      "gamma10": 1.0,
      "duration": {"value": 1.0, "unit": "tau10"},
      "initial": {"amplitudes": [0, 1, 0]}
    })";
  }
  const CliResult r = run({"simulate", "--config", config.string(), "--frames", "2",
                           "--out", (dir / "out").string(), "--no-scenes",
                           "--no-timeseries"});
  CHECK(r.code == 0);
  const auto final_vals = row_values(last_row(slurp(dir / "out" / "trajectory.csv")));
  CHECK(final_vals[2] == doctest::Approx(std::exp(-1.0)).epsilon(1e-8));
}
