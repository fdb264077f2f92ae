#include "octant/io.hpp"

#include <cstdio>

namespace octant {

namespace {

using nlohmann::json;

double require_number(const json& j, const std::string& what) {
  if (!j.is_number()) throw ConfigError(what + " must be a number");
  return j.get<double>();
}

// Plain number or {"value": v, "unit": ...}; rates in Gamma10, times in tau10.
double resolve_quantity(const json& j, double gamma10, bool is_time,
                        const std::string& what) {
  if (j.is_number()) return j.get<double>();
  if (!j.is_object() || !j.contains("value")) {
    throw ConfigError(what + " must be a number or {\"value\", \"unit\"}");
  }
  const double value = require_number(j.at("value"), what + ".value");
  const std::string unit = j.value("unit", is_time ? "s" : "rad/s");
  if (unit == "rad/s" || unit == "s") return value;
  if (unit == "Gamma10") return value * gamma10;
  if (unit == "tau10") {
    if (gamma10 <= 0.0) {
      throw ConfigError(what + ": tau10 units need a positive gamma10");
    }
    return value / gamma10;
  }
  throw ConfigError(what + ": unknown unit '" + unit + "'");
}

PulseEnvelope pulse_from_json(const json& j, double gamma10, const std::string& what) {
  if (j.is_null()) return PulseEnvelope::off();
  if (j.is_number()) return PulseEnvelope::constant(j.get<double>());
  if (!j.is_object()) throw ConfigError(what + " must be a pulse object");
  const std::string kind = j.value("kind", "constant");
  const auto rate = [&](const char* key) {
    return resolve_quantity(j.at(key), gamma10, false, what + "." + key);
  };
  const auto time = [&](const char* key) {
    return resolve_quantity(j.at(key), gamma10, true, what + "." + key);
  };
  if (kind == "constant") {
    return PulseEnvelope::constant(j.contains("amplitude") ? rate("amplitude") : 0.0);
  }
  if (kind == "piecewise" || kind == "piecewise-constant") {
    std::vector<PulseSegment> segments;
    for (const auto& js : j.value("segments", json::array())) {
      PulseSegment s;
      s.t0 = resolve_quantity(js.at("t0"), gamma10, true, what + ".segment.t0");
      s.t1 = resolve_quantity(js.at("t1"), gamma10, true, what + ".segment.t1");
      s.amplitude =
          resolve_quantity(js.at("amplitude"), gamma10, false, what + ".segment.amplitude");
      segments.push_back(s);
    }
    return PulseEnvelope::piecewise(std::move(segments));
  }
  if (kind == "gaussian") {
    const double center = time("center");
    const double sigma = time("sigma");
    if (j.contains("area") == j.contains("peak")) {
      throw ConfigError(what + ": gaussian needs exactly one of area or peak");
    }
    if (j.contains("area")) {
      return PulseEnvelope::gaussian_area(
          center, sigma, require_number(j.at("area"), what + ".area"));
    }
    return PulseEnvelope::gaussian_peak(center, sigma, rate("peak"));
  }
  throw ConfigError(what + ": unknown pulse kind '" + kind + "'");
}

std::string g12(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

}  // namespace

nlohmann::json pure_to_json(const PureState& s) {
  return json{{"amplitudes", {s.alpha, s.beta, s.gamma}}, {"phases", {s.phi1, s.phi2}}};
}

PureState pure_from_json(const json& j) {
  if (!j.is_object() || !j.contains("amplitudes")) {
    throw ConfigError("pure state JSON needs an \"amplitudes\" array");
  }
  const auto& amp = j.at("amplitudes");
  if (!amp.is_array() || amp.size() != 3) {
    throw ConfigError("\"amplitudes\" must hold three numbers");
  }
  double phi1 = 0.0, phi2 = 0.0;
  if (j.contains("phases")) {
    const auto& ph = j.at("phases");
    if (!ph.is_array() || ph.size() != 2) {
      throw ConfigError("\"phases\" must hold two numbers");
    }
    phi1 = require_number(ph.at(0), "phases[0]");
    phi2 = require_number(ph.at(1), "phases[1]");
  }
  return make_pure(require_number(amp.at(0), "amplitudes[0]"),
                   require_number(amp.at(1), "amplitudes[1]"),
                   require_number(amp.at(2), "amplitudes[2]"), phi1, phi2);
}

nlohmann::json density_to_json(const DensityMatrix& rho) {
  json re = json::array(), im = json::array();
  for (int r = 0; r < 3; ++r) {
    json row_re = json::array(), row_im = json::array();
    for (int c = 0; c < 3; ++c) {
      row_re.push_back(rho.m(r, c).real());
      row_im.push_back(rho.m(r, c).imag());
    }
    re.push_back(row_re);
    im.push_back(row_im);
  }
  return json{{"re", re}, {"im", im}};
}

Matrix3c matrix_from_json(const json& j) {
  if (!j.is_object() || !j.contains("re") || !j.contains("im")) {
    throw ConfigError("density matrix JSON needs \"re\" and \"im\" 3x3 arrays");
  }
  Matrix3c m;
  for (const char* part : {"re", "im"}) {
    const auto& rows = j.at(part);
    if (!rows.is_array() || rows.size() != 3) {
      throw ConfigError(std::string("\"") + part + "\" must be a 3x3 array");
    }
    for (int r = 0; r < 3; ++r) {
      const auto& row = rows.at(r);
      if (!row.is_array() || row.size() != 3) {
        throw ConfigError(std::string("\"") + part + "\" must be a 3x3 array");
      }
      for (int c = 0; c < 3; ++c) {
        const double v = require_number(row.at(c), std::string(part) + " entry");
        if (part[0] == 'r') {
          m(r, c) = complexd(v, 0.0);
        } else {
          m(r, c) += complexd(0.0, v);
        }
      }
    }
  }
  return m;
}

DensityMatrix state_from_json(const json& j, bool lax) {
  if (j.is_object() && j.contains("amplitudes")) {
    return pure_to_density(pure_from_json(j));
  }
  const Matrix3c m = matrix_from_json(j);
  return lax ? validate_density_lax(m) : validate_density(m);
}

ScheduleFile schedule_from_json(const json& j) {
  if (!j.is_object()) throw ConfigError("schedule JSON must be an object");
  ScheduleFile out;
  ControlSchedule& s = out.schedule;
  s.gamma10 = j.contains("gamma10") ? require_number(j.at("gamma10"), "gamma10") : 0.0;
  if (s.gamma10 < 0.0) throw ConfigError("gamma10 must be non-negative");
  const auto rate = [&](const char* key) {
    return j.contains(key) ? resolve_quantity(j.at(key), s.gamma10, false, key) : 0.0;
  };
  s.gamma21 = rate("gamma21");
  s.delta1 = rate("delta1");
  s.delta2 = rate("delta2");
  if (!j.contains("duration")) throw ConfigError("schedule needs a duration");
  s.duration = resolve_quantity(j.at("duration"), s.gamma10, true, "duration");
  s.pulse1 = pulse_from_json(j.value("pulse1", json(nullptr)), s.gamma10, "pulse1");
  s.pulse2 = pulse_from_json(j.value("pulse2", json(nullptr)), s.gamma10, "pulse2");
  validate_schedule(s);
  if (j.contains("initial")) {
    out.initial = state_from_json(j.at("initial"));
  }
  return out;
}

std::string trajectory_csv(const Trajectory& traj) {
  std::string csv = "t,rho00,rho11,rho22,R01,R02,R12,phi1,phi2,phi12,purity\n";
  for (std::size_t i = 0; i < traj.size(); ++i) {
    const DensityMatrix& rho = traj.states[i];
    const PhaseReadout readout = phase_readout(rho);
    csv += g12(traj.times[i]);
    for (int j = 0; j < 3; ++j) csv += "," + g12(rho.population(j));
    for (const PairReadout* pr : {&readout.r01, &readout.r02, &readout.r12}) {
      csv += pr->magnitude_defined ? "," + g12(pr->magnitude) : ",";
    }
    for (const PairReadout* pr : {&readout.r01, &readout.r02, &readout.r12}) {
      csv += pr->phase_defined ? "," + g12(pr->phase) : ",";
    }
    csv += "," + g12(purity(rho)) + "\n";
  }
  return csv;
}

}  // namespace octant
