#include "ocean/scenario.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace ocean {

using nlohmann::json;

TriMesh MeshSource::load(const std::string& base_dir) const {
  if (!path.empty()) {
    std::string full = path;
    if (!path.empty() && path[0] != '/' && !base_dir.empty()) full = base_dir + "/" + path;
    return load_obj_file(full);
  }
  if (primitive == "box") return make_box(size[0], size[1], size[2], segments);
  if (primitive == "icosphere") return make_icosphere(radius, segments);
  if (primitive == "hull") return make_hull(size[0], size[1], size[2], segments);
  throw ConfigError("mesh source needs either a path or a primitive type");
}

void Scenario::validate() const {
  if (!(dt > 0.0)) throw ConfigError("dt must be > 0");
  if (!(duration >= dt)) throw ConfigError("duration must be >= dt");
  spectrum.validate();
  cascades.validate();
  velocity.slices.validate();
  if (velocity.rebuild_stride < 1) throw ConfigError("velocity rebuild_stride must be >= 1");
  for (const auto& b : bodies) {
    if (b.mass.has_value() == b.density.has_value())
      throw ConfigError("body '" + b.name + "': specify exactly one of mass or density");
    b.fdm.validate();
  }
}

namespace {

void line_col(const std::string& text, size_t byte, int& line, int& col) {
  line = 1;
  col = 1;
  for (size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
}

Vec3 get_vec3(const json& j) {
  if (!j.is_array() || j.size() != 3) throw ConfigError("expected a 3-element array");
  return {j[0].get<double>(), j[1].get<double>(), j[2].get<double>()};
}

template <typename T>
void maybe(const json& j, const char* key, T& out) {
  if (j.contains(key)) out = j.at(key).get<T>();
}

SpectrumParams parse_spectrum(const json& j) {
  SpectrumParams p;
  maybe(j, "wind_speed", p.wind_speed);
  maybe(j, "fetch", p.fetch);
  maybe(j, "wind_direction", p.wind_direction);
  maybe(j, "swell", p.swell);
  maybe(j, "direction_mix", p.direction_mix);
  maybe(j, "gravity", p.gravity);
  if (j.contains("peak_omega")) {
    const auto& po = j.at("peak_omega");
    if (po.is_string()) {
      if (po.get<std::string>() != "standard")
        throw ConfigError("spectrum.peak_omega: expected a number or \"standard\"");
      p.peak_omega_override = p.standard_peak_omega();
    } else {
      p.peak_omega_override = po.get<double>();
    }
  }
  return p;
}

MeshSource parse_mesh(const json& j) {
  MeshSource m;
  maybe(j, "path", m.path);
  maybe(j, "type", m.primitive);
  maybe(j, "radius", m.radius);
  maybe(j, "segments", m.segments);
  if (j.contains("size")) {
    Vec3 s = get_vec3(j.at("size"));
    m.size[0] = s.x;
    m.size[1] = s.y;
    m.size[2] = s.z;
  }
  if (j.contains("length")) m.size[0] = j.at("length").get<double>();
  if (j.contains("beam")) m.size[1] = j.at("beam").get<double>();
  if (j.contains("depth")) m.size[2] = j.at("depth").get<double>();
  return m;
}

BodyConfig parse_body(const json& j) {
  BodyConfig b;
  maybe(j, "name", b.name);
  if (j.contains("mesh")) b.mesh = parse_mesh(j.at("mesh"));
  if (j.contains("mass")) b.mass = j.at("mass").get<double>();
  if (j.contains("density")) b.density = j.at("density").get<double>();
  maybe(j, "cd_water", b.cd_water);
  maybe(j, "cd_air", b.cd_air);
  if (j.contains("position")) b.position = get_vec3(j.at("position"));
  maybe(j, "yaw", b.yaw);
  if (j.contains("velocity")) b.initial_velocity = get_vec3(j.at("velocity"));
  if (j.contains("thrust")) {
    const auto& jt = j.at("thrust");
    auto parse_phase = [](const json& p) {
      ThrustPhase ph;
      if (p.contains("until")) ph.until = p.at("until").get<double>();
      ph.force = get_vec3(p.at("force"));
      return ph;
    };
    if (jt.is_array())
      for (const auto& p : jt) b.thrust.push_back(parse_phase(p));
    else
      b.thrust.push_back(parse_phase(jt));
  }
  if (j.contains("mask")) {
    const auto& jm = j.at("mask");
    maybe(jm, "back_height", b.mask.back_height);
    maybe(jm, "intensity", b.mask.intensity);
    maybe(jm, "amplitude", b.mask.amplitude);
  }
  if (j.contains("fdm")) {
    const auto& jf = j.at("fdm");
    maybe(jf, "grid_size", b.fdm.grid_size);
    maybe(jf, "margin", b.fdm.margin);
    maybe(jf, "delta_min", b.fdm.delta_min);
    maybe(jf, "delta_max", b.fdm.delta_max);
    maybe(jf, "d0", b.fdm.damping.d0);
    maybe(jf, "d_max", b.fdm.damping.d_max);
    maybe(jf, "v_max", b.fdm.damping.v_max);
  }
  maybe(j, "box_inertia", b.box_inertia);
  maybe(j, "angular_damping", b.angular_damping);
  return b;
}

}  // namespace

Scenario parse_scenario(const std::string& text, const std::string& name) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    int line = 1, col = 1;
    line_col(text, e.byte > 0 ? e.byte - 1 : 0, line, col);
    throw ConfigError(name + ":" + std::to_string(line) + ":" + std::to_string(col) + ": " +
                      e.what());
  }
  try {
    Scenario s;
    maybe(j, "seed", s.seed);
    maybe(j, "duration", s.duration);
    maybe(j, "dt", s.dt);
    if (j.contains("precision")) {
      std::string p = j.at("precision").get<std::string>();
      if (p != "f32" && p != "f64") throw ConfigError("precision must be f32 or f64");
      s.single_precision = (p == "f32");
    }
    if (j.contains("wind")) s.wind = get_vec3(j.at("wind"));
    if (j.contains("spectrum")) s.spectrum = parse_spectrum(j.at("spectrum"));
    s.spectrum.rng_seed = s.seed;
    if (j.contains("cascades")) {
      const auto& jc = j.at("cascades");
      maybe(jc, "resolution", s.cascades.resolution);
      if (jc.contains("lengths")) s.cascades.lengths = jc.at("lengths").get<std::vector<double>>();
      if (jc.contains("cutoffs")) s.cascades.cutoffs = jc.at("cutoffs").get<std::vector<double>>();
    }
    maybe(j, "choppiness", s.choppiness);
    if (j.contains("velocity")) {
      const auto& jv = j.at("velocity");
      maybe(jv, "y_min", s.velocity.slices.y_min);
      maybe(jv, "y_max", s.velocity.slices.y_max);
      maybe(jv, "count", s.velocity.slices.count);
      maybe(jv, "rebuild_stride", s.velocity.rebuild_stride);
      if (jv.contains("distribution")) {
        std::string d = jv.at("distribution").get<std::string>();
        if (d == "log" || d == "logarithmic")
          s.velocity.slices.distribution = DepthDistribution::Logarithmic;
        else if (d == "uniform")
          s.velocity.slices.distribution = DepthDistribution::Uniform;
        else
          throw ConfigError("velocity.distribution must be log or uniform");
      }
    }
    s.velocity.slices.single_precision = s.single_precision;
    if (j.contains("bodies"))
      for (const auto& jb : j.at("bodies")) s.bodies.push_back(parse_body(jb));
    if (j.contains("output")) {
      const auto& jo = j.at("output");
      maybe(jo, "directory", s.output.directory);
      maybe(jo, "trajectory", s.output.trajectory);
      maybe(jo, "forces", s.output.forces);
      maybe(jo, "zones", s.output.zones);
      maybe(jo, "surface_stride", s.output.surface_stride);
      maybe(jo, "surface_resolution", s.output.surface_resolution);
    }
    s.validate();
    return s;
  } catch (const json::exception& e) {
    throw ConfigError(name + ": " + e.what());
  }
}

Scenario load_scenario_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  Scenario s = parse_scenario(ss.str(), path);
  size_t slash = path.find_last_of('/');
  s.base_dir = slash == std::string::npos ? "." : path.substr(0, slash);
  return s;
}

}  // namespace ocean
