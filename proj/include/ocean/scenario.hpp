#ifndef OCEAN_SCENARIO_HPP
#define OCEAN_SCENARIO_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ocean/interactive.hpp"
#include "ocean/mesh.hpp"
#include "ocean/surface.hpp"
#include "ocean/velocity.hpp"

namespace ocean {

struct ThrustPhase {
  double until = 1e300;  // applies while t < until
  Vec3 force;            // body frame, at the center of mass
};

struct MeshSource {
  std::string path;  // OBJ file; empty when a primitive is used
  std::string primitive;  // "box" | "icosphere" | "hull"
  double size[3] = {1.0, 1.0, 1.0};  // box: sx sy sz; hull: length beam depth
  double radius = 0.5;
  int segments = 2;

  TriMesh load(const std::string& base_dir) const;
};

struct BodyConfig {
  std::string name;
  MeshSource mesh;
  std::optional<double> mass;     // kg; exactly one of mass/density
  std::optional<double> density;  // kg/m^3
  double cd_water = 1.0;
  double cd_air = 1.0;
  Vec3 position;
  double yaw = 0.0;
  Vec3 initial_velocity;
  std::vector<ThrustPhase> thrust;
  MaskParams mask;
  FdmConfig fdm;
  bool box_inertia = false;
  double angular_damping = 0.0;
};

struct OutputConfig {
  std::string directory = "out";
  bool trajectory = true;
  bool forces = true;
  bool zones = false;
  int surface_stride = 0;  // dump composed heightfield every k steps; 0 = never
  int surface_resolution = 128;
};

struct VelocityScenarioConfig {
  SliceConfig slices;
  int rebuild_stride = 1;  // rebuild slices every k steps, hold in between
};

struct Scenario {
  uint64_t seed = 0;
  double duration = 10.0;
  double dt = 1.0 / 60.0;
  bool single_precision = false;
  Vec3 wind;
  SpectrumParams spectrum;
  CascadeConfig cascades;
  double choppiness = 1.0;
  VelocityScenarioConfig velocity;
  std::vector<BodyConfig> bodies;
  OutputConfig output;
  std::string base_dir = ".";  // directory of the config file, for mesh paths

  void validate() const;
};

// JSON scenario parsing. Parse failures throw ConfigError with the line and
// column of the offending byte.
Scenario parse_scenario(const std::string& json_text, const std::string& name = "<config>");
Scenario load_scenario_file(const std::string& path);

}  // namespace ocean

#endif
