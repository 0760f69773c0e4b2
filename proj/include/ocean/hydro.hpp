#ifndef OCEAN_HYDRO_HPP
#define OCEAN_HYDRO_HPP

#include <functional>
#include <optional>
#include <vector>

#include "ocean/mesh.hpp"

namespace ocean {

// ---------------------------------------------------------------------------
// Fluid-to-solid action: surface clipping of the hull and the resulting
// buoyancy and drag forces.
// ---------------------------------------------------------------------------

struct BodyPose {
  Vec3 position;          // center of mass, world
  Quat orientation;       // body -> world
  Vec3 linear_velocity;   // of the center of mass
  Vec3 angular_velocity;  // world frame
  Vec3 com_body;          // center of mass in body coordinates

  Vec3 to_world(const Vec3& body_point) const {
    return position + orientation.rotate(body_point - com_body);
  }
  Vec3 rotate(const Vec3& body_dir) const { return orientation.rotate(body_dir); }
  Vec3 point_velocity(const Vec3& world_point) const {
    return linear_velocity + cross(angular_velocity, world_point - position);
  }
  double yaw() const {
    Vec3 bow = orientation.rotate({0, 0, 1});
    return std::atan2(bow.x, bow.z);
  }
};

// Samplers and medium constants used by the force model.
struct FluidQuery {
  std::function<double(Vec2)> surface_height;            // free surface at (x, z)
  std::function<Vec3(Vec2, double)> water_velocity;      // at (x, z), depth y
  Vec3 wind;
  double water_density = 1025.0;  // kg/m^3
  double air_density = 1.204;     // kg/m^3
  // optional depth -> density profile (piecewise linear over (depth, rho))
  std::vector<std::pair<double, double>> density_profile;

  double density_at(double y) const;
  static FluidQuery still_water();
};

enum class TriStatus { Submerged, Dry };

struct TriangleState {
  int parent = -1;   // source triangle in the mesh
  TriStatus status = TriStatus::Dry;
  double area = 0.0;     // m^2, of this (sub-)triangle
  Vec3 centroid;         // world
  double depth = 0.0;    // centroid depth, negative below the surface
  Vec3 normal;           // outward unit normal (parent's)
};

struct ClipResult {
  std::vector<TriangleState> states;
  std::vector<std::vector<Vec3>> waterline;  // closed loops, world coordinates
  double submerged_area = 0.0;
  double dry_area = 0.0;
  int degenerate_skipped = 0;
};

// Classifies every triangle against the sampled surface, splits the partially
// submerged ones along the interpolated zero-depth line, and chains the
// crossing segments into closed waterline loops.
ClipResult classify_clip(const TriMesh& mesh, const BodyPose& pose, const FluidQuery& fluid);

// Prism-rule submerged volume: sum of area * depth * n_y over the submerged
// states. Positive for a fully submerged closed mesh.
double submerged_volume(const std::vector<TriangleState>& states);

// Volume-weighted centroid of the submerged prisms (each prism's centroid
// sits midway between the face centroid and the surface). Empty when there
// is no immersion.
std::optional<Vec3> center_of_immersion(const std::vector<TriangleState>& states);

// F_b = -v_w rho g, i.e. straight up for downward gravity.
Vec3 buoyancy(double v_w, double rho, const Vec3& gravity);

// Drag of one (sub-)triangle against the medium moving at medium_velocity.
// Only the flow-facing projected area max(0, n . v_rel_hat) contributes.
Vec3 drag(const TriangleState& tri, const Vec3& medium_velocity, double rho, double c_d,
          const BodyPose& pose);

struct DragCoefficients {
  double water = 1.0;
  double air = 1.0;
};

struct HydroReport {
  double submerged_volume = 0.0;            // clamped to [0, v_M]
  int volume_clamped = 0;                   // clamp events this evaluation
  std::optional<Vec3> center_of_immersion;  // world
  std::vector<std::vector<Vec3>> waterline;
  Vec3 buoyancy_force;
  Vec3 water_drag;
  Vec3 air_drag;
  Vec3 water_center;  // application point of buoyancy + water drag
  Vec3 air_center;    // application point of air drag
  double submerged_area = 0.0;
  double dry_area = 0.0;
};

// Full fluid-to-solid evaluation for one body.
HydroReport aggregate(const TriMesh& mesh, const BodyPose& pose, const FluidQuery& fluid,
                      const DragCoefficients& cd = {});

}  // namespace ocean

#endif
