#ifndef OCEAN_SIM_HPP
#define OCEAN_SIM_HPP

#include <memory>

#include "ocean/hydro.hpp"
#include "ocean/rigid_body.hpp"
#include "ocean/scenario.hpp"

namespace ocean {

// Fixed-step orchestration of the coupled system. Per step: the spectral
// surface and velocity slices advance first; every body then senses the
// previous-step zone fields of the other bodies (so body order never
// matters), forces and masks are computed, zones step, and bodies integrate.
class Simulation {
 public:
  struct Body {
    BodyConfig config;
    TriMesh mesh;
    RigidBody rigid;
    FdmZone zone;
    HydroReport report;
    std::vector<MaskCell> mask;  // last applied mask

    Body(const BodyConfig& cfg, TriMesh m, RigidBody r, FdmZone z)
        : config(cfg), mesh(std::move(m)), rigid(std::move(r)), zone(std::move(z)) {}
  };

  explicit Simulation(const Scenario& scenario);

  void step();
  double time() const { return time_; }
  int step_index() const { return step_index_; }

  const Scenario& scenario() const { return scenario_; }
  const SurfaceMaps& maps() const { return maps_; }
  const VelocitySlices& slices() const { return slices_; }
  const CascadeSet& cascades() const { return cascades_; }
  const std::vector<std::unique_ptr<Body>>& bodies() const { return bodies_; }

  // Free surface at x: spectral height plus every interactive zone except
  // exclude_body's own.
  double compose_height(Vec2 x, int exclude_body = -1) const;

  // Water velocity sampler used by the force model (depth clamped into the
  // slice interval).
  Vec3 water_velocity(Vec2 x, double y) const;

  // Cumulative stage timings in seconds (surface, velocity, bodies, zones,
  // integration); informational only.
  struct Timing {
    double surface = 0, velocity = 0, hydro = 0, zones = 0, integrate = 0;
  };
  const Timing& timing() const { return timing_; }

 private:
  Scenario scenario_;
  CascadeSet cascades_;
  SurfaceMaps maps_;
  VelocitySlices slices_;
  std::vector<std::unique_ptr<Body>> bodies_;
  double time_ = 0.0;
  int step_index_ = 0;
  Timing timing_;

  Vec3 thrust_force(const Body& body) const;
  void check_finite() const;
};

}  // namespace ocean

#endif
