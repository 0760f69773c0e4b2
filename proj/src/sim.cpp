#include "ocean/sim.hpp"

#include <chrono>
#include <cmath>

namespace ocean {

namespace {
double now_s() {
  return std::chrono::duration<double>(std::chrono::steady_clock::now().time_since_epoch())
      .count();
}
}  // namespace

Simulation::Simulation(const Scenario& scenario)
    : scenario_(scenario), cascades_(scenario.cascades, scenario.spectrum) {
  scenario_.validate();
  SurfaceGenOptions opts{scenario_.choppiness, scenario_.single_precision};
  maps_ = generate_maps(cascades_, 0.0, opts);
  slices_ = build_slices(cascades_, 0.0, scenario_.velocity.slices);

  for (const BodyConfig& cfg : scenario_.bodies) {
    TriMesh mesh = cfg.mesh.load(scenario_.base_dir);
    double density = cfg.density ? *cfg.density : *cfg.mass / mesh.volume();
    BodyPose pose;
    pose.orientation = Quat::yaw(cfg.yaw);
    pose.com_body = mesh.centroid();
    pose.position = cfg.position + pose.orientation.rotate(mesh.centroid());
    pose.linear_velocity = cfg.initial_velocity;
    RigidBody rigid = RigidBody::from_mesh(mesh, density, pose, cfg.box_inertia);
    Vec3 ext = mesh.bbox_max() - mesh.bbox_min();
    double body_size = std::max(ext.x, ext.z);
    FdmZone zone(cfg.fdm, body_size, pose.position.xz(), scenario_.dt);
    bodies_.push_back(std::make_unique<Body>(cfg, std::move(mesh), std::move(rigid),
                                             std::move(zone)));
  }
}

Vec3 Simulation::water_velocity(Vec2 x, double y) const {
  double yc = std::clamp(y, slices_.y_min(), slices_.y_max());
  return velocity_at(slices_, x, yc, DepthInterp::Exponential);
}

double Simulation::compose_height(Vec2 x, int exclude_body) const {
  double h = height_at(maps_, x);
  for (size_t i = 0; i < bodies_.size(); ++i) {
    if (static_cast<int>(i) == exclude_body) continue;
    h += bodies_[i]->zone.sample(x);
  }
  return h;
}

Vec3 Simulation::thrust_force(const Body& body) const {
  for (const ThrustPhase& phase : body.config.thrust)
    if (time_ < phase.until) return body.rigid.pose().rotate(phase.force);
  return {};
}

void Simulation::step() {
  double dt = scenario_.dt;
  double t_next = time_ + dt;

  double t0 = now_s();
  SurfaceGenOptions opts{scenario_.choppiness, scenario_.single_precision};
  maps_ = generate_maps(cascades_, t_next, opts);
  double t1 = now_s();
  timing_.surface += t1 - t0;
  if (step_index_ % scenario_.velocity.rebuild_stride == 0)
    slices_ = build_slices(cascades_, t_next, scenario_.velocity.slices);
  double t2 = now_s();
  timing_.velocity += t2 - t1;

  // sense + clip + mask, against pre-step zone state of every body
  for (size_t i = 0; i < bodies_.size(); ++i) {
    Body& body = *bodies_[i];
    FluidQuery fluid;
    fluid.surface_height = [this, i](Vec2 x) {
      return compose_height(x, static_cast<int>(i));
    };
    fluid.water_velocity = [this](Vec2 x, double y) { return water_velocity(x, y); };
    fluid.wind = scenario_.wind;
    body.report = aggregate(body.mesh, body.rigid.pose(), fluid,
                            {body.config.cd_water, body.config.cd_air});

    double speed = body.rigid.pose().linear_velocity.norm();
    body.zone.update_stability(speed, dt);

    Vec3 ext = body.mesh.bbox_max() - body.mesh.bbox_min();
    MaskFrame frame;
    frame.center_x = 0.0;
    frame.half_beam = ext.x;
    frame.z_min = body.mesh.bbox_min().z;
    frame.z_max = body.mesh.bbox_max().z;
    frame.mesh_height = body.mesh.height();
    frame.volume_ratio = body.mesh.volume() > 0.0
                             ? body.report.submerged_volume / body.mesh.volume()
                             : 0.0;
    body.mask = compute_mask(body.zone, body.report.waterline, body.rigid.pose().yaw(),
                             body.rigid.pose().position.xz(), speed, frame, body.config.mask);
  }
  double t3 = now_s();
  timing_.hydro += t3 - t2;

  // zone updates (masks written, then one wave step following the body)
  for (auto& bp : bodies_) {
    Body& body = *bp;
    body.zone.apply_mask(body.mask);
    body.zone.step(dt, body.rigid.pose().position.xz());
  }
  double t4 = now_s();
  timing_.zones += t4 - t3;

  // forces and integration
  for (auto& bp : bodies_) {
    Body& body = *bp;
    const HydroReport& r = body.report;
    if (r.center_of_immersion) {
      body.rigid.apply_force_at(r.buoyancy_force, r.water_center);
      body.rigid.apply_force_at(r.water_drag, r.water_center);
    }
    body.rigid.apply_force_at(r.air_drag, r.air_center);
    body.rigid.apply_force(thrust_force(body));
    body.rigid.integrate({0.0, -scenario_.spectrum.gravity, 0.0}, dt,
                         body.config.angular_damping);
  }
  timing_.integrate += now_s() - t4;

  time_ = t_next;
  ++step_index_;
  check_finite();
}

void Simulation::check_finite() const {
  for (size_t i = 0; i < bodies_.size(); ++i) {
    const BodyPose& p = bodies_[i]->rigid.pose();
    double probe = p.position.x + p.position.y + p.position.z + p.linear_velocity.x +
                   p.linear_velocity.y + p.linear_velocity.z;
    if (!std::isfinite(probe))
      throw NumericError("non-finite body state (body " + std::to_string(i) + ", step " +
                         std::to_string(step_index_) + ")");
  }
}

}  // namespace ocean
