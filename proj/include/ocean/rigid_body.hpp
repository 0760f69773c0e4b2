#ifndef OCEAN_RIGID_BODY_HPP
#define OCEAN_RIGID_BODY_HPP

#include "ocean/hydro.hpp"
#include "ocean/mesh.hpp"

namespace ocean {

// Minimal 6-DOF body driven by accumulated forces. Angular state is kept as
// world-frame angular momentum so torque-free motion conserves it exactly.
class RigidBody {
 public:
  RigidBody(double mass, const Mat3& inertia_body, const BodyPose& initial_pose);

  // Mass from the mesh volume times density; inertia from the polyhedral
  // mass properties (or a bounding-box solid when box_inertia is set).
  static RigidBody from_mesh(const TriMesh& mesh, double density, const BodyPose& initial_pose,
                             bool box_inertia = false);

  const BodyPose& pose() const { return pose_; }
  BodyPose& pose() { return pose_; }
  double mass() const { return mass_; }
  const Mat3& inertia_body() const { return inertia_body_; }
  Vec3 angular_momentum() const { return angular_momentum_; }
  Vec3 pending_force() const { return force_; }
  Vec3 pending_torque() const { return torque_; }

  void apply_force(const Vec3& f) { force_ += f; }
  void apply_torque(const Vec3& tau) { torque_ += tau; }
  void apply_force_at(const Vec3& f, const Vec3& world_point);

  // Semi-implicit Euler: momenta from forces, then pose from the new
  // velocities; orientation advances by the exponential map and is
  // renormalized. Accumulators clear.
  void integrate(const Vec3& gravity, double dt, double angular_damping = 0.0);

 private:
  double mass_ = 1.0;
  Mat3 inertia_body_, inertia_body_inv_;
  BodyPose pose_;
  Vec3 angular_momentum_;
  Vec3 force_, torque_;
};

}  // namespace ocean

#endif
