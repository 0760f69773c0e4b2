#include "ocean/rigid_body.hpp"

#include <cmath>

namespace ocean {

RigidBody::RigidBody(double mass, const Mat3& inertia_body, const BodyPose& initial_pose)
    : mass_(mass), inertia_body_(inertia_body), pose_(initial_pose) {
  if (!(mass > 0.0)) throw ConfigError("rigid body mass must be > 0");
  inertia_body_inv_ = inertia_body.inverse();
  pose_.orientation = pose_.orientation.normalized();
  Mat3 r = pose_.orientation.to_matrix();
  Mat3 inertia_world = r * inertia_body_ * r.transposed();
  angular_momentum_ = inertia_world * pose_.angular_velocity;
}

RigidBody RigidBody::from_mesh(const TriMesh& mesh, double density, const BodyPose& initial_pose,
                               bool box_inertia) {
  double mass = density * mesh.volume();
  Mat3 inertia;
  if (box_inertia) {
    Vec3 s = mesh.bbox_max() - mesh.bbox_min();
    inertia = Mat3::diagonal(mass / 12.0 * (s.y * s.y + s.z * s.z),
                             mass / 12.0 * (s.x * s.x + s.z * s.z),
                             mass / 12.0 * (s.x * s.x + s.y * s.y));
  } else {
    inertia = mesh.unit_inertia();
    for (auto& row : inertia.m)
      for (auto& v : row) v *= density;
  }
  BodyPose pose = initial_pose;
  pose.com_body = mesh.centroid();
  return RigidBody(mass, inertia, pose);
}

void RigidBody::apply_force_at(const Vec3& f, const Vec3& world_point) {
  force_ += f;
  torque_ += cross(world_point - pose_.position, f);
}

void RigidBody::integrate(const Vec3& gravity, double dt, double angular_damping) {
  if (!(dt > 0.0)) throw DomainError("integrate: dt must be > 0");

  pose_.linear_velocity += (force_ / mass_ + gravity) * dt;
  angular_momentum_ += torque_ * dt;
  if (angular_damping > 0.0) angular_momentum_ = angular_momentum_ * (1.0 - angular_damping * dt);

  Mat3 r = pose_.orientation.to_matrix();
  Mat3 inv_inertia_world = r * inertia_body_inv_ * r.transposed();
  pose_.angular_velocity = inv_inertia_world * angular_momentum_;

  pose_.position += pose_.linear_velocity * dt;
  double w = pose_.angular_velocity.norm();
  if (w > 1e-300) {
    Quat dq = Quat::from_axis_angle(pose_.angular_velocity / w, w * dt);
    pose_.orientation = (dq * pose_.orientation).normalized();
  }

  force_ = {};
  torque_ = {};
}

}  // namespace ocean
