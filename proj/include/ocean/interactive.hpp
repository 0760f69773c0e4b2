#ifndef OCEAN_INTERACTIVE_HPP
#define OCEAN_INTERACTIVE_HPP

#include <vector>

#include "ocean/core.hpp"

namespace ocean {

// ---------------------------------------------------------------------------
// Per-body interactive waves: a translating finite-difference solve of the
// damped 2D wave equation, seeded every frame by a mask written under the
// hull.
// ---------------------------------------------------------------------------

struct DampingParams {
  double d0 = 0.98;      // damping at rest
  double d_max = 0.999;  // damping at/above v_max
  double v_max = 5.0;    // m/s
};

// d(t) = lerp(d0, d_max, clamp(|v|/v_max, 0, 1))
double damping_factor(double speed, const DampingParams& params = {});

struct FdmConfig {
  int grid_size = 512;
  int margin = 16;  // zero boundary band, cells
  double delta_min = 0.0;  // 0 = derive from body size at construction
  double delta_max = 0.0;  // 0 = 10x delta_min
  double delta_rate_limit = 0.05;  // max relative spacing change per step
  DampingParams damping;
  void validate() const;
};

struct MaskParams {
  double back_height = 0.0;  // h_b, m
  double intensity = 1.0;    // i_f
  double amplitude = 1.0;    // b_w
};

// Geometry of the masked body in its bow-aligned frame (+z toward the bow).
struct MaskFrame {
  double center_x = 0.0;  // c_x
  double half_beam = 1.0;     // b_x
  double z_min = -1.0;    // stern
  double z_max = 1.0;     // bow
  double mesh_height = 1.0;   // h_M
  double volume_ratio = 0.0;  // v_w / v_M
};

// Mask surface h(x, z) = b_w (f(x) + g(z)): V-shaped across the beam, affine
// from the user back height to the speed-proportional front height.
double mask_height(double x, double z, const MaskFrame& frame, double speed,
                   const MaskParams& params);

struct MaskCell {
  int i = 0, j = 0;
  double height = 0.0;
};

class FdmZone {
 public:
  FdmZone(const FdmConfig& config, double body_size, Vec2 body_position, double dt);

  int grid_size() const { return n_; }
  int margin() const { return margin_; }
  double spacing() const { return delta_; }
  double wave_speed() const { return c_; }
  double cfl_ratio(double dt) const { return c_ * c_ * dt * dt / (delta_ * delta_); }
  double current_damping() const { return damping_; }
  Vec2 origin() const { return origin_; }
  double extent() const { return n_ * delta_; }
  const RealField& field() const { return curr_; }
  RealField& field() { return curr_; }
  const FdmConfig& config() const { return config_; }

  // Re-derives the spacing from the body speed (rate-limited and clamped)
  // and the wave speed that pins the CFL ratio at 0.49.
  void update_stability(double body_speed, double dt);

  // One damped explicit step with the domain translated to follow the body;
  // out-of-range shifted reads are zero and the outer margin stays zero.
  void step(double dt, Vec2 body_position);

  // Dirichlet forcing: overwrite the current field at the masked cells.
  void apply_mask(const std::vector<MaskCell>& cells);

  // Bilinear sample at a world position; zero outside the zone.
  double sample(Vec2 world) const;

  Vec2 cell_world(int i, int j) const { return origin_ + Vec2{i * delta_, j * delta_}; }
  int dropped_wake_count() const { return dropped_wake_; }

 private:
  int dropped_wake_ = 0;
  FdmConfig config_;
  int n_ = 0, margin_ = 0;
  double delta_ = 0.0, c_ = 0.0, damping_ = 0.0;
  RealField curr_, prev_;
  Vec2 origin_;       // world position of cell (0, 0)
  Vec2 pos_curr_;     // body position history
  Vec2 carry_;        // sub-cell translation remainder
  int last_shift_[2] = {0, 0};
};

// Cells of the zone inside any of the waterline loops (ray casting along +z
// after de-rotating by the body yaw), with their mask heights.
std::vector<MaskCell> compute_mask(const FdmZone& zone,
                                   const std::vector<std::vector<Vec3>>& waterline_loops,
                                   double body_yaw, Vec2 body_position, double body_speed,
                                   const MaskFrame& frame, const MaskParams& params);

// Ray-cast point-in-polygon test (+z direction, odd crossing count).
bool point_in_loops(Vec2 p, const std::vector<std::vector<Vec2>>& loops);

}  // namespace ocean

#endif
