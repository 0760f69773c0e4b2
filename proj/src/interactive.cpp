#include "ocean/interactive.hpp"

#include <algorithm>
#include <cmath>

#include "ocean/parallel.hpp"

namespace ocean {

double damping_factor(double speed, const DampingParams& params) {
  double u = clamp01(speed / params.v_max);
  return lerp(params.d0, params.d_max, u);
}

void FdmConfig::validate() const {
  if (grid_size < 8) throw ConfigError("FDM grid size too small");
  if (margin <= 1 || 2 * margin >= grid_size)
    throw ConfigError("FDM margin must satisfy 1 < m < grid_size/2");
}

double mask_height(double x, double z, const MaskFrame& frame, double speed,
                   const MaskParams& params) {
  if (!(frame.half_beam > 0.0) || !(frame.z_max > frame.z_min))
    throw DomainError("mask_height: degenerate body frame");
  double f = std::fabs(x - frame.center_x) / frame.half_beam;
  double h_f = speed * frame.mesh_height * params.intensity * frame.volume_ratio;
  double b_z = frame.z_max - frame.z_min;
  double a = (h_f - params.back_height) / b_z;
  double b = params.back_height - a * frame.z_min;
  return params.amplitude * (f + a * z + b);
}

FdmZone::FdmZone(const FdmConfig& config, double body_size, Vec2 body_position, double dt)
    : config_(config), n_(config.grid_size), margin_(config.margin) {
  config.validate();
  if (config_.delta_min <= 0.0) {
    // zone must span at least twice the body
    config_.delta_min = std::max(2.0 * body_size, 1e-3) / n_;
  }
  if (config_.delta_max <= 0.0) config_.delta_max = 10.0 * config_.delta_min;
  if (config_.delta_max < config_.delta_min)
    throw ConfigError("FDM delta_max must be >= delta_min");

  curr_ = RealField(n_);
  prev_ = RealField(n_);
  pos_curr_ = body_position;
  damping_ = config_.damping.d0;

  delta_ = std::clamp(0.999 * dt, config_.delta_min, config_.delta_max);
  c_ = std::sqrt(0.49) * delta_ / dt;
  origin_ = body_position - Vec2{0.5 * n_ * delta_, 0.5 * n_ * delta_};
}

void FdmZone::update_stability(double body_speed, double dt) {
  if (!(dt > 0.0)) throw DomainError("update_stability: dt must be > 0");
  double target = body_speed < 1.0 ? 0.999 * dt : body_speed * 0.999 * dt;
  target = std::clamp(target, config_.delta_min, config_.delta_max);
  // rate-limit spacing changes; stored heights keep their values
  double lo = delta_ * (1.0 - config_.delta_rate_limit);
  double hi = delta_ * (1.0 + config_.delta_rate_limit);
  delta_ = std::clamp(target, lo, hi);
  delta_ = std::clamp(delta_, config_.delta_min, config_.delta_max);
  c_ = std::sqrt(0.49) * delta_ / dt;
  damping_ = damping_factor(body_speed, config_.damping);
}

void FdmZone::step(double dt, Vec2 body_position) {
  Vec2 move = body_position - pos_curr_;
  double rx = move.x / delta_ + carry_.x;
  double rz = move.z / delta_ + carry_.z;
  int wx = static_cast<int>(std::floor(rx));
  int wz = static_cast<int>(std::floor(rz));
  carry_ = Vec2{rx - wx, rz - wz};
  int max_shift = margin_ - 1;
  if (std::abs(wx) > max_shift || std::abs(wz) > max_shift) {
    // body teleported beyond what the boundary band can absorb; drop wake
    wx = std::clamp(wx, -max_shift, max_shift);
    wz = std::clamp(wz, -max_shift, max_shift);
    curr_.fill(0.0);
    prev_.fill(0.0);
    ++dropped_wake_;
  }
  int ox = wx + last_shift_[0];
  int oz = wz + last_shift_[1];

  double a = c_ * c_ * dt * dt / (delta_ * delta_);
  double d = damping_;
  RealField next(n_);
  auto read = [this](const RealField& f, int i, int j) {
    return (i < 0 || j < 0 || i >= n_ || j >= n_) ? 0.0 : f.at(i, j);
  };
  parallel_for(static_cast<size_t>(n_), [&](size_t i0, size_t i1) {
    for (size_t i = i0; i < i1; ++i) {
      int ii = static_cast<int>(i);
      if (ii < margin_ || ii >= n_ - margin_) continue;
      for (int j = margin_; j < n_ - margin_; ++j) {
        int k = ii + wx, l = j + wz;
        double lap = read(curr_, k + 1, l) + read(curr_, k - 1, l) + read(curr_, k, l + 1) +
                     read(curr_, k, l - 1) - 4.0 * read(curr_, k, l);
        next.at(ii, j) = d * (a * lap + 2.0 * read(curr_, k, l) - read(prev_, ii + ox, j + oz));
      }
    }
  });

  prev_ = std::move(curr_);
  curr_ = std::move(next);
  origin_ += Vec2{wx * delta_, wz * delta_};
  last_shift_[0] = wx;
  last_shift_[1] = wz;
  pos_curr_ = body_position;
}

void FdmZone::apply_mask(const std::vector<MaskCell>& cells) {
  for (const MaskCell& c : cells) {
    if (c.i < margin_ || c.j < margin_ || c.i >= n_ - margin_ || c.j >= n_ - margin_) continue;
    curr_.at(c.i, c.j) = c.height;
  }
}

double FdmZone::sample(Vec2 world) const {
  double u = (world.x - origin_.x) / delta_;
  double v = (world.z - origin_.z) / delta_;
  if (u < 0.0 || v < 0.0 || u > n_ - 1 || v > n_ - 1) return 0.0;
  int i0 = std::min(static_cast<int>(u), n_ - 2);
  int j0 = std::min(static_cast<int>(v), n_ - 2);
  double fu = u - i0, fv = v - j0;
  return curr_.at(i0, j0) * (1 - fu) * (1 - fv) + curr_.at(i0 + 1, j0) * fu * (1 - fv) +
         curr_.at(i0, j0 + 1) * (1 - fu) * fv + curr_.at(i0 + 1, j0 + 1) * fu * fv;
}

bool point_in_loops(Vec2 p, const std::vector<std::vector<Vec2>>& loops) {
  int crossings = 0;
  for (const auto& loop : loops) {
    size_t n = loop.size();
    for (size_t e = 0; e + 1 < n; ++e) {
      Vec2 a = loop[e], b = loop[e + 1];
      // ray from p along +z: edge must straddle the vertical line x = p.x
      if ((a.x > p.x) == (b.x > p.x)) continue;
      double zi = a.z + (p.x - a.x) / (b.x - a.x) * (b.z - a.z);
      if (zi > p.z) ++crossings;
    }
  }
  return (crossings & 1) != 0;
}

std::vector<MaskCell> compute_mask(const FdmZone& zone,
                                   const std::vector<std::vector<Vec3>>& waterline_loops,
                                   double body_yaw, Vec2 body_position, double body_speed,
                                   const MaskFrame& frame, const MaskParams& params) {
  std::vector<MaskCell> cells;
  if (waterline_loops.empty()) return cells;

  // loops into the de-rotated, body-centered frame (bow toward +z)
  double cy = std::cos(-body_yaw), sy = std::sin(-body_yaw);
  auto derotate = [&](Vec2 p) {
    Vec2 q = p - body_position;
    return Vec2{cy * q.x + sy * q.z, -sy * q.x + cy * q.z};
  };
  std::vector<std::vector<Vec2>> loops;
  Vec2 lo{1e300, 1e300}, hi{-1e300, -1e300};
  for (const auto& loop3 : waterline_loops) {
    if (loop3.size() < 4) continue;
    std::vector<Vec2> loop;
    loop.reserve(loop3.size());
    for (const Vec3& p : loop3) {
      Vec2 q = derotate(p.xz());
      loop.push_back(q);
      lo = {std::min(lo.x, q.x), std::min(lo.z, q.z)};
      hi = {std::max(hi.x, q.x), std::max(hi.z, q.z)};
    }
    loops.push_back(std::move(loop));
  }
  if (loops.empty()) return cells;

  // candidate cells: bounding box of the loops, mapped back through the
  // rotation (conservative axis-aligned cover in zone coordinates)
  double rad = std::hypot(std::max(std::fabs(lo.x), std::fabs(hi.x)),
                          std::max(std::fabs(lo.z), std::fabs(hi.z)));
  int n = zone.grid_size();
  auto cell_of = [&](double w, double o) { return static_cast<int>(std::floor((w - o) / zone.spacing())); };
  int i0 = std::max(zone.margin(), cell_of(body_position.x - rad, zone.origin().x));
  int i1 = std::min(n - zone.margin(), cell_of(body_position.x + rad, zone.origin().x) + 2);
  int j0 = std::max(zone.margin(), cell_of(body_position.z - rad, zone.origin().z));
  int j1 = std::min(n - zone.margin(), cell_of(body_position.z + rad, zone.origin().z) + 2);

  for (int i = i0; i < i1; ++i) {
    for (int j = j0; j < j1; ++j) {
      Vec2 local = derotate(zone.cell_world(i, j));
      if (local.x < lo.x || local.x > hi.x || local.z < lo.z || local.z > hi.z) continue;
      if (!point_in_loops(local, loops)) continue;
      cells.push_back({i, j, mask_height(local.x, local.z, frame, body_speed, params)});
    }
  }
  return cells;
}

}  // namespace ocean
