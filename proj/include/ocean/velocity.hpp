#ifndef OCEAN_VELOCITY_HPP
#define OCEAN_VELOCITY_HPP

#include <vector>

#include "ocean/surface.hpp"

namespace ocean {

// ---------------------------------------------------------------------------
// Water velocity at depth. The exact field is a spectral sum with a
// depth-attenuation factor; the production path samples it on a small set of
// depth slices and interpolates between them.
// ---------------------------------------------------------------------------

// Depth attenuation of the velocity potential: exp(k y) below the mean
// surface, extrapolated linearly (1 + k y) above it. C1 at y = 0.
double attenuation(double k, double y);

// Exact direct evaluation, summed over every stored wave vector of every
// cascade. Reference path and oracle for the slice pipeline.
Vec3 velocity_direct(const CascadeSet& cascades, Vec2 x, double y, double t);

// Precomputed time-rotated coefficients for repeated direct evaluations at
// one instant (the study loops need millions of point queries).
class DirectVelocityEvaluator {
 public:
  DirectVelocityEvaluator(const CascadeSet& cascades, double t);
  Vec3 operator()(Vec2 x, double y) const;

 private:
  struct Mode {
    double kx, kz, k;
    cplx cx, cy, cz;  // G(k, t) * component vector
  };
  std::vector<Mode> modes_;
};

// Logarithmic depth remapping: sign(y) * beta * ln(alpha y^2 + 1) with
// alpha = 1e-4 and beta chosen so the deepest sample lands at y_min / 2.
double log_distribution(double y, double y_min);

// Exponential interpolation through (a, f_a), (b, f_b) evaluated at x.
// Falls back to linear interpolation when the endpoints differ in sign or
// either magnitude is below 1e-12 (the exponent is undefined there).
double exp_interp(double a, double f_a, double b, double f_b, double x);

enum class DepthDistribution { Logarithmic, Uniform };
enum class DepthInterp { Exponential, Linear };

struct SliceConfig {
  double y_min = -125.0;
  double y_max = 4.5;
  int count = 8;
  DepthDistribution distribution = DepthDistribution::Logarithmic;
  bool single_precision = false;
  void validate() const;
};

// Sampled depth planes for config (uniform pre-images mapped through the
// chosen distribution).
std::vector<double> slice_depths(const SliceConfig& config);

class VelocitySlices {
 public:
  VelocitySlices() = default;

  const std::vector<double>& depths() const { return depths_; }
  double y_min() const { return y_min_; }
  double y_max() const { return y_max_; }

  // Horizontal bilinear sample of slice i (cascade tiles summed).
  Vec3 sample_slice(size_t i, Vec2 x) const;

  friend VelocitySlices build_slices(const CascadeSet& cascades, double t,
                                     const SliceConfig& config);

 private:
  struct CascadeFields {
    double length = 0.0;
    RealField vx, vy, vz;
  };
  double y_min_ = 0.0, y_max_ = 0.0;
  std::vector<double> depths_;
  std::vector<std::vector<CascadeFields>> slices_;  // [depth][cascade]
};

// One set of velocity fields per sampled depth, via packed transforms.
VelocitySlices build_slices(const CascadeSet& cascades, double t, const SliceConfig& config);

// Interpolated velocity at depth y in [y_min, y_max]:
//  - below the deepest slice, interpolate toward a null velocity at y_min;
//  - between slices, split each sampled vector into horizontal magnitude,
//    horizontal angle and vertical component; magnitude and vertical
//    component follow exp_interp, the angle walks the shortest arc with the
//    exponentially warped weight (component-wise linear when the horizontal
//    directions are near-antipodal);
//  - above the shallowest slice, extrapolate linearly (the attenuation is
//    linear in y above the surface).
// DepthInterp::Linear replaces all of the above segment rules with
// component-wise linear interpolation.
Vec3 velocity_at(const VelocitySlices& slices, Vec2 x, double y,
                 DepthInterp interp = DepthInterp::Exponential);

}  // namespace ocean

#endif
