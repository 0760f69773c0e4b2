#ifndef OCEAN_SPECTRA_HPP
#define OCEAN_SPECTRA_HPP

#include <optional>
#include <vector>

#include "ocean/core.hpp"

namespace ocean {

// ---------------------------------------------------------------------------
// Statistical sea description: a fetch-limited frequency spectrum combined
// with an empirical directional spreading model, realized as complex
// Gaussian amplitudes on a frequency grid.
// ---------------------------------------------------------------------------

struct SpectrumParams {
  double wind_speed = 5.0;      // U, m/s
  double fetch = 100000.0;      // F, m
  double wind_direction = 0.0;  // theta0, rad
  double swell = 0.0;           // xi in [0, 1]
  double direction_mix = 0.0;   // delta in [0, 1]: 0 uniform, 1 fully directional
  double gravity = kGravity;
  uint64_t rng_seed = 0;

  // The closed-form peak frequency below has questionable dimensions; this
  // override lets configs substitute e.g. the standard fetch-limited value.
  std::optional<double> peak_omega_override;

  double alpha() const;                   // 0.076 (U^2 / (F g))^0.22
  double peak_omega() const;              // 22 g^2 / (U F) unless overridden
  double standard_peak_omega() const;     // 22 (g^2 / (U F))^(1/3)
  void validate() const;
};

struct WaveVector {
  double kx = 0.0;     // rad/m
  double kz = 0.0;     // rad/m
  double k = 0.0;      // |k|
  double omega = 0.0;  // sqrt(g k)
};

// Deep-water dispersion relation omega(k) = sqrt(g k).
double dispersion(double k, double g = kGravity);

// Fetch-limited frequency spectrum S(omega), m^2 s.
double jonswap(double omega, const SpectrumParams& params);

// Directional concentration exponent; piecewise in r = omega/omega_p with
// branch changes at 0.95 and 1.6. Below the empirical validity floor of
// 0.56 the first branch is extended continuously.
double beta_s(double r_omega);

// Normalized sech^2 spreading kernel at concentration beta:
// 0.5 * beta * sech(beta*theta)^2 / tanh(beta*pi); integrates to 1 over
// [-pi, pi] for any beta > 0.
double directional_kernel(double beta, double theta);

// Spreading value at (omega, theta) relative to the spectral peak omega_p.
double donelan_banner(double omega, double theta, double omega_p);

// Swell elongation |cos(theta/2)|^(2 s) with s = 16 tanh(1/r) xi^2.
double swell_spread(double omega, double theta, double omega_p, double xi);

// Piecewise polynomial approximation of the swell-spreading normalization
// factor as a function of r = omega/omega_p (fit against the quadrature
// value in the sub-peak range; see q_dbxi_quadrature for the exact one).
double q_dbxi_approx(double r_omega);

// Exact normalization 1 / integral of donelan_banner * swell_spread, by
// quadrature. Test and study oracle for q_dbxi_approx.
double q_dbxi_quadrature(double r_omega, double xi, int panels = 4096);

// Full directional spectrum D(omega, theta): blend of the uniform 1/(2*pi)
// and the normalized directional-swell product, weighted by direction_mix.
// theta is already relative to the wind direction at call sites. Negative
// approximated densities (the fit is only calibrated below the peak) clamp
// to zero.
double directional(double omega, double theta, const SpectrumParams& params);

struct GridConfig {
  int resolution = 256;   // N, power of two
  double length = 256.0;  // tile length L, m
  double band_min = 0.0;  // |k| cutoff interval [band_min, band_max)
  double band_max = 1e300;
  void validate() const;
};

// Time-independent per-cascade spectrum tables: the wave vectors and the
// initial amplitudes h0(k) plus conj(h0(-k)).
class WaveGrid {
 public:
  WaveGrid() = default;

  int resolution() const { return n_; }
  double length() const { return length_; }
  double band_min() const { return band_min_; }
  double band_max() const { return band_max_; }
  double gravity() const { return gravity_; }

  const WaveVector& wave(int i, int j) const { return waves_[static_cast<size_t>(i) * n_ + j]; }
  const ComplexField& h0() const { return h0_; }
  const ComplexField& h0_conj_neg() const { return h0_conj_neg_; }
  bool in_band(int i, int j) const { return in_band_[static_cast<size_t>(i) * n_ + j]; }

  friend WaveGrid generate_h0(const GridConfig& config, const SpectrumParams& params,
                              uint32_t cascade_index);

 private:
  int n_ = 0;
  double length_ = 0.0;
  double band_min_ = 0.0, band_max_ = 0.0;
  double gravity_ = kGravity;
  std::vector<WaveVector> waves_;
  std::vector<char> in_band_;
  ComplexField h0_;
  ComplexField h0_conj_neg_;
};

// Builds the amplitude tables. Pure function of (config, params, cascade
// index); the counter-based generator makes element order irrelevant.
WaveGrid generate_h0(const GridConfig& config, const SpectrumParams& params,
                     uint32_t cascade_index = 0);

// Expected |h0(k)|^2 for one grid mode; the Monte-Carlo ensemble test and
// amplitude synthesis share this expression.
double h0_variance(const WaveVector& w, double tile_length, const SpectrumParams& params);

}  // namespace ocean

#endif
