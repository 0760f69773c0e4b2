#include "ocean/spectra.hpp"

#include <cmath>

#include "ocean/parallel.hpp"
#include "ocean/rng.hpp"

namespace ocean {

double SpectrumParams::alpha() const {
  return 0.076 * std::pow(wind_speed * wind_speed / (fetch * gravity), 0.22);
}

double SpectrumParams::peak_omega() const {
  if (peak_omega_override) return *peak_omega_override;
  return 22.0 * gravity * gravity / (wind_speed * fetch);
}

double SpectrumParams::standard_peak_omega() const {
  return 22.0 * std::cbrt(gravity * gravity / (wind_speed * fetch));
}

void SpectrumParams::validate() const {
  if (!(wind_speed > 0.0)) throw ConfigError("wind_speed must be > 0");
  if (!(fetch > 0.0)) throw ConfigError("fetch must be > 0");
  if (swell < 0.0 || swell > 1.0) throw ConfigError("swell must be in [0, 1]");
  if (direction_mix < 0.0 || direction_mix > 1.0)
    throw ConfigError("direction_mix must be in [0, 1]");
  if (!(gravity > 0.0)) throw ConfigError("gravity must be > 0");
  if (peak_omega_override && !(*peak_omega_override > 0.0))
    throw ConfigError("peak_omega_override must be > 0");
}

double dispersion(double k, double g) { return std::sqrt(g * k); }

double jonswap(double omega, const SpectrumParams& params) {
  if (!(omega > 0.0)) throw DomainError("jonswap: omega must be > 0");
  double g = params.gravity;
  double omega_p = params.peak_omega();
  double sigma = omega <= omega_p ? 0.07 : 0.09;
  double d = (omega - omega_p) / (sigma * omega_p);
  double r = std::exp(-0.5 * d * d);
  double ratio = omega_p / omega;
  double ratio4 = ratio * ratio * ratio * ratio;
  return params.alpha() * g * g / std::pow(omega, 5.0) * std::exp(-1.25 * ratio4) *
         std::pow(3.3, r);
}

double beta_s(double r_omega) {
  if (r_omega < 0.95) return 2.61 * std::pow(r_omega, 1.3);
  if (r_omega < 1.6) return 2.28 * std::pow(r_omega, -1.3);
  double eps = 0.8393 * std::exp(-0.567 * std::log(r_omega * r_omega)) - 0.4;
  return std::pow(10.0, eps);
}

double directional_kernel(double beta, double theta) {
  double sech = 1.0 / std::cosh(beta * theta);
  return 0.5 * beta * sech * sech / std::tanh(beta * kPi);
}

double donelan_banner(double omega, double theta, double omega_p) {
  return directional_kernel(beta_s(omega / omega_p), theta);
}

double swell_spread(double omega, double theta, double omega_p, double xi) {
  double r = omega / omega_p;
  double s = 16.0 * std::tanh(1.0 / r) * xi * xi;
  if (s == 0.0) return 1.0;
  double c = std::fabs(std::cos(0.5 * theta));
  if (c == 0.0) return 0.0;
  return std::pow(c, 2.0 * s);
}

double q_dbxi_approx(double r_omega) {
  if (r_omega < 0.94)
    return 7.1467551 * r_omega * r_omega - 13.4662001 * r_omega + 7.75651088;
  if (r_omega < 5.0)
    return -0.69906109 * r_omega * r_omega + 0.77975933 * r_omega + 0.10169164;
  if (r_omega < 100.0)
    return -2.1860997 * r_omega * r_omega + 0.0269209 * r_omega + 0.00016283;
  return 1.2038847 * r_omega + 0.0008147;
}

double q_dbxi_quadrature(double r_omega, double xi, int panels) {
  // composite Simpson over [-pi, pi]
  double beta = beta_s(r_omega);
  double s = 16.0 * std::tanh(1.0 / r_omega) * xi * xi;
  auto f = [&](double theta) {
    double c = std::fabs(std::cos(0.5 * theta));
    double spread = (s == 0.0) ? 1.0 : (c == 0.0 ? 0.0 : std::pow(c, 2.0 * s));
    return directional_kernel(beta, theta) * spread;
  };
  double h = 2.0 * kPi / panels;
  double acc = f(-kPi) + f(kPi);
  for (int i = 1; i < panels; ++i) acc += f(-kPi + h * i) * ((i & 1) ? 4.0 : 2.0);
  double integral = acc * h / 3.0;
  return 1.0 / integral;
}

double directional(double omega, double theta, const SpectrumParams& params) {
  double uniform = 1.0 / (2.0 * kPi);
  double delta = params.direction_mix;
  if (delta == 0.0) return uniform;
  double omega_p = params.peak_omega();
  double d = q_dbxi_approx(omega / omega_p) * donelan_banner(omega, theta, omega_p) *
             swell_spread(omega, theta, omega_p, params.swell);
  if (d < 0.0) d = 0.0;  // the fit can undershoot far above the peak
  return (1.0 - delta) * uniform + delta * d;
}

void GridConfig::validate() const {
  if (!is_power_of_two(resolution) || resolution < 2)
    throw ConfigError("grid resolution must be a power of two >= 2");
  if (!(length > 0.0)) throw ConfigError("cascade length must be > 0");
  if (!(band_min >= 0.0) || !(band_max > band_min))
    throw ConfigError("cascade band must satisfy 0 <= band_min < band_max");
}

double h0_variance(const WaveVector& w, double tile_length, const SpectrumParams& params) {
  // E|h0|^2 = S(omega) D(omega, theta) |domega/dk| dk^2 / k with dk = 2*pi/L.
  // Written with the grid-cell measure so the realized sea variance matches
  // the integral of S * D independent of tile length and resolution.
  if (w.k <= 0.0) return 0.0;
  double dk = 2.0 * kPi / tile_length;
  double theta = std::atan2(w.kz, w.kx) - params.wind_direction;
  double s = jonswap(w.omega, params);
  double d = directional(w.omega, theta, params);
  double domega_dk = params.gravity / (2.0 * w.omega);
  return s * d * domega_dk * dk * dk / w.k;
}

WaveGrid generate_h0(const GridConfig& config, const SpectrumParams& params,
                     uint32_t cascade_index) {
  config.validate();
  params.validate();

  WaveGrid grid;
  int n = config.resolution;
  grid.n_ = n;
  grid.length_ = config.length;
  grid.band_min_ = config.band_min;
  grid.band_max_ = config.band_max;
  grid.gravity_ = params.gravity;
  grid.waves_.resize(static_cast<size_t>(n) * n);
  grid.in_band_.assign(static_cast<size_t>(n) * n, 0);
  grid.h0_ = ComplexField(n);
  grid.h0_conj_neg_ = ComplexField(n);

  double dk = 2.0 * kPi / config.length;
  parallel_for(static_cast<size_t>(n), [&](size_t i0, size_t i1) {
    for (size_t i = i0; i < i1; ++i) {
      for (int j = 0; j < n; ++j) {
        WaveVector& w = grid.waves_[i * n + j];
        w.kx = dk * (static_cast<int>(i) - n / 2);
        w.kz = dk * (j - n / 2);
        w.k = std::hypot(w.kx, w.kz);
        w.omega = dispersion(w.k, params.gravity);

        bool banded = w.k > 0.0 && w.k >= config.band_min && w.k < config.band_max;
        grid.in_band_[i * n + j] = banded ? 1 : 0;
        if (!banded) continue;

        cplx xi = gaussian_complex(params.rng_seed, cascade_index, static_cast<uint32_t>(i),
                                   static_cast<uint32_t>(j));
        grid.h0_.at(static_cast<int>(i), j) =
            xi * std::sqrt(h0_variance(w, config.length, params));
      }
    }
  });

  for (int i = 0; i < n; ++i) {
    int ni = i == 0 ? 0 : n - i;
    for (int j = 0; j < n; ++j) {
      int nj = j == 0 ? 0 : n - j;
      grid.h0_conj_neg_.at(i, j) = std::conj(grid.h0_.at(ni, nj));
    }
  }
  return grid;
}

}  // namespace ocean
