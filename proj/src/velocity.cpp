#include "ocean/velocity.hpp"

#include <algorithm>
#include <cmath>

#include "ocean/parallel.hpp"

namespace ocean {

double attenuation(double k, double y) { return y > 0.0 ? 1.0 + k * y : std::exp(k * y); }

namespace {

// G(k, t) = h0(k) e^{i w t} - conj(h0(-k)) e^{-i w t}; the common factor of
// every velocity component.
cplx time_factor(const WaveGrid& grid, int i, int j, double t) {
  double omega = grid.wave(i, j).omega;
  cplx rot(std::cos(omega * t), std::sin(omega * t));
  return grid.h0().at(i, j) * rot - grid.h0_conj_neg().at(i, j) * std::conj(rot);
}

}  // namespace

DirectVelocityEvaluator::DirectVelocityEvaluator(const CascadeSet& cascades, double t) {
  for (const auto& grid : cascades.grids()) {
    int n = grid.resolution();
    double g = grid.gravity();
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (!grid.in_band(i, j)) continue;
        const WaveVector& w = grid.wave(i, j);
        cplx gt = time_factor(grid, i, j, t);
        if (gt == cplx(0.0, 0.0)) continue;
        Mode m;
        m.kx = w.kx;
        m.kz = w.kz;
        m.k = w.k;
        m.cx = gt * (-w.kx * g / w.omega);
        m.cy = gt * cplx(0.0, w.omega);
        m.cz = gt * (-w.kz * g / w.omega);
        modes_.push_back(m);
      }
    }
  }
}

Vec3 DirectVelocityEvaluator::operator()(Vec2 x, double y) const {
  double vx = 0.0, vy = 0.0, vz = 0.0;
  for (const Mode& m : modes_) {
    double phase = m.kx * x.x + m.kz * x.z;
    double c = std::cos(phase), s = std::sin(phase);
    double e = attenuation(m.k, y);
    // Re((a + i b)(c + i s)) = a c - b s
    vx += e * (m.cx.real() * c - m.cx.imag() * s);
    vy += e * (m.cy.real() * c - m.cy.imag() * s);
    vz += e * (m.cz.real() * c - m.cz.imag() * s);
  }
  return {vx, vy, vz};
}

Vec3 velocity_direct(const CascadeSet& cascades, Vec2 x, double y, double t) {
  return DirectVelocityEvaluator(cascades, t)(x, y);
}

double log_distribution(double y, double y_min) {
  if (!(y_min < 0.0)) throw DomainError("log_distribution: y_min must be negative");
  constexpr double alpha = 0.0001;
  double beta = -y_min / (2.0 * std::log(alpha * y_min * y_min + 1.0));
  double v = beta * std::log(alpha * y * y + 1.0);
  return y > 0.0 ? v : -v;
}

double exp_interp(double a, double f_a, double b, double f_b, double x) {
  if (a == b) throw DomainError("exp_interp: endpoints coincide");
  bool degenerate = std::fabs(f_a) < 1e-12 || std::fabs(f_b) < 1e-12 || (f_a < 0.0) != (f_b < 0.0);
  if (degenerate) {
    double u = (x - a) / (b - a);
    return f_a + (f_b - f_a) * u;
  }
  double beta = (std::log(std::fabs(f_b)) - std::log(std::fabs(f_a))) / (b - a);
  return f_a * std::exp(beta * (x - a));
}

void SliceConfig::validate() const {
  if (!(y_min < y_max)) throw ConfigError("slice interval requires y_min < y_max");
  if (count < 2) throw ConfigError("at least two depth slices are required");
  if (distribution == DepthDistribution::Logarithmic && !(y_min < 0.0))
    throw ConfigError("logarithmic distribution requires y_min < 0");
}

std::vector<double> slice_depths(const SliceConfig& config) {
  config.validate();
  std::vector<double> depths(config.count);
  for (int i = 0; i < config.count; ++i) {
    double pre = config.y_min + (config.y_max - config.y_min) * i / (config.count - 1);
    depths[i] = config.distribution == DepthDistribution::Logarithmic
                    ? log_distribution(pre, config.y_min)
                    : pre;
  }
  std::sort(depths.begin(), depths.end());
  return depths;
}

VelocitySlices build_slices(const CascadeSet& cascades, double t, const SliceConfig& config) {
  VelocitySlices out;
  out.depths_ = slice_depths(config);
  out.y_min_ = config.y_min;
  out.y_max_ = config.y_max;

  size_t ncasc = cascades.grids().size();
  size_t ndepth = out.depths_.size();
  out.slices_.assign(ndepth, std::vector<VelocitySlices::CascadeFields>(ncasc));

  // Coefficient fields per (depth, cascade): vx packs with vz in one
  // transform; vy fields pack pairwise across adjacent depths.
  struct Coeffs {
    ComplexField vx, vy, vz;
  };
  std::vector<std::vector<Coeffs>> coeffs(ndepth, std::vector<Coeffs>(ncasc));
  parallel_for(ndepth * ncasc, [&](size_t w0, size_t w1) {
    for (size_t w = w0; w < w1; ++w) {
      size_t di = w / ncasc, ci = w % ncasc;
      const WaveGrid& grid = cascades.grids()[ci];
      int n = grid.resolution();
      double g = grid.gravity();
      double y = out.depths_[di];
      Coeffs& c = coeffs[di][ci];
      c.vx = ComplexField(n);
      c.vy = ComplexField(n);
      c.vz = ComplexField(n);
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
          if (!grid.in_band(i, j)) continue;
          const WaveVector& wv = grid.wave(i, j);
          cplx gt = time_factor(grid, i, j, t) * attenuation(wv.k, y);
          c.vx.at(i, j) = gt * (-wv.kx * g / wv.omega);
          c.vy.at(i, j) = gt * cplx(0.0, wv.omega);
          c.vz.at(i, j) = gt * (-wv.kz * g / wv.omega);
        }
      }
    }
  });

  // transform jobs: per (depth, cascade) one packed (vx, vz); vy pairs
  size_t pair_jobs = (ndepth + 1) / 2;
  size_t jobs = ndepth * ncasc + pair_jobs * ncasc;
  parallel_for(jobs, [&](size_t w0, size_t w1) {
    for (size_t w = w0; w < w1; ++w) {
      if (w < ndepth * ncasc) {
        size_t di = w / ncasc, ci = w % ncasc;
        auto [re, im] = ifft2_hermitian_pair(coeffs[di][ci].vx, coeffs[di][ci].vz);
        out.slices_[di][ci].length = cascades.grids()[ci].length();
        out.slices_[di][ci].vx = std::move(re);
        out.slices_[di][ci].vz = std::move(im);
      } else {
        size_t p = w - ndepth * ncasc;
        size_t ci = p % ncasc;
        size_t d0 = (p / ncasc) * 2, d1 = d0 + 1;
        if (d1 < ndepth) {
          auto [re, im] = ifft2_hermitian_pair(coeffs[d0][ci].vy, coeffs[d1][ci].vy);
          out.slices_[d0][ci].vy = std::move(re);
          out.slices_[d1][ci].vy = std::move(im);
        } else {
          ComplexField zero(coeffs[d0][ci].vy.size());
          auto [re, im] = ifft2_hermitian_pair(coeffs[d0][ci].vy, zero);
          out.slices_[d0][ci].vy = std::move(re);
        }
      }
    }
  });

  if (config.single_precision) {
    for (auto& depth : out.slices_)
      for (auto& c : depth)
        for (RealField* f : {&c.vx, &c.vy, &c.vz})
          for (double& v : *f) v = static_cast<float>(v);
  }
  return out;
}

namespace {

double bilinear_periodic(const RealField& f, double length, Vec2 x) {
  int n = f.size();
  double u = x.x / length * n;
  double v = x.z / length * n;
  double fu = u - std::floor(u);
  double fv = v - std::floor(v);
  auto wrap = [n](double w) {
    int i = static_cast<int>(std::floor(w)) % n;
    return i < 0 ? i + n : i;
  };
  int i0 = wrap(u), j0 = wrap(v);
  int i1 = (i0 + 1) % n, j1 = (j0 + 1) % n;
  return f.at(i0, j0) * (1 - fu) * (1 - fv) + f.at(i1, j0) * fu * (1 - fv) +
         f.at(i0, j1) * (1 - fu) * fv + f.at(i1, j1) * fu * fv;
}

Vec3 lerp_vec(const Vec3& a, const Vec3& b, double u) { return a + (b - a) * u; }

}  // namespace

Vec3 VelocitySlices::sample_slice(size_t i, Vec2 x) const {
  Vec3 v;
  for (const auto& c : slices_[i]) {
    v.x += bilinear_periodic(c.vx, c.length, x);
    v.y += bilinear_periodic(c.vy, c.length, x);
    v.z += bilinear_periodic(c.vz, c.length, x);
  }
  return v;
}

Vec3 velocity_at(const VelocitySlices& slices, Vec2 x, double y, DepthInterp interp) {
  if (y < slices.y_min() || y > slices.y_max())
    throw DomainError("velocity_at: depth outside [y_min, y_max]");
  const auto& depths = slices.depths();

  if (y <= depths.front()) {
    // toward a null velocity at y_min; a zero endpoint forces the linear rule
    Vec3 vb = slices.sample_slice(0, x);
    double u = (y - slices.y_min()) / (depths.front() - slices.y_min());
    return vb * u;
  }
  if (y >= depths.back()) {
    size_t last = depths.size() - 1;
    Vec3 va = slices.sample_slice(last - 1, x);
    Vec3 vb = slices.sample_slice(last, x);
    double u = (y - depths[last - 1]) / (depths[last] - depths[last - 1]);
    return lerp_vec(va, vb, u);
  }

  size_t hi = std::upper_bound(depths.begin(), depths.end(), y) - depths.begin();
  size_t lo = hi - 1;
  double a = depths[lo], b = depths[hi];
  Vec3 va = slices.sample_slice(lo, x);
  Vec3 vb = slices.sample_slice(hi, x);
  double u_lin = (y - a) / (b - a);
  if (interp == DepthInterp::Linear) return lerp_vec(va, vb, u_lin);

  double mag_a = std::hypot(va.x, va.z);
  double mag_b = std::hypot(vb.x, vb.z);
  double mag = exp_interp(a, mag_a, b, mag_b, y);
  double vy = exp_interp(a, va.y, b, vb.y, y);

  double ang_a = std::atan2(va.z, va.x);
  double ang_b = std::atan2(vb.z, vb.x);
  double dphi = wrap_angle(ang_b - ang_a);
  double hx, hz;
  if (std::fabs(dphi) > kPi - 0.1) {
    // near-antipodal horizontal directions: component-wise linear
    hx = lerp(va.x, vb.x, u_lin);
    hz = lerp(va.z, vb.z, u_lin);
  } else {
    double u = u_lin;
    if (mag_a > 1e-12 && mag_b > 1e-12) {
      double beta = (std::log(mag_b) - std::log(mag_a)) / (b - a);
      if (std::fabs(beta) > 1e-12)
        u = std::expm1(beta * (y - a)) / std::expm1(beta * (b - a));
    }
    double phi = ang_a + dphi * u;
    hx = mag * std::cos(phi);
    hz = mag * std::sin(phi);
  }
  return {hx, vy, hz};
}

}  // namespace ocean
