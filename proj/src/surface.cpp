#include "ocean/surface.hpp"

#include <cmath>

#include "ocean/parallel.hpp"

namespace ocean {

void CascadeConfig::validate() const {
  if (lengths.empty()) throw ConfigError("at least one cascade is required");
  if (cutoffs.size() + 1 != lengths.size())
    throw ConfigError("cascade cutoffs must number one less than cascade lengths");
  for (size_t i = 1; i < lengths.size(); ++i)
    if (!(lengths[i] < lengths[i - 1]))
      throw ConfigError("cascade lengths must be strictly decreasing");
  for (size_t i = 1; i < cutoffs.size(); ++i)
    if (!(cutoffs[i] > cutoffs[i - 1])) throw ConfigError("cascade cutoffs must be increasing");
  if (!is_power_of_two(resolution) || resolution < 2)
    throw ConfigError("cascade resolution must be a power of two >= 2");
}

CascadeSet::CascadeSet(const CascadeConfig& config, const SpectrumParams& params)
    : config_(config), params_(params) {
  config.validate();
  params.validate();
  grids_.resize(config.lengths.size());
  parallel_for(config.lengths.size(), [&](size_t c0, size_t c1) {
    for (size_t c = c0; c < c1; ++c) {
      GridConfig gc;
      gc.resolution = config.resolution;
      gc.length = config.lengths[c];
      gc.band_min = c == 0 ? 0.0 : config.cutoffs[c - 1];
      gc.band_max = c + 1 < config.lengths.size() ? config.cutoffs[c] : 1e300;
      grids_[c] = generate_h0(gc, params, static_cast<uint32_t>(c));
    }
  });
}

std::array<ComplexField, kFieldCount> assemble_coefficients(const WaveGrid& grid, double t,
                                                            double choppiness) {
  int n = grid.resolution();
  std::array<ComplexField, kFieldCount> out;
  for (auto& f : out) f = ComplexField(n);

  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (!grid.in_band(i, j)) continue;
      const WaveVector& w = grid.wave(i, j);
      cplx rot = cplx(std::cos(w.omega * t), std::sin(w.omega * t));
      cplx ht = grid.h0().at(i, j) * rot + grid.h0_conj_neg().at(i, j) * std::conj(rot);

      double ux = w.kx / w.k;
      double uz = w.kz / w.k;
      cplx dx = cplx(0, 1) * ux * ht * choppiness;
      cplx dz = cplx(0, 1) * uz * ht * choppiness;

      out[kFieldH].at(i, j) = ht;
      out[kFieldDx].at(i, j) = dx;
      out[kFieldDz].at(i, j) = dz;
      out[kFieldDxDx].at(i, j) = cplx(0, -w.kx) * dx;
      out[kFieldDzDx].at(i, j) = cplx(0, -w.kx) * dz;
      out[kFieldDzDz].at(i, j) = cplx(0, -w.kz) * dz;
      out[kFieldHx].at(i, j) = cplx(0, w.kx) * ht;
      out[kFieldHz].at(i, j) = cplx(0, w.kz) * ht;
    }
  }
  return out;
}

SurfaceMaps generate_maps(const CascadeSet& cascades, double t,
                          const SurfaceGenOptions& options) {
  SurfaceMaps maps;
  maps.time = t;
  maps.cascades.resize(cascades.grids().size());

  // one work item per (cascade, transform pair)
  static constexpr int kPairs[4][2] = {{kFieldH, kFieldDx},
                                       {kFieldDz, kFieldDxDx},
                                       {kFieldDzDx, kFieldDzDz},
                                       {kFieldHx, kFieldHz}};
  size_t jobs = cascades.grids().size() * 4;
  std::vector<std::array<ComplexField, kFieldCount>> coeffs(cascades.grids().size());
  for (size_t c = 0; c < cascades.grids().size(); ++c) {
    coeffs[c] = assemble_coefficients(cascades.grids()[c], t, options.choppiness);
    maps.cascades[c].length = cascades.grids()[c].length();
  }
  parallel_for(jobs, [&](size_t j0, size_t j1) {
    for (size_t job = j0; job < j1; ++job) {
      size_t c = job / 4;
      const auto& pair = kPairs[job % 4];
      auto [re, im] = ifft2_hermitian_pair(coeffs[c][pair[0]], coeffs[c][pair[1]]);
      maps.cascades[c].fields[pair[0]] = std::move(re);
      maps.cascades[c].fields[pair[1]] = std::move(im);
    }
  });

  if (options.single_precision) {
    for (auto& cascade : maps.cascades)
      for (auto& field : cascade.fields)
        for (double& v : field) v = static_cast<float>(v);
  }
  return maps;
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

}  // namespace

double SurfaceMaps::sample(SurfaceField field, Vec2 x) const {
  double acc = 0.0;
  for (const auto& c : cascades) acc += bilinear_periodic(c.fields[field], c.length, x);
  return acc;
}

SurfaceMaps::Displacement SurfaceMaps::sample_displacement(Vec2 x) const {
  Displacement d;
  for (const auto& c : cascades) {
    d.dx += bilinear_periodic(c.fields[kFieldDx], c.length, x);
    d.h += bilinear_periodic(c.fields[kFieldH], c.length, x);
    d.dz += bilinear_periodic(c.fields[kFieldDz], c.length, x);
  }
  return d;
}

double height_at(const SurfaceMaps& maps, Vec2 x) {
  Vec2 w{0.0, 0.0};
  double h = 0.0;
  for (int iter = 0; iter < kHeightRetrievalIters; ++iter) {
    Vec2 p = x - w;
    auto d = maps.sample_displacement(p);
    w = Vec2{d.dx, d.dz};
    h = d.h;
  }
  return h;
}

double height_at_tolerance(const SurfaceMaps& maps, Vec2 x, double tol, int max_iters,
                           int* iterations) {
  Vec2 w{0.0, 0.0};
  double h_prev = 0.0;
  for (int iter = 1; iter <= max_iters; ++iter) {
    Vec2 p = x - w;
    auto d = maps.sample_displacement(p);
    w = Vec2{d.dx, d.dz};
    if (std::fabs(d.h - h_prev) < tol) {
      if (iterations) *iterations = iter;
      return d.h;
    }
    h_prev = d.h;
  }
  if (iterations) *iterations = max_iters;
  return h_prev;
}

}  // namespace ocean
