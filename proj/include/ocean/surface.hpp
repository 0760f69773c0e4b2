#ifndef OCEAN_SURFACE_HPP
#define OCEAN_SURFACE_HPP

#include <array>
#include <vector>

#include "ocean/fft.hpp"
#include "ocean/spectra.hpp"

namespace ocean {

// ---------------------------------------------------------------------------
// Spatial realization of the spectrum: per-cascade height, horizontal
// displacement and the five distinct derivative maps, plus sampling of the
// composed parametric surface.
// ---------------------------------------------------------------------------

struct CascadeConfig {
  int resolution = 256;
  std::vector<double> lengths = {256.0, 16.0, 4.0};
  // |k| cutoffs between consecutive cascades; cascade i covers
  // [cutoffs[i-1], cutoffs[i]) with implicit 0 below and +inf above.
  std::vector<double> cutoffs = {12.0 * kPi / 16.0, 12.0 * kPi / 4.0};
  void validate() const;
};

class CascadeSet {
 public:
  CascadeSet() = default;
  CascadeSet(const CascadeConfig& config, const SpectrumParams& params);

  const std::vector<WaveGrid>& grids() const { return grids_; }
  const SpectrumParams& params() const { return params_; }
  const CascadeConfig& config() const { return config_; }

 private:
  CascadeConfig config_;
  SpectrumParams params_;
  std::vector<WaveGrid> grids_;
};

// Indexes into the assembled coefficient array / generated map array.
enum SurfaceField : int {
  kFieldH = 0,
  kFieldDx,
  kFieldDz,
  kFieldDxDx,   // d(Dx)/dx
  kFieldDzDx,   // d(Dz)/dx, which equals d(Dx)/dz
  kFieldDzDz,   // d(Dz)/dz
  kFieldHx,     // dh/dx
  kFieldHz,     // dh/dz
  kFieldCount
};

// Frequency-space coefficients of the eight fields at time t. The
// displacement and its three derivatives carry the choppiness scale.
std::array<ComplexField, kFieldCount> assemble_coefficients(const WaveGrid& grid, double t,
                                                            double choppiness = 1.0);

struct SurfaceGenOptions {
  double choppiness = 1.0;
  bool single_precision = false;  // round maps through float after synthesis
};

struct SurfaceMaps {
  struct Cascade {
    double length = 0.0;
    std::array<RealField, kFieldCount> fields;
  };
  std::vector<Cascade> cascades;
  double time = 0.0;

  // Tile-periodic bilinear sample of one field, summed over cascades.
  double sample(SurfaceField field, Vec2 x) const;

  struct Displacement {
    double dx = 0.0, h = 0.0, dz = 0.0;
  };
  Displacement sample_displacement(Vec2 x) const;
};

// Eight real maps per cascade via four packed transforms each.
SurfaceMaps generate_maps(const CascadeSet& cascades, double t,
                          const SurfaceGenOptions& options = {});

// Water height of the parametric surface above x: fixed-point correction of
// the query position by the horizontal displacement, 4 rounds.
double height_at(const SurfaceMaps& maps, Vec2 x);

// Tolerance-mode variant: iterates until successive heights differ by less
// than tol (starting from a zero estimate), up to max_iters. Reports the
// number of displacement evaluations used.
double height_at_tolerance(const SurfaceMaps& maps, Vec2 x, double tol, int max_iters,
                           int* iterations = nullptr);

inline constexpr int kHeightRetrievalIters = 4;

}  // namespace ocean

#endif
