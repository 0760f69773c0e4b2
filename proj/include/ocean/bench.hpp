#ifndef OCEAN_BENCH_HPP
#define OCEAN_BENCH_HPP

#include <vector>

#include "ocean/surface.hpp"
#include "ocean/velocity.hpp"

namespace ocean {

// ---------------------------------------------------------------------------
// Reproducible numerical studies. The CLI `bench` subcommands and the
// acceptance suite share these implementations.
// ---------------------------------------------------------------------------

// Monte-Carlo check of the approximated directional normalization: draws the
// frequency ratio uniformly from the sub-peak range the fit is calibrated on
// (r in [0.56, 0.94), full swell), and integrates the directional-swell
// product over angle by quadrature for each sample.
struct NormalizationResult {
  double mean = 0.0;
  double min_value = 0.0;
  double max_value = 0.0;
  int samples = 0;
};
NormalizationResult normalization_study(int samples = 10000, uint64_t seed = 0);

// Iteration counts of the height retrieval across wind speeds.
struct ConvergenceConfig {
  double wind_min = 0.1;
  double wind_max = 35.0;
  double wind_step = 0.5;
  int points = 1000;
  double domain = 1e4;   // square side, m
  double tol = 0.01;     // m
  int max_iters = 16;
  int resolution = 256;
  double fetch = 1e4;    // short coastal fetch keeps the study's seas steep but sane
  double map_time = 1.0;
  uint64_t seed = 0;
};
struct ConvergenceRow {
  double wind = 0.0;
  double mean_iters = 0.0;
  double var_iters = 0.0;
  double frac_within_4 = 0.0;
};
std::vector<ConvergenceRow> convergence_study(const ConvergenceConfig& config);

// Slice-interpolation accuracy against the direct evaluation.
struct InterpAccuracyConfig {
  int resolution = 128;
  double wind = 20.0;
  double fetch = 1e5;
  double horizontal = 1000.0;  // sample box half-side
  double y_min = -125.0;
  double y_max = 4.5;
  int samples = 10000;
  double map_time = 1.0;
  uint64_t seed = 0;
  std::vector<int> degrees = {8};
  bool timing = false;  // timing columns are machine-dependent; off by default
};
struct InterpAccuracyRow {
  int degree = 0;
  DepthDistribution distribution = DepthDistribution::Logarithmic;
  DepthInterp interp = DepthInterp::Exponential;
  double mean_error = 0.0;  // mean | |v_interp| - |v_direct| |, m/s
  double p95_error = 0.0;
  double build_ms = 0.0;
  double query_ns = 0.0;
};
std::vector<InterpAccuracyRow> interp_accuracy_study(const InterpAccuracyConfig& config);

// Performance/accuracy trade-off J(d) = alpha P(d) + beta A(d) over the
// logarithmic+exponential scheme. P is wall-clock seconds (machine
// dependent); A is the reproducible accuracy column.
struct DegreeStudyRow {
  int degree = 0;
  double accuracy = 0.0;     // A(d), m/s
  double perf_seconds = 0.0;  // P(d)
  double objective = 0.0;    // J(d)
};
struct DegreeStudyResult {
  std::vector<DegreeStudyRow> rows;
  int best_degree = 0;
  double alpha = 10.0;
  double beta = 2.0;
};
DegreeStudyResult degree_study(const InterpAccuracyConfig& config, double alpha = 10.0,
                               double beta = 2.0);

const char* to_string(DepthDistribution d);
const char* to_string(DepthInterp i);

}  // namespace ocean

#endif
