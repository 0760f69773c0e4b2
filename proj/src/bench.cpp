#include "ocean/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

#include "ocean/parallel.hpp"
#include "ocean/rng.hpp"

namespace ocean {

namespace {
double now_s() {
  return std::chrono::duration<double>(std::chrono::steady_clock::now().time_since_epoch())
      .count();
}

// study seas use the standard fetch-limited peak so the spectrum has a
// proper low-frequency rolloff
SpectrumParams study_spectrum(double wind, double fetch, uint64_t seed) {
  SpectrumParams p;
  p.wind_speed = wind;
  p.fetch = fetch;
  p.direction_mix = 0.0;
  p.rng_seed = seed;
  p.peak_omega_override = p.standard_peak_omega();
  return p;
}
}  // namespace

const char* to_string(DepthDistribution d) {
  return d == DepthDistribution::Logarithmic ? "log" : "uniform";
}
const char* to_string(DepthInterp i) {
  return i == DepthInterp::Exponential ? "exp" : "linear";
}

NormalizationResult normalization_study(int samples, uint64_t seed) {
  std::vector<double> values(samples);
  parallel_for(static_cast<size_t>(samples), [&](size_t i0, size_t i1) {
    for (size_t i = i0; i < i1; ++i) {
      UniformStream u(seed, 0xA11CE000u + static_cast<uint64_t>(i));
      double r = u.next(0.56, 0.94);
      // integral of Q~ * D_DB * D_xi over theta equals Q~ / Q_exact
      values[i] = q_dbxi_approx(r) / q_dbxi_quadrature(r, 1.0);
    }
  });
  NormalizationResult res;
  res.samples = samples;
  res.mean = deterministic_sum(values.size(), 0.0, [&](size_t i) { return values[i]; }) / samples;
  res.min_value = *std::min_element(values.begin(), values.end());
  res.max_value = *std::max_element(values.begin(), values.end());
  return res;
}

std::vector<ConvergenceRow> convergence_study(const ConvergenceConfig& config) {
  std::vector<ConvergenceRow> rows;
  CascadeConfig cc;
  cc.resolution = config.resolution;
  int wind_count = static_cast<int>(std::floor((config.wind_max - config.wind_min) /
                                               config.wind_step + 1e-9)) + 1;
  for (int wi = 0; wi < wind_count; ++wi) {
    double wind = config.wind_min + wi * config.wind_step;
    CascadeSet cascades(cc, study_spectrum(wind, config.fetch, config.seed + wi));
    SurfaceMaps maps = generate_maps(cascades, config.map_time);

    std::vector<int> iters(config.points);
    parallel_for(static_cast<size_t>(config.points), [&](size_t p0, size_t p1) {
      for (size_t p = p0; p < p1; ++p) {
        UniformStream u(config.seed ^ 0xC0117ull, (static_cast<uint64_t>(wi) << 32) | p);
        Vec2 x{u.next(0.0, config.domain), u.next(0.0, config.domain)};
        int n = 0;
        height_at_tolerance(maps, x, config.tol, config.max_iters, &n);
        iters[p] = n;
      }
    });
    ConvergenceRow row;
    row.wind = wind;
    double sum = 0.0, sum2 = 0.0;
    int within = 0;
    for (int n : iters) {
      sum += n;
      sum2 += static_cast<double>(n) * n;
      if (n <= kHeightRetrievalIters) ++within;
    }
    row.mean_iters = sum / config.points;
    row.var_iters = sum2 / config.points - row.mean_iters * row.mean_iters;
    row.frac_within_4 = static_cast<double>(within) / config.points;
    rows.push_back(row);
  }
  return rows;
}

std::vector<InterpAccuracyRow> interp_accuracy_study(const InterpAccuracyConfig& config) {
  CascadeConfig cc;
  cc.resolution = config.resolution;
  CascadeSet cascades(cc, study_spectrum(config.wind, config.fetch, config.seed));
  DirectVelocityEvaluator direct(cascades, config.map_time);

  // sample points and reference norms
  std::vector<Vec3> pts(config.samples);
  std::vector<double> ref(config.samples);
  for (int i = 0; i < config.samples; ++i) {
    UniformStream u(config.seed ^ 0x5A11ull, static_cast<uint64_t>(i));
    pts[i] = {u.next(-config.horizontal, config.horizontal),
              u.next(config.y_min, config.y_max),
              u.next(-config.horizontal, config.horizontal)};
  }
  parallel_for(pts.size(), [&](size_t i0, size_t i1) {
    for (size_t i = i0; i < i1; ++i)
      ref[i] = direct(pts[i].xz(), pts[i].y).norm();
  });

  std::vector<InterpAccuracyRow> rows;
  for (int d : config.degrees) {
    for (DepthDistribution dist : {DepthDistribution::Logarithmic, DepthDistribution::Uniform}) {
      SliceConfig sc;
      sc.y_min = config.y_min;
      sc.y_max = config.y_max;
      sc.count = d;
      sc.distribution = dist;
      double tb0 = now_s();
      VelocitySlices slices = build_slices(cascades, config.map_time, sc);
      double build_ms = (now_s() - tb0) * 1e3;

      for (DepthInterp interp : {DepthInterp::Exponential, DepthInterp::Linear}) {
        std::vector<double> err(pts.size());
        double tq0 = now_s();
        parallel_for(pts.size(), [&](size_t i0, size_t i1) {
          for (size_t i = i0; i < i1; ++i) {
            Vec3 v = velocity_at(slices, pts[i].xz(), pts[i].y, interp);
            err[i] = std::fabs(v.norm() - ref[i]);
          }
        });
        double query_ns = (now_s() - tq0) * 1e9 / pts.size();

        InterpAccuracyRow row;
        row.degree = d;
        row.distribution = dist;
        row.interp = interp;
        row.mean_error =
            deterministic_sum(err.size(), 0.0, [&](size_t i) { return err[i]; }) / err.size();
        std::vector<double> sorted = err;
        std::sort(sorted.begin(), sorted.end());
        row.p95_error = sorted[static_cast<size_t>(0.95 * (sorted.size() - 1))];
        if (config.timing) {
          row.build_ms = build_ms;
          row.query_ns = query_ns;
        }
        rows.push_back(row);
      }
    }
  }
  return rows;
}

DegreeStudyResult degree_study(const InterpAccuracyConfig& config, double alpha, double beta) {
  DegreeStudyResult result;
  result.alpha = alpha;
  result.beta = beta;

  CascadeConfig cc;
  cc.resolution = config.resolution;
  CascadeSet cascades(cc, study_spectrum(config.wind, config.fetch, config.seed));
  DirectVelocityEvaluator direct(cascades, config.map_time);

  std::vector<Vec3> pts(config.samples);
  std::vector<double> ref(config.samples);
  for (int i = 0; i < config.samples; ++i) {
    UniformStream u(config.seed ^ 0x5A11ull, static_cast<uint64_t>(i));
    pts[i] = {u.next(-config.horizontal, config.horizontal),
              u.next(config.y_min, config.y_max),
              u.next(-config.horizontal, config.horizontal)};
  }
  parallel_for(pts.size(), [&](size_t i0, size_t i1) {
    for (size_t i = i0; i < i1; ++i) ref[i] = direct(pts[i].xz(), pts[i].y).norm();
  });

  for (int d : config.degrees) {
    SliceConfig sc;
    sc.y_min = config.y_min;
    sc.y_max = config.y_max;
    sc.count = d;
    sc.distribution = DepthDistribution::Logarithmic;

    double t0 = now_s();
    VelocitySlices slices = build_slices(cascades, config.map_time, sc);
    std::vector<double> err(pts.size());
    parallel_for(pts.size(), [&](size_t i0, size_t i1) {
      for (size_t i = i0; i < i1; ++i) {
        Vec3 v = velocity_at(slices, pts[i].xz(), pts[i].y, DepthInterp::Exponential);
        err[i] = std::fabs(v.norm() - ref[i]);
      }
    });
    double perf = now_s() - t0;

    DegreeStudyRow row;
    row.degree = d;
    row.accuracy =
        deterministic_sum(err.size(), 0.0, [&](size_t i) { return err[i]; }) / err.size();
    row.perf_seconds = perf;
    row.objective = alpha * perf + beta * row.accuracy;
    result.rows.push_back(row);
  }
  result.best_degree =
      std::min_element(result.rows.begin(), result.rows.end(),
                       [](const auto& a, const auto& b) { return a.objective < b.objective; })
          ->degree;
  return result;
}

}  // namespace ocean
