#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "ocean/bench.hpp"
#include "ocean/heightfield_io.hpp"
#include "ocean/parallel.hpp"
#include "ocean/sim.hpp"

namespace fs = std::filesystem;
using namespace ocean;

namespace {

struct CommonFlags {
  std::string config_path;
  std::string out_dir = "out";
  uint64_t seed = 0;
  bool seed_set = false;
  int threads = 0;
  std::string precision;

  void add_to(CLI::App* cmd, bool with_config) {
    if (with_config) cmd->add_option("--config", config_path, "scenario config file (JSON)");
    cmd->add_option("--out", out_dir, "output directory");
    cmd->add_option("--seed", seed, "override the scenario seed")->each([this](const std::string&) {
      seed_set = true;
    });
    cmd->add_option("--threads", threads, "worker thread cap (0 = hardware)");
    cmd->add_option("--precision", precision, "f32 or f64")
        ->check(CLI::IsMember({"f32", "f64"}));
  }
  void apply(Scenario& s) const {
    if (seed_set) {
      s.seed = seed;
      s.spectrum.rng_seed = seed;
    }
    if (!precision.empty()) {
      s.single_precision = (precision == "f32");
      s.velocity.slices.single_precision = s.single_precision;
    }
  }
};

std::ofstream open_out(const fs::path& path) {
  std::ofstream f(path);
  if (!f) throw IoError("cannot open for writing: " + path.string());
  f.precision(17);
  return f;
}

void dump_fields(const Simulation& sim, const fs::path& dir, double t, int resolution,
                 const std::string& format) {
  fs::create_directories(dir);
  // composed free surface over one large-cascade tile
  double extent = sim.scenario().cascades.lengths.front();
  RealField composed(resolution);
  for (int i = 0; i < resolution; ++i)
    for (int j = 0; j < resolution; ++j)
      composed.at(i, j) =
          sim.compose_height({extent * i / resolution, extent * j / resolution});
  char tbuf[32];
  std::snprintf(tbuf, sizeof tbuf, "%.3f", t);
  if (format == "csv") {
    write_heightfield_csv_file((dir / ("surface_composed_t" + std::string(tbuf) + ".csv")).string(),
                               composed);
  } else {
    write_heightfield_file((dir / ("surface_composed_t" + std::string(tbuf) + ".abhf")).string(),
                           {static_cast<uint32_t>(resolution), -1, static_cast<float>(t)},
                           composed);
  }
  static const char* kNames[kFieldCount] = {"h",     "dx",    "dz",    "ddx_dx",
                                            "ddz_dx", "ddz_dz", "dh_dx", "dh_dz"};
  for (size_t c = 0; c < sim.maps().cascades.size(); ++c) {
    for (int f = 0; f < kFieldCount; ++f) {
      const RealField& field = sim.maps().cascades[c].fields[f];
      std::string base = "cascade" + std::to_string(c) + "_" + kNames[f] + "_t" + tbuf;
      if (format == "csv") {
        write_heightfield_csv_file((dir / (base + ".csv")).string(), field);
      } else {
        write_heightfield_file(
            (dir / (base + ".abhf")).string(),
            {static_cast<uint32_t>(field.size()), static_cast<int32_t>(c), static_cast<float>(t)},
            field);
      }
    }
  }
}

int cmd_run(const CommonFlags& flags, bool report_timing) {
  Scenario scenario = load_scenario_file(flags.config_path);
  CommonFlags f = flags;
  f.apply(scenario);
  if (!flags.out_dir.empty()) scenario.output.directory = flags.out_dir;

  fs::path out(scenario.output.directory);
  fs::create_directories(out);
  Simulation sim(scenario);

  std::vector<std::ofstream> traj, forces, zones;
  for (size_t i = 0; i < sim.bodies().size(); ++i) {
    std::string tag = sim.bodies()[i]->config.name.empty() ? "body" + std::to_string(i)
                                                           : sim.bodies()[i]->config.name;
    if (scenario.output.trajectory) {
      traj.push_back(open_out(out / (tag + "_trajectory.csv")));
      traj.back() << "t,px,py,pz,qw,qx,qy,qz,vx,vy,vz,wx,wy,wz\n";
    }
    if (scenario.output.forces) {
      forces.push_back(open_out(out / (tag + "_forces.csv")));
      forces.back() << "t,fbx,fby,fbz,fwx,fwy,fwz,fax,fay,faz,vw,cix,ciy,ciz\n";
    }
    if (scenario.output.zones) {
      zones.push_back(open_out(out / (tag + "_zone.csv")));
      zones.back() << "t,delta,c,damping,mask_cells\n";
    }
  }

  int steps = static_cast<int>(std::llround(scenario.duration / scenario.dt));
  for (int s = 0; s < steps; ++s) {
    sim.step();
    for (size_t i = 0; i < sim.bodies().size(); ++i) {
      const auto& body = *sim.bodies()[i];
      const BodyPose& p = body.rigid.pose();
      if (scenario.output.trajectory)
        traj[i] << sim.time() << ',' << p.position.x << ',' << p.position.y << ','
                << p.position.z << ',' << p.orientation.w << ',' << p.orientation.x << ','
                << p.orientation.y << ',' << p.orientation.z << ',' << p.linear_velocity.x
                << ',' << p.linear_velocity.y << ',' << p.linear_velocity.z << ','
                << p.angular_velocity.x << ',' << p.angular_velocity.y << ','
                << p.angular_velocity.z << '\n';
      if (scenario.output.forces) {
        const HydroReport& r = body.report;
        Vec3 ci = r.center_of_immersion.value_or(Vec3{});
        forces[i] << sim.time() << ',' << r.buoyancy_force.x << ',' << r.buoyancy_force.y << ','
                  << r.buoyancy_force.z << ',' << r.water_drag.x << ',' << r.water_drag.y << ','
                  << r.water_drag.z << ',' << r.air_drag.x << ',' << r.air_drag.y << ','
                  << r.air_drag.z << ',' << r.submerged_volume << ',' << ci.x << ',' << ci.y
                  << ',' << ci.z << '\n';
      }
      if (scenario.output.zones)
        zones[i] << sim.time() << ',' << body.zone.spacing() << ',' << body.zone.wave_speed()
                 << ',' << body.zone.current_damping() << ',' << body.mask.size() << '\n';
    }
    if (scenario.output.surface_stride > 0 && (s + 1) % scenario.output.surface_stride == 0)
      dump_fields(sim, out / "fields", sim.time(), scenario.output.surface_resolution, "bin");
  }

  if (report_timing) {
    const auto& t = sim.timing();
    std::cout << "timing_report_ms_per_step steps=" << steps << " surface="
              << t.surface * 1e3 / steps << " velocity=" << t.velocity * 1e3 / steps
              << " hydro=" << t.hydro * 1e3 / steps << " zones=" << t.zones * 1e3 / steps
              << " integrate=" << t.integrate * 1e3 / steps << '\n';
  }
  return 0;
}

int cmd_bench_normalization(const CommonFlags& flags, int samples) {
  NormalizationResult r = normalization_study(samples, flags.seed);
  std::cout << "samples=" << r.samples << " mean=" << r.mean << " min=" << r.min_value
            << " max=" << r.max_value << '\n';
  if (r.mean < 1.02 || r.mean > 1.12) {
    std::cerr << "ERROR 4 normalization mean " << r.mean << " outside [1.02, 1.12]\n";
    return 4;
  }
  return 0;
}

int cmd_bench_convergence(const CommonFlags& flags) {
  ConvergenceConfig cfg;
  cfg.seed = flags.seed;
  auto rows = convergence_study(cfg);
  fs::create_directories(flags.out_dir);
  auto csv = open_out(fs::path(flags.out_dir) / "convergence.csv");
  csv << "wind,mean_iters,var_iters,frac_within_4\n";
  for (const auto& r : rows)
    csv << r.wind << ',' << r.mean_iters << ',' << r.var_iters << ',' << r.frac_within_4
        << '\n';
  std::cout << "winds=" << rows.size() << " csv=" << (fs::path(flags.out_dir) / "convergence.csv").string()
            << '\n';
  return 0;
}

int cmd_bench_interp(const CommonFlags& flags, std::vector<int> degrees, int samples,
                     int resolution, bool timing) {
  InterpAccuracyConfig cfg;
  cfg.seed = flags.seed;
  if (!degrees.empty()) cfg.degrees = degrees;
  cfg.samples = samples;
  cfg.resolution = resolution;
  cfg.timing = timing;
  auto rows = interp_accuracy_study(cfg);
  fs::create_directories(flags.out_dir);
  auto csv = open_out(fs::path(flags.out_dir) / "interp_accuracy.csv");
  csv << "d,scheme,mean_error,p95_error,build_ms,query_ns\n";
  for (const auto& r : rows)
    csv << r.degree << ',' << to_string(r.distribution) << '+' << to_string(r.interp) << ','
        << r.mean_error << ',' << r.p95_error << ',' << r.build_ms << ',' << r.query_ns << '\n';
  std::cout << "rows=" << rows.size() << " csv="
            << (fs::path(flags.out_dir) / "interp_accuracy.csv").string() << '\n';
  return 0;
}

int cmd_bench_degree(const CommonFlags& flags, std::vector<int> degrees, int samples,
                     int resolution) {
  InterpAccuracyConfig cfg;
  cfg.seed = flags.seed;
  cfg.samples = samples;
  cfg.resolution = resolution;
  cfg.degrees = degrees.empty() ? std::vector<int>{4, 6, 8, 10, 12, 16} : degrees;
  DegreeStudyResult res = degree_study(cfg);
  fs::create_directories(flags.out_dir);
  auto csv = open_out(fs::path(flags.out_dir) / "degree_study.csv");
  csv << "d,accuracy_mps,perf_s,objective\n";
  for (const auto& r : res.rows)
    csv << r.degree << ',' << r.accuracy << ',' << r.perf_seconds << ',' << r.objective << '\n';
  std::cout << "argmin_degree=" << res.best_degree
            << " (J = " << res.alpha << "*P + " << res.beta << "*A; perf column is wall-clock,"
            << " machine dependent)\n";
  return 0;
}

int cmd_validate_mesh(const std::string& path) {
  TriMesh mesh = load_obj_file(path);
  std::cout << "ok vertices=" << mesh.vertices().size() << " triangles="
            << mesh.triangles().size() << " volume=" << mesh.volume() << " area="
            << mesh.total_area() << " degenerate=" << mesh.degenerate_count() << '\n';
  return 0;
}

int cmd_dump_surface(const CommonFlags& flags, double t, const std::string& format) {
  Scenario scenario = load_scenario_file(flags.config_path);
  CommonFlags f = flags;
  f.apply(scenario);
  Simulation sim(scenario);
  while (sim.time() + 0.5 * scenario.dt < t) sim.step();
  dump_fields(sim, flags.out_dir, sim.time(), scenario.output.surface_resolution, format);
  std::cout << "dumped t=" << sim.time() << " to " << flags.out_dir << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"deterministic ocean dynamics engine"};
  app.require_subcommand(1);

  CommonFlags flags;
  bool report_timing = false;
  auto* run = app.add_subcommand("run", "run a scenario");
  flags.add_to(run, true);
  run->add_flag("--report-timing", report_timing, "print per-stage timings (informational)");

  auto* bench = app.add_subcommand("bench", "numerical studies");
  bench->require_subcommand(1);
  int samples = 10000;
  int resolution = 128;
  bool timing = false;
  std::vector<int> degrees;
  auto* b_norm = bench->add_subcommand("normalization", "directional normalization Monte-Carlo");
  b_norm->add_option("--samples", samples);
  flags.add_to(b_norm, false);
  auto* b_conv = bench->add_subcommand("convergence", "height-retrieval iteration counts");
  flags.add_to(b_conv, false);
  auto* b_interp = bench->add_subcommand("interp-accuracy", "velocity interpolation accuracy");
  b_interp->add_option("--degrees", degrees)->delimiter(',');
  b_interp->add_option("--samples", samples);
  b_interp->add_option("--resolution", resolution);
  b_interp->add_flag("--timing", timing, "include machine-dependent timing columns");
  flags.add_to(b_interp, false);
  auto* b_degree = bench->add_subcommand("degree-study", "slice-count trade-off study");
  b_degree->add_option("--degrees", degrees)->delimiter(',');
  b_degree->add_option("--samples", samples);
  b_degree->add_option("--resolution", resolution);
  flags.add_to(b_degree, false);

  std::string mesh_path;
  auto* vmesh = app.add_subcommand("validate-mesh", "check an OBJ mesh");
  vmesh->add_option("file", mesh_path, "OBJ path")->required();

  double dump_time = 0.0;
  std::string dump_format = "bin";
  auto* dump = app.add_subcommand("dump-surface", "write surface and derivative fields");
  flags.add_to(dump, true);
  dump->add_option("--time", dump_time, "sample time, s");
  dump->add_option("--format", dump_format)->check(CLI::IsMember({"bin", "csv"}));

  try {
    app.parse(argc, argv);
    if (flags.threads > 0) set_worker_count(flags.threads);

    if (run->parsed()) return cmd_run(flags, report_timing);
    if (b_norm->parsed()) return cmd_bench_normalization(flags, samples);
    if (b_conv->parsed()) return cmd_bench_convergence(flags);
    if (b_interp->parsed()) return cmd_bench_interp(flags, degrees, samples, resolution, timing);
    if (b_degree->parsed()) return cmd_bench_degree(flags, degrees, samples, resolution);
    if (vmesh->parsed()) return cmd_validate_mesh(mesh_path);
    if (dump->parsed()) return cmd_dump_surface(flags, dump_time, dump_format);
    return 1;
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const ConfigError& e) {
    std::cerr << "ERROR 2 " << e.what() << '\n';
    return 2;
  } catch (const MeshError& e) {
    std::cerr << "ERROR 3 " << e.what() << '\n';
    return 3;
  } catch (const NumericError& e) {
    std::cerr << "ERROR 4 " << e.what() << '\n';
    return 4;
  } catch (const IoError& e) {
    std::cerr << "ERROR 5 " << e.what() << '\n';
    return 5;
  } catch (const std::exception& e) {
    std::cerr << "ERROR 1 " << e.what() << '\n';
    return 1;
  }
}
