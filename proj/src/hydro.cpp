#include "ocean/hydro.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "ocean/parallel.hpp"

namespace ocean {

double FluidQuery::density_at(double y) const {
  if (density_profile.empty()) return water_density;
  if (y <= density_profile.front().first) return density_profile.front().second;
  if (y >= density_profile.back().first) return density_profile.back().second;
  for (size_t i = 1; i < density_profile.size(); ++i) {
    if (y <= density_profile[i].first) {
      auto [y0, r0] = density_profile[i - 1];
      auto [y1, r1] = density_profile[i];
      return lerp(r0, r1, (y - y0) / (y1 - y0));
    }
  }
  return water_density;
}

FluidQuery FluidQuery::still_water() {
  FluidQuery q;
  q.surface_height = [](Vec2) { return 0.0; };
  q.water_velocity = [](Vec2, double) { return Vec3{}; };
  return q;
}

namespace {

struct EdgeKey {
  int a, b;
  EdgeKey(int u, int v) : a(std::min(u, v)), b(std::max(u, v)) {}
  bool operator<(const EdgeKey& o) const { return a != o.a ? a < o.a : b < o.b; }
};

double tri_area(const Vec3& a, const Vec3& b, const Vec3& c) {
  return 0.5 * cross(b - a, c - a).norm();
}

struct SubTri {
  Vec3 v[3];
  double d[3];
};

void emit_state(std::vector<TriangleState>& out, int parent, TriStatus status,
                const SubTri& t, const Vec3& normal) {
  TriangleState s;
  s.parent = parent;
  s.status = status;
  s.area = tri_area(t.v[0], t.v[1], t.v[2]);
  s.centroid = (t.v[0] + t.v[1] + t.v[2]) / 3.0;
  s.depth = (t.d[0] + t.d[1] + t.d[2]) / 3.0;
  s.normal = normal;
  out.push_back(s);
}

}  // namespace

ClipResult classify_clip(const TriMesh& mesh, const BodyPose& pose, const FluidQuery& fluid) {
  if (!fluid.surface_height) throw ConfigError("classify_clip: missing surface sampler");
  const auto& verts = mesh.vertices();
  const auto& tris = mesh.triangles();

  // world positions and signed vertex depths, shared between triangles
  std::vector<Vec3> wpos(verts.size());
  std::vector<double> depth(verts.size());
  parallel_for(verts.size(), [&](size_t i0, size_t i1) {
    for (size_t i = i0; i < i1; ++i) {
      wpos[i] = pose.to_world(verts[i]);
      depth[i] = wpos[i].y - fluid.surface_height(wpos[i].xz());
    }
  });

  struct PerTri {
    TriangleState states[3];
    int count = 0;
    EdgeKey cross_a{-1, -1}, cross_b{-1, -1};
    Vec3 point_a, point_b;
    bool partial = false;
    bool degenerate = false;
  };
  std::vector<PerTri> work(tris.size());

  parallel_for(tris.size(), [&](size_t t0, size_t t1) {
    for (size_t ti = t0; ti < t1; ++ti) {
      PerTri& w = work[ti];
      if (mesh.area(ti) <= 0.0) {
        w.degenerate = true;
        continue;
      }
      int i0 = tris[ti].v[0], i1 = tris[ti].v[1], i2 = tris[ti].v[2];
      double d0 = depth[i0], d1 = depth[i1], d2 = depth[i2];
      Vec3 n = pose.rotate(mesh.normal(ti));
      std::vector<TriangleState> states;

      bool above0 = d0 >= 0.0, above1 = d1 >= 0.0, above2 = d2 >= 0.0;
      int above = int(above0) + int(above1) + int(above2);
      if (above == 3) {
        emit_state(states, static_cast<int>(ti), TriStatus::Dry,
                   {{wpos[i0], wpos[i1], wpos[i2]}, {d0, d1, d2}}, n);
      } else if (above == 0) {
        emit_state(states, static_cast<int>(ti), TriStatus::Submerged,
                   {{wpos[i0], wpos[i1], wpos[i2]}, {d0, d1, d2}}, n);
      } else {
        // rotate indices so the odd vertex (alone on its side) comes first
        int a, b, c;
        bool odd_above;
        if (above == 1) {
          odd_above = true;
          if (above0) a = i0, b = i1, c = i2;
          else if (above1) a = i1, b = i2, c = i0;
          else a = i2, b = i0, c = i1;
        } else {
          odd_above = false;
          if (!above0) a = i0, b = i1, c = i2;
          else if (!above1) a = i1, b = i2, c = i0;
          else a = i2, b = i0, c = i1;
        }
        double da = depth[a], db = depth[b], dc = depth[c];
        double alpha_ab = da / (da - db);
        double alpha_ac = da / (da - dc);
        Vec3 pab = wpos[a] + (wpos[b] - wpos[a]) * alpha_ab;
        Vec3 pac = wpos[a] + (wpos[c] - wpos[a]) * alpha_ac;

        // odd vertex side: triangle (a, pab, pac); other side: quad
        // (pab, b, c, pac) split into two
        TriStatus odd_status = odd_above ? TriStatus::Dry : TriStatus::Submerged;
        TriStatus rest_status = odd_above ? TriStatus::Submerged : TriStatus::Dry;
        emit_state(states, static_cast<int>(ti), odd_status,
                   {{wpos[a], pab, pac}, {da, 0.0, 0.0}}, n);
        emit_state(states, static_cast<int>(ti), rest_status,
                   {{pab, wpos[b], wpos[c]}, {0.0, db, dc}}, n);
        emit_state(states, static_cast<int>(ti), rest_status,
                   {{pab, wpos[c], pac}, {0.0, dc, 0.0}}, n);

        w.partial = true;
        w.cross_a = EdgeKey(a, b);
        w.cross_b = EdgeKey(a, c);
        w.point_a = pab;
        w.point_b = pac;
      }
      w.count = static_cast<int>(states.size());
      for (int s = 0; s < w.count; ++s) w.states[s] = states[s];
    }
  });

  ClipResult result;
  result.states.reserve(tris.size());
  for (const auto& w : work) {
    if (w.degenerate) {
      ++result.degenerate_skipped;
      continue;
    }
    for (int s = 0; s < w.count; ++s) {
      const TriangleState& st = w.states[s];
      result.states.push_back(st);
      (st.status == TriStatus::Submerged ? result.submerged_area : result.dry_area) += st.area;
    }
  }

  // Chain crossing segments into loops. Each crossed mesh edge belongs to
  // exactly two partial triangles on a closed mesh, so segments link up by
  // shared edge keys.
  std::map<EdgeKey, Vec3> cross_point;
  std::map<EdgeKey, std::vector<size_t>> by_edge;
  std::vector<std::pair<EdgeKey, EdgeKey>> segments;
  for (const auto& w : work) {
    if (!w.partial) continue;
    if (!(w.cross_a < w.cross_b) && !(w.cross_b < w.cross_a)) continue;  // degenerate
    size_t seg = segments.size();
    segments.emplace_back(w.cross_a, w.cross_b);
    cross_point[w.cross_a] = w.point_a;
    cross_point[w.cross_b] = w.point_b;
    by_edge[w.cross_a].push_back(seg);
    by_edge[w.cross_b].push_back(seg);
  }
  auto same = [](const EdgeKey& a, const EdgeKey& b) { return a.a == b.a && a.b == b.b; };
  std::vector<char> used(segments.size(), 0);
  for (size_t start = 0; start < segments.size(); ++start) {
    if (used[start]) continue;
    std::vector<Vec3> loop;
    size_t seg = start;
    EdgeKey first_entry = segments[start].first;
    EdgeKey entry = first_entry;
    bool closed = false;
    while (true) {
      used[seg] = 1;
      loop.push_back(cross_point[entry]);
      EdgeKey exit = same(segments[seg].first, entry) ? segments[seg].second
                                                      : segments[seg].first;
      if (same(exit, first_entry)) {
        closed = true;
        break;
      }
      size_t next = seg;
      for (size_t cand : by_edge[exit])
        if (cand != seg && !used[cand]) next = cand;
      if (next == seg) {  // open chain; only possible on defective topology
        loop.push_back(cross_point[exit]);
        break;
      }
      entry = exit;
      seg = next;
    }
    if (loop.size() >= 3) {
      if (closed) loop.push_back(loop.front());
      result.waterline.push_back(std::move(loop));
    }
  }
  return result;
}

double submerged_volume(const std::vector<TriangleState>& states) {
  return deterministic_sum(states.size(), 0.0, [&](size_t i) {
    const TriangleState& s = states[i];
    if (s.status != TriStatus::Submerged) return 0.0;
    return s.area * s.depth * s.normal.y;
  });
}

std::optional<Vec3> center_of_immersion(const std::vector<TriangleState>& states) {
  double vw = 0.0;
  Vec3 moment;
  for (const TriangleState& s : states) {
    if (s.status != TriStatus::Submerged) continue;
    double w = s.area * s.depth * s.normal.y;
    // prism centroid: halfway between the face centroid and the surface
    Vec3 pc{s.centroid.x, s.centroid.y - 0.5 * s.depth, s.centroid.z};
    vw += w;
    moment += pc * w;
  }
  if (!(vw > 1e-12)) return std::nullopt;
  return moment / vw;
}

Vec3 buoyancy(double v_w, double rho, const Vec3& gravity) { return -(v_w * rho) * gravity; }

Vec3 drag(const TriangleState& tri, const Vec3& medium_velocity, double rho, double c_d,
          const BodyPose& pose) {
  Vec3 v_rel = pose.point_velocity(tri.centroid) - medium_velocity;
  double speed = v_rel.norm();
  if (speed < 1e-12 || tri.area <= 0.0) return {};
  double facing = dot(tri.normal, v_rel / speed);
  if (facing <= 0.0) return {};
  double a_perp = tri.area * facing;
  return -(0.5 * c_d * rho * a_perp * speed) * v_rel;
}

HydroReport aggregate(const TriMesh& mesh, const BodyPose& pose, const FluidQuery& fluid,
                      const DragCoefficients& cd) {
  ClipResult clip = classify_clip(mesh, pose, fluid);
  HydroReport report;
  report.waterline = std::move(clip.waterline);
  report.submerged_area = clip.submerged_area;
  report.dry_area = clip.dry_area;

  double vw = submerged_volume(clip.states);
  if (vw < 0.0) {
    vw = 0.0;
    ++report.volume_clamped;
  } else if (vw > mesh.volume()) {
    vw = mesh.volume();
    ++report.volume_clamped;
  }
  report.submerged_volume = vw;
  report.center_of_immersion = center_of_immersion(clip.states);

  double rho_w = fluid.water_density;
  if (!fluid.density_profile.empty() && report.center_of_immersion)
    rho_w = fluid.density_at(report.center_of_immersion->y);

  report.water_drag = deterministic_sum(clip.states.size(), Vec3{}, [&](size_t i) {
    const TriangleState& s = clip.states[i];
    if (s.status != TriStatus::Submerged) return Vec3{};
    Vec3 medium = fluid.water_velocity ? fluid.water_velocity(s.centroid.xz(), s.centroid.y)
                                       : Vec3{};
    return drag(s, medium, rho_w, cd.water, pose);
  });
  report.air_drag = deterministic_sum(clip.states.size(), Vec3{}, [&](size_t i) {
    const TriangleState& s = clip.states[i];
    if (s.status != TriStatus::Dry) return Vec3{};
    return drag(s, fluid.wind, fluid.air_density, cd.air, pose);
  });

  if (report.center_of_immersion) {
    report.buoyancy_force = buoyancy(vw, rho_w, {0.0, -kGravity, 0.0});
    report.water_center = *report.center_of_immersion;
  } else {
    report.water_center = pose.position;
  }

  // air drag applies at the area-weighted centroid of the dry part
  double dry_area = 0.0;
  Vec3 dry_moment;
  for (const TriangleState& s : clip.states) {
    if (s.status != TriStatus::Dry) continue;
    dry_area += s.area;
    dry_moment += s.centroid * s.area;
  }
  report.air_center = dry_area > 1e-12 ? dry_moment / dry_area : pose.position;
  return report;
}

}  // namespace ocean
