#include "ocean/mesh.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

namespace ocean {

namespace {

struct EdgeKey {
  int a, b;
  bool operator<(const EdgeKey& o) const { return a != o.a ? a < o.a : b < o.b; }
};

void validate_closed(const std::vector<TriMesh::Tri>& tris, size_t nverts,
                     const std::string& name) {
  std::map<EdgeKey, int> directed;
  for (const auto& t : tris) {
    for (int e = 0; e < 3; ++e) {
      int a = t.v[e], b = t.v[(e + 1) % 3];
      if (a < 0 || b < 0 || a >= static_cast<int>(nverts) || b >= static_cast<int>(nverts))
        throw MeshError(name + ": face references a missing vertex");
      if (a == b) throw MeshError(name + ": face repeats a vertex");
      if (++directed[{a, b}] > 1)
        throw MeshError(name + ": duplicated directed edge (inconsistent winding)");
    }
  }
  for (const auto& [key, count] : directed) {
    (void)count;
    if (directed.find({key.b, key.a}) == directed.end())
      throw MeshError(name + ": open mesh, edge " + std::to_string(key.a) + "-" +
                      std::to_string(key.b) + " has no partner");
  }
}

double signed_volume(const std::vector<Vec3>& verts, const std::vector<TriMesh::Tri>& tris) {
  double v = 0.0;
  for (const auto& t : tris)
    v += dot(verts[t.v[0]], cross(verts[t.v[1]], verts[t.v[2]])) / 6.0;
  return v;
}

}  // namespace

TriMesh::TriMesh(std::vector<Vec3> vertices, std::vector<Tri> triangles)
    : vertices_(std::move(vertices)), triangles_(std::move(triangles)) {
  if (vertices_.empty() || triangles_.empty()) throw MeshError("empty mesh");
  validate_closed(triangles_, vertices_.size(), "mesh");
  if (signed_volume(vertices_, triangles_) < 0.0)
    for (auto& t : triangles_) std::swap(t.v[1], t.v[2]);

  normals_.resize(triangles_.size());
  areas_.resize(triangles_.size());
  bbox_min_ = bbox_max_ = vertices_[0];
  for (const Vec3& v : vertices_) {
    bbox_min_ = {std::min(bbox_min_.x, v.x), std::min(bbox_min_.y, v.y),
                 std::min(bbox_min_.z, v.z)};
    bbox_max_ = {std::max(bbox_max_.x, v.x), std::max(bbox_max_.y, v.y),
                 std::max(bbox_max_.z, v.z)};
  }

  // volume, centroid and second moments by signed tetrahedra against the
  // origin; for a tet (0, a, b, c): Int x_i x_j dV = V/20 (a_i a_j + b_i b_j
  // + c_i c_j + s_i s_j), s = a + b + c.
  double vol = 0.0;
  Vec3 first_moment;
  Mat3 second = Mat3::zero();
  for (size_t ti = 0; ti < triangles_.size(); ++ti) {
    const Vec3& a = vertices_[triangles_[ti].v[0]];
    const Vec3& b = vertices_[triangles_[ti].v[1]];
    const Vec3& c = vertices_[triangles_[ti].v[2]];
    Vec3 n = cross(b - a, c - a);
    double nlen = n.norm();
    areas_[ti] = 0.5 * nlen;
    if (nlen < 1e-14) {
      ++degenerate_;
      normals_[ti] = {0, 0, 0};
    } else {
      normals_[ti] = n / nlen;
    }
    total_area_ += areas_[ti];

    double vt = dot(a, cross(b, c)) / 6.0;
    vol += vt;
    first_moment += (a + b + c) * (vt / 4.0);
    Vec3 s = a + b + c;
    const Vec3 pts[4] = {a, b, c, s};
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) {
        double acc = 0.0;
        for (const Vec3& p : pts) {
          const double pi = i == 0 ? p.x : (i == 1 ? p.y : p.z);
          const double pj = j == 0 ? p.x : (j == 1 ? p.y : p.z);
          acc += pi * pj;
        }
        second.m[i][j] += vt / 20.0 * acc;
      }
    }
  }
  if (!(vol > 0.0)) throw MeshError("mesh volume must be positive");
  volume_ = vol;
  centroid_ = first_moment / vol;

  // shift second moments to the centroid, then inertia = tr(P) I - P
  Mat3 p = second;
  const double cm[3] = {centroid_.x, centroid_.y, centroid_.z};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) p.m[i][j] -= vol * cm[i] * cm[j];
  double tr = p.m[0][0] + p.m[1][1] + p.m[2][2];
  unit_inertia_ = Mat3::zero();
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) unit_inertia_.m[i][j] = (i == j ? tr : 0.0) - p.m[i][j];
}

TriMesh load_obj(std::istream& in, const std::string& name) {
  std::vector<Vec3> verts;
  std::vector<TriMesh::Tri> tris;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag) || tag[0] == '#') continue;
    if (tag == "v") {
      Vec3 v;
      if (!(ls >> v.x >> v.y >> v.z))
        throw MeshError(name + ":" + std::to_string(lineno) + ": malformed vertex");
      verts.push_back(v);
    } else if (tag == "f") {
      std::vector<int> idx;
      std::string tok;
      while (ls >> tok) {
        // accept v, v/vt, v//vn, v/vt/vn
        size_t slash = tok.find('/');
        int i = std::stoi(slash == std::string::npos ? tok : tok.substr(0, slash));
        if (i < 0) i = static_cast<int>(verts.size()) + 1 + i;
        idx.push_back(i - 1);
      }
      if (idx.size() != 3)
        throw MeshError(name + ":" + std::to_string(lineno) +
                        ": faces must be triangles, got " + std::to_string(idx.size()));
      tris.push_back({{idx[0], idx[1], idx[2]}});
    }
  }
  return TriMesh(std::move(verts), std::move(tris));
}

TriMesh load_obj_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw MeshError("cannot open mesh file: " + path);
  return load_obj(in, path);
}

void write_obj(std::ostream& out, const TriMesh& mesh) {
  out << "# " << mesh.vertices().size() << " vertices, " << mesh.triangles().size()
      << " triangles\n";
  for (const Vec3& v : mesh.vertices()) out << "v " << v.x << ' ' << v.y << ' ' << v.z << '\n';
  for (const auto& t : mesh.triangles())
    out << "f " << t.v[0] + 1 << ' ' << t.v[1] + 1 << ' ' << t.v[2] + 1 << '\n';
}

namespace {

// Welded lattice surface of a box [0,n]^3, later deformed by shape builders.
struct LatticeBox {
  std::vector<Vec3> verts;
  std::vector<TriMesh::Tri> tris;
  std::map<std::array<int, 3>, int> index;

  int vertex(int i, int j, int k) {
    auto key = std::array<int, 3>{i, j, k};
    auto it = index.find(key);
    if (it != index.end()) return it->second;
    int id = static_cast<int>(verts.size());
    verts.push_back({static_cast<double>(i), static_cast<double>(j), static_cast<double>(k)});
    index.emplace(key, id);
    return id;
  }
  void quad(int a, int b, int c, int d) {
    tris.push_back({{a, b, c}});
    tris.push_back({{a, c, d}});
  }
};

LatticeBox lattice_box(int n) {
  LatticeBox box;
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      // -y and +y faces
      box.quad(box.vertex(u, 0, v), box.vertex(u + 1, 0, v), box.vertex(u + 1, 0, v + 1),
               box.vertex(u, 0, v + 1));
      box.quad(box.vertex(u, n, v), box.vertex(u, n, v + 1), box.vertex(u + 1, n, v + 1),
               box.vertex(u + 1, n, v));
      // -x and +x
      box.quad(box.vertex(0, u, v), box.vertex(0, u, v + 1), box.vertex(0, u + 1, v + 1),
               box.vertex(0, u + 1, v));
      box.quad(box.vertex(n, u, v), box.vertex(n, u + 1, v), box.vertex(n, u + 1, v + 1),
               box.vertex(n, u, v + 1));
      // -z and +z
      box.quad(box.vertex(u, v, 0), box.vertex(u + 1, v, 0), box.vertex(u + 1, v + 1, 0),
               box.vertex(u, v + 1, 0));
      box.quad(box.vertex(u, v, n), box.vertex(u, v + 1, n), box.vertex(u + 1, v + 1, n),
               box.vertex(u + 1, v, n));
    }
  }
  return box;
}

}  // namespace

TriMesh make_box(double sx, double sy, double sz, int segments) {
  LatticeBox box = lattice_box(segments);
  double n = segments;
  for (Vec3& v : box.verts)
    v = {(v.x / n - 0.5) * sx, (v.y / n - 0.5) * sy, (v.z / n - 0.5) * sz};
  return TriMesh(std::move(box.verts), std::move(box.tris));
}

TriMesh make_icosphere(double radius, int subdivisions) {
  const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
  std::vector<Vec3> verts = {{-1, phi, 0}, {1, phi, 0},   {-1, -phi, 0}, {1, -phi, 0},
                             {0, -1, phi}, {0, 1, phi},   {0, -1, -phi}, {0, 1, -phi},
                             {phi, 0, -1}, {phi, 0, 1},   {-phi, 0, -1}, {-phi, 0, 1}};
  std::vector<TriMesh::Tri> tris = {
      {{0, 11, 5}}, {{0, 5, 1}},  {{0, 1, 7}},   {{0, 7, 10}}, {{0, 10, 11}},
      {{1, 5, 9}},  {{5, 11, 4}}, {{11, 10, 2}}, {{10, 7, 6}}, {{7, 1, 8}},
      {{3, 9, 4}},  {{3, 4, 2}},  {{3, 2, 6}},   {{3, 6, 8}},  {{3, 8, 9}},
      {{4, 9, 5}},  {{2, 4, 11}}, {{6, 2, 10}},  {{8, 6, 7}},  {{9, 8, 1}}};

  for (int s = 0; s < subdivisions; ++s) {
    std::map<std::pair<int, int>, int> midpoint;
    auto mid = [&](int a, int b) {
      auto key = std::minmax(a, b);
      auto it = midpoint.find(key);
      if (it != midpoint.end()) return it->second;
      int id = static_cast<int>(verts.size());
      verts.push_back((verts[a] + verts[b]) / 2.0);
      midpoint.emplace(key, id);
      return id;
    };
    std::vector<TriMesh::Tri> next;
    next.reserve(tris.size() * 4);
    for (const auto& t : tris) {
      int ab = mid(t.v[0], t.v[1]), bc = mid(t.v[1], t.v[2]), ca = mid(t.v[2], t.v[0]);
      next.push_back({{t.v[0], ab, ca}});
      next.push_back({{t.v[1], bc, ab}});
      next.push_back({{t.v[2], ca, bc}});
      next.push_back({{ab, bc, ca}});
    }
    tris = std::move(next);
  }
  for (Vec3& v : verts) v = v * (radius / v.norm());
  return TriMesh(std::move(verts), std::move(tris));
}

TriMesh make_hull(double length, double beam, double depth, int segments) {
  LatticeBox box = lattice_box(segments);
  double n = segments;
  double freeboard = 0.35;  // fraction of depth above the waterplane datum
  for (Vec3& v : box.verts) {
    double u = v.z / n;              // 0 stern .. 1 bow
    double x = (v.x / n - 0.5);      // -0.5 .. 0.5
    double y = (v.y / n - 0.5);      // -0.5 .. 0.5
    double taper_u = std::max(0.0, (u - 0.55) / 0.45);
    double w = std::sqrt(std::max(0.04, 1.0 - 0.96 * taper_u * taper_u));
    double rise = 0.55 * taper_u * taper_u;  // bottom lifts toward the bow
    double yy = y < 0.0 ? y * (1.0 - rise) : y;
    v = {x * beam * w, (yy + 0.5) * depth - (1.0 - freeboard) * depth,
         (u - 0.5) * length};
  }
  return TriMesh(std::move(box.verts), std::move(box.tris));
}

}  // namespace ocean
