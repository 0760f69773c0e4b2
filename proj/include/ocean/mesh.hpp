#ifndef OCEAN_MESH_HPP
#define OCEAN_MESH_HPP

#include <array>
#include <iosfwd>
#include <string>
#include <vector>

#include "ocean/core.hpp"

namespace ocean {

// Closed triangle mesh in body coordinates, with the mass properties needed
// by the force model and the integrator.
class TriMesh {
 public:
  struct Tri {
    int v[3];
  };

  TriMesh(std::vector<Vec3> vertices, std::vector<Tri> triangles);

  const std::vector<Vec3>& vertices() const { return vertices_; }
  const std::vector<Tri>& triangles() const { return triangles_; }
  const Vec3& normal(size_t tri) const { return normals_[tri]; }
  double area(size_t tri) const { return areas_[tri]; }

  double volume() const { return volume_; }          // v_M
  const Vec3& centroid() const { return centroid_; }  // volume centroid (body frame)
  // Inertia of the solid about its centroid, per unit density.
  const Mat3& unit_inertia() const { return unit_inertia_; }

  Vec3 bbox_min() const { return bbox_min_; }
  Vec3 bbox_max() const { return bbox_max_; }
  double height() const { return bbox_max_.y - bbox_min_.y; }  // h_M
  double total_area() const { return total_area_; }
  int degenerate_count() const { return degenerate_; }

 private:
  std::vector<Vec3> vertices_;
  std::vector<Tri> triangles_;
  std::vector<Vec3> normals_;
  std::vector<double> areas_;
  double volume_ = 0.0;
  Vec3 centroid_;
  Mat3 unit_inertia_;
  Vec3 bbox_min_, bbox_max_;
  double total_area_ = 0.0;
  int degenerate_ = 0;
};

// ASCII OBJ loader (v / f records, faces already triangulated). Validates
// that the mesh is closed with consistent winding; inward-wound meshes are
// reoriented.
TriMesh load_obj(std::istream& in, const std::string& name = "<stream>");
TriMesh load_obj_file(const std::string& path);
void write_obj(std::ostream& out, const TriMesh& mesh);

// Procedural shapes (all closed and outward-wound).
TriMesh make_box(double sx, double sy, double sz, int segments = 1);
TriMesh make_icosphere(double radius, int subdivisions);
// Simple boat hull: a subdivided box tapered toward +z (the bow).
TriMesh make_hull(double length, double beam, double depth, int segments = 4);

}  // namespace ocean

#endif
