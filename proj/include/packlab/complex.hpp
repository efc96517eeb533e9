#ifndef PACKLAB_COMPLEX_HPP
#define PACKLAB_COMPLEX_HPP

#include <array>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "packlab/errors.hpp"

namespace packlab {

using Face = std::array<int, 3>;

// A finite oriented triangulation of a topological disk. Faces are the sole
// input; edges, boundary cycle, rotation systems and interior flags are
// derived during construction, which validates the full set of disk
// invariants (manifold links, consistent orientation, Euler characteristic 1,
// non-empty boundary).
class ComplexDisk {
 public:
  static ComplexDisk build(const std::vector<Face>& faces);

  int vertex_count() const { return vertex_count_; }
  const std::vector<Face>& faces() const { return faces_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<std::array<int, 2>>& edges() const { return edges_; }  // u < v

  bool is_interior(int v) const { return interior_[v]; }
  bool is_boundary_vertex(int v) const { return !interior_[v]; }
  const std::vector<int>& boundary_cycle() const { return boundary_cycle_; }

  // Neighbors of v in counterclockwise order. Interior: cyclic (canonical
  // start at the smallest neighbor id). Boundary: open fan from the boundary
  // successor to the boundary precursor.
  const std::vector<int>& rotation(int v) const;

  bool has_edge(int u, int v) const;
  int edge_id(int u, int v) const;  // -1 when absent
  std::array<int, 2> edge_vertices(int e) const { return edges_[e]; }
  bool is_boundary_edge(int e) const { return edge_faces_[e][1] < 0; }
  const std::array<int, 2>& edge_faces(int e) const { return edge_faces_[e]; }

  const std::vector<int>& faces_at(int v) const { return vertex_faces_[v]; }
  // Is the oriented triple (a,b,c) a positively oriented face of the complex?
  bool is_ccw_face(int a, int b, int c) const;
  int face_of_edges(int e1, int e2) const;  // common face id or -1

  int boundary_successor(int v) const;
  int boundary_precursor(int v) const;

  uint64_t content_hash() const;

 private:
  int vertex_count_ = 0;
  std::vector<Face> faces_;
  std::vector<std::array<int, 2>> edges_;
  std::vector<std::array<int, 2>> edge_faces_;
  std::unordered_map<int64_t, int> edge_index_;
  std::vector<bool> interior_;
  std::vector<int> boundary_cycle_;
  std::vector<int> boundary_pos_;  // -1 for interior vertices
  std::vector<std::vector<int>> rotation_;
  std::vector<std::vector<int>> vertex_faces_;

  friend class ComplexBuilder;
};

struct SubComplex {
  ComplexDisk complex;
  std::vector<int> vertex_map;  // sub id -> parent id
};

struct KernelResult {
  std::vector<int> accessible;  // parent vertex ids, ascending
  ComplexDisk kernel;
  std::vector<int> vertex_map;  // kernel id -> parent id
};

// Smallest sub-complex containing v and all its neighbors (the flower of v;
// incomplete when v is a boundary vertex).
SubComplex flower(const ComplexDisk& k, int v);

// Edges of E(v) strictly/inclusively between e1 and e2 in the cyclic
// counterclockwise order at v. Edges are given and returned as neighbor ids.
std::vector<int> edge_interval(const ComplexDisk& k, int v, int n1, int n2, bool closed_left,
                               bool closed_right);

std::vector<int> accessible_vertices(const ComplexDisk& k, int v_alpha);
KernelResult kernel(const ComplexDisk& k, int v_alpha);
bool is_strongly_connected(const ComplexDisk& k);

ComplexDisk generate_flower(int petals);
ComplexDisk generate_hexdisk(int rings);
ComplexDisk generate_apollonian(int generations);
// Repeated stellar subdivision of random faces of hexdisk(rings).
ComplexDisk generate_random(int rings, int subdivisions, uint64_t seed);

}  // namespace packlab

#endif
