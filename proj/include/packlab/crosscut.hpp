#ifndef PACKLAB_CROSSCUT_HPP
#define PACKLAB_CROSSCUT_HPP

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

#include "packlab/complex.hpp"

namespace packlab {

using EdgeVV = std::array<int, 2>;  // non-oriented edge as a vertex pair

// A validated combinatoric crosscut together with all derived structure:
// face chain, side partition, neighbor sets, accompanying edge/vertex
// sequences. Sides: "lower" is the side to the right when traversing the
// edge sequence; the pivot vertex of a consecutive pair (e(u,v), e(v,w)) is
// on the lower side exactly when <u,v,w> is a positively oriented face.
struct Crosscut {
  std::vector<EdgeVV> edges;                 // e_0 .. e_l
  std::vector<int> face_chain;               // f_1 .. f_l (face ids)
  std::vector<int> pivots;                   // pivot vertex of each pair
  std::vector<bool> pivot_lower;             // side of each pivot
  std::vector<int8_t> side;                  // per vertex: 0 lower, 1 upper
  std::vector<int> lower_vertices;           // V^-
  std::vector<int> upper_vertices;           // V^+
  std::vector<int> lower_neighbors;          // U^-
  std::vector<int> upper_neighbors;          // U^+
  std::vector<std::pair<int, int>> acc_lower;  // E^-: oriented third edges, in order
  std::vector<std::pair<int, int>> acc_upper;  // E^+
  std::vector<int> seq_lower;                // S^-
  std::vector<int> seq_upper;                // S^+

  int length() const { return static_cast<int>(edges.size()) - 1; }  // l
  bool is_lower(int v) const { return side[v] == 0; }
  bool is_upper(int v) const { return side[v] == 1; }
};

Crosscut validate_crosscut(const ComplexDisk& k, const std::vector<EdgeVV>& edges);

// Reversed edge sequence: swaps the two sides.
std::vector<EdgeVV> reversed_edges(const Crosscut& l);

// True iff the sequence has no alternating subsequence u..v..u..v with u != v.
bool forbidden_pattern_check(const std::vector<int>& seq);

struct VertexClasses {
  std::vector<int> simple;
  std::vector<int> multiple;
};
VertexClasses classify_vertices(const std::vector<int>& seq_upper);

struct Loop {
  int first_edge = 0;  // index range into acc_upper, inclusive
  int last_edge = 0;
  std::vector<int> met_vertices;  // U_M without the loop vertex, in order
};
std::vector<Loop> loops(const ComplexDisk& k, const Crosscut& l, int v);

// Random crosscut: walk over the face adjacency graph from a random boundary
// edge until another boundary edge is reached, rejection-sampled against the
// validity conditions. Deterministic for a fixed seed.
std::vector<EdgeVV> random_crosscut(const ComplexDisk& k, uint64_t seed);

}  // namespace packlab

#endif
