#ifndef PACKLAB_LAYOUT_HPP
#define PACKLAB_LAYOUT_HPP

#include <map>
#include <optional>
#include <vector>

#include "packlab/complex.hpp"
#include "packlab/geom2.hpp"

namespace packlab {

struct SolveConfig {
  double tol_angle = 1e-12;        // interior angle-sum residual (radians)
  long max_sweeps = 1'000'000;
  double tol_tangency_rel = 1e-9;  // x max radius
  double tol_geo_rel = 1e-9;       // x packing diameter
  double tol_eq_rel = 1e-7;        // x packing diameter (disk equality)
};

using RadiusVector = std::vector<double>;

struct Anchor {
  int alpha = 0;
  Vec2 center;
  int neighbor = 1;
  double direction = 0.0;
};

struct Packing {
  uint64_t complex_hash = 0;
  std::vector<Disk> disks;
  Anchor anchor;

  double max_radius() const;
  double diameter() const;  // bounding-box diagonal
  double tol_tangency(const SolveConfig& cfg = {}) const {
    return cfg.tol_tangency_rel * max_radius();
  }
  double tol_geo(const SolveConfig& cfg = {}) const { return cfg.tol_geo_rel * diameter(); }
  double tol_eq(const SolveConfig& cfg = {}) const { return cfg.tol_eq_rel * diameter(); }
};

struct ValidationReport {
  double worst_tangency = 0.0;
  int worst_tangency_edge = -1;
  int orientation_failures = 0;
  int first_bad_face = -1;
  double worst_overlap = 0.0;  // positive = overlap depth of a non-adjacent pair
  int overlap_u = -1, overlap_v = -1;

  bool passes(double tol) const {
    return worst_tangency <= tol && orientation_failures == 0 && worst_overlap <= tol;
  }
};

// Sum of the angles at v over the faces at v, for tangent disks of radii r.
double angle_sum(const ComplexDisk& k, const RadiusVector& r, int v);
double angle_sum_derivative(const ComplexDisk& k, const RadiusVector& r, int v);

// Interior radii such that every interior angle sum is 2*pi; boundary radii
// fixed to boundary_r. Nonlinear Gauss-Seidel with safeguarded Newton solves;
// the per-vertex residual is strictly monotone in the vertex radius.
RadiusVector solve_radii(const ComplexDisk& k, const std::map<int, double>& boundary_r,
                         const SolveConfig& cfg = {}, const RadiusVector* initial = nullptr);

// Place centers by breadth-first propagation from the anchor. Requires radii
// with interior angle sums 2*pi (within tolerance); the counterclockwise
// solution is taken for every face, matching the complex orientation.
Packing layout_centers(const ComplexDisk& k, const RadiusVector& r, const Anchor& anchor,
                       const SolveConfig& cfg = {});

// Univalent packing filling the unit disk, normalized so the designated
// alpha disk (smallest-id interior vertex) is centered at the origin with its
// smallest-id neighbor on the positive horizontal axis.
Packing maximal_packing(const ComplexDisk& k, const SolveConfig& cfg = {});

ValidationReport validate_packing(const ComplexDisk& k, const Packing& p);

Vec2 contact_point(const ComplexDisk& k, const Packing& p, int u, int v);

}  // namespace packlab

#endif
