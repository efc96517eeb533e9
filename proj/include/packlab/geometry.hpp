#ifndef PACKLAB_GEOMETRY_HPP
#define PACKLAB_GEOMETRY_HPP

#include <array>
#include <memory>
#include <vector>

#include "packlab/crosscut.hpp"
#include "packlab/layout.hpp"

namespace packlab {

// Curvilinear triangle between the three mutually tangent disks of a face.
struct FaceInterstice {
  std::array<int, 3> verts;      // face vertices u, v, w (stored orientation)
  std::array<Vec2, 3> contacts;  // c(u,v), c(v,w), c(w,u)
  std::array<Disk, 3> disks;
  CircularArc arc_u, arc_v, arc_w;

  bool contains(Vec2 p, double tol) const;
};

FaceInterstice interstice(const ComplexDisk& k, const Packing& p, int face_id);

// The carrier: closed union of all disks and all face interstices. The outer
// boundary is the chain of exterior boundary arcs through the contact points
// of consecutive boundary disks.
struct Carrier {
  std::vector<Disk> disks;
  std::vector<FaceInterstice> interstices;
  std::vector<CircularArc> outer;  // one exterior arc per boundary vertex, in cycle order
  double tol = 0;

  bool contains(Vec2 p) const;
  double boundary_distance(Vec2 p) const;
};

Carrier make_carrier(const ComplexDisk& k, const Packing& p, const SolveConfig& cfg = {});

// Target domain: the unit disk, or the open interior of a reference packing's
// carrier.
class DomainSpec {
 public:
  static DomainSpec unit_disk();
  static DomainSpec carrier_interior(const ComplexDisk& k, const Packing& p,
                                     const SolveConfig& cfg = {});

  bool is_unit_disk() const { return unit_; }
  bool contains(Vec2 p) const;
  double boundary_distance(Vec2 p) const;
  std::vector<CurvePiece> boundary_pieces() const;
  const Carrier& carrier() const { return *carrier_; }

 private:
  bool unit_ = true;
  std::shared_ptr<const Carrier> carrier_;
};

bool contained_in(const ComplexDisk& k, const Packing& p, const DomainSpec& g,
                  const SolveConfig& cfg = {});
bool fills(const ComplexDisk& k, const Packing& p, const DomainSpec& g,
           const SolveConfig& cfg = {});

// Split of the boundary disk at position k of the boundary cycle into its
// exterior and interior boundary arcs.
struct BoundaryArcs {
  CircularArc exterior;
  CircularArc interior;
};
BoundaryArcs boundary_arcs(const ComplexDisk& k, const Packing& p, int boundary_index);

struct BoundaryInterstice {
  bool empty = true;
  std::vector<CurvePiece> boundary;  // closed loop when non-empty
  Vec2 seed;                         // a point inside, when non-empty

  bool contains(Vec2 p, double tol) const;
};
BoundaryInterstice boundary_interstice(const ComplexDisk& k, const Packing& p,
                                       const DomainSpec& g, int boundary_index,
                                       const SolveConfig& cfg = {});

struct GeometricCrosscut {
  bool polygonal = false;
  std::vector<Vec2> polyline;  // s_0 .. s_{l+1} for the polygonal variant

  std::vector<CircularArc> omega;  // maximal circular pieces, in order
  std::vector<int> omega_vertex;   // supporting (upper) vertex of each piece
  std::vector<Vec2> turning_points;

  std::vector<Vec2> contacts;      // x_0 .. x_l
  std::vector<int> contact_omega;  // x_k -> index into omega (maximal variant)

  bool exit_multiplicity = false;  // an exit ray met the domain boundary more than once

  std::vector<CurvePiece> pieces() const;
};

GeometricCrosscut polygonal_crosscut(const ComplexDisk& k, const Packing& p, const DomainSpec& g,
                                     const Crosscut& l, const SolveConfig& cfg = {});
GeometricCrosscut maximal_crosscut(const ComplexDisk& k, const Packing& p, const DomainSpec& g,
                                   const Crosscut& l, const SolveConfig& cfg = {});

// The maximal lower domain: the component of G minus the maximal crosscut
// containing the lower-side disks.
class LowerDomain {
 public:
  LowerDomain(const ComplexDisk& k, const Packing& p, const DomainSpec& g, const Crosscut& l,
              const SolveConfig& cfg = {});

  // Throws PointOnBoundary inside the tolerance band.
  bool member(Vec2 point) const;
  // Closure of d lies in the domain, tangencies allowed.
  bool disk_inside(const Disk& d) const;

  const GeometricCrosscut& crosscut() const { return cut_; }
  double tol() const { return tol_; }

 private:
  GeometricCrosscut cut_;
  std::vector<CurvePiece> loop_;
  std::unique_ptr<PieceRegion> region_;
  double tol_ = 0;
};

bool lower_domain_member(const ComplexDisk& k, const Packing& p, const DomainSpec& g,
                         const Crosscut& l, Vec2 point, const SolveConfig& cfg = {});
bool disk_in_lower_domain(const ComplexDisk& k, const Packing& p, const DomainSpec& g,
                          const Crosscut& l, const Disk& d, const SolveConfig& cfg = {});

}  // namespace packlab

#endif
