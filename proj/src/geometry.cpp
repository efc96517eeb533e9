#include "packlab/geometry.hpp"

#include <algorithm>
#include <cmath>

namespace packlab {

namespace {

int boundary_pos_of(const ComplexDisk& k, int v) {
  const auto& cyc = k.boundary_cycle();
  for (int i = 0; i < static_cast<int>(cyc.size()); ++i)
    if (cyc[i] == v) return i;
  fail(Err::NotBoundaryDisk, "vertex " + std::to_string(v) + " is not on the boundary");
}

// Point of dD_v closest to the unit circle (the tangency point when the
// packing fills the unit disk).
Vec2 unit_tangency_point(const Disk& d) {
  Vec2 dir = normalized(d.center);
  return d.center + dir * d.radius;
}

}  // namespace

bool FaceInterstice::contains(Vec2 p, double tol) const {
  // inside the contact-point triangle, outside all three disks
  for (int i = 0; i < 3; ++i) {
    Vec2 a = contacts[i], b = contacts[(i + 1) % 3];
    double side = cross(b - a, p - a);
    if (side < -tol * dist(a, b)) return false;
  }
  for (const Disk& d : disks)
    if (dist(p, d.center) < d.radius - tol) return false;
  return true;
}

FaceInterstice interstice(const ComplexDisk& k, const Packing& p, int face_id) {
  require(face_id >= 0 && face_id < static_cast<int>(k.faces().size()), Err::NotAFace,
          "face " + std::to_string(face_id));
  const Face& f = k.faces()[face_id];
  int u = f[0], v = f[1], w = f[2];
  FaceInterstice out;
  out.verts = {u, v, w};
  out.contacts = {contact_point(k, p, u, v), contact_point(k, p, v, w),
                  contact_point(k, p, w, u)};
  out.disks = {p.disks[u], p.disks[v], p.disks[w]};
  // arc on each disk between its two contact points, counterclockwise facing
  // the interstice
  out.arc_u = make_arc(p.disks[u].center, p.disks[u].radius, out.contacts[0], out.contacts[2],
                       true);
  out.arc_v = make_arc(p.disks[v].center, p.disks[v].radius, out.contacts[1], out.contacts[0],
                       true);
  out.arc_w = make_arc(p.disks[w].center, p.disks[w].radius, out.contacts[2], out.contacts[1],
                       true);
  // contacts order is (c(u,v), c(v,w), c(w,u)); delta_u runs from c(u,v) to
  // c(u,w) = contacts[2]; check orientation: swap if the arc opens the wrong
  // way (never for a positively oriented face).
  return out;
}

Carrier make_carrier(const ComplexDisk& k, const Packing& p, const SolveConfig& cfg) {
  Carrier c;
  c.disks = p.disks;
  c.tol = p.tol_tangency(cfg);
  for (int fi = 0; fi < static_cast<int>(k.faces().size()); ++fi)
    c.interstices.push_back(interstice(k, p, fi));
  const auto& cyc = k.boundary_cycle();
  int m = static_cast<int>(cyc.size());
  for (int i = 0; i < m; ++i) {
    int prev = cyc[(i + m - 1) % m], cur = cyc[i], next = cyc[(i + 1) % m];
    Vec2 cm = contact_point(k, p, cur, prev);
    Vec2 cp = contact_point(k, p, cur, next);
    c.outer.push_back(make_arc(p.disks[cur].center, p.disks[cur].radius, cm, cp, true));
  }
  return c;
}

bool Carrier::contains(Vec2 p) const {
  for (const Disk& d : disks)
    if (dist(p, d.center) <= d.radius + tol) return true;
  for (const FaceInterstice& it : interstices)
    if (it.contains(p, tol)) return true;
  return false;
}

double Carrier::boundary_distance(Vec2 p) const {
  double best = std::numeric_limits<double>::infinity();
  for (const CircularArc& a : outer) best = std::min(best, arc_distance(a, p));
  return best;
}

DomainSpec DomainSpec::unit_disk() { return DomainSpec{}; }

DomainSpec DomainSpec::carrier_interior(const ComplexDisk& k, const Packing& p,
                                        const SolveConfig& cfg) {
  auto rep = validate_packing(k, p);
  require(rep.passes(p.tol_tangency(cfg)), Err::ParameterOutOfRange,
          "reference packing fails validation");
  DomainSpec g;
  g.unit_ = false;
  g.carrier_ = std::make_shared<Carrier>(make_carrier(k, p, cfg));
  return g;
}

bool DomainSpec::contains(Vec2 p) const {
  if (unit_) return norm(p) <= 1.0;
  return carrier_->contains(p);
}

double DomainSpec::boundary_distance(Vec2 p) const {
  if (unit_) return std::abs(1.0 - norm(p));
  return carrier_->boundary_distance(p);
}

std::vector<CurvePiece> DomainSpec::boundary_pieces() const {
  std::vector<CurvePiece> out;
  if (unit_) {
    // full unit circle as two half arcs
    CircularArc a = make_arc({0, 0}, 1.0, {1, 0}, {-1, 0}, true);
    CircularArc b = make_arc({0, 0}, 1.0, {-1, 0}, {1, 0}, true);
    out.push_back(CurvePiece::make_arc(a));
    out.push_back(CurvePiece::make_arc(b));
  } else {
    for (const CircularArc& a : carrier_->outer) out.push_back(CurvePiece::make_arc(a));
  }
  return out;
}

bool contained_in(const ComplexDisk& k, const Packing& p, const DomainSpec& g,
                  const SolveConfig& cfg) {
  double tol = p.tol_tangency(cfg);
  for (int v = 0; v < k.vertex_count(); ++v) {
    const Disk& d = p.disks[v];
    if (!g.contains(d.center)) return false;
    if (g.boundary_distance(d.center) < d.radius - tol) return false;
  }
  return true;
}

bool fills(const ComplexDisk& k, const Packing& p, const DomainSpec& g, const SolveConfig& cfg) {
  require(contained_in(k, p, g, cfg), Err::NotContained, "packing is not contained in the domain");
  double tol = p.tol_tangency(cfg);
  for (int v : k.boundary_cycle()) {
    const Disk& d = p.disks[v];
    if (g.boundary_distance(d.center) > d.radius + tol) return false;
  }
  return true;
}

BoundaryArcs boundary_arcs(const ComplexDisk& k, const Packing& p, int boundary_index) {
  const auto& cyc = k.boundary_cycle();
  int m = static_cast<int>(cyc.size());
  require(m > 0, Err::NotBoundaryDisk, "no boundary");
  int i = ((boundary_index % m) + m) % m;
  int prev = cyc[(i + m - 1) % m], cur = cyc[i], next = cyc[(i + 1) % m];
  Vec2 cm = contact_point(k, p, cur, prev);
  Vec2 cp = contact_point(k, p, cur, next);
  BoundaryArcs out;
  out.exterior = make_arc(p.disks[cur].center, p.disks[cur].radius, cm, cp, true);
  out.interior = make_arc(p.disks[cur].center, p.disks[cur].radius, cp, cm, true);
  return out;
}

bool BoundaryInterstice::contains(Vec2 p, double tol) const {
  if (empty) return false;
  PieceRegion region(boundary);
  auto r = region.contains(p, tol);
  return r.has_value() && *r;
}

BoundaryInterstice boundary_interstice(const ComplexDisk& k, const Packing& p,
                                       const DomainSpec& g, int boundary_index,
                                       const SolveConfig& cfg) {
  require(fills(k, p, g, cfg), Err::DoesNotFill, "packing does not fill the domain");
  BoundaryInterstice out;
  if (!g.is_unit_disk()) return out;  // carrier interior: g_k^+ == c_k^+, always empty

  const auto& cyc = k.boundary_cycle();
  int m = static_cast<int>(cyc.size());
  int i = ((boundary_index % m) + m) % m;
  int cur = cyc[i], next = cyc[(i + 1) % m];
  const Disk& dk = p.disks[cur];
  const Disk& dn = p.disks[next];
  Vec2 contact = contact_point(k, p, cur, next);
  double tol = p.tol_tangency(cfg);
  if (std::abs(1.0 - norm(contact)) <= tol) return out;  // g_k^+ == c_k^+

  Vec2 tk = unit_tangency_point(dk);
  Vec2 tn = unit_tangency_point(dn);
  out.empty = false;
  out.boundary.push_back(CurvePiece::make_arc(make_arc(dk.center, dk.radius, tk, contact, true)));
  out.boundary.push_back(CurvePiece::make_arc(make_arc(dn.center, dn.radius, contact, tn, true)));
  out.boundary.push_back(CurvePiece::make_arc(make_arc({0, 0}, 1.0, tk, tn, true)));
  // seed: nudge the contact point outward, away from the packing: right-hand
  // normal of the boundary-cycle direction
  Vec2 n = normalized(dn.center - dk.center);
  Vec2 outward{n.y, -n.x};
  out.seed = contact + outward * (0.5 * std::min({dist(contact, tk), dist(contact, tn),
                                                  std::abs(1.0 - norm(contact))}));
  return out;
}

namespace {

// Exit point: walk from x along direction dir (unit) to the first hit of the
// domain boundary. Returns the point and sets the multiplicity flag.
Vec2 exit_point(const DomainSpec& g, Vec2 x, Vec2 dir, double tol, bool* multiple) {
  double best = std::numeric_limits<double>::infinity();
  int hits = 0;
  for (const CurvePiece& piece : g.boundary_pieces()) {
    const CircularArc& arc = piece.arc;
    if (arc.degenerate()) continue;
    Vec2 f = x - arc.center;
    double b = dot(f, dir);
    double c = norm2(f) - arc.radius * arc.radius;
    double disc = b * b - c;
    if (disc < 0) continue;
    double sq = std::sqrt(disc);
    for (double t : {-b - sq, -b + sq}) {
      if (t < tol) continue;
      Vec2 q = x + dir * t;
      double theta = angle_of(q - arc.center);
      if (!arc_contains_angle(arc, theta, -tol / std::max(arc.radius, 1e-12))) continue;
      ++hits;
      if (t < best) best = t;
    }
  }
  require(hits >= 1, Err::CrosscutInvalid, "crosscut exit ray misses the domain boundary");
  if (multiple && hits > 1) *multiple = true;
  return x + dir * best;
}

// Outward direction at the contact point of consecutive boundary disks
// (right-hand normal of the boundary-cycle direction there).
Vec2 outward_at_gap(const Packing& p, int pred, int succ) {
  Vec2 n = normalized(p.disks[succ].center - p.disks[pred].center);
  return {n.y, -n.x};
}

// Identify the end-pair of a crosscut: (upper, lower) endpoints of a boundary
// edge, and which of them precedes the other on the boundary cycle.
struct EndPair {
  int upper, lower;
  bool upper_precedes;  // upper is the cycle-predecessor of lower
};

EndPair end_pair(const ComplexDisk& k, const Crosscut& l, bool front) {
  const EdgeVV& e = front ? l.edges.front() : l.edges.back();
  EndPair out{};
  out.upper = l.is_upper(e[0]) ? e[0] : e[1];
  out.lower = l.is_upper(e[0]) ? e[1] : e[0];
  out.upper_precedes = k.boundary_successor(out.upper) == out.lower;
  return out;
}

}  // namespace

std::vector<CurvePiece> GeometricCrosscut::pieces() const {
  std::vector<CurvePiece> out;
  if (polygonal) {
    for (size_t i = 0; i + 1 < polyline.size(); ++i)
      out.push_back(CurvePiece::make_segment(polyline[i], polyline[i + 1]));
  } else {
    for (const CircularArc& a : omega)
      if (!a.degenerate()) out.push_back(CurvePiece::make_arc(a));
  }
  return out;
}

GeometricCrosscut polygonal_crosscut(const ComplexDisk& k, const Packing& p, const DomainSpec& g,
                                     const Crosscut& l, const SolveConfig& cfg) {
  require(fills(k, p, g, cfg), Err::DoesNotFill, "packing does not fill the domain");
  GeometricCrosscut out;
  out.polygonal = true;
  double tol = p.tol_tangency(cfg);

  int n = static_cast<int>(l.edges.size());
  std::vector<Vec2> x(n);
  std::vector<Vec2> tangent(n);
  for (int j = 0; j < n; ++j) {
    x[j] = contact_point(k, p, l.edges[j][0], l.edges[j][1]);
    tangent[j] = normalized(
        perp(p.disks[l.edges[j][1]].center - p.disks[l.edges[j][0]].center));
  }
  out.contacts = x;

  std::vector<Vec2> s(n + 1);
  for (int i = 1; i < n; ++i) {
    // intersection of the tangent lines at x_{i-1} and x_i
    Vec2 d1 = tangent[i - 1], d2 = tangent[i];
    double denom = cross(d1, d2);
    require(std::abs(denom) > 1e-14, Err::CrosscutInvalid,
            "parallel consecutive tangents in crosscut");
    double t = cross(x[i] - x[i - 1], d2) / denom;
    s[i] = x[i - 1] + d1 * t;
  }

  auto end_exit = [&](bool front) {
    Vec2 xx = front ? x.front() : x.back();
    if (g.boundary_distance(xx) <= tol) return xx;
    EndPair ep = end_pair(k, l, front);
    int pred = ep.upper_precedes ? ep.upper : ep.lower;
    int succ = ep.upper_precedes ? ep.lower : ep.upper;
    Vec2 outward = outward_at_gap(p, pred, succ);
    Vec2 dir = front ? tangent.front() : tangent.back();
    if (dot(dir, outward) < 0) dir = dir * -1.0;
    return exit_point(g, xx, dir, tol, &out.exit_multiplicity);
  };
  s[0] = end_exit(true);
  s[n] = end_exit(false);

  out.polyline.assign(s.begin(), s.end());
  return out;
}

GeometricCrosscut maximal_crosscut(const ComplexDisk& k, const Packing& p, const DomainSpec& g,
                                   const Crosscut& l, const SolveConfig& cfg) {
  require(fills(k, p, g, cfg), Err::DoesNotFill, "packing does not fill the domain");
  GeometricCrosscut out;
  double tol = p.tol_tangency(cfg);

  int n = static_cast<int>(l.edges.size());
  std::vector<Vec2> x(n);
  for (int j = 0; j < n; ++j) x[j] = contact_point(k, p, l.edges[j][0], l.edges[j][1]);
  out.contacts = x;

  // raw pieces: (supporting vertex, from, to), all counterclockwise
  struct Piece {
    int v;
    Vec2 from, to;
  };
  std::vector<Piece> pieces;
  std::vector<int> contact_piece(n, -1);  // piece index ending at x_j (junction of steps)

  // leading end arc on the upper disk of e_0
  EndPair front = end_pair(k, l, true);
  require(front.upper_precedes, Err::CrosscutInvalid,
          "crosscut orientation: first upper endpoint must precede the lower one");
  {
    Vec2 gplus;
    if (g.is_unit_disk()) {
      gplus = unit_tangency_point(p.disks[front.upper]);
    } else {
      gplus = x[0];  // g^+ of the predecessor disk is the shared contact point
    }
    pieces.push_back({front.upper, gplus, x[0]});
    contact_piece[0] = 0;
  }

  for (int j = 1; j < n; ++j) {
    int pivot = l.pivots[j - 1];
    const EdgeVV& e1 = l.edges[j - 1];
    const EdgeVV& e2 = l.edges[j];
    int u = e1[0] == pivot ? e1[1] : e1[0];
    int w = e2[0] == pivot ? e2[1] : e2[0];
    if (l.pivot_lower[j - 1]) {
      // pivot below: route over the two upper disks u and w via their contact
      Vec2 mid = contact_point(k, p, u, w);
      pieces.push_back({u, x[j - 1], mid});
      pieces.push_back({w, mid, x[j]});
    } else {
      pieces.push_back({pivot, x[j - 1], x[j]});
    }
    contact_piece[j] = static_cast<int>(pieces.size()) - 1;
  }

  // trailing end arc on the upper disk of e_l
  EndPair tail = end_pair(k, l, false);
  require(!tail.upper_precedes, Err::CrosscutInvalid,
          "crosscut orientation: last upper endpoint must succeed the lower one");
  {
    Vec2 gminus;
    if (g.is_unit_disk()) {
      gminus = unit_tangency_point(p.disks[tail.upper]);
    } else {
      gminus = x[n - 1];
    }
    pieces.push_back({tail.upper, x[n - 1], gminus});
  }

  // merge consecutive pieces on the same disk into the maximal arcs omega_i
  std::vector<int> piece_omega(pieces.size());
  for (size_t i = 0; i < pieces.size(); ++i) {
    if (!out.omega.empty() && out.omega_vertex.back() == pieces[i].v) {
      // extend the current run
      CircularArc& a = out.omega.back();
      a = make_arc(a.center, a.radius, a.start, pieces[i].to, true);
    } else {
      if (!out.omega.empty()) out.turning_points.push_back(pieces[i].from);
      const Disk& d = p.disks[pieces[i].v];
      out.omega.push_back(make_arc(d.center, d.radius, pieces[i].from, pieces[i].to, true));
      out.omega_vertex.push_back(pieces[i].v);
    }
    piece_omega[i] = static_cast<int>(out.omega.size()) - 1;
  }
  out.contact_omega.resize(n);
  for (int j = 0; j < n; ++j) {
    int pc = contact_piece[j];
    out.contact_omega[j] = piece_omega[pc];
    // the junction at x_j must be interior to a single omega piece
    if (pc + 1 < static_cast<int>(pieces.size()))
      require(piece_omega[pc + 1] == piece_omega[pc], Err::CrosscutInvalid,
              "contact point falls on a turning point");
  }
  (void)tol;
  return out;
}

LowerDomain::LowerDomain(const ComplexDisk& k, const Packing& p, const DomainSpec& g,
                         const Crosscut& l, const SolveConfig& cfg)
    : cut_(maximal_crosscut(k, p, g, l, cfg)) {
  tol_ = p.tol_geo(cfg);
  loop_ = cut_.pieces();

  // close the loop with the lower portion of the domain boundary
  Vec2 start = cut_.omega.front().start;
  Vec2 end = cut_.omega.back().end;
  if (g.is_unit_disk()) {
    // pick the unit-circle arc between the two tangency points that carries
    // the lower boundary disks
    int lower_bnd = -1;
    for (int v : k.boundary_cycle())
      if (l.is_lower(v)) {
        lower_bnd = v;
        break;
      }
    require(lower_bnd >= 0, Err::CrosscutInvalid, "no lower boundary disk");
    Vec2 probe = normalized(p.disks[lower_bnd].center);
    CircularArc cand = make_arc({0, 0}, 1.0, end, start, true);
    if (!arc_contains_angle(cand, angle_of(probe), 0.0))
      cand = make_arc({0, 0}, 1.0, end, start, false);
    loop_.push_back(CurvePiece::make_arc(cand));
  } else {
    // chain of exterior arcs of the lower boundary disks from x_l back to x_0
    EndPair front = end_pair(k, l, true);
    EndPair tail = end_pair(k, l, false);
    const auto& cyc = k.boundary_cycle();
    int m = static_cast<int>(cyc.size());
    int i = boundary_pos_of(k, front.lower);
    int stop = boundary_pos_of(k, tail.lower);
    std::vector<CurvePiece> chain;
    for (int idx = i; ; idx = (idx + 1) % m) {
      int v = cyc[idx];
      require(l.is_lower(v), Err::CrosscutInvalid, "upper disk on the lower boundary chain");
      chain.push_back(CurvePiece::make_arc(
          boundary_arcs(k, p, idx).exterior));
      if (idx == stop) break;
    }
    // the chain runs from x_0 to x_l along the carrier; orientation does not
    // matter for parity
    loop_.insert(loop_.end(), chain.begin(), chain.end());
    (void)end;
    (void)start;
  }
  region_ = std::make_unique<PieceRegion>(loop_);

  // seed sanity: a lower disk center must be inside
  int seed = l.lower_vertices.front();
  auto r = region_->contains(p.disks[seed].center, tol_);
  require(r.has_value() && *r, Err::CrosscutInvalid,
          "lower-domain seed check failed (vertex " + std::to_string(seed) + ")");
}

bool LowerDomain::member(Vec2 point) const {
  auto r = region_->contains(point, tol_);
  if (!r.has_value()) fail(Err::PointOnBoundary, "point lies on the crosscut within tolerance");
  return *r;
}

bool LowerDomain::disk_inside(const Disk& d) const {
  auto c = region_->contains(d.center, tol_);
  if (!c.has_value() || !*c) return false;
  // no transversal crossing with any boundary piece
  for (const CurvePiece& piece : loop_) {
    if (piece.kind == CurvePiece::Kind::Segment) continue;
    const CircularArc& a = piece.arc;
    if (a.degenerate()) continue;
    if (dist(a.center, d.center) <= tol_ && std::abs(a.radius - d.radius) <= tol_)
      continue;  // the disk's own supporting circle
    double cd = dist(a.center, d.center);
    if (cd >= a.radius + d.radius - tol_) continue;            // apart or tangent
    if (cd <= std::abs(a.radius - d.radius) + tol_) continue;  // nested or tangent
    Vec2 pts[2];
    int npts = circle_circle(a.center, a.radius, d.center, d.radius, tol_, pts);
    for (int i = 0; i < npts; ++i) {
      double theta = angle_of(pts[i] - a.center);
      if (arc_contains_angle(a, theta, tol_ / std::max(a.radius, 1e-12))) return false;
    }
  }
  return true;
}

bool lower_domain_member(const ComplexDisk& k, const Packing& p, const DomainSpec& g,
                         const Crosscut& l, Vec2 point, const SolveConfig& cfg) {
  return LowerDomain(k, p, g, l, cfg).member(point);
}

bool disk_in_lower_domain(const ComplexDisk& k, const Packing& p, const DomainSpec& g,
                          const Crosscut& l, const Disk& d, const SolveConfig& cfg) {
  return LowerDomain(k, p, g, l, cfg).disk_inside(d);
}

}  // namespace packlab
