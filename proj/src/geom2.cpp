#include "packlab/geom2.hpp"

#include <algorithm>
#include <cmath>

#include "packlab/errors.hpp"

namespace packlab {

namespace {
constexpr double kTwoPi = 6.283185307179586476925286766559;

double wrap_positive(double t) {
  t = std::fmod(t, kTwoPi);
  if (t < 0) t += kTwoPi;
  return t;
}
}  // namespace

CircularArc make_arc(Vec2 center, double radius, Vec2 start, Vec2 end, bool ccw) {
  CircularArc a;
  a.center = center;
  a.radius = radius;
  a.start = start;
  a.end = end;
  a.ccw = ccw;
  a.start_angle = angle_of(start - center);
  double end_angle = angle_of(end - center);
  double sweep = ccw ? wrap_positive(end_angle - a.start_angle)
                     : wrap_positive(a.start_angle - end_angle);
  a.sweep = sweep;
  return a;
}

CircularArc point_arc(Vec2 center, double radius, Vec2 p) {
  CircularArc a;
  a.center = center;
  a.radius = radius;
  a.start = p;
  a.end = p;
  a.ccw = true;
  a.start_angle = angle_of(p - center);
  a.sweep = 0.0;
  return a;
}

bool arc_contains_angle(const CircularArc& a, double theta, double tol_rad) {
  if (a.degenerate()) return false;
  double off = a.ccw ? wrap_positive(theta - a.start_angle) : wrap_positive(a.start_angle - theta);
  return off >= tol_rad && off <= a.sweep - tol_rad;
}

Vec2 arc_point_at(const CircularArc& a, double t01) {
  double theta = a.ccw ? a.start_angle + t01 * a.sweep : a.start_angle - t01 * a.sweep;
  return a.center + from_angle(theta) * a.radius;
}

double arc_distance(const CircularArc& a, Vec2 p) {
  if (a.degenerate()) return dist(p, a.start);
  Vec2 d = p - a.center;
  double n = norm(d);
  if (n > 0) {
    double theta = angle_of(d);
    double off = a.ccw ? wrap_positive(theta - a.start_angle) : wrap_positive(a.start_angle - theta);
    if (off <= a.sweep) return std::abs(n - a.radius);
  }
  return std::min(dist(p, a.start), dist(p, a.end));
}

CurvePiece CurvePiece::make_segment(Vec2 a, Vec2 b) {
  CurvePiece p;
  p.kind = Kind::Segment;
  p.a = a;
  p.b = b;
  return p;
}

CurvePiece CurvePiece::make_arc(const CircularArc& arc) {
  CurvePiece p;
  p.kind = Kind::Arc;
  p.arc = arc;
  p.a = arc.start;
  p.b = arc.end;
  return p;
}

double piece_distance(const CurvePiece& p, Vec2 q) {
  if (p.kind == CurvePiece::Kind::Arc) return arc_distance(p.arc, q);
  Vec2 ab = p.b - p.a;
  double len2 = norm2(ab);
  if (len2 == 0) return dist(q, p.a);
  double t = std::clamp(dot(q - p.a, ab) / len2, 0.0, 1.0);
  return dist(q, p.a + ab * t);
}

double PieceRegion::boundary_distance(Vec2 p) const {
  double best = std::numeric_limits<double>::infinity();
  for (const auto& piece : pieces_) best = std::min(best, piece_distance(piece, p));
  return best;
}

namespace {

// Crossing count of ray p + t*dir (t > 0) with one piece.
// Returns nullopt on any ambiguous hit (near endpoint, tangential, t ~ 0).
std::optional<int> ray_piece_crossings(Vec2 p, Vec2 dir, const CurvePiece& piece, double tol) {
  if (piece.kind == CurvePiece::Kind::Segment) {
    Vec2 a = piece.a, b = piece.b;
    Vec2 ab = b - a;
    double denom = cross(dir, ab);
    double seg_len = norm(ab);
    if (seg_len <= tol) return 0;  // degenerate segment
    if (std::abs(denom) < 1e-14 * std::max(1.0, seg_len)) {
      // parallel: ambiguous only if the ray is close to the segment line
      double d0 = std::abs(cross(ab, p - a)) / seg_len;
      if (d0 < tol) return std::nullopt;
      return 0;
    }
    // Solve p + t*dir = a + s*ab.
    double s = cross(p - a, dir) / -denom;
    double t = cross(a - p, ab) / denom;
    if (t < -tol) return 0;
    if (t < tol) return std::nullopt;
    if (s < -tol / seg_len || s > 1 + tol / seg_len) return 0;
    if (s < tol / seg_len || s > 1 - tol / seg_len) return std::nullopt;
    return 1;
  }
  const CircularArc& arc = piece.arc;
  if (arc.degenerate()) return 0;
  // |p + t*dir - c|^2 = r^2, dir unit
  Vec2 f = p - arc.center;
  double b = dot(f, dir);
  double c = norm2(f) - arc.radius * arc.radius;
  double disc = b * b - c;
  double tol_rad = tol / std::max(arc.radius, 1e-300);
  if (disc < 0) return 0;
  double sq = std::sqrt(disc);
  if (sq < tol) return std::nullopt;  // tangential
  int count = 0;
  for (double t : {-b - sq, -b + sq}) {
    if (t < -tol) continue;
    if (t < tol) return std::nullopt;
    Vec2 q = p + dir * t;
    double theta = angle_of(q - arc.center);
    double off = arc.ccw ? std::fmod(theta - arc.start_angle + kTwoPi * 3, kTwoPi)
                         : std::fmod(arc.start_angle - theta + kTwoPi * 3, kTwoPi);
    if (off > arc.sweep + tol_rad) continue;
    if (off < tol_rad || off > arc.sweep - tol_rad) return std::nullopt;
    ++count;
  }
  return count;
}

}  // namespace

std::optional<bool> PieceRegion::contains(Vec2 p, double tol) const {
  if (boundary_distance(p) < tol) return std::nullopt;
  // Deterministic direction sequence (golden-angle steps).
  constexpr double kGolden = 2.399963229728653;
  for (int attempt = 0; attempt < 64; ++attempt) {
    Vec2 dir = from_angle(0.12345 + attempt * kGolden);
    int total = 0;
    bool ok = true;
    for (const auto& piece : pieces_) {
      auto c = ray_piece_crossings(p, dir, piece, tol);
      if (!c) {
        ok = false;
        break;
      }
      total += *c;
    }
    if (ok) return (total % 2) == 1;
  }
  fail(Err::PointOnBoundary, "ray casting failed to find an unambiguous direction");
}

int circle_circle(Vec2 c1, double r1, Vec2 c2, double r2, double tol, Vec2 out[2]) {
  Vec2 d = c2 - c1;
  double dd = norm(d);
  if (dd < tol) return 0;  // concentric (or same circle; caller handles)
  double lo = std::abs(r1 - r2), hi = r1 + r2;
  if (dd > hi + tol || dd < lo - tol) return 0;
  if (std::abs(dd - hi) <= tol || std::abs(dd - lo) <= tol) {
    out[0] = c1 + d * (r1 / dd);
    if (std::abs(dd - lo) <= tol && r1 < r2) out[0] = c1 - d * (r1 / dd);
    return 1;
  }
  double a = (dd * dd + r1 * r1 - r2 * r2) / (2 * dd);
  double h2 = r1 * r1 - a * a;
  double h = h2 > 0 ? std::sqrt(h2) : 0.0;
  Vec2 e = d / dd;
  Vec2 base = c1 + e * a;
  out[0] = base + perp(e) * h;
  out[1] = base - perp(e) * h;
  return 2;
}

Vec2 place_third_center(Vec2 ca, double ra, Vec2 cb, double rb, double r) {
  Vec2 d = cb - ca;
  double dd = norm(d);
  double la = ra + r, lb = rb + r;
  double x = (dd * dd + la * la - lb * lb) / (2 * dd);
  double y2 = la * la - x * x;
  double y = y2 > 0 ? std::sqrt(y2) : 0.0;
  Vec2 e = d / dd;
  return ca + e * x + perp(e) * y;  // +y: counterclockwise (ca, cb, c)
}

bool segments_cross(Vec2 a1, Vec2 b1, Vec2 a2, Vec2 b2, double tol) {
  // shared endpoints do not count
  for (Vec2 p : {a1, b1})
    for (Vec2 q : {a2, b2})
      if (dist(p, q) <= tol) return false;
  auto side = [&](Vec2 a, Vec2 b, Vec2 p) { return cross(b - a, p - a); };
  double d1 = side(a2, b2, a1), d2 = side(a2, b2, b1);
  double d3 = side(a1, b1, a2), d4 = side(a1, b1, b2);
  double s1 = norm(b1 - a1), s2 = norm(b2 - a2);
  double eps1 = tol * std::max(s2, 1e-300), eps2 = tol * std::max(s1, 1e-300);
  if (((d1 > eps1 && d2 < -eps1) || (d1 < -eps1 && d2 > eps1)) &&
      ((d3 > eps2 && d4 < -eps2) || (d3 < -eps2 && d4 > eps2)))
    return true;
  return false;
}

double triangle_orientation(Vec2 a, Vec2 b, Vec2 c) { return cross(b - a, c - b); }

}  // namespace packlab
