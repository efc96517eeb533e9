#ifndef PACKLAB_GEOM2_HPP
#define PACKLAB_GEOM2_HPP

#include <cmath>
#include <optional>
#include <vector>

namespace packlab {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  Vec2() = default;
  Vec2(double x_, double y_) : x(x_), y(y_) {}

  Vec2 operator+(Vec2 o) const { return {x + o.x, y + o.y}; }
  Vec2 operator-(Vec2 o) const { return {x - o.x, y - o.y}; }
  Vec2 operator*(double s) const { return {x * s, y * s}; }
  Vec2 operator/(double s) const { return {x / s, y / s}; }
  Vec2& operator+=(Vec2 o) { x += o.x; y += o.y; return *this; }
  Vec2& operator-=(Vec2 o) { x -= o.x; y -= o.y; return *this; }
};

inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
inline double norm2(Vec2 a) { return dot(a, a); }
inline double norm(Vec2 a) { return std::sqrt(norm2(a)); }
inline double dist(Vec2 a, Vec2 b) { return norm(a - b); }
inline Vec2 normalized(Vec2 a) { return a / norm(a); }
inline Vec2 perp(Vec2 a) { return {-a.y, a.x}; }  // rotate +90 degrees
inline Vec2 from_angle(double t) { return {std::cos(t), std::sin(t)}; }
inline double angle_of(Vec2 a) { return std::atan2(a.y, a.x); }

struct Disk {
  Vec2 center;
  double radius = 0.0;
};

// Circular arc on a supporting circle. Degenerate point arcs (start == end,
// sweep == 0) are allowed. `ccw` gives the traversal orientation from start
// to end; `sweep` is the non-negative angular extent in that direction.
struct CircularArc {
  Vec2 center;
  double radius = 0.0;
  Vec2 start;
  Vec2 end;
  bool ccw = true;
  double start_angle = 0.0;
  double sweep = 0.0;

  bool degenerate() const { return sweep <= 0.0; }
};

CircularArc make_arc(Vec2 center, double radius, Vec2 start, Vec2 end, bool ccw);
CircularArc point_arc(Vec2 center, double radius, Vec2 p);

// Smallest distance from p to the (closed) arc.
double arc_distance(const CircularArc& a, Vec2 p);
// True if q (assumed on the supporting circle) lies on the arc, with a slack
// band of `tol` (arc-length units) applied at both endpoints.
bool arc_contains_angle(const CircularArc& a, double theta, double tol_rad);
Vec2 arc_point_at(const CircularArc& a, double t01);

// A boundary piece of a region: circular arc or straight segment.
struct CurvePiece {
  enum class Kind { Arc, Segment } kind = Kind::Segment;
  CircularArc arc;
  Vec2 a, b;  // segment endpoints

  static CurvePiece make_segment(Vec2 a, Vec2 b);
  static CurvePiece make_arc(const CircularArc& arc);
};

double piece_distance(const CurvePiece& p, Vec2 q);

// Crossing-parity membership for a region bounded by a closed chain of
// pieces. Rays are cast in a deterministic direction sequence; directions
// that graze a junction, hit tangentially, or pass too close to an endpoint
// are discarded and the next direction is tried.
class PieceRegion {
 public:
  explicit PieceRegion(std::vector<CurvePiece> boundary) : pieces_(std::move(boundary)) {}

  // tol: ambiguity band. Returns nullopt when p is within tol of the boundary.
  std::optional<bool> contains(Vec2 p, double tol) const;
  double boundary_distance(Vec2 p) const;
  const std::vector<CurvePiece>& pieces() const { return pieces_; }

 private:
  std::vector<CurvePiece> pieces_;
};

// Intersection of two circles. Returns 0, 1 (tangency within tol) or 2 points.
int circle_circle(Vec2 c1, double r1, Vec2 c2, double r2, double tol, Vec2 out[2]);

// Place the third disk of an oriented tangent triple: returns the center of a
// disk of radius r tangent to (ca,ra) and (cb,rb) such that (ca, cb, c) is
// counterclockwise.
Vec2 place_third_center(Vec2 ca, double ra, Vec2 cb, double rb, double r);

// Do open segments (a1,b1) and (a2,b2) cross transversally? Shared endpoints
// within tol do not count.
bool segments_cross(Vec2 a1, Vec2 b1, Vec2 a2, Vec2 b2, double tol);

double triangle_orientation(Vec2 a, Vec2 b, Vec2 c);  // >0 ccw, <0 cw

}  // namespace packlab

#endif
