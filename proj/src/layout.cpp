#include "packlab/layout.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>

namespace packlab {

namespace {

constexpr double kPi = 3.1415926535897932384626433832795;
constexpr double kTwoPi = 2 * kPi;

using Cx = std::complex<double>;

Cx to_cx(Vec2 v) { return {v.x, v.y}; }
Vec2 to_vec(Cx z) { return {z.real(), z.imag()}; }

double face_angle(double rv, double ru, double rw) {
  double q = (ru * rw) / ((rv + ru) * (rv + rw));
  q = std::clamp(q, 0.0, 1.0);
  return 2.0 * std::asin(std::sqrt(q));
}

}  // namespace

double Packing::max_radius() const {
  double m = 0;
  for (const Disk& d : disks) m = std::max(m, d.radius);
  return m;
}

double Packing::diameter() const {
  double x0 = std::numeric_limits<double>::infinity(), x1 = -x0, y0 = x0, y1 = -x0;
  for (const Disk& d : disks) {
    x0 = std::min(x0, d.center.x - d.radius);
    x1 = std::max(x1, d.center.x + d.radius);
    y0 = std::min(y0, d.center.y - d.radius);
    y1 = std::max(y1, d.center.y + d.radius);
  }
  return std::hypot(x1 - x0, y1 - y0);
}

double angle_sum(const ComplexDisk& k, const RadiusVector& r, int v) {
  double total = 0;
  for (int fi : k.faces_at(v)) {
    const Face& f = k.faces()[fi];
    int u = -1, w = -1;
    for (int x : f)
      if (x != v) (u < 0 ? u : w) = x;
    total += face_angle(r[v], r[u], r[w]);
  }
  return total;
}

double angle_sum_derivative(const ComplexDisk& k, const RadiusVector& r, int v) {
  double total = 0;
  for (int fi : k.faces_at(v)) {
    const Face& f = k.faces()[fi];
    int u = -1, w = -1;
    for (int x : f)
      if (x != v) (u < 0 ? u : w) = x;
    double a = face_angle(r[v], r[u], r[w]);
    total += -std::tan(a / 2) * (1.0 / (r[v] + r[u]) + 1.0 / (r[v] + r[w]));
  }
  return total;
}

namespace {

// Solve angle_sum(v) = 2*pi for r[v], all other radii fixed. The residual is
// strictly decreasing in r[v]; safeguarded Newton with a dynamic bracket.
void solve_vertex_radius(const ComplexDisk& k, RadiusVector& r, int v, double tol) {
  double lo = 0, hi = std::numeric_limits<double>::infinity();
  double x = r[v];
  for (int it = 0; it < 200; ++it) {
    r[v] = x;
    double f = angle_sum(k, r, v) - kTwoPi;
    if (std::abs(f) < 0.1 * tol) return;
    if (f > 0)
      lo = x;
    else
      hi = x;
    double df = angle_sum_derivative(k, r, v);
    double step = df != 0 ? -f / df : 0;
    double next = x + step;
    if (!(next > lo && next < hi)) next = std::isinf(hi) ? 2 * x : 0.5 * (lo + hi);
    x = next;
  }
  r[v] = x;
}

}  // namespace

RadiusVector solve_radii(const ComplexDisk& k, const std::map<int, double>& boundary_r,
                         const SolveConfig& cfg, const RadiusVector* initial) {
  int n = k.vertex_count();
  std::vector<int> interior;
  for (int v = 0; v < n; ++v)
    if (k.is_interior(v)) interior.push_back(v);

  RadiusVector r(n, 1.0);
  for (int v = 0; v < n; ++v) {
    if (k.is_interior(v)) {
      if (initial) {
        require((*initial)[v] > 0, Err::ParameterOutOfRange, "initial radius must be positive");
        r[v] = (*initial)[v];
      }
    } else {
      auto it = boundary_r.find(v);
      require(it != boundary_r.end(), Err::ParameterOutOfRange,
              "missing boundary radius for vertex " + std::to_string(v));
      require(it->second > 0 && std::isfinite(it->second), Err::ParameterOutOfRange,
              "boundary radius must be positive and finite");
      r[v] = it->second;
    }
  }
  require(boundary_r.size() == static_cast<size_t>(n - interior.size()), Err::ParameterOutOfRange,
          "boundary radii must cover exactly the boundary vertices");

  double residual = 0;
  for (long sweep = 0; sweep < cfg.max_sweeps; ++sweep) {
    for (int v : interior) solve_vertex_radius(k, r, v, cfg.tol_angle);
    residual = 0;
    for (int v : interior) residual = std::max(residual, std::abs(angle_sum(k, r, v) - kTwoPi));
    if (residual < cfg.tol_angle) return r;
  }
  fail(Err::NonConvergence, "solve_radii: residual " + std::to_string(residual) + " after " +
                                std::to_string(cfg.max_sweeps) + " sweeps");
}

Packing layout_centers(const ComplexDisk& k, const RadiusVector& r, const Anchor& anchor,
                       const SolveConfig& cfg) {
  int n = k.vertex_count();
  require(static_cast<int>(r.size()) == n, Err::ParameterOutOfRange, "radius vector size");
  for (double x : r)
    require(x > 0 && std::isfinite(x), Err::ParameterOutOfRange, "radii must be positive");
  for (int v = 0; v < n; ++v)
    if (k.is_interior(v))
      require(std::abs(angle_sum(k, r, v) - kTwoPi) < 1e-6, Err::InconsistentRadii,
              "interior angle sum violated at vertex " + std::to_string(v));

  require(k.has_edge(anchor.alpha, anchor.neighbor), Err::ParameterOutOfRange,
          "anchor neighbor must be adjacent to alpha");

  Packing p;
  p.complex_hash = k.content_hash();
  p.anchor = anchor;
  p.disks.assign(n, Disk{});
  for (int v = 0; v < n; ++v) p.disks[v].radius = r[v];
  std::vector<bool> placed(n, false);

  p.disks[anchor.alpha].center = anchor.center;
  placed[anchor.alpha] = true;
  p.disks[anchor.neighbor].center =
      anchor.center + from_angle(anchor.direction) * (r[anchor.alpha] + r[anchor.neighbor]);
  placed[anchor.neighbor] = true;

  int remaining = n - 2;
  bool progress = true;
  while (remaining > 0 && progress) {
    progress = false;
    for (const Face& f : k.faces()) {
      int missing = -1, count = 0;
      for (int i = 0; i < 3; ++i) {
        if (placed[f[i]])
          ++count;
        else
          missing = i;
      }
      if (count != 2) continue;
      int w = f[missing];
      int a = f[(missing + 1) % 3];
      int b = f[(missing + 2) % 3];
      // face is <w, a, b> cyclically, so <a, b, w> is positively oriented
      p.disks[w].center =
          place_third_center(p.disks[a].center, r[a], p.disks[b].center, r[b], r[w]);
      placed[w] = true;
      --remaining;
      progress = true;
    }
  }
  require(remaining == 0, Err::InconsistentRadii, "layout could not reach every vertex");

  double tol = p.tol_tangency(cfg);
  double worst = 0;
  for (const auto& e : k.edges()) {
    double gap = std::abs(dist(p.disks[e[0]].center, p.disks[e[1]].center) - (r[e[0]] + r[e[1]]));
    worst = std::max(worst, gap);
  }
  require(worst <= tol, Err::InconsistentRadii,
          "tangency residual " + std::to_string(worst) + " exceeds tolerance");
  return p;
}

// ---------------------------------------------------------------------------
// Maximal packing: hyperbolic radius iteration with horocycle boundary.
// Interior vertices carry t = exp(-2h) in (0,1), h the hyperbolic radius;
// boundary vertices are horocycles (t = 0). The angle at v in a tangent
// triple (v,u,w) is 2*asin(sqrt(t_v(1-t_u)(1-t_w)/((1-t_v t_u)(1-t_v t_w)))),
// strictly increasing in t_v.
// ---------------------------------------------------------------------------

namespace {

double hyp_face_angle(double tv, double tu, double tw) {
  double q = tv * (1 - tu) * (1 - tw) / ((1 - tv * tu) * (1 - tv * tw));
  q = std::clamp(q, 0.0, 1.0);
  return 2.0 * std::asin(std::sqrt(q));
}

double hyp_angle_sum(const ComplexDisk& k, const std::vector<double>& t, int v) {
  double total = 0;
  for (int fi : k.faces_at(v)) {
    const Face& f = k.faces()[fi];
    int u = -1, w = -1;
    for (int x : f)
      if (x != v) (u < 0 ? u : w) = x;
    total += hyp_face_angle(t[v], t[u], t[w]);
  }
  return total;
}

void hyp_solve_vertex(const ComplexDisk& k, std::vector<double>& t, int v, double tol) {
  double lo = 0, hi = 1;
  double x = t[v];
  for (int it = 0; it < 200; ++it) {
    t[v] = x;
    double f = hyp_angle_sum(k, t, v) - kTwoPi;
    if (std::abs(f) < 0.1 * tol) return;
    if (f < 0)
      lo = x;
    else
      hi = x;
    double df = 0;
    for (int fi : k.faces_at(v)) {
      const Face& fc = k.faces()[fi];
      int u = -1, w = -1;
      for (int y : fc)
        if (y != v) (u < 0 ? u : w) = y;
      double a = hyp_face_angle(x, t[u], t[w]);
      df += std::tan(a / 2) * (1.0 / x + t[u] / (1 - x * t[u]) + t[w] / (1 - x * t[w]));
    }
    double next = df > 0 ? x - f / df : 0.5 * (lo + hi);
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    x = next;
  }
  t[v] = x;
}

double artanh(double x) { return 0.5 * std::log((1 + x) / (1 - x)); }

// Euclidean incarnation of the hyperbolic circle with h-center z, h-radius rho.
Disk hyp_to_euclidean(Cx z, double rho) {
  double m = std::abs(z);
  double d = 2 * artanh(m);
  double x1 = std::tanh((d - rho) / 2);
  double x2 = std::tanh((d + rho) / 2);
  Cx dir = m > 0 ? z / m : Cx(1, 0);
  Disk out;
  out.center = to_vec(dir * ((x1 + x2) / 2));
  out.radius = (x2 - x1) / 2;
  return out;
}

// Hyperbolic center of the euclidean disk (c, r) strictly inside the unit disk.
Cx euclidean_to_hyp_center(Vec2 c, double r) {
  double m = norm(c);
  double d1 = 2 * artanh(m - r);
  double d2 = 2 * artanh(m + r);
  double rad = std::tanh((d1 + d2) / 4);
  Cx dir = m > 0 ? to_cx(c) / m : Cx(1, 0);
  return dir * rad;
}

// Disk automorphism taking 0 to z; its derivative at 0 is positive real, so
// tangent directions at 0 and at z agree.
Cx mobius_push(Cx z, Cx xi) { return (xi + z) / (1.0 + std::conj(z) * xi); }
Cx mobius_pull(Cx z, Cx x) { return (x - z) / (1.0 - std::conj(z) * x); }

// Euclidean radius of the horocycle at ideal point zeta tangent to disk (c,r).
double horocycle_size_tangent_to(Cx zeta, Vec2 c, double r) {
  double p = (std::conj(zeta) * to_cx(c)).real();
  return (norm2(c) + 1 - 2 * p - r * r) / (2 * (1 - p + r));
}

struct Circumcircle {
  Cx center;
  double radius;
};

Circumcircle circle_through(Cx a, Cx b, Cx c) {
  double ax = a.real(), ay = a.imag(), bx = b.real(), by = b.imag(), cx = c.real(), cy = c.imag();
  double d = 2 * (ax * (by - cy) + bx * (cy - ay) + cx * (ay - by));
  require(std::abs(d) > 1e-300, Err::NonConvergence, "degenerate circle in layout");
  double a2 = ax * ax + ay * ay, b2 = bx * bx + by * by, c2 = cx * cx + cy * cy;
  double ux = (a2 * (by - cy) + b2 * (cy - ay) + c2 * (ay - by)) / d;
  double uy = (a2 * (cx - bx) + b2 * (ax - cx) + c2 * (bx - ax)) / d;
  Cx center(ux, uy);
  return {center, std::abs(a - center)};
}

struct HypLayout {
  const ComplexDisk& k;
  const std::vector<double>& t;
  std::vector<bool> placed;
  std::vector<Disk> disks;
  std::vector<Cx> hcenter;  // h-center (interior) or ideal point (boundary)

  HypLayout(const ComplexDisk& k_, const std::vector<double>& t_)
      : k(k_), t(t_), placed(k_.vertex_count(), false), disks(k_.vertex_count()),
        hcenter(k_.vertex_count()) {}

  double rho(int v) const { return -0.5 * std::log(t[v]); }

  void place_interior_at(int v, Cx z) {
    hcenter[v] = z;
    disks[v] = hyp_to_euclidean(z, rho(v));
    placed[v] = true;
  }

  void place_boundary_at(int v, Cx zeta, double size) {
    zeta /= std::abs(zeta);
    hcenter[v] = zeta;
    disks[v].center = to_vec(zeta * (1.0 - size));
    disks[v].radius = size;
    placed[v] = true;
  }

  // Place w from interior pivot p and placed tangent neighbor q; w goes on
  // the side prescribed by the stored face orientation.
  void place_from_interior_pivot(int p, int q, int w) {
    double phi_q = std::arg(mobius_pull(hcenter[p], hcenter[q]));
    double alpha = hyp_face_angle(t[p], t[q], t[w]);
    double phi_w = k.is_ccw_face(p, q, w) ? phi_q + alpha : phi_q - alpha;
    if (k.is_interior(w)) {
      double d = rho(p) + rho(w);
      place_interior_at(w, mobius_push(hcenter[p], std::polar(std::tanh(d / 2), phi_w)));
    } else {
      Cx zeta = mobius_push(hcenter[p], std::polar(1.0, phi_w));
      zeta /= std::abs(zeta);
      place_boundary_at(w, zeta,
                        horocycle_size_tangent_to(zeta, disks[p].center, disks[p].radius));
    }
  }

  // Place w from a horocycle pivot p and placed tangent neighbor q, via the
  // half-plane model with the pivot's ideal point sent to infinity.
  void place_from_horocycle_pivot(int p, int q, int w) {
    Cx zeta = hcenter[p];
    auto fwd = [&](Cx z) { return Cx(0, 1) * (zeta + z) / (zeta - z); };
    auto back = [&](Cx wz) { return zeta * (wz - Cx(0, 1)) / (wz + Cx(0, 1)); };
    Cx ca = to_cx(disks[p].center);
    double sa = disks[p].radius;
    Cx q1 = fwd(ca - zeta * sa);
    Cx q2 = fwd(ca + Cx(0, 1) * zeta * sa);
    double Y = q1.imag();
    require(std::abs(q2.imag() - Y) < 1e-8 * std::max(1.0, std::abs(Y)), Err::NonConvergence,
            "horocycle image is not horizontal");
    Cx cb = to_cx(disks[q].center);
    double rb = disks[q].radius;
    Circumcircle ib =
        circle_through(fwd(cb + Cx(rb, 0)), fwd(cb + Cx(-rb, 0)), fwd(cb + Cx(0, rb)));
    double Rw = k.is_interior(w) ? Y * (1 - t[w]) / 2 : Y / 2;
    double shift = 2 * std::sqrt(ib.radius * Rw);
    for (double sgn : {+1.0, -1.0}) {
      double xw = ib.center.real() + sgn * shift;
      Cx cw_half(xw, Y - Rw);
      Circumcircle bc = circle_through(back(cw_half + Cx(Rw, 0)), back(cw_half + Cx(-Rw, 0)),
                                       back(cw_half + Cx(0, Rw)));
      Vec2 cw = to_vec(bc.center);
      bool ccw_pqw = triangle_orientation(disks[p].center, disks[q].center, cw) > 0;
      if (ccw_pqw != k.is_ccw_face(p, q, w)) continue;
      if (k.is_interior(w)) {
        disks[w].center = cw;
        disks[w].radius = bc.radius;
        hcenter[w] = euclidean_to_hyp_center(cw, bc.radius);
        placed[w] = true;
      } else {
        place_boundary_at(w, bc.center, bc.radius);
      }
      return;
    }
    fail(Err::NonConvergence, "horocycle pivot placement found no oriented branch");
  }
};

Packing maximal_single_face(const ComplexDisk& k) {
  // three congruent mutually tangent disks inscribed in the unit circle
  double r = 2 * std::sqrt(3.0) - 3;
  Packing p;
  p.complex_hash = k.content_hash();
  p.disks.assign(3, Disk{});
  double c = 1 - r;
  double angles[3] = {kPi / 2, kPi / 2 + 2 * kPi / 3, kPi / 2 + 4 * kPi / 3};
  for (int v = 0; v < 3; ++v) {
    p.disks[v].center = from_angle(angles[v]) * c;
    p.disks[v].radius = r;
  }
  p.anchor = Anchor{0, p.disks[0].center, 1, angle_of(p.disks[1].center - p.disks[0].center)};
  return p;
}

}  // namespace

Packing maximal_packing(const ComplexDisk& k, const SolveConfig& cfg) {
  int n = k.vertex_count();
  if (n == 3 && k.faces().size() == 1) return maximal_single_face(k);

  std::vector<int> interior;
  for (int v = 0; v < n; ++v)
    if (k.is_interior(v)) interior.push_back(v);

  std::vector<double> t(n, 0.0);
  for (int v : interior) t[v] = 0.5;
  if (!interior.empty()) {
    double residual = 0;
    bool converged = false;
    for (long sweep = 0; sweep < cfg.max_sweeps && !converged; ++sweep) {
      for (int v : interior) hyp_solve_vertex(k, t, v, cfg.tol_angle);
      residual = 0;
      for (int v : interior)
        residual = std::max(residual, std::abs(hyp_angle_sum(k, t, v) - kTwoPi));
      converged = residual < cfg.tol_angle;
    }
    require(converged, Err::NonConvergence,
            "maximal packing radii did not converge (residual " + std::to_string(residual) + ")");
  }

  HypLayout layout(k, t);
  if (!interior.empty()) {
    int alpha = interior.front();
    layout.place_interior_at(alpha, 0.0);
    int u0 = *std::min_element(k.rotation(alpha).begin(), k.rotation(alpha).end());
    if (k.is_interior(u0)) {
      double d = layout.rho(alpha) + layout.rho(u0);
      layout.place_interior_at(u0, Cx(std::tanh(d / 2), 0));
    } else {
      layout.place_boundary_at(u0, Cx(1, 0), (1 - layout.disks[alpha].radius) / 2);
    }
  } else {
    // no interior vertex: anchor the first boundary disk at ideal point 1
    int b0 = k.boundary_cycle()[0];
    layout.place_boundary_at(b0, Cx(1, 0), 0.5);
    int u0 = k.rotation(b0)[0];
    Cx zeta = layout.hcenter[b0];
    auto fwd = [&](Cx z) { return Cx(0, 1) * (zeta + z) / (zeta - z); };
    auto back = [&](Cx wz) { return zeta * (wz - Cx(0, 1)) / (wz + Cx(0, 1)); };
    Cx ca = to_cx(layout.disks[b0].center);
    double sa = layout.disks[b0].radius;
    double Y = fwd(ca - zeta * sa).imag();
    double Rw = k.is_interior(u0) ? Y * (1 - t[u0]) / 2 : Y / 2;
    Cx cw_half(0.0, Y - Rw);
    Circumcircle c = circle_through(back(cw_half + Cx(Rw, 0)), back(cw_half + Cx(-Rw, 0)),
                                    back(cw_half + Cx(0, Rw)));
    if (k.is_interior(u0)) {
      layout.disks[u0].center = to_vec(c.center);
      layout.disks[u0].radius = c.radius;
      layout.hcenter[u0] = euclidean_to_hyp_center(to_vec(c.center), c.radius);
      layout.placed[u0] = true;
    } else {
      layout.place_boundary_at(u0, c.center, c.radius);
    }
  }

  int remaining = 0;
  for (int v = 0; v < n; ++v)
    if (!layout.placed[v]) ++remaining;
  bool progress = true;
  while (remaining > 0 && progress) {
    progress = false;
    for (const Face& f : k.faces()) {
      int missing = -1, count = 0;
      for (int i = 0; i < 3; ++i) {
        if (layout.placed[f[i]])
          ++count;
        else
          missing = i;
      }
      if (count != 2) continue;
      int w = f[missing];
      int a = f[(missing + 1) % 3];
      int b = f[(missing + 2) % 3];
      int pivot = a, other = b;
      if (!k.is_interior(a) && k.is_interior(b)) {
        pivot = b;
        other = a;
      }
      if (k.is_interior(pivot))
        layout.place_from_interior_pivot(pivot, other, w);
      else
        layout.place_from_horocycle_pivot(pivot, other, w);
      --remaining;
      progress = true;
    }
  }
  require(remaining == 0, Err::NonConvergence, "maximal layout could not reach every vertex");

  Packing p;
  p.complex_hash = k.content_hash();
  p.disks = layout.disks;
  if (!interior.empty()) {
    int alpha = interior.front();
    int u0 = *std::min_element(k.rotation(alpha).begin(), k.rotation(alpha).end());
    p.anchor = Anchor{alpha, p.disks[alpha].center, u0, 0.0};
  } else {
    int b0 = k.boundary_cycle()[0];
    p.anchor = Anchor{b0, p.disks[b0].center, k.rotation(b0)[0],
                      angle_of(p.disks[k.rotation(b0)[0]].center - p.disks[b0].center)};
  }
  return p;
}

ValidationReport validate_packing(const ComplexDisk& k, const Packing& p) {
  require(p.disks.size() == static_cast<size_t>(k.vertex_count()), Err::ParameterOutOfRange,
          "disk count does not match the complex");
  ValidationReport rep;
  for (int e = 0; e < k.edge_count(); ++e) {
    auto [u, v] = k.edge_vertices(e);
    double gap = std::abs(dist(p.disks[u].center, p.disks[v].center) -
                          (p.disks[u].radius + p.disks[v].radius));
    if (gap > rep.worst_tangency) {
      rep.worst_tangency = gap;
      rep.worst_tangency_edge = e;
    }
  }
  for (int fi = 0; fi < static_cast<int>(k.faces().size()); ++fi) {
    const Face& f = k.faces()[fi];
    if (triangle_orientation(p.disks[f[0]].center, p.disks[f[1]].center, p.disks[f[2]].center) <=
        0) {
      ++rep.orientation_failures;
      if (rep.first_bad_face < 0) rep.first_bad_face = fi;
    }
  }
  for (int u = 0; u < k.vertex_count(); ++u) {
    for (int v = u + 1; v < k.vertex_count(); ++v) {
      if (k.has_edge(u, v)) continue;
      double depth =
          p.disks[u].radius + p.disks[v].radius - dist(p.disks[u].center, p.disks[v].center);
      if (depth > rep.worst_overlap) {
        rep.worst_overlap = depth;
        rep.overlap_u = u;
        rep.overlap_v = v;
      }
    }
  }
  return rep;
}

Vec2 contact_point(const ComplexDisk& k, const Packing& p, int u, int v) {
  require(k.has_edge(u, v), Err::NotNeighbors,
          std::to_string(u) + " and " + std::to_string(v) + " are not neighbors");
  Vec2 cu = p.disks[u].center, cv = p.disks[v].center;
  return cu + (cv - cu) * (p.disks[u].radius / dist(cu, cv));
}

}  // namespace packlab
