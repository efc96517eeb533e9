#include "packlab/complex.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>

namespace packlab {

namespace {

int64_t edge_key(int u, int v, int n) {
  if (u > v) std::swap(u, v);
  return static_cast<int64_t>(u) * n + v;
}

}  // namespace

const std::vector<int>& ComplexDisk::rotation(int v) const {
  require(v >= 0 && v < vertex_count_, Err::UnknownVertex, "vertex " + std::to_string(v));
  return rotation_[v];
}

bool ComplexDisk::has_edge(int u, int v) const { return edge_id(u, v) >= 0; }

int ComplexDisk::edge_id(int u, int v) const {
  if (u == v || u < 0 || v < 0 || u >= vertex_count_ || v >= vertex_count_) return -1;
  auto it = edge_index_.find(edge_key(u, v, vertex_count_));
  return it == edge_index_.end() ? -1 : it->second;
}

bool ComplexDisk::is_ccw_face(int a, int b, int c) const {
  int e = edge_id(a, b);
  if (e < 0) return false;
  for (int f : edge_faces_[e]) {
    if (f < 0) continue;
    const Face& t = faces_[f];
    for (int r = 0; r < 3; ++r)
      if (t[r] == a && t[(r + 1) % 3] == b && t[(r + 2) % 3] == c) return true;
  }
  return false;
}

int ComplexDisk::face_of_edges(int e1, int e2) const {
  for (int f : edge_faces_[e1]) {
    if (f < 0) continue;
    for (int g : edge_faces_[e2])
      if (f == g) return f;
  }
  return -1;
}

int ComplexDisk::boundary_successor(int v) const {
  require(is_boundary_vertex(v), Err::UnknownVertex, "not a boundary vertex");
  int p = boundary_pos_[v];
  return boundary_cycle_[(p + 1) % boundary_cycle_.size()];
}

int ComplexDisk::boundary_precursor(int v) const {
  require(is_boundary_vertex(v), Err::UnknownVertex, "not a boundary vertex");
  int p = boundary_pos_[v];
  return boundary_cycle_[(p + boundary_cycle_.size() - 1) % boundary_cycle_.size()];
}

uint64_t ComplexDisk::content_hash() const {
  uint64_t h = 1469598103934665603ull;  // FNV-1a
  auto mix = [&h](uint64_t x) {
    for (int i = 0; i < 8; ++i) {
      h ^= (x >> (8 * i)) & 0xff;
      h *= 1099511628211ull;
    }
  };
  mix(static_cast<uint64_t>(vertex_count_));
  for (const Face& f : faces_)
    for (int v : f) mix(static_cast<uint64_t>(v));
  return h;
}

ComplexDisk ComplexDisk::build(const std::vector<Face>& faces) {
  require(!faces.empty(), Err::NotATriangulation, "empty face list");

  ComplexDisk k;
  k.faces_ = faces;
  int n = 0;
  for (const Face& f : faces) {
    require(f[0] != f[1] && f[1] != f[2] && f[0] != f[2], Err::NotATriangulation,
            "face with repeated vertex");
    for (int v : f) {
      require(v >= 0, Err::NotATriangulation, "negative vertex id");
      n = std::max(n, v + 1);
    }
  }
  k.vertex_count_ = n;

  std::vector<bool> seen(n, false);
  for (const Face& f : faces)
    for (int v : f) seen[v] = true;
  for (int v = 0; v < n; ++v)
    require(seen[v], Err::NotATriangulation, "vertex ids not dense: missing " + std::to_string(v));

  // Edges, edge->face incidence, oriented-edge uniqueness.
  std::unordered_map<int64_t, int> oriented;
  oriented.reserve(faces.size() * 3);
  for (int fi = 0; fi < static_cast<int>(faces.size()); ++fi) {
    const Face& f = faces[fi];
    for (int r = 0; r < 3; ++r) {
      int u = f[r], v = f[(r + 1) % 3];
      int64_t okey = static_cast<int64_t>(u) * n + v;
      require(!oriented.count(okey), Err::NotATriangulation,
              "inconsistent orientation or duplicate face at edge " + std::to_string(u) + "-" +
                  std::to_string(v));
      oriented[okey] = fi;
      int64_t key = edge_key(u, v, n);
      auto it = k.edge_index_.find(key);
      if (it == k.edge_index_.end()) {
        k.edge_index_[key] = static_cast<int>(k.edges_.size());
        k.edges_.push_back({std::min(u, v), std::max(u, v)});
        k.edge_faces_.push_back({fi, -1});
      } else {
        auto& ef = k.edge_faces_[it->second];
        require(ef[1] < 0, Err::NotATriangulation, "edge in more than two faces");
        ef[1] = fi;
      }
    }
  }

  // Rotation at each vertex by stitching face fans: in ccw face <v,a,b> the
  // ccw successor of neighbor a at v is b.
  k.rotation_.assign(n, {});
  k.vertex_faces_.assign(n, {});
  k.interior_.assign(n, false);
  std::vector<std::map<int, int>> succ(n);  // at v: a -> b for face <v,a,b>
  std::vector<std::map<int, int>> pred(n);
  for (const Face& f : faces) {
    for (int r = 0; r < 3; ++r) {
      int v = f[r], a = f[(r + 1) % 3], b = f[(r + 2) % 3];
      require(!succ[v].count(a), Err::NotATriangulation, "broken link at vertex " + std::to_string(v));
      succ[v][a] = b;
      require(!pred[v].count(b), Err::NotATriangulation, "broken link at vertex " + std::to_string(v));
      pred[v][b] = a;
    }
  }
  for (int v = 0; v < n; ++v) {
    const auto& s = succ[v];
    const auto& p = pred[v];
    require(!s.empty(), Err::NotATriangulation, "isolated vertex");
    // starts: neighbors with no incoming arc
    std::vector<int> starts;
    for (const auto& [a, b] : s) {
      (void)b;
      if (!p.count(a)) starts.push_back(a);
    }
    std::vector<int> fan;
    bool interior;
    if (starts.empty()) {
      interior = true;
      int start = s.begin()->first;  // smallest neighbor id (map is ordered)
      fan.push_back(start);
      int cur = start;
      while (true) {
        auto it = s.find(cur);
        require(it != s.end(), Err::NotATriangulation, "broken link at vertex " + std::to_string(v));
        cur = it->second;
        if (cur == start) break;
        fan.push_back(cur);
        require(fan.size() <= s.size() + 1, Err::NotATriangulation,
                "broken link at vertex " + std::to_string(v));
      }
      require(fan.size() == s.size(), Err::NotATriangulation,
              "link at vertex " + std::to_string(v) + " is not a single fan");
    } else {
      interior = false;
      require(starts.size() == 1, Err::NotATriangulation,
              "link at vertex " + std::to_string(v) + " is not a single fan");
      int cur = starts[0];
      fan.push_back(cur);
      while (true) {
        auto it = s.find(cur);
        if (it == s.end()) break;
        cur = it->second;
        fan.push_back(cur);
        require(fan.size() <= s.size() + 1, Err::NotATriangulation,
                "broken link at vertex " + std::to_string(v));
      }
      require(fan.size() == s.size() + 1, Err::NotATriangulation,
              "link at vertex " + std::to_string(v) + " is not a single fan");
    }
    k.interior_[v] = interior;
    k.rotation_[v] = fan;
    // faces at v in fan order
    for (size_t i = 0; i + 1 < fan.size(); ++i) {
      int e1 = k.edge_id(v, fan[i]);
      int e2 = k.edge_id(v, fan[i + 1]);
      int f = k.face_of_edges(e1, e2);
      k.vertex_faces_[v].push_back(f);
    }
    if (interior) {
      int e1 = k.edge_id(v, fan.back());
      int e2 = k.edge_id(v, fan.front());
      k.vertex_faces_[v].push_back(k.face_of_edges(e1, e2));
    }
  }

  // Connectivity over the vertex graph.
  {
    std::vector<int> stack{0};
    std::vector<bool> vis(n, false);
    vis[0] = true;
    int count = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int u : k.rotation_[v])
        if (!vis[u]) {
          vis[u] = true;
          ++count;
          stack.push_back(u);
        }
    }
    require(count == n, Err::NotATriangulation, "complex is not connected");
  }

  int euler = n - k.edge_count() + static_cast<int>(faces.size());
  require(euler == 1, Err::NotSimplyConnected,
          "Euler characteristic " + std::to_string(euler) + " (expected 1)");

  // Boundary cycle: directed boundary edges u->v appear in their unique face
  // as <u,v,.>, interior on the left.
  std::map<int, int> bnext;
  int boundary_edges = 0;
  for (int e = 0; e < k.edge_count(); ++e) {
    if (!k.is_boundary_edge(e)) continue;
    ++boundary_edges;
    int u = k.edges_[e][0], v = k.edges_[e][1];
    const Face& f = faces[k.edge_faces_[e][0]];
    bool forward = false;  // true if directed boundary edge is u->v
    for (int r = 0; r < 3; ++r)
      if (f[r] == u && f[(r + 1) % 3] == v) forward = true;
    int from = forward ? u : v, to = forward ? v : u;
    require(!bnext.count(from), Err::NotATriangulation, "boundary is not a single cycle");
    bnext[from] = to;
  }
  require(boundary_edges > 0, Err::EmptyBoundary, "no boundary edge");
  require(boundary_edges >= 3, Err::NotATriangulation, "fewer than 3 boundary vertices");
  {
    int start = bnext.begin()->first;
    int cur = start;
    do {
      k.boundary_cycle_.push_back(cur);
      auto it = bnext.find(cur);
      require(it != bnext.end(), Err::NotATriangulation, "boundary is not a single cycle");
      cur = it->second;
      require(k.boundary_cycle_.size() <= bnext.size(), Err::NotATriangulation,
              "boundary is not a single cycle");
    } while (cur != start);
    require(k.boundary_cycle_.size() == bnext.size(), Err::NotATriangulation,
            "boundary is not a single cycle");
  }
  k.boundary_pos_.assign(n, -1);
  for (int i = 0; i < static_cast<int>(k.boundary_cycle_.size()); ++i) {
    int v = k.boundary_cycle_[i];
    require(!k.interior_[v], Err::NotATriangulation, "boundary cycle hits interior vertex");
    k.boundary_pos_[v] = i;
  }
  for (int v = 0; v < n; ++v)
    require(k.interior_[v] == (k.boundary_pos_[v] < 0), Err::NotATriangulation,
            "open link at vertex off the boundary cycle");

  return k;
}

SubComplex flower(const ComplexDisk& k, int v) {
  require(v >= 0 && v < k.vertex_count(), Err::UnknownVertex, std::to_string(v));
  std::vector<int> verts{v};
  for (int u : k.rotation(v)) verts.push_back(u);
  std::sort(verts.begin(), verts.end());
  std::map<int, int> to_sub;
  for (int i = 0; i < static_cast<int>(verts.size()); ++i) to_sub[verts[i]] = i;
  std::vector<Face> faces;
  for (int f : k.faces_at(v)) {
    const Face& t = k.faces()[f];
    faces.push_back({to_sub[t[0]], to_sub[t[1]], to_sub[t[2]]});
  }
  return SubComplex{ComplexDisk::build(faces), verts};
}

std::vector<int> edge_interval(const ComplexDisk& k, int v, int n1, int n2, bool closed_left,
                               bool closed_right) {
  const auto& rot = k.rotation(v);
  auto pos = [&](int u) {
    for (int i = 0; i < static_cast<int>(rot.size()); ++i)
      if (rot[i] == u) return i;
    fail(Err::EdgeNotIncident,
         "edge (" + std::to_string(v) + "," + std::to_string(u) + ") not incident");
  };
  int d = static_cast<int>(rot.size());
  int a = pos(n1), b = pos(n2);
  std::vector<int> out;
  if (closed_left) out.push_back(rot[a]);
  if (a == b) {
    if (closed_left && closed_right) return out;  // [e1] for e1 == e2
    // open interval from e to itself: the full cycle of the other edges
    for (int i = (a + 1) % d; i != a; i = (i + 1) % d) out.push_back(rot[i]);
    if (closed_right) out.push_back(rot[b]);
    return out;
  }
  for (int i = (a + 1) % d; i != b; i = (i + 1) % d) out.push_back(rot[i]);
  if (closed_right) out.push_back(rot[b]);
  return out;
}

std::vector<int> accessible_vertices(const ComplexDisk& k, int v_alpha) {
  require(v_alpha >= 0 && v_alpha < k.vertex_count(), Err::UnknownVertex, std::to_string(v_alpha));
  require(k.is_interior(v_alpha), Err::AlphaNotInterior,
          "alpha vertex " + std::to_string(v_alpha) + " is not interior");
  std::vector<bool> in_comp(k.vertex_count(), false);
  std::vector<int> stack{v_alpha};
  in_comp[v_alpha] = true;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int u : k.rotation(v))
      if (k.is_interior(u) && !in_comp[u]) {
        in_comp[u] = true;
        stack.push_back(u);
      }
  }
  std::vector<bool> acc = in_comp;
  for (int v = 0; v < k.vertex_count(); ++v)
    if (in_comp[v])
      for (int u : k.rotation(v)) acc[u] = true;
  std::vector<int> out;
  for (int v = 0; v < k.vertex_count(); ++v)
    if (acc[v]) out.push_back(v);
  return out;
}

KernelResult kernel(const ComplexDisk& k, int v_alpha) {
  std::vector<int> acc = accessible_vertices(k, v_alpha);
  std::vector<int> to_sub(k.vertex_count(), -1);
  for (int i = 0; i < static_cast<int>(acc.size()); ++i) to_sub[acc[i]] = i;
  std::vector<Face> faces;
  for (const Face& f : k.faces()) {
    if (to_sub[f[0]] >= 0 && to_sub[f[1]] >= 0 && to_sub[f[2]] >= 0)
      faces.push_back({to_sub[f[0]], to_sub[f[1]], to_sub[f[2]]});
  }
  KernelResult res{acc, ComplexDisk::build(faces), acc};
  return res;
}

bool is_strongly_connected(const ComplexDisk& k) {
  int first_interior = -1;
  for (int v = 0; v < k.vertex_count(); ++v)
    if (k.is_interior(v)) {
      first_interior = v;
      break;
    }
  if (first_interior < 0) return false;
  std::vector<bool> vis(k.vertex_count(), false);
  std::vector<int> stack{first_interior};
  vis[first_interior] = true;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int u : k.rotation(v))
      if (k.is_interior(u) && !vis[u]) {
        vis[u] = true;
        stack.push_back(u);
      }
  }
  for (int v = 0; v < k.vertex_count(); ++v) {
    if (k.is_interior(v)) {
      if (!vis[v]) return false;
    } else {
      bool has_interior_neighbor = false;
      for (int u : k.rotation(v)) has_interior_neighbor |= k.is_interior(u);
      if (!has_interior_neighbor) return false;
    }
  }
  return true;
}

ComplexDisk generate_flower(int petals) {
  require(petals >= 3, Err::ParameterOutOfRange, "flower needs >= 3 petals");
  std::vector<Face> faces;
  for (int i = 1; i <= petals; ++i) faces.push_back({0, i, i == petals ? 1 : i + 1});
  return ComplexDisk::build(faces);
}

ComplexDisk generate_hexdisk(int rings) {
  require(rings >= 1, Err::ParameterOutOfRange, "hexdisk needs >= 1 ring");
  // Triangular lattice in axial coordinates (q, r); hex distance <= rings.
  auto hexdist = [](int q, int r) { return (std::abs(q) + std::abs(r) + std::abs(q + r)) / 2; };
  std::map<std::pair<int, int>, int> id;
  std::vector<std::pair<int, int>> pts;
  for (int q = -rings; q <= rings; ++q)
    for (int r = -rings; r <= rings; ++r)
      if (hexdist(q, r) <= rings) pts.push_back({q, r});
  // order by ring then angle-ish (q,r lexicographic within ring keeps it deterministic)
  std::stable_sort(pts.begin(), pts.end(), [&](auto a, auto b) {
    int da = hexdist(a.first, a.second), db = hexdist(b.first, b.second);
    if (da != db) return da < db;
    return a < b;
  });
  for (int i = 0; i < static_cast<int>(pts.size()); ++i) id[pts[i]] = i;
  std::vector<Face> faces;
  auto at = [&](int qq, int rr) -> int {
    auto it = id.find({qq, rr});
    return it == id.end() ? -1 : it->second;
  };
  for (int q = -rings - 1; q <= rings; ++q) {
    for (int r = -rings - 1; r <= rings; ++r) {
      // up triangle (q,r),(q+1,r),(q,r+1); down triangle (q+1,r),(q+1,r+1),(q,r+1)
      int a = at(q, r), b = at(q + 1, r), c = at(q, r + 1), d = at(q + 1, r + 1);
      if (a >= 0 && b >= 0 && c >= 0) faces.push_back({a, b, c});
      if (b >= 0 && d >= 0 && c >= 0) faces.push_back({b, d, c});
    }
  }
  return ComplexDisk::build(faces);
}

ComplexDisk generate_apollonian(int generations) {
  require(generations >= 0, Err::ParameterOutOfRange, "generations must be >= 0");
  std::vector<Face> faces{{0, 1, 2}};
  int next_id = 3;
  for (int g = 0; g < generations; ++g) {
    ComplexDisk k = ComplexDisk::build(faces);
    std::vector<Face> out;
    // inscribe one vertex in every face interstice
    for (const Face& f : k.faces()) {
      int x = next_id++;
      out.push_back({f[0], f[1], x});
      out.push_back({f[1], f[2], x});
      out.push_back({f[2], f[0], x});
    }
    // inscribe one vertex in every boundary interstice (hat on each directed
    // boundary edge u->v, in boundary cycle order)
    const auto& cyc = k.boundary_cycle();
    for (size_t i = 0; i < cyc.size(); ++i) {
      int u = cyc[i], v = cyc[(i + 1) % cyc.size()];
      int w = next_id++;
      out.push_back({u, w, v});
    }
    faces = std::move(out);
  }
  return ComplexDisk::build(faces);
}

ComplexDisk generate_random(int rings, int subdivisions, uint64_t seed) {
  require(rings >= 1 && subdivisions >= 0, Err::ParameterOutOfRange, "bad random-complex params");
  ComplexDisk base = generate_hexdisk(rings);
  std::vector<Face> faces = base.faces();
  int next_id = base.vertex_count();
  std::mt19937_64 rng(seed);
  for (int s = 0; s < subdivisions; ++s) {
    std::uniform_int_distribution<size_t> pick(0, faces.size() - 1);
    size_t fi = pick(rng);
    Face f = faces[fi];
    int x = next_id++;
    faces[fi] = {f[0], f[1], x};
    faces.push_back({f[1], f[2], x});
    faces.push_back({f[2], f[0], x});
  }
  return ComplexDisk::build(faces);
}

}  // namespace packlab
