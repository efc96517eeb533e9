#include "packlab/crosscut.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

namespace packlab {

namespace {

int shared_vertex(const EdgeVV& a, const EdgeVV& b) {
  for (int u : a)
    for (int v : b)
      if (u == v) return u;
  return -1;
}

int other_end(const EdgeVV& e, int v) { return e[0] == v ? e[1] : e[0]; }

}  // namespace

Crosscut validate_crosscut(const ComplexDisk& k, const std::vector<EdgeVV>& edges) {
  Crosscut l;
  l.edges = edges;
  require(edges.size() >= 2, Err::CrosscutInvalid, "crosscut needs at least two edges");

  std::set<std::pair<int, int>> seen;
  for (const EdgeVV& e : edges) {
    require(k.has_edge(e[0], e[1]), Err::CrosscutInvalid,
            "not an edge: " + std::to_string(e[0]) + "-" + std::to_string(e[1]));
    auto key = std::minmax(e[0], e[1]);
    require(seen.insert(key).second, Err::DuplicateEdge,
            "edge repeated: " + std::to_string(e[0]) + "-" + std::to_string(e[1]));
  }
  require(k.is_boundary_edge(k.edge_id(edges.front()[0], edges.front()[1])),
          Err::EndpointNotBoundary, "first edge is not a boundary edge");
  require(k.is_boundary_edge(k.edge_id(edges.back()[0], edges.back()[1])),
          Err::EndpointNotBoundary, "last edge is not a boundary edge");

  int n = static_cast<int>(edges.size());
  std::set<int> face_seen;
  for (int j = 1; j < n; ++j) {
    int e1 = k.edge_id(edges[j - 1][0], edges[j - 1][1]);
    int e2 = k.edge_id(edges[j][0], edges[j][1]);
    int f = k.face_of_edges(e1, e2);
    require(f >= 0, Err::NonAdjacentConsecutive,
            "edges " + std::to_string(j - 1) + " and " + std::to_string(j) +
                " share no face");
    require(face_seen.insert(f).second, Err::ThreeInOneFace,
            "face visited twice along the crosscut");
    l.face_chain.push_back(f);
    int v = shared_vertex(edges[j - 1], edges[j]);
    require(v >= 0, Err::NonAdjacentConsecutive, "consecutive edges share no vertex");
    l.pivots.push_back(v);
    int u = other_end(edges[j - 1], v);
    int w = other_end(edges[j], v);
    l.pivot_lower.push_back(k.is_ccw_face(u, v, w));
  }

  // Side partition: components of the edge graph minus the crosscut edges.
  std::vector<int> comp(k.vertex_count(), -1);
  int comp_count = 0;
  for (int s = 0; s < k.vertex_count(); ++s) {
    if (comp[s] >= 0) continue;
    comp[s] = comp_count;
    std::vector<int> stack{s};
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int u : k.rotation(v)) {
        if (comp[u] >= 0) continue;
        if (seen.count(std::minmax(v, u))) continue;
        comp[u] = comp_count;
        stack.push_back(u);
      }
    }
    ++comp_count;
  }
  require(comp_count == 2, Err::CrosscutInvalid,
          "removing the crosscut leaves " + std::to_string(comp_count) + " components");

  // Resolve which component is the lower side using the pivots.
  int lower_comp = -1, upper_comp = -1;
  auto vote = [&](int v, bool lower) {
    int& slot = lower ? lower_comp : upper_comp;
    require(slot < 0 || slot == comp[v], Err::CrosscutInvalid, "inconsistent side orientation");
    slot = comp[v];
  };
  for (int j = 0; j < n - 1; ++j) {
    int v = l.pivots[j];
    bool pl = l.pivot_lower[j];
    vote(v, pl);
    int u = other_end(edges[j], v);
    int w = other_end(edges[j + 1], v);
    vote(u, !pl);
    vote(w, !pl);
  }
  require(lower_comp >= 0 && upper_comp >= 0 && lower_comp != upper_comp, Err::CrosscutInvalid,
          "could not resolve the two sides");

  l.side.assign(k.vertex_count(), 0);
  for (int v = 0; v < k.vertex_count(); ++v) {
    l.side[v] = comp[v] == lower_comp ? 0 : 1;
    (l.side[v] == 0 ? l.lower_vertices : l.upper_vertices).push_back(v);
  }
  require(!l.lower_vertices.empty() && !l.upper_vertices.empty(), Err::CrosscutInvalid,
          "a side is empty");

  // Neighbor sets: side vertices adjacent to a crosscut edge.
  {
    std::set<int> lo, up;
    for (const EdgeVV& e : edges)
      for (int v : e) (l.is_lower(v) ? lo : up).insert(v);
    l.lower_neighbors.assign(lo.begin(), lo.end());
    l.upper_neighbors.assign(up.begin(), up.end());
  }

  // Accompanying edges E^+/E^-: third edge <u,w> of each pair, on the side
  // opposite the pivot. Accompanying vertex sequences are the pivot-augmented
  // walks (consecutive duplicates merged); for pairs whose accompanying edge
  // lies on the opposite side, the pivot itself is emitted on its own side.
  auto emit = [](std::vector<int>& seq, int v) {
    if (seq.empty() || seq.back() != v) seq.push_back(v);
  };
  for (int j = 0; j < n - 1; ++j) {
    int v = l.pivots[j];
    int u = other_end(edges[j], v);
    int w = other_end(edges[j + 1], v);
    if (l.pivot_lower[j]) {
      l.acc_upper.push_back({u, w});
      emit(l.seq_upper, u);
      emit(l.seq_upper, w);
      emit(l.seq_lower, v);
    } else {
      l.acc_lower.push_back({u, w});
      emit(l.seq_lower, u);
      emit(l.seq_lower, w);
      emit(l.seq_upper, v);
    }
  }
  return l;
}

std::vector<EdgeVV> reversed_edges(const Crosscut& l) {
  std::vector<EdgeVV> out(l.edges.rbegin(), l.edges.rend());
  return out;
}

bool forbidden_pattern_check(const std::vector<int>& seq) {
  int n = static_cast<int>(seq.size());
  std::set<int> values(seq.begin(), seq.end());
  for (int u : values) {
    for (int v : values) {
      if (u == v) continue;
      // greedy scan for subsequence u, v, u, v
      int state = 0;
      for (int i = 0; i < n && state < 4; ++i) {
        int want = (state % 2 == 0) ? u : v;
        if (seq[i] == want) ++state;
      }
      if (state == 4) return false;
    }
  }
  return true;
}

VertexClasses classify_vertices(const std::vector<int>& seq_upper) {
  std::map<int, int> count;
  for (int v : seq_upper) ++count[v];
  VertexClasses c;
  for (const auto& [v, n] : count) (n == 1 ? c.simple : c.multiple).push_back(v);
  return c;
}

std::vector<Loop> loops(const ComplexDisk& k, const Crosscut& l, int v) {
  (void)k;
  auto classes = classify_vertices(l.seq_upper);
  require(std::find(classes.multiple.begin(), classes.multiple.end(), v) != classes.multiple.end(),
          Err::NotMultiple, "vertex " + std::to_string(v) + " is not multiple");
  std::vector<Loop> out;
  int m = static_cast<int>(l.acc_upper.size());
  for (int i = 0; i < m; ++i) {
    if (l.acc_upper[i].first != v) continue;
    for (int j = i + 1; j < m; ++j) {
      if (l.acc_upper[j].second != v) continue;
      Loop loop;
      loop.first_edge = i;
      loop.last_edge = j;
      for (int t = i; t <= j; ++t) {
        for (int x : {l.acc_upper[t].first, l.acc_upper[t].second}) {
          if (x == v) continue;
          if (loop.met_vertices.empty() || loop.met_vertices.back() != x)
            loop.met_vertices.push_back(x);
        }
      }
      out.push_back(std::move(loop));
    }
  }
  return out;
}

std::vector<EdgeVV> random_crosscut(const ComplexDisk& k, uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<int> boundary_edge_ids;
  for (int e = 0; e < k.edge_count(); ++e)
    if (k.is_boundary_edge(e)) boundary_edge_ids.push_back(e);
  for (int attempt = 0; attempt < 500; ++attempt) {
    std::uniform_int_distribution<size_t> pick(0, boundary_edge_ids.size() - 1);
    int e0 = boundary_edge_ids[pick(rng)];
    std::vector<EdgeVV> cut{{k.edge_vertices(e0)}};
    std::set<int> used_edges{e0};
    std::set<int> used_faces;
    int cur = e0;
    int prev_face = -1;
    bool done = false;
    for (int step = 0; step < 4 * static_cast<int>(k.faces().size()); ++step) {
      // candidate faces at cur (not yet used)
      std::vector<int> cand_faces;
      for (int f : k.edge_faces(cur))
        if (f >= 0 && f != prev_face && !used_faces.count(f)) cand_faces.push_back(f);
      if (cand_faces.empty()) break;
      std::uniform_int_distribution<size_t> pf(0, cand_faces.size() - 1);
      int f = cand_faces[pf(rng)];
      // next edge: one of the two other edges of f
      const Face& t = k.faces()[f];
      std::vector<int> cand_edges;
      for (int r = 0; r < 3; ++r) {
        int e = k.edge_id(t[r], t[(r + 1) % 3]);
        if (e != cur && !used_edges.count(e)) cand_edges.push_back(e);
      }
      if (cand_edges.empty()) break;
      std::uniform_int_distribution<size_t> pe(0, cand_edges.size() - 1);
      int e = cand_edges[pe(rng)];
      used_faces.insert(f);
      used_edges.insert(e);
      cut.push_back(k.edge_vertices(e));
      cur = e;
      prev_face = f;
      if (k.is_boundary_edge(e)) {
        done = true;
        break;
      }
    }
    if (!done) continue;
    try {
      validate_crosscut(k, cut);
      return cut;
    } catch (const Error&) {
      continue;
    }
  }
  fail(Err::CrosscutInvalid, "random crosscut generation failed");
}

}  // namespace packlab
