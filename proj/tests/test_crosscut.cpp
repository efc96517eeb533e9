#include <algorithm>
#include <map>
#include <set>

#include "doctest.h"
#include "packlab/crosscut.hpp"

using namespace packlab;

namespace {

// The standard hex-flower crosscut used throughout: center c=0, petals 1..6
// in counterclockwise boundary order; L = (e(p1,p2), e(c,p2), e(c,p3),
// e(c,p4), e(c,p5), e(p5,p6)).
struct HexCut {
  ComplexDisk k = generate_hexdisk(1);
  std::map<int, int> petal;  // petal index (1..6) -> vertex id
  std::vector<EdgeVV> edges;

  HexCut() {
    const auto& cyc = k.boundary_cycle();
    for (int i = 0; i < 6; ++i) petal[i + 1] = cyc[i];
    edges = {{petal[1], petal[2]}, {0, petal[2]}, {0, petal[3]},
             {0, petal[4]}, {0, petal[5]},        {petal[5], petal[6]}};
  }
};

std::set<int> to_set(const std::vector<int>& v) { return {v.begin(), v.end()}; }

// occurrence counting with independent code path
std::map<int, int> occurrences(const std::vector<int>& seq) {
  std::map<int, int> m;
  for (int v : seq) ++m[v];
  return m;
}

// quartic brute-force search for the forbidden alternation
bool has_alternation_bruteforce(const std::vector<int>& s) {
  int n = static_cast<int>(s.size());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k2 = j + 1; k2 < n; ++k2)
        for (int l = k2 + 1; l < n; ++l)
          if (s[i] == s[k2] && s[j] == s[l] && s[i] != s[j]) return true;
  return false;
}

}  // namespace

TEST_CASE("hex crosscut: validation and derived structure") {
  HexCut h;
  auto l = validate_crosscut(h.k, h.edges);
  CHECK(l.length() == 5);
  CHECK(l.face_chain.size() == 5);

  CHECK(to_set(l.upper_vertices) == std::set<int>{0, h.petal[1], h.petal[6]});
  CHECK(to_set(l.lower_vertices) ==
        std::set<int>{h.petal[2], h.petal[3], h.petal[4], h.petal[5]});

  CHECK(to_set(l.upper_neighbors) == std::set<int>{0, h.petal[1], h.petal[6]});
  CHECK(to_set(l.lower_neighbors) ==
        std::set<int>{h.petal[2], h.petal[3], h.petal[4], h.petal[5]});

  // S^+ = (p1, c, p6), S^- = (p2, p3, p4, p5)
  CHECK(l.seq_upper == std::vector<int>{h.petal[1], 0, h.petal[6]});
  CHECK(l.seq_lower ==
        std::vector<int>{h.petal[2], h.petal[3], h.petal[4], h.petal[5]});

  // |E^-| + |E^+| = l, with q = 2 upper and p = 3 lower accompanying edges
  CHECK(l.acc_upper.size() == 2);
  CHECK(l.acc_lower.size() == 3);
  CHECK(l.acc_upper.size() + l.acc_lower.size() == static_cast<size_t>(l.length()));

  // upper accompanying edges are exactly <p1,c> and <c,p6>
  CHECK(l.acc_upper[0] == std::pair<int, int>{h.petal[1], 0});
  CHECK(l.acc_upper[1] == std::pair<int, int>{0, h.petal[6]});
}

TEST_CASE("crosscut validation errors") {
  HexCut h;
  SUBCASE("duplicate edge") {
    auto bad = h.edges;
    bad[3] = bad[2];
    try {
      validate_crosscut(h.k, bad);
      CHECK(false);
    } catch (const Error& e) {
      CHECK(e.code() == Err::DuplicateEdge);
    }
  }
  SUBCASE("non-adjacent consecutive edges") {
    std::vector<EdgeVV> bad{{h.petal[1], h.petal[2]}, {h.petal[2], h.petal[3]}};
    try {
      validate_crosscut(h.k, bad);
      CHECK(false);
    } catch (const Error& e) {
      CHECK(e.code() == Err::NonAdjacentConsecutive);
    }
  }
  SUBCASE("interior end edge") {
    std::vector<EdgeVV> bad{{0, h.petal[2]}, {0, h.petal[3]}};
    try {
      validate_crosscut(h.k, bad);
      CHECK(false);
    } catch (const Error& e) {
      CHECK(e.code() == Err::EndpointNotBoundary);
    }
  }
  SUBCASE("three edges of one face") {
    // walk in, turn straight back through the same face
    std::vector<EdgeVV> bad{{h.petal[1], h.petal[2]},
                            {0, h.petal[2]},
                            {0, h.petal[1]},
                            {h.petal[6], h.petal[1]}};
    try {
      validate_crosscut(h.k, bad);
      CHECK(false);
    } catch (const Error& e) {
      CHECK(e.code() == Err::ThreeInOneFace);
    }
  }
}

TEST_CASE("single-vertex lower side: fan crosscut around a petal") {
  // L = (e(p1,p6), e(p1,c), e(p1,p2)) isolates p1 on the lower side and has
  // S^- = (p1), S^+ = (p6, c, p2).
  HexCut h;
  std::vector<EdgeVV> fan{{h.petal[1], h.petal[6]}, {h.petal[1], 0}, {h.petal[1], h.petal[2]}};
  auto l = validate_crosscut(h.k, fan);
  CHECK(to_set(l.lower_vertices) == std::set<int>{h.petal[1]});
  CHECK(l.seq_lower == std::vector<int>{h.petal[1]});
  CHECK(l.seq_upper == std::vector<int>{h.petal[6], 0, h.petal[2]});
  CHECK(l.acc_lower.empty());
  CHECK(l.acc_upper.size() == 2);
}

TEST_CASE("reversing a crosscut swaps the sides") {
  HexCut h;
  auto l = validate_crosscut(h.k, h.edges);
  auto r = validate_crosscut(h.k, reversed_edges(l));
  CHECK(to_set(r.upper_vertices) == to_set(l.lower_vertices));
  CHECK(to_set(r.lower_vertices) == to_set(l.upper_vertices));
}

TEST_CASE("forbidden pattern check") {
  CHECK(forbidden_pattern_check({1, 2, 1}));
  CHECK(!forbidden_pattern_check({1, 2, 1, 2}));
  CHECK(forbidden_pattern_check({1, 2, 3, 2, 1}));
  CHECK(!forbidden_pattern_check({5, 1, 7, 2, 7, 1, 9, 7}) ==
        has_alternation_bruteforce({5, 1, 7, 2, 7, 1, 9, 7}));
}

TEST_CASE("classify_vertices") {
  auto c1 = classify_vertices({4, 0, 9});
  CHECK(c1.simple.size() == 3);
  CHECK(c1.multiple.empty());
  auto c2 = classify_vertices({4, 7, 4});
  CHECK(c2.simple == std::vector<int>{7});
  CHECK(c2.multiple == std::vector<int>{4});
}

TEST_CASE("loops: (a,b,a) has one loop meeting b") {
  HexCut h;
  std::vector<EdgeVV> fan{{h.petal[1], h.petal[6]}, {h.petal[1], 0}, {h.petal[1], h.petal[2]}};
  auto l = validate_crosscut(h.k, reversed_edges(validate_crosscut(h.k, fan)));
  // reversed fan: upper side {p1}; S^- = (p2, c, p6)... we need a multiple
  // vertex, so build a crosscut whose S^+ repeats a vertex instead.
  // Use hexdisk(2) and a crosscut wrapping a ring-1 vertex.
  auto k2 = generate_hexdisk(2);
  for (uint64_t seed = 0; seed < 400; ++seed) {
    auto edges = random_crosscut(k2, seed);
    auto cut = validate_crosscut(k2, edges);
    auto classes = classify_vertices(cut.seq_upper);
    for (int v : classes.multiple) {
      auto ls = loops(k2, cut, v);
      CHECK(!ls.empty());
      for (const auto& loop : ls) {
        CHECK(loop.first_edge < loop.last_edge);
        CHECK(!loop.met_vertices.empty());
        // every loop meets a simple vertex
        bool meets_simple = false;
        for (int u : loop.met_vertices)
          meets_simple |= std::find(classes.simple.begin(), classes.simple.end(), u) !=
                          classes.simple.end();
        CHECK(meets_simple);
      }
    }
  }
}

TEST_CASE("loops: not-multiple vertex is rejected") {
  HexCut h;
  auto l = validate_crosscut(h.k, h.edges);
  try {
    loops(h.k, l, 0);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Err::NotMultiple);
  }
}

TEST_CASE("property suite: 500 random crosscuts over mixed complexes") {
  std::vector<ComplexDisk> complexes;
  complexes.push_back(generate_hexdisk(1));
  complexes.push_back(generate_hexdisk(2));
  complexes.push_back(generate_hexdisk(3));
  complexes.push_back(generate_apollonian(2));
  complexes.push_back(generate_random(2, 9, 77));

  int done = 0;
  for (uint64_t seed = 0; done < 500; ++seed) {
    const auto& k = complexes[seed % complexes.size()];
    auto edges = random_crosscut(k, 10'000 + seed);
    auto l = validate_crosscut(k, edges);
    ++done;

    // re-validation of derived face chain: faces pairwise distinct
    std::set<int> fs(l.face_chain.begin(), l.face_chain.end());
    CHECK(fs.size() == l.face_chain.size());

    // side partition: exactly two non-empty classes
    CHECK(!l.lower_vertices.empty());
    CHECK(!l.upper_vertices.empty());

    // |E^-| + |E^+| = l
    CHECK(l.acc_lower.size() + l.acc_upper.size() == static_cast<size_t>(l.length()));

    // forbidden pattern never present in either sequence
    CHECK(forbidden_pattern_check(l.seq_upper));
    CHECK(forbidden_pattern_check(l.seq_lower));

    // adjacent entries differ
    for (size_t i = 0; i + 1 < l.seq_upper.size(); ++i)
      CHECK(l.seq_upper[i] != l.seq_upper[i + 1]);

    // U^+ is the vertex set of E^+ (when E^+ is non-degenerate)
    if (!l.acc_upper.empty()) {
      std::set<int> from_edges;
      for (auto [u, w] : l.acc_upper) {
        from_edges.insert(u);
        from_edges.insert(w);
      }
      CHECK(from_edges == to_set(l.upper_neighbors));
    }

    // oriented accompanying edges pairwise disjoint; a repeated non-oriented
    // edge stays within one class
    std::set<std::pair<int, int>> oriented;
    std::map<std::pair<int, int>, int> cls;
    bool ok = true;
    int idx = 0;
    for (const auto& grp : {l.acc_lower, l.acc_upper}) {
      for (auto e : grp) {
        ok &= oriented.insert(e).second;
        auto key = std::minmax(e.first, e.second);
        auto it = cls.find(key);
        if (it == cls.end())
          cls[key] = idx;
        else
          ok &= it->second == idx;
      }
      ++idx;
    }
    CHECK(ok);

    // classification matches an independent occurrence counter
    auto classes = classify_vertices(l.seq_upper);
    auto occ = occurrences(l.seq_upper);
    for (int v : classes.simple) CHECK(occ[v] == 1);
    for (int v : classes.multiple) CHECK(occ[v] > 1);
  }
}
