#include <algorithm>
#include <set>

#include "doctest.h"

#include "barnette/coloring.hpp"
#include "barnette/oracle.hpp"

using namespace barnette;

namespace {

// Brute-force proper 3-colorings (for uniqueness checks on small n).
int count_proper_colorings(const PlaneTriangulation& g) {
  int n = g.vertex_count();
  std::vector<int> col(n, 0);
  int count = 0;
  auto rec = [&](auto&& self, int v) -> void {
    if (v == n) {
      ++count;
      return;
    }
    for (int c = 1; c <= 3; ++c) {
      bool ok = true;
      for (int u : g.neighbors(v))
        if (u < v && col[u] == c) ok = false;
      if (!ok) continue;
      col[v] = c;
      self(self, v + 1);
      col[v] = 0;
    }
  };
  rec(rec, 0);
  return count;
}

}  // namespace

TEST_CASE("octahedron coloring: classes are the antipodal pairs") {
  auto g = catalog("octahedron").graph;
  auto c = three_color(g);
  // proper
  for (int v = 0; v < 6; ++v)
    for (int u : g.neighbors(v)) CHECK(c.color[u] != c.color[v]);
  // non-adjacent pairs share a class
  std::set<std::pair<int, int>> pairs;
  for (int v = 0; v < 6; ++v)
    for (int u = v + 1; u < 6; ++u)
      if (!g.has_edge(u, v)) {
        CHECK(c.color[u] == c.color[v]);
        pairs.insert({v, u});
      }
  CHECK(pairs.size() == 3);
  CHECK(count_proper_colorings(g) == 6);
}

TEST_CASE("every face carries all three labels") {
  for (const char* name : {"octahedron", "oct+1", "oct+2", "tetrakis", "ladder11"}) {
    auto g = catalog(name).graph;
    auto c = three_color(g);
    for (const auto& f : g.faces())
      CHECK(c.color[f[0]] + c.color[f[1]] + c.color[f[2]] == 6);
  }
}

TEST_CASE("coloring is unique up to label permutation (n <= 12)") {
  for (const char* name : {"octahedron", "oct+1", "oct+2", "oct+nested", "ladder11"}) {
    auto g = catalog(name).graph;
    CHECK(count_proper_colorings(g) == 6);
  }
}

TEST_CASE("propagation is label-equivariant") {
  auto g = catalog("oct+1").graph;
  auto c = three_color(g);
  auto c2 = c.relabeled({2, 3, 1});
  for (size_t v = 0; v < c.color.size(); ++v) {
    CHECK(c2.color[v] == (c.color[v] % 3) + 1);
  }
}

TEST_CASE("check_hypothesis on the catalog") {
  SUBCASE("octahedron: no big vertices, all six permutations") {
    auto rec = catalog("octahedron");
    CHECK(rec.hypothesis.satisfying.size() == 6);
    CHECK(rec.hypothesis.failures.empty());
  }
  SUBCASE("oct+1: three big vertices, one per class, all six permutations") {
    auto rec = catalog("oct+1");
    CHECK(rec.hypothesis.satisfying.size() == 6);
  }
  SUBCASE("oct+2 fails under every permutation with 4-cycle witnesses") {
    auto rec = catalog("oct+2");
    CHECK(rec.hypothesis.satisfying.empty());
    CHECK(rec.hypothesis.failures.size() == 3);
    for (const auto& f : rec.hypothesis.failures) {
      CHECK(f.cycle.size() == 4);
      // witness is a real cycle in the named pair
      const auto& g = rec.graph;
      auto cls = classify(g, three_color(g));
      for (size_t i = 0; i < f.cycle.size(); ++i) {
        int u = f.cycle[i], v = f.cycle[(i + 1) % f.cycle.size()];
        CHECK(g.has_edge(u, v));
        CHECK(g.degree(u) >= 6);
        int cu = cls.color[u];
        CHECK((cu == f.pair[0] || cu == f.pair[1]));
      }
    }
  }
  SUBCASE("tetrakis satisfies via the apex class") {
    auto rec = catalog("tetrakis");
    CHECK(rec.hypothesis.satisfying.size() == 2);
    for (const auto& p : rec.hypothesis.satisfying) {
      // the distinguished class must be the one with no big vertices
      auto cls = classify(rec.graph, three_color(rec.graph));
      CHECK(cls.big[p[0] - 1].empty());
    }
  }
  SUBCASE("ladder11 satisfies under all six permutations") {
    auto rec = catalog("ladder11");
    CHECK(rec.hypothesis.satisfying.size() == 6);
  }
}

TEST_CASE("check_hypothesis is label-permutation equivariant") {
  for (const char* name : {"oct+2", "tetrakis", "ladder10"}) {
    auto g = catalog(name).graph;
    auto cls = classify(g, three_color(g));
    auto rep = check_hypothesis(g, cls);
    std::array<int, 3> sigma{3, 1, 2};  // class c -> sigma[c-1]
    auto cls2 = cls.relabeled(g, sigma);
    auto rep2 = check_hypothesis(g, cls2);
    // (i,j,k) satisfies for cls iff (sigma i, sigma j, sigma k) does for cls2
    auto canon = [](std::vector<std::array<int, 3>> v) {
      std::sort(v.begin(), v.end());
      return v;
    };
    std::vector<std::array<int, 3>> mapped;
    for (const auto& p : rep.satisfying)
      mapped.push_back({sigma[p[0] - 1], sigma[p[1] - 1], sigma[p[2] - 1]});
    CHECK(canon(mapped) == canon(rep2.satisfying));
    CHECK(rep.failures.size() == rep2.failures.size());
  }
}
