#include <algorithm>
#include <set>

#include "doctest.h"

#include "barnette/dual.hpp"
#include "barnette/oracle.hpp"
#include "barnette/partition.hpp"
#include "barnette/verify.hpp"

using namespace barnette;

TEST_CASE("dual of the octahedron is the cube") {
  auto g = catalog("octahedron").graph;
  auto d = build_dual(g);
  CHECK(d.vertex_count() == 8);
  CHECK(d.edge_count() == 12);
  for (const auto& nb : d.adj) {
    std::set<int> s(nb.begin(), nb.end());
    CHECK(s.size() == 3);
  }
  // bipartite with classes of size 4
  int ones = 0;
  for (int f = 0; f < 8; ++f) {
    ones += d.side[f];
    for (int o : d.adj[f]) CHECK(d.side[o] != d.side[f]);
  }
  CHECK(ones == 4);
}

TEST_CASE("dual vertex count equals face count on every catalog graph") {
  for (const auto& name : catalog_names()) {
    auto g = catalog(name).graph;
    auto d = build_dual(g);
    CHECK(d.vertex_count() == g.face_count());
    CHECK(d.vertex_count() == 2 * g.vertex_count() - 4);
    CHECK(d.edge_count() == g.edge_count());
    for (int f = 0; f < d.vertex_count(); ++f)
      for (int o : d.adj[f]) CHECK(d.side[o] != d.side[f]);
  }
}

TEST_CASE("dual bipartition matches the orientation of the face color cycle") {
  for (const char* name : {"octahedron", "oct+1", "tetrakis", "ladder11"}) {
    auto g = catalog(name).graph;
    auto col = three_color(g);
    auto d = build_dual(g);
    // parity of the color cycle read in trace order: (1,2,3) up to rotation
    // is even, (1,3,2) odd
    std::vector<int> parity(g.face_count());
    for (int f = 0; f < g.face_count(); ++f) {
      auto [x, y, z] = g.faces()[f];
      int cx = col.color[x], cy = col.color[y];
      parity[f] = (cy == cx % 3 + 1) ? 0 : 1;
    }
    bool matches = true, matches_swapped = true;
    for (int f = 0; f < g.face_count(); ++f) {
      if (parity[f] != d.side[f]) matches = false;
      if (parity[f] == d.side[f]) matches_swapped = false;
    }
    CHECK((matches || matches_swapped));
  }
}

TEST_CASE("partition_to_ham turns the octahedron partition into an 8-cycle") {
  auto g = catalog("octahedron").graph;
  auto d = build_dual(g);
  TreePartition p{{0, 1, 2}, {3, 4, 5}};
  auto h = partition_to_ham(g, p, d);
  CHECK(h.order.size() == 8);
  std::set<int> uniq(h.order.begin(), h.order.end());
  CHECK(uniq.size() == 8);
  for (size_t i = 0; i < h.order.size(); ++i) {
    int x = h.order[i], y = h.order[(i + 1) % h.order.size()];
    bool adj = false;
    for (int o : d.adj[x])
      if (o == y) adj = true;
    CHECK(adj);
  }
  // canonical form starts at face 0
  CHECK(h.order.front() == 0);
}

TEST_CASE("partition_to_ham rejects non-partitions") {
  auto g = catalog("octahedron").graph;
  auto d = build_dual(g);
  TreePartition bad{{0, 2, 4}, {1, 3, 5}};  // S induces a triangle
  CHECK_THROWS_AS(partition_to_ham(g, bad, d), Error);
}

TEST_CASE("oct+1 partitions map to 14-cycles") {
  auto g = catalog("oct+1").graph;
  auto d = build_dual(g);
  auto col = three_color(g);
  for (const auto& abc : all_paths(g)) {
    if (col.color[abc.a] != col.color[abc.c]) continue;
    auto p = partition_through(g, abc);
    auto h = partition_to_ham(g, p, d);
    CHECK(h.order.size() == 14);
    break;
  }
}

TEST_CASE("verify_property_1 and _2 containment semantics") {
  auto g = catalog("octahedron").graph;
  TreePartition p{{0, 1, 2}, {3, 4, 5}};
  CHECK(verify_property_2(g, {0, 2, 1}, p));
  CHECK(verify_property_1(g, {2, 0, 3}, p));
  CHECK_FALSE(verify_property_2(g, {4, 3, 1}, p));  // straddles the cut
  CHECK_FALSE(verify_property_1(g, {0, 2, 1}, p));  // c on the same side
}

TEST_CASE("dual_h_check modes and errors") {
  auto g = catalog("octahedron").graph;
  auto d = build_dual(g);
  TreePartition p{{0, 1, 2}, {3, 4, 5}};
  auto h = partition_to_ham(g, p, d);

  SUBCASE("plus_minus is exact edge membership") {
    // path 2-0-3: edge 2-0 inside S, 0-3 crosses: cycle avoids (20)*, uses (03)*
    CHECK(dual_h_check(g, d, {2, 0}, {0, 3}, h, HMode::plus_minus));
    CHECK(d.cycle_has_edge(h.order, d.dual_edge_of(0, 3)));
    CHECK_FALSE(d.cycle_has_edge(h.order, d.dual_edge_of(2, 0)));
  }
  SUBCASE("identical edges are rejected") {
    CHECK_THROWS_AS(dual_h_check(g, d, {0, 2}, {0, 2}, h, HMode::plus_minus), Error);
  }
  SUBCASE("non-cofacial pairs are rejected") {
    // edges 0-2 and 1-3 share no endpoint
    CHECK_THROWS_AS(dual_h_check(g, d, {0, 2}, {1, 3}, h, HMode::plus_minus), Error);
    try {
      dual_h_check(g, d, {0, 2}, {1, 3}, h, HMode::plus_minus);
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::NotCofacial);
    }
  }
  SUBCASE("odd-distance pairs are rejected for minus_minus") {
    // edges 0-2, 2-4 are consecutive in 2's rotation: distance 1
    CHECK(cofacial_distance(g, {0, 2}, {2, 4}) == 1);
    CHECK_THROWS_AS(dual_h_check(g, d, {0, 2}, {2, 4}, h, HMode::minus_minus), Error);
    try {
      dual_h_check(g, d, {0, 2}, {2, 4}, h, HMode::minus_minus);
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::OddDistance);
    }
  }
}

TEST_CASE("primal_of_cofacial_pair: round trip and distance parity") {
  for (const char* name : {"octahedron", "oct+1", "ladder11"}) {
    auto g = catalog(name).graph;
    auto d = build_dual(g);
    auto col = three_color(g);
    for (const auto& abc : all_paths(g)) {
      std::array<int, 2> e1{abc.a, abc.b}, e2{abc.b, abc.c};
      PathABC back = primal_of_cofacial_pair(g, d, e1, e2);
      CHECK(back.b == abc.b);
      CHECK(std::min(back.a, back.c) == std::min(abc.a, abc.c));
      CHECK(std::max(back.a, back.c) == std::max(abc.a, abc.c));
      bool same_color = col.color[abc.a] == col.color[abc.c];
      CHECK((cofacial_distance(g, e1, e2) % 2 == 0) == same_color);
    }
  }
}

TEST_CASE("DOT emitters produce well-formed text") {
  auto g = catalog("octahedron").graph;
  auto d = build_dual(g);
  TreePartition p{{0, 1, 2}, {3, 4, 5}};
  auto h = partition_to_ham(g, p, d);
  auto s1 = dot_primal(g, &p);
  auto s2 = dot_dual(d, &h);
  CHECK(s1.find("graph primal {") == 0);
  CHECK(s2.find("graph dual {") == 0);
  CHECK(s1.find("--") != std::string::npos);
  CHECK(s2.find("color=red") != std::string::npos);
}
