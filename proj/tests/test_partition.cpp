#include <algorithm>
#include <set>

#include "doctest.h"

#include "barnette/oracle.hpp"
#include "barnette/partition.hpp"
#include "barnette/verify.hpp"

using namespace barnette;

namespace {

std::vector<int> sorted(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  return v;
}

bool contains(const std::vector<int>& xs, int v) {
  return std::find(xs.begin(), xs.end(), v) != xs.end();
}

// classification relabeled so the classes of the given witness vertices play
// roles 1, 2, 3 (the witnesses must cover all three classes)
VertexClassification canon_labels(const PlaneTriangulation& g, std::array<int, 3> witnesses) {
  auto col = three_color(g);
  std::array<int, 3> relabel{};
  for (int r = 0; r < 3; ++r) relabel[col.color[witnesses[r]] - 1] = r + 1;
  return classify(g, col).relabeled(g, relabel);
}

}  // namespace

TEST_CASE("extend_seed on the octahedron honors the seeds deterministically") {
  auto g = catalog("octahedron").graph;
  auto cls = classify(g, three_color(g));
  SeedSets seeds;
  seeds.X = {0};
  seeds.Y = {2};
  auto p = extend_seed(g, cls, seeds);
  validate_tree_partition(g, p);
  CHECK(contains(p.S, 0));
  CHECK(contains(p.T, 2));
  auto p2 = extend_seed(g, cls, seeds);
  CHECK(p.S == p2.S);  // deterministic
  CHECK(p.S == std::vector<int>{0, 1, 3});
  CHECK(p.T == std::vector<int>{2, 4, 5});
}

TEST_CASE("extend_seed rejects overlapping seeds") {
  auto g = catalog("octahedron").graph;
  auto cls = classify(g, three_color(g));
  SeedSets seeds;
  seeds.X = {0, 2};
  seeds.Y = {2};
  CHECK_THROWS_AS(extend_seed(g, cls, seeds), Error);
}

TEST_CASE("corollary_partition") {
  SUBCASE("degenerate empty seeds on the octahedron") {
    auto g = catalog("octahedron").graph;
    auto cls = classify(g, three_color(g));
    auto p = corollary_partition(g, cls, {}, {});
    validate_tree_partition(g, p);
  }
  SUBCASE("oct+1 with split big classes") {
    auto g = catalog("oct+1").graph;
    auto cls = classify(g, three_color(g));
    // one big vertex per class: B1 -> X, B2 -> Y, B3 -> X
    std::vector<int> X = cls.big[0], Y = cls.big[1];
    X.insert(X.end(), cls.big[2].begin(), cls.big[2].end());
    auto p = corollary_partition(g, cls, X, Y);
    validate_tree_partition(g, p);
    for (int v : X) CHECK(contains(p.S, v));
    for (int v : Y) CHECK(contains(p.T, v));
  }
  SUBCASE("overlapping seeds rejected") {
    auto g = catalog("oct+1").graph;
    auto cls = classify(g, three_color(g));
    CHECK_THROWS_AS(corollary_partition(g, cls, {0}, {0}), Error);
  }
  SUBCASE("small vertices rejected") {
    auto g = catalog("oct+1").graph;
    auto cls = classify(g, three_color(g));
    CHECK_THROWS_AS(corollary_partition(g, cls, {6}, {}), Error);
  }
}

TEST_CASE("seeds_edge_avoid reproduces the all-big set formulas") {
  // ladder11 big classes: {2,3,6} and the singletons {0}, {1}; vertices 2,3
  // are the only same-class big pair with big common neighbours
  auto g = catalog("ladder11").graph;

  SUBCASE("a,c in B1, b in B2: X = (B1 u B2) minus c, Y = B3 u {c}") {
    auto cls = canon_labels(g, {2, 1, 0});  // class(2)->1, class(1)->2, class(0)->3
    auto s = seeds_edge_avoid(g, cls, {2, 1, 3});
    CHECK(s.case_label == "avoid(alpha)");
    CHECK(sorted(s.X) == std::vector<int>{1, 2, 6});
    CHECK(sorted(s.Y) == std::vector<int>{0, 3});
    REQUIRE(s.v.has_value());
    CHECK(*s.v == 3);
  }
  SUBCASE("a,c in B2, b in B3 (gamma): edge ab lands in Y") {
    auto cls = canon_labels(g, {0, 2, 1});  // class(2)->2, class(1)->3
    auto s = seeds_edge_avoid(g, cls, {2, 1, 3});
    CHECK(s.case_label == "avoid(gamma)");
    // X = B1 u B2 \ {a} in role labels = {0} u {2,3,6} \ {2}
    CHECK(sorted(s.X) == std::vector<int>{0, 3, 6});
    CHECK(sorted(s.Y) == std::vector<int>{1, 2});
  }
}

TEST_CASE("seeds_path_through reproduces the all-big set formulas") {
  auto g = catalog("ladder11").graph;
  SUBCASE("a,c in B1, b in B3 (alpha): X = B1 u B3, Y = B2") {
    auto cls = canon_labels(g, {2, 1, 0});  // a,c class -> 1, b=0 class -> 3
    auto s = seeds_path_through(g, cls, {2, 0, 3});
    CHECK(s.case_label == "thru(alpha)");
    CHECK(sorted(s.X) == std::vector<int>{0, 2, 3, 6});
    CHECK(sorted(s.Y) == std::vector<int>{1});
  }
  SUBCASE("a,c in B3, b in B2 (gamma): X = B1 u B2 minus b, Y = B3 u {b}") {
    auto cls = canon_labels(g, {0, 1, 2});  // class(0)->1, class(1)->2, class(2)->3
    auto s = seeds_path_through(g, cls, {2, 1, 3});
    CHECK(s.case_label == "thru(gamma)");
    CHECK(sorted(s.X) == std::vector<int>{0});
    CHECK(sorted(s.Y) == std::vector<int>{1, 2, 3, 6});
    REQUIRE(s.v.has_value());
    CHECK(*s.v == 1);
  }
}

TEST_CASE("seed outputs satisfy the audited conditions and extend monotonically") {
  auto g = catalog("tetrakis").graph;
  auto rec = catalog("tetrakis");
  auto perm = rec.hypothesis.satisfying.front();
  std::array<int, 3> relabel{};
  for (int c = 1; c <= 3; ++c)
    for (int r = 0; r < 3; ++r)
      if (perm[r] == c) relabel[c - 1] = r + 1;
  auto cls = classify(g, three_color(g)).relabeled(g, relabel);
  auto col = three_color(g);
  int audited = 0;
  for (const auto& abc : all_paths(g)) {
    if (col.color[abc.a] != col.color[abc.c]) continue;
    for (int mode = 0; mode < 2; ++mode) {
      SeedSets s = mode ? seeds_path_through(g, cls, abc) : seeds_edge_avoid(g, cls, abc);
      check_seed_conditions(g, cls, s);
      auto [i, j, k] = s.perm;
      auto p = extend_seed(g, cls, s, {i, k, j});
      validate_tree_partition(g, p);
      for (int v : s.X) CHECK(contains(p.S, v));
      for (int v : s.Y) CHECK(contains(p.T, v));
      ++audited;
    }
  }
  CHECK(audited == 240);
}

TEST_CASE("partition_through on the octahedron") {
  auto g = catalog("octahedron").graph;
  auto p = partition_through(g, {0, 2, 1});
  CHECK(p.S == std::vector<int>{0, 1, 2});
  CHECK(p.T == std::vector<int>{3, 4, 5});
  CHECK(verify_property_2(g, {0, 2, 1}, p));
}

TEST_CASE("partition_through rejects mixed-color ends") {
  auto g = catalog("octahedron").graph;
  // 0 and 2 are adjacent, hence differently colored
  CHECK_THROWS_AS(partition_through(g, {0, 4, 2}), Error);
  try {
    partition_through(g, {0, 4, 2});
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotSameColor);
  }
}

TEST_CASE("drivers reject non-paths") {
  auto g = catalog("octahedron").graph;
  CHECK_THROWS_AS(partition_edge_avoid(g, {0, 1, 2}), Error);  // 0-1 not an edge
  try {
    partition_edge_avoid(g, {0, 1, 2});
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotAPath);
  }
}

TEST_CASE("drivers report HypothesisViolated on oct+2") {
  auto g = catalog("oct+2").graph;
  try {
    partition_edge_avoid(g, {0, 2, 4});
    FAIL("expected HypothesisViolated");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::HypothesisViolated);
  }
}

TEST_CASE("recursion and gluing on instances with separating triangles") {
  SUBCASE("oct+nested, edge within the inner region, avoided vertex outside") {
    auto g = catalog("oct+nested").graph;
    std::vector<std::string> trace;
    auto p = partition_edge_avoid(g, {9, 0, 5}, &trace);
    validate_tree_partition(g, p);
    CHECK(verify_property_1(g, {9, 0, 5}, p));
    bool split = false;
    for (const auto& t : trace)
      if (t.find("split") != std::string::npos) split = true;
    CHECK(split);
  }
  SUBCASE("oct+1, every same-colored through-path crosses correctly") {
    auto g = catalog("oct+1").graph;
    auto col = three_color(g);
    for (const auto& abc : all_paths(g)) {
      if (col.color[abc.a] != col.color[abc.c]) continue;
      auto p = partition_through(g, abc);
      CHECK(verify_property_2(g, abc, p));
    }
  }
}

TEST_CASE("base_case_partition") {
  auto g = catalog("octahedron").graph;
  SUBCASE("unconstrained finds a partition") {
    auto p = base_case_partition(g);
    validate_tree_partition(g, p);
  }
  SUBCASE("constrained co-location") {
    auto p = base_case_partition(g, {{0, 2}, {3}});
    validate_tree_partition(g, p);
    CHECK(contains(p.S, 0));
    CHECK(contains(p.S, 2));
    CHECK(contains(p.T, 3));
  }
  SUBCASE("a face triangle cannot sit inside a tree") {
    CHECK_THROWS_AS(base_case_partition(g, {{0, 2, 4}, {}}), Error);
    try {
      base_case_partition(g, {{0, 2, 4}, {}});
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::NoPartitionExists);
    }
  }
}

TEST_CASE("partition cut size is always 2n-4") {
  for (const char* name : {"octahedron", "oct+1", "oct+nested", "ladder11"}) {
    auto g = catalog(name).graph;
    auto col = three_color(g);
    PathABC abc{-1, -1, -1};
    for (const auto& cand : all_paths(g))
      if (col.color[cand.a] == col.color[cand.c]) {
        abc = cand;
        break;
      }
    REQUIRE(abc.a >= 0);
    auto p = partition_through(g, abc);
    std::vector<uint8_t> in_s(g.vertex_count(), 0);
    for (int v : p.S) in_s[v] = 1;
    int cut = 0;
    for (int v = 0; v < g.vertex_count(); ++v)
      for (int u : g.neighbors(v))
        if (v < u && in_s[v] != in_s[u]) ++cut;
    CHECK(cut == 2 * g.vertex_count() - 4);
    CHECK(static_cast<int>(p.S.size()) + static_cast<int>(p.T.size()) == g.vertex_count());
  }
}

TEST_CASE("ladder10 drives the chain fallback and still satisfies both properties") {
  auto rec = catalog("ladder10");
  const auto& g = rec.graph;
  REQUIRE(is_four_connected(g));
  auto r = verify_sweep(rec, true, 1);
  CHECK(r.paths_checked == 192);
  CHECK(r.property_failures == 0);
  CHECK(r.oracle_disagreements == 0);
  CHECK(r.seed_audit_failures == 0);
  // the path whose middle vertex ends one chain and helps the other needs
  // the fallback constructor
  auto perm = rec.hypothesis.satisfying.front();
  std::array<int, 3> relabel{};
  for (int c = 1; c <= 3; ++c)
    for (int x = 0; x < 3; ++x)
      if (perm[x] == c) relabel[c - 1] = x + 1;
  auto cls = classify(g, three_color(g)).relabeled(g, relabel);
  auto s = seeds_path_through(g, cls, {4, 0, 9});
  CHECK(s.case_label == "thru(chain-fallback)");
  check_seed_conditions(g, cls, s);
}
