#pragma once

#include <array>
#include <optional>
#include <vector>

#include "barnette/plane.hpp"

namespace barnette {

/// Proper 3-coloring of an even triangulation, labels in {1,2,3}.
/// Unique up to permuting the labels; three_color fixes the labeling by
/// seeding face 0 with (1,2,3) in trace order.
struct Coloring {
  std::vector<int> color;  // per vertex, 1-based

  Coloring relabeled(const std::array<int, 3>& perm) const;  // label i -> perm[i-1]
};

Coloring three_color(const PlaneTriangulation& g);

/// Big/small split of the color classes: big = degree >= 6, small = degree 4.
struct VertexClassification {
  std::vector<int> color;                 // 1-based labels
  std::array<std::vector<int>, 3> big;    // B1,B2,B3 (ascending ids)
  std::array<std::vector<int>, 3> small;  // S1,S2,S3

  bool is_big(const PlaneTriangulation& g, int v) const { return g.degree(v) >= 6; }
  int big_count() const {
    return static_cast<int>(big[0].size() + big[1].size() + big[2].size());
  }
  VertexClassification relabeled(const PlaneTriangulation& g, const std::array<int, 3>& perm) const;
};

VertexClassification classify(const PlaneTriangulation& g, const Coloring& c);

/// Acyclicity hypothesis over all 6 label permutations (i,j,k): a permutation
/// satisfies iff G[B_i u B_j] and G[B_i u B_k] are both acyclic.
struct HypothesisReport {
  std::vector<std::array<int, 3>> satisfying;  // permutations (i,j,k)
  struct Failure {
    std::array<int, 2> pair;   // {i,j} with a cycle in G[B_i u B_j]
    std::vector<int> cycle;    // shortest witness cycle
  };
  std::vector<Failure> failures;

  bool holds() const { return !satisfying.empty(); }
};

HypothesisReport check_hypothesis(const PlaneTriangulation& g, const VertexClassification& cls);

}  // namespace barnette
