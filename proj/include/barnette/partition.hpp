#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "barnette/coloring.hpp"
#include "barnette/dual.hpp"
#include "barnette/paths.hpp"
#include "barnette/plane.hpp"

namespace barnette {

/// Disjoint seed sets produced by the case tables. `perm` is the permutation
/// (i,j,k) of condition (b): B_i u B_j \ {v} in X and B_k u {v} in Y (first
/// form, `v` set) or B_i u B_j in X, B_k in Y (second form, `v` unset).
struct SeedSets {
  std::vector<int> X, Y;            // ascending vertex ids
  std::optional<int> v;             // exceptional big vertex
  std::array<int, 3> perm{1, 2, 3};
  std::string case_label;
};

/// Vertex partition into two induced trees.
struct TreePartition {
  std::vector<int> S, T;  // ascending vertex ids
};

/// Pin vertices to sides of the partition search / extension.
struct PartitionConstraint {
  std::vector<int> require_S;
  std::vector<int> require_T;
};

/// Validates a tree partition: S,T partition V, nonempty, both sides induce
/// trees. Throws NotAPartition with a reason otherwise.
void validate_tree_partition(const PlaneTriangulation& g, const TreePartition& p);
bool is_tree_partition(const PlaneTriangulation& g, const TreePartition& p);

/// Mechanical audit of the seed conditions:
///  - X,Y disjoint, G[X] and G[Y] acyclic
///  - condition (b) under seeds.perm
///  - condition (c): interior of every induced big-ended all-small-interior
///    path is contained in or disjoint from X u Y.
/// Throws PreconditionViolated with a reason on failure.
void check_seed_conditions(const PlaneTriangulation& g, const VertexClassification& cls,
                           const SeedSets& seeds);

/// Labels under which the extension runs: condition (a) reads
/// B_{labels[0]} in X, B_{labels[1]} in Y, B_{labels[2]} in X u Y.
using ExtendLabels = std::array<int, 3>;

/// Grows disjoint acyclic seeds into a full two-tree partition (the
/// case-(i)/(ii) loop); X ends up inside S and Y inside T. Inputs with at
/// most two big vertices fall back to the exhaustive base case.
TreePartition extend_seed(const PlaneTriangulation& g, const VertexClassification& cls,
                          const SeedSets& seeds, ExtendLabels labels = {1, 2, 3},
                          std::vector<std::string>* trace = nullptr);

/// All-big seeds variant: condition (c) is vacuous.
TreePartition corollary_partition(const PlaneTriangulation& g, const VertexClassification& cls,
                                  const std::vector<int>& X, const std::vector<int>& Y,
                                  std::vector<std::string>* trace = nullptr);

/// Case table for "contains edge ab, avoids c" seeds (4-connected, >= 3 big,
/// both acyclicity hypotheses, a and c same color).
SeedSets seeds_edge_avoid(const PlaneTriangulation& g, const VertexClassification& cls,
                          const PathABC& abc);

/// Case table for "contains path abc" seeds (same preconditions).
SeedSets seeds_path_through(const PlaneTriangulation& g, const VertexClassification& cls,
                            const PathABC& abc);

/// Full driver for property (1): partition with edge ab inside S and c in T.
TreePartition partition_edge_avoid(const PlaneTriangulation& g, const PathABC& abc,
                                   std::vector<std::string>* trace = nullptr);

/// Full driver for property (2): partition with the path abc inside S.
TreePartition partition_through(const PlaneTriangulation& g, const PathABC& abc,
                                std::vector<std::string>* trace = nullptr);

/// Exhaustive search over 2-partitions honoring the constraint; first hit in
/// ascending assignment order. Throws NoPartitionExists when the search space
/// is empty.
TreePartition base_case_partition(const PlaneTriangulation& g,
                                  const PartitionConstraint& constraint = {});

}  // namespace barnette
