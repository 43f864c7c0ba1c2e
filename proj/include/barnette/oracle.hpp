#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "barnette/coloring.hpp"
#include "barnette/dual.hpp"
#include "barnette/partition.hpp"
#include "barnette/plane.hpp"

namespace barnette {

struct InstanceRecord {
  std::string name;
  PlaneTriangulation graph;
  std::string provenance;  // "catalog", "expansion(seed=..,steps=..)", "file:..."
  HypothesisReport hypothesis;
};

InstanceRecord make_record(std::string name, PlaneTriangulation g, std::string provenance);

/// Named instances. Includes the octahedron and its expansions, two
/// 4-connected instances with at least three big vertices (tetrakis,
/// ladder11), and a seeded expansion instance failing the acyclicity
/// hypothesis under all six permutations.
InstanceRecord catalog(const std::string& name);
std::vector<std::string> catalog_names();

/// Oracle size caps; the environment variable BARNETTE_ORACLE_BOUND
/// overrides both.
int oracle_partition_bound();  // default 16 primal vertices
int oracle_ham_bound();        // default 26 dual vertices

/// Every 2-partition with both sides inducing trees, honoring the constraint.
/// Unconstrained enumeration fixes vertex 0 into S (S/T swap dedup).
std::vector<TreePartition> brute_partitions(const PlaneTriangulation& g,
                                            const PartitionConstraint& constraint = {},
                                            std::optional<int> bound = std::nullopt);

/// All Hamilton cycles of the dual (canonical forms, deduplicated), optionally
/// constrained to pass through one dual edge / avoid others. Edges are given
/// as primal edges.
std::vector<HamCycle> brute_ham(const DualGraph& d,
                                std::optional<std::array<int, 2>> through = std::nullopt,
                                const std::vector<std::array<int, 2>>& avoiding = {},
                                std::optional<int> bound = std::nullopt);

/// Inserts a triangle of three new degree-4 vertices into the face with the
/// given index; every face vertex gains degree 2, so evenness is preserved.
PlaneTriangulation expand_octahedral(const PlaneTriangulation& g, int face_index);

/// Octahedron plus `steps` expansions at faces chosen by a seeded mt19937
/// (index = gen() % face_count, so results are reproducible everywhere).
InstanceRecord random_instance(uint64_t seed, int steps);

}  // namespace barnette
