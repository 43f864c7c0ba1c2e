#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "barnette/coloring.hpp"
#include "barnette/plane.hpp"

namespace barnette {

struct TreePartition;  // partition.hpp

/// Path a-b-c in the primal graph (edges ab and bc; a != c).
struct PathABC {
  int a, b, c;
};

/// Dual of the triangulation: one vertex per face, one edge per primal edge.
/// Cubic, bipartite, connected by construction.
struct DualGraph {
  int primal_n = 0;
  std::vector<std::array<int, 3>> adj;        // neighbours of each dual vertex (face)
  std::vector<int> side;                      // bipartition class 0/1
  std::vector<std::array<int, 2>> edge_faces; // dual edge -> its two faces (f1<f2)
  std::vector<std::array<int, 2>> edge_primal;// dual edge -> primal edge (u<v)

  int vertex_count() const { return static_cast<int>(adj.size()); }
  int edge_count() const { return static_cast<int>(edge_faces.size()); }
  /// Dual edge id of the primal edge {u,v}; -1 if no such edge.
  int dual_edge_of(int u, int v) const;
  bool cycle_has_edge(const std::vector<int>& order, int dual_edge) const;
};

DualGraph build_dual(const PlaneTriangulation& g);

/// Hamilton cycle of the dual as a cyclic face sequence, canonical form:
/// starts at the least face id, direction chosen lexicographically.
struct HamCycle {
  std::vector<int> order;
};

HamCycle canonical_cycle(std::vector<int> order);

/// The duals of the cut edges of a tree partition form a Hamilton cycle of
/// the dual graph; returns it in canonical form.
HamCycle partition_to_ham(const PlaneTriangulation& g, const TreePartition& p, const DualGraph& d);

/// Property (1): one side induces a tree containing edge ab and not c.
bool verify_property_1(const PlaneTriangulation& g, const PathABC& abc, const TreePartition& p);
/// Property (2): one side induces a tree containing both edges ab and bc.
bool verify_property_2(const PlaneTriangulation& g, const PathABC& abc, const TreePartition& p);

enum class HMode { plus_minus, minus_minus };

/// H+- / H-- check for two cofacial dual edges against a Hamilton cycle.
/// Dual edges are given as primal edges (u1,v1), (u2,v2); they are cofacial
/// iff the primal edges share an endpoint.
bool dual_h_check(const PlaneTriangulation& g, const DualGraph& d, std::array<int, 2> e1,
                  std::array<int, 2> e2, const HamCycle& h, HMode mode);

/// The primal path abc whose properties (1)/(2) correspond to the cofacial
/// dual pair: the common dual face is the shared primal vertex b.
PathABC primal_of_cofacial_pair(const PlaneTriangulation& g, const DualGraph& d,
                                std::array<int, 2> e1, std::array<int, 2> e2);

/// Arc distance of the two dual edges along their common dual face (the
/// rotation gap at the shared primal vertex); parity matches whether the
/// primal ends share a color class.
int cofacial_distance(const PlaneTriangulation& g, std::array<int, 2> e1, std::array<int, 2> e2);

std::string dot_primal(const PlaneTriangulation& g, const TreePartition* p);
std::string dot_dual(const DualGraph& d, const HamCycle* h);

}  // namespace barnette
