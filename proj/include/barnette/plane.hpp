#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace barnette {

enum class ErrorKind {
  NotSimple,
  NotTriangulation,
  OddDegree,
  DisconnectedInput,
  NotSeparating,
  Ambiguous,
  NotSmall,
  PropagationConflict,
  PreconditionViolated,
  CaseExhausted,
  NotATree,
  HypothesisViolated,
  NotSameColor,
  NotAPath,
  NoPartitionExists,
  NotAPartition,
  NotHamiltonian,
  NotCofacial,
  OddDistance,
  NotAFace,
  UnknownName,
  BoundExceeded,
  MalformedStream,
};

const char* to_string(ErrorKind k);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what);
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] void fail(ErrorKind k, const std::string& msg);

/// Simple even plane triangulation stored as a rotation system.
///
/// The embedding is purely combinatorial: rotation[v] lists the neighbours
/// of v in clockwise order. Faces are traced with the next-after-predecessor
/// rule (the successor of the directed edge (u,v) is the neighbour following
/// u in v's rotation). Construction validates simplicity, evenness, face
/// sizes, connectivity and the Euler identities m = 3n-6, f = 2n-4; the
/// object is immutable afterwards.
class PlaneTriangulation {
 public:
  PlaneTriangulation() = default;  // empty; assign from from_rotation before use

  static PlaneTriangulation from_rotation(std::vector<std::vector<int>> rotation);

  int vertex_count() const { return n_; }
  int edge_count() const { return m_; }
  int face_count() const { return static_cast<int>(faces_.size()); }

  const std::vector<std::vector<int>>& rotations() const { return rot_; }
  const std::vector<int>& neighbors(int v) const { return rot_[v]; }
  const std::vector<std::array<int, 3>>& faces() const { return faces_; }

  int degree(int v) const { return static_cast<int>(rot_[v].size()); }
  bool has_edge(int u, int v) const { return adj_[static_cast<size_t>(u) * n_ + v] != 0; }

  /// Index of the face containing the directed edge (u,v), i.e. the face
  /// traced through that dart. Every directed edge lies in exactly one face.
  int face_of(int u, int v) const;

  /// Face index of the (unordered) triangle, or -1 if it is not a face.
  int face_index(int a, int b, int c) const;

  /// Position of u in v's rotation.
  int rotation_index(int v, int u) const;

 private:
  void derive_and_validate();

  int n_ = 0;
  int m_ = 0;
  std::vector<std::vector<int>> rot_;
  std::vector<std::array<int, 3>> faces_;
  std::vector<std::vector<int>> face_at_;  // face_at_[v][i]: face of dart (v, rot_[v][i])
  std::vector<uint8_t> adj_;
};

/// Induced 3-cycle whose removal disconnects the graph, together with the
/// two component vertex sets.
struct SeparatingTriangle {
  std::array<int, 3> cycle;
  std::vector<int> inside;   // component containing the smallest vertex not on the cycle... see note
  std::vector<int> outside;  // the other component
};

/// All separating triangles, by brute force over adjacent vertex triples.
/// Empty iff the triangulation is 4-connected (n >= 6).
std::vector<SeparatingTriangle> separating_triangles(const PlaneTriangulation& g);

bool is_four_connected(const PlaneTriangulation& g);

/// One side of a split: the sub-triangulation together with the map from its
/// vertex ids back to the ids of the parent graph.
struct SplitPiece {
  PlaneTriangulation graph;
  std::vector<int> to_parent;  // new id -> parent id
};

struct SplitResult {
  SplitPiece g1;  // parent minus the "inside" component (cycle kept)
  SplitPiece g2;  // parent minus the "outside" component (cycle kept)
};

SplitResult split_on_triangle(const PlaneTriangulation& g, const SeparatingTriangle& t);

/// True iff the subgraph induced on `vs` has no cycle.
bool induced_subgraph_acyclic(const PlaneTriangulation& g, const std::vector<int>& vs);
bool induced_subgraph_acyclic_mask(const PlaneTriangulation& g, const std::vector<uint8_t>& in_set);

/// Shortest cycle of the induced subgraph (BFS from every edge), or nullopt.
std::optional<std::vector<int>> induced_cycle_witness(const PlaneTriangulation& g,
                                                      const std::vector<int>& vs);

}  // namespace barnette
