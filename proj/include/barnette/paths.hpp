#pragma once

#include <array>
#include <functional>
#include <optional>
#include <vector>

#include "barnette/coloring.hpp"
#include "barnette/plane.hpp"

namespace barnette {

/// Induced path with big endpoints and all-small interior. Such a path can
/// never be extended (appending past a big end would make it an interior
/// vertex), so every one of them is maximal.
struct InducedPath {
  std::vector<int> vertices;  // end, interior..., end

  int end_a() const { return vertices.front(); }
  int end_b() const { return vertices.back(); }
  std::vector<int> inner() const {
    return std::vector<int>(vertices.begin() + 1, vertices.end() - 1);
  }
  bool contains(int v) const;
};

/// How to pick P_s when a small vertex has four big neighbours and both
/// length-2 candidates are maximal.
struct PathTiebreak {
  enum class Mode { none, lex_least, prefer_containing, prefer_avoiding };
  Mode mode = Mode::lex_least;
  int pivot = -1;  // for prefer_containing / prefer_avoiding

  static PathTiebreak lex() { return {Mode::lex_least, -1}; }
  static PathTiebreak containing(int v) { return {Mode::prefer_containing, v}; }
  static PathTiebreak avoiding(int v) { return {Mode::prefer_avoiding, v}; }
  static PathTiebreak none_supplied() { return {Mode::none, -1}; }
};

/// All induced big-ended all-small-interior paths through s, maximum length
/// only. Building block for max_induced_small_path and for the seed-condition
/// audit.
std::vector<InducedPath> maximum_induced_paths_through(const PlaneTriangulation& g,
                                                       const VertexClassification& cls, int s);

/// The path P_s through a small vertex s. Unique on 4-connected inputs unless
/// s has four big neighbours, in which case the tiebreak selects one of the
/// two length-2 candidates. Returns nullopt when no such path exists (then s
/// sits in an octahedral configuration).
std::optional<InducedPath> max_induced_small_path(const PlaneTriangulation& g,
                                                  const VertexClassification& cls, int s,
                                                  PathTiebreak tiebreak = PathTiebreak::lex());

/// The two big vertices adjacent to every vertex of the path (the chain
/// helpers); nullopt when fewer than two exist.
std::optional<std::array<int, 2>> path_helpers(const PlaneTriangulation& g,
                                               const VertexClassification& cls,
                                               const InducedPath& p);

/// Octahedral configuration: a 3-cycle of big vertices bounding three mutually
/// adjacent small vertices, each adjacent to exactly two boundary vertices.
struct OctConfig {
  std::array<int, 3> boundary;
  std::array<int, 3> inner;  // inner[i] is adjacent to boundary[i], boundary[(i+1)%3]
};

std::optional<OctConfig> octahedral_config(const PlaneTriangulation& g,
                                           const VertexClassification& cls, int v);

/// Every induced path with big ends and all-small interior (used by the
/// condition-(c) audit of the seed sets). Each path is listed once, with
/// its lexicographically smaller end first.
std::vector<InducedPath> all_big_ended_small_paths(const PlaneTriangulation& g,
                                                   const VertexClassification& cls);

}  // namespace barnette
