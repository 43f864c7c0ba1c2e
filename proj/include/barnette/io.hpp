#pragma once

#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

#include "barnette/coloring.hpp"
#include "barnette/oracle.hpp"
#include "barnette/plane.hpp"

namespace barnette {

/// ROT1 text format: line `n`, then per vertex `id: c1 c2 ... ck` (rotation
/// order, 0-based ids); `#` starts a comment.
PlaneTriangulation read_rot1(std::istream& in);
void write_rot1(const PlaneTriangulation& g, std::ostream& out);

/// planar_code: optional ">>planar_code<<" header, then per graph one byte n
/// followed by each vertex's neighbor list (1-based bytes) terminated by 0.
/// Only byte-sized headers are supported (n <= 255).
struct PlanarCodeEntry {
  int index = 0;                       // position in the stream
  std::optional<InstanceRecord> record;  // set when the graph validated
  std::string error;                     // set otherwise
};

std::vector<PlanarCodeEntry> read_planar_code(std::istream& in, const std::string& origin = "stream");
void write_planar_code(const std::vector<const PlaneTriangulation*>& graphs, std::ostream& out);
void write_planar_code_one(const PlaneTriangulation& g, std::ostream& out, bool header = true);

/// JSON emitters (stable key order, no volatile fields).
std::string hypothesis_json(const HypothesisReport& rep);

}  // namespace barnette
