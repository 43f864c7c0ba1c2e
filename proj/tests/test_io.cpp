#include <sstream>

#include "doctest.h"

#include "barnette/io.hpp"
#include "barnette/oracle.hpp"

using namespace barnette;

TEST_CASE("rot1 round trip with comments") {
  auto g = catalog("oct+1").graph;
  std::ostringstream os;
  os << "# a comment\n";
  write_rot1(g, os);
  std::istringstream is(os.str());
  auto g2 = read_rot1(is);
  CHECK(g.rotations() == g2.rotations());
}

TEST_CASE("rot1 rejects malformed input") {
  std::istringstream is("2\n0: 1\n");  // missing vertex line
  CHECK_THROWS_AS(read_rot1(is), Error);
}

TEST_CASE("planar_code round trip") {
  auto g = catalog("octahedron").graph;
  std::ostringstream os(std::ios::binary);
  write_planar_code_one(g, os);
  std::istringstream is(os.str(), std::ios::binary);
  auto entries = read_planar_code(is);
  REQUIRE(entries.size() == 1);
  REQUIRE(entries[0].record.has_value());
  CHECK(entries[0].record->graph.rotations() == g.rotations());
}

TEST_CASE("planar_code stream with two graphs") {
  auto g1 = catalog("octahedron").graph;
  auto g2 = catalog("oct+1").graph;
  std::ostringstream os(std::ios::binary);
  write_planar_code({&g1, &g2}, os);
  std::istringstream is(os.str(), std::ios::binary);
  auto entries = read_planar_code(is);
  REQUIRE(entries.size() == 2);
  CHECK(entries[0].record->graph.vertex_count() == 6);
  CHECK(entries[1].record->graph.vertex_count() == 9);
}

TEST_CASE("planar_code without header is accepted") {
  auto g = catalog("octahedron").graph;
  std::ostringstream os(std::ios::binary);
  write_planar_code_one(g, os, /*header=*/false);
  std::istringstream is(os.str(), std::ios::binary);
  auto entries = read_planar_code(is);
  REQUIRE(entries.size() == 1);
  CHECK(entries[0].record.has_value());
}

TEST_CASE("truncated planar_code raises MalformedStream") {
  auto g = catalog("octahedron").graph;
  std::ostringstream os(std::ios::binary);
  write_planar_code_one(g, os);
  std::string data = os.str();
  data.resize(data.size() - 3);
  std::istringstream is(data, std::ios::binary);
  CHECK_THROWS_AS(read_planar_code(is), Error);
  try {
    std::istringstream is2(data, std::ios::binary);
    read_planar_code(is2);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::MalformedStream);
  }
}

TEST_CASE("per-graph validation failure does not abort the stream") {
  // K4: structurally a fine planar code, but odd degrees
  std::string data;
  data.push_back(4);
  const int k4[4][3] = {{2, 3, 4}, {1, 4, 3}, {1, 2, 4}, {1, 3, 2}};
  for (auto& row : k4) {
    for (int x : row) data.push_back(static_cast<char>(x));
    data.push_back(0);
  }
  // followed by a valid octahedron
  auto g = catalog("octahedron").graph;
  std::ostringstream os(std::ios::binary);
  write_planar_code_one(g, os, false);
  data += os.str();

  std::istringstream is(data, std::ios::binary);
  auto entries = read_planar_code(is);
  REQUIRE(entries.size() == 2);
  CHECK_FALSE(entries[0].record.has_value());
  CHECK_FALSE(entries[0].error.empty());
  CHECK(entries[1].record.has_value());
}

TEST_CASE("hypothesis JSON shape") {
  auto rec = catalog("oct+2");
  auto s = hypothesis_json(rec.hypothesis);
  CHECK(s.find("\"satisfying\":[]") != std::string::npos);
  CHECK(s.find("\"pair\"") != std::string::npos);
  CHECK(s.find("\"cycle\"") != std::string::npos);
}
