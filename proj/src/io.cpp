#include "barnette/io.hpp"

#include <istream>
#include <ostream>
#include <sstream>

#include "json.hpp"

namespace barnette {

PlaneTriangulation read_rot1(std::istream& in) {
  std::vector<std::string> lines;
  std::string raw;
  while (std::getline(in, raw)) {
    auto hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    std::istringstream probe(raw);
    std::string tok;
    if (probe >> tok) lines.push_back(raw);
  }
  if (lines.empty()) fail(ErrorKind::MalformedStream, "empty rot1 input");
  int n = -1;
  {
    std::istringstream head(lines[0]);
    if (!(head >> n) || n <= 0) fail(ErrorKind::MalformedStream, "bad vertex count line");
  }
  if (static_cast<int>(lines.size()) != n + 1)
    fail(ErrorKind::MalformedStream, "expected " + std::to_string(n) + " vertex lines");
  std::vector<std::vector<int>> rot(n);
  std::vector<uint8_t> seen(n, 0);
  for (int i = 1; i <= n; ++i) {
    std::istringstream ls(lines[i]);
    std::string idtok;
    ls >> idtok;
    if (idtok.empty() || idtok.back() != ':') fail(ErrorKind::MalformedStream, "vertex line missing ':'");
    int id = std::atoi(idtok.c_str());
    if (id < 0 || id >= n || seen[id]) fail(ErrorKind::MalformedStream, "bad vertex id " + idtok);
    seen[id] = 1;
    int u;
    while (ls >> u) rot[id].push_back(u);
  }
  return PlaneTriangulation::from_rotation(std::move(rot));
}

void write_rot1(const PlaneTriangulation& g, std::ostream& out) {
  out << g.vertex_count() << "\n";
  for (int v = 0; v < g.vertex_count(); ++v) {
    out << v << ":";
    for (int u : g.neighbors(v)) out << " " << u;
    out << "\n";
  }
}

static const char kPlanarCodeHeader[] = ">>planar_code<<";

std::vector<PlanarCodeEntry> read_planar_code(std::istream& in, const std::string& origin) {
  std::string data((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  size_t pos = 0;
  if (data.size() >= 15 && data.compare(0, 15, kPlanarCodeHeader) == 0) pos = 15;

  std::vector<PlanarCodeEntry> out;
  int index = 0;
  while (pos < data.size()) {
    PlanarCodeEntry entry;
    entry.index = index++;
    int n = static_cast<uint8_t>(data[pos++]);
    if (n == 0) {
      entry.error = "graph with zero vertices";
      out.push_back(std::move(entry));
      fail(ErrorKind::MalformedStream, "planar_code graph with zero vertices");
    }
    std::vector<std::vector<int>> rot(n);
    for (int v = 0; v < n; ++v) {
      for (;;) {
        if (pos >= data.size())
          fail(ErrorKind::MalformedStream, "truncated neighbor list in graph " + std::to_string(entry.index));
        int b = static_cast<uint8_t>(data[pos++]);
        if (b == 0) break;
        if (b > n)
          fail(ErrorKind::MalformedStream, "neighbor id " + std::to_string(b) + " out of range");
        rot[v].push_back(b - 1);
      }
    }
    try {
      auto g = PlaneTriangulation::from_rotation(std::move(rot));
      entry.record = make_record(origin + "#" + std::to_string(entry.index), std::move(g),
                                 "file:" + origin);
    } catch (const Error& e) {
      entry.error = e.what();
    }
    out.push_back(std::move(entry));
  }
  return out;
}

void write_planar_code_one(const PlaneTriangulation& g, std::ostream& out, bool header) {
  if (g.vertex_count() > 255) fail(ErrorKind::BoundExceeded, "planar_code writer limited to n <= 255");
  if (header) out.write(kPlanarCodeHeader, 15);
  out.put(static_cast<char>(g.vertex_count()));
  for (int v = 0; v < g.vertex_count(); ++v) {
    for (int u : g.neighbors(v)) out.put(static_cast<char>(u + 1));
    out.put(0);
  }
}

void write_planar_code(const std::vector<const PlaneTriangulation*>& graphs, std::ostream& out) {
  out.write(kPlanarCodeHeader, 15);
  for (const auto* g : graphs) write_planar_code_one(*g, out, false);
}

std::string hypothesis_json(const HypothesisReport& rep) {
  nlohmann::json j;
  j["satisfying"] = nlohmann::json::array();
  for (const auto& p : rep.satisfying) j["satisfying"].push_back({p[0], p[1], p[2]});
  j["failures"] = nlohmann::json::array();
  for (const auto& f : rep.failures)
    j["failures"].push_back({{"pair", {f.pair[0], f.pair[1]}}, {"cycle", f.cycle}});
  return j.dump();
}

}  // namespace barnette
