#include "barnette/paths.hpp"

#include <algorithm>
#include <set>

namespace barnette {

bool InducedPath::contains(int v) const {
  return std::find(vertices.begin(), vertices.end(), v) != vertices.end();
}

namespace {

bool is_big(const PlaneTriangulation& g, int v) { return g.degree(v) >= 6; }

bool induced_ok(const PlaneTriangulation& g, const std::vector<int>& path, int cand) {
  // cand may only be adjacent to the current tail.
  for (size_t i = 0; i + 1 < path.size(); ++i)
    if (g.has_edge(path[i], cand)) return false;
  return true;
}

// Extend `left` (reversed prefix ending at its back) through small vertices
// until a big end; collect complete paths.
void grow(const PlaneTriangulation& g, const VertexClassification& cls, std::vector<int>& path,
          std::vector<InducedPath>& out) {
  int tail = path.back();
  if (is_big(g, tail)) {
    // need big head too
    if (is_big(g, path.front())) out.push_back(InducedPath{path});
    return;
  }
  for (int u : g.neighbors(tail)) {
    if (std::find(path.begin(), path.end(), u) != path.end()) continue;
    if (!induced_ok(g, path, u)) continue;
    path.push_back(u);
    if (is_big(g, u)) {
      if (is_big(g, path.front())) out.push_back(InducedPath{path});
    } else {
      grow(g, cls, path, out);
    }
    path.pop_back();
  }
}

}  // namespace

std::vector<InducedPath> maximum_induced_paths_through(const PlaneTriangulation& g,
                                                       const VertexClassification& cls, int s) {
  // Grow left arm first, then right arm, both over small interiors.
  std::vector<InducedPath> complete;
  std::vector<int> left{s};
  // enumerate all left arms (sequences s, x1, x2, ... ending at a big vertex)
  struct Rec {
    const PlaneTriangulation& g;
    const VertexClassification& cls;
    std::vector<InducedPath>& complete;
    void left_arm(std::vector<int>& arm) {
      int tail = arm.back();
      for (int u : g.neighbors(tail)) {
        if (std::find(arm.begin(), arm.end(), u) != arm.end()) continue;
        if (!induced_ok(g, arm, u)) continue;
        arm.push_back(u);
        if (is_big(g, u)) {
          // arm fixed; now grow the right side from the reversed arm
          std::vector<int> path(arm.rbegin(), arm.rend());
          grow(g, cls, path, complete);
        } else {
          left_arm(arm);
        }
        arm.pop_back();
      }
    }
  } rec{g, cls, complete};
  rec.left_arm(left);

  // dedupe orientation: keep smaller end first
  std::set<std::vector<int>> seen;
  std::vector<InducedPath> uniq;
  for (auto& p : complete) {
    std::vector<int> key = p.vertices;
    if (key.front() > key.back()) std::reverse(key.begin(), key.end());
    if (seen.insert(key).second) uniq.push_back(InducedPath{key});
  }
  size_t best = 0;
  for (auto& p : uniq) best = std::max(best, p.vertices.size());
  std::vector<InducedPath> out;
  for (auto& p : uniq)
    if (p.vertices.size() == best) out.push_back(p);
  std::sort(out.begin(), out.end(),
            [](const InducedPath& a, const InducedPath& b) { return a.vertices < b.vertices; });
  return out;
}

std::optional<InducedPath> max_induced_small_path(const PlaneTriangulation& g,
                                                  const VertexClassification& cls, int s,
                                                  PathTiebreak tiebreak) {
  if (is_big(g, s)) fail(ErrorKind::NotSmall, "vertex " + std::to_string(s) + " is big");
  auto cands = maximum_induced_paths_through(g, cls, s);
  if (cands.empty()) return std::nullopt;
  if (cands.size() == 1) return cands[0];

  switch (tiebreak.mode) {
    case PathTiebreak::Mode::none:
      fail(ErrorKind::Ambiguous, "two maximum paths through " + std::to_string(s) +
                                     " and no tiebreak supplied");
    case PathTiebreak::Mode::lex_least: {
      // smallest endpoint pair wins (candidates are end-sorted already)
      auto key = [](const InducedPath& p) {
        return std::pair<int, int>(std::min(p.end_a(), p.end_b()), std::max(p.end_a(), p.end_b()));
      };
      auto best = std::min_element(
          cands.begin(), cands.end(),
          [&](const InducedPath& a, const InducedPath& b) { return key(a) < key(b); });
      return *best;
    }
    case PathTiebreak::Mode::prefer_containing:
      for (auto& p : cands)
        if (p.contains(tiebreak.pivot)) return p;
      return cands[0];
    case PathTiebreak::Mode::prefer_avoiding:
      for (auto& p : cands)
        if (!p.contains(tiebreak.pivot)) return p;
      return cands[0];
  }
  return cands[0];
}

std::optional<std::array<int, 2>> path_helpers(const PlaneTriangulation& g,
                                               const VertexClassification& cls,
                                               const InducedPath& p) {
  std::vector<int> common;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (!is_big(g, v) || p.contains(v)) continue;
    bool all = true;
    for (int u : p.vertices)
      if (!g.has_edge(v, u)) {
        all = false;
        break;
      }
    if (all) common.push_back(v);
  }
  if (common.size() != 2) return std::nullopt;
  (void)cls;
  return std::array<int, 2>{common[0], common[1]};
}

std::optional<OctConfig> octahedral_config(const PlaneTriangulation& g,
                                           const VertexClassification& cls, int v) {
  (void)cls;
  if (is_big(g, v)) return std::nullopt;
  std::vector<int> small_nbrs, big_nbrs;
  for (int u : g.neighbors(v)) (is_big(g, u) ? big_nbrs : small_nbrs).push_back(u);
  if (small_nbrs.size() != 2 || big_nbrs.size() != 2) return std::nullopt;
  int y = small_nbrs[0], z = small_nbrs[1];
  if (!g.has_edge(y, z)) return std::nullopt;

  auto big_pair = [&](int w) -> std::optional<std::array<int, 2>> {
    std::vector<int> bs;
    for (int u : g.neighbors(w))
      if (is_big(g, u)) bs.push_back(u);
    if (bs.size() != 2) return std::nullopt;
    return std::array<int, 2>{bs[0], bs[1]};
  };
  auto pv = big_pair(v), py = big_pair(y), pz = big_pair(z);
  if (!pv || !py || !pz) return std::nullopt;

  std::set<int> boundary{(*pv)[0], (*pv)[1], (*py)[0], (*py)[1], (*pz)[0], (*pz)[1]};
  if (boundary.size() != 3) return std::nullopt;
  std::vector<int> b(boundary.begin(), boundary.end());
  if (!(g.has_edge(b[0], b[1]) && g.has_edge(b[1], b[2]) && g.has_edge(b[2], b[0])))
    return std::nullopt;

  // orient: inner[i] adjacent to boundary[i] and boundary[(i+1)%3]
  OctConfig cfg;
  cfg.boundary = {b[0], b[1], b[2]};
  std::array<int, 3> inner_for{-1, -1, -1};
  for (int w : {v, y, z}) {
    auto pr = *big_pair(w);
    for (int i = 0; i < 3; ++i) {
      int p0 = cfg.boundary[i], p1 = cfg.boundary[(i + 1) % 3];
      if ((pr[0] == p0 && pr[1] == p1) || (pr[0] == p1 && pr[1] == p0)) {
        if (inner_for[i] != -1) return std::nullopt;
        inner_for[i] = w;
      }
    }
  }
  for (int i = 0; i < 3; ++i)
    if (inner_for[i] == -1) return std::nullopt;
  cfg.inner = inner_for;
  return cfg;
}

std::vector<InducedPath> all_big_ended_small_paths(const PlaneTriangulation& g,
                                                   const VertexClassification& cls) {
  (void)cls;
  std::set<std::vector<int>> seen;
  std::vector<InducedPath> out;
  for (int s = 0; s < g.vertex_count(); ++s) {
    if (is_big(g, s)) continue;
    // every such path has a small interior vertex, so scanning small s covers all
    std::vector<InducedPath> complete;
    std::vector<int> arm{s};
    struct Rec {
      const PlaneTriangulation& g;
      std::vector<InducedPath>& complete;
      void left_arm(std::vector<int>& a) {
        int tail = a.back();
        for (int u : g.neighbors(tail)) {
          if (std::find(a.begin(), a.end(), u) != a.end()) continue;
          if (!induced_ok(g, a, u)) continue;
          a.push_back(u);
          if (is_big(g, u)) {
            std::vector<int> path(a.rbegin(), a.rend());
            grow_all(path);
          } else {
            left_arm(a);
          }
          a.pop_back();
        }
      }
      void grow_all(std::vector<int>& path) {
        int tail = path.back();
        if (is_big(g, tail)) return;  // handled by caller pattern below
        for (int u : g.neighbors(tail)) {
          if (std::find(path.begin(), path.end(), u) != path.end()) continue;
          if (!induced_ok(g, path, u)) continue;
          path.push_back(u);
          if (is_big(g, u))
            complete.push_back(InducedPath{path});
          else
            grow_all(path);
          path.pop_back();
        }
      }
    } rec{g, complete};
    rec.left_arm(arm);
    for (auto& p : complete) {
      std::vector<int> key = p.vertices;
      if (key.front() > key.back()) std::reverse(key.begin(), key.end());
      if (seen.insert(key).second) out.push_back(InducedPath{key});
    }
  }
  std::sort(out.begin(), out.end(),
            [](const InducedPath& a, const InducedPath& b) { return a.vertices < b.vertices; });
  return out;
}

}  // namespace barnette
