#include "barnette/plane.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>

namespace barnette {

const char* to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::NotSimple: return "NotSimple";
    case ErrorKind::NotTriangulation: return "NotTriangulation";
    case ErrorKind::OddDegree: return "OddDegree";
    case ErrorKind::DisconnectedInput: return "DisconnectedInput";
    case ErrorKind::NotSeparating: return "NotSeparating";
    case ErrorKind::Ambiguous: return "Ambiguous";
    case ErrorKind::NotSmall: return "NotSmall";
    case ErrorKind::PropagationConflict: return "PropagationConflict";
    case ErrorKind::PreconditionViolated: return "PreconditionViolated";
    case ErrorKind::CaseExhausted: return "CaseExhausted";
    case ErrorKind::NotATree: return "NotATree";
    case ErrorKind::HypothesisViolated: return "HypothesisViolated";
    case ErrorKind::NotSameColor: return "NotSameColor";
    case ErrorKind::NotAPath: return "NotAPath";
    case ErrorKind::NoPartitionExists: return "NoPartitionExists";
    case ErrorKind::NotAPartition: return "NotAPartition";
    case ErrorKind::NotHamiltonian: return "NotHamiltonian";
    case ErrorKind::NotCofacial: return "NotCofacial";
    case ErrorKind::OddDistance: return "OddDistance";
    case ErrorKind::NotAFace: return "NotAFace";
    case ErrorKind::UnknownName: return "UnknownName";
    case ErrorKind::BoundExceeded: return "BoundExceeded";
    case ErrorKind::MalformedStream: return "MalformedStream";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

void fail(ErrorKind k, const std::string& msg) { throw Error(k, msg); }

PlaneTriangulation PlaneTriangulation::from_rotation(std::vector<std::vector<int>> rotation) {
  PlaneTriangulation g;
  g.n_ = static_cast<int>(rotation.size());
  g.rot_ = std::move(rotation);
  g.derive_and_validate();
  return g;
}

void PlaneTriangulation::derive_and_validate() {
  if (n_ < 4) fail(ErrorKind::NotTriangulation, "need at least 4 vertices, got " + std::to_string(n_));

  adj_.assign(static_cast<size_t>(n_) * n_, 0);
  int dart_count = 0;
  for (int v = 0; v < n_; ++v) {
    std::set<int> seen;
    for (int u : rot_[v]) {
      if (u < 0 || u >= n_) fail(ErrorKind::NotSimple, "neighbor id out of range at vertex " + std::to_string(v));
      if (u == v) fail(ErrorKind::NotSimple, "loop at vertex " + std::to_string(v));
      if (!seen.insert(u).second)
        fail(ErrorKind::NotSimple, "repeated neighbor " + std::to_string(u) + " at vertex " + std::to_string(v));
      adj_[static_cast<size_t>(v) * n_ + u] = 1;
      ++dart_count;
    }
  }
  for (int v = 0; v < n_; ++v)
    for (int u : rot_[v])
      if (!adj_[static_cast<size_t>(u) * n_ + v])
        fail(ErrorKind::NotSimple, "edge (" + std::to_string(v) + "," + std::to_string(u) +
                                       ") present at one endpoint only");
  m_ = dart_count / 2;

  // Connectivity before face tracing: tracing assumes every dart is reachable.
  {
    std::vector<uint8_t> vis(n_, 0);
    std::deque<int> q{0};
    vis[0] = 1;
    int cnt = 0;
    while (!q.empty()) {
      int v = q.front();
      q.pop_front();
      ++cnt;
      for (int u : rot_[v])
        if (!vis[u]) {
          vis[u] = 1;
          q.push_back(u);
        }
    }
    if (cnt != n_) fail(ErrorKind::DisconnectedInput, "graph has more than one component");
  }

  // Trace faces: successor of dart (u,v) is the neighbor following u in v's rotation.
  faces_.clear();
  face_at_.assign(n_, {});
  for (int v = 0; v < n_; ++v) face_at_[v].assign(rot_[v].size(), -1);
  for (int v = 0; v < n_; ++v) {
    for (size_t i = 0; i < rot_[v].size(); ++i) {
      if (face_at_[v][i] >= 0) continue;
      // walk the face starting with dart (v, rot_[v][i])
      std::vector<int> cyc;
      int a = v;
      int bi = static_cast<int>(i);
      int face_id = static_cast<int>(faces_.size());
      do {
        if (face_at_[a][bi] >= 0)
          fail(ErrorKind::NotTriangulation, "face tracing revisited a dart; rotation system inconsistent");
        face_at_[a][bi] = face_id;
        cyc.push_back(a);
        int b = rot_[a][bi];
        int j = rotation_index(b, a);
        bi = (j + 1) % static_cast<int>(rot_[b].size());
        a = b;
        if (cyc.size() > 3) fail(ErrorKind::NotTriangulation, "traced face with more than 3 vertices");
      } while (!(a == v && bi == static_cast<int>(i)));
      if (cyc.size() != 3) fail(ErrorKind::NotTriangulation, "traced face with " + std::to_string(cyc.size()) + " vertices");
      faces_.push_back({cyc[0], cyc[1], cyc[2]});
    }
  }

  if (m_ != 3 * n_ - 6)
    fail(ErrorKind::NotTriangulation,
         "edge count " + std::to_string(m_) + " != 3n-6 = " + std::to_string(3 * n_ - 6));
  if (static_cast<int>(faces_.size()) != 2 * n_ - 4)
    fail(ErrorKind::NotTriangulation,
         "face count " + std::to_string(faces_.size()) + " != 2n-4 = " + std::to_string(2 * n_ - 4));

  for (int v = 0; v < n_; ++v) {
    int d = degree(v);
    if (d % 2 != 0) fail(ErrorKind::OddDegree, "vertex " + std::to_string(v) + " has odd degree " + std::to_string(d));
    if (d < 4) fail(ErrorKind::NotTriangulation, "vertex " + std::to_string(v) + " has degree " + std::to_string(d));
  }

  // Defensive 3-connectivity probe: a simple triangulation of the sphere is
  // 3-connected (Whitney), so an articulation vertex means the input lied.
  {
    std::vector<int> low(n_, -1), num(n_, -1);
    std::vector<std::pair<int, int>> stack;  // (vertex, child index)
    int timer = 0;
    num[0] = low[0] = timer++;
    stack.push_back({0, 0});
    std::vector<int> parent(n_, -1);
    int root_children = 0;
    while (!stack.empty()) {
      auto& [v, idx] = stack.back();
      if (idx < static_cast<int>(rot_[v].size())) {
        int u = rot_[v][idx++];
        if (num[u] == -1) {
          parent[u] = v;
          num[u] = low[u] = timer++;
          if (v == 0) ++root_children;
          stack.push_back({u, 0});
        } else if (u != parent[v]) {
          low[v] = std::min(low[v], num[u]);
        }
      } else {
        stack.pop_back();
        if (!stack.empty()) {
          int p = stack.back().first;
          low[p] = std::min(low[p], low[v]);
          if (p != 0 && low[v] >= num[p])
            fail(ErrorKind::NotTriangulation, "articulation vertex " + std::to_string(p));
        }
      }
    }
    if (root_children > 1) fail(ErrorKind::NotTriangulation, "articulation vertex 0");
  }
}

int PlaneTriangulation::rotation_index(int v, int u) const {
  const auto& r = rot_[v];
  for (size_t i = 0; i < r.size(); ++i)
    if (r[i] == u) return static_cast<int>(i);
  fail(ErrorKind::NotAPath, "no edge (" + std::to_string(v) + "," + std::to_string(u) + ")");
}

int PlaneTriangulation::face_of(int u, int v) const { return face_at_[u][rotation_index(u, v)]; }

int PlaneTriangulation::face_index(int a, int b, int c) const {
  if (!(has_edge(a, b) && has_edge(b, c) && has_edge(c, a))) return -1;
  std::array<int, 3> key{a, b, c};
  std::sort(key.begin(), key.end());
  for (size_t f = 0; f < faces_.size(); ++f) {
    std::array<int, 3> t = faces_[f];
    std::sort(t.begin(), t.end());
    if (t == key) return static_cast<int>(f);
  }
  return -1;
}

namespace {

// Components of g minus a removed-vertex mask.
std::vector<std::vector<int>> components_without(const PlaneTriangulation& g,
                                                 const std::vector<uint8_t>& removed) {
  int n = g.vertex_count();
  std::vector<uint8_t> vis(n, 0);
  std::vector<std::vector<int>> comps;
  for (int s = 0; s < n; ++s) {
    if (vis[s] || removed[s]) continue;
    comps.emplace_back();
    auto& comp = comps.back();
    std::deque<int> q{s};
    vis[s] = 1;
    while (!q.empty()) {
      int v = q.front();
      q.pop_front();
      comp.push_back(v);
      for (int u : g.neighbors(v))
        if (!vis[u] && !removed[u]) {
          vis[u] = 1;
          q.push_back(u);
        }
    }
  }
  return comps;
}

}  // namespace

std::vector<SeparatingTriangle> separating_triangles(const PlaneTriangulation& g) {
  int n = g.vertex_count();
  std::vector<SeparatingTriangle> out;
  for (int a = 0; a < n; ++a)
    for (int b : g.neighbors(a)) {
      if (b <= a) continue;
      for (int c : g.neighbors(b)) {
        if (c <= b || !g.has_edge(c, a)) continue;
        std::vector<uint8_t> removed(n, 0);
        removed[a] = removed[b] = removed[c] = 1;
        auto comps = components_without(g, removed);
        if (comps.size() < 2) continue;
        if (comps.size() != 2)
          fail(ErrorKind::NotTriangulation, "3-cycle removal left more than two components");
        out.push_back(SeparatingTriangle{{a, b, c}, comps[0], comps[1]});
      }
    }
  return out;
}

bool is_four_connected(const PlaneTriangulation& g) { return separating_triangles(g).empty(); }

namespace {

SplitPiece restrict_to(const PlaneTriangulation& g, const std::vector<uint8_t>& keep) {
  SplitPiece piece;
  int n = g.vertex_count();
  std::vector<int> new_id(n, -1);
  for (int v = 0; v < n; ++v)
    if (keep[v]) {
      new_id[v] = static_cast<int>(piece.to_parent.size());
      piece.to_parent.push_back(v);
    }
  std::vector<std::vector<int>> rot(piece.to_parent.size());
  for (size_t i = 0; i < piece.to_parent.size(); ++i) {
    for (int u : g.neighbors(piece.to_parent[i]))
      if (keep[u]) rot[i].push_back(new_id[u]);
  }
  piece.graph = PlaneTriangulation::from_rotation(std::move(rot));
  return piece;
}

}  // namespace

SplitResult split_on_triangle(const PlaneTriangulation& g, const SeparatingTriangle& t) {
  int n = g.vertex_count();
  const auto [a, b, c] = t.cycle;
  if (!(g.has_edge(a, b) && g.has_edge(b, c) && g.has_edge(c, a)))
    fail(ErrorKind::NotSeparating, "triple is not a triangle");
  std::vector<uint8_t> removed(n, 0);
  removed[a] = removed[b] = removed[c] = 1;
  auto comps = components_without(g, removed);
  if (comps.size() != 2) fail(ErrorKind::NotSeparating, "triangle does not separate the graph");

  std::vector<uint8_t> keep1(n, 1), keep2(n, 1);
  for (int v : comps[0]) keep1[v] = 0;  // g1 drops the first component
  for (int v : comps[1]) keep2[v] = 0;  // g2 drops the second
  SplitResult res;
  res.g1 = restrict_to(g, keep1);
  res.g2 = restrict_to(g, keep2);
  return res;
}

bool induced_subgraph_acyclic(const PlaneTriangulation& g, const std::vector<int>& vs) {
  std::vector<uint8_t> in_set(g.vertex_count(), 0);
  for (int v : vs) in_set[v] = 1;
  return induced_subgraph_acyclic_mask(g, in_set);
}

bool induced_subgraph_acyclic_mask(const PlaneTriangulation& g, const std::vector<uint8_t>& in_set) {
  int n = g.vertex_count();
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int v = 0; v < n; ++v) {
    if (!in_set[v]) continue;
    for (int u : g.neighbors(v)) {
      if (u <= v || !in_set[u]) continue;
      int rv = find(v), ru = find(u);
      if (rv == ru) return false;
      parent[rv] = ru;
    }
  }
  return true;
}

std::optional<std::vector<int>> induced_cycle_witness(const PlaneTriangulation& g,
                                                      const std::vector<int>& vs) {
  int n = g.vertex_count();
  std::vector<uint8_t> in_set(n, 0);
  for (int v : vs) in_set[v] = 1;

  std::optional<std::vector<int>> best;
  // Shortest cycle through each induced edge (u,v): BFS from u to v avoiding
  // the edge itself.
  for (int u : vs)
    for (int v : g.neighbors(u)) {
      if (v <= u || !in_set[v]) continue;
      std::vector<int> prev(n, -2);
      std::deque<int> q{u};
      prev[u] = -1;
      while (!q.empty()) {
        int x = q.front();
        q.pop_front();
        if (x == v) break;
        for (int y : g.neighbors(x)) {
          if (!in_set[y] || prev[y] != -2) continue;
          if (x == u && y == v) continue;  // skip the edge we close with
          prev[y] = x;
          q.push_back(y);
        }
      }
      if (prev[v] == -2) continue;
      std::vector<int> cyc;
      for (int x = v; x != -1; x = prev[x]) cyc.push_back(x);
      std::reverse(cyc.begin(), cyc.end());
      if (!best || cyc.size() < best->size()) best = cyc;
    }
  return best;
}

}  // namespace barnette
