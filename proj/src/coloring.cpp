#include "barnette/coloring.hpp"

#include <algorithm>
#include <deque>

namespace barnette {

Coloring Coloring::relabeled(const std::array<int, 3>& perm) const {
  Coloring out;
  out.color.resize(color.size());
  for (size_t v = 0; v < color.size(); ++v) out.color[v] = perm[color[v] - 1];
  return out;
}

Coloring three_color(const PlaneTriangulation& g) {
  int n = g.vertex_count();
  Coloring c;
  c.color.assign(n, 0);

  // Seed face 0 with labels (1,2,3) in trace order, then spread across face
  // adjacencies: two colored corners of a face force the third.
  const auto& faces = g.faces();
  c.color[faces[0][0]] = 1;
  c.color[faces[0][1]] = 2;
  c.color[faces[0][2]] = 3;

  std::vector<uint8_t> done(faces.size(), 0);
  std::deque<int> q{0};
  done[0] = 1;
  while (!q.empty()) {
    int f = q.front();
    q.pop_front();
    const auto& tri = faces[f];
    // complete the face if two corners are colored
    for (int r = 0; r < 3; ++r) {
      int x = tri[r], y = tri[(r + 1) % 3], z = tri[(r + 2) % 3];
      if (c.color[x] && c.color[y] && !c.color[z]) {
        if (c.color[x] == c.color[y])
          fail(ErrorKind::PropagationConflict, "face with two equal colors");
        c.color[z] = 6 - c.color[x] - c.color[y];
      }
    }
    // push neighbouring faces (sharing a directed edge)
    for (int r = 0; r < 3; ++r) {
      int u = tri[r], v = tri[(r + 1) % 3];
      int nf = g.face_of(v, u);  // face on the other side of edge (u,v)
      if (!done[nf]) {
        done[nf] = 1;
        q.push_back(nf);
      }
    }
  }

  for (int v = 0; v < n; ++v)
    if (!c.color[v]) fail(ErrorKind::PropagationConflict, "vertex left uncolored");
  for (int v = 0; v < n; ++v)
    for (int u : g.neighbors(v))
      if (c.color[u] == c.color[v])
        fail(ErrorKind::PropagationConflict,
             "edge (" + std::to_string(v) + "," + std::to_string(u) + ") monochromatic");
  return c;
}

VertexClassification classify(const PlaneTriangulation& g, const Coloring& c) {
  VertexClassification cls;
  cls.color = c.color;
  for (int v = 0; v < g.vertex_count(); ++v) {
    int k = c.color[v] - 1;
    if (g.degree(v) >= 6)
      cls.big[k].push_back(v);
    else
      cls.small[k].push_back(v);
  }
  return cls;
}

VertexClassification VertexClassification::relabeled(const PlaneTriangulation& g,
                                                     const std::array<int, 3>& perm) const {
  Coloring c;
  c.color.resize(color.size());
  for (size_t v = 0; v < color.size(); ++v) c.color[v] = perm[color[v] - 1];
  return classify(g, c);
}

HypothesisReport check_hypothesis(const PlaneTriangulation& g, const VertexClassification& cls) {
  HypothesisReport rep;

  // The three distinct pair checks; permutation (i,j,k) needs pairs {i,j} and {i,k}.
  std::array<std::array<bool, 4>, 4> pair_ok{};
  for (int i = 1; i <= 3; ++i)
    for (int j = i + 1; j <= 3; ++j) {
      std::vector<int> vs = cls.big[i - 1];
      vs.insert(vs.end(), cls.big[j - 1].begin(), cls.big[j - 1].end());
      bool ok = induced_subgraph_acyclic(g, vs);
      pair_ok[i][j] = pair_ok[j][i] = ok;
      if (!ok) {
        auto cyc = induced_cycle_witness(g, vs);
        rep.failures.push_back({{i, j}, cyc ? *cyc : std::vector<int>{}});
      }
    }

  static const std::array<std::array<int, 3>, 6> kPerms = {
      {{1, 2, 3}, {1, 3, 2}, {2, 1, 3}, {2, 3, 1}, {3, 1, 2}, {3, 2, 1}}};
  for (const auto& p : kPerms)
    if (pair_ok[p[0]][p[1]] && pair_ok[p[0]][p[2]]) rep.satisfying.push_back(p);
  return rep;
}

}  // namespace barnette
