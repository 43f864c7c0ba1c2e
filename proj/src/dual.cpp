#include "barnette/dual.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>

#include "barnette/partition.hpp"

namespace barnette {

int DualGraph::dual_edge_of(int u, int v) const {
  if (u > v) std::swap(u, v);
  for (size_t e = 0; e < edge_primal.size(); ++e)
    if (edge_primal[e][0] == u && edge_primal[e][1] == v) return static_cast<int>(e);
  return -1;
}

bool DualGraph::cycle_has_edge(const std::vector<int>& order, int dual_edge) const {
  int f1 = edge_faces[dual_edge][0], f2 = edge_faces[dual_edge][1];
  int k = static_cast<int>(order.size());
  for (int i = 0; i < k; ++i) {
    int x = order[i], y = order[(i + 1) % k];
    if ((x == f1 && y == f2) || (x == f2 && y == f1)) return true;
  }
  return false;
}

DualGraph build_dual(const PlaneTriangulation& g) {
  DualGraph d;
  d.primal_n = g.vertex_count();
  int nf = g.face_count();
  d.adj.assign(nf, {-1, -1, -1});

  std::map<std::array<int, 2>, int> edge_id;
  for (int f = 0; f < nf; ++f) {
    const auto& tri = g.faces()[f];
    for (int r = 0; r < 3; ++r) {
      int u = tri[r], v = tri[(r + 1) % 3];
      int other = g.face_of(v, u);
      d.adj[f][r] = other;
      std::array<int, 2> pe{std::min(u, v), std::max(u, v)};
      if (!edge_id.count(pe)) {
        edge_id[pe] = static_cast<int>(d.edge_primal.size());
        d.edge_primal.push_back(pe);
        d.edge_faces.push_back({std::min(f, other), std::max(f, other)});
      }
    }
  }

  // 2-color the dual; conflict is impossible for even triangulations.
  d.side.assign(nf, -1);
  std::deque<int> q{0};
  d.side[0] = 0;
  while (!q.empty()) {
    int f = q.front();
    q.pop_front();
    for (int o : d.adj[f]) {
      if (d.side[o] == -1) {
        d.side[o] = 1 - d.side[f];
        q.push_back(o);
      } else if (d.side[o] == d.side[f]) {
        fail(ErrorKind::NotTriangulation, "dual graph is not bipartite");
      }
    }
  }
  return d;
}

HamCycle canonical_cycle(std::vector<int> order) {
  int k = static_cast<int>(order.size());
  int pos = static_cast<int>(std::min_element(order.begin(), order.end()) - order.begin());
  std::vector<int> fwd(k), bwd(k);
  for (int i = 0; i < k; ++i) {
    fwd[i] = order[(pos + i) % k];
    bwd[i] = order[(pos - i + k) % k];
  }
  return HamCycle{fwd <= bwd ? fwd : bwd};
}

HamCycle partition_to_ham(const PlaneTriangulation& g, const TreePartition& p,
                          const DualGraph& d) {
  validate_tree_partition(g, p);  // NotAPartition on bad input
  std::vector<uint8_t> in_s(g.vertex_count(), 0);
  for (int v : p.S) in_s[v] = 1;

  // Per face, the duals of its cut edges; every face of a tree partition is
  // bichromatic, so each dual vertex sees exactly two of them.
  int nf = d.vertex_count();
  std::vector<std::vector<int>> next(nf);
  int cut = 0;
  for (int e = 0; e < d.edge_count(); ++e) {
    auto [u, v] = d.edge_primal[e];
    if (in_s[u] != in_s[v]) {
      ++cut;
      next[d.edge_faces[e][0]].push_back(d.edge_faces[e][1]);
      next[d.edge_faces[e][1]].push_back(d.edge_faces[e][0]);
    }
  }
  if (cut != 2 * g.vertex_count() - 4)
    fail(ErrorKind::NotHamiltonian, "cut size " + std::to_string(cut) + " != 2n-4");
  for (int f = 0; f < nf; ++f)
    if (next[f].size() != 2) fail(ErrorKind::NotHamiltonian, "dual vertex not on exactly 2 cut duals");

  std::vector<int> order{0};
  int prev = -1, cur = 0;
  do {
    int nxt = (next[cur][0] == prev) ? next[cur][1] : next[cur][0];
    prev = cur;
    cur = nxt;
    if (cur != 0) order.push_back(cur);
  } while (cur != 0);
  if (static_cast<int>(order.size()) != nf)
    fail(ErrorKind::NotHamiltonian, "cut duals form more than one cycle");
  return canonical_cycle(std::move(order));
}

namespace {

void check_path(const PlaneTriangulation& g, const PathABC& abc) {
  if (abc.a == abc.c || abc.a == abc.b || abc.b == abc.c)
    fail(ErrorKind::NotAPath, "vertices not distinct");
  if (!g.has_edge(abc.a, abc.b) || !g.has_edge(abc.b, abc.c))
    fail(ErrorKind::NotAPath, "ab or bc is not an edge");
}

}  // namespace

bool verify_property_1(const PlaneTriangulation& g, const PathABC& abc, const TreePartition& p) {
  check_path(g, abc);
  std::vector<uint8_t> in_s(g.vertex_count(), 0);
  for (int v : p.S) in_s[v] = 1;
  bool s_side = in_s[abc.a] && in_s[abc.b] && !in_s[abc.c];
  bool t_side = !in_s[abc.a] && !in_s[abc.b] && in_s[abc.c];
  return s_side || t_side;
}

bool verify_property_2(const PlaneTriangulation& g, const PathABC& abc, const TreePartition& p) {
  check_path(g, abc);
  std::vector<uint8_t> in_s(g.vertex_count(), 0);
  for (int v : p.S) in_s[v] = 1;
  return (in_s[abc.a] && in_s[abc.b] && in_s[abc.c]) ||
         (!in_s[abc.a] && !in_s[abc.b] && !in_s[abc.c]);
}

namespace {

int shared_endpoint(std::array<int, 2> e1, std::array<int, 2> e2) {
  if (e1 == e2) return -1;
  for (int x : e1)
    for (int y : e2)
      if (x == y) return x;
  return -1;
}

}  // namespace

int cofacial_distance(const PlaneTriangulation& g, std::array<int, 2> e1, std::array<int, 2> e2) {
  int b = shared_endpoint(e1, e2);
  if (b < 0) fail(ErrorKind::NotCofacial, "dual edges do not lie on a common dual face");
  int a = e1[0] == b ? e1[1] : e1[0];
  int c = e2[0] == b ? e2[1] : e2[0];
  int deg = g.degree(b);
  int ia = g.rotation_index(b, a), ic = g.rotation_index(b, c);
  int gap = std::abs(ia - ic);
  return std::min(gap, deg - gap);
}

bool dual_h_check(const PlaneTriangulation& g, const DualGraph& d, std::array<int, 2> e1,
                  std::array<int, 2> e2, const HamCycle& h, HMode mode) {
  if (shared_endpoint(e1, e2) < 0)
    fail(ErrorKind::NotCofacial, "dual edges do not lie on a common dual face");
  int id1 = d.dual_edge_of(e1[0], e1[1]);
  int id2 = d.dual_edge_of(e2[0], e2[1]);
  if (id1 < 0 || id2 < 0) fail(ErrorKind::NotAPath, "no such primal edge");
  bool u1 = d.cycle_has_edge(h.order, id1);
  bool u2 = d.cycle_has_edge(h.order, id2);
  if (mode == HMode::plus_minus) return u1 != u2;
  if (cofacial_distance(g, e1, e2) % 2 != 0)
    fail(ErrorKind::OddDistance, "minus-minus pair at odd distance");
  return !u1 && !u2;
}

PathABC primal_of_cofacial_pair(const PlaneTriangulation& g, const DualGraph& d,
                                std::array<int, 2> e1, std::array<int, 2> e2) {
  (void)d;
  int b = shared_endpoint(e1, e2);
  if (b < 0) fail(ErrorKind::NotCofacial, "dual edges do not lie on a common dual face");
  int a = e1[0] == b ? e1[1] : e1[0];
  int c = e2[0] == b ? e2[1] : e2[0];
  if (!g.has_edge(a, b) || !g.has_edge(c, b)) fail(ErrorKind::NotAPath, "no such primal edges");
  return PathABC{a, b, c};
}

std::string dot_primal(const PlaneTriangulation& g, const TreePartition* p) {
  std::vector<int> side(g.vertex_count(), -1);
  if (p) {
    for (int v : p->S) side[v] = 0;
    for (int v : p->T) side[v] = 1;
  }
  std::ostringstream os;
  os << "graph primal {\n  node [style=filled];\n";
  for (int v = 0; v < g.vertex_count(); ++v) {
    os << "  " << v;
    if (side[v] == 0)
      os << " [fillcolor=lightblue]";
    else if (side[v] == 1)
      os << " [fillcolor=lightsalmon]";
    else
      os << " [fillcolor=white]";
    os << ";\n";
  }
  for (int v = 0; v < g.vertex_count(); ++v)
    for (int u : g.neighbors(v))
      if (v < u) {
        os << "  " << v << " -- " << u;
        if (p && side[v] == side[u]) os << " [penwidth=2]";
        os << ";\n";
      }
  os << "}\n";
  return os.str();
}

std::string dot_dual(const DualGraph& d, const HamCycle* h) {
  std::ostringstream os;
  os << "graph dual {\n  node [shape=box];\n";
  std::vector<std::pair<int, int>> cyc_edges;
  if (h) {
    int k = static_cast<int>(h->order.size());
    for (int i = 0; i < k; ++i) {
      int x = h->order[i], y = h->order[(i + 1) % k];
      cyc_edges.push_back({std::min(x, y), std::max(x, y)});
    }
  }
  for (int e = 0; e < d.edge_count(); ++e) {
    int f1 = d.edge_faces[e][0], f2 = d.edge_faces[e][1];
    bool on_cycle = std::find(cyc_edges.begin(), cyc_edges.end(), std::make_pair(f1, f2)) !=
                    cyc_edges.end();
    os << "  " << f1 << " -- " << f2;
    if (on_cycle) os << " [color=red, penwidth=2]";
    os << ";\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace barnette
