#include "barnette/partition.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>

namespace barnette {

namespace {

using Mask = std::vector<uint8_t>;

Mask make_mask(int n, const std::vector<int>& vs) {
  Mask m(n, 0);
  for (int v : vs) m[v] = 1;
  return m;
}

std::vector<int> mask_vec(const Mask& m) {
  std::vector<int> out;
  for (size_t v = 0; v < m.size(); ++v)
    if (m[v]) out.push_back(static_cast<int>(v));
  return out;
}

bool is_big(const PlaneTriangulation& g, int v) { return g.degree(v) >= 6; }

int big_count(const PlaneTriangulation& g) {
  int k = 0;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (is_big(g, v)) ++k;
  return k;
}

// Any path between `from` and `to` inside the induced subgraph on `allowed`.
std::optional<std::vector<int>> path_in_induced(const PlaneTriangulation& g, const Mask& allowed,
                                                int from, int to) {
  if (!allowed[from] || !allowed[to]) return std::nullopt;
  std::vector<int> prev(g.vertex_count(), -2);
  std::deque<int> q{from};
  prev[from] = -1;
  while (!q.empty()) {
    int x = q.front();
    q.pop_front();
    if (x == to) break;
    for (int y : g.neighbors(x))
      if (allowed[y] && prev[y] == -2) {
        prev[y] = x;
        q.push_back(y);
      }
  }
  if (prev[to] == -2) return std::nullopt;
  std::vector<int> path;
  for (int x = to; x != -1; x = prev[x]) path.push_back(x);
  std::reverse(path.begin(), path.end());
  return path;
}

bool side_connected(const PlaneTriangulation& g, const Mask& side) {
  int start = -1, total = 0;
  for (size_t v = 0; v < side.size(); ++v)
    if (side[v]) {
      if (start < 0) start = static_cast<int>(v);
      ++total;
    }
  if (total == 0) return false;
  std::deque<int> q{start};
  Mask vis(side.size(), 0);
  vis[start] = 1;
  int seen = 0;
  while (!q.empty()) {
    int x = q.front();
    q.pop_front();
    ++seen;
    for (int y : g.neighbors(x))
      if (side[y] && !vis[y]) {
        vis[y] = 1;
        q.push_back(y);
      }
  }
  return seen == total;
}

}  // namespace

bool is_tree_partition(const PlaneTriangulation& g, const TreePartition& p) {
  try {
    validate_tree_partition(g, p);
    return true;
  } catch (const Error&) {
    return false;
  }
}

void validate_tree_partition(const PlaneTriangulation& g, const TreePartition& p) {
  int n = g.vertex_count();
  Mask in_s(n, 0), in_t(n, 0);
  for (int v : p.S) {
    if (v < 0 || v >= n) fail(ErrorKind::NotAPartition, "vertex id out of range");
    in_s[v] = 1;
  }
  for (int v : p.T) {
    if (v < 0 || v >= n) fail(ErrorKind::NotAPartition, "vertex id out of range");
    if (in_s[v]) fail(ErrorKind::NotAPartition, "S and T intersect at " + std::to_string(v));
    in_t[v] = 1;
  }
  for (int v = 0; v < n; ++v)
    if (!in_s[v] && !in_t[v]) fail(ErrorKind::NotAPartition, "vertex " + std::to_string(v) + " unassigned");
  if (p.S.empty() || p.T.empty()) fail(ErrorKind::NotAPartition, "a side is empty");
  if (!induced_subgraph_acyclic_mask(g, in_s)) fail(ErrorKind::NotAPartition, "G[S] has a cycle");
  if (!induced_subgraph_acyclic_mask(g, in_t)) fail(ErrorKind::NotAPartition, "G[T] has a cycle");
  if (!side_connected(g, in_s)) fail(ErrorKind::NotAPartition, "G[S] is disconnected");
  if (!side_connected(g, in_t)) fail(ErrorKind::NotAPartition, "G[T] is disconnected");
}

// ---------------------------------------------------------------------------
// seed-condition audit
// ---------------------------------------------------------------------------

void check_seed_conditions(const PlaneTriangulation& g, const VertexClassification& cls,
                           const SeedSets& seeds) {
  int n = g.vertex_count();
  Mask X = make_mask(n, seeds.X), Y = make_mask(n, seeds.Y);
  for (int v = 0; v < n; ++v)
    if (X[v] && Y[v]) fail(ErrorKind::PreconditionViolated, "X and Y intersect at " + std::to_string(v));
  if (!induced_subgraph_acyclic_mask(g, X)) fail(ErrorKind::PreconditionViolated, "G[X] has a cycle");
  if (!induced_subgraph_acyclic_mask(g, Y)) fail(ErrorKind::PreconditionViolated, "G[Y] has a cycle");

  auto [i, j, k] = seeds.perm;
  auto in_big = [&](int v, int c) { return is_big(g, v) && cls.color[v] == c; };
  if (seeds.v) {
    int v = *seeds.v;
    if (!in_big(v, j))
      fail(ErrorKind::PreconditionViolated, "exceptional vertex not big in class j");
    for (int w = 0; w < n; ++w) {
      if ((in_big(w, i) || in_big(w, j)) && w != v && !X[w])
        fail(ErrorKind::PreconditionViolated, "condition (b): big vertex " + std::to_string(w) + " missing from X");
      if (in_big(w, k) && !Y[w])
        fail(ErrorKind::PreconditionViolated, "condition (b): big vertex " + std::to_string(w) + " missing from Y");
    }
    if (!Y[v]) fail(ErrorKind::PreconditionViolated, "condition (b): exceptional vertex not in Y");
  } else {
    for (int w = 0; w < n; ++w) {
      if ((in_big(w, i) || in_big(w, j)) && !X[w])
        fail(ErrorKind::PreconditionViolated, "condition (b): big vertex " + std::to_string(w) + " missing from X");
      if (in_big(w, k) && !Y[w])
        fail(ErrorKind::PreconditionViolated, "condition (b): big vertex " + std::to_string(w) + " missing from Y");
    }
  }

  for (const auto& p : all_big_ended_small_paths(g, cls)) {
    auto inner = p.inner();
    if (inner.empty()) continue;
    size_t covered = 0;
    for (int w : inner)
      if (X[w] || Y[w]) ++covered;
    if (covered != 0 && covered != inner.size())
      fail(ErrorKind::PreconditionViolated, "condition (c): path interior partially covered");
  }
}

// ---------------------------------------------------------------------------
// exhaustive base case
// ---------------------------------------------------------------------------

namespace {

// Backtracking over vertex assignments in id order (S tried first), pruning a
// side as soon as it induces a cycle. Calls sink on each full assignment that
// makes both sides trees; sink returns true to stop.
struct ExhaustiveSearch {
  const PlaneTriangulation& g;
  std::vector<int> forced;  // -1 free, 0 S, 1 T
  bool fix_first_free;      // symmetry break when no constraints

  template <typename Sink>
  void run(Sink&& sink) {
    int n = g.vertex_count();
    std::vector<int> side(n, -1);
    // union-find per side with copy-on-branch (n is small here)
    std::vector<int> uf[2];
    uf[0].resize(n);
    uf[1].resize(n);
    std::iota(uf[0].begin(), uf[0].end(), 0);
    std::iota(uf[1].begin(), uf[1].end(), 0);
    rec(0, side, uf, sink);
  }

  template <typename Sink>
  bool rec(int v, std::vector<int>& side, std::vector<int> uf[2], Sink&& sink) {
    int n = g.vertex_count();
    if (v == n) {
      TreePartition p;
      for (int w = 0; w < n; ++w) (side[w] == 0 ? p.S : p.T).push_back(w);
      if (p.S.empty() || p.T.empty()) return false;
      Mask in_s = make_mask(n, p.S), in_t = make_mask(n, p.T);
      if (!side_connected(g, in_s) || !side_connected(g, in_t)) return false;
      return sink(p);
    }
    std::vector<int> options;
    if (forced[v] >= 0)
      options = {forced[v]};
    else if (fix_first_free && v == first_free())
      options = {0};
    else
      options = {0, 1};
    for (int s : options) {
      // cycle check: v's neighbours already in side s must be in distinct components
      std::vector<int> nuf = uf[s];
      auto find = [&](int x) {
        while (nuf[x] != x) x = nuf[x] = nuf[nuf[x]];
        return x;
      };
      bool ok = true;
      for (int u : g.neighbors(v)) {
        if (u < v && side[u] == s) {
          int ru = find(u), rv = find(v);
          if (ru == rv) {
            ok = false;
            break;
          }
          nuf[rv] = ru;
        }
      }
      if (!ok) continue;
      side[v] = s;
      std::vector<int> saved = std::move(uf[s]);
      uf[s] = std::move(nuf);
      bool stop = rec(v + 1, side, uf, sink);
      uf[s] = std::move(saved);
      side[v] = -1;
      if (stop) return true;
    }
    return false;
  }

  int first_free() const {
    for (size_t v = 0; v < forced.size(); ++v)
      if (forced[v] < 0) return static_cast<int>(v);
    return -1;
  }
};

std::vector<int> constraint_vector(const PlaneTriangulation& g, const PartitionConstraint& c) {
  std::vector<int> forced(g.vertex_count(), -1);
  for (int v : c.require_S) {
    if (forced[v] == 1) fail(ErrorKind::PreconditionViolated, "constraint places a vertex on both sides");
    forced[v] = 0;
  }
  for (int v : c.require_T) {
    if (forced[v] == 0) fail(ErrorKind::PreconditionViolated, "constraint places a vertex on both sides");
    forced[v] = 1;
  }
  return forced;
}

}  // namespace

TreePartition base_case_partition(const PlaneTriangulation& g, const PartitionConstraint& constraint) {
  bool unconstrained = constraint.require_S.empty() && constraint.require_T.empty();
  ExhaustiveSearch search{g, constraint_vector(g, constraint), unconstrained};
  std::optional<TreePartition> found;
  search.run([&](const TreePartition& p) {
    found = p;
    return true;
  });
  if (!found) fail(ErrorKind::NoPartitionExists, "exhaustive search found no tree-tree partition");
  return *found;
}

// ---------------------------------------------------------------------------
// extend_seed: grow disjoint acyclic seeds into two spanning trees
// ---------------------------------------------------------------------------

namespace {

void push_trace(std::vector<std::string>* trace, const std::string& s) {
  if (trace) trace->push_back(s);
}

}  // namespace

TreePartition extend_seed(const PlaneTriangulation& g, const VertexClassification& cls,
                          const SeedSets& seeds, ExtendLabels labels,
                          std::vector<std::string>* trace) {
  int n = g.vertex_count();
  Mask X = make_mask(n, seeds.X), Y = make_mask(n, seeds.Y);
  for (int v = 0; v < n; ++v)
    if (X[v] && Y[v]) fail(ErrorKind::PreconditionViolated, "X and Y intersect at " + std::to_string(v));
  if (!induced_subgraph_acyclic_mask(g, X)) fail(ErrorKind::PreconditionViolated, "G[X] has a cycle");
  if (!induced_subgraph_acyclic_mask(g, Y)) fail(ErrorKind::PreconditionViolated, "G[Y] has a cycle");

  auto [l1, l2, l3] = labels;
  for (int v = 0; v < n; ++v) {
    if (!is_big(g, v)) continue;
    int c = cls.color[v];
    if (c == l1 && !X[v]) fail(ErrorKind::PreconditionViolated, "condition (a): big class-" + std::to_string(l1) + " vertex outside X");
    if (c == l2 && !Y[v]) fail(ErrorKind::PreconditionViolated, "condition (a): big class-" + std::to_string(l2) + " vertex outside Y");
    if (c == l3 && !X[v] && !Y[v]) fail(ErrorKind::PreconditionViolated, "condition (a): big class-" + std::to_string(l3) + " vertex unassigned");
  }
  for (const auto& p : all_big_ended_small_paths(g, cls)) {
    auto inner = p.inner();
    size_t covered = 0;
    for (int w : inner)
      if (X[w] || Y[w]) ++covered;
    if (covered != 0 && covered != inner.size())
      fail(ErrorKind::PreconditionViolated, "condition (c): path interior partially covered");
  }

  if (big_count(g) <= 2) {
    push_trace(trace, "extend:base-case");
    PartitionConstraint c{mask_vec(X), mask_vec(Y)};
    TreePartition p = base_case_partition(g, c);
    return p;
  }

  auto acyclic_with = [&](const Mask& side, const std::vector<int>& add) {
    Mask m = side;
    for (int w : add) m[w] = 1;
    return induced_subgraph_acyclic_mask(g, m);
  };
  auto commit = [&](Mask& side, const std::vector<int>& add) {
    for (int w : add) side[w] = 1;
  };

  for (;;) {
    int v = -1;
    for (int w = 0; w < n; ++w)
      if (!X[w] && !Y[w]) {
        v = w;
        break;
      }
    if (v < 0) break;
    if (is_big(g, v)) fail(ErrorKind::PreconditionViolated, "big vertex left unassigned");

    bool done = false;

    // case (i): v on a maximum induced path with helpers c,d
    for (const auto& p : maximum_induced_paths_through(g, cls, v)) {
      auto helpers = path_helpers(g, cls, p);
      if (!helpers) continue;
      auto inner = p.inner();
      bool untouched = true;
      for (int w : inner)
        if (X[w] || Y[w]) untouched = false;
      if (!untouched) continue;
      int hc = (*helpers)[0], hd = (*helpers)[1];
      if (cls.color[hc] != cls.color[hd]) continue;
      int cx = X[hc] ? 0 : (Y[hc] ? 1 : -1);
      int dx = X[hd] ? 0 : (Y[hd] ? 1 : -1);
      if (cx < 0 || dx < 0) fail(ErrorKind::PreconditionViolated, "big helper unassigned");

      if (cx != dx) {
        // helpers split across the sides: path lives in classes l1,l2
        std::vector<int> toX, toY;
        bool classes_ok = true;
        for (int w : inner) {
          if (cls.color[w] == l1)
            toX.push_back(w);
          else if (cls.color[w] == l2)
            toY.push_back(w);
          else
            classes_ok = false;
        }
        if (!classes_ok) continue;
        if (!acyclic_with(X, toX) || !acyclic_with(Y, toY)) continue;
        commit(X, toX);
        commit(Y, toY);
        push_trace(trace, "extend:i-split@" + std::to_string(v));
        done = true;
        break;
      }

      Mask& same = (cx == 0) ? X : Y;
      Mask& other = (cx == 0) ? Y : X;
      if (path_in_induced(g, same, hc, hd)) {
        // helpers already linked on their side: whole interior to the other side
        if (!acyclic_with(other, inner)) continue;
        commit(other, inner);
        push_trace(trace, std::string("extend:i-linked@") + std::to_string(v));
      } else {
        int e = *std::min_element(inner.begin(), inner.end());
        std::vector<int> rest;
        for (int w : inner)
          if (w != e) rest.push_back(w);
        if (!acyclic_with(same, {e}) || !acyclic_with(other, rest)) continue;
        commit(same, {e});
        commit(other, rest);
        push_trace(trace, std::string("extend:i-bridge@") + std::to_string(v));
      }
      done = true;
      break;
    }

    if (!done) {
      // case (ii): octahedral configuration
      auto cfg = octahedral_config(g, cls, v);
      if (cfg) {
        auto pair_of = [&](int w) -> std::array<int, 2> {
          for (int i = 0; i < 3; ++i)
            if (cfg->inner[i] == w) return {cfg->boundary[i], cfg->boundary[(i + 1) % 3]};
          fail(ErrorKind::CaseExhausted, "inner vertex not in configuration");
        };
        for (int mirror = 0; mirror < 2 && !done; ++mirror) {
          Mask& take2 = mirror == 0 ? X : Y;   // gets {x,z}
          Mask& take1 = mirror == 0 ? Y : X;   // gets {y}; x's boundary pair must sit here
          for (int r = 0; r < 3 && !done; ++r) {
            int x = cfg->inner[r];
            auto pr = pair_of(x);
            if (!take1[pr[0]] || !take1[pr[1]]) continue;
            std::vector<int> others;
            for (int w : cfg->inner)
              if (w != x) others.push_back(w);
            // either assignment of y,z works; fix z = smaller id
            int z = std::min(others[0], others[1]);
            int y = std::max(others[0], others[1]);
            if (!acyclic_with(take2, {x, z}) || !acyclic_with(take1, {y})) continue;
            commit(take2, {x, z});
            commit(take1, {y});
            push_trace(trace, "extend:ii@" + std::to_string(v));
            done = true;
          }
        }
      }
    }

    if (!done)
      fail(ErrorKind::CaseExhausted,
           "no proof case applies to small vertex " + std::to_string(v));
  }

  TreePartition p{mask_vec(X), mask_vec(Y)};
  if (!induced_subgraph_acyclic_mask(g, X) || !induced_subgraph_acyclic_mask(g, Y) ||
      !side_connected(g, X) || !side_connected(g, Y))
    fail(ErrorKind::NotATree, "extension finished without two trees");
  return p;
}

TreePartition corollary_partition(const PlaneTriangulation& g, const VertexClassification& cls,
                                  const std::vector<int>& X, const std::vector<int>& Y,
                                  std::vector<std::string>* trace) {
  for (int v : X)
    if (!is_big(g, v)) fail(ErrorKind::PreconditionViolated, "X contains a small vertex");
  for (int v : Y)
    if (!is_big(g, v)) fail(ErrorKind::PreconditionViolated, "Y contains a small vertex");
  SeedSets seeds;
  seeds.X = X;
  seeds.Y = Y;
  seeds.case_label = "corollary";
  return extend_seed(g, cls, seeds, {1, 2, 3}, trace);
}

// ---------------------------------------------------------------------------
// seed case tables
// ---------------------------------------------------------------------------

namespace {

// Case-table context: `sym` maps case classes (the classes as written in the
// case labels) to actual color labels. Every delegated symmetry is a
// composition recorded here; formulas below are written in case classes.
struct Ctx {
  const PlaneTriangulation& g;
  const VertexClassification& cls;
  std::array<int, 3> sym{1, 2, 3};

  int actual(int cc) const { return sym[cc - 1]; }
  int ccol(int v) const {
    for (int i = 1; i <= 3; ++i)
      if (sym[i - 1] == cls.color[v]) return i;
    fail(ErrorKind::PreconditionViolated, "bad color");
  }
  bool big(int v) const { return is_big(g, v); }
  bool inB(int v, int cc) const { return big(v) && ccol(v) == cc; }
  bool inS(int v, int cc) const { return !big(v) && ccol(v) == cc; }
  const std::vector<int>& B(int cc) const { return cls.big[actual(cc) - 1]; }
  const std::vector<int>& S(int cc) const { return cls.small[actual(cc) - 1]; }
  Mask class_pair_mask(int c1, int c2) const {
    Mask m(g.vertex_count(), 0);
    for (int v : B(c1)) m[v] = 1;
    for (int v : B(c2)) m[v] = 1;
    return m;
  }
};

struct Build {
  const Ctx& ctx;
  Mask X, Y;
  std::optional<int> v;
  std::array<int, 3> perm{1, 2, 3};  // in case classes
  std::string label;

  explicit Build(const Ctx& c, std::string lab)
      : ctx(c), X(c.g.vertex_count(), 0), Y(c.g.vertex_count(), 0), label(std::move(lab)) {}

  Build& xB(int cc) { for (int w : ctx.B(cc)) X[w] = 1; return *this; }
  Build& yB(int cc) { for (int w : ctx.B(cc)) Y[w] = 1; return *this; }
  Build& x(int w) { X[w] = 1; return *this; }
  Build& y(int w) { Y[w] = 1; return *this; }
  Build& x(const std::vector<int>& ws) { for (int w : ws) X[w] = 1; return *this; }
  Build& y(const std::vector<int>& ws) { for (int w : ws) Y[w] = 1; return *this; }
  Build& not_x(int w) { X[w] = 0; return *this; }
  Build& not_y(int w) { Y[w] = 0; return *this; }
  Build& except(int w, std::array<int, 3> case_perm) {
    v = w;
    perm = case_perm;
    return *this;
  }
  Build& form2(std::array<int, 3> case_perm) {
    v.reset();
    perm = case_perm;
    return *this;
  }

  SeedSets finish() const {
    SeedSets s;
    s.X = mask_vec(X);
    s.Y = mask_vec(Y);
    s.v = v;
    s.perm = {ctx.actual(perm[0]), ctx.actual(perm[1]), ctx.actual(perm[2])};
    s.case_label = label;
    return s;
  }
};

std::vector<int> path_minus(const InducedPath& p, int w) {
  std::vector<int> out;
  for (int x : p.vertices)
    if (x != w) out.push_back(x);
  return out;
}

std::vector<int> path_class_small(const Ctx& ctx, const InducedPath& p, int cc) {
  std::vector<int> out;
  for (int x : p.vertices)
    if (ctx.inS(x, cc)) out.push_back(x);
  return out;
}

std::vector<int> path_minus_bigclass(const Ctx& ctx, const InducedPath& p, int cc) {
  std::vector<int> out;
  for (int x : p.vertices)
    if (!ctx.inB(x, cc)) out.push_back(x);
  return out;
}

// Helper of p distinct from `known`; helpers carry the class of neither
// endpoint chain color.
std::optional<int> other_helper(const Ctx& ctx, const InducedPath& p, int known) {
  auto h = path_helpers(ctx.g, ctx.cls, p);
  if (!h) return std::nullopt;
  if ((*h)[0] == known) return (*h)[1];
  if ((*h)[1] == known) return (*h)[0];
  return std::nullopt;
}

// P-candidates for a small vertex, deterministic order; paths avoiding
// `prefer_avoid` first when set (the (alpha,2)->(alpha,1) style redirects).
std::vector<InducedPath> p_candidates(const Ctx& ctx, int s, int prefer_avoid = -1) {
  auto all = maximum_induced_paths_through(ctx.g, ctx.cls, s);
  if (prefer_avoid >= 0)
    std::stable_sort(all.begin(), all.end(), [&](const InducedPath& a, const InducedPath& b) {
      return !a.contains(prefer_avoid) && b.contains(prefer_avoid);
    });
  return all;
}

enum class SeedMode { edge_avoid, through };

// Side condition of the seed tables: edge_avoid wants {a,b} on one side with c on
// the other; through wants {a,b,c} on one side.
bool side_condition_ok(const Ctx& ctx, const SeedSets& s, const PathABC& abc, SeedMode mode) {
  Mask X = make_mask(ctx.g.vertex_count(), s.X), Y = make_mask(ctx.g.vertex_count(), s.Y);
  if (mode == SeedMode::through)
    return (X[abc.a] && X[abc.b] && X[abc.c]) || (Y[abc.a] && Y[abc.b] && Y[abc.c]);
  return (X[abc.a] && X[abc.b] && Y[abc.c]) || (Y[abc.a] && Y[abc.b] && X[abc.c]);
}

std::optional<SeedSets> validated(const Ctx& ctx, const Build& b, const PathABC& abc,
                                  SeedMode mode) {
  SeedSets s = b.finish();
  try {
    check_seed_conditions(ctx.g, ctx.cls, s);
  } catch (const Error&) {
    return std::nullopt;
  }
  if (!side_condition_ok(ctx, s, abc, mode)) return std::nullopt;
  return s;
}

// ---- edge-avoid cases (edge ab in one side, c in the other) ----------------

// (alpha): a,c in B1, b in B2.
std::optional<SeedSets> l22_alpha(const Ctx& ctx, const PathABC& abc) {
  Build b(ctx, "avoid(alpha)");
  b.xB(1).xB(2).not_x(abc.c).yB(3).y(abc.c).except(abc.c, {2, 1, 3});
  return validated(ctx, b, abc, SeedMode::edge_avoid);
}

// (beta): a,c in B2, b in B1. Same sets, v = c in B2.
std::optional<SeedSets> l22_beta(const Ctx& ctx, const PathABC& abc) {
  Build b(ctx, "avoid(beta)");
  b.xB(1).xB(2).not_x(abc.c).yB(3).y(abc.c).except(abc.c, {1, 2, 3});
  return validated(ctx, b, abc, SeedMode::edge_avoid);
}

// (gamma): a,c in B2, b in B3; edge ab ends up in Y.
std::optional<SeedSets> l22_gamma(const Ctx& ctx, const PathABC& abc) {
  Build b(ctx, "avoid(gamma)");
  b.xB(1).xB(2).not_x(abc.a).yB(3).y(abc.a).except(abc.a, {1, 2, 3});
  return validated(ctx, b, abc, SeedMode::edge_avoid);
}

// (alpha,1): a,c in S1, b in B2, b not on P_a.
std::optional<SeedSets> l22_alpha1(const Ctx& ctx, const PathABC& abc, const InducedPath& pa,
                                   const InducedPath& pc) {
  auto d = other_helper(ctx, pa, abc.b);
  if (!d || !ctx.inB(*d, 2)) return std::nullopt;
  // at most one b-d path inside B1 u B2; e = its B1 vertex next to b
  std::optional<int> e;
  if (auto bd = path_in_induced(ctx.g, ctx.class_pair_mask(1, 2), abc.b, *d))
    e = (*bd)[1];
  bool same = pa.vertices == pc.vertices;

  Build b(ctx, same ? "avoid(alpha,1)/Pa=Pc" : (pc.contains(abc.b) ? "avoid(alpha,1)/b-on-Pc" : "avoid(alpha,1)"));
  b.xB(1).xB(2).x(abc.a);
  b.yB(3).y(path_minus(pa, abc.a));
  if (same) {
    // Y = B3 u V(P_a - a) u {e}
  } else if (pc.contains(abc.b)) {
    b.x(path_minus(pc, abc.c));
    b.y(abc.c);
  } else {
    b.y(path_minus_bigclass(ctx, pc, 1));
  }
  if (e) {
    b.not_x(*e);
    b.y(*e);
    b.except(*e, {2, 1, 3});
  } else {
    b.form2({1, 2, 3});
  }
  return validated(ctx, b, abc, SeedMode::edge_avoid);
}

// (alpha,2): a,c in S1, b in B2, b on P_a (P_a length >= 3).
std::optional<SeedSets> l22_alpha2(const Ctx& ctx, const PathABC& abc, const InducedPath& pa,
                                   const InducedPath& pc) {
  std::optional<int> d;
  for (int w : pa.vertices)
    if (ctx.inS(w, 2)) {
      d = w;
      break;
    }
  if (!d) return std::nullopt;
  Build b(ctx, pc.contains(abc.b) ? "avoid(alpha,2)/b-on-Pc" : "avoid(alpha,2)");
  b.xB(1).xB(2).x(path_minus(pa, *d));
  if (pc.contains(abc.b)) {
    b.x(path_minus(pc, abc.c)).yB(3).y(abc.c).y(*d);
  } else {
    b.yB(3).y(*d).y(path_minus_bigclass(ctx, pc, 1));
  }
  b.form2({1, 2, 3});
  return validated(ctx, b, abc, SeedMode::edge_avoid);
}

// (alpha,3): a,c in V1, b in S2.
std::optional<SeedSets> l22_alpha3(const Ctx& ctx, const PathABC& abc, const InducedPath& pb) {
  bool a_on = pb.contains(abc.a), c_on = pb.contains(abc.c);
  if (!a_on && !c_on) {
    Build b(ctx, "avoid(alpha,3)");
    b.xB(1).not_x(abc.c).xB(2).x(path_class_small(ctx, pb, 2));
    b.yB(3).y(abc.c).y(path_class_small(ctx, pb, 3));
    if (ctx.inB(abc.c, 1))
      b.except(abc.c, {2, 1, 3});
    else
      b.form2({1, 2, 3});
    return validated(ctx, b, abc, SeedMode::edge_avoid);
  }
  if (a_on && c_on) {
    Build b(ctx, "avoid(alpha,3)/on-Pb");
    b.xB(2).xB(1).x(pb.vertices).not_x(abc.c).yB(3).y(abc.c);
    if (ctx.inB(abc.c, 1))
      b.except(abc.c, {2, 1, 3});
    else
      b.form2({1, 2, 3});
    return validated(ctx, b, abc, SeedMode::edge_avoid);
  }
  return std::nullopt;
}

// (alpha,4): a in B1, b in B2, c in S1.
std::optional<SeedSets> l22_alpha4(const Ctx& ctx, const PathABC& abc, const InducedPath& pc) {
  Build b(ctx, pc.contains(abc.b) ? "avoid(alpha,4)/b-on-Pc" : "avoid(alpha,4)");
  b.xB(1).xB(2);
  if (pc.contains(abc.b)) {
    b.x(path_minus(pc, abc.c)).yB(3).y(abc.c);
  } else {
    b.yB(3).y(path_minus_bigclass(ctx, pc, 1));
  }
  b.form2({1, 2, 3});
  return validated(ctx, b, abc, SeedMode::edge_avoid);
}

// (alpha,5): a in S1, b in B2, c in B1; edge ab in Y.
std::optional<SeedSets> l22_alpha5(const Ctx& ctx, const PathABC& abc, const InducedPath& pa) {
  Build b(ctx, pa.contains(abc.b) ? "avoid(alpha,5)/b-on-Pa" : "avoid(alpha,5)");
  b.xB(1).xB(3);
  if (pa.contains(abc.b)) {
    b.yB(2).y(path_minus_bigclass(ctx, pa, 1));
  } else {
    b.x(path_minus(pa, abc.a)).yB(2).y(abc.a);
  }
  b.form2({1, 3, 2});
  return validated(ctx, b, abc, SeedMode::edge_avoid);
}

// (beta,1): a in S2, b in B1, c in B2.
std::optional<SeedSets> l22_beta1(const Ctx& ctx, const PathABC& abc, const InducedPath& pa) {
  if (!pa.contains(abc.b)) {
    // exactly one end of P_a lies in B3
    int d = -1;
    int cnt = 0;
    for (int w : {pa.end_a(), pa.end_b()})
      if (ctx.inB(w, 3)) {
        d = w;
        ++cnt;
      }
    if (cnt != 1) return std::nullopt;
    Build b(ctx, "avoid(beta,1)");
    b.xB(1).xB(3).not_x(d).x(abc.a).yB(2).y(path_minus(pa, abc.a)).except(d, {1, 3, 2});
    return validated(ctx, b, abc, SeedMode::edge_avoid);
  }
  std::optional<int> d;
  for (int w : pa.vertices)
    if (ctx.inS(w, 1)) {
      d = w;
      break;
    }
  if (!d) return std::nullopt;
  auto link = path_in_induced(ctx.g, ctx.class_pair_mask(1, 2), pa.end_a(), pa.end_b());
  Build b(ctx, link ? "avoid(beta,1)/b-on-Pa" : "avoid(beta,1)/b-on-Pa-unlinked");
  b.xB(1).xB(2).not_x(abc.c);
  if (link) {
    b.x(path_minus(pa, *d)).yB(3).y(abc.c).y(*d);
  } else {
    b.x(pa.vertices).yB(3).y(abc.c);
  }
  b.except(abc.c, {1, 2, 3});
  return validated(ctx, b, abc, SeedMode::edge_avoid);
}

// (gamma,1): a,c in S2, b in B3.
std::optional<SeedSets> l22_gamma1(const Ctx& ctx, const PathABC& abc, const InducedPath& pa,
                                   const InducedPath& pc) {
  bool on_a = pa.contains(abc.b), on_c = pc.contains(abc.b);
  bool same = pa.vertices == pc.vertices;
  if (on_a && on_c) {
    auto hs = path_helpers(ctx.g, ctx.cls, pc);
    if (!hs) return std::nullopt;
    for (int d : *hs) {
      if (!ctx.inB(d, 1)) continue;
      Build b(ctx, "avoid(gamma,1)/b-on-both");
      b.xB(1).xB(2).x(path_class_small(ctx, pc, 2)).not_x(d);
      b.yB(3).y(d).y(path_minus_bigclass(ctx, pa, 2)).y(path_class_small(ctx, pc, 3));
      b.except(d, {2, 1, 3});
      if (auto s = validated(ctx, b, abc, SeedMode::edge_avoid)) return s;
    }
    return std::nullopt;
  }
  if (!on_a && on_c) {
    int d = -1, cnt = 0;
    for (int w : {pc.end_a(), pc.end_b()})
      if (ctx.inB(w, 2)) {
        d = w;
        ++cnt;
      }
    if (cnt != 1) return std::nullopt;
    Build b(ctx, "avoid(gamma,1)/b-on-Pc");
    b.xB(1).xB(2).x(path_minus(pa, abc.a)).x(abc.c).not_x(d);
    b.yB(3).y(abc.a).y(path_minus(pc, abc.c)).except(d, {1, 2, 3});
    return validated(ctx, b, abc, SeedMode::edge_avoid);
  }
  if (on_a && !on_c) {
    std::optional<int> d;
    for (int w : pc.vertices)
      if (ctx.inS(w, 1)) {
        d = w;
        break;
      }
    if (!d) return std::nullopt;
    Build b(ctx, "avoid(gamma,1)/b-on-Pa");
    b.xB(1).xB(2).x(path_minus(pc, *d));
    b.yB(3).y(*d).y(path_minus_bigclass(ctx, pa, 2)).form2({1, 2, 3});
    return validated(ctx, b, abc, SeedMode::edge_avoid);
  }
  if (same) {
    Build b(ctx, "avoid(gamma,1)/Pa=Pc");
    b.xB(1).xB(2).x(path_minus(pa, abc.a)).yB(3).y(abc.a).form2({1, 2, 3});
    return validated(ctx, b, abc, SeedMode::edge_avoid);
  }
  std::optional<int> d;
  for (int w : pc.vertices)
    if (ctx.inS(w, 1)) {
      d = w;
      break;
    }
  if (!d) return std::nullopt;
  Build b(ctx, "avoid(gamma,1)/off-both");
  b.xB(1).xB(2).x(path_minus(pa, abc.a)).x(path_minus(pc, *d));
  b.yB(3).y(abc.a).y(*d).form2({1, 2, 3});
  return validated(ctx, b, abc, SeedMode::edge_avoid);
}

// (gamma,2): a,c in V2, b in S3; edge ab in Y.
std::optional<SeedSets> l22_gamma2(const Ctx& ctx, const PathABC& abc, const InducedPath& pb) {
  bool a_on = pb.contains(abc.a), c_on = pb.contains(abc.c);
  if (!a_on && !c_on) {
    Build b(ctx, "avoid(gamma,2)");
    b.xB(1).xB(2).not_x(abc.a).x(path_class_small(ctx, pb, 1));
    b.yB(3).y(abc.a).y(path_class_small(ctx, pb, 3));
    if (ctx.inB(abc.a, 2))
      b.except(abc.a, {1, 2, 3});
    else
      b.form2({1, 2, 3});
    return validated(ctx, b, abc, SeedMode::edge_avoid);
  }
  if (a_on && c_on) {
    int d = -1, cnt = 0;
    for (int w : {pb.end_a(), pb.end_b()})
      if (ctx.inB(w, 2)) {
        d = w;
        ++cnt;
      }
    if (cnt != 1) return std::nullopt;
    if (d != abc.c) {
      Build b(ctx, "avoid(gamma,2)/on-Pb");
      b.xB(1).xB(2).not_x(d).x(abc.c).yB(3).y(path_minus(pb, abc.c)).except(d, {1, 2, 3});
      return validated(ctx, b, abc, SeedMode::edge_avoid);
    }
    Build b(ctx, "avoid(gamma,2)/on-Pb-d=c");
    b.xB(1).xB(2).yB(3).y(path_minus(pb, abc.c)).form2({1, 2, 3});
    return validated(ctx, b, abc, SeedMode::edge_avoid);
  }
  return std::nullopt;
}

// (gamma,3): a in B2, b in B3, c in S2; edge ab in Y.
std::optional<SeedSets> l22_gamma3(const Ctx& ctx, const PathABC& abc, const InducedPath& pc) {
  if (pc.contains(abc.b)) {
    Build b(ctx, "avoid(gamma,3)/b-on-Pc");
    b.xB(1).xB(3).not_x(abc.b).x(abc.c).yB(2).y(path_minus(pc, abc.c)).except(abc.b, {1, 3, 2});
    return validated(ctx, b, abc, SeedMode::edge_avoid);
  }
  std::optional<int> d;
  for (int w : pc.vertices)
    if (ctx.inS(w, 1)) {
      d = w;
      break;
    }
  if (!d) return std::nullopt;
  auto link = path_in_induced(ctx.g, ctx.class_pair_mask(1, 2), pc.end_a(), pc.end_b());
  Build b(ctx, link ? "avoid(gamma,3)" : "avoid(gamma,3)/unlinked");
  b.xB(1).xB(2);
  if (link)
    b.x(path_minus(pc, *d)).yB(3).y(abc.a).y(*d);
  else
    b.x(pc.vertices).yB(3).y(abc.a);
  b.not_x(abc.a);  // a may be an end of P_c; the removal must come last
  b.except(abc.a, {1, 2, 3});
  return validated(ctx, b, abc, SeedMode::edge_avoid);
}

// ---- path-through cases (path abc inside one side) --------------------------

std::optional<SeedSets> l23_shared_far_end(const Ctx& ctx, const PathABC& abc,
                                           const InducedPath& pa, const InducedPath& pc,
                                           const char* label);

std::optional<SeedSets> l23_alpha_beta(const Ctx& ctx, const PathABC& abc, const char* label) {
  Build b(ctx, label);
  b.xB(1).xB(3).yB(2).form2({1, 3, 2});
  return validated(ctx, b, abc, SeedMode::through);
}

std::optional<SeedSets> l23_gamma_big(const Ctx& ctx, const PathABC& abc) {
  Build b(ctx, "thru(gamma)");
  b.xB(1).xB(2).not_x(abc.b).yB(3).y(abc.b).except(abc.b, {1, 2, 3});
  return validated(ctx, b, abc, SeedMode::through);
}

// (alpha,1): a,c in S1, b in B3.
std::optional<SeedSets> l23_alpha1(const Ctx& ctx, const PathABC& abc, const InducedPath& pa,
                                   const InducedPath& pc) {
  bool on_a = pa.contains(abc.b), on_c = pc.contains(abc.b);
  bool same = pa.vertices == pc.vertices;
  if (!on_a && !on_c && !same) {
    Build b(ctx, "thru(alpha,1)");
    b.xB(1).xB(2).x(path_minus(pa, abc.a)).x(path_minus(pc, abc.c));
    b.yB(3).y(abc.a).y(abc.c).form2({1, 2, 3});
    return validated(ctx, b, abc, SeedMode::through);
  }
  if (on_a && on_c) {
    Build b(ctx, "thru(alpha,1)/b-on-both");
    b.xB(1).xB(2).yB(3).y(path_minus_bigclass(ctx, pa, 1)).y(path_minus_bigclass(ctx, pc, 1));
    b.form2({1, 2, 3});
    if (auto s = validated(ctx, b, abc, SeedMode::through)) return s;
    return l23_shared_far_end(ctx, abc, pa, pc, "thru(alpha,1)/shared-far-end");
  }
  if (!on_a && on_c) {
    Build b(ctx, "thru(alpha,1)/b-on-Pc");
    b.xB(1).xB(2).x(path_minus(pa, abc.a));
    b.yB(3).y(abc.a).y(path_minus_bigclass(ctx, pc, 1)).form2({1, 2, 3});
    return validated(ctx, b, abc, SeedMode::through);
  }
  if (!on_a && same) {
    auto d = other_helper(ctx, pa, abc.b);
    if (!d || !ctx.inB(*d, 3)) return std::nullopt;
    Build b(ctx, "thru(alpha,1)/Pa=Pc");
    b.xB(1).xB(3).not_x(*d).x(path_class_small(ctx, pa, 1));
    b.yB(2).y(*d).y(path_class_small(ctx, pa, 2)).except(*d, {1, 3, 2});
    return validated(ctx, b, abc, SeedMode::through);
  }
  return std::nullopt;
}

// (alpha,2): a,c in V1, b in S3.
std::optional<SeedSets> l23_alpha2(const Ctx& ctx, const PathABC& abc, const InducedPath& pb) {
  bool a_on = pb.contains(abc.a), c_on = pb.contains(abc.c);
  if (!a_on && !c_on) {
    int d = -1, cnt = 0;
    for (int w : {pb.end_a(), pb.end_b()})
      if (ctx.inB(w, 2)) {
        d = w;
        ++cnt;
      }
    if (cnt != 1) return std::nullopt;
    Build b(ctx, "thru(alpha,2)");
    b.xB(1).xB(2).not_x(d).x(abc.b).yB(3).y(path_minus(pb, abc.b)).except(d, {1, 2, 3});
    return validated(ctx, b, abc, SeedMode::through);
  }
  if (a_on && c_on) {
    std::vector<int> b3_ends;
    for (int w : {pb.end_a(), pb.end_b()})
      if (ctx.inB(w, 3)) b3_ends.push_back(w);
    if (b3_ends.empty()) return std::nullopt;
    for (int d : b3_ends) {
      Build b(ctx, "thru(alpha,2)/on-Pb");
      b.xB(1).xB(3).x(pb.vertices).not_x(d).yB(2).y(d).except(d, {1, 3, 2});
      if (auto s = validated(ctx, b, abc, SeedMode::through)) return s;
    }
  }
  return std::nullopt;
}

// (alpha,3): a in S1, b in B3, c in B1.
std::optional<SeedSets> l23_alpha3(const Ctx& ctx, const PathABC& abc, const InducedPath& pa) {
  if (!pa.contains(abc.b)) {
    if (!pa.contains(abc.c)) {
      Build b(ctx, "thru(alpha,3)");
      b.xB(1).not_x(abc.c).xB(2).x(path_minus(pa, abc.a));
      b.yB(3).y(abc.a).y(abc.c).except(abc.c, {2, 1, 3});
      return validated(ctx, b, abc, SeedMode::through);
    }
    // c may be the B1 end of P_a, where the plain sets would overlap;
    // use the helper-split form instead (as in (alpha,1)/Pa=Pc).
    auto d = other_helper(ctx, pa, abc.b);
    if (!d || !ctx.inB(*d, 3)) return std::nullopt;
    Build b(ctx, "thru(alpha,3)/c-on-Pa");
    b.xB(1).xB(3).not_x(*d).x(path_class_small(ctx, pa, 1));
    b.yB(2).y(*d).y(path_class_small(ctx, pa, 2)).except(*d, {1, 3, 2});
    return validated(ctx, b, abc, SeedMode::through);
  }
  int d = (pa.end_a() == abc.b) ? pa.end_b() : pa.end_a();
  if (!(ctx.inB(d, 1) || ctx.inB(d, 3))) return std::nullopt;
  Build b(ctx, "thru(alpha,3)/b-on-Pa");
  b.xB(1).xB(3).x(pa.vertices).not_x(d).yB(2).y(d);
  b.except(d, ctx.inB(d, 3) ? std::array<int, 3>{1, 3, 2} : std::array<int, 3>{3, 1, 2});
  return validated(ctx, b, abc, SeedMode::through);
}

// Both chains end at b and also share their far end w: the listed sets would
// close a cycle through the two chains. Ship w to the other side as the
// exceptional vertex and hang both interiors off b instead.
std::optional<SeedSets> l23_shared_far_end(const Ctx& ctx, const PathABC& abc,
                                           const InducedPath& pa, const InducedPath& pc,
                                           const char* label) {
  int w;
  if (pa.end_a() == abc.b)
    w = pa.end_b();
  else if (pa.end_b() == abc.b)
    w = pa.end_a();
  else
    return std::nullopt;
  if (!(pc.end_a() == w || pc.end_b() == w)) return std::nullopt;
  Build b(ctx, label);
  b.x(pa.inner()).x(pc.inner());
  if (ctx.inB(w, 3)) {
    b.xB(1).xB(3).not_x(w).yB(2).y(w).except(w, {1, 3, 2});
  } else if (ctx.inB(w, 1)) {
    b.xB(3).xB(1).not_x(w).yB(2).y(w).except(w, {3, 1, 2});
  } else {
    return std::nullopt;
  }
  return validated(ctx, b, abc, SeedMode::through);
}

// (beta,1): a,c in S3, b in B1; path abc in Y.
std::optional<SeedSets> l23_beta1(const Ctx& ctx, const PathABC& abc, const InducedPath& pa,
                                  const InducedPath& pc) {
  bool on_a = pa.contains(abc.b), on_c = pc.contains(abc.b);
  bool same = pa.vertices == pc.vertices;
  Build b(ctx, "thru(beta,1)");
  b.xB(1).not_x(abc.b).xB(2).yB(3);
  if (!on_a && on_c && !same) {
    b.label = "thru(beta,1)/b-on-Pc";
    b.x(path_class_small(ctx, pa, 2));
    b.y(path_class_small(ctx, pa, 3)).y(pc.vertices);
  } else if (!on_a && !on_c && !same) {
    b.label = "thru(beta,1)/off-both";
    b.x(path_class_small(ctx, pa, 2)).x(path_class_small(ctx, pc, 2));
    b.y(abc.b).y(path_class_small(ctx, pa, 3)).y(path_class_small(ctx, pc, 3));
  } else if (on_a && on_c) {
    b.label = "thru(beta,1)/b-on-both";
    b.y(pa.vertices).y(pc.vertices);
  } else if (!on_a && same) {
    b.label = "thru(beta,1)/Pa=Pc";
    b.x(path_class_small(ctx, pa, 2));
    b.y(abc.b).y(path_class_small(ctx, pa, 3));
  } else {
    return std::nullopt;
  }
  b.except(abc.b, {2, 1, 3});
  if (auto s = validated(ctx, b, abc, SeedMode::through)) return s;
  if (on_a && on_c)
    return l23_shared_far_end(ctx, abc, pa, pc, "thru(beta,1)/shared-far-end");
  return std::nullopt;
}

// (beta,2): a,c in V3, b in S1.
std::optional<SeedSets> l23_beta2(const Ctx& ctx, const PathABC& abc, const InducedPath& pb) {
  bool a_on = pb.contains(abc.a), c_on = pb.contains(abc.c);
  if (!a_on && !c_on) {
    Build b(ctx, "thru(beta,2)");
    b.xB(1).xB(2).x(path_minus(pb, abc.b)).yB(3).y(abc.b).form2({1, 2, 3});
    return validated(ctx, b, abc, SeedMode::through);
  }
  if (a_on && c_on) {
    Build b(ctx, "thru(beta,2)/on-Pb");
    b.xB(1).xB(2).yB(3).y(path_minus_bigclass(ctx, pb, 1)).form2({1, 2, 3});
    return validated(ctx, b, abc, SeedMode::through);
  }
  return std::nullopt;
}

// (beta,3): a in S3, b in B1, c in B3; path abc in Y.
std::optional<SeedSets> l23_beta3(const Ctx& ctx, const PathABC& abc, const InducedPath& pa) {
  if (pa.contains(abc.b)) {
    std::optional<int> d;
    for (int w : pa.vertices)
      if (ctx.inS(w, 1)) {
        d = w;
        break;
      }
    if (!d) return std::nullopt;
    Build b(ctx, "thru(beta,3)/b-on-Pa");
    b.xB(1).not_x(abc.b).xB(2).x(*d).yB(3).y(path_minus(pa, *d)).except(abc.b, {2, 1, 3});
    return validated(ctx, b, abc, SeedMode::through);
  }
  Build b(ctx, "thru(beta,3)");
  b.xB(1).not_x(abc.b).xB(2).x(path_class_small(ctx, pa, 2));
  b.yB(3).y(path_class_small(ctx, pa, 3)).y(abc.b).except(abc.b, {2, 1, 3});
  return validated(ctx, b, abc, SeedMode::through);
}

// Bounded completion for chain configurations the listed cases miss (for
// example, chains whose ends serve as helpers of the other path's chain). The
// big placement is fixed by condition (b) in its second form; the interiors
// of the chains through a, b, c are assigned by backtracking under
// acyclicity, with the side condition pinned up front. Results face the same
// mechanical audit as every listed case.
std::optional<SeedSets> chain_fallback(const Ctx& ctx, const PathABC& abc, SeedMode mode) {
  std::vector<int> pool;
  for (int w : {abc.a, abc.b, abc.c}) {
    if (ctx.big(w)) continue;
    for (const auto& p : maximum_induced_paths_through(ctx.g, ctx.cls, w))
      for (int q : p.inner())
        if (std::find(pool.begin(), pool.end(), q) == pool.end()) pool.push_back(q);
  }
  std::sort(pool.begin(), pool.end());
  if (pool.size() > 14) return std::nullopt;

  const char* label = mode == SeedMode::through ? "thru(chain-fallback)" : "avoid(chain-fallback)";
  for (int variant = 0; variant < 2; ++variant) {
    Build base(ctx, label);
    if (variant == 0)
      base.xB(1).xB(2).yB(3).form2({1, 2, 3});
    else
      base.xB(1).xB(3).yB(2).form2({1, 3, 2});
    if (!induced_subgraph_acyclic_mask(ctx.g, base.X)) continue;

    // required placements: the path lives on b's side; edge-avoid exiles c
    auto side_of = [&](int w) -> int {
      if (base.X[w]) return 0;
      if (base.Y[w]) return 1;
      return -1;
    };
    int path_side = side_of(abc.b);
    if (path_side < 0) continue;
    std::vector<int> need(ctx.g.vertex_count(), -1);
    need[abc.a] = path_side;
    need[abc.b] = path_side;
    need[abc.c] = (mode == SeedMode::through) ? path_side : 1 - path_side;
    bool feasible = true;
    for (int w : {abc.a, abc.b, abc.c}) {
      int have = side_of(w);
      if (have >= 0 && have != need[w]) feasible = false;
    }
    if (!feasible) continue;

    struct Bt {
      const Ctx& ctx;
      const std::vector<int>& pool;
      const std::vector<int>& need;
      const PathABC& abc;
      SeedMode mode;
      Build& b;
      std::optional<SeedSets> found;
      bool go(size_t i) {
        if (i == pool.size()) {
          found = validated(ctx, b, abc, mode);
          return found.has_value();
        }
        int w = pool[i];
        int forced = need[w];
        for (int s : {0, 1}) {
          if (forced >= 0 && s != forced) continue;
          Mask& side = s == 0 ? b.X : b.Y;
          side[w] = 1;
          if (induced_subgraph_acyclic_mask(ctx.g, side) && go(i + 1)) return true;
          side[w] = 0;
        }
        return false;
      }
    };
    // pinned vertices first (they may be big and already placed)
    bool ok = true;
    for (int w : {abc.a, abc.b, abc.c}) {
      if (side_of(w) >= 0) continue;
      Mask& side = need[w] == 0 ? base.X : base.Y;
      side[w] = 1;
      if (!induced_subgraph_acyclic_mask(ctx.g, side)) ok = false;
    }
    if (!ok) continue;
    std::vector<int> rest;
    for (int w : pool)
      if (!base.X[w] && !base.Y[w]) rest.push_back(w);
    Bt bt{ctx, rest, need, abc, mode, base, std::nullopt};
    if (bt.go(0)) return bt.found;
  }
  return std::nullopt;
}

// ---- dispatchers -----------------------------------------------------------

void check_seed_preconditions(const PlaneTriangulation& g, const VertexClassification& cls,
                               const PathABC& abc) {
  if (abc.a == abc.c || !g.has_edge(abc.a, abc.b) || !g.has_edge(abc.b, abc.c))
    fail(ErrorKind::NotAPath, "abc is not a path");
  if (cls.color[abc.a] != cls.color[abc.c]) fail(ErrorKind::NotSameColor, "a and c differ in color");
  if (big_count(g) < 3) fail(ErrorKind::PreconditionViolated, "fewer than three big vertices");
  std::vector<int> b12 = cls.big[0], b13 = cls.big[0];
  b12.insert(b12.end(), cls.big[1].begin(), cls.big[1].end());
  b13.insert(b13.end(), cls.big[2].begin(), cls.big[2].end());
  if (!induced_subgraph_acyclic(g, b12) || !induced_subgraph_acyclic(g, b13))
    fail(ErrorKind::HypothesisViolated, "G[B1 u B2] or G[B1 u B3] has a cycle");
  if (!is_four_connected(g)) fail(ErrorKind::PreconditionViolated, "graph is not 4-connected");
}

constexpr std::array<int, 3> kId{1, 2, 3};
constexpr std::array<int, 3> kSwap23{1, 3, 2};
constexpr std::array<int, 3> kSwap12{2, 1, 3};

std::array<int, 3> compose(const std::array<int, 3>& outer, const std::array<int, 3>& inner) {
  // resulting map: case class c -> outer[inner[c]-1]
  return {outer[inner[0] - 1], outer[inner[1] - 1], outer[inner[2] - 1]};
}

SeedSets seeds_edge_avoid_impl(const PlaneTriangulation& g, const VertexClassification& cls,
                               const PathABC& abc) {
  check_seed_preconditions(g, cls, abc);
  Ctx ctx{g, cls, kId};
  int s = 0, t = 0;
  auto recompute = [&] {
    for (int i = 1; i <= 3; ++i) {
      if (ctx.actual(i) == cls.color[abc.a]) s = i;
      if (ctx.actual(i) == cls.color[abc.b]) t = i;
    }
  };
  recompute();
  // normalize (s,t) by the 2<->3 symmetry of the hypothesis
  if ((s == 1 && t == 3) || (s == 3 && t == 1) || (s == 3 && t == 2)) {
    ctx.sym = kSwap23;
    recompute();
  }

  bool a_big = is_big(g, abc.a), b_big = is_big(g, abc.b), c_big = is_big(g, abc.c);
  std::optional<SeedSets> out;

  auto try_alpha_family = [&](Ctx fam) {
    // patterns with s=1, t=2 in fam's case classes
    if (!b_big) {
      for (const auto& pb : p_candidates(fam, abc.b))
        if ((out = l22_alpha3(fam, abc, pb))) return;
      return;
    }
    if (a_big && c_big) {
      out = l22_alpha(fam, abc);
      return;
    }
    if (a_big && !c_big) {
      for (const auto& pc : p_candidates(fam, abc.c))
        if ((out = l22_alpha4(fam, abc, pc))) return;
      return;
    }
    if (!a_big && c_big) {
      for (const auto& pa : p_candidates(fam, abc.a))
        if ((out = l22_alpha5(fam, abc, pa))) return;
      return;
    }
    // a,c small: (alpha,1) with P_a avoiding b when possible, else (alpha,2)
    for (const auto& pa : p_candidates(fam, abc.a, abc.b))
      for (const auto& pc : p_candidates(fam, abc.c)) {
        if (!pa.contains(abc.b))
          out = l22_alpha1(fam, abc, pa, pc);
        else
          out = l22_alpha2(fam, abc, pa, pc);
        if (out) return;
      }
  };

  if (s == 1 && t == 2) {
    try_alpha_family(ctx);
  } else if (s == 2 && t == 1) {
    if (b_big && !a_big && c_big) {
      for (const auto& pa : p_candidates(ctx, abc.a))
        if ((out = l22_beta1(ctx, abc, pa))) break;
    } else if (b_big && a_big && c_big) {
      out = l22_beta(ctx, abc);
    } else {
      // (beta,2): the (alpha,*) table under the 1<->2 swap
      Ctx fam = ctx;
      fam.sym = compose(ctx.sym, kSwap12);
      try_alpha_family(fam);
    }
  } else if (s == 2 && t == 3) {
    if (!b_big) {
      for (const auto& pb : p_candidates(ctx, abc.b))
        if ((out = l22_gamma2(ctx, abc, pb))) break;
    } else if (a_big && c_big) {
      out = l22_gamma(ctx, abc);
    } else if (a_big && !c_big) {
      for (const auto& pc : p_candidates(ctx, abc.c))
        if ((out = l22_gamma3(ctx, abc, pc))) break;
    } else if (!a_big && c_big) {
      // (gamma,4): the (alpha,5) sets after relabeling so the path reads
      // (S1, B2, B1) in case classes
      Ctx fam = ctx;
      fam.sym = compose(ctx.sym, std::array<int, 3>{2, 3, 1});
      for (const auto& pa : p_candidates(fam, abc.a))
        if ((out = l22_alpha5(fam, abc, pa))) break;
    } else {
      for (const auto& pa : p_candidates(ctx, abc.a))
        for (const auto& pc : p_candidates(ctx, abc.c)) {
          if ((out = l22_gamma1(ctx, abc, pa, pc))) goto done_g1;
        }
    done_g1:;
    }
  } else {
    fail(ErrorKind::CaseExhausted, "unreachable color pattern");
  }

  if (!out) out = chain_fallback(ctx, abc, SeedMode::edge_avoid);
  if (!out)
    fail(ErrorKind::CaseExhausted, "no edge-avoid case produced valid seeds for path " +
                                       std::to_string(abc.a) + "," + std::to_string(abc.b) + "," +
                                       std::to_string(abc.c));
  return *out;
}

SeedSets seeds_path_through_impl(const PlaneTriangulation& g, const VertexClassification& cls,
                                 const PathABC& abc) {
  check_seed_preconditions(g, cls, abc);
  Ctx ctx{g, cls, kId};
  int s = 0, t = 0;
  auto recompute = [&] {
    for (int i = 1; i <= 3; ++i) {
      if (ctx.actual(i) == cls.color[abc.a]) s = i;
      if (ctx.actual(i) == cls.color[abc.b]) t = i;
    }
  };
  recompute();
  // normalize to the listed families: alpha s=1,t=3; beta s=3,t=1; gamma s=3,t=2
  if ((s == 1 && t == 2) || (s == 2 && t == 1) || (s == 2 && t == 3)) {
    ctx.sym = kSwap23;
    recompute();
  }

  bool a_big = is_big(g, abc.a), b_big = is_big(g, abc.b), c_big = is_big(g, abc.c);
  std::optional<SeedSets> out;
  PathABC rev{abc.c, abc.b, abc.a};

  auto try_beta_family = [&](Ctx fam, const PathABC& pabc) {
    bool pa_big = is_big(g, pabc.a), pc_big = is_big(g, pabc.c);
    if (!b_big) {
      for (const auto& pb : p_candidates(fam, pabc.b))
        if ((out = l23_beta2(fam, pabc, pb))) return;
      return;
    }
    if (pa_big && pc_big) {
      out = l23_alpha_beta(fam, pabc, "thru(beta)");
      return;
    }
    if (!pa_big && pc_big) {
      for (const auto& pa : p_candidates(fam, pabc.a))
        if ((out = l23_beta3(fam, pabc, pa))) return;
      return;
    }
    if (pa_big && !pc_big) {
      PathABC r{pabc.c, pabc.b, pabc.a};
      for (const auto& pa : p_candidates(fam, r.a))
        if ((out = l23_beta3(fam, r, pa))) return;
      return;
    }
    for (const auto& pa : p_candidates(fam, pabc.a))
      for (const auto& pc : p_candidates(fam, pabc.c)) {
        if ((out = l23_beta1(fam, pabc, pa, pc))) return;
        PathABC r{pabc.c, pabc.b, pabc.a};
        if ((out = l23_beta1(fam, r, pc, pa))) return;
      }
  };

  if (s == 1 && t == 3) {
    if (!b_big) {
      for (const auto& pb : p_candidates(ctx, abc.b))
        if ((out = l23_alpha2(ctx, abc, pb))) break;
    } else if (a_big && c_big) {
      out = l23_alpha_beta(ctx, abc, "thru(alpha)");
    } else if (!a_big && c_big) {
      for (const auto& pa : p_candidates(ctx, abc.a))
        if ((out = l23_alpha3(ctx, abc, pa))) break;
    } else if (a_big && !c_big) {
      for (const auto& pa : p_candidates(ctx, rev.a))
        if ((out = l23_alpha3(ctx, rev, pa))) break;
    } else {
      for (const auto& pa : p_candidates(ctx, abc.a)) {
        for (const auto& pc : p_candidates(ctx, abc.c)) {
          if ((out = l23_alpha1(ctx, abc, pa, pc))) goto done_a1;
          if ((out = l23_alpha1(ctx, rev, pc, pa))) goto done_a1;
        }
      }
    done_a1:;
    }
  } else if (s == 3 && t == 1) {
    try_beta_family(ctx, abc);
  } else if (s == 3 && t == 2) {
    if (a_big && b_big && c_big) {
      out = l23_gamma_big(ctx, abc);
    } else {
      // gamma with a small vertex: the beta table under the 1<->2 swap
      Ctx fam = ctx;
      fam.sym = compose(ctx.sym, kSwap12);
      try_beta_family(fam, abc);
    }
  } else {
    fail(ErrorKind::CaseExhausted, "unreachable color pattern");
  }

  if (!out) out = chain_fallback(ctx, abc, SeedMode::through);
  if (!out)
    fail(ErrorKind::CaseExhausted, "no through case produced valid seeds for path " +
                                       std::to_string(abc.a) + "," + std::to_string(abc.b) + "," +
                                       std::to_string(abc.c));
  return *out;
}

}  // namespace

SeedSets seeds_edge_avoid(const PlaneTriangulation& g, const VertexClassification& cls,
                          const PathABC& abc) {
  return seeds_edge_avoid_impl(g, cls, abc);
}

SeedSets seeds_path_through(const PlaneTriangulation& g, const VertexClassification& cls,
                            const PathABC& abc) {
  return seeds_path_through_impl(g, cls, abc);
}

// ---------------------------------------------------------------------------
// full drivers
// ---------------------------------------------------------------------------

namespace {

struct DriverEnv {
  PlaneTriangulation const* g;
  Coloring col;
  VertexClassification cls;        // original labels
  VertexClassification cls_canon;  // relabeled so pairs {1,2},{1,3} are acyclic
};

DriverEnv make_env(const PlaneTriangulation& g) {
  DriverEnv env;
  env.g = &g;
  env.col = three_color(g);
  env.cls = classify(g, env.col);
  auto rep = check_hypothesis(g, env.cls);
  if (!rep.holds()) {
    std::ostringstream os;
    os << "acyclicity hypothesis fails under all 6 label permutations";
    if (!rep.failures.empty()) {
      os << "; cycle in B" << rep.failures[0].pair[0] << "uB" << rep.failures[0].pair[1] << ":";
      for (int v : rep.failures[0].cycle) os << " " << v;
    }
    fail(ErrorKind::HypothesisViolated, os.str());
  }
  // satisfying permutation (i,j,k): class i plays color 1, j color 2, k color 3
  auto p = rep.satisfying.front();
  std::array<int, 3> relabel{};
  for (int c = 1; c <= 3; ++c)
    for (int r = 0; r < 3; ++r)
      if (p[r] == c) relabel[c - 1] = r + 1;
  env.cls_canon = env.cls.relabeled(g, relabel);
  return env;
}

TreePartition oriented(TreePartition p, const std::vector<int>& want_S) {
  int n = 0;
  for (int v : p.S) n = std::max(n, v + 1);
  for (int v : p.T) n = std::max(n, v + 1);
  Mask s_mask(n, 0);
  for (int v : p.S) s_mask[v] = 1;
  bool all_in_s = true, all_in_t = true;
  for (int v : want_S) {
    if (!s_mask[v]) all_in_s = false;
    if (s_mask[v]) all_in_t = false;
  }
  if (all_in_s) return p;
  if (all_in_t) return TreePartition{p.T, p.S};
  fail(ErrorKind::NotATree, "partition does not respect the requested side");
}

TreePartition through_driver(const PlaneTriangulation& g, const PathABC& abc,
                             std::vector<std::string>* trace);
TreePartition edge_avoid_driver(const PlaneTriangulation& g, const PathABC& abc,
                                std::vector<std::string>* trace);

struct PieceView {
  const SplitPiece* piece;
  std::vector<int> to_local;  // parent id -> local id or -1
};

PieceView view_of(const PlaneTriangulation& parent, const SplitPiece& piece) {
  PieceView v{&piece, std::vector<int>(parent.vertex_count(), -1)};
  for (size_t i = 0; i < piece.to_parent.size(); ++i) v.to_local[piece.to_parent[i]] = static_cast<int>(i);
  return v;
}

bool contains_all(const PieceView& v, std::initializer_list<int> parent_ids) {
  for (int p : parent_ids)
    if (v.to_local[p] < 0) return false;
  return true;
}

// Partition of a piece whose S-side meets the shared triangle exactly in
// `want_S_on_C` (parent ids). Constructive via an edge-avoid call on the
// triangle; exhaustive fallback if the constructive route errors out.
TreePartition solve_agreeing_piece(const PieceView& pv, const std::array<int, 3>& C,
                                   const std::vector<int>& want_S_on_C,
                                   std::vector<std::string>* trace) {
  const PlaneTriangulation& h = pv.piece->graph;
  std::vector<int> cs;  // local triangle ids
  for (int p : C) cs.push_back(pv.to_local[p]);
  std::vector<int> want_local;
  for (int p : want_S_on_C) want_local.push_back(pv.to_local[p]);

  try {
    if (want_local.size() == 2) {
      int u = want_local[0], v = want_local[1];
      int w = -1;
      for (int x : cs)
        if (x != u && x != v) w = x;
      TreePartition p = edge_avoid_driver(h, PathABC{u, v, w}, trace);
      return p;  // S contains {u,v}, w in T
    }
    if (want_local.size() == 1) {
      int u = want_local[0];
      std::vector<int> others;
      for (int x : cs)
        if (x != u) others.push_back(x);
      TreePartition p = edge_avoid_driver(h, PathABC{others[0], others[1], u}, trace);
      return TreePartition{p.T, p.S};  // swap: S side holds u only
    }
  } catch (const Error&) {
    push_trace(trace, "glue:fallback-exhaustive");
  }
  PartitionConstraint c;
  c.require_S = want_local;
  for (int x : cs)
    if (std::find(want_local.begin(), want_local.end(), x) == want_local.end())
      c.require_T.push_back(x);
  return base_case_partition(h, c);
}

TreePartition merge_pieces(const PlaneTriangulation& g, const PieceView& v1, const TreePartition& p1,
                           const PieceView& v2, const TreePartition& p2) {
  Mask s(g.vertex_count(), 0), t(g.vertex_count(), 0);
  for (int x : p1.S) s[v1.piece->to_parent[x]] = 1;
  for (int x : p1.T) t[v1.piece->to_parent[x]] = 1;
  for (int x : p2.S) s[v2.piece->to_parent[x]] = 1;
  for (int x : p2.T) t[v2.piece->to_parent[x]] = 1;
  for (int x = 0; x < g.vertex_count(); ++x)
    if (s[x] && t[x]) fail(ErrorKind::NotATree, "glued pieces disagree on the shared triangle");
  TreePartition out{mask_vec(s), mask_vec(t)};
  validate_tree_partition(g, out);
  return out;
}

// shared preamble: validates the path and the hypothesis, reports big count
struct Preflight {
  DriverEnv env;
  int bigs;
};

Preflight preflight(const PlaneTriangulation& g, const PathABC& abc) {
  if (abc.a == abc.c || abc.a == abc.b || abc.b == abc.c) fail(ErrorKind::NotAPath, "vertices not distinct");
  if (!g.has_edge(abc.a, abc.b) || !g.has_edge(abc.b, abc.c)) fail(ErrorKind::NotAPath, "ab or bc not an edge");
  Preflight pf{make_env(g), big_count(g)};
  return pf;
}

TreePartition through_driver(const PlaneTriangulation& g, const PathABC& abc,
                             std::vector<std::string>* trace) {
  Preflight pf = preflight(g, abc);
  if (pf.env.col.color[abc.a] != pf.env.col.color[abc.c])
    fail(ErrorKind::NotSameColor, "a and c differ in color");

  if (pf.bigs <= 2) {
    push_trace(trace, "through:base-case");
    TreePartition p = base_case_partition(g, PartitionConstraint{{abc.a, abc.b, abc.c}, {}});
    return oriented(std::move(p), {abc.a, abc.b, abc.c});
  }

  auto seps = separating_triangles(g);
  if (!seps.empty()) {
    std::sort(seps.begin(), seps.end(), [](const SeparatingTriangle& x, const SeparatingTriangle& y) {
      return x.cycle < y.cycle;
    });
    const auto& tri = seps.front();
    push_trace(trace, "through:split@" + std::to_string(tri.cycle[0]) + "," +
                          std::to_string(tri.cycle[1]) + "," + std::to_string(tri.cycle[2]));
    SplitResult sr = split_on_triangle(g, tri);
    PieceView v1 = view_of(g, sr.g1), v2 = view_of(g, sr.g2);

    auto solve_in = [&](const PieceView& host, const PieceView& other) {
      PathABC local{host.to_local[abc.a], host.to_local[abc.b], host.to_local[abc.c]};
      TreePartition ph = through_driver(host.piece->graph, local, trace);
      // does S meet the triangle in 1 or 2 vertices; never 0 or 3
      std::vector<int> want;
      Mask s_mask(host.piece->graph.vertex_count(), 0);
      for (int x : ph.S) s_mask[x] = 1;
      for (int p : tri.cycle)
        if (s_mask[host.to_local[p]]) want.push_back(p);
      TreePartition po = solve_agreeing_piece(other, tri.cycle, want, trace);
      TreePartition merged = merge_pieces(g, host, ph, other, po);
      return oriented(std::move(merged), {abc.a, abc.b, abc.c});
    };

    if (contains_all(v1, {abc.a, abc.b, abc.c})) return solve_in(v1, v2);
    if (contains_all(v2, {abc.a, abc.b, abc.c})) return solve_in(v2, v1);

    // ab and bc straddle the triangle: b on C, pick d on C with the color of a
    int d = -1;
    for (int p : tri.cycle)
      if (p != abc.b && pf.env.col.color[p] == pf.env.col.color[abc.a]) d = p;
    if (d < 0) fail(ErrorKind::CaseExhausted, "no triangle vertex shares the path's end color");
    const PieceView& host_ab = contains_all(v1, {abc.a, abc.b}) ? v1 : v2;
    const PieceView& host_bc = contains_all(v1, {abc.a, abc.b}) ? v2 : v1;
    if (!contains_all(host_ab, {abc.a, abc.b}) || !contains_all(host_bc, {abc.b, abc.c}))
      fail(ErrorKind::CaseExhausted, "path does not straddle the separating triangle cleanly");
    TreePartition p1, p2;
    try {
      p1 = through_driver(host_ab.piece->graph,
                          PathABC{host_ab.to_local[abc.a], host_ab.to_local[abc.b], host_ab.to_local[d]},
                          trace);
      p1 = oriented(std::move(p1),
                    {host_ab.to_local[abc.a], host_ab.to_local[abc.b], host_ab.to_local[d]});
    } catch (const Error&) {
      push_trace(trace, "glue:fallback-exhaustive");
      int w = -1;
      for (int p : tri.cycle)
        if (p != abc.b && p != d) w = p;
      p1 = base_case_partition(
          host_ab.piece->graph,
          PartitionConstraint{{host_ab.to_local[abc.a], host_ab.to_local[abc.b], host_ab.to_local[d]},
                              {host_ab.to_local[w]}});
    }
    try {
      p2 = through_driver(host_bc.piece->graph,
                          PathABC{host_bc.to_local[d], host_bc.to_local[abc.b], host_bc.to_local[abc.c]},
                          trace);
      p2 = oriented(std::move(p2),
                    {host_bc.to_local[d], host_bc.to_local[abc.b], host_bc.to_local[abc.c]});
    } catch (const Error&) {
      push_trace(trace, "glue:fallback-exhaustive");
      int w = -1;
      for (int p : tri.cycle)
        if (p != abc.b && p != d) w = p;
      p2 = base_case_partition(
          host_bc.piece->graph,
          PartitionConstraint{{host_bc.to_local[d], host_bc.to_local[abc.b], host_bc.to_local[abc.c]},
                              {host_bc.to_local[w]}});
    }
    TreePartition merged = merge_pieces(g, host_ab, p1, host_bc, p2);
    return oriented(std::move(merged), {abc.a, abc.b, abc.c});
  }

  // 4-connected with at least three big vertices: the seed case tables
  SeedSets seeds = seeds_path_through(g, pf.env.cls_canon, abc);
  push_trace(trace, "seeds:" + seeds.case_label);
  auto [i, j, k] = seeds.perm;
  TreePartition p = extend_seed(g, pf.env.cls_canon, seeds, {i, k, j}, trace);
  return oriented(std::move(p), {abc.a, abc.b, abc.c});
}

TreePartition edge_avoid_driver(const PlaneTriangulation& g, const PathABC& abc,
                                std::vector<std::string>* trace) {
  Preflight pf = preflight(g, abc);

  if (pf.env.col.color[abc.a] != pf.env.col.color[abc.c]) {
    // Reduce to the through property: c' is a face partner of edge bc other
    // than a; its color equals a's, and b,c',c form a triangle, so the tree
    // through {a,b,c'} cannot contain c.
    int f1 = g.face_of(abc.b, abc.c), f2 = g.face_of(abc.c, abc.b);
    int cprime = -1;
    for (int f : {f1, f2})
      for (int x : g.faces()[f])
        if (x != abc.b && x != abc.c && x != abc.a) {
          if (cprime < 0 || x < cprime) cprime = x;
        }
    if (cprime < 0) fail(ErrorKind::CaseExhausted, "no face partner for edge bc");
    push_trace(trace, "edge-avoid:via-through@" + std::to_string(cprime));
    TreePartition p = through_driver(g, PathABC{abc.a, abc.b, cprime}, trace);
    p = oriented(std::move(p), {abc.a, abc.b});
    Mask s_mask = make_mask(g.vertex_count(), p.S);
    if (s_mask[abc.c]) fail(ErrorKind::NotATree, "reduction failed to avoid c");
    return p;
  }

  if (pf.bigs <= 2) {
    push_trace(trace, "edge-avoid:base-case");
    TreePartition p = base_case_partition(g, PartitionConstraint{{abc.a, abc.b}, {abc.c}});
    return oriented(std::move(p), {abc.a, abc.b});
  }

  auto seps = separating_triangles(g);
  if (!seps.empty()) {
    std::sort(seps.begin(), seps.end(), [](const SeparatingTriangle& x, const SeparatingTriangle& y) {
      return x.cycle < y.cycle;
    });
    const auto& tri = seps.front();
    push_trace(trace, "edge-avoid:split@" + std::to_string(tri.cycle[0]) + "," +
                          std::to_string(tri.cycle[1]) + "," + std::to_string(tri.cycle[2]));
    SplitResult sr = split_on_triangle(g, tri);
    PieceView v1 = view_of(g, sr.g1), v2 = view_of(g, sr.g2);

    auto solve_in = [&](const PieceView& host, const PieceView& other) {
      PathABC local{host.to_local[abc.a], host.to_local[abc.b], host.to_local[abc.c]};
      TreePartition ph = edge_avoid_driver(host.piece->graph, local, trace);
      ph = oriented(std::move(ph), {local.a, local.b});
      std::vector<int> want;
      Mask s_mask(host.piece->graph.vertex_count(), 0);
      for (int x : ph.S) s_mask[x] = 1;
      for (int p : tri.cycle)
        if (s_mask[host.to_local[p]]) want.push_back(p);
      TreePartition po = solve_agreeing_piece(other, tri.cycle, want, trace);
      TreePartition merged = merge_pieces(g, host, ph, other, po);
      return oriented(std::move(merged), {abc.a, abc.b});
    };

    if (contains_all(v1, {abc.a, abc.b, abc.c})) return solve_in(v1, v2);
    if (contains_all(v2, {abc.a, abc.b, abc.c})) return solve_in(v2, v1);

    // edge ab inside one piece, c beyond the triangle: b on C
    int d = -1;
    for (int p : tri.cycle)
      if (p != abc.b && pf.env.col.color[p] == pf.env.col.color[abc.a]) d = p;
    if (d < 0) fail(ErrorKind::CaseExhausted, "no triangle vertex shares the path's end color");
    int w = -1;
    for (int p : tri.cycle)
      if (p != abc.b && p != d) w = p;
    const PieceView& host_ab = contains_all(v1, {abc.a, abc.b}) ? v1 : v2;
    const PieceView& host_c = contains_all(v1, {abc.a, abc.b}) ? v2 : v1;
    if (!contains_all(host_ab, {abc.a, abc.b}) || host_c.to_local[abc.c] < 0)
      fail(ErrorKind::CaseExhausted, "path does not straddle the separating triangle cleanly");
    TreePartition p1, p2;
    try {
      p1 = through_driver(host_ab.piece->graph,
                          PathABC{host_ab.to_local[abc.a], host_ab.to_local[abc.b], host_ab.to_local[d]},
                          trace);
      p1 = oriented(std::move(p1),
                    {host_ab.to_local[abc.a], host_ab.to_local[abc.b], host_ab.to_local[d]});
    } catch (const Error&) {
      push_trace(trace, "glue:fallback-exhaustive");
      p1 = base_case_partition(
          host_ab.piece->graph,
          PartitionConstraint{{host_ab.to_local[abc.a], host_ab.to_local[abc.b], host_ab.to_local[d]},
                              {host_ab.to_local[w]}});
    }
    try {
      p2 = edge_avoid_driver(host_c.piece->graph,
                             PathABC{host_c.to_local[d], host_c.to_local[abc.b], host_c.to_local[abc.c]},
                             trace);
      p2 = oriented(std::move(p2), {host_c.to_local[d], host_c.to_local[abc.b]});
    } catch (const Error&) {
      push_trace(trace, "glue:fallback-exhaustive");
      p2 = base_case_partition(host_c.piece->graph,
                               PartitionConstraint{{host_c.to_local[d], host_c.to_local[abc.b]},
                                                   {host_c.to_local[w], host_c.to_local[abc.c]}});
    }
    TreePartition merged = merge_pieces(g, host_ab, p1, host_c, p2);
    return oriented(std::move(merged), {abc.a, abc.b});
  }

  SeedSets seeds = seeds_edge_avoid(g, pf.env.cls_canon, abc);
  push_trace(trace, "seeds:" + seeds.case_label);
  auto [i, j, k] = seeds.perm;
  TreePartition p = extend_seed(g, pf.env.cls_canon, seeds, {i, k, j}, trace);
  p = oriented(std::move(p), {abc.a, abc.b});
  Mask s_mask = make_mask(g.vertex_count(), p.S);
  if (s_mask[abc.c]) fail(ErrorKind::NotATree, "seed extension failed to avoid c");
  return p;
}

}  // namespace

TreePartition partition_through(const PlaneTriangulation& g, const PathABC& abc,
                                std::vector<std::string>* trace) {
  TreePartition p = through_driver(g, abc, trace);
  if (!verify_property_2(g, abc, p)) fail(ErrorKind::NotATree, "output violates the through property");
  return p;
}

TreePartition partition_edge_avoid(const PlaneTriangulation& g, const PathABC& abc,
                                   std::vector<std::string>* trace) {
  TreePartition p = edge_avoid_driver(g, abc, trace);
  if (!verify_property_1(g, abc, p)) fail(ErrorKind::NotATree, "output violates the edge-avoid property");
  return p;
}

}  // namespace barnette
