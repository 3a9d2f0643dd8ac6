#include "graphs.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

#include "errors.hpp"

namespace latbar::graphs {

using exactalg::Int;
using exactalg::IntVec;

int Graph::edge_id(int u, int v) const {
  if (u < 0 || v < 0 || u >= n || v >= n) return -1;
  for (auto [x, e] : adj[u])
    if (x == v) return e;
  return -1;
}

Graph make_graph(int n, std::vector<std::pair<int, int>> edges) {
  if (n < 1) throw input_error("graph needs at least one vertex");
  Graph g;
  g.n = n;
  g.adj.resize(n);
  std::set<std::pair<int, int>> seen;
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) throw input_error("edge endpoint out of range");
    if (u == v) throw input_error("loops are not allowed");
    if (u > v) std::swap(u, v);
    if (!seen.insert({u, v}).second) throw input_error("repeated edge");
    int e = int(g.edges.size());
    g.edges.push_back({u, v});
    g.adj[u].push_back({v, e});
    g.adj[v].push_back({u, e});
  }
  std::vector<char> vis(n, 0);
  std::vector<int> bfs{0};
  vis[0] = 1;
  for (size_t i = 0; i < bfs.size(); ++i)
    for (auto [x, e] : g.adj[bfs[i]])
      if (!vis[x]) {
        vis[x] = 1;
        bfs.push_back(x);
      }
  if (int(bfs.size()) != n) throw input_error("graph must be connected");
  return g;
}

Graph cycle_graph(int n) {
  if (n < 3) throw input_error("cycle needs at least 3 vertices");
  std::vector<std::pair<int, int>> es;
  for (int i = 0; i + 1 < n; ++i) es.push_back({i, i + 1});
  es.push_back({n - 1, 0});
  return make_graph(n, es);
}

Graph complete_graph(int n) {
  if (n < 3) throw input_error("complete graph generator needs at least 3 vertices");
  std::vector<std::pair<int, int>> es;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) es.push_back({i, j});
  return make_graph(n, es);
}

Graph wheel_graph(int n) {
  if (n < 3) throw input_error("wheel needs a rim of at least 3 vertices");
  std::vector<std::pair<int, int>> es;
  for (int i = 0; i + 1 < n; ++i) es.push_back({i, i + 1});
  es.push_back({n - 1, 0});
  for (int i = 0; i < n; ++i) es.push_back({i, n});
  return make_graph(n + 1, es);
}

bool Walk::is_cycle() const {
  std::set<int> s(verts.begin(), verts.end());
  return s.size() == verts.size();
}

Walk walk_from_vertices(const Graph& g, const std::vector<int>& verts) {
  if (verts.size() < 3) throw input_error("closed walk needs at least 3 steps");
  Walk w;
  w.verts = verts;
  int s = int(verts.size());
  for (int k = 0; k < s; ++k) {
    int e = g.edge_id(verts[k], verts[(k + 1) % s]);
    if (e < 0) throw input_error("walk step is not an edge");
    w.edges.push_back(e);
  }
  return w;
}

Walk make_walk(const Graph& g, const std::vector<int>& edge_ids) {
  if (edge_ids.size() < 3) throw input_error("closed walk needs at least 3 steps");
  for (int e : edge_ids)
    if (e < 0 || e >= g.m()) throw input_error("edge id out of range");
  auto chain = [&](int start) -> std::optional<std::vector<int>> {
    std::vector<int> vs{start};
    int cur = start;
    for (int e : edge_ids) {
      auto [a, b] = g.edges[e];
      if (cur == a)
        cur = b;
      else if (cur == b)
        cur = a;
      else
        return std::nullopt;
      vs.push_back(cur);
    }
    if (cur != start) return std::nullopt;
    vs.pop_back();
    return vs;
  };
  auto [a0, b0] = g.edges[edge_ids[0]];
  for (int start : {std::min(a0, b0), std::max(a0, b0)})
    if (auto vs = chain(start)) {
      Walk w;
      w.edges = edge_ids;
      w.verts = *vs;
      return w;
    }
  throw input_error("edge sequence does not chain into a closed walk");
}

IntMat incidence_config(const Graph& g) {
  IntMat a(g.n, g.m());
  for (int e = 0; e < g.m(); ++e) {
    a.at(g.edges[e].first, e) = 1;
    a.at(g.edges[e].second, e) = 1;
  }
  return a;
}

Binomial binomial_of_walk(const Walk& w, const Graph& g) {
  if (!w.even()) throw input_error("walk binomial needs an even closed walk");
  std::vector<int> u(g.m(), 0);
  for (int k = 0; k < w.length(); ++k) u[w.edges[k]] += (k % 2 == 0) ? 1 : -1;
  std::vector<Int> vdeg(g.n, 0);
  for (int e = 0; e < g.m(); ++e)
    if (u[e] != 0) {
      vdeg[g.edges[e].first] += u[e];
      vdeg[g.edges[e].second] += u[e];
    }
  for (int v = 0; v < g.n; ++v)
    if (vdeg[v] != 0) throw inconsistency_error("walk binomial escapes the kernel");
  return Binomial{u};
}

namespace {

// Every cycle once: rooted at its smallest vertex, direction fixed by
// second vertex < last vertex.
struct CycleSearch {
  const Graph& g;
  std::vector<std::vector<int>> out;
  std::vector<int> path;
  std::vector<char> used;

  explicit CycleSearch(const Graph& gr) : g(gr), used(gr.n, 0) {}

  void dfs(int root) {
    int u = path.back();
    for (auto [x, e] : g.adj[u]) {
      if (x == root) {
        if (path.size() >= 3 && path[1] < path.back()) out.push_back(path);
      } else if (x > root && !used[x]) {
        used[x] = 1;
        path.push_back(x);
        dfs(root);
        path.pop_back();
        used[x] = 0;
      }
    }
  }

  std::vector<std::vector<int>> run() {
    for (int r = 0; r < g.n; ++r) {
      path.assign(1, r);
      used[r] = 1;
      dfs(r);
      used[r] = 0;
    }
    return out;
  }
};

std::vector<std::vector<int>> all_cycles(const Graph& g) {
  if (g.n > 22) throw resource_error("cycle enumeration needs at most 22 vertices");
  return CycleSearch(g).run();
}

bool chordless(const Graph& g, const std::vector<int>& cyc) {
  int k = int(cyc.size());
  for (int i = 0; i < k; ++i)
    for (int j = i + 2; j < k; ++j) {
      if (i == 0 && j == k - 1) continue;
      if (g.has_edge(cyc[i], cyc[j])) return false;
    }
  return true;
}

std::vector<int> rotate_to(const std::vector<int>& cyc, int v) {
  auto it = std::find(cyc.begin(), cyc.end(), v);
  std::vector<int> out(it, cyc.end());
  out.insert(out.end(), cyc.begin(), it);
  return out;
}

// Simple paths from `a` to any vertex of `target`, internal vertices outside
// `blocked` (which covers both cycles), reported via cb(interior, endpoint).
struct PathSearch {
  const Graph& g;
  const std::set<int>& target;
  std::vector<char> blocked;
  std::vector<int> interior;

  template <class F>
  void dfs(int u, const F& cb) {
    for (auto [x, e] : g.adj[u]) {
      if (target.count(x)) {
        cb(interior, x);
      } else if (!blocked[x]) {
        blocked[x] = 1;
        interior.push_back(x);
        dfs(x, cb);
        interior.pop_back();
        blocked[x] = 0;
      }
    }
  }
};

}  // namespace

std::vector<CircuitWalk> enumerate_circuit_walks(const Graph& g) {
  auto cycles = all_cycles(g);
  std::vector<std::vector<int>> odd;
  std::map<Binomial, CircuitWalk> found;
  auto add = [&](const std::vector<int>& verts, WalkShape shape) {
    Walk w = walk_from_vertices(g, verts);
    Binomial b = binomial_of_walk(w, g).canonical();
    if (b.is_zero()) throw inconsistency_error("degenerate circuit walk");
    found.emplace(b, CircuitWalk{std::move(w), shape, b});
  };
  for (auto& c : cycles) {
    if (c.size() % 2 == 0)
      add(c, WalkShape::EvenCycle);
    else
      odd.push_back(c);
  }
  for (size_t i = 0; i < odd.size(); ++i)
    for (size_t j = i + 1; j < odd.size(); ++j) {
      std::set<int> v1(odd[i].begin(), odd[i].end());
      std::set<int> v2(odd[j].begin(), odd[j].end());
      std::vector<int> common;
      std::set_intersection(v1.begin(), v1.end(), v2.begin(), v2.end(), std::back_inserter(common));
      if (common.size() == 1) {
        auto verts = rotate_to(odd[i], common[0]);
        auto r2 = rotate_to(odd[j], common[0]);
        verts.insert(verts.end(), r2.begin(), r2.end());
        add(verts, WalkShape::TwoOddCyclesSharedVertex);
      } else if (common.empty()) {
        PathSearch ps{g, v2, std::vector<char>(g.n, 0), {}};
        for (int v : v1) ps.blocked[v] = 1;
        for (int v : v2) ps.blocked[v] = 1;
        for (int a : odd[i]) {
          ps.dfs(a, [&](const std::vector<int>& interior, int b) {
            auto verts = rotate_to(odd[i], a);
            verts.push_back(a);
            verts.insert(verts.end(), interior.begin(), interior.end());
            verts.push_back(b);
            auto r2 = rotate_to(odd[j], b);
            verts.insert(verts.end(), r2.begin() + 1, r2.end());
            verts.push_back(b);
            verts.insert(verts.end(), interior.rbegin(), interior.rend());
            add(verts, WalkShape::TwoOddCyclesJoinedByPath);
          });
        }
      }
    }
  std::vector<CircuitWalk> out;
  for (auto& [b, cw] : found) out.push_back(cw);
  return out;
}

bool is_primitive(const Walk& w, const Graph& g) {
  if (!w.even()) throw input_error("primitivity concerns even closed walks");
  int m = g.m();
  std::vector<int> plus(m, 0), minus(m, 0);
  for (int k = 0; k < w.length(); ++k) ++(k % 2 == 0 ? plus : minus)[w.edges[k]];
  std::vector<int> u(m, 0);
  for (int e = 0; e < m; ++e) {
    if (plus[e] && minus[e]) return false;  // common edge factor, a shorter walk binomial fits inside
    u[e] = plus[e] - minus[e];
  }
  std::vector<int> cols, lo, hi;
  for (int e = 0; e < m; ++e)
    if (u[e] != 0) {
      cols.push_back(e);
      lo.push_back(std::min(0, u[e]));
      hi.push_back(std::max(0, u[e]));
    }
  int t = int(cols.size());
  if (t == 0) return false;
  // suffix ranges of the vertex sums, for exact pruning
  std::vector<std::vector<int>> smin(t + 1, std::vector<int>(g.n, 0)), smax = smin;
  for (int i = t - 1; i >= 0; --i) {
    smin[i] = smin[i + 1];
    smax[i] = smax[i + 1];
    auto [a, b] = g.edges[cols[i]];
    smin[i][a] += lo[i];
    smin[i][b] += lo[i];
    smax[i][a] += hi[i];
    smax[i][b] += hi[i];
  }
  std::vector<int> acc(g.n, 0), z(t, 0);
  bool found = false;
  auto feasible = [&](int i) {
    for (int r = 0; r < g.n; ++r)
      if (acc[r] + smin[i][r] > 0 || acc[r] + smax[i][r] < 0) return false;
    return true;
  };
  std::function<void(int)> rec = [&](int i) {
    if (found || !feasible(i)) return;
    if (i == t) {
      bool zero = true, whole = true;
      for (int k = 0; k < t; ++k) {
        if (z[k] != 0) zero = false;
        if (z[k] != u[cols[k]]) whole = false;
      }
      if (!zero && !whole) found = true;
      return;
    }
    auto [a, b] = g.edges[cols[i]];
    for (int v = lo[i]; v <= hi[i] && !found; ++v) {
      z[i] = v;
      acc[a] += v;
      acc[b] += v;
      rec(i + 1);
      acc[a] -= v;
      acc[b] -= v;
    }
    z[i] = 0;
  };
  rec(0);
  return !found;
}

bool condition_sharp(const Graph& g) {
  auto cycles = all_cycles(g);
  std::vector<std::vector<int>> oc;
  for (auto& c : cycles)
    if (c.size() % 2 == 1 && chordless(g, c)) oc.push_back(c);
  // full recheck of one candidate instance: the vertex set must induce the
  // two cycles and the connecting path, nothing else
  auto induced_instance = [&](const std::set<int>& vs, const std::set<std::pair<int, int>>& allowed) {
    for (int a : vs)
      for (auto [x, e] : g.adj[a])
        if (a < x && vs.count(x) && !allowed.count({a, x})) return false;
    return true;
  };
  auto cycle_edges = [&](const std::vector<int>& c, std::set<std::pair<int, int>>& into) {
    int k = int(c.size());
    for (int i = 0; i < k; ++i) {
      int a = c[i], b = c[(i + 1) % k];
      into.insert({std::min(a, b), std::max(a, b)});
    }
  };
  for (size_t i = 0; i < oc.size(); ++i)
    for (size_t j = i + 1; j < oc.size(); ++j) {
      std::set<int> v1(oc[i].begin(), oc[i].end()), v2(oc[j].begin(), oc[j].end());
      std::vector<int> common;
      std::set_intersection(v1.begin(), v1.end(), v2.begin(), v2.end(), std::back_inserter(common));
      if (!common.empty()) continue;
      std::vector<std::pair<int, int>> cross;
      for (int a : v1)
        for (auto [x, e] : g.adj[a])
          if (v2.count(x)) cross.push_back({a, x});
      std::set<std::pair<int, int>> allowed;
      cycle_edges(oc[i], allowed);
      cycle_edges(oc[j], allowed);
      if (cross.size() == 1) {
        // the two cycles plus that edge form the induced instance directly
        std::set<int> vs = v1;
        vs.insert(v2.begin(), v2.end());
        auto inst = allowed;
        auto [a, b] = cross[0];
        inst.insert({std::min(a, b), std::max(a, b)});
        if (induced_instance(vs, inst)) return false;
        continue;
      }
      if (!cross.empty()) continue;  // a longer path keeps the stray edge induced, never valid
      // connecting paths of length >= 2; internal vertices may only touch
      // their path neighbors
      bool hit = false;
      std::vector<char> base(g.n, 0);
      for (int v : v1) base[v] = 1;
      for (int v : v2) base[v] = 1;
      for (int a : oc[i]) {
        if (hit) break;
        std::vector<int> interior;
        std::vector<char> blocked = base;
        std::function<void(int)> rec = [&](int u) {
          if (hit) return;
          for (auto [x, e] : g.adj[u]) {
            if (hit) return;
            if (v2.count(x)) {
              if (interior.empty()) continue;  // direct edges already handled
              // close only when the last interior vertex sees exactly one
              // vertex of the far cycle
              int far = 0;
              for (auto [y, e2] : g.adj[u])
                if (v2.count(y)) ++far;
              if (far != 1) continue;
              std::set<int> vs = v1;
              vs.insert(v2.begin(), v2.end());
              vs.insert(interior.begin(), interior.end());
              auto inst = allowed;
              int prev = a;
              for (int p : interior) {
                inst.insert({std::min(prev, p), std::max(prev, p)});
                prev = p;
              }
              inst.insert({std::min(prev, x), std::max(prev, x)});
              if (induced_instance(vs, inst)) hit = true;
            } else if (!blocked[x]) {
              // x may touch the near cycle only at the seed (and only as the
              // first interior vertex), and earlier interiors only at u
              bool stray = false;
              for (auto [y, e2] : g.adj[x]) {
                if (v1.count(y) && !(interior.empty() && y == a)) stray = true;
                if (y != u && std::find(interior.begin(), interior.end(), y) != interior.end())
                  stray = true;
              }
              if (stray) continue;
              blocked[x] = 1;
              interior.push_back(x);
              rec(x);
              interior.pop_back();
              blocked[x] = 0;
            }
          }
        };
        rec(a);
      }
      if (hit) return false;
    }
  return true;
}

namespace {

// Biconnected components of the walk subgraph, as vertex sets.
struct BlockFinder {
  std::map<int, std::vector<std::pair<int, int>>> adj;
  std::map<int, int> disc, low;
  std::vector<std::pair<int, int>> stk;
  std::vector<std::set<int>> blocks;
  int timer = 0;

  void dfs(int u, int pedge) {
    disc[u] = low[u] = ++timer;
    for (auto [v, e] : adj[u]) {
      if (e == pedge) continue;
      if (!disc.count(v)) {
        stk.push_back({u, v});
        dfs(v, e);
        low[u] = std::min(low[u], low[v]);
        if (low[v] >= disc[u]) {
          std::set<int> blk;
          while (true) {
            auto [x, y] = stk.back();
            stk.pop_back();
            blk.insert(x);
            blk.insert(y);
            if (x == u && y == v) break;
          }
          blocks.push_back(std::move(blk));
        }
      } else if (disc[v] < disc[u]) {
        stk.push_back({u, v});
        low[u] = std::min(low[u], disc[v]);
      }
    }
  }
};

std::vector<std::set<int>> walk_blocks(const Graph& g, const Walk& w) {
  BlockFinder bf;
  std::set<int> es(w.edges.begin(), w.edges.end());
  for (int e : es) {
    auto [a, b] = g.edges[e];
    bf.adj[a].push_back({b, e});
    bf.adj[b].push_back({a, e});
  }
  bf.dfs(w.verts[0], -1);
  return bf.blocks;
}

}  // namespace

ChordReport chord_report(const Walk& w, const Graph& g) {
  if (!is_primitive(w, g)) throw input_error("chord report requires a primitive walk");
  int s = w.length();
  std::set<int> vs(w.verts.begin(), w.verts.end());
  std::set<int> es(w.edges.begin(), w.edges.end());
  ChordReport r;
  auto blocks = walk_blocks(g, w);
  auto blocks_of = [&](int v) {
    std::vector<int> ids;
    for (size_t i = 0; i < blocks.size(); ++i)
      if (blocks[i].count(v)) ids.push_back(int(i));
    return ids;
  };
  std::map<int, std::vector<int>> vpos;  // vertex -> 1-based walk positions
  for (int k = 0; k < s; ++k) vpos[w.verts[k]].push_back(k + 1);
  std::map<int, int> efirst;  // edge -> first 0-based index
  for (int k = 0; k < s; ++k) {
    auto [it, fresh] = efirst.emplace(w.edges[k], k);
    if (!fresh && (it->second % 2) != (k % 2))
      throw inconsistency_error("primitive walk repeats an edge at both parities");
  }
  for (int e = 0; e < g.m(); ++e) {
    if (es.count(e)) continue;
    auto [x, y] = g.edges[e];
    if (!vs.count(x) || !vs.count(y)) continue;
    Chord c;
    c.edge = e;
    auto bx = blocks_of(x), by = blocks_of(y);
    bool bridge = !(bx.size() == 1 && by.size() == 1 && bx[0] == by[0]);
    if (bridge) {
      c.kind = Chord::Kind::Bridge;
    } else {
      if (vpos[x].size() != 1 || vpos[y].size() != 1)
        throw inconsistency_error("non-bridge chord endpoint repeats in the walk");
      c.pos_u = std::min(vpos[x][0], vpos[y][0]);
      c.pos_v = std::max(vpos[x][0], vpos[y][0]);
      c.kind = ((c.pos_v - c.pos_u) % 2 == 0) ? Chord::Kind::Odd : Chord::Kind::Even;
    }
    r.chords.push_back(c);
  }
  std::vector<Chord> odds;
  for (auto& c : r.chords)
    if (c.kind == Chord::Kind::Odd) odds.push_back(c);
  std::set<std::pair<std::set<int>, std::set<int>>> seen_f4;
  for (size_t i = 0; i < odds.size(); ++i)
    for (size_t j = i + 1; j < odds.size(); ++j) {
      int t = odds[i].pos_u, tj = odds[i].pos_v;
      int t2 = odds[j].pos_u, j2 = odds[j].pos_v;
      bool eff = ((t2 - t) % 2 != 0) &&
                 ((t < t2 && t2 < tj && tj < j2) || (t2 < t && t < j2 && j2 < tj));
      OddChordPair pr;
      pr.c1 = std::min(odds[i].edge, odds[j].edge);
      pr.c2 = std::max(odds[i].edge, odds[j].edge);
      pr.effective = eff;
      r.pairs.push_back(pr);
      if (!eff) continue;
      auto [x1, y1] = g.edges[odds[i].edge];
      auto [x2, y2] = g.edges[odds[j].edge];
      for (auto [p, q] : {std::pair{x2, y2}, std::pair{y2, x2}}) {
        int ea = g.edge_id(x1, p), eb = g.edge_id(y1, q);
        if (ea < 0 || eb < 0 || !es.count(ea) || !es.count(eb)) continue;
        if ((efirst[ea] % 2) != (efirst[eb] % 2)) continue;
        F4 f;
        f.walk_edges = {ea, eb};
        f.chords = {pr.c1, pr.c2};
        if (!seen_f4.insert({f.walk_edges, f.chords}).second) continue;
        // display as a 4-cycle starting at the smaller walk edge, then the
        // chord meeting it at its first endpoint
        int wi = std::min(ea, eb), wk = std::max(ea, eb);
        auto meets = [&](int chord, int vtx) {
          return g.edges[chord].first == vtx || g.edges[chord].second == vtx;
        };
        int ca = meets(pr.c1, g.edges[wi].second) ? pr.c1 : pr.c2;
        f.cycle = {wi, ca, wk, ca == pr.c1 ? pr.c2 : pr.c1};
        int k1 = efirst[ea], k2 = efirst[eb];
        if (k1 > k2) std::swap(k1, k2);
        for (int k = k1 + 1; k <= k2; ++k) f.side2.insert(w.verts[k]);
        for (int k = k2 + 1; k < s; ++k) f.side1.insert(w.verts[k]);
        for (int k = 0; k <= k1; ++k) f.side1.insert(w.verts[k]);
        r.f4s.push_back(std::move(f));
      }
    }
  for (auto& pr : r.pairs)
    if (pr.effective) {
      pr.strong = true;
      for (auto& f : r.f4s)
        if (f.chords == std::set<int>{pr.c1, pr.c2}) pr.strong = false;
    }
  for (auto& f : r.f4s) {
    std::vector<int> cross;
    for (auto& c : odds) {
      if (f.chords.count(c.edge)) continue;
      auto [x, y] = g.edges[c.edge];
      if ((f.side1.count(x) && f.side2.count(y)) || (f.side2.count(x) && f.side1.count(y)))
        cross.push_back(c.edge);
    }
    r.crossing.push_back(std::move(cross));
  }
  return r;
}

GammaGReport gamma_complex(const Graph& g) {
  GammaGReport r;
  r.sharp = condition_sharp(g);
  auto a = incidence_config(g);
  std::vector<circuits::Circuit> cs;
  for (auto& cw : enumerate_circuit_walks(g)) {
    IntVec u(g.m());
    for (int e = 0; e < g.m(); ++e) u[e] = cw.binomial.u[e];
    cs.push_back(circuits::Circuit{std::move(u)});
  }
  r.gamma = complexes::build_gamma(a, cs);
  for (auto& ci : complexes::components(r.gamma)) {
    ComponentShape sh = ComponentShape::Other;
    if (ci.vertex_ids.size() == 1)
      sh = ComponentShape::Vertex;
    else if (ci.vertex_ids.size() == 2 && ci.is_simplex)
      sh = ComponentShape::Edge;
    else if (ci.vertex_ids.size() == 3 && ci.is_simplex)
      sh = ComponentShape::TwoSimplex;
    if (r.sharp && sh == ComponentShape::Other)
      throw inconsistency_error("gamma component is neither vertex, edge nor 2-simplex");
    r.comps.push_back({ci.vertex_ids, sh});
  }
  return r;
}

BarCertificate bar_mu_certificate(const Graph& g) {
  if (!condition_sharp(g))
    throw input_error("certificate needs no induced disjoint odd cycle pair joined by a path");
  auto a = incidence_config(g);
  auto lat = exactalg::kernel_basis(a);
  auto mk = markov::markov_basis(lat);
  BarCertificate out;
  out.mu = mk.mu;
  std::set<Binomial> circuit_set;
  for (auto& cw : enumerate_circuit_walks(g)) circuit_set.insert(cw.binomial);
  std::set<Monomial> indisp(mk.indispensable_monomials.begin(), mk.indispensable_monomials.end());
  std::set<IntVec> degrees;
  for (auto& b : mk.generators) degrees.insert(groebner::adeg(b.plus(), a));
  std::set<Binomial> viols;
  for (auto& d : degrees) {
    auto fib = markov::fiber(d, a);
    int fn = int(fib.monomials.size());
    std::map<Monomial, int> idx;
    for (int i = 0; i < fn; ++i) idx[fib.monomials[i]] = i;
    std::vector<int> par(fn);
    std::iota(par.begin(), par.end(), 0);
    std::function<int(int)> find = [&](int x) { return par[x] == x ? x : par[x] = find(par[x]); };
    // connect along moves with a nontrivial cofactor: those are exactly the
    // moves by generators of strictly smaller degree
    for (int i = 0; i < fn; ++i)
      for (auto& gen : mk.generators)
        for (int side = 0; side < 2; ++side) {
          Monomial from = side ? gen.minus() : gen.plus();
          Monomial to = side ? gen.plus() : gen.minus();
          if (fib.monomials[i] == from) continue;
          if (!groebner::mono_divides(from, fib.monomials[i])) continue;
          Monomial img = groebner::mono_mul(groebner::mono_div(fib.monomials[i], from), to);
          auto it = idx.find(img);
          if (it == idx.end()) throw inconsistency_error("fiber move left the fiber");
          par[find(i)] = find(it->second);
        }
    for (int i = 0; i < fn; ++i)
      for (int j = i + 1; j < fn; ++j) {
        if (find(i) == find(j)) continue;
        const Monomial &mi = fib.monomials[i], &mj = fib.monomials[j];
        std::vector<int> uv(g.m());
        for (int e = 0; e < g.m(); ++e) uv[e] = mi[e] - mj[e];
        Binomial b = Binomial{uv}.canonical();
        if (!circuit_set.count(b)) continue;
        if (!groebner::mono_squarefree(mi) || !groebner::mono_squarefree(mj)) continue;
        if (indisp.count(mi) || indisp.count(mj)) continue;
        viols.insert(b);
      }
  }
  out.violators.assign(viols.begin(), viols.end());
  if (out.violators.empty()) out.bar = out.mu;
  return out;
}

bool complement_weakly_chordal(const Graph& g) {
  int m = g.m();
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      auto [a, b] = g.edges[i];
      auto [c, d] = g.edges[j];
      if (a == c || a == d || b == c || b == d) continue;
      bool met = false;
      for (int k = 0; k < m && !met; ++k) {
        auto [x, y] = g.edges[k];
        bool m1 = x == a || x == b || y == a || y == b;
        bool m2 = x == c || x == d || y == c || y == d;
        met = m1 && m2;
      }
      if (!met) return false;
    }
  return true;
}

}  // namespace latbar::graphs
