#include "fsg/graph.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <fstream>
#include <functional>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>

#include "fsg/errors.hpp"

namespace fsg {

namespace {

Edge norm_edge(int u, int v) { return u < v ? Edge{u, v} : Edge{v, u}; }

}  // namespace

Graph::Graph(int n) : n_(n), adj_(std::max(n, 0)) {
  if (n < 1) throw ParameterError("graph needs at least one vertex");
}

Graph::Graph(int n, std::vector<Edge> edges) : n_(n), adj_(std::max(n, 0)) {
  if (n < 1) throw ParameterError("graph needs at least one vertex");
  for (auto& e : edges) {
    if (e.first == e.second) throw ParameterError("self-loop rejected");
    if (e.first < 0 || e.second < 0 || e.first >= n || e.second >= n)
      throw ParameterError("edge endpoint out of range");
    e = norm_edge(e.first, e.second);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  edges_ = std::move(edges);
  for (const auto& [u, v] : edges_) {
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

bool Graph::has_edge(int u, int v) const {
  if (u < 0 || v < 0 || u >= n_ || v >= n_ || u == v) return false;
  const auto& nb = adj_[u];
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<int> ThetaFrame::vertices() const {
  std::vector<int> vs{endp1, endp2};
  vs.insert(vs.end(), path_p.begin() + 1, path_p.end() - 1);
  vs.insert(vs.end(), path_q.begin() + 1, path_q.end() - 1);
  vs.insert(vs.end(), path_r.begin() + 1, path_r.end() - 1);
  return vs;
}

std::vector<Edge> ThetaFrame::frame_edges() const {
  std::vector<Edge> es;
  for (const auto* path : {&path_p, &path_q, &path_r})
    for (size_t t = 0; t + 1 < path->size(); ++t)
      es.push_back(norm_edge((*path)[t], (*path)[t + 1]));
  std::sort(es.begin(), es.end());
  return es;
}

std::vector<std::vector<int>> ThetaFrame::cycles() const {
  auto join = [](const std::vector<int>& a, const std::vector<int>& b) {
    // a forward from endp1 to endp2, then b's interior back to endp1.
    std::vector<int> c(a);
    for (size_t t = b.size() - 2; t >= 1; --t) c.push_back(b[t]);
    return c;
  };
  return {join(path_p, path_q), join(path_p, path_r), join(path_q, path_r)};
}

bool ThetaFrame::contains_odd_cycle() const {
  auto pr = params();
  return ((pr.i + pr.j) % 2 == 1) || ((pr.i + pr.k) % 2 == 1) ||
         ((pr.j + pr.k) % 2 == 1);
}

Graph make_theta(const ThetaParams& p) {
  if (p.i < 0 || p.i > p.j || p.j > p.k)
    throw ParameterError("theta params must satisfy 0 <= i <= j <= k");
  if (p.i == 0 && p.j == 0)
    throw ParameterError("theta(0,0,k) would need parallel edges");
  ThetaFrame f = theta_frame_of(p);
  return Graph(p.vertex_count(), f.frame_edges());
}

ThetaFrame theta_frame_of(const ThetaParams& p) {
  // Vertices: 0 = endp1, 1 = endp2, then P internals, Q internals, R internals.
  ThetaFrame f;
  f.endp1 = 0;
  f.endp2 = 1;
  int next = 2;
  auto build = [&](int internal) {
    std::vector<int> path{0};
    for (int t = 0; t < internal; ++t) path.push_back(next++);
    path.push_back(1);
    return path;
  };
  f.path_p = build(p.i);
  f.path_q = build(p.j);
  f.path_r = build(p.k);
  return f;
}

Graph family(Family kind, int n, std::optional<ThetaParams> theta) {
  if (n < 1) throw ParameterError("family size must be positive");
  std::vector<Edge> es;
  switch (kind) {
    case Family::path:
      for (int v = 0; v + 1 < n; ++v) es.emplace_back(v, v + 1);
      return Graph(n, es);
    case Family::cycle:
      if (n < 3) throw ParameterError("cycle needs n >= 3");
      for (int v = 0; v < n; ++v) es.push_back(norm_edge(v, (v + 1) % n));
      return Graph(n, es);
    case Family::star:
      for (int v = 1; v < n; ++v) es.emplace_back(0, v);
      return Graph(n, es);
    case Family::complete:
      for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) es.emplace_back(u, v);
      return Graph(n, es);
    case Family::theta: {
      if (!theta) throw ParameterError("theta family needs parameters");
      if (theta->vertex_count() != n)
        throw ParameterError("theta family needs n = i+j+k+2");
      return make_theta(*theta);
    }
    case Family::grid: {
      int side = 1;
      while (side * side < n) ++side;
      if (side * side != n) throw ParameterError("grid needs n = side^2");
      auto id = [side](int r, int c) { return r * side + c; };
      for (int r = 0; r < side; ++r)
        for (int c = 0; c < side; ++c) {
          if (c + 1 < side) es.emplace_back(id(r, c), id(r, c + 1));
          if (r + 1 < side) es.emplace_back(id(r, c), id(r + 1, c));
        }
      return Graph(n, es);
    }
    case Family::bn: {
      if (n < 4) throw ParameterError("bn needs n >= 4");
      for (int v = 0; v < n; ++v) es.push_back(norm_edge(v, (v + 1) % n));
      es.push_back(norm_edge(0, 2));
      return Graph(n, es);
    }
  }
  throw ParameterError("unknown family");
}

std::vector<std::vector<int>> components(const Graph& g) {
  int n = g.vertex_count();
  std::vector<int> seen(n, 0);
  std::vector<std::vector<int>> comps;
  for (int root = 0; root < n; ++root) {
    if (seen[root]) continue;
    std::vector<int> comp{root};
    seen[root] = 1;
    for (size_t head = 0; head < comp.size(); ++head)
      for (int w : g.neighbors(comp[head]))
        if (!seen[w]) {
          seen[w] = 1;
          comp.push_back(w);
        }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

std::vector<int> component_ids(const Graph& g) {
  auto comps = components(g);
  std::vector<int> ids(g.vertex_count(), -1);
  for (size_t c = 0; c < comps.size(); ++c)
    for (int v : comps[c]) ids[v] = static_cast<int>(c);
  return ids;
}

bool is_connected(const Graph& g) { return components(g).size() == 1; }

BipartiteResult is_bipartite(const Graph& g) {
  int n = g.vertex_count();
  BipartiteResult res;
  res.coloring.assign(n, -1);
  std::vector<int> parent(n, -1);
  for (int root = 0; root < n; ++root) {
    if (res.coloring[root] != -1) continue;
    res.coloring[root] = 0;
    std::deque<int> queue{root};
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      for (int w : g.neighbors(v)) {
        if (res.coloring[w] == -1) {
          res.coloring[w] = res.coloring[v] ^ 1;
          parent[w] = v;
          queue.push_back(w);
        } else if (res.coloring[w] == res.coloring[v]) {
          // Odd closed walk: v -> root-ward, w -> root-ward, joined at v..w.
          std::vector<int> up_v{v}, up_w{w};
          auto lift = [&](std::vector<int>& path) {
            while (parent[path.back()] != -1) path.push_back(parent[path.back()]);
          };
          lift(up_v);
          lift(up_w);
          std::reverse(up_v.begin(), up_v.end());
          std::reverse(up_w.begin(), up_w.end());
          size_t common = 0;
          while (common + 1 < up_v.size() && common + 1 < up_w.size() &&
                 up_v[common + 1] == up_w[common + 1])
            ++common;
          std::vector<int> walk(up_v.begin() + common, up_v.end());
          for (size_t t = up_w.size(); t-- > common;) walk.push_back(up_w[t]);
          res.bipartite = false;
          res.odd_closed_walk = std::move(walk);
          res.coloring.clear();
          return res;
        }
      }
    }
  }
  res.bipartite = true;
  return res;
}

std::vector<int> cut_vertices(const Graph& g) {
  int n = g.vertex_count();
  std::vector<int> disc(n, -1), low(n, 0), cut(n, 0);
  int timer = 0;
  // Iterative lowpoint DFS; recursion depth can reach n on path graphs.
  struct Item {
    int v, parent;
    size_t edge;
  };
  for (int root = 0; root < n; ++root) {
    if (disc[root] != -1) continue;
    std::vector<Item> stack{{root, -1, 0}};
    disc[root] = low[root] = timer++;
    int root_children = 0;
    while (!stack.empty()) {
      auto& top = stack.back();
      const auto& nb = g.neighbors(top.v);
      if (top.edge < nb.size()) {
        int w = nb[top.edge++];
        if (w == top.parent) continue;
        if (disc[w] == -1) {
          disc[w] = low[w] = timer++;
          if (top.v == root) ++root_children;
          stack.push_back({w, top.v, 0});
        } else {
          low[top.v] = std::min(low[top.v], disc[w]);
        }
      } else {
        int v = top.v, p = top.parent;
        stack.pop_back();
        if (p != -1) {
          low[p] = std::min(low[p], low[v]);
          if (p != root && low[v] >= disc[p]) cut[p] = 1;
        }
      }
    }
    if (root_children > 1) cut[root] = 1;
  }
  std::vector<int> out;
  for (int v = 0; v < n; ++v)
    if (cut[v]) out.push_back(v);
  return out;
}

bool is_biconnected(const Graph& g) {
  if (!is_connected(g)) return false;
  if (g.vertex_count() <= 2) return true;  // n <= 2 convention
  return cut_vertices(g).empty();
}

int removable_vertex(const Graph& g) {
  if (!is_connected(g)) throw PreconditionError("removable_vertex: disconnected");
  if (g.vertex_count() < 2)
    throw PreconditionError("removable_vertex: needs n >= 2");
  auto cuts = cut_vertices(g);
  for (int v = 0; v < g.vertex_count(); ++v)
    if (!std::binary_search(cuts.begin(), cuts.end(), v)) return v;
  throw InternalError("connected graph with every vertex a cut vertex");
}

std::vector<int> shortest_path(const Graph& g, int u, int v,
                               const std::vector<int>& forbidden) {
  int n = g.vertex_count();
  std::vector<int> banned(n, 0);
  for (int f : forbidden) banned[f] = 1;
  if (banned[u] || banned[v]) return {};
  std::vector<int> parent(n, -2);
  parent[u] = -1;
  std::deque<int> queue{u};
  while (!queue.empty()) {
    int a = queue.front();
    queue.pop_front();
    if (a == v) break;
    for (int w : g.neighbors(a)) {
      if (banned[w] || parent[w] != -2) continue;
      parent[w] = a;
      queue.push_back(w);
    }
  }
  if (parent[v] == -2) return {};
  std::vector<int> path{v};
  while (path.back() != u) path.push_back(parent[path.back()]);
  std::reverse(path.begin(), path.end());
  return path;
}

namespace {

// Unit-capacity flow on the vertex-split graph: vertex v becomes v_in (2v)
// and v_out (2v+1). Deterministic BFS augmentation.
struct SplitFlow {
  int n;
  std::vector<std::vector<std::pair<int, int>>> adj;  // (to, reverse index)
  std::vector<std::vector<int>> cap;

  explicit SplitFlow(int n) : n(n), adj(2 * n), cap(2 * n) {}

  void add_arc(int a, int b, int c) {
    adj[a].push_back({b, static_cast<int>(adj[b].size())});
    adj[b].push_back({a, static_cast<int>(adj[a].size()) - 1});
    cap[a].push_back(c);
    cap[b].push_back(0);
  }

  bool augment(int s, int t) {
    std::vector<std::pair<int, int>> prev(2 * n, {-2, -1});
    prev[s] = {-1, -1};
    std::deque<int> queue{s};
    while (!queue.empty() && prev[t].first == -2) {
      int a = queue.front();
      queue.pop_front();
      for (size_t e = 0; e < adj[a].size(); ++e) {
        int b = adj[a][e].first;
        if (cap[a][e] > 0 && prev[b].first == -2) {
          prev[b] = {a, static_cast<int>(e)};
          queue.push_back(b);
        }
      }
    }
    if (prev[t].first == -2) return false;
    for (int b = t; b != s;) {
      auto [a, e] = prev[b];
      cap[a][e] -= 1;
      cap[b][adj[a][e].second] += 1;
      b = a;
    }
    return true;
  }
};

}  // namespace

std::vector<std::vector<int>> disjoint_paths(const Graph& g, int u, int v,
                                             int count) {
  if (u == v) throw PreconditionError("disjoint_paths: identical endpoints");
  int n = g.vertex_count();
  SplitFlow flow(n);
  auto vin = [](int x) { return 2 * x; };
  auto vout = [](int x) { return 2 * x + 1; };
  for (int x = 0; x < n; ++x)
    flow.add_arc(vin(x), vout(x), (x == u || x == v) ? count : 1);
  for (const auto& [a, b] : g.edges()) {
    flow.add_arc(vout(a), vin(b), 1);
    flow.add_arc(vout(b), vin(a), 1);
  }
  int found = 0;
  while (found < count && flow.augment(vout(u), vin(v))) ++found;
  // Trace unit flows from u following saturated edge arcs.
  std::vector<std::vector<int>> paths;
  std::vector<std::vector<char>> used(2 * n);
  for (int x = 0; x < 2 * n; ++x) used[x].assign(flow.adj[x].size(), 0);
  for (int p = 0; p < found; ++p) {
    std::vector<int> path{u};
    int at = u;
    while (at != v) {
      int node = vout(at);
      bool moved = false;
      for (size_t e = 0; e < flow.adj[node].size(); ++e) {
        int b = flow.adj[node][e].first;
        // Original edge arc is saturated iff residual cap dropped to 0 and it
        // had capacity 1; reverse arcs are the odd entries of cap==... rely on
        // construction: forward arcs were added with cap 1 from vout to vin.
        if (used[node][e] || b % 2 != 0) continue;
        size_t rev = static_cast<size_t>(flow.adj[node][e].second);
        if (flow.cap[node][e] == 0 && flow.cap[b][rev] == 1) {
          used[node][e] = 1;
          at = b / 2;
          path.push_back(at);
          moved = true;
          break;
        }
      }
      if (!moved) throw InternalError("disjoint_paths: flow trace failed");
    }
    paths.push_back(std::move(path));
  }
  return paths;
}

std::vector<int> cycle_through_two_edges(const Graph& g, Edge e1, Edge e2) {
  e1 = norm_edge(e1.first, e1.second);
  e2 = norm_edge(e2.first, e2.second);
  if (e1 == e2) throw PreconditionError("cycle_through_two_edges: equal edges");
  if (!g.has_edge(e1.first, e1.second) || !g.has_edge(e2.first, e2.second))
    throw PreconditionError("cycle_through_two_edges: edge not in graph");
  if (!is_biconnected(g))
    throw PreconditionError("cycle_through_two_edges: graph not biconnected");

  // Subdivide both edges with fresh vertices w1, w2, then find two internally
  // disjoint w1-w2 paths; their union is the required cycle.
  int n = g.vertex_count();
  int w1 = n, w2 = n + 1;
  std::vector<Edge> edges;
  for (const auto& e : g.edges())
    if (e != e1 && e != e2) edges.push_back(e);
  edges.push_back(norm_edge(e1.first, w1));
  edges.push_back(norm_edge(e1.second, w1));
  edges.push_back(norm_edge(e2.first, w2));
  edges.push_back(norm_edge(e2.second, w2));
  Graph sub(n + 2, edges);
  auto paths = disjoint_paths(sub, w1, w2, 2);
  if (paths.size() != 2)
    throw InternalError("cycle_through_two_edges: missing disjoint paths");
  std::vector<int> cycle;
  for (size_t t = 0; t + 1 < paths[0].size(); ++t) cycle.push_back(paths[0][t]);
  for (size_t t = paths[1].size() - 1; t >= 1; --t) cycle.push_back(paths[1][t]);
  // Drop the subdivision vertices; their neighbors on the cycle are the
  // original edge endpoints in order.
  std::vector<int> out;
  for (int x : cycle)
    if (x < n) out.push_back(x);
  return out;
}

int min_degree(const Graph& g) {
  int best = g.vertex_count();
  for (int v = 0; v < g.vertex_count(); ++v) best = std::min(best, g.degree(v));
  return best;
}

std::vector<int> closed_neighborhood(const Graph& g, int v) {
  std::vector<int> out{v};
  for (int w : g.neighbors(v)) out.push_back(w);
  std::sort(out.begin(), out.end());
  return out;
}

InducedSubgraph induced_subgraph(const Graph& g, const std::vector<int>& s) {
  if (s.empty()) throw PreconditionError("induced_subgraph: empty vertex set");
  std::vector<int> vs(s);
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  InducedSubgraph out{Graph(1), vs, std::vector<int>(g.vertex_count(), -1)};
  for (size_t t = 0; t < vs.size(); ++t) out.from_host[vs[t]] = static_cast<int>(t);
  std::vector<Edge> edges;
  for (const auto& [u, v] : g.edges())
    if (out.from_host[u] != -1 && out.from_host[v] != -1)
      edges.emplace_back(out.from_host[u], out.from_host[v]);
  out.graph = Graph(static_cast<int>(vs.size()), edges);
  return out;
}

std::optional<std::vector<int>> isomorphism_small(const Graph& g,
                                                  const Graph& h) {
  int n = g.vertex_count();
  if (n != h.vertex_count() || g.edge_count() != h.edge_count()) return {};
  if (n > 16) throw PreconditionError("isomorphism_small: more than 16 vertices");
  std::vector<int> dg(n), dh(n);
  for (int v = 0; v < n; ++v) {
    dg[v] = g.degree(v);
    dh[v] = h.degree(v);
  }
  {
    auto sg = dg, sh = dh;
    std::sort(sg.begin(), sg.end());
    std::sort(sh.begin(), sh.end());
    if (sg != sh) return {};
  }
  // Map g vertices in decreasing-degree order to cut the branching early.
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return dg[a] != dg[b] ? dg[a] > dg[b] : a < b;
  });
  std::vector<int> map(n, -1), used(n, 0);
  std::function<bool(int)> place = [&](int idx) {
    if (idx == n) return true;
    int v = order[idx];
    for (int w = 0; w < n; ++w) {
      if (used[w] || dh[w] != dg[v]) continue;
      bool ok = true;
      for (int t = 0; t < idx && ok; ++t) {
        int prev = order[t];
        if (g.has_edge(v, prev) != h.has_edge(w, map[prev])) ok = false;
      }
      if (!ok) continue;
      map[v] = w;
      used[w] = 1;
      if (place(idx + 1)) return true;
      map[v] = -1;
      used[w] = 0;
    }
    return false;
  };
  if (!place(0)) return {};
  return map;
}

bool is_isomorphic_small(const Graph& g, const Graph& h) {
  return isomorphism_small(g, h).has_value();
}

bool is_theta122(const Graph& g) {
  static const Graph pattern = make_theta(ThetaParams{1, 2, 2});
  return g.vertex_count() == 7 && g.edge_count() == 8 &&
         is_isomorphic_small(g, pattern);
}

bool is_cycle_graph(const Graph& g) {
  if (g.vertex_count() < 3 || !is_connected(g)) return false;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) != 2) return false;
  return true;
}

bool is_tree(const Graph& g) {
  return is_connected(g) && g.edge_count() == g.vertex_count() - 1;
}

namespace {

// Ear-based theta construction: a shortest odd cycle plus a path attached to
// it at two distinct vertices always yields a frame containing an odd cycle.
std::optional<std::vector<int>> shortest_odd_cycle(const Graph& g) {
  int n = g.vertex_count();
  std::optional<std::vector<int>> best;
  for (int root = 0; root < n; ++root) {
    std::vector<int> dist(n, -1), parent(n, -1);
    dist[root] = 0;
    std::deque<int> queue{root};
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      for (int w : g.neighbors(v)) {
        if (dist[w] == -1) {
          dist[w] = dist[v] + 1;
          parent[w] = v;
          queue.push_back(w);
        } else if (dist[w] == dist[v] && parent[v] != w) {
          // Same-layer edge: odd closed walk through root; extract the cycle.
          std::vector<int> pv{v}, pw{w};
          while (pv.back() != root) pv.push_back(parent[pv.back()]);
          while (pw.back() != root) pw.push_back(parent[pw.back()]);
          size_t iv = pv.size(), iw = pw.size();
          while (iv >= 2 && iw >= 2 && pv[iv - 2] == pw[iw - 2]) {
            --iv;
            --iw;
          }
          std::vector<int> cyc(pv.begin(), pv.begin() + iv);
          std::reverse(cyc.begin(), cyc.end());  // lca .. v
          cyc.insert(cyc.end(), pw.begin(), pw.begin() + iw - 1);  // w .. lca-child
          if (cyc.size() % 2 == 1 && (!best || cyc.size() < best->size()))
            best = cyc;
        }
      }
    }
  }
  return best;
}

ThetaFrame frame_from_cycle_and_ear(const std::vector<int>& cycle,
                                    const std::vector<int>& ear) {
  // ear runs between two distinct cycle vertices with interior off the cycle.
  int a = ear.front(), b = ear.back();
  size_t ia = 0, ib = 0;
  for (size_t t = 0; t < cycle.size(); ++t) {
    if (cycle[t] == a) ia = t;
    if (cycle[t] == b) ib = t;
  }
  std::vector<int> arc1, arc2;
  for (size_t t = ia;; t = (t + 1) % cycle.size()) {
    arc1.push_back(cycle[t]);
    if (t == ib) break;
  }
  for (size_t t = ia;; t = (t + cycle.size() - 1) % cycle.size()) {
    arc2.push_back(cycle[t]);
    if (t == ib) break;
  }
  std::array<std::vector<int>, 3> paths{arc1, arc2, ear};
  std::sort(paths.begin(), paths.end(),
            [](const auto& x, const auto& y) { return x.size() < y.size(); });
  ThetaFrame f;
  f.endp1 = a;
  f.endp2 = b;
  f.path_p = paths[0];
  f.path_q = paths[1];
  f.path_r = paths[2];
  return f;
}

void validate_frame(const Graph& g, const ThetaFrame& f) {
  auto pr = f.params();
  if (pr.i < 0 || pr.i > pr.j || pr.j > pr.k || (pr.i == 0 && pr.j == 0))
    throw InternalError("theta frame: bad path lengths");
  std::vector<int> vs = f.vertices();
  std::vector<int> sorted(vs);
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw InternalError("theta frame: paths intersect internally");
  for (const auto& [u, v] : f.frame_edges())
    if (!g.has_edge(u, v)) throw InternalError("theta frame: missing host edge");
}

std::optional<ThetaFrame> flow_frame(const Graph& g, int a, int b) {
  auto paths = disjoint_paths(g, a, b, 3);
  if (paths.size() < 3) return {};
  std::sort(paths.begin(), paths.end(),
            [](const auto& x, const auto& y) { return x.size() < y.size(); });
  ThetaFrame f;
  f.endp1 = a;
  f.endp2 = b;
  f.path_p = paths[0];
  f.path_q = paths[1];
  f.path_r = paths[2];
  auto pr = f.params();
  if (pr.i == 0 && pr.j == 0) return {};  // parallel edges cannot happen, but guard
  return f;
}

}  // namespace

ThetaFrame find_theta_subgraph(const Graph& g, bool require_odd_cycle) {
  if (!is_biconnected(g))
    throw PreconditionError("find_theta_subgraph: host not biconnected");
  if (is_cycle_graph(g))
    throw PreconditionError("find_theta_subgraph: host is a cycle");
  int n = g.vertex_count();

  auto acceptable = [&](const ThetaFrame& f) {
    if (!require_odd_cycle) return true;
    auto pr = f.params();
    if (pr.i == 1 && pr.j == 2 && pr.k == 2) return false;
    return f.contains_odd_cycle();
  };

  // Endpoint pairs in ascending label order, three disjoint paths by
  // shortest-first flow augmentation.
  for (int a = 0; a < n; ++a) {
    if (g.degree(a) < 3) continue;
    for (int b = a + 1; b < n; ++b) {
      if (g.degree(b) < 3) continue;
      auto f = flow_frame(g, a, b);
      if (!f) continue;
      validate_frame(g, *f);
      if (acceptable(*f)) return *f;
    }
  }
  if (!require_odd_cycle)
    throw InternalError("biconnected non-cycle graph without theta subgraph");

  if (is_bipartite(g).bipartite || is_theta122(g))
    throw PreconditionError(
        "find_theta_subgraph: odd frame needs a non-bipartite host != theta(1,2,2)");

  // Shortest odd cycle plus an ear always carries an odd cycle; vary the ear
  // until the frame shape differs from (1,2,2), which exists for such hosts.
  auto odd = shortest_odd_cycle(g);
  if (odd) {
    const auto& cyc = *odd;
    std::vector<int> on_cycle(n, 0);
    for (int v : cyc) on_cycle[v] = 1;
    for (int u : cyc) {
      for (int w : g.neighbors(u)) {
        if (on_cycle[w]) continue;
        // Path from w back to the cycle avoiding u.
        std::vector<int> banned{u};
        std::vector<int> best;
        for (int target : cyc) {
          if (target == u) continue;
          std::vector<int> avoid(banned);
          for (int other : cyc)
            if (other != target && other != u) avoid.push_back(other);
          auto path = shortest_path(g, w, target, avoid);
          if (!path.empty() && (best.empty() || path.size() < best.size()))
            best = path;
        }
        if (best.empty()) continue;
        std::vector<int> ear{u};
        ear.insert(ear.end(), best.begin(), best.end());
        ThetaFrame f = frame_from_cycle_and_ear(cyc, ear);
        validate_frame(g, f);
        if (acceptable(f)) return f;
      }
    }
  }

  // Exhaustive-ish fallback over endpoint pairs with one perturbed path set:
  // try removing a single frame edge to force the flow onto different paths.
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      auto base = flow_frame(g, a, b);
      if (!base) continue;
      for (const auto& drop : base->frame_edges()) {
        std::vector<Edge> kept;
        for (const auto& e : g.edges())
          if (e != drop) kept.push_back(e);
        Graph pruned(n, kept);
        if (!is_biconnected(pruned)) continue;
        auto f = flow_frame(pruned, a, b);
        if (!f) continue;
        validate_frame(g, *f);
        if (acceptable(*f)) return *f;
      }
    }
  }
  throw InternalError("find_theta_subgraph: odd frame exists but was not found");
}

Graph read_edge_list(std::istream& in) {
  std::string line;
  auto next_data_line = [&](std::string& out) {
    while (std::getline(in, line)) {
      auto hash = line.find('#');
      if (hash != std::string::npos) line = line.substr(0, hash);
      std::istringstream probe(line);
      std::string token;
      if (probe >> token) {
        out = line;
        return true;
      }
    }
    return false;
  };
  std::string header;
  if (!next_data_line(header)) throw ParameterError("edge list: missing header");
  std::istringstream hs(header);
  int n = 0, m = 0;
  if (!(hs >> n >> m)) throw ParameterError("edge list: bad header");
  std::vector<Edge> edges;
  for (int t = 0; t < m; ++t) {
    std::string row;
    if (!next_data_line(row)) throw ParameterError("edge list: missing edges");
    std::istringstream rs(row);
    int u = 0, v = 0;
    if (!(rs >> u >> v)) throw ParameterError("edge list: bad edge line");
    edges.emplace_back(u, v);
  }
  return Graph(n, edges);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

Graph load_edge_list(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParameterError("cannot open edge list: " + path);
  return read_edge_list(in);
}

}  // namespace fsg
