#include "support.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "fsg/errors.hpp"
#include "fsg/experiments.hpp"

namespace fsg::testsupport {

namespace {

// Cheap refinement signature for isomorphism bucketing.
std::vector<long long> wl_signature(const Graph& g) {
  int n = g.vertex_count();
  std::vector<long long> color(n);
  for (int v = 0; v < n; ++v) color[v] = g.degree(v);
  for (int round = 0; round < 2; ++round) {
    std::vector<long long> next(n);
    for (int v = 0; v < n; ++v) {
      std::vector<long long> nb;
      for (int w : g.neighbors(v)) nb.push_back(color[w]);
      std::sort(nb.begin(), nb.end());
      long long h = color[v];
      for (long long c : nb) h = h * 1000003 + c + 7;
      next[v] = h;
    }
    color = next;
  }
  std::sort(color.begin(), color.end());
  return color;
}

std::vector<Graph> build_catalog(int n, bool biconnected_only) {
  std::vector<Graph> out;
  std::map<std::vector<long long>, std::vector<size_t>> buckets;
  int pairs = n * (n - 1) / 2;
  std::vector<Edge> all;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) all.emplace_back(u, v);
  for (std::uint64_t mask = 0; mask < (1ull << pairs); ++mask) {
    std::vector<Edge> edges;
    for (int b = 0; b < pairs; ++b)
      if (mask & (1ull << b)) edges.push_back(all[b]);
    Graph g(n, edges);
    if (biconnected_only) {
      if (!is_biconnected(g) || n < 3) continue;
    } else if (!is_connected(g)) {
      continue;
    }
    auto sig = wl_signature(g);
    bool fresh = true;
    for (size_t idx : buckets[sig])
      if (is_isomorphic_small(out[idx], g)) {
        fresh = false;
        break;
      }
    if (fresh) {
      buckets[sig].push_back(out.size());
      out.push_back(std::move(g));
    }
  }
  return out;
}

}  // namespace

const std::vector<Graph>& connected_catalog(int n) {
  static std::map<int, std::vector<Graph>> cache;
  auto it = cache.find(n);
  if (it == cache.end())
    it = cache.emplace(n, build_catalog(n, false)).first;
  return it->second;
}

const std::vector<Graph>& biconnected_catalog(int n) {
  static std::map<int, std::vector<Graph>> cache;
  auto it = cache.find(n);
  if (it == cache.end())
    it = cache.emplace(n, build_catalog(n, true)).first;
  return it->second;
}

Configuration scramble(int n, std::uint64_t seed) {
  return sample_configuration(n, seed);
}

bool star_replay_reaches(const Graph& y, const MoveSequence& seq,
                         const Configuration& expect, int s_person) {
  int n = y.vertex_count();
  std::vector<Edge> es;
  for (int v = 0; v < n; ++v)
    if (v != s_person)
      es.push_back(v < s_person ? Edge{v, s_person} : Edge{s_person, v});
  Graph x(n, es);
  try {
    return replay(x, y, seq) == expect;
  } catch (const IllegalMoveError&) {
    return false;
  }
}

long long brute_cut_vertex_count(const Graph& g, int v) {
  std::vector<int> keep;
  for (int w = 0; w < g.vertex_count(); ++w)
    if (w != v) keep.push_back(w);
  auto sub = induced_subgraph(g, keep);
  return static_cast<long long>(components(sub.graph).size());
}

bool brute_has_odd_cycle(const Graph& g) {
  for (const auto& cyc : all_simple_cycles(g))
    if (cyc.size() % 2 == 1) return true;
  return false;
}

std::vector<std::vector<int>> all_simple_cycles(const Graph& g) {
  std::vector<std::vector<int>> cycles;
  int n = g.vertex_count();
  std::vector<int> path;
  std::vector<char> used(n, 0);
  // Enumerate cycles with the smallest vertex first and second-vertex <
  // last-vertex to avoid duplicates.
  std::function<void(int, int)> grow = [&](int root, int at) {
    for (int w : g.neighbors(at)) {
      if (w == root && path.size() >= 3) {
        if (path[1] < path.back()) cycles.push_back(path);
        continue;
      }
      if (w <= root || used[w]) continue;
      used[w] = 1;
      path.push_back(w);
      grow(root, w);
      path.pop_back();
      used[w] = 0;
    }
  };
  for (int root = 0; root < n; ++root) {
    path = {root};
    used.assign(n, 0);
    used[root] = 1;
    grow(root, root);
  }
  return cycles;
}

}  // namespace fsg::testsupport
