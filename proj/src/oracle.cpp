#include "fsg/oracle.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cstdlib>
#include <deque>
#include <memory>
#include <unordered_map>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "fsg/errors.hpp"

namespace fsg::oracle {

namespace {

constexpr int kMaxRankedN = 20;  // 20! still fits in uint64_t

const std::uint64_t* factorial_table() {
  static std::uint64_t table[kMaxRankedN + 1] = {1};
  static bool init = [] {
    for (int t = 1; t <= kMaxRankedN; ++t)
      table[t] = table[t - 1] * static_cast<std::uint64_t>(t);
    return true;
  }();
  (void)init;
  return table;
}

// Neighbor expansion context shared by every kernel: Y edges plus an X
// adjacency bitmask per person.
struct Expander {
  int n;
  std::vector<Edge> yedges;
  std::vector<std::uint32_t> xmask;

  Expander(const Graph& x, const Graph& y)
      : n(y.vertex_count()), yedges(y.edges()), xmask(n, 0) {
    for (int p = 0; p < n; ++p)
      for (int q : x.neighbors(p)) xmask[p] |= (1u << q);
  }

  bool x_adjacent(int p, int q) const { return (xmask[p] >> q) & 1u; }

  // Appends the ranks of all states one friendly swap from `placement`.
  void expand(std::vector<int>& placement, std::vector<int>& occ,
              std::vector<std::uint64_t>& out) const {
    for (const auto& [a, b] : yedges) {
      int p = occ[a], q = occ[b];
      if (!x_adjacent(p, q)) continue;
      std::swap(placement[p], placement[q]);
      out.push_back(rank_of(placement));
      std::swap(placement[p], placement[q]);
    }
  }
};

void fill_occupants(const std::vector<int>& placement, std::vector<int>& occ) {
  occ.assign(placement.size(), -1);
  for (size_t p = 0; p < placement.size(); ++p) occ[placement[p]] = static_cast<int>(p);
}

}  // namespace

std::uint64_t factorial(int n) {
  if (n < 0 || n > kMaxRankedN) throw ParameterError("factorial: out of range");
  return factorial_table()[n];
}

std::uint64_t rank_of(const std::vector<int>& perm) {
  const int n = static_cast<int>(perm.size());
  const std::uint64_t* fact = factorial_table();
  std::uint64_t rank = 0;
  for (int i = 0; i < n; ++i) {
    int smaller = 0;
    for (int j = i + 1; j < n; ++j)
      if (perm[j] < perm[i]) ++smaller;
    rank += static_cast<std::uint64_t>(smaller) * fact[n - 1 - i];
  }
  return rank;
}

std::vector<int> unrank(std::uint64_t rank, int n) {
  const std::uint64_t* fact = factorial_table();
  std::vector<int> items(n);
  for (int t = 0; t < n; ++t) items[t] = t;
  std::vector<int> out(n);
  for (int i = 0; i < n; ++i) {
    std::uint64_t base = fact[n - 1 - i];
    int idx = static_cast<int>(rank / base);
    rank %= base;
    out[i] = items[idx];
    items.erase(items.begin() + idx);
  }
  return out;
}

std::uint64_t default_state_budget() {
  if (const char* env = std::getenv("FS_STATE_BUDGET")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) return v;
  }
  return factorial_table()[9];
}

std::vector<std::uint64_t> neighbors(const Graph& x, const Graph& y,
                                     std::uint64_t state) {
  Expander ex(x, y);
  std::vector<int> placement = unrank(state, ex.n);
  std::vector<int> occ;
  fill_occupants(placement, occ);
  std::vector<std::uint64_t> out;
  ex.expand(placement, occ, out);
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// Layered BFS over the full state space writing distances into dist.
// The parallel kernel expands each layer with OpenMP; the serial loop is the
// reference and both produce identical distance arrays.
void layered_bfs(const Expander& ex, std::uint64_t source,
                 std::vector<std::int32_t>& dist, bool parallel,
                 std::vector<std::uint64_t>* visit_order = nullptr) {
  std::vector<std::uint64_t> frontier{source};
  dist[source] = 0;
  if (visit_order) visit_order->push_back(source);
  std::int32_t layer = 0;
  std::vector<int> placement, occ;
  std::vector<std::uint64_t> scratch;
  while (!frontier.empty()) {
    ++layer;
    std::vector<std::uint64_t> next;
    if (!parallel) {
      for (std::uint64_t s : frontier) {
        placement = unrank(s, ex.n);
        fill_occupants(placement, occ);
        scratch.clear();
        ex.expand(placement, occ, scratch);
        for (std::uint64_t t : scratch)
          if (dist[t] < 0) {
            dist[t] = layer;
            next.push_back(t);
          }
      }
    } else {
#ifdef _OPENMP
      int threads = omp_get_max_threads();
#else
      int threads = 1;
#endif
      std::vector<std::vector<std::uint64_t>> local(threads);
#ifdef _OPENMP
#pragma omp parallel
      {
        int tid = omp_get_thread_num();
        std::vector<int> pl, oc;
        std::vector<std::uint64_t> sc;
#pragma omp for schedule(dynamic, 256)
        for (std::int64_t idx = 0;
             idx < static_cast<std::int64_t>(frontier.size()); ++idx) {
          std::uint64_t s = frontier[idx];
          pl = unrank(s, ex.n);
          fill_occupants(pl, oc);
          sc.clear();
          ex.expand(pl, oc, sc);
          for (std::uint64_t t : sc) {
            std::int32_t expected = -1;
            auto* cell = reinterpret_cast<std::atomic<std::int32_t>*>(&dist[t]);
            if (cell->compare_exchange_strong(expected, layer,
                                              std::memory_order_relaxed))
              local[tid].push_back(t);
          }
        }
      }
#else
      for (std::uint64_t s : frontier) {
        placement = unrank(s, ex.n);
        fill_occupants(placement, occ);
        scratch.clear();
        ex.expand(placement, occ, scratch);
        for (std::uint64_t t : scratch)
          if (dist[t] < 0) {
            dist[t] = layer;
            local[0].push_back(t);
          }
      }
#endif
      for (auto& chunk : local)
        next.insert(next.end(), chunk.begin(), chunk.end());
      // Keep state visit order independent of the thread schedule.
      std::sort(next.begin(), next.end());
    }
    if (visit_order)
      visit_order->insert(visit_order->end(), next.begin(), next.end());
    frontier = std::move(next);
  }
}

long long eccentricity(const Expander& ex, std::uint64_t source,
                       std::vector<std::int32_t>& dist, bool parallel,
                       std::uint64_t* farthest = nullptr) {
  std::fill(dist.begin(), dist.end(), -1);
  layered_bfs(ex, source, dist, parallel);
  long long ecc = 0;
  std::uint64_t arg = source;
  for (std::uint64_t s = 0; s < dist.size(); ++s)
    if (dist[s] > ecc) {
      ecc = dist[s];
      arg = s;
    }
  if (farthest) *farthest = arg;
  return ecc;
}

// Exact diameter of one component by iterative eccentricity refinement:
// double sweep for the lower bound, then eccentricities of vertices in
// decreasing BFS-level order from a sweep midpoint until the level bound
// certifies the maximum.
long long exact_diameter_ifub(const Expander& ex,
                              const std::vector<std::uint64_t>& comp,
                              bool parallel) {
  std::uint64_t total = factorial_table()[ex.n];
  std::vector<std::int32_t> dist(total, -1);
  std::uint64_t v = comp.front(), w = 0;
  eccentricity(ex, v, dist, parallel, &w);
  std::uint64_t far2 = 0;
  long long lb = eccentricity(ex, w, dist, parallel, &far2);
  // Midpoint of the w..far2 geodesic (greedy descent on dist from w).
  std::uint64_t mid = far2;
  {
    std::vector<int> placement, occ;
    std::vector<std::uint64_t> scratch;
    for (long long step = 0; step < lb / 2; ++step) {
      placement = unrank(mid, ex.n);
      fill_occupants(placement, occ);
      scratch.clear();
      ex.expand(placement, occ, scratch);
      for (std::uint64_t t : scratch)
        if (dist[t] == dist[mid] - 1) {
          mid = t;
          break;
        }
    }
  }
  std::vector<std::int32_t> level(total, -1);
  layered_bfs(ex, mid, level, parallel);
  std::vector<std::uint64_t> order(comp);
  std::sort(order.begin(), order.end(), [&](std::uint64_t a, std::uint64_t b) {
    return level[a] != level[b] ? level[a] > level[b] : a < b;
  });
  long long best = lb;
  for (std::uint64_t s : order) {
    if (2LL * level[s] <= best) break;  // no deeper vertex can beat the bound
    long long ecc = eccentricity(ex, s, dist, parallel);
    best = std::max(best, ecc);
  }
  return best;
}

// Relabeling the non-center persons is an automorphism of FS(Star_n, Y) that
// fixes each s-position class, so eccentricity only depends on where s sits;
// for a complete X any person relabeling works and eccentricity is constant.
// This turns exact component diameters into at most n BFS runs.
long long exact_diameter_by_symmetry(const Expander& ex,
                                     const std::vector<std::uint64_t>& comp,
                                     std::optional<int> star_center_person,
                                     bool parallel) {
  std::uint64_t total = factorial(ex.n);
  std::vector<std::int32_t> dist(total, -1);
  if (!star_center_person) {  // complete X
    return eccentricity(ex, comp.front(), dist, parallel);
  }
  std::vector<char> seen(ex.n, 0);
  long long best = 0;
  for (std::uint64_t s : comp) {
    int spos = unrank(s, ex.n)[*star_center_person];
    if (seen[spos]) continue;
    seen[spos] = 1;
    best = std::max(best, eccentricity(ex, s, dist, parallel));
  }
  return best;
}

long long exact_diameter_all_pairs(const Expander& ex,
                                   const std::vector<std::uint64_t>& comp,
                                   bool parallel) {
  std::uint64_t total = factorial_table()[ex.n];
  long long best = 0;
#ifdef _OPENMP
  if (parallel) {
#pragma omp parallel
    {
      std::vector<std::int32_t> dist(total, -1);
      long long local = 0;
#pragma omp for schedule(dynamic, 4)
      for (std::int64_t idx = 0; idx < static_cast<std::int64_t>(comp.size());
           ++idx) {
        std::fill(dist.begin(), dist.end(), -1);
        layered_bfs(ex, comp[idx], dist, false);
        for (std::uint64_t s : comp) local = std::max<long long>(local, dist[s]);
      }
#pragma omp critical
      best = std::max(best, local);
    }
    return best;
  }
#endif
  std::vector<std::int32_t> dist(total, -1);
  for (std::uint64_t s : comp) {
    std::fill(dist.begin(), dist.end(), -1);
    layered_bfs(ex, s, dist, false);
    for (std::uint64_t t : comp) best = std::max<long long>(best, dist[t]);
  }
  return best;
}

}  // namespace

ComponentAnalysis analyze_components(const Graph& x, const Graph& y,
                                     const OracleOptions& opts,
                                     bool with_diameters) {
  if (x.vertex_count() != y.vertex_count())
    throw PreconditionError("oracle: |V(X)| must equal |V(Y)|");
  int n = x.vertex_count();
  if (n > 12 || factorial(n) > opts.state_budget)
    throw StateBudgetError("oracle: n! exceeds the state budget");
  std::uint64_t total = factorial(n);
  Expander ex(x, y);

  ComponentAnalysis out;
  out.component_of.assign(total, -1);
  std::vector<int> placement, occ;
  std::vector<std::uint64_t> scratch;
  for (std::uint64_t root = 0; root < total; ++root) {
    if (out.component_of[root] != -1) continue;
    int id = static_cast<int>(out.summaries.size());
    std::vector<std::uint64_t> comp{root};
    out.component_of[root] = id;
    for (size_t head = 0; head < comp.size(); ++head) {
      placement = unrank(comp[head], n);
      fill_occupants(placement, occ);
      scratch.clear();
      ex.expand(placement, occ, scratch);
      for (std::uint64_t t : scratch)
        if (out.component_of[t] == -1) {
          out.component_of[t] = id;
          comp.push_back(t);
        }
    }
    ComponentSummary summary;
    summary.component_id = id;
    summary.representative = root;
    summary.size = comp.size();
    if (with_diameters) {
      auto center = star_center(x);
      if (comp.size() <= 2) {
        summary.diameter = static_cast<long long>(comp.size()) - 1;
      } else if (is_complete(x)) {
        summary.diameter =
            exact_diameter_by_symmetry(ex, comp, std::nullopt, opts.parallel);
      } else if (center) {
        summary.diameter =
            exact_diameter_by_symmetry(ex, comp, center, opts.parallel);
      } else if (comp.size() <= opts.all_pairs_cap && comp.size() <= 20000) {
        summary.diameter = exact_diameter_all_pairs(ex, comp, opts.parallel);
      } else {
        summary.diameter = exact_diameter_ifub(ex, comp, opts.parallel);
      }
      summary.diameter_exact = true;
    }
    out.summaries.push_back(summary);
  }
  return out;
}

std::vector<ComponentSummary> components(const Graph& x, const Graph& y,
                                         const OracleOptions& opts) {
  return analyze_components(x, y, opts, true).summaries;
}

std::vector<std::int32_t> bfs_from(const Graph& x, const Graph& y,
                                   std::uint64_t source, bool parallel) {
  int n = x.vertex_count();
  Expander ex(x, y);
  std::vector<std::int32_t> dist(factorial(n), -1);
  layered_bfs(ex, source, dist, parallel);
  return dist;
}

namespace {

// One bidirectional side: ranks seen with their predecessor rank.
struct Side {
  std::unordered_map<std::uint64_t, std::uint64_t> parent;
  std::vector<std::uint64_t> frontier;
};

std::vector<std::uint64_t> walk_back(
    const std::unordered_map<std::uint64_t, std::uint64_t>& parent,
    std::uint64_t from) {
  std::vector<std::uint64_t> out{from};
  while (true) {
    auto it = parent.find(out.back());
    if (it == parent.end() || it->second == out.back()) break;
    out.push_back(it->second);
  }
  return out;
}

std::vector<Move> states_to_moves(const std::vector<std::uint64_t>& states,
                                  int n) {
  std::vector<Move> moves;
  for (size_t t = 0; t + 1 < states.size(); ++t) {
    auto a = unrank(states[t], n);
    auto b = unrank(states[t + 1], n);
    int p = -1, q = -1;
    for (int i = 0; i < n; ++i)
      if (a[i] != b[i]) (p < 0 ? p : q) = i;
    if (q < 0) throw InternalError("oracle path: consecutive states equal");
    moves.push_back(Move{a[p], a[q]});
  }
  return moves;
}

}  // namespace

namespace {

// Bidirectional search with full distance byte arrays; used for 10! and 11!
// spaces where hash frontiers would not fit. Layer counts above 254 per side
// are beyond this tool's reach anyway.
std::optional<std::vector<Move>> pair_path_flat(const Expander& ex,
                                                std::uint64_t a,
                                                std::uint64_t b) {
  int n = ex.n;
  std::uint64_t total = factorial(n);
  std::vector<std::uint8_t> da(total, 255), db(total, 255);
  std::vector<std::vector<std::uint64_t>> frontiers(2);
  da[a] = 0;
  db[b] = 0;
  frontiers[0] = {a};
  frontiers[1] = {b};
  std::array<std::uint8_t, 2> depth{0, 0};
  std::optional<std::uint64_t> meet;
  std::vector<int> placement, occ;
  std::vector<std::uint64_t> scratch;
  while (!meet && !frontiers[0].empty() && !frontiers[1].empty()) {
    int side = frontiers[0].size() <= frontiers[1].size() ? 0 : 1;
    auto& dist = side == 0 ? da : db;
    auto& other = side == 0 ? db : da;
    if (depth[side] == 254)
      throw StateBudgetError("pair query exceeded the depth limit");
    std::vector<std::uint64_t> next;
    std::uint8_t layer = ++depth[side];
    for (std::uint64_t s : frontiers[side]) {
      placement = unrank(s, n);
      fill_occupants(placement, occ);
      scratch.clear();
      ex.expand(placement, occ, scratch);
      for (std::uint64_t t : scratch) {
        if (dist[t] != 255) continue;
        dist[t] = layer;
        next.push_back(t);
        if (other[t] != 255) {
          meet = t;
          break;
        }
      }
      if (meet) break;
    }
    frontiers[side] = std::move(next);
  }
  if (!meet) return std::nullopt;
  auto descend = [&](std::vector<std::uint8_t>& dist, std::uint64_t from_state) {
    std::vector<std::uint64_t> states{from_state};
    std::vector<int> pl, oc;
    std::vector<std::uint64_t> sc;
    while (dist[states.back()] > 0) {
      pl = unrank(states.back(), n);
      fill_occupants(pl, oc);
      sc.clear();
      ex.expand(pl, oc, sc);
      bool moved = false;
      for (std::uint64_t t : sc)
        if (dist[t] == dist[states.back()] - 1) {
          states.push_back(t);
          moved = true;
          break;
        }
      if (!moved) throw InternalError("pair query: descent failed");
    }
    return states;
  };
  auto half_a = descend(da, *meet);  // meet .. a
  std::reverse(half_a.begin(), half_a.end());
  auto half_b = descend(db, *meet);  // meet .. b
  std::vector<std::uint64_t> states(half_a);
  states.insert(states.end(), half_b.begin() + 1, half_b.end());
  return states_to_moves(states, n);
}

}  // namespace

std::optional<std::vector<Move>> pair_path(const Graph& x, const Graph& y,
                                           const Configuration& from,
                                           const Configuration& to,
                                           std::uint64_t max_states) {
  int n = x.vertex_count();
  if (n > 20) throw StateBudgetError("pair query: permutations unrankable");
  std::uint64_t a = rank_of(from), b = rank_of(to);
  if (a == b) return std::vector<Move>{};
  if (n >= 10 && n <= 11) return pair_path_flat(Expander(x, y), a, b);
  // Otherwise hash frontiers: full spaces up to 9! and, beyond 11 vertices,
  // hosts whose components stay within max_states.
  Expander ex(x, y);
  Side fwd, bwd;
  fwd.parent[a] = a;
  fwd.frontier = {a};
  bwd.parent[b] = b;
  bwd.frontier = {b};
  std::vector<int> placement, occ;
  std::vector<std::uint64_t> scratch;
  while (!fwd.frontier.empty() && !bwd.frontier.empty()) {
    Side& grow = fwd.frontier.size() <= bwd.frontier.size() ? fwd : bwd;
    Side& other = (&grow == &fwd) ? bwd : fwd;
    if (grow.parent.size() > max_states)
      throw StateBudgetError("pair query exceeded exploration budget");
    std::vector<std::uint64_t> next;
    std::optional<std::uint64_t> meet;
    for (std::uint64_t s : grow.frontier) {
      placement = unrank(s, n);
      fill_occupants(placement, occ);
      scratch.clear();
      ex.expand(placement, occ, scratch);
      for (std::uint64_t t : scratch) {
        if (grow.parent.count(t)) continue;
        grow.parent[t] = s;
        next.push_back(t);
        if (other.parent.count(t)) {
          meet = t;
          break;
        }
      }
      if (meet) break;
    }
    if (meet) {
      auto half_a = walk_back(fwd.parent, *meet);
      std::reverse(half_a.begin(), half_a.end());  // a .. meet
      auto half_b = walk_back(bwd.parent, *meet);  // meet .. b
      std::vector<std::uint64_t> states(half_a);
      states.insert(states.end(), half_b.begin() + 1, half_b.end());
      return states_to_moves(states, n);
    }
    grow.frontier = std::move(next);
  }
  return std::nullopt;
}

long long pair_distance(const Graph& x, const Graph& y,
                        const Configuration& from, const Configuration& to,
                        std::uint64_t max_states) {
  auto path = pair_path(x, y, from, to, max_states);
  return path ? static_cast<long long>(path->size()) : -1;
}

std::vector<Move> diameter_geodesic(const Graph& x, const Graph& y,
                                    const Configuration& inside,
                                    const OracleOptions& opts,
                                    Configuration* start_out) {
  int n = x.vertex_count();
  if (factorial(n) > opts.state_budget)
    throw StateBudgetError("diameter_geodesic: n! exceeds the state budget");
  Expander ex(x, y);
  std::uint64_t total = factorial(n);
  std::vector<std::int32_t> dist(total, -1);
  std::uint64_t v = rank_of(inside);
  layered_bfs(ex, v, dist, opts.parallel);
  std::vector<std::uint64_t> comp;
  for (std::uint64_t s = 0; s < total; ++s)
    if (dist[s] >= 0) comp.push_back(s);

  // Peripheral pair (w, far2) realizing the exact component diameter.
  std::uint64_t w = v, far2 = v;
  long long diam = -1;
  auto probe = [&](std::uint64_t s) {
    std::uint64_t far = 0;
    long long ecc = eccentricity(ex, s, dist, opts.parallel, &far);
    if (ecc > diam) {
      diam = ecc;
      w = s;
      far2 = far;
    }
  };
  auto center = star_center(x);
  if (is_complete(x)) {
    probe(comp.front());
  } else if (center) {
    std::vector<char> seen(n, 0);
    for (std::uint64_t s : comp) {
      int spos = unrank(s, n)[*center];
      if (seen[spos]) continue;
      seen[spos] = 1;
      probe(s);
    }
  } else {
    long long exact = comp.size() <= 20000
                          ? exact_diameter_all_pairs(ex, comp, opts.parallel)
                          : exact_diameter_ifub(ex, comp, opts.parallel);
    for (std::uint64_t s : comp) {
      probe(s);
      if (diam == exact) break;
    }
  }
  std::fill(dist.begin(), dist.end(), -1);
  layered_bfs(ex, w, dist, opts.parallel);
  // Greedy descent from far2 back to w.
  std::vector<std::uint64_t> states{far2};
  std::vector<int> placement, occ;
  std::vector<std::uint64_t> scratch;
  while (dist[states.back()] > 0) {
    placement = unrank(states.back(), n);
    fill_occupants(placement, occ);
    scratch.clear();
    ex.expand(placement, occ, scratch);
    bool moved = false;
    for (std::uint64_t t : scratch)
      if (dist[t] == dist[states.back()] - 1) {
        states.push_back(t);
        moved = true;
        break;
      }
    if (!moved) throw InternalError("diameter_geodesic: descent failed");
  }
  std::reverse(states.begin(), states.end());  // w .. far2
  if (start_out) *start_out = unrank_config(states.front(), n);
  return states_to_moves(states, n);
}

std::vector<SweepRow> diameter_sweep(Family fx, Family fy, int n_lo, int n_hi,
                                     const OracleOptions& opts) {
  std::vector<SweepRow> rows;
  for (int n = n_lo; n <= n_hi; ++n) {
    Graph x = family(fx, n);
    Graph y = family(fy, n);
    for (const auto& summary : components(x, y, opts))
      rows.push_back(SweepRow{n, summary.component_id, summary.size,
                              summary.diameter});
  }
  return rows;
}

}  // namespace fsg::oracle
