#include "fsg/experiments.hpp"

#include <algorithm>
#include <cmath>

#include "fsg/errors.hpp"
#include "fsg/kn_solver.hpp"
#include "fsg/oracle.hpp"
#include "fsg/star_solver.hpp"

namespace fsg {

std::uint64_t splitmix64(std::uint64_t state) {
  std::uint64_t z = state + 0x9e3779b97f4a7c15ull;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

std::uint64_t rng_draw(std::uint64_t seed, std::uint64_t index) {
  return splitmix64(splitmix64(seed) ^ (index * 0xd1342543de82ef95ull));
}

Graph sample_gnp(int n, double p, std::uint64_t seed) {
  if (p < 0.0 || p > 1.0) throw ParameterError("sample_gnp: p outside [0,1]");
  std::vector<Edge> edges;
  auto threshold = static_cast<std::uint64_t>(
      p * static_cast<double>(~0ull));
  std::uint64_t index = 0;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      if (p >= 1.0 || rng_draw(seed, index) < threshold)
        edges.emplace_back(u, v);
      ++index;
    }
  return Graph(n, edges);
}

Configuration sample_configuration(int n, std::uint64_t seed) {
  Configuration c = Configuration::identity(n);
  for (int t = n - 1; t > 0; --t) {
    int pick = static_cast<int>(rng_draw(seed, t) % (t + 1));
    std::swap(c.placement[t], c.placement[pick]);
  }
  return c;
}

Graph sample_random_tree(int n, std::uint64_t seed) {
  std::vector<Edge> edges;
  for (int v = 1; v < n; ++v) {
    int parent = static_cast<int>(rng_draw(seed, v) % v);
    edges.push_back(Edge{parent, v});
  }
  return Graph(n, edges);
}

Graph sample_connected_gnp(int n, double p, std::uint64_t seed) {
  for (std::uint64_t round = 0;; ++round) {
    Graph g = sample_gnp(n, p, splitmix64(seed ^ round));
    if (is_connected(g)) return g;
  }
}

WilsonianCheck check_wilsonian(const Graph& g) {
  if (!is_biconnected(g)) return {false, "not-biconnected"};
  if (is_cycle_graph(g) && g.vertex_count() >= 4) return {false, "cycle"};
  if (is_bipartite(g).bipartite) return {false, "bipartite"};
  if (is_theta122(g)) return {false, "theta122"};
  return {true, ""};
}

TrialRecord run_random_exchange_trial(const ExperimentConfig& cfg) {
  Configuration from =
      sample_configuration(cfg.n, rng_draw(cfg.seed, 0xf1ull));
  Configuration to = sample_configuration(cfg.n, rng_draw(cfg.seed, 0xf2ull));
  return run_random_exchange_trial(cfg, from, to);
}

TrialRecord run_random_exchange_trial(const ExperimentConfig& cfg,
                                      const Configuration& from,
                                      const Configuration& to) {
  TrialRecord rec;
  rec.seed = cfg.seed;
  Graph x = sample_gnp(cfg.n, cfg.p, rng_draw(cfg.seed, 0xa1ull));
  Graph y = sample_gnp(cfg.n, cfg.q, rng_draw(cfg.seed, 0xa2ull));

  rec.condition_checks["biconnected_X"] = is_biconnected(x);
  double m = (cfg.n - 1) * cfg.p;
  bool band = true;
  if (m > 0) {
    double eps = std::sqrt(10.0 * std::log(cfg.n) / m);
    for (int v = 0; v < cfg.n; ++v)
      band = band && x.degree(v) >= (1 - eps) * m && x.degree(v) <= (1 + eps) * m;
  }
  rec.condition_checks["degrees_in_band"] = band;

  if (!is_connected(x)) {
    rec.outcome = TrialOutcome::skipped;
    rec.cause = "x-disconnected";
    rec.condition_checks["neighborhood_wilsonian_all_steps"] = false;
    return rec;
  }

  Configuration inv_from{from.occupants()};
  Configuration inv_to{to.occupants()};
  KnPlan plan;
  plan = solve_kn_plan(x, inv_from, inv_to);

  Configuration c = from;
  std::vector<Move> all_moves;
  bool wilsonian_all = true;
  for (const auto& pm : plan.moves) {
    int p = pm.ypos_a, q = pm.ypos_b;  // persons, adjacent in X
    std::vector<int> t_x = closed_neighborhood(x, p);
    std::vector<int> t_y;
    for (int w : t_x) t_y.push_back(c.placement[w]);
    auto sub = induced_subgraph(y, t_y);
    auto check = check_wilsonian(sub.graph);
    if (!check.wilsonian) {
      wilsonian_all = false;
      rec.condition_checks["neighborhood_wilsonian_all_steps"] = false;
      rec.outcome = TrialOutcome::unsolved;
      rec.cause = "H_Y " + check.failing_clause;
      return rec;
    }
    std::vector<int> persons(t_x);
    std::sort(persons.begin(), persons.end());
    int mcount = static_cast<int>(persons.size());
    Configuration local_from;
    local_from.placement.resize(mcount);
    for (int t = 0; t < mcount; ++t)
      local_from.placement[t] = sub.from_host[c.placement[persons[t]]];
    Configuration local_to = local_from;
    int lp = static_cast<int>(
        std::find(persons.begin(), persons.end(), p) - persons.begin());
    int lq = static_cast<int>(
        std::find(persons.begin(), persons.end(), q) - persons.begin());
    std::swap(local_to.placement[lp], local_to.placement[lq]);
    auto sub_report = solve_star(sub.graph, local_from, local_to, lp);
    if (!sub_report.reachable)
      throw InternalError("exchange trial: Wilsonian host but unsolvable");
    auto occ = c.occupants();
    for (const auto& lm : sub_report.sequence->moves) {
      Move host{sub.to_host[lm.ypos_a], sub.to_host[lm.ypos_b]};
      all_moves.push_back(host);
      int pa = occ[host.ypos_a], pb = occ[host.ypos_b];
      std::swap(c.placement[pa], c.placement[pb]);
      std::swap(occ[host.ypos_a], occ[host.ypos_b]);
    }
  }
  rec.condition_checks["neighborhood_wilsonian_all_steps"] = wilsonian_all;
  if (c != to) throw InternalError("exchange trial: target missed");
  double budget = cfg.budget_k * std::pow(static_cast<double>(cfg.n),
                                          static_cast<double>(cfg.budget_d));
  if (static_cast<double>(all_moves.size()) > budget) {
    rec.outcome = TrialOutcome::unsolved;
    rec.cause = "length-budget";
    rec.length = static_cast<long long>(all_moves.size());
    return rec;
  }
  // Replay through the real legality checks.
  MoveSequence seq{from, all_moves};
  rec.replay_verified = replay(x, y, seq) == to;
  if (!rec.replay_verified)
    throw InternalError("exchange trial: replay verification failed");
  rec.outcome = TrialOutcome::solved;
  rec.length = static_cast<long long>(all_moves.size());
  return rec;
}

std::vector<CampaignRow> bn_campaign(int n_lo, int n_hi) {
  std::vector<CampaignRow> rows;
  oracle::OracleOptions opts;
  for (int n = n_lo; n <= n_hi; ++n) {
    Graph x = family(Family::star, n);
    Graph y = family(Family::bn, n);
    long long best = 0;
    for (const auto& s : oracle::components(x, y, opts))
      best = std::max(best, s.diameter);
    rows.push_back(CampaignRow{n, best});
  }
  return rows;
}

std::vector<CampaignRow> reversal_campaign(int n_lo, int n_hi) {
  std::vector<CampaignRow> rows;
  for (int n = n_lo; n <= n_hi; ++n) {
    Graph x = family(Family::complete, n);
    Graph y = family(Family::path, n);
    Configuration id = Configuration::identity(n);
    Configuration rev;
    rev.placement.resize(n);
    for (int p = 0; p < n; ++p) rev.placement[p] = n - 1 - p;
    long long d = oracle::pair_distance(x, y, rev, id, oracle::factorial(n));
    rows.push_back(CampaignRow{n, d});
  }
  return rows;
}

}  // namespace fsg
