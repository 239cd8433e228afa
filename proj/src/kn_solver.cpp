#include "fsg/kn_solver.hpp"

#include <algorithm>
#include <set>

#include "fsg/errors.hpp"

namespace fsg {

namespace {

// Routes every person of one connected residual piece home. Appends the
// emitted position swaps and their freeze phase, updating occ/placement.
void route_component(const Graph& y, const std::vector<int>& comp_vertices,
                     const Configuration& target, std::vector<int>& placement,
                     std::vector<int>& occ, std::vector<Move>& moves,
                     std::vector<int>& phase_of, int& phase) {
  std::vector<int> residual(comp_vertices);
  std::sort(residual.begin(), residual.end());
  while (residual.size() > 1) {
    auto sub = induced_subgraph(y, residual);
    // Smallest-label vertex whose removal keeps the residual connected.
    auto cuts = cut_vertices(sub.graph);
    int v_local = -1;
    for (int cand = 0; cand < sub.graph.vertex_count(); ++cand)
      if (!std::binary_search(cuts.begin(), cuts.end(), cand)) {
        v_local = cand;
        break;
      }
    if (v_local < 0) throw InternalError("solve_kn: no removable vertex");
    int v = sub.to_host[v_local];
    int person = target.person_at(v);
    int src = placement[person];
    auto path_local =
        shortest_path(sub.graph, sub.from_host[src], v_local);
    if (path_local.empty()) throw InternalError("solve_kn: routing failed");
    for (size_t t = 0; t + 1 < path_local.size(); ++t) {
      int a = sub.to_host[path_local[t]];
      int b = sub.to_host[path_local[t + 1]];
      moves.push_back(Move{a, b});
      phase_of.push_back(phase);
      int pa = occ[a], pb = occ[b];
      std::swap(placement[pa], placement[pb]);
      std::swap(occ[a], occ[b]);
    }
    residual.erase(std::find(residual.begin(), residual.end(), v));
    ++phase;
  }
}

}  // namespace

SolveReport solve_kn(const Graph& y, const Configuration& from,
                     const Configuration& to) {
  int n = y.vertex_count();
  if (from.size() != n || to.size() != n)
    throw PreconditionError("solve_kn: configuration size mismatch");
  SolveReport report;
  report.solver_id = "kn";
  report.bound_budget = static_cast<long long>(n) * (n - 1) / 2;

  // Reachable iff every Y-component carries the same person set in both
  // configurations.
  auto ids = component_ids(y);
  auto comps = components(y);
  auto occ_from = from.occupants();
  auto occ_to = to.occupants();
  for (const auto& comp : comps) {
    std::set<int> a, b;
    for (int v : comp) {
      a.insert(occ_from[v]);
      b.insert(occ_to[v]);
    }
    if (a != b) {
      report.reachable = false;
      return report;
    }
  }

  report.reachable = true;
  std::vector<int> placement = from.placement;
  std::vector<int> occ = occ_from;
  std::vector<Move> moves;
  std::vector<int> phase_of;
  int phase = 0;
  for (const auto& comp : comps)
    route_component(y, comp, to, placement, occ, moves, phase_of, phase);
  if (placement != to.placement)
    throw InternalError("solve_kn: routing did not reach the target");
  report.length = static_cast<long long>(moves.size());
  report.sequence = MoveSequence{from, std::move(moves)};
  return report;
}

KnPlan solve_kn_plan(const Graph& y, const Configuration& from,
                     const Configuration& to) {
  if (!is_connected(y)) throw PreconditionError("solve_kn_plan: Y disconnected");
  KnPlan plan;
  std::vector<int> placement = from.placement;
  std::vector<int> occ = from.occupants();
  int phase = 0;
  route_component(y, components(y).front(), to, placement, occ, plan.moves,
                  plan.phase_of, phase);
  if (placement != to.placement)
    throw InternalError("solve_kn_plan: routing did not reach the target");
  if (plan.moves.size() % 2 != 0) {
    plan.odd_length = true;
    return plan;
  }
  for (size_t t = 0; t + 1 < plan.moves.size(); t += 2) {
    const Move& m1 = plan.moves[t];
    const Move& m2 = plan.moves[t + 1];
    bool good = m1.ypos_a == m2.ypos_a || m1.ypos_a == m2.ypos_b ||
                m1.ypos_b == m2.ypos_a || m1.ypos_b == m2.ypos_b;
    plan.pair_good.push_back(good);
    if (!good) ++plan.bad_pairs;
  }
  return plan;
}

}  // namespace fsg
