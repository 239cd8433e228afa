#include "fsg/dense_solver.hpp"

#include <algorithm>

#include "fsg/constants.hpp"
#include "fsg/errors.hpp"
#include "fsg/kn_solver.hpp"
#include "fsg/star_solver.hpp"

namespace fsg {

namespace {

void check_inputs(const Graph& x, const Graph& y, const Configuration& from,
                  const Configuration& to) {
  if (x.vertex_count() != y.vertex_count())
    throw PreconditionError("dense solver: |V(X)| must equal |V(Y)|");
  if (from.size() != x.vertex_count() || to.size() != x.vertex_count())
    throw PreconditionError("dense solver: configuration size mismatch");
  if (!is_connected(x) || !is_connected(y))
    throw DegreeConditionError("dense solver: X and Y must be connected");
}

// The K_n plan over the friendship graph: a sequence of person pairs, each
// adjacent in X, whose seat exchanges turn `from` into `to`. This is the
// role-inverted route through FS(X, K_n).
std::vector<std::pair<int, int>> person_plan(const Graph& x,
                                             const Configuration& from,
                                             const Configuration& to) {
  Configuration inv_from{from.occupants()};
  Configuration inv_to{to.occupants()};
  auto plan = solve_kn_plan(x, inv_from, inv_to);
  std::vector<std::pair<int, int>> out;
  // In the inverted instance positions are X-vertices, i.e. persons.
  for (const auto& m : plan.moves) out.emplace_back(m.ypos_a, m.ypos_b);
  return out;
}

}  // namespace

bool dense_exchange_condition(const Graph& x, const Graph& y) {
  int n = x.vertex_count();
  int dx = min_degree(x), dy = min_degree(y);
  return std::min(dx, dy) + 2 * std::max(dx, dy) >= 2 * n;
}

bool dense_3swap_condition(const Graph& x, const Graph& y) {
  int n = x.vertex_count();
  return 2 * (min_degree(x) + min_degree(y)) >= 3 * n;
}

bool dense_bangachev_condition(const Graph& x, const Graph& y) {
  int n = x.vertex_count();
  int dx = min_degree(x), dy = min_degree(y);
  return 2 * dx > n && 2 * dy > n &&
         2 * std::min(dx, dy) + 3 * std::max(dx, dy) >= 3 * n;
}

SolveReport solve_dense_3swap(const Graph& x, const Graph& y,
                              const Configuration& from,
                              const Configuration& to) {
  check_inputs(x, y, from, to);
  if (!dense_3swap_condition(x, y))
    throw DegreeConditionError("solve_dense_3swap: d(X)+d(Y) < 3n/2");
  int n = x.vertex_count();
  SolveReport report;
  report.solver_id = "dense3";
  report.bound_budget = 3LL * n * (n - 1) / 2;
  report.reachable = true;

  Configuration c = from;
  std::vector<Move> moves;
  auto apply = [&](int pa, int pb) {
    moves.push_back(Move{pa, pb});
    auto occ = c.occupants();
    std::swap(c.placement[occ[pa]], c.placement[occ[pb]]);
  };
  for (auto [p, q] : person_plan(x, from, to)) {
    int a = c.placement[p], b = c.placement[q];
    // Witness r adjacent to both seats in Y whose occupant is adjacent to
    // both persons in X; the degree condition leaves at least one choice.
    auto occ = c.occupants();
    int r = -1;
    for (int cand = 0; cand < n && r < 0; ++cand) {
      if (cand == a || cand == b) continue;
      if (!y.has_edge(cand, a) || !y.has_edge(cand, b)) continue;
      int w = occ[cand];
      if (x.has_edge(w, p) && x.has_edge(w, q)) r = cand;
    }
    if (r < 0)
      throw InternalError("solve_dense_3swap: witness missing despite the bound");
    apply(r, a);  // p -> r, witness -> a
    apply(r, b);  // p -> b, q -> r
    apply(r, a);  // q -> a, witness home
    if (c.placement[p] != b || c.placement[q] != a)
      throw InternalError("solve_dense_3swap: 3-swap did not transpose");
  }
  if (c != to) throw InternalError("solve_dense_3swap: target missed");
  report.length = static_cast<long long>(moves.size());
  report.sequence = MoveSequence{from, std::move(moves)};
  return report;
}

SolveReport solve_dense_exchange(const Graph& x, const Graph& y,
                                 const Configuration& from,
                                 const Configuration& to) {
  check_inputs(x, y, from, to);
  if (!dense_exchange_condition(x, y))
    throw DegreeConditionError(
        "solve_dense_exchange: min+2max degree condition fails");
  int n = x.vertex_count();
  SolveReport report;
  report.solver_id = "dense-exchange";
  report.bound_budget = constants().k_dense * static_cast<long long>(n) * n *
                        n * n * n * n;
  report.reachable = true;

  Configuration c = from;
  std::vector<Move> moves;
  for (auto [p, q] : person_plan(x, from, to)) {
    // Q = seats of the closed X-neighborhood of the moving person p, derived
    // from the live configuration.
    std::vector<int> seats;
    for (int w : closed_neighborhood(x, p)) seats.push_back(c.placement[w]);
    auto sub = induced_subgraph(y, seats);
    // Local instance with p as the star center.
    std::vector<int> persons;  // local person id -> global person
    for (int w : closed_neighborhood(x, p)) persons.push_back(w);
    std::sort(persons.begin(), persons.end());
    Configuration local_from, local_to;
    int m = static_cast<int>(persons.size());
    local_from.placement.resize(m);
    for (int t = 0; t < m; ++t)
      local_from.placement[t] = sub.from_host[c.placement[persons[t]]];
    local_to = local_from;
    int lp = static_cast<int>(
        std::find(persons.begin(), persons.end(), p) - persons.begin());
    int lq = static_cast<int>(
        std::find(persons.begin(), persons.end(), q) - persons.begin());
    std::swap(local_to.placement[lp], local_to.placement[lq]);
    auto sub_report = solve_star(sub.graph, local_from, local_to, lp);
    if (!sub_report.reachable)
      throw InternalError(
          "solve_dense_exchange: star subproblem unsolvable despite the bound");
    auto occ = c.occupants();
    for (const auto& lm : sub_report.sequence->moves) {
      Move m_host{sub.to_host[lm.ypos_a], sub.to_host[lm.ypos_b]};
      moves.push_back(m_host);
      int pa = occ[m_host.ypos_a], pb = occ[m_host.ypos_b];
      std::swap(c.placement[pa], c.placement[pb]);
      std::swap(occ[m_host.ypos_a], occ[m_host.ypos_b]);
    }
  }
  if (c != to) throw InternalError("solve_dense_exchange: target missed");
  report.length = static_cast<long long>(moves.size());
  report.sequence = MoveSequence{from, std::move(moves)};
  return report;
}

}  // namespace fsg
