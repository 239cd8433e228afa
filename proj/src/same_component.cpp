#include <set>

#include "fsg/errors.hpp"
#include "fsg/fs_core.hpp"
#include "fsg/oracle.hpp"
#include "fsg/star_solver.hpp"

namespace fsg {

ComponentVerdict same_component(const Graph& x, const Graph& y,
                                const Configuration& c1,
                                const Configuration& c2) {
  if (x.vertex_count() != y.vertex_count())
    throw PreconditionError("same_component: |V(X)| must equal |V(Y)|");
  if (c1.size() != x.vertex_count() || c2.size() != x.vertex_count())
    throw PreconditionError("same_component: configuration size mismatch");

  if (is_complete(x)) {
    // Per Y-component person sets decide reachability under K_n.
    auto ids = component_ids(y);
    auto occ1 = c1.occupants();
    auto occ2 = c2.occupants();
    int comps = 0;
    for (int id : ids) comps = std::max(comps, id + 1);
    for (int want = 0; want < comps; ++want) {
      std::set<int> a, b;
      for (int pos = 0; pos < y.vertex_count(); ++pos)
        if (ids[pos] == want) {
          a.insert(occ1[pos]);
          b.insert(occ2[pos]);
        }
      if (a != b) return ComponentVerdict{false, "kn-person-sets"};
    }
    return ComponentVerdict{true, "kn-person-sets"};
  }

  if (auto center = star_center(x)) return decide_star(y, c1, c2, *center);

  // General X: exhaustive oracle fallback within the state budget.
  std::uint64_t budget = oracle::default_state_budget();
  int n = x.vertex_count();
  if (n > 12 || oracle::factorial(n) > budget)
    throw UnsupportedInstanceError(
        "same_component: X is neither a star nor complete and n! exceeds the "
        "oracle budget");
  auto dist = oracle::bfs_from(x, y, oracle::rank_of(c1), false);
  bool same = dist[oracle::rank_of(c2)] >= 0;
  return ComponentVerdict{same, "oracle-bfs"};
}

}  // namespace fsg
