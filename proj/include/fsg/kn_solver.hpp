#ifndef FSG_KN_SOLVER_HPP
#define FSG_KN_SOLVER_HPP

#include <vector>

#include "fsg/fs_core.hpp"
#include "fsg/graph.hpp"

namespace fsg {

// FS(K_n, Y) router: freeze removable vertices one at a time, routing each
// target's person through the shrinking residual graph. At most C(n,2) swaps.
SolveReport solve_kn(const Graph& y, const Configuration& from,
                     const Configuration& to);

struct KnPlan {
  std::vector<Move> moves;      // position transpositions, in order
  std::vector<int> phase_of;    // freeze phase that produced each move
  bool odd_length = false;
  // Pairs (0,1), (2,3), ...; pair_good[t] is true when the two edges of pair
  // t share a vertex. Only filled when the plan has even length.
  std::vector<bool> pair_good;
  int bad_pairs = 0;
};

// The solve_kn move list for a connected Y, chunked into consecutive pairs
// tagged good (edges share a vertex) or bad. Bad pairs only arise across
// phase boundaries, so there are at most n of them.
KnPlan solve_kn_plan(const Graph& y, const Configuration& from,
                     const Configuration& to);

}  // namespace fsg

#endif  // FSG_KN_SOLVER_HPP
