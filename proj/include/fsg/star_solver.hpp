#ifndef FSG_STAR_SOLVER_HPP
#define FSG_STAR_SOLVER_HPP

#include <array>
#include <string>

#include "fsg/fs_core.hpp"
#include "fsg/graph.hpp"
#include "fsg/theta_moves.hpp"

namespace fsg {

// Moves the three persons (whose current seats form a two-edge path) onto the
// target two-edge path as a set. Found by BFS over (triple seats, s seat)
// macro states, so the emitted length never exceeds the O(n^2) walk the
// cycle-chain argument guarantees. Other persons may end up displaced; the
// callers always unwind the transport.
MoveSequence transport_triple(const Graph& y, const Configuration& c,
                              int s_person, const std::array<int, 3>& persons,
                              const std::array<int, 3>& target_positions);

// Swaps the occupants of the distinguished frame edge (a,b) = (x,y) of the
// host's odd-cycle theta frame, restoring everyone else. Host must be
// biconnected, non-bipartite, not a cycle and not theta(1,2,2).
MoveSequence elementary_transposition(const Graph& y, const Configuration& c,
                                      int s_person, int a, int b);

// Realizes the 3-cycle sending the occupant of a to b, of b to cpos and of
// cpos to a; (a,b) and (b,cpos) must be edges and s must sit elsewhere.
// Host biconnected, not a cycle.
MoveSequence elementary_3cycle(const Graph& y, const Configuration& c,
                               int s_person, int a, int b, int cpos);

// Swaps the occupants across two vertex-disjoint edges simultaneously by
// chaining 3-cycles along a path between them.
MoveSequence elementary_double_transposition(const Graph& y,
                                             const Configuration& c,
                                             int s_person, Edge ab, Edge cd);

// Swaps the occupants of one Y-edge (u,v), restoring everyone else, by
// carrying the pair around a cycle to the distinguished frame edge. The
// workhorse of the non-bipartite branch.
MoveSequence swap_adjacent_pair(const Graph& y, const Configuration& c,
                                int s_person, int u, int v);

SolveReport solve_star_biconnected(const Graph& y, const Configuration& from,
                                   const Configuration& to, int s_person = 0);

// Full router: forests directly, biconnected hosts via the elementary-move
// compiler, everything else by cut-vertex recursion.
SolveReport solve_star(const Graph& y, const Configuration& from,
                       const Configuration& to, int s_person = 0);

// Reachability classification along the same recursion, without constructing
// moves. certificate names the rule that decided.
ComponentVerdict decide_star(const Graph& y, const Configuration& c1,
                             const Configuration& c2, int s_person = 0);

}  // namespace fsg

#endif  // FSG_STAR_SOLVER_HPP
