#ifndef FSG_DENSE_SOLVER_HPP
#define FSG_DENSE_SOLVER_HPP

#include "fsg/fs_core.hpp"
#include "fsg/graph.hpp"

namespace fsg {

// min(dX,dY) + 2 max(dX,dY) >= 2n, the exchange-router condition.
bool dense_exchange_condition(const Graph& x, const Graph& y);
// dX + dY >= 3n/2, the three-swap condition.
bool dense_3swap_condition(const Graph& x, const Graph& y);
// 2 min + 3 max >= 3n with both above n/2 (condition checker only; the
// corresponding router is an open problem).
bool dense_bangachev_condition(const Graph& x, const Graph& y);

// Plans the K_n route over the friendship graph and realizes each adjacent
// transposition with three friendly swaps through a common witness vertex.
// Length at most 3n(n-1)/2.
SolveReport solve_dense_3swap(const Graph& x, const Graph& y,
                              const Configuration& from,
                              const Configuration& to);

// Realizes each planned transposition as a (u,v)-exchange: a star routing
// subproblem on the positions of the moving person's closed neighborhood.
SolveReport solve_dense_exchange(const Graph& x, const Graph& y,
                                 const Configuration& from,
                                 const Configuration& to);

}  // namespace fsg

#endif  // FSG_DENSE_SOLVER_HPP
