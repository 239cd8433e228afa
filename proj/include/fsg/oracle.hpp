#ifndef FSG_ORACLE_HPP
#define FSG_ORACLE_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "fsg/fs_core.hpp"
#include "fsg/graph.hpp"

namespace fsg::oracle {

// Factorial-base (Lehmer) ranking of permutations; the bijection between
// configurations and states 0..n!-1.
std::uint64_t factorial(int n);
std::uint64_t rank_of(const std::vector<int>& perm);
std::vector<int> unrank(std::uint64_t rank, int n);

inline std::uint64_t rank_of(const Configuration& c) {
  return rank_of(c.placement);
}
inline Configuration unrank_config(std::uint64_t rank, int n) {
  return Configuration{unrank(rank, n)};
}

// FS_STATE_BUDGET env override; default 9! full-space states.
std::uint64_t default_state_budget();

struct OracleOptions {
  bool parallel = false;  // serial expansion is the reference implementation
  std::uint64_t state_budget = default_state_budget();
  // Components at most this large get brute all-pairs diameters; larger ones
  // use exact iterative eccentricity refinement (iFub-style). Both exact.
  std::uint64_t all_pairs_cap = 200000;
};

struct ComponentSummary {
  int component_id = 0;
  std::uint64_t representative = 0;  // smallest rank in the component
  std::uint64_t size = 0;
  long long diameter = -1;
  bool diameter_exact = false;
};

struct ComponentAnalysis {
  std::vector<ComponentSummary> summaries;
  std::vector<std::int32_t> component_of;  // state rank -> component id
};

// All configurations one friendly swap away.
std::vector<std::uint64_t> neighbors(const Graph& x, const Graph& y,
                                     std::uint64_t state);

// Full partition of the n!-state space. with_diameters controls whether the
// per-component exact diameters are computed.
ComponentAnalysis analyze_components(const Graph& x, const Graph& y,
                                     const OracleOptions& opts,
                                     bool with_diameters);
std::vector<ComponentSummary> components(const Graph& x, const Graph& y,
                                         const OracleOptions& opts);

// Distances from one state over the full space; -1 for unreachable.
std::vector<std::int32_t> bfs_from(const Graph& x, const Graph& y,
                                   std::uint64_t source, bool parallel);

// Bidirectional pair query with hash frontiers; explores at most max_states
// per side, so it serves hosts whose components are small as well as full
// spaces up to 11!. Returns the move list of a shortest path.
std::optional<std::vector<Move>> pair_path(const Graph& x, const Graph& y,
                                           const Configuration& from,
                                           const Configuration& to,
                                           std::uint64_t max_states);
// -1 when unreachable within the exploration limit.
long long pair_distance(const Graph& x, const Graph& y,
                        const Configuration& from, const Configuration& to,
                        std::uint64_t max_states);

// A geodesic realizing the diameter of the component containing `inside`.
std::vector<Move> diameter_geodesic(const Graph& x, const Graph& y,
                                    const Configuration& inside,
                                    const OracleOptions& opts,
                                    Configuration* start_out = nullptr);

struct SweepRow {
  int n = 0;
  int component_id = 0;
  std::uint64_t size = 0;
  long long diameter = -1;
};
std::vector<SweepRow> diameter_sweep(Family fx, Family fy, int n_lo, int n_hi,
                                     const OracleOptions& opts);

}  // namespace fsg::oracle

#endif  // FSG_ORACLE_HPP
