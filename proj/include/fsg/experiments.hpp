#ifndef FSG_EXPERIMENTS_HPP
#define FSG_EXPERIMENTS_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "fsg/fs_core.hpp"
#include "fsg/graph.hpp"

namespace fsg {

// Counter-based generator behind all random sampling; fixed across platforms.
inline constexpr const char* kRngVersion = "splitmix64-v1";
std::uint64_t splitmix64(std::uint64_t state);
// Stream member i of the given seed.
std::uint64_t rng_draw(std::uint64_t seed, std::uint64_t index);

struct ExperimentConfig {
  int n = 100;
  double p = 0.6;
  double q = 0.6;
  int trials = 50;
  std::uint64_t seed = 1;
  // Pass criterion: solved length <= budget_k * n^budget_d.
  int budget_d = 6;
  double budget_k = 600;
  // Relaxed-constant regime pq >= c log n / n; the paper's 100 is
  // unsatisfiable at desk scale, so c defaults to 10 and is reported.
  double c_constant = 10;
};

// Each unordered pair appears independently with probability p under the
// seed's dedicated stream.
Graph sample_gnp(int n, double p, std::uint64_t seed);
// A uniformly random configuration under the seed's stream.
Configuration sample_configuration(int n, std::uint64_t seed);
Graph sample_random_tree(int n, std::uint64_t seed);
// Random connected graph: G(n,p) resampled until connected.
Graph sample_connected_gnp(int n, double p, std::uint64_t seed);

struct WilsonianCheck {
  bool wilsonian = false;
  std::string failing_clause;  // empty when wilsonian
};
WilsonianCheck check_wilsonian(const Graph& g);

enum class TrialOutcome { solved, unsolved, skipped };

struct TrialRecord {
  std::uint64_t seed = 0;
  std::map<std::string, bool> condition_checks;
  TrialOutcome outcome = TrialOutcome::skipped;
  std::string cause;  // why unsolved/skipped
  long long length = 0;
  bool replay_verified = false;
};

// Samples X ~ G(n,p) and Y ~ G(n,q), plans adjacent-in-X transpositions via
// the role-inverted K_n route and realizes each one through a star subproblem
// on the moving person's neighborhood seats, provided that induced host is
// Wilsonian. Never retries failed conditions.
TrialRecord run_random_exchange_trial(const ExperimentConfig& cfg,
                                      const Configuration& from,
                                      const Configuration& to);
// Trial with from/to drawn from the trial's own stream.
TrialRecord run_random_exchange_trial(const ExperimentConfig& cfg);

struct CampaignRow {
  int n = 0;
  long long value = 0;
};
// Exact FS(Star_n, B_n) max component diameters.
std::vector<CampaignRow> bn_campaign(int n_lo, int n_hi);
// Exact FS(K_n, Path_n) distance between reversal and identity.
std::vector<CampaignRow> reversal_campaign(int n_lo, int n_hi);

}  // namespace fsg

#endif  // FSG_EXPERIMENTS_HPP
