#ifndef FSG_TESTS_SUPPORT_HPP
#define FSG_TESTS_SUPPORT_HPP

#include <cstdint>
#include <vector>

#include "fsg/fs_core.hpp"
#include "fsg/graph.hpp"

namespace fsg::testsupport {

// Every connected graph on n vertices, one per isomorphism class.
const std::vector<Graph>& connected_catalog(int n);
// Every biconnected graph on n vertices, one per isomorphism class.
const std::vector<Graph>& biconnected_catalog(int n);

// Deterministic scrambles of the identity configuration.
Configuration scramble(int n, std::uint64_t seed);

// Replays and checks the sequence lands on `expect`, using a star X centered
// at s_person.
bool star_replay_reaches(const Graph& y, const MoveSequence& seq,
                         const Configuration& expect, int s_person);

// Brute-force references.
long long brute_cut_vertex_count(const Graph& g, int v);
bool brute_has_odd_cycle(const Graph& g);
std::vector<std::vector<int>> all_simple_cycles(const Graph& g);

}  // namespace fsg::testsupport

#endif  // FSG_TESTS_SUPPORT_HPP
