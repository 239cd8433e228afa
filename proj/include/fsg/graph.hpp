#ifndef FSG_GRAPH_HPP
#define FSG_GRAPH_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace fsg {

using Edge = std::pair<int, int>;  // stored with first < second

// Immutable simple undirected graph on vertices 0..n-1.
// All queries are const; solvers share Graph values freely across threads.
class Graph {
 public:
  explicit Graph(int n);
  Graph(int n, std::vector<Edge> edges);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<int>& neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }
  bool has_edge(int u, int v) const;

  bool operator==(const Graph& other) const {
    return n_ == other.n_ && edges_ == other.edges_;
  }

 private:
  int n_;
  std::vector<Edge> edges_;          // sorted, unique
  std::vector<std::vector<int>> adj_;  // sorted neighbor lists
};

// Parameters of a theta graph: three internally disjoint endpoint-to-endpoint
// paths with i <= j <= k internal vertices. (i,j) = (0,0) would need parallel
// edges, so it is rejected.
struct ThetaParams {
  int i = 0;
  int j = 0;
  int k = 0;
  int vertex_count() const { return i + j + k + 2; }
};

// A theta subgraph located inside a host graph. Paths are full vertex
// sequences from endp1 to endp2; path_p/q/r are ordered by length.
struct ThetaFrame {
  int endp1 = -1;
  int endp2 = -1;
  std::vector<int> path_p;
  std::vector<int> path_q;
  std::vector<int> path_r;

  ThetaParams params() const {
    return ThetaParams{static_cast<int>(path_p.size()) - 2,
                       static_cast<int>(path_q.size()) - 2,
                       static_cast<int>(path_r.size()) - 2};
  }
  std::vector<int> vertices() const;
  std::vector<Edge> frame_edges() const;
  // The three cycles P+Q, P+R, Q+R as vertex sequences.
  std::vector<std::vector<int>> cycles() const;
  bool contains_odd_cycle() const;
};

enum class Family { path, cycle, star, complete, theta, grid, bn };

// Named graph families. Star center is vertex 0. bn is the n-cycle
// 0-1-...-(n-1)-0 plus the chord (0,2). grid takes n = side*side.
Graph family(Family kind, int n, std::optional<ThetaParams> theta = {});
Graph make_theta(const ThetaParams& p);
// Canonical frame of a standalone theta graph built by make_theta.
ThetaFrame theta_frame_of(const ThetaParams& p);

bool is_connected(const Graph& g);
std::vector<std::vector<int>> components(const Graph& g);
// Component id per vertex, ids ordered by smallest contained vertex.
std::vector<int> component_ids(const Graph& g);

struct BipartiteResult {
  bool bipartite = false;
  std::vector<int> coloring;       // valid 2-coloring when bipartite
  std::vector<int> odd_closed_walk;  // witness odd cycle otherwise
};
BipartiteResult is_bipartite(const Graph& g);

std::vector<int> cut_vertices(const Graph& g);
// n <= 2 convention: a single vertex or a single edge counts as biconnected
// so the cut-vertex recursion has uniform base cases.
bool is_biconnected(const Graph& g);

// Smallest-label vertex whose removal keeps g connected (a spanning tree
// leaf always qualifies, so one exists for every connected g with n >= 2).
int removable_vertex(const Graph& g);

// Shortest path u -> v by BFS with lowest-label tie-breaking; empty when
// unreachable. `forbidden` vertices are skipped (u itself must be allowed).
std::vector<int> shortest_path(const Graph& g, int u, int v,
                               const std::vector<int>& forbidden = {});

// Up to `count` internally vertex-disjoint u-v paths via unit-capacity
// vertex-split flow with BFS augmentation. Deterministic.
std::vector<std::vector<int>> disjoint_paths(const Graph& g, int u, int v,
                                             int count);

// Simple cycle through two distinct edges of a biconnected graph, found by
// subdividing both edges and routing two disjoint paths between the new
// vertices. Returned as a vertex sequence (closed implicitly).
std::vector<int> cycle_through_two_edges(const Graph& g, Edge e1, Edge e2);

// Theta subgraph of a biconnected non-cycle graph. With require_odd_cycle the
// frame contains an odd cycle and is not shaped (1,2,2); the host must then be
// non-bipartite and not itself isomorphic to theta(1,2,2).
ThetaFrame find_theta_subgraph(const Graph& g, bool require_odd_cycle);

int min_degree(const Graph& g);
std::vector<int> closed_neighborhood(const Graph& g, int v);

struct InducedSubgraph {
  Graph graph;
  std::vector<int> to_host;    // new label -> host label
  std::vector<int> from_host;  // host label -> new label or -1
};
InducedSubgraph induced_subgraph(const Graph& g, const std::vector<int>& s);

// Backtracking isomorphism test for graphs up to 16 vertices.
bool is_isomorphic_small(const Graph& g, const Graph& h);
// Also returns a vertex map g -> h when isomorphic.
std::optional<std::vector<int>> isomorphism_small(const Graph& g,
                                                  const Graph& h);

bool is_theta122(const Graph& g);
bool is_cycle_graph(const Graph& g);
bool is_tree(const Graph& g);

// Edge-list text format: "n m" header, then "u v" lines; '#' starts comments.
Graph read_edge_list(std::istream& in);
void write_edge_list(std::ostream& out, const Graph& g);
Graph load_edge_list(const std::string& path);

}  // namespace fsg

#endif  // FSG_GRAPH_HPP
