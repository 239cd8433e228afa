#ifndef FSG_FS_CORE_HPP
#define FSG_FS_CORE_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "fsg/graph.hpp"

namespace fsg {

// placement[p] = position in Y of person p. Always a permutation of 0..n-1.
struct Configuration {
  std::vector<int> placement;

  static Configuration identity(int n);
  int size() const { return static_cast<int>(placement.size()); }
  int position_of(int person) const { return placement[person]; }
  int person_at(int position) const;
  std::vector<int> occupants() const;  // position -> person
  bool operator==(const Configuration& other) const {
    return placement == other.placement;
  }
  bool operator!=(const Configuration& other) const {
    return placement != other.placement;
  }
};

// A friendly swap, recorded as the two Y-positions whose occupants exchange.
struct Move {
  int ypos_a = -1;
  int ypos_b = -1;
  bool operator==(const Move& other) const {
    return (ypos_a == other.ypos_a && ypos_b == other.ypos_b) ||
           (ypos_a == other.ypos_b && ypos_b == other.ypos_a);
  }
};

struct MoveSequence {
  Configuration start;
  std::vector<Move> moves;
  int length() const { return static_cast<int>(moves.size()); }
};

struct SolveReport {
  bool reachable = false;
  std::optional<MoveSequence> sequence;
  long long length = 0;
  long long bound_budget = 0;
  std::string solver_id;
};

// Swaps the occupants of m's positions. Both adjacency conditions are
// checked: the positions in Y and the occupants in X.
Configuration apply_move(const Graph& x, const Graph& y,
                         const Configuration& c, const Move& m);

// Same check without throwing.
bool move_is_legal(const Graph& x, const Graph& y, const Configuration& c,
                   const Move& m);

// Folds apply_move over the sequence; throws IllegalMoveError with the index
// of the first illegal move and leaves no partial state with the caller.
Configuration replay(const Graph& x, const Graph& y, const MoveSequence& seq);

enum class Parity { even, odd };

// Parity of the permutation restricted to persons != ignore, with positions
// compared in label order.
Parity parity(const Configuration& c, std::optional<int> ignore = {});
long long inversions(const Configuration& c);

struct InvertedInstance {
  Graph x;  // the old movement graph, now the friendship graph
  Graph y;
  Configuration config;  // inverse placement
};
// FS(X, Y) with configuration c viewed as FS(Y, X) with the inverse bijection.
InvertedInstance invert_roles(const Graph& x, const Graph& y,
                              const Configuration& c);
// A legal move in FS(X,Y) maps to the dual move swapping the old occupants'
// roles; valid in the inverted instance.
Move invert_move(const Configuration& before, const Move& m);

struct ComponentVerdict {
  bool same = false;
  std::string certificate;  // which classification rule decided
};

// Exact reachability classification. X must be a star or complete graph for
// the structural rules; otherwise falls back to the oracle when n! fits the
// state budget and throws UnsupportedInstanceError beyond it.
ComponentVerdict same_component(const Graph& x, const Graph& y,
                                const Configuration& c1,
                                const Configuration& c2);

// Star center of x (its unique degree n-1 vertex), or nullopt.
std::optional<int> star_center(const Graph& x);
bool is_complete(const Graph& x);

// Text formats: a configuration is one line of n space-separated integers; a
// move sequence is a "moves k" header followed by k lines "a b".
Configuration read_configuration(std::istream& in);
void write_configuration(std::ostream& out, const Configuration& c);
Configuration load_configuration(const std::string& path);

std::vector<Move> read_moves(std::istream& in);
void write_moves(std::ostream& out, const std::vector<Move>& moves);

}  // namespace fsg

#endif  // FSG_FS_CORE_HPP
