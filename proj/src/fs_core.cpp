#include "fsg/fs_core.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>

#include "fsg/errors.hpp"

namespace fsg {

Configuration Configuration::identity(int n) {
  Configuration c;
  c.placement.resize(n);
  std::iota(c.placement.begin(), c.placement.end(), 0);
  return c;
}

int Configuration::person_at(int position) const {
  for (int p = 0; p < size(); ++p)
    if (placement[p] == position) return p;
  throw PreconditionError("person_at: position out of range");
}

std::vector<int> Configuration::occupants() const {
  std::vector<int> occ(placement.size(), -1);
  for (int p = 0; p < size(); ++p) occ[placement[p]] = p;
  return occ;
}

bool move_is_legal(const Graph& x, const Graph& y, const Configuration& c,
                   const Move& m) {
  if (!y.has_edge(m.ypos_a, m.ypos_b)) return false;
  auto occ = c.occupants();
  return x.has_edge(occ[m.ypos_a], occ[m.ypos_b]);
}

Configuration apply_move(const Graph& x, const Graph& y,
                         const Configuration& c, const Move& m) {
  if (!y.has_edge(m.ypos_a, m.ypos_b))
    throw IllegalMoveError(IllegalMoveError::Kind::not_y_adjacent, -1,
                           "positions " + std::to_string(m.ypos_a) + "," +
                               std::to_string(m.ypos_b) +
                               " are not adjacent in Y");
  auto occ = c.occupants();
  int pa = occ[m.ypos_a], pb = occ[m.ypos_b];
  if (!x.has_edge(pa, pb))
    throw IllegalMoveError(IllegalMoveError::Kind::not_x_adjacent, -1,
                           "persons " + std::to_string(pa) + "," +
                               std::to_string(pb) + " are not adjacent in X");
  Configuration out = c;
  std::swap(out.placement[pa], out.placement[pb]);
  return out;
}

Configuration replay(const Graph& x, const Graph& y, const MoveSequence& seq) {
  Configuration c = seq.start;
  for (size_t t = 0; t < seq.moves.size(); ++t) {
    try {
      c = apply_move(x, y, c, seq.moves[t]);
    } catch (const IllegalMoveError& err) {
      throw IllegalMoveError(err.kind, static_cast<int>(t),
                             "illegal move at index " + std::to_string(t) +
                                 ": " + err.what());
    }
  }
  return c;
}

long long inversions(const Configuration& c) {
  long long count = 0;
  int n = c.size();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (c.placement[j] < c.placement[i]) ++count;
  return count;
}

Parity parity(const Configuration& c, std::optional<int> ignore) {
  std::vector<int> vals;
  vals.reserve(c.placement.size());
  for (int p = 0; p < c.size(); ++p)
    if (!ignore || p != *ignore) vals.push_back(c.placement[p]);
  long long inv = 0;
  for (size_t i = 0; i < vals.size(); ++i)
    for (size_t j = i + 1; j < vals.size(); ++j)
      if (vals[j] < vals[i]) ++inv;
  return inv % 2 == 0 ? Parity::even : Parity::odd;
}

InvertedInstance invert_roles(const Graph& x, const Graph& y,
                              const Configuration& c) {
  Configuration inv;
  inv.placement.assign(c.placement.size(), -1);
  for (int p = 0; p < c.size(); ++p) inv.placement[c.placement[p]] = p;
  return InvertedInstance{y, x, inv};
}

Move invert_move(const Configuration& before, const Move& m) {
  auto occ = before.occupants();
  return Move{occ[m.ypos_a], occ[m.ypos_b]};
}

std::optional<int> star_center(const Graph& x) {
  int n = x.vertex_count();
  if (n == 1) return 0;
  if (n == 2) return x.has_edge(0, 1) ? std::optional<int>(0) : std::nullopt;
  int center = -1;
  for (int v = 0; v < n; ++v) {
    if (x.degree(v) == n - 1) {
      if (center != -1) return {};  // two hubs: not a star
      center = v;
    } else if (x.degree(v) != 1) {
      return {};
    }
  }
  if (center == -1) return {};
  return center;
}

bool is_complete(const Graph& x) {
  long long n = x.vertex_count();
  return x.edge_count() == n * (n - 1) / 2;
}

Configuration read_configuration(std::istream& in) {
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::istringstream ls(line);
    std::vector<int> vals;
    int v;
    while (ls >> v) vals.push_back(v);
    if (vals.empty()) continue;
    Configuration c{std::move(vals)};
    std::vector<int> sorted(c.placement);
    std::sort(sorted.begin(), sorted.end());
    for (int t = 0; t < c.size(); ++t)
      if (sorted[t] != t)
        throw ParameterError("configuration is not a permutation of 0..n-1");
    return c;
  }
  throw ParameterError("configuration: no data");
}

void write_configuration(std::ostream& out, const Configuration& c) {
  for (int p = 0; p < c.size(); ++p) {
    if (p) out << ' ';
    out << c.placement[p];
  }
  out << '\n';
}

Configuration load_configuration(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParameterError("cannot open configuration: " + path);
  return read_configuration(in);
}

std::vector<Move> read_moves(std::istream& in) {
  std::string line;
  long long k = -1;
  std::vector<Move> moves;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::istringstream ls(line);
    if (k < 0) {
      std::string word;
      if (ls >> word) {
        if (word != "moves") throw ParameterError("moves: expected header");
        if (!(ls >> k)) throw ParameterError("moves: bad header count");
      }
      continue;
    }
    int a, b;
    if (ls >> a >> b) moves.push_back(Move{a, b});
  }
  if (k < 0) throw ParameterError("moves: missing header");
  if (static_cast<long long>(moves.size()) != k)
    throw ParameterError("moves: count mismatch with header");
  return moves;
}

void write_moves(std::ostream& out, const std::vector<Move>& moves) {
  out << "moves " << moves.size() << '\n';
  for (const auto& m : moves) out << m.ypos_a << ' ' << m.ypos_b << '\n';
}

}  // namespace fsg
