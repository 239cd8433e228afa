#include <doctest.h>

#include <set>

#include "fsg/errors.hpp"
#include "fsg/experiments.hpp"
#include "fsg/oracle.hpp"
#include "fsg/star_solver.hpp"
#include "support.hpp"

using namespace fsg;
namespace ts = fsg::testsupport;

namespace {

Graph star_x(int n) { return family(Family::star, n); }

// Hosts for gadget tests: biconnected, not a cycle.
std::vector<Graph> gadget_hosts(int n, bool nonbipartite_only) {
  std::vector<Graph> out;
  for (const auto& g : ts::biconnected_catalog(n)) {
    if (is_cycle_graph(g) || is_theta122(g)) continue;
    if (nonbipartite_only && is_bipartite(g).bipartite) continue;
    out.push_back(g);
  }
  return out;
}

}  // namespace

TEST_CASE("transport_triple places the set and stays within budget") {
  int solved = 0;
  for (int n = 5; n <= 8; ++n) {
    for (int trial = 0; trial < 60; ++trial) {
      Graph y = sample_connected_gnp(n, 0.5, 4242 + 100 * n + trial);
      if (!is_biconnected(y)) continue;
      Configuration c = ts::scramble(n, 17 * n + trial);
      // a legal triple: occupants of some two-edge path, s excluded
      auto occ = c.occupants();
      std::array<int, 3> seats{-1, -1, -1};
      for (int mid = 0; mid < n && seats[0] < 0; ++mid) {
        if (occ[mid] == 0 || y.degree(mid) < 2) continue;
        for (int a : y.neighbors(mid))
          for (int b : y.neighbors(mid)) {
            if (a >= b || occ[a] == 0 || occ[b] == 0) continue;
            seats = {a, mid, b};
            break;
          }
      }
      if (seats[0] < 0) continue;
      // a target two-edge path avoiding s
      std::array<int, 3> target{-1, -1, -1};
      for (int mid = n - 1; mid >= 0 && target[0] < 0; --mid) {
        if (c.placement[0] == mid || y.degree(mid) < 2) continue;
        for (int a : y.neighbors(mid))
          for (int b : y.neighbors(mid)) {
            if (a >= b || c.placement[0] == a || c.placement[0] == b) continue;
            target = {a, mid, b};
            break;
          }
      }
      if (target[0] < 0) continue;
      std::array<int, 3> persons{occ[seats[0]], occ[seats[1]], occ[seats[2]]};
      auto seq = transport_triple(y, c, 0, persons, target);
      auto after = replay(star_x(n), y, seq);
      std::set<int> got{after.placement[persons[0]], after.placement[persons[1]],
                        after.placement[persons[2]]};
      CHECK(got == std::set<int>(target.begin(), target.end()));
      CHECK(seq.moves.size() <= 6u * n * n);
      ++solved;
    }
  }
  CHECK(solved > 50);
}

TEST_CASE("transport_triple with target equal to current seats is empty") {
  Graph y = make_theta(ThetaParams{1, 2, 2});
  Configuration c = Configuration::identity(7);
  ThetaFrame f = theta_frame_of(ThetaParams{1, 2, 2});
  // triple on Q: occupants of (endp1-side) two-edge path within Q
  std::array<int, 3> pos{f.path_q[1], f.path_q[2], f.endp2};
  auto occ = c.occupants();
  std::array<int, 3> persons{occ[pos[0]], occ[pos[1]], occ[pos[2]]};
  auto seq = transport_triple(y, c, 0, persons, pos);
  CHECK(seq.moves.empty());

  // theta(1,2,2): triple on Q path moved to the R path
  std::array<int, 3> target{f.path_r[1], f.path_r[2], f.endp2};
  auto seq2 = transport_triple(y, c, 0, persons, target);
  auto after = replay(star_x(7), y, seq2);
  std::set<int> got{after.placement[persons[0]], after.placement[persons[1]],
                    after.placement[persons[2]]};
  CHECK(got == std::set<int>(target.begin(), target.end()));
}

TEST_CASE("elementary_transposition swaps exactly the distinguished pair") {
  for (int n = 4; n <= 6; ++n) {
    for (const auto& y : gadget_hosts(n, true)) {
      ThetaFrame frame = find_theta_subgraph(y, true);
      auto site = rotation_site(frame);
      for (int trial = 0; trial < 6; ++trial) {
        Configuration c = ts::scramble(n, 1000 * n + trial);
        auto seq = elementary_transposition(y, c, 0, site[0], site[1]);
        auto after = replay(star_x(n), y, seq);
        auto occ = c.occupants();
        Configuration expect = c;
        std::swap(expect.placement[occ[site[0]]],
                  expect.placement[occ[site[1]]]);
        CHECK(after == expect);
        CHECK(seq.moves.size() <= 40u * n * n);
        // doing it twice restores the start
        auto seq2 = elementary_transposition(y, after, 0, site[0], site[1]);
        CHECK(replay(star_x(n), y, MoveSequence{after, seq2.moves}) == c);
      }
    }
  }
}

TEST_CASE("elementary_transposition on bn hosts and degenerate s seats") {
  for (int n = 5; n <= 8; ++n) {
    Graph y = family(Family::bn, n);
    ThetaFrame frame = find_theta_subgraph(y, true);
    auto site = rotation_site(frame);
    // park s everywhere, including on the odd cycle and at the site's z
    for (int seat = 0; seat < n; ++seat) {
      Configuration c = ts::scramble(n, 999 * n + seat);
      int holder = c.person_at(seat);
      std::swap(c.placement[0], c.placement[holder]);
      auto occ = c.occupants();
      if (occ[site[0]] == 0 || occ[site[1]] == 0) continue;  // single swap case
      auto seq = elementary_transposition(y, c, 0, site[0], site[1]);
      Configuration expect = c;
      std::swap(expect.placement[occ[site[0]]], expect.placement[occ[site[1]]]);
      CHECK(replay(star_x(n), y, seq) == expect);
    }
  }
}

TEST_CASE("elementary_3cycle rotates the chosen triple in place") {
  // grid 3x3: random adjacent edge pairs
  Graph y = family(Family::grid, 9);
  for (int trial = 0; trial < 12; ++trial) {
    Configuration c = ts::scramble(9, 7100 + trial);
    int b = -1, a = -1, cp = -1;
    for (int mid = 0; mid < 9 && b < 0; ++mid) {
      if (c.placement[0] == mid || y.degree(mid) < 2) continue;
      for (int u : y.neighbors(mid))
        for (int v : y.neighbors(mid)) {
          if (u >= v || c.placement[0] == u || c.placement[0] == v) continue;
          a = u;
          b = mid;
          cp = v;
        }
    }
    REQUIRE(b >= 0);
    auto seq = elementary_3cycle(y, c, 0, a, b, cp);
    auto occ = c.occupants();
    Configuration expect = c;
    expect.placement[occ[a]] = b;
    expect.placement[occ[b]] = cp;
    expect.placement[occ[cp]] = a;
    auto after = replay(star_x(9), y, seq);
    CHECK(after == expect);
    CHECK(seq.moves.size() % 2 == 0);  // bipartite host, s returns home

    // applying three times restores the start
    auto c2 = after;
    auto seq2 = elementary_3cycle(y, c2, 0, a, b, cp);
    auto c3 = replay(star_x(9), y, MoveSequence{c2, seq2.moves});
    auto seq3 = elementary_3cycle(y, c3, 0, a, b, cp);
    CHECK(replay(star_x(9), y, MoveSequence{c3, seq3.moves}) == c);
  }

  // also exercise non-bipartite hosts
  for (const auto& y2 : gadget_hosts(5, true)) {
    Configuration c = ts::scramble(5, 31);
    for (int mid = 0; mid < 5; ++mid) {
      if (c.placement[0] == mid || y2.degree(mid) < 2) continue;
      int u = -1, v = -1;
      for (int w : y2.neighbors(mid)) {
        if (c.placement[0] == w) continue;
        if (u < 0)
          u = w;
        else if (v < 0)
          v = w;
      }
      if (v < 0) continue;
      auto seq = elementary_3cycle(y2, c, 0, u, mid, v);
      auto occ = c.occupants();
      Configuration expect = c;
      expect.placement[occ[u]] = mid;
      expect.placement[occ[mid]] = v;
      expect.placement[occ[v]] = u;
      CHECK(replay(star_x(5), y2, seq) == expect);
      break;
    }
  }
}

TEST_CASE("elementary_double_transposition swaps across disjoint edges") {
  // C6 plus two chords
  Graph y(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 5}, {0, 2}, {3, 5}});
  for (int trial = 0; trial < 8; ++trial) {
    Configuration c = ts::scramble(6, 880 + trial);
    Edge ab{-1, -1}, cd{-1, -1};
    for (const auto& e1 : y.edges())
      for (const auto& e2 : y.edges()) {
        std::set<int> vs{e1.first, e1.second, e2.first, e2.second};
        if (vs.size() != 4 || vs.count(c.placement[0])) continue;
        ab = e1;
        cd = e2;
      }
    REQUIRE(ab.first >= 0);
    auto seq = elementary_double_transposition(y, c, 0, ab, cd);
    auto occ = c.occupants();
    Configuration expect = c;
    std::swap(expect.placement[occ[ab.first]], expect.placement[occ[ab.second]]);
    std::swap(expect.placement[occ[cd.first]], expect.placement[occ[cd.second]]);
    auto after = replay(star_x(6), y, seq);
    CHECK(after == expect);
    CHECK(seq.moves.size() <= 40u * 6 * 6 * 6);
    // applying twice restores the start
    auto seq2 = elementary_double_transposition(y, after, 0, ab, cd);
    CHECK(replay(star_x(6), y, MoveSequence{after, seq2.moves}) == c);
  }
}

TEST_CASE("biconnected branch handles the special hosts") {
  // cycle host: pure rotations stay near the oracle distance
  {
    Graph y = family(Family::cycle, 5);
    Configuration from = Configuration::identity(5);
    Configuration to{{0, 2, 3, 4, 1}};  // same cyclic order
    auto report = solve_star_biconnected(y, from, to, 0);
    REQUIRE(report.reachable);
    CHECK(replay(star_x(5), y, *report.sequence) == to);
    long long d = oracle::pair_distance(star_x(5), y, from, to, 200000);
    CHECK(report.length == d);  // the cycle solver emits shortest walks
    // a transposed pair breaks the cyclic order
    Configuration bad = from;
    std::swap(bad.placement[1], bad.placement[2]);
    CHECK(!solve_star_biconnected(y, from, bad, 0).reachable);
  }
  // theta(1,2,2) host agrees with its 6-component oracle partition
  {
    Graph y = make_theta(ThetaParams{1, 2, 2});
    auto analysis = oracle::analyze_components(
        star_x(7), y, oracle::OracleOptions{}, false);
    for (int trial = 0; trial < 25; ++trial) {
      Configuration a = ts::scramble(7, trial);
      Configuration b = ts::scramble(7, 600 + trial);
      bool want = analysis.component_of[oracle::rank_of(a)] ==
                  analysis.component_of[oracle::rank_of(b)];
      auto report = solve_star_biconnected(y, a, b, 0);
      CHECK(report.reachable == want);
      if (report.reachable)
        CHECK(replay(star_x(7), y, *report.sequence) == b);
    }
  }
  // 3x3 grid: parity decides among configurations with the same s cell
  {
    Graph y = family(Family::grid, 9);
    Configuration from = Configuration::identity(9);
    Configuration even = from;
    // a 3-cycle of non-s persons is even
    int tmp = even.placement[1];
    even.placement[1] = even.placement[2];
    even.placement[2] = even.placement[3];
    even.placement[3] = tmp;
    auto r1 = solve_star_biconnected(y, from, even, 0);
    REQUIRE(r1.reachable);
    CHECK(replay(star_x(9), y, *r1.sequence) == even);
    Configuration odd = from;
    std::swap(odd.placement[1], odd.placement[2]);
    CHECK(!solve_star_biconnected(y, from, odd, 0).reachable);
  }
}

TEST_CASE("solve_star matches the oracle exhaustively on small hosts") {
  for (int n = 4; n <= 6; ++n) {
    for (const auto& y : ts::connected_catalog(n)) {
      auto analysis = oracle::analyze_components(
          star_x(n), y, oracle::OracleOptions{}, false);
      for (int trial = 0; trial < 10; ++trial) {
        Configuration a = ts::scramble(n, 5 * trial + 3);
        Configuration b = ts::scramble(n, 11 * trial + 4);
        bool want = analysis.component_of[oracle::rank_of(a)] ==
                    analysis.component_of[oracle::rank_of(b)];
        auto verdict = decide_star(y, a, b, 0);
        CHECK(verdict.same == want);
        auto report = solve_star(y, a, b, 0);
        CHECK(report.reachable == want);
        if (report.reachable) {
          CHECK(replay(star_x(n), y, *report.sequence) == b);
          CHECK(report.length <= report.bound_budget);
        }
      }
    }
  }
}

TEST_CASE("solve_star on trees produces transport paths only") {
  for (int n = 4; n <= 9; ++n) {
    for (int trial = 0; trial < 25; ++trial) {
      Graph y = sample_random_tree(n, 300 * n + trial);
      Configuration from = ts::scramble(n, trial);
      // reachable targets are exactly s-transports
      auto path = shortest_path(y, from.placement[0], trial % n);
      Configuration to = from;
      if (path.size() > 1) {
        auto seq = move_s_along_path(y, from, path, 0);
        to = replay(star_x(n), y, seq);
      }
      auto report = solve_star(y, from, to, 0);
      REQUIRE(report.reachable);
      CHECK(report.length <= n - 1);
      CHECK(replay(star_x(n), y, *report.sequence) == to);
      // scrambles that keep s fixed but move others are unreachable
      Configuration bad = from;
      int p1 = (from.placement[0] + 1) % n, p2 = (from.placement[0] + 2) % n;
      auto occ = from.occupants();
      std::swap(bad.placement[occ[p1]], bad.placement[occ[p2]]);
      CHECK(!solve_star(y, from, bad, 0).reachable);
    }
  }
}

TEST_CASE("solve_star solves the 15-puzzle") {
  Graph y = family(Family::grid, 16);
  Configuration from = Configuration::identity(16);
  // an even scramble of the tiles with the hole restored to its corner
  Configuration to = from;
  int c1 = to.placement[1];
  to.placement[1] = to.placement[5];
  to.placement[5] = to.placement[9];
  to.placement[9] = c1;
  int c2 = to.placement[3];
  to.placement[3] = to.placement[7];
  to.placement[7] = to.placement[11];
  to.placement[11] = c2;
  auto report = solve_star(y, from, to, 0);
  REQUIRE(report.reachable);
  CHECK(replay(star_x(16), y, *report.sequence) == to);
  CHECK(report.length <= 200LL * 16 * 16 * 16 * 16);
}

TEST_CASE("swap_adjacent_pair compiles arbitrary K-moves") {
  for (const auto& y : gadget_hosts(6, true)) {
    Configuration c = ts::scramble(6, 4321);
    for (const auto& [u, v] : y.edges()) {
      auto occ = c.occupants();
      if (occ[u] == 0 || occ[v] == 0) continue;
      auto seq = swap_adjacent_pair(y, c, 0, u, v);
      Configuration expect = c;
      std::swap(expect.placement[occ[u]], expect.placement[occ[v]]);
      CHECK(replay(star_x(6), y, seq) == expect);
    }
  }
}
