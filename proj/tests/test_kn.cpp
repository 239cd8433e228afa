#include <doctest.h>

#include "fsg/experiments.hpp"
#include "fsg/kn_solver.hpp"
#include "fsg/oracle.hpp"
#include "support.hpp"

using namespace fsg;
namespace ts = fsg::testsupport;

namespace {

Configuration reversal(int n) {
  Configuration c;
  c.placement.resize(n);
  for (int p = 0; p < n; ++p) c.placement[p] = n - 1 - p;
  return c;
}

}  // namespace

TEST_CASE("reversal on a path costs exactly n(n-1)/2") {
  for (int n = 3; n <= 9; ++n) {
    Graph y = family(Family::path, n);
    auto report = solve_kn(y, reversal(n), Configuration::identity(n));
    REQUIRE(report.reachable);
    CHECK(report.length == n * (n - 1) / 2);
    Graph x = family(Family::complete, n);
    CHECK(replay(x, y, *report.sequence) == Configuration::identity(n));
  }
}

TEST_CASE("trivial and disconnected instances") {
  Graph y = family(Family::path, 5);
  auto same = solve_kn(y, Configuration::identity(5), Configuration::identity(5));
  CHECK(same.reachable);
  CHECK(same.length == 0);

  // two disjoint triangles
  Graph two(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
  Configuration from = Configuration::identity(6);
  Configuration to{{1, 2, 0, 5, 3, 4}};  // rotations inside each triangle
  auto report = solve_kn(two, from, to);
  REQUIRE(report.reachable);
  CHECK(report.length <= 6);
  Graph x = family(Family::complete, 6);
  CHECK(replay(x, two, *report.sequence) == to);

  // a person stranded on the wrong component
  Configuration bad{{3, 1, 2, 0, 4, 5}};
  CHECK(!solve_kn(two, from, bad).reachable);
}

TEST_CASE("solve_kn matches oracle reachability and respects the bound") {
  for (int n = 4; n <= 5; ++n) {
    Graph x = family(Family::complete, n);
    for (const auto& y : ts::connected_catalog(n)) {
      for (int trial = 0; trial < 6; ++trial) {
        Configuration a = ts::scramble(n, 31 * trial + 1);
        Configuration b = ts::scramble(n, 77 * trial + 2);
        auto report = solve_kn(y, a, b);
        REQUIRE(report.reachable);  // connected Y
        CHECK(report.length <= n * (n - 1) / 2);
        CHECK(replay(x, y, *report.sequence) == b);
      }
    }
  }
  // disconnected catalog spot check against the oracle
  Graph x5 = family(Family::complete, 5);
  Graph y(5, {{0, 1}, {1, 2}, {3, 4}});
  auto analysis =
      oracle::analyze_components(x5, y, oracle::OracleOptions{}, false);
  for (int trial = 0; trial < 40; ++trial) {
    Configuration a = ts::scramble(5, 500 + trial);
    Configuration b = ts::scramble(5, 800 + trial);
    bool want = analysis.component_of[oracle::rank_of(a)] ==
                analysis.component_of[oracle::rank_of(b)];
    CHECK(solve_kn(y, a, b).reachable == want);
  }
}

TEST_CASE("plans carry good and bad pair tags") {
  Graph p3 = family(Family::path, 3);
  Configuration rev = reversal(3);
  auto plan = solve_kn_plan(p3, rev, Configuration::identity(3));
  CHECK(plan.moves.size() <= 3);

  auto trivial = solve_kn_plan(p3, Configuration::identity(3),
                               Configuration::identity(3));
  CHECK(trivial.moves.empty());
  CHECK(trivial.bad_pairs == 0);

  // bad pairs never exceed the number of phases
  for (int trial = 0; trial < 300; ++trial) {
    Graph y = sample_connected_gnp(7, 0.45, 9000 + trial);
    Configuration a = ts::scramble(7, trial);
    Configuration b = ts::scramble(7, 5000 + trial);
    auto p = solve_kn_plan(y, a, b);
    if (p.odd_length) {
      CHECK(p.pair_good.empty());
      continue;
    }
    CHECK(p.bad_pairs <= 7);
  }
}
