#include <doctest.h>

#include <set>

#include "fsg/errors.hpp"
#include "fsg/oracle.hpp"
#include "fsg/theta_moves.hpp"
#include "support.hpp"

using namespace fsg;
namespace ts = fsg::testsupport;

namespace {

// All valid shapes with at most `max_vertices` vertices.
std::vector<ThetaParams> shapes_up_to(int max_vertices) {
  std::vector<ThetaParams> out;
  for (int i = 0; i <= max_vertices; ++i)
    for (int j = std::max(i, 1); j <= max_vertices; ++j)
      for (int k = j; k <= max_vertices; ++k)
        if (i + j + k + 2 <= max_vertices) out.push_back(ThetaParams{i, j, k});
  return out;
}

// A configuration with s (person 0) parked on the requested seat.
Configuration seated(const ThetaFrame& f, int seat, std::uint64_t salt) {
  int n = static_cast<int>(f.vertices().size());
  Configuration c = ts::scramble(n, salt);
  int holder = c.person_at(seat);
  std::swap(c.placement[0], c.placement[holder]);
  return c;
}

}  // namespace

TEST_CASE("move_s_along_path semantics") {
  Graph c5 = family(Family::cycle, 5);
  Configuration id = Configuration::identity(5);

  auto one = move_s_along_path(c5, id, {0, 1}, 0);
  CHECK(one.moves.size() == 1);
  CHECK(ts::star_replay_reaches(c5, one, Configuration{{1, 0, 2, 3, 4}}, 0));

  // s around the full cycle: every other person shifts one step
  auto loop = move_s_along_path(c5, id, {0, 1, 2, 3, 4, 0}, 0);
  CHECK(loop.moves.size() == 5);
  Configuration expect{{0, 4, 1, 2, 3}};  // persons 1..4 pulled one step back
  Graph x = family(Family::star, 5);
  CHECK(replay(x, c5, loop) == expect);

  // path then its reverse restores the configuration
  auto fwd = move_s_along_path(c5, id, {0, 1, 2}, 0);
  auto mid = replay(x, c5, fwd);
  auto back = move_s_along_path(c5, mid, {2, 1, 0}, 0);
  CHECK(replay(x, c5, back) == id);

  CHECK_THROWS_AS(move_s_along_path(c5, id, {1, 2}, 0), PreconditionError);
  CHECK_THROWS_AS(move_s_along_path(c5, id, {0, 2}, 0), PreconditionError);
}

TEST_CASE("type-AB moves follow the paper's token tables") {
  // theta(1,3,3), move QP from the canonical labeling
  ThetaParams p{1, 3, 3};
  Graph host = make_theta(p);
  ThetaFrame f = theta_frame_of(p);
  Configuration c = Configuration::identity(p.vertex_count());
  ThetaTokens tok = ThetaTokens::from_config(f, c, 0);
  REQUIRE(tok.endp1_token == 0);  // s at endp1
  int p1 = tok.p_tokens[0];
  int q1 = tok.q_tokens[0], q2 = tok.q_tokens[1], q3 = tok.q_tokens[2];
  int t = tok.endp2_token;

  auto seq = type_ab_move(host, tok, c, 'Q', 'P');
  Graph x = family(Family::star, p.vertex_count());
  auto after = replay(x, host, seq);
  ThetaTokens tok2 = ThetaTokens::from_config(f, after, 0);
  CHECK(tok2.p_tokens == std::vector<int>{q1});
  CHECK(tok2.q_tokens == std::vector<int>{q2, q3, t});
  CHECK(tok2.endp2_token == p1);
  CHECK(tok2.endp1_token == 0);  // s home again
  CHECK(seq.moves.size() == 4 + 2);  // |Q| + |P| edges

  // move AB then BA restores the configuration
  auto back = type_ab_move(host, ThetaTokens::from_config(f, after, 0), after,
                           'P', 'Q');
  CHECK(replay(x, host, back) == c);
}

TEST_CASE("case (i) table row QR on theta(0,1,2)") {
  ThetaParams p{0, 1, 2};
  Graph host = make_theta(p);
  ThetaFrame f = theta_frame_of(p);
  Configuration c = Configuration::identity(p.vertex_count());
  ThetaTokens tok = ThetaTokens::from_config(f, c, 0);
  int r1 = tok.r_tokens[0], r2 = tok.r_tokens[1];
  int q1 = tok.q_tokens[0];
  int t = tok.endp2_token;
  // X-order along r_1, r_2, endp2, q_1 is (r1, r2, t, q1); QR shifts it to
  // (q1, r1, r2, t) per the first row of the case (i) derivation.
  auto seq = type_ab_move(host, tok, c, 'Q', 'R');
  Graph x = family(Family::star, p.vertex_count());
  auto after = replay(x, host, seq);
  auto occ = after.occupants();
  CHECK(occ[f.path_r[1]] == q1);
  CHECK(occ[f.path_r[2]] == r1);
  CHECK(occ[f.endp2] == r2);
  CHECK(occ[f.path_q[1]] == t);
}

TEST_CASE("rotation dispatch table") {
  CHECK(rotation_case(ThetaParams{0, 1, 2}) == "i");
  CHECK(rotation_case(ThetaParams{0, 1, 1}) == "ii");
  CHECK(rotation_case(ThetaParams{1, 1, 1}) == "iii");
  CHECK(rotation_case(ThetaParams{1, 1, 4}) == "iv");
  CHECK(rotation_case(ThetaParams{1, 2, 3}) == "v");
  CHECK(rotation_case(ThetaParams{1, 3, 3}) == "vi");
  CHECK(rotation_case(ThetaParams{3, 4, 5}) == "vi");
  CHECK(rotation_case(ThetaParams{2, 2, 5}) == "vii");
  CHECK(rotation_case(ThetaParams{2, 2, 6}) == "viii");
  CHECK_THROWS_AS(rotation_case(ThetaParams{1, 2, 2}), PreconditionError);
}

TEST_CASE("theta_rotate realizes exactly the advertised 3-cycle") {
  Graph xbig = family(Family::star, 12);  // reused star builder below
  (void)xbig;
  for (const auto& p : shapes_up_to(9)) {
    if (p.i == 1 && p.j == 2 && p.k == 2) continue;
    Graph host = make_theta(p);
    ThetaFrame f = theta_frame_of(p);
    int n = p.vertex_count();
    Graph x = family(Family::star, n);
    auto site = rotation_site(f);
    for (std::uint64_t salt = 1; salt <= 4; ++salt) {
      int seat = rotation_seats(f)[salt % rotation_seats(f).size()];
      Configuration c = seated(f, seat, 997 * salt + n);
      ThetaTokens tok = ThetaTokens::from_config(f, c, 0);
      RotationPlan plan = theta_rotate(host, tok, c);
      auto after = replay(x, host, MoveSequence{c, plan.moves});
      // a 3-cycle on the site occupants, everything else fixed
      auto occ = c.occupants();
      int xb = occ[site[0]], yb = occ[site[1]], zb = occ[site[2]];
      bool fwd = after.placement[xb] == site[1] &&
                 after.placement[yb] == site[2] &&
                 after.placement[zb] == site[0];
      bool rev = after.placement[xb] == site[2] &&
                 after.placement[yb] == site[0] &&
                 after.placement[zb] == site[1];
      CHECK((fwd || rev));
      for (int person = 0; person < n; ++person)
        if (person != xb && person != yb && person != zb)
          CHECK(after.placement[person] == c.placement[person]);
      // oracle cross-check: the target is reachable at most plan-length away
      long long d = oracle::pair_distance(x, host, c, after,
                                          oracle::factorial(n));
      CHECK(d >= 0);
      CHECK(d <= static_cast<long long>(plan.moves.size()));
    }
  }
}

TEST_CASE("rotation spec examples") {
  // theta(1,1,2): the rotated triple is {r_1, r_2, t}
  {
    ThetaParams p{1, 1, 2};
    ThetaFrame f = theta_frame_of(p);
    Graph host = make_theta(p);
    Configuration c = Configuration::identity(p.vertex_count());
    ThetaTokens tok = ThetaTokens::from_config(f, c, 0);
    auto plan = theta_rotate(host, tok, c);
    std::set<int> moved(plan.target_cycle.begin(), plan.target_cycle.end());
    std::set<int> expect{tok.r_tokens[0], tok.r_tokens[1], tok.endp2_token};
    CHECK(moved == expect);
    CHECK(plan.case_id == "iv");
  }
  // theta(1,2,3): the rotated triple is {r_1, r_2, r_3}
  {
    ThetaParams p{1, 2, 3};
    ThetaFrame f = theta_frame_of(p);
    Graph host = make_theta(p);
    Configuration c = Configuration::identity(p.vertex_count());
    ThetaTokens tok = ThetaTokens::from_config(f, c, 0);
    auto plan = theta_rotate(host, tok, c);
    std::set<int> moved(plan.target_cycle.begin(), plan.target_cycle.end());
    std::set<int> expect{tok.r_tokens[0], tok.r_tokens[1], tok.r_tokens[2]};
    CHECK(moved == expect);
    CHECK(plan.case_id == "v");
  }
}

TEST_CASE("case (vii) uses the meet-in-the-middle script") {
  ThetaParams p{2, 2, 2};
  Graph host = make_theta(p);
  ThetaFrame f = theta_frame_of(p);
  Graph x = family(Family::star, 8);
  for (std::uint64_t salt = 1; salt <= 3; ++salt) {
    Configuration c = seated(f, f.endp1, 31 * salt);
    ThetaTokens tok = ThetaTokens::from_config(f, c, 0);
    auto plan = theta_rotate(host, tok, c);
    CHECK(plan.case_id == "vii");
    auto after = replay(x, host, MoveSequence{c, plan.moves});
    auto site = rotation_site(f);
    auto occ = c.occupants();
    int xb = occ[site[0]];
    CHECK((after.placement[xb] == site[1] || after.placement[xb] == site[2]));
  }
}

TEST_CASE("rotation preconditions") {
  ThetaParams p{1, 2, 2};
  Graph host = make_theta(p);
  ThetaFrame f = theta_frame_of(p);
  Configuration c = Configuration::identity(7);
  ThetaTokens tok = ThetaTokens::from_config(f, c, 0);
  CHECK_THROWS_AS(theta_rotate(host, tok, c), PreconditionError);

  // s off the seat
  ThetaParams ok{1, 3, 3};
  Graph host2 = make_theta(ok);
  ThetaFrame f2 = theta_frame_of(ok);
  Configuration c2 = Configuration::identity(ok.vertex_count());
  std::swap(c2.placement[0], c2.placement[1]);  // s at endp2 instead
  ThetaTokens tok2 = ThetaTokens::from_config(f2, c2, 0);
  CHECK_THROWS_AS(theta_rotate(host2, tok2, c2), PreconditionError);
}
