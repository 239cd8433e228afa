#include "fsg/theta_moves.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <mutex>

#include "fsg/errors.hpp"
#include "fsg/oracle.hpp"

namespace fsg {

namespace {

const std::vector<int>& path_of(const ThetaFrame& f, char which) {
  switch (which) {
    case 'P': return f.path_p;
    case 'Q': return f.path_q;
    case 'R': return f.path_r;
  }
  throw InternalError("path_of: bad path id");
}

// Closed walk of the cycle A+B starting at endp1: A forward, B backward.
std::vector<int> ab_walk(const ThetaFrame& f, char a, char b) {
  const auto& pa = path_of(f, a);
  const auto& pb = path_of(f, b);
  std::vector<int> walk(pa);
  for (size_t t = pb.size() - 2; t >= 1; --t) walk.push_back(pb[t]);
  walk.push_back(f.endp1);
  return walk;
}

// Closed walk of a cycle starting from a given vertex on it.
std::vector<int> cycle_walk_from(const std::vector<int>& cycle, int start,
                                 bool reversed) {
  std::vector<int> order(cycle);
  if (reversed) {
    std::reverse(order.begin(), order.end());
    std::rotate(order.begin(), order.end() - 1, order.end());
  }
  auto it = std::find(order.begin(), order.end(), start);
  if (it == order.end()) throw InternalError("cycle_walk_from: start not on cycle");
  std::rotate(order.begin(), it, order.end());
  order.push_back(start);
  return order;
}

void apply_swap(Configuration& c, std::vector<int>& occ, int a, int b) {
  int pa = occ[a], pb = occ[b];
  std::swap(c.placement[pa], c.placement[pb]);
  std::swap(occ[a], occ[b]);
}

// Script accumulator that tracks the live configuration.
struct Tape {
  Configuration c;
  std::vector<int> occ;
  std::vector<Move> moves;

  explicit Tape(const Configuration& start) : c(start), occ(start.occupants()) {}

  void walk(const std::vector<int>& vertices) {
    for (size_t t = 0; t + 1 < vertices.size(); ++t) {
      moves.push_back(Move{vertices[t], vertices[t + 1]});
      apply_swap(c, occ, vertices[t], vertices[t + 1]);
    }
  }
};

struct CaseViiCache {
  std::mutex mu;
  std::map<int, std::vector<Move>> scripts;  // k -> canonical local script
};

CaseViiCache& case_vii_cache() {
  static CaseViiCache cache;
  return cache;
}

// Canonical case-(vii) script over theta(2,2,k) with local labels, found by a
// bidirectional meet-in-the-middle query over the frame's own configuration
// space (up to 11! states for k = 5).
std::vector<Move> case_vii_script(int k) {
  auto& cache = case_vii_cache();
  std::lock_guard<std::mutex> lock(cache.mu);
  auto it = cache.scripts.find(k);
  if (it != cache.scripts.end()) return it->second;

  ThetaParams params{2, 2, k};
  int m = params.vertex_count();
  Graph host = make_theta(params);
  ThetaFrame frame = theta_frame_of(params);
  Graph star = family(Family::star, m);  // center person 0 sits at endp1 = 0
  Configuration start = Configuration::identity(m);
  auto site = rotation_site(frame);
  Configuration target = start;
  target.placement[start.person_at(site[0])] = site[1];
  target.placement[start.person_at(site[1])] = site[2];
  target.placement[start.person_at(site[2])] = site[0];
  auto path = oracle::pair_path(star, host, start, target,
                                oracle::factorial(m));
  if (!path)
    throw InternalError("case (vii): rotation target unreachable");
  cache.scripts[k] = *path;
  return *path;
}

}  // namespace

ThetaTokens ThetaTokens::from_config(const ThetaFrame& frame,
                                     const Configuration& c, int s_person) {
  ThetaTokens tok;
  tok.frame = frame;
  tok.s_person = s_person;
  auto occ = c.occupants();
  auto internals = [&](const std::vector<int>& path) {
    std::vector<int> persons;
    for (size_t t = 1; t + 1 < path.size(); ++t) persons.push_back(occ[path[t]]);
    return persons;
  };
  tok.p_tokens = internals(frame.path_p);
  tok.q_tokens = internals(frame.path_q);
  tok.r_tokens = internals(frame.path_r);
  tok.endp1_token = occ[frame.endp1];
  tok.endp2_token = occ[frame.endp2];
  return tok;
}

std::string rotation_case(const ThetaParams& p) {
  if (p.i == 1 && p.j == 2 && p.k == 2)
    throw PreconditionError("theta(1,2,2) has no rotation");
  if (p.i == 0 && p.j == 1 && p.k == 1) return "ii";
  if (p.i == 0) return "i";
  if (p.i == 1 && p.j == 1 && p.k == 1) return "iii";
  if (p.i == 1 && p.j == 1) return "iv";
  if (p.i == 1 && p.j == 2) return "v";
  if (p.i == 2 && p.j == 2) return p.k < 6 ? "vii" : "viii";
  return "vi";
}

std::array<int, 3> rotation_site(const ThetaFrame& f) {
  auto p = f.params();
  const auto& r = f.path_r;
  std::string cs = rotation_case(p);
  if (cs == "ii") return {f.endp1, f.path_q[1], f.endp2};
  if (cs == "iii") return {f.endp1, f.path_p[1], f.endp2};
  if (cs == "i" || cs == "vi") return {f.endp2, r[p.k], r[p.k - 1]};
  if (cs == "iv" || cs == "vii") return {r[p.k - 1], r[p.k], f.endp2};
  if (cs == "v") return {r[3], r[2], r[1]};
  return {r[5], r[4], r[3]};  // viii
}

std::vector<int> rotation_seats(const ThetaFrame& f) {
  std::string cs = rotation_case(f.params());
  if (cs == "ii") return {f.path_r[1]};
  if (cs == "iii") return {f.path_q[1], f.path_r[1]};
  return {f.endp1};
}

std::vector<int> rotation_site_cycle(const ThetaFrame& f) {
  std::string cs = rotation_case(f.params());
  auto cycles = f.cycles();  // PQ, PR, QR
  if (cs == "ii") return cycles[2];   // Q+R, the 4-cycle
  if (cs == "iii") return cycles[0];  // P+Q; seat Q1 sits on it
  return cycles[2];                   // Q+R contains R and endp2
}

MoveSequence move_s_along_path(const Graph& y, const Configuration& c,
                               const std::vector<int>& path, int s_person) {
  if (path.empty() || c.placement[s_person] != path.front())
    throw PreconditionError("move_s_along_path: path must start at s");
  for (size_t t = 0; t + 1 < path.size(); ++t)
    if (!y.has_edge(path[t], path[t + 1]))
      throw PreconditionError("move_s_along_path: non-edge in path");
  Tape tape(c);
  tape.walk(path);
  return MoveSequence{c, std::move(tape.moves)};
}

MoveSequence type_ab_move(const Graph& y, const ThetaTokens& tokens,
                          const Configuration& c, char a, char b) {
  if (a == b) throw PreconditionError("type_ab_move: needs two distinct paths");
  if (c.placement[tokens.s_person] != tokens.frame.endp1)
    throw PreconditionError("type_ab_move: s must sit at endp1");
  return move_s_along_path(y, c, ab_walk(tokens.frame, a, b), tokens.s_person);
}

namespace {

// Emits one type-AB loop onto the tape; s must currently sit at endp1.
void emit_ab(Tape& tape, const ThetaFrame& f, char a, char b) {
  tape.walk(ab_walk(f, a, b));
}

void emit_many(Tape& tape, const ThetaFrame& f, const std::string& script) {
  for (size_t t = 0; t + 1 < script.size(); t += 2)
    emit_ab(tape, f, script[t], script[t + 1]);
}

// Case (v) / (viii) operation blocks.
void emit_op1(Tape& tape, const ThetaFrame& f, bool wide) {
  // wide = case (viii): QP RP RP, three times; else QP RP, three times.
  for (int rep = 0; rep < 3; ++rep)
    emit_many(tape, f, wide ? "QPRPRP" : "QPRP");
}

void emit_op2(Tape& tape, const ThetaFrame& f, bool wide) {
  emit_many(tape, f, "RP");
  emit_op1(tape, f, wide);
  emit_many(tape, f, "PR");
}

// The clean 3-cycle cores of the composite cases, expressed over a canonical
// frame with local labels and s = person 0 at endp1:
//  - case (v):   Op1 followed by Op2 reversed,
//  - case (vi):  the Q-switch/R-switch composition realizing (p_i q_j r_k),
//  - case (viii): Op1 followed by Op2 reversed (wide operations).
// Each returns the move script; the triple of positions it cycles is read off
// by simulation.
std::vector<Move> composite_core(const ThetaParams& params) {
  ThetaFrame f = theta_frame_of(params);
  Configuration id = Configuration::identity(params.vertex_count());
  Tape tape(id);
  std::string cs = rotation_case(params);
  if (cs == "vi") {
    for (int rep = 0; rep < 4; ++rep)
      emit_many(tape, f, "QPQRPQRQRPRQPRQR");  // Q-switch then R-switch
    return tape.moves;
  }
  bool wide = cs == "viii";
  emit_op1(tape, f, wide);
  Tape op2(Configuration::identity(params.vertex_count()));
  emit_op2(op2, f, wide);
  std::vector<Move> script = tape.moves;
  for (auto it = op2.moves.rbegin(); it != op2.moves.rend(); ++it)
    script.push_back(*it);
  return script;
}

// Positions cycled by a script over the canonical frame; everything else must
// stay fixed, s included.
std::array<int, 3> core_support(const ThetaParams& params,
                                const std::vector<Move>& script) {
  Configuration id = Configuration::identity(params.vertex_count());
  Tape tape(id);
  for (const auto& m : script) {
    tape.moves.push_back(m);
    apply_swap(tape.c, tape.occ, m.ypos_a, m.ypos_b);
  }
  std::vector<int> moved;
  for (int person = 0; person < id.size(); ++person)
    if (tape.c.placement[person] != id.placement[person])
      moved.push_back(id.placement[person]);
  if (moved.size() != 3 || tape.c.placement[0] != id.placement[0])
    throw InternalError("theta rotation: composite core is not a clean 3-cycle");
  return {moved[0], moved[1], moved[2]};
}

// BFS over (triple seats, s seat) macro states inside the canonical frame:
// finds a short script parking the given triple of positions onto the target
// slots (as a set) with s back at endp1.
std::vector<Move> frame_transport(const ThetaParams& params,
                                  std::array<int, 3> triple,
                                  std::array<int, 3> slots) {
  Graph host = make_theta(params);
  int n = params.vertex_count();
  std::sort(triple.begin(), triple.end());
  std::sort(slots.begin(), slots.end());
  long long combos = static_cast<long long>(n) * (n - 1) * (n - 2) / 6;
  auto rank3 = [](int a, int b, int c) {
    return static_cast<long long>(c) * (c - 1) * (c - 2) / 6 +
           static_cast<long long>(b) * (b - 1) / 2 + a;
  };
  auto encode = [&](const std::array<int, 3>& t, int s) {
    return rank3(t[0], t[1], t[2]) * n + s;
  };
  std::vector<std::int32_t> prev(combos * n, -2);
  std::vector<std::int32_t> from_pos(combos * n, -1);
  struct Item {
    std::array<int, 3> triple;
    int spos;
  };
  std::deque<Item> queue{{triple, 0}};  // s at endp1 = local 0
  prev[encode(triple, 0)] = -1;
  while (!queue.empty()) {
    auto [cur, spos] = queue.front();
    queue.pop_front();
    std::int64_t code = encode(cur, spos);
    if (cur == slots && spos == 0) {
      std::vector<Move> out;
      for (std::int64_t at = code; prev[at] != -1; at = prev[at])
        out.push_back(Move{from_pos[at], static_cast<int>(at % n)});
      std::reverse(out.begin(), out.end());
      return out;
    }
    for (int q : host.neighbors(spos)) {
      std::array<int, 3> next = cur;
      auto it = std::find(next.begin(), next.end(), q);
      if (it != next.end()) {
        *it = spos;
        std::sort(next.begin(), next.end());
      }
      std::int64_t ncode = encode(next, q);
      if (prev[ncode] != -2) continue;
      prev[ncode] = static_cast<std::int32_t>(code);
      from_pos[ncode] = spos;
      queue.push_back({next, q});
    }
  }
  throw InternalError("theta rotation: frame transport unreachable");
}

// Composite rotation for cases (v), (vi) and (viii): park the site tokens on
// the core's support, run the core, unpark. Cached per shape.
const std::vector<Move>& composite_script(const ThetaParams& params) {
  static std::mutex mu;
  static std::map<std::array<int, 3>, std::vector<Move>> cache;
  std::lock_guard<std::mutex> lock(mu);
  std::array<int, 3> key{params.i, params.j, params.k};
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;

  auto core = composite_core(params);
  auto support = core_support(params, core);
  ThetaFrame local = theta_frame_of(params);
  auto site = rotation_site(local);
  auto park = frame_transport(params, site, support);
  std::vector<Move> script(park);
  script.insert(script.end(), core.begin(), core.end());
  for (auto pit = park.rbegin(); pit != park.rend(); ++pit) script.push_back(*pit);
  return cache.emplace(key, std::move(script)).first->second;
}

}  // namespace

RotationPlan theta_rotate(const Graph& y, const ThetaTokens& tokens,
                          const Configuration& c) {
  const ThetaFrame& f = tokens.frame;
  auto params = f.params();
  RotationPlan plan;
  plan.case_id = rotation_case(params);
  plan.site = rotation_site(f);
  auto seats = rotation_seats(f);
  int s_pos = c.placement[tokens.s_person];
  if (std::find(seats.begin(), seats.end(), s_pos) == seats.end())
    throw PreconditionError("theta_rotate: s is not on a rotation seat");

  Tape tape(c);
  if (plan.case_id == "ii") {
    // One full loop of the Q+R 4-cycle from the R seat.
    tape.walk(cycle_walk_from(f.cycles()[2], s_pos, false));
  } else if (plan.case_id == "iii") {
    // Loop the 4-cycle through s's seat and P.
    auto cycles = f.cycles();
    const auto& cyc = s_pos == f.path_q[1] ? cycles[0] : cycles[1];
    tape.walk(cycle_walk_from(cyc, s_pos, false));
  } else if (plan.case_id == "i") {
    emit_many(tape, f, "QRPRPQRPQPRQ");
  } else if (plan.case_id == "iv") {
    emit_many(tape, f, "PRQRPQRQRP");
  } else {
    // Cases (v), (vi), (viii) run a clean 3-cycle core (operation blocks or
    // the switch composition) conjugated by a frame transport; case (vii)
    // replays the cached meet-in-the-middle script. All are built over the
    // canonical frame and translated to host labels here.
    const auto& script = plan.case_id == "vii" ? case_vii_script(params.k)
                                               : composite_script(params);
    ThetaFrame local = theta_frame_of(params);
    std::vector<int> map(params.vertex_count(), -1);
    auto bind = [&](const std::vector<int>& from, const std::vector<int>& to) {
      for (size_t t = 0; t < from.size(); ++t) map[from[t]] = to[t];
    };
    bind(local.path_p, f.path_p);
    bind(local.path_q, f.path_q);
    bind(local.path_r, f.path_r);
    for (const auto& m : script) {
      tape.moves.push_back(Move{map[m.ypos_a], map[m.ypos_b]});
      apply_swap(tape.c, tape.occ, map[m.ypos_a], map[m.ypos_b]);
    }
  }

  // The scripts must realize exactly a 3-cycle of the site occupants.
  auto occ0 = c.occupants();
  const auto& after = tape.c;
  for (int person = 0; person < c.size(); ++person) {
    int pos = c.placement[person];
    if (pos == plan.site[0] || pos == plan.site[1] || pos == plan.site[2])
      continue;
    if (after.placement[person] != pos)
      throw InternalError("theta_rotate: person off the site moved");
  }
  int xb = occ0[plan.site[0]], yb = occ0[plan.site[1]], zb = occ0[plan.site[2]];
  if (after.placement[xb] == plan.site[1] &&
      after.placement[yb] == plan.site[2] &&
      after.placement[zb] == plan.site[0]) {
    plan.target_cycle = {xb, yb, zb};
  } else if (after.placement[xb] == plan.site[2] &&
             after.placement[yb] == plan.site[0] &&
             after.placement[zb] == plan.site[1]) {
    plan.target_cycle = {xb, zb, yb};
  } else {
    throw InternalError("theta_rotate: site occupants not 3-cycled");
  }
  plan.moves = std::move(tape.moves);
  (void)y;
  return plan;
}

}  // namespace fsg
