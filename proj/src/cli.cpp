#include "fsg/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "fsg/constants.hpp"
#include "fsg/dense_solver.hpp"
#include "fsg/errors.hpp"
#include "fsg/experiments.hpp"
#include "fsg/fs_core.hpp"
#include "fsg/graph.hpp"
#include "fsg/kn_solver.hpp"
#include "fsg/oracle.hpp"
#include "fsg/star_solver.hpp"
#include "fsg/theta_moves.hpp"

namespace fsg {

namespace {

using nlohmann::json;

// Graph specs: a family name (path, cycle, star, complete, bn, grid,
// theta(i,j,k)) sized by context, or an edge-list file path.
Graph parse_graph_spec(const std::string& spec, int n_hint) {
  auto needs = [&](int n) {
    if (n < 1)
      throw ParameterError("graph family '" + spec +
                           "' needs a size from the configurations");
    return n;
  };
  if (spec == "path") return family(Family::path, needs(n_hint));
  if (spec == "cycle") return family(Family::cycle, needs(n_hint));
  if (spec == "star") return family(Family::star, needs(n_hint));
  if (spec == "complete") return family(Family::complete, needs(n_hint));
  if (spec == "bn") return family(Family::bn, needs(n_hint));
  if (spec == "grid") return family(Family::grid, needs(n_hint));
  if (spec.rfind("theta(", 0) == 0 && spec.back() == ')') {
    ThetaParams p;
    char comma;
    std::istringstream ss(spec.substr(6, spec.size() - 7));
    if (!(ss >> p.i >> comma >> p.j >> comma >> p.k))
      throw ParameterError("bad theta spec: " + spec);
    return make_theta(p);
  }
  return load_edge_list(spec);
}

Family parse_family_name(const std::string& name) {
  if (name == "path") return Family::path;
  if (name == "cycle") return Family::cycle;
  if (name == "star") return Family::star;
  if (name == "complete") return Family::complete;
  if (name == "bn") return Family::bn;
  if (name == "grid") return Family::grid;
  throw ParameterError("unknown family for sweep: " + name);
}

Configuration read_config_arg(const std::string& arg, std::istream& in) {
  if (arg == "-") return read_configuration(in);
  return load_configuration(arg);
}

json report_to_json(const SolveReport& report) {
  json j;
  j["reachable"] = report.reachable;
  j["length"] = report.length;
  j["bound_budget"] = report.bound_budget;
  j["solver_id"] = report.solver_id;
  json moves = json::array();
  if (report.sequence)
    for (const auto& m : report.sequence->moves)
      moves.push_back({m.ypos_a, m.ypos_b});
  j["moves"] = moves;
  return j;
}

int cmd_solve(const std::string& xspec, const std::string& yspec,
              const std::string& from_arg, const std::string& to_arg,
              std::string strategy, bool as_json, const std::string& out_path,
              std::istream& in, std::ostream& out, std::ostream& err) {
  Configuration from = read_config_arg(from_arg, in);
  Configuration to = read_config_arg(to_arg, in);
  int n = from.size();
  if (to.size() != n) throw ParameterError("from/to sizes differ");
  Graph x = parse_graph_spec(xspec, n);
  Graph y = parse_graph_spec(yspec, n);
  if (x.vertex_count() != n || y.vertex_count() != n)
    throw ParameterError("graph sizes do not match the configurations");

  if (strategy == "auto") {
    if (star_center(x) && !is_complete(x))
      strategy = "star";
    else if (is_complete(x))
      strategy = "kn";
    else if (dense_3swap_condition(x, y))
      strategy = "dense3";
    else if (dense_exchange_condition(x, y))
      strategy = "dense-exchange";
    else
      strategy = "oracle";
    err << "auto strategy selected: " << strategy << "\n";
  }

  SolveReport report;
  if (strategy == "star") {
    auto center = star_center(x);
    if (!center) throw ParameterError("strategy star needs a star X");
    report = solve_star(y, from, to, *center);
  } else if (strategy == "kn") {
    if (!is_complete(x)) throw ParameterError("strategy kn needs a complete X");
    report = solve_kn(y, from, to);
  } else if (strategy == "dense3") {
    report = solve_dense_3swap(x, y, from, to);
  } else if (strategy == "dense-exchange") {
    report = solve_dense_exchange(x, y, from, to);
  } else if (strategy == "oracle") {
    report.solver_id = "oracle-bfs";
    auto path = oracle::pair_path(x, y, from, to,
                                  oracle::default_state_budget());
    report.reachable = path.has_value();
    if (path) {
      report.length = static_cast<long long>(path->size());
      report.bound_budget = report.length;
      report.sequence = MoveSequence{from, std::move(*path)};
    }
  } else {
    throw ParameterError("unknown strategy: " + strategy);
  }

  if (report.reachable && report.sequence) {
    // Replay through the full legality checks before emitting anything.
    if (replay(x, y, *report.sequence) != to)
      throw InternalError("solver output failed replay verification");
  }

  std::ostringstream payload;
  if (as_json) {
    payload << report_to_json(report).dump() << '\n';
  } else {
    payload << "reachable " << (report.reachable ? 1 : 0) << '\n'
            << "solver " << report.solver_id << '\n'
            << "bound_budget " << report.bound_budget << '\n';
    if (report.sequence) write_moves(payload, report.sequence->moves);
  }
  if (!out_path.empty()) {
    std::ofstream f(out_path);
    if (!f) throw ParameterError("cannot write " + out_path);
    f << payload.str();
  } else {
    out << payload.str();
  }
  return report.reachable ? 0 : 1;
}

int cmd_verify(const std::string& xspec, const std::string& yspec,
               const std::string& start_arg, const std::string& moves_arg,
               const std::string& expect_arg, std::istream& in,
               std::ostream& out, std::ostream& err) {
  Configuration start = read_config_arg(start_arg, in);
  int n = start.size();
  Graph x = parse_graph_spec(xspec, n);
  Graph y = parse_graph_spec(yspec, n);
  std::vector<Move> moves;
  if (moves_arg == "-") {
    moves = read_moves(in);
  } else {
    std::ifstream f(moves_arg);
    if (!f) throw ParameterError("cannot open moves: " + moves_arg);
    moves = read_moves(f);
  }
  try {
    Configuration final = replay(x, y, MoveSequence{start, moves});
    write_configuration(out, final);
    if (!expect_arg.empty()) {
      Configuration expect = read_config_arg(expect_arg, in);
      if (final != expect) {
        err << "final configuration differs from expectation\n";
        return 1;
      }
    }
    return 0;
  } catch (const IllegalMoveError& e) {
    err << "illegal move at index " << e.index << ": " << e.what() << "\n";
    out << "illegal " << e.index << '\n';
    return 1;
  }
}

int cmd_classify(const std::string& xspec, const std::string& yspec,
                 const std::string& a_arg, const std::string& b_arg,
                 bool as_json, std::istream& in, std::ostream& out) {
  Configuration a = read_config_arg(a_arg, in);
  Configuration b = read_config_arg(b_arg, in);
  Graph x = parse_graph_spec(xspec, a.size());
  Graph y = parse_graph_spec(yspec, a.size());
  auto verdict = same_component(x, y, a, b);
  if (as_json) {
    json j{{"same_component", verdict.same}, {"certificate", verdict.certificate}};
    out << j.dump() << '\n';
  } else {
    out << (verdict.same ? "same" : "different") << ' ' << verdict.certificate
        << '\n';
  }
  return verdict.same ? 0 : 1;
}

int cmd_oracle(CLI::App* app, const std::string& mode,
               const std::string& xspec, const std::string& yspec,
               const std::string& a_arg, const std::string& b_arg, int n_lo,
               int n_hi, bool parallel, bool as_json, std::istream& in,
               std::ostream& out) {
  (void)app;
  oracle::OracleOptions opts;
  opts.parallel = parallel;
  if (mode == "components") {
    // Graph size must come from the specs themselves here.
    Graph y = parse_graph_spec(yspec, -1);
    Graph x = parse_graph_spec(xspec, y.vertex_count());
    auto rows = oracle::components(x, y, opts);
    if (as_json) {
      json arr = json::array();
      for (const auto& r : rows)
        arr.push_back(json{{"n", x.vertex_count()},
                           {"component_id", r.component_id},
                           {"size", r.size},
                           {"diameter", r.diameter}});
      out << arr.dump() << '\n';
    } else {
      out << "n,component_id,size,diameter\n";
      for (const auto& r : rows)
        out << x.vertex_count() << ',' << r.component_id << ',' << r.size
            << ',' << r.diameter << '\n';
    }
    return 0;
  }
  if (mode == "distance") {
    Configuration a = read_config_arg(a_arg, in);
    Configuration b = read_config_arg(b_arg, in);
    Graph x = parse_graph_spec(xspec, a.size());
    Graph y = parse_graph_spec(yspec, a.size());
    long long d = oracle::pair_distance(x, y, a, b,
                                        oracle::default_state_budget());
    if (d < 0) {
      out << "unreachable\n";
      return 1;
    }
    out << d << '\n';
    return 0;
  }
  if (mode == "sweep") {
    auto rows = oracle::diameter_sweep(parse_family_name(xspec),
                                       parse_family_name(yspec), n_lo, n_hi,
                                       opts);
    out << "n,component_id,size,diameter\n";
    for (const auto& r : rows)
      out << r.n << ',' << r.component_id << ',' << r.size << ','
          << r.diameter << '\n';
    return 0;
  }
  throw ParameterError("oracle mode must be components, distance or sweep");
}

int cmd_experiment(const std::string& mode, ExperimentConfig cfg, int n_lo,
                   int n_hi, bool as_json, std::ostream& out) {
  if (mode == "random") {
    out << "# generator=" << kRngVersion << " c=" << cfg.c_constant
        << " budget=" << cfg.budget_k << "*n^" << cfg.budget_d
        << " p=" << cfg.p << " q=" << cfg.q << " n=" << cfg.n << '\n';
    if (!as_json)
      out << "trial,seed,outcome,cause,length,biconnected_X,degrees_in_band,"
             "wilsonian_all\n";
    int solved = 0;
    for (int t = 0; t < cfg.trials; ++t) {
      ExperimentConfig one = cfg;
      one.seed = rng_draw(cfg.seed, static_cast<std::uint64_t>(t) + 1);
      auto rec = run_random_exchange_trial(one);
      std::string outcome = rec.outcome == TrialOutcome::solved ? "solved"
                            : rec.outcome == TrialOutcome::unsolved
                                ? "unsolved"
                                : "skipped";
      if (rec.outcome == TrialOutcome::solved) ++solved;
      auto flag = [&](const char* key) {
        auto it = rec.condition_checks.find(key);
        return it != rec.condition_checks.end() && it->second ? 1 : 0;
      };
      if (as_json) {
        json j{{"trial", t},
               {"seed", rec.seed},
               {"outcome", outcome},
               {"cause", rec.cause},
               {"length", rec.length},
               {"biconnected_X", flag("biconnected_X") == 1},
               {"degrees_in_band", flag("degrees_in_band") == 1},
               {"wilsonian_all", flag("neighborhood_wilsonian_all_steps") == 1}};
        out << j.dump() << '\n';
      } else {
        out << t << ',' << rec.seed << ',' << outcome << ',' << rec.cause
            << ',' << rec.length << ',' << flag("biconnected_X") << ','
            << flag("degrees_in_band") << ','
            << flag("neighborhood_wilsonian_all_steps") << '\n';
      }
    }
    out << "# solved " << solved << "/" << cfg.trials << '\n';
    return 0;
  }
  if (mode == "bn") {
    out << "n,diameter\n";
    for (const auto& r : bn_campaign(n_lo, n_hi))
      out << r.n << ',' << r.value << '\n';
    return 0;
  }
  if (mode == "reversal") {
    out << "n,distance\n";
    for (const auto& r : reversal_campaign(n_lo, n_hi))
      out << r.n << ',' << r.value << '\n';
    return 0;
  }
  throw ParameterError("experiment mode must be random, bn or reversal");
}

int cmd_bench(const std::string& out_path, std::ostream& out);

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in,
            std::ostream& out, std::ostream& err) {
  CLI::App app{"friends-and-strangers routing engine"};
  app.require_subcommand(1);

  std::string xspec, yspec, from_arg, to_arg, strategy = "auto";
  std::string start_arg, moves_arg, expect_arg, a_arg, b_arg, out_path;
  bool as_json = false, parallel = false;
  int n_lo = 4, n_hi = 6;

  auto* solve = app.add_subcommand("solve", "route between configurations");
  solve->add_option("--x", xspec)->required();
  solve->add_option("--y", yspec)->required();
  solve->add_option("--from", from_arg)->required();
  solve->add_option("--to", to_arg)->required();
  solve->add_option("--strategy", strategy)
      ->check(CLI::IsMember({"auto", "star", "kn", "dense3", "dense-exchange",
                             "oracle"}));
  solve->add_flag("--json", as_json);
  solve->add_option("--out", out_path);

  auto* verify = app.add_subcommand("verify", "replay a move sequence");
  verify->add_option("--x", xspec)->required();
  verify->add_option("--y", yspec)->required();
  verify->add_option("--start", start_arg)->required();
  verify->add_option("--moves", moves_arg)->required();
  verify->add_option("--expect", expect_arg);

  auto* classify = app.add_subcommand("classify", "same-component verdict");
  classify->add_option("--x", xspec)->required();
  classify->add_option("--y", yspec)->required();
  classify->add_option("--a", a_arg)->required();
  classify->add_option("--b", b_arg)->required();
  classify->add_flag("--json", as_json);

  std::string oracle_mode;
  auto* orc = app.add_subcommand("oracle", "exhaustive BFS ground truth");
  orc->add_option("mode", oracle_mode)->required();
  orc->add_option("--x", xspec);
  orc->add_option("--y", yspec);
  orc->add_option("--a", a_arg);
  orc->add_option("--b", b_arg);
  orc->add_option("--n-lo", n_lo);
  orc->add_option("--n-hi", n_hi);
  orc->add_flag("--parallel", parallel);
  orc->add_flag("--json", as_json);

  std::string exp_mode;
  ExperimentConfig cfg;
  auto* exp = app.add_subcommand("experiment", "random-graph pipelines");
  exp->add_option("mode", exp_mode)->required();
  exp->add_option("--n", cfg.n);
  exp->add_option("--p", cfg.p);
  exp->add_option("--q", cfg.q);
  exp->add_option("--trials", cfg.trials);
  exp->add_option("--seed", cfg.seed);
  exp->add_option("--c-constant", cfg.c_constant);
  exp->add_option("--budget-k", cfg.budget_k);
  exp->add_option("--budget-d", cfg.budget_d);
  exp->add_option("--n-lo", n_lo);
  exp->add_option("--n-hi", n_hi);
  exp->add_flag("--json", as_json);

  auto* bench = app.add_subcommand("bench", "measure gadget constants");
  std::string bench_out = "fs_constants.json";
  bench->add_option("--out", bench_out);

  std::vector<std::string> raw(args);
  std::reverse(raw.begin(), raw.end());
  try {
    app.parse(raw);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (solve->parsed())
      return cmd_solve(xspec, yspec, from_arg, to_arg, strategy, as_json,
                       out_path, in, out, err);
    if (verify->parsed())
      return cmd_verify(xspec, yspec, start_arg, moves_arg, expect_arg, in,
                        out, err);
    if (classify->parsed())
      return cmd_classify(xspec, yspec, a_arg, b_arg, as_json, in, out);
    if (orc->parsed())
      return cmd_oracle(orc, oracle_mode, xspec, yspec, a_arg, b_arg, n_lo,
                        n_hi, parallel, as_json, in, out);
    if (exp->parsed())
      return cmd_experiment(exp_mode, cfg, n_lo, n_hi, as_json, out);
    if (bench->parsed()) return cmd_bench(bench_out, out);
  } catch (const StateBudgetError& e) {
    err << "state budget exceeded: " << e.what() << "\n";
    return 3;
  } catch (const ParameterError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  err << "no subcommand\n";
  return 2;
}

namespace {

int cmd_bench(const std::string& out_path, std::ostream& out) {
  GadgetConstants gc;
  double worst_rot = 0, worst_tt = 0, worst_et = 0, worst_3c = 0,
         worst_dt = 0, worst_star = 0;

  // Rotation constants over every small frame shape.
  for (int i = 0; i <= 3; ++i)
    for (int j = std::max(i, 1); j <= 6; ++j)
      for (int k = j; k <= 8; ++k) {
        ThetaParams p{i, j, k};
        if (p.vertex_count() > 10) continue;
        if (i == 1 && j == 2 && k == 2) continue;
        Graph host = make_theta(p);
        ThetaFrame frame = theta_frame_of(p);
        Configuration c = Configuration::identity(p.vertex_count());
        int seat = rotation_seats(frame).front();
        Configuration start = c;
        std::swap(start.placement[0], start.placement[start.person_at(seat)]);
        auto tokens = ThetaTokens::from_config(frame, start, 0);
        auto plan = theta_rotate(host, tokens, start);
        worst_rot = std::max(
            worst_rot, static_cast<double>(plan.moves.size()) / p.vertex_count());
      }

  // Gadgets over random biconnected hosts.
  for (int n = 5; n <= 9; ++n) {
    double n2 = static_cast<double>(n) * n;
    for (int trial = 0; trial < 60; ++trial) {
      Graph y = sample_connected_gnp(n, 0.35 + 0.05 * (trial % 7),
                                     rng_draw(77, n * 100 + trial));
      if (!is_biconnected(y) || is_cycle_graph(y) || is_theta122(y)) continue;
      Configuration c = sample_configuration(n, rng_draw(78, n * 100 + trial));
      // transposition at the distinguished edge
      if (!is_bipartite(y).bipartite) {
        auto frame = find_theta_subgraph(y, true);
        auto site = rotation_site(frame);
        auto occ = c.occupants();
        if (occ[site[0]] != 0 && occ[site[1]] != 0) {
          auto seq = elementary_transposition(y, c, 0, site[0], site[1]);
          worst_et = std::max(worst_et, seq.moves.size() / n2);
        }
      }
      // 3-cycle and transport on a random 2-edge path avoiding s
      std::array<int, 3> first{-1, -1, -1}, last{-1, -1, -1};
      auto occ = c.occupants();
      for (int v = 0; v < n; ++v) {
        if (y.degree(v) < 2) continue;
        for (int a : y.neighbors(v))
          for (int b2 : y.neighbors(v)) {
            if (a >= b2 || occ[a] == 0 || occ[v] == 0 || occ[b2] == 0) continue;
            if (first[0] < 0) first = {a, v, b2};
            last = {a, v, b2};
          }
      }
      if (first[0] >= 0) {
        auto seq = elementary_3cycle(y, c, 0, first[0], first[1], first[2]);
        worst_3c = std::max(worst_3c, seq.moves.size() / n2);
        if (last != first) {
          auto tt = transport_triple(
              y, c, 0, {occ[first[0]], occ[first[1]], occ[first[2]]}, last);
          worst_tt = std::max(worst_tt, tt.moves.size() / n2);
        }
      }
      // double transposition on two disjoint edges when present
      for (const auto& e1 : y.edges()) {
        bool done = false;
        for (const auto& e2 : y.edges()) {
          std::set<int> vs{e1.first, e1.second, e2.first, e2.second};
          if (vs.size() != 4 || vs.count(c.placement[0])) continue;
          auto seq = elementary_double_transposition(y, c, 0, e1, e2);
          worst_dt = std::max(worst_dt, seq.moves.size() / (n2 * n));
          done = true;
          break;
        }
        if (done) break;
      }
    }
    // full star solve on random hosts of every connectivity flavor
    for (int trial = 0; trial < 80; ++trial) {
      Graph y = sample_connected_gnp(n, 0.3 + 0.06 * (trial % 8),
                                     rng_draw(81, n * 200 + trial));
      Configuration from = sample_configuration(n, rng_draw(82, trial));
      Configuration to = sample_configuration(n, rng_draw(83, trial));
      if (!decide_star(y, from, to, 0).same) continue;
      auto report = solve_star(y, from, to, 0);
      worst_star = std::max(worst_star,
                            static_cast<double>(report.length) / (n2 * n2));
    }
  }

  auto ceil_margin = [](double v, double lo) {
    return std::max(lo, std::ceil(v * 1.5));
  };
  gc.c_rot = ceil_margin(worst_rot, 8);
  gc.c_tt = ceil_margin(worst_tt, 2);
  gc.c_et = ceil_margin(worst_et, 4);
  gc.c_3c = ceil_margin(worst_3c, 4);
  gc.c_dt = ceil_margin(worst_dt, 4);
  gc.k_star = static_cast<long long>(ceil_margin(worst_star, 2));
  gc.k_dense = gc.k_star * 3;
  write_constants_file(out_path, gc);
  out << "measured c_rot=" << worst_rot << " c_tt=" << worst_tt
      << " c_et=" << worst_et << " c_3c=" << worst_3c << " c_dt=" << worst_dt
      << " k_star=" << worst_star << '\n'
      << "wrote " << out_path << '\n';
  return 0;
}

}  // namespace

}  // namespace fsg
