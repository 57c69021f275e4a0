#pragma once

// Command-line front end. run_cli() is the whole program; main() only
// forwards to it so tests can drive subcommands in-process.

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "pegsol/pegsol.hpp"
#include "server.hpp"

namespace pegsol::cli {

using nlohmann::json;

enum Exit : int { ok = 0, invalid_input = 1, budget_exhausted = 3, verification_failed = 4 };

struct Failure : Error {
  int code;
  Failure(int c, const std::string& what) : Error(what), code(c) {}
};

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

inline void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path);
  out << text;
}

/// Board shorthand, `polygon:@file` (edge list or two-line descriptor).
inline BoardPtr board_arg(const std::string& s) {
  if (s.rfind("polygon:@", 0) == 0) {
    std::string text = read_file(s.substr(9));
    if (text.rfind("lattice", 0) == 0) return parse_board_descriptor(text);
    return make_polygon(parse_edges(text));
  }
  return parse_board_shorthand(s);
}

inline Hole hole_arg(const Board& b, const std::string& s, const char* what) {
  auto h = parse_hole(s);
  if (!h || !b.contains(*h)) throw Error(std::string(what) + " '" + s + "' is not a hole on the board");
  return *h;
}

inline json stats_json(const SearchStats& s) {
  return {{"nodes", s.nodes}, {"table_hits", s.table_hits}, {"table_entries", s.table_entries}};
}

inline json moves_json(const std::vector<Move>& moves) {
  json a = json::array();
  for (const Move& m : moves) a.push_back(m.to_string());
  return a;
}

inline json holes_json(const std::vector<Hole>& hs) {
  json a = json::array();
  for (Hole h : hs) a.push_back(hole_name(h));
  return a;
}

struct SearchOptions {
  long long budget = SearchConfig{}.node_budget;
  int table_bits = 22;
  bool no_symmetry = false;
  bool no_class_pruning = false;

  void add(CLI::App* app) {
    app->add_option("--budget", budget, "node budget")->check(CLI::PositiveNumber);
    app->add_option("--table-bits", table_bits, "log2 of the transposition table size")->check(CLI::Range(10, 30));
    app->add_flag("--no-symmetry", no_symmetry, "disable symmetry reduction");
    app->add_flag("--no-class-pruning", no_class_pruning, "disable position-class pruning");
  }
  SearchConfig config() const {
    SearchConfig c;
    c.node_budget = budget;
    c.transposition_capacity = std::size_t{1} << table_bits;
    c.use_symmetry = !no_symmetry;
    c.use_class_pruning = !no_class_pruning;
    return c;
  }
};

inline std::vector<Move> parse_move_list(const std::string& s) {
  std::vector<Move> out;
  std::string tok;
  for (char c : s + ",") {
    if (c == ',' || c == ' ') {
      if (!tok.empty()) out.push_back(Move::parse(tok));
      tok.clear();
    } else {
      tok += c;
    }
  }
  return out;
}

inline int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Peg solitaire on triangular-lattice boards", "pegsol"};
  app.require_subcommand(1);
  app.fallthrough();
  bool as_json = false;
  app.add_flag("--json", as_json, "machine-readable output");

  std::string board_s = "rhombus6";
  auto add_board = [&](CLI::App* c) { c->add_option("--board", board_s, "board: rhombus6, triangle8, hexagon:3, polygon:@file"); };

  // board
  auto* c_board = app.add_subcommand("board", "describe a board");
  add_board(c_board);
  bool board_ascii = false;
  c_board->add_flag("--ascii", board_ascii, "draw the hole layout");

  // solve
  auto* c_solve = app.add_subcommand("solve", "solve a single-vacancy problem");
  add_board(c_solve);
  std::string vacancy_s, finish_s, suffix_s, out_path;
  int sweep_len = 0, k = 1;
  SearchOptions solve_opt;
  c_solve->add_option("--vacancy", vacancy_s, "starting vacancy")->required();
  c_solve->add_option("--finish", finish_s, "finishing hole or 'any' (default: the vacancy)");
  c_solve->add_option("--sweep-finish", sweep_len, "require a maximal sweep of this length");
  c_solve->add_option("--k", k, "sweep position counted from the end (1 = last move)")->check(CLI::PositiveNumber);
  c_solve->add_option("--suffix", suffix_s, "moves after the sweep, comma separated");
  c_solve->add_option("--out", out_path, "write the solution file here");
  solve_opt.add(c_solve);

  // sweep
  auto* c_sweep = app.add_subcommand("sweep", "longest sweeps and super-sweeps");
  add_board(c_sweep);
  std::string start_s, end_s;
  bool super = false, endpoints = false;
  long long sweep_nodes = 50'000'000;
  c_sweep->add_option("--start", start_s, "fix the mover's first hole");
  c_sweep->add_option("--end", end_s, "fix the mover's last hole");
  c_sweep->add_flag("--super", super, "build the super-sweep (Euler trail)");
  c_sweep->add_flag("--endpoints", endpoints, "list endpoint pairs of maximal sweeps up to symmetry");
  c_sweep->add_option("--budget", sweep_nodes, "node limit for the longest-trail search")->check(CLI::PositiveNumber);

  // minmoves
  auto* c_min = app.add_subcommand("minmoves", "fewest moves for a single-vacancy problem");
  add_board(c_min);
  std::string min_vac, min_finish;
  int max_moves = 0;
  SearchOptions min_opt;
  min_opt.table_bits = 24;
  c_min->add_option("--vacancy", min_vac, "starting vacancy")->required();
  c_min->add_option("--finish", min_finish, "finishing hole or 'any' (default: the vacancy)");
  c_min->add_option("--max-moves", max_moves, "give up above this many moves")->check(CLI::PositiveNumber);
  min_opt.add(c_min);

  // construct
  auto* c_con = app.add_subcommand("construct", "clearing and sweep-finish solutions on Rhombus(6i)");
  int scale = 0;
  bool eight_c = false;
  std::string out_dir;
  c_con->add_option("--i", scale, "scale i, board side 6i")->required()->check(CLI::Range(1, 1000));
  c_con->add_flag("--eight-move-c", eight_c, "use the 8-move closing phase");
  c_con->add_option("--out-dir", out_dir, "write clearing_i<K>.txt and sweep_finish_i<K>.txt here");

  // classify
  auto* c_cls = app.add_subcommand("classify", "super-sweep feasibility");
  add_board(c_cls);

  // census
  auto* c_cen = app.add_subcommand("census", "count problems up to symmetry");
  add_board(c_cen);
  bool no_solve = false;
  SearchOptions cen_opt;
  c_cen->add_flag("--no-solve", no_solve, "skip the solvability count");
  cen_opt.add(c_cen);

  // verify
  auto* c_ver = app.add_subcommand("verify", "replay a solution file");
  std::string ver_file, ver_goal;
  c_ver->add_option("file", ver_file, "solution file")->required();
  c_ver->add_option("--goal", ver_goal, "required finishing hole (overrides the file)");

  // render
  auto* c_ren = app.add_subcommand("render", "draw positions, sweeps and sweep graphs");
  add_board(c_ren);
  std::string ren_vac, ren_pos, ren_sweep, ren_format = "ascii", ren_out, ren_solution;
  bool ren_graph = false, ren_super = false;
  c_ren->add_option("--vacancy", ren_vac, "draw full-minus-vacancy");
  c_ren->add_option("--position", ren_pos, "draw a hex-encoded position");
  c_ren->add_option("--solution", ren_solution, "draw the final position of a solution file");
  c_ren->add_option("--sweep", ren_sweep, "draw a sweep given as a dash path");
  c_ren->add_flag("--super", ren_super, "draw the board's super-sweep");
  c_ren->add_flag("--graph", ren_graph, "draw the super-sweep graph");
  c_ren->add_option("--format", ren_format, "ascii or svg")->check(CLI::IsMember({"ascii", "svg"}));
  c_ren->add_option("--out", ren_out, "write to a file");

  // serve
  auto* c_srv = app.add_subcommand("serve", "JSON over HTTP");
  int port = 8080;
  std::string host = "127.0.0.1";
  c_srv->add_option("--port", port, "port (0 picks one)")->check(CLI::Range(0, 65535));
  c_srv->add_option("--host", host, "bind address");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : (code < 0 ? 2 : code);
  }

  auto emit = [&](const json& j, const std::string& text) {
    if (as_json) out << j.dump(2) << "\n";
    else out << text;
  };

  try {
    if (c_board->parsed()) {
      BoardPtr b = board_arg(board_s);
      json cs = json::array();
      std::ostringstream t;
      t << b->descriptor() << "holes " << b->size() << "\n";
      t << "corners";
      for (const auto& c : corners(*b)) {
        cs.push_back({{"hole", hole_name(c.hole)}, {"angle", c.interior_angle}});
        t << " " << hole_name(c.hole) << ":" << c.interior_angle;
      }
      const bool convex = is_convex(*b);
      const auto group = symmetries(*b);
      const bool null_class = is_null_class(*b);
      t << "\nconvex " << (convex ? "yes" : "no") << "\nsymmetries " << group.size() << "\nnull-class "
        << (null_class ? "yes" : "no") << "\n";
      if (board_ascii) t << render_ascii(Position::full(b));
      emit({{"board", b->shorthand()},
            {"descriptor", b->descriptor()},
            {"holes", b->size()},
            {"corners", cs},
            {"convex", convex},
            {"symmetries", group.size()},
            {"null_class", null_class}},
           t.str());
      return ok;
    }

    if (c_solve->parsed()) {
      BoardPtr b = board_arg(board_s);
      Hole vac = hole_arg(*b, vacancy_s, "vacancy");
      std::optional<Hole> finish = vac;
      if (finish_s == "any") finish.reset();
      else if (!finish_s.empty()) finish = hole_arg(*b, finish_s, "finish");
      SearchConfig cfg = solve_opt.config();
      SearchOutcome r;
      std::optional<SweepFinish> used;
      if (sweep_len > 0) {
        std::optional<std::vector<Move>> suffix;
        if (!suffix_s.empty()) suffix = parse_move_list(suffix_s);
        auto sp = solve_sweep_problem(b, vac, finish, sweep_len, k, cfg, suffix);
        r = std::move(sp.outcome);
        used = sp.finish;
      } else {
        if (!suffix_s.empty() || k != 1) throw Error("--k and --suffix need --sweep-finish");
        r = solve(Position::vacancy(b, vac), GoalSpec{finish, std::nullopt}, cfg);
      }
      json j{{"status", to_string(r.status)}, {"board", b->shorthand()}, {"vacancy", hole_name(vac)},
             {"finish", finish ? json(hole_name(*finish)) : json("any")}, {"stats", stats_json(r.stats)}};
      std::ostringstream t;
      t << "# status " << to_string(r.status) << "\n# nodes " << r.stats.nodes << "\n";
      if (r.solution) {
        const Solution& s = *r.solution;
        auto report = verify_solution(s, finish);
        if (!report.ok) throw Failure(verification_failed, "solution failed replay: " + report.message);
        j["moves"] = moves_json(s.moves);
        j["move_count"] = s.move_count();
        j["jump_count"] = s.jump_count();
        t << "# moves " << s.move_count() << ", jumps " << s.jump_count() << "\n";
        if (used) {
          j["sweep"] = used->sweep.to_string();
          j["sweep_length"] = used->sweep.length();
          j["k"] = used->k();
          j["suffix"] = moves_json(used->suffix);
          t << "# sweep of length " << used->sweep.length() << " is move " << used->k() << " from the end\n";
        }
        std::string file = format_solution(s, finish);
        if (!out_path.empty()) write_file(out_path, file);
        else t << file;
      }
      emit(j, t.str());
      return r.status == Outcome::budget_exhausted ? budget_exhausted : ok;
    }

    if (c_sweep->parsed()) {
      BoardPtr b = board_arg(board_s);
      std::ostringstream t;
      json j{{"board", b->shorthand()}};
      if (super) {
        auto v = euler_verdict(b);
        if (!v.feasible) throw Error(std::string("no super-sweep: ") + to_string(v.reason));
        auto s = construct_super_sweep(b);
        j["super_sweep"] = s.to_string();
        j["length"] = s.length();
        j["closed"] = v.closed;
        t << "super-sweep length " << s.length() << (v.closed ? " (closed)" : "") << "\n" << s.to_string() << "\n";
        emit(j, t.str());
        return ok;
      }
      std::optional<Hole> st, en;
      if (!start_s.empty()) st = hole_arg(*b, start_s, "start");
      if (!end_s.empty()) en = hole_arg(*b, end_s, "end");
      auto r = max_sweep_length(b, st, en, sweep_nodes);
      j["status"] = to_string(r.status);
      j["length"] = r.length;
      j["nodes"] = r.nodes;
      t << "status " << to_string(r.status) << "\nlength " << r.length << "\n";
      if (r.witness) {
        j["witness"] = r.witness->to_string();
        t << "witness " << r.witness->to_string() << "\n";
      }
      if (endpoints) {
        auto e = enumerate_max_sweep_endpoints(b, r.length, sweep_nodes);
        json orbits = json::array();
        t << "endpoint orbits";
        for (const auto& p : e.orbits) {
          orbits.push_back({hole_name(p.start), hole_name(p.end)});
          t << " " << hole_name(p.start) << "-" << hole_name(p.end);
        }
        t << "\n";
        j["endpoint_orbits"] = orbits;
        j["endpoint_pairs"] = e.all.size();
        j["endpoints_complete"] = e.complete;
      }
      emit(j, t.str());
      return r.status == SearchStatus::budget_exhausted ? budget_exhausted : ok;
    }

    if (c_min->parsed()) {
      BoardPtr b = board_arg(board_s);
      Hole vac = hole_arg(*b, min_vac, "vacancy");
      std::optional<Hole> finish = vac;
      if (min_finish == "any") finish.reset();
      else if (!min_finish.empty()) finish = hole_arg(*b, min_finish, "finish");
      auto r = min_moves(Position::vacancy(b, vac), finish, min_opt.config(),
                         max_moves > 0 ? std::optional<int>(max_moves) : std::nullopt);
      json j{{"status", to_string(r.status)}, {"board", b->shorthand()}, {"vacancy", hole_name(vac)},
             {"finish", finish ? json(hole_name(*finish)) : json("any")}, {"proven_lower_bound", r.proven_lower_bound},
             {"stats", stats_json(r.stats)}};
      std::ostringstream t;
      t << "# status " << to_string(r.status) << "\n# no solution below " << r.proven_lower_bound << " moves\n";
      if (r.solution) {
        j["moves"] = r.moves;
        j["solution"] = moves_json(r.solution->moves);
        t << "# minimum " << r.moves << " moves\n" << format_solution(*r.solution, finish);
      }
      emit(j, t.str());
      return r.status == Outcome::budget_exhausted ? budget_exhausted : ok;
    }

    if (c_con->parsed()) {
      ConstructOptions opt;
      opt.eight_move_phase_c = eight_c;
      auto clear = build_clearing_solution(scale, opt);
      Solution fin = build_sweep_finish_solution(scale, opt);
      const int side = 6 * scale;
      const Hole corner{side, 1};
      auto rep1 = verify_solution(clear.solution, corner);
      auto rep2 = verify_solution(fin);
      if (!rep1.ok || !rep2.ok) throw Failure(verification_failed, "construction failed replay");
      const int last = fin.moves.back().sweep_length();
      json cps = json::array();
      for (const auto& c : clear.checkpoints)
        cps.push_back({{"phase", to_string(c.phase)}, {"application", c.application}, {"moves_end", c.moves_end}});
      auto end_peg = rep2.final_position->sole_peg();
      json j{{"i", scale},
             {"board", "rhombus" + std::to_string(side)},
             {"clearing_moves", clear.solution.move_count()},
             {"clearing_jumps", clear.solution.jump_count()},
             {"final_peg", hole_name(corner)},
             {"checkpoints", cps},
             {"sweep_finish_moves", fin.move_count()},
             {"final_sweep_length", last},
             {"sweep_finish_end", hole_name(*end_peg)},
             {"eight_move_phase_c", eight_c}};
      std::ostringstream t;
      t << "Rhombus(" << side << ")\nclearing: " << clear.solution.move_count() << " moves, final peg "
        << hole_name(corner) << "\nsweep finish: " << fin.move_count() << " moves, final sweep length " << last
        << ", ends at " << hole_name(*end_peg) << "\n";
      if (!out_dir.empty()) {
        std::filesystem::create_directories(out_dir);
        auto p1 = std::filesystem::path(out_dir) / ("clearing_i" + std::to_string(scale) + ".txt");
        auto p2 = std::filesystem::path(out_dir) / ("sweep_finish_i" + std::to_string(scale) + ".txt");
        write_file(p1.string(), format_solution(clear.solution, corner));
        write_file(p2.string(), format_solution(fin, *end_peg));
        j["files"] = {p1.string(), p2.string()};
        t << "wrote " << p1.string() << "\nwrote " << p2.string() << "\n";
      }
      emit(j, t.str());
      return ok;
    }

    if (c_cls->parsed()) {
      BoardPtr b = board_arg(board_s);
      const bool convex = is_convex(*b);
      SuperSweepVerdict v;
      json j{{"board", b->shorthand()}, {"convex", convex}};
      std::ostringstream t;
      if (convex) {
        auto c = classify_convex(b);
        v = c.verdict;
        j["shape"] = to_string(c.shape);
        j["odd_sides"] = c.odd_sides;
        j["consistent"] = c.consistent();
        t << "shape " << to_string(c.shape) << (c.odd_sides ? " (odd sides)" : "") << "\n";
      } else {
        v = euler_verdict(b);
        j["shape"] = "non-convex";
        t << "shape non-convex\n";
      }
      j["feasible"] = v.feasible;
      j["reason"] = to_string(v.reason);
      j["odd_vertices"] = holes_json(v.odd_vertices);
      j["odd_count"] = v.odd_count;
      j["closed"] = v.closed;
      t << "super-sweep " << (v.feasible ? "feasible" : "infeasible");
      if (!v.feasible) t << " (" << to_string(v.reason) << ")";
      t << "\nodd-degree vertices " << v.odd_count << "\n";
      if (v.endpoints) {
        j["endpoints"] = {hole_name(v.endpoints->first), hole_name(v.endpoints->second)};
        t << (v.closed ? "circuit through " : "path ") << hole_name(v.endpoints->first) << " - "
          << hole_name(v.endpoints->second) << "\n";
      }
      emit(j, t.str());
      return ok;
    }

    if (c_cen->parsed()) {
      BoardPtr b = board_arg(board_s);
      auto r = problem_census(b, cen_opt.config(), !no_solve);
      json counts = json::object();
      std::ostringstream t;
      bool complete = true;
      for (const auto& c : r.counts) {
        counts[c.convention] = {{"count", c.count}, {"description", c.description}, {"complete", c.complete}};
        t << c.convention << " " << c.count << (c.complete ? "" : " (incomplete)") << "  # " << c.description << "\n";
        complete = complete && c.complete;
      }
      emit({{"board", b->shorthand()}, {"counts", counts}}, t.str());
      return complete ? ok : budget_exhausted;
    }

    if (c_ver->parsed()) {
      auto f = parse_solution(read_file(ver_file));
      std::optional<Hole> goal = f.goal;
      if (!ver_goal.empty()) goal = hole_arg(f.solution.board(), ver_goal, "goal");
      auto rep = verify_solution(f.solution, goal);
      json j{{"ok", rep.ok}, {"message", rep.message}, {"moves", f.solution.move_count()},
             {"jumps", f.solution.jump_count()}};
      if (rep.failing_move >= 0) {
        j["failing_move"] = rep.failing_move;
        j["failing_jump"] = rep.failing_jump;
      }
      if (rep.ok && !f.solution.moves.empty()) j["final_move_length"] = f.solution.moves.back().sweep_length();
      std::ostringstream t;
      t << (rep.ok ? "ok" : "FAILED") << ": " << rep.message << " (" << f.solution.move_count() << " moves, "
        << f.solution.jump_count() << " jumps)\n";
      emit(j, t.str());
      return rep.ok ? ok : verification_failed;
    }

    if (c_ren->parsed()) {
      BoardPtr b = board_arg(board_s);
      const bool svg = ren_format == "svg";
      std::string pic;
      if (ren_graph) {
        auto g = build_sweep_graph(b);
        if (!g) throw Error(std::string("no sweep graph: ") + to_string(g.failure));
        pic = svg ? render_svg(*g.graph) : render_ascii(*g.graph);
      } else if (ren_super || !ren_sweep.empty()) {
        SweepPattern s = ren_super ? construct_super_sweep(b) : SweepPattern{b, Move::parse(ren_sweep).path()};
        if (!s.is_valid()) throw Error("not a legal sweep on this board");
        pic = svg ? render_svg(s) : render_ascii(s);
      } else {
        Position p = Position::full(b);
        if (!ren_solution.empty()) {
          auto f = parse_solution(read_file(ren_solution));
          p = replay(f.solution);
        } else if (!ren_pos.empty()) {
          p = Position::from_hex(b, ren_pos);
        } else if (!ren_vac.empty()) {
          p = Position::vacancy(b, hole_arg(*b, ren_vac, "vacancy"));
        }
        pic = svg ? render_svg(p) : render_ascii(p);
      }
      if (!ren_out.empty()) write_file(ren_out, pic);
      else out << pic;
      return ok;
    }

    if (c_srv->parsed()) {
      server::Service service;
      int bound = service.bind(host, port);
      if (bound < 0) throw Error("cannot bind " + host + ":" + std::to_string(port));
      err << "listening on http://" << host << ":" << bound << "\n";
      service.listen_after_bind();
      return ok;
    }
  } catch (const Failure& e) {
    err << "error: " << e.what() << "\n";
    return e.code;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return invalid_input;
  }
  return invalid_input;
}

}  // namespace pegsol::cli
