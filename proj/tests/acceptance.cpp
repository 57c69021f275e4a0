// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any
// fails. The fewest-move census keeps finished orbits in
// acceptance_census.txt (working directory) so an interrupted run resumes.

#include <chrono>
#include <climits>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>

#include "pegsol/pegsol.hpp"

using namespace pegsol;

namespace {

Hole H(const char* s) { return *parse_hole(s); }

struct Check {
  bool ok = true;
  std::ostringstream detail;
  void require(bool cond, const std::string& what) {
    if (!cond && ok) detail << "failed: " << what << "; ";
    ok = ok && cond;
  }
};

std::vector<BoardPtr> convex_boards(int max_steps) {
  std::vector<BoardPtr> out;
  std::set<std::vector<Hole>> seen;
  for (int a0 = 0; a0 <= max_steps; ++a0)
    for (int a1 = 0; a1 <= max_steps; ++a1)
      for (int a2 = 0; a2 <= max_steps; ++a2)
        for (int a3 = 0; a3 <= max_steps; ++a3) {
          int a4 = a0 + a1 - a3, a5 = a1 + a2 - a4;
          if (a4 < 0 || a4 > max_steps || a5 < 0 || a5 > max_steps) continue;
          int a[6] = {a0, a1, a2, a3, a4, a5};
          std::vector<Edge> edges;
          for (int d = 0; d < 6; ++d)
            if (a[d] > 0) edges.push_back(Edge{dir_from_index(d), a[d]});
          if (edges.size() < 3) continue;
          auto b = make_polygon(edges);
          std::vector<Hole> key;
          for (Hole h : b->holes()) key.push_back(h - Hole{b->min_col(), b->min_row()});
          if (seen.insert(key).second) out.push_back(b);
        }
  return out;
}

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void super_sweep_lengths(Check& c) {
  const std::pair<int, int> expect[] = {{3, 5}, {5, 16}, {7, 33}, {9, 56}};
  for (auto [n, len] : expect) {
    auto s = construct_super_sweep(make_rhombus(n));
    c.require(s.length() == len && s.is_super_sweep() && s.is_valid(), "Rhombus(" + std::to_string(n) + ")");
  }
  for (int n = 3; n <= 13; n += 2)
    c.require(construct_super_sweep(make_rhombus(n)).length() == rhombic_matchstick_length(n),
              "formula at n=" + std::to_string(n));
  c.detail << "5 16 33 56; formula holds for odd n <= 13";
}

void euler_classification(Check& c) {
  int boards = 0, feasible = 0;
  for (const auto& b : convex_boards(6)) {
    auto k = classify_convex(b);
    ++boards;
    c.require(k.consistent(), "consistency on " + b->shorthand());
    if (!k.verdict.feasible) continue;
    ++feasible;
    if (k.shape == ConvexShape::triangle) {
      c.require(k.verdict.closed, "closed circuit on triangle " + b->shorthand());
    } else {
      c.require(!k.verdict.closed && k.verdict.endpoints.has_value(), "open path on " + b->shorthand());
      if (!k.verdict.endpoints) continue;
      std::set<Hole> obtuse;
      for (const auto& corner : corners(*b))
        if (corner.interior_angle == 120) obtuse.insert(corner.hole);
      c.require(obtuse.count(k.verdict.endpoints->first) && obtuse.count(k.verdict.endpoints->second),
                "path ends at the 120 degree corners on " + b->shorthand());
    }
  }
  for (int s : {3, 5, 7}) c.require(euler_verdict(make_hexagon(s)).odd_count == 6, "hexagon " + std::to_string(s));
  for (int s : {3, 5}) c.require(euler_verdict(make_star(s)).odd_count == 6, "star " + std::to_string(s));
  c.detail << boards << " convex boards with sides <= 7 holes, " << feasible
           << " with a super-sweep; odd-sided hexagons and stars have 6 odd vertices";
}

void unreachability(Check& c) {
  int n = 0;
  for (const auto& b : convex_boards(8)) {
    if (b->size() > 81 || !euler_verdict(b).feasible) continue;
    c.require(super_sweep_unreachable(construct_super_sweep(b)), b->shorthand());
    ++n;
  }
  c.require(n > 0, "some boards checked");
  c.detail << n << " feasible super-sweeps, every complement has no jump";
}

void null_class(Check& c) {
  auto b = make_rhombus(6);
  c.require(is_null_class(*b), "Rhombus(6) null class");
  ClassBasis basis(*b);
  std::mt19937_64 rng(1);
  for (int t = 0; t < 1000; ++t) {
    Position p(b);
    for (int i = 0; i < 36; ++i)
      if (rng() & 1) p.set(i);
    c.require(same_class(basis, p, complement(p)), "random position " + p.to_hex());
  }
  c.detail << "null class; 1000 random complements share the class";
}

void max_sweep(Check& c) {
  auto b = make_rhombus(6);
  auto e = enumerate_max_sweep_endpoints(b);
  c.require(e.complete, "search complete");
  c.require(e.length == 16, "length 16");
  std::set<std::pair<Hole, Hole>> got, want{{H("a1"), H("e5")}, {H("b2"), H("f6")}, {H("b1"), H("f5")}};
  for (const auto& o : e.orbits) got.insert({o.start, o.end});
  c.require(got == want, "endpoint orbits");
  c.detail << "length " << e.length << ", orbits";
  for (const auto& o : e.orbits) c.detail << " " << hole_name(o.start) << "-" << hole_name(o.end);
}

void sweep_problems(Check& c) {
  auto b = make_rhombus(6);
  struct Case {
    const char* v;
    int k;
  };
  for (Case p : {Case{"e5", 1}, Case{"d4", 2}, Case{"e4", 2}, Case{"d3", 3}}) {
    auto r = solve_sweep_problem(b, H(p.v), H(p.v), 16, p.k);
    bool ok = r.outcome.status == Outcome::solved && verify_solution(*r.outcome.solution, H(p.v)).ok;
    if (ok) {
      const auto& m = r.outcome.solution->moves;
      ok = m[m.size() - static_cast<std::size_t>(p.k)].sweep_length() == 16;
      c.detail << p.v << " k=" << p.k << " in " << m.size() << " moves; ";
    }
    c.require(ok, std::string(p.v));
  }
  auto w = max_sweep_length(b, H("b1"), H("f5"));
  c.require(w.witness.has_value(), "b1-f5 witness");
  if (!w.witness) return;
  SearchConfig cfg;
  cfg.node_budget = LLONG_MAX;
  cfg.transposition_capacity = std::size_t{1} << 24;
  auto fs = reachable_finishes(complement(w.witness->pre_sweep_position()), cfg);
  c.require(fs.complete() && fs.cells.empty(), "b1-f5 finish set empty");
  c.detail << "b1-f5 as final move: no finish after " << fs.stats.nodes << " nodes";
}

void every_vacancy(Check& c) {
  SearchConfig cfg;
  cfg.node_budget = LLONG_MAX;
  cfg.transposition_capacity = std::size_t{1} << 24;
  auto r = sweep_finish_vacancies(make_rhombus(6), cfg);
  c.require(r.complete, "enumeration complete");
  c.require(r.vacancies.size() == 36, "all 36 vacancies");
  c.detail << r.vacancies.size() << " of 36 vacancies over " << r.configurations.size() << " configurations";
}

void complement_census(Check& c) {
  auto b = make_rhombus(6);
  auto orbits = hole_orbits(*b, symmetries(*b));
  c.require(orbits.size() == 12, "12 orbits");
  const std::filesystem::path cache = "acceptance_census.txt";
  std::map<std::string, std::pair<int, std::string>> done;  // hole -> (moves, solution file)
  if (std::filesystem::exists(cache)) {
    std::istringstream in(read_file(cache));
    std::string hole, line;
    int moves = 0;
    while (in >> hole >> moves) {
      std::getline(in, line);
      std::string file;
      for (char ch : line.substr(1)) file += ch == '|' ? '\n' : ch;
      done[hole] = {moves, file};
    }
  }
  std::map<int, int> histogram;
  for (const auto& o : orbits) {
    Hole h = b->hole(o.front());
    std::string name = hole_name(h);
    auto solvable = solve(Position::vacancy(b, h), GoalSpec{h, std::nullopt});
    c.require(solvable.status == Outcome::solved, "complement " + name + " solvable");
    int moves = -1;
    if (auto it = done.find(name); it != done.end()) {
      // cached minimum: re-check that its witness replays in that many moves
      auto f = parse_solution(it->second.second);
      if (verify_solution(f.solution, h).ok && f.solution.move_count() == it->second.first) moves = it->second.first;
    }
    if (moves < 0) {
      SearchConfig cfg;
      cfg.node_budget = LLONG_MAX;
      cfg.transposition_capacity = std::size_t{1} << 26;
      auto t0 = std::chrono::steady_clock::now();
      auto r = min_moves(Position::vacancy(b, h), h, cfg);
      double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      std::cerr << "  " << name << ": " << to_string(r.status) << " " << r.moves << " moves, " << r.stats.nodes
                << " nodes, " << secs << " s\n";
      c.require(r.status == Outcome::solved, "min moves for " + name);
      if (r.status != Outcome::solved) continue;
      moves = r.moves;
      std::string file = format_solution(*r.solution, h);
      for (char& ch : file)
        if (ch == '\n') ch = '|';
      std::ofstream(cache, std::ios::app) << name << " " << moves << " " << file << "\n";
    }
    ++histogram[moves];
  }
  c.require(histogram[13] == 7 && histogram[14] == 5 && histogram.count(15) == 0 && histogram.size() == 2,
            "7 orbits at 13 moves, 5 at 14");
  c.detail << "12 orbits solvable; minima:";
  for (auto [m, n] : histogram) c.detail << " " << n << "x" << m;
}

void constructor(Check& c) {
  const int sweeps[] = {16, 85, 208, 385};
  for (int i = 1; i <= 4; ++i) {
    auto clear = build_clearing_solution(i);
    c.require(clear.solution.move_count() == 9 * i - 1, "clearing moves i=" + std::to_string(i));
    c.require(verify_solution(clear.solution, Hole{6 * i, 1}).ok, "clearing replay i=" + std::to_string(i));
    auto fin = build_sweep_finish_solution(i);
    c.require(verify_solution(fin).ok && fin.moves.back().sweep_length() == sweeps[i - 1],
              "sweep finish i=" + std::to_string(i));
  }
  auto t0 = std::chrono::steady_clock::now();
  auto big = build_sweep_finish_solution(34);
  auto rep = verify_solution(big);
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  c.require(big.board().size() == 41616, "Rhombus(204) has 41616 holes");
  c.require(rep.ok, "i=34 replay");
  c.require(big.moves.back().sweep_length() == 30805, "i=34 final sweep 30805");
  c.require(secs < 600, "i=34 under ten minutes");
  c.detail << "i=1..4 clearing 8/17/26/35 moves, sweeps 16/85/208/385; i=34 sweep "
           << big.moves.back().sweep_length() << " in " << static_cast<int>(secs) << " s";
}

void properties(Check& c) {
  std::mt19937_64 rng(2);
  auto b = make_rhombus(6);
  ClassBasis basis(*b);
  int trials = 0;
  for (int t = 0; t < 200; ++t) {
    Position start = Position::vacancy(b, b->hole(static_cast<int>(rng() % 36)));
    Position p = start;
    std::vector<Jump> js;
    for (;;) {
      auto legal = legal_jumps(p);
      if (legal.empty()) break;
      Jump j = legal[rng() % legal.size()];
      Move m = Move::from_jumps({j});
      Position q = apply_move(p, m);
      c.require(undo_move(q, m) == p, "apply/undo");
      c.require(same_class(basis, q, start), "class invariance");
      p = q;
      js.push_back(j);
    }
    if (js.empty()) continue;
    Solution s{start, group_jumps(js)};
    Solution rr = reverse_solution(reverse_solution(s));
    c.require(rr.start == s.start && rr.moves == regroup(s.moves), "reverse involution");
    ++trials;
  }
  int files = 0;
  for (const auto& e : std::filesystem::directory_iterator(PEGSOL_DATA_DIR)) {
    if (e.path().extension() != ".txt") continue;
    auto f = parse_solution(read_file(e.path()));
    c.require(verify_solution(f.solution, f.goal).ok, "golden " + e.path().filename().string());
    auto again = parse_solution(format_solution(f.solution, f.goal));
    c.require(again.solution.moves == f.solution.moves && again.solution.start == f.solution.start,
              "round trip " + e.path().filename().string());
    ++files;
  }
  c.require(files > 0, "golden files present");
  c.detail << trials << " random games; " << files << " golden files verify and round-trip";
}

}  // namespace

int main(int argc, char** argv) {
  // optional arguments pick criteria by name
  std::set<std::string> only(argv + 1, argv + argc);
  const std::vector<std::pair<std::string, std::function<void(Check&)>>> criteria{
      {"super-sweep-lengths", super_sweep_lengths},
      {"euler-classification", euler_classification},
      {"unreachability", unreachability},
      {"null-class", null_class},
      {"rhombus6-max-sweep", max_sweep},
      {"sweep-problems", sweep_problems},
      {"every-vacancy-sweep", every_vacancy},
      {"complement-orbits-min-moves", complement_census},
      {"constructor", constructor},
      {"property-suite", properties},
  };
  int failed = 0;
  std::size_t ran = 0;
  for (const auto& [name, run] : criteria) {
    if (!only.empty() && !only.count(name)) continue;
    ++ran;
    Check c;
    auto t0 = std::chrono::steady_clock::now();
    try {
      run(c);
    } catch (const std::exception& e) {
      c.ok = false;
      c.detail << "exception: " << e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::cout << (c.ok ? "PASS " : "FAIL ") << name << " (" << static_cast<int>(secs) << " s): " << c.detail.str()
              << std::endl;
    failed += !c.ok;
  }
  std::cout << (failed ? "FAILED " : "ALL PASSED ") << ran - static_cast<std::size_t>(failed) << "/" << ran << std::endl;
  return failed ? 1 : 0;
}
