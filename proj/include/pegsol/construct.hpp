#pragma once

// Sweep-finish solutions on Rhombus(6i).
//
// The sweep runs from the upper left corner (1,1) to (N-1,N-1) over the
// (odd,odd) class, N = 6i. Its complement is cleared to one peg at (N,1) in
// 9i-1 moves: phase A once, phase B i-2 times, phase C once. Reversing the
// clearing and appending the sweep gives the sweep-finish solution.
//
// The phase scripts were found by move-count-exact search on Rhombus(12)
// (A, C) and Rhombus(18) (B), aiming at the intermediate pattern T_m: holes
// of the start pattern with col >= 6m+1 and row >= 6m-1, plus the even rows
// of column N. They are instantiated on larger boards by shifting each
// coordinate and filling the gaps that open inside straight runs of jumps.

#include <array>
#include <cstdlib>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sweep.hpp"

namespace pegsol {

enum class Phase { A, B, C };

inline const char* to_string(Phase p) {
  switch (p) {
    case Phase::A: return "A";
    case Phase::B: return "B";
    case Phase::C: return "C";
  }
  return "?";
}

struct PhaseScript {
  Phase phase;
  int reference_side;              // board the moves are written for
  std::vector<std::string> moves;  // dash notation on that board
  bool eight_move_variant = false;
};

inline const PhaseScript& phase_a_script() {
  static const PhaseScript s{Phase::A,
                             12,
                             {"l1-j1-h1-f1-d1-b1", "l3-j3-h3-f3-d3", "e12-e10-e8-e6-e4-c2", "b1-d3-b3", "g12-e12",
                              "d12-f12", "b12-d12", "a12-a10-a8-a6-a4-a2-c4-c6-c8-c10-c12-e12-g12"}};
  return s;
}

inline const PhaseScript& phase_b_script() {
  static const PhaseScript s{Phase::B,
                             18,
                             {"i18-i16-i14-i12-i10-i8-i6", "r5-p5-n5-l5-j5-h5", "r9-p9-n9-l9-j9", "g5-i5-i7",
                              "r7-p7-n7-l7-j7-h7", "k18-i18", "m18-k18", "h18-j18-l18",
                              "g18-g16-g14-g12-g10-g8-g6-i8-k10-k12-k14-k16-k18-m18"}};
  return s;
}

inline const PhaseScript& phase_c_script(bool eight_moves = false) {
  static const PhaseScript nine{Phase::C,
                                12,
                                {"l5-j5-h5", "l7-j7", "l10-j8", "l12-l10", "l9-l11", "j12-l12-l10",
                                 "g12-g10-g8-g6-g4-i6-i8-i10", "h12-j12-h10-j10", "j7-j9-j11-l11-l9-l7-l5-l3-l1"}};
  static const PhaseScript eight{Phase::C,
                                 12,
                                 {"l5-j5-h5", "l10-j8", "l12-l10", "l9-l11", "j12-l12-l10", "h12-j12",
                                  "g12-g10-g8-g6-g4-i6-i8-i10-i12-k12-k10", "l7-l9-l11-j9-j7-l7-l5-l3-l1"},
                                 true};
  return eight_moves ? eight : nine;
}

/// Rhombus(6) solution of the i = 1 pattern, found by fewest-move search.
inline const std::vector<std::string>& base_clearing_script() {
  static const std::vector<std::string> s{"f5-d5",          "f3-f5",          "d6-d4",          "b6-d6",
                                          "e6-c6-c4-e4",    "f6-f4-d4-b2",    "a6-a4-a2-c2",    "f1-f3-d3-b1-d1-f1"};
  return s;
}

/// Hole of a phase script on Rhombus(side), for the `application`-th use
/// (B only; counted from 1). Coordinates within four of the reference
/// board's far edge follow that edge; the rest follow the phase's anchor,
/// which moves by 6 per application of B. Phase C shifts as a block except
/// the top four holes of the last column, where its final move ends after
/// collecting the column-N trail.
inline Hole place_script_hole(const PhaseScript& s, Hole h, int side, int application = 1) {
  const int grow = side - s.reference_side;
  if (s.phase == Phase::C) {
    if (h.col == s.reference_side && h.row <= 4) return {side, h.row};
    return {h.col + grow, h.row + grow};
  }
  const int near = s.phase == Phase::B ? 6 * (application - 1) : 0;
  const int far_from = s.reference_side - 4;
  auto axis = [&](int v) { return v >= far_from ? v + grow : v + near; };
  return {axis(h.col), axis(h.row)};
}

/// Insert the landing holes of straight runs that were stretched apart.
inline std::vector<Hole> fill_straight_runs(const std::vector<Hole>& holes) {
  std::vector<Hole> out{holes.front()};
  for (std::size_t k = 1; k < holes.size(); ++k) {
    Hole a = holes[k - 1], b = holes[k];
    Hole d = b - a;
    int len = std::max(std::abs(d.col), std::abs(d.row));
    std::optional<Dir> dir;
    if (len > 0 && len % 2 == 0 && d.col % len == 0 && d.row % len == 0) dir = unit_dir(Hole{d.col / len, d.row / len});
    if (!dir)
      throw Error("script holes " + hole_name(a) + " and " + hole_name(b) + " are not on a line an even distance apart");
    for (int s = 2; s <= len; s += 2) out.push_back(a + step(*dir) * s);
  }
  return out;
}

inline std::vector<Move> instantiate_script(const PhaseScript& s, int side, int application = 1) {
  std::vector<Move> out;
  for (const std::string& text : s.moves) {
    const Move written = Move::parse(text);
    std::vector<Hole> holes;
    for (Hole h : written.path()) holes.push_back(place_script_hole(s, h, side, application));
    out.emplace_back(fill_straight_runs(holes));
  }
  return out;
}

// ---------------------------------------------------------------------------

inline void check_construction_index(int i) {
  if (i < 1) throw Error("construction index must be at least 1");
  if (i > 1000) throw Error("construction index too large");
}

/// The maximal sweep from (1,1) to (N-1,N-1) on a Rhombus(N), N even.
inline SweepPattern construction_sweep(BoardPtr board) {
  return euler_sweep(class_sweep_graph(std::move(board), SubLattice{1, 1}), Hole{1, 1});
}
inline SweepPattern construction_sweep(int i) {
  check_construction_index(i);
  return construction_sweep(make_rhombus(6 * i));
}

/// Complement of the sweep pattern: (odd,odd) holes below the last row and
/// column except (1,1), plus the whole last row and last column.
inline Position sweep_complement_pattern(int i) {
  check_construction_index(i);
  const int n = 6 * i;
  BoardPtr board = make_rhombus(n);
  Position p(board);
  for (int k = 0; k < board->size(); ++k) {
    Hole h = board->hole(k);
    bool edge = h.col == n || h.row == n;
    bool odd = h.col % 2 == 1 && h.row % 2 == 1 && !(h.col == 1 && h.row == 1);
    if (edge || odd) p.set(k);
  }
  return p;
}

/// The pattern after phase A and m-1 applications of B: holes of the start
/// pattern with col >= 6m+1 and row >= 6m-1, plus column N's even rows.
inline Position intermediate_pattern(const Position& start, int m) {
  const int n = start.board().max_col();
  Position p(start.board_ptr());
  for (int k = 0; k < start.board().size(); ++k) {
    Hole h = start.board().hole(k);
    if (!start.test(k)) continue;
    if ((h.col >= 6 * m + 1 && h.row >= 6 * m - 1) || (h.col == n && h.row % 2 == 0)) p.set(k);
  }
  return p;
}

/// Emptiness after phase A and j applications of B: columns 1..6j+6 and
/// rows 1..6j+4 hold no pegs outside the rightmost column.
inline bool cleared_after_phases(const Position& p, int j) {
  const Board& b = p.board();
  const int n = b.max_col();
  for (int k = 0; k < b.size(); ++k) {
    Hole h = b.hole(k);
    if (h.col == n || !p.test(k)) continue;
    if (h.col <= 6 * j + 6 || h.row <= 6 * j + 4) return false;
  }
  return true;
}

struct ConstructOptions {
  bool eight_move_phase_c = false;  // 9i-2 moves instead of 9i-1 for i >= 2
};

struct PhaseCheckpoint {
  Phase phase;
  int application;        // 1-based, counts B applications
  std::size_t moves_end;  // moves of the clearing solution so far
  Position position;
};

struct ClearingConstruction {
  int i = 0;
  Solution solution;
  std::vector<PhaseCheckpoint> checkpoints;
};

/// Thrown when an instantiated script does not replay.
class ConstructionError : public Error {
 public:
  ConstructionError(std::string what, Phase phase, int application, int move, int jump)
      : Error(std::move(what)), phase(phase), application(application), move(move), jump(jump) {}
  Phase phase;
  int application;
  int move;
  int jump;
};

namespace detail {

inline void run_phase(Position& p, std::vector<Move>& moves, const PhaseScript& s, int side, int application) {
  auto script = instantiate_script(s, side, application);
  for (std::size_t k = 0; k < script.size(); ++k) {
    try {
      p = apply_move(p, script[k]);
    } catch (const IllegalMove& e) {
      throw ConstructionError(std::string("phase ") + to_string(s.phase) + " application " + std::to_string(application) +
                                  ", move " + std::to_string(k + 1) + " (" + script[k].to_string() + "): " + e.what(),
                              s.phase, application, static_cast<int>(k) + 1, e.jump_index);
    }
    moves.push_back(script[k]);
  }
}

}  // namespace detail

/// Clears sweep_complement_pattern(i) to a lone peg at (6i, 1) in 9i-1
/// moves, checking each phase boundary. i = 1 uses a fixed 8-move solution.
inline ClearingConstruction build_clearing_solution(int i, const ConstructOptions& opt = {}) {
  check_construction_index(i);
  const int n = 6 * i;
  ClearingConstruction out;
  out.i = i;
  Position start = sweep_complement_pattern(i);
  Position p = start;
  std::vector<Move> moves;
  if (i == 1) {
    for (const auto& m : base_clearing_script()) moves.push_back(Move::parse(m));
    out.solution = Solution{start, moves};
  } else {
    detail::run_phase(p, moves, phase_a_script(), n, 1);
    if (!(p == intermediate_pattern(start, 1)) || !cleared_after_phases(p, 0))
      throw ConstructionError("phase A did not reach its intermediate pattern", Phase::A, 1, 0, -1);
    out.checkpoints.push_back({Phase::A, 1, moves.size(), p});
    for (int j = 1; j <= i - 2; ++j) {
      detail::run_phase(p, moves, phase_b_script(), n, j);
      if (!(p == intermediate_pattern(start, j + 1)) || !cleared_after_phases(p, j))
        throw ConstructionError("phase B did not reach its intermediate pattern", Phase::B, j, 0, -1);
      out.checkpoints.push_back({Phase::B, j, moves.size(), p});
    }
    detail::run_phase(p, moves, phase_c_script(opt.eight_move_phase_c), n, 1);
    out.checkpoints.push_back({Phase::C, 1, moves.size(), p});
    out.solution = Solution{start, moves};
  }
  auto report = verify_solution(out.solution, Hole{n, 1});
  if (!report.ok) throw Error("clearing solution failed replay: " + report.message);
  const std::size_t expected = static_cast<std::size_t>(9 * i - 1 - (opt.eight_move_phase_c && i >= 2 ? 1 : 0));
  if (regroup(out.solution.moves).size() != expected)
    throw Error("clearing solution has " + std::to_string(regroup(out.solution.moves).size()) + " moves, expected " +
                std::to_string(expected));
  return out;
}

/// From a vacancy at (6i, 1): the clearing jumps in reverse order, then the
/// maximal sweep of length (9i-1)(3i-1).
inline Solution build_sweep_finish_solution(int i, const ConstructOptions& opt = {}) {
  auto clearing = build_clearing_solution(i, opt);
  Solution back = reverse_solution(clearing.solution);
  SweepPattern sweep = construction_sweep(clearing.solution.start.board_ptr());
  if (!(replay(back) == sweep.pre_sweep_position()))
    throw Error("reversed clearing does not reach the sweep position");
  std::vector<Move> moves = back.moves;
  moves.push_back(sweep.move());
  Solution sol{back.start, regroup(moves)};
  auto report = verify_solution(sol, sweep.end());
  if (!report.ok) throw Error("sweep-finish solution failed replay: " + report.message);
  if (sol.moves.back().sweep_length() != sweep.length())
    throw Error("final move merged with the preceding one");
  return sol;
}

}  // namespace pegsol
