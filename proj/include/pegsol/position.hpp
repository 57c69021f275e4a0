#pragma once

// Positions, jumps, moves and solutions.

#include <bit>
#include <cstdint>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "lattice.hpp"

namespace pegsol {

/// Peg set over a board's holes, bit i <-> hole index i.
class Position {
 public:
  Position() = default;
  explicit Position(BoardPtr board)
      : board_(std::move(board)), words_((static_cast<std::size_t>(board_->size()) + 63) / 64, 0) {}

  static Position empty(BoardPtr board) { return Position(std::move(board)); }
  static Position full(BoardPtr board) {
    Position p(std::move(board));
    for (int i = 0; i < p.board_->size(); ++i) p.set(i);
    return p;
  }
  /// Full board minus one hole.
  static Position vacancy(BoardPtr board, Hole h) {
    Position p = full(board);
    p.reset(board->require_index(h));
    return p;
  }
  static Position single(BoardPtr board, Hole h) {
    Position p(board);
    p.set(board->require_index(h));
    return p;
  }
  static Position from_holes(BoardPtr board, const std::vector<Hole>& holes) {
    Position p(board);
    for (Hole h : holes) p.set(p.board_->require_index(h));
    return p;
  }

  const BoardPtr& board_ptr() const { return board_; }
  const Board& board() const { return *board_; }

  bool test(int i) const { return (words_[static_cast<std::size_t>(i) >> 6] >> (i & 63)) & 1u; }
  void set(int i) { words_[static_cast<std::size_t>(i) >> 6] |= (std::uint64_t{1} << (i & 63)); }
  void reset(int i) { words_[static_cast<std::size_t>(i) >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  void flip(int i) { words_[static_cast<std::size_t>(i) >> 6] ^= (std::uint64_t{1} << (i & 63)); }

  bool has_peg(Hole h) const {
    int i = board_->index(h);
    return i >= 0 && test(i);
  }

  int peg_count() const {
    int n = 0;
    for (auto w : words_) n += std::popcount(w);
    return n;
  }

  std::vector<Hole> pegs() const {
    std::vector<Hole> out;
    for (int i = 0; i < board_->size(); ++i)
      if (test(i)) out.push_back(board_->hole(i));
    return out;
  }

  /// Hole of the only peg, if exactly one remains.
  std::optional<Hole> sole_peg() const {
    if (peg_count() != 1) return std::nullopt;
    return pegs().front();
  }

  const std::vector<std::uint64_t>& words() const { return words_; }

  /// Low 64 bits; exact for boards of at most 64 holes.
  std::uint64_t bits64() const { return words_.empty() ? 0 : words_[0]; }
  static Position from_bits64(BoardPtr board, std::uint64_t bits) {
    if (board->size() > 64) throw Error("from_bits64 needs a board of at most 64 holes");
    Position p(std::move(board));
    p.words_[0] = bits;
    return p;
  }

  /// Hex wire encoding: bit i of the position is bit i of the number,
  /// written most significant digit first with ceil(holes/4) digits.
  std::string to_hex() const;
  static Position from_hex(BoardPtr board, std::string_view hex);

  friend bool operator==(const Position& a, const Position& b) {
    // boards parsed separately compare by their holes
    return (a.board_ == b.board_ || a.board_->holes() == b.board_->holes()) && a.words_ == b.words_;
  }

 private:
  BoardPtr board_;
  std::vector<std::uint64_t> words_;
};

inline std::string Position::to_hex() const {
  const int digits = (board_->size() + 3) / 4;
  std::string s(static_cast<std::size_t>(digits), '0');
  for (int d = 0; d < digits; ++d) {
    int v = 0;
    for (int b = 0; b < 4; ++b) {
      int i = d * 4 + b;
      if (i < board_->size() && test(i)) v |= 1 << b;
    }
    s[static_cast<std::size_t>(digits - 1 - d)] = "0123456789abcdef"[v];
  }
  return s;
}

inline Position Position::from_hex(BoardPtr board, std::string_view hex) {
  Position p(board);
  const int n = static_cast<int>(hex.size());
  for (int k = 0; k < n; ++k) {
    char c = static_cast<char>(std::tolower(static_cast<unsigned char>(hex[static_cast<std::size_t>(n - 1 - k)])));
    int v;
    if (c >= '0' && c <= '9')
      v = c - '0';
    else if (c >= 'a' && c <= 'f')
      v = c - 'a' + 10;
    else
      throw Error("bad hex digit in position");
    for (int b = 0; b < 4; ++b) {
      if (!((v >> b) & 1)) continue;
      int i = k * 4 + b;
      if (i >= board->size()) throw Error("position has bits beyond the board");
      p.set(i);
    }
  }
  return p;
}

inline Position complement(const Position& p) {
  Position q(p.board_ptr());
  for (int i = 0; i < p.board().size(); ++i)
    if (!p.test(i)) q.set(i);
  return q;
}

// ---------------------------------------------------------------------------
// Jumps and moves

struct Jump {
  Hole from;
  Hole over;
  Hole to;
  friend bool operator==(const Jump&, const Jump&) = default;
};

/// True when from, over, to are consecutive along one axis.
inline bool is_jump_shape(Hole from, Hole to) {
  Hole d = to - from;
  if (d.col % 2 != 0 || d.row % 2 != 0) return false;
  return unit_dir(Hole{d.col / 2, d.row / 2}).has_value();
}

inline Hole midpoint(Hole from, Hole to) { return Hole{(from.col + to.col) / 2, (from.row + to.row) / 2}; }

/// One or more jumps by the same peg, stored as the holes it visits.
class Move {
 public:
  Move() = default;
  explicit Move(std::vector<Hole> path) : path_(std::move(path)) {
    if (path_.size() < 2) throw Error("a move needs at least one jump");
    for (std::size_t i = 1; i < path_.size(); ++i)
      if (!is_jump_shape(path_[i - 1], path_[i]))
        throw Error("not a jump: " + hole_name(path_[i - 1]) + "-" + hole_name(path_[i]));
  }
  static Move from_jumps(const std::vector<Jump>& jumps) {
    std::vector<Hole> path{jumps.at(0).from};
    for (const Jump& j : jumps) {
      if (!(j.from == path.back())) throw Error("jumps in a move must chain");
      path.push_back(j.to);
    }
    return Move(std::move(path));
  }

  const std::vector<Hole>& path() const { return path_; }
  Hole start() const { return path_.front(); }
  Hole end() const { return path_.back(); }
  /// Captured peg count.
  int sweep_length() const { return static_cast<int>(path_.size()) - 1; }
  Jump jump(int k) const {
    auto a = path_[static_cast<std::size_t>(k)], b = path_[static_cast<std::size_t>(k) + 1];
    return {a, midpoint(a, b), b};
  }
  std::vector<Jump> jumps() const {
    std::vector<Jump> out;
    for (int k = 0; k < sweep_length(); ++k) out.push_back(jump(k));
    return out;
  }

  /// Dash notation, e.g. "a1-c1-c3".
  std::string to_string() const {
    std::string s;
    for (std::size_t i = 0; i < path_.size(); ++i) {
      if (i) s += '-';
      s += hole_name(path_[i]);
    }
    return s;
  }
  static Move parse(std::string_view text) {
    std::vector<Hole> path;
    std::size_t pos = 0;
    while (pos <= text.size()) {
      auto dash = text.find('-', pos);
      auto tok = text.substr(pos, dash == std::string_view::npos ? std::string_view::npos : dash - pos);
      while (!tok.empty() && (tok.front() == ' ' || tok.front() == '\t')) tok.remove_prefix(1);
      while (!tok.empty() && (tok.back() == ' ' || tok.back() == '\r' || tok.back() == '\t')) tok.remove_suffix(1);
      auto h = parse_hole(tok);
      if (!h) throw Error("bad hole '" + std::string(tok) + "' in move '" + std::string(text) + "'");
      path.push_back(*h);
      if (dash == std::string_view::npos) break;
      pos = dash + 1;
    }
    return Move(std::move(path));
  }

  friend bool operator==(const Move&, const Move&) = default;

 private:
  std::vector<Hole> path_;
};

/// Thrown by apply_move/undo_move; `jump_index` is the failing jump within the move.
class IllegalMove : public Error {
 public:
  IllegalMove(std::string what, int jump_index) : Error(std::move(what)), jump_index(jump_index) {}
  int jump_index;
};

inline bool jump_legal(const Position& p, const Jump& j) {
  const Board& b = p.board();
  int f = b.index(j.from), o = b.index(j.over), t = b.index(j.to);
  return f >= 0 && o >= 0 && t >= 0 && p.test(f) && p.test(o) && !p.test(t);
}

inline std::vector<Jump> legal_jumps(const Position& p) {
  std::vector<Jump> out;
  const Board& b = p.board();
  for (int f = 0; f < b.size(); ++f) {
    if (!p.test(f)) continue;
    for (int d = 0; d < 6; ++d) {
      int o = b.neighbor(f, dir_from_index(d));
      if (o < 0 || !p.test(o)) continue;
      int t = b.neighbor(o, dir_from_index(d));
      if (t < 0 || p.test(t)) continue;
      out.push_back({b.hole(f), b.hole(o), b.hole(t)});
    }
  }
  return out;
}

inline void apply_jump_in_place(Position& p, const Jump& j) {
  const Board& b = p.board();
  p.reset(b.index(j.from));
  p.reset(b.index(j.over));
  p.set(b.index(j.to));
}

inline Position apply_move(const Position& p, const Move& m) {
  Position q = p;
  for (int k = 0; k < m.sweep_length(); ++k) {
    Jump j = m.jump(k);
    if (!jump_legal(q, j))
      throw IllegalMove("illegal jump " + hole_name(j.from) + "-" + hole_name(j.to) + " (jump " +
                            std::to_string(k) + " of " + m.to_string() + ")",
                        k);
    apply_jump_in_place(q, j);
  }
  return q;
}

/// Inverse of apply_move: the peg at the move's end walks back, restoring
/// every captured peg.
inline Position undo_move(const Position& p, const Move& m) {
  Position q = p;
  const Board& b = q.board();
  for (int k = m.sweep_length() - 1; k >= 0; --k) {
    Jump j = m.jump(k);
    int f = b.index(j.from), o = b.index(j.over), t = b.index(j.to);
    if (f < 0 || o < 0 || t < 0 || !q.test(t) || q.test(o) || q.test(f))
      throw IllegalMove("cannot undo jump " + hole_name(j.from) + "-" + hole_name(j.to), k);
    q.reset(t);
    q.set(o);
    q.set(f);
  }
  return q;
}

/// Split a jump list into maximal chains by one peg.
inline std::vector<Move> group_jumps(const std::vector<Jump>& jumps) {
  std::vector<Move> moves;
  std::vector<Jump> cur;
  for (const Jump& j : jumps) {
    if (!cur.empty() && !(cur.back().to == j.from)) {
      moves.push_back(Move::from_jumps(cur));
      cur.clear();
    }
    cur.push_back(j);
  }
  if (!cur.empty()) moves.push_back(Move::from_jumps(cur));
  return moves;
}

/// Canonical form: consecutive moves by the same peg are merged.
inline std::vector<Move> regroup(const std::vector<Move>& moves) {
  std::vector<Jump> all;
  for (const Move& m : moves)
    for (const Jump& j : m.jumps()) all.push_back(j);
  return group_jumps(all);
}

// ---------------------------------------------------------------------------
// Solutions

struct Solution {
  Position start;
  std::vector<Move> moves;

  const Board& board() const { return start.board(); }
  int move_count() const { return static_cast<int>(moves.size()); }
  int jump_count() const {
    int n = 0;
    for (const Move& m : moves) n += m.sweep_length();
    return n;
  }
};

struct VerifyReport {
  bool ok = false;
  int failing_move = -1;  // -1 when the failure is the goal check (or none)
  int failing_jump = -1;
  std::string message;
  std::optional<Position> final_position;
};

/// Replay a solution. With `goal` set, the final position must be a single
/// peg at that hole; otherwise any single peg passes. Never throws.
inline VerifyReport verify_solution(const Solution& s, std::optional<Hole> goal = std::nullopt,
                                    bool require_single_peg = true) {
  VerifyReport r;
  Position p = s.start;
  for (std::size_t i = 0; i < s.moves.size(); ++i) {
    const Move& m = s.moves[i];
    for (int k = 0; k < m.sweep_length(); ++k) {
      Jump j = m.jump(k);
      if (!jump_legal(p, j)) {
        r.failing_move = static_cast<int>(i);
        r.failing_jump = k;
        r.message = "illegal jump " + hole_name(j.from) + "-" + hole_name(j.to) + " in move " +
                    std::to_string(i + 1) + " (" + m.to_string() + ")";
        return r;
      }
      apply_jump_in_place(p, j);
    }
  }
  r.final_position = p;
  if (require_single_peg || goal) {
    auto sole = p.sole_peg();
    if (!sole) {
      r.message = "final position has " + std::to_string(p.peg_count()) + " pegs";
      return r;
    }
    if (goal && !(*sole == *goal)) {
      r.message = "final peg at " + hole_name(*sole) + ", expected " + hole_name(*goal);
      return r;
    }
  }
  r.ok = true;
  r.message = "ok";
  return r;
}

/// Final position of a legal replay; throws IllegalMove otherwise.
inline Position replay(const Solution& s) {
  Position p = s.start;
  for (const Move& m : s.moves) p = apply_move(p, m);
  return p;
}

/// Time reversal: complementing both sides of a jump gives the same jump
/// run the other way in time, so the jumps in reverse order are a solution
/// from complement(final) to complement(start). Jumps are regrouped into
/// maximal chains, so the move count can change.
inline Solution reverse_solution(const Solution& s) {
  Position fin;
  try {
    fin = replay(s);
  } catch (const IllegalMove& e) {
    throw Error(std::string("cannot reverse an unverifiable solution: ") + e.what());
  }
  std::vector<Jump> rev;
  for (auto mit = s.moves.rbegin(); mit != s.moves.rend(); ++mit) {
    auto js = mit->jumps();
    for (auto jit = js.rbegin(); jit != js.rend(); ++jit) rev.push_back(*jit);
  }
  return Solution{complement(fin), group_jumps(rev)};
}

// ---------------------------------------------------------------------------
// Solution text format
//
//   lattice tri
//   rhombus 6
//   vacancy e5            (or: start <hex>)
//   goal e5               (optional)
//   a1-c1-c3
//   ...
// Lines starting with '#' are comments.

struct SolutionFile {
  Solution solution;
  std::optional<Hole> goal;
};

inline std::string format_solution(const Solution& s, std::optional<Hole> goal = std::nullopt) {
  std::ostringstream out;
  out << s.board().descriptor();
  Position full = Position::full(s.start.board_ptr());
  if (s.start.peg_count() == s.board().size() - 1) {
    for (int i = 0; i < s.board().size(); ++i)
      if (!s.start.test(i)) out << "vacancy " << hole_name(s.board().hole(i)) << "\n";
  } else {
    out << "start " << s.start.to_hex() << "\n";
  }
  if (goal) out << "goal " << hole_name(*goal) << "\n";
  for (const Move& m : s.moves) out << m.to_string() << "\n";
  return out.str();
}

inline SolutionFile parse_solution(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::vector<std::string> lines;
  while (std::getline(in, line)) {
    auto b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos || line[b] == '#') continue;
    auto e = line.find_last_not_of(" \t\r");
    lines.push_back(line.substr(b, e - b + 1));
  }
  if (lines.size() < 3) throw Error("solution file needs a board header and a start line");
  BoardPtr board = parse_board_descriptor(lines[0] + "\n" + lines[1] + "\n");
  SolutionFile f;
  std::size_t i = 2;
  if (lines[i].rfind("vacancy ", 0) == 0) {
    auto h = parse_hole(lines[i].substr(8));
    if (!h) throw Error("bad vacancy line '" + lines[i] + "'");
    f.solution.start = Position::vacancy(board, *h);
  } else if (lines[i].rfind("start ", 0) == 0) {
    f.solution.start = Position::from_hex(board, lines[i].substr(6));
  } else {
    throw Error("expected 'vacancy' or 'start' line");
  }
  ++i;
  if (i < lines.size() && lines[i].rfind("goal ", 0) == 0) {
    auto h = parse_hole(lines[i].substr(5));
    if (!h) throw Error("bad goal line '" + lines[i] + "'");
    f.goal = *h;
    ++i;
  }
  for (; i < lines.size(); ++i) f.solution.moves.push_back(Move::parse(lines[i]));
  return f;
}

}  // namespace pegsol
