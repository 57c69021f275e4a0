#pragma once

// Search on boards of at most 64 holes: single-peg solving with a table of
// failed positions, sweep-constrained finishes by time reversal, exhaustive
// finish sets, fewest-move search and the problem census.

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string_view>
#include <string>
#include <utility>
#include <vector>

#include "classes.hpp"
#include "sweep.hpp"

namespace pegsol {

struct SearchConfig {
  long long node_budget = 500'000'000;
  /// Table slots (rounded up to a power of two).
  std::size_t transposition_capacity = std::size_t{1} << 22;
  bool use_symmetry = true;
  bool use_class_pruning = true;
  /// Polled every few thousand nodes; a set flag ends the search like an
  /// exhausted budget.
  const std::atomic<bool>* cancel = nullptr;
};

enum class Outcome { solved, unsolvable, budget_exhausted };

inline const char* to_string(Outcome o) {
  switch (o) {
    case Outcome::solved: return "solved";
    case Outcome::unsolvable: return "unsolvable";
    case Outcome::budget_exhausted: return "budget_exhausted";
  }
  return "?";
}

struct SearchStats {
  long long nodes = 0;
  long long table_hits = 0;
  std::size_t table_entries = 0;
};

struct SearchOutcome {
  Outcome status = Outcome::unsolvable;
  std::optional<Solution> solution;
  SearchStats stats;
};

/// A sweep followed by `suffix`; the sweep is move k = suffix.size() + 1
/// counted from the end.
struct SweepFinish {
  SweepPattern sweep;
  std::vector<Move> suffix;
  int k() const { return static_cast<int>(suffix.size()) + 1; }
};

struct GoalSpec {
  std::optional<Hole> finish;  // nullopt: any hole
  std::optional<SweepFinish> sweep;
};

namespace detail {

using u64 = std::uint64_t;

inline u64 bit(int i) { return u64{1} << i; }

/// Precomputed jump masks and symmetry tables for a board of <= 64 holes.
class FastBoard {
 public:
  struct JumpMask {
    u64 from_over;
    u64 to;
    u64 all;
    int from, over, to_index;
  };

  explicit FastBoard(BoardPtr board) : board_(std::move(board)) {
    if (board_->size() > 64) throw Error("search supports boards of at most 64 holes");
    n_ = board_->size();
    jumps_from_.resize(static_cast<std::size_t>(n_));
    for (int f = 0; f < n_; ++f)
      for (int d = 0; d < 6; ++d) {
        int o = board_->neighbor(f, dir_from_index(d));
        if (o < 0) continue;
        int t = board_->neighbor(o, dir_from_index(d));
        if (t < 0) continue;
        JumpMask j{bit(f) | bit(o), bit(t), bit(f) | bit(o) | bit(t), f, o, t};
        jumps_from_[static_cast<std::size_t>(f)].push_back(static_cast<int>(jumps_.size()));
        jumps_.push_back(j);
      }
    full_ = n_ == 64 ? ~u64{0} : bit(n_) - 1;
    group_ = symmetries(*board_);
  }

  const BoardPtr& board() const { return board_; }
  int size() const { return n_; }
  u64 full() const { return full_; }
  const std::vector<JumpMask>& jumps() const { return jumps_; }
  const std::vector<int>& jumps_from(int f) const { return jumps_from_[static_cast<std::size_t>(f)]; }
  const std::vector<Symmetry>& group() const { return group_; }

  /// Byte tables for the symmetries in `which` (indices into group()).
  void select_symmetries(const std::vector<int>& which) {
    tables_.clear();
    for (int s : which) {
      const auto& perm = group_[static_cast<std::size_t>(s)].perm;
      Table t{};
      for (int byte = 0; byte < 8; ++byte)
        for (int v = 0; v < 256; ++v) {
          u64 m = 0;
          for (int b = 0; b < 8; ++b) {
            int i = byte * 8 + b;
            if ((v >> b & 1) && i < n_) m |= bit(perm[static_cast<std::size_t>(i)]);
          }
          t[static_cast<std::size_t>(byte)][static_cast<std::size_t>(v)] = m;
        }
      tables_.push_back(t);
      perms_.push_back(perm);
    }
  }

  /// Symmetries that fix the hole (all of them for -1).
  std::vector<int> stabilizer(int hole) const {
    std::vector<int> out;
    for (std::size_t s = 0; s < group_.size(); ++s)
      if (hole < 0 || group_[s].perm[static_cast<std::size_t>(hole)] == hole) out.push_back(static_cast<int>(s));
    return out;
  }

  /// Symmetries that map the hole set `mask` onto itself.
  std::vector<int> set_stabilizer(u64 mask) const {
    std::vector<int> out;
    for (std::size_t s = 0; s < group_.size(); ++s) {
      u64 m = 0;
      for (int i = 0; i < n_; ++i)
        if (mask >> i & 1) m |= bit(group_[s].perm[static_cast<std::size_t>(i)]);
      if (m == mask) out.push_back(static_cast<int>(s));
    }
    return out;
  }

  u64 map(std::size_t table, u64 x) const {
    const Table& t = tables_[table];
    u64 m = 0;
    for (int byte = 0; byte < 8 && x; ++byte, x >>= 8) m |= t[static_cast<std::size_t>(byte)][x & 0xff];
    return m;
  }

  /// Minimum image over the selected symmetries; `which` receives its index.
  u64 canonical(u64 x, std::size_t* which = nullptr) const {
    u64 best = x;
    std::size_t arg = 0;
    for (std::size_t s = 1; s < tables_.size(); ++s) {
      u64 m = map(s, x);
      if (m < best) {
        best = m;
        arg = s;
      }
    }
    if (which) *which = arg;
    return best;
  }
  int map_hole(std::size_t table, int hole) const { return perms_[table][static_cast<std::size_t>(hole)]; }
  std::size_t selected() const { return tables_.size(); }

  Jump to_jump(const JumpMask& j) const { return {board_->hole(j.from), board_->hole(j.over), board_->hole(j.to_index)}; }

 private:
  using Table = std::array<std::array<u64, 256>, 8>;
  BoardPtr board_;
  int n_ = 0;
  u64 full_ = 0;
  std::vector<JumpMask> jumps_;
  std::vector<std::vector<int>> jumps_from_;
  std::vector<Symmetry> group_;
  std::vector<Table> tables_;
  std::vector<std::vector<int>> perms_;
};

inline u64 mix(u64 x) {
  x ^= x >> 33;
  x *= 0xff51afd7ed558ccdull;
  x ^= x >> 33;
  x *= 0xc4ceb9fe1a85ec53ull;
  x ^= x >> 33;
  return x;
}

/// Open-addressing map from nonzero 64-bit keys to small values. Stops
/// accepting new keys at 3/4 load; lookups stay exact.
template <class V>
class FlatMap {
 public:
  explicit FlatMap(std::size_t capacity) {
    std::size_t cap = 1024;
    while (cap < capacity) cap <<= 1;
    keys_.assign(cap, 0);
    vals_.assign(cap, V{});
    mask_ = cap - 1;
  }
  const V* find(u64 key) const {
    for (std::size_t i = mix(key) & mask_;; i = (i + 1) & mask_) {
      if (keys_[i] == key) return &vals_[i];
      if (keys_[i] == 0) return nullptr;
    }
  }
  /// Slot for the key, inserting it when there is room; nullptr when full.
  V* upsert(u64 key) {
    for (std::size_t i = mix(key) & mask_;; i = (i + 1) & mask_) {
      if (keys_[i] == key) return &vals_[i];
      if (keys_[i] == 0) {
        if (size_ * 4 >= keys_.size() * 3) return nullptr;
        keys_[i] = key;
        ++size_;
        return &vals_[i];
      }
    }
  }
  std::size_t size() const { return size_; }
  bool full() const { return size_ * 4 >= keys_.size() * 3; }

 private:
  std::vector<u64> keys_;
  std::vector<V> vals_;
  std::size_t mask_ = 0;
  std::size_t size_ = 0;
};

/// Lossy map from position to the deepest search that failed there. Buckets
/// of four slots; a full bucket gives up its shallowest entry, so a long
/// search keeps remembering recent work instead of freezing when full.
class DepthCache {
 public:
  explicit DepthCache(std::size_t capacity) {
    std::size_t cap = 1024;
    while (cap < capacity) cap <<= 1;
    keys_.assign(cap, 0);
    depth_.assign(cap, 0);
    mask_ = cap - 1;
  }
  /// Stored depth, or -1.
  int find(u64 key) const {
    const std::size_t b = mix(key) & mask_ & ~std::size_t{3};
    for (std::size_t i = b; i < b + 4; ++i)
      if (keys_[i] == key) return depth_[i];
    return -1;
  }
  void store(u64 key, int depth) {
    const std::size_t b = mix(key) & mask_ & ~std::size_t{3};
    std::size_t victim = b;
    for (std::size_t i = b; i < b + 4; ++i) {
      if (keys_[i] == key) {
        depth_[i] = std::max<std::uint8_t>(depth_[i], static_cast<std::uint8_t>(depth));
        return;
      }
      if (keys_[i] == 0) {
        victim = i;
        break;
      }
      if (depth_[i] < depth_[victim]) victim = i;
    }
    if (keys_[victim] == 0) ++size_;
    keys_[victim] = key;
    depth_[victim] = static_cast<std::uint8_t>(depth);
  }
  std::size_t size() const { return size_; }

 private:
  std::vector<u64> keys_;
  std::vector<std::uint8_t> depth_;
  std::size_t mask_ = 0;
  std::size_t size_ = 0;
};

struct BudgetExceeded {};

inline void count_node(long long& nodes, const SearchConfig& cfg) {
  if (++nodes > cfg.node_budget) throw BudgetExceeded{};
  if (cfg.cancel && (nodes & 0xfff) == 0 && cfg.cancel->load(std::memory_order_relaxed)) throw BudgetExceeded{};
}

// Jump-level depth-first search to a single peg, remembering failed
// (canonical) positions.
class SingleSolver {
 public:
  SingleSolver(FastBoard& fb, int goal, const SearchConfig& cfg)
      : fb_(fb), goal_(goal), cfg_(cfg), failed_(cfg.transposition_capacity) {}

  bool run(u64 start) {
    path_.clear();
    return dfs(start, std::popcount(start));
  }
  const std::vector<int>& path() const { return path_; }  // jump ids, reversed
  SearchStats stats() const { return {nodes_, hits_, failed_.size()}; }

 private:
  bool dfs(u64 pos, int pegs) {
    if (pegs == 1) return goal_ < 0 || pos == bit(goal_);
    count_node(nodes_, cfg_);
    u64 key = cfg_.use_symmetry ? fb_.canonical(pos) : pos;
    if (failed_.find(key)) {
      ++hits_;
      return false;
    }
    for (int f = 0; f < fb_.size(); ++f) {
      if (!(pos >> f & 1)) continue;
      for (int id : fb_.jumps_from(f)) {
        const auto& j = fb_.jumps()[static_cast<std::size_t>(id)];
        if ((pos & j.from_over) != j.from_over || (pos & j.to)) continue;
        if (dfs(pos ^ j.all, pegs - 1)) {
          path_.push_back(id);
          return true;
        }
      }
    }
    if (auto* v = failed_.upsert(key)) *v = 1;
    return false;
  }

  FastBoard& fb_;
  int goal_;
  SearchConfig cfg_;
  FlatMap<std::uint8_t> failed_;
  std::vector<int> path_;
  long long nodes_ = 0;
  long long hits_ = 0;
};

inline u64 to_bits(const Position& p) {
  if (p.board().size() > 64) throw Error("search supports boards of at most 64 holes");
  return p.bits64();
}

inline bool class_compatible(const Position& start, std::optional<Hole> finish) {
  ClassBasis basis(start.board());
  if (finish) return same_class(basis, start, Position::single(start.board_ptr(), *finish));
  for (Hole h : start.board().holes())
    if (same_class(basis, start, Position::single(start.board_ptr(), h))) return true;
  return false;
}

}  // namespace detail

SearchOutcome solve_sweep_finish(std::optional<Hole> vacancy, const SweepFinish& finish, const SearchConfig& cfg = {});

/// Reduce `start` to a single peg (at goal.finish when set). "unsolvable" is
/// only reported after the search space is exhausted within budget.
inline SearchOutcome solve(const Position& start, const GoalSpec& goal, const SearchConfig& cfg = {}) {
  if (goal.sweep) {
    if (start.peg_count() != start.board().size() - 1)
      throw Error("sweep-constrained solving starts from a single vacancy");
    Hole vac{};
    for (int i = 0; i < start.board().size(); ++i)
      if (!start.test(i)) vac = start.board().hole(i);
    SweepFinish sf = *goal.sweep;
    auto out = solve_sweep_finish(vac, sf, cfg);
    if (goal.finish && out.solution) {
      auto sole = replay(*out.solution).sole_peg();
      if (!sole || !(*sole == *goal.finish)) throw Error("sweep suffix does not end at the requested finish");
    }
    return out;
  }
  SearchOutcome out;
  if (start.peg_count() == 0) return out;
  if (cfg.use_class_pruning && !detail::class_compatible(start, goal.finish)) return out;
  detail::FastBoard fb(start.board_ptr());
  const int goal_index = goal.finish ? start.board().require_index(*goal.finish) : -1;
  fb.select_symmetries(cfg.use_symmetry ? fb.stabilizer(goal_index) : std::vector<int>{0});
  detail::SingleSolver s(fb, goal_index, cfg);
  bool ok = false;
  try {
    ok = s.run(detail::to_bits(start));
  } catch (const detail::BudgetExceeded&) {
    out.status = Outcome::budget_exhausted;
    out.stats = s.stats();
    return out;
  }
  out.stats = s.stats();
  if (!ok) return out;
  std::vector<Jump> jumps;
  for (auto it = s.path().rbegin(); it != s.path().rend(); ++it)
    jumps.push_back(fb.to_jump(fb.jumps()[static_cast<std::size_t>(*it)]));
  Solution sol{start, group_jumps(jumps)};
  auto report = verify_solution(sol, goal.finish);
  if (!report.ok) throw Error("internal: solver produced an invalid solution: " + report.message);
  out.status = Outcome::solved;
  out.solution = std::move(sol);
  return out;
}

// ---------------------------------------------------------------------------
// Finish sets

struct FinishSet {
  Outcome status = Outcome::unsolvable;  // solved: complete and nonempty
  std::vector<Hole> cells;
  SearchStats stats;
  bool complete() const { return status != Outcome::budget_exhausted; }
};

namespace detail {

class FinishEnumerator {
 public:
  FinishEnumerator(const FastBoard& fb, const SearchConfig& cfg)
      : fb_(fb), cfg_(cfg), memo_(cfg.transposition_capacity) {}

  u64 finishes(u64 pos) {
    if (std::popcount(pos) == 1) return pos;
    if (const u64* m = memo_.find(pos)) {
      ++hits_;
      return *m;
    }
    count_node(nodes_, cfg_);
    u64 acc = 0;
    for (const auto& j : fb_.jumps())
      if ((pos & j.from_over) == j.from_over && !(pos & j.to)) acc |= finishes(pos ^ j.all);
    u64* slot = memo_.upsert(pos);
    if (!slot) throw BudgetExceeded{};
    *slot = acc;
    return acc;
  }
  SearchStats stats() const { return {nodes_, hits_, memo_.size()}; }

 private:
  const FastBoard& fb_;
  SearchConfig cfg_;
  FlatMap<u64> memo_;
  long long nodes_ = 0;
  long long hits_ = 0;
};

}  // namespace detail

/// Every hole where a lone surviving peg can finish, by exhaustive search.
inline FinishSet reachable_finishes(const Position& start, const SearchConfig& cfg = {}) {
  FinishSet out;
  if (start.peg_count() == 0) return out;
  detail::FastBoard fb(start.board_ptr());
  detail::FinishEnumerator e(fb, cfg);
  detail::u64 mask = 0;
  try {
    mask = e.finishes(detail::to_bits(start));
  } catch (const detail::BudgetExceeded&) {
    out.status = Outcome::budget_exhausted;
    out.stats = e.stats();
    return out;
  }
  out.stats = e.stats();
  for (int i = 0; i < fb.size(); ++i)
    if (mask >> i & 1) out.cells.push_back(start.board().hole(i));
  out.status = out.cells.empty() ? Outcome::unsolvable : Outcome::solved;
  return out;
}

// ---------------------------------------------------------------------------
// Sweep-constrained finishes

/// Position just before the sweep: the pre-sweep pegs plus whatever the
/// suffix needs. Throws if the suffix does not fit around the sweep.
inline Position sweep_finish_setup(const SweepFinish& sf) {
  const BoardPtr& board = sf.sweep.board;
  // walk the suffix backwards from its lone final peg
  Position after(board);
  if (sf.suffix.empty()) {
    after = Position::single(board, sf.sweep.end());
  } else {
    after = Position::single(board, sf.suffix.back().end());
    for (auto it = sf.suffix.rbegin(); it != sf.suffix.rend(); ++it) after = undo_move(after, *it);
  }
  if (!after.has_peg(sf.sweep.end())) throw Error("suffix does not start from the sweep's end");
  Position before = sf.sweep.pre_sweep_position();
  for (int i = 0; i < board->size(); ++i) {
    if (!after.test(i) || board->hole(i) == sf.sweep.end()) continue;
    if (before.test(i)) throw Error("suffix peg " + hole_name(board->hole(i)) + " collides with the sweep");
    before.set(i);
  }
  if (!(apply_move(before, sf.sweep.move()) == after)) throw Error("sweep does not replay around the suffix pegs");
  return before;
}

/// Solve from full-minus-vacancy so that the final moves are the sweep and
/// its suffix: search forward from the complement of the pre-sweep position
/// to a lone peg at the vacancy, reverse, then append sweep and suffix. With
/// no vacancy, any starting vacancy is accepted.
inline SearchOutcome solve_sweep_finish(std::optional<Hole> vacancy, const SweepFinish& sf, const SearchConfig& cfg) {
  Position before = sweep_finish_setup(sf);
  auto back = solve(complement(before), GoalSpec{vacancy, std::nullopt}, cfg);
  SearchOutcome out;
  out.stats = back.stats;
  out.status = back.status;
  if (back.status != Outcome::solved) return out;
  Solution forward = reverse_solution(*back.solution);
  if (!(replay(forward) == before)) throw Error("internal: reversed solution misses the pre-sweep position");
  std::vector<Move> moves = forward.moves;
  moves.push_back(sf.sweep.move());
  for (const Move& m : sf.suffix) moves.push_back(m);
  Solution sol{forward.start, regroup(moves)};
  auto report = verify_solution(sol);
  if (!report.ok) throw Error("internal: sweep finish failed replay: " + report.message);
  out.solution = std::move(sol);
  return out;
}

// ---------------------------------------------------------------------------
// Fewest moves

/// Hole sets R such that every jump over a hole of R from outside R lands in
/// R. While R is full its pegs can only be disturbed by a move starting in R,
/// so disjoint full regions each cost a move. Candidates are single holes,
/// adjacent pairs and hexagons (a hole with its neighbours, cropped to the
/// board); supersets of other regions are dropped.
inline std::vector<std::vector<int>> merson_regions(const Board& board) {
  std::vector<std::array<int, 3>> jumps;
  for (int f = 0; f < board.size(); ++f)
    for (int d = 0; d < 6; ++d) {
      int o = board.neighbor(f, dir_from_index(d));
      if (o < 0) continue;
      int t = board.neighbor(o, dir_from_index(d));
      if (t >= 0) jumps.push_back({f, o, t});
    }
  auto is_region = [&](const std::vector<int>& r) {
    auto in = [&](int h) { return std::find(r.begin(), r.end(), h) != r.end(); };
    for (auto [f, o, t] : jumps)
      if (in(o) && !in(f) && !in(t)) return false;
    return true;
  };
  std::vector<std::vector<int>> cand;
  for (int h = 0; h < board.size(); ++h) {
    cand.push_back({h});
    for (int d = 0; d < 6; ++d)
      if (int w = board.neighbor(h, dir_from_index(d)); w > h) cand.push_back({h, w});
  }
  for (int h = 0; h < board.size(); ++h) {
    std::vector<int> hex{h};
    for (int d = 0; d < 6; ++d)
      if (int w = board.neighbor(h, dir_from_index(d)); w >= 0) hex.push_back(w);
    if (hex.size() > 2) {
      std::sort(hex.begin(), hex.end());
      cand.push_back(hex);
    }
  }
  std::vector<std::vector<int>> found;
  for (auto& r : cand)
    if (is_region(r)) found.push_back(r);
  std::stable_sort(found.begin(), found.end(), [](const auto& x, const auto& y) { return x.size() < y.size(); });
  std::vector<std::vector<int>> out;
  for (auto& r : found) {
    bool superset = false;
    for (auto& q : out)
      superset = superset || std::includes(r.begin(), r.end(), q.begin(), q.end());
    if (!superset) out.push_back(r);
  }
  return out;
}

struct MinMovesResult {
  Outcome status = Outcome::unsolvable;
  int moves = 0;             // minimal count when solved
  int proven_lower_bound = 0;  // no solution with fewer moves exists
  std::optional<Solution> solution;
  SearchStats stats;
};

namespace detail {

// Iterative deepening on move count, where a move is any chain by one peg.
// The table keeps, per canonical position, the largest depth already shown
// insufficient.
class MoveSearch {
 public:
  /// `target` is the final position, or 0 for a lone peg anywhere.
  MoveSearch(FastBoard& fb, u64 target, const SearchConfig& cfg)
      : fb_(fb), target_(target), target_pegs_(target ? std::popcount(target) : 1), cfg_(cfg),
        table_(cfg.transposition_capacity), packing_(std::size_t{1} << 16) {
    for (const auto& r : merson_regions(*fb.board())) {
      if (regions_.size() == 64) break;
      u64 m = 0;
      for (int h : r) m |= bit(h);
      // regions still full at the end need no move
      if (target_ && (m & target_) == m) continue;
      regions_.push_back(m);
      singleton_.push_back(r.size() == 1);
    }
    for (u64 r : regions_) {
      u64 c = 0;
      for (std::size_t k = 0; k < regions_.size(); ++k)
        if (regions_[k] & r) c |= bit(static_cast<int>(k));
      conflicts_.push_back(c);
    }
  }

  int lower_bound(u64 pos) {
    int n = std::popcount(pos);
    if (n <= target_pegs_) return (n == target_pegs_ && (!target_ || pos == target_)) ? 0 : kInf;
    u64 full = 0;
    bool single = false;
    for (std::size_t k = 0; k < regions_.size(); ++k)
      if ((pos & regions_[k]) == regions_[k]) {
        full |= bit(static_cast<int>(k));
        single = single || singleton_[k];
      }
    int lb = pack(full);
    // with a free finish one full singleton may hold the survivor
    if (!target_ && single) --lb;
    return std::max(lb, 1);
  }

  /// Solution within `depth` moves, if any.
  bool run(u64 start, int depth) {
    moves_.clear();
    return dfs(start, depth);
  }
  /// Moves found by the last successful run, first move first.
  std::vector<std::vector<int>> moves() const { return {moves_.rbegin(), moves_.rend()}; }
  SearchStats stats() const { return {nodes_, hits_, table_.size()}; }

  static constexpr int kInf = 1 << 20;

 private:
  /// Largest number of pairwise disjoint regions in `full`.
  int pack(u64 full) {
    if (!full) return 0;
    if (const auto* v = packing_.find(full)) return *v;
    int k = std::countr_zero(full);
    int take = 1 + pack(full & ~conflicts_[static_cast<std::size_t>(k)]);
    int skip = pack(full & ~bit(k));
    int best = std::max(take, skip);
    if (auto* slot = packing_.upsert(full)) *slot = static_cast<std::uint8_t>(best);
    return best;
  }

  struct Child {
    u64 pos;
    std::int8_t start, lb, hops;
  };

  void chains(u64 pos, int from, int at, int hops, std::size_t first, std::vector<Child>& out) {
    for (int id : fb_.jumps_from(at)) {
      const auto& j = fb_.jumps()[static_cast<std::size_t>(id)];
      if ((pos & j.from_over) != j.from_over || (pos & j.to)) continue;
      u64 next = pos ^ j.all;
      bool dup = false;
      for (std::size_t k = first; k < out.size() && !dup; ++k) dup = out[k].pos == next;
      if (!dup)
        out.push_back({next, static_cast<std::int8_t>(from), static_cast<std::int8_t>(std::min(lower_bound(next), 100)),
                       static_cast<std::int8_t>(hops + 1)});
      chains(next, from, j.to_index, hops + 1, first, out);
    }
  }

  /// Holes visited by a chain from `at` that turns `pos` into `target`.
  bool chain_path(u64 pos, int at, u64 target, std::vector<int>& path) const {
    if (pos == target) return true;
    for (int id : fb_.jumps_from(at)) {
      const auto& j = fb_.jumps()[static_cast<std::size_t>(id)];
      if ((pos & j.from_over) != j.from_over || (pos & j.to)) continue;
      path.push_back(j.to_index);
      if (chain_path(pos ^ j.all, j.to_index, target, path)) return true;
      path.pop_back();
    }
    return false;
  }

  bool dfs(u64 pos, int depth) {
    int lb = lower_bound(pos);
    if (lb == 0) return true;
    if (lb > depth) return false;
    count_node(nodes_, cfg_);
    u64 key = cfg_.use_symmetry ? fb_.canonical(pos) : pos;
    if (table_.find(key) >= depth) {
      ++hits_;
      return false;
    }
    if (buffers_.size() <= static_cast<std::size_t>(depth)) buffers_.resize(static_cast<std::size_t>(depth) + 1);
    std::vector<Child>& kids = buffers_[static_cast<std::size_t>(depth)];
    kids.clear();
    for (int f = 0; f < fb_.size(); ++f)
      if (pos >> f & 1) chains(pos, f, f, 0, kids.size(), kids);
    std::stable_sort(kids.begin(), kids.end(), [](const Child& a, const Child& b) {
      if (a.lb != b.lb) return a.lb < b.lb;
      return a.hops > b.hops;
    });
    for (std::size_t k = 0; k < kids.size(); ++k) {
      const Child c = kids[k];
      if (c.lb > depth - 1) break;
      if (dfs(c.pos, depth - 1)) {
        std::vector<int> path{c.start};
        chain_path(pos, c.start, c.pos, path);
        moves_.push_back(std::move(path));
        return true;
      }
    }
    table_.store(key, depth);
    return false;
  }

  FastBoard& fb_;
  u64 target_;
  int target_pegs_;
  SearchConfig cfg_;
  DepthCache table_;
  std::vector<u64> regions_;
  std::vector<bool> singleton_;
  std::vector<u64> conflicts_;
  FlatMap<std::uint8_t> packing_;
  std::vector<std::vector<int>> moves_;
  std::vector<std::vector<Child>> buffers_;
  long long nodes_ = 0;
  long long hits_ = 0;
};

}  // namespace detail

namespace detail {

inline MinMovesResult min_moves_to(const Position& start, u64 target, const SearchConfig& cfg,
                                   std::optional<int> max_moves) {
  MinMovesResult out;
  FastBoard fb(start.board_ptr());
  fb.select_symmetries(cfg.use_symmetry ? fb.set_stabilizer(target) : std::vector<int>{0});
  MoveSearch search(fb, target, cfg);
  const u64 bits = to_bits(start);
  int depth = search.lower_bound(bits);
  if (depth >= MoveSearch::kInf) return out;
  const int pegs_left = target ? std::popcount(target) : 1;
  const int cap = max_moves.value_or(start.peg_count() - pegs_left);
  out.proven_lower_bound = depth;
  for (; depth <= cap; ++depth) {
    bool ok = false;
    try {
      ok = search.run(bits, depth);
    } catch (const BudgetExceeded&) {
      out.status = Outcome::budget_exhausted;
      out.stats = search.stats();
      return out;
    }
    if (ok) {
      std::vector<Move> moves;
      for (const auto& p : search.moves()) {
        std::vector<Hole> holes;
        for (int h : p) holes.push_back(start.board().hole(h));
        moves.emplace_back(std::move(holes));
      }
      Solution sol{start, regroup(moves)};
      Position end = replay(sol);
      if (target ? to_bits(end) != target : end.peg_count() != 1)
        throw Error("internal: move search produced an invalid solution");
      out.status = Outcome::solved;
      out.moves = sol.move_count();
      out.solution = std::move(sol);
      out.proven_lower_bound = out.moves;
      out.stats = search.stats();
      return out;
    }
    out.proven_lower_bound = depth + 1;
  }
  out.stats = search.stats();
  out.status = max_moves && cap < start.peg_count() - pegs_left ? Outcome::budget_exhausted : Outcome::unsolvable;
  return out;
}

}  // namespace detail

/// Fewest moves from `start` to a lone peg at `finish` (any hole when
/// nullopt), by iterative deepening from the region lower bound. With
/// `max_moves` the search stops after that depth.
inline MinMovesResult min_moves(const Position& start, std::optional<Hole> finish, const SearchConfig& cfg = {},
                                std::optional<int> max_moves = std::nullopt) {
  if (cfg.use_class_pruning && !detail::class_compatible(start, finish)) return {};
  const detail::u64 target = finish ? detail::bit(start.board().require_index(*finish)) : 0;
  return detail::min_moves_to(start, target, cfg, max_moves);
}

/// Fewest moves from `start` to exactly the position `target`.
inline MinMovesResult min_moves(const Position& start, const Position& target, const SearchConfig& cfg = {},
                                std::optional<int> max_moves = std::nullopt) {
  if (&start.board() != &target.board()) throw Error("positions are on different boards");
  if (target.peg_count() == 0) throw Error("target position has no pegs");
  if (cfg.use_class_pruning && !same_class(start, target)) return {};
  return detail::min_moves_to(start, detail::to_bits(target), cfg, max_moves);
}

// ---------------------------------------------------------------------------
// Census

struct CensusCount {
  std::string convention;
  std::string description;
  long long count = 0;
  bool complete = true;
};

struct CensusReport {
  std::vector<CensusCount> counts;
  const CensusCount* find(std::string_view convention) const {
    for (const auto& c : counts)
      if (c.convention == convention) return &c;
    return nullptr;
  }
};

/// Problem counts up to board symmetry. A problem is an ordered pair
/// (vacancy, finish) acted on by the symmetry group. With
/// `include_solvability` every class-feasible orbit is also solved.
inline CensusReport problem_census(BoardPtr board, const SearchConfig& cfg = {}, bool include_solvability = true) {
  const auto group = symmetries(*board);
  const int n = board->size();
  auto canonical_pair = [&](int v, int f) {
    std::pair<int, int> best{n, n};
    for (const auto& g : group)
      best = std::min(best, {g.perm[static_cast<std::size_t>(v)], g.perm[static_cast<std::size_t>(f)]});
    return best;
  };
  std::set<std::pair<int, int>> all, feasible;
  std::set<int> complement;
  ClassBasis basis(*board);
  for (int v = 0; v < n; ++v)
    for (int f = 0; f < n; ++f) {
      auto key = canonical_pair(v, f);
      all.insert(key);
      if (v == f) complement.insert(key.first);
      Position start = Position::vacancy(board, board->hole(v));
      if (same_class(basis, start, Position::single(board, board->hole(f)))) feasible.insert(key);
    }
  CensusReport out;
  out.counts.push_back({"complement-orbits", "vacancy and finish at the same hole, up to symmetry",
                        static_cast<long long>(complement.size()), true});
  out.counts.push_back({"ordered-problem-orbits", "all (vacancy, finish) pairs, up to symmetry",
                        static_cast<long long>(all.size()), true});
  out.counts.push_back({"class-feasible-orbits", "(vacancy, finish) pairs in the same position class, up to symmetry",
                        static_cast<long long>(feasible.size()), true});
  if (include_solvability) {
    CensusCount solvable{"solvable-orbits", "class-feasible orbits with a solution found by search", 0, true};
    for (auto [v, f] : feasible) {
      auto r = solve(Position::vacancy(board, board->hole(v)), GoalSpec{board->hole(f), std::nullopt}, cfg);
      if (r.status == Outcome::solved) ++solvable.count;
      if (r.status == Outcome::budget_exhausted) solvable.complete = false;
    }
    out.counts.push_back(solvable);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Which starting vacancies admit a given maximal sweep

struct SweepConfiguration {
  SweepPattern sweep;
  std::vector<Hole> extra;  // pegs besides the sweep's, left for the suffix
  std::vector<Hole> vacancies;
};

struct SweepVacancyReport {
  std::vector<SweepConfiguration> configurations;  // only those with a vacancy
  std::vector<Hole> vacancies;                     // union over configurations
  long long configurations_tried = 0;
  bool complete = true;
};

/// For each directed maximal sweep (one witness per endpoint pair) and each
/// set X of holes the sweep does not touch: if the sweep's end plus X can be
/// reduced to one peg, every finish reachable from the complement of the
/// pre-sweep position plus X is a starting vacancy from which the sweep can
/// occur. Boards of at most 64 holes, at most 20 untouched holes.
inline SweepVacancyReport sweep_finish_vacancies(BoardPtr board, const SearchConfig& cfg = {}) {
  SweepVacancyReport out;
  auto census = enumerate_max_sweep_endpoints(board);
  out.complete = census.complete;
  detail::FastBoard fb(board);
  detail::FinishEnumerator suffix(fb, cfg), prefix(fb, cfg);
  detail::u64 covered = 0;
  for (const auto& ends : census.all) {
    auto r = max_sweep_length(board, ends.start, ends.end);
    if (!r.witness) continue;
    const SweepPattern& sweep = *r.witness;
    std::vector<char> touched(static_cast<std::size_t>(board->size()), 0);
    for (Hole h : sweep.path) touched[static_cast<std::size_t>(board->require_index(h))] = 1;
    for (Hole h : sweep.swept()) touched[static_cast<std::size_t>(board->require_index(h))] = 1;
    std::vector<int> free;
    for (int k = 0; k < board->size(); ++k)
      if (!touched[static_cast<std::size_t>(k)]) free.push_back(k);
    if (free.size() > 20) throw Error("too many holes outside the sweep to enumerate");
    const detail::u64 pre = detail::to_bits(sweep.pre_sweep_position());
    const detail::u64 end_bit = detail::bit(board->require_index(sweep.end()));
    for (std::uint32_t mask = 0; mask < (1u << free.size()); ++mask) {
      detail::u64 x = 0;
      for (std::size_t k = 0; k < free.size(); ++k)
        if (mask >> k & 1) x |= detail::bit(free[k]);
      ++out.configurations_tried;
      detail::u64 fin = 0;
      try {
        if (!suffix.finishes(end_bit | x)) continue;
        fin = prefix.finishes(fb.full() & ~(pre | x));
      } catch (const detail::BudgetExceeded&) {
        out.complete = false;
        continue;
      }
      if (!fin) continue;
      SweepConfiguration c{sweep, {}, {}};
      for (int k : free)
        if (x >> k & 1) c.extra.push_back(board->hole(k));
      for (int k = 0; k < board->size(); ++k)
        if (fin >> k & 1) c.vacancies.push_back(board->hole(k));
      covered |= fin;
      out.configurations.push_back(std::move(c));
    }
  }
  for (int k = 0; k < board->size(); ++k)
    if (covered >> k & 1) out.vacancies.push_back(board->hole(k));
  return out;
}

// ---------------------------------------------------------------------------
// Sweep problems: from a single vacancy, finish with a maximal sweep k moves
// from the end

struct SweepProblemResult {
  SearchOutcome outcome;
  std::optional<SweepFinish> finish;  // the sweep and suffix that worked
  long long configurations_tried = 0;
};

/// Try every maximal sweep of `sweep_length` (one witness per endpoint pair)
/// and, for k > 1, every suffix of exactly k-1 moves built from pegs the
/// sweep leaves untouched, smallest peg sets first. A given `suffix` is used
/// as-is instead. `finish` defaults to any hole.
inline SweepProblemResult solve_sweep_problem(const BoardPtr& board, Hole vacancy, std::optional<Hole> finish,
                                              int sweep_length, int k, const SearchConfig& cfg = {},
                                              const std::optional<std::vector<Move>>& suffix = std::nullopt) {
  if (k < 1) throw Error("k counts moves from the end and starts at 1");
  if (suffix && static_cast<int>(suffix->size()) != k - 1) throw Error("suffix must have k-1 moves");
  SweepProblemResult out;
  auto census = enumerate_max_sweep_endpoints(board);
  if (!census.complete) {
    out.outcome.status = Outcome::budget_exhausted;
    return out;
  }
  if (census.length != sweep_length)
    throw Error("sweep length " + std::to_string(sweep_length) + " is not the maximal length " +
                std::to_string(census.length) + " on this board");
  bool exhausted = false;
  auto attempt = [&](const SweepFinish& sf) -> bool {
    ++out.configurations_tried;
    try {
      sweep_finish_setup(sf);
    } catch (const Error&) {
      return false;
    }
    auto r = solve_sweep_finish(vacancy, sf, cfg);
    if (r.status == Outcome::budget_exhausted) exhausted = true;
    if (r.status != Outcome::solved) return false;
    // the sweep must survive regrouping as move k from the end
    const auto& mv = r.solution->moves;
    if (static_cast<int>(mv.size()) < k || mv[mv.size() - static_cast<std::size_t>(k)] != sf.sweep.move()) return false;
    auto end = replay(*r.solution).sole_peg();
    if (finish && !(end && *end == *finish)) return false;
    out.outcome = std::move(r);
    out.finish = sf;
    return true;
  };
  SearchConfig small = cfg;
  small.transposition_capacity = std::size_t{1} << 12;
  for (const auto& ends : census.all) {
    auto w = max_sweep_length(board, ends.start, ends.end);
    if (!w.witness) continue;
    const SweepPattern& sweep = *w.witness;
    if (suffix) {
      if (attempt(SweepFinish{sweep, *suffix})) return out;
      continue;
    }
    if (k == 1) {
      if (finish && !(sweep.end() == *finish)) continue;
      if (attempt(SweepFinish{sweep, {}})) return out;
      continue;
    }
    std::vector<char> touched(static_cast<std::size_t>(board->size()), 0);
    for (Hole h : sweep.path) touched[static_cast<std::size_t>(board->require_index(h))] = 1;
    for (Hole h : sweep.swept()) touched[static_cast<std::size_t>(board->require_index(h))] = 1;
    std::vector<Hole> free;
    for (int i = 0; i < board->size(); ++i)
      if (!touched[static_cast<std::size_t>(i)]) free.push_back(board->hole(i));
    if (free.size() > 20) throw Error("too many holes outside the sweep to enumerate");
    const std::uint32_t limit = 1u << free.size();
    for (int size = k - 1; size <= static_cast<int>(free.size()); ++size)
      for (std::uint32_t mask = 0; mask < limit; ++mask) {
        if (std::popcount(mask) != size) continue;
        Position after = Position::single(board, sweep.end());
        for (std::size_t b = 0; b < free.size(); ++b)
          if (mask >> b & 1) after.set(board->require_index(free[b]));
        auto m = min_moves(after, finish, small, k - 1);
        if (m.status != Outcome::solved || m.moves != k - 1) continue;
        if (m.solution->moves.front().start() == sweep.end()) continue;
        if (attempt(SweepFinish{sweep, m.solution->moves})) return out;
      }
  }
  out.outcome.status = exhausted ? Outcome::budget_exhausted : Outcome::unsolvable;
  return out;
}

}  // namespace pegsol
