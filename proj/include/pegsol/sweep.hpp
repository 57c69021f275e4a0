#pragma once

// Sweeps, sweep graphs and super-sweep feasibility.
//
// A sweeping peg always lands on holes of one index-4 sublattice (both
// coordinates fixed mod 2) and captures pegs off it. Every off-sublattice
// hole is the midpoint of exactly one pair of sublattice holes, so a sweep is
// a trail (no repeated edge) in the graph whose vertices are the sublattice
// holes and whose edges are those pairs with both ends on the board. A
// super-sweep is an Euler trail of that graph that touches every hole.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "position.hpp"

namespace pegsol {

struct SubLattice {
  int col_parity = 1;
  int row_parity = 1;
  friend bool operator==(const SubLattice&, const SubLattice&) = default;
};

inline int parity(int x) { return ((x % 2) + 2) % 2; }
inline SubLattice sublattice_of(Hole h) { return {parity(h.col), parity(h.row)}; }

/// Axis whose midpoint pairs cover `h` relative to sublattice `s`, or nullopt
/// when `h` is itself in `s`.
inline std::optional<Dir> covering_axis(Hole h, SubLattice s) {
  const int dc = parity(h.col) ^ s.col_parity;
  const int dr = parity(h.row) ^ s.row_parity;
  if (dc == 0 && dr == 0) return std::nullopt;
  if (dr == 0) return Dir::E;
  if (dc == 0) return Dir::N;
  return Dir::NE;
}

struct SweepEdge {
  int a = -1;    // vertex id
  int b = -1;    // vertex id
  int mid = -1;  // hole index of the captured peg
};

/// Edges are ordered by midpoint hole index; vertex ids follow hole order.
struct SweepGraph {
  BoardPtr board;
  SubLattice cls;
  std::vector<int> vertex_hole;          // vertex id -> hole index
  std::vector<int> vertex_of;            // hole index -> vertex id or -1
  std::vector<SweepEdge> edges;
  std::vector<std::vector<int>> incident;  // vertex id -> edge ids, sorted by (other vertex, edge)
  std::vector<int> uncovered;            // off-sublattice holes that are no midpoint

  int vertex_count() const { return static_cast<int>(vertex_hole.size()); }
  int edge_count() const { return static_cast<int>(edges.size()); }
  int degree(int v) const { return static_cast<int>(incident[static_cast<std::size_t>(v)].size()); }
  int other(int edge, int v) const {
    const SweepEdge& e = edges[static_cast<std::size_t>(edge)];
    return e.a == v ? e.b : e.a;
  }
  Hole hole_of_vertex(int v) const { return board->hole(vertex_hole[static_cast<std::size_t>(v)]); }
  std::vector<int> odd_vertices() const {
    std::vector<int> out;
    for (int v = 0; v < vertex_count(); ++v)
      if (degree(v) % 2) out.push_back(v);
    return out;
  }
};

/// Graph of all candidate jumps landing on sublattice `cls`.
inline SweepGraph class_sweep_graph(BoardPtr board, SubLattice cls) {
  SweepGraph g;
  g.board = board;
  g.cls = cls;
  const Board& b = *board;
  g.vertex_of.assign(static_cast<std::size_t>(b.size()), -1);
  for (int i = 0; i < b.size(); ++i)
    if (sublattice_of(b.hole(i)) == cls) {
      g.vertex_of[static_cast<std::size_t>(i)] = g.vertex_count();
      g.vertex_hole.push_back(i);
    }
  g.incident.resize(g.vertex_hole.size());
  for (int i = 0; i < b.size(); ++i) {
    auto axis = covering_axis(b.hole(i), cls);
    if (!axis) continue;
    int lo = b.neighbor(i, opposite(*axis));
    int hi = b.neighbor(i, *axis);
    if (lo < 0 || hi < 0) {
      g.uncovered.push_back(i);
      continue;
    }
    int id = g.edge_count();
    g.edges.push_back({g.vertex_of[static_cast<std::size_t>(lo)], g.vertex_of[static_cast<std::size_t>(hi)], i});
    g.incident[static_cast<std::size_t>(g.edges.back().a)].push_back(id);
    g.incident[static_cast<std::size_t>(g.edges.back().b)].push_back(id);
  }
  for (int v = 0; v < g.vertex_count(); ++v) {
    auto& inc = g.incident[static_cast<std::size_t>(v)];
    std::sort(inc.begin(), inc.end(), [&](int x, int y) {
      return std::pair{g.other(x, v), x} < std::pair{g.other(y, v), y};
    });
  }
  return g;
}

enum class SweepReason { none, corner_parity_mismatch, uncovered_midpoint, disconnected, odd_degree_count };

inline const char* to_string(SweepReason r) {
  switch (r) {
    case SweepReason::none: return "none";
    case SweepReason::corner_parity_mismatch: return "corner-parity-mismatch";
    case SweepReason::uncovered_midpoint: return "uncovered-midpoint";
    case SweepReason::disconnected: return "disconnected";
    case SweepReason::odd_degree_count: return "odd-degree-count";
  }
  return "?";
}

struct SweepGraphBuild {
  std::optional<SweepGraph> graph;
  SweepReason failure = SweepReason::none;
  explicit operator bool() const { return graph.has_value(); }
};

/// Super-sweep graph on the sublattice of the board corners. Fails only when
/// the corners are spread over several sublattices (some side has an even
/// number of holes).
inline SweepGraphBuild build_sweep_graph(BoardPtr board) {
  auto cs = corners(*board);
  SubLattice cls = cs.empty() ? sublattice_of(board->hole(0)) : sublattice_of(cs.front().hole);
  for (const auto& c : cs)
    if (!(sublattice_of(c.hole) == cls)) return {std::nullopt, SweepReason::corner_parity_mismatch};
  return {class_sweep_graph(std::move(board), cls), SweepReason::none};
}

struct SuperSweepVerdict {
  bool feasible = false;
  SweepReason reason = SweepReason::none;
  int odd_count = 0;
  std::vector<Hole> odd_vertices;
  bool closed = false;  // Euler circuit rather than open path
  std::optional<std::pair<Hole, Hole>> endpoints;
};

inline SuperSweepVerdict euler_verdict(const SweepGraph& g) {
  SuperSweepVerdict v;
  for (int x : g.odd_vertices()) v.odd_vertices.push_back(g.hole_of_vertex(x));
  v.odd_count = static_cast<int>(v.odd_vertices.size());
  if (!g.uncovered.empty()) {
    v.reason = SweepReason::uncovered_midpoint;
    return v;
  }
  // every vertex must be touched and all edges must form one component
  if (g.edge_count() > 0) {
    std::vector<char> seen(static_cast<std::size_t>(g.vertex_count()), 0);
    std::vector<int> stack{g.edges.front().a};
    seen[static_cast<std::size_t>(stack.back())] = 1;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int e : g.incident[static_cast<std::size_t>(u)]) {
        int w = g.other(e, u);
        if (!seen[static_cast<std::size_t>(w)]) {
          seen[static_cast<std::size_t>(w)] = 1;
          stack.push_back(w);
        }
      }
    }
    for (char s : seen)
      if (!s) {
        v.reason = SweepReason::disconnected;
        return v;
      }
  } else if (g.vertex_count() > 1 || g.board->size() > 1) {
    v.reason = SweepReason::disconnected;
    return v;
  }
  if (v.odd_count != 0 && v.odd_count != 2) {
    v.reason = SweepReason::odd_degree_count;
    return v;
  }
  v.feasible = true;
  v.closed = v.odd_count == 0;
  if (v.closed) {
    int x = 0;
    while (x + 1 < g.vertex_count() && g.degree(x) == 0) ++x;
    v.endpoints = {g.hole_of_vertex(x), g.hole_of_vertex(x)};
  } else {
    v.endpoints = {v.odd_vertices[0], v.odd_vertices[1]};
  }
  return v;
}

inline SuperSweepVerdict euler_verdict(BoardPtr board) {
  auto built = build_sweep_graph(std::move(board));
  if (!built) {
    SuperSweepVerdict v;
    v.reason = built.failure;
    return v;
  }
  return euler_verdict(*built.graph);
}

// ---------------------------------------------------------------------------
// Sweep patterns

/// A single move together with the pegs it captures. The pre-sweep position
/// is the mover plus every captured peg.
struct SweepPattern {
  BoardPtr board;
  std::vector<Hole> path;  // mover's holes, path.front() is the start

  Hole start() const { return path.front(); }
  Hole end() const { return path.back(); }
  int length() const { return static_cast<int>(path.size()) - 1; }
  std::vector<Hole> swept() const {
    std::vector<Hole> out;
    for (std::size_t i = 1; i < path.size(); ++i) out.push_back(midpoint(path[i - 1], path[i]));
    return out;
  }
  Move move() const { return Move(path); }
  Position pre_sweep_position() const {
    Position p = Position::single(board, start());
    for (Hole h : swept()) p.set(board->require_index(h));
    return p;
  }
  /// Every hole is captured or visited by the mover.
  bool is_super_sweep() const {
    std::vector<char> touched(static_cast<std::size_t>(board->size()), 0);
    for (Hole h : path) touched[static_cast<std::size_t>(board->require_index(h))] = 1;
    for (Hole h : swept()) touched[static_cast<std::size_t>(board->require_index(h))] = 1;
    return std::all_of(touched.begin(), touched.end(), [](char c) { return c != 0; });
  }
  /// Captured holes distinct and the move replays on its pre-sweep position.
  bool is_valid() const {
    if (path.empty()) return false;
    if (length() == 0) return board->contains(start());
    auto sw = swept();
    std::set<Hole> uniq(sw.begin(), sw.end());
    if (static_cast<int>(uniq.size()) != length()) return false;
    try {
      for (Hole h : sw)
        if (!board->contains(h)) return false;
      Position p = apply_move(pre_sweep_position(), move());
      return p.peg_count() == 1;
    } catch (const Error&) {
      return false;
    }
  }
  std::string to_string() const {
    if (length() == 0) return hole_name(start());
    return move().to_string();
  }
};

/// Euler trail from `start` over every edge of `g` (Hierholzer, taking the
/// lowest unused incident edge first). Requires an Euler trail from `start`.
inline std::vector<int> euler_trail(const SweepGraph& g, int start) {
  std::vector<char> used(static_cast<std::size_t>(g.edge_count()), 0);
  std::vector<std::size_t> next(static_cast<std::size_t>(g.vertex_count()), 0);
  std::vector<int> stack{start}, out;
  while (!stack.empty()) {
    int u = stack.back();
    const auto& inc = g.incident[static_cast<std::size_t>(u)];
    auto& k = next[static_cast<std::size_t>(u)];
    while (k < inc.size() && used[static_cast<std::size_t>(inc[k])]) ++k;
    if (k == inc.size()) {
      out.push_back(u);
      stack.pop_back();
    } else {
      int e = inc[k];
      used[static_cast<std::size_t>(e)] = 1;
      stack.push_back(g.other(e, u));
    }
  }
  std::reverse(out.begin(), out.end());
  if (static_cast<int>(out.size()) != g.edge_count() + 1) throw Error("sweep graph has no Euler trail from the start");
  return out;
}

inline SweepPattern trail_pattern(const SweepGraph& g, const std::vector<int>& vertices) {
  SweepPattern p{g.board, {}};
  for (int v : vertices) p.path.push_back(g.hole_of_vertex(v));
  return p;
}

/// Sweep over every edge of `g` starting at hole `start`.
inline SweepPattern euler_sweep(const SweepGraph& g, Hole start) {
  int s = g.vertex_of[static_cast<std::size_t>(g.board->require_index(start))];
  if (s < 0) throw Error("sweep start " + hole_name(start) + " is not on the sweep sublattice");
  return trail_pattern(g, euler_trail(g, s));
}

inline SweepPattern construct_super_sweep(BoardPtr board) {
  auto built = build_sweep_graph(board);
  if (!built) throw Error(std::string("no super-sweep: ") + to_string(built.failure));
  auto verdict = euler_verdict(*built.graph);
  if (!verdict.feasible) throw Error(std::string("no super-sweep: ") + to_string(verdict.reason));
  return euler_sweep(*built.graph, verdict.endpoints->first);
}

/// A super-sweep position is never reachable: its complement has no jump.
inline bool super_sweep_unreachable(const SweepPattern& pattern) {
  if (!pattern.is_super_sweep() || !pattern.is_valid())
    throw std::domain_error("not a super-sweep pattern: " + pattern.to_string());
  return legal_jumps(complement(pattern.pre_sweep_position())).empty();
}

/// (3n+1)(n-1)/4, the super-sweep length on Rhombus(n) for odd n.
inline long long rhombic_matchstick_length(long long n) {
  if (n < 3 || n % 2 == 0) throw Error("rhombic matchstick length needs odd n >= 3");
  return (3 * n + 1) * (n - 1) / 4;
}

/// (9i-1)(3i-1), the final sweep of the constructed Rhombus(6i) solution.
inline long long constructed_sweep_length(long long i) {
  if (i < 1) throw Error("scale must be >= 1");
  return (9 * i - 1) * (3 * i - 1);
}

// ---------------------------------------------------------------------------
// Longest sweeps

enum class SearchStatus { found, none, budget_exhausted };

inline const char* to_string(SearchStatus s) {
  switch (s) {
    case SearchStatus::found: return "found";
    case SearchStatus::none: return "none";
    case SearchStatus::budget_exhausted: return "budget_exhausted";
  }
  return "?";
}

struct MaxSweepResult {
  SearchStatus status = SearchStatus::none;
  int length = 0;
  std::optional<SweepPattern> witness;
  long long nodes = 0;
};

namespace detail {

// Longest-trail search on one sweep graph. The bound for a partial trail at
// u counts the unused edges reachable from u, minus one edge for every two
// odd-degree vertices (other than u and the free end) that a trail cannot
// balance.
class TrailSearch {
 public:
  TrailSearch(const SweepGraph& g, long long node_limit) : g_(g), limit_(node_limit) {
    used_.assign(static_cast<std::size_t>(g.edge_count()), 0);
    rem_.resize(static_cast<std::size_t>(g.vertex_count()));
    for (int v = 0; v < g.vertex_count(); ++v) rem_[static_cast<std::size_t>(v)] = g.degree(v);
    mark_.assign(static_cast<std::size_t>(g.vertex_count()), 0);
  }

  long long nodes() const { return nodes_; }
  bool exhausted() const { return exhausted_; }

  /// Upper bound on further edges from u (end fixed when end >= 0).
  int bound(int u, int end) {
    ++stamp_;
    int edges2 = 0, odd = 0;
    bool end_seen = false;
    stack_.clear();
    stack_.push_back(u);
    mark_[static_cast<std::size_t>(u)] = stamp_;
    while (!stack_.empty()) {
      int x = stack_.back();
      stack_.pop_back();
      if (x == end) end_seen = true;
      if (x != u && x != end && rem_[static_cast<std::size_t>(x)] % 2) ++odd;
      edges2 += rem_[static_cast<std::size_t>(x)];
      for (int e : g_.incident[static_cast<std::size_t>(x)]) {
        if (used_[static_cast<std::size_t>(e)]) continue;
        int w = g_.other(e, x);
        if (mark_[static_cast<std::size_t>(w)] != stamp_) {
          mark_[static_cast<std::size_t>(w)] = stamp_;
          stack_.push_back(w);
        }
      }
    }
    if (end >= 0 && !end_seen) return end == u ? 0 : -1;
    int edges = edges2 / 2;
    int slack = end >= 0 ? (odd + 1) / 2 : odd / 2;
    return edges - slack;
  }

  /// Longest trail from `start`; fills `best_path` when it beats `best`.
  void longest_from(int start, int end, int& best, std::vector<int>& best_path) {
    path_.assign(1, start);
    dfs(start, end, best, best_path);
  }

  /// Ends reachable from `start` by a trail of exactly `target` edges.
  std::set<int> ends_at_length(int start, int target) {
    std::set<int> ends;
    visited_.clear();
    collect(start, 0, target, ends);
    return ends;
  }

 private:
  void use(int e, bool on) {
    used_[static_cast<std::size_t>(e)] = on;
    const SweepEdge& se = g_.edges[static_cast<std::size_t>(e)];
    int d = on ? -1 : 1;
    rem_[static_cast<std::size_t>(se.a)] += d;
    rem_[static_cast<std::size_t>(se.b)] += d;
  }

  void dfs(int u, int end, int& best, std::vector<int>& best_path) {
    if (exhausted_) return;
    if (++nodes_ > limit_) {
      exhausted_ = true;
      return;
    }
    const int len = static_cast<int>(path_.size()) - 1;
    if ((end < 0 || u == end) && len > best) {
      best = len;
      best_path = path_;
    }
    int ub = bound(u, end);
    if (ub < 0 || len + ub <= best) return;
    for (int e : g_.incident[static_cast<std::size_t>(u)]) {
      if (used_[static_cast<std::size_t>(e)]) continue;
      int w = g_.other(e, u);
      use(e, true);
      path_.push_back(w);
      dfs(w, end, best, best_path);
      path_.pop_back();
      use(e, false);
      if (exhausted_) return;
    }
  }

  void collect(int u, int len, int target, std::set<int>& ends) {
    if (++nodes_ > limit_) {
      exhausted_ = true;
      return;
    }
    if (len == target) {
      ends.insert(u);
      return;
    }
    if (len + bound(u, -1) < target) return;
    std::vector<std::uint64_t> key((used_.size() + 63) / 64 + 1, 0);
    for (std::size_t k = 0; k < used_.size(); ++k)
      if (used_[k]) key[k / 64] |= std::uint64_t{1} << (k % 64);
    key.back() = static_cast<std::uint64_t>(u);
    if (!visited_.insert(key).second) return;
    for (int e : g_.incident[static_cast<std::size_t>(u)]) {
      if (used_[static_cast<std::size_t>(e)]) continue;
      use(e, true);
      collect(g_.other(e, u), len + 1, target, ends);
      use(e, false);
      if (exhausted_) return;
    }
  }

  struct KeyHash {
    std::size_t operator()(const std::vector<std::uint64_t>& k) const {
      std::uint64_t h = 0x9e3779b97f4a7c15ull;
      for (auto x : k) h = (h ^ x) * 0x100000001b3ull + (h >> 29);
      return static_cast<std::size_t>(h);
    }
  };

  const SweepGraph& g_;
  long long limit_;
  long long nodes_ = 0;
  bool exhausted_ = false;
  std::vector<char> used_;
  std::vector<int> rem_;
  std::vector<int> mark_;
  int stamp_ = 0;
  std::vector<int> stack_;
  std::vector<int> path_;
  std::unordered_set<std::vector<std::uint64_t>, KeyHash> visited_;
};

inline std::vector<SubLattice> all_sublattices() { return {{0, 0}, {1, 0}, {0, 1}, {1, 1}}; }

}  // namespace detail

/// Longest sweep on the board, optionally with fixed start and/or end. Ties
/// keep the first witness in hole order of the start and incident-edge order.
inline MaxSweepResult max_sweep_length(BoardPtr board, std::optional<Hole> start = std::nullopt,
                                       std::optional<Hole> end = std::nullopt, long long node_limit = 50'000'000) {
  MaxSweepResult res;
  int best = 0;
  std::vector<int> best_path;
  std::optional<SweepGraph> best_graph;
  long long budget = node_limit;
  if (start && end && !(sublattice_of(*start) == sublattice_of(*end))) return res;
  for (int i = 0; i < board->size(); ++i) {
    Hole s = board->hole(i);
    if (start && !(s == *start)) continue;
    auto g = class_sweep_graph(board, sublattice_of(s));
    int sv = g.vertex_of[static_cast<std::size_t>(i)];
    int ev = end ? g.vertex_of[static_cast<std::size_t>(board->require_index(*end))] : -1;
    if (end && ev < 0) continue;
    detail::TrailSearch search(g, budget);
    int before = best;
    search.longest_from(sv, ev, best, best_path);
    res.nodes += search.nodes();
    budget -= search.nodes();
    if (best > before) best_graph = g;
    if (search.exhausted()) {
      res.status = SearchStatus::budget_exhausted;
      break;
    }
  }
  res.length = best;
  if (best_graph) res.witness = trail_pattern(*best_graph, best_path);
  if (res.status != SearchStatus::budget_exhausted) res.status = best > 0 ? SearchStatus::found : SearchStatus::none;
  return res;
}

struct SweepEndpoints {
  Hole start;
  Hole end;
  friend bool operator==(const SweepEndpoints&, const SweepEndpoints&) = default;
};

struct EndpointCensus {
  int length = 0;
  std::vector<SweepEndpoints> all;      // every (start, end) admitting a sweep of `length`
  std::vector<SweepEndpoints> orbits;   // one representative per symmetry orbit
  bool complete = true;
};

/// All endpoint pairs of maximal sweeps; orbit representatives are the
/// pair with the smallest (start, end) hole indices in each orbit.
inline EndpointCensus enumerate_max_sweep_endpoints(BoardPtr board, std::optional<int> max_length = std::nullopt,
                                                    long long node_limit = 50'000'000) {
  EndpointCensus out;
  if (!max_length) {
    auto r = max_sweep_length(board, std::nullopt, std::nullopt, node_limit);
    if (r.status == SearchStatus::budget_exhausted) out.complete = false;
    max_length = r.length;
  }
  out.length = *max_length;
  if (out.length == 0) return out;
  std::set<std::pair<int, int>> pairs;
  for (int i = 0; i < board->size(); ++i) {
    auto g = class_sweep_graph(board, sublattice_of(board->hole(i)));
    detail::TrailSearch search(g, node_limit);
    for (int e : search.ends_at_length(g.vertex_of[static_cast<std::size_t>(i)], out.length))
      pairs.insert({i, g.vertex_hole[static_cast<std::size_t>(e)]});
    if (search.exhausted()) out.complete = false;
  }
  auto group = symmetries(*board);
  std::set<std::pair<int, int>> reps;
  for (auto [s, e] : pairs) {
    out.all.push_back({board->hole(s), board->hole(e)});
    std::pair<int, int> best{s, e};
    for (const auto& g : group)
      best = std::min(best, {g.perm[static_cast<std::size_t>(s)], g.perm[static_cast<std::size_t>(e)]});
    reps.insert(best);
  }
  for (auto [s, e] : reps) out.orbits.push_back({board->hole(s), board->hole(e)});
  return out;
}

// ---------------------------------------------------------------------------
// Convex classification

enum class ConvexShape { triangle, parallelogram, trapezoid, no_super_sweep };

inline const char* to_string(ConvexShape s) {
  switch (s) {
    case ConvexShape::triangle: return "triangle";
    case ConvexShape::parallelogram: return "parallelogram";
    case ConvexShape::trapezoid: return "trapezoid";
    case ConvexShape::no_super_sweep: return "no-super-sweep";
  }
  return "?";
}

struct ConvexClassification {
  ConvexShape shape = ConvexShape::no_super_sweep;
  bool odd_sides = false;  // every side holds an odd number of holes
  SuperSweepVerdict verdict;
  /// Super-sweep exists exactly for the three shapes with odd sides.
  bool consistent() const {
    bool predicted = shape != ConvexShape::no_super_sweep && odd_sides;
    return predicted == verdict.feasible;
  }
};

/// Shape family of a convex board from its corner angles.
inline ConvexClassification classify_convex(BoardPtr board) {
  if (!is_convex(*board)) throw Error("classify_convex needs a convex board");
  auto cs = corners(*board);
  std::vector<int> a;
  for (const auto& c : cs) a.push_back(c.interior_angle);
  ConvexClassification out;
  auto rotation_of = [&](std::vector<int> pattern) {
    if (pattern.size() != a.size()) return false;
    for (std::size_t r = 0; r < a.size(); ++r) {
      bool ok = true;
      for (std::size_t k = 0; k < a.size() && ok; ++k) ok = a[(k + r) % a.size()] == pattern[k];
      if (ok) return true;
    }
    return false;
  };
  if (rotation_of({60, 60, 60}))
    out.shape = ConvexShape::triangle;
  else if (rotation_of({60, 120, 60, 120}))
    out.shape = ConvexShape::parallelogram;
  else if (rotation_of({60, 60, 120, 120}))
    out.shape = ConvexShape::trapezoid;
  else
    out.shape = ConvexShape::no_super_sweep;
  auto sides = side_lengths(*board);
  out.odd_sides = !sides.empty() && std::all_of(sides.begin(), sides.end(), [](int s) { return s % 2 == 1; });
  out.verdict = euler_verdict(board);
  return out;
}

}  // namespace pegsol
