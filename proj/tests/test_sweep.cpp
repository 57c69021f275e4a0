#include <gtest/gtest.h>

#include <set>
#include <vector>

#include "pegsol/sweep.hpp"

using namespace pegsol;

namespace {

Hole H(const char* s) { return *parse_hole(s); }

// Brute force straight from the board geometry: the longest chain of jumps
// with pairwise distinct captured holes, optionally reporting whether some
// chain touches every hole.
struct ChainOracle {
  const Board& b;
  std::vector<char> captured, visited_count;
  int best = 0;
  bool super = false;
  long long nodes = 0;

  explicit ChainOracle(const Board& board)
      : b(board), captured(static_cast<std::size_t>(board.size()), 0), visited_count(static_cast<std::size_t>(board.size()), 0) {}

  bool all_touched() const {
    for (int i = 0; i < b.size(); ++i)
      if (!captured[static_cast<std::size_t>(i)] && !visited_count[static_cast<std::size_t>(i)]) return false;
    return true;
  }

  void dfs(Hole u, int len) {
    ++nodes;
    best = std::max(best, len);
    if (!super && all_touched()) super = true;
    for (int d = 0; d < 6; ++d) {
      Hole m = u + kSteps[static_cast<std::size_t>(d)], t = u + kSteps[static_cast<std::size_t>(d)] * 2;
      int mi = b.index(m), ti = b.index(t);
      if (mi < 0 || ti < 0 || captured[static_cast<std::size_t>(mi)]) continue;
      captured[static_cast<std::size_t>(mi)] = 1;
      ++visited_count[static_cast<std::size_t>(ti)];
      dfs(t, len + 1);
      --visited_count[static_cast<std::size_t>(ti)];
      captured[static_cast<std::size_t>(mi)] = 0;
    }
  }

  void run() {
    for (int i = 0; i < b.size(); ++i) {
      visited_count[static_cast<std::size_t>(i)] = 1;
      dfs(b.hole(i), 0);
      visited_count[static_cast<std::size_t>(i)] = 0;
    }
  }
};

// Every convex lattice polygon with sides a0..a5 (in steps) along E, NE, N,
// W, SW, S, up to `max_steps` per side.
std::vector<BoardPtr> convex_boards(int max_steps) {
  std::vector<BoardPtr> out;
  std::set<std::vector<Hole>> seen;
  for (int a0 = 0; a0 <= max_steps; ++a0)
    for (int a1 = 0; a1 <= max_steps; ++a1)
      for (int a2 = 0; a2 <= max_steps; ++a2)
        for (int a3 = 0; a3 <= max_steps; ++a3) {
          int a4 = a0 + a1 - a3;
          int a5 = a1 + a2 - a4;
          if (a4 < 0 || a4 > max_steps || a5 < 0 || a5 > max_steps) continue;
          int a[6] = {a0, a1, a2, a3, a4, a5};
          std::vector<Edge> edges;
          for (int d = 0; d < 6; ++d)
            if (a[d] > 0) edges.push_back(Edge{dir_from_index(d), a[d]});
          if (edges.size() < 3) continue;
          auto b = make_polygon(edges);
          // translates of one shape give identical hole lists after normalising
          std::vector<Hole> key;
          for (Hole h : b->holes()) key.push_back(h - Hole{b->min_col(), b->min_row()});
          if (seen.insert(key).second) out.push_back(b);
        }
  return out;
}

}  // namespace

TEST(SuperSweep, RhombusLengths) {
  const std::pair<int, int> expect[] = {{3, 5}, {5, 16}, {7, 33}, {9, 56}};
  for (auto [n, len] : expect) {
    auto s = construct_super_sweep(make_rhombus(n));
    EXPECT_EQ(s.length(), len) << n;
    EXPECT_TRUE(s.is_super_sweep());
    EXPECT_TRUE(s.is_valid());
  }
}

TEST(SuperSweep, FormulaMatchesConstruction) {
  for (int n = 3; n <= 13; n += 2) {
    auto b = make_rhombus(n);
    auto s = construct_super_sweep(b);
    EXPECT_EQ(s.length(), rhombic_matchstick_length(n)) << n;
    // the mover visits the odd sublattice and captures everything else
    int on = 0;
    for (Hole h : b->holes()) on += h.col % 2 && h.row % 2;
    EXPECT_EQ(s.length(), n * n - on);
  }
  EXPECT_THROW(rhombic_matchstick_length(6), Error);
  EXPECT_EQ(constructed_sweep_length(1), 16);
}

TEST(SuperSweep, ChainOracleAgreesOnSmallRhombi) {
  for (int n : {3, 5}) {
    auto b = make_rhombus(n);
    ChainOracle o(*b);
    o.run();
    EXPECT_TRUE(o.super);
    EXPECT_EQ(o.best, rhombic_matchstick_length(n));
  }
}

TEST(EulerVerdict, KnownBoards) {
  auto t5 = euler_verdict(make_triangle(5));
  EXPECT_TRUE(t5.feasible);
  EXPECT_TRUE(t5.closed);
  EXPECT_EQ(t5.odd_count, 0);

  for (int n : {5, 7}) {
    auto v = euler_verdict(make_rhombus(n));
    ASSERT_TRUE(v.feasible) << n;
    EXPECT_FALSE(v.closed);
    ASSERT_TRUE(v.endpoints);
    // the two 120 degree corners
    std::set<Hole> ends{v.endpoints->first, v.endpoints->second};
    EXPECT_EQ(ends, (std::set<Hole>{Hole{1, 1}, Hole{n, n}}));
  }

  auto hex = euler_verdict(make_hexagon(3));
  EXPECT_FALSE(hex.feasible);
  EXPECT_EQ(hex.odd_count, 6);
  EXPECT_EQ(hex.reason, SweepReason::odd_degree_count);

  auto r6 = euler_verdict(make_rhombus(6));
  EXPECT_FALSE(r6.feasible);
  EXPECT_EQ(r6.reason, SweepReason::corner_parity_mismatch);
  EXPECT_STREQ(to_string(r6.reason), "corner-parity-mismatch");
}

TEST(EulerVerdict, SweepGraphDegreesMatchGeometry) {
  // every edge is a jump between two sublattice holes over a board hole
  for (auto b : {make_rhombus(7), make_triangle(9), make_hexagon(5)}) {
    auto built = build_sweep_graph(b);
    ASSERT_TRUE(built);
    const auto& g = *built.graph;
    std::set<int> mids;
    for (const auto& e : g.edges) {
      Hole a = g.hole_of_vertex(e.a), c = g.hole_of_vertex(e.b);
      ASSERT_TRUE(is_jump_shape(a, c));
      EXPECT_EQ(b->index(midpoint(a, c)), e.mid);
      EXPECT_TRUE(mids.insert(e.mid).second);
    }
  }
}

TEST(ConvexClassification, ExhaustiveUpToSevenHoleSides) {
  auto boards = convex_boards(6);
  int feasible = 0, checked_by_oracle = 0;
  std::set<ConvexShape> shapes;
  for (const auto& b : boards) {
    ASSERT_TRUE(is_convex(*b));
    auto c = classify_convex(b);
    EXPECT_TRUE(c.consistent()) << b->descriptor();
    shapes.insert(c.shape);
    if (c.verdict.feasible) {
      ++feasible;
      auto s = construct_super_sweep(b);
      EXPECT_TRUE(s.is_super_sweep()) << b->descriptor();
      EXPECT_TRUE(s.is_valid()) << b->descriptor();
    }
    if (b->size() <= 16) {
      ChainOracle o(*b);
      o.run();
      EXPECT_EQ(o.super, c.verdict.feasible) << b->descriptor();
      ++checked_by_oracle;
    }
  }
  EXPECT_EQ(shapes.size(), 4u);
  EXPECT_GT(feasible, 0);
  EXPECT_GT(checked_by_oracle, 10);
}

TEST(ConvexClassification, NonConvexRejected) { EXPECT_THROW(classify_convex(make_star(3)), Error); }

TEST(Unreachability, FeasibleSuperSweepsUpTo81Holes) {
  int n = 0;
  for (const auto& b : convex_boards(8)) {
    if (b->size() > 81 || !euler_verdict(b).feasible) continue;
    EXPECT_TRUE(super_sweep_unreachable(construct_super_sweep(b))) << b->descriptor();
    ++n;
  }
  EXPECT_GT(n, 20);
}

TEST(Unreachability, ForwardSearchNeverReachesPreSweepPosition) {
  // independent check: play every game from every single vacancy
  for (auto b : {make_triangle(5), make_rhombus(3), make_rhombus(5)}) {
    Position target = construct_super_sweep(b).pre_sweep_position();
    const std::uint64_t tbits = target.words()[0];
    std::vector<char> seen(std::size_t{1} << b->size(), 0);
    std::vector<std::uint64_t> stack;
    for (int v = 0; v < b->size(); ++v) {
      std::uint64_t s = ((std::uint64_t{1} << b->size()) - 1) & ~(std::uint64_t{1} << v);
      if (!seen[s]) seen[s] = 1, stack.push_back(s);
    }
    bool hit = false;
    while (!stack.empty()) {
      std::uint64_t s = stack.back();
      stack.pop_back();
      if (s == tbits) hit = true;
      for (int f = 0; f < b->size(); ++f) {
        if (!(s >> f & 1)) continue;
        for (int d = 0; d < 6; ++d) {
          int m = b->neighbor(f, dir_from_index(d));
          if (m < 0 || !(s >> m & 1)) continue;
          int t = b->neighbor(m, dir_from_index(d));
          if (t < 0 || (s >> t & 1)) continue;
          std::uint64_t n = s ^ (std::uint64_t{1} << f) ^ (std::uint64_t{1} << m) ^ (std::uint64_t{1} << t);
          if (!seen[n]) seen[n] = 1, stack.push_back(n);
        }
      }
    }
    EXPECT_FALSE(hit) << b->shorthand();
  }
}

TEST(Unreachability, RejectsNonSuperSweep) {
  auto b = make_rhombus(5);
  SweepPattern p{b, {H("a1"), H("c1")}};
  EXPECT_THROW(super_sweep_unreachable(p), std::domain_error);
}

TEST(MaxSweep, RhombusSix) {
  auto b = make_rhombus(6);
  auto r = max_sweep_length(b);
  ASSERT_EQ(r.status, SearchStatus::found);
  EXPECT_EQ(r.length, 16);
  ASSERT_TRUE(r.witness);
  EXPECT_TRUE(r.witness->is_valid());
  EXPECT_EQ(r.witness->length(), 16);

  auto census = enumerate_max_sweep_endpoints(b);
  EXPECT_TRUE(census.complete);
  EXPECT_EQ(census.length, 16);
  std::set<std::pair<Hole, Hole>> orbits;
  for (const auto& e : census.orbits) orbits.insert({e.start, e.end});
  std::set<std::pair<Hole, Hole>> expect{{H("a1"), H("e5")}, {H("b2"), H("f6")}, {H("b1"), H("f5")}};
  EXPECT_EQ(orbits, expect);
  // every listed pair really has a sweep of that length
  for (const auto& e : census.all) EXPECT_EQ(max_sweep_length(b, e.start, e.end).length, 16);
}

TEST(MaxSweep, FixedEndpoints) {
  auto b = make_rhombus(6);
  EXPECT_EQ(max_sweep_length(b, H("a1"), H("e5")).length, 16);
  EXPECT_LT(max_sweep_length(b, H("a1"), H("a5")).length, 16);
  // different sublattices: no sweep at all
  EXPECT_EQ(max_sweep_length(b, H("a1"), H("b1")).status, SearchStatus::none);
}

TEST(MaxSweep, BudgetIsReported) {
  auto r = max_sweep_length(make_rhombus(9), std::nullopt, std::nullopt, 10);
  EXPECT_EQ(r.status, SearchStatus::budget_exhausted);
}

TEST(MaxSweep, TriangleFiveIsClosed) {
  auto census = enumerate_max_sweep_endpoints(make_triangle(5));
  ASSERT_FALSE(census.all.empty());
  for (const auto& e : census.all) EXPECT_EQ(e.start, e.end);
}

TEST(MaxSweep, RhombusThreeEndsAtObtuseCorners) {
  auto census = enumerate_max_sweep_endpoints(make_rhombus(3));
  EXPECT_EQ(census.length, 5);
  std::set<std::pair<Hole, Hole>> all;
  for (const auto& e : census.all) all.insert({e.start, e.end});
  EXPECT_EQ(all, (std::set<std::pair<Hole, Hole>>{{H("a1"), H("c3")}, {H("c3"), H("a1")}}));
}

TEST(MaxSweep, ChainOracleUpToTwentyHoles) {
  std::vector<BoardPtr> boards{make_rhombus(2), make_rhombus(3), make_rhombus(4), make_triangle(4), make_triangle(5),
                               make_hexagon(2), make_parallelogram(3, 5), make_parallelogram(4, 5),
                               make_trapezoid(5, 2), make_trapezoid(6, 3)};
  for (const auto& b : convex_boards(4))
    if (b->size() <= 20) boards.push_back(b);
  for (const auto& b : boards) {
    ASSERT_LE(b->size(), 20);
    ChainOracle o(*b);
    o.run();
    EXPECT_EQ(max_sweep_length(b).length, o.best) << b->descriptor();
  }
}
