#include <gtest/gtest.h>

#include <algorithm>
#include <cstdlib>
#include <set>

#include "pegsol/lattice.hpp"

using namespace pegsol;

namespace {

// Axial distance with the NE diagonal: the hex metric for steps (1,0),
// (0,1), (1,1).
int hex_distance(Hole a, Hole b) {
  int dx = b.col - a.col, dy = b.row - a.row;
  return std::max({std::abs(dx), std::abs(dy), std::abs(dx - dy)});
}

std::set<Hole> normalized(const Board& b) {
  std::set<Hole> out;
  for (Hole h : b.holes()) out.insert(Hole{h.col - b.min_col() + 1, h.row - b.min_row() + 1});
  return out;
}

std::vector<BoardPtr> sample_boards() {
  return {make_rhombus(1), make_rhombus(2), make_rhombus(6), make_triangle(5), make_triangle(8), make_hexagon(3),
          make_star(3),    make_parallelogram(3, 5), make_trapezoid(7, 2),
          make_polygon(parse_edges("E4 N2 W2 N2 W2 S4"))};
}

}  // namespace

TEST(Lattice, HoleNamesFollowColumnLetterRowNumber) {
  EXPECT_EQ(hole_name({1, 1}), "a1");
  EXPECT_EQ(hole_name({3, 3}), "c3");
  EXPECT_EQ(hole_name({6, 6}), "f6");
  EXPECT_EQ(hole_name({27, 204}), "aa204");
  for (int c = 1; c < 800; c += 7)
    for (int r = 1; r < 300; r += 13) EXPECT_EQ(parse_hole(hole_name({c, r})), (Hole{c, r}));
  EXPECT_FALSE(parse_hole("a0"));
  EXPECT_FALSE(parse_hole("7"));
  EXPECT_FALSE(parse_hole("c"));
  EXPECT_FALSE(parse_hole("C3"));
}

TEST(Lattice, StepsComeInThreeOppositePairs) {
  for (int d = 0; d < 6; ++d) {
    Dir dir = dir_from_index(d);
    EXPECT_EQ(step(dir) + step(opposite(dir)), (Hole{0, 0}));
  }
  EXPECT_EQ(step(Dir::NE), (Hole{1, 1}));
  EXPECT_EQ(step(Dir::SW), (Hole{-1, -1}));
}

TEST(Lattice, RhombusAndTriangleHoleCounts) {
  for (int n = 1; n <= 50; ++n) {
    EXPECT_EQ(make_rhombus(n)->size(), n * n) << n;
    EXPECT_EQ(make_triangle(n)->size(), n * (n + 1) / 2) << n;
  }
  EXPECT_EQ(make_rhombus(6)->size(), 36);
  EXPECT_EQ(make_rhombus(5)->size(), 25);
  EXPECT_EQ(make_triangle(5)->size(), 15);
  EXPECT_EQ(make_triangle(8)->size(), 36);
}

TEST(Lattice, ZeroSizeRejected) {
  EXPECT_THROW(make_rhombus(0), Error);
  EXPECT_THROW(make_triangle(0), Error);
}

TEST(Lattice, SingleHoleBoardHasNoAdjacency) {
  auto b = make_rhombus(1);
  ASSERT_EQ(b->size(), 1);
  for (int d = 0; d < 6; ++d) EXPECT_EQ(b->neighbor(0, dir_from_index(d)), -1);
}

TEST(Lattice, RhombusCoordinatesAreTheSquareOfColumnsAndRows) {
  auto b = make_rhombus(6);
  for (int c = 1; c <= 6; ++c)
    for (int r = 1; r <= 6; ++r) EXPECT_TRUE(b->contains({c, r}));
  EXPECT_FALSE(b->contains({7, 1}));
  EXPECT_FALSE(b->contains({0, 3}));
}

TEST(Lattice, TriangleEmbedding) {
  auto b = make_triangle(6);
  std::set<Hole> expect;
  for (int r = 1; r <= 6; ++r)
    for (int c = 1; c <= r; ++c) expect.insert({c, r});
  EXPECT_EQ(normalized(*b), expect);
}

TEST(Lattice, PolygonRhombusMatchesRhombus) {
  auto p = make_polygon(parse_edges("E5 N5 W5 S5"));
  EXPECT_EQ(normalized(*p), normalized(*make_rhombus(6)));
  // clockwise input describes the same board
  auto q = make_polygon(parse_edges("N5 E5 S5 W5"));
  EXPECT_EQ(normalized(*q), normalized(*make_rhombus(6)));
}

TEST(Lattice, HexagonWithTwoStepsPerSideHas19Holes) {
  auto b = make_hexagon(3);
  EXPECT_EQ(b->size(), 19);
  // oracle: every lattice point within hex distance 2 of the centre
  std::set<Hole> expect;
  for (int c = -5; c <= 5; ++c)
    for (int r = -5; r <= 5; ++r)
      if (hex_distance({0, 0}, {c, r}) <= 2) expect.insert({c, r});
  std::set<Hole> got;
  Hole centre{0, 0};
  for (Hole h : b->holes()) {
    int far = 0;
    for (Hole g : b->holes()) far = std::max(far, hex_distance(h, g));
    if (far == 2) centre = h;
  }
  for (Hole h : b->holes()) got.insert(h - centre);
  EXPECT_EQ(got, expect);
}

TEST(Lattice, HexagonCountsMatchCenteredHexNumbers) {
  for (int s = 2; s <= 12; ++s) EXPECT_EQ(make_hexagon(s)->size(), 3 * s * (s - 1) + 1);
}

TEST(Lattice, TrapezoidIsTriangleWithCornerCut) {
  auto b = make_trapezoid(5, 1);
  EXPECT_EQ(b->size(), 14);
  std::set<Hole> expect;
  for (int r = 2; r <= 5; ++r)
    for (int c = 1; c <= r; ++c) expect.insert({c, r - 1});
  EXPECT_EQ(normalized(*b), expect);
}

TEST(Lattice, PolygonErrors) {
  EXPECT_THROW(make_polygon(parse_edges("E3 N3 W2")), Error);             // does not close
  EXPECT_THROW(make_polygon(parse_edges("E2 N2 W4 S1 E4 S1 W2")), Error);  // crosses itself
  EXPECT_THROW(parse_edges("Q3"), Error);
  EXPECT_THROW(make_polygon(parse_edges("E0 N1 W1")), Error);
}

TEST(Lattice, RhombusCorners) {
  auto cs = corners(*make_rhombus(6));
  ASSERT_EQ(cs.size(), 4u);
  std::multiset<int> angles;
  std::map<Hole, int> by_hole;
  for (const auto& c : cs) {
    angles.insert(c.interior_angle);
    by_hole[c.hole] = c.interior_angle;
  }
  EXPECT_EQ(angles, (std::multiset<int>{60, 60, 120, 120}));
  // the NE diagonal is the short one, joining the obtuse corners
  EXPECT_EQ(by_hole.at({1, 1}), 120);
  EXPECT_EQ(by_hole.at({6, 6}), 120);
  EXPECT_EQ(by_hole.at({6, 1}), 60);
  EXPECT_EQ(by_hole.at({1, 6}), 60);
}

TEST(Lattice, TriangleAndHexagonCorners) {
  auto t = corners(*make_triangle(7));
  ASSERT_EQ(t.size(), 3u);
  for (const auto& c : t) EXPECT_EQ(c.interior_angle, 60);
  auto h = corners(*make_hexagon(4));
  ASSERT_EQ(h.size(), 6u);
  for (const auto& c : h) EXPECT_EQ(c.interior_angle, 120);
}

TEST(Lattice, Convexity) {
  EXPECT_TRUE(is_convex(*make_rhombus(6)));
  EXPECT_TRUE(is_convex(*make_triangle(5)));
  EXPECT_TRUE(is_convex(*make_hexagon(3)));
  EXPECT_FALSE(is_convex(*make_star(3)));
  // eight-sided board with two re-entrant corners
  auto notch = make_polygon(parse_edges("E4 N2 W1 N2 E1 N2 W4 S6"));
  EXPECT_EQ(corners(*notch).size(), 8u);
  EXPECT_FALSE(is_convex(*notch));
}

TEST(Lattice, AdjacencyIsSymmetric) {
  for (const auto& b : sample_boards())
    for (int i = 0; i < b->size(); ++i)
      for (int d = 0; d < 6; ++d) {
        int j = b->neighbor(i, dir_from_index(d));
        if (j < 0) continue;
        EXPECT_EQ(b->hole(j), b->hole(i) + step(dir_from_index(d)));
        EXPECT_EQ(b->neighbor(j, opposite(dir_from_index(d))), i);
      }
}

// Re-entrant corners (240 and 300 degrees) can be jumped over, so only the
// convex ones are checked.
TEST(Lattice, CornerHolesAreNeverJumpedOver) {
  for (const auto& b : sample_boards())
    for (const auto& c : corners(*b)) {
      if (c.interior_angle > 120) continue;
      for (int d = 0; d < 3; ++d) {
        Dir dir = dir_from_index(d);
        bool both = b->contains(c.hole + step(dir)) && b->contains(c.hole - step(dir));
        EXPECT_FALSE(both) << b->shorthand() << " " << hole_name(c.hole);
      }
    }
}

TEST(Lattice, SymmetryGroupOrders) {
  EXPECT_EQ(symmetries(*make_rhombus(6)).size(), 4u);
  EXPECT_EQ(symmetries(*make_triangle(5)).size(), 6u);
  EXPECT_EQ(symmetries(*make_hexagon(3)).size(), 12u);
  EXPECT_EQ(symmetries(*make_rhombus(1)).size(), 12u);
  EXPECT_EQ(symmetries(*make_parallelogram(3, 5)).size(), 2u);
}

TEST(Lattice, RhombusSymmetriesAreRotationAndDiagonalReflections) {
  auto b = make_rhombus(6);
  std::set<std::pair<Hole, Hole>> images;  // (image of a1, image of f1)
  for (const auto& s : symmetries(*b)) images.insert({s.apply({1, 1}), s.apply({6, 1})});
  std::set<std::pair<Hole, Hole>> expect{
      {{1, 1}, {6, 1}},  // identity
      {{6, 6}, {1, 6}},  // half turn
      {{1, 1}, {1, 6}},  // reflection in the a1-f6 diagonal
      {{6, 6}, {6, 1}},  // reflection in the f1-a6 diagonal
  };
  EXPECT_EQ(images, expect);
}

TEST(Lattice, SymmetriesFormAGroupAndPreserveJumps) {
  for (const auto& b : sample_boards()) {
    auto group = symmetries(*b);
    ASSERT_FALSE(group.empty());
    EXPECT_TRUE(group.front().is_identity());
    std::set<std::vector<int>> perms;
    for (const auto& g : group) perms.insert(g.perm);
    // every lattice map fixes a lone hole, so only larger boards have distinct perms
    if (b->size() > 1) {
      EXPECT_EQ(perms.size(), group.size());
    }
    for (const auto& g : group)
      for (const auto& h : group) {
        std::vector<int> comp(g.perm.size());
        for (std::size_t i = 0; i < comp.size(); ++i) comp[i] = g.perm[static_cast<std::size_t>(h.perm[i])];
        EXPECT_TRUE(perms.count(comp)) << b->shorthand();
      }
    // jumps map to jumps
    for (const auto& g : group)
      for (int i = 0; i < b->size(); ++i)
        for (int d = 0; d < 6; ++d) {
          int o = b->neighbor(i, dir_from_index(d));
          int t = o < 0 ? -1 : b->neighbor(o, dir_from_index(d));
          if (t < 0) continue;
          Hole gi = b->hole(g.perm[static_cast<std::size_t>(i)]);
          Hole go = b->hole(g.perm[static_cast<std::size_t>(o)]);
          Hole gt = b->hole(g.perm[static_cast<std::size_t>(t)]);
          EXPECT_EQ(go - gi, gt - go);
          EXPECT_TRUE(unit_dir(go - gi).has_value());
        }
  }
}

TEST(Lattice, DescriptorAndShorthandRoundTrip) {
  for (const auto& b : sample_boards()) {
    auto again = parse_board_descriptor(b->descriptor());
    EXPECT_EQ(again->holes(), b->holes()) << b->descriptor();
    auto short_again = parse_board_shorthand(b->shorthand());
    EXPECT_EQ(short_again->holes(), b->holes()) << b->shorthand();
  }
  EXPECT_EQ(parse_board_shorthand("rhombus6")->size(), 36);
  EXPECT_EQ(parse_board_shorthand("triangle8")->size(), 36);
  EXPECT_EQ(parse_board_shorthand("hexagon:3")->size(), 19);
  EXPECT_THROW(parse_board_shorthand("square7"), Error);
  EXPECT_THROW(parse_board_descriptor("lattice sq\nrhombus 6\n"), Error);
}
