#pragma once

// Triangular-lattice boards in axial coordinates.
//
// A hole is (col, row). The six unit steps are E(+1,0), NE(+1,+1), N(0,+1),
// W(-1,0), SW(-1,-1), S(0,-1), listed counter-clockwise. E/W, N/S and NE/SW
// are the three jump axes. Columns are named with letters (a, b, ..., z, aa,
// ab, ...) and rows with numbers, so (1,1) is "a1" and (5,5) is "e5".

#include <algorithm>
#include <array>
#include <cctype>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace pegsol {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Hole {
  int col = 0;
  int row = 0;

  friend constexpr bool operator==(Hole, Hole) = default;
  friend constexpr auto operator<=>(const Hole& a, const Hole& b) {
    // hole order is row-major: (row, col)
    if (auto c = a.row <=> b.row; c != 0) return c;
    return a.col <=> b.col;
  }
  constexpr Hole operator+(Hole o) const { return {col + o.col, row + o.row}; }
  constexpr Hole operator-(Hole o) const { return {col - o.col, row - o.row}; }
  constexpr Hole operator*(int k) const { return {col * k, row * k}; }
};

enum class Dir : std::uint8_t { E = 0, NE = 1, N = 2, W = 3, SW = 4, S = 5 };

inline constexpr std::array<Hole, 6> kSteps = {
    Hole{1, 0}, Hole{1, 1}, Hole{0, 1}, Hole{-1, 0}, Hole{-1, -1}, Hole{0, -1}};

inline constexpr std::array<std::string_view, 6> kDirNames = {"E", "NE", "N", "W", "SW", "S"};

constexpr Hole step(Dir d) { return kSteps[static_cast<int>(d)]; }
constexpr Dir dir_from_index(int i) { return static_cast<Dir>(((i % 6) + 6) % 6); }
constexpr int index_of(Dir d) { return static_cast<int>(d); }
constexpr Dir opposite(Dir d) { return dir_from_index(index_of(d) + 3); }

inline std::optional<Dir> parse_dir(std::string_view s) {
  for (int i = 0; i < 6; ++i)
    if (kDirNames[i] == s) return dir_from_index(i);
  return std::nullopt;
}

/// Direction of a unit step, if `delta` is one.
constexpr std::optional<Dir> unit_dir(Hole delta) {
  for (int i = 0; i < 6; ++i)
    if (kSteps[i] == delta) return dir_from_index(i);
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Hole names

inline std::string column_name(int col) {
  if (col < 1) throw Error("column must be >= 1");
  std::string s;
  while (col > 0) {
    --col;
    s.insert(s.begin(), static_cast<char>('a' + col % 26));
    col /= 26;
  }
  return s;
}

inline std::string hole_name(Hole h) { return column_name(h.col) + std::to_string(h.row); }

inline std::optional<Hole> parse_hole(std::string_view s) {
  std::size_t i = 0;
  int col = 0;
  while (i < s.size() && s[i] >= 'a' && s[i] <= 'z') {
    col = col * 26 + (s[i] - 'a' + 1);
    ++i;
  }
  if (i == 0 || i == s.size() || i > 6) return std::nullopt;
  int row = 0;
  for (std::size_t j = i; j < s.size(); ++j) {
    if (s[j] < '0' || s[j] > '9' || j - i > 8) return std::nullopt;
    row = row * 10 + (s[j] - '0');
  }
  if (row < 1) return std::nullopt;
  return Hole{col, row};
}

// ---------------------------------------------------------------------------
// Shapes

struct Edge {
  Dir dir = Dir::E;
  int steps = 1;
  friend bool operator==(const Edge&, const Edge&) = default;
};

enum class ShapeKind { rhombus, triangle, hexagon, star, parallelogram, trapezoid, polygon };

/// What a board was built from. `a`, `b` carry the shape parameters (holes
/// per side); polygons keep their edge list.
struct Shape {
  ShapeKind kind = ShapeKind::polygon;
  int a = 0;
  int b = 0;
  std::vector<Edge> edges;
};

inline std::string format_edges(const std::vector<Edge>& edges) {
  std::string s;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (i) s += ' ';
    s += std::string(kDirNames[index_of(edges[i].dir)]) + std::to_string(edges[i].steps);
  }
  return s;
}

inline std::vector<Edge> parse_edges(std::string_view text) {
  std::vector<Edge> edges;
  std::string token;
  auto flush = [&] {
    if (token.empty()) return;
    std::size_t k = 0;
    while (k < token.size() && std::isalpha(static_cast<unsigned char>(token[k]))) ++k;
    auto d = parse_dir(std::string_view(token).substr(0, k));
    if (!d || k == token.size()) throw Error("bad polygon edge '" + token + "'");
    int steps = 0;
    for (std::size_t j = k; j < token.size(); ++j) {
      if (!std::isdigit(static_cast<unsigned char>(token[j])))
        throw Error("bad polygon edge '" + token + "'");
      steps = steps * 10 + (token[j] - '0');
    }
    edges.push_back({*d, steps});
    token.clear();
  };
  for (char c : text) {
    if (c == ' ' || c == ',' || c == '\t' || c == '\n') {
      flush();
    } else {
      token += static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    }
  }
  flush();
  return edges;
}

struct CornerInfo {
  Hole hole;
  int interior_angle = 0;  // 60, 120, 240 or 300
  friend bool operator==(const CornerInfo&, const CornerInfo&) = default;
};

class Board;
using BoardPtr = std::shared_ptr<const Board>;

/// A finite set of holes on the triangular lattice. Immutable once built;
/// hole indices follow row-major (row, col) order.
class Board {
 public:
  int size() const { return static_cast<int>(holes_.size()); }
  const std::vector<Hole>& holes() const { return holes_; }
  Hole hole(int index) const { return holes_[static_cast<std::size_t>(index)]; }
  const Shape& shape() const { return shape_; }

  bool contains(Hole h) const { return index(h) >= 0; }

  /// Index of a hole, or -1 when it is off the board.
  int index(Hole h) const {
    const int c = h.col - min_.col;
    const int r = h.row - min_.row;
    if (c < 0 || r < 0 || c >= width_ || r >= height_) return -1;
    return grid_[static_cast<std::size_t>(r) * static_cast<std::size_t>(width_) +
                 static_cast<std::size_t>(c)];
  }

  int require_index(Hole h) const {
    int i = index(h);
    if (i < 0) throw Error("hole " + hole_name(h) + " is not on the board");
    return i;
  }

  /// Neighbor index in direction d, or -1.
  int neighbor(int index, Dir d) const {
    return neighbors_[static_cast<std::size_t>(index)][static_cast<std::size_t>(index_of(d))];
  }

  /// CCW boundary walk starting at `boundary_origin()`; empty for a single hole.
  const std::vector<Edge>& boundary() const { return boundary_; }
  Hole boundary_origin() const { return origin_; }

  int min_col() const { return min_.col; }
  int min_row() const { return min_.row; }
  int max_col() const { return min_.col + width_ - 1; }
  int max_row() const { return min_.row + height_ - 1; }

  /// Text form: `lattice tri` header plus a shape line.
  std::string descriptor() const;
  /// Compact CLI form such as `rhombus6` or `hexagon:3`.
  std::string shorthand() const;

  // Construction goes through the make_* functions.
  Board(std::vector<Hole> holes, Shape shape, std::vector<Edge> boundary, Hole origin);

 private:
  std::vector<Hole> holes_;
  Shape shape_;
  std::vector<Edge> boundary_;
  Hole origin_;
  Hole min_;
  int width_ = 0;
  int height_ = 0;
  std::vector<int> grid_;
  std::vector<std::array<int, 6>> neighbors_;
};

inline Board::Board(std::vector<Hole> holes, Shape shape, std::vector<Edge> boundary, Hole origin)
    : holes_(std::move(holes)), shape_(std::move(shape)), boundary_(std::move(boundary)), origin_(origin) {
  if (holes_.empty()) throw Error("board has no holes");
  std::sort(holes_.begin(), holes_.end());
  holes_.erase(std::unique(holes_.begin(), holes_.end()), holes_.end());
  int min_c = holes_[0].col, max_c = holes_[0].col;
  int min_r = holes_.front().row, max_r = holes_.back().row;
  for (Hole h : holes_) {
    min_c = std::min(min_c, h.col);
    max_c = std::max(max_c, h.col);
  }
  min_ = {min_c, min_r};
  width_ = max_c - min_c + 1;
  height_ = max_r - min_r + 1;
  grid_.assign(static_cast<std::size_t>(width_) * static_cast<std::size_t>(height_), -1);
  for (int i = 0; i < size(); ++i) {
    Hole h = holes_[static_cast<std::size_t>(i)];
    grid_[static_cast<std::size_t>(h.row - min_.row) * static_cast<std::size_t>(width_) +
          static_cast<std::size_t>(h.col - min_.col)] = i;
  }
  neighbors_.resize(holes_.size());
  for (int i = 0; i < size(); ++i)
    for (int d = 0; d < 6; ++d)
      neighbors_[static_cast<std::size_t>(i)][static_cast<std::size_t>(d)] =
          index(holes_[static_cast<std::size_t>(i)] + kSteps[static_cast<std::size_t>(d)]);
}

// ---------------------------------------------------------------------------
// Polygon filling

namespace detail {

inline long long cross(Hole a, Hole b) {
  return static_cast<long long>(a.col) * b.row - static_cast<long long>(a.row) * b.col;
}

// Inside test for a lattice point against a simple polygon. Axial coordinates
// are an affine image of the Euclidean plane, so crossing numbers carry over.
inline bool strictly_inside(Hole p, const std::vector<Hole>& verts) {
  bool inside = false;
  const std::size_t n = verts.size();
  for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
    Hole a = verts[j], b = verts[i];
    if ((a.row > p.row) != (b.row > p.row)) {
      // x-coordinate of the crossing compared to p.col, without division
      long long num = static_cast<long long>(p.row - a.row) * (b.col - a.col);
      long long den = b.row - a.row;
      long long lhs = static_cast<long long>(p.col - a.col) * den;
      bool left = den > 0 ? lhs < num : lhs > num;
      if (left) inside = !inside;
    }
  }
  return inside;
}

}  // namespace detail

/// Board of all lattice holes inside or on the polygon traced by `edges`.
/// The walk must close and must not touch itself. The result is shifted so
/// that the smallest column and row are both 1.
inline BoardPtr make_polygon(const std::vector<Edge>& input, Shape shape = {}) {
  std::vector<Edge> edges;
  for (const Edge& e : input) {
    if (e.steps < 1) throw Error("polygon sides must be at least 1 step");
    if (!edges.empty() && edges.back().dir == e.dir)
      edges.back().steps += e.steps;
    else
      edges.push_back(e);
  }
  if (edges.size() > 1 && edges.front().dir == edges.back().dir) {
    edges.front().steps += edges.back().steps;
    edges.pop_back();
  }
  if (edges.size() < 3) throw Error("polygon needs at least three sides");

  std::vector<Hole> verts;
  std::set<Hole> boundary_points;
  Hole p{0, 0};
  for (const Edge& e : edges) {
    verts.push_back(p);
    for (int k = 0; k < e.steps; ++k) {
      if (!boundary_points.insert(p).second) throw Error("polygon boundary intersects itself");
      p = p + step(e.dir);
    }
  }
  if (!(p == Hole{0, 0})) throw Error("polygon does not close");

  long long area2 = 0;
  for (std::size_t i = 0; i < verts.size(); ++i)
    area2 += detail::cross(verts[i], verts[(i + 1) % verts.size()]);
  if (area2 == 0) throw Error("polygon is degenerate");
  if (area2 < 0) {
    // re-walk clockwise input counter-clockwise
    std::vector<Edge> rev;
    for (auto it = edges.rbegin(); it != edges.rend(); ++it) rev.push_back({opposite(it->dir), it->steps});
    std::vector<Hole> rverts;
    Hole q{0, 0};
    for (const Edge& e : rev) {
      rverts.push_back(q);
      q = q + step(e.dir) * e.steps;
    }
    edges = std::move(rev);
    verts = std::move(rverts);
  }

  int min_c = verts[0].col, max_c = verts[0].col, min_r = verts[0].row, max_r = verts[0].row;
  for (Hole v : verts) {
    min_c = std::min(min_c, v.col);
    max_c = std::max(max_c, v.col);
    min_r = std::min(min_r, v.row);
    max_r = std::max(max_r, v.row);
  }
  std::vector<Hole> holes;
  for (int r = min_r; r <= max_r; ++r)
    for (int c = min_c; c <= max_c; ++c) {
      Hole h{c, r};
      if (boundary_points.count(h) || detail::strictly_inside(h, verts)) holes.push_back(h);
    }
  const Hole shift{1 - min_c, 1 - min_r};
  for (Hole& h : holes) h = h + shift;
  if (shape.kind == ShapeKind::polygon) shape.edges = edges;
  return std::make_shared<const Board>(std::move(holes), std::move(shape), edges, verts[0] + shift);
}

inline BoardPtr make_rhombus(int n) {
  if (n < 1) throw Error("rhombus side must be >= 1");
  Shape shape{ShapeKind::rhombus, n, n, {}};
  if (n == 1) return std::make_shared<const Board>(std::vector<Hole>{{1, 1}}, shape, std::vector<Edge>{}, Hole{1, 1});
  return make_polygon({{Dir::E, n - 1}, {Dir::N, n - 1}, {Dir::W, n - 1}, {Dir::S, n - 1}}, shape);
}

/// Triangle(n): holes {(c,r) : 1 <= c <= r <= n}; row r holds r holes.
inline BoardPtr make_triangle(int n) {
  if (n < 1) throw Error("triangle side must be >= 1");
  Shape shape{ShapeKind::triangle, n, n, {}};
  if (n == 1) return std::make_shared<const Board>(std::vector<Hole>{{1, 1}}, shape, std::vector<Edge>{}, Hole{1, 1});
  return make_polygon({{Dir::NE, n - 1}, {Dir::W, n - 1}, {Dir::S, n - 1}}, shape);
}

/// Regular hexagon with `side` holes on each edge.
inline BoardPtr make_hexagon(int side) {
  if (side < 2) throw Error("hexagon side must be >= 2");
  const int k = side - 1;
  return make_polygon({{Dir::E, k}, {Dir::NE, k}, {Dir::N, k}, {Dir::W, k}, {Dir::SW, k}, {Dir::S, k}},
                      Shape{ShapeKind::hexagon, side, side, {}});
}

/// Six-pointed star whose twelve edges each hold `side` holes.
inline BoardPtr make_star(int side) {
  if (side < 2) throw Error("star side must be >= 2");
  const int k = side - 1;
  std::vector<Edge> edges;
  int d = 0;
  for (int i = 0; i < 12; ++i) {
    edges.push_back({dir_from_index(d), k});
    d += (i % 2 == 0) ? 2 : -1;
  }
  return make_polygon(edges, Shape{ShapeKind::star, side, side, {}});
}

/// Parallelogram with `along_e` holes per row and `along_n` holes per column.
inline BoardPtr make_parallelogram(int along_e, int along_n) {
  if (along_e < 2 || along_n < 2) throw Error("parallelogram sides must be >= 2");
  return make_polygon({{Dir::E, along_e - 1}, {Dir::N, along_n - 1}, {Dir::W, along_e - 1}, {Dir::S, along_n - 1}},
                      Shape{ShapeKind::parallelogram, along_e, along_n, {}});
}

/// Triangle(n) with its apex rows 1..cut removed.
inline BoardPtr make_trapezoid(int n, int cut) {
  if (cut < 1 || cut > n - 2) throw Error("trapezoid cut must be in 1..n-2");
  const int top = cut;
  return make_polygon({{Dir::E, top}, {Dir::NE, n - 1 - cut}, {Dir::W, n - 1}, {Dir::S, n - 1 - cut}},
                      Shape{ShapeKind::trapezoid, n, cut, {}});
}

inline std::string Board::descriptor() const {
  std::string line;
  switch (shape_.kind) {
    case ShapeKind::rhombus: line = "rhombus " + std::to_string(shape_.a); break;
    case ShapeKind::triangle: line = "triangle " + std::to_string(shape_.a); break;
    case ShapeKind::hexagon: line = "hexagon " + std::to_string(shape_.a); break;
    case ShapeKind::star: line = "star " + std::to_string(shape_.a); break;
    case ShapeKind::parallelogram:
      line = "parallelogram " + std::to_string(shape_.a) + " " + std::to_string(shape_.b);
      break;
    case ShapeKind::trapezoid:
      line = "trapezoid " + std::to_string(shape_.a) + " " + std::to_string(shape_.b);
      break;
    case ShapeKind::polygon: line = "polygon " + format_edges(shape_.edges); break;
  }
  return "lattice tri\n" + line + "\n";
}

inline std::string Board::shorthand() const {
  switch (shape_.kind) {
    case ShapeKind::rhombus: return "rhombus" + std::to_string(shape_.a);
    case ShapeKind::triangle: return "triangle" + std::to_string(shape_.a);
    case ShapeKind::hexagon: return "hexagon:" + std::to_string(shape_.a);
    case ShapeKind::star: return "star:" + std::to_string(shape_.a);
    case ShapeKind::parallelogram: return "parallelogram:" + std::to_string(shape_.a) + "x" + std::to_string(shape_.b);
    case ShapeKind::trapezoid: return "trapezoid:" + std::to_string(shape_.a) + "," + std::to_string(shape_.b);
    case ShapeKind::polygon: {
      std::string s = "polygon:";
      for (std::size_t i = 0; i < shape_.edges.size(); ++i) {
        if (i) s += ',';
        s += std::string(kDirNames[index_of(shape_.edges[i].dir)]) + std::to_string(shape_.edges[i].steps);
      }
      return s;
    }
  }
  return {};
}

namespace detail {

inline int parse_int(std::string_view s, std::string_view what) {
  if (s.empty() || s.size() > 9) throw Error("bad " + std::string(what) + " '" + std::string(s) + "'");
  int v = 0;
  for (char c : s) {
    if (c < '0' || c > '9') throw Error("bad " + std::string(what) + " '" + std::string(s) + "'");
    v = v * 10 + (c - '0');
  }
  return v;
}

inline std::pair<int, int> parse_pair(std::string_view s, char sep, std::string_view what) {
  auto k = s.find(sep);
  if (k == std::string_view::npos) throw Error("expected two numbers in " + std::string(what));
  return {parse_int(s.substr(0, k), what), parse_int(s.substr(k + 1), what)};
}

}  // namespace detail

/// Parse a shape line: `rhombus 6`, `triangle 8`, `hexagon 3`, `star 3`,
/// `parallelogram 3 5`, `trapezoid 5 1` or `polygon E5 N5 W5 S5`.
inline BoardPtr parse_shape_line(std::string_view line) {
  std::istringstream in{std::string(line)};
  std::string kind;
  in >> kind;
  std::string rest;
  std::getline(in, rest);
  auto trim = [](std::string s) {
    auto b = s.find_first_not_of(" \t\r");
    auto e = s.find_last_not_of(" \t\r");
    return b == std::string::npos ? std::string{} : s.substr(b, e - b + 1);
  };
  rest = trim(rest);
  if (kind == "rhombus") return make_rhombus(detail::parse_int(rest, "rhombus side"));
  if (kind == "triangle") return make_triangle(detail::parse_int(rest, "triangle side"));
  if (kind == "hexagon") return make_hexagon(detail::parse_int(rest, "hexagon side"));
  if (kind == "star") return make_star(detail::parse_int(rest, "star side"));
  if (kind == "parallelogram") {
    auto [a, b] = detail::parse_pair(rest, ' ', "parallelogram sides");
    return make_parallelogram(a, b);
  }
  if (kind == "trapezoid") {
    auto [a, b] = detail::parse_pair(rest, ' ', "trapezoid size");
    return make_trapezoid(a, b);
  }
  if (kind == "polygon") return make_polygon(parse_edges(rest));
  throw Error("unknown board shape '" + kind + "'");
}

/// Parse the two-line board text format.
inline BoardPtr parse_board_descriptor(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string header, shape;
  std::getline(in, header);
  if (header.rfind("lattice tri", 0) != 0) throw Error("board text must start with 'lattice tri'");
  std::getline(in, shape);
  return parse_shape_line(shape);
}

/// Parse CLI shorthand: rhombus6, rhombus:6, triangle8, hexagon:3, star:3,
/// parallelogram:3x5, trapezoid:5,1, polygon:E2,NE2,... (polygon:@file is
/// resolved by the caller).
inline BoardPtr parse_board_shorthand(std::string_view s) {
  auto split = [&](std::string_view prefix) -> std::optional<std::string_view> {
    if (s.rfind(prefix, 0) != 0) return std::nullopt;
    auto rest = s.substr(prefix.size());
    if (!rest.empty() && rest.front() == ':') rest.remove_prefix(1);
    return rest;
  };
  if (auto r = split("rhombus")) return make_rhombus(detail::parse_int(*r, "rhombus side"));
  if (auto r = split("triangle")) return make_triangle(detail::parse_int(*r, "triangle side"));
  if (auto r = split("hexagon")) return make_hexagon(detail::parse_int(*r, "hexagon side"));
  if (auto r = split("star")) return make_star(detail::parse_int(*r, "star side"));
  if (auto r = split("parallelogram")) {
    auto [a, b] = detail::parse_pair(*r, 'x', "parallelogram sides");
    return make_parallelogram(a, b);
  }
  if (auto r = split("trapezoid")) {
    auto [a, b] = detail::parse_pair(*r, ',', "trapezoid size");
    return make_trapezoid(a, b);
  }
  if (auto r = split("polygon")) return make_polygon(parse_edges(*r));
  throw Error("unknown board '" + std::string(s) + "'");
}

// ---------------------------------------------------------------------------
// Corners and convexity

inline std::vector<CornerInfo> corners(const Board& board) {
  std::vector<CornerInfo> out;
  const auto& edges = board.boundary();
  if (edges.empty()) return out;
  Hole p = board.boundary_origin();
  const std::size_t n = edges.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Dir in = edges[(i + n - 1) % n].dir;
    const Dir outd = edges[i].dir;
    int turn = (index_of(outd) - index_of(in) + 6) % 6;
    if (turn > 3) turn -= 6;
    // turn 0 cannot occur after merging collinear edges; 3 would be a spike
    if (turn != 0 && turn != 3) out.push_back({p, 180 - 60 * turn});
    p = p + step(outd) * edges[i].steps;
  }
  return out;
}

inline bool is_convex(const Board& board) {
  auto cs = corners(board);
  return std::all_of(cs.begin(), cs.end(), [](const CornerInfo& c) { return c.interior_angle <= 120; });
}

/// Holes per side along the boundary walk (steps + 1).
inline std::vector<int> side_lengths(const Board& board) {
  std::vector<int> out;
  for (const Edge& e : board.boundary()) out.push_back(e.steps + 1);
  return out;
}

// ---------------------------------------------------------------------------
// Symmetries

/// Hole bijection induced by a lattice point symmetry that maps the board
/// onto itself. `linear` is the 2x2 integer matrix acting on steps.
struct Symmetry {
  std::array<int, 4> linear{1, 0, 0, 1};  // [a b; c d] : (x,y) -> (a x + b y, c x + d y)
  Hole offset{0, 0};
  std::vector<int> perm;  // hole index -> hole index

  Hole apply(Hole h) const {
    return Hole{linear[0] * h.col + linear[1] * h.row, linear[2] * h.col + linear[3] * h.row} + offset;
  }
  Dir apply(Dir d) const {
    Hole s = step(d);
    return *unit_dir(Hole{linear[0] * s.col + linear[1] * s.row, linear[2] * s.col + linear[3] * s.row});
  }
  bool is_identity() const {
    for (std::size_t i = 0; i < perm.size(); ++i)
      if (perm[i] != static_cast<int>(i)) return false;
    return true;
  }
};

/// The twelve point symmetries of the lattice as linear maps on axial steps.
inline std::vector<std::array<int, 4>> lattice_point_maps() {
  // rot60: (x,y) -> (x - y, x); reflection: (x,y) -> (y,x)
  auto mul = [](const std::array<int, 4>& p, const std::array<int, 4>& q) {
    return std::array<int, 4>{p[0] * q[0] + p[1] * q[2], p[0] * q[1] + p[1] * q[3], p[2] * q[0] + p[3] * q[2],
                              p[2] * q[1] + p[3] * q[3]};
  };
  const std::array<int, 4> rot{1, -1, 1, 0};
  const std::array<int, 4> refl{0, 1, 1, 0};
  std::vector<std::array<int, 4>> maps;
  std::array<int, 4> r{1, 0, 0, 1};
  for (int k = 0; k < 6; ++k) {
    maps.push_back(r);
    maps.push_back(mul(r, refl));
    r = mul(rot, r);
  }
  return maps;
}

/// All symmetries of the board, identity first.
inline std::vector<Symmetry> symmetries(const Board& board) {
  std::vector<Symmetry> out;
  for (const auto& m : lattice_point_maps()) {
    Symmetry s;
    s.linear = m;
    int min_c = 0, min_r = 0;
    bool first = true;
    for (Hole h : board.holes()) {
      Hole t = s.apply(h);
      if (first || t.col < min_c) min_c = t.col;
      if (first || t.row < min_r) min_r = t.row;
      first = false;
    }
    s.offset = Hole{board.min_col() - min_c, board.min_row() - min_r};
    s.perm.resize(static_cast<std::size_t>(board.size()));
    bool ok = true;
    for (int i = 0; i < board.size() && ok; ++i) {
      int j = board.index(s.apply(board.hole(i)));
      if (j < 0) ok = false;
      s.perm[static_cast<std::size_t>(i)] = j;
    }
    if (ok) out.push_back(std::move(s));
  }
  return out;
}

/// Orbits of single holes under the symmetry group; each orbit sorted, orbits
/// ordered by their smallest member.
inline std::vector<std::vector<int>> hole_orbits(const Board& board, const std::vector<Symmetry>& group) {
  std::vector<int> seen(static_cast<std::size_t>(board.size()), 0);
  std::vector<std::vector<int>> orbits;
  for (int i = 0; i < board.size(); ++i) {
    if (seen[static_cast<std::size_t>(i)]) continue;
    std::set<int> orbit;
    for (const auto& g : group) orbit.insert(g.perm[static_cast<std::size_t>(i)]);
    for (int j : orbit) seen[static_cast<std::size_t>(j)] = 1;
    orbits.emplace_back(orbit.begin(), orbit.end());
  }
  return orbits;
}

}  // namespace pegsol
