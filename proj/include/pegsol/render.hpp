#pragma once

// ASCII and SVG pictures of positions, sweeps and sweep graphs. Hole (c, r)
// is drawn at x = c - r/2, y = r * sqrt(3)/2, which makes the six steps
// equal length.

#include <cmath>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "sweep.hpp"

namespace pegsol {

namespace detail {

inline int ascii_x(const Board& b, Hole h) { return 2 * (h.col - b.min_col()) - (h.row - b.min_row()) + (b.max_row() - b.min_row()); }

// Rows from the top, with a row number in front and column letters below.
inline std::string ascii_grid(const Board& b, const std::map<Hole, char>& marks, char empty) {
  int width = 0;
  for (Hole h : b.holes()) width = std::max(width, ascii_x(b, h) + 1);
  const int label = static_cast<int>(std::to_string(b.max_row()).size());
  std::ostringstream out;
  for (int r = b.max_row(); r >= b.min_row(); --r) {
    std::string line(static_cast<std::size_t>(width), ' ');
    bool any = false;
    for (int c = b.min_col(); c <= b.max_col(); ++c) {
      Hole h{c, r};
      if (!b.contains(h)) continue;
      auto it = marks.find(h);
      line[static_cast<std::size_t>(ascii_x(b, h))] = it == marks.end() ? empty : it->second;
      any = true;
    }
    if (!any) continue;
    while (!line.empty() && line.back() == ' ') line.pop_back();
    std::string num = std::to_string(r);
    out << std::string(static_cast<std::size_t>(label) - num.size(), ' ') << num << "  " << line << "\n";
  }
  // column letters sit under the bottom row of each column
  std::string foot(static_cast<std::size_t>(width), ' ');
  bool single_letters = b.max_col() <= 26;
  if (single_letters) {
    for (int c = b.min_col(); c <= b.max_col(); ++c) {
      int lowest = -1;
      for (int r = b.min_row(); r <= b.max_row() && lowest < 0; ++r)
        if (b.contains({c, r})) lowest = r;
      if (lowest == b.min_row()) foot[static_cast<std::size_t>(ascii_x(b, {c, lowest}))] = column_name(c)[0];
    }
    while (!foot.empty() && foot.back() == ' ') foot.pop_back();
    out << std::string(static_cast<std::size_t>(label), ' ') << "  " << foot << "\n";
  }
  return out.str();
}

struct Point {
  double x, y;
};

inline Point svg_point(const Board& b, Hole h, double unit, double margin) {
  const double x = (h.col - b.min_col()) - 0.5 * (h.row - b.min_row()) + 0.5 * (b.max_row() - b.min_row());
  const double y = (b.max_row() - h.row) * std::sqrt(3.0) / 2.0;
  return {margin + x * unit, margin + y * unit};
}

inline std::string svg_open(const Board& b, double unit, double margin) {
  double w = 0, h = 0;
  for (Hole x : b.holes()) {
    auto p = svg_point(b, x, unit, margin);
    w = std::max(w, p.x);
    h = std::max(h, p.y);
  }
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << static_cast<int>(w + margin) << "\" height=\""
      << static_cast<int>(h + margin) << "\" viewBox=\"0 0 " << static_cast<int>(w + margin) << " "
      << static_cast<int>(h + margin) << "\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  return out.str();
}

inline std::string fmt(double v) {
  std::ostringstream s;
  s.setf(std::ios::fixed);
  s.precision(1);
  s << v;
  return s.str();
}

}  // namespace detail

/// 'o' for a peg, '.' for an empty hole.
inline std::string render_ascii(const Position& p) {
  std::map<Hole, char> marks;
  for (Hole h : p.pegs()) marks[h] = 'o';
  return detail::ascii_grid(p.board(), marks, '.');
}

/// Pre-sweep picture: S is the mover, x a captured peg, * a landing hole
/// (E marks the final one).
inline std::string render_ascii(const SweepPattern& s) {
  std::map<Hole, char> marks;
  for (std::size_t k = 1; k < s.path.size(); ++k) marks[s.path[k]] = '*';
  for (Hole h : s.swept()) marks[h] = 'x';
  marks[s.end()] = 'E';
  marks[s.start()] = 'S';
  return detail::ascii_grid(*s.board, marks, '.');
}

struct SvgStyle {
  double unit = 36.0;
  double margin = 28.0;
  bool labels = true;
};

/// Board with pegs filled; an optional sweep is drawn as a red polyline
/// over its landing holes.
inline std::string render_svg(const Position& p, const std::optional<SweepPattern>& sweep = std::nullopt,
                              const SvgStyle& style = {}) {
  const Board& b = p.board();
  std::ostringstream out;
  out << detail::svg_open(b, style.unit, style.margin);
  const double r = style.unit * 0.3;
  for (int i = 0; i < b.size(); ++i) {
    auto pt = detail::svg_point(b, b.hole(i), style.unit, style.margin);
    out << "<circle cx=\"" << detail::fmt(pt.x) << "\" cy=\"" << detail::fmt(pt.y) << "\" r=\"" << detail::fmt(r)
        << "\" fill=\"" << (p.test(i) ? "#333" : "white") << "\" stroke=\"#333\" stroke-width=\"1.5\"/>\n";
    if (style.labels)
      out << "<text x=\"" << detail::fmt(pt.x) << "\" y=\"" << detail::fmt(pt.y + r + 10)
          << "\" font-size=\"9\" text-anchor=\"middle\" fill=\"#888\">" << hole_name(b.hole(i)) << "</text>\n";
  }
  if (sweep && sweep->length() > 0) {
    out << "<polyline fill=\"none\" stroke=\"#d22\" stroke-width=\"2.5\" points=\"";
    for (std::size_t k = 0; k < sweep->path.size(); ++k) {
      auto pt = detail::svg_point(b, sweep->path[k], style.unit, style.margin);
      out << (k ? " " : "") << detail::fmt(pt.x) << "," << detail::fmt(pt.y);
    }
    out << "\"/>\n";
  }
  out << "</svg>\n";
  return out.str();
}

inline std::string render_svg(const SweepPattern& s, const SvgStyle& style = {}) {
  return render_svg(s.pre_sweep_position(), s, style);
}

/// Sweep graph: board holes in grey, vertices as circles, one edge per
/// candidate jump, odd-degree vertices in red.
inline std::string render_svg(const SweepGraph& g, const SvgStyle& style = {}) {
  const Board& b = *g.board;
  std::ostringstream out;
  out << detail::svg_open(b, style.unit, style.margin);
  for (Hole h : b.holes()) {
    auto pt = detail::svg_point(b, h, style.unit, style.margin);
    out << "<circle cx=\"" << detail::fmt(pt.x) << "\" cy=\"" << detail::fmt(pt.y)
        << "\" r=\"2\" fill=\"#bbb\"/>\n";
  }
  for (const auto& e : g.edges) {
    auto a = detail::svg_point(b, g.hole_of_vertex(e.a), style.unit, style.margin);
    auto c = detail::svg_point(b, g.hole_of_vertex(e.b), style.unit, style.margin);
    out << "<line x1=\"" << detail::fmt(a.x) << "\" y1=\"" << detail::fmt(a.y) << "\" x2=\"" << detail::fmt(c.x)
        << "\" y2=\"" << detail::fmt(c.y) << "\" stroke=\"#2a6\" stroke-width=\"2\"/>\n";
  }
  const double r = style.unit * 0.22;
  for (int v = 0; v < g.vertex_count(); ++v) {
    auto pt = detail::svg_point(b, g.hole_of_vertex(v), style.unit, style.margin);
    const bool odd = g.degree(v) % 2 == 1;
    out << "<circle cx=\"" << detail::fmt(pt.x) << "\" cy=\"" << detail::fmt(pt.y) << "\" r=\"" << detail::fmt(r)
        << "\" fill=\"" << (odd ? "#d22" : "white") << "\" stroke=\"#333\" stroke-width=\"1.5\""
        << (odd ? " class=\"odd\"" : "") << "/>\n";
  }
  out << "</svg>\n";
  return out.str();
}

/// Text summary of a sweep graph: vertex count, edges and odd vertices.
inline std::string render_ascii(const SweepGraph& g) {
  std::map<Hole, char> marks;
  for (int v = 0; v < g.vertex_count(); ++v) marks[g.hole_of_vertex(v)] = g.degree(v) % 2 ? '#' : 'O';
  for (int u : g.uncovered) marks[g.board->hole(u)] = '?';
  return detail::ascii_grid(*g.board, marks, '.');
}

}  // namespace pegsol
