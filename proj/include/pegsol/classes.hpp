#pragma once

// GF(2) position classes.
//
// Every jump flips the three bits (from, over, to). Two positions are
// interconvertible by jumps and un-jumps exactly when their XOR lies in the
// span J of those triples. A board is null-class when the all-ones vector is
// in J, i.e. every position shares a class with its complement.

#include <bit>
#include <cstdint>
#include <vector>

#include "position.hpp"

namespace pegsol {

/// Fixed-length bit vector over GF(2).
class Bits {
 public:
  Bits() = default;
  explicit Bits(int n) : n_(n), w_((static_cast<std::size_t>(n) + 63) / 64, 0) {}
  static Bits from(const Position& p) {
    Bits b(p.board().size());
    b.w_ = p.words();
    return b;
  }

  int size() const { return n_; }
  bool test(int i) const { return (w_[static_cast<std::size_t>(i) >> 6] >> (i & 63)) & 1u; }
  void flip(int i) { w_[static_cast<std::size_t>(i) >> 6] ^= std::uint64_t{1} << (i & 63); }
  void set(int i) { w_[static_cast<std::size_t>(i) >> 6] |= std::uint64_t{1} << (i & 63); }
  Bits& operator^=(const Bits& o) {
    for (std::size_t k = 0; k < w_.size(); ++k) w_[k] ^= o.w_[k];
    return *this;
  }
  bool any() const {
    for (auto x : w_)
      if (x) return true;
    return false;
  }
  /// Lowest set bit, or -1.
  int lowest() const {
    for (std::size_t k = 0; k < w_.size(); ++k)
      if (w_[k]) return static_cast<int>(k * 64) + std::countr_zero(w_[k]);
    return -1;
  }
  friend bool operator==(const Bits&, const Bits&) = default;

 private:
  int n_ = 0;
  std::vector<std::uint64_t> w_;
};

/// Reduced row-echelon basis of the jump-triple span.
class ClassBasis {
 public:
  explicit ClassBasis(const Board& board) : n_(board.size()), pivot_row_(static_cast<std::size_t>(n_), -1) {
    for (int f = 0; f < board.size(); ++f)
      for (Dir d : {Dir::E, Dir::N, Dir::NE}) {
        int o = board.neighbor(f, d);
        if (o < 0) continue;
        int t = board.neighbor(o, d);
        if (t < 0) continue;
        Bits v(n_);
        v.flip(f);
        v.flip(o);
        v.flip(t);
        insert(std::move(v));
      }
  }

  int rank() const { return static_cast<int>(rows_.size()); }
  int holes() const { return n_; }
  /// Number of position classes is 2^quotient_dimension().
  int quotient_dimension() const { return n_ - rank(); }
  const std::vector<Bits>& rows() const { return rows_; }

  Bits reduce(Bits x) const {
    for (std::size_t k = 0; k < rows_.size(); ++k)
      if (x.test(pivots_[k])) x ^= rows_[k];
    return x;
  }
  bool in_span(const Bits& x) const { return !reduce(x).any(); }

  /// Columns that carry no pivot; the class of a position is its reduced
  /// vector restricted to these.
  std::vector<int> free_columns() const {
    std::vector<int> out;
    for (int i = 0; i < n_; ++i)
      if (pivot_row_[static_cast<std::size_t>(i)] < 0) out.push_back(i);
    return out;
  }

  /// Per-hole class signatures packed into 64 bits (quotient dimension must
  /// be at most 64). signature(P) is the XOR over the pegs of P.
  std::vector<std::uint64_t> hole_signatures() const {
    auto cols = free_columns();
    if (cols.size() > 64) throw Error("class quotient too large for packed signatures");
    std::vector<std::uint64_t> sig(static_cast<std::size_t>(n_), 0);
    for (int h = 0; h < n_; ++h) {
      Bits e(n_);
      e.set(h);
      Bits r = reduce(e);
      for (std::size_t k = 0; k < cols.size(); ++k)
        if (r.test(cols[k])) sig[static_cast<std::size_t>(h)] |= std::uint64_t{1} << k;
    }
    return sig;
  }

 private:
  void insert(Bits v) {
    v = reduce(std::move(v));
    int p = v.lowest();
    if (p < 0) return;
    for (Bits& r : rows_)
      if (r.test(p)) r ^= v;
    pivot_row_[static_cast<std::size_t>(p)] = static_cast<int>(rows_.size());
    pivots_.push_back(p);
    rows_.push_back(std::move(v));
  }

  int n_;
  std::vector<Bits> rows_;
  std::vector<int> pivots_;
  std::vector<int> pivot_row_;
};

inline ClassBasis class_basis(const Board& board) { return ClassBasis(board); }

inline bool is_null_class(const Board& board) {
  ClassBasis b(board);
  Bits ones(board.size());
  for (int i = 0; i < board.size(); ++i) ones.set(i);
  return b.in_span(ones);
}

inline bool same_class(const ClassBasis& basis, const Position& p, const Position& q) {
  Bits x = Bits::from(p);
  x ^= Bits::from(q);
  return basis.in_span(x);
}

inline bool same_class(const Position& p, const Position& q) { return same_class(ClassBasis(p.board()), p, q); }

}  // namespace pegsol
