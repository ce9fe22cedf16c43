#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "etass/numext.hpp"

namespace etass::gf2 {

/* Fixed-length bit vector over GF(2). */
class BitVec {
 public:
  BitVec() = default;
  explicit BitVec(int size) : size_(size), words_((size + 63) / 64, 0) {}
  int size() const { return size_; }
  bool get(int i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
  void set(int i, bool b = true) {
    std::uint64_t mask = 1ULL << (i & 63);
    if (b)
      words_[i >> 6] |= mask;
    else
      words_[i >> 6] &= ~mask;
  }
  void flip(int i) { words_[i >> 6] ^= 1ULL << (i & 63); }
  void operator^=(const BitVec& o);
  bool zero() const;
  int popcount() const;
  /* index of lowest set bit, -1 if none */
  int first_set() const;
  std::vector<int> support() const;
  friend bool operator==(const BitVec& a, const BitVec& b) {
    return a.size_ == b.size_ && a.words_ == b.words_;
  }

 private:
  int size_ = 0;
  std::vector<std::uint64_t> words_;
};

/* Matrix over GF(2), column-vector convention: an r x c matrix maps F^c -> F^r.
   Rows are stored as BitVecs. Coordinate-pair construction has set semantics
   (a repeated pair toggles, so duplicates cancel). */
class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(rows, BitVec(cols)) {}
  static BitMatrix from_entries(int rows, int cols,
                                const std::vector<std::pair<int, int>>& entries);
  static BitMatrix identity(int n);
  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool get(int r, int c) const { return data_[r].get(c); }
  void set(int r, int c, bool b = true) { data_[r].set(c, b); }
  void flip(int r, int c) { data_[r].flip(c); }
  const BitVec& row(int r) const { return data_[r]; }
  BitVec& row(int r) { return data_[r]; }
  BitVec apply(const BitVec& v) const;
  bool zero() const;
  friend BitMatrix operator*(const BitMatrix& a, const BitMatrix& b);
  friend BitMatrix operator+(const BitMatrix& a, const BitMatrix& b);
  friend bool operator==(const BitMatrix& a, const BitMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<BitVec> data_;
};

/* Row-echelon accumulator with deterministic pivot choice (lowest index wins).
   Supports incremental insertion and reduction of further vectors. */
class Echelon {
 public:
  explicit Echelon(int width) : width_(width) {}
  int width() const { return width_; }
  int rank() const { return static_cast<int>(rows_.size()); }
  /* reduce v against the current rows (in place) and return it */
  BitVec reduce(BitVec v) const;
  /* reduce, then insert if nonzero; returns true if the vector enlarged the span */
  bool insert(BitVec v);
  bool contains(const BitVec& v) const { return reduce(v).zero(); }

 private:
  int width_;
  std::vector<BitVec> rows_;   // each with a distinct pivot (first_set)
  std::vector<int> pivots_;    // parallel to rows_
};

int rank(const BitMatrix& m);

/* Basis of { v : m v = 0 }, deterministic: one vector per free column in
   ascending column order, back-substituted against the RREF. */
std::vector<BitVec> kernel_basis(const BitMatrix& m);

/* Basis of the column space, deterministic (columns of m reduced left to right). */
std::vector<BitVec> image_basis(const BitMatrix& m);

struct Subquotient {
  int dim = 0;
  /* representatives of a homology basis, reduced against the boundary echelon;
     deterministic given the two matrices */
  std::vector<BitVec> representatives;
};

/* Homology ker(d_out)/im(d_in) at the middle term of
   F^{cols(d_in)} --d_in--> F^{rows(d_in)=cols(d_out)} --d_out--> F^{rows(d_out)}.
   Throws CompositionError unless d_out * d_in = 0. */
Subquotient subquotient_homology(const BitMatrix& d_in, const BitMatrix& d_out);

/* Labels for the coordinates of some F^n; dimension == labels.size(). */
struct LabeledBasis {
  std::vector<std::string> labels;
  int dim() const { return static_cast<int>(labels.size()); }
};

}  // namespace etass::gf2
