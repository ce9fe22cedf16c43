#include "etass/gf2.hpp"

#include <bit>

namespace etass::gf2 {

void BitVec::operator^=(const BitVec& o) {
  if (o.size_ != size_) throw InternalError("BitVec xor: size mismatch");
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= o.words_[i];
}

bool BitVec::zero() const {
  for (auto w : words_)
    if (w) return false;
  return true;
}

int BitVec::popcount() const {
  int n = 0;
  for (auto w : words_) n += std::popcount(w);
  return n;
}

int BitVec::first_set() const {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i]) return static_cast<int>(i) * 64 + std::countr_zero(words_[i]);
  return -1;
}

std::vector<int> BitVec::support() const {
  std::vector<int> out;
  for (int i = 0; i < size_; ++i)
    if (get(i)) out.push_back(i);
  return out;
}

BitMatrix BitMatrix::from_entries(int rows, int cols,
                                  const std::vector<std::pair<int, int>>& entries) {
  BitMatrix m(rows, cols);
  for (auto [r, c] : entries) {
    if (r < 0 || r >= rows || c < 0 || c >= cols)
      throw InternalError("BitMatrix: entry out of range");
    m.flip(r, c);
  }
  return m;
}

BitMatrix BitMatrix::identity(int n) {
  BitMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.set(i, i);
  return m;
}

BitVec BitMatrix::apply(const BitVec& v) const {
  if (v.size() != cols_) throw InternalError("BitMatrix apply: size mismatch");
  BitVec out(rows_);
  for (int r = 0; r < rows_; ++r) {
    BitVec t = data_[r];
    // row . v mod 2
    int parity = 0;
    for (int c : t.support()) parity ^= v.get(c) ? 1 : 0;
    if (parity) out.set(r);
  }
  return out;
}

BitMatrix operator*(const BitMatrix& a, const BitMatrix& b) {
  if (a.cols_ != b.rows_) throw InternalError("BitMatrix mul: shape mismatch");
  BitMatrix out(a.rows_, b.cols_);
  for (int r = 0; r < a.rows_; ++r)
    for (int k : a.data_[r].support()) out.data_[r] ^= b.data_[k];
  return out;
}

BitMatrix operator+(const BitMatrix& a, const BitMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
    throw InternalError("BitMatrix add: shape mismatch");
  BitMatrix out = a;
  for (int r = 0; r < a.rows_; ++r) out.data_[r] ^= b.data_[r];
  return out;
}

bool BitMatrix::zero() const {
  for (const auto& r : data_)
    if (!r.zero()) return false;
  return true;
}

BitVec Echelon::reduce(BitVec v) const {
  for (std::size_t i = 0; i < rows_.size(); ++i)
    if (v.get(pivots_[i])) v ^= rows_[i];
  return v;
}

bool Echelon::insert(BitVec v) {
  v = reduce(std::move(v));
  int p = v.first_set();
  if (p < 0) return false;
  // keep rows sorted by pivot so reduce stays a single pass
  std::size_t pos = 0;
  while (pos < pivots_.size() && pivots_[pos] < p) ++pos;
  rows_.insert(rows_.begin() + pos, std::move(v));
  pivots_.insert(pivots_.begin() + pos, p);
  return true;
}

int rank(const BitMatrix& m) {
  Echelon e(m.cols());
  for (int r = 0; r < m.rows(); ++r) e.insert(m.row(r));
  return e.rank();
}

std::vector<BitVec> kernel_basis(const BitMatrix& m) {
  // row-reduce, tracking pivot columns
  std::vector<BitVec> rows;
  std::vector<int> pivots;
  for (int r = 0; r < m.rows(); ++r) {
    BitVec v = m.row(r);
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (v.get(pivots[i])) v ^= rows[i];
    int p = v.first_set();
    if (p < 0) continue;
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (rows[i].get(p)) rows[i] ^= v;
    rows.push_back(v);
    pivots.push_back(p);
  }
  std::vector<bool> is_pivot(m.cols(), false);
  for (int p : pivots) is_pivot[p] = true;
  std::vector<BitVec> basis;
  for (int c = 0; c < m.cols(); ++c) {
    if (is_pivot[c]) continue;
    BitVec v(m.cols());
    v.set(c);
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (rows[i].get(c)) v.set(pivots[i]);
    basis.push_back(v);
  }
  return basis;
}

std::vector<BitVec> image_basis(const BitMatrix& m) {
  Echelon e(m.rows());
  std::vector<BitVec> basis;
  for (int c = 0; c < m.cols(); ++c) {
    BitVec col(m.rows());
    for (int r = 0; r < m.rows(); ++r)
      if (m.get(r, c)) col.set(r);
    if (e.insert(col)) basis.push_back(col);
  }
  return basis;
}

Subquotient subquotient_homology(const BitMatrix& d_in, const BitMatrix& d_out) {
  if (d_in.rows() != d_out.cols())
    throw CompositionError("subquotient_homology: middle dimensions differ");
  if (!(d_out * d_in).zero())
    throw CompositionError("subquotient_homology: d_out * d_in != 0");
  Echelon boundaries(d_in.rows());
  for (const auto& v : image_basis(d_in)) boundaries.insert(v);
  Subquotient h;
  Echelon chosen(d_in.rows());
  for (const auto& z : kernel_basis(d_out)) {
    BitVec red = chosen.reduce(boundaries.reduce(z));
    if (red.zero()) continue;
    chosen.insert(red);
    h.representatives.push_back(red);
  }
  h.dim = static_cast<int>(h.representatives.size());
  return h;
}

}  // namespace etass::gf2
