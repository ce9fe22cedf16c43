#pragma once

#include <optional>
#include <string>
#include <vector>

#include "etass/fields.hpp"
#include "etass/point_cohomology.hpp"

namespace etass::e1 {

/* Monomial alpha1^a alpha3^b alpha4^c in the first page of the localized
   slice spectral sequence; alpha1 is invertible, alpha4 squares to zero. */
struct SliceGenerator {
  int a = 0;  // alpha1 exponent, any integer
  int b = 0;  // alpha3 exponent, >= 0
  int c = 0;  // alpha4 exponent, 0 or 1
  int slice() const { return a + 3 * b + 4 * c; }
  int stem() const { return 2 * b + 3 * c; }
  int weight() const { return slice(); }
  std::string label() const;
  friend bool operator==(const SliceGenerator&, const SliceGenerator&) = default;
};

/* alpha1-normalized generator of the given stem (a = 0); stems are the
   nonnegative integers other than 1. */
std::optional<SliceGenerator> generator_at(int stem);
std::vector<SliceGenerator> generators_up_to(int max_stem);
/* alpha1-translate of g landing in slice degree q */
SliceGenerator at_slice(const SliceGenerator& g, int q);

/* First-differential matrix entry feeding the stem-i summand into the stem-j
   row. Stored as the displayed block with joint 4-periodic extension. */
point::Op d1_entry(int column_stem, int row_stem);
/* Same for the even-stem kw family (stored from its own displayed block). */
point::Op kw_d1_entry(int column_stem, int row_stem);
/* Pairs inside the stored block where the block and 4-periodicity would
   disagree, ignoring the vacuous stem-1 slots. Expected empty. */
std::vector<std::pair<int, int>> d1_block_periodicity_conflicts();
/* Unit-map component on the stem-i summand: identity on even stems,
   Sq1 into stem i+1 on odd stems. */
point::Op unit_map_op(int column_stem);

/* One generator summand inside a chart cell: tau^tau * k^M_{milnor_degree},
   attached to the stem-gen_stem generator in the cell's slice degree. */
struct CellTag {
  int gen_stem = 0;
  int tau = 0;
  int milnor_degree = 0;
  friend bool operator==(const CellTag&, const CellTag&) = default;
};

struct ChartCell {
  int q = 0;  // filtration (slice degree)
  int m = 0;  // stem
  int n = 0;  // weight
  std::vector<CellTag> tags;
  std::vector<int> offsets;  // basis offset of each tag's coordinate block
  gf2::LabeledBasis basis;
  int dim() const { return basis.dim(); }
  /* offset of the (gen_stem) block, or nullopt when that summand is zero */
  std::optional<int> tag_offset(int gen_stem) const;
  std::optional<CellTag> tag_at(int gen_stem) const;
};

/* E1 chart of one weight over one field: all cells with n <= q <=
   max_filtration and 0 <= m <= max_stem, plus the d1 matrices between them.
   Immutable once built. */
class Chart {
 public:
  static Chart sphere(const fields::Field& f, int weight, int max_stem,
                      int max_filtration);
  static Chart kw(const fields::Field& f, int weight, int max_stem,
                  int max_filtration);

  const fields::Field& field() const { return field_; }
  int weight() const { return n_; }
  int max_stem() const { return max_stem_; }
  int max_filtration() const { return max_q_; }
  bool is_kw() const { return kw_; }

  /* cells outside the stored window that are structurally zero come back as
     an empty cell; q > max_filtration throws */
  const ChartCell& cell(int q, int m) const;
  /* matrix of d1 : cell(q, m) -> cell(q+1, m-1); q = max_filtration throws
     HeadroomError since the target is outside the computed window */
  const gf2::BitMatrix& d1(int q, int m) const;

 private:
  Chart() = default;
  static Chart build(const fields::Field& f, int weight, int max_stem,
                     int max_filtration, bool kw);
  point::Op entry(int column_stem, int row_stem) const;
  std::vector<int> gen_stems(int max) const;  // valid generator stems <= max

  fields::Field field_;
  int n_ = 0;
  int max_stem_ = 0;
  int max_q_ = 0;
  bool kw_ = false;
  std::vector<std::vector<ChartCell>> cells_;       // [q - n][m]
  std::vector<std::vector<gf2::BitMatrix>> d1s_;    // [q - n][m], q < max_q
  ChartCell empty_;
};

}  // namespace etass::e1
