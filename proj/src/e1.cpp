#include "etass/e1.hpp"

#include <map>

namespace etass::e1 {

using point::Op;

namespace {

std::string power(const char* sym, int e) {
  if (e == 0) return "";
  if (e == 1) return sym;
  return std::string(sym) + "^" + std::to_string(e);
}

std::string join_parts(std::initializer_list<std::string> parts) {
  std::string out;
  for (const auto& p : parts) {
    if (p.empty()) continue;
    if (!out.empty()) out += "*";
    out += p;
  }
  return out.empty() ? "1" : out;
}

constexpr Op Z = Op::Zero, S2 = Op::Sq2, T = Op::Tau, R = Op::Rho,
             S31 = Op::Sq3Sq1, S2R = Op::Sq2PlusRhoSq1, S213 = Op::Sq2Sq1PlusSq3;

/* displayed d1 block: rows = target stem 0..8, cols = source stem 0..6
   (stem 1 slots are vacuous and stored as zero) */
constexpr Op kSphereBlock[9][7] = {
    {S2, Z, T, Z, Z, Z, Z},        // into stem 0
    {Z, Z, Z, Z, Z, Z, Z},         // into stem 1 (no summand)
    {S31, Z, S2R, Z, Z, Z, Z},     // into stem 2
    {Z, Z, Z, S2, Z, T, Z},        // into stem 3
    {Z, Z, S31, S213, S2, R, T},   // into stem 4
    {Z, Z, Z, S31, Z, S2R, Z},     // into stem 5
    {Z, Z, Z, Z, S31, S213, S2R},  // into stem 6
    {Z, Z, Z, Z, Z, S31, Z},       // into stem 7
    {Z, Z, Z, Z, Z, Z, S31},       // into stem 8
};

/* displayed kw d1 block: even stems only, rows 0,2,4,6,8 x cols 0,2,4,6 */
constexpr Op kKwBlock[5][4] = {
    {S2, T, Z, Z},
    {S31, S2R, Z, Z},
    {Z, S31, S2, T},
    {Z, Z, S31, S2R},
    {Z, Z, Z, S31},
};

}  // namespace

std::string SliceGenerator::label() const {
  return join_parts({power("a1", a), power("a3", b), power("a4", c)});
}

std::optional<SliceGenerator> generator_at(int stem) {
  if (stem < 0 || stem == 1) return std::nullopt;
  SliceGenerator g;
  if (stem % 2 == 0) {
    g.b = stem / 2;
  } else {
    g.b = (stem - 3) / 2;
    g.c = 1;
  }
  return g;
}

std::vector<SliceGenerator> generators_up_to(int max_stem) {
  if (max_stem < 0) throw ConfigError("generators_up_to: negative stem bound");
  std::vector<SliceGenerator> out;
  for (int m = 0; m <= max_stem; ++m)
    if (auto g = generator_at(m)) out.push_back(*g);
  return out;
}

SliceGenerator at_slice(const SliceGenerator& g, int q) {
  SliceGenerator h = g;
  h.a = q - 3 * g.b - 4 * g.c;
  return h;
}

Op d1_entry(int column_stem, int row_stem) {
  int c = column_stem, r = row_stem;
  if (c < 0 || r < 0) return Op::Zero;
  while (c > 6 || r > 8) {
    c -= 4;
    r -= 4;
  }
  if (c < 0 || r < 0) return Op::Zero;
  return kSphereBlock[r][c];
}

Op kw_d1_entry(int column_stem, int row_stem) {
  int c = column_stem, r = row_stem;
  if (c < 0 || r < 0 || c % 2 != 0 || r % 2 != 0) return Op::Zero;
  while (c > 6 || r > 8) {
    c -= 4;
    r -= 4;
  }
  if (c < 0 || r < 0) return Op::Zero;
  return kKwBlock[r / 2][c / 2];
}

std::vector<std::pair<int, int>> d1_block_periodicity_conflicts() {
  std::vector<std::pair<int, int>> out;
  for (int c = 0; c + 4 <= 6; ++c)
    for (int r = 0; r + 4 <= 8; ++r) {
      if (c == 1 || r == 1) continue;  // vacuous stem-1 slots carry no data
      if (kSphereBlock[r][c] != kSphereBlock[r + 4][c + 4]) out.emplace_back(c, r);
    }
  return out;
}

Op unit_map_op(int column_stem) {
  if (column_stem < 0) throw ConfigError("unit_map_op: negative stem");
  return column_stem % 2 == 0 ? Op::One : Op::Sq1;
}

std::optional<int> ChartCell::tag_offset(int gen_stem) const {
  for (std::size_t i = 0; i < tags.size(); ++i)
    if (tags[i].gen_stem == gen_stem) return offsets[i];
  return std::nullopt;
}

std::optional<CellTag> ChartCell::tag_at(int gen_stem) const {
  for (const auto& t : tags)
    if (t.gen_stem == gen_stem) return t;
  return std::nullopt;
}

std::vector<int> Chart::gen_stems(int max) const {
  std::vector<int> out;
  for (int i = 0; i <= max; ++i) {
    if (i == 1) continue;
    if (kw_ && i % 2 != 0) continue;
    out.push_back(i);
  }
  return out;
}

point::Op Chart::entry(int column_stem, int row_stem) const {
  return kw_ ? kw_d1_entry(column_stem, row_stem) : d1_entry(column_stem, row_stem);
}

Chart Chart::sphere(const fields::Field& f, int weight, int max_stem,
                    int max_filtration) {
  return build(f, weight, max_stem, max_filtration, false);
}

Chart Chart::kw(const fields::Field& f, int weight, int max_stem, int max_filtration) {
  return build(f, weight, max_stem, max_filtration, true);
}

Chart Chart::build(const fields::Field& f, int weight, int max_stem,
                   int max_filtration, bool kw) {
  if (!f.valid()) throw ConfigError("chart: invalid field");
  if (max_stem < 0) throw ConfigError("chart: max_stem must be >= 0");
  if (max_filtration < weight)
    throw ConfigError("chart: filtration window ends below the weight");
  Chart ch;
  ch.field_ = f;
  ch.n_ = weight;
  ch.max_stem_ = max_stem;
  ch.max_q_ = max_filtration;
  ch.kw_ = kw;

  int height = max_filtration - weight + 1;
  ch.cells_.resize(static_cast<std::size_t>(height));
  for (int qi = 0; qi < height; ++qi) {
    auto& row = ch.cells_[static_cast<std::size_t>(qi)];
    row.resize(static_cast<std::size_t>(max_stem + 1));
    for (int m = 0; m <= max_stem; ++m) {
      ChartCell& cell = row[static_cast<std::size_t>(m)];
      cell.q = weight + qi;
      cell.m = m;
      cell.n = weight;
      for (int i : ch.gen_stems(m)) {
        int j = m - i;
        if (j > qi) continue;  // tau exponent exceeds q - n
        int d = qi - j;
        int dim = f.milnor_dim(d);
        if (dim == 0) continue;
        cell.tags.push_back({i, j, d});
        cell.offsets.push_back(cell.basis.dim());
        std::string gen_label;
        if (kw) {
          int k = i / 2;
          gen_label = join_parts({power("eta", cell.q - 3 * k), power("sqrtb", k)});
        } else {
          gen_label = at_slice(*generator_at(i), cell.q).label();
        }
        if (gen_label == "1") gen_label.clear();
        auto milnor = f.milnor_basis(d);
        for (const auto& x : milnor.labels)
          cell.basis.labels.push_back(
              join_parts({gen_label, power("tau", j), x == "1" ? "" : x}));
      }
    }
  }

  // d1 matrices, including a zero-source row below the weight line
  std::map<std::pair<int, int>, gf2::BitMatrix> rho_cache;
  auto rho_block = [&](int r, int d) -> const gf2::BitMatrix& {
    auto key = std::make_pair(r, d);
    auto it = rho_cache.find(key);
    if (it == rho_cache.end()) {
      gf2::BitMatrix m = r == 0 ? gf2::BitMatrix::identity(f.milnor_dim(d))
                                : f.rho_mul_matrix(r, d);
      it = rho_cache.emplace(key, std::move(m)).first;
    }
    return it->second;
  };

  ch.d1s_.resize(static_cast<std::size_t>(height));  // from q = weight-1 .. max_q-1
  for (int qi = -1; qi < height - 1; ++qi) {
    auto& row = ch.d1s_[static_cast<std::size_t>(qi + 1)];
    row.reserve(static_cast<std::size_t>(max_stem + 1));
    for (int m = 0; m <= max_stem; ++m) {
      const ChartCell* src = qi >= 0 ? &ch.cells_[static_cast<std::size_t>(qi)]
                                           [static_cast<std::size_t>(m)]
                                     : nullptr;
      const ChartCell* dst =
          m >= 1 ? &ch.cells_[static_cast<std::size_t>(qi + 1)]
                             [static_cast<std::size_t>(m - 1)]
                 : nullptr;
      int src_dim = src ? src->dim() : 0;
      int dst_dim = dst ? dst->dim() : 0;
      gf2::BitMatrix mat(dst_dim, src_dim);
      if (src && src_dim > 0) {
        for (std::size_t ti = 0; ti < src->tags.size(); ++ti) {
          const CellTag& tag = src->tags[ti];
          int co = src->offsets[ti];
          for (int i2 = tag.gen_stem - 2; i2 <= tag.gen_stem + 2; ++i2) {
            Op op = ch.entry(tag.gen_stem, i2);
            point::OpAction act = point::op_on_tau_power(op, tag.tau);
            if (!act.nonzero) continue;
            if (i2 == 1 || i2 < 0 || i2 > m - 1 || !dst)
              throw InternalError("d1: nonzero entry into a vacuous summand");
            int j2 = (m - 1) - i2;
            int d2 = (qi + 1) - j2;
            if (act.tau_out != j2 || tag.milnor_degree + act.rho_power != d2)
              throw InternalError("d1: operation bidegree mismatch");
            if (f.milnor_dim(d2) == 0) continue;
            auto ro = dst->tag_offset(i2);
            if (!ro) throw InternalError("d1: target summand missing");
            const gf2::BitMatrix& blk = rho_block(act.rho_power, tag.milnor_degree);
            for (int cc = 0; cc < blk.cols(); ++cc)
              for (int rr = 0; rr < blk.rows(); ++rr)
                if (blk.get(rr, cc)) mat.set(*ro + rr, co + cc);
          }
        }
      }
      row.push_back(std::move(mat));
    }
  }
  return ch;
}

const ChartCell& Chart::cell(int q, int m) const {
  if (q > max_q_ || m > max_stem_)
    throw HeadroomError("chart cell (" + std::to_string(q) + "," + std::to_string(m) +
                        ") outside the computed window");
  if (m < 0 || q < n_) return empty_;
  return cells_[static_cast<std::size_t>(q - n_)][static_cast<std::size_t>(m)];
}

const gf2::BitMatrix& Chart::d1(int q, int m) const {
  if (q >= max_q_ || m > max_stem_)
    throw HeadroomError("d1 at (" + std::to_string(q) + "," + std::to_string(m) +
                        ") needs cells outside the computed window");
  if (m < 0 || q < n_ - 1) {
    static const gf2::BitMatrix kEmpty(0, 0);
    return kEmpty;
  }
  return d1s_[static_cast<std::size_t>(q - n_ + 1)][static_cast<std::size_t>(m)];
}

}  // namespace etass::e1
