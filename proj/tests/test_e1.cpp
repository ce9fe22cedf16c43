#include "doctest.h"
#include "etass/e1.hpp"

using namespace etass;
using point::Op;

TEST_CASE("slice generators") {
  auto gens = e1::generators_up_to(10);
  std::vector<int> stems;
  for (const auto& g : gens) stems.push_back(g.stem());
  CHECK(stems == std::vector<int>{0, 2, 3, 4, 5, 6, 7, 8, 9, 10});
  CHECK_FALSE(e1::generator_at(1).has_value());
  CHECK_FALSE(e1::generator_at(-2).has_value());

  e1::SliceGenerator g5 = *e1::generator_at(5);  // a3 * a4
  CHECK(g5.b == 1);
  CHECK(g5.c == 1);
  CHECK(g5.slice() == 7);
  CHECK(g5.label() == "a3*a4");

  e1::SliceGenerator moved = e1::at_slice(g5, 3);
  CHECK(moved.stem() == 5);
  CHECK(moved.slice() == 3);
  CHECK(moved.a == -4);
  CHECK(moved.label() == "a1^-4*a3*a4");
  CHECK_THROWS_AS(e1::generators_up_to(-1), ConfigError);
}

TEST_CASE("first-differential block: frozen entries") {
  CHECK(e1::d1_entry(0, 0) == Op::Sq2);
  CHECK(e1::d1_entry(2, 0) == Op::Tau);
  CHECK(e1::d1_entry(0, 2) == Op::Sq3Sq1);
  CHECK(e1::d1_entry(2, 2) == Op::Sq2PlusRhoSq1);
  CHECK(e1::d1_entry(3, 3) == Op::Sq2);
  CHECK(e1::d1_entry(5, 3) == Op::Tau);
  CHECK(e1::d1_entry(5, 4) == Op::Rho);
  CHECK(e1::d1_entry(6, 4) == Op::Tau);
  CHECK(e1::d1_entry(3, 4) == Op::Sq2Sq1PlusSq3);
  CHECK(e1::d1_entry(4, 6) == Op::Sq3Sq1);
  CHECK(e1::d1_entry(7, 7) == Op::Sq2);
  CHECK(e1::d1_entry(0, 3) == Op::Zero);
  CHECK(e1::d1_entry(-1, 2) == Op::Zero);
}

TEST_CASE("block extends 4-periodically along the diagonal") {
  CHECK(e1::d1_block_periodicity_conflicts().empty());
  // column 1 is the lone edge artifact: stem 1 carries no generator, so its
  // column is zero while the stem-5 column it would continue is genuine
  for (int r = 0; r <= 30; ++r) CHECK(e1::d1_entry(1, r) == Op::Zero);
  for (int c = 0; c <= 30; ++c) {
    if (c == 1) continue;
    for (int r = 0; r <= 30; ++r) CHECK(e1::d1_entry(c, r) == e1::d1_entry(c + 4, r + 4));
  }
}

TEST_CASE("nonzero entries stay in the five-band corridor") {
  for (int c = 0; c <= 40; ++c)
    for (int r = 0; r <= 42; ++r) {
      Op op = e1::d1_entry(c, r);
      if (op == Op::Zero) continue;
      int off = r - c;
      CHECK(off >= -2);
      CHECK(off <= 2);
      switch (off) {
        case -2: CHECK(op == Op::Tau); break;
        case -1: CHECK(op == Op::Rho); break;
        case 0: CHECK((op == Op::Sq2 || op == Op::Sq2PlusRhoSq1)); break;
        case 1: CHECK(op == Op::Sq2Sq1PlusSq3); break;
        case 2: CHECK(op == Op::Sq3Sq1); break;
      }
    }
}

TEST_CASE("kw block is the even-stem restriction") {
  for (int c = 0; c <= 24; c += 2)
    for (int r = 0; r <= 24; r += 2) CHECK(e1::kw_d1_entry(c, r) == e1::d1_entry(c, r));
  CHECK(e1::kw_d1_entry(3, 3) == Op::Zero);
  CHECK(e1::kw_d1_entry(2, 3) == Op::Zero);
}

TEST_CASE("unit map components") {
  CHECK(e1::unit_map_op(0) == Op::One);
  CHECK(e1::unit_map_op(2) == Op::One);
  CHECK(e1::unit_map_op(3) == Op::Sq1);
  CHECK(e1::unit_map_op(5) == Op::Sq1);
}

TEST_CASE("chart cells: tags, offsets, window behaviour") {
  fields::Field r = fields::Field::parse("R");
  e1::Chart chart = e1::Chart::sphere(r, 0, 10, 14);
  CHECK(chart.weight() == 0);
  CHECK_FALSE(chart.is_kw());

  const e1::ChartCell& cell = chart.cell(3, 4);
  CHECK(cell.q == 3);
  CHECK(cell.m == 4);
  CHECK(cell.dim() == static_cast<int>(cell.basis.labels.size()));
  int total = 0;
  for (std::size_t i = 0; i < cell.tags.size(); ++i) {
    const e1::CellTag& t = cell.tags[i];
    CHECK(t.gen_stem + t.tau == 4);
    CHECK(t.tau + t.milnor_degree == 3);
    CHECK(cell.offsets[i] == total);
    total += r.milnor_dim(t.milnor_degree);
  }
  CHECK(total == cell.dim());
  CHECK(cell.tag_offset(4).has_value());
  CHECK_FALSE(cell.tag_offset(1).has_value());

  // stem 1 carries only the tau-translate of the stem-0 generator
  const e1::ChartCell& one = chart.cell(3, 1);
  REQUIRE(one.tags.size() == 1);
  CHECK(one.tags[0] == e1::CellTag{0, 1, 2});

  // below the weight the chart is structurally zero
  CHECK(chart.cell(-1, 4).dim() == 0);
  CHECK_THROWS_AS(chart.cell(15, 0), HeadroomError);
  CHECK_THROWS_AS(chart.d1(14, 4), HeadroomError);
}

TEST_CASE("d1 squares to zero on a small window") {
  for (std::string n : {"R", "Fq:3", "Qp:2"}) {
    fields::Field f = fields::Field::parse(n);
    e1::Chart chart = e1::Chart::sphere(f, 0, 12, 16);
    for (int q = 0; q <= 14; ++q)
      for (int m = 2; m <= 11; ++m) {
        const gf2::BitMatrix& first = chart.d1(q, m);
        const gf2::BitMatrix& second = chart.d1(q + 1, m - 1);
        if (first.cols() == 0 || second.rows() == 0) continue;
        CHECK((second * first).zero());
      }
  }
}

TEST_CASE("d1 matrices have the band-implied bidegrees") {
  fields::Field f = fields::Field::parse("Qp:3");
  e1::Chart chart = e1::Chart::sphere(f, 0, 8, 12);
  for (int q = 0; q <= 10; ++q)
    for (int m = 2; m <= 7; ++m) {
      CHECK(chart.d1(q, m).rows() == chart.cell(q + 1, m - 1).dim());
      CHECK(chart.d1(q, m).cols() == chart.cell(q, m).dim());
    }
}

TEST_CASE("kw chart lives on even generator stems") {
  fields::Field r = fields::Field::parse("R");
  e1::Chart kw = e1::Chart::kw(r, 0, 10, 14);
  CHECK(kw.is_kw());
  for (int q = 0; q <= 12; ++q)
    for (int m = 0; m <= 9; ++m)
      for (const auto& t : kw.cell(q, m).tags) CHECK(t.gen_stem % 2 == 0);
}

TEST_CASE("nonzero weight shifts the window") {
  fields::Field f = fields::Field::parse("Fq:5");
  e1::Chart chart = e1::Chart::sphere(f, 3, 8, 12);
  CHECK(chart.weight() == 3);
  CHECK(chart.cell(2, 4).dim() == 0);  // below the weight line
  CHECK(chart.cell(3, 4).dim() > 0);
}
