#include "doctest.h"
#include "etass/pages.hpp"

using namespace etass;
using pages::Profile;

TEST_CASE("profile presets and parsing") {
  Profile c = Profile::collapse();
  CHECK(c.r(2) == ExtNat::infinity());
  CHECK(c.r(9) == ExtNat::infinity());
  CHECK(c.str() == "collapse");

  Profile j = Profile::conjecture();
  CHECK(j.r(2) == ExtNat(3));
  CHECK(j.r(5) == ExtNat(6));
  CHECK(j.str() == "conjecture");

  Profile p = Profile::parse("custom:3,4;inf");
  CHECK(p.r(2) == ExtNat(3));
  CHECK(p.r(3) == ExtNat(4));
  CHECK(p.r(4) == ExtNat::infinity());
  CHECK(Profile::parse(p.str()) == p);

  Profile q = Profile::parse("custom:3;arith");
  CHECK(q.r(2) == ExtNat(3));
  CHECK(q.r(3) == ExtNat(4));  // arithmetic tail r_k = k+1
  CHECK(q.r(7) == ExtNat(8));

  CHECK(Profile::parse("collapse") == Profile::collapse());
  CHECK(Profile::parse("conjecture") == Profile::conjecture());
  CHECK_THROWS_AS(Profile::parse("sometimes"), ConfigError);
  CHECK_THROWS_AS(Profile::parse("custom:3;later"), ConfigError);
}

TEST_CASE("profile validation") {
  CHECK_THROWS_AS(Profile::parse("custom:2;inf"), ConfigError);      // below 3
  CHECK_THROWS_AS(Profile::parse("custom:4,3;inf"), ConfigError);    // decreasing
  CHECK_THROWS_AS(Profile::parse("custom:3,inf,4;inf"), ConfigError);
  CHECK_THROWS_AS(Profile::parse("custom:5;arith"), ConfigError);    // 5 > r_3 = 4
  CHECK_THROWS_AS(Profile::parse("custom:inf;arith"), ConfigError);
  CHECK_NOTHROW(Profile::parse("custom:3,3,4;arith"));
  CHECK_NOTHROW(Profile::parse("custom:4,4,inf;inf"));
}

TEST_CASE("page for a stem follows the 2-adic valuation") {
  Profile j = Profile::conjecture();
  CHECK(j.page_for_stem(4) == ExtNat(3));
  CHECK(j.page_for_stem(8) == ExtNat(4));
  CHECK(j.page_for_stem(12) == ExtNat(3));
  CHECK(j.page_for_stem(16) == ExtNat(5));
  CHECK_THROWS_AS(j.page_for_stem(6), ConfigError);
  CHECK_THROWS_AS(j.page_for_stem(0), ConfigError);
}

TEST_CASE("second-page generators") {
  CHECK(pages::e2_generator_at(0)->label() == "1");
  CHECK(pages::e2_generator_at(3)->label() == "a4");
  CHECK(pages::e2_generator_at(4)->label() == "a5");
  CHECK(pages::e2_generator_at(7)->label() == "a4*a5");
  CHECK(pages::e2_generator_at(8)->label() == "a5^2");
  for (int m : {1, 2, 5, 6, 9, 10}) CHECK_FALSE(pages::e2_generator_at(m).has_value());

  pages::E2Generator g = *pages::e2_generator_at(7);
  CHECK(g.stem() == 7);
  CHECK(g.slice() == 9);
  pages::E2Generator h = pages::e2_at_slice(g, 2);
  CHECK(h.stem() == 7);
  CHECK(h.slice() == 2);
  CHECK(h.label() == "a1^-7*a4*a5");
}

TEST_CASE("alive stems") {
  for (int m = 0; m <= 20; ++m) {
    CHECK(pages::e2_stem_alive(m, false) == (m % 4 == 0 || m % 4 == 3));
    CHECK(pages::e2_stem_alive(m, true) == (m % 4 == 0));
  }
  CHECK_FALSE(pages::e2_stem_alive(-4, false));
}

TEST_CASE("turning the first page reproduces the closed form") {
  for (std::string n : {"C", "R", "Fq:3", "Qp:3"}) {
    fields::Field f = fields::Field::parse(n);
    e1::Chart chart = e1::Chart::sphere(f, 0, 10, 14);
    CHECK(pages::verify_e2(chart).ok());
    pages::Page p2 = pages::turn_first_page(chart);
    CHECK(p2.all_closed_form());
    for (int q = 0; q <= p2.max_filtration(); ++q)
      for (int m = 0; m <= p2.max_stem(); ++m) {
        int expect = pages::e2_stem_alive(m, false) ? f.milnor_dim(q) : 0;
        CHECK(p2.cell(q, m).dim == expect);
      }
  }
}

TEST_CASE("second-page cells carry monomial labels") {
  fields::Field r = fields::Field::parse("R");
  pages::Page p2 = pages::turn_first_page(e1::Chart::sphere(r, 0, 10, 14));
  CHECK(p2.cell(0, 4).labels == std::vector<std::string>{"a1^-5*a5"});
  CHECK(p2.cell(3, 3).labels == std::vector<std::string>{"a1^-1*a4*rho^3"});
  CHECK(p2.cell(2, 0).labels == std::vector<std::string>{"a1^2*rho^2"});
  CHECK(p2.cell(1, 2).dim == 0);
  CHECK_THROWS_AS(p2.cell(20, 0), HeadroomError);
  CHECK(p2.cell(-1, 0).dim == 0);
}

TEST_CASE("kw second page over R has towers exactly at stems 0 mod 4") {
  fields::Field r = fields::Field::parse("R");
  e1::Chart chart = e1::Chart::kw(r, 0, 12, 16);
  CHECK(pages::verify_e2(chart).ok());
  pages::Page p2 = pages::turn_first_page(chart);
  for (int q = 0; q <= p2.max_filtration(); ++q)
    for (int m = 0; m <= p2.max_stem(); ++m)
      CHECK((p2.cell(q, m).dim > 0) == (m % 4 == 0));
}

TEST_CASE("collapse bound per field") {
  auto bound = [](const std::string& n) {
    return pages::collapse_bound(fields::Field::parse(n).desc());
  };
  CHECK(bound("C") == ExtNat(2));
  CHECK(bound("Fq:3") == ExtNat(2));
  CHECK(bound("Fq:5") == ExtNat(2));
  CHECK(bound("Qp:3") == ExtNat(3));
  CHECK(bound("Qp:2") == ExtNat(3));
  CHECK(bound("Qi") == ExtNat(3));
  CHECK(bound("R") == ExtNat::infinity());
  CHECK(bound("Q") == ExtNat::infinity());
}

TEST_CASE("collapse fields have an empty differential log") {
  for (std::string n : {"C", "Fq:3", "Fq:5", "Qp:5"}) {
    fields::Field f = fields::Field::parse(n);
    pages::Page p2 = pages::turn_first_page(e1::Chart::sphere(f, 0, 14, 20));
    pages::EInfPage einf = pages::run_to_einf(p2, Profile::conjecture());
    CHECK(einf.log().empty());
    for (int q = 0; q <= einf.max_filtration(); ++q)
      for (int m = 0; m <= einf.max_stem(); ++m)
        CHECK(einf.cell(q, m).dim() == p2.cell(q, m).dim);
  }
}

TEST_CASE("conjecture profile over R: towers truncate to nu2(4l)+1") {
  fields::Field r = fields::Field::parse("R");
  pages::Page p2 = pages::turn_first_page(e1::Chart::sphere(r, 0, 10, 24));
  pages::EInfPage einf = pages::run_to_einf(p2, Profile::conjecture());

  REQUIRE_FALSE(einf.log().empty());
  pages::DiffRecord first{3, 0, 4, 0, "a1^-5*a5", "a1^-1*a4", 1};
  CHECK(einf.log()[0] == first);
  for (const auto& rec : einf.log()) {
    CHECK((rec.m == 4 || rec.m == 8));
    CHECK(rec.page == (rec.m == 4 ? 3 : 4));
    CHECK(rec.rank == 1);
  }

  // stem 4l-1 keeps exactly r cells; stem 4l dies completely
  for (int q = 0; q <= einf.max_filtration(); ++q) {
    CHECK(einf.cell(q, 3).dim() == (q < 3 ? 1 : 0));
    CHECK(einf.cell(q, 7).dim() == (q < 4 ? 1 : 0));
    CHECK(einf.cell(q, 4).dim() == 0);
    CHECK(einf.cell(q, 8).dim() == 0);
    CHECK(einf.cell(q, 0).dim() == 1);  // permanent tower
  }
}

TEST_CASE("conjecture profile over Q: kernels of rho powers survive") {
  fields::Field q = fields::Field::parse("Q");
  pages::Page p2 = pages::turn_first_page(e1::Chart::sphere(q, 0, 6, 12));
  pages::EInfPage einf = pages::run_to_einf(p2, Profile::conjecture());
  // stem 4: E-infinity = ker(rho^3) on each slice; k^M(Q) has dims 1, 26, 25
  // in degrees 0..2 and rho^3 into degrees 3+ has rank 1
  CHECK(einf.cell(0, 4).dim() == 0);
  CHECK(einf.cell(1, 4).dim() == 25);
  CHECK(einf.cell(2, 4).dim() == 24);
}

TEST_CASE("window exits: note when lax, HeadroomError when strict") {
  fields::Field r = fields::Field::parse("R");
  pages::Page p2 = pages::turn_first_page(e1::Chart::sphere(r, 0, 6, 8));
  pages::EInfPage einf = pages::run_to_einf(p2, Profile::conjecture(), false);
  CHECK_FALSE(einf.notes().empty());
  CHECK_THROWS_AS(pages::run_to_einf(p2, Profile::conjecture(), true), HeadroomError);
}

TEST_CASE("kw pages skip higher differentials") {
  fields::Field r = fields::Field::parse("R");
  pages::Page p2 = pages::turn_first_page(e1::Chart::kw(r, 0, 10, 14));
  pages::EInfPage einf = pages::run_to_einf(p2, Profile::conjecture());
  CHECK(einf.log().empty());
  CHECK_FALSE(einf.notes().empty());
  for (int q = 0; q <= einf.max_filtration(); ++q)
    CHECK(einf.cell(q, 4).dim() == p2.cell(q, 4).dim);
}

TEST_CASE("einf respects the window rules") {
  fields::Field f = fields::Field::parse("Fq:5");
  pages::Page p2 = pages::turn_first_page(e1::Chart::sphere(f, 2, 8, 14));
  pages::EInfPage einf = pages::run_to_einf(p2, Profile::collapse());
  CHECK(einf.weight() == 2);
  CHECK(einf.cell(1, 0).dim() == 0);  // below the weight
  CHECK_THROWS_AS(einf.cell(einf.max_filtration() + 1, 0), HeadroomError);
}
