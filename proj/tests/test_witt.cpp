#include "doctest.h"
#include "etass/witt.hpp"
#include "oracles.hpp"

using namespace etass;
using witt::GroupExpr;

namespace {

fields::Field F(const std::string& n) { return fields::Field::parse(n); }

}  // namespace

TEST_CASE("witt groups of small finite fields match form classification") {
  for (int q : {3, 5, 9}) {
    auto gf = oracles::SmallGF::make(q);
    witt::WittPresentation w = witt::witt_presentation(F("Fq:" + std::to_string(q)));
    witt::GroupRealization g = w.additive();
    int order_of_one = oracles::witt_order_of_one(gf);
    int classes = oracles::witt_class_count(gf);
    CHECK(classes == 4);
    unsigned total = 0;
    for (unsigned k : g.torsion2) total += k;
    CHECK((1 << total) == classes);  // group order
    unsigned max_exp = 0;
    for (unsigned k : g.torsion2) max_exp = std::max(max_exp, k);
    CHECK((1 << max_exp) == order_of_one);  // additive order of <1>
  }
}

TEST_CASE("catalog presentations") {
  CHECK(witt::witt_presentation(F("C")).additive().str() == "Z/2");
  CHECK(witt::witt_presentation(F("R")).additive().str() == "Z");
  CHECK(witt::witt_presentation(F("Fq:3")).additive().str() == "Z/4");
  CHECK(witt::witt_presentation(F("Fq:5")).additive().str() == "Z/2 (+) Z/2");
  CHECK(witt::witt_presentation(F("Qp:3")).additive().str() == "Z/4 (+) Z/4");
  CHECK(witt::witt_presentation(F("Qp:5")).additive().str() ==
        "Z/2 (+) Z/2 (+) Z/2 (+) Z/2");
  CHECK(witt::witt_presentation(F("Qp:2")).additive().str() == "Z/8 (+) Z/2 (+) Z/2");

  witt::WittPresentation q = witt::witt_presentation(F("Q"));
  CHECK(q.free_rank == 1);
  CHECK(q.cyclic2 == std::vector<unsigned>{1});
  CHECK(q.local_primes.size() == 24);  // odd primes up to 100
  CHECK(q.exponent == ExtNat::infinity());
  CHECK(q.additive().truncated);

  witt::WittPresentation qi = witt::witt_presentation(F("Qi"));
  CHECK(qi.symbolic_only);
  CHECK(qi.exponent == ExtNat(2));
  CHECK(qi.additive().str() == "(infinitely generated, exponent 2)");
}

TEST_CASE("graded pieces match milnor dimensions") {
  CHECK(witt::witt_presentation(F("C")).graded_dim(0) == 1);
  CHECK(witt::witt_presentation(F("C")).graded_dim(1) == 0);
  for (int d = 0; d <= 6; ++d) CHECK(witt::witt_presentation(F("R")).graded_dim(d) == 1);
  witt::WittPresentation q3 = witt::witt_presentation(F("Qp:3"));
  CHECK(q3.graded_dim(0) == 1);
  CHECK(q3.graded_dim(1) == 2);
  CHECK(q3.graded_dim(2) == 1);
  CHECK(q3.graded_dim(3) == 0);
  witt::WittPresentation q = witt::witt_presentation(F("Q"));
  CHECK(q.graded_dim(1) == 26);
  CHECK(q.graded_dim(2) == 25);
  CHECK(q.graded_dim(3) == 1);
}

TEST_CASE("quotients and torsion by a power of two") {
  auto w3 = witt::witt_presentation(F("Fq:3"));
  witt::TwoPowerData d = witt::two_power_data(w3, ExtNat(3));
  CHECK(d.quotient.str() == "Z/4");  // 2^3 kills Z/4
  CHECK(d.torsion.str() == "Z/4");

  auto wr = witt::witt_presentation(F("R"));
  witt::TwoPowerData dr = witt::two_power_data(wr, ExtNat(3));
  CHECK(dr.quotient.str() == "Z/8");
  CHECK(dr.torsion.is_zero());
  witt::TwoPowerData dinf = witt::two_power_data(wr, ExtNat::infinity());
  CHECK(dinf.quotient.str() == "Z");
  CHECK(dinf.torsion.is_zero());

  auto w2 = witt::witt_presentation(F("Qp:2"));
  witt::TwoPowerData d2 = witt::two_power_data(w2, ExtNat(3));
  CHECK(d2.quotient.str() == "Z/8 (+) Z/2 (+) Z/2");
  CHECK(d2.torsion.str() == "Z/8 (+) Z/2 (+) Z/2");
  witt::TwoPowerData d2small = witt::two_power_data(w2, ExtNat(4));
  CHECK(d2small.torsion == d2.torsion);  // exponent 8 already
}

TEST_CASE("group expression grammar") {
  CHECK(GroupExpr::zero().str() == "0");
  CHECK(GroupExpr::w().str() == "W");
  CHECK(GroupExpr::wmod(ExtNat(3)).str() == "W/2^3");
  CHECK(GroupExpr::wtorsion(ExtNat(4)).str() == "T_{2^4}W");
  CHECK(GroupExpr::wmod(ExtNat::infinity()) == GroupExpr::w());
  CHECK(GroupExpr::wtorsion(ExtNat::infinity()) == GroupExpr::w());
  GroupExpr s = GroupExpr::sum({GroupExpr::w(), GroupExpr::wmod(ExtNat(3))});
  CHECK(s.str() == "W (+) W/2^3");
  for (std::string t : {"0", "W", "W/2^3", "T_{2^4}W", "W (+) W/2^3"})
    CHECK(GroupExpr::parse(t).str() == t);
  CHECK_THROWS_AS(GroupExpr::parse("V/2^3"), ConfigError);
  CHECK_THROWS(GroupExpr::wmod(ExtNat(2)));  // degenerate finite page
}

TEST_CASE("homotopy groups from a profile") {
  pages::Profile conj = pages::Profile::conjecture();
  pages::Profile coll = pages::Profile::collapse();

  for (int m : {-2, -1, 1, 2, 5, 6}) CHECK(witt::assemble_homotopy(F("R"), conj, m) == GroupExpr::zero());
  CHECK(witt::assemble_homotopy(F("R"), conj, 0) == GroupExpr::w());
  CHECK(witt::assemble_homotopy(F("R"), conj, 3) == GroupExpr::wmod(ExtNat(3)));
  CHECK(witt::assemble_homotopy(F("R"), conj, 4) == GroupExpr::wtorsion(ExtNat(3)));
  CHECK(witt::assemble_homotopy(F("R"), conj, 7) == GroupExpr::wmod(ExtNat(4)));
  CHECK(witt::assemble_homotopy(F("R"), conj, 8) == GroupExpr::wtorsion(ExtNat(4)));
  CHECK(witt::assemble_homotopy(F("R"), conj, 11) == GroupExpr::wmod(ExtNat(3)));
  CHECK(witt::assemble_homotopy(F("R"), conj, 16) == GroupExpr::wtorsion(ExtNat(5)));
  CHECK(witt::assemble_homotopy(F("R"), coll, 3) == GroupExpr::w());
  CHECK(witt::assemble_homotopy(F("R"), coll, 4) == GroupExpr::w());

  // fields whose ring exponent divides 2^{r_k} reduce to the collapse answer;
  // every finite-level catalog field has exponent dividing 2^3, so only R and
  // Q ever show truncated quotients
  CHECK(witt::assemble_homotopy(F("Fq:5"), conj, 8) == GroupExpr::w());
  CHECK(witt::assemble_homotopy(F("Fq:3"), conj, 3) == GroupExpr::w());
  CHECK(witt::assemble_homotopy(F("Qp:2"), conj, 3) == GroupExpr::w());  // exp 8 | 2^3
  CHECK(witt::assemble_homotopy(F("Qp:2"), conj, 7) == GroupExpr::w());
  CHECK(witt::assemble_homotopy(F("Q"), conj, 7) == GroupExpr::wmod(ExtNat(4)));
}

TEST_CASE("realizations") {
  auto real = [](const std::string& f, const GroupExpr& e) {
    return witt::realize(witt::witt_presentation(F(f)), e).str();
  };
  CHECK(real("C", GroupExpr::w()) == "Z/2");
  CHECK(real("R", GroupExpr::w()) == "Z");
  CHECK(real("R", GroupExpr::wmod(ExtNat(3))) == "Z/8");
  CHECK(real("R", GroupExpr::wtorsion(ExtNat(3))) == "0");
  CHECK(real("Fq:3", GroupExpr::wmod(ExtNat(3))) == "Z/4");
  CHECK(real("Qp:2", GroupExpr::wtorsion(ExtNat(3))) == "Z/8 (+) Z/2 (+) Z/2");
  CHECK(real("Qi", GroupExpr::w()) == "(infinitely generated, exponent 2)");
  CHECK(real("R", GroupExpr::zero()) == "0");
  CHECK(witt::realize(witt::witt_presentation(F("Q")), GroupExpr::wmod(ExtNat(3))).truncated);
  CHECK(witt::realize(witt::witt_presentation(F("R")),
                      GroupExpr::sum({GroupExpr::w(), GroupExpr::wmod(ExtNat(3))}))
            .str() == "Z (+) Z/8");
}

TEST_CASE("group order against the einf tower") {
  for (std::string n : {"C", "Fq:3", "Fq:5", "Qp:3"}) {
    fields::Field f = F(n);
    for (const auto& prof : {pages::Profile::collapse(), pages::Profile::conjecture()}) {
      pages::Page p2 = pages::turn_first_page(e1::Chart::sphere(f, 0, 10, 18));
      pages::EInfPage einf = pages::run_to_einf(p2, prof);
      for (int m = 0; m <= 8; ++m) {
        witt::OrderReport rep = witt::cross_check_orders(f, prof, m, einf);
        INFO("field ", n, " stem ", m);
        CHECK(rep.ok());
        CHECK(rep.order_checked);
      }
    }
  }
}

TEST_CASE("cross-check rejects mismatched inputs") {
  fields::Field f = F("Fq:5");
  pages::Page p2 = pages::turn_first_page(e1::Chart::sphere(f, 0, 8, 14));
  pages::EInfPage einf = pages::run_to_einf(p2, pages::Profile::collapse());
  CHECK_THROWS_AS(
      witt::cross_check_orders(f, pages::Profile::conjecture(), 3, einf), ConfigError);
  CHECK_THROWS_AS(
      witt::cross_check_orders(F("Fq:3"), pages::Profile::collapse(), 3, einf),
      FieldMismatchError);
}

TEST_CASE("ring structure gating") {
  pages::Profile conj = pages::Profile::conjecture();
  pages::Profile coll = pages::Profile::collapse();
  auto ring = [&](const std::string& f, const pages::Profile& p) {
    return witt::ring_structure(F(f), p);
  };
  CHECK(ring("Fq:5", conj).has_value());   // odd characteristic
  CHECK(ring("Fq:9", conj).has_value());
  CHECK(ring("C", conj).has_value());      // cd2 <= 1
  CHECK(ring("Qi", conj).has_value());     // rho^3 = 0
  CHECK(ring("Qp:5", conj).has_value());
  CHECK_FALSE(ring("R", conj).has_value());
  CHECK_FALSE(ring("Q", conj).has_value());
  CHECK(ring("R", coll).has_value());      // collapse assumed by the profile
  CHECK(ring("Q", coll).has_value());

  witt::RingExpr r = *ring("Fq:9", conj);
  CHECK(r.str() == "W(Fq:9)[eta^{+-1},sigma,mu]/(sigma^2)");
  REQUIRE(r.generators.size() == 3);
  CHECK(r.generators[0].name == "eta");
  CHECK(r.generators[0].stem == 0);
  CHECK(r.generators[0].alpha == 1);
  CHECK(r.generators[0].invertible);
  CHECK(r.generators[1].name == "sigma");
  CHECK(r.generators[1].stem == 3);
  CHECK(r.generators[1].alpha == 4);
  CHECK(r.generators[2].name == "mu");
  CHECK(r.generators[2].stem == 4);
  CHECK(r.generators[2].alpha == 5);
}

TEST_CASE("non-periodic comparison range") {
  // over F5 the range opens at n >= max(3m+5, 4m) and the answer is the
  // collapse dichotomy
  CHECK(witt::nonperiodic_range(F("Fq:5"), 0, 5) == GroupExpr::w());
  CHECK_FALSE(witt::nonperiodic_range(F("Fq:5"), 0, 4).has_value());
  CHECK(witt::nonperiodic_range(F("Fq:5"), 1, 8) == GroupExpr::zero());
  CHECK_FALSE(witt::nonperiodic_range(F("Fq:5"), 1, 7).has_value());
  CHECK(witt::nonperiodic_range(F("Fq:5"), 3, 14) == GroupExpr::w());
  CHECK_FALSE(witt::nonperiodic_range(F("Fq:5"), 3, 13).has_value());
  CHECK(witt::nonperiodic_range(F("Fq:5"), 4, 17) == GroupExpr::w());
  CHECK(witt::nonperiodic_range(F("Fq:5"), 5, 20) == GroupExpr::zero());
  CHECK(witt::nonperiodic_range(F("Fq:5"), -3, 0) == GroupExpr::zero());

  CHECK(witt::nonperiodic_range(F("C"), 0, 5) == GroupExpr::w());
  CHECK(witt::nonperiodic_range(F("Qi"), 3, 14) == GroupExpr::w());
  // infinite cohomological dimension: no certified range
  CHECK_FALSE(witt::nonperiodic_range(F("R"), 0, 40).has_value());
  CHECK_FALSE(witt::nonperiodic_range(F("Q"), 0, 40).has_value());
}
