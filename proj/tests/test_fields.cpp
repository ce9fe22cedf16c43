#include <random>

#include "doctest.h"
#include "etass/fields.hpp"
#include "oracles.hpp"

using namespace etass;
using fields::Field;
using fields::Place;
using fields::Rat;

TEST_CASE("field name grammar round-trips") {
  for (std::string n : {"C", "R", "Fq:3", "Fq:5", "Fq:9", "Qp:2", "Qp:3", "Q", "Qi"})
    CHECK(Field::parse(n).name() == n);
  CHECK_THROWS_AS(Field::parse("bogus"), ConfigError);
  CHECK_THROWS_AS(Field::parse("Fq:4"), ConfigError);   // not an odd prime power
  CHECK_THROWS_AS(Field::parse("Qp:15"), ConfigError);  // not prime
}

TEST_CASE("catalog invariants") {
  auto inv = [](const std::string& n) { return Field::parse(n).desc(); };
  CHECK(inv("C").level == ExtNat(1));
  CHECK(inv("C").cd2 == ExtNat(0));
  CHECK(inv("C").rho_nilpotence == ExtNat(1));
  CHECK(inv("R").level == ExtNat::infinity());
  CHECK(inv("R").cd2 == ExtNat::infinity());
  CHECK(inv("R").rho_nilpotence == ExtNat::infinity());
  CHECK(inv("Fq:3").level == ExtNat(2));
  CHECK(inv("Fq:3").rho_nilpotence == ExtNat(2));
  CHECK(inv("Fq:5").level == ExtNat(1));
  CHECK(inv("Fq:5").rho_nilpotence == ExtNat(1));
  CHECK(inv("Fq:9").level == ExtNat(1));
  CHECK(inv("Qp:2").level == ExtNat(4));
  CHECK(inv("Qp:2").cd2 == ExtNat(2));
  CHECK(inv("Qp:2").rho_nilpotence == ExtNat(3));
  CHECK(inv("Qp:3").level == ExtNat(2));
  CHECK(inv("Qp:5").level == ExtNat(1));
  CHECK(inv("Q").level == ExtNat::infinity());
  CHECK(inv("Qi").level == ExtNat(1));
  CHECK(inv("Qi").cd2 == ExtNat(2));
}

TEST_CASE("levels of small finite fields against exhaustive search") {
  for (int q : {3, 5, 9}) {
    auto gf = oracles::SmallGF::make(q);
    auto d = Field::parse("Fq:" + std::to_string(q)).desc();
    CHECK(d.level == ExtNat(static_cast<unsigned>(gf.level())));
  }
}

TEST_CASE("milnor dimensions") {
  auto dims = [](const std::string& n, int upto) {
    Field f = Field::parse(n);
    std::vector<int> out;
    for (int q = 0; q <= upto; ++q) out.push_back(f.milnor_dim(q));
    return out;
  };
  CHECK(dims("C", 4) == std::vector<int>{1, 0, 0, 0, 0});
  CHECK(dims("R", 6) == std::vector<int>{1, 1, 1, 1, 1, 1, 1});
  CHECK(dims("Fq:3", 4) == std::vector<int>{1, 1, 0, 0, 0});
  CHECK(dims("Qp:5", 4) == std::vector<int>{1, 2, 1, 0, 0});
  CHECK(dims("Qp:2", 4) == std::vector<int>{1, 3, 1, 0, 0});
  // Q at the default support bound 100: sign and 25 primes in degree 1,
  // one class per real-place power from degree 3 on
  CHECK(dims("Q", 6) == std::vector<int>{1, 26, 25, 1, 1, 1, 1});
}

TEST_CASE("Q(i) is enumerable only in degree zero") {
  Field f = Field::parse("Qi");
  CHECK(f.milnor_enumerable(0));
  CHECK(f.milnor_dim(0) == 1);
  CHECK_FALSE(f.milnor_enumerable(1));
  CHECK_THROWS_AS(f.milnor_basis(1), EnumerationError);
}

TEST_CASE("rho behaviour per field") {
  CHECK(Field::parse("C").rho().zero());
  CHECK(Field::parse("Fq:5").rho().zero());
  CHECK(Field::parse("Fq:3").rho().zero() == false);

  Field r = Field::parse("R");
  fields::MilnorElement rho = r.rho();
  fields::MilnorElement power = rho;
  for (int d = 2; d <= 6; ++d) {
    power = km_mul(power, rho);
    CHECK_FALSE(power.zero());  // polynomial ring on rho
  }

  Field f3 = Field::parse("Fq:3");
  CHECK(km_mul(f3.rho(), f3.rho()).zero());
}

TEST_CASE("symbols over Q") {
  Field q = Field::parse("Q");
  // [-1][-1] is nonzero: the symbol at the real place is -1
  CHECK_FALSE(q.symbol({Rat(-1), Rat(-1)}).zero());
  CHECK(oracles::hilbert_oracle(-1, -1, Place::real()) == -1);
  // 5 - 1 = 2^2, so z^2 = 5x^2 - y^2 has the rational point (1,1,2) and
  // [5][-1] dies at every place
  CHECK(q.symbol({Rat(5), Rat(-1)}).zero());
  for (const auto& v : fields::relevant_places(Rat(5), Rat(-1)))
    CHECK(oracles::hilbert_oracle(5, -1, v) == 1);
  // Steinberg: [a][1-a] = 0
  CHECK(q.symbol({Rat(7), Rat(-6)}).zero());
  CHECK(q.symbol({Rat(2), Rat(-1)}).zero());  // 2 = 1 - (-1)
  // bilinearity: [ab] = [a] + [b] in degree 1
  CHECK(q.symbol({Rat(6)}) == km_add(q.symbol({Rat(2)}), q.symbol({Rat(3)})));
}

TEST_CASE("hilbert symbols: frozen values") {
  CHECK(fields::hilbert_symbol(Rat(-1), Rat(-1), Place::real()) == -1);
  CHECK(fields::hilbert_symbol(Rat(-1), Rat(-1), Place::finite(2)) == -1);
  CHECK(fields::hilbert_symbol(Rat(2), Rat(5), Place::finite(5)) == -1);
  CHECK(fields::hilbert_symbol(Rat(5), Rat(5), Place::finite(5)) == 1);
  CHECK(fields::hilbert_symbol(Rat(3), Rat(3), Place::finite(3)) == -1);
  CHECK(fields::hilbert_symbol(Rat(1, 2), Rat(3), Place::finite(2)) ==
        fields::hilbert_symbol(Rat(2), Rat(3), Place::finite(2)));  // square classes
}

TEST_CASE("hilbert symbols match the solvability oracle") {
  std::mt19937 rng(2026);
  std::uniform_int_distribution<long long> coeff(-50, 50);
  std::vector<Place> pool{Place::real()};
  for (long long p : fields::primes_up_to(47)) pool.push_back(Place::finite(p));
  int done = 0;
  while (done < 200) {
    long long a = coeff(rng), b = coeff(rng);
    if (a == 0 || b == 0) continue;
    const Place& v = pool[rng() % pool.size()];
    CHECK(fields::hilbert_symbol(Rat(a), Rat(b), v) == oracles::hilbert_oracle(a, b, v));
    ++done;
  }
}

TEST_CASE("hilbert reciprocity on the relevant places") {
  std::mt19937 rng(99);
  std::uniform_int_distribution<long long> coeff(-50, 50);
  for (int trial = 0; trial < 100; ++trial) {
    long long a = coeff(rng), b = coeff(rng);
    if (a == 0 || b == 0) continue;
    int prod = 1;
    for (const auto& v : fields::relevant_places(Rat(a), Rat(b)))
      prod *= fields::hilbert_symbol(Rat(a), Rat(b), v);
    CHECK(prod == 1);
  }
}

TEST_CASE("rho multiplication matrices and annihilators") {
  Field q = Field::parse("Q");
  // rho^3 * rho^3 = rho^6 is nonzero, so rho^3 has no kernel in degree 3
  CHECK(q.rho_power_annihilator(3, 3).empty());
  CHECK(gf2::rank(q.rho_mul_matrix(3, 3)) == 1);

  Field r = Field::parse("R");
  for (int d = 0; d <= 4; ++d) CHECK(r.rho_power_annihilator(2, d).empty());

  Field f3 = Field::parse("Fq:3");
  CHECK(f3.rho_power_annihilator(1, 1).size() == 1);  // rho: k1 -> k2 = 0 is zero

  // matrix of rho^r equals r-fold composition of rho^1
  for (int d = 0; d <= 2; ++d) {
    Field qp = Field::parse("Qp:3");
    gf2::BitMatrix twice = qp.rho_mul_matrix(1, d + 1) * qp.rho_mul_matrix(1, d);
    CHECK(twice == qp.rho_mul_matrix(2, d));
  }
}

TEST_CASE("localization Q -> completions") {
  Field q = Field::parse("Q");
  for (std::string tn : {"Qp:3", "Qp:5", "R"}) {
    Field t = Field::parse(tn);
    for (int d = 0; d <= 3; ++d) {
      gf2::BitMatrix loc = fields::localization_matrix(q, t, d);
      CHECK(loc.rows() == t.milnor_dim(d));
      CHECK(loc.cols() == q.milnor_dim(d));
    }
    // compatible with symbols
    CHECK(localize(q.symbol({Rat(-1)}), t) == t.symbol({Rat(-1)}));
    CHECK(localize(q.symbol({Rat(3), Rat(5)}), t) == t.symbol({Rat(3), Rat(5)}));
  }
  // rho maps to rho, so localization intertwines rho multiplication
  Field t = Field::parse("Qp:3");
  for (int d = 0; d <= 2; ++d) {
    gf2::BitMatrix lhs = fields::localization_matrix(q, t, d + 1) * q.rho_mul_matrix(1, d);
    gf2::BitMatrix rhs = t.rho_mul_matrix(1, d) * fields::localization_matrix(q, t, d);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("mixed-field arithmetic is rejected") {
  Field r = Field::parse("R");
  Field c = Field::parse("C");
  CHECK_THROWS_AS(km_mul(r.unit(), c.unit()), FieldMismatchError);
}

TEST_CASE("prime utilities") {
  CHECK(fields::primes_up_to(100).size() == 25);
  CHECK(fields::primes_up_to(2) == std::vector<long long>{2});
  CHECK(fields::is_prime(97));
  CHECK_FALSE(fields::is_prime(91));  // 7 * 13
  CHECK_FALSE(fields::is_prime(1));
}
