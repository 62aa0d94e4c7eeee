#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "acw/tower.hpp"

using namespace acw;

TEST_CASE("round trip against plain integers", "[tower]") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<long> v(-1000000, 1000000);
  for (int k : {2, 3, 5, 10}) {
    for (int trial = 0; trial < 200; ++trial) {
      long a = v(rng);
      TowerInt t(k, a);
      REQUIRE(t.value() == a);
      REQUIRE(TowerInt::from_mpz(k, mpz_class(a)).value() == a);
      REQUIRE(t.is_integer());
      REQUIRE(t.is_zero() == (a == 0));
      REQUIRE(t.sign() == (a > 0 ? 1 : a < 0 ? -1 : 0));
    }
  }
}

TEST_CASE("addition matches integer addition", "[tower]") {
  std::mt19937 rng(8);
  std::uniform_int_distribution<long> v(-1000000, 1000000);
  for (int k : {2, 3, 7}) {
    for (int trial = 0; trial < 500; ++trial) {
      long a = v(rng), b = v(rng);
      TowerInt ta(k, a), tb(k, b);
      REQUIRE((ta + tb).value() == a + b);
      REQUIRE((ta - tb).value() == a - b);
      REQUIRE(ta.negated().value() == -a);
      REQUIRE((ta - ta).is_zero());
      REQUIRE(ta.equals(TowerInt(k, a)));
    }
  }
}

TEST_CASE("digit invariants hold after arithmetic", "[tower]") {
  std::mt19937 rng(9);
  std::uniform_int_distribution<long> v(-100000, 100000);
  for (int k : {2, 3}) {
    for (int trial = 0; trial < 200; ++trial) {
      TowerInt t = TowerInt(k, v(rng)) + TowerInt(k, v(rng));
      mpz_class last;
      bool first = true;
      for (const auto& term : t.terms()) {
        REQUIRE(term.digit != 0);
        REQUIRE(std::abs(term.digit) < k);
        if (!first) REQUIRE(term.exp > last);
        last = term.exp;
        first = false;
      }
    }
  }
}

TEST_CASE("shifting multiplies by powers of the base", "[tower]") {
  std::mt19937 rng(10);
  std::uniform_int_distribution<long> v(-5000, 5000);
  for (int trial = 0; trial < 200; ++trial) {
    long a = v(rng);
    TowerInt t(3, a);
    REQUIRE(t.shifted(2).value() == a * 9);
    REQUIRE(t.shifted(3).shifted(-3).equals(t));
  }
}

TEST_CASE("fractional values are detected exactly", "[tower]") {
  TowerInt half = TowerInt(2, 1).shifted(-1);
  REQUIRE_FALSE(half.is_integer());
  REQUIRE_FALSE(half.is_zero());
  REQUIRE((half + half).is_integer());
  REQUIRE((half + half).value() == 1);
  REQUIRE((half - half).is_zero());
  REQUIRE_THROWS_AS(half.value(), Error);

  // 1 + 1/3 - 1/3 collapses back to an integer.
  TowerInt third = TowerInt(3, 1).shifted(-1);
  TowerInt s = TowerInt(3, 1) + third - third;
  REQUIRE(s.is_integer());
  REQUIRE(s.value() == 1);
}

TEST_CASE("leading term dominates", "[tower]") {
  // 2^20 - (2^19 + ... + 1) = 1: many-term tails never flip the sign.
  TowerInt big = TowerInt(2, 1).shifted(20);
  TowerInt tail(2);
  for (int e = 0; e < 20; ++e) tail = tail + TowerInt(2, 1).shifted(e);
  TowerInt diff = big - tail;
  REQUIRE(diff.sign() == 1);
  REQUIRE(diff.value() == 1);
}

TEST_CASE("tower-sized symbolic values", "[tower]") {
  mpz_class e27("7625597484987");  // 3^27
  TowerInt t = TowerInt(3, 1).shifted(e27);
  REQUIRE(t.is_integer());
  REQUIRE(t.to_string() == "3^7625597484987");
  REQUIRE((t + TowerInt(3, 2)).to_string() == "3^7625597484987 + 2");
  REQUIRE((t - t).is_zero());
  REQUIRE_THROWS_AS(t.value(), TowerOverflowError);
  REQUIRE_THROWS_WITH(t.value(),
                      Catch::Matchers::ContainsSubstring("tower overflow"));
  REQUIRE(t.shifted(-e27).value() == 1);
}

TEST_CASE("term budget refuses dense values", "[tower]") {
  mpz_class dense;
  mpz_ui_pow_ui(dense.get_mpz_t(), 2, 70000);
  dense -= 1;  // 70000 one-bits
  REQUIRE_THROWS_AS(TowerInt::from_mpz(2, dense), TowerOverflowError);
}

TEST_CASE("printing", "[tower]") {
  REQUIRE(TowerInt(2, 0).to_string() == "0");
  REQUIRE(TowerInt(2, -12).to_string() == "-12");
  REQUIRE(TowerInt(5, 1).shifted(-2).to_string() == "5^(-2)");
  REQUIRE(TowerInt(3, 2).shifted(4).to_string() == "162");
  REQUIRE_THROWS_AS(TowerInt(1, 0), Error);
}
