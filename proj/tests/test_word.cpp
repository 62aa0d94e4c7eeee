#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>

#include "acw/word.hpp"

using namespace acw;

namespace {

// Independent quadratic reducer used as an oracle for the stack reducer.
std::vector<Letter> naive_reduce(std::vector<Letter> ls) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i + 1 < ls.size(); ++i) {
      if (ls[i].gen == ls[i + 1].gen && ls[i].sign == -ls[i + 1].sign) {
        ls.erase(ls.begin() + i, ls.begin() + i + 2);
        changed = true;
        break;
      }
    }
  }
  return ls;
}

std::vector<Letter> random_letters(std::mt19937& rng, int gens, int len) {
  std::uniform_int_distribution<int> g(0, gens - 1);
  std::uniform_int_distribution<int> s(0, 1);
  std::vector<Letter> out;
  for (int i = 0; i < len; ++i) out.push_back({g(rng), s(rng) ? 1 : -1});
  return out;
}

Alphabet xy() { return Alphabet({"x", "y"}); }

Word W(const std::string& s, const Alphabet& a) { return Word::parse(s, a); }

}  // namespace

TEST_CASE("free reduction matches a naive oracle", "[word]") {
  std::mt19937 rng(12345);
  for (int trial = 0; trial < 500; ++trial) {
    auto ls = random_letters(rng, 3, trial % 40);
    Word w = Word::from_letters(ls);
    auto expect = naive_reduce(ls);
    REQUIRE(w.letters() == expect);
  }
}

TEST_CASE("basic products and inverses", "[word]") {
  Alphabet a = xy();
  REQUIRE(W("x y", a) * W("y^-1 x", a) == W("x x", a));
  REQUIRE(W("x y^-1", a).inverse() == W("y x^-1", a));
  REQUIRE(W("x y y^-1 x", a) == W("x^2", a));

  std::mt19937 rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    Word u = Word::from_letters(random_letters(rng, 3, 12));
    Word v = Word::from_letters(random_letters(rng, 3, 12));
    REQUIRE((u * v).inverse() == v.inverse() * u.inverse());
    REQUIRE(u.inverse().inverse() == u);
    REQUIRE((u * u.inverse()).empty());
  }
}

TEST_CASE("conjugation is u w u^-1 and composes", "[word]") {
  Alphabet a = xy();
  REQUIRE(conjugate(W("x", a), W("y", a)) == W("y x y^-1", a));
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    Word w = Word::from_letters(random_letters(rng, 3, 10));
    Word u = Word::from_letters(random_letters(rng, 3, 6));
    Word v = Word::from_letters(random_letters(rng, 3, 6));
    REQUIRE(conjugate(conjugate(w, u), v) == conjugate(w, v * u));
  }
}

TEST_CASE("powers", "[word]") {
  Alphabet a = xy();
  REQUIRE(W("x y", a).pow(3) == W("x y x y x y", a));
  REQUIRE(W("x", a).pow(-2) == W("x^-2", a));
  REQUIRE(W("x", a).pow(0).empty());
}

TEST_CASE("exponent sums and letter counts", "[word]") {
  Alphabet a = xy();
  Word w = W("x y x^-1 y x", a);
  REQUIRE(w.exponent_sum(0) == 1);
  REQUIRE(w.exponent_sum(1) == 2);
  REQUIRE(w.count_gen(0) == 3);
  REQUIRE(w.count_gen(1) == 2);

  std::mt19937 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    Word u = Word::from_letters(random_letters(rng, 3, 15));
    Word v = Word::from_letters(random_letters(rng, 3, 15));
    for (int g = 0; g < 3; ++g)
      REQUIRE((u * v).exponent_sum(g) == u.exponent_sum(g) + v.exponent_sum(g));
  }
}

TEST_CASE("cyclic reduction and normal form", "[word]") {
  Alphabet a = xy();
  auto f = W("x^-1 y x", a).cyclically_reduce();
  REQUIRE(f.core == W("y", a));
  REQUIRE(f.conjugator == W("x^-1", a));
  REQUIRE(conjugate(f.core, f.conjugator) == W("x^-1 y x", a));

  REQUIRE(W("x^-1 y x", a).cyclic_normal_form() == W("y", a));
  // Commutator: least among the 8 rotations of itself and its inverse.
  REQUIRE(W("x y x^-1 y^-1", a).cyclic_normal_form() == W("x y x^-1 y^-1", a));

  std::mt19937 rng(42);
  for (int trial = 0; trial < 300; ++trial) {
    Word w = Word::from_letters(random_letters(rng, 2, 10));
    Word u = Word::from_letters(random_letters(rng, 2, 8));
    REQUIRE(conjugate(w, u).cyclic_normal_form() == w.cyclic_normal_form());
    REQUIRE(w.inverse().cyclic_normal_form() == w.cyclic_normal_form());
  }
}

TEST_CASE("canonical letter order: declaration order, positive first", "[word]") {
  Alphabet ab({"a", "b"});
  Word A = Word::single(0, 1), Ai = Word::single(0, -1);
  Word B = Word::single(1, 1), Bi = Word::single(1, -1);
  REQUIRE(A < Ai);
  REQUIRE(Ai < B);
  REQUIRE(B < Bi);
  // Normal form of a^-1 is a (inversion is in the candidate set).
  REQUIRE(Ai.cyclic_normal_form() == A);
}

TEST_CASE("parse/print round trip", "[word]") {
  Alphabet a = xy();
  REQUIRE(W("1", a).empty());
  REQUIRE(Word().to_string(a) == "1");
  REQUIRE(W("x^3 y^-2", a).to_string(a) == "x^3 y^-2");
  REQUIRE(W("x x x y^-1 y^-1", a) == W("x^3 y^-2", a));

  std::mt19937 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    Word w = Word::from_letters(random_letters(rng, 2, trial % 25));
    REQUIRE(Word::parse(w.to_string(a), a) == w);
  }

  REQUIRE_THROWS_AS(W("z", a), AlphabetError);
  REQUIRE_THROWS_AS(W("x^0", a), ParseError);
  REQUIRE_THROWS_AS(W("x^two", a), ParseError);
}

TEST_CASE("delete_letter removes occurrences letterwise", "[word]") {
  Alphabet xt({"x", "t"});
  Word rel = W("t x t^-1 x t x^-1 t^-1 x^-1 x^-1", xt);
  REQUIRE(rel.size() == 9);
  auto r = delete_letter(rel, 1);
  REQUIRE(r.removed == 4);
  REQUIRE(r.word == W("x^-1", xt));

  auto r2 = delete_letter(W("x y x^-1", xy()), 0);
  REQUIRE(r2.removed == 2);
  REQUIRE(r2.word == W("y", xy()));
}

TEST_CASE("substitution", "[word]") {
  Alphabet a = xy();
  // x -> x y, y -> y^-1
  std::vector<Word> images = {W("x y", a), W("y^-1", a)};
  REQUIRE(substitute(W("x y", a), images) == W("x", a));
  REQUIRE(substitute(W("x^-1", a), images) == W("y^-1 x^-1", a));
}
