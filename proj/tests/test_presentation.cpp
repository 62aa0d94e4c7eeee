#include <catch2/catch_amalgamated.hpp>

#include "acw/fixtures.hpp"
#include "acw/presentation.hpp"

using namespace acw;

TEST_CASE("identity fixture and round trip", "[presentation]") {
  Presentation i2 = fixtures::identity(2);
  REQUIRE(i2.to_string() == "< a, b | a, b >");
  REQUIRE(Presentation::parse(i2.to_string()) == i2);

  Measures m = measures(i2);
  REQUIRE(m.generators == 2);
  REQUIRE(m.relators == 2);
  REQUIRE(m.total_relator_length == 2);
  REQUIRE(m.balanced);
  REQUIRE(m.deficiency == 0);
}

TEST_CASE("tower seed fixture measures", "[presentation]") {
  Presentation s2 = fixtures::sk(2);
  REQUIRE(s2.relators.size() == 1);
  // Freely reduced relator: t x t^-1 x t x^-1 t^-1 x^-1 x^-1 (9 letters).
  REQUIRE(s2.relators[0] ==
          Word::parse("t x t^-1 x t x^-1 t^-1 x^-2", s2.alphabet));
  Measures m = measures(s2);
  REQUIRE(m.total_relator_length == 9);
  REQUIRE(m.deficiency == 1);
  REQUIRE_FALSE(m.balanced);

  Presentation s3 = fixtures::sk(3);
  REQUIRE(measures(s3).total_relator_length == 10);
}

TEST_CASE("abelian and metabelian fixtures", "[presentation]") {
  Presentation q1 = fixtures::q1();
  REQUIRE(q1.to_string() == "< x, y | x y x^-1 y^-1 >");

  Presentation q2 = fixtures::q2();
  REQUIRE(q2.relators[0] == Word::parse("s^-1 a s a^-2", q2.alphabet));
  REQUIRE(measures(q2).deficiency == 1);
}

TEST_CASE("chained conjugation fixture", "[presentation]") {
  Presentation q = fixtures::qmk(3, 2);
  REQUIRE(q.generator_count() == 4);
  REQUIRE(q.relator_count() == 3);
  REQUIRE(measures(q).deficiency == 1);
  REQUIRE(q.relators[0] == Word::parse("s1^-1 a s1 a^-2", q.alphabet));
  REQUIRE(q.relators[1] == Word::parse("s2^-1 s1 s2 s1^-2", q.alphabet));
  REQUIRE(q.relators[2] == Word::parse("s3^-1 s2 s3 s2^-2", q.alphabet));
}

TEST_CASE("commuting tower fixture", "[presentation]") {
  Presentation b = fixtures::bm(2, 3);
  REQUIRE(b.generator_count() == 3);
  REQUIRE(b.relators[0] == Word::parse("x1 x0 x1^-1 x0^-3", b.alphabet));
  REQUIRE(b.relators[1] == Word::parse("x2 x1 x2^-1 x1^-3", b.alphabet));
}

TEST_CASE("rank-4 fixture is balanced", "[presentation]") {
  Presentation h = fixtures::hard_rank4();
  Measures m = measures(h);
  REQUIRE(m.generators == 4);
  REQUIRE(m.relators == 4);
  REQUIRE(m.balanced);
  // First relator is the k=2 tower seed relator under x -> a.
  Presentation s2 = fixtures::sk(2);
  Word a = Word::single(0), t = Word::single(1);
  REQUIRE(h.relators[0] == substitute(s2.relators[0], {a, t}));
  // Second relator is the same under x -> alpha, t -> tau.
  Word al = Word::single(2), ta = Word::single(3);
  REQUIRE(h.relators[1] == substitute(s2.relators[0], {al, ta}));
  // Relators 3 and 4 swap (a, t) with (alpha, tau).
  std::vector<Word> swap_images = {al, ta, a, t};
  REQUIRE(substitute(h.relators[2], swap_images) == h.relators[3]);
  REQUIRE(Presentation::parse(h.to_string()) == h);
}

TEST_CASE("presentation-level letter deletion", "[presentation]") {
  Presentation s2 = fixtures::sk(2);
  auto d = delete_letter(s2, "t");
  REQUIRE(d.result.generator_count() == 1);
  REQUIRE(d.result.alphabet.name(0) == "x");
  REQUIRE(d.removed == std::vector<long>{4});
  REQUIRE(d.result.relators[0] == Word::parse("x^-1", d.result.alphabet));

  // Deleting a from q2 leaves < s | 1 > (empty relator).
  auto d2 = delete_letter(fixtures::q2(), "a");
  REQUIRE(d2.removed == std::vector<long>{3});
  REQUIRE(d2.result.relators[0].empty());
}

TEST_CASE("presentation parse errors", "[presentation]") {
  REQUIRE_THROWS_AS(Presentation::parse("a, b | a"), ParseError);
  REQUIRE_THROWS_AS(Presentation::parse("< a, b >"), ParseError);
  REQUIRE_THROWS_AS(Presentation::parse("< a | a | a >"), ParseError);
  REQUIRE_THROWS_AS(Presentation::parse("< a, a | a >"), AlphabetError);
  REQUIRE_THROWS_AS(Presentation::parse("< a | b >"), AlphabetError);
  // Empty relator list is allowed; empty relator entry is not.
  REQUIRE(Presentation::parse("< a, b | >").relator_count() == 0);
  REQUIRE(Presentation::parse("< a | 1 >").relators[0].empty());
}
