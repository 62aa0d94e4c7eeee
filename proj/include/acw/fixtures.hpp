#pragma once

// Named fixture presentations used throughout the tests and the CLI.

#include "acw/presentation.hpp"

namespace acw {
namespace fixtures {

// <a, b, c, ... | a, b, c, ...>: k generators, each also a relator.
inline Presentation identity(int k) {
  if (k < 1 || k > 26) throw Error("identity fixture supports 1 <= k <= 26");
  Alphabet a;
  std::vector<Word> rels;
  for (int i = 0; i < k; ++i) {
    a.add(std::string(1, static_cast<char>('a' + i)));
    rels.push_back(Word::single(i));
  }
  return Presentation(std::move(a), std::move(rels));
}

// Free abelian rank 2: <x, y | x y x^-1 y^-1>.
inline Presentation q1() {
  Alphabet a({"x", "y"});
  return Presentation(a, {Word::parse("x y x^-1 y^-1", a)});
}

// Solvable Baumslag-Solitar group: <a, s | s^-1 a s a^-2>.
inline Presentation q2() {
  Alphabet a({"a", "s"});
  return Presentation(a, {Word::parse("s^-1 a s a^-2", a)});
}

// <a, s1..sm | s1^-1 a s1 a^-k, s_{i+1}^-1 s_i s_{i+1} s_i^-k>.
inline Presentation qmk(int m, int k) {
  if (m < 1) throw Error("qmk fixture needs m >= 1");
  if (k < 2) throw Error("qmk fixture needs k >= 2");
  Alphabet a({"a"});
  for (int i = 1; i <= m; ++i) a.add("s" + std::to_string(i));
  std::vector<Word> rels;
  Word base = Word::single(0);
  for (int i = 1; i <= m; ++i) {
    Word s = Word::single(i);
    rels.push_back(s.inverse() * base * s * base.pow(-k));
    base = s;
  }
  return Presentation(std::move(a), std::move(rels));
}

// One-relator tower seed: <x, t | (t x t^-1) x (t x t^-1)^-1 x^-k>.
inline Presentation sk(int k) {
  if (k < 2) throw Error("sk fixture needs k >= 2");
  Alphabet a({"x", "t"});
  Word x = Word::single(0), t = Word::single(1);
  Word y = t * x * t.inverse();
  return Presentation(a, {y * x * y.inverse() * x.pow(-k)});
}

// <x0..xm | x_{i+1} x_i x_{i+1}^-1 x_i^-k for 0 <= i < m>.
inline Presentation bm(int m, int k) {
  if (m < 1) throw Error("bm fixture needs m >= 1");
  if (k < 2) throw Error("bm fixture needs k >= 2");
  Alphabet a;
  for (int i = 0; i <= m; ++i) a.add("x" + std::to_string(i));
  std::vector<Word> rels;
  for (int i = 0; i < m; ++i) {
    Word lo = Word::single(i), hi = Word::single(i + 1);
    rels.push_back(hi * lo * hi.inverse() * lo.pow(-k));
  }
  return Presentation(std::move(a), std::move(rels));
}

// A balanced rank-4 presentation of the trivial group whose relators mix two
// tower seeds through nested commutators.  Stored as literal structure, not
// derived from the doubling construction.
inline Presentation hard_rank4() {
  Alphabet g({"a", "t", "alpha", "tau"});
  Word a = Word::single(0), t = Word::single(1);
  Word al = Word::single(2), ta = Word::single(3);

  auto nest = [](const Word& gen, const Word& stable) {
    // [s[s[s g^20 s^-1, g] s^-1, g] s^-1, g] with g = gen, s = stable
    Word c = gen.pow(20);
    for (int i = 0; i < 3; ++i) c = commutator(conjugate(c, stable), gen);
    return c;
  };

  std::vector<Word> rels;
  rels.push_back(commutator(conjugate(a, t), a) * a.inverse());
  rels.push_back(commutator(conjugate(al, ta), al) * al.inverse());
  rels.push_back(al * t.inverse() * al.inverse() * commutator(a, nest(a, t)));
  rels.push_back(a * ta.inverse() * a.inverse() * commutator(al, nest(al, ta)));
  return Presentation(std::move(g), std::move(rels));
}

}  // namespace fixtures
}  // namespace acw
