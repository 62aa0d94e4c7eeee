#pragma once

// Generative machinery: the recursive word families V_m and w_n over {x, t},
// the subscript lift into the chain groups, exponent towers, and the two
// doubling constructions that turn a deficiency-1 seed presentation plus a
// target word into a balanced presentation.

#include <gmpxx.h>

#include <cmath>
#include <string>
#include <vector>

#include "acw/fixtures.hpp"
#include "acw/indexed_word.hpp"
#include "acw/presentation.hpp"

namespace acw {

inline Alphabet xt_alphabet() { return Alphabet({"x", "t"}); }

// V_0 = x, V_m = t V_{m-1} t^-1 x t V_{m-1}^-1 t^-1.  |V_m| = 6*2^m - 5.
inline Word gen_V(int m, const Alphabet& ab) {
  if (m < 0) throw Error("gen_V needs m >= 0");
  if (m > 22) throw Error("gen_V refuses m > 22 (word would exceed memory)");
  Word x = Word::single(ab.index("x"));
  Word t = Word::single(ab.index("t"));
  Word v = x;
  for (int i = 1; i <= m; ++i) {
    Word tv = t * v;
    v = tv * t.inverse() * x * t * v.inverse() * t.inverse();
  }
  return v;
}

inline Word gen_V(int m) { return gen_V(m, xt_alphabet()); }

inline int floor_log2(long n) {
  if (n < 1) throw Error("floor_log2 needs n >= 1");
  int m = 0;
  while ((n >> (m + 1)) > 0) ++m;
  return m;
}

// w_n = x V_m x^-1 V_m^-1 with m = floor(log2 n); constant between powers of
// two.  w_1 is freely trivial, so nontrivial uses start at n = 2.
inline Word gen_w(long n, const Alphabet& ab) {
  if (n < 1) throw Error("gen_w needs n >= 1");
  Word x = Word::single(ab.index("x"));
  Word v = gen_V(floor_log2(n), ab);
  return x * v * x.inverse() * v.inverse();
}

inline Word gen_w(long n) { return gen_w(n, xt_alphabet()); }

// Subscript lift: each x^{+-1} whose prefix has t-exponent m becomes
// x_m^{+-1}.  Defined for words with zero total t-exponent; the lift of a
// freely reduced word is freely reduced and no longer than the input.
inline IndexedWord dagger_lift(const Word& w, const Alphabet& ab) {
  int gx = ab.index("x");
  int gt = ab.index("t");
  if (w.exponent_sum(gt) != 0)
    throw Error("dagger_lift needs zero t-exponent, got " +
                std::to_string(w.exponent_sum(gt)));
  std::vector<ILetter> out;
  long level = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    Letter l = w.letter(i);
    if (l.gen == gt) {
      level += l.sign;
    } else if (l.gen == gx) {
      out.push_back({level, l.sign});
    } else {
      throw AlphabetError("dagger_lift input must use only x and t");
    }
  }
  return IndexedWord::from_letters(out);
}

inline IndexedWord dagger_lift(const Word& w) {
  return dagger_lift(w, xt_alphabet());
}

inline IndexedWord shift_sigma(const IndexedWord& v, long d) {
  return v.shift(d);
}

// Exact tower value Delta_k(0) = k, Delta_k(m+1) = k^Delta_k(m).  Refuses
// with TowerOverflowError once the result would exceed the bit budget.
inline mpz_class delta_k(int k, int m, long bit_budget = 1L << 20) {
  if (k < 2) throw Error("delta_k needs k >= 2");
  if (m < 0) throw Error("delta_k needs m >= 0");
  double log2k = std::log2(static_cast<double>(k));
  mpz_class v = k;
  for (int i = 0; i < m; ++i) {
    // Next value is k^v with about v*log2(k) bits.
    if (!v.fits_slong_p() ||
        static_cast<double>(v.get_si()) * log2k > static_cast<double>(bit_budget))
      throw TowerOverflowError("delta_k(" + std::to_string(k) + ", " +
                               std::to_string(m) + ") exceeds " +
                               std::to_string(bit_budget) + " bits at level " +
                               std::to_string(i + 1));
    mpz_class next;
    mpz_ui_pow_ui(next.get_mpz_t(), static_cast<unsigned long>(k),
                  static_cast<unsigned long>(v.get_si()));
    v = next;
  }
  return v;
}

// Input data for the doubling constructions: a deficiency-1 seed with two
// distinguished generators a_0, a_1 and a target word w over the seed.
struct DoublingSpec {
  Presentation seed;
  std::string a0;
  std::string a1;
  Word w;

  DoublingSpec(Presentation seed_, std::string a0_, std::string a1_, Word w_)
      : seed(std::move(seed_)),
        a0(std::move(a0_)),
        a1(std::move(a1_)),
        w(std::move(w_)) {
    if (a0 == a1) throw Error("doubling needs distinct a0, a1");
    seed.alphabet.index(a0);
    seed.alphabet.index(a1);
    w.check_alphabet(seed.alphabet);
  }
};

namespace detail {

inline bool name_taken(const std::vector<std::string>& names,
                       const std::string& c) {
  for (const auto& n : names)
    if (n == c) return true;
  return false;
}

// Deterministic fresh name: append "h" until the candidate is unused.
inline std::string hat_name(const std::string& base,
                            const std::vector<std::string>& taken) {
  std::string c = base + "h";
  while (name_taken(taken, c)) c += "h";
  return c;
}

inline Alphabet doubled_alphabet(const Alphabet& seed) {
  std::vector<std::string> names = seed.names();
  for (std::size_t i = 0; i < seed.size(); ++i)
    names.push_back(hat_name(seed.name(static_cast<int>(i)), names));
  return Alphabet(names);
}

inline void require_deficiency_one(const Presentation& seed) {
  if (measures(seed).deficiency != 1)
    throw Error("doubling needs a deficiency-1 seed, got deficiency " +
                std::to_string(measures(seed).deficiency));
}

}  // namespace detail

// Reindexes every letter g -> g + offset (the hatted copy lives in the upper
// half of a doubled alphabet).
inline Word hat_shift(const Word& w, int offset) {
  std::vector<Letter> ls;
  ls.reserve(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) {
    Letter l = w.letter(i);
    ls.push_back({l.gen + offset, l.sign});
  }
  return Word::from_letters(ls);
}

// Balanced double: generators A + hatted A, relators R, hatted R, and the two
// mixing relators  a1h a0 a1h^-1 w^-1  and  a1 a0h a1^-1 wh^-1.
inline Presentation build_Pw(const DoublingSpec& spec) {
  detail::require_deficiency_one(spec.seed);
  int ng = static_cast<int>(spec.seed.alphabet.size());
  Alphabet ab = detail::doubled_alphabet(spec.seed.alphabet);
  Word a0 = Word::single(spec.seed.alphabet.index(spec.a0));
  Word a1 = Word::single(spec.seed.alphabet.index(spec.a1));
  Word a0h = hat_shift(a0, ng);
  Word a1h = hat_shift(a1, ng);
  Word wh = hat_shift(spec.w, ng);

  std::vector<Word> rels = spec.seed.relators;
  for (const Word& r : spec.seed.relators) rels.push_back(hat_shift(r, ng));
  rels.push_back(a1h * a0 * a1h.inverse() * spec.w.inverse());
  rels.push_back(a1 * a0h * a1.inverse() * wh.inverse());
  return Presentation(std::move(ab), std::move(rels));
}

// Redundant-generator form: two fresh stable letters s, sh with relators
// s a0 s^-1 w^-1, sh a0h sh^-1 wh^-1, s a1h^-1, sh a1^-1.  Substituting
// s -> a1h, sh -> a1 (forced by the last two relators) recovers build_Pw.
inline Presentation build_tilde_Pw(const DoublingSpec& spec) {
  detail::require_deficiency_one(spec.seed);
  int ng = static_cast<int>(spec.seed.alphabet.size());
  std::vector<std::string> names = detail::doubled_alphabet(spec.seed.alphabet).names();

  std::string s_name = "s";
  for (int i = 1; detail::name_taken(names, s_name); ++i)
    s_name = "s" + std::to_string(i);
  names.push_back(s_name);
  std::string sh_name = detail::hat_name(s_name, names);
  names.push_back(sh_name);
  Alphabet ab(names);

  Word a0 = Word::single(spec.seed.alphabet.index(spec.a0));
  Word a1 = Word::single(spec.seed.alphabet.index(spec.a1));
  Word a0h = hat_shift(a0, ng);
  Word a1h = hat_shift(a1, ng);
  Word wh = hat_shift(spec.w, ng);
  Word s = Word::single(2 * ng);
  Word sh = Word::single(2 * ng + 1);

  std::vector<Word> rels = spec.seed.relators;
  for (const Word& r : spec.seed.relators) rels.push_back(hat_shift(r, ng));
  rels.push_back(s * a0 * s.inverse() * spec.w.inverse());
  rels.push_back(sh * a0h * sh.inverse() * wh.inverse());
  rels.push_back(s * a1h.inverse());
  rels.push_back(sh * a1.inverse());
  return Presentation(std::move(ab), std::move(rels));
}

// Standard instance: seed S_k with a0 = t, a1 = x, target w_n.
inline DoublingSpec sk_wn_spec(int k, long n) {
  Presentation seed = fixtures::sk(k);
  Word w = gen_w(n, seed.alphabet);
  return DoublingSpec(std::move(seed), "t", "x", std::move(w));
}

}  // namespace acw
