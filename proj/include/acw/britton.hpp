#pragma once

// Exact word problem for the groups S_k and for the subscript chain groups.
//
// S_k = < x, t | (t x t^-1) x (t x t^-1)^-1 x^-k > is an HNN extension of
// BS(1,k) = < x, y | y x y^-1 x^-k > (y := t x t^-1) with stable letter t
// conjugating <x> to <y>.  BS(1,k) embeds in the affine group of the line:
// x = (1,0), y = (0,1), product (a,b)(a',b') = (a + k^b a', b + b').  A word
// is trivial iff its Britton-reduced form has no t letters and evaluates to
// the identity pair.

#include <gmpxx.h>

#include <string>
#include <vector>

#include "acw/indexed_word.hpp"
#include "acw/tower.hpp"
#include "acw/word.hpp"

namespace acw {

struct SolverBudgets {
  long bit_budget = 1L << 20;  // for materializing pinch exponents
};

// Element (a, b) of BS(1,k): the affine map  z -> k^b z + a  restricted to
// a in Z[1/k], b in Z.  b is kept exact as an integer; a as a sparse TowerInt.
struct AffinePair {
  TowerInt a;
  mpz_class b;

  explicit AffinePair(int k) : a(k), b(0) {}
  AffinePair(TowerInt a_, mpz_class b_) : a(std::move(a_)), b(std::move(b_)) {}

  bool is_identity() const { return a.is_zero() && b == 0; }
  bool in_x_subgroup() const { return b == 0 && a.is_integer(); }
  bool in_y_subgroup() const { return a.is_zero(); }

  friend AffinePair operator*(const AffinePair& g, const AffinePair& h) {
    return AffinePair(g.a + h.a.shifted(g.b), g.b + h.b);
  }

  AffinePair inverse() const {
    return AffinePair(a.negated().shifted(-b), -b);
  }

  std::string to_string() const {
    return "(" + a.to_string() + ", " + b.get_str() + ")";
  }
};

// Evaluation of a word over an {x, y} alphabet in the affine model.
inline AffinePair eval_bs(const Word& w, const Alphabet& ab, int k,
                          const std::string& x_name = "x",
                          const std::string& y_name = "y") {
  int gx = ab.index(x_name);
  int gy = ab.index(y_name);
  AffinePair acc(k);
  for (std::size_t i = 0; i < w.size(); ++i) {
    Letter l = w.letter(i);
    AffinePair g(k);
    if (l.gen == gx) {
      g.a = TowerInt(k, l.sign);
    } else if (l.gen == gy) {
      g.b = l.sign;
    } else {
      throw AlphabetError("eval_bs input must use only the two given letters");
    }
    acc = acc * g;
  }
  return acc;
}

// Britton-reduced form: g_0 t^{e_1} g_1 ... t^{e_r} g_r with no pinch
// t (n, 0) t^-1 or t^-1 (0, n) t remaining.
struct BrittonState {
  std::vector<AffinePair> syllables;  // r + 1 entries
  std::vector<int> t_signs;           // r entries

  std::size_t t_count() const { return t_signs.size(); }

  std::string to_string() const {
    std::string out = syllables.front().to_string();
    for (std::size_t i = 0; i < t_signs.size(); ++i) {
      out += t_signs[i] > 0 ? " t " : " t^-1 ";
      out += syllables[i + 1].to_string();
    }
    return out;
  }
};

struct BrittonResult {
  bool trivial = false;
  BrittonState reduced;
};

// Decides w = 1 in S_k by stack-based Britton reduction.  Pinches:
// t (n, 0) t^-1 -> (0, n)  and  t^-1 (0, n) t -> (n, 0).
inline BrittonResult britton_solve(const Word& w, const Alphabet& ab, int k,
                                   const SolverBudgets& budgets = {}) {
  if (k < 2) throw Error("britton_solve needs k >= 2");
  int gx = ab.index("x");
  int gt = ab.index("t");

  std::vector<AffinePair> pairs;  // pairs[i] precedes t_signs[i]
  std::vector<int> signs;
  AffinePair cur(k);

  for (std::size_t i = 0; i < w.size(); ++i) {
    Letter l = w.letter(i);
    if (l.gen == gx) {
      cur = cur * AffinePair(TowerInt(k, l.sign), 0);
      continue;
    }
    if (l.gen != gt) throw AlphabetError("britton_solve input must use x, t");
    if (!signs.empty() && signs.back() == -l.sign) {
      if (signs.back() == 1 && cur.in_x_subgroup()) {
        // t x^n t^-1 = y^n
        mpz_class n = cur.a.value(budgets.bit_budget);
        cur = pairs.back() * AffinePair(TowerInt(k), n);
        pairs.pop_back();
        signs.pop_back();
        continue;
      }
      if (signs.back() == -1 && cur.in_y_subgroup()) {
        // t^-1 y^n t = x^n
        cur = pairs.back() * AffinePair(TowerInt::from_mpz(k, cur.b), 0);
        pairs.pop_back();
        signs.pop_back();
        continue;
      }
    }
    pairs.push_back(cur);
    signs.push_back(l.sign);
    cur = AffinePair(k);
  }

  BrittonResult res;
  res.reduced.syllables = std::move(pairs);
  res.reduced.syllables.push_back(cur);
  res.reduced.t_signs = std::move(signs);
  res.trivial =
      res.reduced.t_count() == 0 && res.reduced.syllables.front().is_identity();
  return res;
}

inline BrittonResult britton_solve(const Word& w, int k,
                                   const SolverBudgets& budgets = {}) {
  return britton_solve(w, Alphabet({"x", "t"}), k, budgets);
}

// Word problem for the chain groups < x_i | x_{i+1} x_i x_{i+1}^-1 x_i^-k >:
// x_i -> t^i x t^-i embeds them into S_k, so v = 1 iff its image is.
inline bool solve_Bm(const IndexedWord& v, int k,
                     const SolverBudgets& budgets = {}) {
  Alphabet ab({"x", "t"});
  return britton_solve(phi(v, ab), ab, k, budgets).trivial;
}

}  // namespace acw
