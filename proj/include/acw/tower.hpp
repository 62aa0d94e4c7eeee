#pragma once

// Sparse signed base-k integers for tower-sized exponent arithmetic.
//
// A TowerInt stores a value of Z[1/k] as a sum  d_1*k^{e_1} + ... + d_r*k^{e_r}
// with digits d_i in {-(k-1),...,-1,1,...,k-1} and strictly increasing
// arbitrary-precision exponents e_i (negative exponents allowed).  The word
// problem solvers meet numbers like 3^(3^27) whose decimal expansion could
// never be written down; here that is a single term.
//
// The representation is not unique (2^1 - 2^0 = 2^0 at k = 2), but the tests
// that matter are still sound:
//   - nonzero test: the largest-exponent term dominates the tail, since
//     |tail| < (k-1) * sum_{j>=1} k^{e_r - j} = k^{e_r} <= |d_r| k^{e_r};
//   - integer test: terms with negative exponents sum to a value that is
//     nonzero (same dominance) and of absolute value < 1, so negative
//     exponents are present iff the value is not an integer;
//   - sign: the sign of the leading digit, again by dominance.
// Equality is decided by subtracting and testing zero.

#include <gmpxx.h>

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "acw/word.hpp"

namespace acw {

class TowerInt {
 public:
  struct Term {
    mpz_class exp;
    int digit;  // nonzero, |digit| < k
  };

  // Hard cap on stored terms; exceeding it means the computation left the
  // sparse regime this type is designed for.
  static constexpr std::size_t kMaxTerms = 1u << 16;

  explicit TowerInt(int k, long value = 0) : k_(check_k(k)) {
    accumulate_long(value, 0);
  }

  static TowerInt from_mpz(int k, const mpz_class& value) {
    TowerInt t(k);
    mpz_class v = value;
    mpz_class e = 0;
    while (v != 0) {
      mpz_class q, r;
      // Truncated division keeps |r| < k with r matching v's sign.
      mpz_tdiv_qr_ui(q.get_mpz_t(), r.get_mpz_t(), v.get_mpz_t(),
                     static_cast<unsigned long>(k));
      int d = static_cast<int>(r.get_si());
      if (d != 0) t.terms_.push_back({e, d});
      v = q;
      e += 1;
    }
    t.check_budget();
    return t;
  }

  int base() const { return k_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_integer() const { return terms_.empty() || terms_.front().exp >= 0; }
  std::size_t term_count() const { return terms_.size(); }

  int sign() const {
    if (terms_.empty()) return 0;
    return terms_.back().digit > 0 ? 1 : -1;
  }

  // Largest exponent; only meaningful when nonzero.
  const mpz_class& leading_exp() const {
    if (terms_.empty()) throw Error("leading_exp of zero");
    return terms_.back().exp;
  }

  TowerInt negated() const {
    TowerInt t = *this;
    for (Term& term : t.terms_) term.digit = -term.digit;
    return t;
  }

  // Multiplies by k^e.
  TowerInt shifted(const mpz_class& e) const {
    TowerInt t = *this;
    for (Term& term : t.terms_) term.exp += e;
    return t;
  }

  friend TowerInt operator+(const TowerInt& a, const TowerInt& b) {
    if (a.k_ != b.k_) throw Error("TowerInt base mismatch");
    TowerInt out(a.k_);
    // Merge the ascending term lists, then resolve digit overflow with a
    // carry that only ever moves to the adjacent exponent.
    std::size_t i = 0, j = 0;
    int carry = 0;
    mpz_class carry_exp = 0;
    auto flush_carry_below = [&](const mpz_class& next_exp) {
      // Carry lives at carry_exp; emit it if the next merged exponent is
      // beyond it (no interaction possible).
      while (carry != 0 && carry_exp < next_exp) {
        int d = carry % a.k_;
        carry /= a.k_;
        if (d != 0) out.terms_.push_back({carry_exp, d});
        carry_exp += 1;
      }
    };
    auto take = [&](const Term& t) {
      if (carry != 0 && carry_exp < t.exp) flush_carry_below(t.exp);
      int total = t.digit + (carry != 0 && carry_exp == t.exp ? carry : 0);
      if (carry != 0 && carry_exp == t.exp) carry = 0;
      int d = total % a.k_;
      int c = total / a.k_;
      if (d != 0) out.terms_.push_back({t.exp, d});
      if (c != 0) {
        carry = c;
        carry_exp = t.exp + 1;
      }
    };
    while (i < a.terms_.size() || j < b.terms_.size()) {
      if (j >= b.terms_.size() ||
          (i < a.terms_.size() && a.terms_[i].exp < b.terms_[j].exp)) {
        take(a.terms_[i++]);
      } else if (i >= a.terms_.size() || b.terms_[j].exp < a.terms_[i].exp) {
        take(b.terms_[j++]);
      } else {
        Term merged{a.terms_[i].exp, a.terms_[i].digit + b.terms_[j].digit};
        ++i;
        ++j;
        if (carry != 0 && carry_exp == merged.exp) {
          merged.digit += carry;
          carry = 0;
        } else if (carry != 0 && carry_exp < merged.exp) {
          flush_carry_below(merged.exp);
          if (carry != 0 && carry_exp == merged.exp) {
            merged.digit += carry;
            carry = 0;
          }
        }
        int d = merged.digit % a.k_;
        int c = merged.digit / a.k_;
        if (d != 0) out.terms_.push_back({merged.exp, d});
        if (c != 0) {
          carry = c;
          carry_exp = merged.exp + 1;
        }
      }
    }
    while (carry != 0) {
      int d = carry % a.k_;
      carry /= a.k_;
      if (d != 0) out.terms_.push_back({carry_exp, d});
      carry_exp += 1;
    }
    out.check_budget();
    return out;
  }

  friend TowerInt operator-(const TowerInt& a, const TowerInt& b) {
    return a + b.negated();
  }

  bool equals(const TowerInt& other) const { return (*this - other).is_zero(); }

  // Upper estimate of the bit size of the value (saturating; for budget
  // checks only).
  double bits_estimate() const {
    if (terms_.empty()) return 0.0;
    double e = terms_.back().exp.get_d();
    return e * std::log2(static_cast<double>(k_)) + 2.0;
  }

  // Exact integer value; refuses non-integers and anything over the budget.
  mpz_class value(long bit_budget = 1L << 20) const {
    if (!is_integer()) throw Error("TowerInt value is not an integer");
    if (bits_estimate() > static_cast<double>(bit_budget))
      throw TowerOverflowError("materializing ~" +
                               std::to_string(static_cast<long>(bits_estimate())) +
                               " bits exceeds budget " +
                               std::to_string(bit_budget));
    mpz_class v = 0;
    for (const Term& t : terms_) {
      mpz_class p;
      mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(k_),
                    t.exp.get_ui());
      v += t.digit * p;
    }
    return v;
  }

  // Decimal when small enough, otherwise the symbolic sparse sum, leading
  // term first, e.g. "3^7625597484987 - 3^27 + 2".
  std::string to_string() const {
    if (terms_.empty()) return "0";
    if (is_integer() && bits_estimate() <= 4096.0)
      return value(4096).get_str();
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      int d = it->digit;
      if (out.empty()) {
        if (d < 0) out += "-";
      } else {
        out += d < 0 ? " - " : " + ";
      }
      int mag = d < 0 ? -d : d;
      if (it->exp == 0) {
        out += std::to_string(mag);
      } else {
        if (mag != 1) out += std::to_string(mag) + "*";
        out += std::to_string(k_);
        out += "^";
        if (it->exp < 0) out += "(" + it->exp.get_str() + ")";
        else out += it->exp.get_str();
      }
    }
    return out;
  }

  const std::vector<Term>& terms() const { return terms_; }

 private:
  static int check_k(int k) {
    if (k < 2) throw Error("TowerInt base must be >= 2");
    return k;
  }

  void accumulate_long(long v, long e) {
    mpz_class exp = e;
    while (v != 0) {
      int d = static_cast<int>(v % k_);
      v /= k_;
      if (d != 0) terms_.push_back({exp, d});
      exp += 1;
    }
  }

  void check_budget() const {
    if (terms_.size() > kMaxTerms)
      throw TowerOverflowError("sparse representation exceeds " +
                               std::to_string(kMaxTerms) + " terms");
  }

  int k_;
  std::vector<Term> terms_;  // ascending exponents, nonzero digits
};

}  // namespace acw
