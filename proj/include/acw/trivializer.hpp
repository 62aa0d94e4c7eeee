#pragma once

// Constructive trivialization of the doubled presentation.
//
// Input: a filling certificate w = prod u_i r_{j(i)}^{e_i} u_i^{-1} over the
// seed relators, and a trace trivializing the quotient presentation obtained
// by deleting a0.  Output: a complete verifiable trace on build_Pw(spec):
//   (i)  N dihedral moves eat w^{-1} off the mixing relator, one conjugation
//        turns the leftover a1h a0 a1h^{-1} into a0;
//   (ii) the mirrored N+1 moves produce a0h from the hatted mixing relator;
//   (iii) with a0 (resp. a0h) available as a relator, each occurrence of a0
//        in a seed relator r = u a0^e v is removed by r <- r * (v^-1 a0^-e v),
//        exactly |r|_{a0} moves per relator;
//   (iv) the quotient trace runs on the unhatted block and, hat-renamed, on
//        the hatted block.
// The emitted dihedral count always equals the audit bound
//   2*len(trace_bar) + 2*(N+1) + 2*sum_r |r|_{a0}.

#include <mpfr.h>

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "acw/area.hpp"
#include "acw/constructions.hpp"
#include "acw/moves.hpp"

namespace acw {

struct TrivializationPlan {
  DoublingSpec spec;
  AreaCertificate cert_w;
  MoveTrace trace_bar;

  TrivializationPlan(DoublingSpec spec_, AreaCertificate cert_,
                     MoveTrace trace_bar_)
      : spec(std::move(spec_)),
        cert_w(std::move(cert_)),
        trace_bar(std::move(trace_bar_)) {
    if (!(cert_w.target() == spec.w))
      throw Error("certificate target is not the doubling word");
    for (const CertStep& s : cert_w.steps())
      s.u.check_alphabet(spec.seed.alphabet);
    if (!(AreaCertificate::product(spec.seed, cert_w.steps()) == spec.w))
      throw Error("certificate does not hold over the seed relators");

    Presentation bar = delete_letter(spec.seed, spec.a0).result;
    if (!(trace_bar.initial == bar))
      throw Error("quotient trace does not start at the a0-deleted seed");
    for (const Move& m : trace_bar.moves)
      if (!m.is_dihedral_like())
        throw Error("quotient trace may only use relator moves, got " +
                    std::string(op_name(m.op)));
    VerifyResult vr = verify_trivialization(trace_bar);
    if (!vr.accepted)
      throw Error("quotient trace does not trivialize: " + vr.reason);
  }
};

struct TrivializationReport {
  MoveTrace trace;
  MoveCounts counts;
  long cert_steps = 0;  // N
  long acc_bar = 0;     // moves in the quotient trace
  long sum_r0 = 0;      // a0 letters across the seed relators
  long bound = 0;       // 2*acc_bar + 2*(N+1) + 2*sum_r0
  bool within_bound = false;
};

namespace detail {

// Letter-wise renaming of a word over the quotient alphabet into the doubled
// alphabet, optionally into the hatted half.
inline Word lift_bar_word(const Word& u, const Alphabet& bar,
                          const Alphabet& seed, int hat_offset) {
  std::vector<Letter> ls;
  ls.reserve(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) {
    Letter l = u.letter(i);
    ls.push_back({seed.index(bar.name(l.gen)) + hat_offset, l.sign});
  }
  return Word::from_letters(ls);
}

inline Move lift_bar_move(const Move& m, const Alphabet& bar,
                          const Alphabet& seed, int rel_offset,
                          int hat_offset) {
  switch (m.op) {
    case Move::Op::Invert:
      return Move::invert(m.i + rel_offset);
    case Move::Op::MultiplyRight:
      return Move::multiply_right(m.i + rel_offset, m.j + rel_offset);
    case Move::Op::Conjugate:
      return Move::conj(m.i + rel_offset,
                        lift_bar_word(m.u, bar, seed, hat_offset));
    case Move::Op::Dihedral:
      return Move::dihedral(m.j + rel_offset, m.i + rel_offset, m.sign,
                            lift_bar_word(m.u, bar, seed, hat_offset));
    default:
      throw Error("quotient trace may only use relator moves");
  }
}

}  // namespace detail

inline TrivializationReport trivialize_Pw(const TrivializationPlan& plan) {
  const Presentation& seed = plan.spec.seed;
  const int n = seed.relator_count();
  const int ng = seed.alphabet.size();
  const int a0i = seed.alphabet.index(plan.spec.a0);
  const int a1hi = seed.alphabet.index(plan.spec.a1) + ng;
  const int mix = 2 * n + 1;      // a1h a0 a1h^-1 w^-1
  const int mix_hat = 2 * n + 2;  // a1 a0h a1^-1 wh^-1

  MoveTrace trace;
  trace.initial = build_Pw(plan.spec);
  const Alphabet& ab = trace.initial.alphabet;

  // (i) + (ii): reduce both mixing relators to a0 / a0h.
  for (const CertStep& s : plan.cert_w.steps())
    trace.moves.push_back(Move::dihedral(mix, s.relator, s.sign, s.u));
  trace.moves.push_back(Move::conj(mix, Word::single(a1hi, -1)));
  AreaCertificate hatted =
      hat_certificate(AreaCertificate(trace.initial, plan.spec.w,
                                      plan.cert_w.steps()),
                      trace.initial, ng, n);
  for (const CertStep& s : hatted.steps())
    trace.moves.push_back(Move::dihedral(mix_hat, s.relator, s.sign, s.u));
  trace.moves.push_back(Move::conj(mix_hat, Word::single(a1hi - ng, -1)));

  // (iii): strip a0 from the seed block, a0h from the hatted block.  Working
  // back from the last occurrence keeps every conjugator a0-free.
  long sum_r0 = 0;
  auto eliminate = [&](int rel, int source, int letter) {
    Word r = trace.initial.relators[rel - 1];
    while (true) {
      std::size_t pos = r.size();
      for (std::size_t q = r.size(); q-- > 0;)
        if (r.letter(q).gen == letter) {
          pos = q;
          break;
        }
      if (pos == r.size()) break;
      int e = r.letter(pos).sign;
      Word v = Word::from_code_trusted(r.code().substr(pos + 1));
      Move m = Move::dihedral(rel, source, -e, v.inverse());
      r = r * conjugate(Word::single(letter, -e), m.u);
      trace.moves.push_back(std::move(m));
    }
  };
  for (int i = 1; i <= n; ++i) {
    sum_r0 += delete_letter(seed.relators[i - 1], a0i).removed;
    eliminate(i, mix, a0i);
    eliminate(n + i, mix_hat, a0i + ng);
  }

  // (iv): the quotient trace on each half; conjugators avoid a0/a0h, so the
  // two single-letter relators stay put.
  const Alphabet& bar_ab = plan.trace_bar.initial.alphabet;
  for (const Move& m : plan.trace_bar.moves)
    trace.moves.push_back(detail::lift_bar_move(m, bar_ab, seed.alphabet,
                                                /*rel_offset=*/0,
                                                /*hat_offset=*/0));
  for (const Move& m : plan.trace_bar.moves) {
    Move lifted = detail::lift_bar_move(m, bar_ab, seed.alphabet,
                                        /*rel_offset=*/n, /*hat_offset=*/ng);
    trace.moves.push_back(std::move(lifted));
  }

  TrivializationReport rep;
  rep.cert_steps = static_cast<long>(plan.cert_w.steps().size());
  rep.acc_bar = static_cast<long>(plan.trace_bar.moves.size());
  rep.sum_r0 = sum_r0;
  rep.bound = 2 * rep.acc_bar + 2 * (rep.cert_steps + 1) + 2 * rep.sum_r0;
  rep.counts = dihedral_count(trace);
  rep.within_bound = rep.counts.dihedral <= rep.bound;
  rep.trace = std::move(trace);
  return rep;
}

// Ready-made plan for the standard family: seed S_2, w = w_n, certificate
// from the recursive construction, quotient trace [Invert] on <x | x^-1>.
inline TrivializationPlan sk_wn_plan(int k, long n, long step_budget = 4096) {
  DoublingSpec spec = sk_wn_spec(k, n);
  AreaCertificate cert = wn_certificate(k, n, step_budget);

  Presentation bar = delete_letter(spec.seed, spec.a0).result;
  MoveTrace trace_bar;
  trace_bar.initial = bar;
  Word x = Word::single(0);
  if (bar.relators.size() == 1 && bar.relators[0] == x.inverse())
    trace_bar.moves.push_back(Move::invert(1));
  else if (!(bar.relators.size() == 1 && bar.relators[0] == x))
    throw Error("deleting " + spec.a0 +
                " does not leave a trivializable quotient (k > 2?)");
  return TrivializationPlan(std::move(spec), std::move(cert),
                            std::move(trace_bar));
}

struct AccBounds {
  long tower_height = 0;  // Delta_k(height) drives the bound
  std::optional<mpz_class> lower;
  std::string description;
  std::optional<long> upper;  // dihedral count of the supplied trace
};

namespace detail {

// ceil(D*ln(k) - ln(3)) with directed rounding at increasing precision until
// both enclosure endpoints agree, so the returned integer is exact.
inline mpz_class ceil_log_bound(const mpz_class& d, int k) {
  mpfr_prec_t prec =
      std::max<mpfr_prec_t>(256, mpz_sizeinbase(d.get_mpz_t(), 2) + 64);
  for (; prec <= (1L << 22); prec *= 2) {
    mpfr_t lo, hi, t;
    mpfr_inits2(prec, lo, hi, t, static_cast<mpfr_ptr>(nullptr));
    // Lower endpoint: round every step toward -inf.
    mpfr_set_ui(lo, static_cast<unsigned long>(k), MPFR_RNDD);
    mpfr_log(lo, lo, MPFR_RNDD);
    mpfr_mul_z(lo, lo, d.get_mpz_t(), MPFR_RNDD);
    mpfr_set_ui(t, 3, MPFR_RNDU);
    mpfr_log(t, t, MPFR_RNDU);
    mpfr_sub(lo, lo, t, MPFR_RNDD);
    // Upper endpoint: round toward +inf.
    mpfr_set_ui(hi, static_cast<unsigned long>(k), MPFR_RNDU);
    mpfr_log(hi, hi, MPFR_RNDU);
    mpfr_mul_z(hi, hi, d.get_mpz_t(), MPFR_RNDU);
    mpfr_set_ui(t, 3, MPFR_RNDD);
    mpfr_log(t, t, MPFR_RNDD);
    mpfr_sub(hi, hi, t, MPFR_RNDU);

    mpz_class clo, chi;
    mpfr_get_z(clo.get_mpz_t(), lo, MPFR_RNDU);  // ceil of each endpoint
    mpfr_get_z(chi.get_mpz_t(), hi, MPFR_RNDU);
    mpfr_clears(lo, hi, t, static_cast<mpfr_ptr>(nullptr));
    if (clo == chi) return clo;
  }
  throw Error("ceil_log_bound: enclosure did not stabilize");
}

}  // namespace detail

// Trace-length bracket for trivializing the doubled presentation at w_n:
// lower = ceil(ln Delta_k(floor(log2 n)) - ln 3), computed exactly whenever
// the next-lower tower level fits the bit budget, otherwise described
// symbolically; upper = dihedral count of a supplied verified trace.
inline AccBounds acc_bounds(const mpz_class& n, int k,
                            const MoveTrace* trace = nullptr,
                            long bit_budget = 1L << 20) {
  if (n < 2) throw Error("acc_bounds needs n >= 2");
  if (k < 2) throw Error("acc_bounds needs k >= 2");
  long m = static_cast<long>(mpz_sizeinbase(n.get_mpz_t(), 2)) - 1;

  AccBounds out;
  out.tower_height = m;
  // ln Delta_k(m) = Delta_k(m-1) * ln k.
  try {
    if (m - 1 > (1 << 20)) throw TowerOverflowError("tower height " +
                                                    std::to_string(m));
    mpz_class d = delta_k(k, static_cast<int>(m - 1), bit_budget);
    out.lower = detail::ceil_log_bound(d, k);
    out.description = "ceil(ln Delta_" + std::to_string(k) + "(" +
                      std::to_string(m) + ") - ln 3) = " + out.lower->get_str();
  } catch (const TowerOverflowError&) {
    out.description = "ceil(ln Delta_" + std::to_string(k) + "(" +
                      std::to_string(m) + ") - ln 3): Delta_" +
                      std::to_string(k) + "(" + std::to_string(m) +
                      ") is a tower of " + std::to_string(k) +
                      "s of height " + std::to_string(m + 1) +
                      ", beyond the bit budget";
  }
  if (trace) out.upper = dihedral_count(*trace).dihedral;
  return out;
}

inline AccBounds acc_bounds(long n, int k, const MoveTrace* trace = nullptr,
                            long bit_budget = 1L << 20) {
  return acc_bounds(mpz_class(n), k, trace, bit_budget);
}

}  // namespace acw
