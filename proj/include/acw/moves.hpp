#pragma once

// The move calculus on presentations.
//
// Elementary moves, all preserving the presented group:
//   Invert(i)           r_i <- r_i^-1
//   MultiplyRight(i,j)  r_i <- r_i r_j          (i != j)
//   Conjugate(i,u)      r_i <- u r_i u^-1
//   Dihedral(j,i,s,u)   r_j <- r_j (u r_i^s u^-1), counted as one move
//   Stabilize(l)        append l fresh generators, each also a new relator;
//                       legal only as a leading segment of a trace
//   AddEmpty            append an empty relator     (auxiliary T move)
//   RemoveEmpty(i)      remove relator i, which must be empty
//
// Indices are 1-based throughout, matching the serialized form.

#include <gmpxx.h>

#include "acw/presentation.hpp"

namespace acw {

struct Move {
  enum class Op {
    Invert,
    MultiplyRight,
    Conjugate,
    Dihedral,
    Stabilize,
    AddEmpty,
    RemoveEmpty
  };

  Op op = Op::Invert;
  int i = 0;     // target relator for Invert/MultiplyRight/Conjugate,
                 // source relator for Dihedral
  int j = 0;     // source for MultiplyRight, target for Dihedral
  int sign = 1;  // Dihedral exponent
  Word u;        // conjugator for Conjugate/Dihedral
  int count = 0; // Stabilize: number of new generators; RemoveEmpty: index

  static Move invert(int i) { return {Op::Invert, i}; }
  static Move multiply_right(int i, int j) { return {Op::MultiplyRight, i, j}; }
  static Move conj(int i, Word u) {
    Move m{Op::Conjugate, i};
    m.u = std::move(u);
    return m;
  }
  static Move dihedral(int j, int i, int sign, Word u) {
    Move m{Op::Dihedral, i, j, sign};
    m.u = std::move(u);
    return m;
  }
  static Move stabilize(int l) {
    Move m{Op::Stabilize};
    m.count = l;
    return m;
  }
  static Move add_empty() { return {Op::AddEmpty}; }
  static Move remove_empty(int index) {
    Move m{Op::RemoveEmpty};
    m.count = index;
    return m;
  }

  bool is_dihedral_like() const {
    return op == Op::Invert || op == Op::MultiplyRight || op == Op::Conjugate ||
           op == Op::Dihedral;
  }
};

inline const char* op_name(Move::Op op) {
  switch (op) {
    case Move::Op::Invert: return "invert";
    case Move::Op::MultiplyRight: return "multiply";
    case Move::Op::Conjugate: return "conjugate";
    case Move::Op::Dihedral: return "dihedral";
    case Move::Op::Stabilize: return "stabilize";
    case Move::Op::AddEmpty: return "add_empty";
    case Move::Op::RemoveEmpty: return "remove_empty";
  }
  return "?";
}

namespace detail {
inline int checked_index(const Presentation& p, int one_based,
                         const char* what) {
  if (one_based < 1 || one_based > p.relator_count())
    throw MoveError(std::string(what) + " index " + std::to_string(one_based) +
                    " out of range (1.." + std::to_string(p.relator_count()) +
                    ")");
  return one_based - 1;
}
}  // namespace detail

inline Presentation apply_move(const Presentation& p, const Move& m) {
  Presentation out = p;
  switch (m.op) {
    case Move::Op::Invert: {
      int i = detail::checked_index(p, m.i, "relator");
      out.relators[i] = out.relators[i].inverse();
      break;
    }
    case Move::Op::MultiplyRight: {
      int i = detail::checked_index(p, m.i, "target relator");
      int j = detail::checked_index(p, m.j, "source relator");
      if (i == j) throw MoveError("multiply needs distinct relators");
      out.relators[i] = out.relators[i] * out.relators[j];
      break;
    }
    case Move::Op::Conjugate: {
      int i = detail::checked_index(p, m.i, "relator");
      m.u.check_alphabet(p.alphabet);
      out.relators[i] = conjugate(out.relators[i], m.u);
      break;
    }
    case Move::Op::Dihedral: {
      int j = detail::checked_index(p, m.j, "target relator");
      int i = detail::checked_index(p, m.i, "source relator");
      if (i == j) throw MoveError("dihedral needs distinct relators");
      if (m.sign != 1 && m.sign != -1)
        throw MoveError("dihedral sign must be +1/-1");
      m.u.check_alphabet(p.alphabet);
      Word factor = conjugate(out.relators[i].pow(m.sign), m.u);
      out.relators[j] = out.relators[j] * factor;
      break;
    }
    case Move::Op::Stabilize: {
      if (m.count < 1) throw MoveError("stabilize needs l >= 1");
      int next = 1;
      for (int c = 0; c < m.count; ++c) {
        std::string name;
        do {
          name = "x" + std::to_string(next++);
        } while (out.alphabet.contains(name));
        int gi = out.alphabet.add(name);
        out.relators.push_back(Word::single(gi));
      }
      break;
    }
    case Move::Op::AddEmpty:
      out.relators.push_back(Word());
      break;
    case Move::Op::RemoveEmpty: {
      int i = detail::checked_index(p, m.count, "relator");
      if (!out.relators[i].empty())
        throw MoveError("remove_empty: relator " + std::to_string(m.count) +
                        " is not empty");
      out.relators.erase(out.relators.begin() + i);
      break;
    }
  }
  return out;
}

struct MoveTrace {
  Presentation initial;
  std::vector<Move> moves;
};

// Replays the trace, enforcing that Stabilize moves form a leading segment.
// Throws MoveError naming the failing move.
inline Presentation replay(const MoveTrace& trace) {
  Presentation p = trace.initial;
  bool past_prefix = false;
  for (size_t n = 0; n < trace.moves.size(); ++n) {
    const Move& m = trace.moves[n];
    if (m.op == Move::Op::Stabilize) {
      if (past_prefix)
        throw MoveError("move " + std::to_string(n + 1) +
                        ": stabilize is only legal before all other moves");
    } else {
      past_prefix = true;
    }
    try {
      p = apply_move(p, m);
    } catch (const MoveError& e) {
      throw MoveError("move " + std::to_string(n + 1) + " (" +
                      op_name(m.op) + "): " + e.what());
    }
  }
  return p;
}

struct MoveCounts {
  long dihedral = 0;        // Invert + MultiplyRight + Conjugate + Dihedral
  long stabilize = 0;
  long tietze = 0;          // AddEmpty + RemoveEmpty
  long conjugator_length = 0;  // optional length-weighted metric
};

inline MoveCounts dihedral_count(const MoveTrace& trace) {
  MoveCounts c;
  for (const auto& m : trace.moves) {
    if (m.is_dihedral_like()) {
      ++c.dihedral;
      c.conjugator_length += static_cast<long>(m.u.size());
    } else if (m.op == Move::Op::Stabilize) {
      ++c.stabilize;
    } else {
      ++c.tietze;
    }
  }
  return c;
}

struct VerifyOptions {
  bool exact_order = false;  // require r_i == a_i verbatim
};

struct VerifyResult {
  bool accepted = false;
  std::string reason;
  Presentation final_presentation;
};

// Accepts a trace that carries its initial presentation to the identity
// presentation: every relator a single letter, hitting each generator exactly
// once (up to permutation and inversion unless exact_order is set).
inline VerifyResult verify_trivialization(const MoveTrace& trace,
                                          VerifyOptions opts = {}) {
  VerifyResult out;
  Presentation p;
  try {
    p = replay(trace);
  } catch (const MoveError& e) {
    out.reason = e.what();
    return out;
  }
  out.final_presentation = p;

  // Balance is checked after the leading Stabilize block.
  Presentation after_prefix = trace.initial;
  for (const auto& m : trace.moves) {
    if (m.op != Move::Op::Stabilize) break;
    after_prefix = apply_move(after_prefix, m);
  }
  if (!measures(after_prefix).balanced) {
    out.reason = "initial presentation is not balanced";
    return out;
  }

  if (p.relator_count() != p.generator_count()) {
    out.reason = "final presentation is not balanced";
    return out;
  }
  if (opts.exact_order) {
    for (int i = 0; i < p.relator_count(); ++i) {
      if (p.relators[i] != Word::single(i)) {
        out.reason = "relator " + std::to_string(i + 1) +
                     " is not generator " + p.alphabet.name(i);
        return out;
      }
    }
  } else {
    std::vector<bool> seen(p.generator_count(), false);
    for (int i = 0; i < p.relator_count(); ++i) {
      const Word& r = p.relators[i];
      if (r.size() != 1) {
        out.reason = "relator " + std::to_string(i + 1) +
                     " is not a single letter";
        return out;
      }
      int g = r.letter(0).gen;
      if (seen[g]) {
        out.reason = "generator " + p.alphabet.name(g) +
                     " hit by two relators";
        return out;
      }
      seen[g] = true;
    }
  }
  out.accepted = true;
  return out;
}

// Formal conjugate-factor counts: replay the trace over the abstraction that
// only tracks how many relator-conjugate factors each entry is a product of.
// Nothing is ever freely reduced, so these counts majorize any geometric
// cancellation.
inline std::vector<mpz_class> expand_factor_counts(const MoveTrace& trace) {
  std::vector<mpz_class> c(trace.initial.relator_count(), 1);
  bool past_prefix = false;
  for (size_t n = 0; n < trace.moves.size(); ++n) {
    const Move& m = trace.moves[n];
    auto check = [&](int one_based) {
      if (one_based < 1 || one_based > static_cast<int>(c.size()))
        throw MoveError("move " + std::to_string(n + 1) +
                        ": relator index out of range");
      return one_based - 1;
    };
    switch (m.op) {
      case Move::Op::Invert:
      case Move::Op::Conjugate:
        check(m.i);
        break;  // factor count unchanged
      case Move::Op::MultiplyRight:
        c[check(m.i)] += c[check(m.j)];
        break;
      case Move::Op::Dihedral:
        c[check(m.j)] += c[check(m.i)];
        break;
      case Move::Op::Stabilize:
        if (past_prefix)
          throw MoveError("move " + std::to_string(n + 1) +
                          ": stabilize is only legal before all other moves");
        for (int k = 0; k < m.count; ++k) c.push_back(1);
        break;
      case Move::Op::AddEmpty:
        c.push_back(0);
        break;
      case Move::Op::RemoveEmpty:
        c.erase(c.begin() + check(m.count));
        break;
    }
    if (m.op != Move::Op::Stabilize) past_prefix = true;
  }
  return c;
}

// F_0 = 1, F_1 = 2, F_m = F_{m-1} + F_{m-2}: the extremal factor count
// reachable with m dihedral-counted moves.
inline mpz_class fibonacci_bound(long m) {
  if (m < 0) throw Error("fibonacci_bound needs m >= 0");
  mpz_class a = 1, b = 2;  // a = F_0, b = F_1
  if (m == 0) return a;
  for (long i = 1; i < m; ++i) {
    mpz_class next = a + b;
    a = b;
    b = next;
  }
  return b;
}

}  // namespace acw
