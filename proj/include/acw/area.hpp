#pragma once

// Exact combinatorial area over a finite presentation.
//
// One relator application: write a relator r = u1 u2 u3 and the current word
// as alpha u2^{+-1} beta, replace it by alpha (u3 u1)^{-+1} beta, freely
// reduce.  Equivalently (and this is how the search expands states): splice
// any cyclic rotation of any r^{+-1} into the word at any position and freely
// reduce.  area(w) is the least number of applications turning w into the
// empty word; it is finite exactly when w lies in the normal closure of the
// relators, and every filling yields an equality
//     w = prod_i  u_i r_{j(i)}^{e_i} u_i^{-1}
// in the free group, which is the certificate form produced here.

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <thread>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "acw/constructions.hpp"
#include "acw/presentation.hpp"

namespace acw {

struct AreaCaps {
  std::size_t max_len = 64;  // prune intermediate words longer than this
  std::size_t max_states = 2000000;
  long max_depth = 64;
  int threads = 1;
};

struct AreaOutcome {
  // Set when a filling was found; exact means it is the true minimum
  // (nothing was pruned at shallower depths), otherwise an upper bound.
  std::optional<long> area;
  bool exact = false;
  // True when the whole reachable graph was explored without pruning and no
  // filling exists at any depth.
  bool exhausted = false;
  // No filling with <= depth_searched applications exists within the caps.
  long depth_searched = 0;
  bool caps_hit = false;
  std::size_t states = 0;
};

struct CertStep {
  Word u;
  int relator = 1;  // 1-based
  int sign = 1;
};

// Product-of-conjugates witness; construction verifies the free equality.
class AreaCertificate {
 public:
  AreaCertificate(const Presentation& p, Word target,
                  std::vector<CertStep> steps)
      : target_(std::move(target)), steps_(std::move(steps)) {
    Word prod = product(p, steps_);
    if (!(prod == target_))
      throw Error("certificate product does not equal its target");
  }

  const Word& target() const { return target_; }
  const std::vector<CertStep>& steps() const { return steps_; }

  static Word product(const Presentation& p, const std::vector<CertStep>& steps) {
    Word acc;
    for (const CertStep& s : steps) {
      if (s.relator < 1 || s.relator > static_cast<int>(p.relator_count()))
        throw Error("certificate step references relator " +
                    std::to_string(s.relator));
      if (s.sign != 1 && s.sign != -1)
        throw Error("certificate step sign must be +-1");
      Word r = p.relators[s.relator - 1];
      if (s.sign < 0) r = r.inverse();
      acc = acc * conjugate(r, s.u);
    }
    return acc;
  }

 private:
  Word target_;
  std::vector<CertStep> steps_;
};

namespace detail {

inline void append_code(std::string& acc, unsigned char c) {
  if (!acc.empty() && (static_cast<unsigned char>(acc.back()) ^ 1u) == c)
    acc.pop_back();
  else
    acc.push_back(static_cast<char>(c));
}

inline std::string splice(const std::string& w, std::size_t split,
                          const std::string& patch) {
  std::string out;
  out.reserve(w.size() + patch.size());
  out.assign(w, 0, split);
  for (char c : patch) append_code(out, static_cast<unsigned char>(c));
  for (std::size_t i = split; i < w.size(); ++i)
    append_code(out, static_cast<unsigned char>(w[i]));
  return out;
}

struct Patch {
  std::string code;  // a rotation of some r^{+-1}
  int relator;       // 1-based
  int sign;
  int offset;        // rotation offset into r^{sign}
};

// All distinct rotations of every r^{+-1}, with deterministic provenance
// (first occurrence wins: relator order, +1 before -1, offset order).
inline std::vector<Patch> make_patches(const Presentation& p) {
  std::vector<Patch> out;
  std::unordered_set<std::string> seen;
  for (int j = 1; j <= static_cast<int>(p.relator_count()); ++j) {
    for (int sign : {1, -1}) {
      const Word base =
          sign > 0 ? p.relators[j - 1] : p.relators[j - 1].inverse();
      const std::string& code = base.code();
      if (code.empty()) continue;
      for (std::size_t d = 0; d < code.size(); ++d) {
        std::string rot = code.substr(d) + code.substr(0, d);
        if (seen.insert(rot).second)
          out.push_back({std::move(rot), j, sign, static_cast<int>(d)});
      }
    }
  }
  return out;
}

struct EdgeInfo {
  std::string parent;
  int patch = -1;
  std::size_t split = 0;
};

// Level-synchronous search.  With several threads the frontier is expanded
// in fixed chunks and merged in chunk order, so every outcome (including
// parent assignment) is independent of scheduling.
struct BfsCore {
  const Presentation& p;
  AreaCaps caps;
  bool track_parents = false;

  AreaOutcome outcome;
  std::unordered_map<std::string, EdgeInfo> parents;
  bool found = false;
  std::vector<Patch> patches_used;

  void run(const Word& w) {
    if (w.empty()) {
      outcome.area = 0;
      outcome.exact = true;
      found = true;
      return;
    }
    std::vector<Patch> patches = make_patches(p);
    if (patches.empty()) {
      outcome.exhausted = true;
      return;
    }

    struct Candidate {
      std::string code;
      std::size_t parent;  // index into the current frontier
      int patch;
      std::size_t split;
    };

    std::unordered_set<std::string> visited{w.code()};
    std::vector<std::string> frontier{w.code()};
    bool pruned_any = false;

    for (long depth = 0; depth < caps.max_depth; ++depth) {
      const bool pruned_below = pruned_any;
      const int nthreads = std::max(1, caps.threads);
      // Expand the frontier in fixed windows and merge candidates in
      // (frontier index, patch, split) order.  The order is the same for
      // every window and thread count, so outcomes are scheduling
      // independent while peak candidate memory stays bounded.
      const std::size_t window = std::max<std::size_t>(nthreads, 512);

      std::vector<std::string> next;
      bool states_full = false;
      for (std::size_t base = 0; base < frontier.size() && !states_full;
           base += window) {
        const std::size_t top = std::min(frontier.size(), base + window);
        const std::size_t chunk =
            std::max<std::size_t>(1, (top - base + nthreads - 1) / nthreads);
        std::vector<std::pair<std::size_t, std::size_t>> ranges;
        for (std::size_t b = base; b < top; b += chunk)
          ranges.push_back({b, std::min(top, b + chunk)});

        std::vector<std::vector<Candidate>> produced(ranges.size());
        std::vector<char> pruned_flag(ranges.size(), 0);
        auto expand = [&](std::size_t ri) {
          auto [lo, hi] = ranges[ri];
          for (std::size_t wi = lo; wi < hi; ++wi) {
            const std::string& cur = frontier[wi];
            for (int pi = 0; pi < static_cast<int>(patches.size()); ++pi) {
              for (std::size_t sp = 0; sp <= cur.size(); ++sp) {
                std::string cand = splice(cur, sp, patches[pi].code);
                if (cand.size() > caps.max_len) {
                  pruned_flag[ri] = 1;
                  continue;
                }
                produced[ri].push_back({std::move(cand), wi, pi, sp});
              }
            }
          }
        };
        if (ranges.size() <= 1 || nthreads == 1) {
          for (std::size_t ri = 0; ri < ranges.size(); ++ri) expand(ri);
        } else {
          std::vector<std::thread> workers;
          workers.reserve(ranges.size());
          for (std::size_t ri = 0; ri < ranges.size(); ++ri)
            workers.emplace_back(expand, ri);
          for (auto& t : workers) t.join();
        }

        for (std::size_t ri = 0; ri < ranges.size() && !states_full; ++ri) {
          if (pruned_flag[ri]) pruned_any = true;
          for (auto& c : produced[ri]) {
            if (visited.count(c.code)) continue;
            if (visited.size() >= caps.max_states) {
              pruned_any = true;
              states_full = true;
              break;
            }
            visited.insert(c.code);
            if (track_parents)
              parents[c.code] = {frontier[c.parent], c.patch, c.split};
            if (c.code.empty()) {
              outcome.area = depth + 1;
              outcome.exact = !pruned_below;
              outcome.caps_hit = pruned_any;
              outcome.states = visited.size();
              found = true;
              patches_used = std::move(patches);
              return;
            }
            next.push_back(std::move(c.code));
          }
        }
      }

      outcome.depth_searched = depth + 1;
      outcome.states = visited.size();
      if (next.empty()) {
        outcome.exhausted = !pruned_any;
        outcome.caps_hit = pruned_any;
        patches_used = std::move(patches);
        return;
      }
      frontier = std::move(next);
    }
    outcome.caps_hit = true;
    patches_used = std::move(patches);
  }
};

}  // namespace detail

inline AreaOutcome area_bfs(const Presentation& p, const Word& w,
                            const AreaCaps& caps = {}) {
  w.check_alphabet(p.alphabet);
  detail::BfsCore core{p, caps};
  core.run(w);
  return core.outcome;
}

struct ProveOutcome {
  std::optional<AreaCertificate> certificate;
  AreaOutcome search;
};

// BFS with back-pointers; converts the application path into certificate
// steps (u_i, relator, sign) whose conjugate-product freely equals w.
inline ProveOutcome prove(const Presentation& p, const Word& w,
                          const AreaCaps& caps = {}) {
  w.check_alphabet(p.alphabet);
  detail::BfsCore core{p, caps, /*track_parents=*/true};
  core.run(w);
  ProveOutcome out;
  out.search = core.outcome;
  if (!core.found) return out;
  if (w.empty()) {
    out.certificate = AreaCertificate(p, w, {});
    return out;
  }

  // Walk edges from the empty word back to w; edges earlier on the path (as
  // traversed from w) contribute earlier certificate steps.
  std::vector<detail::EdgeInfo> path;  // from w's side toward the empty word
  std::string cur;                     // the empty code
  while (cur != w.code()) {
    auto it = core.parents.find(cur);
    if (it == core.parents.end()) throw Error("broken back-pointer chain");
    path.push_back(it->second);
    cur = it->second.parent;
  }
  std::reverse(path.begin(), path.end());

  std::vector<CertStep> steps;
  const auto& patches = core.patches_used;
  for (const detail::EdgeInfo& e : path) {
    const detail::Patch& patch = patches[static_cast<std::size_t>(e.patch)];
    // Parent = alpha beta with |alpha| = split; child = alpha rot beta and
    // child = (alpha rot alpha^-1) parent, so parent = u r^{-sign} u^-1 child
    // with u = alpha * prefix(r^{sign}, offset)^{-1}.
    std::string alpha = e.parent.substr(0, e.split);
    Word base = patch.sign > 0 ? p.relators[patch.relator - 1]
                               : p.relators[patch.relator - 1].inverse();
    std::string pref = base.code().substr(0, static_cast<std::size_t>(patch.offset));
    Word u = Word::from_code_trusted(alpha) *
             Word::from_code_trusted(pref).inverse();
    steps.push_back({u, patch.relator, -patch.sign});
  }
  out.certificate = AreaCertificate(p, w, std::move(steps));
  return out;
}

struct AreaStarOutcome {
  std::optional<long> upper;  // least area found over the tried powers
  long exhausted_lower = 0;   // no power fills with < this many applications
  std::map<long, AreaOutcome> per_power;
};

// Bounded information about area*(w) = min over n != 0 of area(w^n).
inline AreaStarOutcome area_star_bounded(const Presentation& p, const Word& w,
                                         long n_max, const AreaCaps& caps = {}) {
  if (w.empty()) throw Error("area* of the empty word is undefined");
  AreaStarOutcome out;
  long lower = -1;
  for (long n = 1; n <= n_max; ++n) {
    for (long sn : {n, -n}) {
      AreaOutcome o = area_bfs(p, w.pow(sn), caps);
      long this_lower = o.area ? *o.area : o.depth_searched + 1;
      if (o.area && (!out.upper || *o.area < *out.upper)) out.upper = *o.area;
      lower = lower < 0 ? this_lower : std::min(lower, this_lower);
      out.per_power[sn] = o;
    }
  }
  out.exhausted_lower = std::max(0L, lower);
  return out;
}

namespace detail {

// The involutive hat renaming on a doubled alphabet: the two halves swap.
inline Word hat_swap(const Word& w, int seed_gens) {
  std::vector<Letter> ls;
  ls.reserve(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) {
    Letter l = w.letter(i);
    if (l.gen >= 2 * seed_gens)
      throw Error("hat renaming: letter outside the doubled alphabet");
    ls.push_back({l.gen < seed_gens ? l.gen + seed_gens : l.gen - seed_gens,
                  l.sign});
  }
  return Word::from_letters(ls);
}

}  // namespace detail

// Transports a certificate across the hat renaming of a doubled presentation:
// conjugators and target get the involutive renaming, relator indices swap
// between the seed block and the hatted block.  Applying it twice is the
// identity.
inline AreaCertificate hat_certificate(const AreaCertificate& cert,
                                       const Presentation& doubled,
                                       int seed_gens, int seed_rels) {
  std::vector<CertStep> steps;
  steps.reserve(cert.steps().size());
  for (const CertStep& s : cert.steps()) {
    if (s.relator > 2 * seed_rels)
      throw Error("certificate step outside the doubled relator blocks");
    int swapped =
        s.relator <= seed_rels ? s.relator + seed_rels : s.relator - seed_rels;
    steps.push_back({detail::hat_swap(s.u, seed_gens), swapped, s.sign});
  }
  return AreaCertificate(doubled, detail::hat_swap(cert.target(), seed_gens),
                         std::move(steps));
}

namespace detail {

inline std::vector<CertStep> conj_steps(std::vector<CertStep> steps,
                                        const Word& c) {
  for (CertStep& s : steps) s.u = c * s.u;
  return steps;
}

inline std::vector<CertStep> invert_steps(const std::vector<CertStep>& steps) {
  std::vector<CertStep> out;
  out.reserve(steps.size());
  for (auto it = steps.rbegin(); it != steps.rend(); ++it)
    out.push_back({it->u, it->relator, -it->sign});
  return out;
}

inline void extend(std::vector<CertStep>& into, std::vector<CertStep> from) {
  for (CertStep& s : from) into.push_back(std::move(s));
}

}  // namespace detail

// Constructive filling of w_{2^m} over S_k, built from the recursive
// structure of V_m rather than by search:
//   C_m := V_m x^{-E_m} with E_m = Delta_k(m-1);  C_1 is the relator;
//   C_m = (t C_{m-1} t^-1) * M * ((x^{E_m} t) C_{m-1}^-1 (x^{E_m} t)^-1)
// where M = y^E x y^{-E} x^{-k^E} (E = E_{m-1}, y = t x t^-1) fills with the
// staircase of (k^E - 1)/(k - 1) conjugates of the relator;
//   w_{2^m} = (x C_m x^-1) * C_m^-1.
// Step count: N_1 = 1, N_m = 2 N_{m-1} + (E_m - 1)/(k - 1), total 2 N_m.
inline AreaCertificate wn_certificate(int k, long n, long step_budget = 4096) {
  if (n < 2) throw Error("wn_certificate needs n >= 2");
  Presentation seed = fixtures::sk(k);
  const Alphabet& ab = seed.alphabet;
  Word x = Word::single(ab.index("x"));
  Word t = Word::single(ab.index("t"));
  int m = floor_log2(n);

  // Step budget check before any work: N_m doubles and adds staircases.
  mpz_class steps_needed = 1;
  for (int i = 2; i <= m; ++i) {
    mpz_class e = delta_k(k, i - 1, 1L << 20);
    steps_needed = 2 * steps_needed + (e - 1) / (k - 1);
  }
  steps_needed *= 2;
  if (steps_needed > step_budget)
    throw TowerOverflowError("w_" + std::to_string(n) + " certificate needs " +
                             steps_needed.get_str() + " steps, budget " +
                             std::to_string(step_budget));

  // cert(A_c): y x^c y^-1 x^{-ck} as c conjugates of the relator.
  auto staircase = [&](long c) {
    std::vector<CertStep> steps;
    Word y = t * x * t.inverse();
    for (long j = c - 1; j >= 0; --j)
      steps.push_back({y * x.pow(j) * y.inverse(), 1, 1});
    return steps;
  };
  // cert(B_j): y^j x y^-j x^{-k^j}; B_j = (y B_{j-1} y^-1) * A_{k^{j-1}}.
  auto chain = [&](long levels) {
    std::vector<CertStep> steps;  // B_0 is freely trivial
    Word y = t * x * t.inverse();
    long power = 1;  // k^{j-1}
    for (long j = 1; j <= levels; ++j) {
      steps = detail::conj_steps(std::move(steps), y);
      detail::extend(steps, staircase(power));
      power *= k;
    }
    return steps;
  };

  std::vector<CertStep> cm{{Word(), 1, 1}};  // C_1 is the relator itself
  long e_prev = k;                           // E_1
  for (int i = 2; i <= m; ++i) {
    long e_cur = delta_k(k, i - 1).get_si();  // E_i = k^{E_{i-1}}
    std::vector<CertStep> next = detail::conj_steps(cm, t);
    detail::extend(next, chain(e_prev));
    detail::extend(next, detail::conj_steps(detail::invert_steps(cm),
                                            x.pow(e_cur) * t));
    cm = std::move(next);
    e_prev = e_cur;
  }

  std::vector<CertStep> total = detail::conj_steps(cm, x);
  detail::extend(total, detail::invert_steps(cm));
  return AreaCertificate(seed, gen_w(n, ab), std::move(total));
}

}  // namespace acw
