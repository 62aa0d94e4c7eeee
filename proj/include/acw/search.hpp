#pragma once

// Bounded exploration of the move graph on balanced presentations.
//
// States are canonical keys: the multiset of cyclic normal forms of the
// relators.  The key is invariant under relator permutation, inversion,
// conjugation and cyclic rotation, so the search walks a quotient of the
// real graph; any trace it reports re-inserts the elided cheap moves and is
// therefore an upper bound on the true move count.

#include <algorithm>
#include <optional>
#include <string>
#include <thread>
#include <unordered_map>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "acw/fixtures.hpp"
#include "acw/moves.hpp"
#include "acw/presentation.hpp"

namespace acw {

struct CanonicalKey {
  std::vector<std::string> parts;  // sorted cyclic-normal-form byte codes

  bool operator==(const CanonicalKey& o) const { return parts == o.parts; }
  bool operator<(const CanonicalKey& o) const { return parts < o.parts; }
};

inline CanonicalKey canonical_key(const Presentation& p) {
  CanonicalKey k;
  k.parts.reserve(p.relators.size());
  for (const Word& r : p.relators)
    k.parts.push_back(r.cyclic_normal_form().code());
  std::sort(k.parts.begin(), k.parts.end());
  return k;
}

struct CanonicalKeyHash {
  std::size_t operator()(const CanonicalKey& k) const {
    std::size_t h = 1469598103934665603ull;
    for (const std::string& s : k.parts) {
      for (unsigned char c : s) h = (h ^ c) * 1099511628211ull;
      h = (h ^ 0xffu) * 1099511628211ull;
    }
    return h;
  }
};

struct SearchCaps {
  std::size_t max_relator_len = 16;
  std::size_t max_conjugator_len = 1;
  std::size_t max_states = 200000;
  long max_depth = 8;
  int threads = 1;  // results do not depend on this
};

struct SearchOutcome {
  std::optional<MoveTrace> trace;
  long depth_searched = 0;
  std::size_t states = 0;
  bool caps_hit = false;
};

namespace detail {

// Freely reduced words up to max_len, shortest first, bytewise order inside
// each length; the empty word leads.
inline std::vector<Word> enumerate_words(int gens, std::size_t max_len) {
  std::vector<Word> out{Word()};
  std::size_t lo = 0;
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::size_t hi = out.size();
    for (std::size_t i = lo; i < hi; ++i)
      for (int g = 0; g < gens; ++g)
        for (int s : {1, -1}) {
          Word ext = out[i] * Word::single(g, s);
          if (ext.size() == len) out.push_back(ext);
        }
    lo = hi;
  }
  return out;
}

// The generator moves of the key graph: Invert, and Dihedral over every
// ordered relator pair, sign, and capped conjugator (empty u, sign = +1 is
// plain right multiplication).
inline std::vector<Move> generator_moves(int relators,
                                         const std::vector<Word>& conjugators) {
  std::vector<Move> out;
  for (int i = 1; i <= relators; ++i) out.push_back(Move::invert(i));
  for (int j = 1; j <= relators; ++j)
    for (int i = 1; i <= relators; ++i) {
      if (i == j) continue;
      for (int sign : {1, -1})
        for (const Word& u : conjugators)
          out.push_back(Move::dihedral(j, i, sign, u));
    }
  return out;
}

// r = u * core * u^{-1} with a single-letter core: one conjugation exposes
// the letter.
inline void append_bridge_moves(const Presentation& p,
                                std::vector<Move>& moves) {
  for (int i = 1; i <= p.relator_count(); ++i) {
    const Word& r = p.relators[i - 1];
    if (r.size() <= 1) continue;
    auto f = r.cyclically_reduce();
    if (f.core.size() != 1)
      throw Error("bridge: relator is not a conjugated letter");
    moves.push_back(Move::conj(i, f.conjugator.inverse()));
  }
}

}  // namespace detail

// Level-synchronous search from P toward the identity key (every generator
// appearing as a single-letter relator).  A found path is re-expanded into a
// literal verifiable trace; Unknown keeps frontier statistics.
inline SearchOutcome bfs_trivialize(const Presentation& p,
                                    const SearchCaps& caps = {}) {
  if (!measures(p).balanced)
    throw Error("bfs_trivialize needs a balanced presentation");
  for (const Word& r : p.relators) r.check_alphabet(p.alphabet);

  CanonicalKey target;
  for (int g = 0; g < p.generator_count(); ++g)
    target.parts.push_back(Word::single(g).code());
  std::sort(target.parts.begin(), target.parts.end());

  SearchOutcome out;

  struct Node {
    Presentation rep;   // the concrete presentation that first hit the key
    long parent = -1;   // index into nodes
    Move move;          // move applied to nodes[parent].rep
  };
  std::vector<Node> nodes{{p, -1, Move()}};
  std::unordered_map<CanonicalKey, long, CanonicalKeyHash> seen{
      {canonical_key(p), 0}};

  auto finish = [&](long idx) {
    std::vector<Move> path;
    for (long at = idx; nodes[at].parent >= 0; at = nodes[at].parent)
      path.push_back(nodes[at].move);
    std::reverse(path.begin(), path.end());
    detail::append_bridge_moves(nodes[idx].rep, path);
    MoveTrace trace;
    trace.initial = p;
    trace.moves = std::move(path);
    out.trace = std::move(trace);
    out.states = seen.size();
  };

  if (canonical_key(p) == target) {
    finish(0);
    return out;
  }

  std::vector<Word> conjugators =
      detail::enumerate_words(p.generator_count(), caps.max_conjugator_len);
  std::vector<Move> gens =
      detail::generator_moves(p.relator_count(), conjugators);

  std::vector<long> frontier{0};
  for (long depth = 0; depth < caps.max_depth; ++depth) {
    int nthreads = std::max(1, caps.threads);
    std::size_t chunk =
        std::max<std::size_t>(1, (frontier.size() + nthreads - 1) / nthreads);
    std::vector<std::pair<std::size_t, std::size_t>> ranges;
    for (std::size_t b = 0; b < frontier.size(); b += chunk)
      ranges.push_back({b, std::min(frontier.size(), b + chunk)});

    struct Candidate {
      Presentation rep;
      CanonicalKey key;
      long parent;
      std::size_t move_index;
    };
    std::vector<std::vector<Candidate>> produced(ranges.size());
    std::vector<char> pruned(ranges.size(), 0);
    auto expand = [&](std::size_t ri) {
      auto [lo, hi] = ranges[ri];
      for (std::size_t fi = lo; fi < hi; ++fi) {
        const Presentation& cur = nodes[frontier[fi]].rep;
        for (std::size_t mi = 0; mi < gens.size(); ++mi) {
          Presentation q = apply_move(cur, gens[mi]);
          bool too_long = false;
          for (const Word& r : q.relators)
            if (r.size() > caps.max_relator_len) too_long = true;
          if (too_long) {
            pruned[ri] = 1;
            continue;
          }
          CanonicalKey key = canonical_key(q);
          produced[ri].push_back(
              {std::move(q), std::move(key), frontier[fi], mi});
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

    std::vector<long> next;
    bool states_full = false;
    for (std::size_t ri = 0; ri < ranges.size() && !states_full; ++ri) {
      if (pruned[ri]) out.caps_hit = true;
      for (auto& c : produced[ri]) {
        if (seen.count(c.key)) continue;
        if (seen.size() >= caps.max_states) {
          out.caps_hit = true;
          states_full = true;
          break;
        }
        bool is_target = (c.key == target);
        long idx = static_cast<long>(nodes.size());
        nodes.push_back({std::move(c.rep), c.parent, gens[c.move_index]});
        seen.emplace(std::move(c.key), idx);
        if (is_target) {
          out.depth_searched = depth + 1;
          finish(idx);
          return out;
        }
        next.push_back(idx);
      }
    }
    out.depth_searched = depth + 1;
    out.states = seen.size();
    if (next.empty() && !states_full) {
      return out;  // graph exhausted within caps
    }
    if (states_full) return out;
    frontier = std::move(next);
  }
  out.caps_hit = true;
  out.states = seen.size();
  return out;
}

struct SublevelEntry {
  Presentation rep;           // relators are the sorted key parts
  mpz_class abs_det;          // |det| of the abelianized relator matrix
  bool trivial_marker = false;  // abs_det == 1
  long component = -1;
};

struct SublevelReport {
  int k = 0;
  long m = 0;
  SearchCaps caps;
  std::vector<SublevelEntry> entries;
  long component_count = 0;
  std::vector<long> component_sizes;
  long identity_entry = -1;  // index of the identity presentation's key
  // Components use only single-move edges inside the enumerated set; longer
  // conjugators or detours through larger presentations could merge them.
  bool cap_dependent = true;
};

namespace detail {

inline mpz_class abs_det(std::vector<std::vector<mpz_class>> a) {
  // Fraction-free Gaussian elimination (Bareiss).
  const std::size_t n = a.size();
  mpz_class prev = 1;
  int sign = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && a[pivot][c] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != c) {
      std::swap(a[pivot], a[c]);
      sign = -sign;
    }
    for (std::size_t r = c + 1; r < n; ++r) {
      for (std::size_t j = c + 1; j < n; ++j)
        a[r][j] = (a[r][j] * a[c][c] - a[r][c] * a[c][j]) / prev;
      a[r][c] = 0;
    }
    prev = a[c][c];
  }
  mpz_class d = a[n - 1][n - 1] * sign;
  return abs(d);
}

inline mpz_class abelianized_abs_det(const Presentation& p) {
  std::vector<std::vector<mpz_class>> m(
      p.relators.size(),
      std::vector<mpz_class>(p.alphabet.size(), 0));
  for (std::size_t r = 0; r < p.relators.size(); ++r) {
    const Word& w = p.relators[r];
    for (std::size_t i = 0; i < w.size(); ++i)
      m[r][static_cast<std::size_t>(w.letter(i).gen)] += w.letter(i).sign;
  }
  return abs_det(std::move(m));
}

struct UnionFind {
  std::vector<long> up;
  explicit UnionFind(std::size_t n) : up(n) {
    for (std::size_t i = 0; i < n; ++i) up[i] = static_cast<long>(i);
  }
  long find(long x) {
    while (up[x] != x) x = up[x] = up[up[x]];
    return x;
  }
  void unite(long a, long b) {
    a = find(a);
    b = find(b);
    if (a != b) up[std::max(a, b)] = std::min(a, b);
  }
};

}  // namespace detail

// Enumerates every balanced presentation on k generators with total relator
// length at most m, one per canonical key, marks trivial abelianization
// (|det| = 1), and computes connected components under the capped moves.
inline SublevelReport explore_sublevel(int k, long m,
                                       const SearchCaps& caps = {}) {
  if (k < 1) throw Error("explore_sublevel needs k >= 1");
  if (m < k) throw Error("explore_sublevel needs m >= k");
  SublevelReport rep;
  rep.k = k;
  rep.m = m;
  rep.caps = caps;

  Alphabet ab = fixtures::identity(k).alphabet;
  std::vector<Word> all =
      detail::enumerate_words(k, static_cast<std::size_t>(m));
  std::vector<Word> canon;
  for (const Word& w : all)
    if (w.code() == w.cyclic_normal_form().code()) canon.push_back(w);

  // Non-decreasing k-tuples (bytewise on codes) with total length <= m; the
  // sorted tuple of parts is exactly a canonical key.
  std::vector<Word> pick(static_cast<std::size_t>(k));
  std::unordered_map<CanonicalKey, long, CanonicalKeyHash> index;
  auto emit = [&]() {
    std::vector<Word> rels = pick;
    std::sort(rels.begin(), rels.end(),
              [](const Word& a, const Word& b) { return a.code() < b.code(); });
    Presentation p(ab, std::move(rels));
    CanonicalKey key = canonical_key(p);
    if (index.count(key)) return;
    index.emplace(key, static_cast<long>(rep.entries.size()));
    SublevelEntry e;
    e.abs_det = detail::abelianized_abs_det(p);
    e.trivial_marker = (e.abs_det == 1);
    e.rep = std::move(p);
    rep.entries.push_back(std::move(e));
  };
  auto rec = [&](auto&& self, std::size_t slot, std::size_t first, long left)
      -> void {
    if (slot == pick.size()) {
      emit();
      return;
    }
    for (std::size_t i = first; i < canon.size(); ++i) {
      if (static_cast<long>(canon[i].size()) > left) continue;
      pick[slot] = canon[i];
      self(self, slot + 1, i, left - static_cast<long>(canon[i].size()));
    }
  };
  rec(rec, 0, 0, m);

  // Single-move edges inside the enumerated set.
  std::vector<Word> conjugators =
      detail::enumerate_words(k, caps.max_conjugator_len);
  std::vector<Move> gens = detail::generator_moves(k, conjugators);
  detail::UnionFind uf(rep.entries.size());
  for (std::size_t i = 0; i < rep.entries.size(); ++i) {
    for (const Move& mv : gens) {
      Presentation q = apply_move(rep.entries[i].rep, mv);
      bool too_long = false;
      for (const Word& r : q.relators)
        if (r.size() > caps.max_relator_len) too_long = true;
      if (too_long) continue;
      auto it = index.find(canonical_key(q));
      if (it != index.end()) uf.unite(static_cast<long>(i), it->second);
    }
  }

  std::unordered_map<long, long> comp_id;
  for (std::size_t i = 0; i < rep.entries.size(); ++i) {
    long root = uf.find(static_cast<long>(i));
    auto it = comp_id.find(root);
    if (it == comp_id.end()) {
      it = comp_id.emplace(root, rep.component_count++).first;
      rep.component_sizes.push_back(0);
    }
    rep.entries[i].component = it->second;
    ++rep.component_sizes[static_cast<std::size_t>(it->second)];
  }

  CanonicalKey id_key = canonical_key(fixtures::identity(k));
  auto it = index.find(id_key);
  if (it != index.end()) rep.identity_entry = it->second;
  return rep;
}

}  // namespace acw
