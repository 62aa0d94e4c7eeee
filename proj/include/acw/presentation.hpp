#pragma once

// Finite presentations: an ordered alphabet plus an ordered tuple of
// relators.  Relator order matters (moves address relators by index), so
// equality is tuple equality, not multiset equality.

#include <numeric>
#include <sstream>

#include "acw/word.hpp"

namespace acw {

struct Presentation {
  Alphabet alphabet;
  std::vector<Word> relators;

  Presentation() = default;
  Presentation(Alphabet a, std::vector<Word> rels)
      : alphabet(std::move(a)), relators(std::move(rels)) {
    for (const auto& r : relators) r.check_alphabet(alphabet);
  }

  int generator_count() const { return alphabet.size(); }
  int relator_count() const { return static_cast<int>(relators.size()); }

  bool operator==(const Presentation& o) const {
    return alphabet == o.alphabet && relators == o.relators;
  }
  bool operator!=(const Presentation& o) const { return !(*this == o); }

  std::string to_string() const {
    std::ostringstream out;
    out << "< ";
    for (int i = 0; i < alphabet.size(); ++i) {
      if (i) out << ", ";
      out << alphabet.name(i);
    }
    out << " | ";
    for (size_t i = 0; i < relators.size(); ++i) {
      if (i) out << ", ";
      out << relators[i].to_string(alphabet);
    }
    out << " >";
    return out.str();
  }

  static Presentation parse(const std::string& text) {
    auto lt = text.find('<');
    auto gt = text.rfind('>');
    if (lt == std::string::npos || gt == std::string::npos || gt <= lt)
      throw ParseError("presentation must be enclosed in < >");
    std::string body = text.substr(lt + 1, gt - lt - 1);
    auto bar = body.find('|');
    if (bar == std::string::npos || body.find('|', bar + 1) != std::string::npos)
      throw ParseError("presentation needs exactly one '|'");
    auto split = [](const std::string& s) {
      std::vector<std::string> parts;
      std::string cur;
      for (char c : s) {
        if (c == ',') {
          parts.push_back(cur);
          cur.clear();
        } else {
          cur += c;
        }
      }
      parts.push_back(cur);
      return parts;
    };
    auto trim = [](std::string s) {
      size_t a = s.find_first_not_of(" \t\r\n");
      if (a == std::string::npos) return std::string();
      size_t b = s.find_last_not_of(" \t\r\n");
      return s.substr(a, b - a + 1);
    };

    Alphabet alpha;
    for (auto& g : split(body.substr(0, bar))) {
      std::string name = trim(g);
      if (!name.empty()) alpha.add(name);
    }
    std::vector<Word> rels;
    std::string relpart = trim(body.substr(bar + 1));
    if (!relpart.empty()) {
      for (auto& r : split(relpart)) {
        std::string w = trim(r);
        if (w.empty()) throw ParseError("empty relator entry");
        rels.push_back(Word::parse(w, alpha));
      }
    }
    return Presentation(std::move(alpha), std::move(rels));
  }
};

struct Measures {
  int generators = 0;
  int relators = 0;
  long total_relator_length = 0;  // lambda
  long deficiency = 0;            // generators - relators
  bool balanced = false;
};

inline Measures measures(const Presentation& p) {
  Measures m;
  m.generators = p.generator_count();
  m.relators = p.relator_count();
  m.total_relator_length = std::accumulate(
      p.relators.begin(), p.relators.end(), 0L,
      [](long acc, const Word& w) { return acc + static_cast<long>(w.size()); });
  m.deficiency = m.generators - m.relators;
  m.balanced = (m.deficiency == 0);
  return m;
}

struct PresentationDeletion {
  Presentation result;
  std::vector<long> removed;  // per-relator count of deleted letters
};

// Remove a generator and delete every occurrence of it from each relator.
inline PresentationDeletion delete_letter(const Presentation& p, int gen) {
  if (gen < 0 || gen >= p.alphabet.size())
    throw AlphabetError("delete_letter: generator index out of range");
  Alphabet alpha;
  std::vector<int> remap(p.alphabet.size(), -1);
  for (int i = 0; i < p.alphabet.size(); ++i) {
    if (i == gen) continue;
    remap[i] = alpha.add(p.alphabet.name(i));
  }
  PresentationDeletion out;
  for (const auto& r : p.relators) {
    auto d = delete_letter(r, gen);
    out.removed.push_back(d.removed);
    std::vector<Letter> ls;
    for (const auto& l : d.word.letters()) ls.push_back({remap[l.gen], l.sign});
    out.result.relators.push_back(Word::from_letters(ls));
  }
  out.result.alphabet = std::move(alpha);
  return out;
}

inline PresentationDeletion delete_letter(const Presentation& p,
                                          const std::string& gen) {
  return delete_letter(p, p.alphabet.index(gen));
}

}  // namespace acw
