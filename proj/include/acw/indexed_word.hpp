#pragma once

// Words over the infinite letter family x_0, x_1, x_2, ... (integer indices,
// negatives allowed).  Used for the subscript-lift of two-generator words and
// for the chain presentations whose generators carry subscripts.

#include <cstdlib>
#include <string>
#include <vector>

#include "acw/word.hpp"

namespace acw {

struct ILetter {
  long index = 0;
  int sign = 1;
  friend bool operator==(const ILetter&, const ILetter&) = default;
};

// Freely reduced word in the x_i.  The vector invariant mirrors Word: no
// adjacent pair x_i^s x_i^-s survives construction.
class IndexedWord {
 public:
  IndexedWord() = default;

  static IndexedWord from_letters(const std::vector<ILetter>& ls) {
    IndexedWord w;
    for (const ILetter& l : ls) w.push(l);
    return w;
  }

  static IndexedWord single(long index, int sign = 1) {
    return from_letters({{index, sign}});
  }

  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  const ILetter& letter(std::size_t i) const { return letters_[i]; }
  const std::vector<ILetter>& letters() const { return letters_; }

  friend IndexedWord operator*(const IndexedWord& a, const IndexedWord& b) {
    IndexedWord w = a;
    for (const ILetter& l : b.letters_) w.push(l);
    return w;
  }

  IndexedWord inverse() const {
    IndexedWord w;
    w.letters_.reserve(letters_.size());
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
      w.letters_.push_back({it->index, -it->sign});
    return w;
  }

  // Adds d to every subscript.
  IndexedWord shift(long d) const {
    IndexedWord w = *this;
    for (ILetter& l : w.letters_) l.index += d;
    return w;
  }

  long min_index() const {
    long m = 0;
    bool first = true;
    for (const ILetter& l : letters_) {
      if (first || l.index < m) m = l.index;
      first = false;
    }
    return m;
  }

  long max_index() const {
    long m = 0;
    bool first = true;
    for (const ILetter& l : letters_) {
      if (first || l.index > m) m = l.index;
      first = false;
    }
    return m;
  }

  friend bool operator==(const IndexedWord&, const IndexedWord&) = default;

  // Format: space-separated "x<i>" tokens with optional "^<e>", e.g.
  // "x2 x1^-1 x-3^2".  The empty word prints as "1".
  std::string to_string() const {
    if (letters_.empty()) return "1";
    std::string out;
    std::size_t i = 0;
    while (i < letters_.size()) {
      std::size_t j = i;
      while (j < letters_.size() && letters_[j] == letters_[i]) ++j;
      long run = static_cast<long>(j - i);
      long exp = letters_[i].sign * run;
      if (!out.empty()) out += ' ';
      out += 'x';
      out += std::to_string(letters_[i].index);
      if (exp != 1) {
        out += '^';
        out += std::to_string(exp);
      }
      i = j;
    }
    return out;
  }

  static IndexedWord parse(const std::string& text) {
    IndexedWord w;
    std::size_t i = 0;
    auto skip = [&] {
      while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
        ++i;
    };
    skip();
    while (i < text.size()) {
      std::size_t start = i;
      while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i])))
        ++i;
      std::string tok = text.substr(start, i - start);
      if (tok == "1") {
        skip();
        continue;
      }
      if (tok.empty() || tok[0] != 'x')
        throw ParseError("bad indexed letter '" + tok + "'");
      std::size_t caret = tok.find('^');
      std::string head = tok.substr(1, caret == std::string::npos
                                           ? std::string::npos
                                           : caret - 1);
      long exp = 1;
      if (caret != std::string::npos) {
        std::string tail = tok.substr(caret + 1);
        exp = parse_int(tail, tok);
        if (exp == 0) throw ParseError("zero exponent in '" + tok + "'");
      }
      long index = parse_int(head, tok);
      int sign = exp > 0 ? 1 : -1;
      for (long r = 0; r < std::labs(exp); ++r) w.push({index, sign});
      skip();
    }
    return w;
  }

 private:
  static long parse_int(const std::string& s, const std::string& tok) {
    if (s.empty()) throw ParseError("bad indexed letter '" + tok + "'");
    std::size_t pos = 0;
    long v = 0;
    try {
      v = std::stol(s, &pos);
    } catch (const std::exception&) {
      throw ParseError("bad integer in '" + tok + "'");
    }
    if (pos != s.size()) throw ParseError("bad integer in '" + tok + "'");
    return v;
  }

  void push(ILetter l) {
    if (l.sign != 1 && l.sign != -1) throw Error("letter sign must be +1 or -1");
    if (!letters_.empty() && letters_.back().index == l.index &&
        letters_.back().sign == -l.sign) {
      letters_.pop_back();
    } else {
      letters_.push_back(l);
    }
  }

  std::vector<ILetter> letters_;
};

// The evaluation homomorphism x_i -> t^i x t^-i.  Collapses to a word over
// the two-letter alphabet; the image is freely reduced by construction.
inline Word phi(const IndexedWord& w, const Alphabet& ab,
                const std::string& x_name = "x",
                const std::string& t_name = "t") {
  int gx = ab.index(x_name);
  int gt = ab.index(t_name);
  Word t = Word::single(gt);
  Word out;
  long level = 0;
  for (const ILetter& l : w.letters()) {
    out = out * t.pow(l.index - level);
    out = out * Word::single(gx, l.sign);
    level = l.index;
  }
  out = out * t.pow(-level);
  return out;
}

// Renders the subscripted word over a concrete alphabet whose generators are
// named "<stem>0", "<stem>1", ...  All subscripts must name a generator.
inline Word materialize(const IndexedWord& w, const Alphabet& ab,
                        const std::string& stem = "x") {
  std::vector<Letter> ls;
  ls.reserve(w.size());
  for (const ILetter& l : w.letters()) {
    if (l.index < 0)
      throw AlphabetError("negative subscript " + std::to_string(l.index));
    ls.push_back({ab.index(stem + std::to_string(l.index)), l.sign});
  }
  return Word::from_letters(ls);
}

}  // namespace acw
