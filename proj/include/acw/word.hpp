#pragma once

// Free-group words over a declared finite alphabet.
//
// A Word is an immutable, freely reduced sequence of signed generator
// letters.  Letters are packed one byte each (2*gen + (sign<0)), which keeps
// short words inside std::string's inline buffer; this matters because the
// area search below hashes and copies millions of them.  The byte order is
// chosen so that bytewise comparison equals the canonical letter order:
// declaration order on generators, positive letter before negative.

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace acw {

class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what) : Error("parse error: " + what) {}
};

class AlphabetError : public Error {
 public:
  explicit AlphabetError(const std::string& what)
      : Error("alphabet error: " + what) {}
};

class MoveError : public Error {
 public:
  explicit MoveError(const std::string& what) : Error("move error: " + what) {}
};

// Raised when an exact tower-exponent computation would exceed its bit
// budget.  Callers get a refusal, never a truncated or approximate number.
class TowerOverflowError : public Error {
 public:
  explicit TowerOverflowError(const std::string& what)
      : Error("tower overflow: " + what) {}
};

// Ordered list of named generators.  At most 128 generators so a signed
// letter fits in one byte.
class Alphabet {
 public:
  static constexpr int kMaxGenerators = 128;

  Alphabet() = default;
  explicit Alphabet(const std::vector<std::string>& names) {
    for (const auto& n : names) add(n);
  }

  int add(const std::string& name) {
    validate_name(name);
    if (index_.count(name))
      throw AlphabetError("duplicate generator '" + name + "'");
    if (static_cast<int>(names_.size()) >= kMaxGenerators)
      throw AlphabetError("too many generators (limit 128)");
    names_.push_back(name);
    index_[name] = static_cast<int>(names_.size()) - 1;
    return index_[name];
  }

  int size() const { return static_cast<int>(names_.size()); }
  const std::string& name(int i) const { return names_.at(i); }
  const std::vector<std::string>& names() const { return names_; }

  bool contains(const std::string& name) const { return index_.count(name) > 0; }

  int index(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end())
      throw AlphabetError("unknown generator '" + name + "'");
    return it->second;
  }

  std::optional<int> find(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  bool operator==(const Alphabet& o) const { return names_ == o.names_; }
  bool operator!=(const Alphabet& o) const { return !(*this == o); }

  static void validate_name(const std::string& name) {
    if (name.empty()) throw AlphabetError("empty generator name");
    if (name == "1") throw AlphabetError("'1' is reserved for the empty word");
    for (char c : name) {
      bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
                (c >= '0' && c <= '9') || c == '_';
      if (!ok)
        throw AlphabetError("invalid character in generator name '" + name +
                            "'");
    }
    if (name[0] >= '0' && name[0] <= '9')
      throw AlphabetError("generator name '" + name +
                          "' must not start with a digit");
  }

 private:
  std::vector<std::string> names_;
  std::map<std::string, int> index_;
};

struct Letter {
  int gen = 0;    // index into the alphabet
  int sign = 1;   // +1 or -1
  bool operator==(const Letter& o) const = default;
};

class Word {
 public:
  Word() = default;

  static Word from_letters(const std::vector<Letter>& letters) {
    std::string code;
    code.reserve(letters.size());
    for (const auto& l : letters) append_reduce(code, encode(l));
    return Word(std::move(code));
  }

  static Word single(int gen, int sign = 1) {
    return Word(std::string(1, encode({gen, sign})));
  }

  // Letters are appended with cancellation, so the result is reduced as long
  // as `code` only ever passed through append_reduce.
  static void append_reduce(std::string& code, unsigned char c) {
    if (!code.empty() && (static_cast<unsigned char>(code.back()) ^ 1u) == c)
      code.pop_back();
    else
      code.push_back(static_cast<char>(c));
  }

  static unsigned char encode(const Letter& l) {
    if (l.gen < 0 || l.gen >= Alphabet::kMaxGenerators)
      throw AlphabetError("generator index out of range");
    if (l.sign != 1 && l.sign != -1) throw Error("letter sign must be +1/-1");
    return static_cast<unsigned char>(2 * l.gen + (l.sign < 0 ? 1 : 0));
  }

  static Letter decode(unsigned char c) {
    return Letter{c / 2, (c & 1) ? -1 : 1};
  }

  size_t size() const { return code_.size(); }
  bool empty() const { return code_.empty(); }

  Letter letter(size_t i) const {
    return decode(static_cast<unsigned char>(code_.at(i)));
  }

  std::vector<Letter> letters() const {
    std::vector<Letter> out;
    out.reserve(code_.size());
    for (char c : code_) out.push_back(decode(static_cast<unsigned char>(c)));
    return out;
  }

  Word operator*(const Word& o) const {
    std::string code = code_;
    code.reserve(code.size() + o.code_.size());
    for (char c : o.code_) append_reduce(code, static_cast<unsigned char>(c));
    return Word(std::move(code));
  }

  Word inverse() const {
    std::string code;
    code.reserve(code_.size());
    for (auto it = code_.rbegin(); it != code_.rend(); ++it)
      code.push_back(static_cast<char>(static_cast<unsigned char>(*it) ^ 1u));
    return Word(std::move(code));  // reversal of a reduced word is reduced
  }

  Word pow(long n) const {
    Word base = n < 0 ? inverse() : *this;
    long reps = n < 0 ? -n : n;
    Word out;
    for (long i = 0; i < reps; ++i) out = out * base;
    return out;
  }

  long exponent_sum(int gen) const {
    long s = 0;
    for (char c : code_) {
      Letter l = decode(static_cast<unsigned char>(c));
      if (l.gen == gen) s += l.sign;
    }
    return s;
  }

  // Number of occurrences of gen or its inverse, written |w|_gen.
  long count_gen(int gen) const {
    long s = 0;
    for (char c : code_) {
      if (static_cast<unsigned char>(c) / 2 == gen) ++s;
    }
    return s;
  }

  struct CyclicForm;           // w = u * core * u^{-1}, core cyclically reduced
  CyclicForm cyclically_reduce() const;

  Word rotate(size_t j) const {  // cyclic rotation; only sound on cyclically reduced words
    if (code_.empty()) return *this;
    j %= code_.size();
    return Word(code_.substr(j) + code_.substr(0, j));
  }

  // Least word, in bytewise order, among all rotations of the cyclically
  // reduced core and of its inverse.  Invariant under conjugation, inversion
  // and rotation; used as the relator key by the presentation search.
  Word cyclic_normal_form() const {
    auto [a, b] = cyclic_bounds();
    Word core = Word(code_.substr(a, b - a));
    if (core.empty()) return core;
    Word best = core;
    Word inv = core.inverse();
    for (size_t j = 0; j < core.size(); ++j) {
      Word r1 = core.rotate(j);
      Word r2 = inv.rotate(j);
      if (r1.code_ < best.code_) best = r1;
      if (r2.code_ < best.code_) best = r2;
    }
    return best;
  }

  bool operator==(const Word& o) const { return code_ == o.code_; }
  bool operator!=(const Word& o) const { return code_ != o.code_; }

  // Total order: length, then bytewise (= canonical letter order).
  bool operator<(const Word& o) const {
    if (code_.size() != o.code_.size()) return code_.size() < o.code_.size();
    return code_ < o.code_;
  }

  const std::string& code() const { return code_; }
  static Word from_code_trusted(std::string code) { return Word(std::move(code)); }

  void check_alphabet(const Alphabet& a) const {
    for (char c : code_) {
      if (static_cast<unsigned char>(c) / 2 >= a.size())
        throw AlphabetError("word uses a generator outside the alphabet");
    }
  }

  std::string to_string(const Alphabet& a) const {
    if (code_.empty()) return "1";
    std::string out;
    size_t i = 0;
    while (i < code_.size()) {
      Letter l = decode(static_cast<unsigned char>(code_[i]));
      size_t run = 1;
      while (i + run < code_.size() &&
             static_cast<unsigned char>(code_[i + run]) ==
                 static_cast<unsigned char>(code_[i]))
        ++run;
      if (!out.empty()) out += ' ';
      out += a.name(l.gen);
      long e = static_cast<long>(run) * l.sign;
      if (e != 1) out += "^" + std::to_string(e);
      i += run;
    }
    return out;
  }

  static Word parse(const std::string& text, const Alphabet& a) {
    std::string code;
    size_t i = 0;
    auto skip_ws = [&] {
      while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    skip_ws();
    while (i < text.size()) {
      size_t start = i;
      while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i])))
        ++i;
      std::string tok = text.substr(start, i - start);
      skip_ws();
      if (tok == "1") continue;  // identity token
      std::string name = tok;
      long exp = 1;
      auto caret = tok.find('^');
      if (caret != std::string::npos) {
        name = tok.substr(0, caret);
        std::string es = tok.substr(caret + 1);
        try {
          size_t pos = 0;
          exp = std::stol(es, &pos);
          if (pos != es.size()) throw std::invalid_argument(es);
        } catch (const std::exception&) {
          throw ParseError("bad exponent '" + es + "' in token '" + tok + "'");
        }
        if (exp == 0) throw ParseError("zero exponent in token '" + tok + "'");
      }
      if (name.empty()) throw ParseError("empty generator token");
      auto gi = a.find(name);
      if (!gi) throw AlphabetError("unknown generator '" + name + "'");
      unsigned char c = encode({*gi, exp < 0 ? -1 : 1});
      long reps = exp < 0 ? -exp : exp;
      for (long r = 0; r < reps; ++r) append_reduce(code, c);
    }
    return Word(std::move(code));
  }

 private:
  friend struct WordAccess;
  explicit Word(std::string code) : code_(std::move(code)) {}

  std::pair<size_t, size_t> cyclic_bounds() const {
    size_t a = 0, b = code_.size();
    while (b - a >= 2 &&
           (static_cast<unsigned char>(code_[a]) ^ 1u) ==
               static_cast<unsigned char>(code_[b - 1])) {
      ++a;
      --b;
    }
    return {a, b};
  }

  std::string code_;
};

struct Word::CyclicForm {
  Word core;
  Word conjugator;
};

inline Word::CyclicForm Word::cyclically_reduce() const {
  auto [a, b] = cyclic_bounds();
  CyclicForm f;
  f.conjugator = Word::from_code_trusted(code_.substr(0, a));
  f.core = Word::from_code_trusted(code_.substr(a, b - a));
  return f;
}

inline Word conjugate(const Word& w, const Word& u) {
  return u * w * u.inverse();
}

inline Word commutator(const Word& a, const Word& b) {
  return a * b * a.inverse() * b.inverse();
}

struct DeleteLetterResult {
  Word word;
  long removed = 0;
};

// Letterwise deletion of every occurrence of gen, then free reduction.
inline DeleteLetterResult delete_letter(const Word& w, int gen) {
  DeleteLetterResult out;
  std::string code;
  for (char c : w.code()) {
    if (static_cast<unsigned char>(c) / 2 == gen) {
      ++out.removed;
      continue;
    }
    Word::append_reduce(code, static_cast<unsigned char>(c));
  }
  out.word = Word::from_code_trusted(std::move(code));
  return out;
}

// Simultaneous substitution gen -> image word, then free reduction.
inline Word substitute(const Word& w, const std::vector<Word>& images) {
  std::string code;
  for (char c : w.code()) {
    Letter l = Word::decode(static_cast<unsigned char>(c));
    if (l.gen >= static_cast<int>(images.size()))
      throw AlphabetError("substitute: no image for generator");
    const Word& img = l.sign > 0 ? images[l.gen] : images[l.gen].inverse();
    for (char d : img.code())
      Word::append_reduce(code, static_cast<unsigned char>(d));
  }
  return Word::from_code_trusted(std::move(code));
}

}  // namespace acw
