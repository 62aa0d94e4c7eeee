#pragma once

// JSON encodings for presentations, moves, traces and certificates.  Words
// travel as their text form ("1" for the empty word); every top-level
// document carries format_version so readers can reject incompatible dumps.

#include <string>
#include <vector>

#include <json.hpp>

#include "acw/area.hpp"
#include "acw/moves.hpp"
#include "acw/presentation.hpp"

namespace acw {

inline constexpr int kFormatVersion = 1;

inline nlohmann::json to_json(const Presentation& p) {
  nlohmann::json j;
  j["format_version"] = kFormatVersion;
  j["generators"] = p.alphabet.names();
  std::vector<std::string> rels;
  rels.reserve(p.relators.size());
  for (const Word& r : p.relators) rels.push_back(r.to_string(p.alphabet));
  j["relators"] = rels;
  return j;
}

namespace detail {

inline void require_version(const nlohmann::json& j) {
  if (!j.is_object()) throw ParseError("expected a JSON object");
  if (j.value("format_version", 0) != kFormatVersion)
    throw ParseError("unsupported format_version");
}

// The fresh names chosen by a Stabilize move, replicated so trace parsing
// can track the evolving alphabet.
inline void stabilize_names(Alphabet& ab, int count) {
  int next = 1;
  for (int c = 0; c < count; ++c) {
    std::string name;
    do {
      name = "x" + std::to_string(next++);
    } while (ab.contains(name));
    ab.add(name);
  }
}

}  // namespace detail

inline Presentation presentation_from_json(const nlohmann::json& j) {
  detail::require_version(j);
  Alphabet ab(j.at("generators").get<std::vector<std::string>>());
  std::vector<Word> rels;
  for (const auto& s : j.at("relators"))
    rels.push_back(Word::parse(s.get<std::string>(), ab));
  return Presentation(std::move(ab), std::move(rels));
}

inline nlohmann::json to_json(const Move& m, const Alphabet& ab) {
  nlohmann::json j;
  j["op"] = op_name(m.op);
  switch (m.op) {
    case Move::Op::Invert:
      j["i"] = m.i;
      break;
    case Move::Op::MultiplyRight:
      j["i"] = m.i;
      j["j"] = m.j;
      break;
    case Move::Op::Conjugate:
      j["i"] = m.i;
      j["u"] = m.u.to_string(ab);
      break;
    case Move::Op::Dihedral:
      j["j"] = m.j;
      j["i"] = m.i;
      j["sign"] = m.sign;
      j["u"] = m.u.to_string(ab);
      break;
    case Move::Op::Stabilize:
      j["count"] = m.count;
      break;
    case Move::Op::AddEmpty:
      break;
    case Move::Op::RemoveEmpty:
      j["index"] = m.count;
      break;
  }
  return j;
}

inline Move move_from_json(const nlohmann::json& j, const Alphabet& ab) {
  std::string op = j.at("op").get<std::string>();
  if (op == "invert") return Move::invert(j.at("i").get<int>());
  if (op == "multiply")
    return Move::multiply_right(j.at("i").get<int>(), j.at("j").get<int>());
  if (op == "conjugate")
    return Move::conj(j.at("i").get<int>(),
                      Word::parse(j.at("u").get<std::string>(), ab));
  if (op == "dihedral")
    return Move::dihedral(j.at("j").get<int>(), j.at("i").get<int>(),
                          j.at("sign").get<int>(),
                          Word::parse(j.at("u").get<std::string>(), ab));
  if (op == "stabilize") return Move::stabilize(j.at("count").get<int>());
  if (op == "add_empty") return Move::add_empty();
  if (op == "remove_empty") return Move::remove_empty(j.at("index").get<int>());
  throw ParseError("unknown move op '" + op + "'");
}

inline nlohmann::json to_json(const MoveTrace& trace) {
  nlohmann::json j;
  j["format_version"] = kFormatVersion;
  j["initial"] = to_json(trace.initial);
  nlohmann::json moves = nlohmann::json::array();
  Alphabet ab = trace.initial.alphabet;
  for (const Move& m : trace.moves) {
    moves.push_back(to_json(m, ab));
    if (m.op == Move::Op::Stabilize) detail::stabilize_names(ab, m.count);
  }
  j["moves"] = std::move(moves);
  return j;
}

inline MoveTrace trace_from_json(const nlohmann::json& j) {
  detail::require_version(j);
  MoveTrace trace;
  trace.initial = presentation_from_json(j.at("initial"));
  Alphabet ab = trace.initial.alphabet;
  for (const auto& mj : j.at("moves")) {
    Move m = move_from_json(mj, ab);
    if (m.op == Move::Op::Stabilize) detail::stabilize_names(ab, m.count);
    trace.moves.push_back(std::move(m));
  }
  return trace;
}

inline nlohmann::json to_json(const AreaCertificate& cert, const Alphabet& ab) {
  nlohmann::json j;
  j["format_version"] = kFormatVersion;
  j["target"] = cert.target().to_string(ab);
  nlohmann::json steps = nlohmann::json::array();
  for (const CertStep& s : cert.steps()) {
    steps.push_back({{"u", s.u.to_string(ab)},
                     {"relator", s.relator},
                     {"sign", s.sign}});
  }
  j["steps"] = std::move(steps);
  return j;
}

// Validation happens in the AreaCertificate constructor, so a parsed
// certificate is always sound with respect to the given presentation.
inline AreaCertificate certificate_from_json(const nlohmann::json& j,
                                             const Presentation& p) {
  detail::require_version(j);
  Word target = Word::parse(j.at("target").get<std::string>(), p.alphabet);
  std::vector<CertStep> steps;
  for (const auto& sj : j.at("steps"))
    steps.push_back({Word::parse(sj.at("u").get<std::string>(), p.alphabet),
                     sj.at("relator").get<int>(), sj.at("sign").get<int>()});
  return AreaCertificate(p, std::move(target), std::move(steps));
}

}  // namespace acw
