// Command-line workbench: generators for the word family, the doubled
// presentations, exact solvers, area search, trace emission and checking.
//
// Exit codes: 0 success / mathematical yes, 1 mathematical no, 2 unknown or
// capped, 3 usage or IO error.

#include <cctype>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "acw/area.hpp"
#include "acw/britton.hpp"
#include "acw/constructions.hpp"
#include "acw/fixtures.hpp"
#include "acw/json_io.hpp"
#include "acw/search.hpp"
#include "acw/trivializer.hpp"

namespace {

constexpr int kYes = 0;
constexpr int kNo = 1;
constexpr int kUnknown = 2;
constexpr int kUsage = 3;

using nlohmann::json;

int parse_int_after(const std::string& s, std::size_t pos, const char* what) {
  try {
    std::size_t used = 0;
    int v = std::stoi(s.substr(pos), &used);
    if (pos + used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw acw::ParseError(std::string("cannot read ") + what + " from '" + s +
                          "'");
  }
}

// Presentation sources: a fixture name, an inline "< gens | relators >"
// literal, or a path to a JSON file produced by this tool.
acw::Presentation load_presentation(const std::string& src) {
  if (src.empty()) throw acw::ParseError("empty presentation source");
  if (src.front() == '<') return acw::Presentation::parse(src);
  if (src == "q1") return acw::fixtures::q1();
  if (src == "q2") return acw::fixtures::q2();
  if (src == "hard_rank4") return acw::fixtures::hard_rank4();
  if (src.size() >= 2 && src[0] == 'i' && std::isdigit(src[1]))
    return acw::fixtures::identity(parse_int_after(src, 1, "identity rank"));
  if (src.size() >= 2 && src[0] == 's' && std::isdigit(src[1]))
    return acw::fixtures::sk(parse_int_after(src, 1, "tower exponent"));
  if (src.rfind("qmk:", 0) == 0 || src.rfind("bm:", 0) == 0) {
    auto colon = src.find(':');
    auto colon2 = src.find(':', colon + 1);
    if (colon2 == std::string::npos)
      throw acw::ParseError("expected " + src.substr(0, colon) + ":<m>:<k>");
    int m = parse_int_after(src.substr(0, colon2), colon + 1, "m");
    int k = parse_int_after(src, colon2 + 1, "k");
    return src[0] == 'q' ? acw::fixtures::qmk(m, k) : acw::fixtures::bm(m, k);
  }
  std::ifstream in(src);
  if (!in) throw acw::ParseError("cannot open '" + src + "'");
  json j;
  in >> j;
  return acw::presentation_from_json(j);
}

void write_output(const std::string& path, const std::string& contents) {
  if (path.empty() || path == "-") {
    std::cout << contents << "\n";
    return;
  }
  std::ofstream out(path);
  if (!out) throw acw::ParseError("cannot write '" + path + "'");
  out << contents << "\n";
}

// Accepts plain decimals and the shorthand b^e for large arguments.
mpz_class parse_big(const std::string& s) {
  auto caret = s.find('^');
  try {
    if (caret == std::string::npos) return mpz_class(s);
    mpz_class base(s.substr(0, caret));
    unsigned long e = std::stoul(s.substr(caret + 1));
    mpz_class out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
    return out;
  } catch (const std::exception&) {
    throw acw::ParseError("cannot read integer '" + s + "'");
  }
}

struct CapsFlags {
  acw::AreaCaps caps;
  void attach(CLI::App* cmd) {
    cmd->add_option("--max-len", caps.max_len, "prune words longer than this");
    cmd->add_option("--max-states", caps.max_states, "visited-set cap");
    cmd->add_option("--max-depth", caps.max_depth, "search depth cap");
    cmd->add_option("--threads", caps.threads,
                    "worker threads (results are identical for any value)");
  }
};

json outcome_json(const acw::AreaOutcome& o) {
  json j;
  j["found"] = static_cast<bool>(o.area);
  if (o.area) j["area"] = *o.area;
  j["exact"] = o.exact;
  j["exhausted"] = o.exhausted;
  j["depth_searched"] = o.depth_searched;
  j["caps_hit"] = o.caps_hit;
  j["states"] = o.states;
  return j;
}

void print_outcome_text(const acw::AreaOutcome& o) {
  if (o.area) {
    std::cout << "area " << *o.area << (o.exact ? " (exact)" : " (upper bound)")
              << "\n";
  } else if (o.exhausted) {
    std::cout << "no filling exists (search exhausted)\n";
  } else {
    std::cout << "unknown: no filling with <= " << o.depth_searched
              << " applications within caps\n";
  }
  std::cout << "states " << o.states << ", depth " << o.depth_searched
            << (o.caps_hit ? ", caps hit" : "") << "\n";
}

int outcome_exit(const acw::AreaOutcome& o) {
  if (o.area) return kYes;
  return o.exhausted ? kNo : kUnknown;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "workbench for balanced presentations, relator moves and word fillings"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "structured output");

  int rc = kYes;
  auto run = [&](auto&& body) {
    try {
      rc = body();
    } catch (const acw::TowerOverflowError& e) {
      std::cerr << "error: " << e.what() << "\n";
      rc = kUnknown;
    } catch (const CLI::ParseError&) {
      throw;  // handled by CLI11 below
    } catch (const std::exception& e) {
      std::cerr << "error: " << e.what() << "\n";
      rc = kUsage;
    }
  };

  // gen-wn ------------------------------------------------------------
  long wn_n = 2;
  int wn_k = 2;
  auto* c_genwn = app.add_subcommand("gen-wn", "print the word w_n over {x,t}");
  c_genwn->add_option("--n", wn_n, "index n >= 1")->required();
  c_genwn->add_option("--k", wn_k, "tower exponent (w_n does not depend on it)");
  c_genwn->callback([&] {
    run([&]() -> int {
      if (wn_k < 2) throw acw::Error("k must be >= 2");
      acw::Word w = acw::gen_w(wn_n);
      acw::Alphabet ab = acw::xt_alphabet();
      if (as_json) {
        json j{{"format_version", acw::kFormatVersion},
               {"word", w.to_string(ab)},
               {"length", w.size()}};
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << w.to_string(ab) << "\n";
      }
      return kYes;
    });
  });

  // gen-v -------------------------------------------------------------
  int v_m = 1;
  auto* c_genv = app.add_subcommand("gen-v", "print the word V_m over {x,t}");
  c_genv->add_option("--m", v_m, "index m >= 0")->required();
  c_genv->callback([&] {
    run([&]() -> int {
      acw::Word v = acw::gen_V(v_m);
      acw::Alphabet ab = acw::xt_alphabet();
      if (as_json) {
        json j{{"format_version", acw::kFormatVersion},
               {"word", v.to_string(ab)},
               {"length", v.size()}};
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << v.to_string(ab) << "\n";
      }
      return kYes;
    });
  });

  // dagger ------------------------------------------------------------
  std::string dg_word;
  auto* c_dagger = app.add_subcommand(
      "dagger", "rewrite a zero-t-exponent word over {x,t} in the subscript "
                "letters x_i");
  c_dagger->add_option("--word", dg_word, "word over {x,t}")->required();
  c_dagger->callback([&] {
    run([&]() -> int {
      acw::Word w = acw::Word::parse(dg_word, acw::xt_alphabet());
      acw::IndexedWord lift = acw::dagger_lift(w);
      if (as_json) {
        json j{{"format_version", acw::kFormatVersion},
               {"word", lift.to_string()},
               {"length", lift.size()}};
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << lift.to_string() << "\n";
      }
      return kYes;
    });
  });

  // build-pw ----------------------------------------------------------
  std::string bp_seed = "s2", bp_a0 = "t", bp_a1 = "x", bp_w;
  long bp_n = 0;
  bool bp_tilde = false;
  auto* c_buildpw =
      app.add_subcommand("build-pw", "doubled balanced presentation for w");
  c_buildpw->add_option("--seed", bp_seed, "seed presentation (default s2)");
  c_buildpw->add_option("--a0", bp_a0, "generator killed in the quotient");
  c_buildpw->add_option("--a1", bp_a1, "generator conjugating a0 to w");
  c_buildpw->add_option("--w", bp_w, "doubling word over the seed alphabet");
  c_buildpw->add_option("--n", bp_n, "use w = w_n (overrides --w)");
  c_buildpw->add_flag("--tilde", bp_tilde,
                      "emit the stable-letter variant instead");
  c_buildpw->callback([&] {
    run([&]() -> int {
      acw::Presentation seed = load_presentation(bp_seed);
      acw::Word w = bp_n > 0 ? acw::gen_w(bp_n, seed.alphabet)
                             : acw::Word::parse(bp_w, seed.alphabet);
      acw::DoublingSpec spec(seed, bp_a0, bp_a1, w);
      acw::Presentation out =
          bp_tilde ? acw::build_tilde_Pw(spec) : acw::build_Pw(spec);
      if (as_json)
        std::cout << acw::to_json(out).dump(2) << "\n";
      else
        std::cout << out.to_string() << "\n";
      return kYes;
    });
  });

  // measures ----------------------------------------------------------
  std::string ms_input;
  auto* c_measures =
      app.add_subcommand("measures", "size measures of a presentation");
  c_measures->add_option("--input", ms_input, "presentation source")
      ->required();
  c_measures->callback([&] {
    run([&]() -> int {
      acw::Presentation p = load_presentation(ms_input);
      acw::Measures m = acw::measures(p);
      if (as_json) {
        json j{{"format_version", acw::kFormatVersion},
               {"generators", m.generators},
               {"relators", m.relators},
               {"lambda", m.total_relator_length},
               {"deficiency", m.deficiency},
               {"balanced", m.balanced}};
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << "generators " << m.generators << "\nrelators "
                  << m.relators << "\nlambda " << m.total_relator_length
                  << "\ndeficiency " << m.deficiency << "\nbalanced "
                  << (m.balanced ? "yes" : "no") << "\n";
      }
      return kYes;
    });
  });

  // delete-letter ------------------------------------------------------
  std::string dl_input, dl_gen;
  auto* c_delete = app.add_subcommand(
      "delete-letter", "remove a generator and its occurrences");
  c_delete->add_option("--input", dl_input, "presentation source")->required();
  c_delete->add_option("--gen", dl_gen, "generator name")->required();
  c_delete->callback([&] {
    run([&]() -> int {
      acw::Presentation p = load_presentation(dl_input);
      acw::PresentationDeletion d = acw::delete_letter(p, dl_gen);
      if (as_json) {
        json j = acw::to_json(d.result);
        j["removed"] = d.removed;
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << d.result.to_string() << "\n";
        long total = 0;
        for (long r : d.removed) total += r;
        std::cout << "removed " << total << " letters\n";
      }
      return kYes;
    });
  });

  // solve --------------------------------------------------------------
  std::string sv_group = "s2", sv_word;
  int sv_k = 2;
  long sv_bits = 1L << 20;
  auto* c_solve = app.add_subcommand(
      "solve", "exact word problem in a tower group or its chain quotient");
  c_solve->add_option("--group", sv_group, "s<k>, or 'bm' with --k");
  c_solve->add_option("--k", sv_k, "exponent for --group bm");
  c_solve->add_option("--word", sv_word, "word ({x,t} or x<i> letters for bm)")
      ->required();
  c_solve->add_option("--bit-budget", sv_bits, "intermediate exponent cap");
  c_solve->callback([&] {
    run([&]() -> int {
      acw::SolverBudgets budgets;
      budgets.bit_budget = sv_bits;
      bool trivial = false;
      std::string detail;
      if (sv_group == "bm") {
        acw::IndexedWord v = acw::IndexedWord::parse(sv_word);
        trivial = acw::solve_Bm(v, sv_k, budgets);
      } else if (sv_group.size() >= 2 && sv_group[0] == 's') {
        int k = parse_int_after(sv_group, 1, "tower exponent");
        acw::Word w = acw::Word::parse(sv_word, acw::xt_alphabet());
        acw::BrittonResult r = acw::britton_solve(w, k, budgets);
        trivial = r.trivial;
        detail = r.reduced.to_string();
      } else {
        throw acw::ParseError("unknown group '" + sv_group + "'");
      }
      if (as_json) {
        json j{{"format_version", acw::kFormatVersion},
               {"trivial", trivial}};
        if (!detail.empty()) j["reduced"] = detail;
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << (trivial ? "trivial" : "nontrivial") << "\n";
        if (!detail.empty() && !trivial)
          std::cout << "reduced: " << detail << "\n";
      }
      return trivial ? kYes : kNo;
    });
  });

  // area ---------------------------------------------------------------
  std::string ar_input, ar_word;
  CapsFlags ar_caps;
  auto* c_area = app.add_subcommand(
      "area", "least number of relator applications filling a word");
  c_area->add_option("--input", ar_input, "presentation source")->required();
  c_area->add_option("--word", ar_word, "word to fill")->required();
  ar_caps.attach(c_area);
  c_area->callback([&] {
    run([&]() -> int {
      acw::Presentation p = load_presentation(ar_input);
      acw::Word w = acw::Word::parse(ar_word, p.alphabet);
      acw::AreaOutcome o = acw::area_bfs(p, w, ar_caps.caps);
      if (as_json) {
        json j = outcome_json(o);
        j["format_version"] = acw::kFormatVersion;
        std::cout << j.dump(2) << "\n";
      } else {
        print_outcome_text(o);
      }
      return outcome_exit(o);
    });
  });

  // area-star ----------------------------------------------------------
  std::string as_input, as_word;
  long as_nmax = 2;
  CapsFlags as_caps;
  auto* c_areastar = app.add_subcommand(
      "area-star", "bounded minimum of area over nonzero powers");
  c_areastar->add_option("--input", as_input, "presentation source")
      ->required();
  c_areastar->add_option("--word", as_word, "base word")->required();
  c_areastar->add_option("--n-max", as_nmax, "largest |power| tried");
  as_caps.attach(c_areastar);
  c_areastar->callback([&] {
    run([&]() -> int {
      acw::Presentation p = load_presentation(as_input);
      acw::Word w = acw::Word::parse(as_word, p.alphabet);
      acw::AreaStarOutcome o =
          acw::area_star_bounded(p, w, as_nmax, as_caps.caps);
      if (as_json) {
        json j{{"format_version", acw::kFormatVersion},
               {"upper", nullptr},
               {"exhausted_lower", o.exhausted_lower}};
        if (o.upper) j["upper"] = *o.upper;
        json pp = json::object();
        for (const auto& [n, oc] : o.per_power)
          pp[std::to_string(n)] = outcome_json(oc);
        j["per_power"] = std::move(pp);
        std::cout << j.dump(2) << "\n";
      } else {
        if (o.upper)
          std::cout << "upper " << *o.upper << "\n";
        else
          std::cout << "upper unknown\n";
        std::cout << "no filling of any tried power with < "
                  << o.exhausted_lower << " applications\n";
        for (const auto& [n, oc] : o.per_power) {
          std::cout << "  power " << n << ": ";
          if (oc.area)
            std::cout << "area " << *oc.area << "\n";
          else
            std::cout << (oc.exhausted ? "no filling" : "unknown") << "\n";
        }
      }
      return o.upper ? kYes : kUnknown;
    });
  });

  // prove --------------------------------------------------------------
  std::string pr_input, pr_word, pr_out;
  CapsFlags pr_caps;
  auto* c_prove = app.add_subcommand(
      "prove", "emit a product-of-conjugates certificate for a filling");
  c_prove->add_option("--input", pr_input, "presentation source")->required();
  c_prove->add_option("--word", pr_word, "word to certify")->required();
  c_prove->add_option("--out", pr_out, "certificate file (default stdout)");
  pr_caps.attach(c_prove);
  c_prove->callback([&] {
    run([&]() -> int {
      acw::Presentation p = load_presentation(pr_input);
      acw::Word w = acw::Word::parse(pr_word, p.alphabet);
      acw::ProveOutcome o = acw::prove(p, w, pr_caps.caps);
      if (!o.certificate) {
        if (as_json) {
          json j = outcome_json(o.search);
          j["format_version"] = acw::kFormatVersion;
          std::cout << j.dump(2) << "\n";
        } else {
          print_outcome_text(o.search);
        }
        return outcome_exit(o.search);
      }
      json cert = acw::to_json(*o.certificate, p.alphabet);
      write_output(pr_out, cert.dump(2));
      return kYes;
    });
  });

  // trivialize ----------------------------------------------------------
  long tv_n = 2;
  int tv_k = 2;
  long tv_budget = 4096;
  std::string tv_out;
  auto* c_triv = app.add_subcommand(
      "trivialize",
      "construct a verified trace trivializing the doubled presentation");
  c_triv->add_option("--n", tv_n, "word family index n >= 2")->required();
  c_triv->add_option("--k", tv_k, "tower exponent (2 for the doubled scheme)");
  c_triv->add_option("--step-budget", tv_budget, "certificate step cap");
  c_triv->add_option("--out", tv_out, "trace file (default stdout)");
  c_triv->callback([&] {
    run([&]() -> int {
      acw::TrivializationPlan plan = acw::sk_wn_plan(tv_k, tv_n, tv_budget);
      acw::TrivializationReport rep = acw::trivialize_Pw(plan);
      acw::VerifyResult vr = acw::verify_trivialization(rep.trace);
      json audit{{"format_version", acw::kFormatVersion},
                 {"dihedral_moves", rep.counts.dihedral},
                 {"certificate_steps", rep.cert_steps},
                 {"quotient_moves", rep.acc_bar},
                 {"a0_letters", rep.sum_r0},
                 {"bound", rep.bound},
                 {"within_bound", rep.within_bound},
                 {"verified", vr.accepted}};
      if (as_json) {
        json j = audit;
        j["trace"] = acw::to_json(rep.trace);
        write_output(tv_out, j.dump(2));
      } else {
        write_output(tv_out, acw::to_json(rep.trace).dump(2));
        std::cerr << "moves " << rep.counts.dihedral << ", bound " << rep.bound
                  << ", verified " << (vr.accepted ? "yes" : "no") << "\n";
      }
      return vr.accepted ? kYes : kNo;
    });
  });

  // verify-trace --------------------------------------------------------
  std::string vt_input;
  bool vt_exact = false;
  auto* c_verify = app.add_subcommand(
      "verify-trace", "replay a trace and check it ends at the identity");
  c_verify->add_option("--input", vt_input, "trace JSON file")->required();
  c_verify->add_flag("--exact-order", vt_exact,
                     "require relator i to equal generator i verbatim");
  c_verify->callback([&] {
    run([&]() -> int {
      std::ifstream in(vt_input);
      if (!in) throw acw::ParseError("cannot open '" + vt_input + "'");
      json j;
      in >> j;
      acw::MoveTrace trace = acw::trace_from_json(j);
      acw::VerifyOptions opts;
      opts.exact_order = vt_exact;
      acw::VerifyResult vr = acw::verify_trivialization(trace, opts);
      if (as_json) {
        json out{{"format_version", acw::kFormatVersion},
                 {"accepted", vr.accepted},
                 {"reason", vr.reason},
                 {"final", acw::to_json(vr.final_presentation)}};
        std::cout << out.dump(2) << "\n";
      } else if (vr.accepted) {
        std::cout << "accepted\n" << vr.final_presentation.to_string() << "\n";
      } else {
        std::cout << "rejected: " << vr.reason << "\n";
      }
      return vr.accepted ? kYes : kNo;
    });
  });

  // fib-bound -----------------------------------------------------------
  long fb_m = 0;
  auto* c_fib = app.add_subcommand(
      "fib-bound", "growth cap for per-relator certificate factor counts");
  c_fib->add_option("--m", fb_m, "trace length")->required();
  c_fib->callback([&] {
    run([&]() -> int {
      mpz_class f = acw::fibonacci_bound(fb_m);
      if (as_json) {
        json j{{"format_version", acw::kFormatVersion},
               {"m", fb_m},
               {"bound", f.get_str()}};
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << f.get_str() << "\n";
      }
      return kYes;
    });
  });

  // acc-bounds ----------------------------------------------------------
  std::string ab_n = "2", ab_trace;
  int ab_k = 2;
  long ab_bits = 1L << 20;
  auto* c_acc = app.add_subcommand(
      "acc-bounds", "bracket the move count needed to trivialize the doubled "
                    "presentation at w_n");
  c_acc->add_option("--n", ab_n, "index n (decimal or b^e)")->required();
  c_acc->add_option("--k", ab_k, "tower exponent");
  c_acc->add_option("--trace", ab_trace, "verified trace for the upper bound");
  c_acc->add_option("--bit-budget", ab_bits, "materialization cap");
  c_acc->callback([&] {
    run([&]() -> int {
      mpz_class n = parse_big(ab_n);
      std::optional<acw::MoveTrace> trace;
      if (!ab_trace.empty()) {
        std::ifstream in(ab_trace);
        if (!in) throw acw::ParseError("cannot open '" + ab_trace + "'");
        json j;
        in >> j;
        trace = acw::trace_from_json(j);
      }
      acw::AccBounds b =
          acw::acc_bounds(n, ab_k, trace ? &*trace : nullptr, ab_bits);
      if (as_json) {
        json j{{"format_version", acw::kFormatVersion},
               {"tower_height", b.tower_height},
               {"lower", nullptr},
               {"description", b.description}};
        if (b.lower) j["lower"] = b.lower->get_str();
        if (b.upper) j["upper"] = *b.upper;
        std::cout << j.dump(2) << "\n";
      } else {
        if (b.lower)
          std::cout << "lower " << b.lower->get_str() << "\n";
        else
          std::cout << "lower symbolic: " << b.description << "\n";
        if (b.upper) std::cout << "upper " << *b.upper << "\n";
      }
      return kYes;
    });
  });

  // search --------------------------------------------------------------
  std::string se_input, se_out;
  acw::SearchCaps se_caps;
  auto* c_search = app.add_subcommand(
      "search", "breadth-first hunt for a trivializing trace");
  c_search->add_option("--input", se_input, "presentation source")->required();
  c_search->add_option("--max-len", se_caps.max_relator_len,
                       "relator length cap");
  c_search->add_option("--max-conj", se_caps.max_conjugator_len,
                       "conjugator length cap");
  c_search->add_option("--max-states", se_caps.max_states, "visited-set cap");
  c_search->add_option("--max-depth", se_caps.max_depth, "depth cap");
  c_search->add_option("--threads", se_caps.threads, "worker threads");
  c_search->add_option("--out", se_out, "trace file (default stdout)");
  c_search->callback([&] {
    run([&]() -> int {
      acw::Presentation p = load_presentation(se_input);
      acw::SearchOutcome o = acw::bfs_trivialize(p, se_caps);
      json stats{{"states", o.states},
                 {"depth_searched", o.depth_searched},
                 {"caps_hit", o.caps_hit},
                 {"found", static_cast<bool>(o.trace)}};
      if (!o.trace) {
        stats["format_version"] = acw::kFormatVersion;
        std::cout << stats.dump(2) << "\n";
        return kUnknown;
      }
      if (as_json) {
        json j = stats;
        j["format_version"] = acw::kFormatVersion;
        j["trace"] = acw::to_json(*o.trace);
        write_output(se_out, j.dump(2));
      } else {
        write_output(se_out, acw::to_json(*o.trace).dump(2));
        std::cerr << "found in " << o.trace->moves.size() << " moves, states "
                  << o.states << "\n";
      }
      return kYes;
    });
  });

  // sublevel ------------------------------------------------------------
  int sl_k = 2;
  long sl_m = 4;
  acw::SearchCaps sl_caps;
  auto* c_sub = app.add_subcommand(
      "sublevel",
      "enumerate balanced presentations with bounded total relator length");
  c_sub->add_option("--k", sl_k, "generator count")->required();
  c_sub->add_option("--m", sl_m, "total relator length bound")->required();
  c_sub->add_option("--max-len", sl_caps.max_relator_len,
                    "relator length cap for edges");
  c_sub->add_option("--max-conj", sl_caps.max_conjugator_len,
                    "conjugator length cap for edges");
  c_sub->callback([&] {
    run([&]() -> int {
      acw::SublevelReport rep = acw::explore_sublevel(sl_k, sl_m, sl_caps);
      if (as_json) {
        json entries = json::array();
        for (const auto& e : rep.entries) {
          json rels = json::array();
          for (const auto& r : e.rep.relators)
            rels.push_back(r.to_string(e.rep.alphabet));
          entries.push_back({{"relators", rels},
                             {"abs_det", e.abs_det.get_str()},
                             {"trivial_marker", e.trivial_marker},
                             {"component", e.component}});
        }
        json j{{"format_version", acw::kFormatVersion},
               {"k", rep.k},
               {"m", rep.m},
               {"entries", entries},
               {"component_count", rep.component_count},
               {"component_sizes", rep.component_sizes},
               {"identity_entry", rep.identity_entry},
               {"cap_dependent", rep.cap_dependent}};
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << rep.entries.size() << " presentations, "
                  << rep.component_count << " capped components\n";
        for (const auto& e : rep.entries) {
          std::cout << "  " << e.rep.to_string() << "  |det| "
                    << e.abs_det.get_str() << "  component " << e.component
                    << (e.trivial_marker ? "  [unimodular]" : "") << "\n";
        }
      }
      return kYes;
    });
  });

  // fixtures ------------------------------------------------------------
  std::string fx_name;
  auto* c_fix = app.add_subcommand("fixtures", "builtin presentations");
  c_fix->add_option("--name", fx_name, "fixture to print (default: list)");
  c_fix->callback([&] {
    run([&]() -> int {
      if (fx_name.empty()) {
        std::cout << "q1 q2 i<k> s<k> qmk:<m>:<k> bm:<m>:<k> hard_rank4\n";
        return kYes;
      }
      acw::Presentation p = load_presentation(fx_name);
      if (as_json)
        std::cout << acw::to_json(p).dump(2) << "\n";
      else
        std::cout << p.to_string() << "\n";
      return kYes;
    });
  });

  // The flag is accepted both before and after the subcommand name.
  for (CLI::App* sc : app.get_subcommands([](const CLI::App*) { return true; }))
    sc->add_flag("--json", as_json, "structured output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }
  return rc;
}
