#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "garnorm/class_analysis.hpp"
#include "garnorm/error.hpp"
#include "garnorm/garside_family.hpp"
#include "garnorm/garside_lattice.hpp"
#include "garnorm/instances.hpp"
#include "garnorm/io.hpp"
#include "garnorm/normaliser.hpp"
#include "garnorm/parallel.hpp"
#include "garnorm/rewriting.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace garnorm;

constexpr int kExitContradiction = 1;
constexpr int kExitInput = 2;

struct Output {
  bool json = false;
  bool ascii = false;
};

Output out;

std::string fmt(const Alphabet& a, const Word& w) { return format_word(a, w, out.ascii); }

std::string letter(const Alphabet& a, Letter l) {
  return out.ascii ? ascii_alias(a.name(l)) : a.name(l);
}

void emit(const std::string& command, json body, const std::string& text) {
  if (out.json) {
    json j;
    j["schema_version"] = kSchemaVersion;
    j["command"] = command;
    for (auto& [k, v] : body.items()) j[k] = v;
    std::cout << j.dump(2) << "\n";
  } else if (!text.empty()) {
    std::cout << text << (text.back() == '\n' ? "" : "\n");
  }
}

std::pair<int, int> parse_class_pair(const std::string& s) {
  const auto comma = s.find(',');
  if (comma == std::string::npos) throw ParseError("expected a class as 'l,r', got '" + s + "'");
  try {
    return {std::stoi(s.substr(0, comma)), std::stoi(s.substr(comma + 1))};
  } catch (const std::exception&) {
    throw ParseError("expected a class as 'l,r', got '" + s + "'");
  }
}

json class_json(const ClassReport& r, const Alphabet& a) {
  auto side = [&](const ClassBound& b) {
    json j;
    j["value"] = b.value;
    j["capped"] = b.capped;
    j["witness"] = b.witness ? json(fmt(a, *b.witness)) : json(nullptr);
    return j;
  };
  json j;
  j["class"] = format_class(r);
  j["left"] = side(r.left);
  j["right"] = side(r.right);
  j["cap"] = r.cap;
  j["left_from_map"] = r.left_from_map ? json(*r.left_from_map) : json(nullptr);
  j["right_from_map"] = r.right_from_map ? json(*r.right_from_map) : json(nullptr);
  j["map_identities_agree"] = r.map_identities_agree;
  return j;
}

RewriteSystem system_from(const std::string& system, const std::string& instance) {
  if (!system.empty()) return rules_from_json(read_file(system));
  if (!instance.empty()) return system_of(load_instance(instance).nz);
  throw ParseError("one of --system or --instance is required");
}

std::string derivation_text(const Alphabet& a, const RewriteSystem& r, const Derivation& d) {
  std::ostringstream s;
  s << fmt(a, d.start) << "\n";
  for (const auto& step : d.steps) {
    const Rule& rule = r.rules()[step.rule];
    s << "  -[" << step.position << ": " << letter(a, rule.s) << "|" << letter(a, rule.t) << " -> "
      << fmt(a, rule.rhs) << "]-> " << fmt(a, step.after) << "\n";
  }
  s << "status: " << to_string(d.status) << ", steps: " << d.steps.size();
  if (d.cycle_start) s << ", cycle length: " << d.cycle_length();
  s << "\nresult: " << fmt(a, d.end);
  return s.str();
}

json derivation_json(const Alphabet& a, const RewriteSystem& r, const Derivation& d) {
  json j;
  j["start"] = fmt(a, d.start);
  j["end"] = fmt(a, d.end);
  j["status"] = to_string(d.status);
  j["cycle_start"] = d.cycle_start ? json(*d.cycle_start) : json(nullptr);
  j["cycle_length"] = d.cycle_length();
  j["seed"] = d.seed ? json(*d.seed) : json(nullptr);
  json steps = json::array();
  for (const auto& step : d.steps) {
    const Rule& rule = r.rules()[step.rule];
    steps.push_back({{"position", step.position},
                     {"rule", letter(a, rule.s) + "|" + letter(a, rule.t)},
                     {"rhs", fmt(a, rule.rhs)},
                     {"after", fmt(a, step.after)}});
  }
  j["steps"] = steps;
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quadratic normalisation toolkit: normal forms, class analysis, Garside checks"};
  app.require_subcommand(1);
  app.fallthrough();
  std::size_t workers = 0;
  app.add_flag("--json", out.json, "Emit a JSON report");
  app.add_flag("--ascii", out.ascii, "Print ASCII letter aliases (s1, D, ', ...)");
  app.add_option("--workers", workers, "Worker threads for exhaustive scans (0 = hardware)");

  std::string instance, word, word2, side = "left", system, presentation_file, family, strategy = "leftmost";
  std::string expect_class;
  int cap = 12;
  std::size_t max_len = 3, bound = 8, max_steps = 1000, length = 4;
  std::uint64_t seed = 0;
  std::vector<std::size_t> script;
  bool strip = false, right = false, mod_e = false;

  auto* normalize_cmd = app.add_subcommand("normalize", "Normal form of a word");
  normalize_cmd->add_option("--instance", instance, "Instance name or JSON file")->required();
  normalize_cmd->add_option("--word", word, "Word in the s|t|... format")->required();
  normalize_cmd->add_flag("--strip", strip, "Erase the neutral letter from the result");
  normalize_cmd->add_flag("--right", right, "Use the right-to-left schedule");

  auto* group_cmd = app.add_subcommand("group-normal-form", "Δ^m|s1|...|sp form of a signed word");
  group_cmd->add_option("--instance", instance)->required();
  group_cmd->add_option("--word", word, "Word such as s1|s2^-1")->required();

  auto* wp_cmd = app.add_subcommand("word-problem", "Decide whether two words are equal");
  wp_cmd->add_option("--instance", instance)->required();
  wp_cmd->add_option("--word", word)->required();
  wp_cmd->add_option("--other", word2)->required();

  auto* axioms_cmd = app.add_subcommand("axioms", "Check the normalisation axioms");
  axioms_cmd->add_option("--instance", instance)->required();
  axioms_cmd->add_option("--max-len", max_len)->check(CLI::PositiveNumber);
  axioms_cmd->add_option("--seed", seed);

  auto* automaton_cmd = app.add_subcommand("automaton", "DOT export of the normal-word automaton");
  automaton_cmd->add_option("--instance", instance)->required();

  auto* pres_cmd = app.add_subcommand("presentation", "Relations s|t = N(s|t)");
  pres_cmd->add_option("--instance", instance)->required();
  pres_cmd->add_flag("--mod-e", mod_e, "Erase the neutral letter");

  auto* class_cmd = app.add_subcommand("class", "Left and right class");
  class_cmd->add_option("--instance", instance)->required();
  class_cmd->add_option("--cap", cap)->check(CLI::PositiveNumber);
  class_cmd->add_option("--expect-class", expect_class, "Fail with exit 1 unless the class is l,r");

  auto* domino_cmd = app.add_subcommand("domino", "Check the left or right domino rule");
  domino_cmd->add_option("--instance", instance)->required();
  domino_cmd->add_option("--side", side)->check(CLI::IsMember({"left", "right"}));

  auto* garside_cmd = app.add_subcommand("garside-check", "Garside characterisation");
  garside_cmd->add_option("--instance", instance)->required();
  garside_cmd->add_option("--cap", cap)->check(CLI::PositiveNumber);

  auto* fellow_cmd = app.add_subcommand("fellow", "2-fellow traveller check");
  fellow_cmd->add_option("--instance", instance)->required();
  fellow_cmd->add_option("--side", side)->check(CLI::IsMember({"left", "right"}));
  fellow_cmd->add_option("--max-len", max_len)->check(CLI::NonNegativeNumber);

  auto* inst_cmd = app.add_subcommand("instance", "Instance generators");
  inst_cmd->require_subcommand(1);
  auto* gen_cmd = inst_cmd->add_subcommand("gen", "Emit the instance JSON of a built-in family");
  gen_cmd->require_subcommand(1);
  int n = 3;
  std::string exponents = "2,3";
  auto* gen_abelian = gen_cmd->add_subcommand("abelian", "Free abelian monoid");
  gen_abelian->add_option("--n", n)->check(CLI::Range(1, 10));
  auto* gen_braid = gen_cmd->add_subcommand("braid", "Braid monoid");
  gen_braid->add_option("--n", n)->check(CLI::Range(2, 6));
  auto* gen_torus = gen_cmd->add_subcommand("torus", "Torus-type monoid");
  gen_torus->add_option("--e", exponents, "Exponents e1,e2,...");
  auto* gen_plactic = gen_cmd->add_subcommand("plactic", "Plactic monoid on columns");
  gen_plactic->add_option("--x", n)->check(CLI::Range(1, 6));
  auto* gen_lex = gen_cmd->add_subcommand("lex", "Lexicographic normalisation");
  gen_lex->add_option("--n", n)->check(CLI::PositiveNumber);
  std::string named;
  auto* gen_named = gen_cmd->add_subcommand("named", "Any built-in instance by name");
  gen_named->add_option("name", named)->required();

  auto* closure_cmd = app.add_subcommand("closure", "Smallest Garside family up to a bound");
  closure_cmd->add_option("--presentation", presentation_file, "Presentation JSON file, or atilde2")
      ->required();
  closure_cmd->add_option("--bound", bound)->check(CLI::PositiveNumber);

  auto* family_cmd = app.add_subcommand("family-check", "Verify a Garside family candidate");
  family_cmd->add_option("--family", family, "Presentation JSON with a \"family\" member")
      ->required();
  family_cmd->add_option("--bound", bound)->check(CLI::PositiveNumber);

  auto* rewrite_cmd = app.add_subcommand("rewrite", "Run a rewriting strategy on a word");
  rewrite_cmd->add_option("--system", system, "Rule JSON file");
  rewrite_cmd->add_option("--instance", instance, "Use the rules of a normaliser");
  rewrite_cmd->add_option("--word", word)->required();
  rewrite_cmd->add_option("--strategy", strategy)
      ->check(CLI::IsMember({"leftmost", "rightmost", "random", "exhaustive", "scripted"}));
  rewrite_cmd->add_option("--max-steps", max_steps)->check(CLI::PositiveNumber);
  rewrite_cmd->add_option("--seed", seed);
  rewrite_cmd->add_option("--script", script, "Positions for the scripted strategy")
      ->delimiter(',');

  auto* longest_cmd = app.add_subcommand("longest-derivation", "Longest derivation on length-p words");
  longest_cmd->add_option("--system", system);
  longest_cmd->add_option("--instance", instance);
  longest_cmd->add_option("--length", length)->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInput;
  }
  set_default_workers(workers);

  try {
    if (*normalize_cmd) {
      const Instance inst = load_instance(instance);
      const Alphabet& a = inst.nz.alphabet();
      const Word w = parse_word(a, word);
      Word nf = right ? normalize_right(inst.nz, w) : normal_form(inst.nz, w);
      if (strip && inst.nz.neutral()) nf = erase_letter(nf, *inst.nz.neutral());
      emit("normalize", {{"instance", inst.name}, {"input", fmt(a, w)}, {"normal_form", fmt(a, nf)}},
           fmt(a, nf).empty() ? std::string() : fmt(a, nf));
      return 0;
    }
    if (*group_cmd) {
      const Instance inst = load_instance(instance);
      if (!inst.lattice) throw ConfigurationError("group normal forms need a Garside-lattice instance");
      const auto g = group_delta_normal_form(*inst.lattice, parse_signed_word(*inst.lattice, word));
      const std::string text = format_group_normal_form(*inst.lattice, g, out.ascii);
      emit("group-normal-form",
           {{"instance", inst.name}, {"delta_power", g.delta_power},
            {"word", fmt(inst.nz.alphabet(), g.word)}, {"text", text}},
           text);
      return 0;
    }
    if (*wp_cmd) {
      const Instance inst = load_instance(instance);
      const Alphabet& a = inst.nz.alphabet();
      const bool eq = word_problem(inst.nz, parse_word(a, word), parse_word(a, word2));
      emit("word-problem", {{"instance", inst.name}, {"equal", eq}}, eq ? "equal" : "different");
      return 0;
    }
    if (*axioms_cmd) {
      const Instance inst = load_instance(instance);
      AxiomOptions opts;
      opts.max_len = max_len;
      if (seed != 0) opts.seed = seed;
      const AxiomReport r = verify_axioms(inst.nz, opts);
      json j{{"instance", inst.name}, {"passed", r.passed}, {"exhaustive", r.exhaustive},
             {"words_checked", r.words_checked}};
      std::string text = r.passed ? "PASS" : "FAIL";
      if (r.violation) {
        j["violation"] = {{"axiom", r.violation->axiom},
                          {"word", fmt(inst.nz.alphabet(), r.violation->word)},
                          {"detail", r.violation->detail}};
        text += " " + r.violation->axiom + " at '" + fmt(inst.nz.alphabet(), r.violation->word) +
                "': " + r.violation->detail;
      }
      text += r.exhaustive ? " (exhaustive)" : " (sampled)";
      emit("axioms", j, text);
      return r.passed ? 0 : kExitContradiction;
    }
    if (*automaton_cmd) {
      const Instance inst = load_instance(instance);
      const auto dot = normal_word_automaton(inst.nz).to_dot(out.ascii);
      emit("automaton", {{"instance", inst.name}, {"dot", dot}}, dot);
      return 0;
    }
    if (*pres_cmd) {
      const Instance inst = load_instance(instance);
      const Alphabet& a = inst.nz.alphabet();
      json rels = json::array();
      std::string text;
      for (const auto& rel : presentation(inst.nz, mod_e)) {
        rels.push_back(json::array({fmt(a, rel.lhs), fmt(a, rel.rhs)}));
        text += fmt(a, rel.lhs) + " = " + fmt(a, rel.rhs) + "\n";
      }
      emit("presentation", {{"instance", inst.name}, {"relations", rels}}, text);
      return 0;
    }
    if (*class_cmd) {
      const Instance inst = load_instance(instance);
      const ClassReport r = compute_class(inst.nz, cap);
      json j = class_json(r, inst.nz.alphabet());
      j["instance"] = inst.name;
      int code = 0;
      if (!expect_class.empty()) {
        const auto [l, rr] = parse_class_pair(expect_class);
        const bool ok = r.finite() && r.left.value == l && r.right.value == rr;
        j["expected"] = expect_class;
        j["matches_expected"] = ok;
        if (!ok) {
          std::cerr << "class " << format_class(r) << " differs from expected (" << l << "," << rr
                    << ")\n";
          code = kExitContradiction;
        }
      }
      emit("class", j, format_class(r));
      return code;
    }
    if (*domino_cmd) {
      const Instance inst = load_instance(instance);
      const Alphabet& a = inst.nz.alphabet();
      const DominoReport r = check_domino(inst.nz, parse_side(side));
      json j{{"instance", inst.name}, {"side", to_string(r.side)}, {"valid", r.valid},
             {"tuples_checked", r.tuples_checked}};
      std::string text = r.valid ? "valid" : "invalid";
      if (r.counterexample) {
        const auto& c = *r.counterexample;
        j["counterexample"] = {{"s1", letter(a, c.s1)}, {"s2", letter(a, c.s2)},
                               {"s1p", letter(a, c.s1p)}, {"s2p", letter(a, c.s2p)},
                               {"t0", letter(a, c.t0)}, {"t1", letter(a, c.t1)},
                               {"t2", letter(a, c.t2)}};
        text += "\ns1|s2 = " + letter(a, c.s1) + "|" + letter(a, c.s2) + "\ns1'|s2' = " +
                letter(a, c.s1p) + "|" + letter(a, c.s2p) + "\nt0, t1, t2 = " + letter(a, c.t0) +
                ", " + letter(a, c.t1) + ", " + letter(a, c.t2);
      }
      emit("domino", j, text);
      return 0;
    }
    if (*garside_cmd) {
      const Instance inst = load_instance(instance);
      const GarsideVerdict v = garside_characterise(inst.nz, inst.divides, cap);
      const Alphabet& a = inst.nz.alphabet();
      json viol = json::array();
      for (const auto& x : v.weighted.violations) {
        viol.push_back(json::array({fmt(a, Word{x.s, x.t}), fmt(a, Word{x.sp, x.tp})}));
      }
      json inconc = json::array();
      for (const auto& p : v.weighted.inconclusive) inconc.push_back(json::array({letter(a, p.first), letter(a, p.second)}));
      json j{{"instance", inst.name},
             {"verdict", v.text()},
             {"failed", v.failed},
             {"class", format_class(v.klass)},
             {"left_weighted", to_string(v.weighted.status)},
             {"left_weighted_violations", viol},
             {"inconclusive_pairs", inconc}};
      emit("garside-check", j, v.text());
      return 0;
    }
    if (*fellow_cmd) {
      const Instance inst = load_instance(instance);
      const FellowReport r = check_fellow_traveller(inst.nz, parse_side(side), max_len);
      json j{{"instance", inst.name}, {"side", to_string(r.side)}, {"passed", r.passed},
             {"exhaustive", r.exhaustive}, {"cases", r.cases}};
      std::string text = r.passed ? "pass" : "fail";
      if (r.violation) {
        const Alphabet& a = inst.nz.alphabet();
        j["violation"] = {{"word", fmt(a, r.violation->w)},
                          {"t", letter(a, r.violation->t)},
                          {"index", r.violation->index}};
        text += " at w = '" + fmt(a, r.violation->w) + "', t = " + letter(a, r.violation->t) +
                ", i = " + std::to_string(r.violation->index);
      }
      emit("fellow", j, text);
      return 0;
    }
    if (*inst_cmd) {
      std::string name;
      if (*gen_abelian) name = "abelian:" + std::to_string(n);
      if (*gen_braid) name = "braid:" + std::to_string(n);
      if (*gen_torus) name = "torus:" + exponents;
      if (*gen_plactic) name = "plactic:" + std::to_string(n);
      if (*gen_lex) name = "lex:" + std::to_string(n);
      if (*gen_named) name = named;
      const Instance inst = load_instance(name);
      std::cout << normaliser_to_json(inst.nz) << "\n";
      return 0;
    }
    if (*closure_cmd) {
      const PresentedMonoid mp = presentation_file == "atilde2"
                                     ? presented_atilde2()
                                     : presentation_from_json(read_file(presentation_file));
      const FamilyCandidate f = closure_smallest_garside(mp, bound);
      json members = json::array();
      std::string text;
      for (const auto& m : f.members) {
        members.push_back(mp.format(m, out.ascii));
        text += (text.empty() ? "" : " ") + mp.format(m, out.ascii);
      }
      json j{{"size_with_unit", f.size_with_unit()},
             {"size_without_unit", f.size_without_unit()},
             {"members", members},
             {"divisor_closed", f.divisor_closed},
             {"fixpoint_reached", f.fixpoint_reached},
             {"bound", f.bound},
             {"lcm_searches_without_result", f.lcm_searches_without_result},
             {"ambiguous_lcms", f.ambiguous_lcms}};
      std::ostringstream s;
      s << "size: " << f.size_with_unit() << " with unit, " << f.size_without_unit()
        << " without unit\n"
        << "fixpoint reached below bound " << f.bound << ": " << (f.fixpoint_reached ? "yes" : "no")
        << "\nmembers: " << text;
      emit("closure", j, s.str());
      return 0;
    }
    if (*family_cmd) {
      const std::string text = read_file(family);
      const PresentedMonoid mp = presentation_from_json(text);
      const FamilyCandidate f = family_from_json(mp, text);
      const FamilyReport r = verify_garside_family(mp, f, bound);
      json j{{"passed", r.passed}, {"failed", r.failed}, {"bound", r.bound},
             {"elements_checked", r.elements_checked}};
      j["witness"] = r.witness ? json(mp.format(*r.witness, out.ascii)) : json(nullptr);
      j["witness2"] = r.witness2 ? json(mp.format(*r.witness2, out.ascii)) : json(nullptr);
      std::string t = r.passed ? "GARSIDE FAMILY (up to grade " + std::to_string(r.bound) + ")"
                               : "NOT A GARSIDE FAMILY: " + r.failed;
      if (r.witness) t += " at " + mp.format(*r.witness, out.ascii);
      if (r.witness2) t += ", " + mp.format(*r.witness2, out.ascii);
      emit("family-check", j, t);
      return r.passed ? 0 : kExitContradiction;
    }
    if (*rewrite_cmd) {
      const RewriteSystem r = system_from(system, instance);
      RewriteOptions opts;
      opts.strategy = parse_strategy(strategy);
      opts.max_steps = max_steps;
      opts.seed = seed;
      opts.script = script;
      const Word w = parse_word(r.alphabet(), word);
      const Derivation d = rewrite(r, w, opts);
      emit("rewrite", derivation_json(r.alphabet(), r, d), derivation_text(r.alphabet(), r, d));
      return 0;
    }
    if (*longest_cmd) {
      const RewriteSystem r = system_from(system, instance);
      const LongestDerivation ld = longest_derivation(r, length);
      json j{{"length", length},
             {"longest", ld.length ? json(*ld.length) : json(nullptr)},
             {"cyclic", !ld.length.has_value()},
             {"witness", ld.witness ? json(fmt(r.alphabet(), *ld.witness)) : json(nullptr)},
             {"complete", ld.complete},
             {"words", ld.words}};
      std::string text = ld.length ? std::to_string(*ld.length) : "infinite (cycle)";
      if (ld.witness) text += " at " + fmt(r.alphabet(), *ld.witness);
      if (!ld.complete) text += " (incomplete: word budget exceeded)";
      emit("longest-derivation", j, text);
      return 0;
    }
  } catch (const ClassViolation& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitContradiction;
  } catch (const NotANormalisation& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitContradiction;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: malformed JSON: " << e.what() << "\n";
    return kExitInput;
  }
  return 0;
}
