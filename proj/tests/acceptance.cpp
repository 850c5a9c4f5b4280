// Acceptance checks. Usage: garnorm_acceptance [criterion]
// Prints one "[PASS]" or "[FAIL]" line per criterion; exits 1 if any fails.

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "garnorm/class_analysis.hpp"
#include "garnorm/error.hpp"
#include "garnorm/garside_family.hpp"
#include "garnorm/garside_lattice.hpp"
#include "garnorm/instances.hpp"
#include "garnorm/normaliser.hpp"
#include "garnorm/parallel.hpp"
#include "garnorm/rewriting.hpp"
#include "oracles.hpp"

using namespace garnorm;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  std::vector<std::string> notes;  ///< printed indented under the line
};

struct Criterion {
  int id;
  std::string title;
  double limit_s;
  std::function<Outcome()> run;
};

std::string strict(const Normaliser& nz, const Word& w) {
  const Word nf = normal_form(nz, w);
  return format_word(nz.alphabet(), nz.neutral() ? erase_letter(nf, *nz.neutral()) : nf);
}

// Runs pred on every word of length len over k letters, in parallel; returns
// the first failing word in enumeration order.
std::optional<Word> first_failure(std::size_t k, std::size_t len,
                                  const std::function<bool(const Word&)>& pred) {
  const auto total = word_count(k, len, UINT64_MAX);
  if (!total) throw RangeError("too many words");
  const std::size_t n = static_cast<std::size_t>(*total);
  std::vector<std::optional<Word>> found(std::max<std::size_t>(default_workers(), 1));
  const std::size_t used = parallel_chunks(n, [&](std::size_t c, std::size_t b, std::size_t e) {
    for (std::size_t i = b; i < e; ++i) {
      const Word w = word_from_index(i, k, len);
      if (!pred(w)) {
        found[c] = w;
        return;
      }
    }
  });
  for (std::size_t c = 0; c < used; ++c) {
    if (found[c]) return found[c];
  }
  return std::nullopt;
}

Outcome criterion_abelian_example() {
  const Instance I = load_instance("abelian:3");
  const std::string got = strict(I.nz, parse_word(I.nz.alphabet(), "a|a|a|b|c|c"));
  return {got == "Δ|ac|a", "a|a|a|b|c|c on abelian:3 -> " + got + " (expected Δ|ac|a)", {}};
}

Outcome criterion_braid_example() {
  const Instance I = load_instance("braid:4");
  const Alphabet& a = I.nz.alphabet();
  const Word w = parse_word(a, "σ2|σ3|σ2|σ2|σ1|σ2|σ3|σ3");
  const std::string expected = "σ1σ2σ3σ2σ1|σ2σ1σ3";
  const std::string got = strict(I.nz, w);
  Outcome o{got == expected, "σ2|σ3|σ2|σ2|σ1|σ2|σ3|σ3 on braid:4 -> " + got + " (expected " +
                                 expected + ")",
            {}};
  if (!o.pass) {
    // Independent evidence: same element, and Δ left-divides it.
    const auto rels = oracle::braid_relations(4);
    oracle::Atoms word_atoms, expected_atoms;
    for (Letter l : w) {
      for (int x : oracle::braid_name_atoms(a.name(l), 4)) word_atoms.push_back(x);
    }
    for (const char* part : {"σ1σ2σ3σ2σ1", "σ2σ1σ3"}) {
      for (int x : oracle::braid_name_atoms(part, 4)) expected_atoms.push_back(x);
    }
    const auto cls = oracle::congruence(word_atoms, rels);
    const oracle::Atoms delta = oracle::braid_delta(4);
    bool delta_divides = false;
    for (const auto& v : cls) {
      delta_divides = delta_divides || std::equal(delta.begin(), delta.end(), v.begin());
    }
    o.notes.push_back("congruence class size " + std::to_string(cls.size()) +
                      "; expected word is the same element: " +
                      (cls.count(expected_atoms) ? "yes" : "no") +
                      "; Δ left-divides the element: " + (delta_divides ? "yes" : "no"));
    const Word expected_word = parse_word(a, expected);
    o.notes.push_back(std::string("expected word is N-normal: ") +
                      (is_normal(I.nz, expected_word) ? "yes" : "no") + "; its head is " +
                      a.name(head(*I.lattice, expected_word)));
  }
  return o;
}

Outcome criterion_cardinalities() {
  Outcome o;
  std::ostringstream d;
  for (int n = 1; n <= 10; ++n) {
    const std::size_t got = build_abelian(n).size();
    if (got != (std::size_t{1} << n)) {
      o.pass = false;
      d << "abelian:" << n << "=" << got << " ";
    }
  }
  std::size_t fact = 1;
  for (int n = 2; n <= 6; ++n) {
    fact *= static_cast<std::size_t>(n);
    const std::size_t got = build_braid(n).size();
    if (got != fact || oracle::braid_simples(n).size() != fact) {
      o.pass = false;
      d << "braid:" << n << "=" << got << " ";
    }
  }
  const std::vector<std::vector<int>> tori{{2, 3}, {2, 5}, {3, 4}, {2, 3, 4}, {3, 3, 3, 2}};
  for (const auto& e : tori) {
    int expect = 2;
    for (int x : e) expect += x - 1;
    const std::size_t got = build_torus(e).size();
    if (got != static_cast<std::size_t>(expect)) {
      o.pass = false;
      d << "torus=" << got << " ";
    }
  }
  o.detail = o.pass ? "2^n for abelian:1..10, n! for braid:2..6, e1+…+ek−k+2 for 5 tori"
                    : "mismatch: " + d.str();
  return o;
}

Outcome criterion_class_table() {
  struct Row {
    const char* name;
    ClassPair expect;
  };
  const Row rows[] = {{"abelian:3", {3, 3}}, {"braid:3", {3, 3}}, {"braid:4", {3, 3}},
                      {"lex:3", {3, 3}},     {"plactic:3", {3, 3}}, {"atilde2", {4, 3}},
                      {"prop436", {4, 4}}};
  Outcome o;
  std::string d;
  for (const Row& row : rows) {
    const Instance I = load_instance(row.name);
    const ClassReport c = compute_class(I.nz, 8);
    const bool ok = c.finite() && c.pair() == row.expect && c.map_identities_agree;
    o.pass = o.pass && ok;
    d += std::string(row.name) + " " + format_class(c) + (ok ? "" : " (WRONG)") + "; ";
  }
  const Instance t = load_instance("atilde2");
  if (t.nz.alphabet().size() != 16) {
    o.pass = false;
    d += "atilde2 family has " + std::to_string(t.nz.alphabet().size()) + " letters; ";
  }
  o.detail = d + "class shown as (left,right)";
  return o;
}

Outcome criterion_domino() {
  Outcome o;
  std::string d;
  for (const char* name : {"braid:3", "braid:4"}) {
    const DominoReport r = check_domino(load_instance(name).nz, Side::Right);
    o.pass = o.pass && r.valid;
    d += std::string(name) + " right " + (r.valid ? "valid" : "INVALID") + "; ";
  }
  const Instance t = load_instance("atilde2");
  const DominoReport r = check_domino(t.nz, Side::Right);
  o.pass = o.pass && !r.valid && r.counterexample.has_value();
  d += std::string("atilde2 right ") + (r.valid ? "VALID" : "invalid");
  if (r.counterexample) {
    const auto& x = *r.counterexample;
    const Alphabet& a = t.nz.alphabet();
    d += " (s1|s2 = " + a.name(x.s1) + "|" + a.name(x.s2) + ", s1'|s2' = " + a.name(x.s1p) +
         "|" + a.name(x.s2p) + ", t = " + a.name(x.t0) + "," + a.name(x.t1) + "," + a.name(x.t2) +
         ")";
  }
  o.detail = d;
  return o;
}

Outcome criterion_closure() {
  const PresentedMonoid m = presented_atilde2();
  const FamilyCandidate f = closure_smallest_garside(m, 8);
  const bool ok = f.fixpoint_reached && f.size_with_unit() == 16;
  return {ok,
          "atilde2 closure: " + std::to_string(f.size_with_unit()) + " with the unit, " +
              std::to_string(f.size_without_unit()) + " without; 16 counts the unit",
          {}};
}

Outcome criterion_garside() {
  struct Row {
    const char* name;
    const char* expect;
  };
  const Row rows[] = {{"abelian:3", "GARSIDE"},
                      {"braid:4", "GARSIDE"},
                      {"torus:2,3", "GARSIDE"},
                      {"atilde2", "GARSIDE"},
                      {"ex317:2", "GARSIDE"},
                      {"lex:3", "NOT-GARSIDE (left-weighted)"},
                      {"prop436", "NOT-GARSIDE (class, left-weighted)"}};
  Outcome o;
  std::string d;
  for (const Row& row : rows) {
    const Instance I = load_instance(row.name);
    const std::string got = garside_characterise(I.nz, I.divides, 8).text();
    const bool ok = got == row.expect;
    o.pass = o.pass && ok;
    d += std::string(row.name) + " " + got + (ok ? "" : " (WRONG)") + "; ";
  }
  o.detail = d;
  return o;
}

Outcome criterion_derivation_bounds() {
  Outcome o;
  std::string d, checked;
  for (const std::string& name : sample_instance_names()) {
    const Instance I = load_instance(name);
    const ClassPair c = compute_class(I.nz, 8).pair();
    const bool c43 = c == ClassPair{4, 3};
    const bool c33 = c == ClassPair{3, 3};
    if (!c43 && !c33) continue;
    checked += name + (c43 ? " (4,3), " : " (3,3), ");
    const RewriteSystem r = system_of(I.nz);
    for (std::size_t p : {3, 4}) {
      const std::size_t bound = c43 ? (std::size_t{1} << p) - p - 1 : p * (p - 1) / 2;
      const LongestDerivation l = longest_derivation(r, p);
      const bool ok = l.complete && l.length && *l.length <= bound;
      o.pass = o.pass && ok;
      if (!ok) {
        d += name + " p=" + std::to_string(p) + " exceeds " + std::to_string(bound) + "; ";
      }
    }
  }
  for (int n : {3, 4}) {
    const Normaliser lex = lex_normaliser(n);
    const std::size_t p = static_cast<std::size_t>(n);
    const LongestDerivation l = longest_derivation(system_of(lex), p);
    Word reversed;
    for (int i = n - 1; i >= 0; --i) reversed = reversed.concat(Word{static_cast<Letter>(i)});
    RewriteOptions opts;
    opts.strategy = Strategy::Exhaustive;
    const Derivation longest = rewrite(system_of(lex), reversed, opts);
    const bool ok = l.length == p * (p - 1) / 2 && longest.steps.size() == p * (p - 1) / 2;
    o.pass = o.pass && ok;
    d += "lex:" + std::to_string(n) + " p=" + std::to_string(p) + " longest " +
         (l.length ? std::to_string(*l.length) : "cycle") + " at " +
         format_word(lex.alphabet(), reversed) + "; ";
  }
  o.detail = d + "p = 3, 4 within 2^p−p−1 on class (4,3) and p(p−1)/2 on class (3,3) for " +
             checked.substr(0, checked.size() - 2);
  return o;
}

Outcome criterion_non_termination() {
  const Normaliser p = prop436_normaliser();
  const RewriteSystem r = system_of(p);
  const Word w = parse_word(p.alphabet(), "a|b|c|d");
  const Derivation left = rewrite(r, w);
  RewriteOptions scripted;
  scripted.strategy = Strategy::Scripted;
  scripted.script = {1, 3, 2};
  const Derivation cyc = rewrite(r, w, scripted);
  const Exploration x = explore(r, w);
  const std::size_t shortest =
      x.shortest_cycle_through_start ? x.shortest_cycle_through_start->cycle_length() : 0;
  const std::string nf = format_word(p.alphabet(), left.end);
  const bool ok = left.status == Derivation::Status::Normal && nf == "a|b″|c″|d" &&
                  cyc.status == Derivation::Status::Cycle && cyc.cycle_length() == 3 &&
                  shortest == 3;
  return {ok,
          "leftmost from a|b|c|d -> " + nf + "; positions 1,3,2 return to a|b|c|d after " +
              std::to_string(cyc.cycle_length()) + " steps; shortest cycle " +
              std::to_string(shortest),
          {}};
}

Outcome criterion_property_suites() {
  Outcome o;
  const auto note = [&o](const std::string& suite, bool ok, const std::string& detail) {
    o.pass = o.pass && ok;
    o.notes.push_back((ok ? "ok   " : "FAIL ") + suite + ": " + detail);
  };
  const std::vector<std::string> names = sample_instance_names();

  {  // axioms, exhaustive to length 4
    std::string bad;
    for (const auto& name : names) {
      const AxiomReport r = verify_axioms(load_instance(name).nz, AxiomOptions{4, UINT64_MAX, 0, 1});
      if (!r.passed || !r.exhaustive) bad += name + " ";
    }
    note("axioms to length 4", bad.empty(), bad.empty() ? "all instances, exhaustive" : bad);
  }
  {  // route vs oracle and automaton vs is_normal, to length 5
    std::string bad_oracle, bad_automaton;
    for (const auto& name : names) {
      const Instance I = load_instance(name);
      const NormalAutomaton aut = normal_word_automaton(I.nz);
      const std::size_t k = I.nz.alphabet().size();
      for (std::size_t len = 0; len <= 5; ++len) {
        if (first_failure(k, len, [&](const Word& w) {
              return normal_form(I.nz, w) == normalize_oracle(I.nz, w);
            })) {
          bad_oracle += name + " ";
          break;
        }
        if (first_failure(k, len, [&](const Word& w) { return aut.accepts(w) == is_normal(I.nz, w); })) {
          bad_automaton += name + " ";
          break;
        }
      }
    }
    note("normal_form = normalize_oracle to length 5", bad_oracle.empty(),
         bad_oracle.empty() ? "all instances, exhaustive" : bad_oracle);
    note("automaton ⇔ is_normal to length 5", bad_automaton.empty(),
         bad_automaton.empty() ? "all instances, exhaustive" : bad_automaton);
  }
  {  // fellow traveller
    std::string bad_left, bad_right;
    for (const auto& name : names) {
      const Instance I = load_instance(name);
      const FellowReport l = check_fellow_traveller(I.nz, Side::Left, 3, AxiomOptions{3, UINT64_MAX, 0, 1});
      if (!l.passed) {
        bad_left += name;
        if (l.violation) {
          bad_left += " (w = " + format_word(I.nz.alphabet(), l.violation->w) +
                      ", t = " + I.nz.alphabet().name(l.violation->t) +
                      ", i = " + std::to_string(l.violation->index) + ")";
        }
        bad_left += " ";
      }
      if (compute_class(I.nz, 8).pair() == ClassPair{3, 3}) {
        const FellowReport r = check_fellow_traveller(I.nz, Side::Right, 3, AxiomOptions{3, UINT64_MAX, 0, 1});
        if (!r.passed) bad_right += name + " ";
      }
    }
    note("left fellow traveller to length 3", bad_left.empty(),
         bad_left.empty() ? "all instances" : "fails on " + bad_left);
    note("right fellow traveller to length 3", bad_right.empty(),
         bad_right.empty() ? "all class-(3,3) instances" : "fails on " + bad_right);
  }
  {  // head of a pair: H(s1 s2) = s1 ⇔ ∂s1 ∧ s2 = 1
    std::string bad;
    for (const auto& L : {build_abelian(3), build_braid(3), build_braid(4), build_torus({2, 3})}) {
      for (Simple s1 = 0; s1 < L.size(); ++s1) {
        for (Simple s2 = 0; s2 < L.size(); ++s2) {
          const bool is_head = head(L, Word{s1, s2}) == s1;
          const bool coprime = L.meet(L.complement(s1), s2) == L.unit();
          if (is_head != coprime) bad = L.name(s1) + "|" + L.name(s2);
        }
      }
    }
    note("head condition ⇔ ∂s1 ∧ s2 = 1", bad.empty(),
         bad.empty() ? "abelian:3, braid:3, braid:4, torus:2,3" : "pair " + bad);
  }
  {  // pull-left S-normality vs head condition on closed families
    std::string bad;
    try {
      const PresentedMonoid t = presented_atilde2();
      const FamilyCandidate ft = closure_smallest_garside(t, 8);
      for (const Element& s1 : ft.members) {
        for (const Element& s2 : ft.members) check_s_normal_pair(t, ft, s1, s2, 3, true);
      }
      const PresentedMonoid e = presented_ex317(2);
      const FamilyCandidate fe = ex317_family(e, 2);
      for (const Element& s1 : fe.members) {
        for (const Element& s2 : fe.members) check_s_normal_pair(e, fe, s1, s2, 4, true);
      }
    } catch (const Error& err) {
      bad = err.what();
    }
    note("S-normal pull-left ⇔ head condition", bad.empty(),
         bad.empty() ? "atilde2 (f ≤ 3), ex317:2 (f ≤ 4)" : bad);
  }
  {  // (gh)\f = h\(g\f)
    std::string bad;
    for (const auto& L : {build_braid(3), build_abelian(3)}) {
      for (Simple f = 0; f < L.size(); ++f) {
        for (Simple g = 0; g < L.size(); ++g) {
          for (Simple h = 0; h < L.size(); ++h) {
            const Simple gh = L.product(g, h);
            if (gh == GarsideLattice::kNone) continue;
            if (right_complement(L, gh, f) != right_complement(L, h, right_complement(L, g, f))) {
              bad = L.name(f) + "," + L.name(g) + "," + L.name(h);
            }
          }
        }
      }
    }
    note("(gh)\\f = h\\(g\\f) on simple triples", bad.empty(),
         bad.empty() ? "braid:3, abelian:3" : "triple " + bad);
  }
  {  // family normaliser reproduces the lattice table
    std::string bad;
    const auto check = [&bad](const std::string& label, const PresentedMonoid& mp,
                              const GarsideLattice& L, std::size_t bound) {
      const Normaliser nz = family_to_normaliser(mp, closure_smallest_garside(mp, bound));
      const Normaliser ref = to_normaliser(L);
      const Alphabet& a = nz.alphabet();
      const Alphabet& b = ref.alphabet();
      if (a.size() != b.size()) {
        bad += label + " ";
        return;
      }
      for (Letter s = 0; s < a.size(); ++s) {
        for (Letter t = 0; t < a.size(); ++t) {
          const LetterPair x = nz.bar(s, t);
          const LetterPair y = ref.bar(b.at(a.name(s)), b.at(a.name(t)));
          if (b.at(a.name(x.first)) != y.first || b.at(a.name(x.second)) != y.second) {
            bad += label + " ";
            return;
          }
        }
      }
    };
    check("abelian:3", presented_abelian(3), build_abelian(3), 4);
    check("braid:3", presented_braid(3), build_braid(3), 4);
    check("braid:4", presented_braid(4), build_braid(4), 8);
    std::string rt;
    for (const auto& name : names) {
      const Normaliser nz = load_instance(name).nz;
      const auto e = nz.alphabet().neutral();
      const Normaliser back = normaliser_of(
          system_of(nz), 3, e ? std::optional<std::string>(nz.alphabet().name(*e)) : std::nullopt);
      if (system_of(back).rules() != system_of(nz).rules()) rt += name + " ";
    }
    note("family table = lattice table", bad.empty(),
         bad.empty() ? "abelian:3, braid:3, braid:4" : bad);
    note("rules -> normaliser -> rules", rt.empty(), rt.empty() ? "all instances" : rt);
  }
  o.detail = o.pass ? "all suites pass" : "see failing suites below";
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> all = {
      {1, "abelian worked example", 1, criterion_abelian_example},
      {2, "braid worked example", 1, criterion_braid_example},
      {3, "simple-element cardinalities", 10, criterion_cardinalities},
      {4, "class table", 60, criterion_class_table},
      {5, "domino rules", 60, criterion_domino},
      {6, "smallest Garside family closure", 30, criterion_closure},
      {7, "Garside characterisation", 60, criterion_garside},
      {8, "derivation length bounds", 300, criterion_derivation_bounds},
      {9, "non-terminating rewriting", 10, criterion_non_termination},
      {10, "property suites", 120, criterion_property_suites},
  };
  int only = 0;
  if (argc > 1) only = std::atoi(argv[1]);
  if (only < 0 || only > static_cast<int>(all.size())) {
    std::cerr << "usage: garnorm_acceptance [1-" << all.size() << "]\n";
    return 2;
  }
  bool all_pass = true;
  for (const Criterion& c : all) {
    if (only != 0 && c.id != only) continue;
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("threw: ") + e.what(), {}};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs >= c.limit_s) {
      o.pass = false;
      o.detail += "; over time limit";
    }
    all_pass = all_pass && o.pass;
    std::ostringstream time;
    time.precision(3);
    time << std::fixed << secs;
    std::cout << (o.pass ? "[PASS] " : "[FAIL] ") << c.id << " " << c.title << ": " << o.detail
              << " (" << time.str() << " s, limit " << c.limit_s << " s)\n";
    for (const auto& n : o.notes) std::cout << "         " << n << "\n";
  }
  return all_pass ? 0 : 1;
}
