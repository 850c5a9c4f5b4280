#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "garnorm/quadratic_map.hpp"
#include "garnorm/word.hpp"

namespace garnorm {

/// A (left class, right class) pair as in "class (4,3)".
struct ClassPair {
  int left = 0;
  int right = 0;
  friend constexpr bool operator==(const ClassPair&, const ClassPair&) = default;
};

/// How the full normalisation N is evaluated from the pair map.
enum class Route {
  Left,        ///< δ_p schedule; correct for right class ≤ 3
  Right,       ///< δ̃_p schedule; correct for left class ≤ 3
  Exhaustive,  ///< confluent exhaustive rewriting
};

/// A quadratic normalisation (S, N) rebuilt from its restriction N̄ to S².
///
/// The neutral letter, if any, is the alphabet's. The declared class picks
/// the evaluation route: right class ≤ 3 uses δ_p, else left class ≤ 3 uses
/// δ̃_p, else exhaustive rewriting. An undeclared class is treated as δ_p.
class Normaliser {
 public:
  explicit Normaliser(QuadraticMap map,
                      std::optional<ClassPair> declared = std::nullopt);

  const QuadraticMap& map() const noexcept { return map_; }
  const Alphabet& alphabet() const noexcept { return map_.alphabet(); }
  std::optional<Letter> neutral() const noexcept { return alphabet().neutral(); }
  std::optional<ClassPair> declared_class() const noexcept { return declared_; }
  Route route() const noexcept;

  LetterPair bar(Letter s, Letter t) const { return map_(s, t); }
  std::size_t letter_count() const noexcept { return map_.letter_count(); }

 private:
  QuadraticMap map_;
  std::optional<ClassPair> declared_;
};

/// True iff every length-two factor of `w` is fixed by N̄.
bool is_normal(const Normaliser& nz, const Word& w);

/// N(w) = N̄_{δ_p}(w). Throws ClassViolation if the result is not normal.
Word normalize(const Normaliser& nz, const Word& w);

/// N(w) = N̄_{δ̃_p}(w). Throws ClassViolation if the result is not normal.
Word normalize_right(const Normaliser& nz, const Word& w);

/// Reference normalisation: explores every order of applying N̄ at non-fixed
/// positions. Throws NotANormalisation when two normal words are reachable
/// and Divergence when none is (or when `max_states` is exceeded).
Word normalize_oracle(const Normaliser& nz, const Word& w,
                      std::size_t max_states = std::size_t{1} << 21);

/// N(w) along the normaliser's route (see Normaliser).
Word normal_form(const Normaliser& nz, const Word& w);

/// π_e(N(w)). Throws ConfigurationError without a neutral letter.
Word geodesic_normal_form(const Normaliser& nz, const Word& w);

/// Equality in the presented monoid (mod the neutral letter, if any).
bool word_problem(const Normaliser& nz, const Word& w1, const Word& w2);

struct AxiomViolation {
  std::string axiom;  ///< "length", "singleton", "factor", "neutral"
  Word word;
  std::string detail;
};

struct AxiomReport {
  bool passed = true;
  bool exhaustive = true;
  std::uint64_t words_checked = 0;
  std::optional<AxiomViolation> violation;
};

struct AxiomOptions {
  std::size_t max_len = 4;
  std::uint64_t exhaustive_limit = 1'000'000;
  std::uint64_t samples = 100'000;
  std::uint64_t seed = 0x5eed;
};

/// Checks length preservation, fixed singletons, N(u|N(w)|v) = N(u|w|v)
/// and, with a neutral letter e, N(w|e) = N(e|w) = N(w)|e, for every word
/// up to `max_len` (sampling lengths whose word count exceeds the limit).
/// Schedule routes are evaluated without the normality postcondition so
/// that a bad table shows up as an axiom violation.
AxiomReport verify_axioms(const Normaliser& nz, const AxiomOptions& opts = {});

struct Relation {
  Word lhs;
  Word rhs;
  friend bool operator==(const Relation&, const Relation&) = default;
};

/// Non-trivial relations s|t = N̄(s|t); with `mod_e` the neutral letter is
/// erased from right sides and dropped from the alphabet.
std::vector<Relation> presentation(const Normaliser& nz, bool mod_e);

/// Automaton with a START state and one state per letter; s → t (reading t)
/// exactly when s|t is N̄-fixed. All states accept.
class NormalAutomaton {
 public:
  explicit NormalAutomaton(const Normaliser& nz);

  std::size_t state_count() const noexcept { return letters_ + 1; }
  bool has_transition(Letter from, Letter to) const {
    return allowed_[from * letters_ + to];
  }
  std::size_t transition_count() const;
  bool accepts(const Word& w) const;
  std::string to_dot(bool ascii = false) const;

 private:
  Alphabet alphabet_;
  std::size_t letters_ = 0;
  std::vector<bool> allowed_;
};

NormalAutomaton normal_word_automaton(const Normaliser& nz);

struct FromMapResult {
  std::optional<Normaliser> normaliser;
  std::string diagnostic;        ///< empty on success
  std::optional<Word> witness;   ///< violating pair or triple
  AxiomReport axioms;
};

/// Accepts an idempotent F satisfying F₂₁₂ = F₂₁₂₁ = F₁₂₁₂ on S³ and returns
/// the class-(4,3) normaliser defined by the δ_p schedule, after checking
/// the axioms up to `verify_len`.
FromMapResult from_quadratic_map(const QuadraticMap& f, std::size_t verify_len = 3);

std::string to_string(Route r);

}  // namespace garnorm
