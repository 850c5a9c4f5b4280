#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "garnorm/normaliser.hpp"
#include "garnorm/word.hpp"

namespace garnorm {

/// s|t → rhs, where rhs has length 2 (or at most 2 in an erasure system).
struct Rule {
  Letter s = 0;
  Letter t = 0;
  Word rhs;
  friend bool operator==(const Rule&, const Rule&) = default;
};

/// A quadratic rewriting system: at most one rule per left side.
class RewriteSystem {
 public:
  RewriteSystem() = default;
  RewriteSystem(Alphabet alphabet, std::vector<Rule> rules);

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  const std::vector<Rule>& rules() const noexcept { return rules_; }
  std::size_t size() const noexcept { return rules_.size(); }
  /// Index of the rule with left side s|t, or -1.
  int rule_index(Letter s, Letter t) const {
    return index_[static_cast<std::size_t>(s) * alphabet_.size() + t];
  }
  /// True iff every right side has length 2.
  bool length_preserving() const;

 private:
  Alphabet alphabet_;
  std::vector<Rule> rules_;
  std::vector<int> index_;
};

/// s|t → N̄(s|t) for every pair that N̄ moves.
RewriteSystem system_of(const Normaliser& nz);

/// Inverse of system_of(): N̄ is the rule map completed by the identity. The
/// system must be quadratic, length-preserving and reduced (no identity rule,
/// no right side that is itself a left side); normalisation and confluence
/// are checked on every word of length ≤ verify_len. The returned normaliser
/// declares the class computed for the table, so its route matches it.
/// Throws ConfigurationError, NotANormalisation or Divergence.
Normaliser normaliser_of(const RewriteSystem& r, std::size_t verify_len = 4,
                         std::optional<std::string> neutral = std::nullopt);

/// The erasure system R_e: left sides containing e are dropped and right
/// sides lose their e letters. Throws ConfigurationError unless e is
/// neutral for R (s|e is fixed and e|s → s|e for every s ≠ e).
RewriteSystem erase_variant(const RewriteSystem& r, Letter e);

enum class Strategy { Leftmost, Rightmost, Random, Exhaustive, Scripted };

std::string to_string(Strategy s);
Strategy parse_strategy(std::string_view s);

struct Step {
  std::size_t position = 0;  ///< 1-based
  int rule = 0;
  Word after;
};

struct Derivation {
  enum class Status { Normal, Cycle, StepLimit, Stopped };
  Word start;
  Word end;
  std::vector<Step> steps;
  Status status = Status::Normal;
  std::optional<std::size_t> cycle_start;  ///< step count before the repeated word first appeared
  std::optional<std::uint64_t> seed;

  std::size_t cycle_length() const {
    return cycle_start ? steps.size() - *cycle_start : 0;
  }
};

std::string to_string(Derivation::Status s);

struct RewriteOptions {
  Strategy strategy = Strategy::Leftmost;
  std::size_t max_steps = 1000;
  std::uint64_t seed = 0;
  PositionSequence script;        ///< positions for Strategy::Scripted
  std::size_t max_states = 1'000'000;  ///< exhaustive exploration budget
};

/// Rewrites until the word is normal, a word repeats, or max_steps is hit.
/// The exhaustive strategy returns the shortest cycle through the start
/// word when one exists and a longest terminating derivation otherwise.
Derivation rewrite(const RewriteSystem& r, const Word& w, const RewriteOptions& opts = {});

struct Exploration {
  std::size_t reachable = 0;
  std::vector<Word> normal_forms;
  bool has_cycle = false;
  bool complete = true;  ///< false when the state budget was exhausted
  std::optional<Derivation> shortest_cycle_through_start;
};

/// The full derivation graph from w.
Exploration explore(const RewriteSystem& r, const Word& w, std::size_t max_states = 1'000'000);

struct LongestDerivation {
  std::optional<std::size_t> length;  ///< nullopt if some word of length p starts a cycle
  std::optional<Word> witness;        ///< first word (lexicographic) reaching the maximum
  bool complete = true;               ///< false when |S|^p exceeded the budget
  std::uint64_t words = 0;
};

/// Maximum number of steps over all words of length p and all derivations.
LongestDerivation longest_derivation(const RewriteSystem& r, std::size_t p,
                                     std::uint64_t max_words = 20'000'000);

}  // namespace garnorm
