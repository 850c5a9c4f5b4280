#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "garnorm/normaliser.hpp"
#include "garnorm/word.hpp"

namespace garnorm {

enum class Tri { No, Yes, Inconclusive };

std::string to_string(Tri t);

/// Decides s ⪯ s′ for letters s, s′ in the monoid presented by a normaliser.
using DivisibilityOracle = std::function<Tri(Letter, Letter)>;

/// N̄ applied at the alternating positions 121…[m] (start 1) or 212…[m]
/// (start 2) of a length-three word.
Word alternating_normalize(const Normaliser& nz, const Word& w, int start, int m);

/// One side of a class report. When `capped`, the class exceeds `value`
/// (reported as "≥ value+1").
struct ClassBound {
  int value = 0;
  bool capped = false;
  std::optional<Word> witness;  ///< a word needing exactly `value` steps
};

struct ClassReport {
  ClassBound left;
  ClassBound right;
  int cap = 12;
  /// Minimal c satisfying the map identities N̄₁₂₁…[c] = N̄₁₂₁…[c+1] = N̄₂₁₂…[c+1]
  /// (left) and the mirrored ones (right); nullopt beyond the cap.
  std::optional<int> left_from_map;
  std::optional<int> right_from_map;
  bool map_identities_agree = true;

  ClassPair pair() const { return {left.value, right.value}; }
  bool finite() const { return !left.capped && !right.capped; }
};

std::string format_class(const ClassReport& r);

/// Minimal left and right class over all of S³, measured against
/// normalize_oracle, with the map-level identities as a cross-check.
ClassReport compute_class(const Normaliser& nz, int cap = 12);

enum class Side { Left, Right };

std::string to_string(Side s);
Side parse_side(std::string_view s);

struct DominoCounterexample {
  Letter s1, s2, s1p, s2p, t0, t1, t2;
};

struct DominoReport {
  Side side = Side::Left;
  bool valid = true;
  std::optional<DominoCounterexample> counterexample;
  std::uint64_t tuples_checked = 0;
};

/// Domino rule for the family of N̄-fixed pairs. The free letters are
/// (t₀, s₁, s₂) on the left and (s₁, s₂, t₂) on the right; the others are
/// forced through the pair table.
DominoReport check_domino(const Normaliser& nz, Side side);

/// s ⪯ s′ through the normaliser alone: Yes if some t ∈ S has
/// N(s|t) = s′|e. Without a neutral letter the presentation is homogeneous,
/// so divisibility of letters is equality. Otherwise a failed search is
/// inconclusive.
Tri letter_divides(const Normaliser& nz, Letter s, Letter sp);

DivisibilityOracle normaliser_divisibility(const Normaliser& nz);

struct LeftWeightedViolation {
  Letter s, t, sp, tp;
};

struct LeftWeightedReport {
  Tri status = Tri::Yes;  ///< Yes = left-weighted
  std::vector<LeftWeightedViolation> violations;
  std::vector<LetterPair> inconclusive;  ///< pairs (s, s′) the oracle left open
};

LeftWeightedReport check_left_weighted(const Normaliser& nz, const DivisibilityOracle& div);

struct GarsideVerdict {
  enum class Kind { Garside, NotGarside, Inconclusive } kind = Kind::Garside;
  std::vector<std::string> failed;  ///< "class", "left-weighted"
  ClassReport klass;
  LeftWeightedReport weighted;

  std::string text() const;
};

/// GARSIDE iff the class is at most (4,3) and the normaliser is left-weighted.
GarsideVerdict garside_characterise(const Normaliser& nz, const DivisibilityOracle& div,
                                    int cap = 12);

struct FellowViolation {
  Word w;
  Letter t = 0;
  std::size_t index = 0;  ///< prefix (left) or suffix (right) length with no bridging letter
};

struct FellowReport {
  Side side = Side::Left;
  bool passed = true;
  bool exhaustive = true;
  std::uint64_t cases = 0;
  std::optional<FellowViolation> violation;
};

/// Left: N(w) = s₁|…|s_p, N(t|w) = s′₁|…|s′_{p+1}; for every i ≤ p some letter
/// tᵢ has t·s₁⋯sᵢ = s′₁⋯s′ᵢ·tᵢ. Right: N(w|t) = s′₁|…|s′_{p+1} and
/// s_{p−i+1}⋯s_p·t = tᵢ·s′_{p−i+2}⋯s′_{p+1}. Lengths whose word count exceeds
/// `opts.exhaustive_limit` are sampled.
FellowReport check_fellow_traveller(const Normaliser& nz, Side side, std::size_t max_len,
                                    const AxiomOptions& opts = {});

}  // namespace garnorm
