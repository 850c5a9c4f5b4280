#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "garnorm/normaliser.hpp"
#include "garnorm/word.hpp"

namespace garnorm {

/// An element of a presented monoid, held as its canonical atom-word (the
/// lexicographically least word of its congruence class).
using Element = Word;

/// Order by grade (word length), then lexicographically.
bool grade_less(const Word& a, const Word& b);

/// A monoid ⟨atoms | relations⟩ with length-preserving relations.
///
/// Equality is decided exactly by enumerating the congruence class of a
/// word; classes are memoised and shared between copies. The memo is
/// guarded by a reader/writer lock so that all operations may be called
/// concurrently.
class PresentedMonoid {
 public:
  PresentedMonoid(std::vector<std::string> atoms,
                  std::vector<std::pair<Word, Word>> relations);

  /// Relations given as concatenated atom names, e.g. {"σ1σ2σ1", "σ2σ1σ2"}.
  static PresentedMonoid parse(std::vector<std::string> atoms,
                               const std::vector<std::pair<std::string, std::string>>& relations);

  const Alphabet& atoms() const noexcept { return atoms_; }
  std::size_t atom_count() const noexcept { return atoms_.size(); }
  const std::vector<std::pair<Word, Word>>& relations() const noexcept { return relations_; }

  /// Parses concatenated atom names (longest match; `|` and `·` are
  /// ignored, "1" or "" is the unit).
  Word parse_atom_word(std::string_view text) const;
  /// Concatenated atom names; the unit prints as "1".
  std::string format(const Word& w, bool ascii = false) const;

  /// Every word of the congruence class of `w`, sorted.
  const std::vector<Word>& congruence_class(const Word& w) const;
  Element canonical(const Word& w) const { return congruence_class(w).front(); }

  bool equal(const Word& w1, const Word& w2) const;
  Element multiply(const Element& f, const Element& g) const { return canonical(f.concat(g)); }

  bool left_divides(const Element& f, const Element& g) const;
  bool right_divides(const Element& f, const Element& g) const;
  /// The g′ with f·g′ = g, when f left-divides g.
  std::optional<Element> left_quotient(const Element& f, const Element& g) const;

  std::vector<Element> left_divisors(const Element& g) const;
  std::vector<Element> right_divisors(const Element& g) const;

  /// Distinct elements of grade exactly `grade`, sorted.
  std::vector<Element> elements_of_grade(std::size_t grade) const;

 private:
  struct Memo {
    std::shared_mutex mutex;
    std::unordered_map<Word, std::shared_ptr<const std::vector<Word>>, WordHash> classes;
  };

  Alphabet atoms_;
  std::vector<std::pair<Word, Word>> relations_;
  std::shared_ptr<Memo> memo_;
};

enum class LcmStatus { Found, None, Ambiguous };

struct LcmResult {
  LcmStatus status = LcmStatus::None;
  std::optional<Element> lcm;
  std::vector<Element> minimal;  ///< minimal common multiples when ambiguous
};

/// Least common right-multiple of f and g among elements of grade ≤ bound.
LcmResult right_lcm(const PresentedMonoid& mp, const Element& f, const Element& g,
                    std::size_t bound);

struct FamilyCandidate {
  std::vector<Element> members;  ///< sorted by (grade, word); contains 1
  bool divisor_closed = false;
  bool fixpoint_reached = false;
  std::size_t bound = 0;
  std::size_t lcm_searches_without_result = 0;
  std::size_t ambiguous_lcms = 0;

  std::size_t size_with_unit() const;
  std::size_t size_without_unit() const;
  bool contains(const Element& e) const;
};

/// Sorts and deduplicates; the unit is added when missing.
FamilyCandidate make_family(std::vector<Element> members);

/// Closes {1} ∪ atoms under right-divisors and existing right-lcms, every
/// search bounded by `bound` atom-lengths.
FamilyCandidate closure_smallest_garside(const PresentedMonoid& mp, std::size_t bound = 8);

struct SNormalCheck {
  bool normal = true;         ///< verdict of the bounded pull-left check
  std::size_t f_bound = 0;
  std::optional<Element> s;   ///< witness s with s ⪯ f·s1·s2 but s ⋠ f·s1
  std::optional<Element> f;
  std::optional<bool> head_condition;  ///< no s ∈ S with s1 ≺ s ⪯ s1·s2
};

/// Checks ∀s ∈ S ∀f (grade f ≤ f_bound): s ⪯ f·s1·s2 ⇒ s ⪯ f·s1. When
/// `closed` is set, also evaluates the head condition "no s ∈ S with
/// s1 ≺ s ⪯ s1·s2" and throws Error if the two verdicts disagree.
SNormalCheck check_s_normal_pair(const PresentedMonoid& mp, const FamilyCandidate& family,
                                 const Element& s1, const Element& s2,
                                 std::size_t f_bound = 4, bool closed = false);

bool is_s_normal_pair(const PresentedMonoid& mp, const FamilyCandidate& family,
                      const Element& s1, const Element& s2, std::size_t f_bound = 4);

/// Maximal member of S left-dividing g; nullopt when the maximal dividing
/// members are not unique.
std::optional<Element> s_head(const PresentedMonoid& mp, const FamilyCandidate& family,
                              const Element& g);

/// Greedy S-decomposition of g (empty for the unit).
std::vector<Element> s_normal_decomposition(const PresentedMonoid& mp,
                                            const FamilyCandidate& family, const Element& g);

struct FamilyReport {
  bool passed = true;
  std::string failed;              ///< "right-divisor", "right-lcm", "head", "normal-pair"
  std::optional<Element> witness;  ///< offending element
  std::optional<Element> witness2;
  std::size_t bound = 0;
  std::uint64_t elements_checked = 0;
};

FamilyReport verify_garside_family(const PresentedMonoid& mp, const FamilyCandidate& family,
                                   std::size_t bound = 6, std::size_t f_bound = 4);

/// Pair normaliser N^S over the members (neutral letter "1", declared
/// class (4,3)); letters are named by their canonical atom-words.
Normaliser family_to_normaliser(const PresentedMonoid& mp, const FamilyCandidate& family);

/// The member of `family` denoted by each letter of family_to_normaliser().
const Element& family_letter_element(const FamilyCandidate& family, Letter l);

PresentedMonoid presented_abelian(int n);
PresentedMonoid presented_braid(int n);
/// ⟨σ1, σ2, σ3 | σiσjσi = σjσiσj for i ≠ j⟩.
PresentedMonoid presented_atilde2();
/// ⟨a, b | a·bⁿ = bⁿ⁺¹⟩.
PresentedMonoid presented_ex317(int n);
/// {1, b, …, bⁿ⁺¹, a} in presented_ex317(n).
FamilyCandidate ex317_family(const PresentedMonoid& mp, int n);

}  // namespace garnorm
