#pragma once

#include <atomic>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "garnorm/normaliser.hpp"
#include "garnorm/word.hpp"

namespace garnorm {

/// Index of a simple element inside its lattice; 0 is always the unit.
using Simple = Letter;

/// The finite divisor lattice Div(Δ) of a Garside monoid.
///
/// A lattice is defined by its simples and their partial product (uv, when
/// uv is again simple). Left-divisibility, left quotients, complements and
/// φ are derived from the product table; meets and joins are brute-forced
/// over the simples and memoised unless the builder supplies a closed form.
class GarsideLattice {
 public:
  static constexpr Simple kNone = 0xffffffffU;

  struct Spec {
    std::string kind;                       ///< "abelian", "braid", "torus"
    std::vector<std::string> names;         ///< names[0] is the unit
    std::vector<std::vector<std::string>> aliases;
    std::vector<std::string> atoms;         ///< generator names
    std::vector<std::vector<Letter>> atom_words;  ///< atom decomposition per simple
    Simple delta = 0;
    std::function<Simple(Simple, Simple)> product;  ///< kNone when not simple
    std::function<Simple(Simple, Simple)> meet;     ///< optional closed form
    std::function<Simple(Simple, Simple)> join;     ///< optional closed form
  };

  explicit GarsideLattice(Spec spec);

  const std::string& kind() const noexcept { return kind_; }
  std::size_t size() const noexcept { return n_; }
  Simple unit() const noexcept { return 0; }
  Simple delta() const noexcept { return delta_; }
  const std::string& name(Simple s) const { return alphabet_.name(s); }
  const Alphabet& alphabet() const noexcept { return alphabet_; }
  const std::vector<std::string>& atoms() const noexcept { return atoms_; }
  const std::vector<Letter>& atom_word(Simple s) const { return atom_words_.at(s); }

  /// uv when it is simple, kNone otherwise.
  Simple product(Simple u, Simple v) const { return product_[u * n_ + v]; }
  bool leq(Simple u, Simple g) const { return quotient_[u * n_ + g] != kNone; }
  /// u\g, the v with uv = g, or kNone when u does not left-divide g.
  Simple left_quotient(Simple u, Simple g) const { return quotient_[u * n_ + g]; }
  Simple complement(Simple s) const { return complement_[s]; }
  Simple phi(Simple s) const { return complement_[complement_[s]]; }
  Simple phi_inverse(Simple s) const { return phi_inverse_[s]; }

  Simple meet(Simple a, Simple b) const;
  Simple join(Simple a, Simple b) const;
  Simple meet_brute_force(Simple a, Simple b) const;
  Simple join_brute_force(Simple a, Simple b) const;

 private:
  std::string kind_;
  std::size_t n_ = 0;
  Simple delta_ = 0;
  Alphabet alphabet_;
  std::vector<std::string> atoms_;
  std::vector<std::vector<Letter>> atom_words_;
  std::vector<Simple> product_;
  std::vector<Simple> quotient_;
  std::vector<Simple> complement_;
  std::vector<Simple> phi_inverse_;
  std::function<Simple(Simple, Simple)> meet_fn_;
  std::function<Simple(Simple, Simple)> join_fn_;
  std::shared_ptr<std::atomic<Simple>[]> meet_memo_;
  std::shared_ptr<std::atomic<Simple>[]> join_memo_;
};

/// Normal pair of s1·s2: s′₁ = s₁·(∂s₁ ∧ s₂), s′₂ = (∂s₁ ∧ s₂)\s₂.
LetterPair head_pair(const GarsideLattice& L, Simple s1, Simple s2);

/// H of the product of a non-empty word of simples, folding right to left.
Simple head(const GarsideLattice& L, const Word& w);

/// f\g: the simple with f·(f\g) equal to the right-lcm of f and g.
Simple right_complement(const GarsideLattice& L, Simple f, Simple g);

/// Pair normaliser N^Δ on the simples, neutral letter 1, declared class (3,3)
/// (both domino rules hold for Div(Δ)).
Normaliser to_normaliser(const GarsideLattice& L);

struct SignedSimple {
  Simple simple = 0;
  bool inverse = false;
  friend bool operator==(const SignedSimple&, const SignedSimple&) = default;
};

struct GroupNormalForm {
  int delta_power = 0;
  Word word;  ///< strict Δ-normal, first entry ≠ Δ, last entry ≠ 1
  friend bool operator==(const GroupNormalForm&, const GroupNormalForm&) = default;
};

/// Δ^m|s₁|…|s_p form of a signed word in the group of fractions.
GroupNormalForm group_delta_normal_form(const GarsideLattice& L,
                                        const std::vector<SignedSimple>& w);

/// Parses `s|t^-1|…` over the lattice's simples.
std::vector<SignedSimple> parse_signed_word(const GarsideLattice& L, std::string_view text);
std::string format_group_normal_form(const GarsideLattice& L, const GroupNormalForm& g,
                                     bool ascii = false);

/// Free abelian monoid ℕⁿ with Δ = a₁⋯aₙ; 1 ≤ n ≤ 10.
GarsideLattice build_abelian(int n);
/// Braid monoid B⁺ₙ with Δ the positive half-turn; 2 ≤ n ≤ 6.
GarsideLattice build_braid(int n);
/// Torus-type monoid ⟨a₁,…,a_k | a₁^e₁ = ⋯ = a_k^e_k⟩⁺; each eᵢ ≥ 2.
GarsideLattice build_torus(const std::vector<int>& exponents);

/// Permutation of a simple braid (0-based, right action of σᵢ on positions).
std::vector<int> braid_permutation(const GarsideLattice& L, Simple s);

}  // namespace garnorm
