#pragma once

#include <compare>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "garnorm/error.hpp"

namespace garnorm {

/// Index of a letter inside its alphabet.
using Letter = std::uint32_t;

struct LetterPair {
  Letter first{};
  Letter second{};
  friend constexpr auto operator<=>(const LetterPair&, const LetterPair&) = default;
};

/// ASCII spelling of a letter name: σ→s, Δ→D, ∅→[], ′→', ″→''.
std::string ascii_alias(std::string_view name);

/// Ordered finite set of named letters with an optional neutral letter.
///
/// Lookup accepts the canonical name, its ASCII alias, and any alias
/// registered with add_alias().
class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::vector<std::string> names,
                    std::optional<std::string> neutral = std::nullopt);

  std::size_t size() const noexcept { return names_.size(); }
  const std::string& name(Letter l) const { return names_.at(l); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  std::optional<Letter> neutral() const noexcept { return neutral_; }

  std::optional<Letter> find(std::string_view name) const;
  /// Like find() but throws ParseError for unknown names.
  Letter at(std::string_view name) const;

  void add_alias(const std::string& alias, Letter l);

  friend bool operator==(const Alphabet& a, const Alphabet& b) {
    return a.names_ == b.names_ && a.neutral_ == b.neutral_;
  }

 private:
  std::vector<std::string> names_;
  std::optional<Letter> neutral_;
  std::unordered_map<std::string, Letter> index_;
};

/// A finite sequence of letters. Words are values: every operation in the
/// library returns a fresh word.
class Word {
 public:
  Word() = default;
  Word(std::initializer_list<Letter> letters) : letters_(letters) {}
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}

  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  auto begin() const noexcept { return letters_.begin(); }
  auto end() const noexcept { return letters_.end(); }
  const std::vector<Letter>& letters() const noexcept { return letters_; }
  std::span<const Letter> span() const noexcept { return letters_; }

  Word concat(const Word& other) const;
  Word sub(std::size_t pos, std::size_t len) const;
  Word with_pair(std::size_t i, LetterPair p) const;

  friend auto operator<=>(const Word&, const Word&) = default;
  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::vector<Letter> letters_;
};

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept;
};

/// 1-based positions; position i addresses the factor (i, i+1).
using PositionSequence = std::vector<std::size_t>;

template <typename F>
concept PairFunction = requires(const F& f, Letter a, Letter b) {
  { f(a, b) } -> std::convertible_to<LetterPair>;
};

/// Applies `f` to the entries in positions i and i+1 (1-based).
template <PairFunction F>
Word apply_at(const F& f, const Word& w, std::size_t i) {
  if (i < 1 || i + 1 > w.size()) {
    throw RangeError("position " + std::to_string(i) +
                     " out of range for word of length " +
                     std::to_string(w.size()));
  }
  return w.with_pair(i - 1, f(w[i - 1], w[i]));
}

/// Composite application; the first listed position is applied first.
template <PairFunction F>
Word apply_sequence(const F& f, const Word& w, std::span<const std::size_t> u) {
  for (std::size_t i : u) {
    if (i < 1 || i + 1 > w.size()) {
      throw RangeError("position " + std::to_string(i) +
                       " out of range for word of length " +
                       std::to_string(w.size()));
    }
  }
  std::vector<Letter> buf(w.begin(), w.end());
  for (std::size_t i : u) {
    const LetterPair r = f(buf[i - 1], buf[i]);
    buf[i - 1] = r.first;
    buf[i] = r.second;
  }
  return Word(std::move(buf));
}

/// The left-multiplication schedule: δ₂ = 1, δ_p = sh(δ_{p−1})|1|2|…|p−1.
PositionSequence delta_schedule(int p);

/// The right-multiplication schedule: δ̃₂ = 1, δ̃_p = δ̃_{p−1}|p−1|…|2|1.
PositionSequence delta_tilde_schedule(int p);

/// The alternating schedule 121… (start = 1) or 212… (start = 2) of length m.
PositionSequence alternating_schedule(int start, int m);

/// Parses the `|` text format. The empty string is the empty word.
Word parse_word(const Alphabet& alphabet, std::string_view text);
std::string format_word(const Alphabet& alphabet, const Word& w,
                        bool ascii = false);

/// π_e: erases every occurrence of `e`.
Word erase_letter(const Word& w, Letter e);

/// Number of words of length `len` over `k` letters, or nullopt on overflow
/// of `limit`.
std::optional<std::uint64_t> word_count(std::size_t k, std::size_t len,
                                        std::uint64_t limit);

/// The `index`-th word of length `len` over `k` letters in lexicographic
/// order (first letter most significant).
Word word_from_index(std::uint64_t index, std::size_t k, std::size_t len);

/// Pseudo-random word of length `len` over `k` letters; depends only on
/// (seed, len, index), so sampled scans do not depend on chunking.
Word sample_word(std::uint64_t seed, std::size_t k, std::size_t len,
                 std::uint64_t index);

/// Calls fn(word) for every word of length `len` over `k` letters, in
/// lexicographic order.
void for_each_word(std::size_t k, std::size_t len,
                   const std::function<void(const Word&)>& fn);

}  // namespace garnorm
