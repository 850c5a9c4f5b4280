#pragma once

#include <atomic>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "garnorm/word.hpp"

namespace garnorm {

/// A total map S² → S², stored densely and filled on first touch.
///
/// Entries are computed by a generator and memoised in a table of atomics,
/// so concurrent readers may race on the first evaluation of an entry; the
/// generator must be pure for this to be observably deterministic.
class QuadraticMap {
 public:
  using Generator = std::function<LetterPair(Letter, Letter)>;

  QuadraticMap(Alphabet alphabet, Generator generator);

  /// Table given by its non-identity entries; absent pairs are fixed.
  static QuadraticMap from_pairs(Alphabet alphabet,
                                 const std::map<LetterPair, LetterPair>& pairs);
  static QuadraticMap identity(Alphabet alphabet);

  LetterPair operator()(Letter s, Letter t) const;
  LetterPair operator()(LetterPair p) const { return (*this)(p.first, p.second); }

  bool is_fixed(Letter s, Letter t) const {
    return (*this)(s, t) == LetterPair{s, t};
  }

  const Alphabet& alphabet() const noexcept { return impl_->alphabet; }
  std::size_t letter_count() const noexcept { return impl_->n; }

  /// First pair p with F(F(p)) ≠ F(p), if any.
  std::optional<LetterPair> idempotence_violation() const;

  /// All non-identity entries, in lexicographic order of the input pair.
  std::map<LetterPair, LetterPair> non_identity_entries() const;

 private:
  struct Impl {
    Alphabet alphabet;
    Generator generator;
    std::size_t n = 0;
    mutable std::unique_ptr<std::atomic<std::uint64_t>[]> memo;
  };
  std::shared_ptr<const Impl> impl_;
};

}  // namespace garnorm
