#pragma once

#include <stdexcept>
#include <string>

namespace garnorm {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A position, size or parameter outside its admissible range.
class RangeError : public Error {
 public:
  using Error::Error;
};

/// Malformed textual or JSON input.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// An operation needs data the object was not configured with
/// (typically a neutral letter).
class ConfigurationError : public Error {
 public:
  using Error::Error;
};

/// A schedule-based normalisation produced a word that still has a
/// non-fixed length-two factor. `word()` holds the offending input,
/// rendered in the `|` text format.
class ClassViolation : public Error {
 public:
  ClassViolation(const std::string& what, std::string word)
      : Error(what), word_(std::move(word)) {}
  const std::string& word() const noexcept { return word_; }

 private:
  std::string word_;
};

/// Two distinct normal words are reachable from the same input.
class NotANormalisation : public Error {
 public:
  using Error::Error;
};

/// Exhaustive rewriting found no normal word (every branch cycles) or ran
/// past its state budget.
class Divergence : public Error {
 public:
  using Error::Error;
};

}  // namespace garnorm
