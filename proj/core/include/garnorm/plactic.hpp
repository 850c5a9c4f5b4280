#pragma once

#include <string>
#include <utility>
#include <vector>

#include "garnorm/normaliser.hpp"

namespace garnorm {

/// A column over {1, …, x}: strictly decreasing entries, possibly empty.
/// As a monoid element it is the word of its entries read top-down, so
/// `[3,1]` is the product 3·1.
using Column = std::vector<int>;

/// `[3,1]`; the empty column prints as `∅`.
std::string format_column(const Column& c);
/// Accepts `[3,1]`, `[]` and `∅`. Throws ParseError unless strictly decreasing.
Column parse_column(std::string_view text);

/// Two columns s₁|s₂ form a tableau: ‖s₁‖ ≥ ‖s₂‖ and, for each k ≤ ‖s₂‖, the
/// k-th smallest entry of s₁ is at most the k-th smallest entry of s₂.
bool is_tableau_pair(const Column& s1, const Column& s2);

/// The two columns of the Schensted P-tableau of the word s₁·s₂, with ∅
/// padding when the tableau has a single column.
std::pair<Column, Column> insert_pair(const Column& s1, const Column& s2);

/// The 2^x columns over {1, …, x}, ∅ first, then by size and entries.
std::vector<Column> plactic_columns(int x);

/// Normaliser on all columns over {1, …, x} (1 ≤ x ≤ 6), neutral ∅,
/// declared class (3,3).
Normaliser plactic_normaliser(int x);

/// Column denoted by a letter of plactic_normaliser().
Column plactic_column(const Normaliser& nz, Letter l);

/// The tableau (as its columns, left to right) of a word over columns.
std::vector<Column> tableau_of(const Normaliser& nz, const Word& w);

}  // namespace garnorm
