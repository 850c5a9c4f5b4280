#pragma once

#include <memory>
#include <string>
#include <vector>

#include "garnorm/class_analysis.hpp"
#include "garnorm/garside_family.hpp"
#include "garnorm/garside_lattice.hpp"
#include "garnorm/normaliser.hpp"

namespace garnorm {

/// A normaliser together with whatever structure it was built from.
struct Instance {
  std::string name;  ///< e.g. "braid:4"
  std::string kind;  ///< "abelian", "braid", "torus", "lex", "plactic", "atilde2", "ex317", "prop436", "table"
  Normaliser nz;
  std::shared_ptr<const GarsideLattice> lattice;
  std::shared_ptr<const PresentedMonoid> monoid;
  std::shared_ptr<const FamilyCandidate> family;
  /// Exact letter divisibility when the instance knows its monoid,
  /// otherwise letter_divides() on the normaliser.
  DivisibilityOracle divides;
};

/// N^Lex on a₁, …, aₙ: aᵢ|aⱼ ↦ aⱼ|aᵢ for i > j; no neutral letter,
/// declared class (3,3).
Normaliser lex_normaliser(int n);

/// The eight-letter normaliser a, b, b′, b″, c, c′, c″, d with moves
/// ab ↦ ab′, b′c′ ↦ bc, bc′ ↦ b″c″, b′c ↦ b″c″, cd ↦ c′d; declared class
/// (4,4), so it is evaluated by exhaustive rewriting.
Normaliser prop436_normaliser();

/// Built-in instances by name: abelian:n, braid:n, torus:e1,e2,…, lex:n,
/// plactic:k, atilde2, ex317:n, prop436. Any other argument is read as the
/// path of an instance JSON file.
Instance load_instance(const std::string& spec);

Instance make_instance(std::string name, std::string kind, Normaliser nz);
Instance lattice_instance(std::string name, GarsideLattice lattice);
Instance family_instance(std::string name, std::string kind, PresentedMonoid mp,
                         FamilyCandidate family);

/// One representative of every built-in kind, small enough for
/// exhaustive checks.
std::vector<std::string> sample_instance_names();

}  // namespace garnorm
