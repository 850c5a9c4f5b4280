#pragma once

// Reference computations used only by the tests. Nothing here calls into the
// library's normalisation code: elements are atom words, equality is a BFS
// over the defining relations, and heads are found by prefix search.

#include <set>
#include <string>
#include <utility>
#include <vector>

namespace oracle {

using Atoms = std::vector<int>;
using Relations = std::vector<std::pair<Atoms, Atoms>>;

/// All words reachable from w by applying relations in either direction.
std::set<Atoms> congruence(const Atoms& w, const Relations& rels);
bool congruent(const Atoms& a, const Atoms& b, const Relations& rels);

/// σᵢσⱼ = σⱼσᵢ (|i−j| ≥ 2) and σᵢσᵢ₊₁σᵢ = σᵢ₊₁σᵢσᵢ₊₁ on atoms 0..n−2.
Relations braid_relations(int n);
/// σᵢσⱼσᵢ = σⱼσᵢσⱼ for all i ≠ j on three atoms.
Relations atilde2_relations();
/// ab = ba for all pairs of n atoms.
Relations commutation_relations(int n);
/// Knuth relations on letters 1..x: xzy = zxy (x ≤ y < z), yxz = yzx (x < y ≤ z).
Relations knuth_relations(int x);

/// One reduced word of every permutation of {0..n−1}, found by bubble sort.
std::vector<Atoms> braid_simples(int n);
/// Δₙ = Δₙ₋₁σₙ₋₁⋯σ₁.
Atoms braid_delta(int n);
/// Atom word of a braid letter name: "1", "Δ", "σ1σ2", or ASCII "s1s2", "D".
Atoms braid_name_atoms(const std::string& name, int n);
/// Atom word of an abelian letter name: "1", "Δ", or a subset string "ac".
Atoms abelian_name_atoms(const std::string& name, int n);

/// Greedy decomposition of g over `simples` (all nonempty): repeatedly take
/// the longest simple that is a prefix of some word congruent to the rest.
/// Returns indices into `simples`; trailing unit entries are not produced.
std::vector<std::size_t> greedy(const Atoms& g, const std::vector<Atoms>& simples,
                                const Relations& rels);

}  // namespace oracle
