#pragma once

#include <string>
#include <string_view>

#include "garnorm/garside_family.hpp"
#include "garnorm/normaliser.hpp"
#include "garnorm/rewriting.hpp"

namespace garnorm {

inline constexpr int kSchemaVersion = 1;

/// `{"letters": [...], "neutral": "1" | null, "pairs": {"s|t": "u|v"}}`,
/// plus "class": [l, r] when the class is declared.
std::string normaliser_to_json(const Normaliser& nz, int indent = 2);
Normaliser normaliser_from_json(std::string_view text);

/// `{"atoms": [...], "relations": [["σ1σ2σ1", "σ2σ1σ2"], ...]}`.
PresentedMonoid presentation_from_json(std::string_view text);
std::string presentation_to_json(const PresentedMonoid& mp, int indent = 2);

/// A presentation file with an extra `"family": [atom-words]` member.
FamilyCandidate family_from_json(const PresentedMonoid& mp, std::string_view text);

/// `{"rules": {"s|t": "u|v"}}`, with optional "letters" (otherwise letters
/// are taken in order of first appearance).
RewriteSystem rules_from_json(std::string_view text);
std::string rules_to_json(const RewriteSystem& r, int indent = 2);

std::string read_file(const std::string& path);

}  // namespace garnorm
