#include "doctest.h"

#include "garnorm/error.hpp"
#include "garnorm/instances.hpp"
#include "garnorm/io.hpp"
#include "json.hpp"

using namespace garnorm;

namespace {

bool same_table(const Normaliser& a, const Normaliser& b) {
  if (a.alphabet().names() != b.alphabet().names()) return false;
  for (Letter s = 0; s < a.alphabet().size(); ++s) {
    for (Letter t = 0; t < a.alphabet().size(); ++t) {
      if (a.bar(s, t) != b.bar(s, t)) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("normaliser json round trip") {
  for (const std::string& name : sample_instance_names()) {
    CAPTURE(name);
    const Normaliser nz = load_instance(name).nz;
    const Normaliser back = normaliser_from_json(normaliser_to_json(nz));
    CHECK(same_table(nz, back));
    CHECK(back.alphabet().neutral() == nz.alphabet().neutral());
    CHECK(back.declared_class() == nz.declared_class());
  }
  const auto j = nlohmann::json::parse(normaliser_to_json(lex_normaliser(2)));
  CHECK(j["letters"] == nlohmann::json::array({"a1", "a2"}));
  CHECK(j["neutral"].is_null());
  CHECK(j["pairs"]["a2|a1"] == "a1|a2");
  CHECK(j["class"] == nlohmann::json::array({3, 3}));
}

TEST_CASE("normaliser json errors") {
  CHECK_THROWS_AS(normaliser_from_json("not json"), ParseError);
  CHECK_THROWS_AS(normaliser_from_json(R"({"pairs": {}})"), ParseError);
  CHECK_THROWS_AS(normaliser_from_json(R"({"letters": ["a"], "pairs": {"a|b": "a|a"}})"),
                  ParseError);
  CHECK_THROWS_AS(normaliser_from_json(R"({"letters": ["a"], "pairs": {"a": "a|a"}})"),
                  ParseError);
  CHECK_THROWS_AS(normaliser_from_json(R"({"letters": ["a"], "neutral": "z", "pairs": {}})"),
                  ParseError);
  // missing pairs default to the identity
  const Normaliser nz =
      normaliser_from_json(R"({"letters": ["a", "b"], "pairs": {"b|a": "a|b"}})");
  CHECK(nz.bar(0, 1) == LetterPair{0, 1});
  CHECK(nz.bar(1, 0) == LetterPair{0, 1});
}

TEST_CASE("presentation json") {
  const PresentedMonoid mp = presentation_from_json(
      R"({"atoms": ["σ1", "σ2", "σ3"], "relations": [["σ1σ2σ1", "σ2σ1σ2"], ["σ2σ3σ2", "σ3σ2σ3"], ["σ1σ3σ1", "σ3σ1σ3"]]})");
  CHECK(mp.atom_count() == 3);
  CHECK(mp.relations().size() == 3);
  CHECK(mp.equal(mp.parse_atom_word("σ3σ1σ3"), mp.parse_atom_word("σ1σ3σ1")));
  const PresentedMonoid back = presentation_from_json(presentation_to_json(mp));
  CHECK(back.relations() == mp.relations());
  CHECK(back.atoms().names() == mp.atoms().names());

  const FamilyCandidate f = family_from_json(
      mp, R"({"atoms": ["σ1", "σ2", "σ3"], "relations": [], "family": ["σ1", "σ2", "σ1σ2σ1"]})");
  CHECK(f.size_with_unit() == 4);
  CHECK(f.contains(mp.canonical(mp.parse_atom_word("σ2σ1σ2"))));

  CHECK_THROWS_AS(presentation_from_json(R"({"atoms": ["a"], "relations": [["a", "aa"]]})"),
                  ConfigurationError);
  CHECK_THROWS_AS(presentation_from_json(R"({"atoms": ["a"], "relations": [["a", "b"]]})"),
                  ParseError);
  CHECK_THROWS_AS(presentation_from_json(R"({"relations": []})"), ParseError);
}

TEST_CASE("rules json") {
  const RewriteSystem r = system_of(prop436_normaliser());
  const RewriteSystem back = rules_from_json(rules_to_json(r));
  CHECK(back.rules() == r.rules());
  CHECK(back.alphabet().names() == r.alphabet().names());

  const RewriteSystem first = rules_from_json(R"({"rules": {"b|a": "a|b"}})");
  CHECK(first.alphabet().names() == std::vector<std::string>{"b", "a"});
  CHECK(first.size() == 1);
  CHECK_THROWS_AS(rules_from_json(R"({"rules": {"a|b": "a|b|c"}})"), ConfigurationError);
  CHECK_THROWS_AS(rules_from_json(R"({"letters": ["a"], "rules": {"a|b": "b|a"}})"), ParseError);
  CHECK_THROWS_AS(rules_from_json(R"([1, 2])"), ParseError);
}

TEST_CASE("reading files") {
  CHECK_THROWS_AS(read_file("/nonexistent/garnorm/input.json"), ParseError);
}
