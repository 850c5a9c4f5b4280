#include "garnorm/io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include "json.hpp"

namespace garnorm {

using Json = nlohmann::ordered_json;

namespace {

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

const Json& member(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw ParseError(std::string("JSON input lacks the \"") + key + "\" member");
  }
  return j.at(key);
}

std::vector<std::string> string_list(const Json& j, const char* what) {
  if (!j.is_array()) throw ParseError(std::string(what) + " must be an array of strings");
  std::vector<std::string> out;
  for (const auto& x : j) {
    if (!x.is_string()) throw ParseError(std::string(what) + " must be an array of strings");
    out.push_back(x.get<std::string>());
  }
  return out;
}

std::string as_string(const Json& j, const std::string& what) {
  if (!j.is_string()) throw ParseError(what + " must be a string");
  return j.get<std::string>();
}

}  // namespace

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string normaliser_to_json(const Normaliser& nz, int indent) {
  const auto& a = nz.alphabet();
  Json j;
  j["letters"] = a.names();
  j["neutral"] = nz.neutral() ? Json(a.name(*nz.neutral())) : Json(nullptr);
  if (const auto c = nz.declared_class()) j["class"] = {c->left, c->right};
  Json pairs = Json::object();
  for (const auto& [lhs, rhs] : nz.map().non_identity_entries()) {
    pairs[a.name(lhs.first) + "|" + a.name(lhs.second)] = a.name(rhs.first) + "|" + a.name(rhs.second);
  }
  j["pairs"] = std::move(pairs);
  return j.dump(indent);
}

Normaliser normaliser_from_json(std::string_view text) {
  const Json j = parse_json(text);
  const auto names = string_list(member(j, "letters"), "\"letters\"");
  std::optional<std::string> neutral;
  if (j.contains("neutral") && !j.at("neutral").is_null()) {
    neutral = as_string(j.at("neutral"), "\"neutral\"");
  }
  const Alphabet alphabet(names, neutral);
  std::map<LetterPair, LetterPair> table;
  const Json& pairs = member(j, "pairs");
  if (!pairs.is_object()) throw ParseError("\"pairs\" must be an object");
  for (const auto& [key, value] : pairs.items()) {
    const Word lhs = parse_word(alphabet, key);
    const Word rhs = parse_word(alphabet, as_string(value, "pair image"));
    if (lhs.size() != 2 || rhs.size() != 2) {
      throw ParseError("pair entries must map two letters to two letters: '" + key + "'");
    }
    table[{lhs[0], lhs[1]}] = {rhs[0], rhs[1]};
  }
  std::optional<ClassPair> declared;
  if (j.contains("class")) {
    const Json& c = j.at("class");
    if (!c.is_array() || c.size() != 2 || !c[0].is_number_integer() || !c[1].is_number_integer()) {
      throw ParseError("\"class\" must be a pair of integers");
    }
    declared = ClassPair{c[0].get<int>(), c[1].get<int>()};
  }
  return Normaliser(QuadraticMap::from_pairs(alphabet, table), declared);
}

PresentedMonoid presentation_from_json(std::string_view text) {
  const Json j = parse_json(text);
  auto atoms = string_list(member(j, "atoms"), "\"atoms\"");
  std::vector<std::pair<std::string, std::string>> rels;
  const Json& r = member(j, "relations");
  if (!r.is_array()) throw ParseError("\"relations\" must be an array of pairs");
  for (const auto& rel : r) {
    if (!rel.is_array() || rel.size() != 2) throw ParseError("each relation must be a pair");
    rels.emplace_back(as_string(rel[0], "relation side"), as_string(rel[1], "relation side"));
  }
  return PresentedMonoid::parse(std::move(atoms), rels);
}

std::string presentation_to_json(const PresentedMonoid& mp, int indent) {
  Json j;
  j["atoms"] = mp.atoms().names();
  Json rels = Json::array();
  for (const auto& [l, r] : mp.relations()) rels.push_back({mp.format(l), mp.format(r)});
  j["relations"] = std::move(rels);
  return j.dump(indent);
}

FamilyCandidate family_from_json(const PresentedMonoid& mp, std::string_view text) {
  const Json j = parse_json(text);
  std::vector<Element> members;
  for (const auto& w : string_list(member(j, "family"), "\"family\"")) {
    members.push_back(mp.canonical(mp.parse_atom_word(w)));
  }
  return make_family(std::move(members));
}

RewriteSystem rules_from_json(std::string_view text) {
  const Json j = parse_json(text);
  const Json& rules = member(j, "rules");
  if (!rules.is_object()) throw ParseError("\"rules\" must be an object");
  std::vector<std::string> names;
  if (j.contains("letters")) {
    names = string_list(j.at("letters"), "\"letters\"");
  } else {
    auto add = [&names](const std::string& side) {
      std::size_t pos = 0;
      while (!side.empty()) {
        const auto bar = side.find('|', pos);
        const std::string tok = side.substr(pos, bar == std::string::npos ? std::string::npos : bar - pos);
        if (std::find(names.begin(), names.end(), tok) == names.end()) names.push_back(tok);
        if (bar == std::string::npos) break;
        pos = bar + 1;
      }
    };
    for (const auto& [key, value] : rules.items()) {
      add(key);
      add(as_string(value, "rule right side"));
    }
  }
  Alphabet alphabet(names);
  std::vector<Rule> out;
  for (const auto& [key, value] : rules.items()) {
    const Word lhs = parse_word(alphabet, key);
    if (lhs.size() != 2) throw ParseError("rule left sides must have two letters: '" + key + "'");
    const Word rhs = parse_word(alphabet, as_string(value, "rule right side"));
    out.push_back({lhs[0], lhs[1], rhs});
  }
  return RewriteSystem(std::move(alphabet), std::move(out));
}

std::string rules_to_json(const RewriteSystem& r, int indent) {
  const auto& a = r.alphabet();
  Json j;
  j["letters"] = a.names();
  Json rules = Json::object();
  for (const Rule& rule : r.rules()) {
    rules[a.name(rule.s) + "|" + a.name(rule.t)] = format_word(a, rule.rhs);
  }
  j["rules"] = std::move(rules);
  return j.dump(indent);
}

}  // namespace garnorm
