#include "garnorm/instances.hpp"

#include <filesystem>
#include <map>

#include "garnorm/io.hpp"
#include "garnorm/plactic.hpp"

namespace garnorm {

Normaliser lex_normaliser(int n) {
  if (n < 1) throw RangeError("lex instance needs n >= 1");
  std::vector<std::string> names;
  for (int i = 1; i <= n; ++i) names.push_back("a" + std::to_string(i));
  std::map<LetterPair, LetterPair> table;
  for (Letter i = 0; i < static_cast<Letter>(n); ++i) {
    for (Letter j = 0; j < i; ++j) table.emplace(LetterPair{i, j}, LetterPair{j, i});
  }
  return Normaliser(QuadraticMap::from_pairs(Alphabet(names), table), ClassPair{3, 3});
}

Normaliser prop436_normaliser() {
  Alphabet alphabet({"a", "b", "b′", "b″", "c", "c′", "c″", "d"});
  auto l = [&alphabet](const char* name) { return alphabet.at(name); };
  const std::map<LetterPair, LetterPair> table{
      {{l("a"), l("b")}, {l("a"), l("b′")}},
      {{l("b′"), l("c′")}, {l("b"), l("c")}},
      {{l("b"), l("c′")}, {l("b″"), l("c″")}},
      {{l("b′"), l("c")}, {l("b″"), l("c″")}},
      {{l("c"), l("d")}, {l("c′"), l("d")}},
  };
  return Normaliser(QuadraticMap::from_pairs(alphabet, table), ClassPair{4, 4});
}

Instance make_instance(std::string name, std::string kind, Normaliser nz) {
  DivisibilityOracle div = normaliser_divisibility(nz);
  return Instance{std::move(name), std::move(kind), std::move(nz), nullptr, nullptr, nullptr,
                  std::move(div)};
}

Instance lattice_instance(std::string name, GarsideLattice lattice) {
  auto L = std::make_shared<const GarsideLattice>(std::move(lattice));
  Instance inst = make_instance(std::move(name), L->kind(), to_normaliser(*L));
  inst.lattice = L;
  inst.divides = [L](Letter s, Letter sp) { return L->leq(s, sp) ? Tri::Yes : Tri::No; };
  return inst;
}

Instance family_instance(std::string name, std::string kind, PresentedMonoid mp,
                         FamilyCandidate family) {
  auto M = std::make_shared<const PresentedMonoid>(std::move(mp));
  auto F = std::make_shared<const FamilyCandidate>(std::move(family));
  Instance inst = make_instance(std::move(name), std::move(kind), family_to_normaliser(*M, *F));
  inst.monoid = M;
  inst.family = F;
  inst.divides = [M, F](Letter s, Letter sp) {
    return M->left_divides(F->members.at(s), F->members.at(sp)) ? Tri::Yes : Tri::No;
  };
  return inst;
}

namespace {

int parse_int(const std::string& text, const std::string& spec) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(text, &used);
    if (used == text.size()) return v;
  } catch (const std::exception&) {
  }
  throw ParseError("bad parameter '" + text + "' in instance '" + spec + "'");
}

std::vector<int> parse_int_list(const std::string& text, const std::string& spec) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (true) {
    const auto comma = text.find(',', pos);
    out.push_back(parse_int(text.substr(pos, comma == std::string::npos ? std::string::npos
                                                                        : comma - pos),
                            spec));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

}  // namespace

Instance load_instance(const std::string& spec) {
  const auto colon = spec.find(':');
  const std::string kind = spec.substr(0, colon);
  const std::string arg = colon == std::string::npos ? "" : spec.substr(colon + 1);
  const bool has_arg = colon != std::string::npos;
  if (kind == "abelian" && has_arg) return lattice_instance(spec, build_abelian(parse_int(arg, spec)));
  if (kind == "braid" && has_arg) return lattice_instance(spec, build_braid(parse_int(arg, spec)));
  if (kind == "torus" && has_arg) return lattice_instance(spec, build_torus(parse_int_list(arg, spec)));
  if (kind == "lex" && has_arg) return make_instance(spec, "lex", lex_normaliser(parse_int(arg, spec)));
  if (kind == "plactic" && has_arg) {
    return make_instance(spec, "plactic", plactic_normaliser(parse_int(arg, spec)));
  }
  if (spec == "atilde2") {
    PresentedMonoid mp = presented_atilde2();
    FamilyCandidate fc = closure_smallest_garside(mp);
    return family_instance(spec, "atilde2", std::move(mp), std::move(fc));
  }
  if (kind == "ex317") {
    const int n = has_arg ? parse_int(arg, spec) : 2;
    PresentedMonoid mp = presented_ex317(n);
    FamilyCandidate fc = ex317_family(mp, n);
    return family_instance(spec, "ex317", std::move(mp), std::move(fc));
  }
  if (spec == "prop436") return make_instance(spec, "prop436", prop436_normaliser());
  if (std::filesystem::exists(spec)) {
    return make_instance(spec, "table", normaliser_from_json(read_file(spec)));
  }
  throw ParseError("unknown instance '" + spec +
                   "' (expected abelian:n, braid:n, torus:e1,e2,..., lex:n, plactic:k, "
                   "atilde2, ex317:n, prop436 or a JSON file)");
}

std::vector<std::string> sample_instance_names() {
  return {"abelian:3", "braid:3", "braid:4", "torus:2,3", "lex:3",
          "plactic:3", "atilde2", "ex317:2", "prop436"};
}

}  // namespace garnorm
