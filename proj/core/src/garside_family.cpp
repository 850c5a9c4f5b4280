#include "garnorm/garside_family.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <mutex>
#include <set>
#include <unordered_set>

namespace garnorm {

bool grade_less(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

namespace {

struct GradeLess {
  bool operator()(const Word& a, const Word& b) const { return grade_less(a, b); }
};

using ElementSet = std::set<Element, GradeLess>;

std::string element_text(const PresentedMonoid& mp, const Element& e) {
  return mp.format(e);
}

}  // namespace

PresentedMonoid::PresentedMonoid(std::vector<std::string> atoms,
                                 std::vector<std::pair<Word, Word>> relations)
    : atoms_(std::move(atoms)), relations_(std::move(relations)), memo_(std::make_shared<Memo>()) {
  for (const auto& [l, r] : relations_) {
    if (l.size() != r.size()) {
      throw ConfigurationError("relation sides must have equal length");
    }
    for (Letter x : l.concat(r)) {
      if (x >= atoms_.size()) throw RangeError("relation uses an unknown atom");
    }
  }
}

PresentedMonoid PresentedMonoid::parse(
    std::vector<std::string> atoms,
    const std::vector<std::pair<std::string, std::string>>& relations) {
  PresentedMonoid bare(atoms, {});
  std::vector<std::pair<Word, Word>> rels;
  for (const auto& [l, r] : relations) {
    rels.emplace_back(bare.parse_atom_word(l), bare.parse_atom_word(r));
  }
  return PresentedMonoid(std::move(atoms), std::move(rels));
}

Word PresentedMonoid::parse_atom_word(std::string_view text) const {
  std::vector<Letter> out;
  if (text == "1") return Word();
  std::vector<std::pair<std::string, Letter>> spellings;
  for (Letter a = 0; a < atoms_.size(); ++a) {
    spellings.emplace_back(atoms_.name(a), a);
    const std::string alias = ascii_alias(atoms_.name(a));
    if (alias != atoms_.name(a)) spellings.emplace_back(alias, a);
  }
  std::size_t pos = 0;
  while (pos < text.size()) {
    if (text[pos] == '|' || text[pos] == ' ') {
      ++pos;
      continue;
    }
    if (text.substr(pos, 2) == "·") {
      pos += 2;
      continue;
    }
    std::size_t best_len = 0;
    Letter best = 0;
    for (const auto& [spelling, a] : spellings) {
      if (spelling.size() > best_len && text.substr(pos, spelling.size()) == spelling) {
        best_len = spelling.size();
        best = a;
      }
    }
    if (best_len == 0) {
      throw ParseError("unknown atom at '" + std::string(text.substr(pos)) + "'");
    }
    out.push_back(best);
    pos += best_len;
  }
  return Word(std::move(out));
}

std::string PresentedMonoid::format(const Word& w, bool ascii) const {
  if (w.empty()) return "1";
  std::string out;
  for (Letter a : w) out += ascii ? ascii_alias(atoms_.name(a)) : atoms_.name(a);
  return out;
}

const std::vector<Word>& PresentedMonoid::congruence_class(const Word& w) const {
  {
    std::shared_lock lock(memo_->mutex);
    auto it = memo_->classes.find(w);
    if (it != memo_->classes.end()) return *it->second;
  }
  std::unordered_set<Word, WordHash> seen{w};
  std::deque<Word> queue{w};
  while (!queue.empty()) {
    const Word x = std::move(queue.front());
    queue.pop_front();
    for (const auto& [l, r] : relations_) {
      for (int dir = 0; dir < 2; ++dir) {
        const Word& from = dir == 0 ? l : r;
        const Word& to = dir == 0 ? r : l;
        if (from.empty() || from.size() > x.size()) continue;
        for (std::size_t i = 0; i + from.size() <= x.size(); ++i) {
          if (!std::equal(from.begin(), from.end(), x.begin() + static_cast<std::ptrdiff_t>(i))) {
            continue;
          }
          std::vector<Letter> y(x.begin(), x.end());
          std::copy(to.begin(), to.end(), y.begin() + static_cast<std::ptrdiff_t>(i));
          Word yw(std::move(y));
          if (seen.insert(yw).second) queue.push_back(std::move(yw));
        }
      }
    }
  }
  auto members = std::make_shared<std::vector<Word>>(seen.begin(), seen.end());
  std::sort(members->begin(), members->end());
  std::unique_lock lock(memo_->mutex);
  auto it = memo_->classes.find(w);
  if (it != memo_->classes.end()) return *it->second;
  for (const Word& m : *members) memo_->classes.emplace(m, members);
  return *members;
}

bool PresentedMonoid::equal(const Word& w1, const Word& w2) const {
  return w1.size() == w2.size() && canonical(w1) == canonical(w2);
}

bool PresentedMonoid::left_divides(const Element& f, const Element& g) const {
  if (f.size() > g.size()) return false;
  const Element cf = canonical(f);
  for (const Word& v : congruence_class(g)) {
    if (canonical(v.sub(0, f.size())) == cf) return true;
  }
  return false;
}

bool PresentedMonoid::right_divides(const Element& f, const Element& g) const {
  if (f.size() > g.size()) return false;
  const Element cf = canonical(f);
  for (const Word& v : congruence_class(g)) {
    if (canonical(v.sub(g.size() - f.size(), f.size())) == cf) return true;
  }
  return false;
}

std::optional<Element> PresentedMonoid::left_quotient(const Element& f, const Element& g) const {
  if (f.size() > g.size()) return std::nullopt;
  const Element cf = canonical(f);
  for (const Word& v : congruence_class(g)) {
    if (canonical(v.sub(0, f.size())) == cf) {
      return canonical(v.sub(f.size(), g.size() - f.size()));
    }
  }
  return std::nullopt;
}

std::vector<Element> PresentedMonoid::left_divisors(const Element& g) const {
  ElementSet out;
  for (const Word& v : congruence_class(g)) {
    for (std::size_t k = 0; k <= v.size(); ++k) out.insert(canonical(v.sub(0, k)));
  }
  return {out.begin(), out.end()};
}

std::vector<Element> PresentedMonoid::right_divisors(const Element& g) const {
  ElementSet out;
  for (const Word& v : congruence_class(g)) {
    for (std::size_t k = 0; k <= v.size(); ++k) out.insert(canonical(v.sub(k, v.size() - k)));
  }
  return {out.begin(), out.end()};
}

std::vector<Element> PresentedMonoid::elements_of_grade(std::size_t grade) const {
  std::set<Element> out;
  for_each_word(atoms_.size(), grade, [&](const Word& w) { out.insert(canonical(w)); });
  return {out.begin(), out.end()};
}

LcmResult right_lcm(const PresentedMonoid& mp, const Element& f0, const Element& g0,
                    std::size_t bound) {
  const Element f = mp.canonical(f0);
  const Element g = mp.canonical(g0);
  LcmResult res;
  if (mp.left_divides(f, g)) {
    res.status = LcmStatus::Found;
    res.lcm = g;
    return res;
  }
  if (mp.left_divides(g, f)) {
    res.status = LcmStatus::Found;
    res.lcm = f;
    return res;
  }
  // Common right-multiples f·x of grade ≤ bound, smallest grade first.
  std::vector<Element> common;
  for (std::size_t d = std::max(f.size(), g.size()); d <= bound; ++d) {
    std::set<Element> at_grade;
    for_each_word(mp.atom_count(), d - f.size(), [&](const Word& x) {
      const Element h = mp.canonical(f.concat(x));
      if (!at_grade.contains(h) && mp.left_divides(g, h)) at_grade.insert(h);
    });
    common.insert(common.end(), at_grade.begin(), at_grade.end());
  }
  if (common.empty()) return res;
  std::vector<Element> minimal;
  for (const Element& c : common) {
    const bool has_smaller = std::any_of(common.begin(), common.end(), [&](const Element& d) {
      return d != c && d.size() < c.size() && mp.left_divides(d, c);
    });
    if (!has_smaller) minimal.push_back(c);
  }
  if (minimal.size() == 1) {
    const Element& c = minimal.front();
    const bool least = std::all_of(common.begin(), common.end(),
                                   [&](const Element& h) { return mp.left_divides(c, h); });
    if (least) {
      res.status = LcmStatus::Found;
      res.lcm = c;
      return res;
    }
  }
  res.status = LcmStatus::Ambiguous;
  res.minimal = std::move(minimal);
  return res;
}

std::size_t FamilyCandidate::size_with_unit() const {
  return members.size() + (contains(Element()) ? 0 : 1);
}

std::size_t FamilyCandidate::size_without_unit() const {
  return members.size() - (contains(Element()) ? 1 : 0);
}

bool FamilyCandidate::contains(const Element& e) const {
  return std::binary_search(members.begin(), members.end(), e, GradeLess{});
}

FamilyCandidate make_family(std::vector<Element> members) {
  members.emplace_back();
  std::sort(members.begin(), members.end(), GradeLess{});
  members.erase(std::unique(members.begin(), members.end()), members.end());
  FamilyCandidate fc;
  fc.members = std::move(members);
  return fc;
}

FamilyCandidate closure_smallest_garside(const PresentedMonoid& mp, std::size_t bound) {
  ElementSet family{Element()};
  for (Letter a = 0; a < mp.atom_count(); ++a) family.insert(Element{a});
  FamilyCandidate fc;
  fc.bound = bound;
  bool changed = true;
  while (changed) {
    ElementSet next = family;
    for (const Element& s : family) {
      for (Element& d : mp.right_divisors(s)) next.insert(std::move(d));
    }
    fc.lcm_searches_without_result = 0;
    fc.ambiguous_lcms = 0;
    const std::vector<Element> current(family.begin(), family.end());
    for (std::size_t i = 0; i < current.size(); ++i) {
      for (std::size_t j = i + 1; j < current.size(); ++j) {
        const LcmResult r = right_lcm(mp, current[i], current[j], bound);
        if (r.status == LcmStatus::Found) {
          next.insert(*r.lcm);
        } else if (r.status == LcmStatus::None) {
          ++fc.lcm_searches_without_result;
        } else {
          ++fc.ambiguous_lcms;
        }
      }
    }
    changed = next != family;
    family = std::move(next);
  }
  fc.members.assign(family.begin(), family.end());
  fc.divisor_closed = true;
  // A member at the bound means some lcm may have been cut off.
  fc.fixpoint_reached = fc.members.back().size() < bound;
  return fc;
}

namespace {

std::vector<Element> elements_up_to(const PresentedMonoid& mp, std::size_t bound) {
  std::vector<Element> out;
  for (std::size_t d = 0; d <= bound; ++d) {
    auto g = mp.elements_of_grade(d);
    out.insert(out.end(), g.begin(), g.end());
  }
  return out;
}

SNormalCheck check_pair_with(const PresentedMonoid& mp, const FamilyCandidate& family,
                             const Element& s1, const Element& s2, std::size_t f_bound,
                             bool closed, const std::vector<Element>& fs) {
  SNormalCheck res;
  res.f_bound = f_bound;
  for (const Element& f : fs) {
    const Element b = mp.multiply(f, s1);
    const Element a = mp.multiply(b, s2);
    const auto da = mp.left_divisors(a);
    const auto db = mp.left_divisors(b);
    for (const Element& s : family.members) {
      if (std::binary_search(da.begin(), da.end(), s, GradeLess{}) &&
          !std::binary_search(db.begin(), db.end(), s, GradeLess{})) {
        res.normal = false;
        res.s = s;
        res.f = f;
        break;
      }
    }
    if (!res.normal) break;
  }
  if (closed) {
    const Element prod = mp.multiply(s1, s2);
    bool head = true;
    for (const Element& s : family.members) {
      if (s != s1 && mp.left_divides(s1, s) && mp.left_divides(s, prod)) {
        head = false;
        break;
      }
    }
    res.head_condition = head;
    if (head != res.normal) {
      throw Error("S-normality checks disagree on " + mp.format(s1) + "|" + mp.format(s2));
    }
  }
  return res;
}

}  // namespace

SNormalCheck check_s_normal_pair(const PresentedMonoid& mp, const FamilyCandidate& family,
                                 const Element& s1, const Element& s2, std::size_t f_bound,
                                 bool closed) {
  return check_pair_with(mp, family, mp.canonical(s1), mp.canonical(s2), f_bound, closed,
                         elements_up_to(mp, f_bound));
}

bool is_s_normal_pair(const PresentedMonoid& mp, const FamilyCandidate& family,
                      const Element& s1, const Element& s2, std::size_t f_bound) {
  return check_s_normal_pair(mp, family, s1, s2, f_bound).normal;
}

std::optional<Element> s_head(const PresentedMonoid& mp, const FamilyCandidate& family,
                              const Element& g) {
  const auto divisors = mp.left_divisors(g);
  std::vector<Element> dividing;
  for (const Element& s : family.members) {
    if (std::binary_search(divisors.begin(), divisors.end(), s, GradeLess{})) {
      dividing.push_back(s);
    }
  }
  std::optional<Element> best;
  for (const Element& s : dividing) {
    const bool maximal = std::none_of(dividing.begin(), dividing.end(), [&](const Element& t) {
      return t != s && mp.left_divides(s, t);
    });
    if (!maximal) continue;
    if (best) return std::nullopt;
    best = s;
  }
  return best;
}

std::vector<Element> s_normal_decomposition(const PresentedMonoid& mp,
                                            const FamilyCandidate& family, const Element& g0) {
  std::vector<Element> out;
  Element g = mp.canonical(g0);
  while (!g.empty()) {
    const auto h = s_head(mp, family, g);
    if (!h) throw Error("S-head of " + element_text(mp, g) + " is not unique");
    if (h->empty()) throw Error("no member of S divides " + element_text(mp, g));
    out.push_back(*h);
    g = *mp.left_quotient(*h, g);
  }
  return out;
}

FamilyReport verify_garside_family(const PresentedMonoid& mp, const FamilyCandidate& family,
                                   std::size_t bound, std::size_t f_bound) {
  FamilyReport rep;
  rep.bound = bound;
  auto fail = [&](std::string what, const Element& w1, std::optional<Element> w2) {
    rep.passed = false;
    rep.failed = std::move(what);
    rep.witness = w1;
    rep.witness2 = std::move(w2);
    return rep;
  };
  for (const Element& s : family.members) {
    for (const Element& d : mp.right_divisors(s)) {
      if (!family.contains(d)) return fail("right-divisor", d, s);
    }
  }
  for (std::size_t i = 0; i < family.members.size(); ++i) {
    for (std::size_t j = i + 1; j < family.members.size(); ++j) {
      const auto& s = family.members[i];
      const auto& t = family.members[j];
      const LcmResult r = right_lcm(mp, s, t, bound);
      if (r.status == LcmStatus::Ambiguous) return fail("right-lcm", s, t);
      if (r.status == LcmStatus::Found && !family.contains(*r.lcm)) {
        return fail("right-lcm", s, t);
      }
    }
  }
  const auto fs = elements_up_to(mp, f_bound);
  std::map<std::pair<Element, Element>, bool> pair_memo;
  for (std::size_t d = 1; d <= bound; ++d) {
    for (const Element& g : mp.elements_of_grade(d)) {
      ++rep.elements_checked;
      std::vector<Element> dec;
      try {
        dec = s_normal_decomposition(mp, family, g);
      } catch (const Error&) {
        return fail("head", g, std::nullopt);
      }
      for (std::size_t k = 0; k + 1 < dec.size(); ++k) {
        const auto key = std::make_pair(dec[k], dec[k + 1]);
        auto it = pair_memo.find(key);
        if (it == pair_memo.end()) {
          const bool ok = check_pair_with(mp, family, dec[k], dec[k + 1], f_bound, true, fs).normal;
          it = pair_memo.emplace(key, ok).first;
        }
        if (!it->second) return fail("normal-pair", dec[k], dec[k + 1]);
      }
    }
  }
  return rep;
}

Normaliser family_to_normaliser(const PresentedMonoid& mp, const FamilyCandidate& family) {
  const auto& members = family.members;
  if (members.empty() || !members.front().empty()) {
    throw ConfigurationError("family must contain the unit");
  }
  std::vector<std::string> names;
  for (const Element& m : members) names.push_back(mp.format(m));
  Alphabet alphabet(names, std::string("1"));
  auto index_of = [&](const Element& e) -> Letter {
    auto it = std::lower_bound(members.begin(), members.end(), e, GradeLess{});
    if (it == members.end() || *it != e) {
      throw ConfigurationError("not a Garside family: " + mp.format(e) + " is not a member");
    }
    return static_cast<Letter>(it - members.begin());
  };
  std::map<LetterPair, LetterPair> table;
  for (Letter i = 0; i < members.size(); ++i) {
    for (Letter j = 0; j < members.size(); ++j) {
      const Element g = mp.multiply(members[i], members[j]);
      const auto h = s_head(mp, family, g);
      if (!h) {
        throw ConfigurationError("not a Garside family: S-head of " + mp.format(g) +
                                 " is not unique");
      }
      const Element rest = *mp.left_quotient(*h, g);
      const LetterPair out{index_of(*h), index_of(rest)};
      if (out != LetterPair{i, j}) table.emplace(LetterPair{i, j}, out);
    }
  }
  return Normaliser(QuadraticMap::from_pairs(std::move(alphabet), table), ClassPair{4, 3});
}

const Element& family_letter_element(const FamilyCandidate& family, Letter l) {
  return family.members.at(l);
}

PresentedMonoid presented_abelian(int n) {
  if (n < 1 || n > 10) throw RangeError("abelian presentation needs 1 <= n <= 10");
  std::vector<std::string> atoms;
  for (int k = 0; k < n; ++k) atoms.push_back(std::string(1, static_cast<char>('a' + k)));
  std::vector<std::pair<Word, Word>> rels;
  for (Letter i = 0; i < static_cast<Letter>(n); ++i) {
    for (Letter j = i + 1; j < static_cast<Letter>(n); ++j) rels.push_back({Word{i, j}, Word{j, i}});
  }
  return PresentedMonoid(std::move(atoms), std::move(rels));
}

PresentedMonoid presented_braid(int n) {
  if (n < 2 || n > 6) throw RangeError("braid presentation needs 2 <= n <= 6");
  std::vector<std::string> atoms;
  for (int k = 1; k < n; ++k) atoms.push_back("σ" + std::to_string(k));
  std::vector<std::pair<Word, Word>> rels;
  for (Letter i = 0; i + 1 < static_cast<Letter>(n); ++i) {
    for (Letter j = i + 1; j + 1 < static_cast<Letter>(n); ++j) {
      if (j == i + 1) {
        rels.push_back({Word{i, j, i}, Word{j, i, j}});
      } else {
        rels.push_back({Word{i, j}, Word{j, i}});
      }
    }
  }
  return PresentedMonoid(std::move(atoms), std::move(rels));
}

PresentedMonoid presented_atilde2() {
  return PresentedMonoid::parse({"σ1", "σ2", "σ3"}, {{"σ1σ2σ1", "σ2σ1σ2"},
                                                     {"σ2σ3σ2", "σ3σ2σ3"},
                                                     {"σ3σ1σ3", "σ1σ3σ1"}});
}

PresentedMonoid presented_ex317(int n) {
  if (n < 1) throw RangeError("ex317 presentation needs n >= 1");
  std::vector<Letter> lhs{0};
  lhs.insert(lhs.end(), static_cast<std::size_t>(n), 1);
  return PresentedMonoid({"a", "b"},
                         {{Word(lhs), Word(std::vector<Letter>(static_cast<std::size_t>(n) + 1, 1))}});
}

FamilyCandidate ex317_family(const PresentedMonoid& mp, int n) {
  std::vector<Element> members{Element{0}};
  for (int i = 1; i <= n + 1; ++i) {
    members.push_back(mp.canonical(Word(std::vector<Letter>(static_cast<std::size_t>(i), 1))));
  }
  return make_family(std::move(members));
}

}  // namespace garnorm
