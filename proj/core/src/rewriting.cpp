#include "garnorm/rewriting.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <random>
#include <unordered_map>
#include <unordered_set>

#include "garnorm/class_analysis.hpp"

namespace garnorm {

RewriteSystem::RewriteSystem(Alphabet alphabet, std::vector<Rule> rules)
    : alphabet_(std::move(alphabet)), rules_(std::move(rules)) {
  const std::size_t n = alphabet_.size();
  std::sort(rules_.begin(), rules_.end(), [](const Rule& a, const Rule& b) {
    return std::pair(a.s, a.t) < std::pair(b.s, b.t);
  });
  index_.assign(n * n, -1);
  for (std::size_t i = 0; i < rules_.size(); ++i) {
    const Rule& r = rules_[i];
    if (r.s >= n || r.t >= n) throw RangeError("rule uses a letter outside the alphabet");
    if (r.rhs.size() > 2) throw ConfigurationError("rule right sides have length at most 2");
    for (Letter x : r.rhs) {
      if (x >= n) throw RangeError("rule uses a letter outside the alphabet");
    }
    int& slot = index_[static_cast<std::size_t>(r.s) * n + r.t];
    if (slot != -1) {
      throw ConfigurationError("two rules share the left side " + alphabet_.name(r.s) + "|" +
                               alphabet_.name(r.t));
    }
    slot = static_cast<int>(i);
  }
}

bool RewriteSystem::length_preserving() const {
  return std::all_of(rules_.begin(), rules_.end(), [](const Rule& r) { return r.rhs.size() == 2; });
}

RewriteSystem system_of(const Normaliser& nz) {
  std::vector<Rule> rules;
  for (const auto& [lhs, rhs] : nz.map().non_identity_entries()) {
    rules.push_back({lhs.first, lhs.second, Word{rhs.first, rhs.second}});
  }
  return RewriteSystem(nz.alphabet(), std::move(rules));
}

Normaliser normaliser_of(const RewriteSystem& r, std::size_t verify_len,
                         std::optional<std::string> neutral) {
  if (!r.length_preserving()) {
    throw ConfigurationError("only length-preserving quadratic systems define a normaliser");
  }
  for (const Rule& rule : r.rules()) {
    const std::string lhs = r.alphabet().name(rule.s) + "|" + r.alphabet().name(rule.t);
    if (rule.rhs == Word{rule.s, rule.t}) throw ConfigurationError("identity rule " + lhs);
    if (r.rule_index(rule.rhs[0], rule.rhs[1]) != -1) {
      throw ConfigurationError("system is not reduced: the right side of " + lhs +
                               " is itself a left side");
    }
  }
  std::map<LetterPair, LetterPair> table;
  for (const Rule& rule : r.rules()) {
    table.emplace(LetterPair{rule.s, rule.t}, LetterPair{rule.rhs[0], rule.rhs[1]});
  }
  Alphabet alphabet = neutral ? Alphabet(r.alphabet().names(), *neutral) : r.alphabet();
  const QuadraticMap map = QuadraticMap::from_pairs(alphabet, table);
  // Unique normal forms for every bounded word; the oracle throws otherwise.
  const Normaliser probe(map, ClassPair{1000, 1000});
  const std::size_t k = alphabet.size();
  for (std::size_t len = 2; len <= verify_len; ++len) {
    for_each_word(k, len, [&](const Word& w) { normalize_oracle(probe, w); });
  }
  const ClassReport cls = compute_class(probe);
  const ClassPair declared = cls.finite() ? cls.pair() : ClassPair{cls.cap + 1, cls.cap + 1};
  return Normaliser(map, declared);
}

RewriteSystem erase_variant(const RewriteSystem& r, Letter e) {
  const auto& a = r.alphabet();
  if (e >= a.size()) throw RangeError("neutral letter out of range");
  for (Letter s = 0; s < a.size(); ++s) {
    if (s == e) continue;
    const bool right_fixed = r.rule_index(s, e) == -1;
    const int left = r.rule_index(e, s);
    const bool left_swaps = left != -1 && r.rules()[static_cast<std::size_t>(left)].rhs == Word{s, e};
    if (!right_fixed || !left_swaps) {
      throw ConfigurationError("'" + a.name(e) + "' is not neutral for the system");
    }
  }
  std::vector<std::string> names;
  std::vector<Letter> remap(a.size(), 0);
  for (Letter s = 0; s < a.size(); ++s) {
    if (s == e) continue;
    remap[s] = static_cast<Letter>(names.size());
    names.push_back(a.name(s));
  }
  std::vector<Rule> rules;
  for (const Rule& rule : r.rules()) {
    if (rule.s == e || rule.t == e) continue;
    std::vector<Letter> rhs;
    for (Letter x : rule.rhs) {
      if (x != e) rhs.push_back(remap[x]);
    }
    rules.push_back({remap[rule.s], remap[rule.t], Word(std::move(rhs))});
  }
  return RewriteSystem(Alphabet(std::move(names)), std::move(rules));
}

std::string to_string(Strategy s) {
  switch (s) {
    case Strategy::Leftmost:
      return "leftmost";
    case Strategy::Rightmost:
      return "rightmost";
    case Strategy::Random:
      return "random";
    case Strategy::Exhaustive:
      return "exhaustive";
    case Strategy::Scripted:
      return "scripted";
  }
  return "?";
}

Strategy parse_strategy(std::string_view s) {
  for (Strategy x : {Strategy::Leftmost, Strategy::Rightmost, Strategy::Random,
                     Strategy::Exhaustive, Strategy::Scripted}) {
    if (s == to_string(x)) return x;
  }
  throw ParseError("unknown strategy '" + std::string(s) + "'");
}

std::string to_string(Derivation::Status s) {
  switch (s) {
    case Derivation::Status::Normal:
      return "normal";
    case Derivation::Status::Cycle:
      return "cycle";
    case Derivation::Status::StepLimit:
      return "step-limit";
    case Derivation::Status::Stopped:
      return "stopped";
  }
  return "?";
}

namespace {

/// 1-based positions where a rule applies.
void check_letters(const RewriteSystem& r, const Word& w) {
  for (Letter l : w) {
    if (l >= r.alphabet().size()) throw RangeError("word uses a letter outside the alphabet");
  }
}

std::vector<std::size_t> redexes(const RewriteSystem& r, const Word& w) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    if (r.rule_index(w[i], w[i + 1]) != -1) out.push_back(i + 1);
  }
  return out;
}

Step apply_rule(const RewriteSystem& r, const Word& w, std::size_t pos) {
  const int idx = r.rule_index(w[pos - 1], w[pos]);
  if (idx < 0) {
    throw RangeError("no rule applies at position " + std::to_string(pos));
  }
  const Rule& rule = r.rules()[static_cast<std::size_t>(idx)];
  Word after = w.sub(0, pos - 1).concat(rule.rhs).concat(w.sub(pos + 1, w.size() - pos - 1));
  return {pos, idx, std::move(after)};
}

Derivation exhaustive_derivation(const RewriteSystem& r, const Word& w, std::size_t max_states) {
  Exploration ex = explore(r, w, max_states);
  if (ex.shortest_cycle_through_start) return *ex.shortest_cycle_through_start;

  Derivation d;
  d.start = w;
  // Depth-first search: the first back edge yields a cycle; otherwise the
  // memoised longest path is followed.
  std::unordered_map<Word, int, WordHash> state;  // 1 on stack, 2 done
  std::unordered_map<Word, std::size_t, WordHash> longest;
  std::vector<Step> path;
  std::optional<Derivation> cyc;
  std::function<std::size_t(const Word&)> dfs = [&](const Word& x) -> std::size_t {
    state[x] = 1;
    std::size_t best = 0;
    for (std::size_t pos : redexes(r, x)) {
      if (cyc) break;
      Step st = apply_rule(r, x, pos);
      auto it = state.find(st.after);
      if (it != state.end() && it->second == 1) {
        Derivation c;
        c.start = w;
        c.steps = path;
        c.steps.push_back(st);
        c.end = st.after;
        c.status = Derivation::Status::Cycle;
        std::size_t first = 0;
        Word cur = w;
        while (cur != st.after) cur = c.steps[first++].after;
        c.cycle_start = first;
        cyc = std::move(c);
        break;
      }
      if (it == state.end()) {
        path.push_back(st);
        dfs(st.after);
        path.pop_back();
      }
      if (cyc) break;
      best = std::max(best, 1 + longest[st.after]);
    }
    longest[x] = best;
    state[x] = 2;
    return best;
  };
  dfs(w);
  if (cyc) return *cyc;
  Word cur = w;
  while (longest[cur] > 0) {
    for (std::size_t pos : redexes(r, cur)) {
      Step st = apply_rule(r, cur, pos);
      if (longest[st.after] + 1 == longest[cur]) {
        cur = st.after;
        d.steps.push_back(std::move(st));
        break;
      }
    }
  }
  d.end = cur;
  d.status = Derivation::Status::Normal;
  return d;
}

}  // namespace

Derivation rewrite(const RewriteSystem& r, const Word& w, const RewriteOptions& opts) {
  check_letters(r, w);
  if (opts.strategy == Strategy::Exhaustive) return exhaustive_derivation(r, w, opts.max_states);
  Derivation d;
  d.start = w;
  if (opts.strategy == Strategy::Random) d.seed = opts.seed;
  std::mt19937_64 rng(opts.seed);
  std::unordered_map<Word, std::size_t, WordHash> seen{{w, 0}};
  Word cur = w;
  std::size_t script_pos = 0;
  while (true) {
    const auto red = redexes(r, cur);
    if (red.empty()) {
      d.status = Derivation::Status::Normal;
      break;
    }
    if (d.steps.size() >= opts.max_steps) {
      d.status = Derivation::Status::StepLimit;
      break;
    }
    std::size_t pos = 0;
    switch (opts.strategy) {
      case Strategy::Leftmost:
        pos = red.front();
        break;
      case Strategy::Rightmost:
        pos = red.back();
        break;
      case Strategy::Random:
        pos = red[std::uniform_int_distribution<std::size_t>(0, red.size() - 1)(rng)];
        break;
      case Strategy::Scripted:
        if (script_pos >= opts.script.size()) {
          d.status = Derivation::Status::Stopped;
          d.end = cur;
          return d;
        }
        pos = opts.script[script_pos++];
        if (pos < 1 || pos + 1 > cur.size() || r.rule_index(cur[pos - 1], cur[pos]) == -1) {
          throw RangeError("no rule applies at scripted position " + std::to_string(pos));
        }
        break;
      case Strategy::Exhaustive:
        break;
    }
    Step st = apply_rule(r, cur, pos);
    cur = st.after;
    d.steps.push_back(std::move(st));
    auto [it, fresh] = seen.emplace(cur, d.steps.size());
    if (!fresh) {
      d.status = Derivation::Status::Cycle;
      d.cycle_start = it->second;
      break;
    }
  }
  d.end = cur;
  return d;
}

Exploration explore(const RewriteSystem& r, const Word& w, std::size_t max_states) {
  check_letters(r, w);
  Exploration ex;
  std::unordered_map<Word, std::size_t, WordHash> id{{w, 0}};
  std::vector<Word> nodes{w};
  std::vector<std::vector<std::pair<std::size_t, Step>>> edges(1);
  std::vector<std::optional<std::pair<std::size_t, Step>>> parent(1);
  std::optional<std::pair<std::size_t, Step>> closing;
  std::deque<std::size_t> queue{0};
  while (!queue.empty()) {
    const std::size_t u = queue.front();
    queue.pop_front();
    const Word x = nodes[u];
    const auto red = redexes(r, x);
    if (red.empty()) ex.normal_forms.push_back(x);
    for (std::size_t pos : red) {
      Step st = apply_rule(r, x, pos);
      auto it = id.find(st.after);
      std::size_t v;
      if (it == id.end()) {
        if (nodes.size() >= max_states) {
          ex.complete = false;
          continue;
        }
        v = nodes.size();
        id.emplace(st.after, v);
        nodes.push_back(st.after);
        edges.emplace_back();
        parent.emplace_back(std::make_pair(u, st));
        queue.push_back(v);
      } else {
        v = it->second;
      }
      if (v == 0 && !closing) closing = std::make_pair(u, st);
      edges[u].emplace_back(v, std::move(st));
    }
  }
  ex.reachable = nodes.size();
  std::sort(ex.normal_forms.begin(), ex.normal_forms.end());

  // Cycle detection by iterative colouring.
  std::vector<int> colour(nodes.size(), 0);
  for (std::size_t root = 0; root < nodes.size() && !ex.has_cycle; ++root) {
    if (colour[root]) continue;
    std::vector<std::pair<std::size_t, std::size_t>> stack{{root, 0}};
    colour[root] = 1;
    while (!stack.empty() && !ex.has_cycle) {
      auto& [u, k] = stack.back();
      if (k < edges[u].size()) {
        const std::size_t v = edges[u][k++].first;
        if (colour[v] == 1) {
          ex.has_cycle = true;
        } else if (colour[v] == 0) {
          colour[v] = 1;
          stack.emplace_back(v, 0);
        }
      } else {
        colour[u] = 2;
        stack.pop_back();
      }
    }
  }

  if (closing) {
    // BFS order makes the parent chain a shortest path to the closing node.
    Derivation d;
    d.start = w;
    std::vector<Step> rev{closing->second};
    std::size_t u = closing->first;
    while (parent[u]) {
      rev.push_back(parent[u]->second);
      u = parent[u]->first;
    }
    d.steps.assign(rev.rbegin(), rev.rend());
    d.end = w;
    d.status = Derivation::Status::Cycle;
    d.cycle_start = 0;
    ex.shortest_cycle_through_start = std::move(d);
  }
  return ex;
}

LongestDerivation longest_derivation(const RewriteSystem& r, std::size_t p,
                                     std::uint64_t max_words) {
  LongestDerivation res;
  const std::size_t n = r.alphabet().size();
  // Words are keyed in base n+1 with digit 0 as terminator, so erasure
  // systems (whose words shrink) share the memo.
  long double capacity = 1;
  for (std::size_t i = 0; i < p; ++i) capacity *= static_cast<long double>(n + 1);
  if (capacity > 9.0e18L) throw RangeError("longest_derivation: words too large to key");
  auto key = [n](const std::vector<Letter>& w) {
    std::uint64_t k = 0;
    for (Letter x : w) k = k * (n + 1) + x + 1;
    return k;
  };
  std::unordered_map<std::uint64_t, int> memo;  // -1 on stack
  bool cyclic = false;
  std::function<int(std::vector<Letter>&)> dfs = [&](std::vector<Letter>& w) -> int {
    const std::uint64_t k = key(w);
    if (auto it = memo.find(k); it != memo.end()) {
      if (it->second < 0) cyclic = true;
      return std::max(it->second, 0);
    }
    memo.emplace(k, -1);
    int best = 0;
    for (std::size_t i = 0; i + 1 < w.size() && !cyclic; ++i) {
      const int idx = r.rule_index(w[i], w[i + 1]);
      if (idx < 0) continue;
      const Word& rhs = r.rules()[static_cast<std::size_t>(idx)].rhs;
      std::vector<Letter> next(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(i));
      next.insert(next.end(), rhs.begin(), rhs.end());
      next.insert(next.end(), w.begin() + static_cast<std::ptrdiff_t>(i) + 2, w.end());
      best = std::max(best, 1 + dfs(next));
    }
    memo[k] = best;
    return best;
  };
  const auto total = word_count(n, p, max_words);
  if (!total) res.complete = false;
  const std::uint64_t count = total ? *total : max_words;
  std::size_t best = 0;
  for (std::uint64_t i = 0; i < count && !cyclic; ++i) {
    const Word w = word_from_index(i, n, p);
    std::vector<Letter> buf(w.begin(), w.end());
    const auto len = static_cast<std::size_t>(dfs(buf));
    ++res.words;
    if (cyclic) {
      res.witness = w;
      break;
    }
    if (!res.witness || len > best) {
      best = len;
      res.witness = w;
    }
  }
  if (!cyclic) res.length = best;
  return res;
}

}  // namespace garnorm
