#include "garnorm/normaliser.hpp"

#include <mutex>
#include <sstream>
#include <unordered_set>

#include "garnorm/parallel.hpp"

namespace garnorm {

namespace {

std::size_t g_workers = 0;

std::vector<Letter> schedule_left(const Normaliser& nz, std::vector<Letter> buf) {
  const std::size_t p = buf.size();
  for (std::size_t start = p; start-- > 1;) {
    for (std::size_t i = start; i + 1 <= p; ++i) {
      const LetterPair r = nz.bar(buf[i - 1], buf[i]);
      buf[i - 1] = r.first;
      buf[i] = r.second;
    }
  }
  return buf;
}

std::vector<Letter> schedule_right(const Normaliser& nz, std::vector<Letter> buf) {
  const std::size_t p = buf.size();
  for (std::size_t top = 1; top < p; ++top) {
    for (std::size_t i = top; i >= 1; --i) {
      const LetterPair r = nz.bar(buf[i - 1], buf[i]);
      buf[i - 1] = r.first;
      buf[i] = r.second;
    }
  }
  return buf;
}

bool all_fixed(const Normaliser& nz, const std::vector<Letter>& buf) {
  for (std::size_t i = 0; i + 1 < buf.size(); ++i) {
    if (!nz.map().is_fixed(buf[i], buf[i + 1])) return false;
  }
  return true;
}

Word checked(const Normaliser& nz, const Word& input, std::vector<Letter> out,
             const char* schedule) {
  if (!all_fixed(nz, out)) {
    const std::string text = format_word(nz.alphabet(), input);
    throw ClassViolation(std::string("the ") + schedule +
                             " schedule does not normalise '" + text +
                             "': the normaliser is not of the required class",
                         text);
  }
  return Word(std::move(out));
}

/// N along the route, without the normality postcondition.
Word evaluate_unchecked(const Normaliser& nz, const Word& w) {
  switch (nz.route()) {
    case Route::Left:
      return Word(schedule_left(nz, w.letters()));
    case Route::Right:
      return Word(schedule_right(nz, w.letters()));
    case Route::Exhaustive:
      return normalize_oracle(nz, w);
  }
  return w;
}

}  // namespace

std::size_t default_workers() {
  if (g_workers != 0) return g_workers;
  return std::max<std::size_t>(1, std::thread::hardware_concurrency());
}

void set_default_workers(std::size_t n) { g_workers = n; }

std::string to_string(Route r) {
  switch (r) {
    case Route::Left:
      return "left";
    case Route::Right:
      return "right";
    case Route::Exhaustive:
      return "exhaustive";
  }
  return "?";
}

Normaliser::Normaliser(QuadraticMap map, std::optional<ClassPair> declared)
    : map_(std::move(map)), declared_(declared) {
  if (auto e = neutral()) {
    const auto n = static_cast<Letter>(letter_count());
    for (Letter s = 0; s < n; ++s) {
      const LetterPair expect{s, *e};
      if (map_(s, *e) != expect || map_(*e, s) != expect) {
        throw ConfigurationError(
            "letter '" + alphabet().name(*e) + "' is not neutral: pair with '" +
            alphabet().name(s) + "' does not normalise to '" + alphabet().name(s) +
            "|" + alphabet().name(*e) + "'");
      }
    }
  }
}

Route Normaliser::route() const noexcept {
  if (!declared_) return Route::Left;
  if (declared_->right <= 3) return Route::Left;
  if (declared_->left <= 3) return Route::Right;
  return Route::Exhaustive;
}

bool is_normal(const Normaliser& nz, const Word& w) {
  return all_fixed(nz, w.letters());
}

Word normalize(const Normaliser& nz, const Word& w) {
  if (w.size() < 2) return w;
  return checked(nz, w, schedule_left(nz, w.letters()), "delta");
}

Word normalize_right(const Normaliser& nz, const Word& w) {
  if (w.size() < 2) return w;
  return checked(nz, w, schedule_right(nz, w.letters()), "delta-tilde");
}

Word normalize_oracle(const Normaliser& nz, const Word& w, std::size_t max_states) {
  std::unordered_set<Word, WordHash> seen{w};
  std::vector<Word> stack{w};
  std::vector<Word> normals;
  while (!stack.empty()) {
    Word cur = std::move(stack.back());
    stack.pop_back();
    bool any = false;
    for (std::size_t i = 0; i + 1 < cur.size(); ++i) {
      const LetterPair r = nz.bar(cur[i], cur[i + 1]);
      if (r == LetterPair{cur[i], cur[i + 1]}) continue;
      any = true;
      Word next = cur.with_pair(i, r);
      if (seen.insert(next).second) {
        if (seen.size() > max_states) {
          throw Divergence("exhaustive normalisation of '" +
                           format_word(nz.alphabet(), w) +
                           "' exceeded its state budget");
        }
        stack.push_back(std::move(next));
      }
    }
    if (!any) {
      normals.push_back(cur);
      if (normals.size() > 1) {
        throw NotANormalisation("'" + format_word(nz.alphabet(), w) +
                                "' reaches two normal words: '" +
                                format_word(nz.alphabet(), normals[0]) + "' and '" +
                                format_word(nz.alphabet(), normals[1]) + "'");
      }
    }
  }
  if (normals.empty()) {
    throw Divergence("no normal word is reachable from '" +
                     format_word(nz.alphabet(), w) + "'");
  }
  return normals.front();
}

Word normal_form(const Normaliser& nz, const Word& w) {
  switch (nz.route()) {
    case Route::Left:
      return normalize(nz, w);
    case Route::Right:
      return normalize_right(nz, w);
    case Route::Exhaustive:
      return normalize_oracle(nz, w);
  }
  return w;
}

Word geodesic_normal_form(const Normaliser& nz, const Word& w) {
  const auto e = nz.neutral();
  if (!e) throw ConfigurationError("geodesic normal form needs a neutral letter");
  return erase_letter(normal_form(nz, w), *e);
}

bool word_problem(const Normaliser& nz, const Word& w1, const Word& w2) {
  if (nz.neutral()) {
    return geodesic_normal_form(nz, w1) == geodesic_normal_form(nz, w2);
  }
  if (w1.size() != w2.size()) return false;
  return normal_form(nz, w1) == normal_form(nz, w2);
}

namespace {

std::optional<AxiomViolation> check_word(const Normaliser& nz, const Word& x,
                                         std::size_t max_len) {
  auto fail = [&](const char* axiom, std::string detail) {
    return AxiomViolation{axiom, x, std::move(detail)};
  };
  const auto& a = nz.alphabet();
  Word nx;
  try {
    nx = evaluate_unchecked(nz, x);
  } catch (const Error& err) {
    return fail("evaluation", err.what());
  }
  if (nx.size() != x.size()) {
    return fail("length", "N changes the length to " + std::to_string(nx.size()));
  }
  if (x.size() == 1 && nx != x) {
    return fail("singleton", "N(" + format_word(a, x) + ") = " + format_word(a, nx));
  }
  try {
    for (std::size_t i = 0; i < x.size(); ++i) {
      for (std::size_t j = i + 2; j <= x.size(); ++j) {
        const Word inner = evaluate_unchecked(nz, x.sub(i, j - i));
        const Word y = x.sub(0, i).concat(inner).concat(x.sub(j, x.size() - j));
        const Word ny = evaluate_unchecked(nz, y);
        if (ny != nx) {
          std::ostringstream os;
          os << "N(u|N(w)|v) = " << format_word(a, ny) << " but N(u|w|v) = "
             << format_word(a, nx) << " for w at positions " << i + 1 << ".." << j;
          return fail("factor", os.str());
        }
      }
    }
    if (const auto e = nz.neutral(); e && x.size() + 1 <= max_len) {
      const Word expect = nx.concat(Word{*e});
      const Word right = evaluate_unchecked(nz, x.concat(Word{*e}));
      const Word left = evaluate_unchecked(nz, Word{*e}.concat(x));
      if (right != expect || left != expect) {
        return fail("neutral", "N(w|e) = " + format_word(a, right) + ", N(e|w) = " +
                                   format_word(a, left) + ", N(w)|e = " +
                                   format_word(a, expect));
      }
    }
  } catch (const Error& err) {
    return fail("evaluation", err.what());
  }
  return std::nullopt;
}

}  // namespace

AxiomReport verify_axioms(const Normaliser& nz, const AxiomOptions& opts) {
  AxiomReport report;
  const std::size_t k = nz.letter_count();
  for (std::size_t len = 0; len <= opts.max_len; ++len) {
    const auto count = word_count(k, len, opts.exhaustive_limit);
    const bool exhaustive = count.has_value();
    if (!exhaustive) report.exhaustive = false;
    const std::uint64_t n = exhaustive ? *count : opts.samples;

    // Per-chunk first violation; the earliest chunk wins.
    std::vector<std::optional<AxiomViolation>> found(default_workers());
    std::vector<std::uint64_t> checked(default_workers(), 0);
    parallel_chunks(static_cast<std::size_t>(n), [&](std::size_t c, std::size_t b,
                                                    std::size_t e) {
      for (std::size_t i = b; i < e; ++i) {
        Word x;
        if (exhaustive) {
          x = word_from_index(i, k, len);
        } else {
          x = sample_word(opts.seed, k, len, i);
        }
        ++checked[c];
        if (auto v = check_word(nz, x, opts.max_len)) {
          found[c] = std::move(v);
          return;
        }
      }
    });
    for (auto c : checked) report.words_checked += c;
    for (auto& f : found) {
      if (f) {
        report.passed = false;
        report.violation = std::move(f);
        return report;
      }
    }
  }
  return report;
}

std::vector<Relation> presentation(const Normaliser& nz, bool mod_e) {
  const auto e = nz.neutral();
  if (mod_e && !e) {
    throw ConfigurationError("presentation mod e needs a neutral letter");
  }
  std::vector<Relation> out;
  const auto n = static_cast<Letter>(nz.letter_count());
  for (Letter s = 0; s < n; ++s) {
    for (Letter t = 0; t < n; ++t) {
      if (mod_e && (s == *e || t == *e)) continue;
      const LetterPair r = nz.bar(s, t);
      Word lhs{s, t};
      Word rhs{r.first, r.second};
      if (mod_e) rhs = erase_letter(rhs, *e);
      if (lhs != rhs) out.push_back({std::move(lhs), std::move(rhs)});
    }
  }
  return out;
}

NormalAutomaton::NormalAutomaton(const Normaliser& nz)
    : alphabet_(nz.alphabet()), letters_(nz.letter_count()),
      allowed_(letters_ * letters_, false) {
  for (std::size_t s = 0; s < letters_; ++s) {
    for (std::size_t t = 0; t < letters_; ++t) {
      allowed_[s * letters_ + t] =
          nz.map().is_fixed(static_cast<Letter>(s), static_cast<Letter>(t));
    }
  }
}

std::size_t NormalAutomaton::transition_count() const {
  std::size_t c = letters_;  // from START
  for (bool b : allowed_) c += b ? 1 : 0;
  return c;
}

bool NormalAutomaton::accepts(const Word& w) const {
  // START reads any letter; afterwards the state is the last letter read.
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    if (!has_transition(w[i], w[i + 1])) return false;
  }
  return true;
}

std::string NormalAutomaton::to_dot(bool ascii) const {
  auto name = [&](std::size_t l) {
    const std::string& n = alphabet_.name(static_cast<Letter>(l));
    return ascii ? ascii_alias(n) : n;
  };
  auto quote = [](const std::string& s) {
    std::string q = "\"";
    for (char c : s) {
      if (c == '"' || c == '\\') q += '\\';
      q += c;
    }
    return q + "\"";
  };
  std::ostringstream os;
  os << "digraph normal_words {\n  rankdir=LR;\n  START [shape=point];\n";
  for (std::size_t s = 0; s < letters_; ++s) {
    os << "  " << quote(name(s)) << " [shape=doublecircle];\n";
  }
  for (std::size_t t = 0; t < letters_; ++t) {
    os << "  START -> " << quote(name(t)) << " [label=" << quote(name(t)) << "];\n";
  }
  for (std::size_t s = 0; s < letters_; ++s) {
    for (std::size_t t = 0; t < letters_; ++t) {
      if (allowed_[s * letters_ + t]) {
        os << "  " << quote(name(s)) << " -> " << quote(name(t))
           << " [label=" << quote(name(t)) << "];\n";
      }
    }
  }
  os << "}\n";
  return os.str();
}

NormalAutomaton normal_word_automaton(const Normaliser& nz) { return NormalAutomaton(nz); }

FromMapResult from_quadratic_map(const QuadraticMap& f, std::size_t verify_len) {
  FromMapResult result;
  const auto& a = f.alphabet();
  if (auto bad = f.idempotence_violation()) {
    result.witness = Word{bad->first, bad->second};
    result.diagnostic = "map is not idempotent on '" + format_word(a, *result.witness) + "'";
    return result;
  }
  const auto n = static_cast<Letter>(f.letter_count());
  auto at = [&](std::vector<Letter> v, std::span<const std::size_t> u) {
    for (std::size_t i : u) {
      const LetterPair r = f(v[i - 1], v[i]);
      v[i - 1] = r.first;
      v[i] = r.second;
    }
    return v;
  };
  const std::size_t s212[] = {2, 1, 2};
  const std::size_t s2121[] = {2, 1, 2, 1};
  const std::size_t s1212[] = {1, 2, 1, 2};
  for (Letter x = 0; x < n; ++x) {
    for (Letter y = 0; y < n; ++y) {
      for (Letter z = 0; z < n; ++z) {
        const std::vector<Letter> w{x, y, z};
        const auto a212 = at(w, s212);
        if (a212 != at(w, s2121) || a212 != at(w, s1212)) {
          result.witness = Word(w);
          result.diagnostic = "F212 = F2121 = F1212 fails on '" +
                              format_word(a, *result.witness) + "'";
          return result;
        }
      }
    }
  }
  Normaliser nz(f, ClassPair{4, 3});
  AxiomOptions opts;
  opts.max_len = verify_len;
  result.axioms = verify_axioms(nz, opts);
  if (!result.axioms.passed) {
    result.witness = result.axioms.violation->word;
    result.diagnostic = "axiom '" + result.axioms.violation->axiom +
                        "' fails: " + result.axioms.violation->detail;
    return result;
  }
  result.normaliser = std::move(nz);
  return result;
}

}  // namespace garnorm
