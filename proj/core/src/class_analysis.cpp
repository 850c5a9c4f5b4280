#include "garnorm/class_analysis.hpp"

#include <array>
#include <map>

#include "garnorm/parallel.hpp"

namespace garnorm {

std::string to_string(Tri t) {
  switch (t) {
    case Tri::No:
      return "no";
    case Tri::Yes:
      return "yes";
    case Tri::Inconclusive:
      return "inconclusive";
  }
  return "?";
}

std::string to_string(Side s) { return s == Side::Left ? "left" : "right"; }

Side parse_side(std::string_view s) {
  if (s == "left") return Side::Left;
  if (s == "right") return Side::Right;
  throw ParseError("side must be 'left' or 'right', got '" + std::string(s) + "'");
}

Word alternating_normalize(const Normaliser& nz, const Word& w, int start, int m) {
  if (w.size() != 3) throw RangeError("alternating normalisation needs a word of length 3");
  if (start != 1 && start != 2) throw RangeError("alternating start must be 1 or 2");
  if (m < 0) throw RangeError("alternating length must be non-negative");
  const auto bar = [&nz](Letter s, Letter t) { return nz.bar(s, t); };
  return apply_sequence(bar, w, alternating_schedule(start, m));
}

namespace {

using Triple = std::array<Letter, 3>;

void step(const Normaliser& nz, Triple& x, int pos) {
  const LetterPair r = nz.bar(x[pos - 1], x[pos]);
  x[pos - 1] = r.first;
  x[pos] = r.second;
}

/// trace[m] = N̄ applied along the alternating schedule of length m.
std::vector<Triple> alternating_trace(const Normaliser& nz, Triple x, int start, int len) {
  std::vector<Triple> trace{x};
  int pos = start;
  for (int m = 1; m <= len; ++m) {
    step(nz, x, pos);
    trace.push_back(x);
    pos = 3 - pos;
  }
  return trace;
}

struct ClassChunk {
  int left = 0;
  int right = 0;
  std::optional<Word> left_witness;
  std::optional<Word> right_witness;
  std::vector<char> left_holds;
  std::vector<char> right_holds;
};

}  // namespace

std::string format_class(const ClassReport& r) {
  auto side = [](const ClassBound& b) {
    return b.capped ? ">=" + std::to_string(b.value + 1) : std::to_string(b.value);
  };
  return "(" + side(r.left) + "," + side(r.right) + ")";
}

ClassReport compute_class(const Normaliser& nz, int cap) {
  if (cap < 0) throw RangeError("class cap must be non-negative");
  const std::size_t n = nz.letter_count();
  const std::size_t total = n * n * n;
  std::vector<ClassChunk> chunks(std::max<std::size_t>(default_workers(), 1));
  parallel_chunks(total, [&](std::size_t c, std::size_t b, std::size_t e) {
    ClassChunk& ch = chunks[c];
    ch.left_holds.assign(static_cast<std::size_t>(cap) + 1, 1);
    ch.right_holds.assign(static_cast<std::size_t>(cap) + 1, 1);
    for (std::size_t i = b; i < e; ++i) {
      const Word w = word_from_index(i, n, 3);
      const Word target_word = normalize_oracle(nz, w);
      const Triple target{target_word[0], target_word[1], target_word[2]};
      const Triple x{w[0], w[1], w[2]};
      const auto a1 = alternating_trace(nz, x, 1, cap + 1);
      const auto a2 = alternating_trace(nz, x, 2, cap + 1);
      auto first_hit = [&](const std::vector<Triple>& tr) {
        for (int m = 0; m <= cap; ++m) {
          if (tr[static_cast<std::size_t>(m)] == target) return m;
        }
        return cap + 1;
      };
      const int ml = first_hit(a1);
      const int mr = first_hit(a2);
      if (!ch.left_witness || ml > ch.left) {
        ch.left = ml;
        ch.left_witness = w;
      }
      if (!ch.right_witness || mr > ch.right) {
        ch.right = mr;
        ch.right_witness = w;
      }
      for (int k = 0; k <= cap; ++k) {
        const auto u = static_cast<std::size_t>(k);
        if (!(a1[u] == a1[u + 1] && a1[u + 1] == a2[u + 1])) ch.left_holds[u] = 0;
        if (!(a2[u] == a2[u + 1] && a2[u + 1] == a1[u + 1])) ch.right_holds[u] = 0;
      }
    }
  });

  ClassReport rep;
  rep.cap = cap;
  std::vector<char> left_holds(static_cast<std::size_t>(cap) + 1, 1);
  std::vector<char> right_holds(static_cast<std::size_t>(cap) + 1, 1);
  int left = 0;
  int right = 0;
  for (const ClassChunk& ch : chunks) {
    if (ch.left_holds.empty()) continue;  // chunk not used
    if (!rep.left.witness || ch.left > left) {
      left = ch.left;
      rep.left.witness = ch.left_witness;
    }
    if (!rep.right.witness || ch.right > right) {
      right = ch.right;
      rep.right.witness = ch.right_witness;
    }
    for (std::size_t k = 0; k <= static_cast<std::size_t>(cap); ++k) {
      left_holds[k] = static_cast<char>(left_holds[k] && ch.left_holds[k]);
      right_holds[k] = static_cast<char>(right_holds[k] && ch.right_holds[k]);
    }
  }
  rep.left.capped = left > cap;
  rep.left.value = std::min(left, cap);
  rep.right.capped = right > cap;
  rep.right.value = std::min(right, cap);
  for (int k = 0; k <= cap; ++k) {
    if (left_holds[static_cast<std::size_t>(k)]) {
      rep.left_from_map = k;
      break;
    }
  }
  for (int k = 0; k <= cap; ++k) {
    if (right_holds[static_cast<std::size_t>(k)]) {
      rep.right_from_map = k;
      break;
    }
  }
  auto agrees = [](const ClassBound& b, const std::optional<int>& m) {
    return b.capped ? !m.has_value() : (m.has_value() && *m == b.value);
  };
  rep.map_identities_agree = agrees(rep.left, rep.left_from_map) && agrees(rep.right, rep.right_from_map);
  return rep;
}

DominoReport check_domino(const Normaliser& nz, Side side) {
  const std::size_t n = nz.letter_count();
  DominoReport rep;
  rep.side = side;
  std::vector<std::optional<DominoCounterexample>> found(std::max<std::size_t>(default_workers(), 1));
  std::vector<std::uint64_t> counts(found.size(), 0);
  parallel_chunks(n, [&](std::size_t c, std::size_t b, std::size_t e) {
    for (std::size_t outer = b; outer < e; ++outer) {
      for (Letter x = 0; x < n; ++x) {
        for (Letter y = 0; y < n; ++y) {
          if (side == Side::Left) {
            const auto t0 = static_cast<Letter>(outer);
            const Letter s1 = x;
            const Letter s2 = y;
            if (!nz.map().is_fixed(s1, s2)) continue;
            ++counts[c];
            const auto [s1p, t1] = nz.bar(t0, s1);
            const auto [s2p, t2] = nz.bar(t1, s2);
            if (!nz.map().is_fixed(s1p, s2p)) {
              found[c] = DominoCounterexample{s1, s2, s1p, s2p, t0, t1, t2};
              return;
            }
          } else {
            const auto s1 = static_cast<Letter>(outer);
            const Letter s2 = x;
            const Letter t2 = y;
            if (!nz.map().is_fixed(s1, s2)) continue;
            ++counts[c];
            const auto [t1, s2p] = nz.bar(s2, t2);
            const auto [t0, s1p] = nz.bar(s1, t1);
            if (!nz.map().is_fixed(s1p, s2p)) {
              found[c] = DominoCounterexample{s1, s2, s1p, s2p, t0, t1, t2};
              return;
            }
          }
        }
      }
    }
  });
  for (auto k : counts) rep.tuples_checked += k;
  for (auto& f : found) {
    if (f) {
      rep.valid = false;
      rep.counterexample = f;
      break;
    }
  }
  return rep;
}

Tri letter_divides(const Normaliser& nz, Letter s, Letter sp) {
  if (s == sp) return Tri::Yes;
  const auto e = nz.neutral();
  if (!e) return Tri::No;
  for (Letter t = 0; t < nz.letter_count(); ++t) {
    if (nz.bar(s, t) == LetterPair{sp, *e}) return Tri::Yes;
  }
  return Tri::Inconclusive;
}

DivisibilityOracle normaliser_divisibility(const Normaliser& nz) {
  return [nz](Letter s, Letter sp) { return letter_divides(nz, s, sp); };
}

LeftWeightedReport check_left_weighted(const Normaliser& nz, const DivisibilityOracle& div) {
  LeftWeightedReport rep;
  const std::size_t n = nz.letter_count();
  std::map<LetterPair, Tri> memo;
  for (Letter s = 0; s < n; ++s) {
    for (Letter t = 0; t < n; ++t) {
      const auto [sp, tp] = nz.bar(s, t);
      const LetterPair key{s, sp};
      auto it = memo.find(key);
      if (it == memo.end()) {
        it = memo.emplace(key, div(s, sp)).first;
        if (it->second == Tri::Inconclusive) rep.inconclusive.push_back(key);
      }
      if (it->second == Tri::No) rep.violations.push_back({s, t, sp, tp});
    }
  }
  if (!rep.violations.empty()) {
    rep.status = Tri::No;
  } else if (!rep.inconclusive.empty()) {
    rep.status = Tri::Inconclusive;
  }
  return rep;
}

std::string GarsideVerdict::text() const {
  switch (kind) {
    case Kind::Garside:
      return "GARSIDE";
    case Kind::Inconclusive:
      return "INCONCLUSIVE";
    case Kind::NotGarside: {
      std::string out = "NOT-GARSIDE (";
      for (std::size_t i = 0; i < failed.size(); ++i) out += (i ? ", " : "") + failed[i];
      return out + ")";
    }
  }
  return "?";
}

GarsideVerdict garside_characterise(const Normaliser& nz, const DivisibilityOracle& div,
                                    int cap) {
  GarsideVerdict v;
  v.klass = compute_class(nz, cap);
  const bool class_ok = v.klass.finite() && v.klass.left.value <= 4 && v.klass.right.value <= 3;
  if (!class_ok) v.failed.push_back("class");
  v.weighted = check_left_weighted(nz, div);
  if (v.weighted.status == Tri::No) v.failed.push_back("left-weighted");
  if (!v.failed.empty()) {
    v.kind = GarsideVerdict::Kind::NotGarside;
  } else if (v.weighted.status == Tri::Inconclusive) {
    v.kind = GarsideVerdict::Kind::Inconclusive;
  }
  return v;
}

namespace {

/// Representation of a word's evaluation that is equal exactly when the
/// evaluations are.
Word evaluation_key(const Normaliser& nz, const Word& w) {
  return nz.neutral() ? geodesic_normal_form(nz, w) : normal_form(nz, w);
}

std::optional<std::size_t> fellow_gap(const Normaliser& nz, Side side, const Word& w, Letter t) {
  const std::size_t p = w.size();
  const Word nw = normal_form(nz, w);
  const std::size_t n = nz.letter_count();
  if (side == Side::Left) {
    const Word nt = normal_form(nz, Word{t}.concat(w));
    for (std::size_t i = 1; i <= p; ++i) {
      const Word target = evaluation_key(nz, Word{t}.concat(nw.sub(0, i)));
      const Word prefix = nt.sub(0, i);
      bool ok = false;
      for (Letter ti = 0; ti < n && !ok; ++ti) {
        ok = evaluation_key(nz, prefix.concat(Word{ti})) == target;
      }
      if (!ok) return i;
    }
  } else {
    const Word nt = normal_form(nz, w.concat(Word{t}));
    for (std::size_t i = 1; i <= p; ++i) {
      const Word target = evaluation_key(nz, nw.sub(p - i, i).concat(Word{t}));
      const Word suffix = nt.sub(p + 1 - i, i);
      bool ok = false;
      for (Letter ti = 0; ti < n && !ok; ++ti) {
        ok = evaluation_key(nz, Word{ti}.concat(suffix)) == target;
      }
      if (!ok) return i;
    }
  }
  return std::nullopt;
}

}  // namespace

FellowReport check_fellow_traveller(const Normaliser& nz, Side side, std::size_t max_len,
                                    const AxiomOptions& opts) {
  FellowReport rep;
  rep.side = side;
  const std::size_t k = nz.letter_count();
  for (std::size_t len = 1; len <= max_len; ++len) {
    const auto count = word_count(k, len, opts.exhaustive_limit);
    const bool exhaustive = count.has_value();
    if (!exhaustive) rep.exhaustive = false;
    const std::uint64_t total = exhaustive ? *count : opts.samples;
    std::vector<std::optional<FellowViolation>> found(std::max<std::size_t>(default_workers(), 1));
    std::vector<std::uint64_t> cases(found.size(), 0);
    parallel_chunks(static_cast<std::size_t>(total), [&](std::size_t c, std::size_t b,
                                                        std::size_t e) {
      for (std::size_t i = b; i < e; ++i) {
        const Word w = exhaustive ? word_from_index(i, k, len) : sample_word(opts.seed, k, len, i);
        for (Letter t = 0; t < k; ++t) {
          ++cases[c];
          if (auto gap = fellow_gap(nz, side, w, t)) {
            found[c] = FellowViolation{w, t, *gap};
            return;
          }
        }
      }
    });
    for (auto x : cases) rep.cases += x;
    for (auto& f : found) {
      if (f) {
        rep.passed = false;
        rep.violation = f;
        return rep;
      }
    }
  }
  return rep;
}

}  // namespace garnorm
