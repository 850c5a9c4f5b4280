#include "garnorm/garside_lattice.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>

namespace garnorm {

GarsideLattice::GarsideLattice(Spec spec)
    : kind_(std::move(spec.kind)),
      n_(spec.names.size()),
      delta_(spec.delta),
      atoms_(std::move(spec.atoms)),
      atom_words_(std::move(spec.atom_words)),
      meet_fn_(std::move(spec.meet)),
      join_fn_(std::move(spec.join)) {
  if (n_ == 0 || delta_ >= n_) throw RangeError("lattice needs a unit and a Δ");
  alphabet_ = Alphabet(spec.names, spec.names[0]);
  for (std::size_t i = 0; i < spec.aliases.size() && i < n_; ++i) {
    for (const auto& a : spec.aliases[i]) alphabet_.add_alias(a, static_cast<Letter>(i));
  }
  if (atom_words_.size() != n_) atom_words_.resize(n_);

  product_.assign(n_ * n_, kNone);
  quotient_.assign(n_ * n_, kNone);
  for (Simple u = 0; u < n_; ++u) {
    for (Simple v = 0; v < n_; ++v) {
      const Simple p = spec.product(u, v);
      if (p == kNone) continue;
      if (p >= n_) throw RangeError("product outside the simples");
      product_[u * n_ + v] = p;
      if (quotient_[u * n_ + p] != kNone && quotient_[u * n_ + p] != v) {
        throw ConfigurationError("product table is not left-cancellative");
      }
      quotient_[u * n_ + p] = v;
    }
  }
  complement_.resize(n_);
  phi_inverse_.assign(n_, kNone);
  for (Simple s = 0; s < n_; ++s) {
    complement_[s] = quotient_[s * n_ + delta_];
    if (complement_[s] == kNone) {
      throw ConfigurationError("simple '" + alphabet_.name(s) + "' does not divide Δ");
    }
  }
  for (Simple s = 0; s < n_; ++s) phi_inverse_[phi(s)] = s;
  if (std::find(phi_inverse_.begin(), phi_inverse_.end(), kNone) != phi_inverse_.end()) {
    throw ConfigurationError("φ is not a bijection of the simples");
  }
  if (!meet_fn_) {
    meet_memo_.reset(new std::atomic<Simple>[n_ * n_]);
    for (std::size_t i = 0; i < n_ * n_; ++i) meet_memo_[i].store(kNone);
  }
  if (!join_fn_) {
    join_memo_.reset(new std::atomic<Simple>[n_ * n_]);
    for (std::size_t i = 0; i < n_ * n_; ++i) join_memo_[i].store(kNone);
  }
}

Simple GarsideLattice::meet_brute_force(Simple a, Simple b) const {
  Simple best = unit();
  for (Simple c = 0; c < n_; ++c) {
    if (leq(c, a) && leq(c, b) && leq(best, c)) best = c;
  }
  return best;
}

Simple GarsideLattice::join_brute_force(Simple a, Simple b) const {
  Simple best = delta_;
  for (Simple c = 0; c < n_; ++c) {
    if (leq(a, c) && leq(b, c) && leq(c, best)) best = c;
  }
  return best;
}

Simple GarsideLattice::meet(Simple a, Simple b) const {
  if (meet_fn_) return meet_fn_(a, b);
  auto& cell = meet_memo_[a * n_ + b];
  Simple v = cell.load(std::memory_order_acquire);
  if (v == kNone) {
    v = meet_brute_force(a, b);
    cell.store(v, std::memory_order_release);
  }
  return v;
}

Simple GarsideLattice::join(Simple a, Simple b) const {
  if (join_fn_) return join_fn_(a, b);
  auto& cell = join_memo_[a * n_ + b];
  Simple v = cell.load(std::memory_order_acquire);
  if (v == kNone) {
    v = join_brute_force(a, b);
    cell.store(v, std::memory_order_release);
  }
  return v;
}

LetterPair head_pair(const GarsideLattice& L, Simple s1, Simple s2) {
  const Simple m = L.meet(L.complement(s1), s2);
  return {L.product(s1, m), L.left_quotient(m, s2)};
}

Simple head(const GarsideLattice& L, const Word& w) {
  if (w.empty()) throw RangeError("head of the empty word");
  Simple h = w[w.size() - 1];
  for (std::size_t i = w.size() - 1; i-- > 0;) h = head_pair(L, w[i], h).first;
  return h;
}

Simple right_complement(const GarsideLattice& L, Simple f, Simple g) {
  return L.left_quotient(f, L.join(f, g));
}

Normaliser to_normaliser(const GarsideLattice& L) {
  auto shared = std::make_shared<const GarsideLattice>(L);
  QuadraticMap map(L.alphabet(), [shared](Letter s, Letter t) {
    return head_pair(*shared, s, t);
  });
  return Normaliser(std::move(map), ClassPair{3, 3});
}

GroupNormalForm group_delta_normal_form(const GarsideLattice& L,
                                        const std::vector<SignedSimple>& w) {
  int m = 0;
  std::vector<Letter> positive;
  for (const SignedSimple& x : w) {
    if (x.simple >= L.size()) throw RangeError("simple out of range");
    if (!x.inverse) {
      positive.push_back(x.simple);
      continue;
    }
    // Δ^m·P·x⁻¹ = Δ^m·P·Δ⁻¹·φ⁻¹(∂x) = Δ^(m−1)·φ⁻¹(P)·φ⁻¹(∂x)
    for (auto& p : positive) p = L.phi_inverse(p);
    --m;
    positive.push_back(L.phi_inverse(L.complement(x.simple)));
  }
  Word word(positive);
  if (word.size() >= 2) {
    const auto hp = [&L](Letter s, Letter t) { return head_pair(L, s, t); };
    word = apply_sequence(hp, word, delta_schedule(static_cast<int>(word.size())));
  }
  std::vector<Letter> out(word.begin(), word.end());
  while (!out.empty() && out.back() == L.unit()) out.pop_back();
  std::size_t lead = 0;
  while (lead < out.size() && out[lead] == L.delta()) ++lead;
  m += static_cast<int>(lead);
  out.erase(out.begin(), out.begin() + static_cast<std::ptrdiff_t>(lead));
  return {m, Word(std::move(out))};
}

std::vector<SignedSimple> parse_signed_word(const GarsideLattice& L, std::string_view text) {
  std::vector<SignedSimple> out;
  if (text.empty()) return out;
  std::size_t pos = 0;
  while (true) {
    const std::size_t bar = text.find('|', pos);
    std::string tok(text.substr(pos, bar == std::string_view::npos ? std::string_view::npos
                                                                   : bar - pos));
    bool inverse = false;
    for (std::string_view suffix : {std::string_view("^-1"), std::string_view("⁻¹")}) {
      if (tok.size() > suffix.size() &&
          tok.compare(tok.size() - suffix.size(), suffix.size(), suffix) == 0) {
        inverse = true;
        tok.resize(tok.size() - suffix.size());
        break;
      }
    }
    out.push_back({L.alphabet().at(tok), inverse});
    if (bar == std::string_view::npos) break;
    pos = bar + 1;
  }
  return out;
}

std::string format_group_normal_form(const GarsideLattice& L, const GroupNormalForm& g,
                                     bool ascii) {
  std::string out;
  if (g.delta_power != 0) {
    out = (ascii ? std::string("D") : std::string("Δ")) + "^" + std::to_string(g.delta_power);
  }
  const std::string rest = format_word(L.alphabet(), g.word, ascii);
  if (!out.empty() && !rest.empty()) out += '|';
  return out + rest;
}

GarsideLattice build_abelian(int n) {
  if (n < 1 || n > 10) throw RangeError("abelian instance needs 1 <= n <= 10");
  const Simple size = Simple{1} << n;
  GarsideLattice::Spec spec;
  spec.kind = "abelian";
  spec.delta = size - 1;
  for (int k = 0; k < n; ++k) spec.atoms.push_back(std::string(1, static_cast<char>('a' + k)));
  spec.names.resize(size);
  spec.aliases.resize(size);
  spec.atom_words.resize(size);
  for (Simple s = 0; s < size; ++s) {
    std::string subset;
    for (int k = 0; k < n; ++k) {
      if (s & (Simple{1} << k)) {
        subset += static_cast<char>('a' + k);
        spec.atom_words[s].push_back(static_cast<Letter>(k));
      }
    }
    if (s == 0) {
      spec.names[s] = "1";
    } else if (s == spec.delta) {
      spec.names[s] = "Δ";
      spec.aliases[s].push_back(subset);
    } else {
      spec.names[s] = subset;
    }
  }
  spec.product = [](Simple u, Simple v) {
    return (u & v) ? GarsideLattice::kNone : (u | v);
  };
  spec.meet = [](Simple a, Simple b) { return a & b; };
  spec.join = [](Simple a, Simple b) { return a | b; };
  return GarsideLattice(std::move(spec));
}

namespace {

int inversions(const std::vector<int>& p) {
  int c = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = i + 1; j < p.size(); ++j) c += p[i] > p[j] ? 1 : 0;
  }
  return c;
}

/// Lexicographically least reduced word, 0-based generator indices.
std::vector<Letter> least_reduced_word(std::vector<int> p) {
  const int n = static_cast<int>(p.size());
  std::vector<Letter> word;
  std::vector<int> pos(static_cast<std::size_t>(n));
  while (true) {
    for (int k = 0; k < n; ++k) pos[static_cast<std::size_t>(p[static_cast<std::size_t>(k)])] = k;
    int i = 0;
    while (i + 1 < n && pos[static_cast<std::size_t>(i + 1)] > pos[static_cast<std::size_t>(i)]) ++i;
    if (i + 1 >= n) return word;
    // σ_{i+1} is a left descent: strip it by swapping values i and i+1.
    word.push_back(static_cast<Letter>(i));
    std::swap(p[static_cast<std::size_t>(pos[static_cast<std::size_t>(i)])],
              p[static_cast<std::size_t>(pos[static_cast<std::size_t>(i + 1)])]);
  }
}

std::string sigma_word(const std::vector<Letter>& w) {
  if (w.empty()) return "1";
  std::string s;
  for (Letter g : w) s += "σ" + std::to_string(g + 1);
  return s;
}

}  // namespace

GarsideLattice build_braid(int n) {
  if (n < 2 || n > 6) throw RangeError("braid instance needs 2 <= n <= 6");
  std::vector<std::vector<int>> perms;
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));

  struct Entry {
    std::vector<int> perm;
    std::vector<Letter> word;
    int length;
  };
  std::vector<Entry> entries;
  for (auto& q : perms) entries.push_back({q, least_reduced_word(q), inversions(q)});
  std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
    if (a.length != b.length) return a.length < b.length;
    return a.word < b.word;
  });

  std::map<std::vector<int>, Simple> index;
  GarsideLattice::Spec spec;
  spec.kind = "braid";
  for (int k = 1; k < n; ++k) spec.atoms.push_back("σ" + std::to_string(k));
  for (std::size_t i = 0; i < entries.size(); ++i) {
    index.emplace(entries[i].perm, static_cast<Simple>(i));
    spec.atom_words.push_back(entries[i].word);
    spec.aliases.emplace_back();
  }
  spec.delta = static_cast<Simple>(entries.size() - 1);
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (i == spec.delta) {
      spec.names.push_back("Δ");
      spec.aliases[i].push_back(sigma_word(entries[i].word));
    } else {
      spec.names.push_back(sigma_word(entries[i].word));
    }
  }
  auto shared = std::make_shared<std::vector<Entry>>(std::move(entries));
  auto idx = std::make_shared<std::map<std::vector<int>, Simple>>(std::move(index));
  spec.product = [shared, idx](Simple u, Simple v) {
    const auto& pu = (*shared)[u].perm;
    const auto& pv = (*shared)[v].perm;
    std::vector<int> c(pu.size());
    for (std::size_t k = 0; k < c.size(); ++k) c[k] = pu[static_cast<std::size_t>(pv[k])];
    // Simple iff no two strands cross twice, i.e. the lengths add.
    if (inversions(c) != (*shared)[u].length + (*shared)[v].length) return GarsideLattice::kNone;
    return idx->at(c);
  };
  return GarsideLattice(std::move(spec));
}

GarsideLattice build_torus(const std::vector<int>& exponents) {
  if (exponents.empty()) throw RangeError("torus instance needs at least one exponent");
  for (int e : exponents) {
    if (e < 2) throw RangeError("torus exponents must be >= 2");
  }
  GarsideLattice::Spec spec;
  spec.kind = "torus";
  // chain_of[s], height_of[s]; unit has height 0, Δ is stored last.
  std::vector<int> chain_of{-1};
  std::vector<int> height_of{0};
  spec.names.push_back("1");
  spec.atom_words.emplace_back();
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    const std::string a = "a" + std::to_string(i + 1);
    spec.atoms.push_back(a);
    for (int j = 1; j < exponents[i]; ++j) {
      spec.names.push_back(j == 1 ? a : a + "^" + std::to_string(j));
      spec.atom_words.emplace_back(static_cast<std::size_t>(j), static_cast<Letter>(i));
      chain_of.push_back(static_cast<int>(i));
      height_of.push_back(j);
    }
  }
  spec.delta = static_cast<Simple>(spec.names.size());
  spec.names.push_back("Δ");
  spec.atom_words.emplace_back(static_cast<std::size_t>(exponents[0]), Letter{0});
  chain_of.push_back(-2);
  height_of.push_back(0);
  spec.aliases.resize(spec.names.size());

  // Index of chain point (i, j): 1 + (e_0−1) + … + (e_{i−1}−1) + (j−1).
  std::vector<Simple> chain_start;
  Simple start = 1;
  for (int e : exponents) {
    chain_start.push_back(start);
    start += static_cast<Simple>(e - 1);
  }
  const Simple delta = spec.delta;
  spec.product = [=](Simple u, Simple v) -> Simple {
    if (u == 0) return v;
    if (v == 0) return u;
    if (u == delta || v == delta) return GarsideLattice::kNone;
    const int cu = chain_of[u];
    if (cu != chain_of[v]) return GarsideLattice::kNone;
    const int h = height_of[u] + height_of[v];
    const int e = exponents[static_cast<std::size_t>(cu)];
    if (h < e) return chain_start[static_cast<std::size_t>(cu)] + static_cast<Simple>(h - 1);
    if (h == e) return delta;
    return GarsideLattice::kNone;
  };
  // Distinct chains meet at 1 and join at Δ; along a chain, min and max.
  spec.meet = [=](Simple a, Simple b) -> Simple {
    if (a == delta) return b;
    if (b == delta) return a;
    if (a == 0 || b == 0) return 0;
    if (chain_of[a] != chain_of[b]) return 0;
    return height_of[a] <= height_of[b] ? a : b;
  };
  spec.join = [=](Simple a, Simple b) -> Simple {
    if (a == 0) return b;
    if (b == 0) return a;
    if (a == delta || b == delta) return delta;
    if (chain_of[a] != chain_of[b]) return delta;
    return height_of[a] >= height_of[b] ? a : b;
  };
  return GarsideLattice(std::move(spec));
}

std::vector<int> braid_permutation(const GarsideLattice& L, Simple s) {
  if (L.kind() != "braid") throw ConfigurationError("not a braid lattice");
  const std::size_t n = L.atoms().size() + 1;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  for (Letter g : L.atom_word(s)) std::swap(p[g], p[g + 1]);
  return p;
}

}  // namespace garnorm
