#include "garnorm/word.hpp"

#include <algorithm>

namespace garnorm {

namespace {

void replace_all(std::string& s, std::string_view from, std::string_view to) {
  std::size_t pos = 0;
  while ((pos = s.find(from, pos)) != std::string::npos) {
    s.replace(pos, from.size(), to);
    pos += to.size();
  }
}

bool valid_letter_name(std::string_view name) {
  if (name.empty()) return false;
  return std::none_of(name.begin(), name.end(), [](char c) {
    return c == '|' || c == ' ' || c == '\t' || c == '\n' || c == '\r';
  });
}

}  // namespace

std::string ascii_alias(std::string_view name) {
  std::string s(name);
  replace_all(s, "σ", "s");
  replace_all(s, "Δ", "D");
  replace_all(s, "∅", "[]");
  replace_all(s, "″", "''");
  replace_all(s, "′", "'");
  return s;
}

Alphabet::Alphabet(std::vector<std::string> names,
                   std::optional<std::string> neutral)
    : names_(std::move(names)) {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (!valid_letter_name(names_[i])) {
      throw ParseError("invalid letter name '" + names_[i] + "'");
    }
    if (!index_.emplace(names_[i], static_cast<Letter>(i)).second) {
      throw ParseError("duplicate letter name '" + names_[i] + "'");
    }
  }
  for (std::size_t i = 0; i < names_.size(); ++i) {
    index_.emplace(ascii_alias(names_[i]), static_cast<Letter>(i));
  }
  if (neutral) {
    auto it = index_.find(*neutral);
    if (it == index_.end()) {
      throw ParseError("neutral letter '" + *neutral + "' is not a letter");
    }
    neutral_ = it->second;
  }
}

std::optional<Letter> Alphabet::find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Letter Alphabet::at(std::string_view name) const {
  if (auto l = find(name)) return *l;
  throw ParseError("unknown letter '" + std::string(name) + "'");
}

void Alphabet::add_alias(const std::string& alias, Letter l) {
  if (l >= names_.size()) throw RangeError("alias target out of range");
  if (!valid_letter_name(alias)) {
    throw ParseError("invalid alias '" + alias + "'");
  }
  index_.emplace(alias, l);
  index_.emplace(ascii_alias(alias), l);
}

Word Word::concat(const Word& other) const {
  std::vector<Letter> r;
  r.reserve(size() + other.size());
  r.insert(r.end(), letters_.begin(), letters_.end());
  r.insert(r.end(), other.letters_.begin(), other.letters_.end());
  return Word(std::move(r));
}

Word Word::sub(std::size_t pos, std::size_t len) const {
  if (pos + len > size()) throw RangeError("subword out of range");
  return Word(std::vector<Letter>(letters_.begin() + static_cast<std::ptrdiff_t>(pos),
                                  letters_.begin() + static_cast<std::ptrdiff_t>(pos + len)));
}

Word Word::with_pair(std::size_t i, LetterPair p) const {
  std::vector<Letter> r = letters_;
  r.at(i) = p.first;
  r.at(i + 1) = p.second;
  return Word(std::move(r));
}

std::size_t WordHash::operator()(const Word& w) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (Letter l : w) {
    h ^= l + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h ^ w.size();
}

PositionSequence delta_schedule(int p) {
  if (p < 2) throw RangeError("delta schedule needs p >= 2");
  PositionSequence u;
  u.reserve(static_cast<std::size_t>(p * (p - 1) / 2));
  for (int start = p - 1; start >= 1; --start) {
    for (int i = start; i <= p - 1; ++i) u.push_back(static_cast<std::size_t>(i));
  }
  return u;
}

PositionSequence delta_tilde_schedule(int p) {
  if (p < 2) throw RangeError("delta-tilde schedule needs p >= 2");
  PositionSequence u;
  u.reserve(static_cast<std::size_t>(p * (p - 1) / 2));
  for (int top = 1; top <= p - 1; ++top) {
    for (int i = top; i >= 1; --i) u.push_back(static_cast<std::size_t>(i));
  }
  return u;
}

PositionSequence alternating_schedule(int start, int m) {
  if (start != 1 && start != 2) throw RangeError("alternating start must be 1 or 2");
  if (m < 0) throw RangeError("alternating length must be >= 0");
  PositionSequence u;
  for (int k = 0; k < m; ++k) {
    u.push_back(static_cast<std::size_t>(k % 2 == 0 ? start : 3 - start));
  }
  return u;
}

Word parse_word(const Alphabet& alphabet, std::string_view text) {
  std::vector<Letter> r;
  if (text.empty()) return Word{};
  std::size_t pos = 0;
  while (true) {
    std::size_t bar = text.find('|', pos);
    std::string_view tok =
        text.substr(pos, bar == std::string_view::npos ? std::string_view::npos : bar - pos);
    while (!tok.empty() && (tok.front() == ' ' || tok.front() == '\t')) tok.remove_prefix(1);
    while (!tok.empty() && (tok.back() == ' ' || tok.back() == '\t')) tok.remove_suffix(1);
    if (tok.empty()) throw ParseError("empty letter in word '" + std::string(text) + "'");
    r.push_back(alphabet.at(tok));
    if (bar == std::string_view::npos) break;
    pos = bar + 1;
  }
  return Word(std::move(r));
}

std::string format_word(const Alphabet& alphabet, const Word& w, bool ascii) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += '|';
    out += ascii ? ascii_alias(alphabet.name(w[i])) : alphabet.name(w[i]);
  }
  return out;
}

Word erase_letter(const Word& w, Letter e) {
  std::vector<Letter> r;
  r.reserve(w.size());
  for (Letter l : w) {
    if (l != e) r.push_back(l);
  }
  return Word(std::move(r));
}

std::optional<std::uint64_t> word_count(std::size_t k, std::size_t len,
                                        std::uint64_t limit) {
  std::uint64_t n = 1;
  for (std::size_t i = 0; i < len; ++i) {
    if (k != 0 && n > limit / k) return std::nullopt;
    n *= k;
  }
  if (n > limit) return std::nullopt;
  return n;
}

Word word_from_index(std::uint64_t index, std::size_t k, std::size_t len) {
  std::vector<Letter> r(len);
  for (std::size_t i = len; i-- > 0;) {
    r[i] = static_cast<Letter>(index % k);
    index /= k;
  }
  return Word(std::move(r));
}

Word sample_word(std::uint64_t seed, std::size_t k, std::size_t len,
                 std::uint64_t index) {
  std::uint64_t state =
      seed ^ (len * 0x9e3779b97f4a7c15ULL) ^ (index * 0xbf58476d1ce4e5b9ULL);
  std::vector<Letter> l(len);
  for (auto& v : l) {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    v = static_cast<Letter>((z ^ (z >> 31)) % k);
  }
  return Word(std::move(l));
}

void for_each_word(std::size_t k, std::size_t len,
                   const std::function<void(const Word&)>& fn) {
  if (len > 0 && k == 0) return;
  std::vector<Letter> cur(len, 0);
  while (true) {
    fn(Word(cur));
    std::size_t i = len;
    while (i > 0) {
      --i;
      if (++cur[i] < k) break;
      cur[i] = 0;
      if (i == 0) return;
    }
    if (len == 0) return;
  }
}

}  // namespace garnorm
