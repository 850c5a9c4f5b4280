#include "garnorm/quadratic_map.hpp"

#include <limits>

namespace garnorm {

namespace {
constexpr std::uint64_t kUntouched = std::numeric_limits<std::uint64_t>::max();
}

QuadraticMap::QuadraticMap(Alphabet alphabet, Generator generator) {
  auto impl = std::make_shared<Impl>();
  impl->n = alphabet.size();
  impl->alphabet = std::move(alphabet);
  impl->generator = std::move(generator);
  const std::size_t cells = impl->n * impl->n;
  impl->memo = std::make_unique<std::atomic<std::uint64_t>[]>(cells);
  for (std::size_t i = 0; i < cells; ++i) {
    impl->memo[i].store(kUntouched, std::memory_order_relaxed);
  }
  impl_ = std::move(impl);
}

QuadraticMap QuadraticMap::from_pairs(Alphabet alphabet,
                                      const std::map<LetterPair, LetterPair>& pairs) {
  const std::size_t n = alphabet.size();
  std::vector<LetterPair> table(n * n);
  for (std::size_t s = 0; s < n; ++s) {
    for (std::size_t t = 0; t < n; ++t) {
      table[s * n + t] = {static_cast<Letter>(s), static_cast<Letter>(t)};
    }
  }
  for (const auto& [in, out] : pairs) {
    if (in.first >= n || in.second >= n || out.first >= n || out.second >= n) {
      throw RangeError("table entry refers to a letter outside the alphabet");
    }
    table[in.first * n + in.second] = out;
  }
  return QuadraticMap(std::move(alphabet),
                      [table = std::move(table), n](Letter s, Letter t) {
                        return table[s * n + t];
                      });
}

QuadraticMap QuadraticMap::identity(Alphabet alphabet) {
  return QuadraticMap(std::move(alphabet),
                      [](Letter s, Letter t) { return LetterPair{s, t}; });
}

LetterPair QuadraticMap::operator()(Letter s, Letter t) const {
  const std::size_t n = impl_->n;
  if (s >= n || t >= n) throw RangeError("letter outside the alphabet");
  auto& cell = impl_->memo[s * n + t];
  std::uint64_t v = cell.load(std::memory_order_acquire);
  if (v == kUntouched) {
    const LetterPair r = impl_->generator(s, t);
    if (r.first >= n || r.second >= n) {
      throw RangeError("generator produced a letter outside the alphabet");
    }
    v = (static_cast<std::uint64_t>(r.first) << 32) | r.second;
    cell.store(v, std::memory_order_release);
  }
  return {static_cast<Letter>(v >> 32), static_cast<Letter>(v & 0xffffffffU)};
}

std::optional<LetterPair> QuadraticMap::idempotence_violation() const {
  const auto n = static_cast<Letter>(impl_->n);
  for (Letter s = 0; s < n; ++s) {
    for (Letter t = 0; t < n; ++t) {
      const LetterPair once = (*this)(s, t);
      if ((*this)(once) != once) return LetterPair{s, t};
    }
  }
  return std::nullopt;
}

std::map<LetterPair, LetterPair> QuadraticMap::non_identity_entries() const {
  std::map<LetterPair, LetterPair> out;
  const auto n = static_cast<Letter>(impl_->n);
  for (Letter s = 0; s < n; ++s) {
    for (Letter t = 0; t < n; ++t) {
      const LetterPair r = (*this)(s, t);
      if (r != LetterPair{s, t}) out.emplace(LetterPair{s, t}, r);
    }
  }
  return out;
}

}  // namespace garnorm
