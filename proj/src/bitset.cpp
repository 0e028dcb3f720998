#include "borsuk/bitset.hpp"

namespace borsuk {

void Bitset::set_all() {
  for (auto& w : words_) w = ~std::uint64_t{0};
  if (const auto tail = nbits_ & 63; tail && !words_.empty())
    words_.back() &= (std::uint64_t{1} << tail) - 1;
}

std::size_t Bitset::find_from(std::size_t i) const {
  if (i >= nbits_) return npos;
  std::size_t wi = i >> 6;
  std::uint64_t w = words_[wi] & (~std::uint64_t{0} << (i & 63));
  while (true) {
    if (w) return wi * 64 + static_cast<std::size_t>(std::countr_zero(w));
    if (++wi >= words_.size()) return npos;
    w = words_[wi];
  }
}

std::size_t Bitset::find_last() const {
  for (std::size_t wi = words_.size(); wi-- > 0;)
    if (words_[wi]) return wi * 64 + 63 - static_cast<std::size_t>(std::countl_zero(words_[wi]));
  return npos;
}

std::vector<std::size_t> Bitset::to_indices() const {
  std::vector<std::size_t> out;
  out.reserve(count());
  for_each([&](std::size_t i) { out.push_back(i); });
  return out;
}

bool Bitset::lex_less(const Bitset& o) const {
  for (std::size_t wi = 0; wi < words_.size(); ++wi) {
    const std::uint64_t diff = words_[wi] ^ o.words_[wi];
    if (!diff) continue;
    const std::size_t pos = wi * 64 + static_cast<std::size_t>(std::countr_zero(diff));
    // The list holding pos is smaller unless the other one ends before pos.
    if (test(pos)) return o.find_from(pos) != npos;
    return find_from(pos) == npos;
  }
  return false;
}

}  // namespace borsuk
