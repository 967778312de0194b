#include "sieve.hpp"

#include <algorithm>

namespace ppc::detail {

void OddSegment::sieve(std::uint64_t first, std::uint64_t last, std::span<const std::uint64_t> primes) {
  first_ = first;
  last_ = last;
  odd_begin_ = first | 1;
  composite_.clear();
  if (last < odd_begin_) return;
  composite_.assign((last - odd_begin_) / 2 + 1, 0);
  if (odd_begin_ == 1) composite_[0] = 1;

  for (const std::uint64_t p : primes) {
    if (p == 2) continue;
    if (p > last / p) break;
    std::uint64_t start = std::max(p * p, (odd_begin_ + p - 1) / p * p);
    if ((start & 1) == 0) start += p;
    const std::uint64_t step = 2 * p;
    for (std::uint64_t j = start; j <= last; j += step) {
      composite_[(j - odd_begin_) >> 1] = 1;
    }
  }
}

std::uint64_t OddSegment::count() const {
  std::uint64_t n = (first_ <= 2 && 2 <= last_) ? 1 : 0;
  n += static_cast<std::uint64_t>(std::count(composite_.begin(), composite_.end(), std::uint8_t{0}));
  return n;
}

std::vector<std::pair<std::uint64_t, std::uint64_t>> split_range(std::uint64_t first, std::uint64_t last,
                                                                 std::uint64_t length) {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
  if (first > last) return out;
  length = std::max<std::uint64_t>(length, 64);
  for (std::uint64_t a = first;;) {
    const std::uint64_t b = (last - a < length) ? last : a + length - 1;
    out.emplace_back(a, b);
    if (b == last) break;
    a = b + 1;
  }
  return out;
}

}  // namespace ppc::detail
