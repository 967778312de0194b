#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace ppc::detail {

// Odd-only sieve of one closed range [first, last]. Sieving primes must
// include every odd prime up to sqrt(last).
class OddSegment {
 public:
  void sieve(std::uint64_t first, std::uint64_t last, std::span<const std::uint64_t> primes);

  std::uint64_t count() const;

  template <typename Fn>
  void for_each_prime(Fn&& fn) const {
    if (first_ <= 2 && 2 <= last_) fn(std::uint64_t{2});
    for (std::size_t i = 0; i < composite_.size(); ++i) {
      if (!composite_[i]) fn(odd_begin_ + 2 * i);
    }
  }

 private:
  std::uint64_t first_ = 1;
  std::uint64_t last_ = 0;
  std::uint64_t odd_begin_ = 1;
  std::vector<std::uint8_t> composite_;
};

// Splits [first, last] into consecutive chunks of at most `length` values.
std::vector<std::pair<std::uint64_t, std::uint64_t>> split_range(std::uint64_t first, std::uint64_t last,
                                                                 std::uint64_t length);

}  // namespace ppc::detail
