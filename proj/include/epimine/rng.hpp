#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace epimine {

/// Deterministic random source. Wraps mt19937_64 (whose output sequence the
/// standard pins down exactly) and derives bounded draws by rejection, so
/// the same seed yields the same stream on every platform and compiler.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next() { return eng_(); }

  /// Uniform draw from [0, bound); bound must be positive.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t min = (0 - bound) % bound;  // 2^64 mod bound
    for (;;) {
      const std::uint64_t x = eng_();
      if (x >= min) return x % bound;
    }
  }

  /// Fisher-Yates shuffle; std::shuffle is not seed-stable across libraries.
  template <typename T>
  void shuffle(std::vector<T>& items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      const std::size_t j = static_cast<std::size_t>(below(i));
      std::swap(items[i - 1], items[j]);
    }
  }

 private:
  std::mt19937_64 eng_;
};

}  // namespace epimine
