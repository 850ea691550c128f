#pragma once

// Portable seeded randomness.
//
// The engine is std::mt19937_64, whose output sequence is fixed by the
// standard. Everything layered on top of it (bounded integers, unit reals,
// shuffles, discrete sampling) is implemented here rather than through
// <random> distributions, whose algorithms are implementation-defined.
//
// Stream-split rule: work item i (sentence i, tree i, ...) of a run seeded
// with s draws from Rng::substream(s, i), whose engine is seeded with
// splitmix64(splitmix64(s) + i). Substreams depend only on (s, i), so a
// computation partitioned across any number of workers consumes exactly the
// same numbers as a serial run.

#include <cstdint>
#include <random>
#include <span>
#include <vector>

namespace deplen {

std::uint64_t splitmix64(std::uint64_t x) noexcept;

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  static Rng substream(std::uint64_t seed, std::uint64_t index) {
    return Rng(splitmix64(splitmix64(seed) + index));
  }

  std::uint64_t next() { return engine_(); }

  // Uniform on [0, bound); bound must be positive. Rejection sampling, no
  // modulo bias.
  std::uint64_t uniform_index(std::uint64_t bound);

  // Uniform on [0, 1) with 53 random bits.
  double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  template <typename T>
  void shuffle(std::span<T> items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      const auto j = static_cast<std::size_t>(uniform_index(i));
      std::swap(items[i - 1], items[j]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

// Inverse-CDF sampler over the integers first, first+1, ..., first+weights.size()-1.
// Weights need not be normalized but must be non-negative with a positive sum.
class DiscreteSampler {
 public:
  DiscreteSampler(int first, std::span<const double> weights);

  int operator()(Rng& rng) const;

  int first() const { return first_; }
  int last() const { return first_ + static_cast<int>(cdf_.size()) - 1; }

 private:
  int first_;
  std::vector<double> cdf_;
};

}  // namespace deplen
