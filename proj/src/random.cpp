#include "deplen/random.hpp"

#include <algorithm>
#include <stdexcept>

namespace deplen {

std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

std::uint64_t Rng::uniform_index(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("uniform_index: bound must be positive");
  // Values below `threshold` would make some residues more likely.
  const std::uint64_t threshold = (0 - bound) % bound;
  for (;;) {
    const std::uint64_t r = engine_();
    if (r >= threshold) return r % bound;
  }
}

DiscreteSampler::DiscreteSampler(int first, std::span<const double> weights) : first_(first) {
  if (weights.empty()) throw std::invalid_argument("DiscreteSampler: empty support");
  cdf_.reserve(weights.size());
  double acc = 0.0;
  for (double w : weights) {
    if (!(w >= 0.0)) throw std::invalid_argument("DiscreteSampler: negative weight");
    acc += w;
    cdf_.push_back(acc);
  }
  if (!(acc > 0.0)) throw std::invalid_argument("DiscreteSampler: zero total weight");
  for (double& c : cdf_) c /= acc;
  cdf_.back() = 1.0;
}

int DiscreteSampler::operator()(Rng& rng) const {
  const double u = rng.uniform01();
  const auto it = std::upper_bound(cdf_.begin(), cdf_.end(), u);
  return first_ + static_cast<int>(std::min<std::ptrdiff_t>(it - cdf_.begin(),
                                                            static_cast<std::ptrdiff_t>(cdf_.size()) - 1));
}

}  // namespace deplen
