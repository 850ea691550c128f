#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cmath>
#include <map>
#include <numeric>
#include <set>

#include "deplen/error.hpp"
#include "deplen/random.hpp"

using namespace deplen;

TEST_CASE("splitmix64 reference values") {
  // First outputs of the reference splitmix64 stream seeded with 0 (state advanced by the golden gamma).
  CHECK(splitmix64(0) == 0xe220a8397b1dcdafULL);
  CHECK(splitmix64(0x9e3779b97f4a7c15ULL) == 0x6e789e6aa1b965f4ULL);
}

TEST_CASE("same seed, same stream") {
  Rng a(42), b(42), c(43);
  bool differs = false;
  for (int i = 0; i < 100; ++i) {
    const auto x = a.next();
    CHECK(x == b.next());
    differs |= x != c.next();
  }
  CHECK(differs);
}

TEST_CASE("substreams are distinct and reproducible") {
  std::set<std::uint64_t> firsts;
  for (std::uint64_t i = 0; i < 1000; ++i) {
    auto r = Rng::substream(7, i);
    firsts.insert(r.next());
    CHECK(Rng::substream(7, i).next() == Rng::substream(7, i).next());
  }
  CHECK(firsts.size() == 1000);
}

TEST_CASE("uniform_index stays in range and covers it evenly") {
  Rng rng(1);
  std::array<int, 7> hist{};
  const int draws = 70000;
  for (int i = 0; i < draws; ++i) {
    const auto k = rng.uniform_index(7);
    REQUIRE(k < 7);
    ++hist[k];
  }
  for (int h : hist) CHECK(std::abs(h - draws / 7) < 5 * std::sqrt(draws / 7.0));
  CHECK(rng.uniform_index(1) == 0);
}

TEST_CASE("uniform01 in [0, 1)") {
  Rng rng(3);
  double sum = 0.0;
  for (int i = 0; i < 100000; ++i) {
    const double u = rng.uniform01();
    REQUIRE(u >= 0.0);
    REQUIRE(u < 1.0);
    sum += u;
  }
  CHECK(sum / 100000 == doctest::Approx(0.5).epsilon(0.01));
}

TEST_CASE("shuffle is a permutation and every order of 3 appears") {
  Rng rng(5);
  std::map<std::array<int, 3>, int> seen;
  for (int i = 0; i < 6000; ++i) {
    std::array<int, 3> v{0, 1, 2};
    rng.shuffle(std::span<int>(v));
    ++seen[v];
  }
  CHECK(seen.size() == 6);
  for (const auto& [k, c] : seen) CHECK(std::abs(c - 1000) < 150);
}

TEST_CASE("discrete sampler") {
  const std::vector<double> w{1.0, 0.0, 3.0};
  DiscreteSampler s(5, w);
  CHECK(s.first() == 5);
  CHECK(s.last() == 7);
  Rng rng(9);
  std::map<int, int> hist;
  for (int i = 0; i < 40000; ++i) ++hist[s(rng)];
  CHECK(hist.count(6) == 0);
  CHECK(hist[5] + hist[7] == 40000);
  CHECK(hist[7] / 40000.0 == doctest::Approx(0.75).epsilon(0.02));
}
