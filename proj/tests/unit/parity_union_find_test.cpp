#include <gtest/gtest.h>

#include "konig/parity_union_find.hpp"
#include "konig/random.hpp"

namespace konig {
namespace {

TEST(ParityUnionFind, SingletonsHaveZeroParity) {
  ParityUnionFind uf(3);
  for (std::uint32_t v = 0; v < 3; ++v) {
    EXPECT_EQ(uf.find(v).id, v);
    EXPECT_EQ(uf.find(v).parity, 0);
  }
}

TEST(ParityUnionFind, ChainAlternates) {
  ParityUnionFind uf(5);
  for (std::uint32_t v = 0; v + 1 < 5; ++v) EXPECT_TRUE(uf.unite(v, v + 1));
  EXPECT_FALSE(uf.unite(0, 4));
  for (std::uint32_t v = 0; v < 5; ++v) {
    EXPECT_EQ(uf.find(v).parity ^ uf.find(0).parity, v % 2);
  }
}

TEST(ParityUnionFind, SameSideUnion) {
  ParityUnionFind uf(2);
  uf.unite(0, 1, /*different=*/false);
  EXPECT_EQ(uf.find(0).parity, uf.find(1).parity);
}

// Against an explicit side array that is relabeled on every merge.
TEST(ParityUnionFind, MatchesNaiveRelabeling) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    Xoshiro256 rng(seed);
    const std::size_t n = 1 + rng.below(40);
    ParityUnionFind uf(n);
    std::vector<std::size_t> set(n);
    std::vector<int> side(n, 0);
    for (std::size_t v = 0; v < n; ++v) set[v] = v;

    for (int step = 0; step < 200; ++step) {
      const auto a = static_cast<std::uint32_t>(rng.below(n));
      const auto b = static_cast<std::uint32_t>(rng.below(n));
      const bool different = rng.below(2) == 1;
      const bool merged = set[a] != set[b];
      EXPECT_EQ(uf.unite(a, b, different), merged);
      if (merged) {
        const int flip = (side[a] ^ side[b] ^ (different ? 1 : 0));
        const auto from = set[b];
        for (std::size_t v = 0; v < n; ++v) {
          if (set[v] == from) {
            set[v] = set[a];
            side[v] ^= flip;
          }
        }
      }
      const auto x = static_cast<std::uint32_t>(rng.below(n));
      const auto y = static_cast<std::uint32_t>(rng.below(n));
      const auto rx = uf.find(x);
      const auto ry = uf.find(y);
      EXPECT_EQ(rx.id == ry.id, set[x] == set[y]);
      if (rx.id == ry.id) EXPECT_EQ(rx.parity ^ ry.parity, side[x] ^ side[y]);
    }
  }
}

}  // namespace
}  // namespace konig
