#pragma once

#include <cstddef>
#include <cstdint>
#include <numeric>
#include <vector>

namespace konig {

/// Disjoint sets where each element also carries the parity of its side relative to the
/// set representative. Union by rank; find compresses paths while folding the parity bits.
class ParityUnionFind {
 public:
  struct Root {
    std::uint32_t id;
    std::uint8_t parity;  // side(x) xor side(root)
  };

  explicit ParityUnionFind(std::size_t n) : parent_(n), rank_(n, 0), parity_(n, 0) {
    std::iota(parent_.begin(), parent_.end(), std::uint32_t{0});
  }

  std::size_t size() const noexcept { return parent_.size(); }

  Root find(std::uint32_t x) {
    // First pass: locate the root and the parity of x relative to it.
    std::uint32_t root = x;
    std::uint8_t total = 0;
    while (parent_[root] != root) {
      total ^= parity_[root];
      root = parent_[root];
    }
    // Second pass: point everything on the path at root, rewriting each parity.
    std::uint8_t remaining = total;
    while (parent_[x] != root && x != root) {
      const auto next = parent_[x];
      const auto step = parity_[x];
      parent_[x] = root;
      parity_[x] = remaining;
      remaining ^= step;
      x = next;
    }
    return {root, total};
  }

  /// Merges the sets of a and b so that side(a) != side(b) when `different` is set,
  /// side(a) == side(b) otherwise. Returns false if they were already in one set.
  bool unite(std::uint32_t a, std::uint32_t b, bool different = true) {
    auto ra = find(a);
    auto rb = find(b);
    if (ra.id == rb.id) return false;
    const auto link = static_cast<std::uint8_t>(ra.parity ^ rb.parity ^ (different ? 1 : 0));
    if (rank_[ra.id] < rank_[rb.id]) std::swap(ra, rb);
    parent_[rb.id] = ra.id;
    parity_[rb.id] = link;
    if (rank_[ra.id] == rank_[rb.id]) ++rank_[ra.id];
    return true;
  }

  bool same_set(std::uint32_t a, std::uint32_t b) { return find(a).id == find(b).id; }

 private:
  std::vector<std::uint32_t> parent_;
  std::vector<std::uint8_t> rank_;
  std::vector<std::uint8_t> parity_;
};

}  // namespace konig
