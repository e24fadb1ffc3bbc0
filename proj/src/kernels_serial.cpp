#include <bit>
#include <limits>

#include "prepcode/kernels.hpp"

namespace prepcode::kernels::serial {

int min_pairwise_distance(std::span<const std::uint64_t> words) {
  if (words.size() < 2) return kNoPair;
  int best = std::numeric_limits<int>::max();
  for (std::size_t i = 0; i < words.size(); ++i) {
    for (std::size_t j = i + 1; j < words.size(); ++j) {
      const int d = std::popcount(words[i] ^ words[j]);
      if (d < best) best = d;
    }
  }
  return best;
}

Adjacency distance_adjacency(std::span<const std::uint64_t> words, int distance) {
  Adjacency adj(words.size());
  for (std::size_t i = 0; i < words.size(); ++i) {
    for (std::size_t j = 0; j < words.size(); ++j) {
      if (i != j && std::popcount(words[i] ^ words[j]) == distance) {
        adj[i].push_back(static_cast<std::uint32_t>(j));
      }
    }
  }
  return adj;
}

std::vector<std::uint64_t> enumerate_xy_pairs(int q, std::span<const std::uint32_t> sums,
                                              std::span<const std::uint32_t> cube_sums,
                                              std::span<const std::uint32_t> cubes) {
  const std::uint64_t subsets = std::uint64_t{1} << q;
  std::vector<std::uint64_t> out;
  for (std::uint64_t x = 0; x < subsets; ++x) {
    if (std::popcount(x) % 2 != 0) continue;
    const std::uint32_t target_cube = cube_sums[x] ^ cubes[sums[x]];
    for (std::uint64_t y = 0; y < subsets; ++y) {
      if (std::popcount(y) % 2 != 0) continue;
      if (sums[y] == sums[x] && cube_sums[y] == target_cube) out.push_back((x << q) | y);
    }
  }
  return out;
}

std::optional<std::pair<std::size_t, std::size_t>> first_distance_mismatch(
    std::span<const std::uint64_t> a, std::span<const std::uint64_t> b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = i + 1; j < a.size(); ++j) {
      if (std::popcount(a[i] ^ a[j]) != std::popcount(b[i] ^ b[j])) return std::pair{i, j};
    }
  }
  return std::nullopt;
}

}  // namespace prepcode::kernels::serial
