#include <omp.h>

#include <bit>
#include <limits>

#include "prepcode/kernels.hpp"

namespace prepcode::kernels {

void set_threads(int threads) {
  if (threads > 0) omp_set_num_threads(threads);
}

int max_threads() { return omp_get_max_threads(); }

namespace omp {

int min_pairwise_distance(std::span<const std::uint64_t> words) {
  if (words.size() < 2) return kNoPair;
  const auto m = static_cast<std::ptrdiff_t>(words.size());
  int best = std::numeric_limits<int>::max();
#pragma omp parallel for schedule(dynamic, 16) reduction(min : best)
  for (std::ptrdiff_t i = 0; i < m; ++i) {
    for (std::ptrdiff_t j = i + 1; j < m; ++j) {
      const int d = std::popcount(words[i] ^ words[j]);
      if (d < best) best = d;
    }
  }
  return best;
}

Adjacency distance_adjacency(std::span<const std::uint64_t> words, int distance) {
  const auto m = static_cast<std::ptrdiff_t>(words.size());
  Adjacency adj(words.size());
#pragma omp parallel for schedule(dynamic, 16)
  for (std::ptrdiff_t i = 0; i < m; ++i) {
    auto& row = adj[static_cast<std::size_t>(i)];
    for (std::ptrdiff_t j = 0; j < m; ++j) {
      if (i != j && std::popcount(words[i] ^ words[j]) == distance) {
        row.push_back(static_cast<std::uint32_t>(j));
      }
    }
  }
  return adj;
}

std::vector<std::uint64_t> enumerate_xy_pairs(int q, std::span<const std::uint32_t> sums,
                                              std::span<const std::uint32_t> cube_sums,
                                              std::span<const std::uint32_t> cubes) {
  const auto subsets = static_cast<std::ptrdiff_t>(std::uint64_t{1} << q);
  std::vector<std::vector<std::uint64_t>> per_x(static_cast<std::size_t>(subsets));
#pragma omp parallel for schedule(dynamic, 4)
  for (std::ptrdiff_t xs = 0; xs < subsets; ++xs) {
    const auto x = static_cast<std::uint64_t>(xs);
    if (std::popcount(x) % 2 != 0) continue;
    const std::uint32_t target_cube = cube_sums[x] ^ cubes[sums[x]];
    auto& bucket = per_x[static_cast<std::size_t>(xs)];
    for (std::uint64_t y = 0; y < static_cast<std::uint64_t>(subsets); ++y) {
      if (std::popcount(y) % 2 != 0) continue;
      if (sums[y] == sums[x] && cube_sums[y] == target_cube) bucket.push_back((x << q) | y);
    }
  }
  std::vector<std::uint64_t> out;
  for (auto& bucket : per_x) out.insert(out.end(), bucket.begin(), bucket.end());
  return out;
}

std::optional<std::pair<std::size_t, std::size_t>> first_distance_mismatch(
    std::span<const std::uint64_t> a, std::span<const std::uint64_t> b) {
  const auto m = static_cast<std::ptrdiff_t>(a.size());
  std::ptrdiff_t first_row = m;
#pragma omp parallel for schedule(dynamic, 16) reduction(min : first_row)
  for (std::ptrdiff_t i = 0; i < m; ++i) {
    if (i >= first_row) continue;
    for (std::ptrdiff_t j = i + 1; j < m; ++j) {
      if (std::popcount(a[i] ^ a[j]) != std::popcount(b[i] ^ b[j])) {
        first_row = i;
        break;
      }
    }
  }
  if (first_row == m) return std::nullopt;
  const auto i = static_cast<std::size_t>(first_row);
  for (std::size_t j = i + 1; j < a.size(); ++j) {
    if (std::popcount(a[i] ^ a[j]) != std::popcount(b[i] ^ b[j])) return std::pair{i, j};
  }
  return std::nullopt;
}

}  // namespace omp
}  // namespace prepcode::kernels
