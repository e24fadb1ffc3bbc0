#pragma once

// Bit-level hot loops. Every kernel exists twice: a plain serial reference and
// an OpenMP version with identical, deterministic results. The library calls
// the OpenMP versions; tests hold them to the serial ones.

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace prepcode::kernels {

using Adjacency = std::vector<std::vector<std::uint32_t>>;

/// Sentinel returned by min_pairwise_distance for fewer than two words.
inline constexpr int kNoPair = -1;

namespace serial {

int min_pairwise_distance(std::span<const std::uint64_t> words);

/// Adjacency lists (ascending) of the graph joining words at distance exactly `distance`.
Adjacency distance_adjacency(std::span<const std::uint64_t> words, int distance);

/// All (X, Y) subset pairs of a q-element field with |X|, |Y| even and
/// sums[X] == sums[Y], cube_sums[X] ^ cube(sums[X]) == cube_sums[Y].
/// `sums`/`cube_sums`/`cubes` are indexed by subset mask (size 2^q) resp. element.
/// Returns (X << q) | Y in ascending order.
std::vector<std::uint64_t> enumerate_xy_pairs(int q, std::span<const std::uint32_t> sums,
                                              std::span<const std::uint32_t> cube_sums,
                                              std::span<const std::uint32_t> cubes);

/// First pair (i, j), i < j in row-major order, whose distance differs between
/// the two aligned word lists.
std::optional<std::pair<std::size_t, std::size_t>> first_distance_mismatch(
    std::span<const std::uint64_t> a, std::span<const std::uint64_t> b);

}  // namespace serial

namespace omp {

int min_pairwise_distance(std::span<const std::uint64_t> words);
Adjacency distance_adjacency(std::span<const std::uint64_t> words, int distance);
std::vector<std::uint64_t> enumerate_xy_pairs(int q, std::span<const std::uint32_t> sums,
                                              std::span<const std::uint32_t> cube_sums,
                                              std::span<const std::uint32_t> cubes);
std::optional<std::pair<std::size_t, std::size_t>> first_distance_mismatch(
    std::span<const std::uint64_t> a, std::span<const std::uint64_t> b);

}  // namespace omp

/// Sets the OpenMP thread count for subsequent kernels; 0 keeps the runtime default.
void set_threads(int threads);
int max_threads();

}  // namespace prepcode::kernels
