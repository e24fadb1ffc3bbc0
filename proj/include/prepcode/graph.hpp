#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include "prepcode/code.hpp"
#include "prepcode/kernels.hpp"

namespace prepcode {

/// Simple undirected graph with sorted adjacency lists and a bit matrix for O(1) edge tests.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t vertices);
  /// Adjacency lists must be symmetric and loop-free (InputError otherwise).
  explicit Graph(kernels::Adjacency adjacency);

  void add_edge(std::uint32_t u, std::uint32_t v);

  std::size_t size() const noexcept { return adj_.size(); }
  std::size_t edge_count() const noexcept { return edges_; }
  std::size_t degree(std::uint32_t v) const { return adj_[v].size(); }
  std::span<const std::uint32_t> neighbors(std::uint32_t v) const { return adj_[v]; }
  bool adjacent(std::uint32_t u, std::uint32_t v) const {
    return (rows_[u * words_per_row_ + (v >> 6)] >> (v & 63)) & 1;
  }
  /// Degree if every vertex has the same degree.
  std::optional<std::size_t> regular_degree() const;

  /// Copy with vertex v renamed to perm[v].
  Graph relabeled(std::span<const std::uint32_t> perm) const;

 private:
  void resize_rows();

  std::vector<std::vector<std::uint32_t>> adj_;
  std::vector<std::uint64_t> rows_;
  std::size_t words_per_row_ = 0;
  std::size_t edges_ = 0;
};

/// Codewords as vertices, joined iff at distance exactly `distance`.
struct MinDistGraph {
  std::vector<BinaryWord> words;
  int distance = 0;
  Graph graph;
};

/// Throws InputError when the code distance is undefined.
MinDistGraph build_mdg(const Code& c);
MinDistGraph build_mdg(std::span<const BinaryWord> words, int distance);

/// Vertex colouring with classes numbered 0..k-1; class order is meaningful.
struct Coloring {
  std::vector<int> color;

  static Coloring uniform(std::size_t vertices) { return {std::vector<int>(vertices, 0)}; }
  /// Ranks arbitrary integer labels, preserving their order.
  static Coloring from_labels(std::span<const long> labels);
  int classes() const;
  bool discrete() const { return classes() == static_cast<int>(color.size()); }
};

/// Coarsest equitable refinement. New classes are numbered by sorting
/// (old class, sorted multiset of neighbour classes), so the numbering is
/// invariant under relabelling of the graph.
Coloring color_refinement(const Graph& g, Coloring initial);

struct CanonicalForm {
  /// vertex -> canonical position
  std::vector<std::uint32_t> labeling;
  /// Exact encoding of the relabelled, coloured graph (plus search trace);
  /// equal certificates <=> isomorphic coloured graphs.
  std::vector<std::uint8_t> certificate;
  std::size_t nodes = 0;
  std::size_t leaves = 0;
  std::size_t generators = 0;
};

struct CanonOptions {
  std::size_t vertex_cap = 4096;
};

/// Individualisation-refinement search over the full tree, pruned only by
/// discovered automorphisms and by exact cell-size traces.
/// `labels` (optional) are initial vertex colours compared across graphs.
CanonicalForm canonical_form(const Graph& g, std::span<const long> labels = {},
                             const CanonOptions& opts = {});

/// Vertex map g1 -> g2 (g2 vertex of each g1 vertex), verified edge-exactly,
/// or nullopt if the (coloured) graphs are not isomorphic.
std::optional<std::vector<std::uint32_t>> find_isomorphism(const Graph& g1, const Graph& g2,
                                                           std::span<const long> labels1 = {},
                                                           std::span<const long> labels2 = {},
                                                           const CanonOptions& opts = {});

/// True iff `map` is a bijection preserving adjacency and non-adjacency.
bool is_isomorphism(const Graph& g1, const Graph& g2, std::span<const std::uint32_t> map);

/// `p edge V E`, then `c v <i> <hexword>` per vertex and `e u v` per edge (1-indexed, u < v).
void write_dimacs(std::ostream& out, const MinDistGraph& mdg);

}  // namespace prepcode
