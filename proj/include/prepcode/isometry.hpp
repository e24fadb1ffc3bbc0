#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "prepcode/code.hpp"
#include "prepcode/graph.hpp"

namespace prepcode {

/// x -> pi(x) XOR t, where coordinate i of x moves to coordinate perm[i-1].
class SpaceAutomorphism {
 public:
  /// perm holds the 1-based images of coordinates 1..n. Throws InputError unless
  /// perm is a permutation of 1..n and t has length n.
  SpaceAutomorphism(std::vector<int> perm, BinaryWord translation);

  static SpaceAutomorphism identity(int n);
  static SpaceAutomorphism random(int n, std::mt19937_64& rng);

  int length() const noexcept { return static_cast<int>(perm_.size()); }
  const std::vector<int>& perm() const noexcept { return perm_; }
  const BinaryWord& translation() const noexcept { return t_; }

  BinaryWord permute(const BinaryWord& x) const;
  BinaryWord operator()(const BinaryWord& x) const { return permute(x) ^ t_; }
  SpaceAutomorphism inverse() const;

  /// {"perm": [images of 1..n], "t": hexword}
  nlohmann::json to_json() const;
  static SpaceAutomorphism from_json(const nlohmann::json& j);

 private:
  std::vector<int> perm_;
  BinaryWord t_;
};

/// { F(x) : x in c }.
Code apply_automorphism(const SpaceAutomorphism& f, const Code& c);

/// Bijection between two codes given as (domain word, image word) pairs.
class CodewordBijection {
 public:
  using Pair = std::pair<BinaryWord, BinaryWord>;

  /// Throws InputError on repeated domain or image words or mixed lengths.
  explicit CodewordBijection(std::vector<Pair> pairs);

  const std::vector<Pair>& pairs() const noexcept { return pairs_; }
  std::size_t size() const noexcept { return pairs_.size(); }
  std::optional<BinaryWord> image_of(const BinaryWord& x) const;
  /// True iff the domain is exactly `a` and the image exactly `b`.
  bool maps(const Code& a, const Code& b) const;

  /// [[hexword, hexword], ...]
  nlohmann::json to_json() const;
  static CodewordBijection from_json(const nlohmann::json& j, int n_domain, int n_image);

 private:
  std::vector<Pair> pairs_;
};

struct WeakIsometryResult {
  std::optional<CodewordBijection> map;
  std::string reason;
};

/// Weak isometry via minimal-distance-graph isomorphism; the returned map is
/// re-verified to preserve "distance == d" in both directions.
/// `shuffle_seed` relabels the second graph first, which yields a different
/// (equally valid) map for codes with symmetries.
WeakIsometryResult weak_isometry(const Code& c1, const Code& c2,
                                 std::optional<std::uint64_t> shuffle_seed = std::nullopt,
                                 const CanonOptions& opts = {});

struct IsometryCheck {
  bool isometry = false;
  /// First domain pair (row-major over the bijection's order) whose distance changes.
  std::optional<std::pair<BinaryWord, BinaryWord>> violation;
  int distance_before = 0;
  int distance_after = 0;
};

/// Exhaustive all-pairs distance comparison.
IsometryCheck verify_isometry(const CodewordBijection& j);

/// Bipartite codeword/coordinate incidence graph: vertices 0..M-1 are the
/// codewords (in code order), M..M+n-1 the coordinates 1..n.
struct IncidenceGraph {
  Graph graph;
  /// weight for codeword vertices, n + 1 for coordinate vertices
  std::vector<long> labels;
};
IncidenceGraph incidence_graph(const Code& c);

struct EquivalenceResult {
  std::optional<SpaceAutomorphism> automorphism;
  std::string reason;
  /// Codeword w of c1 whose translate c1 + w was matched (when found).
  std::optional<BinaryWord> translating_word;
  std::size_t translations_tried = 0;
};

/// Searches F with F(c1) = c2 by canonicalising the incidence graph of every
/// translate c1 + w (w in c1) against that of reduce(c2). Any returned F has
/// been verified by mapping every word of c1.
EquivalenceResult find_equivalence(const Code& c1, const Code& c2, const CanonOptions& opts = {});

}  // namespace prepcode
