#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <unordered_set>
#include <vector>

#include "prepcode/word.hpp"

namespace prepcode {

/// Weight value -> number of codewords of that weight (only nonzero counts stored).
using WeightDistribution = std::map<int, std::size_t>;

/// Immutable set of equal-length binary words with cached (n, M, d).
/// Words are kept in ascending (lexicographic) order.
class Code {
 public:
  static constexpr std::size_t kDefaultDistanceCap = 10'000;

  /// Throws InputError on length mismatch or duplicate words.
  /// d is computed when 2 <= M <= distance_cap, otherwise left unknown.
  Code(int n, std::vector<BinaryWord> words, std::size_t distance_cap = kDefaultDistanceCap);

  int length() const noexcept { return n_; }
  std::size_t size() const noexcept { return words_.size(); }
  std::optional<int> distance() const noexcept { return d_; }
  /// Throws InputError when d is undefined (M < 2 or over the cap).
  int require_distance() const;
  bool reduced() const noexcept { return contains_bits(0); }

  const std::vector<BinaryWord>& words() const noexcept { return words_; }
  const BinaryWord& operator[](std::size_t i) const { return words_[i]; }
  auto begin() const noexcept { return words_.begin(); }
  auto end() const noexcept { return words_.end(); }

  bool contains(const BinaryWord& w) const;
  bool contains_bits(std::uint64_t bits) const { return index_.contains(bits); }
  /// Position of w in words(), or nullopt.
  std::optional<std::size_t> index_of(const BinaryWord& w) const;

  /// Raw bit patterns aligned with words().
  std::vector<std::uint64_t> bit_patterns() const;
  /// Supports of all codewords of weight w.
  std::vector<BinaryWord> words_of_weight(int w) const;

  friend bool operator==(const Code& a, const Code& b) {
    return a.n_ == b.n_ && a.words_ == b.words_;
  }

 private:
  int n_;
  std::vector<BinaryWord> words_;
  std::unordered_set<std::uint64_t> index_;
  std::optional<int> d_;
};

/// Exact all-pairs minimum distance. Throws InputError for < 2 words, unequal
/// lengths, or more than `cap` words.
int min_distance(std::span<const BinaryWord> words, std::size_t cap = Code::kDefaultDistanceCap);

WeightDistribution weight_distribution(const Code& c);

/// { w XOR t : w in c }.
Code translate(const Code& c, const BinaryWord& t);

/// Deletes coordinate `pos` (1-based). Throws StructuralError if two words merge.
Code puncture(const Code& c, int pos);

/// Translate by the lexicographically smallest codeword; the result contains 0^n.
Code reduce(const Code& c);

// Text format:
//   # prepcode v1
//   n=<int> m=<int> d=<int|?>
//   one uppercase hex word per line
void write_code(std::ostream& out, const Code& c);
void write_code_file(const std::string& path, const Code& c);
Code read_code(std::istream& in);
Code read_code_file(const std::string& path);

}  // namespace prepcode
