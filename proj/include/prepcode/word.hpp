#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace prepcode {

/// Binary word of length 1..64. Coordinates are 1-indexed; coordinate 1 is the
/// most significant of the `length` stored bits, so integer order on bits()
/// equals lexicographic order on the coordinate sequence.
class BinaryWord {
 public:
  static constexpr int kMaxLength = 64;

  BinaryWord() = default;
  BinaryWord(int length, std::uint64_t bits);

  static BinaryWord zeros(int length) { return BinaryWord(length, 0); }
  static BinaryWord ones(int length) { return BinaryWord(length, mask(length)); }
  static BinaryWord from_support(int length, std::span<const int> coords);
  static BinaryWord from_string(std::string_view bits01);

  /// ceil(length/4) uppercase nibbles, coordinate 1 = MSB of the first nibble.
  static BinaryWord from_hex(std::string_view hex, int length);
  std::string to_hex() const;
  std::string to_string() const;

  int length() const noexcept { return length_; }
  std::uint64_t bits() const noexcept { return bits_; }
  int weight() const noexcept { return std::popcount(bits_); }
  bool test(int coord) const;
  std::vector<int> support() const;

  BinaryWord flipped(int coord) const;
  BinaryWord operator^(const BinaryWord& other) const;

  /// Bit position (0 = least significant) holding `coord` in a word of `length`.
  static constexpr int bit_of(int length, int coord) noexcept { return length - coord; }
  static constexpr std::uint64_t mask(int length) noexcept {
    return length >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << length) - 1;
  }

  friend bool operator==(const BinaryWord&, const BinaryWord&) = default;
  friend std::strong_ordering operator<=>(const BinaryWord& a, const BinaryWord& b) {
    if (auto c = a.length_ <=> b.length_; c != 0) return c;
    return a.bits_ <=> b.bits_;
  }

 private:
  int length_ = 1;
  std::uint64_t bits_ = 0;
};

/// Number of coordinates where a and b differ. Throws InputError on length mismatch.
int hamming_distance(const BinaryWord& a, const BinaryWord& b);

inline int weight(const BinaryWord& w) noexcept { return w.weight(); }

}  // namespace prepcode
