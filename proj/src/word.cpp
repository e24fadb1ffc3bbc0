#include "prepcode/word.hpp"

#include "prepcode/errors.hpp"

namespace prepcode {

namespace {

void check_length(int length) {
  if (length < 1 || length > BinaryWord::kMaxLength) {
    throw InputError("word length must be in [1, 64], got " + std::to_string(length));
  }
}

int hex_value(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  return -1;
}

}  // namespace

BinaryWord::BinaryWord(int length, std::uint64_t bits) : length_(length), bits_(bits) {
  check_length(length);
  if ((bits & ~mask(length)) != 0) {
    throw InputError("bits set beyond word length " + std::to_string(length));
  }
}

BinaryWord BinaryWord::from_support(int length, std::span<const int> coords) {
  check_length(length);
  std::uint64_t bits = 0;
  for (int c : coords) {
    if (c < 1 || c > length) throw InputError("coordinate " + std::to_string(c) + " out of range");
    bits |= std::uint64_t{1} << bit_of(length, c);
  }
  return BinaryWord(length, bits);
}

BinaryWord BinaryWord::from_string(std::string_view bits01) {
  const int length = static_cast<int>(bits01.size());
  check_length(length);
  std::uint64_t bits = 0;
  for (char c : bits01) {
    if (c != '0' && c != '1') throw InputError("not a binary digit: '" + std::string(1, c) + "'");
    bits = (bits << 1) | static_cast<std::uint64_t>(c - '0');
  }
  return BinaryWord(length, bits);
}

BinaryWord BinaryWord::from_hex(std::string_view hex, int length) {
  check_length(length);
  const int nibbles = (length + 3) / 4;
  if (static_cast<int>(hex.size()) != nibbles) {
    throw InputError("expected " + std::to_string(nibbles) + " hex digits, got " +
                     std::to_string(hex.size()));
  }
  std::uint64_t padded = 0;
  for (char c : hex) {
    const int v = hex_value(c);
    if (v < 0) throw InputError("invalid hex digit '" + std::string(1, c) + "'");
    padded = (padded << 4) | static_cast<std::uint64_t>(v);
  }
  const int pad = nibbles * 4 - length;
  if ((padded & ((std::uint64_t{1} << pad) - 1)) != 0) {
    throw InputError("nonzero pad bits in '" + std::string(hex) + "'");
  }
  return BinaryWord(length, padded >> pad);
}

std::string BinaryWord::to_hex() const {
  static constexpr char kDigits[] = "0123456789ABCDEF";
  const int nibbles = (length_ + 3) / 4;
  std::string out(static_cast<std::size_t>(nibbles), '0');
  for (int k = 0; k < nibbles; ++k) {
    const int hi = length_ - 1 - 4 * k;  // bit index of the nibble's first coordinate
    unsigned v = 0;
    for (int b = 0; b < 4; ++b) {
      const int bit = hi - b;
      v = (v << 1) | (bit >= 0 ? static_cast<unsigned>((bits_ >> bit) & 1) : 0u);
    }
    out[static_cast<std::size_t>(k)] = kDigits[v];
  }
  return out;
}

std::string BinaryWord::to_string() const {
  std::string out;
  out.reserve(static_cast<std::size_t>(length_));
  for (int c = 1; c <= length_; ++c) out.push_back(test(c) ? '1' : '0');
  return out;
}

bool BinaryWord::test(int coord) const {
  if (coord < 1 || coord > length_) throw InputError("coordinate out of range");
  return ((bits_ >> bit_of(length_, coord)) & 1) != 0;
}

std::vector<int> BinaryWord::support() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(weight()));
  for (int c = 1; c <= length_; ++c) {
    if ((bits_ >> bit_of(length_, c)) & 1) out.push_back(c);
  }
  return out;
}

BinaryWord BinaryWord::flipped(int coord) const {
  if (coord < 1 || coord > length_) throw InputError("coordinate out of range");
  return BinaryWord(length_, bits_ ^ (std::uint64_t{1} << bit_of(length_, coord)));
}

BinaryWord BinaryWord::operator^(const BinaryWord& other) const {
  if (length_ != other.length_) throw InputError("length mismatch in XOR");
  return BinaryWord(length_, bits_ ^ other.bits_);
}

int hamming_distance(const BinaryWord& a, const BinaryWord& b) {
  if (a.length() != b.length()) {
    throw InputError("length mismatch: " + std::to_string(a.length()) + " vs " +
                     std::to_string(b.length()));
  }
  return std::popcount(a.bits() ^ b.bits());
}

}  // namespace prepcode
