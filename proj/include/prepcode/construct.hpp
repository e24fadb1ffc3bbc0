#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "prepcode/code.hpp"
#include "prepcode/gf2m.hpp"

namespace prepcode {

/// Extended Preparata code of length n = 2^(m_field+1) in the (X, Y) subset
/// description: a word is the indicator of a pair of subsets X, Y of GF(2^m_field)
/// (coordinates 1..q index X by field element 0..q-1, coordinates q+1..2q index Y)
/// and belongs to the code iff |X|, |Y| are even, sum X = sum Y and
/// sum_{x in X} x^3 + (sum X)^3 = sum_{y in Y} y^3.
class PreparataSpec {
 public:
  /// m_field odd, 3 <= m_field <= 7. Throws InputError otherwise.
  explicit PreparataSpec(int m_field, std::optional<std::uint32_t> modulus = std::nullopt);

  /// Maps the binary length n (16, 64, 256) to m_field.
  static PreparataSpec for_length(int n, std::optional<std::uint32_t> modulus = std::nullopt);

  int m_field() const noexcept { return field_.degree(); }
  int length() const noexcept { return 2 * static_cast<int>(field_.size()); }
  /// log2 of the code size: n - 2*m_field - 2.
  int log2_size() const noexcept { return length() - 2 * m_field() - 2; }
  const gf2m::FieldTable& field() const noexcept { return field_; }

  /// O(n) membership oracle. Throws InputError on length mismatch.
  bool is_member(const BinaryWord& w) const;

  /// Word built from subset masks (bit e of a mask = field element e).
  BinaryWord word_from_subsets(std::uint64_t x_mask, std::uint64_t y_mask) const;
  std::uint64_t x_mask(const BinaryWord& w) const;
  std::uint64_t y_mask(const BinaryWord& w) const;

  /// Random codeword: random even X and even Y, with Y corrected by toggling a
  /// pair {a, b} so that both field conditions hold.
  BinaryWord random_member(std::mt19937_64& rng) const;

 private:
  gf2m::FieldTable field_;
};

/// Full enumeration (m_field = 3 only, n = 16, M = 256).
/// Throws InputError for even m_field, CapabilityError for m_field >= 5.
Code build_extended_preparata(int m_field, std::optional<std::uint32_t> modulus = std::nullopt);

/// Reduced punctured code: extended Preparata code with coordinate `pos` deleted.
Code build_punctured_preparata(int m_field = 3, int pos = 16);

// Z4 side of the Nordstrom-Robinson cross-check.
namespace z4 {

/// Polynomial over Z4 or GF(2), coefficients low degree first.
using Poly = std::vector<int>;

/// Hensel lift of a monic binary polynomial to Z4 by one Graeffe step:
/// g(x^2) = +-(e(x)^2 - o(x)^2) for f = e + o split into even/odd parts.
Poly hensel_lift(const Poly& binary);

/// True iff `g` divides x^len - 1 over Z4 (g monic).
bool divides_xn_minus_1(const Poly& g, int len);

/// Codewords of the extended cyclic Z4 code generated by g: length len+1,
/// the last digit making the digit sum 0 mod 4.
std::vector<std::vector<int>> extended_cyclic_code(const Poly& g, int len);

int lee_weight(const std::vector<int>& word);

/// Gray map digit-wise: 0->00, 1->01, 2->11, 3->10, with the two bits of digit i
/// at coordinates i+1 and i+1+len.
BinaryWord gray_image(const std::vector<int>& word);

}  // namespace z4

/// Gray image of the octacode. Validated before return (self-duality, minimum
/// Lee weight 6, and weight distribution equal to the (X, Y) code's);
/// throws ConstructionError on any failure.
Code build_nr_via_octacode();

}  // namespace prepcode
