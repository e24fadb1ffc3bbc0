#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace prepcode::gf2m {

/// Field elements are polynomial bitmasks over GF(2): bit k is the coefficient of x^k.
using Element = std::uint32_t;

/// Log/antilog tables for GF(2^m), 2 <= m <= 8, built from a primitive modulus.
class FieldTable {
 public:
  /// Throws ConstructionError unless `modulus` has degree m and x generates
  /// the full multiplicative group (order 2^m - 1).
  FieldTable(int m, std::uint32_t modulus);

  /// Uses default_modulus(m).
  static FieldTable standard(int m);
  /// x^3+x+1 for m=3, x^5+x^2+1 for m=5, and the usual primitive trinomials /
  /// pentanomials for the other degrees in [2, 8].
  static std::uint32_t default_modulus(int m);

  int degree() const noexcept { return m_; }
  std::uint32_t modulus() const noexcept { return modulus_; }
  std::uint32_t size() const noexcept { return std::uint32_t{1} << m_; }

  Element add(Element a, Element b) const;
  Element mul(Element a, Element b) const;
  Element square(Element a) const { return mul(a, a); }
  Element cube(Element a) const { return mul(mul(a, a), a); }
  Element inverse(Element a) const;
  Element pow(Element a, unsigned e) const;
  /// Characteristic-2 sum of a set of elements.
  Element elem_sum(std::span<const Element> elems) const;

  /// x^k for the primitive element x.
  Element exp(unsigned k) const { return exp_[k % order()]; }
  unsigned log(Element a) const;

 private:
  unsigned order() const noexcept { return size() - 1; }
  void check(Element a) const;

  int m_;
  std::uint32_t modulus_;
  std::vector<Element> exp_;
  std::vector<unsigned> log_;
};

}  // namespace prepcode::gf2m
