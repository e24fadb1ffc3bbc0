#include "prepcode/gf2m.hpp"

#include <bit>
#include <string>

#include "prepcode/errors.hpp"

namespace prepcode::gf2m {

std::uint32_t FieldTable::default_modulus(int m) {
  switch (m) {
    case 2: return 0b111;
    case 3: return 0b1011;
    case 4: return 0b10011;
    case 5: return 0b100101;
    case 6: return 0b1000011;
    case 7: return 0b10000011;
    case 8: return 0b100011101;
    default: throw InputError("field degree must be in [2, 8], got " + std::to_string(m));
  }
}

FieldTable FieldTable::standard(int m) { return FieldTable(m, default_modulus(m)); }

FieldTable::FieldTable(int m, std::uint32_t modulus) : m_(m), modulus_(modulus) {
  if (m < 2 || m > 8) throw InputError("field degree must be in [2, 8], got " + std::to_string(m));
  if (std::bit_width(modulus) != static_cast<unsigned>(m + 1)) {
    throw ConstructionError("modulus does not have degree " + std::to_string(m));
  }
  const std::uint32_t q = std::uint32_t{1} << m;
  exp_.assign(q - 1, 0);
  log_.assign(q, 0);
  // Walk the powers of x; primitive iff the first return to 1 is at 2^m - 1.
  Element a = 1;
  for (unsigned k = 0; k < q - 1; ++k) {
    if (k > 0 && a == 1) {
      throw ConstructionError("modulus is not primitive: x has order " + std::to_string(k));
    }
    exp_[k] = a;
    log_[a] = k;
    a <<= 1;
    if (a & q) a ^= modulus;
  }
  if (a != 1) throw ConstructionError("modulus is not primitive (x^(2^m-1) != 1)");
}

void FieldTable::check(Element a) const {
  if (a >= size()) {
    throw InputError("element " + std::to_string(a) + " outside GF(2^" + std::to_string(m_) + ")");
  }
}

Element FieldTable::add(Element a, Element b) const {
  check(a);
  check(b);
  return a ^ b;
}

Element FieldTable::mul(Element a, Element b) const {
  check(a);
  check(b);
  if (a == 0 || b == 0) return 0;
  return exp_[(log_[a] + log_[b]) % order()];
}

Element FieldTable::inverse(Element a) const {
  check(a);
  if (a == 0) throw InputError("zero has no inverse");
  return exp_[(order() - log_[a]) % order()];
}

Element FieldTable::pow(Element a, unsigned e) const {
  check(a);
  if (e == 0) return 1;
  if (a == 0) return 0;
  return exp_[static_cast<unsigned>((static_cast<std::uint64_t>(log_[a]) * e) % order())];
}

Element FieldTable::elem_sum(std::span<const Element> elems) const {
  Element s = 0;
  for (Element a : elems) {
    check(a);
    s ^= a;
  }
  return s;
}

unsigned FieldTable::log(Element a) const {
  check(a);
  if (a == 0) throw InputError("log of zero");
  return log_[a];
}

}  // namespace prepcode::gf2m
