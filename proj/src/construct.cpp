#include "prepcode/construct.hpp"

#include <bit>
#include <string>

#include "prepcode/errors.hpp"
#include "prepcode/kernels.hpp"

namespace prepcode {

namespace {

gf2m::FieldTable make_field(int m_field, std::optional<std::uint32_t> modulus) {
  if (m_field % 2 == 0) {
    throw InputError("Preparata construction needs an odd field degree, got " +
                     std::to_string(m_field));
  }
  if (m_field < 3 || m_field > 5) {
    throw InputError("field degree must be 3 or 5 (n = 16 or 64), got " + std::to_string(m_field));
  }
  return modulus ? gf2m::FieldTable(m_field, *modulus) : gf2m::FieldTable::standard(m_field);
}

struct SubsetSums {
  gf2m::Element sum = 0;
  gf2m::Element cube_sum = 0;
};

SubsetSums subset_sums(const gf2m::FieldTable& f, std::uint64_t mask) {
  SubsetSums s;
  while (mask != 0) {
    const auto e = static_cast<gf2m::Element>(std::countr_zero(mask));
    s.sum ^= e;
    s.cube_sum ^= f.cube(e);
    mask &= mask - 1;
  }
  return s;
}

std::uint64_t random_even_subset(int q, std::mt19937_64& rng) {
  std::uint64_t mask = rng() & BinaryWord::mask(q);
  if (std::popcount(mask) % 2 != 0) mask ^= std::uint64_t{1} << (rng() % static_cast<unsigned>(q));
  return mask;
}

}  // namespace

PreparataSpec::PreparataSpec(int m_field, std::optional<std::uint32_t> modulus)
    : field_(make_field(m_field, modulus)) {}

PreparataSpec PreparataSpec::for_length(int n, std::optional<std::uint32_t> modulus) {
  switch (n) {
    case 16: return PreparataSpec(3, modulus);
    case 64: return PreparataSpec(5, modulus);
    default:
      throw InputError("Preparata length must be 16 or 64 here, got " + std::to_string(n));
  }
}

BinaryWord PreparataSpec::word_from_subsets(std::uint64_t x_mask, std::uint64_t y_mask) const {
  const int q = static_cast<int>(field_.size());
  const int n = 2 * q;
  std::uint64_t bits = 0;
  for (int e = 0; e < q; ++e) {
    if ((x_mask >> e) & 1) bits |= std::uint64_t{1} << BinaryWord::bit_of(n, e + 1);
    if ((y_mask >> e) & 1) bits |= std::uint64_t{1} << BinaryWord::bit_of(n, q + e + 1);
  }
  return BinaryWord(n, bits);
}

std::uint64_t PreparataSpec::x_mask(const BinaryWord& w) const {
  const int q = static_cast<int>(field_.size());
  std::uint64_t mask = 0;
  for (int e = 0; e < q; ++e) {
    if ((w.bits() >> BinaryWord::bit_of(2 * q, e + 1)) & 1) mask |= std::uint64_t{1} << e;
  }
  return mask;
}

std::uint64_t PreparataSpec::y_mask(const BinaryWord& w) const {
  const int q = static_cast<int>(field_.size());
  std::uint64_t mask = 0;
  for (int e = 0; e < q; ++e) {
    if ((w.bits() >> BinaryWord::bit_of(2 * q, q + e + 1)) & 1) mask |= std::uint64_t{1} << e;
  }
  return mask;
}

bool PreparataSpec::is_member(const BinaryWord& w) const {
  if (w.length() != length()) {
    throw InputError("is_member: word length " + std::to_string(w.length()) + " != " +
                     std::to_string(length()));
  }
  const std::uint64_t xm = x_mask(w);
  const std::uint64_t ym = y_mask(w);
  if (std::popcount(xm) % 2 != 0 || std::popcount(ym) % 2 != 0) return false;
  const SubsetSums x = subset_sums(field_, xm);
  const SubsetSums y = subset_sums(field_, ym);
  return x.sum == y.sum && (x.cube_sum ^ field_.cube(x.sum)) == y.cube_sum;
}

BinaryWord PreparataSpec::random_member(std::mt19937_64& rng) const {
  const int q = static_cast<int>(field_.size());
  for (;;) {
    const std::uint64_t xm = random_even_subset(q, rng);
    std::uint64_t ym = random_even_subset(q, rng);
    const SubsetSums x = subset_sums(field_, xm);
    const SubsetSums y = subset_sums(field_, ym);
    const gf2m::Element alpha = x.sum ^ y.sum;
    const gf2m::Element beta = x.cube_sum ^ field_.cube(x.sum) ^ y.cube_sum;
    if (alpha == 0) {
      if (beta == 0) return word_from_subsets(xm, ym);
      continue;
    }
    // Toggle {a, a + alpha} in Y: shifts sum Y by alpha and the cube sum by a^3 + (a+alpha)^3.
    for (gf2m::Element a = 0; a < field_.size(); ++a) {
      const gf2m::Element b = a ^ alpha;
      if ((field_.cube(a) ^ field_.cube(b)) == beta) {
        ym ^= (std::uint64_t{1} << a) | (std::uint64_t{1} << b);
        return word_from_subsets(xm, ym);
      }
    }
  }
}

Code build_extended_preparata(int m_field, std::optional<std::uint32_t> modulus) {
  if (m_field % 2 == 0) {
    throw InputError("Preparata construction needs an odd field degree, got " +
                     std::to_string(m_field));
  }
  if (m_field >= 5) {
    throw CapabilityError("full enumeration only at m_field = 3; use membership mode for n = " +
                          std::to_string(2 << m_field));
  }
  const PreparataSpec spec(m_field, modulus);
  const auto& f = spec.field();
  const int q = static_cast<int>(f.size());
  const std::size_t subsets = std::size_t{1} << q;
  std::vector<std::uint32_t> sums(subsets), cube_sums(subsets), cubes(f.size());
  for (gf2m::Element e = 0; e < f.size(); ++e) cubes[e] = f.cube(e);
  for (std::size_t mask = 0; mask < subsets; ++mask) {
    const SubsetSums s = subset_sums(f, mask);
    sums[mask] = s.sum;
    cube_sums[mask] = s.cube_sum;
  }
  const auto pairs = kernels::omp::enumerate_xy_pairs(q, sums, cube_sums, cubes);
  std::vector<BinaryWord> words;
  words.reserve(pairs.size());
  const std::uint64_t y_bits = BinaryWord::mask(q);
  for (std::uint64_t p : pairs) words.push_back(spec.word_from_subsets(p >> q, p & y_bits));
  return Code(spec.length(), std::move(words));
}

Code build_punctured_preparata(int m_field, int pos) {
  return reduce(puncture(build_extended_preparata(m_field), pos));
}

namespace z4 {

namespace {

int mod4(int v) { return ((v % 4) + 4) % 4; }

Poly multiply(const Poly& a, const Poly& b) {
  Poly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = mod4(out[i + j] + a[i] * b[j]);
  }
  return out;
}

}  // namespace

Poly hensel_lift(const Poly& binary) {
  if (binary.empty() || binary.back() != 1) throw InputError("hensel_lift: polynomial must be monic");
  const int degree = static_cast<int>(binary.size()) - 1;
  Poly even(binary.size(), 0), odd(binary.size(), 0);
  for (std::size_t k = 0; k < binary.size(); ++k) {
    if (binary[k] != 0 && binary[k] != 1) throw InputError("hensel_lift: not a binary polynomial");
    (k % 2 == 0 ? even : odd)[k] = binary[k];
  }
  const Poly e2 = multiply(even, even);
  const Poly o2 = multiply(odd, odd);
  const int sign = degree % 2 == 0 ? 1 : -1;
  Poly lifted(static_cast<std::size_t>(degree) + 1, 0);
  for (std::size_t k = 0; k < e2.size(); ++k) {
    const int v = mod4(sign * (e2[k] - o2[k]));
    if (k % 2 != 0) {
      if (v != 0) throw ConstructionError("hensel_lift: odd-degree term survived the Graeffe step");
      continue;
    }
    lifted[k / 2] = v;
  }
  if (lifted.back() != 1) throw ConstructionError("hensel_lift: lift is not monic");
  return lifted;
}

bool divides_xn_minus_1(const Poly& g, int len) {
  if (g.empty() || g.back() != 1) throw InputError("divides_xn_minus_1: g must be monic");
  Poly rem(static_cast<std::size_t>(len) + 1, 0);
  rem[0] = 3;  // -1 mod 4
  rem[static_cast<std::size_t>(len)] = 1;
  const std::size_t dg = g.size() - 1;
  for (std::size_t top = rem.size() - 1; top >= dg; --top) {
    const int c = rem[top];
    if (c != 0) {
      for (std::size_t k = 0; k <= dg; ++k) rem[top - dg + k] = mod4(rem[top - dg + k] - c * g[k]);
    }
    if (top == dg) break;
  }
  for (std::size_t k = 0; k < dg; ++k) {
    if (rem[k] != 0) return false;
  }
  return true;
}

std::vector<std::vector<int>> extended_cyclic_code(const Poly& g, int len) {
  const int dim = len - (static_cast<int>(g.size()) - 1);
  if (dim <= 0) throw InputError("extended_cyclic_code: generator degree too large");
  std::vector<std::vector<int>> words;
  int total = 1;
  for (int k = 0; k < dim; ++k) total *= 4;
  words.reserve(static_cast<std::size_t>(total));
  for (int idx = 0; idx < total; ++idx) {
    Poly msg(static_cast<std::size_t>(dim));
    for (int k = 0, v = idx; k < dim; ++k, v /= 4) msg[static_cast<std::size_t>(k)] = v % 4;
    const Poly prod = multiply(msg, g);
    std::vector<int> word(static_cast<std::size_t>(len) + 1, 0);
    for (std::size_t k = 0; k < prod.size(); ++k) {
      auto& digit = word[k % static_cast<std::size_t>(len)];
      digit = mod4(digit + prod[k]);
    }
    int sum = 0;
    for (int k = 0; k < len; ++k) sum += word[static_cast<std::size_t>(k)];
    word[static_cast<std::size_t>(len)] = mod4(-sum);
    words.push_back(std::move(word));
  }
  return words;
}

int lee_weight(const std::vector<int>& word) {
  int w = 0;
  for (int d : word) w += (d == 0) ? 0 : (d == 2 ? 2 : 1);
  return w;
}

BinaryWord gray_image(const std::vector<int>& word) {
  static constexpr int kGray[4][2] = {{0, 0}, {0, 1}, {1, 1}, {1, 0}};
  const int len = static_cast<int>(word.size());
  const int n = 2 * len;
  std::uint64_t bits = 0;
  for (int i = 0; i < len; ++i) {
    const int digit = word[static_cast<std::size_t>(i)];
    if (digit < 0 || digit > 3) throw InputError("gray_image: digit outside Z4");
    if (kGray[digit][0]) bits |= std::uint64_t{1} << BinaryWord::bit_of(n, i + 1);
    if (kGray[digit][1]) bits |= std::uint64_t{1} << BinaryWord::bit_of(n, i + 1 + len);
  }
  return BinaryWord(n, bits);
}

}  // namespace z4

Code build_nr_via_octacode() {
  const z4::Poly hamming_generator = {1, 1, 0, 1};  // x^3 + x + 1
  const z4::Poly g = z4::hensel_lift(hamming_generator);
  if (!z4::divides_xn_minus_1(g, 7)) {
    throw ConstructionError("octacode: lifted generator does not divide x^7 - 1 over Z4");
  }
  const auto octacode = z4::extended_cyclic_code(g, 7);

  // Self-dual: 4^4 words of length 8, pairwise orthogonal mod 4.
  for (std::size_t a = 0; a < octacode.size(); ++a) {
    for (std::size_t b = a; b < octacode.size(); ++b) {
      int dot = 0;
      for (std::size_t k = 0; k < 8; ++k) dot += octacode[a][k] * octacode[b][k];
      if (dot % 4 != 0) throw ConstructionError("octacode: not self-orthogonal");
    }
  }
  int min_lee = 1 << 30;
  for (const auto& w : octacode) {
    const int lw = z4::lee_weight(w);
    if (lw > 0 && lw < min_lee) min_lee = lw;
  }
  if (min_lee != 6) {
    throw ConstructionError("octacode: minimum Lee weight " + std::to_string(min_lee) + " != 6");
  }

  std::vector<BinaryWord> words;
  words.reserve(octacode.size());
  for (const auto& w : octacode) words.push_back(z4::gray_image(w));
  Code code(16, std::move(words));
  if (code.size() != 256) throw ConstructionError("octacode: Gray image has repeated words");
  if (weight_distribution(code) != weight_distribution(build_extended_preparata(3))) {
    throw ConstructionError("octacode: Gray image weight distribution differs from the (X,Y) code");
  }
  return code;
}

}  // namespace prepcode
