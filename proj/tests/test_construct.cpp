#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "prepcode/construct.hpp"
#include "prepcode/errors.hpp"
#include "prepcode/isometry.hpp"

using namespace prepcode;

namespace {

// Direct evaluation of the (X, Y) conditions over GF(8) with polynomial
// arithmetic done by hand, for every one of the 2^16 words.
unsigned gf8_mul(unsigned a, unsigned b, unsigned modulus) {
  unsigned r = 0;
  for (int k = 0; k < 3; ++k) {
    if ((b >> k) & 1) r ^= a << k;
  }
  for (int k = 4; k >= 3; --k) {
    if ((r >> k) & 1) r ^= modulus << (k - 3);
  }
  return r;
}

std::set<std::uint64_t> brute_force_code(unsigned modulus) {
  std::set<std::uint64_t> out;
  for (std::uint64_t bits = 0; bits < (1u << 16); ++bits) {
    const BinaryWord word(16, bits);
    int nx = 0, ny = 0;
    unsigned sx = 0, sy = 0, cx = 0, cy = 0;
    for (unsigned e = 0; e < 8; ++e) {
      if (word.test(static_cast<int>(e) + 1)) {
        ++nx;
        sx ^= e;
        cx ^= gf8_mul(gf8_mul(e, e, modulus), e, modulus);
      }
      if (word.test(static_cast<int>(e) + 9)) {
        ++ny;
        sy ^= e;
        cy ^= gf8_mul(gf8_mul(e, e, modulus), e, modulus);
      }
    }
    const unsigned s3 = gf8_mul(gf8_mul(sx, sx, modulus), sx, modulus);
    if (nx % 2 == 0 && ny % 2 == 0 && sx == sy && (cx ^ s3) == cy) out.insert(bits);
  }
  return out;
}

}  // namespace

TEST_CASE("extended Preparata code equals brute-force enumeration") {
  for (unsigned modulus : {0b1011u, 0b1101u}) {
    const Code c = build_extended_preparata(3, modulus);
    const auto oracle = brute_force_code(modulus);
    CHECK(oracle.size() == 256);
    std::set<std::uint64_t> got;
    for (const auto& x : c) got.insert(x.bits());
    CHECK(got == oracle);
  }
}

TEST_CASE("construction errors") {
  CHECK_THROWS_AS(PreparataSpec(4), InputError);
  CHECK_THROWS_AS(PreparataSpec(1), InputError);
  CHECK_THROWS_AS(PreparataSpec::for_length(32), InputError);
  CHECK_THROWS_AS(build_extended_preparata(4), InputError);
  CHECK_THROWS_AS(build_extended_preparata(5), CapabilityError);
  CHECK_THROWS_AS(build_extended_preparata(3, 0b1111), ConstructionError);
}

TEST_CASE("membership oracle") {
  const PreparataSpec spec(3);
  CHECK(spec.length() == 16);
  CHECK(spec.log2_size() == 8);
  CHECK(spec.is_member(BinaryWord::zeros(16)));
  for (int a = 1; a <= 16; ++a) {
    for (int b = a + 1; b <= 16; ++b) {
      const std::array<int, 2> s{a, b};
      CHECK_FALSE(spec.is_member(BinaryWord::from_support(16, s)));
    }
  }
  CHECK_THROWS_AS(spec.is_member(BinaryWord::zeros(15)), InputError);
  const Code c = build_extended_preparata(3);
  for (std::uint64_t bits = 0; bits < (1u << 16); ++bits) {
    REQUIRE(spec.is_member(BinaryWord(16, bits)) == c.contains_bits(bits));
  }
}

TEST_CASE("subset masks round trip") {
  const PreparataSpec spec(5);
  CHECK(spec.length() == 64);
  CHECK(spec.log2_size() == 52);
  std::mt19937_64 rng(11);
  for (int k = 0; k < 50; ++k) {
    const std::uint64_t xm = rng() & 0xFFFFFFFF, ym = rng() & 0xFFFFFFFF;
    const BinaryWord word = spec.word_from_subsets(xm, ym);
    CHECK(spec.x_mask(word) == xm);
    CHECK(spec.y_mask(word) == ym);
  }
}

TEST_CASE("random members at n=64 satisfy the conditions and keep distance 6") {
  const PreparataSpec spec(5);
  std::mt19937_64 rng(5);
  std::vector<BinaryWord> members;
  for (int k = 0; k < 200; ++k) {
    members.push_back(spec.random_member(rng));
    CHECK(spec.is_member(members.back()));
  }
  for (std::size_t a = 0; a < members.size(); ++a) {
    for (std::size_t b = a + 1; b < members.size(); ++b) {
      if (members[a] != members[b]) CHECK(hamming_distance(members[a], members[b]) >= 6);
    }
  }
}

TEST_CASE("random members at n=16 are codewords") {
  const PreparataSpec spec(3);
  const Code c = build_extended_preparata(3);
  std::mt19937_64 rng(9);
  for (int k = 0; k < 500; ++k) CHECK(c.contains(spec.random_member(rng)));
}

TEST_CASE("different primitive polynomials give equivalent codes") {
  const Code a = build_extended_preparata(3, 0b1011);
  const Code b = build_extended_preparata(3, 0b1101);
  const auto r = find_equivalence(a, b);
  REQUIRE(r.automorphism);
  CHECK(apply_automorphism(*r.automorphism, a) == b);
}

TEST_CASE("Hensel lift and the octacode") {
  const z4::Poly g = z4::hensel_lift({1, 1, 0, 1});
  CHECK(g == z4::Poly{3, 1, 2, 1});
  CHECK(z4::divides_xn_minus_1(g, 7));
  CHECK_FALSE(z4::divides_xn_minus_1({1, 1, 0, 1}, 7));
  const auto octa = z4::extended_cyclic_code(g, 7);
  CHECK(octa.size() == 256);
  int min_lee = 100;
  for (const auto& v : octa) {
    CHECK(v.size() == 8);
    int sum = 0;
    for (int d : v) sum += d;
    CHECK(sum % 4 == 0);
    if (z4::lee_weight(v) > 0) min_lee = std::min(min_lee, z4::lee_weight(v));
    for (const auto& u : octa) {
      int dot = 0;
      for (std::size_t k = 0; k < 8; ++k) dot += u[k] * v[k];
      REQUIRE(dot % 4 == 0);
    }
  }
  CHECK(min_lee == 6);
  CHECK(z4::gray_image(std::vector<int>(8, 0)) == BinaryWord::zeros(16));
  CHECK(z4::gray_image({1, 0, 0, 0, 0, 0, 0, 0}).support() == std::vector<int>{9});
  CHECK(z4::gray_image({2, 0, 0, 0, 0, 0, 0, 0}).support() == std::vector<int>{1, 9});
  CHECK(z4::gray_image({3, 0, 0, 0, 0, 0, 0, 0}).support() == std::vector<int>{1});
  CHECK(z4::lee_weight({1, 2, 3, 0}) == 4);
}

TEST_CASE("Gray map turns Lee distance into Hamming distance") {
  const auto octa = z4::extended_cyclic_code(z4::hensel_lift({1, 1, 0, 1}), 7);
  for (std::size_t a = 0; a < octa.size(); a += 7) {
    for (std::size_t b = 0; b < octa.size(); b += 5) {
      std::vector<int> diff(8);
      for (std::size_t k = 0; k < 8; ++k) diff[k] = (octa[a][k] - octa[b][k] + 4) % 4;
      CHECK(hamming_distance(z4::gray_image(octa[a]), z4::gray_image(octa[b])) == z4::lee_weight(diff));
    }
  }
}

TEST_CASE("octacode Gray image") {
  const Code nr = build_nr_via_octacode();
  CHECK(nr.length() == 16);
  CHECK(nr.size() == 256);
  CHECK(nr.distance() == 6);
  CHECK(nr.reduced());
  CHECK(weight_distribution(nr) == weight_distribution(build_extended_preparata(3)));
}

TEST_CASE("punctured code") {
  const Code p = build_punctured_preparata();
  CHECK(p.length() == 15);
  CHECK(p.reduced());
  CHECK(p.words_of_weight(5).size() == 42);
}
