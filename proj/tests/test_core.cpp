#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <random>
#include <sstream>

#include "prepcode/code.hpp"
#include "prepcode/construct.hpp"
#include "prepcode/errors.hpp"

using namespace prepcode;

namespace {

BinaryWord w(std::string_view s) { return BinaryWord::from_string(s); }

// Coordinate-by-coordinate oracle, independent of the bit layout.
int naive_distance(const BinaryWord& a, const BinaryWord& b) {
  const std::string sa = a.to_string(), sb = b.to_string();
  int d = 0;
  for (std::size_t k = 0; k < sa.size(); ++k) d += sa[k] != sb[k];
  return d;
}

}  // namespace

TEST_CASE("word layout: coordinate 1 is the most significant bit") {
  const BinaryWord x = w("1000");
  CHECK(x.bits() == 0b1000);
  CHECK(x.test(1));
  CHECK_FALSE(x.test(4));
  CHECK(x.to_hex() == "8");
  CHECK(w("0000000000000001").to_hex() == "0001");
  CHECK(BinaryWord::from_hex("0001", 16) == w("0000000000000001"));
  // 15 coordinates in 4 nibbles: the trailing pad bit must be zero
  CHECK(BinaryWord::from_hex("0002", 15).support() == std::vector<int>{15});
  CHECK_THROWS_AS(BinaryWord::from_hex("0001", 15), InputError);
  CHECK_THROWS_AS(BinaryWord::from_hex("00G0", 16), InputError);
  CHECK_THROWS_AS(BinaryWord::from_hex("000", 16), InputError);
  CHECK_THROWS_AS(BinaryWord(65, 0), InputError);
  CHECK_THROWS_AS(BinaryWord(4, 0x10), InputError);
}

TEST_CASE("word support, flip and order") {
  const std::array<int, 3> s{1, 2, 3};
  const BinaryWord x = BinaryWord::from_support(16, s);
  CHECK(x.support() == std::vector<int>{1, 2, 3});
  CHECK(x.weight() == 3);
  CHECK(x.flipped(2).support() == std::vector<int>{1, 3});
  CHECK(w("0011") < w("0100"));
  CHECK(BinaryWord::ones(64).weight() == 64);
}

TEST_CASE("hamming distance examples") {
  const BinaryWord x = w("0110100111010010");
  CHECK(hamming_distance(x, x) == 0);
  const std::array<int, 3> s{1, 2, 3};
  CHECK(hamming_distance(BinaryWord::zeros(16), BinaryWord::from_support(16, s)) == 3);
  CHECK(hamming_distance(BinaryWord::zeros(16), BinaryWord::ones(16)) == 16);
  CHECK_THROWS_AS(hamming_distance(BinaryWord::zeros(15), BinaryWord::zeros(16)), InputError);
}

TEST_CASE("hamming distance against a character oracle") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 64);
    const BinaryWord a(n, rng() & BinaryWord::mask(n)), b(n, rng() & BinaryWord::mask(n));
    CHECK(hamming_distance(a, b) == naive_distance(a, b));
    CHECK(a.weight() == naive_distance(a, BinaryWord::zeros(n)));
  }
}

TEST_CASE("code construction and minimum distance") {
  CHECK_THROWS_AS(Code(4, {w("0000"), w("0000")}), InputError);
  CHECK_THROWS_AS(Code(4, {w("0000"), w("000")}), InputError);
  const Code single(4, {w("0101")});
  CHECK_FALSE(single.distance().has_value());
  CHECK_THROWS_AS(single.require_distance(), InputError);
  const Code pair(8, {w("00000000"), w("00010000")});
  CHECK(pair.distance() == 1);
  CHECK(pair.reduced());
  CHECK(pair.contains(w("00010000")));
  CHECK(pair.index_of(w("00010000")) == 1);
  CHECK_FALSE(pair.index_of(w("11111111")));
}

TEST_CASE("min distance of the Preparata codes") {
  const Code ext = build_extended_preparata(3);
  CHECK(ext.length() == 16);
  CHECK(ext.size() == 256);
  CHECK(ext.distance() == 6);
  const Code pun = build_punctured_preparata();
  CHECK(pun.distance() == 5);
  CHECK(min_distance(ext.words()) == 6);
  CHECK_THROWS_AS(min_distance(ext.words(), 100), InputError);
}

TEST_CASE("weight distributions") {
  CHECK(weight_distribution(build_extended_preparata(3)) ==
        WeightDistribution{{0, 1}, {6, 112}, {8, 30}, {10, 112}, {16, 1}});
  CHECK(weight_distribution(build_punctured_preparata()) ==
        WeightDistribution{{0, 1}, {5, 42}, {6, 70}, {7, 15}, {8, 15}, {9, 70}, {10, 42}, {15, 1}});
  const Code trivial(9, {BinaryWord::zeros(9), BinaryWord::ones(9)});
  CHECK(weight_distribution(trivial) == WeightDistribution{{0, 1}, {9, 1}});
}

TEST_CASE("translate and reduce") {
  const Code c = build_extended_preparata(3);
  CHECK(translate(c, BinaryWord::zeros(16)) == c);
  CHECK(reduce(c) == c);
  std::mt19937_64 rng(3);
  const BinaryWord t(16, rng() & 0xFFFF);
  const Code shifted = translate(c, t);
  CHECK(shifted.distance() == 6);
  const Code back = reduce(shifted);
  CHECK(back.reduced());
  CHECK(back.distance() == 6);
  for (const auto& x : c) CHECK(translate(c, x).reduced());
}

TEST_CASE("puncture") {
  const Code c(4, {w("0000"), w("1111")});
  CHECK(puncture(c, 1) == Code(3, {w("000"), w("111")}));
  CHECK_THROWS_AS(puncture(Code(3, {w("000"), w("001")}), 3), StructuralError);
  CHECK_THROWS_AS(puncture(c, 0), InputError);
  CHECK_THROWS_AS(puncture(c, 5), InputError);
  const Code ext = build_extended_preparata(3);
  for (int pos = 1; pos <= 16; ++pos) {
    const Code p = puncture(ext, pos);
    CHECK(p.length() == 15);
    CHECK(p.size() == 256);
    CHECK(p.distance() == 5);
  }
}

TEST_CASE("code file round trip and parse errors") {
  const Code c = build_extended_preparata(3);
  std::stringstream s;
  write_code(s, c);
  CHECK(read_code(s) == c);

  std::stringstream pun;
  write_code(pun, build_punctured_preparata());
  CHECK(read_code(pun) == build_punctured_preparata());

  auto parse = [](const std::string& text) {
    std::istringstream in(text);
    return read_code(in);
  };
  CHECK(parse("# prepcode v1\nn=4 m=2 d=?\n0\nF\n").distance() == 4);
  CHECK_THROWS_AS(parse("# prepcode v1\nn=4 m=3 d=?\n0\nF\n"), ParseError);
  CHECK_THROWS_AS(parse("# prepcode v1\nn=16 m=2 d=?\n0000\n00G0\n"), ParseError);
  CHECK_THROWS_AS(parse("# prepcode v1\nn=4 m=2 d=?\n0\n0\n"), ParseError);
  CHECK_THROWS_AS(parse("# prepcode v1\nn=4 m=2 d=3\n0\nF\n"), ParseError);
  CHECK_THROWS_AS(parse("garbage\n"), ParseError);
  try {
    parse("# prepcode v1\nn=16 m=2 d=?\n0000\n00G0\n");
  } catch (const ParseError& e) {
    CHECK(e.line() == 4);
  }

  // header says 256 rows, file has 255
  std::stringstream full;
  write_code(full, c);
  std::string text = full.str();
  text.erase(text.find_last_of('\n', text.size() - 2) + 1);
  CHECK_THROWS_AS(parse(text), ParseError);

  CHECK_THROWS_AS(read_code_file("/nonexistent/x.code"), IoError);
}
