// End-to-end flows across modules: build, perturb by a space automorphism,
// and recover both the weak isometry and the automorphism.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <sstream>

#include "prepcode/construct.hpp"
#include "prepcode/isometry.hpp"
#include "prepcode/verify.hpp"

using namespace prepcode;

TEST_CASE("punctured pipeline survives a random automorphism") {
  const Code c = build_punctured_preparata();
  std::mt19937_64 rng(31);
  const SpaceAutomorphism f = SpaceAutomorphism::random(15, rng);
  const Code image = apply_automorphism(f, c);

  std::stringstream s;
  write_code(s, image);
  const Code loaded = read_code(s);
  CHECK(loaded == image);

  const Code r = reduce(loaded);
  CHECK(verify::check_structure(r, verify::Mode::punctured).pass);
  CHECK(verify::check_design(r.words_of_weight(5), 15, 2, 5).lambda == 4);
  CHECK(verify::check_corollary1(r).pass);
  CHECK(verify::check_counting_punctured(r).pass);

  const auto w = weak_isometry(c, loaded);
  REQUIRE(w.map);
  CHECK(verify_isometry(*w.map).isometry);
  const auto e = find_equivalence(c, loaded);
  REQUIRE(e.automorphism);
  CHECK(apply_automorphism(*e.automorphism, c) == loaded);
}

TEST_CASE("every puncturing of the extended code is equivalent") {
  const Code ext = build_extended_preparata(3);
  const Code base = reduce(puncture(ext, 16));
  for (int pos = 1; pos <= 15; pos += 7) {
    const Code p = puncture(ext, pos);
    const auto e = find_equivalence(base, p);
    REQUIRE(e.automorphism);
    CHECK(apply_automorphism(*e.automorphism, base) == p);
  }
}

TEST_CASE("both n=16 constructions pass the extended suite") {
  for (const Code& c : {build_extended_preparata(3), build_nr_via_octacode()}) {
    CHECK(verify::check_structure(c, verify::Mode::extended).pass);
    CHECK(verify::check_design(c.words_of_weight(6), 16, 3, 6).lambda == 4);
    CHECK(verify::check_counting_extended(c).pass);
  }
}
