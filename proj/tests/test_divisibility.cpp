#include "doctest.h"
#include "isemlab/divisibility.hpp"
#include "isemlab/morphisms.hpp"
#include "isemlab/samples.hpp"

using namespace isemlab;

TEST_SUITE("divisibility") {

TEST_CASE("odd cyclic groups are uniquely 2-divisible") {
  SquaringAnalysis a = analyze_squaring(samples::cyclic_group(3));
  REQUIRE(a.bijective);
  // a^(1/2) = a^2 since (a^2)^2 = a.
  CHECK(a.roots->images == std::vector<Element>{0, 2, 1});
}

TEST_CASE("even groups are not") {
  SquaringAnalysis a = analyze_squaring(samples::cyclic_group(2));
  CHECK_FALSE(a.bijective);
  CHECK_FALSE(a.roots.has_value());
  CHECK_THROWS_AS(sqrt_of(samples::cyclic_group(2), 1),
                  NotUniquely2DivisibleError);
}

TEST_CASE("bands have identity roots") {
  SquaringAnalysis a = analyze_squaring(samples::band_b4());
  REQUIRE(a.bijective);
  CHECK(a.roots->images == std::vector<Element>{0, 1, 2, 3});
  CHECK(sqrt_of(samples::band_b4(), 2) == 2);
  CHECK(inv_sqrt(samples::band_b4(), 2) == 2);
}

TEST_CASE("square roots on C3") {
  FiniteSemigroup c3 = samples::cyclic_group(3);
  CHECK(sqrt_of(c3, 1) == 2);
  CHECK(c3.product(sqrt_of(c3, 1), sqrt_of(c3, 1)) == 1);
}

TEST_CASE("inverse square root on C3 with zero") {
  FiniteSemigroup s = samples::with_zero(samples::cyclic_group(3));
  // (a^-1)^(1/2) = (a^2)^(1/2) = a.
  CHECK(inv_sqrt(s, 1) == 1);
  CHECK(inv_sqrt(s, 3) == 3);
}

TEST_CASE("roots and squares invert each other") {
  for (const FiniteSemigroup& s :
       {samples::cyclic_group(5), samples::band_b4(),
        samples::with_zero(samples::cyclic_group(3))}) {
    SquaringAnalysis a = analyze_squaring(s);
    REQUIRE(a.bijective);
    for (Element x = 0; x < s.order(); ++x) {
      CHECK((*a.roots)(a.squares(x)) == x);
      CHECK(a.squares((*a.roots)(x)) == x);
    }
  }
}

TEST_CASE("roots commute with automorphisms") {
  for (const FiniteSemigroup& s :
       {samples::cyclic_group(5), samples::cyclic_group(9),
        samples::with_zero(samples::cyclic_group(3))}) {
    SquaringAnalysis a = analyze_squaring(s);
    REQUIRE(a.bijective);
    for (const auto& alpha : automorphism_group(s))
      for (Element x = 0; x < s.order(); ++x)
        CHECK((*a.roots)(alpha(x)) == alpha((*a.roots)(x)));
  }
}

TEST_CASE("root of the inverse is the inverse of the root") {
  for (const FiniteSemigroup& s :
       {samples::cyclic_group(7), samples::chain_semilattice(3),
        samples::with_zero(samples::cyclic_group(5))}) {
    SquaringAnalysis a = analyze_squaring(s);
    REQUIRE(a.bijective);
    UnaryMap inv = inversion_map(s);
    for (Element x = 0; x < s.order(); ++x)
      CHECK(inv((*a.roots)(x)) == (*a.roots)(inv(x)));
  }
}

TEST_CASE("a finite group is uniquely 2-divisible iff its order is odd") {
  for (int n = 1; n <= 12; ++n)
    CHECK(is_uniquely_2_divisible(samples::cyclic_group(n)) == (n % 2 == 1));
  CHECK_FALSE(is_uniquely_2_divisible(samples::symmetric_group(3)));
  CHECK_FALSE(is_uniquely_2_divisible(samples::quaternion_group()));
}

}  // TEST_SUITE
