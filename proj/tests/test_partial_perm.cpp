#include <algorithm>

#include "doctest.h"
#include "isemlab/partial_perm.hpp"
#include "isemlab/semigroup.hpp"

using namespace isemlab;

namespace {

// C(n,k)^2 * k! summed over k: the number of partial injections on n points.
long expected_in_size(int n) {
  auto binom = [](int a, int b) {
    long r = 1;
    for (int i = 0; i < b; ++i) r = r * (a - i) / (i + 1);
    return r;
  };
  long total = 0, fact = 1;
  for (int k = 0; k <= n; ++k) {
    if (k > 0) fact *= k;
    total += binom(n, k) * binom(n, k) * fact;
  }
  return total;
}

}  // namespace

TEST_SUITE("partial_perm") {

TEST_CASE("composition follows the point") {
  // [1->2] * [2->1] = id on {1}.
  PartialPerm f = PartialPerm::make(2, {1, PartialPerm::undefined});
  PartialPerm g = PartialPerm::make(2, {PartialPerm::undefined, 0});
  PartialPerm fg = compose(f, g);
  CHECK(fg.images == std::vector<int>{0, PartialPerm::undefined});
  CHECK(is_partial_identity(fg));
}

TEST_CASE("f f^-1 f = f") {
  PartialPerm f = PartialPerm::make(2, {1, 0});
  CHECK(compose(compose(f, invert(f)), f) == f);
}

TEST_CASE("the empty map absorbs") {
  PartialPerm g = PartialPerm::make(3, {2, 0, 1});
  PartialPerm empty = PartialPerm::empty_map(3);
  CHECK(compose(empty, g) == empty);
  CHECK(compose(g, empty) == empty);
}

TEST_CASE("invert reverses pairs and is an involution") {
  PartialPerm f = PartialPerm::make(2, {1, PartialPerm::undefined});
  CHECK(invert(f).images == std::vector<int>{PartialPerm::undefined, 0});
  PartialPerm g = PartialPerm::make(3, {2, 0, PartialPerm::undefined});
  CHECK(invert(invert(g)) == g);
}

TEST_CASE("degree mismatch is rejected") {
  CHECK_THROWS_AS(
      compose(PartialPerm::identity(2), PartialPerm::identity(3)),
      DegreeMismatchError);
  CHECK_THROWS_AS(PartialPerm::make(2, {0, 0}), IndexOutOfRangeError);
}

TEST_CASE("text form round-trips") {
  PartialPerm f = PartialPerm::make(2, {1, PartialPerm::undefined});
  CHECK(emit_partial_perm(f) == "2; 2 0");
  CHECK(parse_partial_perm("2; 2 0") == f);
  CHECK_THROWS_AS(parse_partial_perm("2; 2"), ParseError);
}

TEST_CASE("monoid sizes match the closed formula") {
  CHECK(monoid_In(1).order() == 2);
  CHECK(monoid_In(2).order() == 7);
  CHECK(monoid_In(3).order() == 34);
  CHECK(expected_in_size(2) == 7);
  CHECK(expected_in_size(3) == 34);
  CHECK(expected_in_size(4) == 209);
  CHECK_THROWS_AS(monoid_In(5), DegreeTooLargeError);
}

TEST_CASE("I_n is inverse and its idempotents are the partial identities") {
  for (int n : {1, 2, 3}) {
    FiniteSemigroup in = monoid_In(n);
    CHECK(is_inverse_semigroup(in));
    auto elems = all_partial_perms(n);
    auto idem = idempotents(in);
    CHECK(static_cast<int>(idem.size()) == (1 << n));
    for (Element e : idem) CHECK(is_partial_identity(elems[e]));
  }
}

TEST_CASE("composition in I_2 is associative elementwise") {
  auto elems = all_partial_perms(2);
  for (const auto& f : elems)
    for (const auto& g : elems)
      for (const auto& h : elems)
        CHECK(compose(compose(f, g), h) == compose(f, compose(g, h)));
}

TEST_CASE("restriction order between partial identities") {
  FiniteSemigroup in = monoid_In(2);
  auto elems = all_partial_perms(2);
  auto id_of = [&](std::vector<int> images) {
    PartialPerm p = PartialPerm::make(2, std::move(images));
    return static_cast<Element>(
        std::find(elems.begin(), elems.end(), p) - elems.begin());
  };
  Element id1 = id_of({0, PartialPerm::undefined});
  Element id12 = id_of({0, 1});
  NaturalOrder ord = natural_partial_order(in);
  CHECK(ord.leq(id1, id12));
  CHECK_FALSE(ord.leq(id12, id1));
}

TEST_CASE("closed subsets of I_1 are the three expected ones") {
  auto subsets = inverse_subsemigroup_subsets(1, 2);
  // Elements of I_1 in enumeration order: 0 = empty map, 1 = identity.
  REQUIRE(subsets.size() == 3);
  CHECK(subsets[0] == std::vector<Element>{0});
  CHECK(subsets[1] == std::vector<Element>{0, 1});
  CHECK(subsets[2] == std::vector<Element>{1});
}

TEST_CASE("singleton subsemigroups are exactly the idempotents") {
  FiniteSemigroup in = monoid_In(2);
  auto subsets = inverse_subsemigroup_subsets(2, 1);
  std::vector<Element> singletons;
  for (const auto& s : subsets) {
    REQUIRE(s.size() == 1);
    singletons.push_back(s[0]);
  }
  std::sort(singletons.begin(), singletons.end());
  CHECK(singletons == idempotents(in));
}

TEST_CASE("deduplicated subsemigroup tables are inverse semigroups") {
  auto tables = subsemigroups_up_to_order(2, 4);
  CHECK(!tables.empty());
  for (const auto& s : tables) {
    CHECK(s.order() <= 4);
    CHECK(is_inverse_semigroup(s));
  }
  // Both one-element subsemigroups of I_1 collapse to a single class.
  auto tiny = subsemigroups_up_to_order(1, 2);
  CHECK(tiny.size() == 2);  // the trivial semigroup and the two-chain
}

}  // TEST_SUITE
