#include <algorithm>

#include "doctest.h"
#include "isemlab/nilpotence.hpp"
#include "isemlab/samples.hpp"

using namespace isemlab;

namespace {

// Commutator set of S3 computed directly, as an oracle for the series.
std::vector<Element> s3_commutators() {
  FiniteSemigroup g = samples::symmetric_group(3);
  std::vector<Element> inv(6);
  for (Element x = 0; x < 6; ++x)
    for (Element y = 0; y < 6; ++y)
      if (g.product(x, y) == 0 && g.product(y, x) == 0) inv[x] = y;
  std::vector<Element> out;
  for (Element a = 0; a < 6; ++a)
    for (Element b = 0; b < 6; ++b)
      out.push_back(g.product(g.product(inv[a], inv[b]), g.product(a, b)));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

TEST_SUITE("nilpotence") {

TEST_CASE("group recognition") {
  CHECK(is_group(samples::cyclic_group(3)));
  CHECK(is_group(samples::trivial_semigroup()));
  CHECK_FALSE(is_group(samples::chain_semilattice(2)));
  CHECK_FALSE(is_group(samples::band_b4()));
  CHECK_FALSE(is_group(samples::brandt_b2()));
  CHECK_THROWS_AS(lower_central_series(samples::band_b4()), NotAGroupError);
}

TEST_CASE("S3 stops at its commutator subgroup") {
  FiniteSemigroup s3 = samples::symmetric_group(3);
  CentralSeries series = lower_central_series(s3);
  CHECK_FALSE(series.terminates);
  CHECK_FALSE(series.nilpotency_class.has_value());
  REQUIRE(series.chain.size() >= 2);
  // The second term is the alternating subgroup, per the direct commutator
  // scan: identity and the two 3-cycles.
  CHECK(series.chain.back() == s3_commutators());
  CHECK(series.chain.back().size() == 3);
  CHECK_FALSE(is_nilpotent_group(s3));
}

TEST_CASE("abelian groups have class at most one") {
  CentralSeries trivial = lower_central_series(samples::trivial_semigroup());
  CHECK(trivial.terminates);
  CHECK(trivial.nilpotency_class == 0);
  CentralSeries c6 = lower_central_series(samples::cyclic_group(6));
  CHECK(c6.terminates);
  CHECK(c6.nilpotency_class == 1);
}

TEST_CASE("the dihedral group of order 8 has class two") {
  CentralSeries series = lower_central_series(samples::dihedral_group(4));
  CHECK(series.terminates);
  CHECK(series.nilpotency_class == 2);
  CHECK(is_nilpotent_group(samples::dihedral_group(4)));
}

TEST_CASE("the quaternion group is nilpotent of class two") {
  CentralSeries series = lower_central_series(samples::quaternion_group());
  CHECK(series.terminates);
  CHECK(series.nilpotency_class == 2);
}

TEST_CASE("the series is strictly decreasing until it stabilizes") {
  for (const FiniteSemigroup& g :
       {samples::symmetric_group(4), samples::dihedral_group(6),
        samples::quaternion_group(), samples::cyclic_group(12)}) {
    CentralSeries series = lower_central_series(g);
    for (size_t i = 1; i < series.chain.size(); ++i) {
      CHECK(series.chain[i].size() < series.chain[i - 1].size());
      CHECK(std::includes(series.chain[i - 1].begin(),
                          series.chain[i - 1].end(), series.chain[i].begin(),
                          series.chain[i].end()));
    }
    CHECK(series.chain.size() <= static_cast<size_t>(g.order()));
  }
}

TEST_CASE("series test agrees with the Sylow normality test") {
  auto agree = [](const FiniteSemigroup& g) {
    CHECK(is_nilpotent_group(g) == is_nilpotent_group_sylow(g));
  };
  agree(samples::symmetric_group(3));
  agree(samples::symmetric_group(4));
  agree(samples::dihedral_group(4));
  agree(samples::dihedral_group(5));
  agree(samples::dihedral_group(6));
  agree(samples::quaternion_group());
  for (int n = 1; n <= 16; ++n) agree(samples::cyclic_group(n));
  agree(samples::direct_product(samples::quaternion_group(),
                                samples::cyclic_group(2)));
  agree(samples::direct_product(samples::symmetric_group(3),
                                samples::cyclic_group(3)));
}

TEST_CASE("Sylow test values on the benchmarks") {
  CHECK_FALSE(is_nilpotent_group_sylow(samples::symmetric_group(3)));
  CHECK(is_nilpotent_group_sylow(samples::dihedral_group(4)));
  CHECK_FALSE(is_nilpotent_group_sylow(samples::symmetric_group(4)));
}

TEST_CASE("Clifford nilpotence reduces to the maximal subgroups") {
  CHECK(is_nilpotent_clifford(samples::with_zero(samples::cyclic_group(3))));
  CHECK(is_nilpotent_clifford(samples::chain_semilattice(4)));
  CHECK_FALSE(
      is_nilpotent_clifford(samples::with_zero(samples::symmetric_group(3))));
  CHECK_THROWS_AS(is_nilpotent_clifford(samples::brandt_b2()),
                  NotCliffordError);
}

}  // TEST_SUITE
