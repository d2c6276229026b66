#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "doctest.h"
#include "isemlab/enumerate.hpp"
#include "isemlab/partial_perm.hpp"
#include "isemlab/samples.hpp"
#include "support/naive_oracle.hpp"

using namespace isemlab;

namespace {

FiniteSemigroup relabel(const FiniteSemigroup& s, const std::vector<int>& p) {
  int n = s.order();
  std::vector<Element> t(n * n);
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      t[p[x] * n + p[y]] = p[s.product(x, y)];
  return FiniteSemigroup::trusted(n, std::move(t));
}

std::set<std::vector<uint8_t>> byte_set(const Corpus& corpus, int order) {
  std::set<std::vector<uint8_t>> out;
  for (const auto& t : corpus.tables)
    if (t.n == order) out.insert(t.table);
  return out;
}

}  // namespace

TEST_SUITE("enumerate") {

TEST_CASE("canonical form is invariant under relabeling") {
  std::mt19937 rng(20240817);
  for (const FiniteSemigroup& s :
       {samples::brandt_b2(), samples::band_b4(), samples::cyclic_group(5),
        samples::with_zero(samples::symmetric_group(3)),
        samples::chain_semilattice(4), monoid_In(2)}) {
    CanonicalTable canon = canonical_form(s);
    std::vector<int> p(s.order());
    std::iota(p.begin(), p.end(), 0);
    for (int trial = 0; trial < 8; ++trial) {
      std::shuffle(p.begin(), p.end(), rng);
      CHECK(canonical_form(relabel(s, p)) == canon);
    }
  }
}

TEST_CASE("non-isomorphic pairs have different canonical forms") {
  CHECK(canonical_form(samples::cyclic_group(2)) !=
        canonical_form(samples::chain_semilattice(2)));
  CHECK(canonical_form(samples::left_zero_band(2)) !=
        canonical_form(samples::right_zero_band(2)));
}

TEST_CASE("relabeling by an automorphism leaves the table fixed") {
  FiniteSemigroup b4 = samples::band_b4();
  CHECK(canonical_form(relabel(b4, {1, 0, 3, 2})) == canonical_form(b4));
}

TEST_CASE("canonical form is idempotent and self-recognizing") {
  for (const FiniteSemigroup& s :
       {samples::brandt_b2(), samples::dihedral_group(4),
        samples::with_zero(samples::cyclic_group(3))}) {
    CanonicalTable canon = canonical_form(s);
    CHECK(canonical_form(canon.to_semigroup()) == canon);
    std::vector<Element> as_elements(canon.table.begin(), canon.table.end());
    CHECK(is_canonical_table(canon.n, as_elements));
  }
  CHECK_FALSE(is_canonical_table(2, std::vector<Element>{1, 0, 0, 1}));
}

TEST_CASE("groups canonicalize quickly at moderate orders") {
  // Exercises the deferred-label path: identity rows carry no information.
  for (int n : {13, 15}) {
    FiniteSemigroup g = samples::cyclic_group(n);
    CanonicalTable canon = canonical_form(g);
    // The canonical table of a group starts with an identity row.
    for (int j = 0; j < n; ++j) CHECK(canon.table[j] == j);
  }
  CHECK(canonical_form(samples::dihedral_group(6)).n == 12);
}

TEST_CASE("order one enumeration") {
  Corpus c = enumerate_semigroups(1, Filter::all);
  CHECK(c.tables.size() == 1);
}

TEST_CASE("fully symmetric tables canonicalize despite the tied search") {
  // Right-zero bands make every relabeling produce the same table, the
  // worst case for pruning.
  FiniteSemigroup rz = samples::right_zero_band(6);
  CanonicalTable canon = canonical_form(rz);
  CHECK(canon.to_semigroup() == rz);
  std::vector<Element> as_elements(canon.table.begin(), canon.table.end());
  CHECK(is_canonical_table(6, as_elements));
}

TEST_CASE("corpus files with non-canonical tables are rejected") {
  // C2 labeled with the identity at 2 is not the canonical labeling.
  std::istringstream in(
      "isemlab-corpus v1 group 2\n\n2\n1 2\n2 1\n\n2\n2 1\n1 2\n");
  CHECK_THROWS_AS(read_corpus(in), Error);
  std::istringstream bad_header("something else\n");
  CHECK_THROWS_AS(read_corpus(bad_header), ParseError);
}

TEST_CASE("orderly generation matches the brute-force oracle up to order 3") {
  for (int n : {1, 2, 3}) {
    auto classes = oracle::all_semigroups(n);
    CHECK(byte_set(enumerate_semigroups(n, Filter::all), n) == classes);
    CHECK(byte_set(enumerate_semigroups(n, Filter::inverse), n) ==
          oracle::filtered(oracle::Kind::inverse, n, classes));
    CHECK(byte_set(enumerate_semigroups(n, Filter::band), n) ==
          oracle::filtered(oracle::Kind::band, n, classes));
    CHECK(byte_set(enumerate_semigroups(n, Filter::group), n) ==
          oracle::filtered(oracle::Kind::group, n, classes));
  }
}

TEST_CASE("every filter output satisfies its predicate and is canonical") {
  for (Filter f : {Filter::inverse, Filter::cr, Filter::clifford, Filter::band,
                   Filter::group, Filter::cancellative}) {
    Corpus c = enumerate_semigroups(4, f);
    CHECK(!c.tables.empty());
    for (const auto& t : c.tables) {
      std::vector<Element> as_elements(t.table.begin(), t.table.end());
      CHECK(is_canonical_table(t.n, as_elements));
      CHECK(filter_accepts(f, t.to_semigroup()));
    }
  }
}

TEST_CASE("filters nest the way the definitions say") {
  Corpus all = enumerate_semigroups(4, Filter::all);
  Corpus inverse = enumerate_semigroups(4, Filter::inverse);
  Corpus clifford = enumerate_semigroups(4, Filter::clifford);
  Corpus groups = enumerate_semigroups(4, Filter::group);
  auto contains = [](const Corpus& big, const Corpus& small) {
    std::set<CanonicalTable> set(big.tables.begin(), big.tables.end());
    for (const auto& t : small.tables)
      if (!set.count(t)) return false;
    return true;
  };
  CHECK(contains(all, inverse));
  CHECK(contains(inverse, clifford));
  CHECK(contains(clifford, groups));
  CHECK(groups.tables.size() < clifford.tables.size());
  CHECK(inverse.tables.size() < all.tables.size());
  // Below order 5 every inverse semigroup is Clifford; B2 is the smallest
  // inverse non-Clifford instance.
  CHECK(clifford.tables.size() == inverse.tables.size());
  CHECK(filter_accepts(Filter::inverse, samples::brandt_b2()));
  CHECK_FALSE(filter_accepts(Filter::clifford, samples::brandt_b2()));
}

TEST_CASE("the order cap guards large runs") {
  CHECK_THROWS_AS(enumerate_semigroups(7, Filter::all), OrderTooLargeError);
  CHECK_THROWS_AS(enumerate_semigroups(6, Filter::band), OrderTooLargeError);
  CHECK_NOTHROW(enumerate_semigroups(6, Filter::band, 1, true));
}

TEST_CASE("generation is deterministic and worker-count independent") {
  Corpus a = enumerate_semigroups(4, Filter::all);
  Corpus b = enumerate_semigroups(4, Filter::all);
  Corpus c = enumerate_semigroups(4, Filter::all, 3);
  CHECK(corpus_to_string(a) == corpus_to_string(b));
  CHECK(corpus_to_string(a) == corpus_to_string(c));
}

TEST_CASE("corpus files round-trip") {
  Corpus c = enumerate_semigroups(3, Filter::inverse);
  std::string text = corpus_to_string(c);
  std::istringstream in(text);
  Corpus back = read_corpus(in);
  CHECK(back.filter == c.filter);
  CHECK(back.max_order == c.max_order);
  CHECK(back.tables == c.tables);
  CHECK(text.rfind("isemlab-corpus v1 inverse 3\n", 0) == 0);
}

TEST_CASE("corpus pairs follow the automorphism counts") {
  Corpus c;
  c.filter = Filter::group;
  c.max_order = 3;
  c.tables = {canonical_form(samples::trivial_semigroup()),
              canonical_form(samples::cyclic_group(3))};
  auto pairs = corpus_pairs(c);
  CHECK(pairs.size() == 3);  // 1 + |Aut(C3)|

  Corpus inv4 = enumerate_semigroups(4, Filter::inverse);
  size_t expected = 0;
  for (const auto& t : inv4.tables)
    expected += automorphism_group(t.to_semigroup()).size();
  CHECK(corpus_pairs(inv4).size() == expected);
}

TEST_CASE("the constructive group corpus matches orderly generation") {
  for (int n = 1; n <= 6; ++n) {
    Corpus orderly = enumerate_semigroups(n, Filter::group, 1, true);
    Corpus constructed = group_corpus(n);
    CHECK(orderly.tables == constructed.tables);
  }
  CHECK_THROWS_AS(group_corpus(16), OrderTooLargeError);
}

TEST_CASE("group corpus members are pairwise distinct groups") {
  Corpus c = group_corpus(15);
  std::set<CanonicalTable> distinct(c.tables.begin(), c.tables.end());
  CHECK(distinct.size() == c.tables.size());
  for (const auto& t : c.tables) {
    FiniteSemigroup g = t.to_semigroup();
    CHECK(filter_accepts(Filter::group, g));
  }
  // Known families land in the corpus.
  auto has = [&](const FiniteSemigroup& g) {
    return std::find(c.tables.begin(), c.tables.end(), canonical_form(g)) !=
           c.tables.end();
  };
  CHECK(has(samples::quaternion_group()));
  CHECK(has(samples::dihedral_group(6)));
  CHECK(has(samples::symmetric_group(3)));
  CHECK(has(samples::cyclic_group(15)));
  CHECK(has(samples::direct_product(samples::cyclic_group(2),
                                    samples::cyclic_group(6))));
}

TEST_CASE("inverse subsemigroups of I_2 appear in the inverse corpus") {
  Corpus inv = enumerate_semigroups(5, Filter::inverse);
  std::set<CanonicalTable> set(inv.tables.begin(), inv.tables.end());
  for (const auto& s : subsemigroups_up_to_order(2, 5))
    CHECK(set.count(canonical_form(s)) == 1);
}

}  // TEST_SUITE
