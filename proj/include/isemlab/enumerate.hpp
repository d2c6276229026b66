#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "isemlab/morphisms.hpp"
#include "isemlab/semigroup.hpp"

namespace isemlab {

/// The lexicographically smallest row-major Cayley table over all n!
/// relabelings. Two finite semigroups are isomorphic iff their canonical
/// tables are byte-identical.
struct CanonicalTable {
  int n = 0;
  std::vector<uint8_t> table;
  uint64_t hash = 0;

  static CanonicalTable of(int n, const std::vector<Element>& table);
  FiniteSemigroup to_semigroup() const;

  friend auto operator<=>(const CanonicalTable& a, const CanonicalTable& b) {
    if (auto c = a.n <=> b.n; c != 0) return c;
    return a.table <=> b.table;
  }
  friend bool operator==(const CanonicalTable& a, const CanonicalTable& b) {
    return a.n == b.n && a.table == b.table;
  }
};

/// Branch-and-bound over relabelings; candidate labels are tried in the
/// order of the cell values they produce and branches are cut as soon as
/// the partial table leaves the incumbent. Intended for desk-scale orders
/// (n <= 16); no full n!-scan is ever performed.
CanonicalTable canonical_form(const FiniteSemigroup& s);

/// True iff the table equals its own canonical form. Cheaper than
/// canonical_form on non-canonical input: the search stops at the first
/// strictly smaller relabeling.
bool is_canonical_table(int n, const std::vector<Element>& table);

enum class Filter { all, inverse, cr, clifford, band, group, cancellative };

std::string filter_name(Filter f);
Filter parse_filter(const std::string& name);
bool filter_accepts(Filter f, const FiniteSemigroup& s);

/// Largest order enumerated without the explicit override.
int default_order_cap(Filter f);

/// A duplicate-free, canonically labeled set of semigroup tables.
struct Corpus {
  Filter filter = Filter::all;
  int max_order = 0;
  std::vector<CanonicalTable> tables;  // ascending (order, table)
};

/// Exhaustive generation up to isomorphism: Cayley table cells are filled
/// in row-major order under associativity propagation and per-filter
/// constraints; completed tables are kept iff they are their own canonical
/// form and satisfy the filter. Throws OrderTooLargeError above the default
/// cap unless force_large is set.
Corpus enumerate_semigroups(int max_order, Filter filter, int workers = 1,
                            bool force_large = false);

/// All groups of order <= max_order (max 15) up to isomorphism, built
/// constructively: cyclic groups, direct and semidirect products of smaller
/// corpus members, and the quaternion group. Canonical deduplication; the
/// resulting corpus carries Filter::group. Cross-checked against the
/// orderly generator in the test suite.
Corpus group_corpus(int max_order);

/// Every (semigroup, automorphism) pair of the corpus: corpus order first,
/// automorphisms in lexicographic image order (identity first).
std::vector<std::pair<FiniteSemigroup, Automorphism>> corpus_pairs(
    const Corpus& corpus);

/// Corpus file: header "isemlab-corpus v1 <filter> <max_order>", one table
/// per block in the table text format, blocks separated by blank lines.
void write_corpus(std::ostream& out, const Corpus& corpus);
std::string corpus_to_string(const Corpus& corpus);
Corpus read_corpus(std::istream& in);

}  // namespace isemlab
