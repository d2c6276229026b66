#pragma once

#include <string>
#include <vector>

#include "isemlab/semigroup.hpp"

namespace isemlab {

/// A partial injective map on {0, .., degree-1}; undefined points map to -1.
struct PartialPerm {
  static constexpr int undefined = -1;

  int degree = 0;
  std::vector<int> images;

  static PartialPerm make(int degree, std::vector<int> images);
  static PartialPerm empty_map(int degree);
  static PartialPerm identity(int degree);

  bool defined_at(int i) const { return images[i] != undefined; }
  int rank() const;
  bool operator==(const PartialPerm&) const = default;
  auto operator<=>(const PartialPerm&) const = default;
};

/// Right action, left-to-right composition: (f*g)(i) = g(f(i)) where both
/// sides are defined. Throws DegreeMismatchError.
PartialPerm compose(const PartialPerm& f, const PartialPerm& g);

PartialPerm invert(const PartialPerm& f);

bool is_partial_identity(const PartialPerm& f);

/// Text form "n; i1 i2 ... in" with 1-based points, 0 for undefined.
std::string emit_partial_perm(const PartialPerm& f);
PartialPerm parse_partial_perm(const std::string& text);

/// All partial permutations of the given degree, in lexicographic order of
/// image vectors with undefined first. This fixes the element numbering of
/// monoid_In.
std::vector<PartialPerm> all_partial_perms(int degree);

/// Full Cayley table of the symmetric inverse monoid I_n, 1 <= n <= 4
/// (|I_4| = 209; larger degrees are refused). Throws DegreeTooLargeError.
FiniteSemigroup monoid_In(int n);

/// All nonempty subsets of I_n closed under product and inverse, with at
/// most k elements, as sorted id-vectors into all_partial_perms(n).
/// Requires n <= 3 and k <= 8.
std::vector<std::vector<Element>> inverse_subsemigroup_subsets(int n, int k);

/// The same subsemigroups as abstract tables, deduplicated up to
/// isomorphism and sorted by (order, table).
std::vector<FiniteSemigroup> subsemigroups_up_to_order(int n, int k);

}  // namespace isemlab
