#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "isemlab/errors.hpp"

namespace isemlab {

/// Index of an element inside its parent semigroup (0-based).
using Element = int;

/// A finite semigroup given by its full Cayley table. Immutable after
/// construction; `product(x, y)` is the row-x, column-y entry.
class FiniteSemigroup {
 public:
  /// Validates entries and associativity. Throws IndexOutOfRangeError or
  /// NotAssociativeError (with the first violating triple).
  static FiniteSemigroup from_table(int n, std::vector<Element> table,
                                    std::vector<std::string> labels = {});

  /// Skips the associativity check. For generators that fill tables under
  /// constraint propagation and already know every triple holds.
  static FiniteSemigroup trusted(int n, std::vector<Element> table,
                                 std::vector<std::string> labels = {});

  int order() const noexcept { return n_; }
  Element product(Element x, Element y) const { return table_[x * n_ + y]; }
  const std::vector<Element>& table() const noexcept { return table_; }

  bool has_labels() const noexcept { return !labels_.empty(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  /// Display name: the stored label, or the 1-based index.
  std::string label(Element x) const;

  bool operator==(const FiniteSemigroup&) const = default;

 private:
  FiniteSemigroup(int n, std::vector<Element> table,
                  std::vector<std::string> labels)
      : n_(n), table_(std::move(table)), labels_(std::move(labels)) {}

  int n_;
  std::vector<Element> table_;
  std::vector<std::string> labels_;
};

/// A total map S -> S stored as an image vector.
struct UnaryMap {
  std::vector<Element> images;

  Element operator()(Element x) const { return images[x]; }
  int size() const { return static_cast<int>(images.size()); }
  bool is_permutation() const;
  bool operator==(const UnaryMap&) const = default;
};

/// The natural partial order of an inverse semigroup: b <= a iff
/// b = b * a^-1 * a. Construction verifies the order axioms.
class NaturalOrder {
 public:
  NaturalOrder(int n, std::vector<uint8_t> leq);

  int size() const noexcept { return n_; }
  bool leq(Element b, Element a) const { return leq_[b * n_ + a] != 0; }
  /// All pairs (b, a) with b <= a, row-major order, reflexive pairs included.
  std::vector<std::pair<Element, Element>> pairs() const;

 private:
  int n_;
  std::vector<uint8_t> leq_;
};

/// Scans all n^3 triples; returns the first violation in (x, y, z) order.
std::optional<std::array<Element, 3>> associativity_violation(
    int n, const std::vector<Element>& table);

/// Same contract via Light's test: only triples with middle element in a
/// generating set are checked. Used for larger tables; cross-checked against
/// the direct scan in the test suite.
std::optional<std::array<Element, 3>> associativity_violation_light(
    int n, const std::vector<Element>& table);

bool is_commutative(const FiniteSemigroup& s);

/// All e with e*e = e, ascending.
std::vector<Element> idempotents(const FiniteSemigroup& s);

bool is_band(const FiniteSemigroup& s);

/// Every x has some y with x*y*x = x.
bool is_regular(const FiniteSemigroup& s);

/// Regular with pairwise commuting idempotents.
bool is_inverse_semigroup(const FiniteSemigroup& s);

/// x -> x^-1. For inverse semigroups this is the unique map with
/// x*y*x = x and y*x*y = y; for completely regular ones it is the group
/// inverse inside the subgroup containing x. Throws
/// NotInverseOrCompletelyRegularError when neither applies.
UnaryMap inversion_map(const FiniteSemigroup& s);

/// Throws NotInverseError when s is not inverse.
NaturalOrder natural_partial_order(const FiniteSemigroup& s);

bool is_cancellative(const FiniteSemigroup& s);

}  // namespace isemlab
