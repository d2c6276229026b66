#pragma once

#include <vector>

#include "isemlab/semigroup.hpp"

namespace isemlab {

/// Green's equivalences of a finite semigroup. `x_class[e]` is the class
/// index of element e; classes are numbered by first occurrence and listed
/// with ascending members.
struct GreenPartition {
  std::vector<int> r_class, l_class, h_class, d_class;
  std::vector<std::vector<Element>> r_classes, l_classes, h_classes, d_classes;
};

/// R via equality of right ideals xS^1, L via left ideals, H = R meet L,
/// D = R compose L.
GreenPartition green_relations(const FiniteSemigroup& s);

/// Every element lies in a subgroup, i.e. is H-related to an idempotent.
bool is_completely_regular(const FiniteSemigroup& s);

/// Inverse and x*x^-1 = x^-1*x for all x.
bool is_clifford(const FiniteSemigroup& s);

/// The H-class of an idempotent, as a group in its own right.
struct MaximalSubgroup {
  Element identity;               // the idempotent, parent numbering
  std::vector<Element> elements;  // its H-class, ascending, parent numbering
  FiniteSemigroup group;          // restricted table, renumbered 0..k-1

  Element local_of(Element parent_id) const;
  Element parent_of(Element local_id) const { return elements[local_id]; }
};

MaximalSubgroup maximal_subgroup_at(const FiniteSemigroup& s, Element idempotent);

/// Strong-semilattice-of-groups form of a Clifford semigroup: one maximal
/// subgroup per idempotent, ordered by the natural order on idempotents,
/// linked by phi_{b,c}: g -> e_c * g for b >= c.
class CliffordDecomposition {
 public:
  CliffordDecomposition(const FiniteSemigroup& s);  // throws NotCliffordError

  const FiniteSemigroup& parent() const { return *parent_; }
  const std::vector<Element>& idempotent_list() const { return idems_; }
  const std::vector<MaximalSubgroup>& groups() const { return groups_; }

  /// Index into idempotent_list()/groups() of the group containing x.
  int group_index_of(Element x) const { return group_of_[x]; }

  /// Semilattice structure on idempotents (parent numbering).
  Element meet(Element e, Element f) const;
  bool leq(Element e, Element f) const;  // e <= f, i.e. e*f = e

  /// phi_{b,c} applied to g in G_b, for idempotents b >= c. Result lies in
  /// the group at c.
  Element link(Element b, Element c, Element g) const;

 private:
  const FiniteSemigroup* parent_;
  std::vector<Element> idems_;
  std::vector<MaximalSubgroup> groups_;
  std::vector<int> group_of_;
};

CliffordDecomposition clifford_decomposition(const FiniteSemigroup& s);

}  // namespace isemlab
