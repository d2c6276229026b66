#pragma once

#include "isemlab/semigroup.hpp"

namespace isemlab::samples {

FiniteSemigroup trivial_semigroup();

/// Z/n under addition.
FiniteSemigroup cyclic_group(int n);

/// Totally ordered semilattice on n elements, product = min.
FiniteSemigroup chain_semilattice(int n);

/// x * y = x.
FiniteSemigroup left_zero_band(int n);

/// x * y = y.
FiniteSemigroup right_zero_band(int n);

/// The five-element Brandt semigroup: elements (i,j) for i,j in {1,2} plus a
/// zero; (i,j)(k,l) = (i,l) when j = k and 0 otherwise.
FiniteSemigroup brandt_b2();

/// The four-element band with rows 1331 / 4224 / 1331 / 4224.
FiniteSemigroup band_b4();

/// Dihedral group of order 2m (m >= 1).
FiniteSemigroup dihedral_group(int m);

/// Symmetric group on n points, n <= 4; elements are the permutations in
/// lexicographic order, composed left to right.
FiniteSemigroup symmetric_group(int n);

/// The eight-element quaternion group {1,-1,i,-i,j,-j,k,-k}.
FiniteSemigroup quaternion_group();

/// Adjoins an absorbing zero as the last element.
FiniteSemigroup with_zero(const FiniteSemigroup& s);

/// Adjoins a two-sided identity as the last element.
FiniteSemigroup with_identity(const FiniteSemigroup& s);

/// Componentwise product on pairs; element (a, b) has index a * |B| + b.
FiniteSemigroup direct_product(const FiniteSemigroup& a,
                               const FiniteSemigroup& b);

}  // namespace isemlab::samples
