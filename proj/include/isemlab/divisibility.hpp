#pragma once

#include <optional>

#include "isemlab/semigroup.hpp"

namespace isemlab {

/// The squaring map x -> x^2 and, when it is a bijection, its inverse
/// x -> x^(1/2) as a lookup table.
struct SquaringAnalysis {
  UnaryMap squares;
  bool bijective;
  std::optional<UnaryMap> roots;
};

SquaringAnalysis analyze_squaring(const FiniteSemigroup& s);

/// True iff squaring is a bijection.
bool is_uniquely_2_divisible(const FiniteSemigroup& s);

/// The unique y with y^2 = x. Throws NotUniquely2DivisibleError.
Element sqrt_of(const FiniteSemigroup& s, Element x);

/// (x^(1/2))^-1, computed both as the inverse of the root and as the root
/// of the inverse; the two routes are checked to agree. Requires
/// inversion_map on top of unique 2-divisibility.
Element inv_sqrt(const FiniteSemigroup& s, Element x);

}  // namespace isemlab
