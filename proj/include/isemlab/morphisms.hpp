#pragma once

#include <vector>

#include "isemlab/semigroup.hpp"

namespace isemlab {

/// A multiplicative bijection of a finite semigroup, acting on the right:
/// the image of x is perm(x).
struct Automorphism {
  UnaryMap perm;
  int order;                   // smallest k >= 1 with perm^k = id
  std::vector<Element> fixed;  // ascending

  Element operator()(Element x) const { return perm(x); }
};

bool is_automorphism(const FiniteSemigroup& s, const UnaryMap& map);

/// Wraps a validated image vector, computing order and fixed points.
/// Throws Error when the map is not an automorphism.
Automorphism make_automorphism(const FiniteSemigroup& s,
                               std::vector<Element> images);

/// The complete automorphism group, sorted lexicographically by image
/// vector (so the identity comes first). Backtracking over images, pruned
/// by per-element invariants and closure propagation.
std::vector<Automorphism> automorphism_group(const FiniteSemigroup& s);

/// x -> x^-1 * (x alpha). Defined whenever inversion_map is.
struct PsiMap {
  UnaryMap map;
  Element operator()(Element x) const { return map(x); }
};

PsiMap psi_map(const FiniteSemigroup& s, const Automorphism& alpha);

bool is_psi_injective(const FiniteSemigroup& s, const Automorphism& alpha);

/// Fixed-point set equals the idempotent set exactly.
bool is_idempotent_fixing(const FiniteSemigroup& s, const Automorphism& alpha);

/// A unary operation with (xy)' = y'x', x'' = x and x = x x' x.
struct Involution {
  UnaryMap map;
  Element operator()(Element x) const { return map(x); }
};

/// All involutions of s, sorted lexicographically by image vector.
std::vector<Involution> find_involutions(const FiniteSemigroup& s);

bool is_antiautomorphism(const FiniteSemigroup& s, const UnaryMap& map);

/// Image line in the 1-based text form, e.g. "1 3 2".
std::string emit_automorphism(const Automorphism& a);
Automorphism parse_automorphism(const FiniteSemigroup& s, const std::string& line);

}  // namespace isemlab
