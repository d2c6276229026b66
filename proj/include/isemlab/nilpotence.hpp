#pragma once

#include <optional>
#include <vector>

#include "isemlab/semigroup.hpp"

namespace isemlab {

/// Lower central series G = g1 >= g2 >= ... with g_{i+1} = <[G, g_i]>,
/// recorded up to stabilisation. `terminates` means the chain reached the
/// trivial subgroup; `nilpotency_class` is set exactly in that case.
struct CentralSeries {
  std::vector<std::vector<Element>> chain;  // each subset ascending
  bool terminates;
  std::optional<int> nilpotency_class;
};

/// A two-sided identity exists and every element is invertible.
bool is_group(const FiniteSemigroup& s);

/// Throws NotAGroupError.
CentralSeries lower_central_series(const FiniteSemigroup& g);

/// Lower central series reaches the trivial subgroup.
bool is_nilpotent_group(const FiniteSemigroup& g);

/// Second route: enumerate the full subgroup lattice and test that every
/// Sylow subgroup is normal. Shares no code with the series computation;
/// the two are asserted to agree in the test and acceptance suites.
bool is_nilpotent_group_sylow(const FiniteSemigroup& g);

/// A finite Clifford semigroup is nilpotent iff all of its maximal
/// subgroups are. Only the boolean is defined here; no class is reported
/// for non-group Clifford semigroups. Throws NotCliffordError.
bool is_nilpotent_clifford(const FiniteSemigroup& s);

}  // namespace isemlab
