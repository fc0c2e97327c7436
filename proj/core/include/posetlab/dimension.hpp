#pragma once

#include <optional>
#include <span>
#include <vector>

#include "posetlab/budget.hpp"
#include "posetlab/containment.hpp"
#include "posetlab/poset.hpp"

namespace posetlab {

/// Outcome of the alternating-cycle test on a set of incomparable pairs.
struct Reversibility {
  bool reversible = true;
  /// On failure a shortest strict alternating cycle (a_i, b_i) with
  /// a_i <= b_{i+1} cyclically.
  std::vector<ElementPair> cycle;
  /// On success an extension putting b before a for every pair.
  LinearExtension extension;
};

Reversibility is_reversible(const Poset& p, std::span<const ElementPair> pairs);

/// A realizer with at most t extensions, or nullopt when none exists (the
/// search was exhaustive). Throws BudgetExceeded.
std::optional<Realizer> dim_at_most(const Poset& p, int t, const SearchLimits& limits = {});

struct DimensionResult {
  enum class LowerBound { Trivial, StandardExample, Exhaustive };

  int dimension = 1;
  Realizer realizer;
  LowerBound lower_bound = LowerBound::Trivial;
  /// Filled when lower_bound is StandardExample.
  StandardExampleWitness se;
};

/// Exact dimension up to `cap`. The se value seeds the lower bound so the
/// search stops at the first realizer of that size. Throws BudgetExceeded,
/// also when the dimension exceeds the cap.
DimensionResult dim_exact(const Poset& p, int cap = 12, const SearchLimits& limits = {});

}  // namespace posetlab
