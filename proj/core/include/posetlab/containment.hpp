#pragma once

#include <optional>
#include <vector>

#include "posetlab/budget.hpp"
#include "posetlab/poset.hpp"

namespace posetlab {

/// Pattern element k goes to host element map[k].
using SubposetMap = std::vector<Element>;

struct StandardExampleWitness {
  int order = 1;
  /// (a_i, b_i): a_i < b_j exactly when i != j. Empty when order is 1.
  std::vector<ElementPair> pairs;
};

/// se(P): the largest d such that P contains S_d, or 1 when P contains no
/// S_2. Searches for at most `cap`. Throws BudgetExceeded.
StandardExampleWitness se(const Poset& p, int cap = 12, const SearchLimits& limits = {});

/// Injective map of `pattern` into `host` that preserves comparability and
/// incomparability exactly, or nullopt when none exists. Throws BudgetExceeded.
std::optional<SubposetMap> contains_subposet(const Poset& host, const Poset& pattern, const SearchLimits& limits = {});

bool verify_embedding(const Poset& host, const Poset& pattern, const SubposetMap& map);

/// wheel(P) / kelly(P): the largest contained wheel (order >= 3) or Kelly
/// poset, falling back to se(P) when none is contained.
struct FamilyNumber {
  int value = 1;
  /// Order of the contained member, 0 when the value is the se fallback.
  int found_order = 0;
  SubposetMap witness;
  StandardExampleWitness se;
};

FamilyNumber wheel_number(const Poset& p, int cap = 12, const SearchLimits& limits = {});
FamilyNumber kelly_number(const Poset& p, int cap = 12, const SearchLimits& limits = {});

/// The se witness as a map of standard_example(order) into p (a1..ad, b1..bd).
SubposetMap standard_example_map(const StandardExampleWitness& w);

}  // namespace posetlab
