#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "posetlab/poset.hpp"

namespace posetlab::families {

/// The cyclic interval <i, j> of [N]: [i, j] when i <= j, otherwise the
/// wrap-around {i, ..., N, 1, ..., j}.
struct CyclicInterval {
  int i = 1;
  int j = 1;
  int modulus = 3;

  /// Throws IndexOutOfRange.
  std::vector<int> members() const;
  int length() const;
};

/// Throws IndexOutOfRange unless 1 <= i, j <= N and N >= 3.
std::vector<int> cyclic_interval_members(int i, int j, int n);

/// Wheel element label: "min", "max", or "r(i,j)".
struct WheelLabel {
  enum class Kind { Min, Max, R };
  Kind kind = Kind::Min;
  int i = 0;
  int j = 0;

  std::string str() const;
  static std::optional<WheelLabel> parse(const std::string& text);
};

std::string wheel_name(int i, int j);

/// S_d on a1..ad (minimal) and b1..bd (maximal). Throws OrderTooSmall for d < 2.
Poset standard_example(int d);

/// The wheel H_N: r(i,j) for j+1 != i (mod N) under reverse containment of
/// cyclic intervals, plus a global "min" and optionally a global "max".
/// Throws OrderTooSmall for N < 3.
Poset wheel(int n, bool attach_max = false);

/// Names of the standard example inside wheel(N): a_i = r(i+1,i-1), b_i = r(i,i).
std::pair<std::vector<std::string>, std::vector<std::string>> wheel_standard_example(int n);

/// The Kelly poset K_d: a1..ad, b1..bd forming S_d, joined by the increasing
/// chain a1 < c2 < ... < c(d-2) < bd and the chain ad < d(d-1) < ... < d3 < b1.
/// 4d - 6 elements. Throws OrderTooSmall for d < 3.
Poset kelly(int d);

/// Poset of closed intervals [l, r] with I < J iff r(I) < l(J).
Poset interval_order_from(const std::vector<std::pair<double, double>>& intervals,
                          const std::vector<std::string>& names = {});
/// n random intervals; deterministic per seed.
Poset interval_order(std::uint64_t seed, int n);
/// All [a, b] with 1 <= a < b <= m.
Poset canonical_interval_order(int m);

/// A random poset whose cover graph is planar and which has exactly one
/// minimal element, on max(2, size_budget) elements named v0, v1, ...
Poset random_cover_planar_with_unique_min(std::uint64_t seed, int size_budget);

Poset chain(int n);
Poset antichain(int n);

}  // namespace posetlab::families
