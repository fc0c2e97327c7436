#pragma once

#include <chrono>
#include <cstdint>
#include <string>

#include "posetlab/error.hpp"

namespace posetlab {

/// Node and wall-clock caps shared by every exhaustive search.
struct SearchLimits {
  std::uint64_t node_cap = 10'000'000;
  std::chrono::milliseconds wall_cap{300'000};
};

/// Counts search nodes and throws BudgetExceeded once a cap is hit.
class Budget {
 public:
  explicit Budget(const SearchLimits& limits, std::string what = "search")
      : limits_(limits),
        what_(std::move(what)),
        deadline_(std::chrono::steady_clock::now() + limits.wall_cap) {}

  void tick() {
    if (++nodes_ > limits_.node_cap) {
      throw Error(ErrorCode::BudgetExceeded, what_ + ": node cap of " +
                                                 std::to_string(limits_.node_cap) + " exceeded");
    }
    if ((nodes_ & 0x3ff) == 0 && std::chrono::steady_clock::now() > deadline_) {
      throw Error(ErrorCode::BudgetExceeded, what_ + ": wall cap of " +
                                                 std::to_string(limits_.wall_cap.count()) +
                                                 " ms exceeded");
    }
  }

  std::uint64_t nodes() const noexcept { return nodes_; }

 private:
  SearchLimits limits_;
  std::string what_;
  std::chrono::steady_clock::time_point deadline_;
  std::uint64_t nodes_ = 0;
};

}  // namespace posetlab
