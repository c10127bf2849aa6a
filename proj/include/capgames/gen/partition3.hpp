#pragma once

#include <vector>

#include "capgames/dnc/game.hpp"

namespace capgames::gen {

/// 3-partition input: 3m positive integers summing to m*T with
/// T/4 < a_i < T/2 strictly.
struct Partition3Instance {
  std::vector<long long> values;
  long long target = 0;

  int m() const { return static_cast<int>(values.size()) / 3; }
};

void require_valid(const Partition3Instance& inst);

/// Chain-of-gadgets DNC whose minimum PNE total delay is m(6m-3) exactly
/// when the 3-partition instance is a yes-instance: fast edges of weight a_i
/// with d(x) = 1{x>=1} + 2*1{x>=2}, unit slow edges with d = 2, m players,
/// bound T + 3m.
dnc::DncGame partition3_best_to_dnc(const Partition3Instance& inst);

/// Worst-welfare variant: an extra source fanning to every gadget with gate
/// delays R = 9m+2, fast edges d(x) = 2*1{x>=2} + 2*1{x>=3}, slow d = 3,
/// 4m players, bound T + 3m + 1. A PNE with total delay >= D0 + m(9m+3),
/// D0 = 9m(3m-1)/2, exists exactly for yes-instances.
dnc::DncGame partition3_worst_to_dnc(const Partition3Instance& inst);

}  // namespace capgames::gen
