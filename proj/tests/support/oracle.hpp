#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "iplrank/credits.hpp"

namespace iplrank::testing {

/// Exhaustive search over non-increasing credit vectors of length k drawn
/// from `tiers` with sum <= cap. Returns the lexicographically largest one,
/// or nullopt when none exists.
inline std::optional<std::vector<Credit>> lexmax_vector(int k, Credit cap,
                                                        const std::vector<Credit>& tiers = {10, 9, 8, 7}) {
  std::optional<std::vector<Credit>> best;
  std::vector<Credit> cur;
  std::function<void(std::size_t, Credit)> rec = [&](std::size_t from, Credit left) {
    if (static_cast<int>(cur.size()) == k) {
      if (!best || cur > *best) best = cur;
      return;
    }
    for (std::size_t t = from; t < tiers.size(); ++t) {
      if (tiers[t] > left) continue;
      cur.push_back(tiers[t]);
      rec(t, left - tiers[t]);
      cur.pop_back();
    }
  };
  rec(0, cap);
  return best;
}

/// True when some multiset of k credits from `tiers` sums to at most cap.
inline bool any_feasible(int k, Credit cap, const std::vector<Credit>& tiers = {10, 9, 8, 7}) {
  return lexmax_vector(k, cap, tiers).has_value();
}

}  // namespace iplrank::testing
