#pragma once

#include <memory>
#include <string>

#include "iplrank/selection.hpp"

namespace iplrank {

struct EngineConfig {
  RankingConfig ranking;
  CreditConfig credits;
};

/// Immutable bundle of a dataset and everything derived from it: rankings,
/// labels, credits and bucket pools. Safe to share across threads.
class Engine {
 public:
  explicit Engine(Dataset dataset, EngineConfig cfg = {});

  const Dataset& dataset() const { return dataset_; }
  const Rankings& rankings() const { return rankings_; }
  const CreditTable& credits() const { return credits_; }
  const Pools& pools() const { return pools_; }
  const EngineConfig& config() const { return cfg_; }

  std::string name_of(const PlayerId& id) const;

 private:
  Dataset dataset_;
  EngineConfig cfg_;
  Rankings rankings_;
  CreditTable credits_;
  Pools pools_;
};

}  // namespace iplrank
