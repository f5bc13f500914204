#include "iplrank/engine.hpp"

namespace iplrank {

Engine::Engine(Dataset dataset, EngineConfig cfg) : dataset_(std::move(dataset)), cfg_(std::move(cfg)) {
  cfg_.ranking.validate();
  cfg_.credits.validate();
  rankings_ = rank_all(dataset_, cfg_.ranking);
  credits_ = build_credit_table(rankings_, cfg_.credits);
  pools_ = build_pools(dataset_, rankings_, credits_);
}

std::string Engine::name_of(const PlayerId& id) const {
  return dataset_.contains(id) ? dataset_.player(id).name : std::string();
}

}  // namespace iplrank
