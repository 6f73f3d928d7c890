#include "tpbs/games/programmable_oracle.hpp"

namespace tpbs {

std::unique_ptr<ReplayOracle> programmable_oracle(const Seed& seed) {
    return std::make_unique<ReplayOracle>(std::vector<Challenges>{}, seeded_source(seed));
}

}  // namespace tpbs
