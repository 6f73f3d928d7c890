#pragma once

#include <memory>

#include "tpbs/scheme/simulation.hpp"

namespace tpbs {

// Programmable H₂ whose unprogrammed answers are a deterministic function of seed.
std::unique_ptr<ReplayOracle> programmable_oracle(const Seed& seed);

}  // namespace tpbs
