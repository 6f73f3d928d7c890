#pragma once

#include <iosfwd>
#include <string>

#include "tpbs/games/experiments.hpp"

namespace tpbs {

struct BatchConfig {
    std::string experiment;  // "sim" or "ext"
    std::string adversary;
    std::size_t trials = 1;
    Params params;
    Seed seed{};
    int kappa = 8;
};

struct BatchSummary {
    std::size_t trials = 0, wins = 0, extraction_failures = 0;
    ExperimentCounters totals;
    double wall_seconds = 0.0;
    double win_rate() const { return trials ? static_cast<double>(wins) / static_cast<double>(trials) : 0.0; }
};

// Trial seeds and the shared setups come from cfg.seed; trials run across
// OpenMP threads and log lines are written in trial order.
BatchSummary run_batch(const BatchConfig& cfg, std::ostream* log);

std::string format_trial_line(std::size_t trial, const Seed& seed, const std::string& experiment,
                              const ExperimentResult& r);
std::string format_summary(const BatchConfig& cfg, const BatchSummary& s);

}  // namespace tpbs
