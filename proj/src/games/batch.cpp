#include "tpbs/games/batch.hpp"

#include <chrono>
#include <exception>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "tpbs/games/adversaries.hpp"

namespace tpbs {

std::string format_trial_line(std::size_t trial, const Seed& seed, const std::string& experiment,
                              const ExperimentResult& r) {
    const ExperimentCounters& c = r.counters;
    std::ostringstream os;
    os << "trial=" << trial << " seed=" << seed_to_hex(seed) << " experiment=" << experiment
       << " win=" << (r.win ? 1 : 0) << " keys=" << c.keys << " signatures=" << c.signatures
       << " openings=" << c.openings << " sim_signatures=" << c.sim_signatures << " refusals=" << c.refusals
       << " aborts=" << c.aborts << " replays=" << c.replays << " extraction_failed=" << (r.extraction_failed ? 1 : 0)
       << " wall=" << std::fixed << std::setprecision(4) << r.wall_seconds;
    return os.str();
}

std::string format_summary(const BatchConfig& cfg, const BatchSummary& s) {
    std::ostringstream os;
    os << "summary experiment=" << cfg.experiment << " adversary=" << cfg.adversary << " trials=" << s.trials
       << " wins=" << s.wins << " win_rate=" << std::fixed << std::setprecision(4) << s.win_rate()
       << " extraction_failures=" << s.extraction_failures << " refusals=" << s.totals.refusals
       << " aborts=" << s.totals.aborts << " wall=" << std::setprecision(2) << s.wall_seconds;
    return os.str();
}

BatchSummary run_batch(const BatchConfig& cfg, std::ostream* log) {
    const bool is_sim = cfg.experiment == "sim";
    if (!is_sim && cfg.experiment != "ext") throw std::invalid_argument("unknown experiment '" + cfg.experiment + "'");
    // Validate the adversary name before any expensive setup.
    if (is_sim)
        make_sim_adversary(cfg.adversary);
    else
        make_ext_adversary(cfg.adversary);

    const auto t0 = std::chrono::steady_clock::now();
    Rng rng(cfg.seed);
    std::vector<Seed> seeds(cfg.trials);
    for (auto& s : seeds) s = rng.seed_bytes();

    ExperimentConfig base;
    base.params = cfg.params;
    base.kappa = cfg.kappa;
    if (is_sim)
        base.sim_setups = make_sim_setups(experiment_params(base), rng);
    else
        base.ext_setup = make_ext_setup(experiment_params(base), rng);

    std::vector<ExperimentResult> results(cfg.trials);
    std::exception_ptr failure;
    const auto count = static_cast<std::int64_t>(cfg.trials);
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t t = 0; t < count; ++t) {
        try {
            ExperimentConfig ec = base;
            ec.seed = seeds[static_cast<std::size_t>(t)];
            if (is_sim) {
                auto adv = make_sim_adversary(cfg.adversary);
                results[static_cast<std::size_t>(t)] = run_sim_experiment(*adv, ec);
            } else {
                auto adv = make_ext_adversary(cfg.adversary);
                results[static_cast<std::size_t>(t)] = run_ext_experiment(*adv, ec);
            }
        } catch (...) {
#pragma omp critical(tpbs_batch_failure)
            if (!failure) failure = std::current_exception();
        }
    }
    if (failure) std::rethrow_exception(failure);

    BatchSummary sum;
    sum.trials = cfg.trials;
    for (std::size_t t = 0; t < cfg.trials; ++t) {
        const ExperimentResult& r = results[t];
        sum.wins += r.win ? 1 : 0;
        sum.extraction_failures += r.extraction_failed ? 1 : 0;
        sum.totals.keys += r.counters.keys;
        sum.totals.signatures += r.counters.signatures;
        sum.totals.openings += r.counters.openings;
        sum.totals.sim_signatures += r.counters.sim_signatures;
        sum.totals.refusals += r.counters.refusals;
        sum.totals.aborts += r.counters.aborts;
        sum.totals.replays += r.counters.replays;
        if (log) *log << format_trial_line(t, seeds[t], cfg.experiment, r) << '\n';
    }
    sum.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return sum;
}

}  // namespace tpbs
