#pragma once

#include <memory>
#include <string>

#include "tpbs/scheme/simulation.hpp"

namespace tpbs {

// Oracles of the SIM experiment as seen by the adversary.
class SimOracles {
public:
    virtual ~SimOracles() = default;
    // KEY(id, P_id): usk_b.
    virtual UserSigningKey key(const BitVector& id, const std::vector<BitVector>& policies) = 0;
    // SIGNATURE(i, m, w) with 1-based i; nullopt is ⊥.
    virtual std::optional<TpbsSignature> signature(std::size_t i, const BitVector& msg, const BitVector& pcw) = 0;
    // OPEN(m, σ) with mdk held by the experiment; nullopt is ⊥.
    virtual std::optional<BitVector> open(const BitVector& msg, const TpbsSignature& sig) = 0;
    virtual ChallengeOracle& random_oracle() = 0;
};

// Oracles of the EXT experiment.
class ExtOracles {
public:
    virtual ~ExtOracles() = default;
    virtual UserSigningKey reveal_key(const BitVector& id, const std::vector<BitVector>& policies) = 0;
    virtual TpbsSignature sim_sign(const BitVector& msg) = 0;
    virtual ChallengeOracle& random_oracle() = 0;
};

// play() must depend only on its arguments: EXT replays it from scratch.
class SimAdversary {
public:
    virtual ~SimAdversary() = default;
    virtual std::string name() const = 0;
    virtual bool wants_mdk() const { return false; }
    // mdk is only passed to adversaries that ask for it.
    virtual bool play(const PublicParams& pp, const TrapdoorPair* mdk, SimOracles& oracles, Rng& rng) = 0;
};

class ExtAdversary {
public:
    virtual ~ExtAdversary() = default;
    virtual std::string name() const = 0;
    virtual std::optional<std::pair<BitVector, TpbsSignature>> play(const PublicParams& pp, const TrapdoorPair& mdk,
                                                                    ExtOracles& oracles, Rng& rng) = 0;
};

struct ExperimentCounters {
    std::size_t keys = 0, signatures = 0, openings = 0, sim_signatures = 0, refusals = 0;
    std::size_t aborts = 0, replays = 0;
};

struct ExperimentResult {
    bool win = false;
    std::vector<std::string> transcript;
    ExperimentCounters counters;
    bool extraction_failed = false;
    std::string note;
    double wall_seconds = 0.0;
};

// Both setups of the SIM experiment: index 0 from SimSetup, index 1 from Setup.
struct SimSetups {
    SetupResult sim, real;
};

struct ExperimentConfig {
    Params params;
    Seed seed{};
    // κ used for every proof; 0 keeps params.kappa.
    int kappa = 8;
    // Reuse these setups instead of running Initialize's setup calls.
    std::shared_ptr<const SimSetups> sim_setups;
    std::shared_ptr<const SetupResult> ext_setup;
};

// Params with the configured κ applied.
Params experiment_params(const ExperimentConfig& cfg);
std::shared_ptr<const SimSetups> make_sim_setups(const Params& params, Rng& rng);
std::shared_ptr<const SetupResult> make_ext_setup(const Params& params, Rng& rng);

ExperimentResult run_sim_experiment(SimAdversary& adversary, const ExperimentConfig& cfg);
ExperimentResult run_ext_experiment(ExtAdversary& adversary, const ExperimentConfig& cfg);

// Short digest of a signature for transcripts.
std::string signature_digest(const TpbsSignature& sig);

}  // namespace tpbs
