#pragma once

#include <functional>
#include <map>

#include "tpbs/scheme/scheme.hpp"

namespace tpbs {

// Programmable H₂ with a query log. Unprogrammed queries are numbered in
// order; the first `prefix.size()` of them are answered from `prefix`, later
// ones from `fresh`. Programming a point that was already queried fails and
// is counted as an abort.
class ReplayOracle final : public ProgrammableChallengeOracle {
public:
    using Source = std::function<Challenges(ByteSpan point, std::size_t kappa)>;

    ReplayOracle(std::vector<Challenges> prefix, Source fresh);

    Challenges query(ByteSpan point, std::size_t kappa) override;
    bool program(ByteSpan point, const Challenges& ch) override;

    struct Entry {
        Bytes point;
        Challenges answer;
    };
    const std::vector<Entry>& log() const { return log_; }
    std::size_t aborts() const { return aborts_; }
    std::size_t programmed() const { return programmed_.size(); }

private:
    std::vector<Challenges> prefix_;
    Source fresh_;
    std::map<Bytes, Challenges> programmed_;
    std::map<Bytes, Challenges> answered_;
    std::vector<Entry> log_;
    std::size_t aborts_ = 0;
};

// Deterministic default answers keyed by a seed.
ReplayOracle::Source seeded_source(const Seed& seed);
// Independent uniform answers drawn from rng.
ReplayOracle::Source random_source(Rng& rng);

SetupResult sim_setup(Params params, Rng& rng, const SetupOptions& opt = {});
UserSigningKey sim_keygen(const SetupResult& tr, const BitVector& id, const std::vector<BitVector>& policies,
                          Rng& rng);

// Encrypts the zero identity and simulates the proof by programming `oracle`.
TpbsSignature sim_sign(const PublicParams& pp, const BitVector& msg, Rng& rng, ProgrammableChallengeOracle& oracle);

// Re-executes an adversary from scratch against the given oracle and returns
// its output. Must be deterministic given identical oracle answers.
using ReplayRun = std::function<std::optional<std::pair<BitVector, TpbsSignature>>(ProgrammableChallengeOracle&)>;

struct ExtrResult {
    bool found = false;
    SecretTuple xi;
    std::size_t replays = 0;
    std::string failure;
};

constexpr std::size_t kExtrReplaysPerRound = 64;

// Forks the run at the H₂ query that produced sig's challenges, re-answering it
// with fresh challenges until some round has been answered under all three
// challenges with one commitment, then extracts and decodes the witness.
ExtrResult extr(const PublicParams& pp, const ReplayRun& run, const std::vector<ReplayOracle::Entry>& original_log,
                const BitVector& msg, const TpbsSignature& sig, Rng& rng, std::size_t budget = 0);

}  // namespace tpbs
