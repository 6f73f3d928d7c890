#include "tpbs/games/experiments.hpp"

#include <chrono>
#include <map>
#include <set>

#include "tpbs/core/errors.hpp"
#include "tpbs/core/serialize.hpp"
#include "tpbs/scheme/files.hpp"
#include "tpbs/scheme/policy.hpp"
#include "tpbs/sigcrypt/xof.hpp"

namespace tpbs {

namespace {

using Clock = std::chrono::steady_clock;

std::string hex_bits(const BitVector& b) { return b.size() == 0 ? "-" : bits_to_hex(b); }

std::string policies_text(const std::vector<BitVector>& ps) {
    std::string out = "[";
    for (std::size_t i = 0; i < ps.size(); ++i) out += (i ? "," : "") + hex_bits(ps[i]);
    return out + "]";
}

Bytes signature_bytes(const TpbsSignature& sig) {
    ByteWriter w;
    write(w, sig);
    return w.take();
}

// Per-trial seeds, drawn in a fixed order from the experiment seed.
struct TrialSeeds {
    bool b = false;
    Seed setup{}, oracle{}, experiment{}, adversary{}, extractor{};

    explicit TrialSeeds(const Seed& seed) {
        Rng rng(seed);
        b = rng.bit();
        setup = rng.seed_bytes();
        oracle = rng.seed_bytes();
        experiment = rng.seed_bytes();
        adversary = rng.seed_bytes();
        extractor = rng.seed_bytes();
    }
};

Seed derive_seed(const Seed& base, std::size_t index) {
    Bytes in(base.begin(), base.end());
    for (int i = 0; i < 8; ++i) in.push_back(static_cast<std::uint8_t>(index >> (8 * i)));
    const Digest d = sha256(in);
    Seed out;
    std::copy(d.begin(), d.end(), out.begin());
    return out;
}

PublicParams with_kappa(const PublicParams& pp, int kappa) {
    PublicParams out = pp;
    if (kappa > 0) out.params.kappa = kappa;
    return out;
}

class SimGame final : public SimOracles {
public:
    SimGame(bool b, const SimSetups& setups, int kappa, const Seed& oracle_seed, const Seed& rng_seed,
            ExperimentResult& result)
        : b_(b),
          setups_(setups),
          pp0_(with_kappa(setups.sim.pp, kappa)),
          pp1_(with_kappa(setups.real.pp, kappa)),
          ro_(programmable_oracle_for(oracle_seed)),
          rng_(rng_seed),
          res_(result) {}

    const PublicParams& pp_b() const { return b_ ? pp1_ : pp0_; }
    const TrapdoorPair& mdk_b() const { return b_ ? setups_.real.mdk : setups_.sim.mdk; }
    std::size_t aborts() const { return ro_.aborts(); }

    UserSigningKey key(const BitVector& id, const std::vector<BitVector>& policies) override {
        UserSigningKey usk0 = sim_keygen(setups_.sim, id, policies, rng_);
        UserSigningKey usk1 = keygen(pp1_, setups_.real.msk, id, policies, rng_);
        q_.push_back({id, policies, usk1});
        ++res_.counters.keys;
        res_.transcript.push_back("key j=" + std::to_string(q_.size()) + " id=" + hex_bits(id) +
                                  " policies=" + policies_text(policies));
        return b_ ? usk1 : usk0;
    }

    std::optional<TpbsSignature> signature(std::size_t i, const BitVector& msg, const BitVector& pcw) override {
        std::string line = "signature i=" + std::to_string(i) + " msg=" + hex_bits(msg) + " pcw=" + hex_bits(pcw);
        if (i < 1 || i > q_.size()) return refuse(line);
        const Entry& e = q_[i - 1];
        std::optional<TpbsSignature> s0, s1;
        bool authorized = false;
        try {
            for (const auto& p : e.policies) authorized = authorized || policy_check(pp0_.G1, pp0_.G2, p, pcw, msg);
        } catch (const DimensionError&) {
            authorized = false;
        }
        if (authorized) s0 = sim_sign(pp0_, msg, rng_, ro_);
        s1 = sign(pp1_, e.usk1, msg, pcw, rng_, ro_).value;
        std::optional<TpbsSignature>& sb = b_ ? s1 : s0;
        if (!sb) return refuse(line);
        challenged_.insert({msg.bits(), signature_bytes(*sb)});
        ++res_.counters.signatures;
        res_.transcript.push_back(line + " -> " + signature_digest(*sb));
        return sb;
    }

    std::optional<BitVector> open(const BitVector& msg, const TpbsSignature& sig) override {
        std::string line = "open msg=" + hex_bits(msg) + " sig=" + signature_digest(sig);
        ++res_.counters.openings;
        if (challenged_.count({msg.bits(), signature_bytes(sig)})) return refuse(line + " (challenged)");
        auto out = tpbs::open(pp_b(), mdk_b(), msg, sig, rng_, ro_);
        if (!out.ok()) return refuse(line);
        res_.transcript.push_back(line + " -> " + hex_bits(out.value->id));
        return out.value->id;
    }

    ChallengeOracle& random_oracle() override { return ro_; }

private:
    struct Entry {
        BitVector id;
        std::vector<BitVector> policies;
        UserSigningKey usk1;
    };

    static ReplayOracle programmable_oracle_for(const Seed& seed) { return ReplayOracle({}, seeded_source(seed)); }

    std::nullopt_t refuse(const std::string& line) {
        ++res_.counters.refusals;
        res_.transcript.push_back(line + " -> bottom");
        return std::nullopt;
    }

    bool b_;
    const SimSetups& setups_;
    PublicParams pp0_, pp1_;
    ReplayOracle ro_;
    Rng rng_;
    ExperimentResult& res_;
    std::vector<Entry> q_;
    std::set<std::pair<std::vector<std::uint8_t>, Bytes>> challenged_;
};

// Keys issued by RevealKey, by call index. Each key is drawn from its own
// seed, so replays of the same adversary get identical keys from the cache.
struct IssuedKey {
    BitVector id;
    std::vector<BitVector> policies;
    UserSigningKey usk;
};
using KeyCache = std::map<std::size_t, IssuedKey>;

class ExtGame final : public ExtOracles {
public:
    ExtGame(const SetupResult& setup, const PublicParams& pp, ProgrammableChallengeOracle& ro, const Seed& rng_seed,
            KeyCache& keys)
        : setup_(setup), pp_(pp), ro_(ro), rng_(rng_seed), key_seed_(rng_.seed_bytes()), keys_(keys) {}

    UserSigningKey reveal_key(const BitVector& id, const std::vector<BitVector>& policies) override {
        const std::size_t index = counters.keys;
        auto it = keys_.find(index);
        if (it == keys_.end() || it->second.id != id || it->second.policies != policies) {
            Rng key_rng(derive_seed(key_seed_, index));
            it = keys_.insert_or_assign(index, IssuedKey{id, policies, sim_keygen(setup_, id, policies, key_rng)}).first;
        }
        const UserSigningKey& usk = it->second.usk;
        for (const auto& p : policies) revealed.insert({id.bits(), p.bits()});
        ++counters.keys;
        transcript.push_back("reveal-key id=" + hex_bits(id) + " policies=" + policies_text(policies));
        return usk;
    }

    TpbsSignature sim_sign(const BitVector& msg) override {
        TpbsSignature sig = tpbs::sim_sign(pp_, msg, rng_, ro_);
        simulated.insert({msg.bits(), signature_bytes(sig)});
        ++counters.sim_signatures;
        transcript.push_back("sim-sign msg=" + hex_bits(msg) + " -> " + signature_digest(sig));
        return sig;
    }

    ChallengeOracle& random_oracle() override { return ro_; }

    std::set<std::pair<std::vector<std::uint8_t>, std::vector<std::uint8_t>>> revealed;
    std::set<std::pair<std::vector<std::uint8_t>, Bytes>> simulated;
    std::vector<std::string> transcript;
    ExperimentCounters counters;

private:
    const SetupResult& setup_;
    const PublicParams& pp_;
    ProgrammableChallengeOracle& ro_;
    Rng rng_;
    Seed key_seed_;
    KeyCache& keys_;
};

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

}  // namespace

std::string signature_digest(const TpbsSignature& sig) {
    const Digest d = sha256(signature_bytes(sig));
    return bytes_to_hex(ByteSpan(d.data(), 8));
}

Params experiment_params(const ExperimentConfig& cfg) {
    Params p = cfg.params;
    if (cfg.kappa > 0) p.kappa = cfg.kappa;
    return p;
}

std::shared_ptr<const SimSetups> make_sim_setups(const Params& params, Rng& rng) {
    auto out = std::make_shared<SimSetups>();
    out->sim = sim_setup(params, rng);
    out->real = setup(params, rng);
    return out;
}

std::shared_ptr<const SetupResult> make_ext_setup(const Params& params, Rng& rng) {
    return std::make_shared<const SetupResult>(sim_setup(params, rng));
}

ExperimentResult run_sim_experiment(SimAdversary& adversary, const ExperimentConfig& cfg) {
    const auto t0 = Clock::now();
    const TrialSeeds seeds(cfg.seed);
    ExperimentResult res;
    std::shared_ptr<const SimSetups> setups = cfg.sim_setups;
    if (!setups) {
        Rng setup_rng(seeds.setup);
        setups = make_sim_setups(experiment_params(cfg), setup_rng);
    }
    SimGame game(seeds.b, *setups, cfg.kappa, seeds.oracle, seeds.experiment, res);
    res.transcript.push_back("initialize adversary=" + adversary.name());
    Rng adv_rng(seeds.adversary);
    const bool guess = adversary.play(game.pp_b(), adversary.wants_mdk() ? &game.mdk_b() : nullptr, game, adv_rng);
    res.win = guess == seeds.b;
    res.counters.aborts = game.aborts();
    res.transcript.push_back(std::string("finalize guess=") + (guess ? "1" : "0") + " b=" + (seeds.b ? "1" : "0"));
    res.wall_seconds = seconds_since(t0);
    return res;
}

ExperimentResult run_ext_experiment(ExtAdversary& adversary, const ExperimentConfig& cfg) {
    const auto t0 = Clock::now();
    const TrialSeeds seeds(cfg.seed);
    ExperimentResult res;
    std::shared_ptr<const SetupResult> setup = cfg.ext_setup;
    if (!setup) {
        Rng setup_rng(seeds.setup);
        setup = make_ext_setup(experiment_params(cfg), setup_rng);
    }
    const PublicParams pp = with_kappa(setup->pp, cfg.kappa);

    struct RunOutput {
        std::optional<std::pair<BitVector, TpbsSignature>> output;
        std::unique_ptr<ExtGame> game;
    };
    KeyCache keys;
    auto run = [&](ProgrammableChallengeOracle& ro) {
        RunOutput out;
        out.game = std::make_unique<ExtGame>(*setup, pp, ro, seeds.experiment, keys);
        Rng adv_rng(seeds.adversary);
        out.output = adversary.play(pp, setup->mdk, *out.game, adv_rng);
        return out;
    };

    ReplayOracle ro({}, seeded_source(seeds.oracle));
    RunOutput first = run(ro);
    res.transcript = first.game->transcript;
    res.transcript.insert(res.transcript.begin(), "initialize adversary=" + adversary.name());
    res.counters = first.game->counters;
    auto finish = [&](bool win, const std::string& note) {
        res.win = win;
        res.note = note;
        res.counters.aborts = ro.aborts();
        res.transcript.push_back(std::string("finalize win=") + (win ? "1" : "0") + " " + note);
        res.wall_seconds = seconds_since(t0);
        return res;
    };
    if (!first.output) return finish(false, "adversary produced no output");
    const auto& [msg, sig] = *first.output;
    res.transcript.push_back("output msg=" + hex_bits(msg) + " sig=" + signature_digest(sig));
    if (!verify(pp, msg, sig, ro)) return finish(false, "signature rejected");
    if (first.game->simulated.count({msg.bits(), signature_bytes(sig)})) return finish(false, "signature from SimSign");

    Rng extr_rng(seeds.extractor);
    const ReplayRun replay = [&](ProgrammableChallengeOracle& o) { return run(o).output; };
    const ExtrResult ex = extr(pp, replay, ro.log(), msg, sig, extr_rng);
    res.counters.replays = ex.replays;
    if (!ex.found) {
        res.extraction_failed = true;
        return finish(false, "extraction failed: " + ex.failure);
    }
    Rng open_rng(seeds.experiment);
    const auto opened = open(pp, setup->mdk, msg, sig, open_rng, ro);
    const bool in_qk = first.game->revealed.count({ex.xi.id.bits(), ex.xi.p.bits()}) > 0;
    bool pc = false;
    try {
        pc = policy_check(pp.G1, pp.G2, ex.xi.p, ex.xi.pcw, msg);
    } catch (const DimensionError&) {
        pc = false;
    }
    const bool same_id = opened.ok() && opened.value->id == ex.xi.id;
    const std::string note = "extracted id=" + hex_bits(ex.xi.id) + " p=" + hex_bits(ex.xi.p) +
                             " opened=" + (opened.ok() ? hex_bits(opened.value->id) : std::string("bottom"));
    return finish(!in_qk || !pc || !same_id, note);
}

}  // namespace tpbs
