#pragma once

#include <memory>
#include <string>
#include <vector>

#include "tpbs/games/experiments.hpp"

namespace tpbs {

// SIM: ignores the oracles and guesses a fair coin.
class CoinFlipAdversary final : public SimAdversary {
public:
    std::string name() const override { return "coin-flip"; }
    bool play(const PublicParams&, const TrapdoorPair*, SimOracles&, Rng& rng) override { return rng.bit(); }
};

// SIM with mdk leaked: opens one challenge signature itself; the zero
// identity means the simulated branch.
class MdkLeakAdversary final : public SimAdversary {
public:
    std::string name() const override { return "mdk-leak"; }
    bool wants_mdk() const override { return true; }
    bool play(const PublicParams& pp, const TrapdoorPair* mdk, SimOracles& oracles, Rng& rng) override;
};

// EXT: requests one key, signs a conforming message honestly and outputs it.
class HonestSignerAdversary final : public ExtAdversary {
public:
    std::string name() const override { return "honest-signer"; }
    std::optional<std::pair<BitVector, TpbsSignature>> play(const PublicParams& pp, const TrapdoorPair& mdk,
                                                            ExtOracles& oracles, Rng& rng) override;
};

// EXT: outputs a SimSign answer verbatim.
class SimSignReplayAdversary final : public ExtAdversary {
public:
    std::string name() const override { return "replay-simsign"; }
    std::optional<std::pair<BitVector, TpbsSignature>> play(const PublicParams& pp, const TrapdoorPair& mdk,
                                                            ExtOracles& oracles, Rng& rng) override;
};

// EXT: signs honestly, then swaps c₂ for an encryption of another identity.
class ForgedCiphertextAdversary final : public ExtAdversary {
public:
    std::string name() const override { return "forged-ciphertext"; }
    std::optional<std::pair<BitVector, TpbsSignature>> play(const PublicParams& pp, const TrapdoorPair& mdk,
                                                            ExtOracles& oracles, Rng& rng) override;
};

// Throws std::invalid_argument for unknown names.
std::unique_ptr<SimAdversary> make_sim_adversary(const std::string& name);
std::unique_ptr<ExtAdversary> make_ext_adversary(const std::string& name);
std::vector<std::string> sim_adversary_names();
std::vector<std::string> ext_adversary_names();

// A conforming (msg, pcw) for policy p: random pcw, msg = G₁p + G₂pcw.
std::pair<BitVector, BitVector> conforming_message(const PublicParams& pp, const BitVector& p, Rng& rng);
BitVector random_bits(std::size_t len, Rng& rng);
// Uniform nonzero identity.
BitVector random_identity(std::size_t len, Rng& rng);

}  // namespace tpbs
