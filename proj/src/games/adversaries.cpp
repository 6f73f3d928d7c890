#include "tpbs/games/adversaries.hpp"

#include <stdexcept>

#include "tpbs/scheme/policy.hpp"

namespace tpbs {

BitVector random_bits(std::size_t len, Rng& rng) {
    BitVector out(len);
    for (std::size_t i = 0; i < len; ++i) out.set(i, rng.bit());
    return out;
}

BitVector random_identity(std::size_t len, Rng& rng) {
    BitVector id = random_bits(len, rng);
    while (id.is_zero()) id = random_bits(len, rng);
    return id;
}

std::pair<BitVector, BitVector> conforming_message(const PublicParams& pp, const BitVector& p, Rng& rng) {
    BitVector pcw = random_bits(pp.G2.cols(), rng);
    return {xor_bits(pp.G1.mul(p), pp.G2.mul(pcw)), pcw};
}

bool MdkLeakAdversary::play(const PublicParams& pp, const TrapdoorPair* mdk, SimOracles& oracles, Rng& rng) {
    const BitVector id = random_identity(static_cast<std::size_t>(pp.params.l1), rng);
    const BitVector p = random_bits(static_cast<std::size_t>(pp.params.l2), rng);
    oracles.key(id, {p});
    const auto [msg, pcw] = conforming_message(pp, p, rng);
    const auto sig = oracles.signature(1, msg, pcw);
    if (!sig || !mdk) return rng.bit();
    const auto opened = open(pp, *mdk, msg, *sig, rng, oracles.random_oracle());
    if (!opened.ok()) return rng.bit();
    return !opened.value->id.is_zero();
}

std::optional<std::pair<BitVector, TpbsSignature>> HonestSignerAdversary::play(const PublicParams& pp,
                                                                               const TrapdoorPair&,
                                                                               ExtOracles& oracles, Rng& rng) {
    const BitVector id = random_identity(static_cast<std::size_t>(pp.params.l1), rng);
    const BitVector p = random_bits(static_cast<std::size_t>(pp.params.l2), rng);
    const UserSigningKey usk = oracles.reveal_key(id, {p});
    const auto [msg, pcw] = conforming_message(pp, p, rng);
    auto sig = sign(pp, usk, msg, pcw, rng, oracles.random_oracle());
    if (!sig.ok()) return std::nullopt;
    return std::make_pair(msg, std::move(*sig.value));
}

std::optional<std::pair<BitVector, TpbsSignature>> SimSignReplayAdversary::play(const PublicParams& pp,
                                                                                const TrapdoorPair&,
                                                                                ExtOracles& oracles, Rng& rng) {
    const BitVector msg = random_bits(static_cast<std::size_t>(pp.params.n), rng);
    return std::make_pair(msg, oracles.sim_sign(msg));
}

std::optional<std::pair<BitVector, TpbsSignature>> ForgedCiphertextAdversary::play(const PublicParams& pp,
                                                                                   const TrapdoorPair&,
                                                                                   ExtOracles& oracles, Rng& rng) {
    auto honest = HonestSignerAdversary().play(pp, {}, oracles, rng);
    if (!honest) return std::nullopt;
    auto& [msg, sig] = *honest;
    const Params& P = pp.params;
    BitVector other = random_identity(static_cast<std::size_t>(P.l1), rng);
    const ZqMatrix G = h1(sig.ovk, static_cast<std::size_t>(P.n), static_cast<std::size_t>(P.l1), P.q);
    sig.c2 = ibe_encrypt(pp.B, G, other, P.noise_bound, rng).c2;
    return honest;
}

std::unique_ptr<SimAdversary> make_sim_adversary(const std::string& name) {
    if (name == "coin-flip") return std::make_unique<CoinFlipAdversary>();
    if (name == "mdk-leak") return std::make_unique<MdkLeakAdversary>();
    throw std::invalid_argument("unknown SIM adversary '" + name + "'");
}

std::unique_ptr<ExtAdversary> make_ext_adversary(const std::string& name) {
    if (name == "honest-signer") return std::make_unique<HonestSignerAdversary>();
    if (name == "replay-simsign") return std::make_unique<SimSignReplayAdversary>();
    if (name == "forged-ciphertext") return std::make_unique<ForgedCiphertextAdversary>();
    throw std::invalid_argument("unknown EXT adversary '" + name + "'");
}

std::vector<std::string> sim_adversary_names() { return {"coin-flip", "mdk-leak"}; }
std::vector<std::string> ext_adversary_names() { return {"honest-signer", "replay-simsign", "forged-ciphertext"}; }

}  // namespace tpbs
