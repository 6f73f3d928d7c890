#pragma once

#include "tpbs/scheme/relation.hpp"
#include "tpbs/trapdoor/trapdoor.hpp"

namespace tpbs {

struct SetupOptions {
    std::optional<BitMatrix> G1, G2;
    // GPV trapdoors drawn before giving up on the Open inequality.
    int gpv_attempts = 8;
};

struct SetupResult {
    PublicParams pp;
    TrapdoorPair msk;  // Boyen trapdoor of A
    TrapdoorPair mdk;  // GPV trapdoor of B
};

// Measures both trapdoors and fixes s, s₁, β. Throws ParamError when the Open
// inequality fails for every GPV attempt (unless the preset waives it).
SetupResult setup(Params params, Rng& rng, const SetupOptions& opt = {});

// One Boyen certificate per policy. Throws DimensionError on wrong lengths.
UserSigningKey keygen(const PublicParams& pp, const TrapdoorPair& msk, const BitVector& id,
                      const std::vector<BitVector>& policies, Rng& rng);

// Bytes covered by the one-time signature.
Bytes ots_message(const ZqVector& c1, const ZqVector& c2, const SternProof& pi);

// ⊥ when no certified policy authorizes msg under pcw or the inputs have the wrong shape.
Outcome<TpbsSignature> sign(const PublicParams& pp, const UserSigningKey& usk, const BitVector& msg,
                            const BitVector& pcw, Rng& rng, ChallengeOracle& oracle);
Outcome<TpbsSignature> sign(const PublicParams& pp, const UserSigningKey& usk, const BitVector& msg,
                            const BitVector& pcw, Rng& rng);

// OTS, challenge binding, then every round. Never throws.
bool verify(const PublicParams& pp, const BitVector& msg, const TpbsSignature& sig, ChallengeOracle& oracle);
bool verify(const PublicParams& pp, const BitVector& msg, const TpbsSignature& sig);

struct OpenReport {
    BitVector id;
    // ‖e₂ − F_ovkᵀe₁‖∞ recovered from the decryption values, and the bound it must respect.
    std::int64_t noise = 0;
    std::int64_t noise_bound = 0;
};

// ⊥ when the signature does not verify.
Outcome<OpenReport> open(const PublicParams& pp, const TrapdoorPair& mdk, const BitVector& msg,
                         const TpbsSignature& sig, Rng& rng, ChallengeOracle& oracle);
Outcome<OpenReport> open(const PublicParams& pp, const TrapdoorPair& mdk, const BitVector& msg,
                         const TpbsSignature& sig, Rng& rng);

}  // namespace tpbs
