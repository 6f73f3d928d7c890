#pragma once

#include <vector>

#include "tpbs/core/params.hpp"
#include "tpbs/core/serialize.hpp"
#include "tpbs/trapdoor/trapdoor.hpp"

namespace tpbs {

// mvk = (A, A_0, …, A_ℓ, u). msk is the trapdoor of A.
struct BoyenPublic {
    ZqMatrix A;
    std::vector<ZqMatrix> Ai;  // A_0 … A_ℓ
    ZqVector u;

    std::size_t message_length() const { return Ai.empty() ? 0 : Ai.size() - 1; }
    bool operator==(const BoyenPublic&) const = default;
};

struct BoyenKeys {
    BoyenPublic mvk;
    TrapdoorPair msk;
};

BoyenKeys boyen_keygen(std::size_t n, std::size_t m, std::uint64_t q, std::size_t ell, Rng& rng);

// [A | A_0 + Σ msg[j]·A_j]
ZqMatrix boyen_message_matrix(const BoyenPublic& mvk, const BitVector& msg);

constexpr int kBoyenSignAttempts = 64;

// Resamples until ‖v‖∞ ≤ beta; throws SamplerError after kBoyenSignAttempts.
IntVector boyen_sign(const TrapdoorPair& msk, const BoyenPublic& mvk, const BitVector& msg, double s,
                     std::int64_t beta, Rng& rng);
bool boyen_verify(const BoyenPublic& mvk, const BitVector& msg, const IntVector& v, std::int64_t beta);

void write(ByteWriter& w, const BoyenPublic& mvk);
BoyenPublic read_boyen_public(ByteReader& r);

}  // namespace tpbs
