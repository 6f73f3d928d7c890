#pragma once

#include "tpbs/core/types.hpp"
#include "tpbs/gauss/rng.hpp"

namespace tpbs {

// Lamport one-time signature over SHA-256 (h = 256 digest bits).
// ovk: u32 preimage count then 2h hashes of 32 bytes; osk: 2h preimages;
// signature: h preimages, one per digest bit.
constexpr std::size_t kOtsDigestBits = 256;
constexpr std::size_t kOtsChunk = 32;
constexpr std::size_t kOtsVerifyKeyBytes = 4 + 2 * kOtsDigestBits * kOtsChunk;
constexpr std::size_t kOtsSignatureBytes = kOtsDigestBits * kOtsChunk;

struct OtsKeyPair {
    Bytes ovk;
    Bytes osk;
};

OtsKeyPair ots_gen(Rng& rng);
Bytes ots_sign(const Bytes& osk, ByteSpan msg);
// Never throws; malformed inputs are rejected.
bool ots_verify(ByteSpan ovk, ByteSpan msg, ByteSpan sig);

}  // namespace tpbs
