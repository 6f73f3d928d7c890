#include "tpbs/sigcrypt/ots.hpp"

#include <algorithm>

#include "tpbs/core/errors.hpp"
#include "tpbs/sigcrypt/xof.hpp"

namespace tpbs {

namespace {

constexpr std::size_t kPreimages = 2 * kOtsDigestBits;

bool digest_bit(const Digest& d, std::size_t i) { return (d[i / 8] >> (7 - i % 8)) & 1; }

}  // namespace

OtsKeyPair ots_gen(Rng& rng) {
    OtsKeyPair kp;
    kp.osk = rng.bytes(kPreimages * kOtsChunk);
    kp.ovk.reserve(kOtsVerifyKeyBytes);
    for (int i = 0; i < 4; ++i) kp.ovk.push_back(static_cast<std::uint8_t>(kPreimages >> (8 * i)));
    for (std::size_t i = 0; i < kPreimages; ++i) {
        const Digest h = sha256(ByteSpan(kp.osk).subspan(i * kOtsChunk, kOtsChunk));
        kp.ovk.insert(kp.ovk.end(), h.begin(), h.end());
    }
    return kp;
}

Bytes ots_sign(const Bytes& osk, ByteSpan msg) {
    if (osk.size() != kPreimages * kOtsChunk) throw DimensionError("ots_sign: malformed signing key");
    const Digest d = sha256(msg);
    Bytes sig;
    sig.reserve(kOtsSignatureBytes);
    for (std::size_t i = 0; i < kOtsDigestBits; ++i) {
        const std::size_t idx = 2 * i + (digest_bit(d, i) ? 1 : 0);
        sig.insert(sig.end(), osk.begin() + static_cast<std::ptrdiff_t>(idx * kOtsChunk),
                   osk.begin() + static_cast<std::ptrdiff_t>((idx + 1) * kOtsChunk));
    }
    return sig;
}

bool ots_verify(ByteSpan ovk, ByteSpan msg, ByteSpan sig) {
    if (ovk.size() != kOtsVerifyKeyBytes || sig.size() != kOtsSignatureBytes) return false;
    std::uint32_t count = 0;
    for (int i = 0; i < 4; ++i) count |= static_cast<std::uint32_t>(ovk[static_cast<std::size_t>(i)]) << (8 * i);
    if (count != kPreimages) return false;
    const Digest d = sha256(msg);
    for (std::size_t i = 0; i < kOtsDigestBits; ++i) {
        const std::size_t idx = 2 * i + (digest_bit(d, i) ? 1 : 0);
        const Digest h = sha256(sig.subspan(i * kOtsChunk, kOtsChunk));
        if (!std::equal(h.begin(), h.end(), ovk.begin() + static_cast<std::ptrdiff_t>(4 + idx * kOtsChunk))) return false;
    }
    return true;
}

}  // namespace tpbs
