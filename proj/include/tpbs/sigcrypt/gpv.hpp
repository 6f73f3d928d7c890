#pragma once

#include "tpbs/core/params.hpp"
#include "tpbs/core/serialize.hpp"
#include "tpbs/trapdoor/trapdoor.hpp"

namespace tpbs {

// G = H₁(ovk): n × ℓ₁ over Z_q from SHAKE256 under "TPBS-H1".
ZqMatrix h1(ByteSpan ovk, std::size_t n, std::size_t l1, std::uint64_t q);

struct IbeCiphertext {
    ZqVector c1;  // m
    ZqVector c2;  // ℓ₁
    bool operator==(const IbeCiphertext&) const = default;
};

// Encryption randomness (s, e₁, e₂), each entry bounded by B.
struct IbeRandomness {
    IntVector s, e1, e2;
};

// c₁ = Bᵀs + e₁, c₂ = Gᵀs + e₂ + id·⌊q/2⌋ with the given randomness.
IbeCiphertext ibe_encrypt_with(const ZqMatrix& B, const ZqMatrix& G, const BitVector& id, const IbeRandomness& r);
IbeRandomness ibe_sample_randomness(std::size_t n, std::size_t m, std::size_t l1, std::int64_t noise_bound, Rng& rng);
IbeCiphertext ibe_encrypt(const ZqMatrix& B, const ZqMatrix& G, const BitVector& id, std::int64_t noise_bound,
                          Rng& rng, IbeRandomness* retained = nullptr);

constexpr int kExtractAttempts = 64;

// F with B·F = G and ‖F‖∞ ≤ ⌈s₁·log2 m⌉ (columns resampled on overflow).
IntMatrix ibe_extract(const TrapdoorPair& mdk, const ZqMatrix& G, double s1, Rng& rng);

// c₂ − Fᵀc₁, centered.
IntVector ibe_decryption_values(const IntMatrix& F, const IbeCiphertext& ct);
// Nearest of {0, ⌊q/2⌋} per coordinate; an exact quarter distance rounds to 1.
BitVector ibe_decrypt(const IntMatrix& F, const IbeCiphertext& ct);
bool round_to_bit(Residue v, std::uint64_t q);

void write(ByteWriter& w, const IbeCiphertext& ct);
IbeCiphertext read_ibe_ciphertext(ByteReader& r);

}  // namespace tpbs
