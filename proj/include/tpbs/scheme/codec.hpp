#pragma once

#include "tpbs/core/params.hpp"
#include "tpbs/stern/statement.hpp"

namespace tpbs {

// Block lengths and offsets of the extended witness w = (w₁ ‖ w₂).
// w₁ = (z₁₁ ‖ z₁₂ ‖ z₁₃ ‖ z₁₄ ‖ z₁₅), w₂ = (z₂₁ ‖ z₂₂).
struct TpbsLayout {
    std::size_t n = 0, m = 0, l1 = 0, l2 = 0, d = 0, ell = 0;
    std::size_t delta_beta = 0, delta_noise = 0;
    std::size_t L11 = 0, L12 = 0, L13 = 0, L14 = 0, L15 = 0, L1 = 0;
    std::size_t L21 = 0, L22 = 0, L2 = 0;
    std::size_t o11 = 0, o12 = 0, o13 = 0, o14 = 0, o15 = 0;
    // Offsets of z₂₁, z₂₂ within the full vector.
    std::size_t o21 = 0, o22 = 0;

    static TpbsLayout from(const Params& p);
    std::size_t v_hat_length() const { return m * delta_beta; }
    std::size_t noise_hat_length() const { return (n + m + l1) * delta_noise; }
    std::size_t rows1() const { return n + m + l1; }
    bool operator==(const TpbsLayout&) const = default;
};

// The decoded pieces of a VALID vector.
struct TpbsWitnessParts {
    TritVector v1_hat, v2_hat;  // m·δ_β each
    TritVector noise_hat;       // vdec(s ‖ e₁ ‖ e₂), (n + m + ℓ₁)·δ_B
    BitVector id, p, pcw;
    bool operator==(const TpbsWitnessParts&) const = default;
};

class TpbsCodec final : public ValidCodec {
public:
    explicit TpbsCodec(const TpbsLayout& layout) : lay_(layout) {}
    explicit TpbsCodec(const Params& p) : lay_(TpbsLayout::from(p)) {}

    const TpbsLayout& layout() const { return lay_; }

    std::size_t l1() const override { return lay_.L1; }
    std::size_t l2() const override { return lay_.L2; }
    // (b_v1, b_v2, b_14, b_id, b_p, b_q)
    std::vector<SeedPart> eta_shape() const override;
    bool valid_check(const TritVector& w) const override;
    IndexMap gamma_map(const PermSeed& eta) const override;
    TritVector sample_valid(Rng& rng) const override;

    TritVector encode(const TpbsWitnessParts& parts) const;
    // Reads the parts back; throws RangeError naming the first inconsistent block.
    TpbsWitnessParts decode(const TritVector& w) const;

private:
    TpbsLayout lay_;
};

}  // namespace tpbs
