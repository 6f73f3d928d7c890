#pragma once

#include "tpbs/stern/statement.hpp"

namespace tpbs {

// VALID = { enc₃(z) ‖ enc₂(b) : z ∈ {−1,0,1}^k, b ∈ {0,1}^j }, η = (e, c),
// Γ_η = (ϕ_e, φ_c). |VALID| = 3^k·2^j.
class SimpleCodec final : public ValidCodec {
public:
    SimpleCodec(std::size_t trits, std::size_t bits) : k_(trits), j_(bits) {}

    std::size_t l1() const override { return 3 * k_; }
    std::size_t l2() const override { return 2 * j_; }
    std::vector<SeedPart> eta_shape() const override { return {{k_, true}, {j_, false}}; }
    bool valid_check(const TritVector& w) const override;
    IndexMap gamma_map(const PermSeed& eta) const override;
    TritVector sample_valid(Rng& rng) const override;

    TritVector encode(const TritVector& z, const BitVector& b) const;
    // Index of w in a fixed enumeration of VALID, in [0, 3^k·2^j).
    std::size_t rank(const TritVector& w) const;

private:
    std::size_t k_, j_;
};

}  // namespace tpbs
