#pragma once

#include "tpbs/core/params.hpp"
#include "tpbs/core/types.hpp"

namespace tpbs {

// COM(x; ρ) = C₀·ρ + C₁·digest(x) mod q, with C₀, C₁ (n × m) expanded from a
// public seed and digest(x) ∈ {0,1}^m from SHAKE256.
class CommitmentKey {
public:
    CommitmentKey() = default;
    CommitmentKey(const Seed& seed, std::size_t n, std::size_t m, std::uint64_t q);
    static CommitmentKey from_params(const Params& p);

    std::size_t n() const { return n_; }
    std::size_t randomness_length() const { return m_; }
    std::uint64_t modulus() const { return q_; }

    // Throws DimensionError if |ρ| ≠ m.
    ZqVector commit(ByteSpan x, const BitVector& rho) const;
    BitVector digest(ByteSpan x) const;

private:
    std::size_t n_ = 0, m_ = 0;
    std::uint64_t q_ = 0;
    ZqMatrix C0_, C1_;
};

}  // namespace tpbs
