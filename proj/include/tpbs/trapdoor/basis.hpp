#pragma once

#include <memory>
#include <mutex>
#include <vector>

#include "tpbs/core/types.hpp"
#include "tpbs/gauss/rng.hpp"

namespace tpbs {

// A basis of a q-ary lattice Λ⊥(A), columns are basis vectors.
//
// A root basis is an explicit integer matrix. An extension [[S, W], [0, I]]
// of a parent basis S is kept implicitly: its extra columns [w_j; e_j] have
// Gram–Schmidt vectors e_j, so the parent's orthogonalization carries over
// and ‖S̃'‖ = ‖S̃‖ by construction.
class Basis {
public:
    static std::shared_ptr<const Basis> root(IntMatrix S, std::uint64_t q);
    // W has the parent's dimension as row count and entries reduced mod q.
    static std::shared_ptr<const Basis> extend(std::shared_ptr<const Basis> parent, ZqMatrix W);

    std::size_t dim() const { return dim_; }
    std::uint64_t modulus() const { return q_; }
    bool is_root() const { return parent_ == nullptr; }
    const Basis* parent() const { return parent_.get(); }
    // Root matrix (root only).
    const IntMatrix& root_matrix() const;

    // Explicit dim × dim matrix, extension columns centered mod q.
    IntMatrix matrix() const;
    // ‖b̃_i‖ in column order.
    std::vector<double> gs_norms() const;
    double gs_norm() const;

    // Klein's randomized nearest plane: a vector of t + Λ distributed as
    // D_{t+Λ,s}. Arithmetic on t is mod q, which Λ contains.
    IntVector sample_coset(const IntVector& t, double s, Rng& rng) const;

    Basis(const Basis&) = delete;
    Basis& operator=(const Basis&) = delete;

private:
    Basis() = default;
    void ensure_factor() const;
    IntVector sample_root(std::vector<Residue> t, double s, Rng& rng) const;

    std::size_t dim_ = 0;
    std::uint64_t q_ = 0;
    IntMatrix S_;
    std::shared_ptr<const Basis> parent_;
    ZqMatrix W_;

    // Lower-triangular Rᵀ (row-major) with RᵀR = SᵀS, built on first use.
    mutable std::once_flag factor_once_;
    mutable std::vector<double> rt_;
};

}  // namespace tpbs
