#pragma once

#include <memory>

#include "tpbs/core/linalg.hpp"
#include "tpbs/core/serialize.hpp"
#include "tpbs/core/types.hpp"
#include "tpbs/gauss/rng.hpp"
#include "tpbs/trapdoor/basis.hpp"

namespace tpbs {

// A (n × m) with a short basis of Λ⊥(A). `solver` belongs to the leftmost
// n × root-dim block and is shared by every extension.
struct TrapdoorPair {
    ZqMatrix A;
    std::shared_ptr<const Basis> basis;
    std::shared_ptr<const ModularSolver> solver;
    double quality_bound = 0.0;  // recorded at generation, ≥ ‖S̃‖
    double gs_norm = 0.0;        // measured ‖S̃‖
};

// The k × k basis S_k of Λ⊥(g), g = (1, 2, …, 2^{k−1}).
IntMatrix gadget_basis(std::uint64_t q);

constexpr int kTrapGenAttempts = 8;

TrapdoorPair trap_gen(std::size_t n, std::size_t m, std::uint64_t q, Rng& rng);

struct GramSchmidt {
    std::vector<double> vectors;  // column-major, dim × dim
    std::vector<double> norms;    // ‖s̃_i‖
    double max_norm = 0.0;
};
// Floating-point modified Gram–Schmidt of the columns of S.
GramSchmidt gram_schmidt(const IntMatrix& S);

// Basis for A' = [A | A₊]; throws DimensionError if A is not a prefix of A'.
TrapdoorPair ext_basis(const TrapdoorPair& T, const ZqMatrix& A_ext);

// x ← D_{Λᵘ(A'),s}. Requires s ≥ ‖S̃'‖·sampler_width_factor(dim).
IntVector sample_d(const TrapdoorPair& T, const ZqVector& u, double s, Rng& rng);

void write(ByteWriter& w, const TrapdoorPair& t);
TrapdoorPair read_trapdoor(ByteReader& r);

}  // namespace tpbs
