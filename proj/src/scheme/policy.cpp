#include "tpbs/scheme/policy.hpp"

#include "tpbs/core/errors.hpp"
#include "tpbs/core/linalg.hpp"

namespace tpbs {

BitVector xor_bits(const BitVector& a, const BitVector& b) {
    if (a.size() != b.size()) throw DimensionError("xor of bit vectors with different lengths");
    BitVector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out.set(i, a[i] != b[i]);
    return out;
}

bool policy_check(const BitMatrix& G1, const BitMatrix& G2, const BitVector& p, const BitVector& pcw,
                  const BitVector& msg) {
    if (G1.rows() != G2.rows() || msg.size() != G1.rows())
        throw DimensionError("policy check: message length differs from policy matrix rows");
    if (p.size() != G1.cols() || pcw.size() != G2.cols())
        throw DimensionError("policy check: policy or witness length differs from matrix columns");
    return xor_bits(G1.mul(p), G2.mul(pcw)) == msg;
}

std::optional<BitVector> find_pcw(const BitMatrix& G1, const BitMatrix& G2, const BitVector& p,
                                  const BitVector& msg) {
    if (p.size() != G1.cols() || msg.size() != G1.rows() || G2.rows() != G1.rows())
        throw DimensionError("find_pcw: dimension mismatch");
    return solve_gf2(G2, xor_bits(msg, G1.mul(p)));
}

BitMatrix sample_bit_matrix(std::size_t rows, std::size_t cols, Rng& rng) {
    BitMatrix out(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) out.set(r, c, rng.bit());
    return out;
}

BitMatrix sample_full_row_rank(std::size_t rows, std::size_t cols, Rng& rng) {
    if (rows > cols) throw DimensionError("full row rank needs rows <= cols");
    // Each draw succeeds with probability > 0.28.
    for (int attempt = 0; attempt < 1000; ++attempt) {
        BitMatrix G = sample_bit_matrix(rows, cols, rng);
        if (G.rank() == rows) return G;
    }
    throw Error("could not sample a full-rank policy matrix");
}

}  // namespace tpbs
