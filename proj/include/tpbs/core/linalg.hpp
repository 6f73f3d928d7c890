#pragma once

#include <optional>
#include <vector>

#include "tpbs/core/types.hpp"

namespace tpbs {

ZqVector mat_vec_mul(const ZqMatrix& M, const IntVector& x, std::uint64_t q);
ZqVector mat_vec_mul(const ZqMatrix& M, const ZqVector& x);
ZqVector mat_vec_mul(const SparseZqMatrix& M, const std::vector<Residue>& x);
ZqMatrix mat_mul(const ZqMatrix& A, const ZqMatrix& B);
// A (mod q) times an integer matrix.
ZqMatrix mat_mul(const ZqMatrix& A, const IntMatrix& B);
ZqMatrix mat_add(const ZqMatrix& A, const ZqMatrix& B);
ZqVector vec_add(const ZqVector& a, const ZqVector& b);
ZqVector vec_sub(const ZqVector& a, const ZqVector& b);

ZqMatrix horiz_concat(const std::vector<const ZqMatrix*>& blocks);
ZqMatrix vert_concat(const std::vector<const ZqMatrix*>& blocks);
ZqVector vec_concat(const std::vector<const ZqVector*>& parts);
// Column j of M lands at column positions[j] of a width-`width` result; other columns are zero.
ZqMatrix embed_with_zero_columns(const ZqMatrix& M, const std::vector<std::size_t>& positions, std::size_t width);

// B_j = ⌊(B + 2^{j-1})/2^j⌋ for j = 1..δ_B.
std::vector<std::int64_t> gadget_weights(std::int64_t B);
// Block-diagonal m × m·δ_B matrix with rows [B_1 … B_δ].
ZqMatrix gadget_matrix(std::size_t m, std::int64_t B, std::uint64_t q);
// G_{m,B}·x over the integers.
IntVector gadget_apply(std::size_t m, std::int64_t B, const IntVector& x);

// Reduced row echelon data for repeated right-hand sides of A·x = b (mod prime q).
class ModularSolver {
public:
    explicit ModularSolver(const ZqMatrix& A);
    std::size_t rank() const { return pivots_.size(); }
    const std::vector<std::size_t>& pivot_columns() const { return pivots_; }
    // Some solution with zeros on non-pivot columns, or nullopt if inconsistent.
    std::optional<std::vector<Residue>> solve(const std::vector<Residue>& b) const;

private:
    std::size_t rows_, cols_;
    std::uint64_t q_;
    std::vector<std::size_t> pivots_;
    // Row operations: T·A = R, stored as T (rows × rows).
    std::vector<Residue> transform_;
};

std::optional<std::vector<Residue>> solve_mod(const ZqMatrix& A, const ZqVector& b);

// Any solution of M·x = b (mod prime q) for a sparse M; rows whose only job is
// a private (singleton) column are solved last by back substitution.
std::optional<std::vector<Residue>> solve_sparse_mod(const SparseZqMatrix& M, const std::vector<Residue>& b);

// Some x with A·x = b over GF(2), or nullopt.
std::optional<BitVector> solve_gf2(const BitMatrix& A, const BitVector& b);

}  // namespace tpbs
