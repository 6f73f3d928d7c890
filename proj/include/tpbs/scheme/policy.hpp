#pragma once

#include <optional>

#include "tpbs/core/types.hpp"
#include "tpbs/gauss/rng.hpp"

namespace tpbs {

// G₁·p + G₂·pcw = msg (mod 2). Throws DimensionError on length mismatch.
bool policy_check(const BitMatrix& G1, const BitMatrix& G2, const BitVector& p, const BitVector& pcw,
                  const BitVector& msg);

// Some pcw making policy_check pass, or nullopt.
std::optional<BitVector> find_pcw(const BitMatrix& G1, const BitMatrix& G2, const BitVector& p,
                                  const BitVector& msg);

BitMatrix sample_bit_matrix(std::size_t rows, std::size_t cols, Rng& rng);
// Rejection-samples until the rank over GF(2) equals `rows`; requires rows ≤ cols.
BitMatrix sample_full_row_rank(std::size_t rows, std::size_t cols, Rng& rng);

BitVector xor_bits(const BitVector& a, const BitVector& b);

}  // namespace tpbs
