#pragma once

#include <cstdint>

namespace tpbs {

using Residue = std::uint64_t;

inline Residue reduce_signed(std::int64_t x, std::uint64_t q) {
    std::int64_t r = x % static_cast<std::int64_t>(q);
    return static_cast<Residue>(r < 0 ? r + static_cast<std::int64_t>(q) : r);
}

inline Residue add_mod(Residue a, Residue b, std::uint64_t q) {
    Residue s = a + b;
    return s >= q ? s - q : s;
}

inline Residue sub_mod(Residue a, Residue b, std::uint64_t q) {
    return a >= b ? a - b : a + q - b;
}

inline Residue mul_mod(Residue a, Residue b, std::uint64_t q) {
    return static_cast<Residue>(static_cast<unsigned __int128>(a) * b % q);
}

// Representative in (-q/2, q/2].
inline std::int64_t centered(Residue x, std::uint64_t q) {
    return x > q / 2 ? static_cast<std::int64_t>(x) - static_cast<std::int64_t>(q)
                     : static_cast<std::int64_t>(x);
}

Residue pow_mod(Residue base, std::uint64_t exp, std::uint64_t q);

// Throws LinearAlgebraError when gcd(a, q) != 1.
Residue inv_mod(Residue a, std::uint64_t q);

bool is_prime(std::uint64_t x);

// ⌈log2 x⌉ for x >= 1.
int ceil_log2(std::uint64_t x);

// ⌊log2 x⌋ + 1 for x >= 1; the decomposition length δ_x.
int bit_length(std::uint64_t x);

}  // namespace tpbs
