#include "tpbs/core/modular.hpp"

#include "tpbs/core/errors.hpp"

namespace tpbs {

Residue pow_mod(Residue base, std::uint64_t exp, std::uint64_t q) {
    Residue result = 1 % q;
    base %= q;
    while (exp > 0) {
        if (exp & 1) result = mul_mod(result, base, q);
        base = mul_mod(base, base, q);
        exp >>= 1;
    }
    return result;
}

Residue inv_mod(Residue a, std::uint64_t q) {
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = static_cast<std::int64_t>(q), new_r = static_cast<std::int64_t>(a % q);
    while (new_r != 0) {
        std::int64_t quot = r / new_r;
        std::int64_t tmp = t - quot * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - quot * new_r;
        r = new_r;
        new_r = tmp;
    }
    if (r != 1) throw LinearAlgebraError("element not invertible modulo q");
    return reduce_signed(t, q);
}

bool is_prime(std::uint64_t x) {
    if (x < 2) return false;
    for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (x % p == 0) return x == p;
    }
    std::uint64_t d = x - 1;
    int r = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++r;
    }
    // Deterministic witness set for 64-bit inputs.
    for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        Residue y = pow_mod(a, d, x);
        if (y == 1 || y == x - 1) continue;
        bool composite = true;
        for (int i = 1; i < r; ++i) {
            y = mul_mod(y, y, x);
            if (y == x - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

int ceil_log2(std::uint64_t x) {
    int k = 0;
    while ((std::uint64_t{1} << k) < x) ++k;
    return k;
}

int bit_length(std::uint64_t x) {
    int k = 0;
    while (x > 0) {
        x >>= 1;
        ++k;
    }
    return k;
}

}  // namespace tpbs
