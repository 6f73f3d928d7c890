#pragma once

#include <cstdint>

#include "tpbs/core/types.hpp"
#include "tpbs/gauss/rng.hpp"

namespace tpbs {

// Discrete Gaussian D_{Z,s,c} ∝ exp(−π(x−c)²/s²), cut to |x − c| ≤ tail.
struct GaussParams {
    double s = 1.0;
    double c = 0.0;
    std::int64_t tail = 1;

    // Tail cut ⌈s·log2 n⌉, at least 1.
    static GaussParams with_log_tail(double s, double c, std::int64_t n);
};

constexpr int kSampleRetryCap = 1'000'000;

// Throws SamplerError if the rejection loop exceeds kSampleRetryCap.
std::int64_t sample_z(const GaussParams& gp, Rng& rng);
// χ: width-B Gaussian truncated to [−B, B].
std::int64_t sample_chi(std::int64_t B, Rng& rng);

template <class Draw>
IntVector sample_vec(std::size_t len, Draw&& draw, Rng& rng) {
    IntVector out(len);
    for (auto& x : out) x = draw(rng);
    return out;
}

IntVector sample_chi_vec(std::size_t len, std::int64_t B, Rng& rng);

}  // namespace tpbs
