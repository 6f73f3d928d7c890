#include "tpbs/gauss/sampler.hpp"

#include <cmath>
#include <numbers>

#include "tpbs/core/errors.hpp"

namespace tpbs {

GaussParams GaussParams::with_log_tail(double s, double c, std::int64_t n) {
    GaussParams gp{s, c, 1};
    const double t = std::ceil(s * std::log2(static_cast<double>(std::max<std::int64_t>(n, 2))));
    gp.tail = std::max<std::int64_t>(1, static_cast<std::int64_t>(t));
    return gp;
}

std::int64_t sample_z(const GaussParams& gp, Rng& rng) {
    if (!(gp.s > 0.0)) throw RangeError("Gaussian width must be positive");
    if (gp.tail < 0) throw RangeError("tail cut must be non-negative");
    if (gp.tail == 0) return std::llround(gp.c);
    const auto lo = static_cast<std::int64_t>(std::ceil(gp.c - static_cast<double>(gp.tail)));
    const auto hi = static_cast<std::int64_t>(std::floor(gp.c + static_cast<double>(gp.tail)));
    const double scale = std::numbers::pi / (gp.s * gp.s);
    for (int i = 0; i < kSampleRetryCap; ++i) {
        const std::int64_t x = rng.uniform_int(lo, hi);
        const double dx = static_cast<double>(x) - gp.c;
        if (rng.uniform_real() < std::exp(-scale * dx * dx)) return x;
    }
    throw SamplerError("sample_z exceeded its retry cap");
}

std::int64_t sample_chi(std::int64_t B, Rng& rng) {
    if (B < 1) throw RangeError("noise bound must be at least 1");
    return sample_z(GaussParams{static_cast<double>(B), 0.0, B}, rng);
}

IntVector sample_chi_vec(std::size_t len, std::int64_t B, Rng& rng) {
    return sample_vec(len, [B](Rng& r) { return sample_chi(B, r); }, rng);
}

}  // namespace tpbs
