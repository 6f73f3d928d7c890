#include "tpbs/stern/simple_codec.hpp"

#include "tpbs/core/errors.hpp"

namespace tpbs {

bool SimpleCodec::valid_check(const TritVector& w) const {
    if (w.size() != length()) return false;
    for (std::size_t i = 0; i < k_; ++i) {
        const int z = w[3 * i + 1];
        for (int j = -1; j <= 1; ++j)
            if (w[3 * i + static_cast<std::size_t>(j + 1)] != mod3(z - j)) return false;
    }
    for (std::size_t i = 0; i < j_; ++i) {
        const int lo = w[l1() + 2 * i], hi = w[l1() + 2 * i + 1];
        if (lo < 0 || hi < 0 || lo + hi != 1) return false;
    }
    return true;
}

IndexMap SimpleCodec::gamma_map(const PermSeed& eta) const {
    IndexMap map;
    map.reserve(length());
    append_varphi(eta.parts.at(0), 0, map);
    const auto& c = eta.parts.at(1);
    const std::vector<std::uint8_t> bits(c.begin(), c.end());
    append_phi(bits, l1(), map);
    return map;
}

TritVector SimpleCodec::encode(const TritVector& z, const BitVector& b) const {
    if (z.size() != k_ || b.size() != j_) throw DimensionError("SimpleCodec::encode: wrong lengths");
    std::vector<std::int8_t> out = enc3(z).trits();
    const BitVector tail = enc2(b);
    for (std::uint8_t x : tail.bits()) out.push_back(static_cast<std::int8_t>(x));
    return TritVector(std::move(out));
}

TritVector SimpleCodec::sample_valid(Rng& rng) const {
    TritVector z(k_);
    BitVector b(j_);
    for (std::size_t i = 0; i < k_; ++i) z.set(i, rng.trit());
    for (std::size_t i = 0; i < j_; ++i) b.set(i, rng.bit());
    return encode(z, b);
}

std::size_t SimpleCodec::rank(const TritVector& w) const {
    if (!valid_check(w)) throw RangeError("SimpleCodec::rank: not in VALID");
    std::size_t r = 0;
    for (std::size_t i = 0; i < k_; ++i) r = 3 * r + static_cast<std::size_t>(w[3 * i + 1] + 1);
    for (std::size_t i = 0; i < j_; ++i) r = 2 * r + static_cast<std::size_t>(w[l1() + 2 * i + 1]);
    return r;
}

}  // namespace tpbs
