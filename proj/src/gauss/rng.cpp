#include "tpbs/gauss/rng.hpp"

#include <algorithm>
#include <array>

#include "tpbs/core/errors.hpp"
#include "tpbs/core/serialize.hpp"
#include "tpbs/sigcrypt/xof.hpp"

namespace tpbs {

namespace {

std::mt19937_64 engine_from(ByteSpan seed) {
    Bytes input{'T', 'P', 'B', 'S', '-', 'S', 'E', 'E', 'D'};
    input.insert(input.end(), seed.begin(), seed.end());
    const Bytes expanded = shake256(input, 64);
    std::array<std::uint32_t, 16> words{};
    for (std::size_t i = 0; i < words.size(); ++i)
        words[i] = static_cast<std::uint32_t>(expanded[4 * i]) | static_cast<std::uint32_t>(expanded[4 * i + 1]) << 8 |
                   static_cast<std::uint32_t>(expanded[4 * i + 2]) << 16 |
                   static_cast<std::uint32_t>(expanded[4 * i + 3]) << 24;
    std::seed_seq seq(words.begin(), words.end());
    return std::mt19937_64(seq);
}

}  // namespace

Rng::Rng(const Seed& seed) : engine_(engine_from(seed)) {}

Rng::Rng(std::uint64_t seed) : engine_(engine_from(seed_from_u64(seed))) {}

std::uint64_t Rng::uniform(std::uint64_t bound) {
    if (bound == 0) throw RangeError("uniform bound must be positive");
    // Rejection keeps the result exactly uniform.
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound + 1) % bound;
    std::uint64_t x;
    do {
        x = engine_();
    } while (x > limit);
    return x % bound;
}

std::int64_t Rng::uniform_int(std::int64_t lo, std::int64_t hi) {
    if (hi < lo) throw RangeError("empty integer range");
    return lo + static_cast<std::int64_t>(uniform(static_cast<std::uint64_t>(hi - lo) + 1));
}

double Rng::uniform_real() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

void Rng::fill(std::uint8_t* out, std::size_t len) {
    std::size_t i = 0;
    while (i < len) {
        std::uint64_t x = engine_();
        for (int b = 0; b < 8 && i < len; ++b, ++i) out[i] = static_cast<std::uint8_t>(x >> (8 * b));
    }
}

Bytes Rng::bytes(std::size_t len) {
    Bytes out(len);
    fill(out.data(), len);
    return out;
}

Seed Rng::seed_bytes() {
    Seed s;
    fill(s.data(), s.size());
    return s;
}

Rng Rng::fork() { return Rng(seed_bytes()); }

Seed parse_seed_hex(std::string_view hex) {
    if (hex.size() != 64) throw RangeError("seed must be 64 hex digits (32 bytes)");
    const Bytes b = hex_to_bytes(hex);
    Seed s;
    std::copy(b.begin(), b.end(), s.begin());
    return s;
}

std::string seed_to_hex(const Seed& seed) { return bytes_to_hex(seed); }

Seed system_seed() {
    std::random_device rd;
    Seed s;
    for (std::size_t i = 0; i < s.size(); i += 4) {
        const std::uint32_t v = rd();
        for (std::size_t j = 0; j < 4; ++j) s[i + j] = static_cast<std::uint8_t>(v >> (8 * j));
    }
    return s;
}

Seed seed_from_u64(std::uint64_t v) {
    Seed s{};
    for (int i = 0; i < 8; ++i) s[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(v >> (8 * i));
    return s;
}

}  // namespace tpbs
