#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <string_view>

#include "tpbs/core/params.hpp"
#include "tpbs/core/types.hpp"

namespace tpbs {

// Deterministic randomness source. One instance per thread; fork() derives
// independent children so parallel work stays reproducible.
class Rng {
public:
    explicit Rng(const Seed& seed);
    explicit Rng(std::uint64_t seed);

    std::uint64_t next_u64() { return engine_(); }
    // Uniform in [0, bound); bound ≥ 1.
    std::uint64_t uniform(std::uint64_t bound);
    // Uniform in [lo, hi].
    std::int64_t uniform_int(std::int64_t lo, std::int64_t hi);
    // Uniform in [0, 1).
    double uniform_real();
    bool bit() { return (engine_() >> 63) != 0; }
    int trit() { return static_cast<int>(uniform(3)) - 1; }
    void fill(std::uint8_t* out, std::size_t len);
    Bytes bytes(std::size_t len);
    Seed seed_bytes();
    Rng fork();

    // Adapter so <random> distributions work (e.g. std::shuffle).
    using result_type = std::uint64_t;
    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return ~result_type{0}; }
    result_type operator()() { return engine_(); }

private:
    std::mt19937_64 engine_;
};

Seed parse_seed_hex(std::string_view hex);
std::string seed_to_hex(const Seed& seed);
Seed system_seed();
Seed seed_from_u64(std::uint64_t v);

}  // namespace tpbs
