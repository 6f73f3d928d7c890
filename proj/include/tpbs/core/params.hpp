#pragma once

#include <array>
#include <cstdint>
#include <string>

namespace tpbs {

using Seed = std::array<std::uint8_t, 32>;

// Scheme integers. s, s1 and beta are zero until setup measures the trapdoors.
struct Params {
    std::string name = "custom";
    std::int64_t n = 0;
    std::int64_t m = 0;
    std::uint64_t q = 0;
    int l1 = 0;
    int l2 = 0;
    int d = 0;
    int kappa = 1;
    std::int64_t noise_bound = 2;  // B
    double s = 0.0;
    double s1 = 0.0;
    std::int64_t beta = 0;
    // Toy instances may skip the Open-correctness inequality.
    bool enforce_open_bound = true;
    Seed commitment_seed{};

    int ell() const { return l1 + l2; }
    int k() const;  // ⌈log2 q⌉
    int delta_beta() const;
    int delta_noise() const;

    // Structural invariants that do not depend on s, s1, beta.
    void validate() const;
    bool widths_set() const { return s > 0.0 && s1 > 0.0 && beta > 0; }

    // B + m·B·⌈s1·log2 m⌉ and ⌈q/5⌉.
    std::int64_t open_noise_bound() const;
    std::int64_t open_threshold() const;
    bool open_inequality_holds() const;
    std::string open_inequality_text() const;

    // ⌈s1·log2 m⌉, the bound on extracted decryption keys.
    std::int64_t extraction_bound() const;

    static Params desk();
    static Params toy();
    static Params preset(const std::string& name);

    bool operator==(const Params&) const = default;
};

// Width factor of the Klein sampler precondition: √(2·ln(2·dim)).
double sampler_width_factor(std::size_t dim);

}  // namespace tpbs
