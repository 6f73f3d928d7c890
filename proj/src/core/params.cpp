#include "tpbs/core/params.hpp"

#include <cmath>
#include <sstream>

#include "tpbs/core/errors.hpp"
#include "tpbs/core/modular.hpp"

namespace tpbs {

int Params::k() const { return ceil_log2(q); }

int Params::delta_beta() const {
    if (beta < 1) throw ParamError("beta not set; run setup first");
    return bit_length(static_cast<std::uint64_t>(beta));
}

int Params::delta_noise() const { return bit_length(static_cast<std::uint64_t>(noise_bound)); }

void Params::validate() const {
    if (n < 1 || m < 1 || l1 < 1 || l2 < 1 || d < 1) throw ParamError("dimensions must be positive");
    if (!is_prime(q)) throw ParamError("q = " + std::to_string(q) + " is not prime");
    if (q >= (std::uint64_t{1} << 32)) throw ParamError("q must fit in 32 bits");
    if (m < 2 * n * k())
        throw ParamError("m = " + std::to_string(m) + " is below 2n⌈log2 q⌉ = " + std::to_string(2 * n * k()));
    if (l2 + d <= n) throw ParamError("l2 + d must exceed n");
    if (kappa < 1) throw ParamError("kappa must be at least 1");
    if (noise_bound < 2) throw ParamError("noise bound B must be at least 2");
}

std::int64_t Params::extraction_bound() const {
    return static_cast<std::int64_t>(std::ceil(s1 * std::log2(static_cast<double>(m))));
}

std::int64_t Params::open_noise_bound() const {
    return noise_bound + m * noise_bound * extraction_bound();
}

std::int64_t Params::open_threshold() const { return static_cast<std::int64_t>((q + 4) / 5); }

bool Params::open_inequality_holds() const { return open_noise_bound() <= open_threshold(); }

std::string Params::open_inequality_text() const {
    std::ostringstream os;
    os << "B + m*B*ceil(s1*log2 m) = " << noise_bound << " + " << m << "*" << noise_bound << "*"
       << extraction_bound() << " = " << open_noise_bound()
       << (open_inequality_holds() ? " <= " : " > ") << "ceil(q/5) = " << open_threshold() << " (s1 = " << s1
       << ")";
    return os.str();
}

Params Params::desk() {
    Params p;
    p.name = "desk";
    p.n = 16;
    p.q = 16777213;
    p.m = 2 * 16 * 24;
    p.l1 = 4;
    p.l2 = 4;
    p.d = 16;
    p.kappa = 16;
    p.noise_bound = 2;
    return p;
}

Params Params::toy() {
    Params p;
    p.name = "toy";
    p.n = 4;
    p.q = 257;
    p.m = 72;
    p.l1 = 2;
    p.l2 = 2;
    p.d = 4;
    p.kappa = 4;
    p.noise_bound = 2;
    p.enforce_open_bound = false;
    return p;
}

Params Params::preset(const std::string& name) {
    if (name == "desk") return desk();
    if (name == "toy") return toy();
    throw ParamError("unknown params preset '" + name + "'");
}

double sampler_width_factor(std::size_t dim) { return std::sqrt(2.0 * std::log(2.0 * static_cast<double>(dim))); }

}  // namespace tpbs
