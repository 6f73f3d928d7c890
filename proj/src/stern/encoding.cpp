#include "tpbs/stern/encoding.hpp"

#include "tpbs/core/errors.hpp"
#include "tpbs/core/linalg.hpp"

namespace tpbs {

namespace {

std::uint32_t idx(std::size_t i) { return static_cast<std::uint32_t>(i); }

// Position of label (i, j) inside an ext block; i ∈ {0,1}, j ∈ {−1,0,1}.
constexpr std::size_t ext_pos(int i, int j) { return static_cast<std::size_t>(2 * (j + 1) + i); }

void check_len(std::size_t got, std::size_t want, const char* what) {
    if (got != want) throw DimensionError(std::string(what) + ": length mismatch");
}

}  // namespace

BitVector idec(std::int64_t a, std::int64_t B) {
    if (B < 1 || a < 0 || a > B) throw RangeError("idec: need 0 <= a <= B");
    const auto w = gadget_weights(B);
    BitVector out(w.size());
    std::int64_t rest = a;
    for (std::size_t j = 0; j < w.size(); ++j) {
        const bool bit = rest >= w[j];
        out.set(j, bit);
        if (bit) rest -= w[j];
    }
    return out;
}

TritVector vdec(const IntVector& a, std::int64_t B) {
    const std::size_t delta = gadget_weights(B).size();
    TritVector out(a.size() * delta);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] < -B || a[i] > B) throw RangeError("vdec: coordinate outside [-B, B]");
        const int sign = a[i] > 0 ? 1 : (a[i] < 0 ? -1 : 0);
        const BitVector bits = idec(a[i] < 0 ? -a[i] : a[i], B);
        for (std::size_t j = 0; j < delta; ++j) out.set(i * delta + j, sign * bits[j]);
    }
    return out;
}

BitVector enc2(const BitVector& z) {
    BitVector out(2 * z.size());
    for (std::size_t i = 0; i < z.size(); ++i) {
        out.set(2 * i, !z[i]);
        out.set(2 * i + 1, z[i]);
    }
    return out;
}

TritVector enc3(const TritVector& z) {
    TritVector out(3 * z.size());
    for (std::size_t i = 0; i < z.size(); ++i)
        for (int j = -1; j <= 1; ++j) out.set(3 * i + static_cast<std::size_t>(j + 1), mod3(z[i] - j));
    return out;
}

std::array<std::int8_t, 6> ext(int t, int z) {
    if (t < 0 || t > 1 || z < -1 || z > 1) throw RangeError("ext: t must be a bit and z a trit");
    std::array<std::int8_t, 6> out{};
    for (int j = -1; j <= 1; ++j) out[ext_pos(t, j)] = mod3(z - j);
    return out;
}

TritVector ext_mix(const BitVector& t, const TritVector& z) {
    TritVector out(6 * t.size() * z.size());
    for (std::size_t a = 0; a < t.size(); ++a)
        for (std::size_t c = 0; c < z.size(); ++c) {
            const auto blk = ext(t[a], z[c]);
            for (std::size_t k = 0; k < 6; ++k) out.set(6 * (a * z.size() + c) + k, blk[k]);
        }
    return out;
}

void append_phi(Bits b, std::size_t offset, IndexMap& out) {
    for (std::size_t i = 0; i < b.size(); ++i)
        for (std::size_t j = 0; j < 2; ++j) out.push_back(idx(offset + 2 * i + (j ^ b[i])));
}

void append_varphi(Trits b, std::size_t offset, IndexMap& out) {
    for (std::size_t i = 0; i < b.size(); ++i)
        for (int j = -1; j <= 1; ++j) out.push_back(idx(offset + 3 * i + static_cast<std::size_t>(mod3(j - b[i]) + 1)));
}

void append_psi(int b, int e, std::size_t offset, IndexMap& out) {
    for (int j = -1; j <= 1; ++j)
        for (int i = 0; i <= 1; ++i) out.push_back(idx(offset + ext_pos(i ^ b, mod3(j - e))));
}

void append_Psi(Bits b, Trits e, std::size_t offset, IndexMap& out) {
    for (std::size_t a = 0; a < b.size(); ++a)
        for (std::size_t c = 0; c < e.size(); ++c) append_psi(b[a], e[c], offset + 6 * (a * e.size() + c), out);
}

IntVector perm_phi(const BitVector& b, const IntVector& v) {
    check_len(v.size(), 2 * b.size(), "perm_phi");
    IndexMap m;
    append_phi(b.bits(), 0, m);
    return gather(m, v);
}

IntVector perm_varphi(const TritVector& b, const IntVector& v) {
    check_len(v.size(), 3 * b.size(), "perm_varphi");
    IndexMap m;
    append_varphi(b.trits(), 0, m);
    return gather(m, v);
}

IntVector perm_psi(int b, int e, const IntVector& v) {
    check_len(v.size(), 6, "perm_psi");
    if (b < 0 || b > 1 || e < -1 || e > 1) throw RangeError("perm_psi: b must be a bit and e a trit");
    IndexMap m;
    append_psi(b, e, 0, m);
    return gather(m, v);
}

IntVector perm_Psi(const BitVector& b, const TritVector& e, const IntVector& v) {
    check_len(v.size(), 6 * b.size() * e.size(), "perm_Psi");
    IndexMap m;
    append_Psi(b.bits(), e.trits(), 0, m);
    return gather(m, v);
}

}  // namespace tpbs
