#include "tpbs/scheme/codec.hpp"

#include "tpbs/core/errors.hpp"

namespace tpbs {

TpbsLayout TpbsLayout::from(const Params& p) {
    TpbsLayout L;
    L.n = static_cast<std::size_t>(p.n);
    L.m = static_cast<std::size_t>(p.m);
    L.l1 = static_cast<std::size_t>(p.l1);
    L.l2 = static_cast<std::size_t>(p.l2);
    L.d = static_cast<std::size_t>(p.d);
    L.ell = L.l1 + L.l2;
    L.delta_beta = static_cast<std::size_t>(p.delta_beta());
    L.delta_noise = static_cast<std::size_t>(p.delta_noise());
    L.L11 = 3 * L.m * L.delta_beta;
    L.L12 = L.L11;
    L.L13 = 6 * L.ell * L.m * L.delta_beta;
    L.L14 = 3 * (L.n + L.m + L.l1) * L.delta_noise;
    L.L15 = 2 * L.l1;
    L.L1 = L.L11 + L.L12 + L.L13 + L.L14 + L.L15;
    L.L21 = 2 * L.l2;
    L.L22 = 2 * L.d;
    L.L2 = L.L21 + L.L22;
    L.o11 = 0;
    L.o12 = L.L11;
    L.o13 = L.o12 + L.L12;
    L.o14 = L.o13 + L.L13;
    L.o15 = L.o14 + L.L14;
    L.o21 = L.L1;
    L.o22 = L.L1 + L.L21;
    return L;
}

namespace {

std::vector<std::uint8_t> as_bits(const std::vector<std::int8_t>& v) { return {v.begin(), v.end()}; }

// Reads count enc₃ triples at `off`; false if any triple is malformed.
bool read_enc3(const TritVector& w, std::size_t off, std::size_t count, std::vector<std::int8_t>* out) {
    if (out) out->resize(count);
    for (std::size_t i = 0; i < count; ++i) {
        const std::size_t base = off + 3 * i;
        const int z = w[base + 1];
        if (w[base] != mod3(z + 1) || w[base + 2] != mod3(z - 1)) return false;
        if (out) (*out)[i] = static_cast<std::int8_t>(z);
    }
    return true;
}

bool read_enc2(const TritVector& w, std::size_t off, std::size_t count, std::vector<std::uint8_t>* out) {
    if (out) out->resize(count);
    for (std::size_t i = 0; i < count; ++i) {
        const int lo = w[off + 2 * i], hi = w[off + 2 * i + 1];
        if (lo < 0 || hi < 0 || lo + hi != 1) return false;
        if (out) (*out)[i] = static_cast<std::uint8_t>(hi);
    }
    return true;
}

bool mix_matches(const TritVector& w, std::size_t off, const std::vector<std::uint8_t>& t,
                 const std::vector<std::int8_t>& z) {
    for (std::size_t a = 0; a < t.size(); ++a)
        for (std::size_t c = 0; c < z.size(); ++c) {
            const auto blk = ext(t[a], z[c]);
            const std::size_t base = off + 6 * (a * z.size() + c);
            for (std::size_t k = 0; k < 6; ++k)
                if (w[base + k] != blk[k]) return false;
        }
    return true;
}

void put(std::vector<std::int8_t>& out, std::size_t off, const std::vector<std::int8_t>& v) {
    std::copy(v.begin(), v.end(), out.begin() + static_cast<std::ptrdiff_t>(off));
}

void put_bits(std::vector<std::int8_t>& out, std::size_t off, const BitVector& v) {
    std::copy(v.bits().begin(), v.bits().end(), out.begin() + static_cast<std::ptrdiff_t>(off));
}

}  // namespace

std::vector<SeedPart> TpbsCodec::eta_shape() const {
    return {{lay_.v_hat_length(), true}, {lay_.v_hat_length(), true}, {lay_.noise_hat_length(), true},
            {lay_.l1, false},           {lay_.l2, false},            {lay_.d, false}};
}

bool TpbsCodec::valid_check(const TritVector& w) const {
    if (w.size() != length()) return false;
    std::vector<std::int8_t> v2;
    std::vector<std::uint8_t> id, p;
    if (!read_enc3(w, lay_.o11, lay_.v_hat_length(), nullptr)) return false;
    if (!read_enc3(w, lay_.o12, lay_.v_hat_length(), &v2)) return false;
    if (!read_enc3(w, lay_.o14, lay_.noise_hat_length(), nullptr)) return false;
    if (!read_enc2(w, lay_.o15, lay_.l1, &id)) return false;
    if (!read_enc2(w, lay_.o21, lay_.l2, &p)) return false;
    if (!read_enc2(w, lay_.o22, lay_.d, nullptr)) return false;
    id.insert(id.end(), p.begin(), p.end());
    return mix_matches(w, lay_.o13, id, v2);
}

IndexMap TpbsCodec::gamma_map(const PermSeed& eta) const {
    const auto& P = eta.parts;
    if (P.size() != 6) throw DimensionError("TPBS permutation seed needs six parts");
    std::vector<std::uint8_t> b_idp = as_bits(P[3]);
    const std::vector<std::uint8_t> b_p = as_bits(P[4]);
    b_idp.insert(b_idp.end(), b_p.begin(), b_p.end());
    IndexMap map;
    map.reserve(length());
    append_varphi(P[0], lay_.o11, map);
    append_varphi(P[1], lay_.o12, map);
    append_Psi(b_idp, P[1], lay_.o13, map);
    append_varphi(P[2], lay_.o14, map);
    append_phi(as_bits(P[3]), lay_.o15, map);
    append_phi(b_p, lay_.o21, map);
    append_phi(as_bits(P[5]), lay_.o22, map);
    return map;
}

TritVector TpbsCodec::encode(const TpbsWitnessParts& x) const {
    if (x.v1_hat.size() != lay_.v_hat_length() || x.v2_hat.size() != lay_.v_hat_length() ||
        x.noise_hat.size() != lay_.noise_hat_length() || x.id.size() != lay_.l1 || x.p.size() != lay_.l2 ||
        x.pcw.size() != lay_.d)
        throw DimensionError("TPBS witness parts have the wrong lengths");
    std::vector<std::int8_t> out(length(), 0);
    put(out, lay_.o11, enc3(x.v1_hat).trits());
    put(out, lay_.o12, enc3(x.v2_hat).trits());
    put(out, lay_.o13, ext_mix(x.id.concat(x.p), x.v2_hat).trits());
    put(out, lay_.o14, enc3(x.noise_hat).trits());
    put_bits(out, lay_.o15, enc2(x.id));
    put_bits(out, lay_.o21, enc2(x.p));
    put_bits(out, lay_.o22, enc2(x.pcw));
    return TritVector(std::move(out));
}

TritVector TpbsCodec::sample_valid(Rng& rng) const {
    auto trits = [&](std::size_t len) {
        TritVector t(len);
        for (std::size_t i = 0; i < len; ++i) t.set(i, rng.trit());
        return t;
    };
    auto bits = [&](std::size_t len) {
        BitVector b(len);
        for (std::size_t i = 0; i < len; ++i) b.set(i, rng.bit());
        return b;
    };
    TpbsWitnessParts x;
    x.v1_hat = trits(lay_.v_hat_length());
    x.v2_hat = trits(lay_.v_hat_length());
    x.noise_hat = trits(lay_.noise_hat_length());
    x.id = bits(lay_.l1);
    x.p = bits(lay_.l2);
    x.pcw = bits(lay_.d);
    return encode(x);
}

TpbsWitnessParts TpbsCodec::decode(const TritVector& w) const {
    if (w.size() != length()) throw DimensionError("TPBS witness has the wrong length");
    std::vector<std::int8_t> v1, v2, noise;
    std::vector<std::uint8_t> id, p, pcw;
    if (!read_enc3(w, lay_.o11, lay_.v_hat_length(), &v1)) throw RangeError("block 1 is not an enc3 encoding");
    if (!read_enc3(w, lay_.o12, lay_.v_hat_length(), &v2)) throw RangeError("block 2 is not an enc3 encoding");
    if (!read_enc3(w, lay_.o14, lay_.noise_hat_length(), &noise))
        throw RangeError("block 4 is not an enc3 encoding");
    if (!read_enc2(w, lay_.o15, lay_.l1, &id)) throw RangeError("block 5 is not an enc2 encoding");
    if (!read_enc2(w, lay_.o21, lay_.l2, &p)) throw RangeError("block 6 is not an enc2 encoding");
    if (!read_enc2(w, lay_.o22, lay_.d, &pcw)) throw RangeError("block 7 is not an enc2 encoding");
    std::vector<std::uint8_t> idp = id;
    idp.insert(idp.end(), p.begin(), p.end());
    if (!mix_matches(w, lay_.o13, idp, v2)) throw RangeError("block 3 is inconsistent with blocks 2, 5 and 6");
    return {TritVector(std::move(v1)), TritVector(std::move(v2)), TritVector(std::move(noise)),
            BitVector(std::move(id)),  BitVector(std::move(p)),   BitVector(std::move(pcw))};
}

}  // namespace tpbs
