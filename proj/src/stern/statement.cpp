#include "tpbs/stern/statement.hpp"

#include <algorithm>

#include "tpbs/core/errors.hpp"
#include "tpbs/core/linalg.hpp"

namespace tpbs {

PermSeed ValidCodec::sample_eta(Rng& rng) const {
    PermSeed eta;
    for (const SeedPart& part : eta_shape()) {
        std::vector<std::int8_t> v(part.length);
        for (auto& x : v) x = static_cast<std::int8_t>(part.ternary ? rng.trit() : (rng.bit() ? 1 : 0));
        eta.parts.push_back(std::move(v));
    }
    return eta;
}

bool ValidCodec::eta_well_formed(const PermSeed& eta) const {
    const auto shape = eta_shape();
    if (eta.parts.size() != shape.size()) return false;
    for (std::size_t i = 0; i < shape.size(); ++i) {
        if (eta.parts[i].size() != shape[i].length) return false;
        const int lo = shape[i].ternary ? -1 : 0;
        for (std::int8_t x : eta.parts[i])
            if (x < lo || x > 1) return false;
    }
    return true;
}

IntVector ValidCodec::gamma(const PermSeed& eta, const IntVector& v) const {
    if (v.size() != length()) throw DimensionError("gamma: vector length differs from L");
    return gather(gamma_map(eta), v);
}

TritVector ValidCodec::gamma(const PermSeed& eta, const TritVector& v) const {
    if (v.size() != length()) throw DimensionError("gamma: vector length differs from L");
    return TritVector(gather(gamma_map(eta), v.trits()));
}

TritVector ValidCodec::gamma_inverse(const PermSeed& eta, const TritVector& v) const {
    if (v.size() != length()) throw DimensionError("gamma: vector length differs from L");
    return TritVector(scatter(gamma_map(eta), v.trits()));
}

void AbstractStatement::validate() const {
    if (!codec) throw DimensionError("statement has no codec");
    if (q1() < 2 || q2() < 2) throw RangeError("statement moduli must be at least 2");
    if (u1.size() != M1.rows() || u1.modulus() != q1()) throw DimensionError("u1 does not match M1");
    if (u2.size() != M2.rows() || u2.modulus() != q2()) throw DimensionError("u2 does not match M2");
    if (codec->l1() != l1() || codec->l2() != l2()) throw DimensionError("codec lengths do not match M1/M2");
}

Bytes AbstractStatement::binding() const {
    if (!zeta.empty()) return zeta;
    ByteWriter w;
    w.header({'S', 'T', 'M', 'T'});
    write(w, M1);
    write(w, u1);
    w.u64(q1());
    write(w, M2);
    write(w, u2);
    w.u64(q2());
    return w.take();
}

bool AbstractStatement::shape_matches(const ResidueBlocks& x) const {
    if (x.q1 != q1() || x.q2 != q2() || x.l1 != l1() || x.entries.size() != length()) return false;
    for (std::size_t i = 0; i < x.entries.size(); ++i)
        if (x.entries[i] >= x.modulus_at(i)) return false;
    return true;
}

std::pair<ZqVector, ZqVector> AbstractStatement::images(const ResidueBlocks& x) const {
    if (!shape_matches(x)) throw DimensionError("vector does not match statement shape");
    const auto mid = x.entries.begin() + static_cast<std::ptrdiff_t>(x.l1);
    return {mat_vec_mul(M1, std::vector<Residue>(x.entries.begin(), mid)),
            mat_vec_mul(M2, std::vector<Residue>(mid, x.entries.end()))};
}

ResidueBlocks lift(const AbstractStatement& stmt, const TritVector& w) {
    if (w.size() != stmt.length()) throw DimensionError("witness length differs from L");
    ResidueBlocks out{stmt.q1(), stmt.q2(), stmt.l1(), std::vector<Residue>(w.size())};
    for (std::size_t i = 0; i < w.size(); ++i) out.entries[i] = reduce_signed(w[i], out.modulus_at(i));
    return out;
}

bool witness_satisfies(const AbstractStatement& stmt, const TritVector& w) {
    if (w.size() != stmt.length() || !stmt.codec->valid_check(w)) return false;
    const auto [y1, y2] = stmt.images(lift(stmt, w));
    return y1 == stmt.u1 && y2 == stmt.u2;
}

ResidueBlocks uniform_blocks(const AbstractStatement& stmt, Rng& rng) {
    ResidueBlocks out{stmt.q1(), stmt.q2(), stmt.l1(), std::vector<Residue>(stmt.length())};
    for (std::size_t i = 0; i < out.entries.size(); ++i) out.entries[i] = rng.uniform(out.modulus_at(i));
    return out;
}

namespace {

void check_same_shape(const ResidueBlocks& a, const ResidueBlocks& b) {
    if (a.q1 != b.q1 || a.q2 != b.q2 || a.l1 != b.l1 || a.entries.size() != b.entries.size())
        throw DimensionError("block vectors differ in shape");
}

}  // namespace

ResidueBlocks block_add(const ResidueBlocks& a, const ResidueBlocks& b) {
    check_same_shape(a, b);
    ResidueBlocks out = a;
    for (std::size_t i = 0; i < out.entries.size(); ++i)
        out.entries[i] = add_mod(a.entries[i], b.entries[i], a.modulus_at(i));
    return out;
}

ResidueBlocks block_sub(const ResidueBlocks& a, const ResidueBlocks& b) {
    check_same_shape(a, b);
    ResidueBlocks out = a;
    for (std::size_t i = 0; i < out.entries.size(); ++i)
        out.entries[i] = sub_mod(a.entries[i], b.entries[i], a.modulus_at(i));
    return out;
}

ResidueBlocks gather_blocks(const IndexMap& map, const ResidueBlocks& x) {
    if (map.size() != x.entries.size()) throw DimensionError("permutation length differs from vector");
    ResidueBlocks out = x;
    out.entries = gather(map, x.entries);
    return out;
}

void write(ByteWriter& w, const PermSeed& eta) {
    w.u64(eta.parts.size());
    for (const auto& part : eta.parts) {
        w.u64(part.size());
        // Two bits per entry, value + 1.
        Bytes packed((part.size() + 3) / 4, 0);
        for (std::size_t i = 0; i < part.size(); ++i)
            packed[i / 4] |= static_cast<std::uint8_t>((part[i] + 1) << (2 * (i % 4)));
        w.bytes(packed);
    }
}

PermSeed read_perm_seed(ByteReader& r) {
    PermSeed eta;
    const std::size_t count = r.count(8);
    for (std::size_t p = 0; p < count; ++p) {
        const std::size_t len = r.u64();
        if (len / 4 > r.remaining()) throw DecodeError("permutation seed longer than input");
        const ByteSpan packed = r.bytes((len + 3) / 4);
        std::vector<std::int8_t> part(len);
        for (std::size_t i = 0; i < len; ++i) {
            const int code = (packed[i / 4] >> (2 * (i % 4))) & 3;
            if (code == 3) throw DecodeError("invalid trit code in permutation seed");
            part[i] = static_cast<std::int8_t>(code - 1);
        }
        for (std::size_t i = len; i < 4 * packed.size(); ++i)
            if ((packed[i / 4] >> (2 * (i % 4))) & 3) throw DecodeError("nonzero padding in permutation seed");
        eta.parts.push_back(std::move(part));
    }
    return eta;
}

void write(ByteWriter& w, const ResidueBlocks& x) {
    w.u64(x.q1);
    w.u64(x.q2);
    w.u64(x.l1);
    w.u64(x.entries.size());
    const int w1 = residue_width(x.q1), w2 = residue_width(x.q2);
    const std::span<const Residue> all(x.entries);
    const std::size_t split = std::min(x.l1, all.size());
    w.uints(all.first(split), w1);
    w.uints(all.subspan(split), w2);
}

ResidueBlocks read_residue_blocks(ByteReader& r) {
    ResidueBlocks x;
    x.q1 = r.u64();
    x.q2 = r.u64();
    if (x.q1 < 2 || x.q2 < 2) throw DecodeError("residue moduli must be at least 2");
    x.l1 = r.u64();
    const std::size_t len = r.count(1);
    if (x.l1 > len) throw DecodeError("block split beyond vector length");
    const int w1 = residue_width(x.q1), w2 = residue_width(x.q2);
    x.entries.resize(len);
    for (std::size_t i = 0; i < len; ++i) {
        x.entries[i] = r.uint(i < x.l1 ? w1 : w2);
        if (x.entries[i] >= x.modulus_at(i)) throw DecodeError("residue not reduced");
    }
    return x;
}

}  // namespace tpbs
