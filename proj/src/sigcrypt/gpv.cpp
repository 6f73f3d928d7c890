#include "tpbs/sigcrypt/gpv.hpp"

#include <cmath>

#include "tpbs/core/errors.hpp"
#include "tpbs/gauss/sampler.hpp"
#include "tpbs/sigcrypt/xof.hpp"

namespace tpbs {

ZqMatrix h1(ByteSpan ovk, std::size_t n, std::size_t l1, std::uint64_t q) {
    XofReader xof("TPBS-H1", ovk);
    std::vector<Residue> e(n * l1);
    for (auto& x : e) x = xof.uniform_mod(q);
    return ZqMatrix(n, l1, q, std::move(e));
}

IbeCiphertext ibe_encrypt_with(const ZqMatrix& B, const ZqMatrix& G, const BitVector& id, const IbeRandomness& r) {
    const std::uint64_t q = B.modulus();
    const std::size_t n = B.rows(), m = B.cols(), l1 = G.cols();
    if (G.rows() != n || id.size() != l1 || r.s.size() != n || r.e1.size() != m || r.e2.size() != l1)
        throw DimensionError("ibe_encrypt: dimension mismatch");
    const ZqVector s = ZqVector::from_signed(r.s, q);
    ZqVector c1 = vec_add(mat_vec_mul(B.transpose(), s), ZqVector::from_signed(r.e1, q));
    ZqVector c2 = vec_add(mat_vec_mul(G.transpose(), s), ZqVector::from_signed(r.e2, q));
    const Residue half = q / 2;
    for (std::size_t i = 0; i < l1; ++i)
        if (id[i]) c2.set(i, static_cast<std::int64_t>(add_mod(c2[i], half, q)));
    return {std::move(c1), std::move(c2)};
}

IbeRandomness ibe_sample_randomness(std::size_t n, std::size_t m, std::size_t l1, std::int64_t noise_bound, Rng& rng) {
    IbeRandomness r;
    r.s = sample_chi_vec(n, noise_bound, rng);
    r.e1 = sample_chi_vec(m, noise_bound, rng);
    r.e2 = sample_chi_vec(l1, noise_bound, rng);
    return r;
}

IbeCiphertext ibe_encrypt(const ZqMatrix& B, const ZqMatrix& G, const BitVector& id, std::int64_t noise_bound,
                          Rng& rng, IbeRandomness* retained) {
    IbeRandomness r = ibe_sample_randomness(B.rows(), B.cols(), G.cols(), noise_bound, rng);
    IbeCiphertext ct = ibe_encrypt_with(B, G, id, r);
    if (retained) *retained = std::move(r);
    return ct;
}

IntMatrix ibe_extract(const TrapdoorPair& mdk, const ZqMatrix& G, double s1, Rng& rng) {
    const ZqMatrix& B = mdk.A;
    if (G.rows() != B.rows() || G.modulus() != B.modulus()) throw DimensionError("ibe_extract: G shape mismatch");
    const std::size_t m = B.cols();
    const auto bound = static_cast<std::int64_t>(std::ceil(s1 * std::log2(static_cast<double>(m))));
    IntMatrix F(m, G.cols());
    for (std::size_t i = 0; i < G.cols(); ++i) {
        const ZqVector g = G.column(i);
        IntVector f;
        int attempt = 0;
        do {
            if (attempt++ == kExtractAttempts) throw SamplerError("ibe_extract: no sample within the norm bound");
            f = sample_d(mdk, g, s1, rng);
        } while (inf_norm(f) > bound);
        for (std::size_t r = 0; r < m; ++r) F.at(r, i) = f[r];
    }
    return F;
}

IntVector ibe_decryption_values(const IntMatrix& F, const IbeCiphertext& ct) {
    const std::uint64_t q = ct.c1.modulus();
    if (F.rows() != ct.c1.size() || F.cols() != ct.c2.size()) throw DimensionError("ibe_decrypt: dimension mismatch");
    const IntVector c1 = ct.c1.centered_entries();
    IntVector out(F.cols());
    for (std::size_t i = 0; i < F.cols(); ++i) {
        __int128 acc = 0;
        for (std::size_t r = 0; r < F.rows(); ++r) acc += static_cast<__int128>(F.at(r, i)) * c1[r];
        const auto reduced = static_cast<std::int64_t>(acc % static_cast<__int128>(q));
        out[i] = centered(sub_mod(ct.c2[i], reduce_signed(reduced, q), q), q);
    }
    return out;
}

bool round_to_bit(Residue v, std::uint64_t q) {
    const Residue half = q / 2;
    const Residue d0 = std::min(v, q - v);
    const Residue d1 = v > half ? v - half : half - v;
    return d1 <= d0;
}

BitVector ibe_decrypt(const IntMatrix& F, const IbeCiphertext& ct) {
    const std::uint64_t q = ct.c1.modulus();
    const IntVector vals = ibe_decryption_values(F, ct);
    BitVector out(vals.size());
    for (std::size_t i = 0; i < vals.size(); ++i) out.set(i, round_to_bit(reduce_signed(vals[i], q), q));
    return out;
}

namespace {
constexpr Magic kCipher{'I', 'B', 'E', 'C'};
}

void write(ByteWriter& w, const IbeCiphertext& ct) {
    w.header(kCipher);
    write(w, ct.c1);
    write(w, ct.c2);
}

IbeCiphertext read_ibe_ciphertext(ByteReader& r) {
    r.header(kCipher);
    IbeCiphertext ct;
    ct.c1 = read_zq_vector(r);
    ct.c2 = read_zq_vector(r);
    if (ct.c1.modulus() != ct.c2.modulus()) throw DecodeError("ciphertext halves use different moduli");
    return ct;
}

}  // namespace tpbs
