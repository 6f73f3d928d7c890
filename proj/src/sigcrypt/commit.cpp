#include "tpbs/sigcrypt/commit.hpp"

#include "tpbs/core/errors.hpp"
#include "tpbs/core/linalg.hpp"
#include "tpbs/sigcrypt/xof.hpp"

namespace tpbs {

namespace {

ZqMatrix expand(const Seed& seed, std::uint8_t which, std::size_t n, std::size_t m, std::uint64_t q) {
    Bytes input{which};
    input.insert(input.end(), seed.begin(), seed.end());
    XofReader xof("TPBS-COM", input);
    std::vector<Residue> e(n * m);
    for (auto& x : e) x = xof.uniform_mod(q);
    return ZqMatrix(n, m, q, std::move(e));
}

}  // namespace

CommitmentKey::CommitmentKey(const Seed& seed, std::size_t n, std::size_t m, std::uint64_t q)
    : n_(n), m_(m), q_(q), C0_(expand(seed, 0, n, m, q)), C1_(expand(seed, 1, n, m, q)) {}

CommitmentKey CommitmentKey::from_params(const Params& p) {
    return CommitmentKey(p.commitment_seed, static_cast<std::size_t>(p.n), static_cast<std::size_t>(p.m), p.q);
}

BitVector CommitmentKey::digest(ByteSpan x) const {
    static constexpr std::uint8_t kTag[] = {'T', 'P', 'B', 'S', '-', 'C', 'O', 'M', 2};
    const Bytes out = shake256_concat({ByteSpan(kTag), x}, (m_ + 7) / 8);
    BitVector bits(m_);
    for (std::size_t i = 0; i < m_; ++i) bits.set(i, (out[i / 8] >> (i % 8)) & 1);
    return bits;
}

ZqVector CommitmentKey::commit(ByteSpan x, const BitVector& rho) const {
    if (rho.size() != m_) throw DimensionError("commitment randomness has the wrong length");
    const BitVector d = digest(x);
    std::vector<Residue> acc(n_, 0);
    for (std::size_t r = 0; r < n_; ++r) {
        unsigned __int128 sum = 0;
        const Residue* c0 = C0_.row(r);
        const Residue* c1 = C1_.row(r);
        for (std::size_t c = 0; c < m_; ++c) sum += (rho[c] ? c0[c] : 0) + (d[c] ? c1[c] : 0);
        acc[r] = static_cast<Residue>(sum % q_);
    }
    return ZqVector(std::move(acc), q_);
}

}  // namespace tpbs
