#include "tpbs/sigcrypt/boyen.hpp"

#include "tpbs/core/errors.hpp"

namespace tpbs {

namespace {

ZqMatrix uniform_matrix(std::size_t rows, std::size_t cols, std::uint64_t q, Rng& rng) {
    std::vector<Residue> e(rows * cols);
    for (auto& x : e) x = rng.uniform(q);
    return ZqMatrix(rows, cols, q, std::move(e));
}

constexpr Magic kBoyen{'B', 'Y', 'N', 'P'};

}  // namespace

BoyenKeys boyen_keygen(std::size_t n, std::size_t m, std::uint64_t q, std::size_t ell, Rng& rng) {
    BoyenKeys keys;
    keys.msk = trap_gen(n, m, q, rng);
    keys.mvk.A = keys.msk.A;
    for (std::size_t i = 0; i <= ell; ++i) keys.mvk.Ai.push_back(uniform_matrix(n, m, q, rng));
    std::vector<Residue> u(n);
    for (auto& x : u) x = rng.uniform(q);
    keys.mvk.u = ZqVector(std::move(u), q);
    return keys;
}

ZqMatrix boyen_message_matrix(const BoyenPublic& mvk, const BitVector& msg) {
    if (msg.size() != mvk.message_length())
        throw DimensionError("Boyen message has length " + std::to_string(msg.size()) + ", expected " +
                             std::to_string(mvk.message_length()));
    ZqMatrix sum = mvk.Ai[0];
    for (std::size_t j = 0; j < msg.size(); ++j)
        if (msg[j]) sum = mat_add(sum, mvk.Ai[j + 1]);
    return horiz_concat({&mvk.A, &sum});
}

IntVector boyen_sign(const TrapdoorPair& msk, const BoyenPublic& mvk, const BitVector& msg, double s,
                     std::int64_t beta, Rng& rng) {
    const TrapdoorPair ext = ext_basis(msk, boyen_message_matrix(mvk, msg));
    for (int attempt = 0; attempt < kBoyenSignAttempts; ++attempt) {
        IntVector v = sample_d(ext, mvk.u, s, rng);
        if (inf_norm(v) <= beta) return v;
    }
    throw SamplerError("boyen_sign: no sample within the norm bound");
}

bool boyen_verify(const BoyenPublic& mvk, const BitVector& msg, const IntVector& v, std::int64_t beta) {
    if (msg.size() != mvk.message_length() || v.size() != 2 * mvk.A.cols()) return false;
    if (inf_norm(v) > beta) return false;
    return mat_vec_mul(boyen_message_matrix(mvk, msg), v, mvk.A.modulus()) == mvk.u;
}

void write(ByteWriter& w, const BoyenPublic& mvk) {
    w.header(kBoyen);
    write(w, mvk.A);
    w.u64(mvk.Ai.size());
    for (const auto& M : mvk.Ai) write(w, M);
    write(w, mvk.u);
}

BoyenPublic read_boyen_public(ByteReader& r) {
    r.header(kBoyen);
    BoyenPublic mvk;
    mvk.A = read_zq_matrix(r);
    const std::size_t count = r.count(1);
    for (std::size_t i = 0; i < count; ++i) {
        mvk.Ai.push_back(read_zq_matrix(r));
        const auto& M = mvk.Ai.back();
        if (M.rows() != mvk.A.rows() || M.cols() != mvk.A.cols() || M.modulus() != mvk.A.modulus())
            throw DecodeError("Boyen matrix A_" + std::to_string(i) + " has the wrong shape");
    }
    mvk.u = read_zq_vector(r);
    if (mvk.u.size() != mvk.A.rows() || mvk.u.modulus() != mvk.A.modulus())
        throw DecodeError("Boyen vector u has the wrong shape");
    return mvk;
}

}  // namespace tpbs
