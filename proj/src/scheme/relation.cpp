#include "tpbs/scheme/relation.hpp"

#include "tpbs/core/linalg.hpp"
#include "tpbs/core/serialize.hpp"
#include "tpbs/scheme/policy.hpp"
#include "tpbs/stern/encoding.hpp"

namespace tpbs {

const char* to_string(RelationLine line) {
    switch (line) {
        case RelationLine::certificate: return "certificate equation [A | A_0 + sum id_j A_j + sum p_j A_{l1+j}] v = u";
        case RelationLine::ciphertext1: return "ciphertext equation c1 = B^T s + e1";
        case RelationLine::ciphertext2: return "ciphertext equation c2 = G^T s + e2 + id*floor(q/2)";
        case RelationLine::policy: return "policy equation G1 p + G2 pcw = msg (mod 2)";
        case RelationLine::norms: return "norm bounds |v| <= beta, |s|, |e1|, |e2| <= B";
        case RelationLine::shape: return "component lengths";
    }
    return "unknown";
}

namespace {

IntVector concat(const IntVector& a, const IntVector& b) {
    IntVector out(a);
    out.insert(out.end(), b.begin(), b.end());
    return out;
}

IntVector slice(const IntVector& v, std::size_t from, std::size_t len) {
    return IntVector(v.begin() + static_cast<std::ptrdiff_t>(from),
                     v.begin() + static_cast<std::ptrdiff_t>(from + len));
}

}  // namespace

std::optional<RelationError> check_secret_tuple(const PublicParams& pp, const ZqMatrix& G, const IbeCiphertext& ct,
                                                const BitVector& msg, const SecretTuple& xi) {
    const Params& P = pp.params;
    const auto n = static_cast<std::size_t>(P.n), m = static_cast<std::size_t>(P.m);
    const auto l1 = static_cast<std::size_t>(P.l1);
    auto fail = [](RelationLine line, const std::string& detail) {
        return RelationError(line, std::string("relation violated: ") + to_string(line) + " (" + detail + ")");
    };
    if (xi.id.size() != l1 || xi.p.size() != static_cast<std::size_t>(P.l2) || xi.v.size() != 2 * m ||
        xi.s.size() != n || xi.e1.size() != m || xi.e2.size() != l1 || xi.pcw.size() != static_cast<std::size_t>(P.d) ||
        msg.size() != n || ct.c1.size() != m || ct.c2.size() != l1)
        return fail(RelationLine::shape, "a component has the wrong length");

    const ZqMatrix Aid = boyen_message_matrix(pp.mvk, xi.id.concat(xi.p));
    if (mat_vec_mul(Aid, xi.v, P.q) != pp.mvk.u) return fail(RelationLine::certificate, "v is not a certificate");
    const IbeCiphertext expect = ibe_encrypt_with(pp.B, G, xi.id, {xi.s, xi.e1, xi.e2});
    if (expect.c1 != ct.c1) return fail(RelationLine::ciphertext1, "c1 mismatch");
    if (expect.c2 != ct.c2) return fail(RelationLine::ciphertext2, "c2 mismatch");
    if (!policy_check(pp.G1, pp.G2, xi.p, xi.pcw, msg)) return fail(RelationLine::policy, "msg not authorized");
    if (inf_norm(xi.v) > P.beta || inf_norm(xi.s) > P.noise_bound || inf_norm(xi.e1) > P.noise_bound ||
        inf_norm(xi.e2) > P.noise_bound)
        return fail(RelationLine::norms, "a short vector is too long");
    return std::nullopt;
}

Bytes public_input_bytes(const PublicParams& pp, const ZqMatrix& G, const IbeCiphertext& ct, const BitVector& msg) {
    ByteWriter w;
    w.header({'Z', 'E', 'T', 'A'});
    write(w, pp.mvk.A);
    for (const auto& Ai : pp.mvk.Ai) write(w, Ai);
    write(w, pp.mvk.u);
    write(w, pp.B);
    write(w, G);
    write(w, ct.c1);
    write(w, ct.c2);
    write(w, pp.G1);
    write(w, pp.G2);
    write(w, msg);
    return w.take();
}

SparseZqMatrix build_fixed_rows(const PublicParams& pp) {
    const TpbsLayout& L = pp.codec()->layout();
    const std::uint64_t q = pp.params.q;
    const auto wb = gadget_weights(pp.params.beta);
    const auto wn = gadget_weights(pp.params.noise_bound);
    SparseZqMatrix::Builder b(L.n + L.m, L.L1, q);
    const std::size_t db = L.delta_beta, dn = L.delta_noise;
    for (std::size_t r = 0; r < L.n; ++r) {
        auto put_block = [&](const ZqMatrix& M, std::size_t off, std::size_t stride, std::size_t pos) {
            for (std::size_t i = 0; i < L.m; ++i)
                for (std::size_t j = 0; j < db; ++j)
                    b.push(r, off + stride * (i * db + j) + pos, mul_mod(M.at(r, i), static_cast<Residue>(wb[j]), q));
        };
        put_block(pp.mvk.A, L.o11, 3, 1);
        put_block(pp.mvk.Ai[0], L.o12, 3, 1);
        for (std::size_t a = 0; a < L.ell; ++a) put_block(pp.mvk.Ai[a + 1], L.o13 + 6 * a * L.m * db, 6, 3);
    }
    for (std::size_t r = 0; r < L.m; ++r) {
        const std::size_t row = L.n + r;
        for (std::size_t i = 0; i < L.n; ++i)
            for (std::size_t j = 0; j < dn; ++j)
                b.push(row, L.o14 + 3 * (i * dn + j) + 1, mul_mod(pp.B.at(i, r), static_cast<Residue>(wn[j]), q));
        for (std::size_t j = 0; j < dn; ++j)
            b.push(row, L.o14 + 3 * ((L.n + r) * dn + j) + 1, static_cast<Residue>(wn[j]));
    }
    return b.finish();
}

StatementWitness build_statement_witness(const PublicParams& pp, ByteSpan ovk, const IbeCiphertext& ct,
                                         const BitVector& msg, const SecretTuple* xi) {
    const Params& P = pp.params;
    const TpbsLayout& L = pp.codec()->layout();
    const std::uint64_t q = P.q;
    if (msg.size() != L.n) throw DimensionError("message length differs from n");
    if (ct.c1.size() != L.m || ct.c2.size() != L.l1 || ct.c1.modulus() != q || ct.c2.modulus() != q)
        throw DimensionError("ciphertext does not match the parameters");
    const ZqMatrix G = h1(ovk, L.n, L.l1, q);
    if (xi) {
        if (auto err = check_secret_tuple(pp, G, ct, msg, *xi)) throw *err;
    }

    const SparseZqMatrix& fixed = pp.fixed_rows();
    SparseZqMatrix::Builder b(L.rows1(), L.L1, q);
    for (std::size_t r = 0; r < fixed.rows(); ++r)
        for (std::size_t k = fixed.row_ptr()[r]; k < fixed.row_ptr()[r + 1]; ++k)
            b.push(r, fixed.col_idx()[k], fixed.values()[k]);
    const auto wn = gadget_weights(P.noise_bound);
    const std::size_t dn = L.delta_noise;
    for (std::size_t t = 0; t < L.l1; ++t) {
        const std::size_t row = L.n + L.m + t;
        for (std::size_t i = 0; i < L.n; ++i)
            for (std::size_t j = 0; j < dn; ++j)
                b.push(row, L.o14 + 3 * (i * dn + j) + 1, mul_mod(G.at(i, t), static_cast<Residue>(wn[j]), q));
        for (std::size_t j = 0; j < dn; ++j)
            b.push(row, L.o14 + 3 * ((L.n + L.m + t) * dn + j) + 1, static_cast<Residue>(wn[j]));
        b.push(row, L.o15 + 2 * t + 1, q / 2);
    }

    StatementWitness out;
    out.stmt.M1 = b.finish();
    out.stmt.u1 = vec_concat({&pp.mvk.u, &ct.c1, &ct.c2});

    SparseZqMatrix::Builder b2(L.n, L.L2, 2);
    for (std::size_t r = 0; r < L.n; ++r) {
        for (std::size_t a = 0; a < L.l2; ++a) b2.push(r, 2 * a + 1, pp.G1.at(r, a));
        for (std::size_t c = 0; c < L.d; ++c) b2.push(r, L.L21 + 2 * c + 1, pp.G2.at(r, c));
    }
    out.stmt.M2 = b2.finish();
    out.stmt.u2 = ZqVector(std::vector<Residue>(msg.bits().begin(), msg.bits().end()), 2);
    out.stmt.codec = pp.codec();
    out.stmt.zeta = public_input_bytes(pp, G, ct, msg);
    if (xi) out.w = pp.codec()->encode(witness_parts(pp, *xi));
    return out;
}

TpbsWitnessParts witness_parts(const PublicParams& pp, const SecretTuple& xi) {
    const Params& P = pp.params;
    const auto m = static_cast<std::size_t>(P.m);
    TpbsWitnessParts x;
    x.v1_hat = vdec(slice(xi.v, 0, m), P.beta);
    x.v2_hat = vdec(slice(xi.v, m, m), P.beta);
    x.noise_hat = vdec(concat(concat(xi.s, xi.e1), xi.e2), P.noise_bound);
    x.id = xi.id;
    x.p = xi.p;
    x.pcw = xi.pcw;
    return x;
}

SecretTuple decode_witness(const PublicParams& pp, const TritVector& w) {
    const Params& P = pp.params;
    const TpbsLayout& L = pp.codec()->layout();
    const TpbsWitnessParts x = pp.codec()->decode(w);
    SecretTuple xi;
    xi.id = x.id;
    xi.p = x.p;
    xi.pcw = x.pcw;
    xi.v = concat(gadget_apply(L.m, P.beta, x.v1_hat.to_int()), gadget_apply(L.m, P.beta, x.v2_hat.to_int()));
    const IntVector noise = gadget_apply(L.n + L.m + L.l1, P.noise_bound, x.noise_hat.to_int());
    xi.s = slice(noise, 0, L.n);
    xi.e1 = slice(noise, L.n, L.m);
    xi.e2 = slice(noise, L.n + L.m, L.l1);
    return xi;
}

}  // namespace tpbs
