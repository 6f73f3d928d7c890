#include "tpbs/scheme/scheme.hpp"

#include <cmath>

#include "tpbs/core/errors.hpp"
#include "tpbs/core/serialize.hpp"
#include "tpbs/scheme/policy.hpp"
#include "tpbs/sigcrypt/ots.hpp"

namespace tpbs {

const CommitmentKey& PublicParams::commitment_key() const {
    std::call_once(derived_->ck_once, [&] { derived_->ck = CommitmentKey::from_params(params); });
    return derived_->ck;
}

const std::shared_ptr<const TpbsCodec>& PublicParams::codec() const {
    std::call_once(derived_->codec_once, [&] { derived_->codec = std::make_shared<const TpbsCodec>(params); });
    return derived_->codec;
}

const SparseZqMatrix& PublicParams::fixed_rows() const {
    std::call_once(derived_->rows_once, [&] { derived_->rows = build_fixed_rows(*this); });
    return derived_->rows;
}

void PublicParams::validate() const {
    params.validate();
    if (!params.widths_set()) throw ParamError("public parameters lack s, s1 or beta");
    const auto n = static_cast<std::size_t>(params.n), m = static_cast<std::size_t>(params.m);
    auto check = [&](const ZqMatrix& M, const char* what) {
        if (M.rows() != n || M.cols() != m || M.modulus() != params.q)
            throw DimensionError(std::string(what) + " is not n x m mod q");
    };
    check(mvk.A, "A");
    if (mvk.Ai.size() != static_cast<std::size_t>(params.ell()) + 1)
        throw DimensionError("mvk must hold A_0 .. A_l");
    for (const auto& Ai : mvk.Ai) check(Ai, "A_i");
    if (mvk.u.size() != n || mvk.u.modulus() != params.q) throw DimensionError("u is not in Z_q^n");
    check(B, "B");
    if (G1.rows() != n || G1.cols() != static_cast<std::size_t>(params.l2)) throw DimensionError("G1 is not n x l2");
    if (G2.rows() != n || G2.cols() != static_cast<std::size_t>(params.d)) throw DimensionError("G2 is not n x d");
    if (ots_digest_bits != kOtsDigestBits) throw ParamError("unsupported OTS digest length");
}

bool PublicParams::operator==(const PublicParams& o) const {
    return params == o.params && mvk == o.mvk && B == o.B && G1 == o.G1 && G2 == o.G2 &&
           ots_digest_bits == o.ots_digest_bits;
}

SetupResult setup(Params params, Rng& rng, const SetupOptions& opt) {
    params.validate();
    const auto n = static_cast<std::size_t>(params.n), m = static_cast<std::size_t>(params.m);
    params.commitment_seed = rng.seed_bytes();

    BoyenKeys boyen = boyen_keygen(n, m, params.q, static_cast<std::size_t>(params.ell()), rng);
    params.s = boyen.msk.gs_norm * 2.0 * std::sqrt(std::log(2.0 * static_cast<double>(m)));
    params.beta = static_cast<std::int64_t>(std::ceil(params.s * std::log2(static_cast<double>(n))));

    std::optional<TrapdoorPair> mdk;
    for (int attempt = 0; attempt < opt.gpv_attempts && !mdk; ++attempt) {
        TrapdoorPair t = trap_gen(n, m, params.q, rng);
        params.s1 = t.gs_norm * sampler_width_factor(m);
        if (!params.enforce_open_bound || params.open_inequality_holds()) mdk = std::move(t);
    }
    if (!mdk) throw ParamError("parameters violate the Open inequality: " + params.open_inequality_text());

    SetupResult out;
    out.pp.params = params;
    out.pp.mvk = boyen.mvk;
    out.pp.B = mdk->A;
    out.pp.G1 = opt.G1 ? *opt.G1 : sample_bit_matrix(n, static_cast<std::size_t>(params.l2), rng);
    const auto d = static_cast<std::size_t>(params.d);
    out.pp.G2 = opt.G2 ? *opt.G2 : (d >= n ? sample_full_row_rank(n, d, rng) : sample_bit_matrix(n, d, rng));
    out.pp.validate();
    out.msk = std::move(boyen.msk);
    out.mdk = std::move(*mdk);
    return out;
}

UserSigningKey keygen(const PublicParams& pp, const TrapdoorPair& msk, const BitVector& id,
                      const std::vector<BitVector>& policies, Rng& rng) {
    if (id.size() != static_cast<std::size_t>(pp.params.l1)) throw DimensionError("identity length differs from l1");
    UserSigningKey usk{id, {}};
    for (const BitVector& p : policies) {
        if (p.size() != static_cast<std::size_t>(pp.params.l2)) throw DimensionError("policy length differs from l2");
        usk.certs.push_back({p, boyen_sign(msk, pp.mvk, id.concat(p), pp.params.s, pp.params.beta, rng)});
    }
    return usk;
}

Bytes ots_message(const ZqVector& c1, const ZqVector& c2, const SternProof& pi) {
    ByteWriter w;
    w.header({'O', 'T', 'S', 'M'});
    write(w, c1);
    write(w, c2);
    write(w, pi);
    return w.take();
}

Outcome<TpbsSignature> sign(const PublicParams& pp, const UserSigningKey& usk, const BitVector& msg,
                            const BitVector& pcw, Rng& rng, ChallengeOracle& oracle) {
    const Params& P = pp.params;
    if (msg.size() != static_cast<std::size_t>(P.n)) return Outcome<TpbsSignature>::refuse("message length differs from n");
    if (pcw.size() != static_cast<std::size_t>(P.d))
        return Outcome<TpbsSignature>::refuse("policy witness length differs from d");
    const Certificate* cert = nullptr;
    for (const auto& c : usk.certs)
        if (c.p.size() == pp.G1.cols() && policy_check(pp.G1, pp.G2, c.p, pcw, msg)) {
            cert = &c;
            break;
        }
    if (!cert) return Outcome<TpbsSignature>::refuse("no certified policy authorizes the message");

    const OtsKeyPair ots = ots_gen(rng);
    const ZqMatrix G = h1(ots.ovk, static_cast<std::size_t>(P.n), static_cast<std::size_t>(P.l1), P.q);
    IbeRandomness r = ibe_sample_randomness(static_cast<std::size_t>(P.n), static_cast<std::size_t>(P.m),
                                            static_cast<std::size_t>(P.l1), P.noise_bound, rng);
    const IbeCiphertext ct = ibe_encrypt_with(pp.B, G, usk.id, r);
    const SecretTuple xi{usk.id, cert->p, cert->v, std::move(r.s), std::move(r.e1), std::move(r.e2), pcw};
    const StatementWitness sw = build_statement_witness(pp, ots.ovk, ct, msg, &xi);

    TpbsSignature sig;
    sig.ovk = ots.ovk;
    sig.c1 = ct.c1;
    sig.c2 = ct.c2;
    sig.pi = fs_prove(sw.stmt, pp.commitment_key(), *sw.w, static_cast<std::size_t>(P.kappa), rng, oracle);
    sig.sig = ots_sign(ots.osk, ots_message(sig.c1, sig.c2, sig.pi));
    return Outcome<TpbsSignature>::accept(std::move(sig));
}

Outcome<TpbsSignature> sign(const PublicParams& pp, const UserSigningKey& usk, const BitVector& msg,
                            const BitVector& pcw, Rng& rng) {
    HashOracle oracle;
    return sign(pp, usk, msg, pcw, rng, oracle);
}

bool verify(const PublicParams& pp, const BitVector& msg, const TpbsSignature& sig, ChallengeOracle& oracle) {
    try {
        if (!ots_verify(sig.ovk, ots_message(sig.c1, sig.c2, sig.pi), sig.sig)) return false;
        const StatementWitness sw = build_statement_witness(pp, sig.ovk, {sig.c1, sig.c2}, msg, nullptr);
        return fs_verify(sw.stmt, pp.commitment_key(), sig.pi, oracle);
    } catch (const std::exception&) {
        return false;
    }
}

bool verify(const PublicParams& pp, const BitVector& msg, const TpbsSignature& sig) {
    HashOracle oracle;
    return verify(pp, msg, sig, oracle);
}

Outcome<OpenReport> open(const PublicParams& pp, const TrapdoorPair& mdk, const BitVector& msg,
                         const TpbsSignature& sig, Rng& rng, ChallengeOracle& oracle) {
    if (!verify(pp, msg, sig, oracle)) return Outcome<OpenReport>::refuse("signature does not verify");
    const Params& P = pp.params;
    const ZqMatrix G = h1(sig.ovk, static_cast<std::size_t>(P.n), static_cast<std::size_t>(P.l1), P.q);
    const IntMatrix F = ibe_extract(mdk, G, P.s1, rng);
    const IbeCiphertext ct{sig.c1, sig.c2};
    OpenReport rep;
    rep.id = ibe_decrypt(F, ct);
    const IntVector values = ibe_decryption_values(F, ct);
    const auto half = static_cast<std::int64_t>(P.q / 2);
    for (std::size_t i = 0; i < values.size(); ++i) {
        const std::int64_t e = centered(reduce_signed(values[i] - (rep.id[i] ? half : 0), P.q), P.q);
        rep.noise = std::max<std::int64_t>(rep.noise, std::llabs(e));
    }
    rep.noise_bound = P.open_noise_bound();
    return Outcome<OpenReport>::accept(std::move(rep));
}

Outcome<OpenReport> open(const PublicParams& pp, const TrapdoorPair& mdk, const BitVector& msg,
                         const TpbsSignature& sig, Rng& rng) {
    HashOracle oracle;
    return open(pp, mdk, msg, sig, rng, oracle);
}

}  // namespace tpbs
