#include "fixtures.hpp"

#include <boost/math/special_functions/gamma.hpp>

#include "tpbs/core/linalg.hpp"
#include "tpbs/sigcrypt/gpv.hpp"
#include "tpbs/sigcrypt/ots.hpp"
#include "tpbs/stern/encoding.hpp"

namespace tpbs::test {

BitVector bits(std::initializer_list<int> v) {
    std::vector<std::uint8_t> out;
    for (int x : v) out.push_back(static_cast<std::uint8_t>(x));
    return BitVector(std::move(out));
}

TritVector trits(std::initializer_list<int> v) {
    std::vector<std::int8_t> out;
    for (int x : v) out.push_back(static_cast<std::int8_t>(x));
    return TritVector(std::move(out));
}

IntVector ints(std::initializer_list<long long> v) { return IntVector(v.begin(), v.end()); }

const SetupResult& toy_setup() {
    static const SetupResult s = [] {
        Rng rng(seed_from_u64(0x70));
        return setup(Params::toy(), rng);
    }();
    return s;
}

const SetupResult& desk_setup() {
    static const SetupResult s = [] {
        Rng rng(seed_from_u64(0xde5c));
        return setup(Params::desk(), rng);
    }();
    return s;
}

double chi_square_p(const std::vector<double>& observed, const std::vector<double>& expected) {
    double stat = 0.0;
    for (std::size_t i = 0; i < observed.size(); ++i) {
        const double d = observed[i] - expected[i];
        stat += d * d / expected[i];
    }
    const double df = static_cast<double>(observed.size() - 1);
    return boost::math::gamma_q(df / 2.0, stat / 2.0);
}

double homogeneity_p(const std::vector<double>& a, const std::vector<double>& b) {
    double na = 0.0, nb = 0.0;
    for (double x : a) na += x;
    for (double x : b) nb += x;
    double stat = 0.0;
    std::size_t used = 0;
    for (std::size_t k = 0; k < a.size(); ++k) {
        const double pooled = (a[k] + b[k]) / (na + nb);
        if (pooled == 0.0) continue;
        ++used;
        const double ea = pooled * na, eb = pooled * nb;
        stat += (a[k] - ea) * (a[k] - ea) / ea + (b[k] - eb) * (b[k] - eb) / eb;
    }
    return boost::math::gamma_q(static_cast<double>(used - 1) / 2.0, stat / 2.0);
}

Signer make_signer(const SetupResult& s, const BitVector& id, Rng& rng) {
    Signer out;
    out.id = id;
    out.p = random_bits(static_cast<std::size_t>(s.pp.params.l2), rng);
    std::tie(out.msg, out.pcw) = conforming_message(s.pp, out.p, rng);
    out.usk = keygen(s.pp, s.msk, out.id, {out.p}, rng);
    return out;
}

Signer make_signer(const SetupResult& s, Rng& rng, bool nonzero_id) {
    const auto l1 = static_cast<std::size_t>(s.pp.params.l1);
    return make_signer(s, nonzero_id ? random_identity(l1, rng) : random_bits(l1, rng), rng);
}

Honest honest_case(const SetupResult& s, const BitVector& id, Rng& rng) {
    Honest h;
    h.signer = make_signer(s, id, rng);
    const Params& P = s.pp.params;
    h.ovk = ots_gen(rng).ovk;
    h.G = h1(h.ovk, static_cast<std::size_t>(P.n), static_cast<std::size_t>(P.l1), P.q);
    const IbeRandomness r = ibe_sample_randomness(static_cast<std::size_t>(P.n), static_cast<std::size_t>(P.m),
                                                  static_cast<std::size_t>(P.l1), P.noise_bound, rng);
    h.ct = ibe_encrypt_with(s.pp.B, h.G, id, r);
    h.xi = SecretTuple{id, h.signer.p, h.signer.usk.certs[0].v, r.s, r.e1, r.e2, h.signer.pcw};
    return h;
}

Honest honest_case(const SetupResult& s, Rng& rng) {
    return honest_case(s, random_identity(static_cast<std::size_t>(s.pp.params.l1), rng), rng);
}

ToyStatement simple_statement(std::size_t k, std::size_t j, std::size_t rows1, std::size_t rows2, std::uint64_t q1,
                              Rng& rng, bool satisfied) {
    auto codec = std::make_shared<SimpleCodec>(k, j);
    ZqMatrix M1(rows1, codec->l1(), q1), M2(rows2, codec->l2(), 2);
    for (std::size_t r = 0; r < rows1; ++r)
        for (std::size_t c = 0; c < M1.cols(); ++c) M1.set(r, c, static_cast<std::int64_t>(rng.uniform(q1)));
    for (std::size_t r = 0; r < rows2; ++r)
        for (std::size_t c = 0; c < M2.cols(); ++c) M2.set(r, c, rng.bit() ? 1 : 0);
    ToyStatement out;
    out.w = codec->sample_valid(rng);
    const IntVector w = out.w.to_int();
    const IntVector w1(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(codec->l1()));
    const IntVector w2(w.begin() + static_cast<std::ptrdiff_t>(codec->l1()), w.end());
    ZqVector u1 = mat_vec_mul(M1, w1, q1), u2 = mat_vec_mul(M2, w2, 2);
    if (!satisfied) {
        u1.set(0, static_cast<std::int64_t>(u1[0]) + 1);
        u2.set(0, static_cast<std::int64_t>(u2[0]) + 1);
    }
    out.stmt.M1 = SparseZqMatrix::from_dense(M1);
    out.stmt.M2 = SparseZqMatrix::from_dense(M2);
    out.stmt.u1 = u1;
    out.stmt.u2 = u2;
    out.stmt.codec = codec;
    return out;
}

const CommitmentKey& toy_commitment_key() {
    static const CommitmentKey ck(seed_from_u64(0xc0), 4, 72, 257);
    return ck;
}

namespace {

// Calls fn on every vector of length m over the alphabet.
template <class Fn>
void each_vector(std::initializer_list<int> alphabet, std::size_t m, Fn&& fn) {
    const std::vector<int> a(alphabet);
    std::vector<std::size_t> idx(m, 0);
    IntVector v(m);
    while (true) {
        for (std::size_t i = 0; i < m; ++i) v[i] = a[idx[i]];
        fn(v);
        std::size_t i = 0;
        while (i < m && ++idx[i] == a.size()) idx[i++] = 0;
        if (i == m) return;
    }
}

BitVector to_bits(const IntVector& v) {
    std::vector<std::uint8_t> out(v.begin(), v.end());
    return BitVector(std::move(out));
}

TritVector to_trits(const IntVector& v) {
    std::vector<std::int8_t> out(v.begin(), v.end());
    return TritVector(std::move(out));
}

IntVector as_int(const BitVector& b) { return IntVector(b.bits().begin(), b.bits().end()); }

bool is_enc2(const IntVector& v) {
    for (std::size_t i = 0; i < v.size(); i += 2)
        if (!((v[i] == 0 && v[i + 1] == 1) || (v[i] == 1 && v[i + 1] == 0))) return false;
    return true;
}

bool is_enc3(const IntVector& v) {
    for (std::size_t i = 0; i < v.size(); i += 3) {
        const int z = static_cast<int>(v[i + 1]);
        if (z < -1 || z > 1) return false;
        if (v[i] != mod3(z + 1) || v[i + 2] != mod3(z - 1)) return false;
    }
    return true;
}

bool is_ext(const IntVector& v) {
    for (int t = 0; t <= 1; ++t)
        for (int z = -1; z <= 1; ++z) {
            const auto e = ext(t, z);
            if (std::equal(e.begin(), e.end(), v.begin())) return true;
        }
    return false;
}

IntVector shift3(const IntVector& z, const IntVector& e) {
    IntVector out(z.size());
    for (std::size_t i = 0; i < z.size(); ++i) out[i] = mod3(static_cast<int>(z[i] + e[i]));
    return out;
}

IntVector xor_int(const IntVector& a, const IntVector& b) {
    IntVector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] ^ b[i];
    return out;
}

}  // namespace

Tally check_phi_equivalence(std::size_t max_m) {
    Tally t;
    for (std::size_t m = 1; m <= max_m; ++m)
        each_vector({0, 1}, m, [&](const IntVector& b) {
            const BitVector bb = to_bits(b);
            IndexMap map;
            append_phi(bb.bits(), 0, map);
            each_vector({0, 1}, m, [&](const IntVector& z) {
                const IntVector v = as_int(enc2(to_bits(z)));
                const IntVector img = perm_phi(bb, v);
                t.record(img == as_int(enc2(to_bits(xor_int(z, b)))) && gather(map, v) == img);
            });
            each_vector({-1, 0, 1}, 2 * m, [&](const IntVector& v) { t.record(is_enc2(v) == is_enc2(perm_phi(bb, v))); });
        });
    return t;
}

Tally check_varphi_equivalence(std::size_t max_m) {
    Tally t;
    for (std::size_t m = 1; m <= max_m; ++m)
        each_vector({-1, 0, 1}, m, [&](const IntVector& b) {
            const TritVector bt = to_trits(b);
            IndexMap map;
            append_varphi(bt.trits(), 0, map);
            each_vector({-1, 0, 1}, m, [&](const IntVector& z) {
                const IntVector v = enc3(to_trits(z)).to_int();
                const IntVector img = perm_varphi(bt, v);
                t.record(img == enc3(to_trits(shift3(z, b))).to_int() && gather(map, v) == img);
            });
            each_vector({-1, 0, 1}, 3 * m, [&](const IntVector& v) { t.record(is_enc3(v) == is_enc3(perm_varphi(bt, v))); });
        });
    return t;
}

Tally check_psi_equivalence() {
    Tally t;
    for (int b = 0; b <= 1; ++b)
        for (int e = -1; e <= 1; ++e) {
            IndexMap map;
            append_psi(b, e, 0, map);
            for (int tt = 0; tt <= 1; ++tt)
                for (int z = -1; z <= 1; ++z) {
                    const auto x = ext(tt, z), y = ext(tt ^ b, mod3(z + e));
                    const IntVector v(x.begin(), x.end());
                    const IntVector img = perm_psi(b, e, v);
                    t.record(img == IntVector(y.begin(), y.end()) && gather(map, v) == img);
                }
            each_vector({-1, 0, 1}, 6, [&](const IntVector& v) { t.record(is_ext(v) == is_ext(perm_psi(b, e, v))); });
        }
    return t;
}

Tally check_Psi_equivalence(std::size_t m1, std::size_t m2) {
    Tally t;
    each_vector({0, 1}, m1, [&](const IntVector& b) {
        each_vector({-1, 0, 1}, m2, [&](const IntVector& e) {
            const BitVector bb = to_bits(b);
            const TritVector et = to_trits(e);
            IndexMap map;
            append_Psi(bb.bits(), et.trits(), 0, map);
            each_vector({0, 1}, m1, [&](const IntVector& tv) {
                each_vector({-1, 0, 1}, m2, [&](const IntVector& z) {
                    const IntVector v = ext_mix(to_bits(tv), to_trits(z)).to_int();
                    const IntVector img = perm_Psi(bb, et, v);
                    // Ψ acts block-wise as ψ_{b_a, e_c}.
                    bool blocks = true;
                    for (std::size_t a = 0; a < m1; ++a)
                        for (std::size_t c = 0; c < m2; ++c) {
                            const std::size_t off = 6 * (a * m2 + c);
                            const IntVector blk(v.begin() + static_cast<std::ptrdiff_t>(off),
                                                v.begin() + static_cast<std::ptrdiff_t>(off + 6));
                            const IntVector want = perm_psi(static_cast<int>(b[a]), static_cast<int>(e[c]), blk);
                            blocks = blocks && std::equal(want.begin(), want.end(),
                                                          img.begin() + static_cast<std::ptrdiff_t>(off));
                        }
                    t.record(img == ext_mix(to_bits(xor_int(tv, b)), to_trits(shift3(z, e))).to_int() &&
                             gather(map, v) == img && blocks);
                });
            });
        });
    });
    return t;
}

Tally check_decomposition(std::size_t m, std::int64_t max_B) {
    Tally t;
    const std::uint64_t q = 16777213;
    for (std::int64_t B = 2; B <= max_B; ++B) {
        const ZqMatrix G = gadget_matrix(m, B, q);
        const std::size_t delta = G.cols() / m;
        IntVector a(m, -B);
        while (true) {
            const IntVector x = vdec(a, B).to_int();
            // G·x over the integers, read straight from the gadget matrix.
            bool ok = x.size() == m * delta;
            for (std::size_t i = 0; ok && i < m; ++i) {
                std::int64_t acc = 0;
                for (std::size_t j = 0; j < G.cols(); ++j)
                    acc += static_cast<std::int64_t>(G.at(i, j)) * x[j];
                ok = acc == a[i];
            }
            t.record(ok);
            std::size_t i = 0;
            while (i < m && ++a[i] > B) a[i++] = -B;
            if (i == m) break;
        }
    }
    return t;
}

std::vector<FileSample> sample_files(const SetupResult& s, const UserSigningKey& usk, const TpbsSignature& sig) {
    return {{"params", encode_params_file(s.pp.params)}, {"pp", encode_pp_file(s.pp)},
            {"msk", encode_msk_file(s.msk)},             {"mdk", encode_mdk_file(s.mdk)},
            {"usk", encode_usk_file(usk)},               {"signature", encode_signature_file(sig)}};
}

Bytes reencode(const std::string& kind, ByteSpan bytes) {
    if (kind == "params") return encode_params_file(decode_params_file(bytes));
    if (kind == "pp") return encode_pp_file(decode_pp_file(bytes));
    if (kind == "msk") return encode_msk_file(decode_msk_file(bytes));
    if (kind == "mdk") return encode_mdk_file(decode_mdk_file(bytes));
    if (kind == "usk") return encode_usk_file(decode_usk_file(bytes));
    if (kind == "signature") return encode_signature_file(decode_signature_file(bytes));
    throw std::invalid_argument("unknown file kind " + kind);
}

FuzzTally fuzz_files(const std::vector<FileSample>& files, std::size_t cases, Rng& rng) {
    FuzzTally t;
    for (std::size_t i = 0; i < cases; ++i) {
        const FileSample& f = files[i % files.size()];
        Bytes b = f.bytes;
        switch (rng.uniform(4)) {
            case 0:  // truncate
                b.resize(rng.uniform(b.size()));
                break;
            case 1:  // flip a few bytes
                for (int k = 0, flips = 1 + static_cast<int>(rng.uniform(4)); k < flips; ++k)
                    b[rng.uniform(b.size())] ^= static_cast<std::uint8_t>(1 + rng.uniform(255));
                break;
            case 2: {  // overwrite a run near the front, where headers and lengths live
                const std::size_t at = rng.uniform(std::min<std::size_t>(b.size(), 64));
                for (std::size_t k = at; k < std::min(b.size(), at + 8); ++k) b[k] = 0xff;
                break;
            }
            default:  // truncate and append garbage
                b.resize(rng.uniform(b.size()));
                for (int k = 0; k < 16; ++k) b.push_back(static_cast<std::uint8_t>(rng.uniform(256)));
        }
        ++t.cases;
        try {
            reencode(f.kind, b);
            ++t.decoded;
        } catch (const Error&) {
            ++t.rejected;
        } catch (const std::exception& e) {
            ++t.escaped;
            if (t.first_escape.empty()) t.first_escape = f.kind + ": " + e.what();
        }
    }
    return t;
}

}  // namespace tpbs::test
