#include "tpbs/scheme/files.hpp"

#include <fstream>
#include <iterator>

#include "tpbs/core/errors.hpp"
#include "tpbs/core/serialize.hpp"
#include "tpbs/sigcrypt/ots.hpp"

namespace tpbs {

namespace {

constexpr Magic kParamsFile{'T', 'P', 'P', 'A'};
constexpr Magic kPpFile{'T', 'P', 'P', 'P'};
constexpr Magic kMskFile{'T', 'P', 'M', 'S'};
constexpr Magic kMdkFile{'T', 'P', 'M', 'D'};
constexpr Magic kUskFile{'T', 'P', 'U', 'K'};
constexpr Magic kSigFile{'T', 'P', 'S', 'G'};
constexpr std::uint64_t kMaxPolicies = 1u << 20;

template <class F>
Bytes encode(const Magic& magic, F&& body) {
    ByteWriter w;
    w.header(magic);
    body(w);
    return w.take();
}

template <class F>
auto decode(ByteSpan bytes, const Magic& magic, F&& body) {
    ByteReader r(bytes);
    r.header(magic);
    auto out = body(r);
    r.expect_end();
    return out;
}

}  // namespace

void write(ByteWriter& w, const TpbsSignature& sig) {
    w.blob(sig.ovk);
    write(w, sig.c1);
    write(w, sig.c2);
    write(w, sig.pi);
    w.blob(sig.sig);
}

TpbsSignature read_signature(ByteReader& r) {
    TpbsSignature sig;
    sig.ovk = r.blob();
    sig.c1 = read_zq_vector(r);
    sig.c2 = read_zq_vector(r);
    sig.pi = read_stern_proof(r);
    sig.sig = r.blob();
    return sig;
}

Bytes encode_params_file(const Params& p) {
    return encode(kParamsFile, [&](ByteWriter& w) { write(w, p); });
}

Bytes encode_pp_file(const PublicParams& pp) {
    return encode(kPpFile, [&](ByteWriter& w) {
        write(w, pp.params);
        write(w, pp.mvk);
        write(w, pp.B);
        write(w, pp.G1);
        write(w, pp.G2);
        w.u32(pp.ots_digest_bits);
    });
}

Bytes encode_msk_file(const TrapdoorPair& msk) {
    return encode(kMskFile, [&](ByteWriter& w) { write(w, msk); });
}

Bytes encode_mdk_file(const TrapdoorPair& mdk) {
    return encode(kMdkFile, [&](ByteWriter& w) { write(w, mdk); });
}

Bytes encode_usk_file(const UserSigningKey& usk) {
    return encode(kUskFile, [&](ByteWriter& w) {
        write(w, usk.id);
        w.u64(usk.certs.size());
        for (const auto& c : usk.certs) {
            write(w, c.p);
            write(w, c.v);
        }
    });
}

Bytes encode_signature_file(const TpbsSignature& sig) {
    return encode(kSigFile, [&](ByteWriter& w) { write(w, sig); });
}

Params decode_params_file(ByteSpan bytes) {
    return decode(bytes, kParamsFile, [](ByteReader& r) { return read_params(r); });
}

PublicParams decode_pp_file(ByteSpan bytes) {
    return decode(bytes, kPpFile, [](ByteReader& r) {
        PublicParams pp;
        pp.params = read_params(r);
        pp.mvk = read_boyen_public(r);
        pp.B = read_zq_matrix(r);
        pp.G1 = read_bit_matrix(r);
        pp.G2 = read_bit_matrix(r);
        pp.ots_digest_bits = r.u32();
        try {
            pp.validate();
        } catch (const Error& e) {
            throw DecodeError(std::string("public parameters inconsistent: ") + e.what());
        }
        return pp;
    });
}

TrapdoorPair decode_msk_file(ByteSpan bytes) {
    return decode(bytes, kMskFile, [](ByteReader& r) { return read_trapdoor(r); });
}

TrapdoorPair decode_mdk_file(ByteSpan bytes) {
    return decode(bytes, kMdkFile, [](ByteReader& r) { return read_trapdoor(r); });
}

UserSigningKey decode_usk_file(ByteSpan bytes) {
    return decode(bytes, kUskFile, [](ByteReader& r) {
        UserSigningKey usk;
        usk.id = read_bit_vector(r);
        const std::uint64_t count = r.u64();
        if (count > kMaxPolicies || count > r.remaining()) throw DecodeError("implausible policy count");
        for (std::uint64_t i = 0; i < count; ++i) {
            Certificate c;
            c.p = read_bit_vector(r);
            c.v = read_int_vector(r);
            usk.certs.push_back(std::move(c));
        }
        return usk;
    });
}

TpbsSignature decode_signature_file(ByteSpan bytes) {
    return decode(bytes, kSigFile, [](ByteReader& r) { return read_signature(r); });
}

Bytes read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open '" + path + "' for reading");
    Bytes out((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    if (in.bad()) throw IoError("error while reading '" + path + "'");
    return out;
}

void write_file(const std::string& path, ByteSpan bytes) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open '" + path + "' for writing");
    out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
    if (!out) throw IoError("error while writing '" + path + "'");
}

}  // namespace tpbs
