#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <string>

#include "tpbs/core/params.hpp"
#include "tpbs/scheme/codec.hpp"
#include "tpbs/sigcrypt/boyen.hpp"
#include "tpbs/sigcrypt/commit.hpp"
#include "tpbs/sigcrypt/gpv.hpp"
#include "tpbs/stern/protocol.hpp"

namespace tpbs {

// pp = (Params with measured widths, mvk, mek = B, G₁, G₂). Fields are fixed
// once built; derived data (commitment key, codec, the ovk-independent rows of
// M₁) is computed on first use and shared between copies.
struct PublicParams {
    Params params;
    BoyenPublic mvk;
    ZqMatrix B;
    BitMatrix G1, G2;
    std::uint32_t ots_digest_bits = 256;

    const CommitmentKey& commitment_key() const;
    const std::shared_ptr<const TpbsCodec>& codec() const;
    // Rows of M₁ for the u and c₁ equations.
    const SparseZqMatrix& fixed_rows() const;

    // Shapes against Params; throws DimensionError/ParamError.
    void validate() const;
    bool operator==(const PublicParams& o) const;

private:
    struct Derived {
        std::once_flag ck_once, codec_once, rows_once;
        CommitmentKey ck;
        std::shared_ptr<const TpbsCodec> codec;
        SparseZqMatrix rows;
    };
    std::shared_ptr<Derived> derived_ = std::make_shared<Derived>();
};

struct Certificate {
    BitVector p;
    IntVector v;  // 2m, Boyen signature on id ‖ p
    bool operator==(const Certificate&) const = default;
};

struct UserSigningKey {
    BitVector id;
    std::vector<Certificate> certs;
    bool operator==(const UserSigningKey&) const = default;
};

struct TpbsSignature {
    Bytes ovk;
    ZqVector c1, c2;
    SternProof pi;
    Bytes sig;
    bool operator==(const TpbsSignature&) const = default;
};

// ξ = (id ‖ p, v, s, e₁, e₂, pcw)
struct SecretTuple {
    BitVector id, p;
    IntVector v;
    IntVector s, e1, e2;
    BitVector pcw;
    bool operator==(const SecretTuple&) const = default;
};

// A refusal (⊥) is an ordinary outcome, not an error.
template <class T>
struct Outcome {
    std::optional<T> value;
    std::string refusal;

    static Outcome accept(T v) { return {std::move(v), {}}; }
    static Outcome refuse(std::string why) { return {std::nullopt, std::move(why)}; }
    bool ok() const { return value.has_value(); }
};

}  // namespace tpbs
