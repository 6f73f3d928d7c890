#include "tpbs/sigcrypt/xof.hpp"

#include <memory>

#include <openssl/evp.h>

#include "tpbs/core/errors.hpp"
#include "tpbs/core/modular.hpp"

namespace tpbs {

namespace {

struct CtxDeleter {
    void operator()(EVP_MD_CTX* c) const { EVP_MD_CTX_free(c); }
};

void digest(const EVP_MD* md, ByteSpan input, std::uint8_t* out, std::size_t out_len, bool xof) {
    std::unique_ptr<EVP_MD_CTX, CtxDeleter> ctx(EVP_MD_CTX_new());
    if (!ctx || EVP_DigestInit_ex(ctx.get(), md, nullptr) != 1 ||
        EVP_DigestUpdate(ctx.get(), input.data(), input.size()) != 1)
        throw Error("OpenSSL digest initialisation failed");
    const int ok = xof ? EVP_DigestFinalXOF(ctx.get(), out, out_len) : EVP_DigestFinal_ex(ctx.get(), out, nullptr);
    if (ok != 1) throw Error("OpenSSL digest finalisation failed");
}

}  // namespace

Bytes shake256(ByteSpan input, std::size_t out_len) {
    Bytes out(out_len);
    if (out_len > 0) digest(EVP_shake256(), input, out.data(), out_len, true);
    return out;
}

Bytes shake256_concat(std::initializer_list<ByteSpan> parts, std::size_t out_len) {
    std::unique_ptr<EVP_MD_CTX, CtxDeleter> ctx(EVP_MD_CTX_new());
    if (!ctx || EVP_DigestInit_ex(ctx.get(), EVP_shake256(), nullptr) != 1)
        throw Error("OpenSSL digest initialisation failed");
    for (ByteSpan part : parts)
        if (EVP_DigestUpdate(ctx.get(), part.data(), part.size()) != 1) throw Error("OpenSSL digest update failed");
    Bytes out(out_len);
    if (out_len > 0 && EVP_DigestFinalXOF(ctx.get(), out.data(), out_len) != 1)
        throw Error("OpenSSL digest finalisation failed");
    return out;
}

Digest sha256(ByteSpan input) {
    Digest out;
    digest(EVP_sha256(), input, out.data(), out.size(), false);
    return out;
}

XofReader::XofReader(std::string_view tag, ByteSpan input) {
    input_.assign(tag.begin(), tag.end());
    input_.insert(input_.end(), input.begin(), input.end());
    buffer_ = shake256(input_, 256);
}

std::uint8_t XofReader::next_byte() {
    if (pos_ == buffer_.size()) buffer_ = shake256(input_, buffer_.size() * 2);
    return buffer_[pos_++];
}

bool XofReader::next_bit() { return (next_byte() & 1) != 0; }

std::uint64_t XofReader::uniform_mod(std::uint64_t q) {
    if (q < 2) throw RangeError("modulus below 2");
    const int bits = ceil_log2(q);
    const int nbytes = (bits + 7) / 8;
    const std::uint64_t mask = bits >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << bits) - 1;
    while (true) {
        std::uint64_t v = 0;
        for (int i = 0; i < nbytes; ++i) v |= static_cast<std::uint64_t>(next_byte()) << (8 * i);
        v &= mask;
        if (v < q) return v;
    }
}

}  // namespace tpbs
