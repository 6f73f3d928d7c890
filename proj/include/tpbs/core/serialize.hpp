#pragma once

#include <array>
#include <span>
#include <string>
#include <string_view>

#include "tpbs/core/params.hpp"
#include "tpbs/core/types.hpp"

namespace tpbs {

using Magic = std::array<char, 4>;
constexpr std::uint8_t kFormatVersion = 1;

// Bytes needed to hold any residue below `modulus`.
int residue_width(std::uint64_t modulus);

class ByteWriter {
public:
    void u8(std::uint8_t v) { out_.push_back(v); }
    void u32(std::uint32_t v) { uint(v, 4); }
    void u64(std::uint64_t v) { uint(v, 8); }
    void uint(std::uint64_t v, int width);
    // Each value as a little-endian `width`-byte integer.
    void uints(std::span<const std::uint64_t> vs, int width);
    void reserve(std::size_t extra) { out_.reserve(out_.size() + extra); }
    void bytes(ByteSpan b) { out_.insert(out_.end(), b.begin(), b.end()); }
    // u64 length followed by the bytes.
    void blob(ByteSpan b);
    void header(const Magic& magic);
    void f64(double v);

    const Bytes& data() const { return out_; }
    Bytes take() { return std::move(out_); }

private:
    Bytes out_;
};

class ByteReader {
public:
    explicit ByteReader(ByteSpan in) : in_(in) {}
    std::uint8_t u8();
    std::uint32_t u32() { return static_cast<std::uint32_t>(uint(4)); }
    std::uint64_t u64() { return uint(8); }
    std::uint64_t uint(int width);
    ByteSpan bytes(std::size_t n);
    Bytes blob();
    void header(const Magic& magic);
    double f64();
    // Count read from input that will be multiplied by `unit` bytes; rejects impossible sizes.
    std::size_t count(std::size_t unit);

    std::size_t remaining() const { return in_.size() - pos_; }
    bool at_end() const { return pos_ == in_.size(); }
    void expect_end() const;

private:
    ByteSpan in_;
    std::size_t pos_ = 0;
};

void write(ByteWriter& w, const ZqVector& v);
void write(ByteWriter& w, const ZqMatrix& m);
void write(ByteWriter& w, const IntVector& v);
void write(ByteWriter& w, const IntMatrix& m);
void write(ByteWriter& w, const BitVector& v);
void write(ByteWriter& w, const TritVector& v);
void write(ByteWriter& w, const BitMatrix& m);
void write(ByteWriter& w, const SparseZqMatrix& m);
void write(ByteWriter& w, const Params& p);

ZqVector read_zq_vector(ByteReader& r);
ZqMatrix read_zq_matrix(ByteReader& r);
IntVector read_int_vector(ByteReader& r);
IntMatrix read_int_matrix(ByteReader& r);
BitVector read_bit_vector(ByteReader& r);
TritVector read_trit_vector(ByteReader& r);
BitMatrix read_bit_matrix(ByteReader& r);
SparseZqMatrix read_sparse_matrix(ByteReader& r);
Params read_params(ByteReader& r);

template <class T>
Bytes to_bytes(const T& value) {
    ByteWriter w;
    write(w, value);
    return w.take();
}

// Hex of a bit string, most significant bit first within each byte.
std::string bits_to_hex(const BitVector& bits);
// Inverse of bits_to_hex; the hex must cover exactly ⌈len/8⌉ bytes and padding bits must be zero.
BitVector hex_to_bits(std::string_view hex, std::size_t len);
std::string bytes_to_hex(ByteSpan bytes);
Bytes hex_to_bytes(std::string_view hex);

}  // namespace tpbs
