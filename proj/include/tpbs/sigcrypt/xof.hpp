#pragma once

#include <array>
#include <initializer_list>
#include <string_view>

#include "tpbs/core/types.hpp"

namespace tpbs {

using Digest = std::array<std::uint8_t, 32>;

// SHAKE256(input) truncated to out_len bytes.
Bytes shake256(ByteSpan input, std::size_t out_len);
// SHAKE256 over the concatenation of the parts.
Bytes shake256_concat(std::initializer_list<ByteSpan> parts, std::size_t out_len);
Digest sha256(ByteSpan input);

// Streaming view over SHAKE256(tag ‖ input). The stream is recomputed at a
// doubled length when exhausted, which SHAKE makes prefix-consistent.
class XofReader {
public:
    XofReader(std::string_view tag, ByteSpan input);
    std::uint8_t next_byte();
    // Uniform residue in [0, q) by rejection on ⌈log2 q⌉-bit chunks.
    std::uint64_t uniform_mod(std::uint64_t q);
    bool next_bit();

private:
    Bytes input_;
    Bytes buffer_;
    std::size_t pos_ = 0;
};

}  // namespace tpbs
