#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "tpbs/core/types.hpp"

namespace tpbs {

using Trits = std::span<const std::int8_t>;
using Bits = std::span<const std::uint8_t>;
// Gather map: out[i] = in[src[i]].
using IndexMap = std::vector<std::uint32_t>;

// Centered residue mod 3, in {−1, 0, 1}.
inline std::int8_t mod3(int x) {
    const int r = ((x % 3) + 3) % 3;
    return static_cast<std::int8_t>(r == 2 ? -1 : r);
}

// Greedy decomposition with weights B_j; Σ B_j·bit_j = a for 0 ≤ a ≤ B.
BitVector idec(std::int64_t a, std::int64_t B);
// σ(a_i)·idec(|a_i|) per coordinate; gadget_apply inverts it.
TritVector vdec(const IntVector& a, std::int64_t B);

// [z̄_1, z_1, …]
BitVector enc2(const BitVector& z);
// [[z+1]₃, [z]₃, [z−1]₃] per coordinate
TritVector enc3(const TritVector& z);
// [t̄[z+1]₃, t[z+1]₃, t̄[z]₃, t[z]₃, t̄[z−1]₃, t[z−1]₃]
std::array<std::int8_t, 6> ext(int t, int z);
// Ext(mix(t, z)): block (a, c) = ext(t_a, z_c) at block index a·|z| + c.
TritVector ext_mix(const BitVector& t, const TritVector& z);

// Index maps of the elementary permutations, appended for a block starting at `offset`.
void append_phi(Bits b, std::size_t offset, IndexMap& out);
void append_varphi(Trits b, std::size_t offset, IndexMap& out);
void append_psi(int b, int e, std::size_t offset, IndexMap& out);
// Ψ_{b,e} over |b|·|e| blocks of six.
void append_Psi(Bits b, Trits e, std::size_t offset, IndexMap& out);

template <class T>
std::vector<T> gather(const IndexMap& src, const std::vector<T>& in) {
    std::vector<T> out(src.size());
    for (std::size_t i = 0; i < src.size(); ++i) out[i] = in[src[i]];
    return out;
}

template <class T>
std::vector<T> scatter(const IndexMap& src, const std::vector<T>& out) {
    std::vector<T> in(src.size());
    for (std::size_t i = 0; i < src.size(); ++i) in[src[i]] = out[i];
    return in;
}

// φ_b on a length-2|b| vector.
IntVector perm_phi(const BitVector& b, const IntVector& v);
// ϕ_b on a length-3|b| vector.
IntVector perm_varphi(const TritVector& b, const IntVector& v);
// ψ_{b,e} on a length-6 vector.
IntVector perm_psi(int b, int e, const IntVector& v);
// Ψ_{b,e} on a length-6|b||e| vector.
IntVector perm_Psi(const BitVector& b, const TritVector& e, const IntVector& v);

}  // namespace tpbs
