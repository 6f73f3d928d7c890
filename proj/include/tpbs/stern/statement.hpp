#pragma once

#include <memory>
#include <vector>

#include "tpbs/core/serialize.hpp"
#include "tpbs/core/types.hpp"
#include "tpbs/gauss/rng.hpp"
#include "tpbs/stern/encoding.hpp"

namespace tpbs {

// One component of η: `length` entries, ternary ({−1,0,1}) or binary ({0,1}).
struct SeedPart {
    std::size_t length = 0;
    bool ternary = false;
};

struct PermSeed {
    std::vector<std::vector<std::int8_t>> parts;
    bool operator==(const PermSeed&) const = default;
};

// The set VALID together with its permutation family Γ_η.
// Implementations guarantee w ∈ VALID ⇔ Γ_η(w) ∈ VALID and that Γ_η(w) is
// uniform over VALID for uniform η.
class ValidCodec {
public:
    virtual ~ValidCodec() = default;

    virtual std::size_t l1() const = 0;
    virtual std::size_t l2() const = 0;
    std::size_t length() const { return l1() + l2(); }

    virtual std::vector<SeedPart> eta_shape() const = 0;
    virtual bool valid_check(const TritVector& w) const = 0;
    // Gather map of Γ_η; only called with well-formed η.
    virtual IndexMap gamma_map(const PermSeed& eta) const = 0;
    // Uniform element of VALID.
    virtual TritVector sample_valid(Rng& rng) const = 0;

    PermSeed sample_eta(Rng& rng) const;
    bool eta_well_formed(const PermSeed& eta) const;

    IntVector gamma(const PermSeed& eta, const IntVector& v) const;
    TritVector gamma(const PermSeed& eta, const TritVector& v) const;
    TritVector gamma_inverse(const PermSeed& eta, const TritVector& v) const;
};

// Length-L vector whose first l1 entries live mod q1 and the rest mod q2.
struct ResidueBlocks {
    std::uint64_t q1 = 0, q2 = 0;
    std::size_t l1 = 0;
    std::vector<Residue> entries;

    std::uint64_t modulus_at(std::size_t i) const { return i < l1 ? q1 : q2; }
    bool operator==(const ResidueBlocks&) const = default;
};

// M₁·w₁ = u₁ (mod q₁), M₂·w₂ = u₂ (mod q₂), (w₁‖w₂) ∈ VALID.
struct AbstractStatement {
    SparseZqMatrix M1;
    ZqVector u1;
    SparseZqMatrix M2;
    ZqVector u2;
    std::shared_ptr<const ValidCodec> codec;
    // Public input hashed into challenges. When empty, the canonical encoding of
    // (M₁, u₁, q₁, M₂, u₂, q₂) is used; callers whose own input determines the
    // matrices may set a cheaper encoding here.
    Bytes zeta;

    std::size_t l1() const { return M1.cols(); }
    std::size_t l2() const { return M2.cols(); }
    std::size_t length() const { return l1() + l2(); }
    std::uint64_t q1() const { return M1.modulus(); }
    std::uint64_t q2() const { return M2.modulus(); }

    // Throws DimensionError/RangeError on inconsistent shapes or moduli.
    void validate() const;
    Bytes binding() const;
    // Block-wise images (M₁·x₁ mod q₁, M₂·x₂ mod q₂).
    std::pair<ZqVector, ZqVector> images(const ResidueBlocks& x) const;
    bool shape_matches(const ResidueBlocks& x) const;
};

struct AbstractWitness {
    TritVector w;
};

// w ∈ VALID and both equations hold.
bool witness_satisfies(const AbstractStatement& stmt, const TritVector& w);

ResidueBlocks lift(const AbstractStatement& stmt, const TritVector& w);
ResidueBlocks uniform_blocks(const AbstractStatement& stmt, Rng& rng);
// Per-block modular addition a ⊞ b; shapes must agree.
ResidueBlocks block_add(const ResidueBlocks& a, const ResidueBlocks& b);
ResidueBlocks block_sub(const ResidueBlocks& a, const ResidueBlocks& b);
ResidueBlocks gather_blocks(const IndexMap& map, const ResidueBlocks& x);

// Canonical byte encodings used as commitment inputs and on the wire.
void write(ByteWriter& w, const PermSeed& eta);
PermSeed read_perm_seed(ByteReader& r);
void write(ByteWriter& w, const ResidueBlocks& x);
ResidueBlocks read_residue_blocks(ByteReader& r);

}  // namespace tpbs
