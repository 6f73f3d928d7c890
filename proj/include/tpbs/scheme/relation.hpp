#pragma once

#include "tpbs/core/errors.hpp"
#include "tpbs/scheme/types.hpp"

namespace tpbs {

// Lines of the prover's goal.
enum class RelationLine { certificate, ciphertext1, ciphertext2, policy, norms, shape };
const char* to_string(RelationLine line);

class RelationError : public Error {
public:
    RelationError(RelationLine line, const std::string& what) : Error(what), line_(line) {}
    RelationLine line() const { return line_; }

private:
    RelationLine line_;
};

// First violated line of the relation for ξ, or nullopt when all hold.
std::optional<RelationError> check_secret_tuple(const PublicParams& pp, const ZqMatrix& G, const IbeCiphertext& ct,
                                                const BitVector& msg, const SecretTuple& xi);

// ζ = (A, A₀…A_ℓ, u, B, G, c₁, c₂, G₁, G₂, msg)
Bytes public_input_bytes(const PublicParams& pp, const ZqMatrix& G, const IbeCiphertext& ct, const BitVector& msg);

// Rows of M₁ that depend only on pp (the u and c₁ equations).
SparseZqMatrix build_fixed_rows(const PublicParams& pp);

struct StatementWitness {
    AbstractStatement stmt;
    std::optional<TritVector> w;
};

// Builds (M₁, u₁ = (u‖c₁‖c₂), M₂, u₂ = msg) for the signature's public input and,
// when ξ is given, the extended witness. Throws RelationError when ξ violates the relation.
StatementWitness build_statement_witness(const PublicParams& pp, ByteSpan ovk, const IbeCiphertext& ct,
                                         const BitVector& msg, const SecretTuple* xi);

TpbsWitnessParts witness_parts(const PublicParams& pp, const SecretTuple& xi);

// (id, p, pcw, v, s, e₁, e₂) from a VALID vector. Throws RangeError on inconsistent blocks.
SecretTuple decode_witness(const PublicParams& pp, const TritVector& w);

}  // namespace tpbs
