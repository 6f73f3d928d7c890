#pragma once

#include <optional>
#include <variant>

#include "tpbs/sigcrypt/commit.hpp"
#include "tpbs/sigcrypt/oracle.hpp"
#include "tpbs/stern/statement.hpp"

namespace tpbs {

struct Commitments {
    ZqVector c1, c2, c3;
    bool operator==(const Commitments&) const = default;
};

// Ch = 1: (t_w, t_r, ρ₂, ρ₃)
struct ResponseOne {
    TritVector t_w;
    ResidueBlocks t_r;
    BitVector rho2, rho3;
    bool operator==(const ResponseOne&) const = default;
};

// Ch = 2: (η₂, z₂ = w ⊞ r, ρ₁, ρ₃)
struct ResponseTwo {
    PermSeed eta;
    ResidueBlocks z;
    BitVector rho1, rho3;
    bool operator==(const ResponseTwo&) const = default;
};

// Ch = 3: (η₃, z₃ = r, ρ₁, ρ₂)
struct ResponseThree {
    PermSeed eta;
    ResidueBlocks z;
    BitVector rho1, rho2;
    bool operator==(const ResponseThree&) const = default;
};

using Response = std::variant<ResponseOne, ResponseTwo, ResponseThree>;

// Challenge value (1, 2 or 3) that a response answers.
int response_challenge(const Response& rsp);

// Single-use prover state for one round.
struct ProverState {
    TritVector w;
    PermSeed eta;
    ResidueBlocks r;
    BitVector rho1, rho2, rho3;
    Commitments cmt;
};

struct SternRoundTranscript {
    Commitments cmt;
    int ch = 0;
    Response rsp;
};

struct SternProof {
    std::vector<Commitments> cmt;
    Challenges ch;
    std::vector<Response> rsp;
    std::size_t kappa() const { return cmt.size(); }
    bool operator==(const SternProof&) const = default;
};

// Commits to η and the masked witness. Throws DimensionError if w has the wrong
// length and RangeError if it is outside VALID; the linear equations are not checked.
ProverState prover_commit(const AbstractStatement& stmt, const CommitmentKey& ck, const TritVector& w, Rng& rng);
Response prover_respond(const AbstractStatement& stmt, const ProverState& state, int ch);
// Never throws: malformed responses are rejected.
bool verify_round(const AbstractStatement& stmt, const CommitmentKey& ck, const Commitments& cmt, int ch,
                  const Response& rsp);

// Bytes of all κ commitment triples, as fed to H₂.
Bytes commitment_bytes(const std::vector<Commitments>& cmt);

SternProof fs_prove(const AbstractStatement& stmt, const CommitmentKey& ck, const TritVector& w, std::size_t kappa,
                    Rng& rng, ChallengeOracle& oracle);
SternProof fs_prove(const AbstractStatement& stmt, const CommitmentKey& ck, const TritVector& w, std::size_t kappa,
                    Rng& rng);
bool fs_verify(const AbstractStatement& stmt, const CommitmentKey& ck, const SternProof& proof,
               ChallengeOracle& oracle);
bool fs_verify(const AbstractStatement& stmt, const CommitmentKey& ck, const SternProof& proof);

// Oracle whose answers can be fixed in advance. program() fails when the point
// has already been answered.
class ProgrammableChallengeOracle : public ChallengeOracle {
public:
    virtual bool program(ByteSpan point, const Challenges& ch) = 0;
};

constexpr int kSimProgramAttempts = 16;

// Witness-free proof: challenges are chosen first, commitments are built to
// pass them, and the oracle is programmed at the resulting point. Throws
// LinearAlgebraError when the equations have no solution.
SternProof sim_prove(const AbstractStatement& stmt, const CommitmentKey& ck, std::size_t kappa, Rng& rng,
                     ProgrammableChallengeOracle& oracle);

// Which challenge branches sim_prove used; exposed for coverage checks.
struct SimBranchCounts {
    std::size_t ch[3] = {0, 0, 0};
};
SternProof sim_prove(const AbstractStatement& stmt, const CommitmentKey& ck, std::size_t kappa, Rng& rng,
                     ProgrammableChallengeOracle& oracle, SimBranchCounts& counts);

enum class ExtractStatus { ok, transcript_rejected, binding_violation, witness_invalid };

struct ExtractResult {
    ExtractStatus status = ExtractStatus::transcript_rejected;
    TritVector w;
};

// Witness from one commitment answered under all three challenges.
ExtractResult extract(const AbstractStatement& stmt, const CommitmentKey& ck, const Commitments& cmt,
                      const ResponseOne& r1, const ResponseTwo& r2, const ResponseThree& r3);

const char* to_string(ExtractStatus s);

void write(ByteWriter& w, const SternProof& proof);
SternProof read_stern_proof(ByteReader& r);

}  // namespace tpbs
