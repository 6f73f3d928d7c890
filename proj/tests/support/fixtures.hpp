#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "tpbs/games/adversaries.hpp"
#include "tpbs/scheme/files.hpp"
#include "tpbs/scheme/scheme.hpp"
#include "tpbs/stern/simple_codec.hpp"

namespace tpbs::test {

BitVector bits(std::initializer_list<int> v);
TritVector trits(std::initializer_list<int> v);
IntVector ints(std::initializer_list<long long> v);

// Cached instances shared by all tests in one binary. The toy preset waives
// the Open inequality; the desk preset enforces it.
const SetupResult& toy_setup();
const SetupResult& desk_setup();

// Upper-tail p-value of Pearson's statistic with `observed.size() - 1` degrees of freedom.
double chi_square_p(const std::vector<double>& observed, const std::vector<double>& expected);

// p-value of the chi-square homogeneity test on a 2 × k table of counts.
double homogeneity_p(const std::vector<double>& a, const std::vector<double>& b);

struct Signer {
    BitVector id, p, msg, pcw;
    UserSigningKey usk;
};
// Random identity and single policy, with a conforming message.
Signer make_signer(const SetupResult& s, Rng& rng, bool nonzero_id = true);
Signer make_signer(const SetupResult& s, const BitVector& id, Rng& rng);

// A signer plus a fresh ovk and honest ciphertext of its id, with the full
// secret tuple ξ. Everything a signature's relation needs, minus the proof.
struct Honest {
    Signer signer;
    Bytes ovk;
    ZqMatrix G;
    IbeCiphertext ct;
    SecretTuple xi;
};
Honest honest_case(const SetupResult& s, const BitVector& id, Rng& rng);
Honest honest_case(const SetupResult& s, Rng& rng);

// A SimpleCodec statement with uniform M₁ (mod q1) and M₂ (mod 2), and a planted
// VALID witness. With `satisfied` false the witness solves neither equation.
struct ToyStatement {
    AbstractStatement stmt;
    TritVector w;
};
ToyStatement simple_statement(std::size_t trits, std::size_t bits, std::size_t rows1, std::size_t rows2,
                              std::uint64_t q1, Rng& rng, bool satisfied = true);

// Small commitment key for the toy statements.
const CommitmentKey& toy_commitment_key();

// Exhaustive checks of the encoding/permutation equivalences. Each case
// compares the permuted encoding with the encoding of the shifted input, the
// gather map with the direct permutation, and (for the "⇔" direction) that
// non-encodings stay non-encodings.
struct Tally {
    std::size_t cases = 0, failures = 0;
    void record(bool ok) {
        ++cases;
        if (!ok) ++failures;
    }
    bool clean() const { return cases > 0 && failures == 0; }
};
Tally check_phi_equivalence(std::size_t max_m);
Tally check_varphi_equivalence(std::size_t max_m);
Tally check_psi_equivalence();
Tally check_Psi_equivalence(std::size_t m1, std::size_t m2);
// The six file kinds for one setup, signer and signature, keyed by kind name.
struct FileSample {
    std::string kind;
    Bytes bytes;
};
std::vector<FileSample> sample_files(const SetupResult& s, const UserSigningKey& usk, const TpbsSignature& sig);
// decode then encode again; throws whatever the decoder throws.
Bytes reencode(const std::string& kind, ByteSpan bytes);

// Outcome of decoding mutated files: each case either decodes, is rejected
// with a library error, or escapes with anything else (a failure).
struct FuzzTally {
    std::size_t cases = 0, decoded = 0, rejected = 0, escaped = 0;
    std::string first_escape;
};
FuzzTally fuzz_files(const std::vector<FileSample>& files, std::size_t cases, Rng& rng);

// a = G_{m,B}·vdec_B(a) for every a ∈ [−B, B]^m, 2 ≤ B ≤ max_B.
Tally check_decomposition(std::size_t m, std::int64_t max_B);

}  // namespace tpbs::test
