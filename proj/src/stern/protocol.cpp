#include "tpbs/stern/protocol.hpp"

#include <exception>

#include "tpbs/core/errors.hpp"
#include "tpbs/core/linalg.hpp"

namespace tpbs {

namespace {

Bytes c1_input(const PermSeed& eta, const ZqVector& y1, const ZqVector& y2) {
    ByteWriter w;
    write(w, eta);
    write(w, y1);
    write(w, y2);
    return w.take();
}

Bytes blocks_input(const ResidueBlocks& x) {
    ByteWriter w;
    write(w, x);
    return w.take();
}

BitVector random_bits(std::size_t len, Rng& rng) {
    BitVector out(len);
    for (std::size_t i = 0; i < len; ++i) out.set(i, rng.bit());
    return out;
}

// Commitments for mask r and masked value z = w ⊞ r under η.
Commitments commit_triple(const AbstractStatement& stmt, const CommitmentKey& ck, const PermSeed& eta,
                          const ResidueBlocks& r, const ResidueBlocks& masked, const BitVector& rho1,
                          const BitVector& rho2, const BitVector& rho3) {
    const IndexMap map = stmt.codec->gamma_map(eta);
    const auto [y1, y2] = stmt.images(r);
    return {ck.commit(c1_input(eta, y1, y2), rho1), ck.commit(blocks_input(gather_blocks(map, r)), rho2),
            ck.commit(blocks_input(gather_blocks(map, masked)), rho3)};
}

bool verify_one(const AbstractStatement& stmt, const CommitmentKey& ck, const Commitments& cmt,
                const ResponseOne& rsp) {
    if (rsp.t_w.size() != stmt.length() || !stmt.shape_matches(rsp.t_r)) return false;
    if (!stmt.codec->valid_check(rsp.t_w)) return false;
    if (ck.commit(blocks_input(rsp.t_r), rsp.rho2) != cmt.c2) return false;
    return ck.commit(blocks_input(block_add(lift(stmt, rsp.t_w), rsp.t_r)), rsp.rho3) == cmt.c3;
}

bool verify_two(const AbstractStatement& stmt, const CommitmentKey& ck, const Commitments& cmt,
                const ResponseTwo& rsp) {
    if (!stmt.codec->eta_well_formed(rsp.eta) || !stmt.shape_matches(rsp.z)) return false;
    const auto [y1, y2] = stmt.images(rsp.z);
    if (ck.commit(c1_input(rsp.eta, vec_sub(y1, stmt.u1), vec_sub(y2, stmt.u2)), rsp.rho1) != cmt.c1) return false;
    return ck.commit(blocks_input(gather_blocks(stmt.codec->gamma_map(rsp.eta), rsp.z)), rsp.rho3) == cmt.c3;
}

bool verify_three(const AbstractStatement& stmt, const CommitmentKey& ck, const Commitments& cmt,
                  const ResponseThree& rsp) {
    if (!stmt.codec->eta_well_formed(rsp.eta) || !stmt.shape_matches(rsp.z)) return false;
    const auto [y1, y2] = stmt.images(rsp.z);
    if (ck.commit(c1_input(rsp.eta, y1, y2), rsp.rho1) != cmt.c1) return false;
    return ck.commit(blocks_input(gather_blocks(stmt.codec->gamma_map(rsp.eta), rsp.z)), rsp.rho2) == cmt.c2;
}

Challenges derive_challenges(const AbstractStatement& stmt, const std::vector<Commitments>& cmt,
                             ChallengeOracle& oracle) {
    const Bytes point = challenge_point(stmt.binding(), commitment_bytes(cmt));
    return oracle.query(point, cmt.size());
}

// Runs body(i) for i < count in parallel and rethrows the first exception.
template <class F>
void parallel_rounds(std::size_t count, F&& body) {
    std::exception_ptr error;
#pragma omp parallel for schedule(dynamic)
    for (std::size_t i = 0; i < count; ++i) {
        try {
            body(i);
        } catch (...) {
#pragma omp critical(tpbs_round_error)
            if (!error) error = std::current_exception();
        }
    }
    if (error) std::rethrow_exception(error);
}

std::vector<Rng> fork_all(Rng& rng, std::size_t count) {
    std::vector<Rng> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) out.push_back(rng.fork());
    return out;
}

}  // namespace

int response_challenge(const Response& rsp) { return static_cast<int>(rsp.index()) + 1; }

ProverState prover_commit(const AbstractStatement& stmt, const CommitmentKey& ck, const TritVector& w, Rng& rng) {
    if (w.size() != stmt.length()) throw DimensionError("witness length differs from L");
    if (!stmt.codec->valid_check(w)) throw RangeError("witness is not in VALID");
    ProverState st;
    st.w = w;
    st.eta = stmt.codec->sample_eta(rng);
    st.r = uniform_blocks(stmt, rng);
    const std::size_t mc = ck.randomness_length();
    st.rho1 = random_bits(mc, rng);
    st.rho2 = random_bits(mc, rng);
    st.rho3 = random_bits(mc, rng);
    st.cmt = commit_triple(stmt, ck, st.eta, st.r, block_add(lift(stmt, w), st.r), st.rho1, st.rho2, st.rho3);
    return st;
}

Response prover_respond(const AbstractStatement& stmt, const ProverState& st, int ch) {
    switch (ch) {
        case 1: {
            const IndexMap map = stmt.codec->gamma_map(st.eta);
            return ResponseOne{TritVector(gather(map, st.w.trits())), gather_blocks(map, st.r), st.rho2, st.rho3};
        }
        case 2:
            return ResponseTwo{st.eta, block_add(lift(stmt, st.w), st.r), st.rho1, st.rho3};
        case 3:
            return ResponseThree{st.eta, st.r, st.rho1, st.rho2};
        default:
            throw RangeError("challenge must be 1, 2 or 3");
    }
}

bool verify_round(const AbstractStatement& stmt, const CommitmentKey& ck, const Commitments& cmt, int ch,
                  const Response& rsp) {
    if (ch < 1 || ch > 3 || response_challenge(rsp) != ch) return false;
    try {
        switch (ch) {
            case 1: return verify_one(stmt, ck, cmt, std::get<ResponseOne>(rsp));
            case 2: return verify_two(stmt, ck, cmt, std::get<ResponseTwo>(rsp));
            default: return verify_three(stmt, ck, cmt, std::get<ResponseThree>(rsp));
        }
    } catch (const std::exception&) {
        return false;
    }
}

Bytes commitment_bytes(const std::vector<Commitments>& cmt) {
    ByteWriter w;
    w.u64(cmt.size());
    for (const auto& c : cmt) {
        write(w, c.c1);
        write(w, c.c2);
        write(w, c.c3);
    }
    return w.take();
}

SternProof fs_prove(const AbstractStatement& stmt, const CommitmentKey& ck, const TritVector& w, std::size_t kappa,
                    Rng& rng, ChallengeOracle& oracle) {
    stmt.validate();
    if (kappa == 0) throw RangeError("kappa must be positive");
    if (w.size() != stmt.length()) throw DimensionError("witness length differs from L");
    if (!stmt.codec->valid_check(w)) throw RangeError("witness is not in VALID");
    std::vector<Rng> rngs = fork_all(rng, kappa);
    std::vector<ProverState> states(kappa);
    parallel_rounds(kappa, [&](std::size_t i) { states[i] = prover_commit(stmt, ck, w, rngs[i]); });

    SternProof proof;
    for (const auto& st : states) proof.cmt.push_back(st.cmt);
    proof.ch = derive_challenges(stmt, proof.cmt, oracle);
    for (std::size_t i = 0; i < kappa; ++i) proof.rsp.push_back(prover_respond(stmt, states[i], proof.ch[i]));
    return proof;
}

SternProof fs_prove(const AbstractStatement& stmt, const CommitmentKey& ck, const TritVector& w, std::size_t kappa,
                    Rng& rng) {
    HashOracle oracle;
    return fs_prove(stmt, ck, w, kappa, rng, oracle);
}

bool fs_verify(const AbstractStatement& stmt, const CommitmentKey& ck, const SternProof& proof,
               ChallengeOracle& oracle) {
    const std::size_t kappa = proof.kappa();
    if (kappa == 0 || proof.ch.size() != kappa || proof.rsp.size() != kappa) return false;
    try {
        stmt.validate();
        if (derive_challenges(stmt, proof.cmt, oracle) != proof.ch) return false;
    } catch (const std::exception&) {
        return false;
    }
    std::vector<std::uint8_t> ok(kappa, 0);
#pragma omp parallel for schedule(dynamic)
    for (std::size_t i = 0; i < kappa; ++i)
        ok[i] = verify_round(stmt, ck, proof.cmt[i], proof.ch[i], proof.rsp[i]) ? 1 : 0;
    for (auto v : ok)
        if (!v) return false;
    return true;
}

bool fs_verify(const AbstractStatement& stmt, const CommitmentKey& ck, const SternProof& proof) {
    HashOracle oracle;
    return fs_verify(stmt, ck, proof, oracle);
}

SternProof sim_prove(const AbstractStatement& stmt, const CommitmentKey& ck, std::size_t kappa, Rng& rng,
                     ProgrammableChallengeOracle& oracle) {
    SimBranchCounts counts;
    return sim_prove(stmt, ck, kappa, rng, oracle, counts);
}

SternProof sim_prove(const AbstractStatement& stmt, const CommitmentKey& ck, std::size_t kappa, Rng& rng,
                     ProgrammableChallengeOracle& oracle, SimBranchCounts& counts) {
    stmt.validate();
    if (kappa == 0) throw RangeError("kappa must be positive");
    // Any solution of the two equations, without VALID structure.
    const auto x1 = solve_sparse_mod(stmt.M1, stmt.u1.entries());
    const auto x2 = solve_sparse_mod(stmt.M2, stmt.u2.entries());
    if (!x1 || !x2) throw LinearAlgebraError("sim_prove: statement equations have no solution");
    ResidueBlocks solution{stmt.q1(), stmt.q2(), stmt.l1(), *x1};
    solution.entries.insert(solution.entries.end(), x2->begin(), x2->end());

    const Bytes binding = stmt.binding();
    const std::size_t mc = ck.randomness_length();
    for (int attempt = 0; attempt < kSimProgramAttempts; ++attempt) {
        Challenges ch(kappa);
        for (auto& c : ch) c = static_cast<std::uint8_t>(rng.uniform(3) + 1);
        std::vector<Rng> rngs = fork_all(rng, kappa);
        SternProof proof;
        proof.cmt.resize(kappa);
        proof.rsp.resize(kappa);
        parallel_rounds(kappa, [&](std::size_t i) {
            Rng& g = rngs[i];
            const PermSeed eta = stmt.codec->sample_eta(g);
            const ResidueBlocks r = uniform_blocks(stmt, g);
            const BitVector rho1 = random_bits(mc, g), rho2 = random_bits(mc, g), rho3 = random_bits(mc, g);
            const IndexMap map = stmt.codec->gamma_map(eta);
            const auto [y1, y2] = stmt.images(r);
            Commitments& c = proof.cmt[i];
            if (ch[i] == 3) {
                c = {ck.commit(c1_input(eta, y1, y2), rho1), ck.commit(blocks_input(gather_blocks(map, r)), rho2),
                     ck.commit(blocks_input(gather_blocks(map, block_add(solution, r))), rho3)};
                proof.rsp[i] = ResponseThree{eta, r, rho1, rho2};
                return;
            }
            const TritVector w = stmt.codec->sample_valid(g);
            const ResidueBlocks z = block_add(lift(stmt, w), r);
            if (ch[i] == 1) {
                c = {ck.commit(c1_input(eta, y1, y2), rho1), ck.commit(blocks_input(gather_blocks(map, r)), rho2),
                     ck.commit(blocks_input(gather_blocks(map, z)), rho3)};
                proof.rsp[i] = ResponseOne{TritVector(gather(map, w.trits())), gather_blocks(map, r), rho2, rho3};
            } else {
                const auto [z1, z2] = stmt.images(z);
                c = {ck.commit(c1_input(eta, vec_sub(z1, stmt.u1), vec_sub(z2, stmt.u2)), rho1),
                     ck.commit(blocks_input(gather_blocks(map, r)), rho2),
                     ck.commit(blocks_input(gather_blocks(map, z)), rho3)};
                proof.rsp[i] = ResponseTwo{eta, z, rho1, rho3};
            }
        });
        const Bytes point = challenge_point(binding, commitment_bytes(proof.cmt));
        if (!oracle.program(point, ch)) continue;
        proof.ch = ch;
        for (auto c : ch) ++counts.ch[c - 1];
        return proof;
    }
    throw Error("sim_prove: oracle refused every programming attempt");
}

ExtractResult extract(const AbstractStatement& stmt, const CommitmentKey& ck, const Commitments& cmt,
                      const ResponseOne& r1, const ResponseTwo& r2, const ResponseThree& r3) {
    ExtractResult out;
    if (!verify_round(stmt, ck, cmt, 1, r1) || !verify_round(stmt, ck, cmt, 2, r2) ||
        !verify_round(stmt, ck, cmt, 3, r3))
        return out;
    // With binding commitments the openings must agree.
    if (r2.eta != r3.eta || gather_blocks(stmt.codec->gamma_map(r3.eta), r3.z) != r1.t_r ||
        block_add(lift(stmt, r1.t_w), r1.t_r) != gather_blocks(stmt.codec->gamma_map(r2.eta), r2.z)) {
        out.status = ExtractStatus::binding_violation;
        return out;
    }
    out.w = stmt.codec->gamma_inverse(r2.eta, r1.t_w);
    out.status = witness_satisfies(stmt, out.w) ? ExtractStatus::ok : ExtractStatus::witness_invalid;
    return out;
}

const char* to_string(ExtractStatus s) {
    switch (s) {
        case ExtractStatus::ok: return "ok";
        case ExtractStatus::transcript_rejected: return "transcript rejected";
        case ExtractStatus::binding_violation: return "commitment binding violated";
        case ExtractStatus::witness_invalid: return "extracted witness invalid";
    }
    return "unknown";
}

namespace {

constexpr std::uint8_t kProofVersion = 1;

Bytes response_bytes(const Response& rsp) {
    ByteWriter w;
    w.u8(static_cast<std::uint8_t>(response_challenge(rsp)));
    std::visit(
        [&](const auto& r) {
            using T = std::decay_t<decltype(r)>;
            if constexpr (std::is_same_v<T, ResponseOne>) {
                write(w, r.t_w);
                write(w, r.t_r);
                write(w, r.rho2);
                write(w, r.rho3);
            } else if constexpr (std::is_same_v<T, ResponseTwo>) {
                write(w, r.eta);
                write(w, r.z);
                write(w, r.rho1);
                write(w, r.rho3);
            } else {
                write(w, r.eta);
                write(w, r.z);
                write(w, r.rho1);
                write(w, r.rho2);
            }
        },
        rsp);
    return w.take();
}

Response parse_response(ByteSpan bytes) {
    ByteReader r(bytes);
    const int tag = r.u8();
    Response out;
    if (tag == 1) {
        ResponseOne x;
        x.t_w = read_trit_vector(r);
        x.t_r = read_residue_blocks(r);
        x.rho2 = read_bit_vector(r);
        x.rho3 = read_bit_vector(r);
        out = std::move(x);
    } else if (tag == 2) {
        ResponseTwo x;
        x.eta = read_perm_seed(r);
        x.z = read_residue_blocks(r);
        x.rho1 = read_bit_vector(r);
        x.rho3 = read_bit_vector(r);
        out = std::move(x);
    } else if (tag == 3) {
        ResponseThree x;
        x.eta = read_perm_seed(r);
        x.z = read_residue_blocks(r);
        x.rho1 = read_bit_vector(r);
        x.rho2 = read_bit_vector(r);
        out = std::move(x);
    } else {
        throw DecodeError("unknown response tag");
    }
    r.expect_end();
    return out;
}

}  // namespace

void write(ByteWriter& w, const SternProof& proof) {
    if (proof.ch.size() != proof.kappa() || proof.rsp.size() != proof.kappa())
        throw DimensionError("proof has inconsistent round counts");
    w.u8(kProofVersion);
    w.u64(proof.kappa());
    for (const auto& c : proof.cmt) {
        write(w, c.c1);
        write(w, c.c2);
        write(w, c.c3);
    }
    Bytes packed((proof.kappa() + 3) / 4, 0);
    for (std::size_t i = 0; i < proof.kappa(); ++i) {
        if (proof.ch[i] < 1 || proof.ch[i] > 3) throw RangeError("challenge symbol outside {1,2,3}");
        packed[i / 4] |= static_cast<std::uint8_t>(proof.ch[i] << (2 * (i % 4)));
    }
    w.bytes(packed);
    for (const auto& rsp : proof.rsp) w.blob(response_bytes(rsp));
}

SternProof read_stern_proof(ByteReader& r) {
    if (r.u8() != kProofVersion) throw DecodeError("unsupported proof version");
    const std::size_t kappa = r.count(3);
    if (kappa == 0) throw DecodeError("proof has no rounds");
    SternProof proof;
    for (std::size_t i = 0; i < kappa; ++i) {
        Commitments c;
        c.c1 = read_zq_vector(r);
        c.c2 = read_zq_vector(r);
        c.c3 = read_zq_vector(r);
        proof.cmt.push_back(std::move(c));
    }
    const ByteSpan packed = r.bytes((kappa + 3) / 4);
    for (std::size_t i = 0; i < 4 * packed.size(); ++i) {
        const int code = (packed[i / 4] >> (2 * (i % 4))) & 3;
        if (i >= kappa) {
            if (code != 0) throw DecodeError("nonzero padding in challenge string");
            continue;
        }
        if (code == 0) throw DecodeError("challenge symbol outside {1,2,3}");
        proof.ch.push_back(static_cast<std::uint8_t>(code));
    }
    for (std::size_t i = 0; i < kappa; ++i) proof.rsp.push_back(parse_response(r.blob()));
    return proof;
}

}  // namespace tpbs
