#include "tpbs/scheme/simulation.hpp"

#include <array>

#include "tpbs/core/errors.hpp"
#include "tpbs/sigcrypt/ots.hpp"

namespace tpbs {

ReplayOracle::ReplayOracle(std::vector<Challenges> prefix, Source fresh)
    : prefix_(std::move(prefix)), fresh_(std::move(fresh)) {}

Challenges ReplayOracle::query(ByteSpan point, std::size_t kappa) {
    Bytes key(point.begin(), point.end());
    if (auto it = programmed_.find(key); it != programmed_.end()) return it->second;
    if (auto it = answered_.find(key); it != answered_.end()) return it->second;
    const std::size_t idx = log_.size();
    Challenges ch = idx < prefix_.size() ? prefix_[idx] : fresh_(point, kappa);
    answered_.emplace(key, ch);
    log_.push_back({std::move(key), ch});
    return ch;
}

bool ReplayOracle::program(ByteSpan point, const Challenges& ch) {
    Bytes key(point.begin(), point.end());
    if (answered_.count(key) || programmed_.count(key)) {
        ++aborts_;
        return false;
    }
    programmed_.emplace(std::move(key), ch);
    return true;
}

ReplayOracle::Source seeded_source(const Seed& seed) {
    return [seed](ByteSpan point, std::size_t kappa) {
        Bytes input(seed.begin(), seed.end());
        input.insert(input.end(), point.begin(), point.end());
        return h2(input, kappa);
    };
}

ReplayOracle::Source random_source(Rng& rng) {
    return [&rng](ByteSpan, std::size_t kappa) {
        Challenges ch(kappa);
        for (auto& c : ch) c = static_cast<std::uint8_t>(rng.uniform(3) + 1);
        return ch;
    };
}

SetupResult sim_setup(Params params, Rng& rng, const SetupOptions& opt) {
    // In the random-oracle model the simulation trapdoor is the ability to
    // program H₂, which experiments hold through their oracle.
    return setup(std::move(params), rng, opt);
}

UserSigningKey sim_keygen(const SetupResult& tr, const BitVector& id, const std::vector<BitVector>& policies,
                          Rng& rng) {
    return keygen(tr.pp, tr.msk, id, policies, rng);
}

TpbsSignature sim_sign(const PublicParams& pp, const BitVector& msg, Rng& rng, ProgrammableChallengeOracle& oracle) {
    const Params& P = pp.params;
    const auto n = static_cast<std::size_t>(P.n), l1 = static_cast<std::size_t>(P.l1);
    const OtsKeyPair ots = ots_gen(rng);
    const ZqMatrix G = h1(ots.ovk, n, l1, P.q);
    const IbeCiphertext ct =
        ibe_encrypt(pp.B, G, BitVector(l1), P.noise_bound, rng);
    const StatementWitness sw = build_statement_witness(pp, ots.ovk, ct, msg, nullptr);
    TpbsSignature sig;
    sig.ovk = ots.ovk;
    sig.c1 = ct.c1;
    sig.c2 = ct.c2;
    sig.pi = sim_prove(sw.stmt, pp.commitment_key(), static_cast<std::size_t>(P.kappa), rng, oracle);
    sig.sig = ots_sign(ots.osk, ots_message(sig.c1, sig.c2, sig.pi));
    return sig;
}

ExtrResult extr(const PublicParams& pp, const ReplayRun& run, const std::vector<ReplayOracle::Entry>& original_log,
                const BitVector& msg, const TpbsSignature& sig, Rng& rng, std::size_t budget) {
    ExtrResult out;
    const std::size_t kappa = sig.pi.kappa();
    if (budget == 0) budget = kExtrReplaysPerRound * kappa;
    StatementWitness sw;
    try {
        sw = build_statement_witness(pp, sig.ovk, {sig.c1, sig.c2}, msg, nullptr);
    } catch (const std::exception& e) {
        out.failure = std::string("statement: ") + e.what();
        return out;
    }
    const Bytes point = challenge_point(sw.stmt.binding(), commitment_bytes(sig.pi.cmt));
    std::size_t fork = original_log.size();
    for (std::size_t i = 0; i < original_log.size(); ++i)
        if (original_log[i].point == point) {
            fork = i;
            break;
        }
    if (fork == original_log.size() || original_log[fork].answer != sig.pi.ch) {
        out.failure = "signature challenges were not obtained from an H2 query";
        return out;
    }
    std::vector<Challenges> prefix;
    for (std::size_t i = 0; i < fork; ++i) prefix.push_back(original_log[i].answer);

    const CommitmentKey& ck = pp.commitment_key();
    // seen[i][c-1] holds round i's response to challenge c.
    std::vector<std::array<std::optional<Response>, 3>> seen(kappa);
    auto absorb = [&](const SternProof& pi) -> std::optional<std::size_t> {
        for (std::size_t i = 0; i < kappa; ++i) {
            if (verify_round(sw.stmt, ck, pi.cmt[i], pi.ch[i], pi.rsp[i])) seen[i][pi.ch[i] - 1] = pi.rsp[i];
            if (seen[i][0] && seen[i][1] && seen[i][2]) return i;
        }
        return std::nullopt;
    };

    std::optional<std::size_t> round = absorb(sig.pi);
    while (!round && out.replays < budget) {
        ++out.replays;
        ReplayOracle oracle(prefix, random_source(rng));
        const auto result = run(oracle);
        if (!result || result->first != msg) continue;
        const TpbsSignature& s2 = result->second;
        if (s2.ovk != sig.ovk || s2.c1 != sig.c1 || s2.c2 != sig.c2 || s2.pi.cmt != sig.pi.cmt) continue;
        if (s2.pi.ch.size() != kappa || s2.pi.rsp.size() != kappa) continue;
        round = absorb(s2.pi);
    }
    if (!round) {
        out.failure = "no round answered under all three challenges within the replay budget";
        return out;
    }
    const auto& r = seen[*round];
    const ExtractResult ex = extract(sw.stmt, ck, sig.pi.cmt[*round], std::get<ResponseOne>(*r[0]),
                                     std::get<ResponseTwo>(*r[1]), std::get<ResponseThree>(*r[2]));
    if (ex.status != ExtractStatus::ok) {
        out.failure = to_string(ex.status);
        return out;
    }
    out.xi = decode_witness(pp, ex.w);
    out.found = true;
    return out;
}

}  // namespace tpbs
