// Acceptance run: one PASS/FAIL line per criterion. Pass criterion numbers as
// arguments to run a subset. Exit status is 1 if any selected criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "tpbs/core/linalg.hpp"
#include "tpbs/core/params.hpp"
#include "tpbs/games/batch.hpp"
#include "tpbs/scheme/relation.hpp"
#include "tpbs/stern/protocol.hpp"
#include "tpbs/stern/statement.hpp"
#include "tpbs/trapdoor/trapdoor.hpp"

using namespace tpbs;

namespace {

struct Verdict {
    bool pass = false;
    std::string detail;
};

template <class... T>
std::string cat(const T&... parts) {
    std::ostringstream os;
    os.precision(4);
    (os << ... << parts);
    return os.str();
}

// Noise measurements from every Open in criteria 1 and 2.
struct NoiseRecord {
    std::int64_t noise, bound, threshold;
};
std::vector<NoiseRecord> g_noise;
std::optional<Verdict> g_c1, g_c2;

// sign → verify → open for one signer; reports why it failed, or empty.
std::string lifecycle(const SetupResult& s, const test::Signer& signer, Rng& rng) {
    const auto sig = sign(s.pp, signer.usk, signer.msg, signer.pcw, rng);
    if (!sig.ok()) return "sign refused: " + sig.refusal;
    if (!verify(s.pp, signer.msg, *sig.value)) return "verify rejected";
    const auto op = open(s.pp, s.mdk, signer.msg, *sig.value, rng);
    if (!op.ok()) return "open refused: " + op.refusal;
    g_noise.push_back({op.value->noise, op.value->noise_bound, s.pp.params.open_threshold()});
    if (op.value->id != signer.id) return "open returned id " + bits_to_hex(op.value->id);
    return {};
}

Verdict c1_correctness() {
    if (g_c1) return *g_c1;
    const SetupResult& s = test::desk_setup();
    Rng rng(seed_from_u64(0xa001));
    int ok = 0;
    std::string first;
    for (int i = 0; i < 100; ++i) {
        const test::Signer signer = test::make_signer(s, rng, false);
        const std::string why = lifecycle(s, signer, rng);
        if (why.empty())
            ++ok;
        else if (first.empty())
            first = cat("; trial ", i, ": ", why);
    }
    g_c1 = Verdict{ok == 100, cat(ok, "/100 desk triples open to the signer id (kappa=", s.pp.params.kappa, ")", first)};
    return *g_c1;
}

Verdict c2_all_ids() {
    if (g_c2) return *g_c2;
    const SetupResult& s = test::desk_setup();
    Rng rng(seed_from_u64(0xa002));
    const auto l1 = static_cast<std::size_t>(s.pp.params.l1);
    int ok = 0;
    std::string first;
    for (std::uint64_t v = 0; v < (1u << l1); ++v) {
        BitVector id(l1);
        for (std::size_t b = 0; b < l1; ++b) id.set(b, (v >> (l1 - 1 - b)) & 1);
        const std::string why = lifecycle(s, test::make_signer(s, id, rng), rng);
        if (why.empty())
            ++ok;
        else if (first.empty())
            first = cat("; id ", bits_to_hex(id), ": ", why);
    }
    g_c2 = Verdict{ok == (1 << l1), cat(ok, "/", 1 << l1, " identities roundtrip", first)};
    return *g_c2;
}

int random_challenge(Rng& rng) { return static_cast<int>(rng.uniform(3)) + 1; }

Verdict c3_completeness() {
    const SetupResult& s = test::desk_setup();
    const CommitmentKey& ck = s.pp.commitment_key();
    Rng rng(seed_from_u64(0xa003));
    int accepted = 0, rounds = 0, asked[4] = {0, 0, 0, 0};
    for (int inst = 0; inst < 10; ++inst) {
        const test::Honest h = test::honest_case(s, rng);
        const StatementWitness sw = build_statement_witness(s.pp, h.ovk, h.ct, h.signer.msg, &h.xi);
        for (int i = 0; i < 100; ++i, ++rounds) {
            const ProverState st = prover_commit(sw.stmt, ck, *sw.w, rng);
            const int ch = random_challenge(rng);
            ++asked[ch];
            if (verify_round(sw.stmt, ck, st.cmt, ch, prover_respond(sw.stmt, st, ch))) ++accepted;
        }
    }
    return {accepted == rounds && asked[1] && asked[2] && asked[3],
            cat(accepted, "/", rounds, " honest desk rounds accepted (challenges ", asked[1], "/", asked[2], "/",
                asked[3], ")")};
}

Verdict c4_soundness() {
    const SetupResult& s = test::toy_setup();
    const CommitmentKey& ck = s.pp.commitment_key();
    Rng rng(seed_from_u64(0xa004));
    const test::Honest h = test::honest_case(s, rng);
    const AbstractStatement stmt = build_statement_witness(s.pp, h.ovk, h.ct, h.signer.msg, nullptr).stmt;
    TritVector cheat = stmt.codec->sample_valid(rng);
    while (witness_satisfies(stmt, cheat)) cheat = stmt.codec->sample_valid(rng);

    const int N = 3000;
    int accepted = 0, by_ch[4] = {0, 0, 0, 0};
    for (int i = 0; i < N; ++i) {
        const ProverState st = prover_commit(stmt, ck, cheat, rng);
        const int ch = random_challenge(rng);
        if (verify_round(stmt, ck, st.cmt, ch, prover_respond(stmt, st, ch))) {
            ++accepted;
            ++by_ch[ch];
        }
    }
    const double rate = static_cast<double>(accepted) / N;

    const int F = 2000, kappa = 8;
    int fs_accepted = 0;
    for (int i = 0; i < F; ++i)
        if (fs_verify(stmt, ck, fs_prove(stmt, ck, cheat, kappa, rng))) ++fs_accepted;
    const double fs_rate = static_cast<double>(fs_accepted) / F;

    return {std::abs(rate - 2.0 / 3.0) <= 0.03 && fs_rate <= 0.05,
            cat("interactive ", accepted, "/", N, " = ", rate, " (by challenge ", by_ch[1], "/", by_ch[2], "/",
                by_ch[3], "); FS kappa=8 ", fs_accepted, "/", F, " = ", fs_rate, " (expected ",
                std::pow(2.0 / 3.0, kappa), ")")};
}

Verdict c5_extraction() {
    const SetupResult& s = test::desk_setup();
    const PublicParams& pp = s.pp;
    const CommitmentKey& ck = pp.commitment_key();
    Rng rng(seed_from_u64(0xa005));
    int ok = 0;
    std::string first;
    for (int i = 0; i < 100; ++i) {
        const test::Honest h = test::honest_case(s, rng);
        const StatementWitness sw = build_statement_witness(pp, h.ovk, h.ct, h.signer.msg, &h.xi);
        const ProverState st = prover_commit(sw.stmt, ck, *sw.w, rng);
        const auto r1 = std::get<ResponseOne>(prover_respond(sw.stmt, st, 1));
        const auto r2 = std::get<ResponseTwo>(prover_respond(sw.stmt, st, 2));
        const auto r3 = std::get<ResponseThree>(prover_respond(sw.stmt, st, 3));
        const ExtractResult ex = extract(sw.stmt, ck, st.cmt, r1, r2, r3);
        std::string why;
        if (ex.status != ExtractStatus::ok) {
            why = std::string("extract: ") + to_string(ex.status);
        } else {
            const SecretTuple xi = decode_witness(pp, ex.w);
            if (const auto bad = check_secret_tuple(pp, h.G, h.ct, h.signer.msg, xi))
                why = std::string("relation line ") + to_string(bad->line());
            else if (xi.id != h.xi.id || xi.p != h.xi.p || xi.pcw != h.xi.pcw)
                why = "decoded tuple differs from the signer's";
        }
        if (why.empty())
            ++ok;
        else if (first.empty())
            first = cat("; pair ", i, ": ", why);
    }
    return {ok == 100, cat(ok, "/100 extracted desk witnesses satisfy every relation line", first)};
}

Verdict c6_equivalences() {
    const test::Tally phi = test::check_phi_equivalence(4);
    const test::Tally varphi = test::check_varphi_equivalence(3);
    const test::Tally psi = test::check_psi_equivalence();
    test::Tally Psi;
    for (const auto& [m1, m2] : std::vector<std::pair<int, int>>{{1, 1}, {1, 2}, {2, 1}, {2, 2}, {3, 2}, {2, 3}}) {
        const test::Tally t = test::check_Psi_equivalence(m1, m2);
        Psi.cases += t.cases;
        Psi.failures += t.failures;
    }
    return {phi.clean() && varphi.clean() && psi.clean() && Psi.clean(),
            cat("phi m<=4 ", phi.cases - phi.failures, "/", phi.cases, ", varphi m<=3 ", varphi.cases - varphi.failures,
                "/", varphi.cases, ", psi ", psi.cases - psi.failures, "/", psi.cases, ", Psi composed ",
                Psi.cases - Psi.failures, "/", Psi.cases)};
}

Verdict c7_decomposition() {
    std::size_t cases = 0, failures = 0;
    for (std::size_t m = 1; m <= 3; ++m) {
        const test::Tally t = test::check_decomposition(m, 64);
        cases += t.cases;
        failures += t.failures;
    }
    return {cases > 0 && failures == 0, cat(cases - failures, "/", cases, " vectors, m in {1,2,3}, B in 2..64")};
}

Verdict c8_noise() {
    if (!g_c1) c1_correctness();
    if (!g_c2) c2_all_ids();
    std::size_t ok = 0;
    std::int64_t worst = 0, bound = 0, threshold = 0;
    for (const auto& r : g_noise) {
        if (r.noise <= r.bound && r.bound <= r.threshold) ++ok;
        worst = std::max(worst, r.noise);
        bound = r.bound;
        threshold = r.threshold;
    }
    return {!g_noise.empty() && ok == g_noise.size(),
            cat(ok, "/", g_noise.size(), " decryptions; max noise ", worst, " <= bound ", bound, " <= ceil(q/5) ",
                threshold)};
}

Verdict c9_trapdoors() {
    Rng rng(seed_from_u64(0xa009));
    const std::size_t n = 4, m = 72;
    const std::uint64_t q = 257;
    int exact = 0, within = 0;
    std::size_t samples = 0, members = 0;
    double worst_ratio = 0.0;
    for (int run = 0; run < 100; ++run) {
        const TrapdoorPair T = trap_gen(n, m, q, rng);
        const IntMatrix S = T.basis->matrix();
        const ZqMatrix AS = mat_mul(T.A, S);
        bool zero = true;
        for (Residue v : AS.data()) zero = zero && v == 0;
        exact += zero;
        const double gs = gram_schmidt(S).max_norm;
        worst_ratio = std::max(worst_ratio, gs / T.quality_bound);
        within += gs <= T.quality_bound * (1.0 + 1e-12);

        // Samples on the basis itself and on a random extension, as the scheme uses both.
        ZqMatrix X(n, m, q);
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < m; ++c) X.set(r, c, static_cast<std::int64_t>(rng.uniform(q)));
        const TrapdoorPair E = ext_basis(T, horiz_concat({&T.A, &X}));
        for (const TrapdoorPair* P : {&T, &E}) {
            const double width = P->quality_bound * sampler_width_factor(P->basis->dim());
            for (int k = 0; k < 5; ++k) {
                ZqVector u(n, q);
                for (std::size_t r = 0; r < n; ++r) u.set(r, static_cast<std::int64_t>(rng.uniform(q)));
                const IntVector x = sample_d(*P, u, width, rng);
                ++samples;
                members += mat_vec_mul(P->A, x, q) == u;
            }
        }
    }
    return {exact == 100 && within == 100 && members == samples,
            cat("A*S = 0 in ", exact, "/100, GS norm within recorded bound in ", within, "/100 (max ratio ",
                worst_ratio, "), coset membership ", members, "/", samples)};
}

BatchSummary batch(const std::string& experiment, const std::string& adversary, std::size_t trials,
                   const Params& params, std::uint64_t seed) {
    BatchConfig cfg;
    cfg.experiment = experiment;
    cfg.adversary = adversary;
    cfg.trials = trials;
    cfg.params = params;
    cfg.seed = seed_from_u64(seed);
    cfg.kappa = 8;
    return run_batch(cfg, nullptr);
}

Verdict c10_games() {
    const BatchSummary coin = batch("sim", "coin-flip", 2000, Params::toy(), 0xa010);
    const BatchSummary honest = batch("ext", "honest-signer", 500, Params::desk(), 0xa011);
    const BatchSummary leak = batch("sim", "mdk-leak", 200, Params::desk(), 0xa012);
    const bool pass = std::abs(coin.win_rate() - 0.5) <= 0.04 && honest.wins == 0 && leak.win_rate() >= 0.95;
    return {pass, cat("coin-flip SIM ", coin.wins, "/", coin.trials, " = ", coin.win_rate(), "; honest-signer EXT ",
                      honest.wins, "/", honest.trials, " (extraction failures ", honest.extraction_failures,
                      "); mdk-leak SIM ", leak.wins, "/", leak.trials, " = ", leak.win_rate())};
}

Verdict c11_serialization() {
    Rng rng(seed_from_u64(0xa011));
    std::size_t kinds = 0, exact = 0;
    std::vector<test::FileSample> fuzz_base;
    for (const SetupResult* s : {&test::toy_setup(), &test::desk_setup()}) {
        const test::Signer signer = test::make_signer(*s, rng);
        const auto sig = sign(s->pp, signer.usk, signer.msg, signer.pcw, rng);
        if (!sig.ok()) return {false, "could not produce a signature to serialize"};
        const auto files = test::sample_files(*s, signer.usk, *sig.value);
        for (const auto& f : files) {
            ++kinds;
            try {
                exact += test::reencode(f.kind, f.bytes) == f.bytes;
            } catch (const std::exception&) {
            }
        }
        if (s == &test::toy_setup()) fuzz_base = files;
    }
    const test::FuzzTally fz = test::fuzz_files(fuzz_base, 1000, rng);
    return {kinds == 12 && exact == kinds && fz.cases == 1000 && fz.escaped == 0,
            cat(exact, "/", kinds, " files roundtrip byte-exactly (six kinds at toy and desk); fuzz ", fz.cases,
                " mutated files: ", fz.rejected, " rejected, ", fz.decoded, " decoded, ", fz.escaped, " escaped",
                fz.escaped ? " (" + fz.first_escape + ")" : std::string())};
}

struct Criterion {
    int number;
    const char* title;
    std::function<Verdict()> run;
};

}  // namespace

int main(int argc, char** argv) {
    const std::vector<Criterion> all = {
        {1, "scheme correctness", c1_correctness},
        {2, "exhaustive identity roundtrip", c2_all_ids},
        {3, "Stern completeness", c3_completeness},
        {4, "soundness error", c4_soundness},
        {5, "extraction", c5_extraction},
        {6, "encoding/permutation equivalences", c6_equivalences},
        {7, "decomposition identity", c7_decomposition},
        {8, "open-noise certificate", c8_noise},
        {9, "trapdoor quality", c9_trapdoors},
        {10, "games sanity", c10_games},
        {11, "serialization", c11_serialization},
    };
    std::set<int> only;
    for (int i = 1; i < argc; ++i) only.insert(std::atoi(argv[i]));

    bool all_pass = true;
    for (const auto& c : all) {
        if (!only.empty() && !only.count(c.number)) continue;
        const auto t0 = std::chrono::steady_clock::now();
        Verdict v;
        try {
            v = c.run();
        } catch (const std::exception& e) {
            v = {false, std::string("threw: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        all_pass = all_pass && v.pass;
        std::printf("%s %2d %s: %s [%.1f s]\n", v.pass ? "PASS" : "FAIL", c.number, c.title, v.detail.c_str(), secs);
        std::fflush(stdout);
    }
    return all_pass ? 0 : 1;
}
