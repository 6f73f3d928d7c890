#include <doctest.h>

#include <cmath>
#include <limits>

#include "fixtures.hpp"
#include "tpbs/core/errors.hpp"
#include "tpbs/core/linalg.hpp"
#include "tpbs/core/modular.hpp"
#include "tpbs/sigcrypt/boyen.hpp"
#include "tpbs/sigcrypt/commit.hpp"
#include "tpbs/sigcrypt/gpv.hpp"
#include "tpbs/sigcrypt/oracle.hpp"
#include "tpbs/sigcrypt/ots.hpp"
#include "tpbs/sigcrypt/xof.hpp"

using namespace tpbs;
using test::bits;

namespace {

Bytes text(std::string_view s) { return Bytes(s.begin(), s.end()); }

ZqMatrix zq_sum(const ZqMatrix& a, const ZqMatrix& b) { return mat_add(a, b); }

}  // namespace

TEST_CASE("boyen_message_matrix") {
    const auto& s = test::toy_setup();
    const BoyenPublic& mvk = s.pp.mvk;
    const std::size_t ell = mvk.message_length();
    REQUIRE(ell == static_cast<std::size_t>(s.pp.params.ell()));

    const ZqMatrix zero = boyen_message_matrix(mvk, BitVector(ell));
    CHECK(zero == horiz_concat({&mvk.A, &mvk.Ai[0]}));

    BitVector e1(ell);
    e1.set(0, true);
    const ZqMatrix one = zq_sum(mvk.Ai[0], mvk.Ai[1]);
    CHECK(boyen_message_matrix(mvk, e1) == horiz_concat({&mvk.A, &one}));

    ZqMatrix all = mvk.Ai[0];
    for (std::size_t j = 1; j <= ell; ++j) all = zq_sum(all, mvk.Ai[j]);
    CHECK(boyen_message_matrix(mvk, BitVector(std::vector<std::uint8_t>(ell, 1))) == horiz_concat({&mvk.A, &all}));

    CHECK_THROWS_AS(boyen_message_matrix(mvk, BitVector(ell + 1)), DimensionError);
}

TEST_CASE("boyen sign and verify") {
    const auto& s = test::toy_setup();
    const auto& pp = s.pp;
    const std::size_t ell = pp.mvk.message_length();
    Rng rng(seed_from_u64(21));
    int ok = 0;
    for (int i = 0; i < 1000; ++i) {
        const BitVector msg = random_bits(ell, rng);
        const IntVector v = boyen_sign(s.msk, pp.mvk, msg, pp.params.s, pp.params.beta, rng);
        if (boyen_verify(pp.mvk, msg, v, pp.params.beta)) ++ok;
    }
    CHECK(ok == 1000);

    const BitVector msg = random_bits(ell, rng);
    const IntVector v = boyen_sign(s.msk, pp.mvk, msg, pp.params.s, pp.params.beta, rng);
    const IntVector v2 = boyen_sign(s.msk, pp.mvk, msg, pp.params.s, pp.params.beta, rng);
    CHECK(v != v2);

    IntVector bumped = v;
    bumped[0] = pp.params.beta + 1;
    CHECK_FALSE(boyen_verify(pp.mvk, msg, bumped, pp.params.beta));

    // Adding a short vector of Λ⊥(A_msg) keeps membership.
    const IntMatrix S = s.msk.basis->matrix();
    IntVector shifted = v;
    for (std::size_t r = 0; r < S.rows(); ++r) shifted[r] += S.at(r, 0);
    CHECK(boyen_verify(pp.mvk, msg, shifted, std::numeric_limits<std::int64_t>::max() / 4));
    CHECK(shifted != v);

    CHECK_FALSE(boyen_verify(pp.mvk, BitVector(ell + 1), v, pp.params.beta));
    CHECK_FALSE(boyen_verify(pp.mvk, msg, IntVector(3, 0), pp.params.beta));
}

TEST_CASE("h1") {
    const Bytes a = text("ovk-a");
    CHECK(h1(a, 4, 2, 257) == h1(a, 4, 2, 257));
    int distinct = 0;
    for (int i = 0; i < 100; ++i) {
        const Bytes x = text("left-" + std::to_string(i)), y = text("right-" + std::to_string(i));
        if (h1(x, 4, 2, 257) != h1(y, 4, 2, 257)) ++distinct;
    }
    CHECK(distinct == 100);
    const ZqMatrix e = h1({}, 16, 4, 16777213);
    CHECK(e.rows() == 16);
    CHECK(e.cols() == 4);
    for (Residue v : e.data()) CHECK(v < 16777213);
}

TEST_CASE("ibe rounding at q = 257") {
    CHECK(round_to_bit(130, 257));
    CHECK_FALSE(round_to_bit(10, 257));
    CHECK_FALSE(round_to_bit(0, 257));
    CHECK(round_to_bit(64, 257));  // quarter-distance tie
    CHECK_FALSE(round_to_bit(63, 257));
    CHECK(round_to_bit(192, 257));
    CHECK_FALSE(round_to_bit(194, 257));
}

TEST_CASE("ibe encryption formula and linearity") {
    const auto& s = test::toy_setup();
    const auto& pp = s.pp;
    const auto n = static_cast<std::size_t>(pp.params.n), m = static_cast<std::size_t>(pp.params.m),
               l1 = static_cast<std::size_t>(pp.params.l1);
    const std::uint64_t q = pp.params.q;
    Rng rng(seed_from_u64(22));
    const ZqMatrix G = h1(text("x"), n, l1, q);

    IbeRandomness r = ibe_sample_randomness(n, m, l1, pp.params.noise_bound, rng);
    CHECK(inf_norm(r.s) <= pp.params.noise_bound);
    CHECK(inf_norm(r.e1) <= pp.params.noise_bound);
    CHECK(inf_norm(r.e2) <= pp.params.noise_bound);

    IbeRandomness quiet = r;
    quiet.e1.assign(m, 0);
    quiet.e2.assign(l1, 0);
    const IbeCiphertext ct0 = ibe_encrypt_with(pp.B, G, BitVector(l1), quiet);
    CHECK(ct0.c2 == mat_vec_mul(G.transpose(), quiet.s, q));
    CHECK(ct0.c1 == mat_vec_mul(pp.B.transpose(), quiet.s, q));

    BitVector id(l1);
    const IbeCiphertext a = ibe_encrypt_with(pp.B, G, id, r);
    id.set(1, true);
    const IbeCiphertext b = ibe_encrypt_with(pp.B, G, id, r);
    CHECK(a.c1 == b.c1);
    CHECK(a.c2[0] == b.c2[0]);
    CHECK(b.c2[1] == (a.c2[1] + q / 2) % q);

    IbeRandomness kept;
    const IbeCiphertext c = ibe_encrypt(pp.B, G, id, pp.params.noise_bound, rng, &kept);
    CHECK(c == ibe_encrypt_with(pp.B, G, id, kept));
}

TEST_CASE("ibe extract and decrypt at desk") {
    const auto& s = test::desk_setup();
    const auto& pp = s.pp;
    const auto n = static_cast<std::size_t>(pp.params.n), l1 = static_cast<std::size_t>(pp.params.l1);
    const std::uint64_t q = pp.params.q;
    const ZqMatrix G = h1(text("desk ovk"), n, l1, q);

    Rng r1(seed_from_u64(23)), r2(seed_from_u64(23));
    const IntMatrix F = ibe_extract(s.mdk, G, pp.params.s1, r1);
    CHECK(F == ibe_extract(s.mdk, G, pp.params.s1, r2));
    CHECK(mat_mul(pp.B, F) == G);
    CHECK(F.max_abs() <= pp.params.extraction_bound());

    const std::int64_t bound = pp.params.open_noise_bound();
    CHECK(bound <= pp.params.open_threshold());
    Rng rng(seed_from_u64(24));
    int ok = 0;
    std::int64_t worst = 0;
    auto run = [&](const BitVector& id) {
        IbeRandomness r;
        const IbeCiphertext ct = ibe_encrypt(pp.B, G, id, pp.params.noise_bound, rng, &r);
        if (ibe_decrypt(F, ct) == id) ++ok;
        // e₂ − Fᵀe₁ over the integers
        for (std::size_t j = 0; j < l1; ++j) {
            std::int64_t acc = r.e2[j];
            for (std::size_t i = 0; i < F.rows(); ++i) acc -= F.at(i, j) * r.e1[i];
            worst = std::max<std::int64_t>(worst, std::llabs(acc));
        }
    };
    for (unsigned v = 0; v < 16; ++v) run(bits({int(v >> 3 & 1), int(v >> 2 & 1), int(v >> 1 & 1), int(v & 1)}));
    CHECK(ok == 16);
    for (int i = 0; i < 1000; ++i) run(random_bits(l1, rng));
    CHECK(ok == 1016);
    CHECK(worst <= bound);
}

TEST_CASE("lamport ots") {
    Rng rng(seed_from_u64(25));
    const OtsKeyPair kp = ots_gen(rng);
    CHECK(kp.ovk.size() == kOtsVerifyKeyBytes);
    const Bytes msg = text("one time message");
    const Bytes sig = ots_sign(kp.osk, msg);
    CHECK(sig.size() == kOtsSignatureBytes);
    CHECK(ots_verify(kp.ovk, msg, sig));

    Bytes msg2 = msg;
    msg2[3] ^= 1;
    CHECK_FALSE(ots_verify(kp.ovk, msg2, sig));
    Bytes sig2 = sig;
    sig2[100] ^= 0x10;
    CHECK_FALSE(ots_verify(kp.ovk, msg, sig2));
    CHECK_FALSE(ots_verify(kp.ovk, msg, Bytes(sig.begin(), sig.end() - 1)));
    CHECK_FALSE(ots_verify(Bytes(10, 0), msg, sig));
    CHECK_FALSE(ots_verify(ots_gen(rng).ovk, msg, sig));
}

TEST_CASE("commitments") {
    const CommitmentKey& ck = test::toy_commitment_key();
    Rng rng(seed_from_u64(26));
    const Bytes x = text("payload");
    const BitVector rho = random_bits(ck.randomness_length(), rng);
    CHECK(ck.commit(x, rho) == ck.commit(x, rho));
    CHECK(ck.commit(x, rho).size() == ck.n());
    CHECK(ck.commit(x, rho) != ck.commit(text("payloae"), rho));
    CHECK(ck.digest(x).size() == ck.randomness_length());
    CHECK_THROWS_AS(ck.commit(x, BitVector(ck.randomness_length() - 1)), DimensionError);

    std::vector<double> hist(ck.modulus(), 0.0);
    double total = 0.0;
    for (int i = 0; i < 1000; ++i) {
        const ZqVector c = ck.commit(x, random_bits(ck.randomness_length(), rng));
        for (Residue v : c.entries()) {
            hist[v] += 1.0;
            total += 1.0;
        }
    }
    const std::vector<double> expected(ck.modulus(), total / static_cast<double>(ck.modulus()));
    CHECK(test::chi_square_p(hist, expected) > 0.001);
}

TEST_CASE("h2 challenges") {
    const Bytes point = challenge_point(text("stmt"), text("coms"));
    CHECK(h2(point, 16) == h2(point, 16));
    CHECK(h2(point, 16).size() == 16);
    CHECK(h2(challenge_point(text("stmt"), text("comt")), 32) != h2(point, 32));
    // Length prefixes keep the split between statement and commitments.
    CHECK(challenge_point(text("ab"), text("c")) != challenge_point(text("a"), text("bc")));

    const Challenges ch = h2(text("histogram"), 100000);
    std::vector<double> hist(3, 0.0);
    bool in_range = true;
    for (auto c : ch) {
        in_range = in_range && c >= 1 && c <= 3;
        if (c >= 1 && c <= 3) hist[c - 1] += 1.0;
    }
    CHECK(in_range);
    CHECK(test::chi_square_p(hist, {100000 / 3.0, 100000 / 3.0, 100000 / 3.0}) > 0.001);
    CHECK(challenges_to_string(Challenges{1, 2, 3}) == "123");
}

TEST_CASE("xof primitives") {
    // SHA-256("abc")
    const Digest d = sha256(text("abc"));
    CHECK(d[0] == 0xba);
    CHECK(d[31] == 0xad);
    // SHAKE256("") prefix 46b9dd2b
    const Bytes e = shake256({}, 4);
    CHECK(e == Bytes{0x46, 0xb9, 0xdd, 0x2b});
    CHECK(shake256_concat({text("ab"), text("c")}, 16) == shake256(text("abc"), 16));
    XofReader a("T", text("x")), b("T", text("x"));
    for (int i = 0; i < 5000; ++i) CHECK(a.uniform_mod(257) == b.uniform_mod(257));
}
