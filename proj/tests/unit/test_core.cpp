#include <doctest.h>

#include <cmath>

#include "fixtures.hpp"
#include "tpbs/core/errors.hpp"
#include "tpbs/core/linalg.hpp"
#include "tpbs/core/serialize.hpp"

using namespace tpbs;
using tpbs::test::bits;
using tpbs::test::ints;

namespace {

ZqMatrix random_matrix(std::size_t r, std::size_t c, std::uint64_t q, Rng& rng) {
    ZqMatrix M(r, c, q);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) M.set(i, j, static_cast<std::int64_t>(rng.uniform(q)));
    return M;
}

}  // namespace

TEST_CASE("mat_vec_mul examples") {
    const ZqMatrix I = ZqMatrix::identity(3, 17);
    CHECK(mat_vec_mul(I, ints({3, 5, 16}), 17).entries() == std::vector<Residue>{3, 5, 16});
    const ZqMatrix M(1, 3, 17, {4, 2, 1});
    CHECK(mat_vec_mul(M, ints({1, 0, 1}), 17)[0] == 5);
    const ZqMatrix Z(2, 3, 17);
    CHECK(mat_vec_mul(Z, ints({7, -3, 9}), 17).entries() == std::vector<Residue>{0, 0});
    CHECK_THROWS_AS(mat_vec_mul(M, ints({1, 0}), 17), DimensionError);
}

TEST_CASE("mat_vec_mul reduces negative inputs") {
    const ZqMatrix M(1, 2, 17, {1, 1});
    CHECK(mat_vec_mul(M, ints({-1, -20}), 17)[0] == 13);  // -21 mod 17
}

TEST_CASE("gadget_matrix rows follow B_j = floor((B + 2^(j-1)) / 2^j)") {
    CHECK(gadget_matrix(1, 7, 97).data() == std::vector<Residue>{4, 2, 1});
    CHECK(gadget_matrix(1, 2, 97).data() == std::vector<Residue>{1, 1});
    const ZqMatrix G = gadget_matrix(2, 7, 97);
    CHECK(G.rows() == 2);
    CHECK(G.cols() == 6);
    CHECK(G.data() == std::vector<Residue>{4, 2, 1, 0, 0, 0, 0, 0, 0, 4, 2, 1});
    CHECK_THROWS(gadget_matrix(1, 1, 97));
    for (std::int64_t B = 2; B <= 200; ++B) {
        const auto w = gadget_weights(B);
        std::int64_t sum = 0, expect_len = 0;
        for (std::int64_t x = B; x > 0; x >>= 1) ++expect_len;
        REQUIRE(static_cast<std::int64_t>(w.size()) == expect_len);
        for (std::size_t j = 0; j < w.size(); ++j) {
            const std::int64_t p = std::int64_t{1} << j;  // 2^(j+1-1)
            CHECK(w[j] == (B + p) / (2 * p));
            sum += w[j];
        }
        CHECK(sum == B);
    }
}

TEST_CASE("concatenation and zero-column embedding") {
    Rng rng(seed_from_u64(1));
    const ZqMatrix A = random_matrix(3, 4, 101, rng);
    const ZqMatrix empty(3, 0, 101);
    CHECK(horiz_concat({&A, &empty}) == A);
    CHECK(vert_concat({&A}) == A);

    const ZqMatrix c(1, 1, 101, {42});
    CHECK(embed_with_zero_columns(c, {2}, 4).data() == std::vector<Residue>{0, 0, 42, 0});

    // M·extend(w) = M̂·w when ŵ is scattered to `positions` and the rest is filler.
    const std::vector<std::size_t> pos = {1, 3, 4, 6};
    const ZqMatrix M = embed_with_zero_columns(A, pos, 8);
    const IntVector w_hat = ints({5, -2, 7, 1});
    IntVector w(8, 9);
    for (std::size_t j = 0; j < pos.size(); ++j) w[pos[j]] = w_hat[j];
    CHECK(mat_vec_mul(M, w, 101) == mat_vec_mul(A, w_hat, 101));
}

TEST_CASE("modular helpers") {
    CHECK(is_prime(16777213));
    CHECK(is_prime(257));
    CHECK_FALSE(is_prime(16777215));
    CHECK(mul_mod(inv_mod(5, 257), 5, 257) == 1);
    CHECK_THROWS_AS(inv_mod(0, 257), LinearAlgebraError);
    CHECK(centered(256, 257) == -1);
    CHECK(centered(128, 257) == 128);
    CHECK(ceil_log2(16777213) == 24);
    CHECK(bit_length(7) == 3);
    CHECK(bit_length(8) == 4);
}

TEST_CASE("ModularSolver finds solutions of consistent systems") {
    Rng rng(seed_from_u64(2));
    const ZqMatrix A = random_matrix(5, 9, 257, rng);
    IntVector x(9);
    for (auto& v : x) v = static_cast<std::int64_t>(rng.uniform(257));
    const ZqVector b = mat_vec_mul(A, x, 257);
    const auto sol = solve_mod(A, b);
    REQUIRE(sol);
    CHECK(mat_vec_mul(A, ZqVector(*sol, 257)) == b);
    // [1 1; 1 1] x = (0, 1) has no solution.
    const ZqMatrix S(2, 2, 257, {1, 1, 1, 1});
    CHECK_FALSE(solve_mod(S, ZqVector({0, 1}, 257)));
}

TEST_CASE("solve_gf2 against brute force") {
    Rng rng(seed_from_u64(3));
    for (int t = 0; t < 50; ++t) {
        BitMatrix A(3, 4);
        for (std::size_t r = 0; r < 3; ++r)
            for (std::size_t c = 0; c < 4; ++c) A.set(r, c, rng.bit());
        BitVector b(3);
        for (std::size_t i = 0; i < 3; ++i) b.set(i, rng.bit());
        bool any = false;
        for (unsigned x = 0; x < 16; ++x) {
            BitVector xv(4);
            for (std::size_t i = 0; i < 4; ++i) xv.set(i, (x >> i) & 1);
            any = any || A.mul(xv) == b;
        }
        const auto sol = solve_gf2(A, b);
        CHECK(sol.has_value() == any);
        if (sol) CHECK(A.mul(*sol) == b);
    }
}

TEST_CASE("sparse matrices agree with dense") {
    Rng rng(seed_from_u64(4));
    ZqMatrix A = random_matrix(6, 10, 97, rng);
    for (std::size_t c = 0; c < 10; c += 3) A.set(2, c, 0);
    const SparseZqMatrix S = SparseZqMatrix::from_dense(A);
    CHECK(S.to_dense() == A);
    std::vector<Residue> x(10);
    for (auto& v : x) v = rng.uniform(97);
    CHECK(mat_vec_mul(S, x) == mat_vec_mul(A, ZqVector(x, 97)));
    SparseZqMatrix::Builder b(2, 3, 97);
    b.push(0, 1, 5);
    CHECK_THROWS_AS(b.push(0, 0, 5), DimensionError);
}

TEST_CASE("carrier invariants") {
    CHECK_THROWS_AS(ZqVector({5, 17}, 17), RangeError);
    CHECK_THROWS_AS(BitVector(std::vector<std::uint8_t>{0, 2}), RangeError);
    CHECK_THROWS_AS(TritVector(std::vector<std::int8_t>{0, 2}), RangeError);
    CHECK_THROWS_AS(ZqMatrix(2, 2, 17, {1, 2, 3}), DimensionError);
    CHECK_THROWS_AS(ZqVector(3, 1), RangeError);
}

TEST_CASE("binary encoding roundtrips") {
    Rng rng(seed_from_u64(5));
    const ZqMatrix A = random_matrix(4, 7, 16777213, rng);
    ByteWriter w;
    write(w, A);
    write(w, A.column(3));
    write(w, ints({-5, 0, 1LL << 40}));
    write(w, bits({1, 0, 1}));
    write(w, tpbs::test::trits({-1, 0, 1, 1}));
    write(w, SparseZqMatrix::from_dense(A));
    write(w, Params::desk());
    const Bytes bytes = w.take();
    ByteReader r(bytes);
    CHECK(read_zq_matrix(r) == A);
    CHECK(read_zq_vector(r) == A.column(3));
    CHECK(read_int_vector(r) == ints({-5, 0, 1LL << 40}));
    CHECK(read_bit_vector(r) == bits({1, 0, 1}));
    CHECK(read_trit_vector(r) == tpbs::test::trits({-1, 0, 1, 1}));
    CHECK(read_sparse_matrix(r) == SparseZqMatrix::from_dense(A));
    CHECK(read_params(r) == Params::desk());
    CHECK(r.at_end());
    // Residues below 2^24 take three bytes each.
    CHECK(residue_width(16777213) == 3);
    CHECK(residue_width(257) == 2);
}

TEST_CASE("truncated encodings raise DecodeError") {
    Rng rng(seed_from_u64(6));
    ByteWriter w;
    write(w, random_matrix(3, 3, 257, rng));
    const Bytes full = w.take();
    for (std::size_t cut = 0; cut < full.size(); ++cut) {
        ByteReader r(ByteSpan(full.data(), cut));
        CHECK_THROWS_AS(read_zq_matrix(r), DecodeError);
    }
}

TEST_CASE("hex bit strings are most-significant-bit first") {
    CHECK(bits_to_hex(bits({1, 0, 1, 0})) == "a0");
    CHECK(bits_to_hex(bits({0, 0, 0, 0, 0, 0, 0, 1, 1})) == "0180");
    CHECK(hex_to_bits("a0", 4) == bits({1, 0, 1, 0}));
    CHECK_THROWS_AS(hex_to_bits("a8", 4), RangeError);  // nonzero padding
    CHECK_THROWS_AS(hex_to_bits("a0a0", 4), RangeError);
    CHECK_THROWS(hex_to_bits("zz", 4));
}

TEST_CASE("params presets and validation") {
    const Params desk = Params::desk();
    CHECK_NOTHROW(desk.validate());
    CHECK(desk.m == 2 * desk.n * desk.k());
    CHECK(desk.l2 + desk.d > desk.n);
    CHECK(desk.enforce_open_bound);
    const Params toy = Params::toy();
    CHECK_NOTHROW(toy.validate());
    CHECK_FALSE(toy.enforce_open_bound);
    CHECK(toy.n == 4);
    CHECK(toy.q == 257);
    CHECK(toy.m == 72);

    Params bad = desk;
    bad.q = 16777215;
    CHECK_THROWS_AS(bad.validate(), ParamError);
    bad = desk;
    bad.m = 100;
    CHECK_THROWS_AS(bad.validate(), ParamError);
    bad = desk;
    bad.d = 12;  // l2 + d = n
    CHECK_THROWS_AS(bad.validate(), ParamError);
    CHECK_THROWS_AS(Params::preset("huge"), ParamError);
}

TEST_CASE("open inequality arithmetic") {
    Params p = Params::desk();
    p.s1 = 100.0;
    const std::int64_t ext = static_cast<std::int64_t>(std::ceil(100.0 * std::log2(768.0)));
    CHECK(p.extraction_bound() == ext);
    CHECK(p.open_noise_bound() == 2 + 768 * 2 * ext);
    CHECK(p.open_threshold() == (16777213 + 4) / 5);
    CHECK(p.open_inequality_holds() == (p.open_noise_bound() <= p.open_threshold()));
    CHECK(p.open_inequality_text().find("<=") != std::string::npos);
}
