#include <doctest.h>

#include <algorithm>
#include <set>

#include "fixtures.hpp"
#include "tpbs/core/errors.hpp"
#include "tpbs/core/linalg.hpp"
#include "tpbs/stern/encoding.hpp"
#include "tpbs/stern/simple_codec.hpp"

using namespace tpbs;
using test::bits;
using test::ints;
using test::trits;

TEST_CASE("idec") {
    CHECK(idec(5, 7) == bits({1, 0, 1}));
    CHECK(idec(0, 7) == bits({0, 0, 0}));
    CHECK(idec(7, 7) == bits({1, 1, 1}));
    // B = 6: weights (3, 2, 1)
    CHECK(idec(4, 6) == bits({1, 0, 1}));
    CHECK_THROWS_AS(idec(8, 7), RangeError);
    CHECK_THROWS_AS(idec(-1, 7), RangeError);
}

TEST_CASE("vdec") {
    CHECK(vdec(ints({-5, 3}), 7) == trits({-1, 0, -1, 0, 1, 1}));
    CHECK(vdec(ints({0, 0}), 7) == trits({0, 0, 0, 0, 0, 0}));
    for (int a = -7; a <= 7; ++a)
        for (int b = -7; b <= 7; ++b) CHECK(gadget_apply(2, 7, vdec(ints({a, b}), 7).to_int()) == ints({a, b}));
    CHECK_THROWS_AS(vdec(ints({8}), 7), RangeError);
}

TEST_CASE("decomposition identity over small domains") {
    CHECK(test::check_decomposition(1, 64).clean());
    CHECK(test::check_decomposition(2, 64).clean());
    CHECK(test::check_decomposition(3, 16).clean());
}

TEST_CASE("enc2, enc3, ext examples") {
    CHECK(enc2(bits({0})) == bits({1, 0}));
    CHECK(enc2(bits({1, 0})) == bits({0, 1, 1, 0}));
    CHECK(enc3(trits({0})) == trits({1, 0, -1}));
    CHECK(enc3(trits({1})) == trits({-1, 1, 0}));
    CHECK(enc3(trits({-1})) == trits({0, -1, 1}));
    CHECK(ext(1, 0) == std::array<std::int8_t, 6>{0, 1, 0, 0, 0, -1});
    CHECK(ext(0, 1) == std::array<std::int8_t, 6>{-1, 0, 1, 0, 0, 0});
    CHECK(ext(0, 0) == std::array<std::int8_t, 6>{1, 0, 0, 0, -1, 0});
    CHECK_THROWS_AS(ext(2, 0), RangeError);

    const TritVector mix = ext_mix(bits({1, 0}), trits({0, 1}));
    REQUIRE(mix.size() == 24);
    const auto b01 = ext(1, 1), b10 = ext(0, 0);
    CHECK(std::equal(b01.begin(), b01.end(), mix.trits().begin() + 6));
    CHECK(std::equal(b10.begin(), b10.end(), mix.trits().begin() + 12));
}

TEST_CASE("permutation examples") {
    CHECK(perm_phi(bits({0, 0}), ints({1, 0, 0, 1})) == ints({1, 0, 0, 1}));
    CHECK(perm_phi(bits({1}), ints({1, 0})) == ints({0, 1}));
    const IntVector v = ints({5, 6, 7, 8});
    CHECK(perm_phi(bits({1, 1}), perm_phi(bits({1, 1}), v)) == v);
    CHECK(perm_varphi(trits({0, 0}), ints({1, 2, 3, 4, 5, 6})) == ints({1, 2, 3, 4, 5, 6}));
    CHECK(perm_varphi(trits({1}), ints({1, 0, -1})) == ints({-1, 1, 0}));
    CHECK(perm_psi(0, 0, ints({1, 2, 3, 4, 5, 6})) == ints({1, 2, 3, 4, 5, 6}));
    CHECK_THROWS_AS(perm_phi(bits({1}), ints({1, 0, 0})), DimensionError);
}

TEST_CASE("equivalences hold exhaustively") {
    const auto t7 = test::check_phi_equivalence(3);
    const auto t8 = test::check_varphi_equivalence(2);
    const auto t9 = test::check_psi_equivalence();
    const auto t10 = test::check_Psi_equivalence(2, 2);
    CHECK(t7.clean());
    CHECK(t8.clean());
    CHECK(t9.clean());
    CHECK(t10.clean());
    CHECK(t9.cases == 36 + 6 * 729);
}

TEST_CASE("Gamma of the simple codec is a bijection preserving VALID") {
    const SimpleCodec codec(2, 2);
    Rng rng(seed_from_u64(31));
    for (int i = 0; i < 200; ++i) {
        const PermSeed eta = codec.sample_eta(rng);
        CHECK(codec.eta_well_formed(eta));
        const IndexMap map = codec.gamma_map(eta);
        std::set<std::uint32_t> seen(map.begin(), map.end());
        CHECK(seen.size() == codec.length());
        CHECK(*seen.rbegin() == codec.length() - 1);

        const TritVector w = codec.sample_valid(rng);
        const TritVector g = codec.gamma(eta, w);
        CHECK(codec.valid_check(g));
        CHECK(codec.gamma_inverse(eta, g) == w);
        auto a = w.trits(), b = g.trits();
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        CHECK(a == b);

        TritVector bad = w;
        bad.set(0, w[0] == 1 ? 0 : 1);
        CHECK_FALSE(codec.valid_check(bad));
        CHECK_FALSE(codec.valid_check(codec.gamma(eta, bad)));
    }
    // rank enumerates VALID.
    std::set<std::size_t> ranks;
    for (int z0 = -1; z0 <= 1; ++z0)
        for (int z1 = -1; z1 <= 1; ++z1)
            for (int b0 = 0; b0 <= 1; ++b0)
                for (int b1 = 0; b1 <= 1; ++b1) ranks.insert(codec.rank(codec.encode(trits({z0, z1}), bits({b0, b1}))));
    CHECK(ranks.size() == 36);
    CHECK(*ranks.rbegin() == 35);
}
