#include <doctest.h>

#include <cstdio>
#include <filesystem>

#include "fixtures.hpp"
#include "tpbs/core/errors.hpp"
#include "tpbs/scheme/files.hpp"

using namespace tpbs;

namespace {

struct Sample {
    test::Signer signer;
    TpbsSignature sig;
};

const Sample& toy_sample() {
    static const Sample s = [] {
        Rng rng(seed_from_u64(70));
        Sample out;
        out.signer = test::make_signer(test::toy_setup(), rng);
        out.sig = *sign(test::toy_setup().pp, out.signer.usk, out.signer.msg, out.signer.pcw, rng).value;
        return out;
    }();
    return s;
}

}  // namespace

TEST_CASE("all six kinds roundtrip byte-exactly") {
    const auto& s = test::toy_setup();
    const auto& smp = toy_sample();
    const auto files = test::sample_files(s, smp.signer.usk, smp.sig);
    REQUIRE(files.size() == 6);
    for (const auto& f : files) {
        CAPTURE(f.kind);
        CHECK(test::reencode(f.kind, f.bytes) == f.bytes);
    }
    CHECK(decode_params_file(files[0].bytes) == s.pp.params);
    CHECK(decode_pp_file(files[1].bytes) == s.pp);
    CHECK(decode_usk_file(files[4].bytes) == smp.signer.usk);
    const TpbsSignature back = decode_signature_file(files[5].bytes);
    CHECK(back == smp.sig);
    CHECK(verify(decode_pp_file(files[1].bytes), smp.signer.msg, back));
}

TEST_CASE("desk files roundtrip") {
    const auto& s = test::desk_setup();
    Rng rng(seed_from_u64(71));
    const auto signer = test::make_signer(s, rng);
    PublicParams pp = s.pp;
    pp.params.kappa = 2;
    const TpbsSignature sig = *sign(pp, signer.usk, signer.msg, signer.pcw, rng).value;
    for (const auto& f : test::sample_files(s, signer.usk, sig)) {
        CAPTURE(f.kind);
        CHECK(test::reencode(f.kind, f.bytes) == f.bytes);
    }
}

TEST_CASE("kinds are not interchangeable and truncation is rejected") {
    const auto& s = test::toy_setup();
    const auto& smp = toy_sample();
    const auto files = test::sample_files(s, smp.signer.usk, smp.sig);
    for (const auto& f : files)
        for (const auto& g : files) {
            if (f.kind == g.kind) continue;
            CHECK_THROWS_AS(test::reencode(f.kind, g.bytes), DecodeError);
        }
    for (const auto& f : files) {
        CAPTURE(f.kind);
        for (std::size_t cut : {std::size_t{0}, std::size_t{3}, std::size_t{5}, f.bytes.size() / 2, f.bytes.size() - 1})
            CHECK_THROWS_AS(test::reencode(f.kind, ByteSpan(f.bytes.data(), cut)), DecodeError);
        Bytes trailing = f.bytes;
        trailing.push_back(0);
        CHECK_THROWS_AS(test::reencode(f.kind, trailing), DecodeError);
        Bytes version = f.bytes;
        version[4] ^= 0x7f;
        CHECK_THROWS_AS(test::reencode(f.kind, version), DecodeError);
    }
}

TEST_CASE("mutated files never escape as non-library errors") {
    const auto& smp = toy_sample();
    const auto files = test::sample_files(test::toy_setup(), smp.signer.usk, smp.sig);
    Rng rng(seed_from_u64(72));
    const auto t = test::fuzz_files(files, 600, rng);
    CHECK(t.cases == 600);
    CHECK_MESSAGE(t.escaped == 0, t.first_escape);
    CHECK(t.rejected > 0);
}

TEST_CASE("read_file and write_file") {
    const auto dir = std::filesystem::temp_directory_path() / "tpbs_files_test";
    std::filesystem::create_directories(dir);
    const std::string path = (dir / "blob.bin").string();
    const Bytes data{1, 2, 3, 250};
    write_file(path, data);
    CHECK(read_file(path) == data);
    CHECK_THROWS_AS(read_file((dir / "missing.bin").string()), IoError);
    CHECK_THROWS_AS(write_file((dir / "no" / "such" / "dir.bin").string(), data), IoError);
    std::filesystem::remove_all(dir);
}
