// OpenMP kernels against their serial references, plus one end-to-end prover run.

#include <benchmark/benchmark.h>

#include <vector>

#include "tpbs/gauss/rng.hpp"
#include "tpbs/kernels/kernels.hpp"
#include "tpbs/scheme/scheme.hpp"

namespace {

using namespace tpbs;

constexpr std::uint64_t kQ = 16777213;

std::vector<Residue> random_residues(std::size_t len, Rng& rng) {
    std::vector<Residue> v(len);
    for (auto& x : v) x = rng.uniform(kQ);
    return v;
}

std::vector<double> random_doubles(std::size_t len, Rng& rng) {
    std::vector<double> v(len);
    for (auto& x : v) x = rng.uniform_real() * 2.0 - 1.0;
    return v;
}

template <bool Parallel>
void BM_matvec(benchmark::State& state) {
    const std::size_t rows = static_cast<std::size_t>(state.range(0)), cols = 768;
    Rng rng(1);
    const auto M = random_residues(rows * cols, rng), x = random_residues(cols, rng);
    std::vector<Residue> out(rows);
    for (auto _ : state) {
        if constexpr (Parallel)
            kernels::matvec_mod(M.data(), rows, cols, x.data(), kQ, out.data());
        else
            kernels::serial::matvec_mod(M.data(), rows, cols, x.data(), kQ, out.data());
        benchmark::DoNotOptimize(out.data());
    }
}

template <bool Parallel>
void BM_sparse_matvec(benchmark::State& state) {
    const auto rows = static_cast<std::size_t>(state.range(0));
    const std::size_t cols = 400000, per_row = 2000;
    Rng rng(2);
    std::vector<std::size_t> row_ptr(rows + 1);
    std::vector<std::uint32_t> col_idx;
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t k = 0; k < per_row; ++k) col_idx.push_back(static_cast<std::uint32_t>(k * (cols / per_row)));
        row_ptr[r + 1] = col_idx.size();
    }
    const auto values = random_residues(col_idx.size(), rng), x = random_residues(cols, rng);
    std::vector<Residue> out(rows);
    for (auto _ : state) {
        if constexpr (Parallel)
            kernels::sparse_matvec_mod(row_ptr.data(), col_idx.data(), values.data(), rows, x.data(), kQ, out.data());
        else
            kernels::serial::sparse_matvec_mod(row_ptr.data(), col_idx.data(), values.data(), rows, x.data(), kQ,
                                               out.data());
        benchmark::DoNotOptimize(out.data());
    }
}

template <bool Parallel>
void BM_gram(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    Rng rng(3);
    const auto cols = random_doubles(n * n, rng);
    std::vector<double> gram(n * n);
    for (auto _ : state) {
        if constexpr (Parallel)
            kernels::gram_columns(cols.data(), n, n, gram.data());
        else
            kernels::serial::gram_columns(cols.data(), n, n, gram.data());
        benchmark::DoNotOptimize(gram.data());
    }
}

template <bool Parallel>
void BM_cholesky(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    Rng rng(4);
    const auto cols = random_doubles(n * n, rng);
    std::vector<double> gram(n * n);
    kernels::serial::gram_columns(cols.data(), n, n, gram.data());
    for (std::size_t i = 0; i < n; ++i) gram[i * n + i] += static_cast<double>(n);
    std::vector<double> a(n * n);
    for (auto _ : state) {
        a = gram;
        if constexpr (Parallel)
            benchmark::DoNotOptimize(kernels::cholesky_upper(a.data(), n));
        else
            benchmark::DoNotOptimize(kernels::serial::cholesky_upper(a.data(), n));
    }
}

template <bool Parallel>
void BM_mgs(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    Rng rng(5);
    const auto base = random_doubles(n * n, rng);
    std::vector<double> cols(n * n), norms(n);
    for (auto _ : state) {
        cols = base;
        if constexpr (Parallel)
            kernels::modified_gram_schmidt(cols.data(), n, n, norms.data());
        else
            kernels::serial::modified_gram_schmidt(cols.data(), n, n, norms.data());
        benchmark::DoNotOptimize(norms.data());
    }
}

void BM_sign_toy(benchmark::State& state) {
    Rng rng(6);
    Params p = Params::toy();
    const SetupResult s = setup(p, rng);
    BitVector id(2), pol(2);
    id.set(0, true);
    const UserSigningKey usk = keygen(s.pp, s.msk, id, {pol}, rng);
    const BitVector pcw(static_cast<std::size_t>(p.d));
    const BitVector msg = s.pp.G2.mul(pcw);
    for (auto _ : state) benchmark::DoNotOptimize(sign(s.pp, usk, msg, pcw, rng));
}

}  // namespace

BENCHMARK(BM_matvec<false>)->Arg(64)->Arg(788);
BENCHMARK(BM_matvec<true>)->Arg(64)->Arg(788);
BENCHMARK(BM_sparse_matvec<false>)->Arg(788);
BENCHMARK(BM_sparse_matvec<true>)->Arg(788);
BENCHMARK(BM_gram<false>)->Arg(256)->Arg(768);
BENCHMARK(BM_gram<true>)->Arg(256)->Arg(768);
BENCHMARK(BM_cholesky<false>)->Arg(256)->Arg(768);
BENCHMARK(BM_cholesky<true>)->Arg(256)->Arg(768);
BENCHMARK(BM_mgs<false>)->Arg(128)->Arg(384);
BENCHMARK(BM_mgs<true>)->Arg(128)->Arg(384);
BENCHMARK(BM_sign_toy)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
