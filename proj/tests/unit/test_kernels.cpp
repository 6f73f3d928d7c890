#include <doctest.h>

#include <vector>

#include <omp.h>

#include "tpbs/gauss/rng.hpp"
#include "tpbs/kernels/kernels.hpp"

using namespace tpbs;

namespace {

std::vector<double> doubles(std::size_t n, Rng& rng) {
    std::vector<double> v(n);
    for (auto& x : v) x = rng.uniform_real() * 2.0 - 1.0;
    return v;
}

void compare_kernels(std::size_t rows, std::size_t cols, std::size_t n, std::uint64_t seed) {
    CAPTURE(rows);
    Rng rng(seed_from_u64(seed));
    const std::uint64_t q = 16777213;

    std::vector<Residue> M(rows * cols), x(cols), a(rows), b(rows);
    for (auto& v : M) v = rng.uniform(q);
    for (auto& v : x) v = rng.uniform(q);
    kernels::matvec_mod(M.data(), rows, cols, x.data(), q, a.data());
    kernels::serial::matvec_mod(M.data(), rows, cols, x.data(), q, b.data());
    CHECK(a == b);

    std::vector<std::size_t> row_ptr{0};
    std::vector<std::uint32_t> col_idx;
    std::vector<Residue> vals;
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::uint32_t c = static_cast<std::uint32_t>(r % 3); c < cols; c += 3) {
            col_idx.push_back(c);
            vals.push_back(rng.uniform(q));
        }
        row_ptr.push_back(col_idx.size());
    }
    kernels::sparse_matvec_mod(row_ptr.data(), col_idx.data(), vals.data(), rows, x.data(), q, a.data());
    kernels::serial::sparse_matvec_mod(row_ptr.data(), col_idx.data(), vals.data(), rows, x.data(), q, b.data());
    CHECK(a == b);

    const auto cols_d = doubles(n * n, rng);
    std::vector<double> g1(n * n), g2(n * n);
    kernels::gram_columns(cols_d.data(), n, n, g1.data());
    kernels::serial::gram_columns(cols_d.data(), n, n, g2.data());
    CHECK(g1 == g2);

    for (std::size_t i = 0; i < n; ++i) g1[i * n + i] += static_cast<double>(n);
    auto c1 = g1, c2 = g1;
    CHECK(kernels::cholesky_upper(c1.data(), n));
    CHECK(kernels::serial::cholesky_upper(c2.data(), n));
    CHECK(c1 == c2);

    auto m1 = cols_d, m2 = cols_d;
    std::vector<double> n1(n), n2(n);
    kernels::modified_gram_schmidt(m1.data(), n, n, n1.data());
    kernels::serial::modified_gram_schmidt(m2.data(), n, n, n2.data());
    CHECK(m1 == m2);
    CHECK(n1 == n2);
}

}  // namespace

// The larger shapes cross the parallel threshold; four threads are forced so
// the OpenMP paths run even on a single core.
TEST_CASE("parallel kernels match the serial references exactly") {
    omp_set_num_threads(4);
    compare_kernels(37, 91, 40, 1);
    compare_kernels(211, 997, 160, 2);
    compare_kernels(64, 4096, 96, 3);
}

TEST_CASE("cholesky rejects indefinite input") {
    std::vector<double> a{1.0, 2.0, 2.0, 1.0};
    CHECK_FALSE(kernels::cholesky_upper(a.data(), 2));
}

TEST_CASE("thread count is positive") { CHECK(kernels::max_threads() >= 1); }
