#include "tpbs/kernels/kernels.hpp"

#include <omp.h>

#include <cmath>

namespace tpbs::kernels {

namespace {

inline double dot(const double* a, const double* b, std::size_t n) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += a[i] * b[i];
    return s;
}

// Below this much work the thread start-up dominates.
constexpr std::size_t kParallelThreshold = 1u << 14;

}  // namespace

int max_threads() { return omp_get_max_threads(); }

void matvec_mod(const Residue* M, std::size_t rows, std::size_t cols, const Residue* x, std::uint64_t q, Residue* out) {
    const long long nrows = static_cast<long long>(rows);
#pragma omp parallel for schedule(static) if (rows * cols > kParallelThreshold)
    for (long long r = 0; r < nrows; ++r) {
        const Residue* row = M + static_cast<std::size_t>(r) * cols;
        unsigned __int128 acc = 0;
        for (std::size_t c = 0; c < cols; ++c) acc += static_cast<unsigned __int128>(row[c]) * x[c];
        out[r] = static_cast<Residue>(acc % q);
    }
}

void sparse_matvec_mod(const std::size_t* row_ptr, const std::uint32_t* col_idx, const Residue* values,
                       std::size_t rows, const Residue* x, std::uint64_t q, Residue* out) {
    const long long nrows = static_cast<long long>(rows);
#pragma omp parallel for schedule(dynamic, 16) if (row_ptr[rows] > kParallelThreshold)
    for (long long r = 0; r < nrows; ++r) {
        unsigned __int128 acc = 0;
        for (std::size_t k = row_ptr[r]; k < row_ptr[r + 1]; ++k)
            acc += static_cast<unsigned __int128>(values[k]) * x[col_idx[k]];
        out[r] = static_cast<Residue>(acc % q);
    }
}

void gram_columns(const double* cols, std::size_t dim, std::size_t count, double* gram) {
    const long long n = static_cast<long long>(count);
#pragma omp parallel for schedule(dynamic, 4) if (count * count * dim > kParallelThreshold)
    for (long long i = 0; i < n; ++i) {
        const double* ci = cols + static_cast<std::size_t>(i) * dim;
        for (std::size_t j = static_cast<std::size_t>(i); j < count; ++j) {
            const double v = dot(ci, cols + j * dim, dim);
            gram[static_cast<std::size_t>(i) * count + j] = v;
            gram[j * count + static_cast<std::size_t>(i)] = v;
        }
    }
}

bool cholesky_upper(double* a, std::size_t n) {
    // Right-looking: finish row j of R, then update the trailing block row by row.
    for (std::size_t j = 0; j < n; ++j) {
        const double d = a[j * n + j];
        if (!(d > 0.0)) return false;
        const double rjj = std::sqrt(d);
        double* rj = a + j * n;
        rj[j] = rjj;
        for (std::size_t c = j + 1; c < n; ++c) rj[c] /= rjj;
        const long long rest = static_cast<long long>(n - j - 1);
#pragma omp parallel for schedule(dynamic, 8) if ((n - j) * (n - j) > kParallelThreshold)
        for (long long t = 0; t < rest; ++t) {
            const std::size_t i = j + 1 + static_cast<std::size_t>(t);
            const double f = rj[i];
            double* ai = a + i * n;
            for (std::size_t c = i; c < n; ++c) ai[c] -= f * rj[c];
        }
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < i; ++j) a[i * n + j] = 0.0;
    return true;
}

void modified_gram_schmidt(double* cols, std::size_t dim, std::size_t count, double* norms_sq) {
    for (std::size_t i = 0; i < count; ++i) {
        const double* bi = cols + i * dim;
        const double nn = dot(bi, bi, dim);
        norms_sq[i] = nn;
        if (nn == 0.0) continue;
        const long long rest = static_cast<long long>(count - i - 1);
#pragma omp parallel for schedule(static) if ((count - i) * dim > kParallelThreshold)
        for (long long t = 0; t < rest; ++t) {
            double* bj = cols + (i + 1 + static_cast<std::size_t>(t)) * dim;
            const double mu = dot(bj, bi, dim) / nn;
            for (std::size_t k = 0; k < dim; ++k) bj[k] -= mu * bi[k];
        }
    }
}

namespace serial {

void matvec_mod(const Residue* M, std::size_t rows, std::size_t cols, const Residue* x, std::uint64_t q, Residue* out) {
    for (std::size_t r = 0; r < rows; ++r) {
        Residue acc = 0;
        for (std::size_t c = 0; c < cols; ++c) acc = add_mod(acc, mul_mod(M[r * cols + c], x[c], q), q);
        out[r] = acc;
    }
}

void sparse_matvec_mod(const std::size_t* row_ptr, const std::uint32_t* col_idx, const Residue* values,
                       std::size_t rows, const Residue* x, std::uint64_t q, Residue* out) {
    for (std::size_t r = 0; r < rows; ++r) {
        Residue acc = 0;
        for (std::size_t k = row_ptr[r]; k < row_ptr[r + 1]; ++k)
            acc = add_mod(acc, mul_mod(values[k], x[col_idx[k]], q), q);
        out[r] = acc;
    }
}

void gram_columns(const double* cols, std::size_t dim, std::size_t count, double* gram) {
    for (std::size_t i = 0; i < count; ++i)
        for (std::size_t j = 0; j < count; ++j) gram[i * count + j] = dot(cols + i * dim, cols + j * dim, dim);
}

bool cholesky_upper(double* a, std::size_t n) {
    for (std::size_t j = 0; j < n; ++j) {
        const double d = a[j * n + j];
        if (!(d > 0.0)) return false;
        const double rjj = std::sqrt(d);
        double* rj = a + j * n;
        rj[j] = rjj;
        for (std::size_t c = j + 1; c < n; ++c) rj[c] /= rjj;
        for (std::size_t i = j + 1; i < n; ++i) {
            const double f = rj[i];
            double* ai = a + i * n;
            for (std::size_t c = i; c < n; ++c) ai[c] -= f * rj[c];
        }
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < i; ++j) a[i * n + j] = 0.0;
    return true;
}

void modified_gram_schmidt(double* cols, std::size_t dim, std::size_t count, double* norms_sq) {
    for (std::size_t i = 0; i < count; ++i) {
        const double* bi = cols + i * dim;
        const double nn = dot(bi, bi, dim);
        norms_sq[i] = nn;
        if (nn == 0.0) continue;
        for (std::size_t j = i + 1; j < count; ++j) {
            double* bj = cols + j * dim;
            const double mu = dot(bj, bi, dim) / nn;
            for (std::size_t k = 0; k < dim; ++k) bj[k] -= mu * bi[k];
        }
    }
}

}  // namespace serial

}  // namespace tpbs::kernels
