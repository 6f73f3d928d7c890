#pragma once

#include <cstddef>
#include <cstdint>

#include "tpbs/core/modular.hpp"

// Hot loops. Each kernel has an OpenMP version and a serial reference in
// kernels::serial; tests check they agree bit for bit.
namespace tpbs::kernels {

void matvec_mod(const Residue* M, std::size_t rows, std::size_t cols, const Residue* x, std::uint64_t q, Residue* out);

void sparse_matvec_mod(const std::size_t* row_ptr, const std::uint32_t* col_idx, const Residue* values,
                       std::size_t rows, const Residue* x, std::uint64_t q, Residue* out);

// gram[i*count + j] = <col_i, col_j> for column-major `cols` (each column `dim` long).
void gram_columns(const double* cols, std::size_t dim, std::size_t count, double* gram);

// In place: upper triangle of `a` becomes R with RᵀR = a. False if not positive definite.
bool cholesky_upper(double* a, std::size_t n);

// Modified Gram–Schmidt on column-major `cols` (dim × count), overwritten with the
// orthogonalized vectors; norms_sq receives ‖b̃_i‖².
void modified_gram_schmidt(double* cols, std::size_t dim, std::size_t count, double* norms_sq);

int max_threads();

namespace serial {
void matvec_mod(const Residue* M, std::size_t rows, std::size_t cols, const Residue* x, std::uint64_t q, Residue* out);
void sparse_matvec_mod(const std::size_t* row_ptr, const std::uint32_t* col_idx, const Residue* values,
                       std::size_t rows, const Residue* x, std::uint64_t q, Residue* out);
void gram_columns(const double* cols, std::size_t dim, std::size_t count, double* gram);
bool cholesky_upper(double* a, std::size_t n);
void modified_gram_schmidt(double* cols, std::size_t dim, std::size_t count, double* norms_sq);
}  // namespace serial

}  // namespace tpbs::kernels
