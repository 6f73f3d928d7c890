#include "tpbs/core/linalg.hpp"

#include <algorithm>

#include "tpbs/core/errors.hpp"
#include "tpbs/kernels/kernels.hpp"

namespace tpbs {

ZqVector mat_vec_mul(const ZqMatrix& M, const IntVector& x, std::uint64_t q) {
    if (M.cols() != x.size()) throw DimensionError("mat_vec_mul: matrix has " + std::to_string(M.cols()) +
                                                   " columns, vector has " + std::to_string(x.size()));
    if (M.modulus() != q) throw DimensionError("mat_vec_mul: modulus mismatch");
    std::vector<Residue> xr(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) xr[i] = reduce_signed(x[i], q);
    std::vector<Residue> out(M.rows());
    kernels::matvec_mod(M.data().data(), M.rows(), M.cols(), xr.data(), q, out.data());
    return ZqVector(std::move(out), q);
}

ZqVector mat_vec_mul(const ZqMatrix& M, const ZqVector& x) {
    if (M.cols() != x.size()) throw DimensionError("mat_vec_mul: dimension mismatch");
    if (M.modulus() != x.modulus()) throw DimensionError("mat_vec_mul: modulus mismatch");
    std::vector<Residue> out(M.rows());
    kernels::matvec_mod(M.data().data(), M.rows(), M.cols(), x.entries().data(), M.modulus(), out.data());
    return ZqVector(std::move(out), M.modulus());
}

ZqVector mat_vec_mul(const SparseZqMatrix& M, const std::vector<Residue>& x) {
    if (M.cols() != x.size()) throw DimensionError("sparse mat_vec_mul: dimension mismatch");
    std::vector<Residue> out(M.rows());
    kernels::sparse_matvec_mod(M.row_ptr().data(), M.col_idx().data(), M.values().data(), M.rows(), x.data(),
                               M.modulus(), out.data());
    return ZqVector(std::move(out), M.modulus());
}

ZqMatrix mat_mul(const ZqMatrix& A, const ZqMatrix& B) {
    if (A.cols() != B.rows()) throw DimensionError("mat_mul: inner dimensions differ");
    if (A.modulus() != B.modulus()) throw DimensionError("mat_mul: modulus mismatch");
    const std::uint64_t q = A.modulus();
    std::vector<Residue> out(A.rows() * B.cols(), 0);
    for (std::size_t i = 0; i < A.rows(); ++i) {
        std::vector<unsigned __int128> acc(B.cols(), 0);
        for (std::size_t k = 0; k < A.cols(); ++k) {
            Residue a = A.at(i, k);
            if (a == 0) continue;
            const Residue* brow = B.row(k);
            for (std::size_t j = 0; j < B.cols(); ++j) acc[j] += static_cast<unsigned __int128>(a) * brow[j];
        }
        for (std::size_t j = 0; j < B.cols(); ++j) out[i * B.cols() + j] = static_cast<Residue>(acc[j] % q);
    }
    return ZqMatrix(A.rows(), B.cols(), q, std::move(out));
}

ZqMatrix mat_mul(const ZqMatrix& A, const IntMatrix& B) {
    if (A.cols() != B.rows()) throw DimensionError("mat_mul: inner dimensions differ");
    const std::uint64_t q = A.modulus();
    std::vector<Residue> breduced(B.data().size());
    for (std::size_t i = 0; i < breduced.size(); ++i) breduced[i] = reduce_signed(B.data()[i], q);
    return mat_mul(A, ZqMatrix(B.rows(), B.cols(), q, std::move(breduced)));
}

ZqMatrix mat_add(const ZqMatrix& A, const ZqMatrix& B) {
    if (A.rows() != B.rows() || A.cols() != B.cols() || A.modulus() != B.modulus())
        throw DimensionError("mat_add: shape mismatch");
    std::vector<Residue> out(A.data().size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = add_mod(A.data()[i], B.data()[i], A.modulus());
    return ZqMatrix(A.rows(), A.cols(), A.modulus(), std::move(out));
}

ZqVector vec_add(const ZqVector& a, const ZqVector& b) {
    if (a.size() != b.size() || a.modulus() != b.modulus()) throw DimensionError("vec_add: shape mismatch");
    std::vector<Residue> out(a.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = add_mod(a[i], b[i], a.modulus());
    return ZqVector(std::move(out), a.modulus());
}

ZqVector vec_sub(const ZqVector& a, const ZqVector& b) {
    if (a.size() != b.size() || a.modulus() != b.modulus()) throw DimensionError("vec_sub: shape mismatch");
    std::vector<Residue> out(a.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = sub_mod(a[i], b[i], a.modulus());
    return ZqVector(std::move(out), a.modulus());
}

ZqMatrix horiz_concat(const std::vector<const ZqMatrix*>& blocks) {
    if (blocks.empty()) throw DimensionError("horiz_concat: no blocks");
    const std::size_t rows = blocks[0]->rows();
    const std::uint64_t q = blocks[0]->modulus();
    std::size_t cols = 0;
    for (const ZqMatrix* b : blocks) {
        if (b->rows() != rows) throw DimensionError("horiz_concat: row counts differ");
        if (b->modulus() != q) throw DimensionError("horiz_concat: modulus mismatch");
        cols += b->cols();
    }
    std::vector<Residue> out(rows * cols);
    for (std::size_t r = 0; r < rows; ++r) {
        std::size_t off = 0;
        for (const ZqMatrix* b : blocks) {
            std::copy(b->row(r), b->row(r) + b->cols(), out.begin() + static_cast<std::ptrdiff_t>(r * cols + off));
            off += b->cols();
        }
    }
    return ZqMatrix(rows, cols, q, std::move(out));
}

ZqMatrix vert_concat(const std::vector<const ZqMatrix*>& blocks) {
    if (blocks.empty()) throw DimensionError("vert_concat: no blocks");
    const std::size_t cols = blocks[0]->cols();
    const std::uint64_t q = blocks[0]->modulus();
    std::vector<Residue> out;
    std::size_t rows = 0;
    for (const ZqMatrix* b : blocks) {
        if (b->cols() != cols) throw DimensionError("vert_concat: column counts differ");
        if (b->modulus() != q) throw DimensionError("vert_concat: modulus mismatch");
        out.insert(out.end(), b->data().begin(), b->data().end());
        rows += b->rows();
    }
    return ZqMatrix(rows, cols, q, std::move(out));
}

ZqVector vec_concat(const std::vector<const ZqVector*>& parts) {
    if (parts.empty()) throw DimensionError("vec_concat: no parts");
    std::vector<Residue> out;
    for (const ZqVector* p : parts) {
        if (p->modulus() != parts[0]->modulus()) throw DimensionError("vec_concat: modulus mismatch");
        out.insert(out.end(), p->entries().begin(), p->entries().end());
    }
    return ZqVector(std::move(out), parts[0]->modulus());
}

ZqMatrix embed_with_zero_columns(const ZqMatrix& M, const std::vector<std::size_t>& positions, std::size_t width) {
    if (positions.size() != M.cols()) throw DimensionError("embed: one position per column required");
    std::vector<bool> used(width, false);
    for (std::size_t p : positions) {
        if (p >= width) throw DimensionError("embed: position outside target width");
        if (used[p]) throw DimensionError("embed: repeated position");
        used[p] = true;
    }
    ZqMatrix out(M.rows(), width, M.modulus());
    for (std::size_t r = 0; r < M.rows(); ++r)
        for (std::size_t c = 0; c < M.cols(); ++c) out.set(r, positions[c], static_cast<std::int64_t>(M.at(r, c)));
    return out;
}

std::vector<std::int64_t> gadget_weights(std::int64_t B) {
    if (B < 1) throw RangeError("gadget weights need B >= 1");
    const int delta = bit_length(static_cast<std::uint64_t>(B));
    std::vector<std::int64_t> w(static_cast<std::size_t>(delta));
    for (int j = 1; j <= delta; ++j) w[static_cast<std::size_t>(j - 1)] = (B + (std::int64_t{1} << (j - 1))) >> j;
    return w;
}

ZqMatrix gadget_matrix(std::size_t m, std::int64_t B, std::uint64_t q) {
    if (B < 2) throw RangeError("gadget_matrix requires B >= 2");
    const auto w = gadget_weights(B);
    const std::size_t delta = w.size();
    ZqMatrix out(m, m * delta, q);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < delta; ++j) out.set(i, i * delta + j, w[j]);
    return out;
}

IntVector gadget_apply(std::size_t m, std::int64_t B, const IntVector& x) {
    const auto w = gadget_weights(B);
    const std::size_t delta = w.size();
    if (x.size() != m * delta) throw DimensionError("gadget_apply: length is not m*delta");
    IntVector out(m, 0);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < delta; ++j) out[i] += w[j] * x[i * delta + j];
    return out;
}

ModularSolver::ModularSolver(const ZqMatrix& A) : rows_(A.rows()), cols_(A.cols()), q_(A.modulus()) {
    std::vector<Residue> a(A.data());
    transform_.assign(rows_ * rows_, 0);
    for (std::size_t i = 0; i < rows_; ++i) transform_[i * rows_ + i] = 1 % q_;
    auto row_op = [&](std::vector<Residue>& mat, std::size_t width, std::size_t dst, std::size_t src, Residue f) {
        for (std::size_t k = 0; k < width; ++k)
            mat[dst * width + k] = sub_mod(mat[dst * width + k], mul_mod(f, mat[src * width + k], q_), q_);
    };
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols_ && rank < rows_; ++c) {
        std::size_t p = rank;
        while (p < rows_ && a[p * cols_ + c] == 0) ++p;
        if (p == rows_) continue;
        if (p != rank) {
            for (std::size_t k = 0; k < cols_; ++k) std::swap(a[p * cols_ + k], a[rank * cols_ + k]);
            for (std::size_t k = 0; k < rows_; ++k) std::swap(transform_[p * rows_ + k], transform_[rank * rows_ + k]);
        }
        const Residue inv = inv_mod(a[rank * cols_ + c], q_);
        for (std::size_t k = 0; k < cols_; ++k) a[rank * cols_ + k] = mul_mod(a[rank * cols_ + k], inv, q_);
        for (std::size_t k = 0; k < rows_; ++k) transform_[rank * rows_ + k] = mul_mod(transform_[rank * rows_ + k], inv, q_);
        for (std::size_t r = 0; r < rows_; ++r) {
            if (r == rank) continue;
            const Residue f = a[r * cols_ + c];
            if (f == 0) continue;
            row_op(a, cols_, r, rank, f);
            row_op(transform_, rows_, r, rank, f);
        }
        pivots_.push_back(c);
        ++rank;
    }
}

std::optional<std::vector<Residue>> ModularSolver::solve(const std::vector<Residue>& b) const {
    if (b.size() != rows_) throw DimensionError("solve: right-hand side length mismatch");
    std::vector<Residue> y(rows_, 0);
    for (std::size_t r = 0; r < rows_; ++r) {
        unsigned __int128 acc = 0;
        for (std::size_t k = 0; k < rows_; ++k) acc += static_cast<unsigned __int128>(transform_[r * rows_ + k]) * (b[k] % q_);
        y[r] = static_cast<Residue>(acc % q_);
    }
    for (std::size_t r = pivots_.size(); r < rows_; ++r)
        if (y[r] != 0) return std::nullopt;
    std::vector<Residue> x(cols_, 0);
    for (std::size_t i = 0; i < pivots_.size(); ++i) x[pivots_[i]] = y[i];
    return x;
}

std::optional<std::vector<Residue>> solve_mod(const ZqMatrix& A, const ZqVector& b) {
    if (A.modulus() != b.modulus()) throw DimensionError("solve_mod: modulus mismatch");
    return ModularSolver(A).solve(b.entries());
}

std::optional<std::vector<Residue>> solve_sparse_mod(const SparseZqMatrix& M, const std::vector<Residue>& b) {
    const std::size_t rows = M.rows(), cols = M.cols();
    const std::uint64_t q = M.modulus();
    if (b.size() != rows) throw DimensionError("solve_sparse_mod: right-hand side length mismatch");
    const auto& rp = M.row_ptr();
    const auto& ci = M.col_idx();
    const auto& vals = M.values();

    std::vector<std::uint32_t> col_count(cols, 0);
    for (std::uint32_t c : ci) ++col_count[c];

    // Rows owning a column that appears nowhere else are solved last.
    std::vector<std::int64_t> private_col(rows, -1);
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t k = rp[r]; k < rp[r + 1]; ++k) {
            if (col_count[ci[k]] == 1) {
                private_col[r] = static_cast<std::int64_t>(k);
                break;
            }
        }
    }
    std::vector<std::size_t> core_rows;
    std::vector<std::int64_t> core_index(rows, -1);
    for (std::size_t r = 0; r < rows; ++r) {
        if (private_col[r] < 0) {
            core_index[r] = static_cast<std::int64_t>(core_rows.size());
            core_rows.push_back(r);
        }
    }
    const std::size_t kdim = core_rows.size();
    std::vector<Residue> x(cols, 0);

    if (kdim > 0) {
        // Column vectors restricted to the core rows.
        std::vector<std::vector<std::pair<std::uint32_t, Residue>>> colvecs(cols);
        for (std::size_t r : core_rows)
            for (std::size_t k = rp[r]; k < rp[r + 1]; ++k)
                colvecs[ci[k]].push_back({static_cast<std::uint32_t>(core_index[r]), vals[k]});

        // Greedy choice of an independent column set spanning the core column space.
        std::vector<std::vector<Residue>> basis;
        std::vector<std::size_t> basis_pivot;
        std::vector<std::size_t> chosen;
        for (std::size_t c = 0; c < cols && basis.size() < kdim; ++c) {
            if (colvecs[c].empty()) continue;
            std::vector<Residue> v(kdim, 0);
            for (auto [r, val] : colvecs[c]) v[r] = val;
            for (std::size_t i = 0; i < basis.size(); ++i) {
                const Residue f = v[basis_pivot[i]];
                if (f == 0) continue;
                for (std::size_t t = 0; t < kdim; ++t) v[t] = sub_mod(v[t], mul_mod(f, basis[i][t], q), q);
            }
            std::size_t p = 0;
            while (p < kdim && v[p] == 0) ++p;
            if (p == kdim) continue;
            const Residue inv = inv_mod(v[p], q);
            for (Residue& e : v) e = mul_mod(e, inv, q);
            basis.push_back(std::move(v));
            basis_pivot.push_back(p);
            chosen.push_back(c);
        }
        ZqMatrix sub(kdim, chosen.size(), q);
        for (std::size_t j = 0; j < chosen.size(); ++j)
            for (auto [r, val] : colvecs[chosen[j]]) sub.set(r, j, static_cast<std::int64_t>(val));
        std::vector<Residue> bk(kdim);
        for (std::size_t i = 0; i < kdim; ++i) bk[i] = b[core_rows[i]] % q;
        auto y = ModularSolver(sub).solve(bk);
        if (!y) return std::nullopt;
        for (std::size_t j = 0; j < chosen.size(); ++j) x[chosen[j]] = (*y)[j];
    }

    for (std::size_t r = 0; r < rows; ++r) {
        if (private_col[r] < 0) continue;
        const std::size_t pk = static_cast<std::size_t>(private_col[r]);
        unsigned __int128 acc = 0;
        for (std::size_t k = rp[r]; k < rp[r + 1]; ++k)
            if (k != pk) acc += static_cast<unsigned __int128>(vals[k]) * x[ci[k]];
        const Residue residual = sub_mod(b[r] % q, static_cast<Residue>(acc % q), q);
        x[ci[pk]] = mul_mod(residual, inv_mod(vals[pk], q), q);
    }
    return x;
}

std::optional<BitVector> solve_gf2(const BitMatrix& A, const BitVector& b) {
    if (b.size() != A.rows()) throw DimensionError("solve_gf2: right-hand side length mismatch");
    const std::size_t rows = A.rows(), cols = A.cols(), w = cols + 1;
    std::vector<std::uint8_t> a(rows * w);
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) a[r * w + c] = A.at(r, c);
        a[r * w + cols] = b[r];
    }
    std::vector<std::size_t> pivots;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t p = rank;
        while (p < rows && a[p * w + c] == 0) ++p;
        if (p == rows) continue;
        for (std::size_t k = 0; k < w; ++k) std::swap(a[p * w + k], a[rank * w + k]);
        for (std::size_t r = 0; r < rows; ++r)
            if (r != rank && a[r * w + c])
                for (std::size_t k = 0; k < w; ++k) a[r * w + k] ^= a[rank * w + k];
        pivots.push_back(c);
        ++rank;
    }
    for (std::size_t r = rank; r < rows; ++r)
        if (a[r * w + cols]) return std::nullopt;
    BitVector x(cols);
    for (std::size_t i = 0; i < pivots.size(); ++i) x.set(pivots[i], a[i * w + cols] != 0);
    return x;
}

}  // namespace tpbs
