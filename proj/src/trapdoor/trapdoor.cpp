#include "tpbs/trapdoor/trapdoor.hpp"

#include <algorithm>
#include <cmath>

#include "tpbs/core/errors.hpp"
#include "tpbs/core/params.hpp"
#include "tpbs/kernels/kernels.hpp"

namespace tpbs {

namespace {

// Largest Gram–Schmidt norm of the first `count` columns of S.
double leading_gs_norm(const IntMatrix& S, std::size_t count) {
    const std::size_t dim = S.rows();
    std::vector<double> cols(dim * count);
    for (std::size_t r = 0; r < dim; ++r)
        for (std::size_t c = 0; c < count; ++c) cols[c * dim + r] = static_cast<double>(S.at(r, c));
    std::vector<double> gram(count * count);
    kernels::gram_columns(cols.data(), dim, count, gram.data());
    if (!kernels::cholesky_upper(gram.data(), count)) throw LinearAlgebraError("trapdoor block is rank deficient");
    double mx = 0.0;
    for (std::size_t i = 0; i < count; ++i) mx = std::max(mx, gram[i * count + i]);
    return mx;
}

bool annihilates(const ZqMatrix& A, const IntMatrix& S) {
    const ZqMatrix AS = mat_mul(A, S);
    return std::all_of(AS.data().begin(), AS.data().end(), [](Residue x) { return x == 0; });
}

}  // namespace

IntMatrix gadget_basis(std::uint64_t q) {
    const auto k = static_cast<std::size_t>(ceil_log2(q));
    IntMatrix Sk(k, k);
    for (std::size_t i = 0; i < k; ++i) {
        if (i + 1 < k) {
            Sk.at(i, i) = 2;
            Sk.at(i + 1, i) = -1;
        }
        Sk.at(i, k - 1) = static_cast<std::int64_t>((q >> i) & 1);
    }
    return Sk;
}

TrapdoorPair trap_gen(std::size_t n, std::size_t m, std::uint64_t q, Rng& rng) {
    if (!is_prime(q)) throw ParamError("trap_gen needs a prime modulus");
    const auto k = static_cast<std::size_t>(ceil_log2(q));
    const std::size_t nk = n * k;
    if (m < 2 * nk) throw ParamError("trap_gen needs m >= 2n*ceil(log2 q)");
    const std::size_t mbar = m - nk;
    const IntMatrix Sk = gadget_basis(q);

    for (int attempt = 0; attempt < kTrapGenAttempts; ++attempt) {
        ZqMatrix Abar(n, mbar, q);
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < mbar; ++c) Abar.set(r, c, static_cast<std::int64_t>(rng.uniform(q)));
        IntMatrix R(mbar, nk);
        for (std::size_t r = 0; r < mbar; ++r)
            for (std::size_t c = 0; c < nk; ++c) R.at(r, c) = rng.trit();

        // A = [Ā | G − Ā·R]
        const ZqMatrix AR = mat_mul(Abar, R);
        ZqMatrix A(n, m, q);
        for (std::size_t r = 0; r < n; ++r) {
            for (std::size_t c = 0; c < mbar; ++c) A.set(r, c, static_cast<std::int64_t>(Abar.at(r, c)));
            for (std::size_t c = 0; c < nk; ++c) {
                const Residue g = (c / k == r) ? pow_mod(2, c % k, q) : 0;
                A.set(r, mbar + c, static_cast<std::int64_t>(sub_mod(g, AR.at(r, c), q)));
            }
        }

        // Columns 0..nk−1: [R·s_j; s_j] for s_j in I_n ⊗ S_k.
        // Columns nk..m−1: [e_i + R·w_i; w_i] with G·w_i = −Ā·e_i.
        IntMatrix S(m, m);
        for (std::size_t j = 0; j < nk; ++j) {
            const std::size_t blk = j / k, jj = j % k;
            IntVector sj(nk, 0);
            for (std::size_t i = 0; i < k; ++i) sj[blk * k + i] = Sk.at(i, jj);
            for (std::size_t r = 0; r < mbar; ++r) {
                std::int64_t acc = 0;
                for (std::size_t i = 0; i < k; ++i) acc += R.at(r, blk * k + i) * sj[blk * k + i];
                S.at(r, j) = acc;
            }
            for (std::size_t i = 0; i < nk; ++i) S.at(mbar + i, j) = sj[i];
        }
        for (std::size_t c = 0; c < mbar; ++c) {
            const std::size_t col = nk + c;
            IntVector w(nk, 0);
            for (std::size_t r = 0; r < n; ++r) {
                const Residue target = (q - Abar.at(r, c)) % q;
                for (std::size_t i = 0; i < k; ++i) w[r * k + i] = static_cast<std::int64_t>((target >> i) & 1);
            }
            for (std::size_t r = 0; r < mbar; ++r) {
                std::int64_t acc = (r == c) ? 1 : 0;
                const std::int64_t* Rr = R.row(r);
                for (std::size_t i = 0; i < nk; ++i) acc += Rr[i] * w[i];
                S.at(r, col) = acc;
            }
            for (std::size_t i = 0; i < nk; ++i) S.at(mbar + i, col) = w[i];
        }

        if (!annihilates(A, S)) continue;
        double bound = 0.0;
        for (std::size_t j = 0; j < nk; ++j) {
            double sq = 0.0;
            for (std::size_t r = 0; r < m; ++r) sq += static_cast<double>(S.at(r, j)) * static_cast<double>(S.at(r, j));
            bound = std::max(bound, std::sqrt(sq));
        }
        double measured;
        try {
            measured = std::max(1.0, leading_gs_norm(S, nk));
        } catch (const LinearAlgebraError&) {
            continue;
        }
        auto solver = std::make_shared<const ModularSolver>(A);
        if (solver->rank() != n) continue;
        TrapdoorPair out;
        out.A = std::move(A);
        out.basis = Basis::root(std::move(S), q);
        out.solver = std::move(solver);
        out.quality_bound = bound;
        out.gs_norm = measured;
        return out;
    }
    throw LinearAlgebraError("trap_gen failed after " + std::to_string(kTrapGenAttempts) + " attempts");
}

GramSchmidt gram_schmidt(const IntMatrix& S) {
    if (S.rows() != S.cols()) throw DimensionError("gram_schmidt needs a square matrix");
    const std::size_t dim = S.rows();
    GramSchmidt gs;
    gs.vectors.resize(dim * dim);
    for (std::size_t r = 0; r < dim; ++r)
        for (std::size_t c = 0; c < dim; ++c) gs.vectors[c * dim + r] = static_cast<double>(S.at(r, c));
    std::vector<double> sq(dim);
    kernels::modified_gram_schmidt(gs.vectors.data(), dim, dim, sq.data());
    double scale = 1.0;
    for (std::size_t c = 0; c < dim; ++c) {
        double col = 0.0;
        for (std::size_t r = 0; r < dim; ++r) col += gs.vectors[c * dim + r] * gs.vectors[c * dim + r];
        scale = std::max(scale, col);
    }
    gs.norms.resize(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        if (sq[i] <= 1e-18 * scale) throw LinearAlgebraError("gram_schmidt: matrix is rank deficient");
        gs.norms[i] = std::sqrt(sq[i]);
        gs.max_norm = std::max(gs.max_norm, gs.norms[i]);
    }
    return gs;
}

TrapdoorPair ext_basis(const TrapdoorPair& T, const ZqMatrix& A_ext) {
    const ZqMatrix& A = T.A;
    if (A_ext.rows() != A.rows() || A_ext.cols() < A.cols() || A_ext.modulus() != A.modulus())
        throw DimensionError("ext_basis: A is not a left block of A'");
    for (std::size_t r = 0; r < A.rows(); ++r)
        if (!std::equal(A.row(r), A.row(r) + A.cols(), A_ext.row(r)))
            throw DimensionError("ext_basis: A is not a left block of A'");
    if (A_ext.cols() == A.cols()) return T;

    const std::uint64_t q = A.modulus();
    const std::size_t p = A.cols();
    const std::size_t e = A_ext.cols() - p;
    // W_j solves A·W_j = −A₊·e_j; only the root block of A is used.
    const std::size_t root_dim = [&] {
        const Basis* b = T.basis.get();
        while (!b->is_root()) b = b->parent();
        return b->dim();
    }();
    ZqMatrix W(p, e, q);
    std::vector<Residue> rhs(A.rows());
    for (std::size_t j = 0; j < e; ++j) {
        for (std::size_t r = 0; r < A.rows(); ++r) rhs[r] = (q - A_ext.at(r, p + j)) % q;
        const auto sol = T.solver->solve(rhs);
        if (!sol) throw LinearAlgebraError("ext_basis: A does not have full row rank");
        for (std::size_t r = 0; r < root_dim; ++r) W.set(r, j, static_cast<std::int64_t>((*sol)[r]));
    }
    TrapdoorPair out;
    out.A = A_ext;
    out.basis = Basis::extend(T.basis, std::move(W));
    out.solver = T.solver;
    out.quality_bound = T.quality_bound;
    out.gs_norm = T.gs_norm;
    return out;
}

IntVector sample_d(const TrapdoorPair& T, const ZqVector& u, double s, Rng& rng) {
    if (u.size() != T.A.rows() || u.modulus() != T.A.modulus()) throw DimensionError("sample_d: target mismatch");
    const std::size_t dim = T.basis->dim();
    const double needed = T.basis->gs_norm() * sampler_width_factor(dim);
    if (s < needed)
        throw SamplerError("sample_d: width " + std::to_string(s) + " below ||S~||*factor = " + std::to_string(needed));
    const auto sol = T.solver->solve(u.entries());
    if (!sol) throw LinearAlgebraError("sample_d: coset is empty");
    IntVector x0(dim, 0);
    for (std::size_t i = 0; i < sol->size(); ++i) x0[i] = centered((*sol)[i], T.A.modulus());
    IntVector x = T.basis->sample_coset(x0, s, rng);
    if (mat_vec_mul(T.A, x, T.A.modulus()) != u) throw SamplerError("sample_d: output left the coset");
    return x;
}

namespace {
constexpr Magic kTrapdoor{'T', 'R', 'A', 'P'};
}

void write(ByteWriter& w, const TrapdoorPair& t) {
    if (!t.basis->is_root()) throw DimensionError("only root trapdoors are serialized");
    w.header(kTrapdoor);
    write(w, t.A);
    write(w, t.basis->root_matrix());
    w.f64(t.quality_bound);
    w.f64(t.gs_norm);
}

TrapdoorPair read_trapdoor(ByteReader& r) {
    r.header(kTrapdoor);
    TrapdoorPair t;
    t.A = read_zq_matrix(r);
    IntMatrix S = read_int_matrix(r);
    t.quality_bound = r.f64();
    t.gs_norm = r.f64();
    if (S.rows() != t.A.cols() || S.cols() != t.A.cols()) throw DecodeError("trapdoor basis has wrong shape");
    if (!(t.gs_norm >= 1.0) || !(t.quality_bound >= t.gs_norm) || t.quality_bound > 1e9)
        throw DecodeError("trapdoor quality fields out of range");
    if (!annihilates(t.A, S)) throw DecodeError("trapdoor basis is not in the kernel of A");
    auto solver = std::make_shared<const ModularSolver>(t.A);
    if (solver->rank() != t.A.rows()) throw DecodeError("trapdoor matrix is not full rank");
    t.solver = std::move(solver);
    t.basis = Basis::root(std::move(S), t.A.modulus());
    return t;
}

}  // namespace tpbs
