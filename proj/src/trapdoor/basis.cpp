#include "tpbs/trapdoor/basis.hpp"

#include <algorithm>
#include <cmath>

#include "tpbs/core/errors.hpp"
#include "tpbs/gauss/sampler.hpp"
#include "tpbs/kernels/kernels.hpp"

namespace tpbs {

std::shared_ptr<const Basis> Basis::root(IntMatrix S, std::uint64_t q) {
    if (S.rows() != S.cols() || S.rows() == 0) throw DimensionError("basis must be a non-empty square matrix");
    std::shared_ptr<Basis> b(new Basis());
    b->dim_ = S.rows();
    b->q_ = q;
    b->S_ = std::move(S);
    return b;
}

std::shared_ptr<const Basis> Basis::extend(std::shared_ptr<const Basis> parent, ZqMatrix W) {
    if (!parent) throw DimensionError("extension needs a parent basis");
    if (W.rows() != parent->dim() || W.modulus() != parent->modulus())
        throw DimensionError("extension block does not match the parent basis");
    if (W.cols() == 0) return parent;
    std::shared_ptr<Basis> b(new Basis());
    b->dim_ = parent->dim() + W.cols();
    b->q_ = parent->modulus();
    b->parent_ = std::move(parent);
    b->W_ = std::move(W);
    return b;
}

const IntMatrix& Basis::root_matrix() const {
    if (!is_root()) throw DimensionError("root_matrix on an extended basis");
    return S_;
}

IntMatrix Basis::matrix() const {
    if (is_root()) return S_;
    const IntMatrix P = parent_->matrix();
    const std::size_t p = P.rows();
    IntMatrix out(dim_, dim_);
    for (std::size_t r = 0; r < p; ++r) {
        std::copy(P.row(r), P.row(r) + p, out.row(r));
        for (std::size_t j = 0; j < W_.cols(); ++j) out.at(r, p + j) = centered(W_.at(r, j), q_);
    }
    for (std::size_t j = 0; j < W_.cols(); ++j) out.at(p + j, p + j) = 1;
    return out;
}

void Basis::ensure_factor() const {
    std::call_once(factor_once_, [this] {
        const std::size_t m = dim_;
        std::vector<double> cols(m * m);
        for (std::size_t r = 0; r < m; ++r)
            for (std::size_t c = 0; c < m; ++c) cols[c * m + r] = static_cast<double>(S_.at(r, c));
        std::vector<double> gram(m * m);
        kernels::gram_columns(cols.data(), m, m, gram.data());
        if (!kernels::cholesky_upper(gram.data(), m)) throw LinearAlgebraError("basis is not full rank");
        rt_.assign(m * m, 0.0);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = i; j < m; ++j) rt_[j * m + i] = gram[i * m + j];
    });
}

std::vector<double> Basis::gs_norms() const {
    if (!is_root()) {
        std::vector<double> out = parent_->gs_norms();
        out.resize(dim_, 1.0);
        return out;
    }
    ensure_factor();
    std::vector<double> out(dim_);
    for (std::size_t i = 0; i < dim_; ++i) out[i] = rt_[i * dim_ + i];
    return out;
}

double Basis::gs_norm() const {
    const auto norms = gs_norms();
    return *std::max_element(norms.begin(), norms.end());
}

IntVector Basis::sample_coset(const IntVector& t, double s, Rng& rng) const {
    if (t.size() != dim_) throw DimensionError("target length does not match the basis");
    std::vector<Residue> tr(dim_);
    for (std::size_t i = 0; i < dim_; ++i) tr[i] = reduce_signed(t[i], q_);
    if (is_root()) return sample_root(std::move(tr), s, rng);

    const std::size_t p = parent_->dim();
    const std::size_t e = W_.cols();
    IntVector out(dim_);
    std::vector<Residue> z(e);
    for (std::size_t j = 0; j < e; ++j) {
        // Unit Gram–Schmidt vector e_{p+j}: center is the integer t_{p+j}.
        const std::int64_t noise = sample_z(GaussParams::with_log_tail(s, 0.0, static_cast<std::int64_t>(dim_)), rng);
        const std::int64_t zj = centered(tr[p + j], q_) + noise;
        out[p + j] = -noise;
        z[j] = reduce_signed(zj, q_);
    }
    std::vector<Residue> shift(p);
    kernels::matvec_mod(W_.data().data(), p, e, z.data(), q_, shift.data());
    IntVector top(p);
    for (std::size_t i = 0; i < p; ++i) top[i] = centered(sub_mod(tr[i], shift[i], q_), q_);
    const IntVector x_top = parent_->sample_coset(top, s, rng);
    std::copy(x_top.begin(), x_top.end(), out.begin());
    return out;
}

IntVector Basis::sample_root(std::vector<Residue> tr, double s, Rng& rng) const {
    ensure_factor();
    const std::size_t m = dim_;
    IntVector t(m);
    for (std::size_t i = 0; i < m; ++i) t[i] = centered(tr[i], q_);

    // y = R^{-T}·Sᵀ·t, coordinates of t along the normalized GS directions.
    std::vector<double> y(m, 0.0);
    for (std::size_t r = 0; r < m; ++r) {
        const double tv = static_cast<double>(t[r]);
        if (tv == 0.0) continue;
        const std::int64_t* row = S_.row(r);
        for (std::size_t c = 0; c < m; ++c) y[c] += static_cast<double>(row[c]) * tv;
    }
    for (std::size_t i = 0; i < m; ++i) {
        const double* li = rt_.data() + i * m;
        double acc = y[i];
        for (std::size_t k = 0; k < i; ++k) acc -= li[k] * y[k];
        y[i] = acc / li[i];
    }

    IntVector z(m);
    const auto dim = static_cast<std::int64_t>(m);
    for (std::size_t i = m; i-- > 0;) {
        const double* li = rt_.data() + i * m;
        const double rii = li[i];
        z[i] = sample_z(GaussParams::with_log_tail(s / rii, y[i] / rii, dim), rng);
        const double zi = static_cast<double>(z[i]);
        if (zi != 0.0)
            for (std::size_t k = 0; k <= i; ++k) y[k] -= zi * li[k];
    }

    // x = t − S·z exactly.
    IntVector x(t);
    for (std::size_t r = 0; r < m; ++r) {
        const std::int64_t* row = S_.row(r);
        std::int64_t acc = 0;
        for (std::size_t c = 0; c < m; ++c) acc += row[c] * z[c];
        x[r] -= acc;
    }
    return x;
}

}  // namespace tpbs
