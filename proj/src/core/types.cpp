#include "tpbs/core/types.hpp"

#include <algorithm>
#include <cstdlib>

#include "tpbs/core/errors.hpp"

namespace tpbs {

ZqVector::ZqVector(std::size_t len, std::uint64_t modulus) : modulus_(modulus), entries_(len, 0) {
    if (modulus < 2) throw RangeError("modulus must be at least 2");
}

ZqVector::ZqVector(std::vector<Residue> entries, std::uint64_t modulus)
    : modulus_(modulus), entries_(std::move(entries)) {
    if (modulus < 2) throw RangeError("modulus must be at least 2");
    for (Residue e : entries_)
        if (e >= modulus_) throw RangeError("vector entry not reduced modulo q");
}

ZqVector ZqVector::from_signed(const IntVector& x, std::uint64_t modulus) {
    std::vector<Residue> e(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) e[i] = reduce_signed(x[i], modulus);
    return ZqVector(std::move(e), modulus);
}

IntVector ZqVector::centered_entries() const {
    IntVector out(entries_.size());
    for (std::size_t i = 0; i < entries_.size(); ++i) out[i] = centered(entries_[i], modulus_);
    return out;
}

ZqMatrix::ZqMatrix(std::size_t rows, std::size_t cols, std::uint64_t modulus)
    : rows_(rows), cols_(cols), modulus_(modulus), data_(rows * cols, 0) {
    if (modulus < 2) throw RangeError("modulus must be at least 2");
}

ZqMatrix::ZqMatrix(std::size_t rows, std::size_t cols, std::uint64_t modulus, std::vector<Residue> row_major)
    : rows_(rows), cols_(cols), modulus_(modulus), data_(std::move(row_major)) {
    if (modulus < 2) throw RangeError("modulus must be at least 2");
    if (data_.size() != rows * cols) throw DimensionError("matrix entry count does not match rows*cols");
    for (Residue e : data_)
        if (e >= modulus_) throw RangeError("matrix entry not reduced modulo q");
}

ZqMatrix ZqMatrix::identity(std::size_t n, std::uint64_t modulus) {
    ZqMatrix out(n, n, modulus);
    for (std::size_t i = 0; i < n; ++i) out.data_[i * n + i] = 1 % modulus;
    return out;
}

ZqVector ZqMatrix::column(std::size_t c) const {
    std::vector<Residue> e(rows_);
    for (std::size_t r = 0; r < rows_; ++r) e[r] = at(r, c);
    return ZqVector(std::move(e), modulus_);
}

ZqMatrix ZqMatrix::transpose() const {
    std::vector<Residue> t(data_.size());
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t[c * rows_ + r] = data_[r * cols_ + c];
    return ZqMatrix(cols_, rows_, modulus_, std::move(t));
}

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols, std::vector<std::int64_t> row_major)
    : rows_(rows), cols_(cols), data_(std::move(row_major)) {
    if (data_.size() != rows * cols) throw DimensionError("matrix entry count does not match rows*cols");
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix out(n, n);
    for (std::size_t i = 0; i < n; ++i) out.at(i, i) = 1;
    return out;
}

IntVector IntMatrix::column(std::size_t c) const {
    IntVector out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out[r] = at(r, c);
    return out;
}

std::int64_t IntMatrix::max_abs() const {
    std::int64_t best = 0;
    for (std::int64_t v : data_) best = std::max<std::int64_t>(best, std::llabs(v));
    return best;
}

BitVector::BitVector(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
    for (std::uint8_t b : bits_)
        if (b > 1) throw RangeError("bit vector entry outside {0,1}");
}

bool BitVector::is_zero() const {
    return std::all_of(bits_.begin(), bits_.end(), [](std::uint8_t b) { return b == 0; });
}

BitVector BitVector::concat(const BitVector& other) const {
    std::vector<std::uint8_t> out(bits_);
    out.insert(out.end(), other.bits_.begin(), other.bits_.end());
    return BitVector(std::move(out));
}

TritVector::TritVector(std::vector<std::int8_t> trits) : trits_(std::move(trits)) {
    for (std::int8_t t : trits_)
        if (t < -1 || t > 1) throw RangeError("trit vector entry outside {-1,0,1}");
}

void TritVector::set(std::size_t i, int t) {
    if (t < -1 || t > 1) throw RangeError("trit outside {-1,0,1}");
    trits_[i] = static_cast<std::int8_t>(t);
}

BitMatrix::BitMatrix(std::size_t rows, std::size_t cols, std::vector<std::uint8_t> row_major)
    : rows_(rows), cols_(cols), bits_(std::move(row_major)) {
    if (bits_.size() != rows * cols) throw DimensionError("bit matrix entry count does not match rows*cols");
    for (std::uint8_t b : bits_)
        if (b > 1) throw RangeError("bit matrix entry outside {0,1}");
}

BitVector BitMatrix::mul(const BitVector& x) const {
    if (x.size() != cols_) throw DimensionError("bit matrix/vector dimension mismatch");
    std::vector<std::uint8_t> out(rows_, 0);
    for (std::size_t r = 0; r < rows_; ++r) {
        std::uint8_t acc = 0;
        for (std::size_t c = 0; c < cols_; ++c) acc ^= static_cast<std::uint8_t>(at(r, c) & x[c]);
        out[r] = acc;
    }
    return BitVector(std::move(out));
}

std::size_t BitMatrix::rank() const {
    std::vector<std::uint8_t> a(bits_);
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols_ && rank < rows_; ++c) {
        std::size_t pivot = rank;
        while (pivot < rows_ && a[pivot * cols_ + c] == 0) ++pivot;
        if (pivot == rows_) continue;
        for (std::size_t k = 0; k < cols_; ++k) std::swap(a[pivot * cols_ + k], a[rank * cols_ + k]);
        for (std::size_t r = 0; r < rows_; ++r) {
            if (r != rank && a[r * cols_ + c])
                for (std::size_t k = 0; k < cols_; ++k) a[r * cols_ + k] ^= a[rank * cols_ + k];
        }
        ++rank;
    }
    return rank;
}

SparseZqMatrix::Builder::Builder(std::size_t rows, std::size_t cols, std::uint64_t modulus)
    : rows_(rows), cols_(cols), modulus_(modulus) {
    if (modulus < 2) throw RangeError("modulus must be at least 2");
    if (cols > UINT32_MAX) throw DimensionError("sparse matrix too wide");
    row_ptr_.assign(1, 0);
}

void SparseZqMatrix::Builder::push(std::size_t row, std::size_t col, Residue value) {
    if (row >= rows_ || col >= cols_) throw DimensionError("sparse entry out of bounds");
    if (row < current_row_) throw DimensionError("sparse rows must be filled in order");
    value %= modulus_;
    if (value == 0) return;
    while (current_row_ < row) {
        row_ptr_.push_back(col_idx_.size());
        ++current_row_;
    }
    if (col_idx_.size() > row_ptr_.back() && col_idx_.back() >= col)
        throw DimensionError("sparse columns must increase within a row");
    col_idx_.push_back(static_cast<std::uint32_t>(col));
    values_.push_back(value);
}

SparseZqMatrix SparseZqMatrix::Builder::finish() {
    while (row_ptr_.size() < rows_ + 1) row_ptr_.push_back(col_idx_.size());
    SparseZqMatrix out;
    out.rows_ = rows_;
    out.cols_ = cols_;
    out.modulus_ = modulus_;
    out.row_ptr_ = std::move(row_ptr_);
    out.col_idx_ = std::move(col_idx_);
    out.values_ = std::move(values_);
    return out;
}

SparseZqMatrix SparseZqMatrix::from_dense(const ZqMatrix& m) {
    Builder b(m.rows(), m.cols(), m.modulus());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) b.push(r, c, m.at(r, c));
    return b.finish();
}

Residue SparseZqMatrix::at(std::size_t r, std::size_t c) const {
    auto begin = col_idx_.begin() + static_cast<std::ptrdiff_t>(row_ptr_[r]);
    auto end = col_idx_.begin() + static_cast<std::ptrdiff_t>(row_ptr_[r + 1]);
    auto it = std::lower_bound(begin, end, static_cast<std::uint32_t>(c));
    if (it == end || *it != c) return 0;
    return values_[static_cast<std::size_t>(it - col_idx_.begin())];
}

ZqMatrix SparseZqMatrix::to_dense() const {
    std::vector<Residue> d(rows_ * cols_, 0);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t k = row_ptr_[r]; k < row_ptr_[r + 1]; ++k) d[r * cols_ + col_idx_[k]] = values_[k];
    return ZqMatrix(rows_, cols_, modulus_, std::move(d));
}

std::int64_t inf_norm(const IntVector& x) {
    std::int64_t best = 0;
    for (std::int64_t v : x) best = std::max<std::int64_t>(best, std::llabs(v));
    return best;
}

}  // namespace tpbs
