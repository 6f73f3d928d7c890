#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "tpbs/core/modular.hpp"

namespace tpbs {

using Bytes = std::vector<std::uint8_t>;
using ByteSpan = std::span<const std::uint8_t>;
using IntVector = std::vector<std::int64_t>;

class ZqVector {
public:
    ZqVector() = default;
    ZqVector(std::size_t len, std::uint64_t modulus);
    // Throws RangeError if any entry is not reduced.
    ZqVector(std::vector<Residue> entries, std::uint64_t modulus);
    static ZqVector from_signed(const IntVector& x, std::uint64_t modulus);

    std::size_t size() const { return entries_.size(); }
    std::uint64_t modulus() const { return modulus_; }
    Residue operator[](std::size_t i) const { return entries_[i]; }
    void set(std::size_t i, std::int64_t value) { entries_[i] = reduce_signed(value, modulus_); }
    const std::vector<Residue>& entries() const { return entries_; }
    IntVector centered_entries() const;

    bool operator==(const ZqVector&) const = default;

private:
    std::uint64_t modulus_ = 0;
    std::vector<Residue> entries_;
};

class ZqMatrix {
public:
    ZqMatrix() = default;
    ZqMatrix(std::size_t rows, std::size_t cols, std::uint64_t modulus);
    ZqMatrix(std::size_t rows, std::size_t cols, std::uint64_t modulus, std::vector<Residue> row_major);
    static ZqMatrix identity(std::size_t n, std::uint64_t modulus);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::uint64_t modulus() const { return modulus_; }
    Residue at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    void set(std::size_t r, std::size_t c, std::int64_t value) { data_[r * cols_ + c] = reduce_signed(value, modulus_); }
    const Residue* row(std::size_t r) const { return data_.data() + r * cols_; }
    const std::vector<Residue>& data() const { return data_; }
    ZqVector column(std::size_t c) const;
    ZqMatrix transpose() const;

    bool operator==(const ZqMatrix&) const = default;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::uint64_t modulus_ = 0;
    std::vector<Residue> data_;
};

class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols);
    IntMatrix(std::size_t rows, std::size_t cols, std::vector<std::int64_t> row_major);
    static IntMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::int64_t at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    std::int64_t& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const std::int64_t* row(std::size_t r) const { return data_.data() + r * cols_; }
    std::int64_t* row(std::size_t r) { return data_.data() + r * cols_; }
    const std::vector<std::int64_t>& data() const { return data_; }
    IntVector column(std::size_t c) const;
    std::int64_t max_abs() const;

    bool operator==(const IntMatrix&) const = default;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<std::int64_t> data_;
};

class BitVector {
public:
    BitVector() = default;
    explicit BitVector(std::size_t len) : bits_(len, 0) {}
    // Throws RangeError on entries outside {0,1}.
    explicit BitVector(std::vector<std::uint8_t> bits);

    std::size_t size() const { return bits_.size(); }
    std::uint8_t operator[](std::size_t i) const { return bits_[i]; }
    void set(std::size_t i, bool b) { bits_[i] = b ? 1 : 0; }
    const std::vector<std::uint8_t>& bits() const { return bits_; }
    bool is_zero() const;
    BitVector concat(const BitVector& other) const;

    bool operator==(const BitVector&) const = default;
    auto operator<=>(const BitVector&) const = default;

private:
    std::vector<std::uint8_t> bits_;
};

class TritVector {
public:
    TritVector() = default;
    explicit TritVector(std::size_t len) : trits_(len, 0) {}
    // Throws RangeError on entries outside {-1,0,1}.
    explicit TritVector(std::vector<std::int8_t> trits);

    std::size_t size() const { return trits_.size(); }
    std::int8_t operator[](std::size_t i) const { return trits_[i]; }
    void set(std::size_t i, int t);
    const std::vector<std::int8_t>& trits() const { return trits_; }
    IntVector to_int() const { return IntVector(trits_.begin(), trits_.end()); }

    bool operator==(const TritVector&) const = default;

private:
    std::vector<std::int8_t> trits_;
};

class BitMatrix {
public:
    BitMatrix() = default;
    BitMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), bits_(rows * cols, 0) {}
    BitMatrix(std::size_t rows, std::size_t cols, std::vector<std::uint8_t> row_major);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::uint8_t at(std::size_t r, std::size_t c) const { return bits_[r * cols_ + c]; }
    void set(std::size_t r, std::size_t c, bool b) { bits_[r * cols_ + c] = b ? 1 : 0; }
    const std::vector<std::uint8_t>& data() const { return bits_; }
    BitVector mul(const BitVector& x) const;  // mod 2
    std::size_t rank() const;                 // over GF(2)

    bool operator==(const BitMatrix&) const = default;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<std::uint8_t> bits_;
};

// Compressed sparse rows over Z_q; no explicit zeros, columns sorted within a row.
class SparseZqMatrix {
public:
    class Builder {
    public:
        Builder(std::size_t rows, std::size_t cols, std::uint64_t modulus);
        // Rows must be filled in order; within a row columns must increase.
        void push(std::size_t row, std::size_t col, Residue value);
        SparseZqMatrix finish();

    private:
        std::size_t rows_, cols_, current_row_ = 0;
        std::uint64_t modulus_;
        std::vector<std::size_t> row_ptr_;
        std::vector<std::uint32_t> col_idx_;
        std::vector<Residue> values_;
    };

    SparseZqMatrix() = default;
    static SparseZqMatrix from_dense(const ZqMatrix& m);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::uint64_t modulus() const { return modulus_; }
    std::size_t nnz() const { return values_.size(); }
    const std::vector<std::size_t>& row_ptr() const { return row_ptr_; }
    const std::vector<std::uint32_t>& col_idx() const { return col_idx_; }
    const std::vector<Residue>& values() const { return values_; }
    Residue at(std::size_t r, std::size_t c) const;
    ZqMatrix to_dense() const;

    bool operator==(const SparseZqMatrix&) const = default;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::uint64_t modulus_ = 0;
    std::vector<std::size_t> row_ptr_{0};
    std::vector<std::uint32_t> col_idx_;
    std::vector<Residue> values_;
};

std::int64_t inf_norm(const IntVector& x);

}  // namespace tpbs
