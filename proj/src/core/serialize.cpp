#include "tpbs/core/serialize.hpp"

#include <bit>
#include <cstring>

#include "tpbs/core/errors.hpp"

namespace tpbs {

namespace {

constexpr Magic kZqVector{'Z', 'Q', 'V', 'C'};
constexpr Magic kZqMatrix{'Z', 'Q', 'M', 'X'};
constexpr Magic kIntVector{'I', 'N', 'T', 'V'};
constexpr Magic kIntMatrix{'I', 'N', 'T', 'M'};
constexpr Magic kBitVector{'B', 'I', 'T', 'V'};
constexpr Magic kTritVector{'T', 'R', 'T', 'V'};
constexpr Magic kBitMatrix{'B', 'I', 'T', 'M'};
constexpr Magic kSparse{'S', 'P', 'Z', 'Q'};
constexpr Magic kParams{'P', 'R', 'M', 'S'};

std::uint64_t zigzag(std::int64_t v) {
    return (static_cast<std::uint64_t>(v) << 1) ^ static_cast<std::uint64_t>(v >> 63);
}

std::int64_t unzigzag(std::uint64_t v) {
    return static_cast<std::int64_t>(v >> 1) ^ -static_cast<std::int64_t>(v & 1);
}

int unsigned_width(std::uint64_t max_value) {
    int w = 1;
    while (w < 8 && (max_value >> (8 * w)) != 0) ++w;
    return w;
}

void check_modulus(std::uint64_t q) {
    if (q < 2) throw DecodeError("modulus below 2");
}

}  // namespace

int residue_width(std::uint64_t modulus) { return unsigned_width(modulus - 1); }

void ByteWriter::uint(std::uint64_t v, int width) {
    const std::size_t at = out_.size();
    out_.resize(at + static_cast<std::size_t>(width));
    for (int i = 0; i < width; ++i) out_[at + static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(v >> (8 * i));
}

void ByteWriter::uints(std::span<const std::uint64_t> vs, int width) {
    const std::size_t at = out_.size();
    out_.resize(at + vs.size() * static_cast<std::size_t>(width));
    std::uint8_t* dst = out_.data() + at;
    for (std::uint64_t v : vs)
        for (int i = 0; i < width; ++i) *dst++ = static_cast<std::uint8_t>(v >> (8 * i));
}

void ByteWriter::blob(ByteSpan b) {
    u64(b.size());
    bytes(b);
}

void ByteWriter::header(const Magic& magic) {
    for (char c : magic) out_.push_back(static_cast<std::uint8_t>(c));
    out_.push_back(kFormatVersion);
}

void ByteWriter::f64(double v) { u64(std::bit_cast<std::uint64_t>(v)); }

std::uint8_t ByteReader::u8() {
    if (remaining() < 1) throw DecodeError("unexpected end of input");
    return in_[pos_++];
}

std::uint64_t ByteReader::uint(int width) {
    if (remaining() < static_cast<std::size_t>(width)) throw DecodeError("unexpected end of input");
    std::uint64_t v = 0;
    for (int i = 0; i < width; ++i) v |= static_cast<std::uint64_t>(in_[pos_ + static_cast<std::size_t>(i)]) << (8 * i);
    pos_ += static_cast<std::size_t>(width);
    return v;
}

ByteSpan ByteReader::bytes(std::size_t n) {
    if (remaining() < n) throw DecodeError("unexpected end of input");
    ByteSpan out = in_.subspan(pos_, n);
    pos_ += n;
    return out;
}

Bytes ByteReader::blob() {
    const std::size_t n = count(1);
    ByteSpan b = bytes(n);
    return Bytes(b.begin(), b.end());
}

void ByteReader::header(const Magic& magic) {
    ByteSpan tag = bytes(4);
    if (std::memcmp(tag.data(), magic.data(), 4) != 0)
        throw DecodeError("bad magic tag, expected '" + std::string(magic.data(), 4) + "'");
    const std::uint8_t version = u8();
    if (version != kFormatVersion) throw DecodeError("unsupported format version " + std::to_string(version));
}

double ByteReader::f64() { return std::bit_cast<double>(u64()); }

std::size_t ByteReader::count(std::size_t unit) {
    const std::uint64_t n = u64();
    if (unit > 0 && n > remaining() / unit) throw DecodeError("length field exceeds remaining input");
    return static_cast<std::size_t>(n);
}

void ByteReader::expect_end() const {
    if (!at_end()) throw DecodeError("trailing bytes after object");
}

void write(ByteWriter& w, const ZqVector& v) {
    w.header(kZqVector);
    w.u64(v.size());
    w.u64(v.modulus());
    const int width = residue_width(v.modulus());
    w.uints(v.entries(), width);
}

ZqVector read_zq_vector(ByteReader& r) {
    r.header(kZqVector);
    const std::uint64_t len_raw = r.u64();
    const std::uint64_t q = r.u64();
    check_modulus(q);
    const int width = residue_width(q);
    if (len_raw > r.remaining() / static_cast<std::size_t>(width)) throw DecodeError("vector length exceeds input");
    std::vector<Residue> e(static_cast<std::size_t>(len_raw));
    for (auto& x : e) {
        x = r.uint(width);
        if (x >= q) throw DecodeError("residue not reduced");
    }
    return ZqVector(std::move(e), q);
}

void write(ByteWriter& w, const ZqMatrix& m) {
    w.header(kZqMatrix);
    w.u64(m.rows());
    w.u64(m.cols());
    w.u64(m.modulus());
    const int width = residue_width(m.modulus());
    w.uints(m.data(), width);
}

ZqMatrix read_zq_matrix(ByteReader& r) {
    r.header(kZqMatrix);
    const std::uint64_t rows = r.u64();
    const std::uint64_t cols = r.u64();
    const std::uint64_t q = r.u64();
    check_modulus(q);
    const int width = residue_width(q);
    if (cols != 0 && rows > (r.remaining() / static_cast<std::size_t>(width)) / cols)
        throw DecodeError("matrix size exceeds input");
    std::vector<Residue> e(static_cast<std::size_t>(rows * cols));
    for (auto& x : e) {
        x = r.uint(width);
        if (x >= q) throw DecodeError("residue not reduced");
    }
    return ZqMatrix(rows, cols, q, std::move(e));
}

void write(ByteWriter& w, const IntVector& v) {
    w.header(kIntVector);
    w.u64(v.size());
    std::uint64_t mx = 0;
    for (std::int64_t x : v) mx = std::max(mx, zigzag(x));
    const int width = unsigned_width(mx);
    w.u8(static_cast<std::uint8_t>(width));
    for (std::int64_t x : v) w.uint(zigzag(x), width);
}

IntVector read_int_vector(ByteReader& r) {
    r.header(kIntVector);
    const std::uint64_t len = r.u64();
    const int width = r.u8();
    if (width < 1 || width > 8) throw DecodeError("bad integer width");
    if (len > r.remaining() / static_cast<std::size_t>(width)) throw DecodeError("vector length exceeds input");
    IntVector v(static_cast<std::size_t>(len));
    for (auto& x : v) x = unzigzag(r.uint(width));
    return v;
}

void write(ByteWriter& w, const IntMatrix& m) {
    w.header(kIntMatrix);
    w.u64(m.rows());
    w.u64(m.cols());
    std::uint64_t mx = 0;
    for (std::int64_t x : m.data()) mx = std::max(mx, zigzag(x));
    const int width = unsigned_width(mx);
    w.u8(static_cast<std::uint8_t>(width));
    for (std::int64_t x : m.data()) w.uint(zigzag(x), width);
}

IntMatrix read_int_matrix(ByteReader& r) {
    r.header(kIntMatrix);
    const std::uint64_t rows = r.u64();
    const std::uint64_t cols = r.u64();
    const int width = r.u8();
    if (width < 1 || width > 8) throw DecodeError("bad integer width");
    if (cols != 0 && rows > (r.remaining() / static_cast<std::size_t>(width)) / cols)
        throw DecodeError("matrix size exceeds input");
    std::vector<std::int64_t> e(static_cast<std::size_t>(rows * cols));
    for (auto& x : e) x = unzigzag(r.uint(width));
    return IntMatrix(rows, cols, std::move(e));
}

void write(ByteWriter& w, const BitVector& v) {
    w.header(kBitVector);
    w.u64(v.size());
    w.bytes(v.bits());
}

BitVector read_bit_vector(ByteReader& r) {
    r.header(kBitVector);
    const std::size_t len = r.count(1);
    ByteSpan b = r.bytes(len);
    std::vector<std::uint8_t> bits(b.begin(), b.end());
    for (auto x : bits)
        if (x > 1) throw DecodeError("bit entry outside {0,1}");
    return BitVector(std::move(bits));
}

void write(ByteWriter& w, const TritVector& v) {
    w.header(kTritVector);
    w.u64(v.size());
    for (std::int8_t t : v.trits()) w.u8(static_cast<std::uint8_t>(t + 1));
}

TritVector read_trit_vector(ByteReader& r) {
    r.header(kTritVector);
    const std::size_t len = r.count(1);
    std::vector<std::int8_t> t(len);
    for (auto& x : t) {
        const std::uint8_t b = r.u8();
        if (b > 2) throw DecodeError("trit entry outside {-1,0,1}");
        x = static_cast<std::int8_t>(b - 1);
    }
    return TritVector(std::move(t));
}

void write(ByteWriter& w, const BitMatrix& m) {
    w.header(kBitMatrix);
    w.u64(m.rows());
    w.u64(m.cols());
    w.bytes(m.data());
}

BitMatrix read_bit_matrix(ByteReader& r) {
    r.header(kBitMatrix);
    const std::uint64_t rows = r.u64();
    const std::uint64_t cols = r.u64();
    if (cols != 0 && rows > r.remaining() / cols) throw DecodeError("matrix size exceeds input");
    ByteSpan b = r.bytes(static_cast<std::size_t>(rows * cols));
    std::vector<std::uint8_t> bits(b.begin(), b.end());
    for (auto x : bits)
        if (x > 1) throw DecodeError("bit entry outside {0,1}");
    return BitMatrix(rows, cols, std::move(bits));
}

void write(ByteWriter& w, const SparseZqMatrix& m) {
    w.header(kSparse);
    w.u64(m.rows());
    w.u64(m.cols());
    w.u64(m.modulus());
    w.u64(m.nnz());
    const int width = residue_width(m.modulus());
    for (std::size_t r = 0; r < m.rows(); ++r) w.u64(m.row_ptr()[r + 1]);
    for (std::size_t k = 0; k < m.nnz(); ++k) {
        w.u32(m.col_idx()[k]);
        w.uint(m.values()[k], width);
    }
}

SparseZqMatrix read_sparse_matrix(ByteReader& r) {
    r.header(kSparse);
    const std::uint64_t rows = r.u64();
    const std::uint64_t cols = r.u64();
    const std::uint64_t q = r.u64();
    check_modulus(q);
    const std::uint64_t nnz = r.u64();
    const int width = residue_width(q);
    if (rows > r.remaining() / 8 || nnz > r.remaining() / static_cast<std::size_t>(4 + width))
        throw DecodeError("sparse matrix size exceeds input");
    std::vector<std::uint64_t> ends(static_cast<std::size_t>(rows));
    for (auto& e : ends) e = r.u64();
    SparseZqMatrix::Builder b(rows, cols, q);
    std::size_t k = 0;
    for (std::size_t row = 0; row < rows; ++row) {
        if (ends[row] < k || ends[row] > nnz) throw DecodeError("bad sparse row pointer");
        for (; k < ends[row]; ++k) {
            const std::uint32_t c = r.u32();
            const std::uint64_t v = r.uint(width);
            if (v == 0 || v >= q) throw DecodeError("bad sparse value");
            try {
                b.push(row, c, v);
            } catch (const Error& e) {
                throw DecodeError(std::string("bad sparse entry: ") + e.what());
            }
        }
    }
    if (k != nnz) throw DecodeError("sparse entry count mismatch");
    return b.finish();
}

void write(ByteWriter& w, const Params& p) {
    w.header(kParams);
    w.blob(ByteSpan(reinterpret_cast<const std::uint8_t*>(p.name.data()), p.name.size()));
    w.u64(static_cast<std::uint64_t>(p.n));
    w.u64(static_cast<std::uint64_t>(p.m));
    w.u64(p.q);
    w.u64(static_cast<std::uint64_t>(p.l1));
    w.u64(static_cast<std::uint64_t>(p.l2));
    w.u64(static_cast<std::uint64_t>(p.d));
    w.u64(static_cast<std::uint64_t>(p.kappa));
    w.u64(static_cast<std::uint64_t>(p.noise_bound));
    w.f64(p.s);
    w.f64(p.s1);
    w.u64(static_cast<std::uint64_t>(p.beta));
    w.u8(p.enforce_open_bound ? 1 : 0);
    w.bytes(p.commitment_seed);
}

Params read_params(ByteReader& r) {
    r.header(kParams);
    Params p;
    const Bytes name = r.blob();
    if (name.size() > 64) throw DecodeError("params name too long");
    p.name.assign(name.begin(), name.end());
    auto bounded = [&](std::uint64_t limit, const char* what) {
        const std::uint64_t v = r.u64();
        if (v > limit) throw DecodeError(std::string("params field out of range: ") + what);
        return v;
    };
    p.n = static_cast<std::int64_t>(bounded(1u << 16, "n"));
    p.m = static_cast<std::int64_t>(bounded(1u << 20, "m"));
    p.q = bounded(std::uint64_t{1} << 32, "q");
    p.l1 = static_cast<int>(bounded(1u << 10, "l1"));
    p.l2 = static_cast<int>(bounded(1u << 10, "l2"));
    p.d = static_cast<int>(bounded(1u << 16, "d"));
    p.kappa = static_cast<int>(bounded(1u << 12, "kappa"));
    p.noise_bound = static_cast<std::int64_t>(bounded(1u << 20, "B"));
    p.s = r.f64();
    p.s1 = r.f64();
    p.beta = static_cast<std::int64_t>(bounded(std::uint64_t{1} << 40, "beta"));
    const std::uint8_t flag = r.u8();
    if (flag > 1) throw DecodeError("bad flag byte");
    p.enforce_open_bound = flag == 1;
    ByteSpan seed = r.bytes(32);
    std::copy(seed.begin(), seed.end(), p.commitment_seed.begin());
    if (!(p.s >= 0.0) || !(p.s1 >= 0.0) || p.s > 1e12 || p.s1 > 1e12) throw DecodeError("bad width");
    try {
        p.validate();
    } catch (const ParamError& e) {
        throw DecodeError(std::string("invalid params: ") + e.what());
    }
    return p;
}

std::string bits_to_hex(const BitVector& bits) {
    static const char* digits = "0123456789abcdef";
    const std::size_t nbytes = (bits.size() + 7) / 8;
    std::string out;
    for (std::size_t byte = 0; byte < nbytes; ++byte) {
        std::uint8_t v = 0;
        for (std::size_t j = 0; j < 8; ++j) {
            const std::size_t i = byte * 8 + j;
            if (i < bits.size() && bits[i]) v |= static_cast<std::uint8_t>(0x80 >> j);
        }
        out.push_back(digits[v >> 4]);
        out.push_back(digits[v & 15]);
    }
    return out;
}

BitVector hex_to_bits(std::string_view hex, std::size_t len) {
    const Bytes bytes = hex_to_bytes(hex);
    if (bytes.size() != (len + 7) / 8)
        throw RangeError("hex string has " + std::to_string(bytes.size()) + " bytes, expected " +
                         std::to_string((len + 7) / 8) + " for " + std::to_string(len) + " bits");
    BitVector out(len);
    for (std::size_t i = 0; i < bytes.size() * 8; ++i) {
        const bool bit = (bytes[i / 8] >> (7 - i % 8)) & 1;
        if (i < len)
            out.set(i, bit);
        else if (bit)
            throw RangeError("nonzero padding bits in hex string");
    }
    return out;
}

std::string bytes_to_hex(ByteSpan bytes) {
    static const char* digits = "0123456789abcdef";
    std::string out;
    for (std::uint8_t b : bytes) {
        out.push_back(digits[b >> 4]);
        out.push_back(digits[b & 15]);
    }
    return out;
}

Bytes hex_to_bytes(std::string_view hex) {
    if (hex.size() % 2 != 0) throw RangeError("hex string has odd length");
    auto nibble = [](char c) -> int {
        if (c >= '0' && c <= '9') return c - '0';
        if (c >= 'a' && c <= 'f') return c - 'a' + 10;
        if (c >= 'A' && c <= 'F') return c - 'A' + 10;
        throw RangeError(std::string("invalid hex digit '") + c + "'");
    };
    Bytes out(hex.size() / 2);
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = static_cast<std::uint8_t>(nibble(hex[2 * i]) << 4 | nibble(hex[2 * i + 1]));
    return out;
}

}  // namespace tpbs
