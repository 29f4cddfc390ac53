#include "convcodes/gf2.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <tuple>

#include "convcodes/errors.hpp"

namespace convcodes {

// ---------------------------------------------------------------- BitVector

BitVector::BitVector(std::size_t len) : len_(len), words_(words_for(len), 0) {
    if (len == 0) throw DimensionError("BitVector length must be at least 1");
}

BitVector BitVector::from_string(std::string_view bits) {
    BitVector v(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] == '1')
            v.set(i);
        else if (bits[i] != '0')
            throw InvalidArgument("bit string may only contain '0' and '1'");
    }
    return v;
}

BitVector BitVector::from_support(std::size_t len, const IndexSet& support) {
    BitVector v(len);
    for (std::size_t i : support) {
        if (i >= len) throw DimensionError("support index out of range");
        v.set(i);
    }
    return v;
}

void BitVector::set(std::size_t i, bool value) {
    const Word bit = Word{1} << (i % kWordBits);
    if (value)
        words_[i / kWordBits] |= bit;
    else
        words_[i / kWordBits] &= ~bit;
}

std::size_t BitVector::weight() const {
    std::size_t w = 0;
    for (Word x : words_) w += static_cast<std::size_t>(std::popcount(x));
    return w;
}

bool BitVector::is_zero() const {
    return std::all_of(words_.begin(), words_.end(), [](Word x) { return x == 0; });
}

IndexSet BitVector::support() const {
    IndexSet out;
    for (std::size_t w = 0; w < words_.size(); ++w) {
        Word x = words_[w];
        while (x != 0) {
            out.push_back(w * kWordBits + static_cast<std::size_t>(std::countr_zero(x)));
            x &= x - 1;
        }
    }
    return out;
}

bool BitVector::dot(const BitVector& other) const {
    if (other.len_ != len_) throw DimensionError("dot: length mismatch");
    Word acc = 0;
    for (std::size_t w = 0; w < words_.size(); ++w) acc ^= words_[w] & other.words_[w];
    return (std::popcount(acc) & 1) != 0;
}

BitVector& BitVector::operator^=(const BitVector& other) {
    if (other.len_ != len_) throw DimensionError("xor: length mismatch");
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= other.words_[w];
    return *this;
}

BitVector BitVector::select(const IndexSet& coords) const {
    BitVector out(coords.size());
    for (std::size_t i = 0; i < coords.size(); ++i) {
        if (coords[i] >= len_) throw DimensionError("select: coordinate out of range");
        if (get(coords[i])) out.set(i);
    }
    return out;
}

BitVector BitVector::concat(const BitVector& tail) const {
    BitVector out(len_ + tail.len_);
    for (std::size_t i = 0; i < len_; ++i)
        if (get(i)) out.set(i);
    for (std::size_t i = 0; i < tail.len_; ++i)
        if (tail.get(i)) out.set(len_ + i);
    return out;
}

std::string BitVector::to_string() const {
    std::string s(len_, '0');
    for (std::size_t i = 0; i < len_; ++i)
        if (get(i)) s[i] = '1';
    return s;
}

// ---------------------------------------------------------------- BitMatrix

BitMatrix::BitMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), stride_(words_for(cols)), data_(rows * stride_, 0) {
    if (rows == 0 || cols == 0) throw DimensionError("BitMatrix needs at least one row and one column");
}

BitMatrix BitMatrix::identity(std::size_t n) {
    BitMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i);
    return m;
}

BitMatrix BitMatrix::from_strings(const std::vector<std::string>& rows) {
    if (rows.empty()) throw DimensionError("matrix needs at least one row");
    BitMatrix m(rows.size(), rows.front().size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != m.cols_) throw DimensionError("ragged matrix rows");
        m.set_row(r, BitVector::from_string(rows[r]));
    }
    return m;
}

BitMatrix BitMatrix::from_rows(const std::vector<BitVector>& rows) {
    if (rows.empty()) throw DimensionError("matrix needs at least one row");
    BitMatrix m(rows.size(), rows.front().size());
    for (std::size_t r = 0; r < rows.size(); ++r) m.set_row(r, rows[r]);
    return m;
}

BitMatrix BitMatrix::from_columns(const std::vector<BitVector>& cols) {
    if (cols.empty()) throw DimensionError("matrix needs at least one column");
    BitMatrix m(cols.front().size(), cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) m.set_column(c, cols[c]);
    return m;
}

void BitMatrix::set(std::size_t r, std::size_t c, bool value) {
    Word& w = data_[r * stride_ + c / kWordBits];
    const Word bit = Word{1} << (c % kWordBits);
    if (value)
        w |= bit;
    else
        w &= ~bit;
}

BitVector BitMatrix::row(std::size_t r) const {
    BitVector v(cols_);
    std::copy_n(data_.begin() + static_cast<std::ptrdiff_t>(r * stride_), stride_, v.words().begin());
    return v;
}

BitVector BitMatrix::column(std::size_t c) const {
    BitVector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        if (get(r, c)) v.set(r);
    return v;
}

void BitMatrix::set_row(std::size_t r, const BitVector& v) {
    if (v.size() != cols_) throw DimensionError("set_row: length mismatch");
    std::copy(v.words().begin(), v.words().end(), data_.begin() + static_cast<std::ptrdiff_t>(r * stride_));
}

void BitMatrix::set_column(std::size_t c, const BitVector& v) {
    if (v.size() != rows_) throw DimensionError("set_column: length mismatch");
    for (std::size_t r = 0; r < rows_; ++r) set(r, c, v.get(r));
}

void BitMatrix::xor_row(std::size_t dst, std::size_t src) {
    Word* d = data_.data() + dst * stride_;
    const Word* s = data_.data() + src * stride_;
    for (std::size_t w = 0; w < stride_; ++w) d[w] ^= s[w];
}

void BitMatrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    std::swap_ranges(data_.begin() + static_cast<std::ptrdiff_t>(a * stride_),
                     data_.begin() + static_cast<std::ptrdiff_t>((a + 1) * stride_),
                     data_.begin() + static_cast<std::ptrdiff_t>(b * stride_));
}

std::size_t BitMatrix::column_weight(std::size_t c) const {
    std::size_t w = 0;
    for (std::size_t r = 0; r < rows_; ++r) w += get(r, c) ? 1 : 0;
    return w;
}

IndexSet BitMatrix::column_support(std::size_t c) const {
    IndexSet out;
    for (std::size_t r = 0; r < rows_; ++r)
        if (get(r, c)) out.push_back(r);
    return out;
}

BitMatrix BitMatrix::transpose() const {
    BitMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            if (get(r, c)) t.set(c, r);
    return t;
}

BitMatrix BitMatrix::select_columns(const IndexSet& cols) const {
    BitMatrix out(rows_, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (cols[j] >= cols_) throw DimensionError("select_columns: index out of range");
        for (std::size_t r = 0; r < rows_; ++r)
            if (get(r, cols[j])) out.set(r, j);
    }
    return out;
}

BitMatrix BitMatrix::select_rows(const IndexSet& rows) const {
    BitMatrix out(rows.size(), cols_);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i] >= rows_) throw DimensionError("select_rows: index out of range");
        out.set_row(i, row(rows[i]));
    }
    return out;
}

std::vector<std::string> BitMatrix::to_strings() const {
    std::vector<std::string> out;
    out.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out.push_back(row(r).to_string());
    return out;
}

std::strong_ordering BitMatrix::lex_compare(const BitMatrix& other) const {
    for (std::size_t r = 0; r < std::min(rows_, other.rows_); ++r) {
        for (std::size_t w = 0; w < std::min(stride_, other.stride_); ++w) {
            const Word a = data_[r * stride_ + w];
            const Word b = other.data_[r * other.stride_ + w];
            if (a != b) {
                // First differing column is the lowest differing bit.
                const Word low = (a ^ b) & ~((a ^ b) - 1);
                return (a & low) ? std::strong_ordering::greater : std::strong_ordering::less;
            }
        }
    }
    return std::tie(rows_, cols_) <=> std::tie(other.rows_, other.cols_);
}

// ---------------------------------------------------------------- assembly

BitMatrix block_diagonal(const std::vector<BitMatrix>& blocks) {
    if (blocks.empty()) throw DimensionError("block_diagonal: no blocks");
    std::size_t rows = 0;
    std::size_t cols = 0;
    for (const auto& b : blocks) {
        rows += b.rows();
        cols += b.cols();
    }
    BitMatrix out(rows, cols);
    std::size_t r0 = 0;
    std::size_t c0 = 0;
    for (const auto& b : blocks) {
        for (std::size_t r = 0; r < b.rows(); ++r)
            for (std::size_t c = 0; c < b.cols(); ++c)
                if (b.get(r, c)) out.set(r0 + r, c0 + c);
        r0 += b.rows();
        c0 += b.cols();
    }
    return out;
}

BitMatrix stack_rows(const std::vector<BitMatrix>& parts) {
    if (parts.empty()) throw DimensionError("stack_rows: no parts");
    std::size_t rows = 0;
    for (const auto& p : parts) {
        if (p.cols() != parts.front().cols()) throw DimensionError("stack_rows: column mismatch");
        rows += p.rows();
    }
    BitMatrix out(rows, parts.front().cols());
    std::size_t r0 = 0;
    for (const auto& p : parts)
        for (std::size_t r = 0; r < p.rows(); ++r) out.set_row(r0++, p.row(r));
    return out;
}

BitMatrix stack_columns(const std::vector<BitMatrix>& parts) {
    if (parts.empty()) throw DimensionError("stack_columns: no parts");
    std::size_t cols = 0;
    for (const auto& p : parts) {
        if (p.rows() != parts.front().rows()) throw DimensionError("stack_columns: row mismatch");
        cols += p.cols();
    }
    BitMatrix out(parts.front().rows(), cols);
    std::size_t c0 = 0;
    for (const auto& p : parts) {
        for (std::size_t r = 0; r < p.rows(); ++r)
            for (std::size_t c = 0; c < p.cols(); ++c)
                if (p.get(r, c)) out.set(r, c0 + c);
        c0 += p.cols();
    }
    return out;
}

// ---------------------------------------------------------------- elimination

RrefResult rref(const BitMatrix& m) {
    BitMatrix a = m;
    std::vector<std::size_t> pivots;
    std::size_t next = 0;
    for (std::size_t c = 0; c < a.cols() && next < a.rows(); ++c) {
        std::size_t p = next;
        while (p < a.rows() && !a.get(p, c)) ++p;
        if (p == a.rows()) continue;
        a.swap_rows(p, next);
        for (std::size_t r = 0; r < a.rows(); ++r)
            if (r != next && a.get(r, c)) a.xor_row(r, next);
        pivots.push_back(c);
        ++next;
    }
    return {std::move(a), std::move(pivots)};
}

std::size_t rank(const BitMatrix& m) {
    // Forward elimination only; cheaper than full rref.
    BitMatrix a = m;
    std::size_t next = 0;
    for (std::size_t c = 0; c < a.cols() && next < a.rows(); ++c) {
        std::size_t p = next;
        while (p < a.rows() && !a.get(p, c)) ++p;
        if (p == a.rows()) continue;
        a.swap_rows(p, next);
        for (std::size_t r = next + 1; r < a.rows(); ++r)
            if (a.get(r, c)) a.xor_row(r, next);
        ++next;
    }
    return next;
}

BitMatrix mat_mul(const BitMatrix& a, const BitMatrix& b) {
    if (a.cols() != b.rows()) throw DimensionError("mat_mul: inner dimensions differ");
    BitMatrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        auto dst = out.row_span(i);
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (!a.get(i, k)) continue;
            auto src = b.row_span(k);
            for (std::size_t w = 0; w < dst.size(); ++w) dst[w] ^= src[w];
        }
    }
    return out;
}

BitVector vec_mul(const BitVector& u, const BitMatrix& m) {
    if (u.size() != m.rows()) throw DimensionError("vec_mul: length mismatch");
    BitVector out(m.cols());
    auto dst = out.words();
    for (std::size_t k : u.support()) {
        auto src = m.row_span(k);
        for (std::size_t w = 0; w < dst.size(); ++w) dst[w] ^= src[w];
    }
    return out;
}

BitVector mat_vec(const BitMatrix& m, const BitVector& x) {
    if (x.size() != m.cols()) throw DimensionError("mat_vec: length mismatch");
    BitVector out(m.rows());
    const auto xs = x.words();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Word acc = 0;
        auto row = m.row_span(r);
        for (std::size_t w = 0; w < row.size(); ++w) acc ^= row[w] & xs[w];
        if (std::popcount(acc) & 1) out.set(r);
    }
    return out;
}

std::optional<BitVector> solve(const BitMatrix& a, const BitVector& b) {
    if (b.size() != a.rows()) throw DimensionError("solve: right-hand side length mismatch");
    BitMatrix aug(a.rows(), a.cols() + 1);
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c)
            if (a.get(r, c)) aug.set(r, c);
        if (b.get(r)) aug.set(r, a.cols());
    }
    const RrefResult red = rref(aug);
    if (!red.pivots.empty() && red.pivots.back() == a.cols()) return std::nullopt;
    BitVector x(a.cols());
    for (std::size_t i = 0; i < red.pivots.size(); ++i)
        if (red.matrix.get(i, a.cols())) x.set(red.pivots[i]);
    return x;
}

std::vector<BitVector> right_kernel_basis(const BitMatrix& a) {
    const RrefResult red = rref(a);
    std::vector<bool> is_pivot(a.cols(), false);
    for (std::size_t p : red.pivots) is_pivot[p] = true;
    std::vector<BitVector> basis;
    for (std::size_t f = 0; f < a.cols(); ++f) {
        if (is_pivot[f]) continue;
        BitVector x(a.cols());
        x.set(f);
        for (std::size_t i = 0; i < red.pivots.size(); ++i)
            if (red.matrix.get(i, f)) x.set(red.pivots[i]);
        basis.push_back(std::move(x));
    }
    return basis;
}

bool same_row_space(const BitMatrix& a, const BitMatrix& b) {
    if (a.cols() != b.cols()) return false;
    const std::size_t ra = rank(a);
    if (ra != rank(b)) return false;
    return rank(stack_rows({a, b})) == ra;
}

// ---------------------------------------------------------------- GL(k, 2)

double count_invertible(std::size_t k) {
    double total = 1.0;
    const double full = std::ldexp(1.0, static_cast<int>(k));
    for (std::size_t i = 0; i < k; ++i) total *= full - std::ldexp(1.0, static_cast<int>(i));
    return total;
}

void enumerate_invertible(std::size_t k, double limit,
                          const std::function<bool(const BitMatrix&)>& visit) {
    if (k == 0) throw InvalidArgument("enumerate_invertible: k must be at least 1");
    const double total = count_invertible(k);
    if (total > limit)
        throw SizeGuardError("enumerate_invertible: " + std::to_string(total) +
                                 " matrices exceed limit " + std::to_string(limit),
                             total);
    if (k > 16) throw SizeGuardError("enumerate_invertible: k too large", total);

    // Row values are k-bit integers whose most significant bit is column 0, so
    // increasing integers give lexicographic row strings.
    const std::size_t space = std::size_t{1} << k;
    std::vector<std::uint32_t> rows(k, 0);
    // span[d] marks the span of rows[0..d).
    std::vector<std::vector<char>> span(k + 1, std::vector<char>(space, 0));
    span[0][0] = 1;
    BitMatrix current(k, k);

    auto write_row = [&](std::size_t r, std::uint32_t value) {
        for (std::size_t c = 0; c < k; ++c) current.set(r, c, (value >> (k - 1 - c)) & 1U);
    };

    bool stop = false;
    std::function<void(std::size_t)> descend = [&](std::size_t depth) {
        if (depth == k) {
            if (!visit(current)) stop = true;
            return;
        }
        for (std::uint32_t v = 1; v < space && !stop; ++v) {
            if (span[depth][v]) continue;
            rows[depth] = v;
            write_row(depth, v);
            auto& next = span[depth + 1];
            for (std::size_t x = 0; x < space; ++x) next[x] = span[depth][x] || span[depth][x ^ v];
            descend(depth + 1);
        }
    };
    descend(0);
}

}  // namespace convcodes
