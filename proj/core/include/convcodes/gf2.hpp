#pragma once

// Dense linear algebra over GF(2).
//
// Rows are bit-packed into 64-bit words (bit c of a row lives in word c / 64
// at position c % 64), so row elimination is a word-parallel XOR.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace convcodes {

using Word = std::uint64_t;
inline constexpr std::size_t kWordBits = 64;

// Sorted, duplicate-free list of 0-based coordinates.
using IndexSet = std::vector<std::size_t>;

inline std::size_t words_for(std::size_t bits) { return (bits + kWordBits - 1) / kWordBits; }

class BitVector {
public:
    // All-zero vector of the given length; len must be at least 1.
    explicit BitVector(std::size_t len);

    // Parses a string of '0'/'1' characters.
    static BitVector from_string(std::string_view bits);
    // Vector with ones exactly at the given coordinates.
    static BitVector from_support(std::size_t len, const IndexSet& support);

    std::size_t size() const { return len_; }

    bool get(std::size_t i) const { return (words_[i / kWordBits] >> (i % kWordBits)) & 1U; }
    void set(std::size_t i, bool value = true);
    void flip(std::size_t i) { words_[i / kWordBits] ^= Word{1} << (i % kWordBits); }

    std::size_t weight() const;
    bool is_zero() const;
    IndexSet support() const;
    // Inner product mod 2; lengths must agree.
    bool dot(const BitVector& other) const;

    BitVector& operator^=(const BitVector& other);
    friend BitVector operator^(BitVector a, const BitVector& b) { return a ^= b; }
    friend bool operator==(const BitVector&, const BitVector&) = default;

    // Restriction to the given coordinates, in the order given.
    BitVector select(const IndexSet& coords) const;
    // Concatenation of this vector followed by `tail`.
    BitVector concat(const BitVector& tail) const;

    std::string to_string() const;

    std::span<const Word> words() const { return words_; }
    std::span<Word> words() { return words_; }

private:
    std::size_t len_;
    std::vector<Word> words_;
};

class BitMatrix {
public:
    // All-zero matrix; rows and cols must both be at least 1.
    BitMatrix(std::size_t rows, std::size_t cols);

    static BitMatrix identity(std::size_t n);
    // Each string is one row of '0'/'1' characters; all rows the same length.
    static BitMatrix from_strings(const std::vector<std::string>& rows);
    static BitMatrix from_rows(const std::vector<BitVector>& rows);
    // Matrix whose columns are the given vectors.
    static BitMatrix from_columns(const std::vector<BitVector>& cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t row_words() const { return stride_; }

    bool get(std::size_t r, std::size_t c) const {
        return (data_[r * stride_ + c / kWordBits] >> (c % kWordBits)) & 1U;
    }
    void set(std::size_t r, std::size_t c, bool value = true);

    std::span<const Word> row_span(std::size_t r) const { return {data_.data() + r * stride_, stride_}; }
    std::span<Word> row_span(std::size_t r) { return {data_.data() + r * stride_, stride_}; }

    BitVector row(std::size_t r) const;
    BitVector column(std::size_t c) const;
    void set_row(std::size_t r, const BitVector& v);
    void set_column(std::size_t c, const BitVector& v);

    // row[dst] ^= row[src]
    void xor_row(std::size_t dst, std::size_t src);
    void swap_rows(std::size_t a, std::size_t b);

    std::size_t column_weight(std::size_t c) const;
    IndexSet column_support(std::size_t c) const;

    BitMatrix transpose() const;
    BitMatrix select_columns(const IndexSet& cols) const;
    BitMatrix select_rows(const IndexSet& rows) const;

    std::vector<std::string> to_strings() const;

    friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

    // Lexicographic order on the row-major bit string (rows, then columns,
    // with 0 < 1). Only meaningful for equal shapes.
    std::strong_ordering lex_compare(const BitMatrix& other) const;

private:
    std::size_t rows_;
    std::size_t cols_;
    std::size_t stride_;
    std::vector<Word> data_;
};

// [[a, 0], [0, b]]
BitMatrix block_diagonal(const std::vector<BitMatrix>& blocks);
// Vertical concatenation; all parts must have the same column count.
BitMatrix stack_rows(const std::vector<BitMatrix>& parts);
// Horizontal concatenation; all parts must have the same row count.
BitMatrix stack_columns(const std::vector<BitMatrix>& parts);

std::size_t rank(const BitMatrix& m);

struct RrefResult {
    BitMatrix matrix;
    std::vector<std::size_t> pivots;  // strictly increasing pivot columns
};

RrefResult rref(const BitMatrix& m);

// A * B over GF(2).
BitMatrix mat_mul(const BitMatrix& a, const BitMatrix& b);
// Row vector times matrix: u * M.
BitVector vec_mul(const BitVector& u, const BitMatrix& m);
// Matrix times column vector: M * x.
BitVector mat_vec(const BitMatrix& m, const BitVector& x);

// Some x with A * x = b, free variables set to 0; nullopt when inconsistent.
std::optional<BitVector> solve(const BitMatrix& a, const BitVector& b);

// Basis of { x : A * x = 0 }, one vector per free column of rref(A).
std::vector<BitVector> right_kernel_basis(const BitMatrix& a);

// True iff the two matrices have the same row space.
bool same_row_space(const BitMatrix& a, const BitMatrix& b);

// |GL(k, 2)| = prod_{i<k} (2^k - 2^i), as a double (exact up to k = 7).
double count_invertible(std::size_t k);

// Calls `visit` for every invertible k x k matrix, lexicographically ordered
// on row-major bit strings. Throws SizeGuardError before yielding anything when
// the count exceeds `limit`. Returning false from `visit` stops the walk.
void enumerate_invertible(std::size_t k, double limit,
                          const std::function<bool(const BitMatrix&)>& visit);

}  // namespace convcodes
