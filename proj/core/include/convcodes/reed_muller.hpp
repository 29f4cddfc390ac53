#pragma once

// Binary Reed-Muller codes RM(r, m) built by evaluating square-free
// monomials at every point of F_2^m.
//
// Conventions:
//   * Points are listed lexicographically; point j is the big-endian binary
//     expansion of j, so X_1 is the most significant coordinate.
//   * Variables are numbered 1..m as in X_1..X_m.
//   * Monomials are ordered by degree, then lexicographically by variable set
//     (1, X1, X2, X3, X1X2, X1X3, X2X3 for m = 3).

#include <array>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "convcodes/gf2.hpp"
#include "convcodes/linear_code.hpp"

namespace convcodes {

inline constexpr unsigned kMaxRmVariables = 20;

class PointList {
public:
    explicit PointList(unsigned m);

    unsigned m() const { return m_; }
    std::size_t size() const { return std::size_t{1} << m_; }
    // Value of X_var (1-based) at point j.
    bool coordinate(std::size_t j, unsigned var) const { return (j >> (m_ - var)) & 1U; }
    std::size_t weight(std::size_t j) const;
    std::vector<bool> point(std::size_t j) const;

private:
    unsigned m_;
};

// Square-free monomial stored as a bitmask: bit (v - 1) set iff X_v divides it.
struct Monomial {
    std::uint32_t vars = 0;

    static Monomial of(std::initializer_list<unsigned> variables);
    unsigned degree() const;
    std::vector<unsigned> variables() const;
    friend bool operator==(Monomial, Monomial) = default;
};

struct MonomialBasis {
    unsigned m = 0;
    unsigned r = 0;
    std::vector<Monomial> monomials;
};

// All monomials in X_1..X_m of degree <= r, in generator row order.
MonomialBasis monomial_basis(unsigned r, unsigned m);
// Degree-exactly-d monomials in lexicographic order.
std::vector<Monomial> monomials_of_degree(unsigned d, unsigned m);

// sum_{i <= r} C(m, i)
std::size_t rm_dimension(unsigned r, unsigned m);

PointList points(unsigned m);

BitVector evaluate_monomial(Monomial mono, const PointList& pts);

BitMatrix rm_generator(unsigned r, unsigned m);

struct RmCode {
    unsigned r;
    unsigned m;
    LinearCode code;
    MonomialBasis basis;
    PointList points;
};

RmCode make_rm(unsigned r, unsigned m);

// {(x, x + y) : x in C, y in D}, generator [[G_C, G_C], [0, G_D]].
LinearCode plotkin_sum(const LinearCode& c, const LinearCode& d);

// Evaluations of the degree-r monomials in X_1..X_{m-1} at the points of
// F_2^{m-1}: a C(m-1, r) x 2^{m-1} matrix. Requires 1 <= r <= m - 1.
BitMatrix degree_block_A(unsigned r, unsigned m);

// Indices of all-zero columns.
IndexSet zero_columns(const BitMatrix& a);

// Indices of points in F_2^m of Hamming weight <= w. These form an
// information set of RM(w, m).
IndexSet low_weight_points(unsigned m, unsigned w);

struct TransformedGenerator {
    BitMatrix matrix;
    // Row counts of the three blocks: [G', 0], [A, A], [0, G'] with G' = G_RM(r-1, m-1).
    std::array<std::size_t, 3> block_rows;
};

// Row-reduced generator of RM(r, m) split along the Plotkin halves.
TransformedGenerator rm_transformed_generator(unsigned r, unsigned m);

}  // namespace convcodes
