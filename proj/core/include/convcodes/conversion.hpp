#pragma once

// Convertible codes in the merge regime: lambda initial codes are merged into
// one final code by a linear map, represented as a conversion matrix Y with
// rows indexed by the stacked initial coordinates and columns by the final
// coordinates.
//
// Symbol classes are read off the columns of Y:
//   * weight 1      -> the final symbol is an unchanged copy of one initial symbol
//   * weight 0, >=2 -> the final symbol is new (written); the support rows of a
//                      weight >= 2 column are read.

#include <cstddef>
#include <utility>
#include <vector>

#include "convcodes/gf2.hpp"
#include "convcodes/linear_code.hpp"

namespace convcodes {

class ConvertibleInstance {
public:
    // Requires at least one initial code and sum of initial dimensions = k_F.
    ConvertibleInstance(std::vector<LinearCode> initial, LinearCode final_code);

    std::size_t lambda() const { return initial_.size(); }
    const std::vector<LinearCode>& initial_codes() const { return initial_; }
    const LinearCode& initial_code(std::size_t i) const { return initial_.at(i); }
    const LinearCode& final_code() const { return final_; }

    // n_{I_i} per initial code.
    std::vector<std::size_t> block_lengths() const;
    // Prefix sums of block_lengths(), lambda + 1 entries starting at 0.
    const std::vector<std::size_t>& block_offsets() const { return offsets_; }
    std::size_t stacked_length() const { return offsets_.back(); }

    // Block-diagonal stack of the initial generators (k_F x sum n_I).
    BitMatrix stacked_generator() const;

    // (initial code index, local coordinate) of a stacked coordinate.
    std::pair<std::size_t, std::size_t> locate(std::size_t stacked) const;

private:
    std::vector<LinearCode> initial_;
    LinearCode final_;
    std::vector<std::size_t> offsets_;
};

ConvertibleInstance make_instance(std::vector<LinearCode> initial, LinearCode final_code);

struct ConversionMatrix {
    BitMatrix y;                      // (sum n_I) x n_F
    std::vector<std::size_t> blocks;  // n_{I_i}; row boundaries are their prefix sums
};

struct CostReport {
    std::vector<IndexSet> unchanged;  // U_i: final coordinates copied from code i
    IndexSet new_symbols;             // W: final coordinates that are written
    std::vector<IndexSet> read;       // R_i: local coordinates of code i that are read

    std::size_t unchanged_count() const;
    std::size_t write_cost() const { return new_symbols.size(); }
    std::size_t read_cost() const;
    std::size_t access_cost() const { return read_cost() + write_cost(); }

    friend bool operator==(const CostReport&, const CostReport&) = default;
};

// True iff G_I * Y has rank k_F and the same row space as G_F. Throws
// DimensionError when Y's shape or block layout does not match the instance.
bool verify_conversion(const ConvertibleInstance& inst, const ConversionMatrix& conv);

// Column-by-column symbol classification. Throws InvalidArgument when Y is
// not a valid conversion matrix for the instance.
CostReport classify_symbols(const ConvertibleInstance& inst, const ConversionMatrix& conv);

// Same rule without the validity check.
CostReport classify_columns(const ConvertibleInstance& inst, const BitMatrix& y);

// Decode-and-re-encode: keeps the lexicographically first information set of
// every initial code unchanged on the first information set of C_F and
// recomputes every other final symbol from those kept symbols.
//
// The classification has access cost n_F whenever d_F >= 2 and d_F^perp >= 3;
// degenerate final codes (repeated or zero columns, weight-1 codewords) turn
// some recomputed symbols into plain copies and the cost drops below n_F.
ConversionMatrix default_conversion(const ConvertibleInstance& inst);

// Concatenated initial codewords times Y. Throws InvalidArgument if some
// input is not a codeword of its initial code.
BitVector apply_conversion(const ConvertibleInstance& inst, const ConversionMatrix& conv,
                           const std::vector<BitVector>& codewords);

// ---------------------------------------------------------------------------
// Reed-Muller merge: RM(r, m-1) x RM(r-1, m-1) -> RM(r, m), 1 <= r <= m - 1.

struct MergeConstruction {
    ConvertibleInstance instance;
    ConversionMatrix conversion;
    CostReport report;
};

// Builds the instance, its conversion matrix and the cost report that the
// procedure declares:
//   |U_1| = n_{I_1}, |U_2| = k_{I_2}, |R_1| = k_{I_1},
//   |R_2| = min(k_{I_2}, n_{I_2} - k_{I_2}).
MergeConstruction rm_merge_procedure(unsigned r, unsigned m);

struct MergeExecution {
    BitVector codeword;
    IndexSet read_first;   // coordinates of c1 that were read
    IndexSet read_second;  // coordinates of c2 that were read
};

// Runs the merge symbol by symbol on c1 in RM(r, m-1), c2 in RM(r-1, m-1).
MergeExecution rm_merge_execute(unsigned r, unsigned m, const BitVector& c1, const BitVector& c2);
BitVector rm_merge_apply(unsigned r, unsigned m, const BitVector& c1, const BitVector& c2);

// Applies the merge `depth` times, each time splitting the first initial code
// again: RM(r, m) <- RM(r, m-depth), RM(r-1, m-depth), RM(r-1, m-depth+1), ...,
// RM(r-1, m-1). The composite Y is the product of the per-stage matrices
// lifted with identity blocks. Requires depth >= 1, depth <= m - 1 and
// 1 <= r <= m - depth.
MergeConstruction rm_merge_chain(unsigned r, unsigned m, unsigned depth);

}  // namespace convcodes
