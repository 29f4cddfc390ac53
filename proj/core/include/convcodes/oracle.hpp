#pragma once

// Exhaustive search over every linear conversion of a small instance.
//
// Every valid Y satisfies G_I * Y = M * G_F for exactly one invertible M, and
// for fixed M each column of Y ranges over a coset of ker(G_I). The search
// walks all (M, coset choice) pairs, so it sees each valid Y exactly once.

#include <cstddef>
#include <functional>

#include "convcodes/conversion.hpp"

namespace convcodes {

struct SearchLimits {
    std::size_t max_k_F = 5;
    std::size_t max_kernel_dim = 6;
    std::size_t max_n_F = 8;
    double max_candidates = 1e9;  // |GL(k_F, 2)| * 2^(kernel_dim * n_F)
    double time_budget = 0;       // seconds; 0 means unlimited
    unsigned threads = 1;
};

struct OracleResult {
    ConversionMatrix conversion;
    CostReport report;
    double candidates = 0;  // size of the search space
    double leaves = 0;      // complete Y actually evaluated after pruning
};

// Size of the (M, coset) search space without running it.
double count_conversions(const ConvertibleInstance& inst);

// Minimum access cost over all linear conversions. Ties are broken by write
// cost and then by the lexicographically smallest Y (row-major). The result
// does not depend on `threads`. Throws SizeGuardError when the instance
// exceeds the limits or the candidate count exceeds max_candidates, and Error
// when the time budget runs out.
OracleResult min_access_cost(const ConvertibleInstance& inst, const SearchLimits& lim = {});

// Visits every valid conversion matrix once with its classification, in the
// order (M lexicographic, then column choices). Returning false stops the walk.
using ConversionVisitor = std::function<bool(const ConversionMatrix&, const CostReport&)>;
void enumerate_conversions(const ConvertibleInstance& inst, const SearchLimits& lim, const ConversionVisitor& visit);

}  // namespace convcodes
