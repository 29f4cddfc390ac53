#pragma once

// Closed-form bounds on unchanged and read symbols of a linear merge
// conversion, evaluated on integer code parameters, plus an audit that
// compares a CostReport against every one of them.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "convcodes/conversion.hpp"

namespace convcodes {

struct ParamSet {
    std::size_t lambda = 0;
    std::vector<std::size_t> n_I;
    std::vector<std::size_t> k_I;
    std::size_t n_F = 0;
    std::size_t k_F = 0;
    std::size_t d_F = 0;
    std::size_t d_F_dual = 0;  // n_F + 1 when the dual of C_F is the zero code

    friend bool operator==(const ParamSet&, const ParamSet&) = default;
};

// Throws InvalidArgument unless lambda = |n_I| = |k_I| >= 1, sum k_I = k_F,
// 1 <= k_I[i] <= n_I[i], 1 <= d_F <= n_F - k_F + 1.
void validate(const ParamSet& p);

// Parameters of an instance, with d_F and d_F^perp computed from the codes.
ParamSet params_of(const ConvertibleInstance& inst);

// |U_i| <= min(n_{I_i}, n_F - d_F - sum_{j != i} k_{I_j} + 1), clamped at 0.
// The second term comes from the subcode spanned by the other initial codes,
// so for lambda = 1 only n_{I_i} remains.
std::size_t unchanged_upper_singleton(const ParamSet& p, std::size_t i);

// k_{I_i} when d_F^perp > k_{I_i} + 1, otherwise inapplicable.
std::optional<std::size_t> unchanged_upper_dual(const ParamSet& p, std::size_t i);

// sum_{j != i} |U_j| >= sum_{j != i} k_{I_j}; inapplicable for lambda < 2.
std::optional<std::size_t> unchanged_lower_complement(const ParamSet& p, std::size_t i);

// |U| >= k_F; inapplicable for lambda < 2.
std::optional<std::size_t> unchanged_total_lower(const ParamSet& p);

// delta_i = |U_i| - d_F + 1;  |R_i| >= k_{I_i} if delta_i <= 0, else k_{I_i} - delta_i (>= 0).
std::size_t read_lower_delta(const ParamSet& p, std::size_t i, std::size_t unchanged_i);

// omega_i = n_F - 2 d_F - sum_{j != i} k_{I_j} + 2;  same shape as the delta bound.
// Inapplicable for lambda < 2 (it leans on the Singleton term above).
std::optional<std::size_t> read_lower_omega(const ParamSet& p, std::size_t i);

// d_F > n_{I_i} - k_{I_i} + 1.
bool delta_sign_check(const ParamSet& p, std::size_t i);

enum class BoundKind {
    UpperUnchanged,  // actual <= value
    LowerUnchanged,  // actual >= value
    LowerRead,       // actual >= value
    Equality,        // actual == value
    Regime,          // informational flag, never a violation
};

struct BoundRecord {
    std::string name;
    std::optional<std::size_t> index;  // 0-based initial-code index for per-code bounds
    BoundKind kind = BoundKind::Regime;
    bool applicable = false;
    std::optional<long> value;         // bound value when applicable
    std::optional<long> actual;        // compared quantity from the report
    std::optional<bool> satisfied;
    bool tight = false;                // satisfied with equality

    long slack() const;  // |actual - value|, 0 when not comparable

    friend bool operator==(const BoundRecord&, const BoundRecord&) = default;
};

struct BoundReport {
    std::vector<BoundRecord> records;

    std::size_t violations() const;
    const BoundRecord* find(const std::string& name, std::optional<std::size_t> index = std::nullopt) const;

    friend bool operator==(const BoundReport&, const BoundReport&) = default;
};

// Bound values only, with no report to compare against. The delta bound needs
// |U_i|; when `unchanged_sizes` is empty it is evaluated at the largest value
// the Singleton-type bound allows, which gives the weakest read bound.
BoundReport evaluate_bounds(const ParamSet& p, const std::vector<std::size_t>& unchanged_sizes = {});

// Evaluates every bound against the report's |U_i|, |U| and |R_i|. Throws
// DimensionError when the report does not have lambda entries.
BoundReport audit(const ParamSet& p, const CostReport& report);

std::string to_string(BoundKind kind);
BoundKind bound_kind_from_string(const std::string& s);

}  // namespace convcodes
