#include "convcodes/bounds.hpp"

#include <algorithm>
#include <numeric>

#include "convcodes/errors.hpp"

namespace convcodes {

namespace {

long as_long(std::size_t v) { return static_cast<long>(v); }

long others_k(const ParamSet& p, std::size_t i) {
    long total = 0;
    for (std::size_t j = 0; j < p.lambda; ++j)
        if (j != i) total += as_long(p.k_I[j]);
    return total;
}

void check_index(const ParamSet& p, std::size_t i) {
    if (i >= p.lambda) throw InvalidArgument("code index " + std::to_string(i) + " out of range");
}

std::size_t clamp0(long v) { return v < 0 ? 0 : static_cast<std::size_t>(v); }

// k - shift when shift > 0, otherwise k; never below 0.
std::size_t shifted_read_bound(std::size_t k, long shift) {
    if (shift <= 0) return k;
    return clamp0(as_long(k) - shift);
}

bool dual_condition(const ParamSet& p, std::size_t i) { return p.d_F_dual > p.k_I[i] + 1; }

BoundRecord make(std::string name, std::optional<std::size_t> index, BoundKind kind, bool applicable,
                 std::optional<long> value) {
    BoundRecord rec;
    rec.name = std::move(name);
    rec.index = index;
    rec.kind = kind;
    rec.applicable = applicable;
    if (applicable) rec.value = value;
    return rec;
}

void compare(BoundRecord& rec, long actual) {
    rec.actual = actual;
    if (!rec.applicable || !rec.value) return;
    switch (rec.kind) {
        case BoundKind::UpperUnchanged:
            rec.satisfied = actual <= *rec.value;
            break;
        case BoundKind::LowerUnchanged:
        case BoundKind::LowerRead:
            rec.satisfied = actual >= *rec.value;
            break;
        case BoundKind::Equality:
            rec.satisfied = actual == *rec.value;
            break;
        case BoundKind::Regime:
            return;
    }
    rec.tight = *rec.satisfied && actual == *rec.value;
}

BoundReport build(const ParamSet& p, const std::vector<std::size_t>* unchanged, const std::vector<std::size_t>* reads,
                  const std::vector<std::size_t>& delta_inputs) {
    validate(p);
    BoundReport out;
    const std::size_t total_unchanged =
        unchanged ? std::accumulate(unchanged->begin(), unchanged->end(), std::size_t{0}) : 0;

    for (std::size_t i = 0; i < p.lambda; ++i) {
        auto singleton = make("unchanged_upper_singleton", i, BoundKind::UpperUnchanged, true,
                              as_long(unchanged_upper_singleton(p, i)));
        const auto dual_value = unchanged_upper_dual(p, i);
        auto dual_rec = make("unchanged_upper_dual", i, BoundKind::UpperUnchanged, dual_value.has_value(),
                             dual_value ? std::optional<long>(as_long(*dual_value)) : std::nullopt);
        const auto comp_value = unchanged_lower_complement(p, i);
        auto comp = make("unchanged_lower_complement", i, BoundKind::LowerUnchanged, comp_value.has_value(),
                         comp_value ? std::optional<long>(as_long(*comp_value)) : std::nullopt);
        auto delta = make("read_lower_delta", i, BoundKind::LowerRead, true,
                          as_long(read_lower_delta(p, i, delta_inputs[i])));
        const auto omega_value = read_lower_omega(p, i);
        auto omega = make("read_lower_omega", i, BoundKind::LowerRead, omega_value.has_value(),
                          omega_value ? std::optional<long>(as_long(*omega_value)) : std::nullopt);
        auto regime = make("delta_sign_regime", i, BoundKind::Regime, delta_sign_check(p, i),
                           as_long(p.n_I[i]) - as_long(p.k_I[i]) + 1);
        if (unchanged) {
            const long u_i = as_long((*unchanged)[i]);
            // The n_{I_i} cap counts distinct initial symbols; with repeated
            // copies only the Singleton term applies.
            if (u_i > as_long(p.n_I[i]))
                singleton.value = p.lambda < 2 ? as_long(p.n_F)
                                               : as_long(clamp0(as_long(p.n_F) - as_long(p.d_F) - others_k(p, i) + 1));
            compare(singleton, u_i);
            compare(dual_rec, u_i);
            compare(comp, as_long(total_unchanged) - u_i);
            compare(regime, u_i - as_long(p.d_F) + 1);
        }
        if (reads) {
            compare(delta, as_long((*reads)[i]));
            compare(omega, as_long((*reads)[i]));
        }
        for (auto* rec : {&singleton, &dual_rec, &comp, &delta, &omega, &regime}) out.records.push_back(std::move(*rec));
    }

    bool all_dual = true;
    for (std::size_t i = 0; i < p.lambda; ++i) all_dual = all_dual && dual_condition(p, i);
    auto total_upper = make("unchanged_total_upper_dual", std::nullopt, BoundKind::UpperUnchanged, all_dual,
                            as_long(p.k_F));
    const auto total_lower_value = unchanged_total_lower(p);
    auto total_lower = make("unchanged_total_lower", std::nullopt, BoundKind::LowerUnchanged,
                            total_lower_value.has_value(),
                            total_lower_value ? std::optional<long>(as_long(*total_lower_value)) : std::nullopt);
    auto pinch = make("unchanged_pinch", std::nullopt, BoundKind::Equality, all_dual && p.lambda >= 2, as_long(p.k_F));
    if (unchanged) {
        compare(total_upper, as_long(total_unchanged));
        compare(total_lower, as_long(total_unchanged));
        compare(pinch, as_long(total_unchanged));
    }
    out.records.push_back(std::move(total_upper));
    out.records.push_back(std::move(total_lower));
    out.records.push_back(std::move(pinch));
    return out;
}

}  // namespace

void validate(const ParamSet& p) {
    if (p.lambda < 1) throw InvalidArgument("lambda must be at least 1");
    if (p.n_I.size() != p.lambda || p.k_I.size() != p.lambda)
        throw InvalidArgument("n_I and k_I must each list lambda = " + std::to_string(p.lambda) + " values");
    std::size_t k_sum = 0;
    for (std::size_t i = 0; i < p.lambda; ++i) {
        if (p.k_I[i] < 1 || p.k_I[i] > p.n_I[i])
            throw InvalidArgument("need 1 <= k_I <= n_I for initial code " + std::to_string(i + 1));
        k_sum += p.k_I[i];
    }
    if (k_sum != p.k_F) throw InvalidArgument("merge regime requires sum k_I = k_F");
    if (p.k_F < 1 || p.k_F > p.n_F) throw InvalidArgument("need 1 <= k_F <= n_F");
    if (p.d_F < 1 || p.d_F > p.n_F - p.k_F + 1) throw InvalidArgument("d_F violates the Singleton bound");
    if (p.d_F_dual < 1) throw InvalidArgument("d_F_dual must be positive");
}

ParamSet params_of(const ConvertibleInstance& inst) {
    ParamSet p;
    p.lambda = inst.lambda();
    for (const auto& c : inst.initial_codes()) {
        p.n_I.push_back(c.n());
        p.k_I.push_back(c.k());
    }
    p.n_F = inst.final_code().n();
    p.k_F = inst.final_code().k();
    p.d_F = exact_min_distance(inst.final_code());
    p.d_F_dual = dual_distance(inst.final_code());
    return p;
}

std::size_t unchanged_upper_singleton(const ParamSet& p, std::size_t i) {
    check_index(p, i);
    if (p.lambda < 2) return p.n_I[i];
    const long v = as_long(p.n_F) - as_long(p.d_F) - others_k(p, i) + 1;
    return std::min(p.n_I[i], clamp0(v));
}

std::optional<std::size_t> unchanged_upper_dual(const ParamSet& p, std::size_t i) {
    check_index(p, i);
    if (!dual_condition(p, i)) return std::nullopt;
    return p.k_I[i];
}

std::optional<std::size_t> unchanged_lower_complement(const ParamSet& p, std::size_t i) {
    check_index(p, i);
    if (p.lambda < 2) return std::nullopt;
    return static_cast<std::size_t>(others_k(p, i));
}

std::optional<std::size_t> unchanged_total_lower(const ParamSet& p) {
    if (p.lambda < 2) return std::nullopt;
    return p.k_F;
}

std::size_t read_lower_delta(const ParamSet& p, std::size_t i, std::size_t unchanged_i) {
    check_index(p, i);
    // Repeated copies of one initial symbol count separately, so |U_i| may
    // exceed n_{I_i}; the shortening argument still holds up to n_F.
    if (unchanged_i > p.n_F) throw InvalidArgument("|U_i| cannot exceed n_F");
    return shifted_read_bound(p.k_I[i], as_long(unchanged_i) - as_long(p.d_F) + 1);
}

std::optional<std::size_t> read_lower_omega(const ParamSet& p, std::size_t i) {
    check_index(p, i);
    if (p.lambda < 2) return std::nullopt;
    const long omega = as_long(p.n_F) - 2 * as_long(p.d_F) - others_k(p, i) + 2;
    return shifted_read_bound(p.k_I[i], omega);
}

bool delta_sign_check(const ParamSet& p, std::size_t i) {
    check_index(p, i);
    return as_long(p.d_F) > as_long(p.n_I[i]) - as_long(p.k_I[i]) + 1;
}

long BoundRecord::slack() const {
    if (!value || !actual) return 0;
    return *actual > *value ? *actual - *value : *value - *actual;
}

std::size_t BoundReport::violations() const {
    return static_cast<std::size_t>(
        std::count_if(records.begin(), records.end(), [](const BoundRecord& r) { return r.satisfied == false; }));
}

const BoundRecord* BoundReport::find(const std::string& name, std::optional<std::size_t> index) const {
    for (const auto& r : records)
        if (r.name == name && r.index == index) return &r;
    return nullptr;
}

BoundReport evaluate_bounds(const ParamSet& p, const std::vector<std::size_t>& unchanged_sizes) {
    validate(p);
    if (!unchanged_sizes.empty()) {
        if (unchanged_sizes.size() != p.lambda) throw InvalidArgument("need one |U_i| per initial code");
        return build(p, nullptr, nullptr, unchanged_sizes);
    }
    std::vector<std::size_t> u;
    for (std::size_t i = 0; i < p.lambda; ++i) u.push_back(unchanged_upper_singleton(p, i));
    return build(p, nullptr, nullptr, u);
}

BoundReport audit(const ParamSet& p, const CostReport& report) {
    validate(p);
    if (report.unchanged.size() != p.lambda || report.read.size() != p.lambda)
        throw DimensionError("cost report has " + std::to_string(report.unchanged.size()) +
                             " initial codes, parameters have " + std::to_string(p.lambda));
    if (report.unchanged_count() + report.write_cost() != p.n_F)
        throw DimensionError("cost report does not cover n_F final symbols");
    std::vector<std::size_t> u;
    std::vector<std::size_t> r;
    for (std::size_t i = 0; i < p.lambda; ++i) {
        if (report.read[i].size() > p.n_I[i]) throw DimensionError("|R_i| exceeds n_{I_i}");
        u.push_back(report.unchanged[i].size());
        r.push_back(report.read[i].size());
    }
    return build(p, &u, &r, u);
}

std::string to_string(BoundKind kind) {
    switch (kind) {
        case BoundKind::UpperUnchanged: return "upper_unchanged";
        case BoundKind::LowerUnchanged: return "lower_unchanged";
        case BoundKind::LowerRead: return "lower_read";
        case BoundKind::Equality: return "equality";
        case BoundKind::Regime: return "regime";
    }
    return "regime";
}

BoundKind bound_kind_from_string(const std::string& s) {
    for (auto k : {BoundKind::UpperUnchanged, BoundKind::LowerUnchanged, BoundKind::LowerRead, BoundKind::Equality,
                   BoundKind::Regime})
        if (to_string(k) == s) return k;
    throw InvalidArgument("unknown bound kind '" + s + "'");
}

}  // namespace convcodes
