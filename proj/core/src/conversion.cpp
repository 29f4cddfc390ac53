#include "convcodes/conversion.hpp"

#include <algorithm>
#include <numeric>
#include <optional>

#include "convcodes/errors.hpp"
#include "convcodes/reed_muller.hpp"

namespace convcodes {

namespace {

void check_shape(const ConvertibleInstance& inst, const ConversionMatrix& conv) {
    if (conv.y.rows() != inst.stacked_length() || conv.y.cols() != inst.final_code().n())
        throw DimensionError("conversion matrix is " + std::to_string(conv.y.rows()) + " x " +
                             std::to_string(conv.y.cols()) + ", instance needs " +
                             std::to_string(inst.stacked_length()) + " x " + std::to_string(inst.final_code().n()));
    if (conv.blocks != inst.block_lengths()) throw DimensionError("conversion matrix block layout differs from instance");
}

IndexSet complement(const IndexSet& set, std::size_t n) {
    IndexSet out;
    for (std::size_t j = 0, s = 0; j < n; ++j) {
        if (s < set.size() && set[s] == j)
            ++s;
        else
            out.push_back(j);
    }
    return out;
}

// Reads a codeword while recording which coordinates were used for computation.
class TrackedWord {
public:
    explicit TrackedWord(const BitVector& word) : word_(word), touched_(word.size(), false) {}

    bool read(std::size_t i) {
        touched_[i] = true;
        return word_.get(i);
    }
    // Verbatim copy into the output; not a read.
    bool copy(std::size_t i) const { return word_.get(i); }

    BitVector read_all(const IndexSet& coords) {
        BitVector out(coords.size());
        for (std::size_t t = 0; t < coords.size(); ++t) out.set(t, read(coords[t]));
        return out;
    }

    IndexSet touched() const {
        IndexSet out;
        for (std::size_t i = 0; i < touched_.size(); ++i)
            if (touched_[i]) out.push_back(i);
        return out;
    }

private:
    const BitVector& word_;
    std::vector<bool> touched_;
};

// Everything the RM merge needs, shared by the matrix form and the
// symbol-level execution.
struct MergePlan {
    unsigned r;
    unsigned m;
    std::size_t half;              // n_{I_1} = n_{I_2} = 2^{m-1}
    LinearCode first;              // RM(r, m-1)
    LinearCode second;             // RM(r-1, m-1)
    BitMatrix a;                   // degree-r block
    IndexSet first_info;           // points of weight <= r: information set of RM(r, m-1)
    IndexSet zero_cols;            // points of weight <= r-1: zero columns of A
    IndexSet recomputed;           // the remaining second-half positions
    bool read_second_directly;     // n_{I_2} - k_{I_2} <= k_{I_2}
    // For p in recomputed (by index): coefficients over first_info giving (wA)_p,
    // and, when decoding c2, coefficients over zero_cols giving (c2)_p.
    std::vector<BitVector> w_coeffs;
    std::vector<BitVector> second_coeffs;
};

MergePlan make_plan(unsigned r, unsigned m) {
    if (m < 2 || r < 1 || r > m - 1)
        throw InvalidArgument("RM merge requires 1 <= r <= m - 1 (got r = " + std::to_string(r) +
                              ", m = " + std::to_string(m) + ")");
    MergePlan plan{r, m, std::size_t{1} << (m - 1), LinearCode::from_generator(rm_generator(r, m - 1)),
                   LinearCode::from_generator(rm_generator(r - 1, m - 1)), degree_block_A(r, m),
                   low_weight_points(m - 1, r), low_weight_points(m - 1, r - 1), {}, false, {}, {}};
    if (zero_columns(plan.a) != plan.zero_cols) throw Error("degree block zero columns disagree with low-weight points");
    plan.recomputed = complement(plan.zero_cols, plan.half);
    plan.read_second_directly = plan.recomputed.size() <= plan.second.k();

    const BitMatrix first_sq = plan.first.generator().select_columns(plan.first_info);
    const std::size_t lower_rows = plan.second.k();  // monomials of degree < r come first
    for (std::size_t p : plan.recomputed) {
        BitVector target(plan.first.k());
        for (std::size_t t = 0; t < plan.a.rows(); ++t)
            if (plan.a.get(t, p)) target.set(lower_rows + t);
        auto alpha = solve(first_sq, target);
        if (!alpha) throw Error("information set of RM(r, m-1) is singular");
        plan.w_coeffs.push_back(*alpha);
    }
    if (!plan.read_second_directly) {
        const BitMatrix second_sq = plan.second.generator().select_columns(plan.zero_cols);
        for (std::size_t p : plan.recomputed) {
            auto beta = solve(second_sq, plan.second.generator().column(p));
            if (!beta) throw Error("information set of RM(r-1, m-1) is singular");
            plan.second_coeffs.push_back(*beta);
        }
    }
    return plan;
}

MergeConstruction construct(const MergePlan& plan) {
    const std::size_t n = plan.half;
    ConvertibleInstance inst({plan.first, plan.second}, LinearCode::from_generator(rm_generator(plan.r, plan.m)));
    BitMatrix y(2 * n, 2 * n);
    for (std::size_t j = 0; j < n; ++j) y.set(j, j);
    for (std::size_t z : plan.zero_cols) y.set(n + z, n + z);
    for (std::size_t idx = 0; idx < plan.recomputed.size(); ++idx) {
        const std::size_t p = plan.recomputed[idx];
        for (std::size_t t : plan.w_coeffs[idx].support()) y.set(plan.first_info[t], n + p);
        if (plan.read_second_directly) {
            y.set(n + p, n + p);
        } else {
            for (std::size_t t : plan.second_coeffs[idx].support()) y.set(n + plan.zero_cols[t], n + p);
        }
    }

    CostReport report;
    IndexSet u1(n);
    std::iota(u1.begin(), u1.end(), std::size_t{0});
    IndexSet u2;
    for (std::size_t z : plan.zero_cols) u2.push_back(n + z);
    for (std::size_t p : plan.recomputed) report.new_symbols.push_back(n + p);
    report.unchanged = {u1, u2};
    report.read = {plan.first_info, plan.read_second_directly ? plan.recomputed : plan.zero_cols};
    return {std::move(inst), {std::move(y), {n, n}}, std::move(report)};
}

}  // namespace

// ---------------------------------------------------------------- instance

ConvertibleInstance::ConvertibleInstance(std::vector<LinearCode> initial, LinearCode final_code)
    : initial_(std::move(initial)), final_(std::move(final_code)) {
    if (initial_.empty()) throw InvalidArgument("a convertible code needs at least one initial code");
    std::size_t k_sum = 0;
    offsets_.push_back(0);
    for (const auto& c : initial_) {
        if (c.is_zero()) throw InvalidArgument("initial codes must have dimension at least 1");
        k_sum += c.k();
        offsets_.push_back(offsets_.back() + c.n());
    }
    if (final_.is_zero()) throw InvalidArgument("final code must have dimension at least 1");
    if (k_sum != final_.k())
        throw InvalidArgument("merge regime requires sum k_I = k_F (got " + std::to_string(k_sum) + " vs " +
                              std::to_string(final_.k()) + ")");
}

ConvertibleInstance make_instance(std::vector<LinearCode> initial, LinearCode final_code) {
    return ConvertibleInstance(std::move(initial), std::move(final_code));
}

std::vector<std::size_t> ConvertibleInstance::block_lengths() const {
    std::vector<std::size_t> out;
    for (const auto& c : initial_) out.push_back(c.n());
    return out;
}

BitMatrix ConvertibleInstance::stacked_generator() const {
    std::vector<BitMatrix> blocks;
    for (const auto& c : initial_) blocks.push_back(c.generator());
    return block_diagonal(blocks);
}

std::pair<std::size_t, std::size_t> ConvertibleInstance::locate(std::size_t stacked) const {
    if (stacked >= stacked_length()) throw DimensionError("stacked coordinate out of range");
    const auto it = std::upper_bound(offsets_.begin(), offsets_.end(), stacked);
    const auto i = static_cast<std::size_t>(it - offsets_.begin()) - 1;
    return {i, stacked - offsets_[i]};
}

// ---------------------------------------------------------------- costs

std::size_t CostReport::unchanged_count() const {
    std::size_t total = 0;
    for (const auto& u : unchanged) total += u.size();
    return total;
}

std::size_t CostReport::read_cost() const {
    std::size_t total = 0;
    for (const auto& r : read) total += r.size();
    return total;
}

bool verify_conversion(const ConvertibleInstance& inst, const ConversionMatrix& conv) {
    check_shape(inst, conv);
    const BitMatrix image = mat_mul(inst.stacked_generator(), conv.y);
    if (rank(image) != inst.final_code().k()) return false;
    return same_row_space(image, inst.final_code().generator());
}

CostReport classify_columns(const ConvertibleInstance& inst, const BitMatrix& y) {
    CostReport report;
    report.unchanged.assign(inst.lambda(), {});
    report.read.assign(inst.lambda(), {});
    std::vector<std::vector<bool>> read_flags(inst.lambda());
    for (std::size_t i = 0; i < inst.lambda(); ++i) read_flags[i].assign(inst.initial_code(i).n(), false);

    for (std::size_t j = 0; j < y.cols(); ++j) {
        const IndexSet support = y.column_support(j);
        if (support.size() == 1) {
            report.unchanged[inst.locate(support.front()).first].push_back(j);
            continue;
        }
        report.new_symbols.push_back(j);
        if (support.size() >= 2)
            for (std::size_t row : support) {
                const auto [code, local] = inst.locate(row);
                read_flags[code][local] = true;
            }
    }
    for (std::size_t i = 0; i < inst.lambda(); ++i)
        for (std::size_t c = 0; c < read_flags[i].size(); ++c)
            if (read_flags[i][c]) report.read[i].push_back(c);
    return report;
}

CostReport classify_symbols(const ConvertibleInstance& inst, const ConversionMatrix& conv) {
    if (!verify_conversion(inst, conv)) throw InvalidArgument("matrix is not a conversion matrix for this instance");
    return classify_columns(inst, conv.y);
}

ConversionMatrix default_conversion(const ConvertibleInstance& inst) {
    // Stacked coordinates that are kept, in order, one information set per code.
    IndexSet kept;
    for (std::size_t i = 0; i < inst.lambda(); ++i)
        for (std::size_t c : first_information_set(inst.initial_code(i))) kept.push_back(inst.block_offsets()[i] + c);

    const LinearCode& fin = inst.final_code();
    const IndexSet final_info = first_information_set(fin);
    // Systematic generator on final_info: row t is the codeword equal to e_t there.
    const BitMatrix square = fin.generator().select_columns(final_info);
    std::vector<BitVector> sys_rows;
    for (std::size_t t = 0; t < fin.k(); ++t) {
        BitVector unit(fin.k());
        unit.set(t);
        // u * square = e_t  <=>  square^T * u^T = e_t
        auto u = solve(square.transpose(), unit);
        if (!u) throw Error("final information set is singular");
        sys_rows.push_back(vec_mul(*u, fin.generator()));
    }

    BitMatrix y(inst.stacked_length(), fin.n());
    for (std::size_t t = 0; t < fin.k(); ++t)
        for (std::size_t j : sys_rows[t].support()) y.set(kept[t], j);
    return {std::move(y), inst.block_lengths()};
}

BitVector apply_conversion(const ConvertibleInstance& inst, const ConversionMatrix& conv,
                           const std::vector<BitVector>& codewords) {
    check_shape(inst, conv);
    if (codewords.size() != inst.lambda()) throw DimensionError("expected one codeword per initial code");
    BitVector stacked(inst.stacked_length());
    for (std::size_t i = 0; i < inst.lambda(); ++i) {
        if (!contains(inst.initial_code(i), codewords[i]))
            throw InvalidArgument("input " + std::to_string(i + 1) + " is not a codeword of its initial code");
        for (std::size_t c : codewords[i].support()) stacked.set(inst.block_offsets()[i] + c);
    }
    return vec_mul(stacked, conv.y);
}

// ---------------------------------------------------------------- RM merge

MergeConstruction rm_merge_procedure(unsigned r, unsigned m) { return construct(make_plan(r, m)); }

MergeExecution rm_merge_execute(unsigned r, unsigned m, const BitVector& c1, const BitVector& c2) {
    const MergePlan plan = make_plan(r, m);
    if (!contains(plan.first, c1)) throw InvalidArgument("c1 is not a codeword of RM(r, m-1)");
    if (!contains(plan.second, c2)) throw InvalidArgument("c2 is not a codeword of RM(r-1, m-1)");

    TrackedWord first(c1);
    TrackedWord second(c2);
    const std::size_t n = plan.half;
    BitVector out(2 * n);
    for (std::size_t j = 0; j < n; ++j) out.set(j, first.copy(j));
    for (std::size_t z : plan.zero_cols) out.set(n + z, second.copy(z));

    // Degree-r coefficients w of c1's polynomial, then w * A on the recomputed positions.
    const BitVector u = decode_from_positions(plan.first, plan.first_info, first.read_all(plan.first_info));
    BitVector w(plan.a.rows());
    for (std::size_t t = 0; t < w.size(); ++t) w.set(t, u.get(plan.second.k() + t));
    const BitVector wa = vec_mul(w, plan.a);

    std::optional<BitVector> second_full;
    if (!plan.read_second_directly) {
        const BitVector v = decode_from_positions(plan.second, plan.zero_cols, second.read_all(plan.zero_cols));
        second_full = encode(plan.second, v);
    }
    for (std::size_t p : plan.recomputed) {
        const bool c2p = plan.read_second_directly ? second.read(p) : second_full->get(p);
        out.set(n + p, wa.get(p) != c2p);
    }
    return {std::move(out), first.touched(), second.touched()};
}

BitVector rm_merge_apply(unsigned r, unsigned m, const BitVector& c1, const BitVector& c2) {
    return rm_merge_execute(r, m, c1, c2).codeword;
}

MergeConstruction rm_merge_chain(unsigned r, unsigned m, unsigned depth) {
    if (depth < 1) throw InvalidArgument("merge chain depth must be at least 1");
    if (m < 2 || depth > m - 1) throw InvalidArgument("merge chain depth must be at most m - 1");
    if (r < 1 || r > m - depth)
        throw InvalidArgument("merge chain requires 1 <= r <= m - depth (got r = " + std::to_string(r) +
                              ", m = " + std::to_string(m) + ", depth = " + std::to_string(depth) + ")");

    MergeConstruction top = rm_merge_procedure(r, m);
    std::vector<LinearCode> initial = top.instance.initial_codes();
    BitMatrix y = top.conversion.y;
    for (unsigned stage = 1; stage < depth; ++stage) {
        // Split the first initial code RM(r, m - stage).
        MergeConstruction split = rm_merge_procedure(r, m - stage);
        std::size_t rest = 0;
        for (std::size_t i = 1; i < initial.size(); ++i) rest += initial[i].n();
        const BitMatrix lift = block_diagonal({split.conversion.y, BitMatrix::identity(rest)});
        y = mat_mul(lift, y);
        std::vector<LinearCode> next = split.instance.initial_codes();
        next.insert(next.end(), initial.begin() + 1, initial.end());
        initial = std::move(next);
    }

    ConvertibleInstance inst(std::move(initial), top.instance.final_code());
    ConversionMatrix conv{std::move(y), inst.block_lengths()};
    if (!verify_conversion(inst, conv)) throw Error("composed merge chain failed verification");
    CostReport report = classify_columns(inst, conv.y);
    return {std::move(inst), std::move(conv), std::move(report)};
}

}  // namespace convcodes
