#include "convcodes/oracle.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <mutex>
#include <optional>
#include <thread>

#include "convcodes/errors.hpp"

namespace convcodes {

namespace {

using Mask = std::uint64_t;
using Clock = std::chrono::steady_clock;

struct Candidate {
    Mask column;  // bit s = entry (s, j) of Y
    unsigned weight;
};

// Column data shared by every M: for each target t in F_2^{k_F}, the coset
// x_t + ker(G_I) of solutions to G_I x = t.
struct Space {
    std::size_t stacked = 0;
    std::size_t k = 0;
    std::size_t n = 0;
    std::size_t kernel_dim = 0;
    std::vector<std::uint32_t> final_columns;          // column j of G_F as a k-bit mask
    std::vector<std::vector<Candidate>> by_target;     // sorted by (weight != 1, column)
    std::vector<unsigned> min_write;                   // 0 iff some candidate has weight 1
};

Mask to_mask(const BitVector& v) {
    Mask m = 0;
    for (std::size_t s : v.support()) m |= Mask{1} << s;
    return m;
}

double search_size(std::size_t k, std::size_t kernel_dim, std::size_t n) {
    return count_invertible(k) * std::exp2(static_cast<double>(kernel_dim * n));
}

Space build_space(const ConvertibleInstance& inst, const SearchLimits& lim, bool check) {
    Space sp;
    sp.stacked = inst.stacked_length();
    sp.k = inst.final_code().k();
    sp.n = inst.final_code().n();
    if (sp.stacked > 64)
        throw SizeGuardError("oracle: sum n_I = " + std::to_string(sp.stacked) + " exceeds 64",
                             static_cast<double>(sp.stacked));
    if (sp.k > 16) throw SizeGuardError("oracle: k_F too large", static_cast<double>(sp.k));

    const BitMatrix gi = inst.stacked_generator();
    const auto kernel = right_kernel_basis(gi);
    sp.kernel_dim = kernel.size();
    const double count = search_size(sp.k, sp.kernel_dim, sp.n);
    if (check) {
        const bool over = sp.k > lim.max_k_F || sp.kernel_dim > lim.max_kernel_dim || sp.n > lim.max_n_F ||
                          count > lim.max_candidates;
        if (over)
            throw SizeGuardError("oracle: instance outside search limits (k_F=" + std::to_string(sp.k) +
                                     ", kernel dim=" + std::to_string(sp.kernel_dim) +
                                     ", n_F=" + std::to_string(sp.n) + ", candidates=" + std::to_string(count) + ")",
                                 count);
    }

    const BitMatrix& gf = inst.final_code().generator();
    for (std::size_t j = 0; j < sp.n; ++j) {
        std::uint32_t col = 0;
        for (std::size_t r = 0; r < sp.k; ++r)
            if (gf.get(r, j)) col |= std::uint32_t{1} << r;
        sp.final_columns.push_back(col);
    }

    // G_I has full row rank, so every unit target is solvable.
    std::vector<Mask> unit_solution(sp.k);
    for (std::size_t b = 0; b < sp.k; ++b) {
        BitVector e(sp.k);
        e.set(b);
        auto x = solve(gi, e);
        if (!x) throw Error("oracle: stacked initial generator is rank deficient");
        unit_solution[b] = to_mask(*x);
    }
    std::vector<Mask> kernel_span(std::size_t{1} << sp.kernel_dim, 0);
    for (std::size_t idx = 1; idx < kernel_span.size(); ++idx) {
        const auto low = static_cast<std::size_t>(std::countr_zero(idx));
        kernel_span[idx] = kernel_span[idx & (idx - 1)] ^ to_mask(kernel[low]);
    }

    const std::size_t targets = std::size_t{1} << sp.k;
    sp.by_target.resize(targets);
    sp.min_write.assign(targets, 1);
    for (std::size_t t = 0; t < targets; ++t) {
        Mask particular = 0;
        for (std::size_t b = 0; b < sp.k; ++b)
            if ((t >> b) & 1U) particular ^= unit_solution[b];
        auto& cands = sp.by_target[t];
        for (Mask z : kernel_span) {
            const Mask col = particular ^ z;
            const auto w = static_cast<unsigned>(std::popcount(col));
            cands.push_back({col, w});
            if (w == 1) sp.min_write[t] = 0;
        }
        std::sort(cands.begin(), cands.end(), [](const Candidate& a, const Candidate& b) {
            return std::make_pair(a.weight != 1, a.column) < std::make_pair(b.weight != 1, b.column);
        });
    }
    return sp;
}

// Row-major comparison of two Ys stored as column masks.
std::strong_ordering compare_columns(const std::vector<Mask>& a, const std::vector<Mask>& b, std::size_t rows) {
    for (std::size_t s = 0; s < rows; ++s)
        for (std::size_t j = 0; j < a.size(); ++j) {
            const bool x = (a[j] >> s) & 1U;
            const bool y = (b[j] >> s) & 1U;
            if (x != y) return x ? std::strong_ordering::greater : std::strong_ordering::less;
        }
    return std::strong_ordering::equal;
}

struct Best {
    std::size_t access = SIZE_MAX;
    std::size_t write = SIZE_MAX;
    std::vector<Mask> columns;
    double leaves = 0;

    bool found() const { return access != SIZE_MAX; }

    bool better(std::size_t a, std::size_t w, const std::vector<Mask>& cols, std::size_t rows) const {
        if (a != access) return a < access;
        if (w != write) return w < write;
        return compare_columns(cols, columns, rows) == std::strong_ordering::less;
    }

    void merge(const Best& other, std::size_t rows) {
        leaves += other.leaves;
        if (other.found() && (!found() || better(other.access, other.write, other.columns, rows))) {
            access = other.access;
            write = other.write;
            columns = other.columns;
        }
    }
};

class Searcher {
public:
    Searcher(const Space& sp, Best& best) : sp_(sp), best_(best), chosen_(sp.n), targets_(sp.n), suffix_(sp.n + 1) {}

    void run(const std::vector<std::uint32_t>& m_rows) {
        for (std::size_t j = 0; j < sp_.n; ++j) {
            std::uint32_t t = 0;
            for (std::size_t a = 0; a < sp_.k; ++a)
                if (std::popcount(m_rows[a] & sp_.final_columns[j]) & 1) t |= std::uint32_t{1} << a;
            targets_[j] = t;
        }
        suffix_[sp_.n] = 0;
        for (std::size_t j = sp_.n; j-- > 0;) suffix_[j] = suffix_[j + 1] + sp_.min_write[targets_[j]];
        dfs(0, 0, 0);
    }

private:
    void dfs(std::size_t j, std::size_t write, Mask reads) {
        const std::size_t lb_write = write + suffix_[j];
        const std::size_t lb_access = lb_write + static_cast<std::size_t>(std::popcount(reads));
        if (best_.found() && std::make_pair(lb_access, lb_write) > std::make_pair(best_.access, best_.write)) return;
        if (j == sp_.n) {
            best_.leaves += 1;
            if (!best_.found() || best_.better(lb_access, lb_write, chosen_, sp_.stacked)) {
                best_.access = lb_access;
                best_.write = lb_write;
                best_.columns = chosen_;
            }
            return;
        }
        for (const Candidate& c : sp_.by_target[targets_[j]]) {
            chosen_[j] = c.column;
            if (c.weight == 1)
                dfs(j + 1, write, reads);
            else
                dfs(j + 1, write + 1, c.weight >= 2 ? (reads | c.column) : reads);
        }
    }

    const Space& sp_;
    Best& best_;
    std::vector<Mask> chosen_;
    std::vector<std::uint32_t> targets_;
    std::vector<std::size_t> suffix_;
};

std::vector<std::uint32_t> row_masks(const BitMatrix& m) {
    std::vector<std::uint32_t> rows(m.rows(), 0);
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            if (m.get(r, c)) rows[r] |= std::uint32_t{1} << c;
    return rows;
}

BitMatrix matrix_from_columns(const std::vector<Mask>& cols, std::size_t rows) {
    BitMatrix y(rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j)
        for (std::size_t s = 0; s < rows; ++s)
            if ((cols[j] >> s) & 1U) y.set(s, j);
    return y;
}

class Deadline {
public:
    explicit Deadline(double seconds) : seconds_(seconds), start_(Clock::now()) {}

    void check() const {
        if (seconds_ <= 0) return;
        const std::chrono::duration<double> elapsed = Clock::now() - start_;
        if (elapsed.count() > seconds_)
            throw Error("oracle: time budget of " + std::to_string(seconds_) + " s exhausted");
    }

private:
    double seconds_;
    Clock::time_point start_;
};

}  // namespace

double count_conversions(const ConvertibleInstance& inst) {
    const std::size_t kernel_dim = inst.stacked_length() - inst.final_code().k();
    return search_size(inst.final_code().k(), kernel_dim, inst.final_code().n());
}

OracleResult min_access_cost(const ConvertibleInstance& inst, const SearchLimits& lim) {
    const Space sp = build_space(inst, lim, true);
    const double count = search_size(sp.k, sp.kernel_dim, sp.n);
    const unsigned threads = std::max(1U, lim.threads);
    const Deadline deadline(lim.time_budget);

    std::vector<Best> partial(threads);
    auto worker = [&](unsigned tid) {
        Searcher searcher(sp, partial[tid]);
        std::size_t index = 0;
        enumerate_invertible(sp.k, lim.max_candidates, [&](const BitMatrix& m) {
            if (index++ % threads != tid) return true;
            if ((index & 0x3FF) == 0) deadline.check();
            searcher.run(row_masks(m));
            return true;
        });
    };

    if (threads == 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        std::vector<std::exception_ptr> errors(threads);
        for (unsigned tid = 0; tid < threads; ++tid)
            pool.emplace_back([&, tid] {
                try {
                    worker(tid);
                } catch (...) {
                    errors[tid] = std::current_exception();
                }
            });
        for (auto& t : pool) t.join();
        for (auto& e : errors)
            if (e) std::rethrow_exception(e);
    }

    Best best;
    for (const auto& p : partial) best.merge(p, sp.stacked);
    if (!best.found()) throw Error("oracle: no conversion found");

    OracleResult out{{matrix_from_columns(best.columns, sp.stacked), inst.block_lengths()}, {}, count, best.leaves};
    out.report = classify_columns(inst, out.conversion.y);
    return out;
}

void enumerate_conversions(const ConvertibleInstance& inst, const SearchLimits& lim, const ConversionVisitor& visit) {
    const Space sp = build_space(inst, lim, true);
    const Deadline deadline(lim.time_budget);
    const std::size_t per_column = std::size_t{1} << sp.kernel_dim;
    std::vector<std::uint32_t> targets(sp.n);
    std::vector<std::size_t> choice(sp.n);
    std::vector<Mask> cols(sp.n);
    std::size_t visited = 0;

    enumerate_invertible(sp.k, lim.max_candidates, [&](const BitMatrix& m) {
        const auto rows = row_masks(m);
        for (std::size_t j = 0; j < sp.n; ++j) {
            std::uint32_t t = 0;
            for (std::size_t a = 0; a < sp.k; ++a)
                if (std::popcount(rows[a] & sp.final_columns[j]) & 1) t |= std::uint32_t{1} << a;
            targets[j] = t;
        }
        std::fill(choice.begin(), choice.end(), 0);
        while (true) {
            for (std::size_t j = 0; j < sp.n; ++j) cols[j] = sp.by_target[targets[j]][choice[j]].column;
            ConversionMatrix conv{matrix_from_columns(cols, sp.stacked), inst.block_lengths()};
            const CostReport report = classify_columns(inst, conv.y);
            if (!visit(conv, report)) return false;
            if ((++visited & 0xFFF) == 0) deadline.check();
            // Mixed-radix increment, last column fastest.
            std::size_t j = sp.n;
            while (j > 0 && ++choice[j - 1] == per_column) choice[--j] = 0;
            if (j == 0) break;
        }
        return true;
    });
}

}  // namespace convcodes
