#include "convcodes/linear_code.hpp"

#include <algorithm>
#include <bit>
#include <boost/multiprecision/cpp_int.hpp>

#include "convcodes/errors.hpp"

namespace convcodes {

namespace {

void check_index_set(const IndexSet& coords, std::size_t n, bool allow_empty) {
    if (coords.empty() && !allow_empty) throw InvalidArgument("coordinate set must not be empty");
    for (std::size_t i = 0; i < coords.size(); ++i) {
        if (coords[i] >= n) throw InvalidArgument("coordinate " + std::to_string(coords[i]) + " out of range");
        if (i > 0 && coords[i] <= coords[i - 1])
            throw InvalidArgument("coordinate set must be strictly increasing");
    }
}

// Nonzero rows of an rref, i.e. a basis of the row space.
std::optional<BitMatrix> row_basis(const BitMatrix& m) {
    const RrefResult red = rref(m);
    if (red.pivots.empty()) return std::nullopt;
    IndexSet keep(red.pivots.size());
    for (std::size_t i = 0; i < keep.size(); ++i) keep[i] = i;
    return red.matrix.select_rows(keep);
}

LinearCode code_from_span(const BitMatrix& m) {
    auto basis = row_basis(m);
    if (!basis) return LinearCode::zero(m.cols());
    return LinearCode::from_generator(std::move(*basis));
}

// Gray-code walk over all messages, calling visit(weight) per nonzero codeword.
template <typename Visit>
void walk_codewords(const BitMatrix& g, Visit&& visit) {
    const std::size_t k = g.rows();
    const std::size_t stride = g.row_words();
    std::vector<Word> cw(stride, 0);
    const std::uint64_t total = std::uint64_t{1} << k;
    for (std::uint64_t i = 1; i < total; ++i) {
        const auto flip = static_cast<std::size_t>(std::countr_zero(i));
        auto row = g.row_span(flip);
        std::size_t w = 0;
        for (std::size_t j = 0; j < stride; ++j) {
            cw[j] ^= row[j];
            w += static_cast<std::size_t>(std::popcount(cw[j]));
        }
        if (!visit(w)) return;
    }
}

void guard_k(std::size_t k, std::size_t k_limit) {
    if (k > k_limit)
        throw SizeGuardError("code dimension " + std::to_string(k) + " exceeds enumeration limit " +
                                 std::to_string(k_limit),
                             static_cast<double>(std::uint64_t{1} << std::min<std::size_t>(k, 63)));
}

}  // namespace

LinearCode::LinearCode(BitMatrix generator, std::size_t k)
    : n_(generator.cols()), k_(k), generator_(std::move(generator)), cache_(std::make_shared<DistanceCache>()) {}

LinearCode LinearCode::from_generator(BitMatrix generator) {
    if (rank(generator) != generator.rows())
        throw InvalidArgument("generator has dependent rows (rank " + std::to_string(rank(generator)) + " < " +
                              std::to_string(generator.rows()) + ")");
    const std::size_t k = generator.rows();
    return LinearCode(std::move(generator), k);
}

LinearCode LinearCode::zero(std::size_t n) { return LinearCode(BitMatrix(1, n), 0); }

std::optional<std::size_t> LinearCode::cached_distance() const {
    const long d = cache_->d.load(std::memory_order_acquire);
    if (d < 0) return std::nullopt;
    return static_cast<std::size_t>(d);
}

std::optional<std::size_t> LinearCode::cached_dual_distance() const {
    const long d = cache_->d_dual.load(std::memory_order_acquire);
    if (d < 0) return std::nullopt;
    return static_cast<std::size_t>(d);
}

void LinearCode::cache_distance(std::size_t d) const { cache_->d.store(static_cast<long>(d), std::memory_order_release); }

void LinearCode::cache_dual_distance(std::size_t d) const {
    cache_->d_dual.store(static_cast<long>(d), std::memory_order_release);
}

bool same_code(const LinearCode& a, const LinearCode& b) {
    if (a.n() != b.n() || a.k() != b.k()) return false;
    if (a.is_zero()) return true;
    return same_row_space(a.generator(), b.generator());
}

std::size_t min_distance(const LinearCode& code, std::size_t k_limit) {
    if (auto d = code.cached_distance()) return *d;
    if (code.is_zero()) throw InvalidArgument("the zero code has no minimum distance");
    guard_k(code.k(), k_limit);
    std::size_t best = code.n();
    walk_codewords(code.generator(), [&](std::size_t w) {
        if (w < best) best = w;
        return best > 1;
    });
    code.cache_distance(best);
    return best;
}

std::vector<std::size_t> weight_distribution(const LinearCode& code, std::size_t k_limit) {
    std::vector<std::size_t> dist(code.n() + 1, 0);
    dist[0] = 1;
    if (code.is_zero()) return dist;
    guard_k(code.k(), k_limit);
    walk_codewords(code.generator(), [&](std::size_t w) {
        ++dist[w];
        return true;
    });
    return dist;
}

std::size_t exact_min_distance(const LinearCode& code, std::size_t k_limit) {
    if (auto d = code.cached_distance()) return *d;
    if (code.k() <= k_limit) return min_distance(code, k_limit);
    if (code.k() == code.n()) {
        code.cache_distance(1);
        return 1;
    }
    const LinearCode dual_code = dual(code);
    guard_k(dual_code.k(), k_limit);
    const std::vector<std::size_t> dual_weights = weight_distribution(dual_code, k_limit);

    // A_j = 2^{-(n-k)} * sum_i B_i K_j(i), with K_j the binary Krawtchouk polynomial.
    using boost::multiprecision::cpp_int;
    const std::size_t n = code.n();
    std::vector<std::vector<cpp_int>> binom(n + 1, std::vector<cpp_int>(n + 1, 0));
    for (std::size_t a = 0; a <= n; ++a) {
        binom[a][0] = 1;
        for (std::size_t b = 1; b <= a; ++b) {
            binom[a][b] = binom[a - 1][b - 1];
            if (b < a) binom[a][b] += binom[a - 1][b];
        }
    }
    for (std::size_t j = 1; j <= n; ++j) {
        cpp_int total = 0;
        for (std::size_t i = 0; i <= n; ++i) {
            if (dual_weights[i] == 0) continue;
            cpp_int kraw = 0;
            for (std::size_t s = 0; s <= std::min(i, j); ++s) {
                if (j - s > n - i) continue;
                const cpp_int term = binom[i][s] * binom[n - i][j - s];
                kraw += (s % 2 == 0) ? term : cpp_int(-term);
            }
            total += kraw * dual_weights[i];
        }
        if (total != 0) {
            code.cache_distance(j);
            return j;
        }
    }
    throw Error("MacWilliams transform found no nonzero codeword");
}

std::size_t dual_distance(const LinearCode& code, std::size_t k_limit) {
    if (auto d = code.cached_dual_distance()) return *d;
    std::size_t d = code.n() + 1;
    if (code.k() < code.n()) d = exact_min_distance(dual(code), k_limit);
    code.cache_dual_distance(d);
    return d;
}

LinearCode dual(const LinearCode& code) {
    if (code.is_zero()) return LinearCode::from_generator(BitMatrix::identity(code.n()));
    if (code.k() == code.n()) throw InvalidArgument("trivial dual: the code is the whole space");
    return LinearCode::from_generator(BitMatrix::from_rows(right_kernel_basis(code.generator())));
}

LinearCode puncture(const LinearCode& code, const IndexSet& coords) {
    check_index_set(coords, code.n(), false);
    return code_from_span(code.generator().select_columns(coords));
}

LinearCode shorten(const LinearCode& code, const IndexSet& coords) {
    check_index_set(coords, code.n(), false);
    if (code.is_zero()) return LinearCode::zero(coords.size());
    if (coords.size() == code.n()) return code;

    IndexSet outside;
    for (std::size_t j = 0, s = 0; j < code.n(); ++j) {
        if (s < coords.size() && coords[s] == j)
            ++s;
        else
            outside.push_back(j);
    }
    // Messages u with (u G) restricted to the complement equal to zero.
    const BitMatrix restricted_t = code.generator().select_columns(outside).transpose();
    const std::vector<BitVector> messages = right_kernel_basis(restricted_t);
    if (messages.empty()) return LinearCode::zero(coords.size());
    std::vector<BitVector> rows;
    rows.reserve(messages.size());
    for (const auto& u : messages) rows.push_back(vec_mul(u, code.generator()).select(coords));
    return code_from_span(BitMatrix::from_rows(rows));
}

bool is_information_set(const LinearCode& code, const IndexSet& coords) {
    if (coords.size() != code.k())
        throw InvalidArgument("information set must have exactly k = " + std::to_string(code.k()) + " coordinates");
    if (code.is_zero()) return true;
    check_index_set(coords, code.n(), false);
    return rank(code.generator().select_columns(coords)) == code.k();
}

BitVector encode(const LinearCode& code, const BitVector& message) {
    if (code.is_zero()) throw InvalidArgument("cannot encode into the zero code");
    if (message.size() != code.k()) throw DimensionError("message length differs from k");
    return vec_mul(message, code.generator());
}

BitVector decode_from_positions(const LinearCode& code, const IndexSet& coords, const BitVector& values) {
    if (values.size() != coords.size()) throw DimensionError("values and positions differ in length");
    if (!is_information_set(code, coords)) throw InvalidArgument("positions do not form an information set");
    // u * G_S = values  <=>  G_S^T * u^T = values^T
    const BitMatrix system = code.generator().select_columns(coords).transpose();
    auto u = solve(system, values);
    if (!u) throw Error("information-set system unexpectedly inconsistent");
    return *u;
}

bool contains(const LinearCode& code, const BitVector& word) {
    if (word.size() != code.n()) return false;
    if (code.is_zero()) return word.is_zero();
    return solve(code.generator().transpose(), word).has_value();
}

IndexSet first_information_set(const LinearCode& code) {
    if (code.is_zero()) return {};
    return rref(code.generator()).pivots;
}

}  // namespace convcodes
