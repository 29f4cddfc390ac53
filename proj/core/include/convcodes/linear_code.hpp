#pragma once

#include <atomic>
#include <cstddef>
#include <memory>
#include <optional>
#include <vector>

#include "convcodes/gf2.hpp"

namespace convcodes {

inline constexpr std::size_t kDefaultDistanceLimit = 24;

// A binary [n, k] code held as a full-rank k x n generator matrix.
//
// The zero code (k = 0) is a distinguished value produced by shortening; it
// has no codeword besides 0 and cannot encode. Copies share one distance
// cache, which is filled idempotently and may be read concurrently.
class LinearCode {
public:
    // Throws InvalidArgument when the rows of `generator` are dependent.
    static LinearCode from_generator(BitMatrix generator);
    static LinearCode zero(std::size_t n);

    std::size_t n() const { return n_; }
    std::size_t k() const { return k_; }
    bool is_zero() const { return k_ == 0; }

    // Generator as supplied. For the zero code this is a single all-zero row.
    const BitMatrix& generator() const { return generator_; }

    std::optional<std::size_t> cached_distance() const;
    std::optional<std::size_t> cached_dual_distance() const;
    void cache_distance(std::size_t d) const;
    void cache_dual_distance(std::size_t d) const;

private:
    struct DistanceCache {
        std::atomic<long> d{-1};
        std::atomic<long> d_dual{-1};
    };

    LinearCode(BitMatrix generator, std::size_t k);

    std::size_t n_;
    std::size_t k_;
    BitMatrix generator_;
    std::shared_ptr<DistanceCache> cache_;
};

// Row-space equality; the only notion of code equality used in this library.
bool same_code(const LinearCode& a, const LinearCode& b);

// Exhaustive minimum distance over all 2^k - 1 nonzero codewords (Gray-code
// walk). Throws SizeGuardError when k > k_limit.
std::size_t min_distance(const LinearCode& code, std::size_t k_limit = kDefaultDistanceLimit);

// Number of codewords of each weight 0..n, by exhaustive enumeration.
std::vector<std::size_t> weight_distribution(const LinearCode& code, std::size_t k_limit = kDefaultDistanceLimit);

// Exact minimum distance that also handles high-rate codes: enumerates the
// code itself when k <= k_limit, otherwise enumerates the dual and applies the
// MacWilliams transform. Throws SizeGuardError when both sides are too large.
std::size_t exact_min_distance(const LinearCode& code, std::size_t k_limit = kDefaultDistanceLimit);

// Minimum distance of the dual code; n + 1 when the dual is the zero code
// (every set of columns of the generator is independent).
std::size_t dual_distance(const LinearCode& code, std::size_t k_limit = kDefaultDistanceLimit);

// The [n, n - k] dual. Throws InvalidArgument for k = n. The dual of the zero
// code is the whole space.
LinearCode dual(const LinearCode& code);

// Projection onto the coordinates in S (sorted, non-empty, in range).
LinearCode puncture(const LinearCode& code, const IndexSet& coords);

// Codewords supported inside S, projected onto S. May be the zero code.
LinearCode shorten(const LinearCode& code, const IndexSet& coords);

// True iff |S| = k and the generator columns in S are invertible.
bool is_information_set(const LinearCode& code, const IndexSet& coords);

// u * G.
BitVector encode(const LinearCode& code, const BitVector& message);

// Message whose codeword agrees with `values` on the information set S.
BitVector decode_from_positions(const LinearCode& code, const IndexSet& coords, const BitVector& values);

bool contains(const LinearCode& code, const BitVector& word);

// Lexicographically first information set (pivot columns of rref(G)).
IndexSet first_information_set(const LinearCode& code);

}  // namespace convcodes
