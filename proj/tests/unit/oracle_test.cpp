#include <gtest/gtest.h>

#include "brute.hpp"
#include "convcodes/errors.hpp"
#include "convcodes/oracle.hpp"
#include "convcodes/reed_muller.hpp"
#include "fixtures.hpp"

using namespace convcodes;

namespace {

// Every Y in F_2^{N x n} checked against the definition.
struct BruteSweep {
    std::size_t valid = 0;
    std::size_t best_access = SIZE_MAX;
};

BruteSweep sweep_all(const ConvertibleInstance& inst) {
    const auto gi = brute::from_lib(inst.stacked_generator());
    const auto gf = brute::from_lib(inst.final_code().generator());
    const std::size_t rows = inst.stacked_length();
    const std::size_t cols = inst.final_code().n();
    const auto target = brute::span(gf, cols);
    BruteSweep out;
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << (rows * cols)); ++bits) {
        brute::Mat y(rows, brute::Vec(cols));
        for (std::size_t i = 0; i < rows * cols; ++i) y[i / cols][i % cols] = (bits >> i) & 1U;
        const auto prod = brute::multiply(gi, y);
        if (brute::rank(prod, cols) != gi.size() || brute::span(prod, cols) != target) continue;
        ++out.valid;
        const auto c = brute::classify(y);
        out.best_access = std::min(out.best_access, c.write + c.read);
    }
    return out;
}

}  // namespace

TEST(Oracle, ExampleOptimumIsThree) {
    const auto inst = fixtures::example_instance();
    const OracleResult res = min_access_cost(inst);
    EXPECT_EQ(res.report.access_cost(), 3u);
    EXPECT_EQ(res.report.write_cost(), 1u);
    EXPECT_TRUE(verify_conversion(inst, res.conversion));
    EXPECT_EQ(classify_symbols(inst, res.conversion), res.report);
    EXPECT_DOUBLE_EQ(res.candidates, 20160.0 * 1024.0);
}

TEST(Oracle, NoExampleConversionCostsTwoOrLess) {
    // Access <= 2 forces every column to have weight <= 1 (a heavier column
    // costs one write plus two reads). None of those 7^5 matrices is valid.
    const auto gi = brute::from_lib(fixtures::example_gi());
    const auto target = brute::span(brute::from_lib(fixtures::example_gf()), 5);
    std::size_t valid = 0;
    std::vector<std::size_t> choice(5, 0);
    for (std::size_t code = 0; code < 16807; ++code) {
        std::size_t rest = code;
        brute::Mat y(6, brute::Vec(5, 0));
        for (std::size_t j = 0; j < 5; ++j) {
            const std::size_t c = rest % 7;
            rest /= 7;
            if (c > 0) y[c - 1][j] = 1;
        }
        const auto prod = brute::multiply(gi, y);
        if (brute::rank(prod, 5) == 4 && brute::span(prod, 5) == target) ++valid;
    }
    EXPECT_EQ(valid, 0u);
}

TEST(Oracle, IdentityInstanceCostsNothing) {
    const auto c = LinearCode::from_generator(BitMatrix::from_strings({"110", "011"}));
    const auto inst = make_instance({c}, c);
    const OracleResult res = min_access_cost(inst);
    EXPECT_EQ(res.report.access_cost(), 0u);
    // Every permutation of the even-weight code is free; the tie-break picks
    // the anti-diagonal.
    EXPECT_EQ(res.conversion.y.to_strings(), (std::vector<std::string>{"001", "010", "100"}));
}

TEST(Oracle, RmOneTwoMatchesFullBruteForce) {
    const MergeConstruction mc = rm_merge_procedure(1, 2);
    const OracleResult res = min_access_cost(mc.instance);
    const BruteSweep truth = sweep_all(mc.instance);
    EXPECT_EQ(res.report.access_cost(), truth.best_access);
    EXPECT_LE(res.report.access_cost(), mc.report.access_cost());

    std::size_t enumerated = 0;
    enumerate_conversions(mc.instance, {}, [&](const ConversionMatrix& y, const CostReport& rep) {
        EXPECT_TRUE(verify_conversion(mc.instance, y));
        EXPECT_EQ(rep, classify_columns(mc.instance, y.y));
        ++enumerated;
        return true;
    });
    EXPECT_EQ(enumerated, truth.valid);
    EXPECT_DOUBLE_EQ(count_conversions(mc.instance), static_cast<double>(truth.valid));
}

TEST(Oracle, EnumerationHasNoDuplicatesAndMatchesCount) {
    const auto c = LinearCode::from_generator(BitMatrix::from_strings({"11"}));
    const auto inst = make_instance({c, LinearCode::from_generator(BitMatrix::from_strings({"10", "01"}))},
                                    LinearCode::from_generator(BitMatrix::from_strings({"1100", "0010", "0001"})));
    std::set<std::vector<std::string>> seen;
    std::size_t best = SIZE_MAX;
    enumerate_conversions(inst, {}, [&](const ConversionMatrix& y, const CostReport& rep) {
        seen.insert(y.y.to_strings());
        best = std::min(best, rep.access_cost());
        return true;
    });
    EXPECT_EQ(static_cast<double>(seen.size()), count_conversions(inst));
    EXPECT_EQ(best, 0u);
}

TEST(Oracle, EnumerationCanStopEarly) {
    std::size_t visits = 0;
    enumerate_conversions(fixtures::example_instance(), {}, [&](const ConversionMatrix&, const CostReport&) {
        return ++visits < 10;
    });
    EXPECT_EQ(visits, 10u);
}

TEST(Oracle, ResultIsIndependentOfThreadCount) {
    brute::Generator gen(41);
    for (int trial = 0; trial < 8; ++trial) {
        const auto a = LinearCode::from_generator(brute::to_lib(gen.full_rank(2, 3)));
        const auto b = LinearCode::from_generator(brute::to_lib(gen.full_rank(1, 3)));
        const auto f = LinearCode::from_generator(brute::to_lib(gen.full_rank(3, 5)));
        const auto inst = make_instance({a, b}, f);
        SearchLimits one;
        SearchLimits many;
        many.threads = 3;
        const auto r1 = min_access_cost(inst, one);
        const auto r2 = min_access_cost(inst, many);
        EXPECT_EQ(r1.conversion.y, r2.conversion.y);
        EXPECT_EQ(r1.report, r2.report);
        EXPECT_EQ(min_access_cost(inst, one).conversion.y, r1.conversion.y);
    }
}

TEST(Oracle, OptimumAgreesWithExhaustiveEnumeration) {
    brute::Generator gen(42);
    for (int trial = 0; trial < 10; ++trial) {
        const std::size_t n1 = gen.uniform(1, 3), n2 = gen.uniform(1, 3);
        const std::size_t k1 = gen.uniform(1, n1), k2 = gen.uniform(1, n2);
        const std::size_t nf = gen.uniform(k1 + k2, std::min<std::size_t>(k1 + k2 + 2, 6));
        const auto inst = make_instance({LinearCode::from_generator(brute::to_lib(gen.full_rank(k1, n1))),
                                         LinearCode::from_generator(brute::to_lib(gen.full_rank(k2, n2)))},
                                        LinearCode::from_generator(brute::to_lib(gen.full_rank(k1 + k2, nf))));
        if (count_conversions(inst) > 2e5) {
            --trial;
            continue;
        }
        std::size_t best_access = SIZE_MAX, best_write = SIZE_MAX;
        BitMatrix best_y(1, 1);
        enumerate_conversions(inst, {}, [&](const ConversionMatrix& y, const CostReport& rep) {
            const auto key = std::make_pair(rep.access_cost(), rep.write_cost());
            if (key < std::make_pair(best_access, best_write) ||
                (key == std::make_pair(best_access, best_write) && y.y.lex_compare(best_y) < 0)) {
                best_access = key.first;
                best_write = key.second;
                best_y = y.y;
            }
            return true;
        });
        const auto res = min_access_cost(inst);
        EXPECT_EQ(res.report.access_cost(), best_access);
        EXPECT_EQ(res.report.write_cost(), best_write);
        EXPECT_EQ(res.conversion.y, best_y);
    }
}

TEST(Oracle, SizeGuards) {
    const MergeConstruction mc = rm_merge_procedure(2, 4);
    try {
        min_access_cost(mc.instance);
        FAIL() << "expected a size guard";
    } catch (const SizeGuardError& e) {
        EXPECT_GT(e.count(), 1e9);
    }
    SearchLimits tight;
    tight.max_k_F = 3;
    EXPECT_THROW(min_access_cost(fixtures::example_instance(), tight), SizeGuardError);
    tight = {};
    tight.max_candidates = 1000;
    EXPECT_THROW(enumerate_conversions(fixtures::example_instance(), tight,
                                       [](const ConversionMatrix&, const CostReport&) { return true; }),
                 SizeGuardError);
}
