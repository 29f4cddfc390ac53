// Acceptance run: one PASS/FAIL line per criterion, details indented below it.
// Exit status is the number of failed criteria (capped at 125).
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>

#include "brute.hpp"
#include "convcodes/bounds.hpp"
#include "convcodes/conversion.hpp"
#include "convcodes/errors.hpp"
#include "convcodes/oracle.hpp"
#include "convcodes/reed_muller.hpp"
#include "fixtures.hpp"

using namespace convcodes;

namespace {

struct Outcome {
    bool pass = true;
    std::vector<std::string> notes;

    void check(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            notes.push_back("failed: " + what);
        }
    }
    void note(const std::string& s) { notes.push_back(s); }
};

template <typename... Args>
std::string fmt(const Args&... args) {
    std::ostringstream os;
    (os << ... << args);
    return os.str();
}

std::size_t binomial(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    std::size_t r = 1;
    for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

BitVector random_message(brute::Generator& gen, std::size_t k) {
    BitVector u(k);
    for (std::size_t i = 0; i < k; ++i) u.set(i, gen.uniform(0, 1));
    return u;
}

// ---------------------------------------------------------------------------

void example_reproduction(Outcome& o) {
    const auto inst = fixtures::example_instance();
    const ConversionMatrix y{fixtures::example_y(), {3, 3}};
    o.check(verify_conversion(inst, y), "example Y verifies");
    const CostReport rep = classify_symbols(inst, y);
    o.note(fmt("write=", rep.write_cost(), " read=", rep.read_cost(), " access=", rep.access_cost(),
               " |U|=", rep.unchanged_count()));
    o.check(rep.write_cost() == 1, "write cost 1");
    o.check(rep.read_cost() == 2, "read cost 2");
    o.check(rep.access_cost() == 3, "access cost 3");
    o.check(rep.unchanged_count() == 4, "|U| = 4");
    const CostReport def = classify_symbols(inst, default_conversion(inst));
    o.note(fmt("default conversion access=", def.access_cost()));
    o.check(def.access_cost() == 5, "default conversion access 5");
}

void oracle_optimality(Outcome& o) {
    const auto inst = fixtures::example_instance();
    const OracleResult res = min_access_cost(inst);
    o.note(fmt("oracle optimum=", res.report.access_cost(), " over ", res.candidates, " candidates (",
               res.leaves, " evaluated)"));
    o.check(res.report.access_cost() == 3, "oracle optimum is 3");
    o.check(verify_conversion(inst, res.conversion), "optimal Y verifies");

    // Independent certificate: access <= 2 forces every column to weight <= 1,
    // and none of those 7^5 matrices is a conversion.
    const auto gi = brute::from_lib(fixtures::example_gi());
    const auto target = brute::span(brute::from_lib(fixtures::example_gf()), 5);
    std::size_t cheap_valid = 0;
    for (std::size_t code = 0; code < 16807; ++code) {
        std::size_t rest = code;
        brute::Mat m(6, brute::Vec(5, 0));
        for (std::size_t j = 0; j < 5; ++j, rest /= 7)
            if (rest % 7) m[rest % 7 - 1][j] = 1;
        const auto prod = brute::multiply(gi, m);
        if (brute::rank(prod, 5) == 4 && brute::span(prod, 5) == target) ++cheap_valid;
    }
    o.note(fmt("conversions with access <= 2 (brute force): ", cheap_valid));
    o.check(cheap_valid == 0, "no conversion of access <= 2");
}

void rm_generator_fidelity(Outcome& o) {
    const std::vector<std::string> printed = {"11111111", "00001111", "00110011", "01010101",
                                              "00000011", "00000101", "00010001"};
    const auto got = rm_generator(2, 3).to_strings();
    o.check(got == printed, "rm_generator(2,3) equals the printed matrix");
}

void rm_properties(Outcome& o) {
    // m = 0 is outside the generator's domain (m >= 1).
    brute::Generator gen(4);
    std::size_t exhaustive = 0, sampled = 0;
    for (unsigned m = 1; m <= 7; ++m)
        for (unsigned r = 0; r <= m; ++r) {
            const std::string tag = fmt("RM(", r, ",", m, ")");
            const auto code = make_rm(r, m).code;
            const std::size_t n = std::size_t{1} << m;
            std::size_t expected_k = 0;
            for (unsigned i = 0; i <= r; ++i) expected_k += binomial(m, i);
            o.check(code.k() == expected_k && rank(code.generator()) == expected_k, tag + " dimension");

            if (r < m) {
                o.check(same_code(dual(code), make_rm(m - r - 1, m).code), tag + " dual");
            } else {
                o.check(code.k() == n, tag + " is the whole space, dual is {0}");
            }

            if (m >= 2) {
                const auto u = make_rm(std::min(r, m - 1), m - 1).code;
                const auto v = r >= 1 ? make_rm(r - 1, m - 1).code : LinearCode::zero(n / 2);
                o.check(same_code(plotkin_sum(u, v), code), tag + " Plotkin");
            }

            const std::size_t d = std::size_t{1} << (m - r);
            if (code.k() <= 24) {
                o.check(min_distance(code, 24) == d, tag + " exhaustive distance");
                ++exhaustive;
                continue;
            }
            // Witness: x_1 ... x_r has weight 2^{m-r}.
            std::vector<unsigned> vars;
            for (unsigned v = 1; v <= r; ++v) vars.push_back(v);
            Monomial mono;
            for (unsigned v : vars) mono.vars |= std::uint32_t{1} << (v - 1);
            o.check(evaluate_monomial(mono, points(m)).weight() == d, tag + " witness weight");
            bool ok = true;
            for (int s = 0; s < 20000 && ok; ++s) {
                const BitVector c = encode(code, random_message(gen, code.k()));
                ok = c.weight() == 0 || c.weight() >= d;
            }
            o.check(ok, tag + " sampled codewords reach the distance");
            ++sampled;
        }
    o.note(fmt(exhaustive, " distances exhaustive, ", sampled, " by witness + 20000 samples"));
}

void rm_merge_costs(Outcome& o) {
    std::size_t cases = 0;
    for (unsigned m = 2; m <= 6; ++m)
        for (unsigned r = 1; r < m; ++r) {
            const std::string tag = fmt("r=", r, " m=", m);
            const MergeConstruction mc = rm_merge_procedure(r, m);
            const std::size_t n1 = mc.instance.initial_code(0).n(), k1 = mc.instance.initial_code(0).k();
            const std::size_t n2 = mc.instance.initial_code(1).n(), k2 = mc.instance.initial_code(1).k();
            o.check(verify_conversion(mc.instance, mc.conversion), tag + " verifies");
            o.check(classify_symbols(mc.instance, mc.conversion) == mc.report, tag + " classification = report");
            o.check(mc.report.unchanged[0].size() == n1, tag + " |U1| = n1");
            o.check(mc.report.unchanged[1].size() == k2, tag + " |U2| = k2");
            o.check(mc.report.read[0].size() <= k1, tag + " |R1| <= k1");
            o.check(mc.report.read[1].size() == std::min(k2, n2 - k2), tag + " |R2| = min(k2, n2-k2)");
            ++cases;
        }
    o.note(fmt(cases, " (r, m) pairs"));
}

void rm24_comparison(Outcome& o) {
    const MergeConstruction mc = rm_merge_procedure(2, 4);
    const ParamSet p = params_of(mc.instance);
    o.note(fmt("d_F=", p.d_F, " d_F_dual=", p.d_F_dual));
    o.check(p.d_F == 4, "d_F = 4");
    o.check(p.d_F_dual == 8, "d_F_dual = 8");
    const BoundReport rep = audit(p, mc.report);
    const auto* dual1 = rep.find("unchanged_upper_dual", 0);
    const auto* dual2 = rep.find("unchanged_upper_dual", 1);
    const auto* single1 = rep.find("unchanged_upper_singleton", 0);
    const auto* delta1 = rep.find("read_lower_delta", 0);
    const auto* delta2 = rep.find("read_lower_delta", 1);
    o.check(!dual1->applicable, "dual bound inapplicable for i=1");
    o.check(dual2->applicable && dual2->value == 4, "dual bound for i=2 is 4");
    o.check(single1->value == 8 && single1->tight, "Singleton-type bound for i=1 is 8 and tight");
    o.check(delta1->value == 2 && delta1->actual == 7 && !delta1->tight, "R1 >= 2, slack against 7");
    o.check(delta2->value == 3 && delta2->actual == 4 && !delta2->tight, "R2 >= 3, slack against 4");
    o.check(rep.violations() == 0, "no violations");
}

struct SweepStats {
    std::size_t conversions = 0;
    std::map<std::string, std::size_t> violations;
};

using Extra = std::function<void(const ConversionMatrix&, const CostReport&)>;

void sweep(const ConvertibleInstance& inst, SweepStats& st, const Extra& extra = {}) {
    const ParamSet p = params_of(inst);
    enumerate_conversions(inst, {}, [&](const ConversionMatrix& y, const CostReport& rep) {
        ++st.conversions;
        for (const auto& b : audit(p, rep).records)
            if (b.satisfied == std::optional<bool>(false)) ++st.violations[b.name];
        if (extra) extra(y, rep);
        return true;
    });
}

ConvertibleInstance random_pair_instance(brute::Generator& gen, std::size_t nf_max, std::size_t kf_max) {
    const std::size_t n1 = gen.uniform(1, 3), n2 = gen.uniform(1, 3);
    std::size_t k1 = gen.uniform(1, n1), k2 = gen.uniform(1, n2);
    while (k1 + k2 > kf_max) (k1 > k2 ? k1 : k2) -= 1;
    const std::size_t nf = gen.uniform(k1 + k2, std::min(nf_max, k1 + k2 + 3));
    return make_instance({LinearCode::from_generator(brute::to_lib(gen.full_rank(k1, n1))),
                          LinearCode::from_generator(brute::to_lib(gen.full_rank(k2, n2)))},
                         LinearCode::from_generator(brute::to_lib(gen.full_rank(k1 + k2, nf))));
}

const std::vector<std::string> kSoundBounds = {"unchanged_upper_singleton", "unchanged_upper_dual",
                                               "read_lower_delta", "read_lower_omega",
                                               "unchanged_total_upper_dual"};

void soundness_sweep(Outcome& o) {
    brute::Generator gen(7);
    SweepStats st;
    std::size_t instances = 0, tries = 0;
    while (instances < 12 && tries < 1000) {
        ++tries;
        const auto inst = random_pair_instance(gen, 7, 4);
        if (count_conversions(inst) > 4e5) continue;
        ++instances;
        sweep(inst, st);
    }
    o.note(fmt(instances, " instances, ", st.conversions, " conversions audited"));
    o.check(instances >= 10, "at least 10 instances");
    std::size_t sound_violations = 0;
    for (const auto& [name, count] : st.violations) {
        o.note(fmt("violations of ", name, ": ", count));
        if (std::find(kSoundBounds.begin(), kSoundBounds.end(), name) != kSoundBounds.end()) sound_violations += count;
    }
    o.note(fmt("violations of the upper, delta and omega bounds: ", sound_violations));
    o.check(st.violations.empty(), "zero violations of every applicable bound");
    if (!st.violations.empty())
        o.note("the unchanged lower bounds do not hold for every conversion; see the three-symbol "
               "conversion of the example instance");
}

void structural(Outcome& o) {
    brute::Generator gen(8);
    std::size_t bad_duality = 0, bad_lemma = 0;
    for (int t = 0; t < 500; ++t) {
        const std::size_t n = gen.uniform(2, 12), k = gen.uniform(1, n - 1);
        const auto c = LinearCode::from_generator(brute::to_lib(gen.full_rank(k, n)));
        const IndexSet s = gen.subset(n, gen.uniform(1, n));
        const auto lhs = brute::dual_words(brute::from_lib(shorten(c, s).generator()), s.size());
        const auto rhs_code = puncture(dual(c), s);
        if (lhs != brute::span(brute::from_lib(rhs_code.generator()), s.size())) ++bad_duality;
    }
    for (int t = 0; t < 500; ++t) {
        const std::size_t n = gen.uniform(2, 12), k = gen.uniform(1, n);
        const auto c = LinearCode::from_generator(brute::to_lib(gen.full_rank(k, n)));
        const IndexSet s = gen.subset(n, gen.uniform(1, n - 1));
        IndexSet rest;
        for (std::size_t i = 0; i < n; ++i)
            if (!std::binary_search(s.begin(), s.end(), i)) rest.push_back(i);
        if (puncture(c, s).k() + shorten(c, rest).k() != k) ++bad_lemma;
    }
    std::size_t bad_write = 0;
    for (int t = 0; t < 500; ++t) {
        const auto inst = random_pair_instance(gen, 7, 6);
        const auto y = gen.matrix(inst.stacked_length(), inst.final_code().n(), 0.3);
        const CostReport rep = classify_columns(inst, brute::to_lib(y));
        if (rep.write_cost() != inst.final_code().n() - rep.unchanged_count()) ++bad_write;
    }
    std::size_t bad_rm = 0;
    for (unsigned m = 1; m <= 6; ++m)
        for (unsigned r = 0; r <= m; ++r) {
            const auto code = make_rm(r, m).code;
            const IndexSet info = low_weight_points(m, r);
            for (int t = 0; t < 20; ++t) {
                const BitVector u = random_message(gen, code.k());
                if (decode_from_positions(code, info, encode(code, u).select(info)) != u) ++bad_rm;
            }
        }
    o.note(fmt("duality failures ", bad_duality, "/500, lemma failures ", bad_lemma, "/500, |W| failures ", bad_write,
               "/500, RM round-trip failures ", bad_rm));
    o.check(bad_duality == 0, "shorten/puncture duality");
    o.check(bad_lemma == 0, "puncturing-dimension lemma");
    o.check(bad_write == 0, "|W| = n_F - |U|");
    o.check(bad_rm == 0, "RM encode/decode on weight-<=r points");
}

bool dual_regime(const ParamSet& p) {
    for (std::size_t i = 0; i < p.lambda; ++i)
        if (p.d_F_dual <= p.k_I[i] + 1) return false;
    return p.lambda >= 2;
}

void pinch(Outcome& o) {
    std::vector<ConvertibleInstance> pool = {fixtures::example_instance()};
    brute::Generator gen(9);
    for (std::size_t tries = 0; pool.size() < 8 && tries < 20000; ++tries) {
        auto inst = random_pair_instance(gen, 6, 4);
        if (dual_regime(params_of(inst)) && count_conversions(inst) <= 4e5) pool.push_back(std::move(inst));
    }
    o.note(fmt(pool.size(), " instances with d_F_dual > k_i + 1 for every i"));
    o.check(pool.size() >= 2, "found instances in the regime");

    SweepStats st;
    std::size_t off_pinch = 0, smallest = SIZE_MAX, oracle_ok = 0, default_ok = 0;
    std::size_t semantic_off = 0, semantic_smallest = SIZE_MAX;
    for (const auto& inst : pool) {
        const std::size_t kf = inst.final_code().k();
        const BitMatrix gi = inst.stacked_generator();
        // A final symbol is semantically unchanged when it equals some initial
        // symbol on every codeword, whatever the weight of its Y column.
        std::set<std::string> initial_columns;
        for (const auto& row : gi.transpose().to_strings()) initial_columns.insert(row);
        sweep(inst, st, [&](const ConversionMatrix& y, const CostReport& rep) {
            if (rep.unchanged_count() != kf) ++off_pinch;
            smallest = std::min(smallest, rep.unchanged_count());
            std::size_t semantic = 0;
            for (const auto& col : mat_mul(gi, y.y).transpose().to_strings()) semantic += initial_columns.count(col);
            if (semantic != kf) ++semantic_off;
            semantic_smallest = std::min(semantic_smallest, semantic);
        });
        oracle_ok += min_access_cost(inst).report.unchanged_count() == kf;
        default_ok += classify_symbols(inst, default_conversion(inst)).unchanged_count() == kf;
    }
    o.note(fmt(st.conversions, " conversions audited, ", off_pinch, " with |U| != k_F (smallest |U| seen: ",
               smallest, ")"));
    o.note(fmt(semantic_off, " with semantically unchanged count != k_F (smallest: ", semantic_smallest, ")"));
    o.note(fmt("oracle optimum has |U| = k_F on ", oracle_ok, "/", pool.size(), " instances, default conversion on ",
               default_ok, "/", pool.size()));
    std::size_t sound = 0;
    for (const auto& name : kSoundBounds) sound += st.violations.count(name) ? st.violations[name] : 0;
    o.note(fmt("violations of the upper, delta and omega bounds: ", sound));
    o.check(off_pinch == 0, "every conversion has |U| = k_F");
    if (off_pinch)
        o.note("counterexample: sigma(x) = (x1+x4, x2+x5, x1, x2, x6) on the example instance keeps 3 < k_F = 4");
}

struct Criterion {
    int id;
    const char* title;
    double budget_s;
    void (*run)(Outcome&);
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "Example reproduction", 1, example_reproduction},
        {2, "Oracle optimality on the example", 60, oracle_optimality},
        {3, "RM generator fidelity", 1, rm_generator_fidelity},
        {4, "RM property suite, 1 <= m <= 7", 300, rm_properties},
        {5, "RM merge cost formulas, 1 <= r < m <= 6", 120, rm_merge_costs},
        {6, "m=4, r=2 bound comparison", 60, rm24_comparison},
        {7, "Bound soundness sweep", 600, soundness_sweep},
        {8, "Structural property suite", 120, structural},
        {9, "Pinch |U| = k_F in the dual-distance regime", 600, pinch},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        Outcome o;
        const auto start = std::chrono::steady_clock::now();
        try {
            c.run(o);
        } catch (const std::exception& e) {
            o.check(false, std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (secs > c.budget_s) o.check(false, fmt("time ", secs, " s over budget ", c.budget_s, " s"));
        char timing[64];
        std::snprintf(timing, sizeof timing, "%.2f s", secs);
        std::cout << (o.pass ? "PASS" : "FAIL") << " [" << c.id << "] " << c.title << " (" << timing << ")\n";
        for (const auto& n : o.notes) std::cout << "    " << n << '\n';
        std::cout.flush();
        failed += o.pass ? 0 : 1;
    }
    std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << "/" << criteria.size()
              << " criteria passed\n";
    return std::min(failed, 125);
}
