#include "convcodes_cli/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include "convcodes/bounds.hpp"
#include "convcodes/conversion.hpp"
#include "convcodes/errors.hpp"
#include "convcodes/linear_code.hpp"
#include "convcodes/matrix_io.hpp"
#include "convcodes/oracle.hpp"
#include "convcodes/reed_muller.hpp"
#include "convcodes/report.hpp"

namespace convcodes::cli {

namespace {

// A negative answer on well-formed input (exit 1).
struct Rejected {
    std::string message;
};

std::string join(const std::vector<std::size_t>& v, char sep) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? std::string(1, sep) : "") + std::to_string(v[i]);
    return out;
}

// Splits a block-diagonal stacked generator into one generator per block.
std::vector<LinearCode> split_blocks(const BitMatrix& g, const std::vector<std::size_t>& blocks) {
    std::size_t total = 0;
    for (std::size_t b : blocks) total += b;
    if (blocks.empty() || total != g.cols())
        throw DimensionError("block sizes " + join(blocks, ',') + " do not add up to " + std::to_string(g.cols()) +
                             " columns");
    std::vector<IndexSet> rows(blocks.size());
    for (std::size_t r = 0; r < g.rows(); ++r) {
        const IndexSet support = g.row(r).support();
        if (support.empty()) throw InvalidArgument("stacked generator has a zero row");
        std::size_t start = 0;
        std::size_t owner = 0;
        while (support.front() >= start + blocks[owner]) start += blocks[owner++];
        if (support.back() >= start + blocks[owner])
            throw InvalidArgument("row " + std::to_string(r + 1) + " of the stacked generator spans two blocks");
        rows[owner].push_back(r);
    }
    std::vector<LinearCode> codes;
    std::size_t start = 0;
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        if (rows[i].empty()) throw InvalidArgument("block " + std::to_string(i + 1) + " has no generator rows");
        IndexSet cols(blocks[i]);
        for (std::size_t c = 0; c < blocks[i]; ++c) cols[c] = start + c;
        codes.push_back(LinearCode::from_generator(g.select_rows(rows[i]).select_columns(cols)));
        start += blocks[i];
    }
    return codes;
}

std::vector<std::size_t> resolve_blocks(const std::string& flag, const std::vector<MatrixFile*>& sources) {
    if (!flag.empty()) return parse_size_list(flag);
    for (const MatrixFile* f : sources) {
        auto b = blocks_from_comments(f->comments);
        if (!b.empty()) return b;
    }
    throw InvalidArgument("block sizes missing: pass --blocks or add a '#blocks' comment");
}

ConvertibleInstance load_instance(const MatrixFile& gi, const std::vector<std::size_t>& blocks, const MatrixFile& gf) {
    return make_instance(split_blocks(gi.matrix, blocks), LinearCode::from_generator(gf.matrix));
}

std::vector<std::string> blocks_comment(const std::vector<std::size_t>& blocks) {
    return {"blocks " + join(blocks, ',')};
}

void emit(const std::string& path, const BitMatrix& m, const std::vector<std::string>& comments, std::ostream& out) {
    if (path == "-")
        write_matrix(out, m, comments);
    else
        write_matrix_file(path, m, comments);
}

ParamSet read_param_record(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidArgument("cannot open " + path);
    std::map<std::string, std::string> kv;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line.front() == '#') continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) throw InvalidArgument("expected key=value, got '" + line + "'");
        kv[line.substr(0, eq)] = line.substr(eq + 1);
    }
    auto need = [&](const std::string& key) {
        auto it = kv.find(key);
        if (it == kv.end()) throw InvalidArgument("parameter record lacks '" + key + "'");
        return it->second;
    };
    auto one = [&](const std::string& key) {
        const auto v = parse_size_list(need(key));
        if (v.size() != 1) throw InvalidArgument("'" + key + "' takes one value");
        return v.front();
    };
    ParamSet p;
    p.lambda = one("lambda");
    p.n_I = parse_size_list(need("nI"));
    p.k_I = parse_size_list(need("kI"));
    p.n_F = one("nF");
    p.k_F = one("kF");
    p.d_F = one("dF");
    p.d_F_dual = one("dFdual");
    return p;
}

std::string distance_text(const LinearCode& code, bool dual_side) {
    try {
        return std::to_string(dual_side ? dual_distance(code) : exact_min_distance(code));
    } catch (const SizeGuardError&) {
        return "unknown";
    }
}

BitVector read_word(const std::string& path) {
    const MatrixFile f = read_matrix_file(path);
    if (f.matrix.rows() != 1) throw InvalidArgument(path + ": a codeword file holds a single row");
    return f.matrix.row(0);
}

std::vector<std::string> split_paths(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(item);
    return out;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Convertible codes in the merge regime: conversion matrices, cost bounds, Reed-Muller merges"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all");

    // rm
    unsigned rm_r = 0, rm_m = 0;
    bool rm_transformed = false;
    std::string rm_out = "-";
    auto* rm = app.add_subcommand("rm", "Write a Reed-Muller generator matrix");
    rm->add_option("--r", rm_r, "order")->required();
    rm->add_option("--m", rm_m, "number of variables")->required();
    rm->add_flag("--transformed", rm_transformed, "block form [[G',0],[A,A],[0,G']]");
    rm->add_option("--out", rm_out, "output file, '-' for stdout");

    // merge
    unsigned mg_r = 0, mg_m = 0;
    std::string mg_y, mg_gi, mg_gf, mg_format = "text";
    auto* merge = app.add_subcommand("merge", "Reed-Muller merge construction with costs and bounds");
    merge->add_option("--r", mg_r, "order of the final code")->required();
    merge->add_option("--m", mg_m, "variables of the final code")->required();
    merge->add_option("--emit-y", mg_y, "write the conversion matrix");
    merge->add_option("--emit-gi", mg_gi, "write the stacked initial generator");
    merge->add_option("--emit-gf", mg_gf, "write the final generator");
    merge->add_option("--format", mg_format)->check(CLI::IsMember({"text", "json"}));

    // verify
    std::string vf_gi, vf_gf, vf_y, vf_blocks, vf_format = "text";
    auto* verify = app.add_subcommand("verify", "Check a conversion matrix and classify its symbols");
    verify->add_option("--gi", vf_gi, "stacked block-diagonal initial generator")->required();
    verify->add_option("--gf", vf_gf, "final generator")->required();
    verify->add_option("--y", vf_y, "conversion matrix")->required();
    verify->add_option("--blocks", vf_blocks, "initial code lengths n1,n2,...");
    verify->add_option("--format", vf_format)->check(CLI::IsMember({"text", "json"}));

    // report
    unsigned rp_min = 4, rp_max = 4;
    std::string rp_format = "text";
    auto* report = app.add_subcommand("report", "Construction versus bounds for r = m - 2 over a range of m");
    report->add_option("--m-min", rp_min, "first m (inclusive)");
    report->add_option("--m-max", rp_max, "last m (inclusive)");
    report->add_option("--format", rp_format)->check(CLI::IsMember({"text", "json"}));

    // bounds
    std::size_t bd_lambda = 0, bd_nF = 0, bd_kF = 0, bd_dF = 0, bd_dFdual = 0;
    std::string bd_nI, bd_kI, bd_U, bd_params, bd_format = "text";
    auto* bounds = app.add_subcommand("bounds", "Evaluate every bound on a parameter set");
    auto* bd_file = bounds->add_option("--params", bd_params, "key=value parameter record");
    auto* bd_l = bounds->add_option("--lambda", bd_lambda);
    bounds->add_option("--nI", bd_nI, "n1,n2,...");
    bounds->add_option("--kI", bd_kI, "k1,k2,...");
    bounds->add_option("--nF", bd_nF);
    bounds->add_option("--kF", bd_kF);
    bounds->add_option("--dF", bd_dF);
    bounds->add_option("--dFdual", bd_dFdual);
    bounds->add_option("--U", bd_U, "|U_1|,|U_2|,... used by the delta bound");
    bounds->add_option("--format", bd_format)->check(CLI::IsMember({"text", "json"}));
    bd_file->excludes(bd_l);

    // oracle
    std::string or_gi, or_gf, or_blocks, or_y, or_format = "text";
    SearchLimits limits;
    auto* oracle = app.add_subcommand("oracle", "Exhaustive minimum-access-cost search on a small instance");
    oracle->add_option("--gi", or_gi)->required();
    oracle->add_option("--gf", or_gf)->required();
    oracle->add_option("--blocks", or_blocks);
    oracle->add_option("--max-kf", limits.max_k_F, "largest k_F searched");
    oracle->add_option("--threads", limits.threads);
    oracle->add_option("--time-budget", limits.time_budget, "seconds, 0 = unlimited");
    oracle->add_option("--emit-y", or_y, "write the optimal conversion matrix");
    oracle->add_option("--format", or_format)->check(CLI::IsMember({"text", "json"}));

    // apply
    std::string ap_y, ap_blocks, ap_inputs, ap_out = "-";
    auto* apply = app.add_subcommand("apply", "Multiply concatenated initial codewords by Y");
    apply->add_option("--y", ap_y)->required();
    apply->add_option("--blocks", ap_blocks);
    apply->add_option("--inputs", ap_inputs, "c1.txt,c2.txt,... (one-row matrix files)")->required();
    apply->add_option("--gi", "stacked initial generator, checks inputs and Y");
    apply->add_option("--out", ap_out);

    // info
    std::string in_g;
    auto* info = app.add_subcommand("info", "Length, dimension and distances of a code");
    info->add_option("--g", in_g, "generator matrix")->required();

    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*rm) {
            if (rm_transformed) {
                const auto t = rm_transformed_generator(rm_r, rm_m);
                emit(rm_out, t.matrix,
                     {"blocks " + std::to_string(t.block_rows[0]) + " " + std::to_string(t.block_rows[1]) + " " +
                      std::to_string(t.block_rows[2])},
                     out);
            } else {
                emit(rm_out, rm_generator(rm_r, rm_m), {}, out);
            }
        } else if (*merge) {
            const MergeConstruction mc = rm_merge_procedure(mg_r, mg_m);
            const auto blocks = mc.instance.block_lengths();
            if (!mg_y.empty()) write_matrix_file(mg_y, mc.conversion.y, blocks_comment(blocks));
            if (!mg_gi.empty()) write_matrix_file(mg_gi, mc.instance.stacked_generator(), blocks_comment(blocks));
            if (!mg_gf.empty()) write_matrix_file(mg_gf, mc.instance.final_code().generator());
            const ReportRecord rec = make_report(params_of(mc.instance), mc.report);
            if (mg_format == "json")
                out << to_json(rec) << '\n';
            else
                out << "RM merge: RM(" << mg_r << "," << mg_m - 1 << ") x RM(" << mg_r - 1 << "," << mg_m - 1
                    << ") -> RM(" << mg_r << "," << mg_m << ")\n"
                    << format_report(rec);
        } else if (*verify) {
            MatrixFile gi = read_matrix_file(vf_gi);
            MatrixFile gf = read_matrix_file(vf_gf);
            MatrixFile y = read_matrix_file(vf_y);
            const auto blocks = resolve_blocks(vf_blocks, {&y, &gi});
            const ConvertibleInstance inst = load_instance(gi, blocks, gf);
            const ConversionMatrix conv{y.matrix, blocks};
            if (!verify_conversion(inst, conv)) throw Rejected{"not a valid conversion matrix for this instance"};
            const CostReport rep = classify_columns(inst, conv.y);
            if (vf_format == "json")
                out << cost_json(rep) << '\n';
            else
                out << "valid conversion\n" << format_costs(rep);
        } else if (*report) {
            std::vector<ReportRecord> rows;
            std::vector<unsigned> ms;
            for (unsigned m = rp_min; m <= rp_max; ++m) {
                if (m < 4) {
                    err << "warning: skipping m=" << m << " (needs m >= 4 so that r = m - 2 >= 2)\n";
                    continue;
                }
                rows.push_back(rm_merge_report(m - 2, m));
                ms.push_back(m);
            }
            if (rp_format == "json") {
                out << to_json(rows) << '\n';
            } else {
                for (std::size_t i = 0; i < rows.size(); ++i)
                    out << "== m=" << ms[i] << " r=" << ms[i] - 2 << " ==\n" << format_report(rows[i]) << '\n';
            }
        } else if (*bounds) {
            ParamSet p;
            if (!bd_params.empty()) {
                p = read_param_record(bd_params);
            } else {
                for (const char* flag : {"--lambda", "--nI", "--kI", "--nF", "--kF", "--dF", "--dFdual"})
                    if (bounds->count(flag) == 0)
                        throw InvalidArgument(std::string("bounds: missing ") + flag + " (or pass --params)");
                p = {bd_lambda, parse_size_list(bd_nI), parse_size_list(bd_kI), bd_nF, bd_kF, bd_dF, bd_dFdual};
            }
            const BoundReport br = evaluate_bounds(p, bd_U.empty() ? std::vector<std::size_t>{} : parse_size_list(bd_U));
            if (bd_format == "json")
                out << bounds_json(p, br) << '\n';
            else
                out << "params: " << format_params(p) << format_bounds(br);
        } else if (*oracle) {
            MatrixFile gi = read_matrix_file(or_gi);
            MatrixFile gf = read_matrix_file(or_gf);
            const auto blocks = resolve_blocks(or_blocks, {&gi});
            const ConvertibleInstance inst = load_instance(gi, blocks, gf);
            const OracleResult res = min_access_cost(inst, limits);
            if (!or_y.empty()) write_matrix_file(or_y, res.conversion.y, blocks_comment(blocks));
            if (or_format == "json") {
                out << cost_json(res.report) << '\n';
            } else {
                out << "optimum access cost: " << res.report.access_cost() << '\n'
                    << "search space: " << res.candidates << " candidates, " << res.leaves << " evaluated\n"
                    << format_costs(res.report);
            }
        } else if (*apply) {
            MatrixFile y = read_matrix_file(ap_y);
            const auto blocks = resolve_blocks(ap_blocks, {&y});
            const auto paths = split_paths(ap_inputs);
            if (paths.size() != blocks.size())
                throw InvalidArgument("expected " + std::to_string(blocks.size()) + " input files, got " +
                                      std::to_string(paths.size()));
            std::optional<BitVector> stacked;
            for (std::size_t i = 0; i < paths.size(); ++i) {
                const BitVector w = read_word(paths[i]);
                if (w.size() != blocks[i])
                    throw DimensionError(paths[i] + ": length " + std::to_string(w.size()) + ", block expects " +
                                         std::to_string(blocks[i]));
                stacked = stacked ? stacked->concat(w) : w;
            }
            if (y.matrix.rows() != stacked->size())
                throw DimensionError("Y has " + std::to_string(y.matrix.rows()) + " rows, inputs have " +
                                     std::to_string(stacked->size()) + " symbols");
            if (const auto* gi_opt = apply->get_option("--gi"); gi_opt->count() > 0) {
                const MatrixFile gi = read_matrix_file(gi_opt->as<std::string>());
                const auto codes = split_blocks(gi.matrix, blocks);
                std::size_t start = 0;
                for (std::size_t i = 0; i < codes.size(); ++i) {
                    IndexSet coords(blocks[i]);
                    for (std::size_t c = 0; c < blocks[i]; ++c) coords[c] = start + c;
                    if (!contains(codes[i], stacked->select(coords)))
                        throw Rejected{"input " + std::to_string(i + 1) + " is not a codeword of its initial code"};
                    start += blocks[i];
                }
            }
            emit(ap_out, BitMatrix::from_rows({vec_mul(*stacked, y.matrix)}), {}, out);
        } else if (*info) {
            const MatrixFile g = read_matrix_file(in_g);
            const LinearCode code = LinearCode::from_generator(g.matrix);
            out << "n=" << code.n() << " k=" << code.k() << " d=" << distance_text(code, false)
                << " d_dual=" << distance_text(code, true) << '\n';
        }
    } catch (const Rejected& r) {
        err << "error: " << r.message << '\n';
        return kFailure;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kOk;
}

}  // namespace convcodes::cli
