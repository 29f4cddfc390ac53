#include "convcodes/report.hpp"

#include <iomanip>
#include <sstream>

#include <nlohmann/json.hpp>

#include "convcodes/errors.hpp"

namespace convcodes {

using nlohmann::json;

namespace {

json one_based(const IndexSet& s) {
    json out = json::array();
    for (std::size_t v : s) out.push_back(v + 1);
    return out;
}

IndexSet zero_based(const json& j) {
    IndexSet out;
    for (const auto& v : j) {
        const auto x = v.get<std::size_t>();
        if (x == 0) throw InvalidArgument("coordinates are 1-based");
        out.push_back(x - 1);
    }
    return out;
}

template <typename T>
json optional_json(const std::optional<T>& v) {
    return v ? json(*v) : json(nullptr);
}

template <typename T>
std::optional<T> optional_from(const json& j) {
    if (j.is_null()) return std::nullopt;
    return j.get<T>();
}

json params_to(const ParamSet& p) {
    return {{"lambda", p.lambda}, {"nI", p.n_I}, {"kI", p.k_I},    {"nF", p.n_F},
            {"kF", p.k_F},        {"dF", p.d_F}, {"dFdual", p.d_F_dual}};
}

ParamSet params_from(const json& j) {
    ParamSet p;
    p.lambda = j.at("lambda").get<std::size_t>();
    p.n_I = j.at("nI").get<std::vector<std::size_t>>();
    p.k_I = j.at("kI").get<std::vector<std::size_t>>();
    p.n_F = j.at("nF").get<std::size_t>();
    p.k_F = j.at("kF").get<std::size_t>();
    p.d_F = j.at("dF").get<std::size_t>();
    p.d_F_dual = j.at("dFdual").get<std::size_t>();
    return p;
}

json costs_to(const CostReport& c) {
    json u = json::array();
    json r = json::array();
    json u_sets = json::array();
    json r_sets = json::array();
    for (const auto& s : c.unchanged) {
        u.push_back(s.size());
        u_sets.push_back(one_based(s));
    }
    for (const auto& s : c.read) {
        r.push_back(s.size());
        r_sets.push_back(one_based(s));
    }
    return {{"U", u},
            {"W", c.write_cost()},
            {"R", r},
            {"unchanged", c.unchanged_count()},
            {"read", c.read_cost()},
            {"write", c.write_cost()},
            {"access", c.access_cost()},
            {"sets", {{"U", u_sets}, {"W", one_based(c.new_symbols)}, {"R", r_sets}}}};
}

CostReport costs_from(const json& j) {
    CostReport c;
    const json& sets = j.at("sets");
    for (const auto& s : sets.at("U")) c.unchanged.push_back(zero_based(s));
    c.new_symbols = zero_based(sets.at("W"));
    for (const auto& s : sets.at("R")) c.read.push_back(zero_based(s));
    if (j.at("access").get<std::size_t>() != c.access_cost() || j.at("W").get<std::size_t>() != c.write_cost())
        throw InvalidArgument("cost totals disagree with the listed sets");
    return c;
}

json bound_to(const BoundRecord& b) {
    return {{"name", b.name},
            {"i", b.index ? json(*b.index + 1) : json(nullptr)},
            {"kind", to_string(b.kind)},
            {"applicable", b.applicable},
            {"value", optional_json(b.value)},
            {"actual", optional_json(b.actual)},
            {"satisfied", optional_json(b.satisfied)},
            {"tight", b.tight}};
}

BoundRecord bound_from(const json& j) {
    BoundRecord b;
    b.name = j.at("name").get<std::string>();
    if (!j.at("i").is_null()) {
        const auto i = j.at("i").get<std::size_t>();
        if (i == 0) throw InvalidArgument("bound index is 1-based");
        b.index = i - 1;
    }
    b.kind = bound_kind_from_string(j.at("kind").get<std::string>());
    b.applicable = j.at("applicable").get<bool>();
    b.value = optional_from<long>(j.at("value"));
    b.actual = optional_from<long>(j.at("actual"));
    b.satisfied = optional_from<bool>(j.at("satisfied"));
    b.tight = j.at("tight").get<bool>();
    return b;
}

json bounds_to(const BoundReport& r) {
    json out = json::array();
    for (const auto& b : r.records) out.push_back(bound_to(b));
    return out;
}

json record_to(const ReportRecord& rec) {
    return {{"params", params_to(rec.params)}, {"costs", costs_to(rec.construction)}, {"bounds", bounds_to(rec.bounds)}};
}

ReportRecord record_from(const json& j) {
    ReportRecord rec;
    rec.params = params_from(j.at("params"));
    rec.construction = costs_from(j.at("costs"));
    for (const auto& b : j.at("bounds")) rec.bounds.records.push_back(bound_from(b));
    return rec;
}

template <typename F>
auto parse_with(const std::string& text, F&& f) {
    try {
        return f(json::parse(text));
    } catch (const json::exception& e) {
        throw InvalidArgument(std::string("malformed report JSON: ") + e.what());
    }
}

std::string list(const std::vector<std::size_t>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
    return out;
}

std::string set_list(const IndexSet& s) {
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i] + 1);
    return out + "}";
}

std::string verdict(const BoundRecord& b) {
    if (!b.applicable) return b.kind == BoundKind::Regime ? "no" : "n/a";
    if (b.kind == BoundKind::Regime) return "yes";
    if (!b.satisfied) return "-";
    if (!*b.satisfied) return "VIOLATED";
    return b.tight ? "tight" : "slack " + std::to_string(b.slack());
}

}  // namespace

ReportRecord make_report(const ParamSet& params, const CostReport& construction) {
    return {params, construction, audit(params, construction)};
}

ReportRecord rm_merge_report(unsigned r, unsigned m) {
    const MergeConstruction mc = rm_merge_procedure(r, m);
    return make_report(params_of(mc.instance), mc.report);
}

std::string to_json(const ReportRecord& record, int indent) { return record_to(record).dump(indent); }

std::string to_json(const std::vector<ReportRecord>& records, int indent) {
    json out = json::array();
    for (const auto& r : records) out.push_back(record_to(r));
    return out.dump(indent);
}

ReportRecord report_from_json(const std::string& text) {
    return parse_with(text, [](const json& j) { return record_from(j); });
}

std::vector<ReportRecord> reports_from_json(const std::string& text) {
    return parse_with(text, [](const json& j) {
        if (!j.is_array()) throw InvalidArgument("expected a JSON array of reports");
        std::vector<ReportRecord> out;
        for (const auto& r : j) out.push_back(record_from(r));
        return out;
    });
}

std::string cost_json(const CostReport& report, int indent) { return costs_to(report).dump(indent); }

CostReport cost_from_json(const std::string& text) {
    return parse_with(text, [](const json& j) { return costs_from(j); });
}

std::string bounds_json(const ParamSet& params, const BoundReport& bounds, int indent) {
    return json{{"params", params_to(params)}, {"bounds", bounds_to(bounds)}}.dump(indent);
}

std::string format_params(const ParamSet& p) {
    std::ostringstream out;
    out << "lambda=" << p.lambda << " nI=" << list(p.n_I) << " kI=" << list(p.k_I) << " nF=" << p.n_F
        << " kF=" << p.k_F << " dF=" << p.d_F << " dFdual=" << p.d_F_dual << '\n';
    return out.str();
}

std::string format_costs(const CostReport& c) {
    std::ostringstream out;
    std::vector<std::size_t> u;
    std::vector<std::size_t> r;
    for (const auto& s : c.unchanged) u.push_back(s.size());
    for (const auto& s : c.read) r.push_back(s.size());
    out << "U=" << list(u) << " W=" << c.write_cost() << " R=" << list(r) << " read=" << c.read_cost()
        << " write=" << c.write_cost() << " access=" << c.access_cost() << '\n';
    for (std::size_t i = 0; i < c.unchanged.size(); ++i) out << "  U" << i + 1 << " = " << set_list(c.unchanged[i]) << '\n';
    out << "  W = " << set_list(c.new_symbols) << '\n';
    for (std::size_t i = 0; i < c.read.size(); ++i) out << "  R" << i + 1 << " = " << set_list(c.read[i]) << '\n';
    return out.str();
}

std::string format_bounds(const BoundReport& bounds) {
    std::ostringstream out;
    out << std::left << std::setw(28) << "bound" << std::setw(4) << "i" << std::setw(17) << "kind" << std::setw(8)
        << "value" << std::setw(8) << "actual" << "verdict\n";
    for (const auto& b : bounds.records) {
        out << std::setw(28) << b.name << std::setw(4) << (b.index ? std::to_string(*b.index + 1) : "-")
            << std::setw(17) << to_string(b.kind) << std::setw(8) << (b.value ? std::to_string(*b.value) : "-")
            << std::setw(8) << (b.actual ? std::to_string(*b.actual) : "-") << verdict(b) << '\n';
    }
    return out.str();
}

std::string format_report(const ReportRecord& record) {
    return "params: " + format_params(record.params) + "costs:  " + format_costs(record.construction) +
           format_bounds(record.bounds);
}

}  // namespace convcodes
