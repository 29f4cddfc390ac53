#pragma once

// Cost/bound comparison records and their JSON and text forms.
//
// JSON schema (coordinates and code indices are 1-based):
//   {
//     "params": {"lambda", "nI": [..], "kI": [..], "nF", "kF", "dF", "dFdual"},
//     "costs": {"U": [|U_i|..], "W": |W|, "R": [|R_i|..], "unchanged", "read", "write", "access",
//               "sets": {"U": [[..]..], "W": [..], "R": [[..]..]}},
//     "bounds": [{"name", "i", "kind", "applicable", "value", "actual", "satisfied", "tight"}..]
//   }
// "i" is null for whole-conversion bounds; "value", "actual" and "satisfied"
// are null when not defined.

#include <string>
#include <vector>

#include "convcodes/bounds.hpp"
#include "convcodes/conversion.hpp"

namespace convcodes {

struct ReportRecord {
    ParamSet params;
    CostReport construction;
    BoundReport bounds;

    friend bool operator==(const ReportRecord&, const ReportRecord&) = default;
};

// Audits the report against the parameters.
ReportRecord make_report(const ParamSet& params, const CostReport& construction);

// Report for the Reed-Muller merge RM(r, m-1) x RM(r-1, m-1) -> RM(r, m), with
// d_F and d_F^perp computed from the final code.
ReportRecord rm_merge_report(unsigned r, unsigned m);

std::string to_json(const ReportRecord& record, int indent = 2);
std::string to_json(const std::vector<ReportRecord>& records, int indent = 2);
// Throws InvalidArgument on malformed input.
ReportRecord report_from_json(const std::string& text);
std::vector<ReportRecord> reports_from_json(const std::string& text);

std::string cost_json(const CostReport& report, int indent = 2);
CostReport cost_from_json(const std::string& text);

std::string bounds_json(const ParamSet& params, const BoundReport& bounds, int indent = 2);

// Human-readable forms.
std::string format_params(const ParamSet& params);
std::string format_costs(const CostReport& report);
std::string format_bounds(const BoundReport& bounds);
std::string format_report(const ReportRecord& record);

}  // namespace convcodes
