#include "exhaustion/report.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

#include <json.hpp>

namespace exhaustion {

namespace {

std::string num17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

// JSON has no NaN/inf literals; non-finite values become null.
std::string json_num(double v) {
    return std::isfinite(v) ? num17(v) : "null";
}

}  // namespace

const char* termination_name(Termination t) {
    switch (t) {
        case Termination::tolerance_met: return "tolerance_met";
        case Termination::level_cap: return "level_cap";
        case Termination::non_finite_sample: return "non_finite_sample";
    }
    return "unknown";
}

std::vector<ReportRow> rows_from_history(const QuadratureResult& result,
                                         double width) {
    const double nan = std::numeric_limits<double>::quiet_NaN();
    std::vector<ReportRow> rows;
    rows.reserve(result.history.size());
    CompensatedSum partial;
    for (std::size_t i = 0; i < result.history.size(); ++i) {
        const LevelTerm& term = result.history[i];
        partial.add(term.value * width);
        double ratio = nan;
        if (i + 1 < result.history.size() && term.value != 0.0) {
            ratio = std::abs(result.history[i + 1].value / term.value);
        }
        rows.push_back({term.n, term.value * width, partial.value(), ratio});
    }
    return rows;
}

std::vector<ReportRow> rows_from_convergence(
    const std::vector<ConvergenceRow>& table) {
    std::vector<ReportRow> rows;
    rows.reserve(table.size());
    for (const auto& row : table) {
        rows.push_back({row.n, row.level_area, row.partial, row.error_ratio});
    }
    return rows;
}

std::string to_csv(const std::vector<ReportRow>& rows) {
    std::string out = "level,A_n,partial,error_ratio\n";
    for (const auto& row : rows) {
        out += std::to_string(row.level);
        out += ',';
        out += num17(row.a_term);
        out += ',';
        out += num17(row.partial);
        out += ',';
        out += num17(row.error_ratio);
        out += '\n';
    }
    return out;
}

std::string to_json(const RunReport& report) {
    const QuadratureResult& r = report.result;
    std::string out = "{";
    out += "\"value\":" + json_num(r.value);
    out += ",\"error_estimate\":" + json_num(r.error_estimate);
    out += ",\"levels_used\":" + std::to_string(r.levels_used);
    out += ",\"eval_count\":" + std::to_string(r.eval_count);
    out += std::string(",\"converged\":") + (r.converged ? "true" : "false");
    out += std::string(",\"termination\":\"") + termination_name(r.termination) +
           "\"";
    out += ",\"per_level\":[";
    for (std::size_t i = 0; i < report.per_level.size(); ++i) {
        const ReportRow& row = report.per_level[i];
        if (i) out += ',';
        out += "{\"n\":" + std::to_string(row.level);
        out += ",\"A_n\":" + json_num(row.a_term);
        out += ",\"partial\":" + json_num(row.partial);
        out += ",\"error_ratio\":" + json_num(row.error_ratio);
        out += '}';
    }
    out += "]}";
    return out;
}

RunReport report_from_json(const std::string& text) {
    const auto j = nlohmann::json::parse(text);
    RunReport report;
    const double nan = std::numeric_limits<double>::quiet_NaN();
    auto num_or_nan = [&](const nlohmann::json& v) {
        return v.is_null() ? nan : v.get<double>();
    };

    report.result.value = num_or_nan(j.at("value"));
    report.result.error_estimate = num_or_nan(j.at("error_estimate"));
    report.result.levels_used = j.at("levels_used").get<int>();
    report.result.eval_count = j.at("eval_count").get<std::int64_t>();
    report.result.converged = j.at("converged").get<bool>();

    const std::string term = j.at("termination").get<std::string>();
    if (term == "tolerance_met") {
        report.result.termination = Termination::tolerance_met;
    } else if (term == "level_cap") {
        report.result.termination = Termination::level_cap;
    } else if (term == "non_finite_sample") {
        report.result.termination = Termination::non_finite_sample;
    } else {
        throw std::invalid_argument("unknown termination: " + term);
    }

    for (const auto& row : j.at("per_level")) {
        report.per_level.push_back({row.at("n").get<int>(),
                                    num_or_nan(row.at("A_n")),
                                    num_or_nan(row.at("partial")),
                                    num_or_nan(row.at("error_ratio"))});
    }
    return report;
}

}  // namespace exhaustion
