#ifndef EXHAUSTION_REPORT_HPP
#define EXHAUSTION_REPORT_HPP

#include <string>
#include <vector>

#include "exhaustion/quadrature.hpp"

namespace exhaustion {

/// One serialized per-level line: A_n scaled by the interval width, the
/// running partial, and the ratio diagnostic (NaN when undefined).
struct ReportRow {
    int level = 0;
    double a_term = 0.0;
    double partial = 0.0;
    double error_ratio = 0.0;
};

struct RunReport {
    QuadratureResult result;
    std::vector<ReportRow> per_level;
};

const char* termination_name(Termination t);

/// Per-level rows reconstructed from a result's history. The width
/// factor is reapplied; the last row's ratio is NaN (no successor term).
std::vector<ReportRow> rows_from_history(const QuadratureResult& result,
                                         double width);

std::vector<ReportRow> rows_from_convergence(
    const std::vector<ConvergenceRow>& table);

/// CSV with header `level,A_n,partial,error_ratio`; numbers printed with
/// 17 significant digits, so binary64 values survive a round trip.
std::string to_csv(const std::vector<ReportRow>& rows);

/// JSON object with keys value, error_estimate, levels_used, eval_count,
/// converged, termination, per_level. Non-finite ratios serialize as
/// null. Output is byte-deterministic for identical inputs.
std::string to_json(const RunReport& report);

/// Inverse of to_json (null ratios come back as NaN).
RunReport report_from_json(const std::string& text);

}  // namespace exhaustion

#endif
