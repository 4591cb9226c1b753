#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <map>

#include "exhaustion/bench.hpp"
#include "exhaustion/report.hpp"

using namespace exhaustion;

namespace {

const Integrand kOne([](double) { return 1.0; }, "1");
const Integrand kSquare([](double x) { return x * x; }, "x^2");

}  // namespace

TEST_CASE("csv golden: constant function, three levels") {
    const auto table = convergence_report(kOne, {0, 1}, 3);
    const std::string csv = to_csv(rows_from_convergence(table));
    CHECK(csv ==
          "level,A_n,partial,error_ratio\n"
          "1,0.5,0.5,0.5\n"
          "2,0.25,0.75,0.5\n"
          "3,0.125,0.875,0.5\n");
}

TEST_CASE("csv golden: empty table is header-only") {
    CHECK(to_csv({}) == "level,A_n,partial,error_ratio\n");
}

TEST_CASE("history rows: ratios chain and the last row has none") {
    const auto run = integrate(kOne, {0, 2}, QuadratureOptions::forced(4));
    const auto rows = rows_from_history(run, 2.0);
    REQUIRE(rows.size() == 4);
    CHECK(rows[0].a_term == 1.0);  // A_1 * width = 0.5 * 2
    CHECK(rows[3].partial == run.value);
    CHECK(rows[0].error_ratio == 0.5);
    CHECK(std::isnan(rows[3].error_ratio));
}

TEST_CASE("json round trip preserves the report structurally") {
    const auto run = integrate(kSquare, {0, 1}, QuadratureOptions::forced(6));
    RunReport report{run, rows_from_history(run, 1.0)};
    const std::string text = to_json(report);

    const RunReport back = report_from_json(text);
    CHECK(back.result.value == report.result.value);
    CHECK(back.result.error_estimate == report.result.error_estimate);
    CHECK(back.result.levels_used == report.result.levels_used);
    CHECK(back.result.eval_count == report.result.eval_count);
    CHECK(back.result.converged == report.result.converged);
    CHECK(back.result.termination == report.result.termination);
    REQUIRE(back.per_level.size() == report.per_level.size());
    for (std::size_t i = 0; i < report.per_level.size(); ++i) {
        CHECK(back.per_level[i].level == report.per_level[i].level);
        CHECK(back.per_level[i].a_term == report.per_level[i].a_term);
        CHECK(back.per_level[i].partial == report.per_level[i].partial);
        if (std::isnan(report.per_level[i].error_ratio)) {
            CHECK(std::isnan(back.per_level[i].error_ratio));
        } else {
            CHECK(back.per_level[i].error_ratio ==
                  report.per_level[i].error_ratio);
        }
    }

    // Byte determinism: a second serialization is identical.
    CHECK(to_json(report) == text);
    CHECK(to_json(RunReport{run, rows_from_history(run, 1.0)}) == text);
}

TEST_CASE("bench: constant function pins the exhaustion error to 2^-N") {
    const auto rows = bench_matched_evals(kOne, {0, 1}, 1.0, 4, 10);
    for (const auto& row : rows) {
        if (row.method == "exhaustion") {
            int level = 0;
            while (((std::int64_t(1) << level) - 1) != row.eval_count) ++level;
            CHECK(row.abs_error == std::ldexp(1.0, -level));
        } else {
            CHECK(row.abs_error < 1e-12);  // textbook rules are exact on f = 1
        }
    }
}

TEST_CASE("bench: budgets match and classical rules beat first order") {
    const auto rows = bench_matched_evals(kSquare, {0, 1}, 1.0 / 3.0, 4, 12);
    REQUIRE(rows.size() == 4 * 9);

    std::map<std::int64_t, double> exhaustion_err, midpoint_err, simpson_err;
    for (const auto& row : rows) {
        const bool budget_ok = [&] {
            for (int level = 4; level <= 12; ++level) {
                if (row.eval_count == (std::int64_t(1) << level) - 1) return true;
            }
            return false;
        }();
        CHECK(budget_ok);
        if (row.method == "exhaustion") exhaustion_err[row.eval_count] = row.abs_error;
        if (row.method == "midpoint") midpoint_err[row.eval_count] = row.abs_error;
        if (row.method == "simpson") simpson_err[row.eval_count] = row.abs_error;
    }
    for (const auto& [budget, err] : exhaustion_err) {
        CHECK(midpoint_err[budget] < err);   // h^2 versus h
        CHECK(simpson_err[budget] < 1e-12);  // exact on quadratics
    }
}

TEST_CASE("bench: smooth corpus halves its error per level") {
    for (const auto& bench_case : default_bench_suite()) {
        const auto rows = bench_matched_evals(bench_case.f, bench_case.interval,
                                              bench_case.exact, 4, 14);
        std::vector<double> exhaustion;
        for (const auto& row : rows) {
            if (row.method == "exhaustion") exhaustion.push_back(row.abs_error);
        }
        REQUIRE(exhaustion.size() == 11);
        for (std::size_t i = 1; i < exhaustion.size(); ++i) {
            CHECK(exhaustion[i] < exhaustion[i - 1]);
            const int level = 4 + static_cast<int>(i);
            if (level >= 8) {
                const double ratio = exhaustion[i] / exhaustion[i - 1];
                CHECK(ratio > 0.4);
                CHECK(ratio < 0.6);
            }
        }
    }
}
