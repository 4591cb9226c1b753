#include "exhaustion/cli.hpp"

#include <cmath>
#include <cstdio>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "exhaustion/bench.hpp"
#include "exhaustion/diffraction.hpp"
#include "exhaustion/expr.hpp"
#include "exhaustion/improper.hpp"
#include "exhaustion/quadrature.hpp"
#include "exhaustion/report.hpp"
#include "exhaustion/series.hpp"

namespace exhaustion::cli {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNotConverged = 2;
constexpr int kExitInputError = 3;
constexpr int kExitNonFinite = 4;

constexpr const char* kGrammarHelp =
    "Expressions use the single variable x with operators + - * / ^\n"
    "(^ binds tightest and is right-associative; unary minus binds\n"
    "looser than ^, so -2^2 means -(2^2)), functions sin cos tan exp ln\n"
    "sqrt abs, and constants pi, e.";

std::string num17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

Integrand integrand_from_text(const std::string& text) {
    ExprAst ast = parse_expression(text);
    return Integrand([ast](double x) { return ast.eval(x); }, text);
}

int finish_quadrature(const QuadratureResult& result, double width,
                      const std::string& format, std::ostream& out,
                      std::ostream& err) {
    RunReport report{result, rows_from_history(result, width)};
    if (format == "csv") {
        out << to_csv(report.per_level);
    } else {
        out << to_json(report) << '\n';
    }
    if (result.termination == Termination::non_finite_sample) {
        err << "error: integrand sample is not finite";
        if (result.offending_node) err << " at x = " << *result.offending_node;
        err << '\n';
        return kExitNonFinite;
    }
    return result.converged ? kExitOk : kExitNotConverged;
}

struct SeriesSpec {
    SeriesId id;
    const char* params;  // which flags the series consumes
};

const std::map<std::string, SeriesSpec>& series_table() {
    static const std::map<std::string, SeriesSpec> table{
        {"sin", {SeriesId::sine, "x"}},
        {"cos", {SeriesId::cosine, "x"}},
        {"exp", {SeriesId::exponential, "x"}},
        {"ln", {SeriesId::natural_log, "x"}},
        {"sine_integral", {SeriesId::sine_integral, "a, b"}},
        {"gaussian", {SeriesId::gaussian, "a, b"}},
        {"factorial", {SeriesId::factorial, "p"}},
        {"sinc_product", {SeriesId::sinc_product, "x"}},
        {"sinc_sum", {SeriesId::sinc_sum, "x"}},
    };
    return table;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err) {
    CLI::App app{"Dyadic exhaustion quadrature toolkit"};
    app.require_subcommand(1);
    app.footer(kGrammarHelp);

    // ---- integrate ----
    auto* integrate_cmd =
        app.add_subcommand("integrate", "Definite integral of an expression");
    std::string fn_text;
    double bound_a = 0.0, bound_b = 1.0;
    QuadratureOptions opts;
    std::string format = "json";
    integrate_cmd->add_option("--fn", fn_text, "Integrand f(x)")->required();
    integrate_cmd->add_option("--a", bound_a, "Lower bound")->required();
    integrate_cmd->add_option("--b", bound_b, "Upper bound")->required();
    integrate_cmd->add_option("--tol", opts.tol, "Relative tolerance");
    integrate_cmd->add_option("--max-level", opts.max_level, "Refinement cap");
    integrate_cmd->add_option("--min-level", opts.min_level, "Minimum levels");
    integrate_cmd->add_option("--format", format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));

    // ---- improper ----
    auto* improper_cmd =
        app.add_subcommand("improper", "Integral over [0, inf) by blocks");
    TailPolicy policy;
    QuadratureOptions inner_opts;
    improper_cmd->add_option("--fn", fn_text, "Integrand f(x)")->required();
    improper_cmd->add_option("--block", policy.block_width, "Block width");
    improper_cmd->add_option("--tail-tol", policy.tail_tol, "Tail threshold");
    improper_cmd->add_option("--max-blocks", policy.max_blocks, "Block cap");
    improper_cmd->add_option("--consecutive", policy.consecutive_small,
                             "Small blocks needed to stop");
    improper_cmd->add_option("--tol", inner_opts.tol, "Per-block tolerance");
    improper_cmd->add_option("--max-level", inner_opts.max_level,
                             "Per-block refinement cap");
    improper_cmd->add_option("--format", format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));

    // ---- series ----
    auto* series_cmd =
        app.add_subcommand("series", "Dyadic series catalog evaluator");
    std::string series_id;
    int levels = 20;
    SeriesParams params;
    double px = 0, pa = 0, pb = 0, pp = 0;
    std::vector<std::string> names;
    for (const auto& [name, spec] : series_table()) names.push_back(name);
    series_cmd->add_option("--id", series_id, "Series name")
        ->required()
        ->check(CLI::IsMember(names));
    series_cmd->add_option("--levels", levels, "Truncation level N");
    auto* ox = series_cmd->add_option("--x", px, "Argument x");
    auto* oa = series_cmd->add_option("--a", pa, "Parameter a");
    auto* ob = series_cmd->add_option("--b", pb, "Parameter b");
    auto* op = series_cmd->add_option("--p", pp, "Parameter p");

    // ---- diffract ----
    auto* diffract_cmd = app.add_subcommand(
        "diffract", "Aperture diffraction field by dyadic expansion");
    std::string aperture_name = "unit";
    double wx = 1.0, wy = 1.0, wavenumber = 1.0, phase_speed = 1.0;
    std::string slice = "z=10";
    double extent = 2.0, at_time = 0.0;
    int samples = 32, nlevels = 8, plevels = -1;
    bool emit_spectrum = false;
    std::string evanescent = "decay";
    diffract_cmd->add_option("--aperture", aperture_name, "unit or rect")
        ->check(CLI::IsMember({"unit", "rect"}));
    diffract_cmd->add_option("--wx", wx, "Rect aperture half-width in x");
    diffract_cmd->add_option("--wy", wy, "Rect aperture half-width in y");
    diffract_cmd->add_option("--k", wavenumber, "Wavenumber")->required();
    diffract_cmd->add_option("--c", phase_speed, "Phase speed");
    diffract_cmd->add_option("--slice", slice, "Plane, e.g. z=10");
    diffract_cmd->add_option("--extent", extent, "Half-width of the x,y window");
    diffract_cmd->add_option("--samples", samples, "Samples per axis");
    diffract_cmd->add_option("--levels", nlevels, "Dyadic depth (x axis)");
    diffract_cmd->add_option("--plevels", plevels,
                             "Dyadic depth (y axis, defaults to --levels)");
    diffract_cmd->add_option("--t", at_time, "Evaluation time");
    diffract_cmd->add_option("--evanescent", evanescent, "decay or zero")
        ->check(CLI::IsMember({"decay", "zero"}));
    diffract_cmd->add_flag("--spectrum", emit_spectrum,
                           "Emit the plane-wave spectrum CSV instead of the field");

    // ---- bench ----
    auto* bench_cmd =
        app.add_subcommand("bench", "Matched-budget quadrature comparison");
    std::string suite = "default";
    std::string bench_format = "csv";
    bench_cmd->add_option("--suite", suite, "Benchmark suite")
        ->check(CLI::IsMember({"default"}));
    bench_cmd->add_option("--format", bench_format, "csv")
        ->check(CLI::IsMember({"csv"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitInputError;
    }

    try {
        if (integrate_cmd->parsed()) {
            const Integrand f = integrand_from_text(fn_text);
            const Interval iv{bound_a, bound_b};
            return finish_quadrature(integrate(f, iv, opts), iv.width(), format,
                                     out, err);
        }

        if (improper_cmd->parsed()) {
            const Integrand f = integrand_from_text(fn_text);
            const QuadratureResult result =
                integrate_semi_infinite(f, policy, inner_opts);
            return finish_quadrature(result, policy.block_width, format, out,
                                     err);
        }

        if (series_cmd->parsed()) {
            if (ox->count()) params.x = px;
            if (oa->count()) params.a = pa;
            if (ob->count()) params.b = pb;
            if (op->count()) params.p = pp;
            const auto& spec = series_table().at(series_id);
            out << num17(eval_series(spec.id, params, levels)) << '\n';
            return kExitOk;
        }

        if (diffract_cmd->parsed()) {
            if (slice.rfind("z=", 0) != 0) {
                err << "error: --slice must look like z=<value>\n";
                return kExitInputError;
            }
            const double z_plane = std::stod(slice.substr(2));
            if (samples < 2) {
                err << "error: --samples must be at least 2\n";
                return kExitInputError;
            }
            const Aperture ap = (aperture_name == "rect")
                                    ? Aperture::rect(wx, wy)
                                    : Aperture::unit();
            const WaveParams wave =
                WaveParams::from_wavenumber(wavenumber, phase_speed);
            const LevelPair depth{nlevels, plevels > 0 ? plevels : nlevels};
            const EvanescentMode mode = (evanescent == "zero")
                                            ? EvanescentMode::zero
                                            : EvanescentMode::decay;

            if (emit_spectrum) {
                out << "n,m,p,q,kx,ky,weight,kz,group_speed_z,evanescent\n";
                for (const auto& comp : group_velocity_spectrum(ap, wave, depth)) {
                    const double nan = std::nan("");
                    out << comp.n << ',' << comp.m << ',' << comp.p << ','
                        << comp.q << ',' << num17(comp.kx) << ','
                        << num17(comp.ky) << ',' << num17(comp.weight) << ','
                        << num17(comp.kz.value_or(nan)) << ','
                        << num17(comp.group_speed_z.value_or(nan)) << ','
                        << (comp.evanescent ? 1 : 0) << '\n';
                }
                return kExitOk;
            }

            out << "x,y,z,re_phi,im_phi,abs_phi\n";
            const double step =
                (samples > 1) ? 2.0 * extent / (samples - 1) : 0.0;
            for (int i = 0; i < samples; ++i) {
                const double x = -extent + i * step;
                for (int j = 0; j < samples; ++j) {
                    const double y = -extent + j * step;
                    const FieldPoint pt{x, y, z_plane, at_time};
                    const auto phi = field_exhaustion(ap, pt, wave, depth, mode);
                    out << num17(x) << ',' << num17(y) << ',' << num17(z_plane)
                        << ',' << num17(phi.real()) << ',' << num17(phi.imag())
                        << ',' << num17(std::abs(phi)) << '\n';
                }
            }
            return kExitOk;
        }

        if (bench_cmd->parsed()) {
            out << "function,method,eval_count,abs_error\n";
            for (const auto& bench_case : default_bench_suite()) {
                for (const auto& row :
                     bench_matched_evals(bench_case.f, bench_case.interval,
                                         bench_case.exact)) {
                    out << bench_case.name << ',' << row.method << ','
                        << row.eval_count << ',' << num17(row.abs_error) << '\n';
                }
            }
            return kExitOk;
        }
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitInputError;
    } catch (const NonFiniteSampleError& e) {
        err << "error: " << e.what() << '\n';
        return kExitNonFinite;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kExitInputError;
    }

    err << "error: no subcommand selected\n";
    return kExitInputError;
}

}  // namespace exhaustion::cli
