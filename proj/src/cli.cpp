#include <array>
#include <charconv>
#include <fstream>
#include <iomanip>
#include <iterator>
#include <ostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "screening/cli_io.hpp"
#include "screening/errors.hpp"
#include "screening/geometry.hpp"
#include "number_text.hpp"

namespace screening {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDomain = 1;
constexpr int kExitUsage = 2;

// Six significant digits for terminal output.
std::string brief(double v) { return detail::number_text(v, 6); }

template <class T, class F>
std::string show(const Quantity<T>& q, F&& fmt) {
    return q.has_value() ? fmt(*q) : "undefined (" + q.reason + ")";
}

void print_report(std::ostream& out, const TestReport& r, const std::string& indent = "") {
    auto num = [](double v) { return brief(v); };
    out << indent << "sensitivity     " << brief(r.test.sensitivity()) << '\n'
        << indent << "specificity     " << brief(r.test.specificity()) << '\n'
        << indent << "epsilon         " << brief(r.epsilon) << '\n'
        << indent << "LR+             " << show(r.lr_plus, num) << '\n'
        << indent << "phi_e           "
        << show(r.threshold, [](const ThresholdPoint& t) { return brief(t.phi_e); }) << '\n'
        << indent << "rho(phi_e)      "
        << show(r.threshold, [](const ThresholdPoint& t) { return brief(t.rho_e); }) << '\n'
        << indent << "beta (rad)      "
        << show(r.beta, [](const BetaGeometry& g) { return brief(g.beta); }) << '\n'
        << indent << "psi             "
        << show(r.beta, [](const BetaGeometry& g) { return brief(g.psi); }) << '\n'
        << indent << "origin chord    "
        << show(r.beta, [](const BetaGeometry& g) { return "slope " + brief(g.origin_slope); })
        << '\n'
        << indent << "endpoint chord  "
        << show(r.endpoint_chord,
                [](const Line& l) {
                    return "slope " + brief(l.slope) + ", intercept " + brief(l.intercept);
                })
        << '\n'
        << indent << "AUC             " << show(r.auc, num) << '\n';
}

// "A,B" -> ScreeningTest; the option name goes into the error message.
ScreeningTest parse_pair(const std::string& text, const std::string& option) {
    const auto comma = text.find(',');
    double values[2] = {0.0, 0.0};
    const std::string parts[2] = {text.substr(0, comma),
                                  comma == std::string::npos ? "" : text.substr(comma + 1)};
    for (int k = 0; k < 2; ++k) {
        const std::string& p = parts[k];
        const auto res = std::from_chars(p.data(), p.data() + p.size(), values[k]);
        if (comma == std::string::npos || p.empty() || res.ec != std::errc{} ||
            res.ptr != p.data() + p.size()) {
            throw InvalidParameterError(option, option + " expects SENS,SPEC, got '" + text + "'");
        }
    }
    try {
        return ScreeningTest(values[0], values[1]);
    } catch (const InvalidParameterError& e) {
        throw InvalidParameterError(option, option + ": " + e.what());
    }
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot read file '" + path + "'");
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_output(const std::string& path, const std::string& content, std::ostream& out) {
    if (path.empty()) {
        out << content;
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) throw UsageError("cannot write file '" + path + "'");
    file << content;
}

std::string dominant_label(Dominance d) {
    switch (d) {
        case Dominance::first: return "test1";
        case Dominance::second: return "test2";
        case Dominance::neither: return "neither";
    }
    return "neither";
}

}  // namespace

int cli_dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Screening curve geometry: PPV, prevalence threshold, LR+ constructions"};
    app.name("screening");
    app.require_subcommand(1);

    double sens = 0.0;
    double spec = 0.0;
    bool json = false;

    auto* analyze = app.add_subcommand("analyze", "Derived quantities for one test");
    analyze->add_option("--sens", sens, "Sensitivity in [0,1]")->required();
    analyze->add_option("--spec", spec, "Specificity in [0,1]")->required();
    analyze->add_flag("--json", json, "Emit JSON");

    std::size_t samples = 101;
    std::string out_path;
    auto* curve = app.add_subcommand("curve", "Export the screening curve as CSV");
    curve->add_option("--sens", sens, "Sensitivity in [0,1]")->required();
    curve->add_option("--spec", spec, "Specificity in [0,1]")->required();
    curve->add_option("--samples", samples, "Number of uniform samples (>= 2)")->required();
    curve->add_option("--out", out_path, "Output file (default: stdout)");

    std::string test1_text;
    std::string test2_text;
    double eps_tol = 1e-9;
    auto* compare = app.add_subcommand("compare", "Compare two tests");
    compare->add_option("--test1", test1_text, "SENS,SPEC")->required();
    compare->add_option("--test2", test2_text, "SENS,SPEC")->required();
    compare->add_option("--eps-tol", eps_tol, "Tolerance for equal epsilon");
    compare->add_flag("--json", json, "Emit JSON");

    std::string catalog_path;
    PlotSpec plot_spec;
    auto* plot = app.add_subcommand("plot", "Render a catalog to SVG");
    plot->add_option("--catalog", catalog_path, "Catalog CSV")->required();
    plot->add_flag("--threshold", plot_spec.show_threshold, "Draw the prevalence threshold");
    plot->add_flag("--beta", plot_spec.show_beta_triangle, "Draw the beta triangle");
    plot->add_flag("--chords", plot_spec.show_chords, "Draw the invariant-point chords");
    plot->add_option("--samples", plot_spec.samples, "Samples per curve");
    plot->add_option("--width", plot_spec.width_px, "Width in px");
    plot->add_option("--height", plot_spec.height_px, "Height in px");
    plot->add_option("--out", out_path, "Output SVG file")->required();

    double prev = 0.0;
    std::uint64_t n = 0;
    std::uint64_t seed = 0;
    unsigned threads = 1;
    auto* simulate = app.add_subcommand("simulate", "Monte Carlo cohort");
    simulate->add_option("--sens", sens, "Sensitivity in [0,1]")->required();
    simulate->add_option("--spec", spec, "Specificity in [0,1]")->required();
    simulate->add_option("--prev", prev, "Prevalence in [0,1]")->required();
    simulate->add_option("--n", n, "Cohort size")->required();
    simulate->add_option("--seed", seed, "64-bit seed")->required();
    simulate->add_option("--threads", threads, "Worker threads (0 = all cores)");
    simulate->add_flag("--json", json, "Emit JSON");

    auto* catalog = app.add_subcommand("catalog", "Reports for every test in a catalog");
    catalog->add_option("file", catalog_path, "Catalog CSV")->required();
    catalog->add_flag("--json", json, "Emit JSON");

    std::size_t steps = 20;
    auto* sweep = app.add_subcommand("limit-sweep", "AUC along a = b = 1 - 2^-k");
    sweep->add_option("--steps", steps, "Number of steps")->required();
    sweep->add_flag("--json", json, "Emit JSON");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        app.exit(e, out, err);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitUsage;
    }

    try {
        if (*analyze) {
            const TestReport report = build_report(ScreeningTest(sens, spec));
            if (json) {
                out << emit_report(report);
            } else {
                print_report(out, report);
            }
            return report.complete() ? kExitOk : kExitDomain;
        }
        if (*curve) {
            write_output(out_path, emit_curve_csv(ScreeningTest(sens, spec), samples), out);
            return kExitOk;
        }
        if (*compare) {
            const ComparisonReport report = compare_tests(parse_pair(test1_text, "--test1"),
                                                          parse_pair(test2_text, "--test2"), eps_tol);
            if (json) {
                out << emit_report(report);
                return kExitOk;
            }
            out << "test1\n";
            print_report(out, report.first, "  ");
            out << "test2\n";
            print_report(out, report.second, "  ");
            out << "equal epsilon:  " << (report.equal_epsilon ? "yes" : "no") << '\n'
                << "smaller beta:   " << dominant_label(report.beta_order.favored)
                << " (beta2 - beta1 = " << brief(report.beta_order.margin) << ")\n"
                << "larger AUC:     " << dominant_label(report.auc_order.favored)
                << " (auc2 - auc1 = " << brief(report.auc_order.margin) << ")\n";
            if (report.reversed_regime) {
                out << "note: epsilon < 1, higher specificity gives the lower curve\n";
            }
            out << "dominant: " << dominant_label(report.dominant) << '\n';
            return kExitOk;
        }
        if (*plot) {
            plot_spec.tests = parse_catalog(read_file(catalog_path));
            const RenderedPlot rendered = render_screening_plane(plot_spec);
            for (const auto& w : rendered.warnings) err << "warning: " << w << '\n';
            write_output(out_path, rendered.svg, out);
            return kExitOk;
        }
        if (*simulate) {
            const CohortResult r =
                simulate_cohort(ScreeningTest(sens, spec), Prevalence(prev), n, seed, threads);
            if (json) {
                out << emit_report(r);
                return kExitOk;
            }
            out << "n               " << r.n << '\n'
                << "seed            " << r.seed << '\n'
                << "true pos        " << r.true_pos << '\n'
                << "false pos       " << r.false_pos << '\n'
                << "true neg        " << r.true_neg << '\n'
                << "false neg       " << r.false_neg << '\n'
                << "empirical PPV   "
                << (r.empirical_ppv ? brief(*r.empirical_ppv) : "undefined (" + r.ppv_reason + ")")
                << '\n'
                << "empirical LR+   "
                << (r.empirical_lr_plus ? brief(*r.empirical_lr_plus)
                                        : "undefined (" + r.lr_reason + ")")
                << '\n';
            return kExitOk;
        }
        if (*catalog) {
            const auto entries = parse_catalog(read_file(catalog_path));
            std::vector<TestReport> reports;
            reports.reserve(entries.size());
            bool complete = true;
            for (const auto& e : entries) {
                reports.push_back(build_report(e.test));
                complete = complete && reports.back().complete();
            }
            if (json) {
                out << emit_report(entries, reports);
            } else {
                for (std::size_t i = 0; i < entries.size(); ++i) {
                    out << entries[i].name << '\n';
                    print_report(out, reports[i], "  ");
                }
            }
            return complete ? kExitOk : kExitDomain;
        }
        if (*sweep) {
            const auto points = fts_limit_sweep(steps);
            if (json) {
                out << emit_report(points);
                return kExitOk;
            }
            out << std::left << std::setw(5) << "k" << std::setw(18) << "epsilon" << "auc\n";
            for (std::size_t k = 0; k < points.size(); ++k) {
                out << std::setw(5) << k + 1 << std::setw(18) << format_number(points[k].epsilon)
                    << format_number(points[k].auc) << '\n';
            }
            out << std::right;
            return kExitOk;
        }
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return kExitDomain;
    }
    return kExitUsage;
}

}  // namespace screening
