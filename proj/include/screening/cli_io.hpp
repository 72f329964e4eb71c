#pragma once

// File formats and the command-line surface.
//
//   catalog   CSV, header `name,sensitivity,specificity`, `#` comments
//   curve     CSV, header `phi,ppv`, empty ppv where indeterminate
//   reports   JSON, fixed key order, 12 significant digits, null + reason
//             for undefined quantities
//   plot      standalone SVG 1.1
//
// All emitters are pure functions of their inputs and locale independent.

#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "screening/analysis.hpp"
#include "screening/cohort_sim.hpp"
#include "screening/curve_core.hpp"

namespace screening {

struct CatalogEntry {
    std::string name;
    ScreeningTest test;

    friend bool operator==(const CatalogEntry&, const CatalogEntry&) = default;
};

struct PlotSpec {
    std::vector<CatalogEntry> tests;
    bool show_threshold = false;
    bool show_beta_triangle = false;
    bool show_chords = false;
    std::size_t samples = 201;
    int width_px = 600;
    int height_px = 600;
};

struct RenderedPlot {
    std::string svg;
    std::vector<std::string> warnings;  // one per skipped overlay
};

// Shortest decimal of `value` at 12 significant digits; "C"-locale only.
std::string format_number(double value);

// Throws ParseError (with 1-based line number).
std::vector<CatalogEntry> parse_catalog(std::string_view text);
std::string emit_catalog(const std::vector<CatalogEntry>& entries);

std::string emit_report(const TestReport& report);
std::string emit_report(const ComparisonReport& report);
std::string emit_report(const CohortResult& result);
std::string emit_report(const std::vector<SweepPoint>& sweep);
std::string emit_report(const std::vector<CatalogEntry>& entries,
                        const std::vector<TestReport>& reports);

std::string emit_curve_csv(const ScreeningTest& test, std::size_t n);

// Throws InvalidParameterError for samples < 2 or a non-positive viewport.
RenderedPlot render_screening_plane(const PlotSpec& spec);

// Exit codes: 0 success, 1 domain/degenerate error, 2 usage or parse error.
int cli_dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace screening
