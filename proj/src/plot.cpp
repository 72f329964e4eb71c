#include <array>
#include <charconv>
#include <cmath>
#include <string>

#include "screening/cli_io.hpp"
#include "screening/errors.hpp"
#include "screening/geometry.hpp"

namespace screening {

namespace {

constexpr double kMargin = 50.0;
constexpr std::array<const char*, 7> kPalette = {"blue",    "orange",  "red", "gray",
                                                 "black",   "magenta", "brown"};

std::string px(double v) {
    std::array<char, 32> buf{};
    const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v,
                                   std::chars_format::fixed, 3);
    std::string s(buf.data(), res.ptr);
    return s == "-0.000" ? "0.000" : s;
}

std::string escape_xml(const std::string& s) {
    std::string out;
    for (char ch : s) {
        switch (ch) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += ch;
        }
    }
    return out;
}

// Unit square -> viewport, y flipped (screen y grows downward).
class Viewport {
public:
    Viewport(int width, int height)
        : width_(width), height_(height), sx_(width - 2 * kMargin), sy_(height - 2 * kMargin) {}

    double x(double phi) const { return kMargin + phi * sx_; }
    double y(double rho) const { return height_ - kMargin - rho * sy_; }
    int width() const { return width_; }
    int height() const { return height_; }

private:
    int width_;
    int height_;
    double sx_;
    double sy_;
};

class SvgWriter {
public:
    explicit SvgWriter(const Viewport& vp) : vp_(vp) {}

    void line(double x0, double y0, double x1, double y1, const std::string& cls,
              const std::string& stroke, bool dashed) {
        body_ += "  <line class=\"" + cls + "\" x1=\"" + px(vp_.x(x0)) + "\" y1=\"" +
                 px(vp_.y(y0)) + "\" x2=\"" + px(vp_.x(x1)) + "\" y2=\"" + px(vp_.y(y1)) +
                 "\" stroke=\"" + stroke + "\" stroke-width=\"1.5\"" +
                 (dashed ? " stroke-dasharray=\"5,4\"" : "") + "/>\n";
    }

    void text(double x_px, double y_px, const std::string& anchor, const std::string& content,
              const std::string& cls = "label") {
        body_ += "  <text class=\"" + cls + "\" x=\"" + px(x_px) + "\" y=\"" + px(y_px) +
                 "\" text-anchor=\"" + anchor + "\">" + content + "</text>\n";
    }

    void raw(const std::string& s) { body_ += s; }

    std::string finish() const {
        std::string doc =
            "<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n"
            "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
            std::to_string(vp_.width()) + "\" height=\"" + std::to_string(vp_.height()) +
            "\" viewBox=\"0 0 " + std::to_string(vp_.width()) + " " +
            std::to_string(vp_.height()) + "\" font-family=\"sans-serif\" font-size=\"12\">\n";
        doc += "  <rect x=\"0\" y=\"0\" width=\"" + std::to_string(vp_.width()) + "\" height=\"" +
               std::to_string(vp_.height()) + "\" fill=\"white\"/>\n";
        doc += body_;
        doc += "</svg>\n";
        return doc;
    }

    const Viewport& viewport() const { return vp_; }

private:
    const Viewport& vp_;
    std::string body_;
};

void draw_frame(SvgWriter& svg) {
    const Viewport& vp = svg.viewport();
    for (int k = 1; k <= 5; ++k) {
        const double t = k / 5.0;
        svg.line(t, 0.0, t, 1.0, "grid", "#cccccc", true);
        svg.line(0.0, t, 1.0, t, "grid", "#cccccc", true);
    }
    svg.line(0.0, 0.0, 1.0, 0.0, "axis", "black", false);
    svg.line(0.0, 0.0, 0.0, 1.0, "axis", "black", false);
    for (int k = 0; k <= 5; ++k) {
        const double t = k / 5.0;
        const std::string label = k == 0 ? "0" : (k == 5 ? "1" : "0." + std::to_string(2 * k));
        svg.text(vp.x(t), vp.y(0.0) + 16.0, "middle", label, "tick");
        svg.text(vp.x(0.0) - 6.0, vp.y(t) + 4.0, "end", label, "tick");
    }
    svg.text(vp.x(0.5), vp.height() - 10.0, "middle", "\xCF\x86", "axis-label");
    svg.text(14.0, vp.y(0.5), "middle", "\xCF\x81(\xCF\x86)", "axis-label");
}

void draw_curve(SvgWriter& svg, const CatalogEntry& entry, std::size_t samples,
                const std::string& colour) {
    const Viewport& vp = svg.viewport();
    std::string points;
    auto flush = [&] {
        if (points.empty()) return;
        svg.raw("  <polyline class=\"curve\" data-name=\"" + escape_xml(entry.name) +
                "\" fill=\"none\" stroke=\"" + colour + "\" stroke-width=\"2\" points=\"" +
                points + "\"/>\n");
        points.clear();
    };
    for (const CurvePoint& p : curve_samples(entry.test, samples)) {
        if (!p.rho) {
            flush();  // indeterminate samples break the line
            continue;
        }
        if (!points.empty()) points += ' ';
        points += px(vp.x(p.phi.value())) + "," + px(vp.y(*p.rho));
    }
    flush();
}

void draw_threshold(SvgWriter& svg, const ThresholdPoint& t) {
    svg.line(t.phi_e, 0.0, t.phi_e, t.rho_e, "threshold", "magenta", true);
    svg.line(0.0, t.rho_e, t.phi_e, t.rho_e, "threshold-guide", "magenta", true);
    const Viewport& vp = svg.viewport();
    svg.text(vp.x(t.phi_e), vp.y(0.0) - 6.0, "middle", "\xCF\x86" "e", "threshold-label");
}

void draw_chords(SvgWriter& svg, const ThresholdPoint& t) {
    svg.line(0.0, 0.0, t.phi_e, t.rho_e, "origin-chord", "red", false);
    svg.line(t.phi_e, t.rho_e, 1.0, 1.0, "endpoint-chord", "blue", false);
}

void draw_beta(SvgWriter& svg, const ThresholdPoint& t, const BetaGeometry& geom) {
    const Viewport& vp = svg.viewport();
    // Right triangle: vertical axis leg, horizontal leg at rho_e, origin chord.
    svg.raw("  <polygon class=\"beta-triangle\" points=\"" + px(vp.x(0.0)) + "," +
            px(vp.y(0.0)) + " " + px(vp.x(0.0)) + "," + px(vp.y(t.rho_e)) + " " +
            px(vp.x(t.phi_e)) + "," + px(vp.y(t.rho_e)) +
            "\" fill=\"none\" stroke=\"red\" stroke-width=\"1\" stroke-dasharray=\"2,3\"/>\n");

    // Arc at the origin from the vertical axis to the chord, in screen space.
    const double ox = vp.x(0.0);
    const double oy = vp.y(0.0);
    const double dx = vp.x(t.phi_e) - ox;
    const double dy = vp.y(t.rho_e) - oy;
    const double len = std::hypot(dx, dy);
    const double radius = 40.0;
    const double ex = ox + radius * dx / len;
    const double ey = oy + radius * dy / len;
    svg.raw("  <path class=\"beta-arc\" d=\"M " + px(ox) + " " + px(oy - radius) + " A " +
            px(radius) + " " + px(radius) + " 0 0 1 " + px(ex) + " " + px(ey) +
            "\" fill=\"none\" stroke=\"black\" stroke-width=\"1\"/>\n");
    svg.text(ox + 0.5 * (ex - ox) + 6.0, oy - radius - 6.0, "start",
             "\xCE\xB2 = " + format_number(std::round(geom.beta * 1e4) / 1e4) + " rad",
             "beta-label");
}

void draw_legend(SvgWriter& svg, const std::vector<CatalogEntry>& tests) {
    const Viewport& vp = svg.viewport();
    for (std::size_t i = 0; i < tests.size(); ++i) {
        const double y = vp.y(0.0) - 12.0 - 16.0 * static_cast<double>(tests.size() - 1 - i);
        svg.text(vp.x(1.0) - 4.0, y, "end",
                 escape_xml(tests[i].name) + " (" + format_number(tests[i].test.sensitivity()) +
                     ", " + format_number(tests[i].test.specificity()) + ")",
                 "legend");
        svg.raw("  <line class=\"legend-swatch\" x1=\"" + px(vp.x(1.0)) + "\" y1=\"" +
                px(y - 4.0) + "\" x2=\"" + px(vp.x(1.0) + 14.0) + "\" y2=\"" + px(y - 4.0) +
                "\" stroke=\"" + kPalette[i % kPalette.size()] + "\" stroke-width=\"2\"/>\n");
    }
}

}  // namespace

RenderedPlot render_screening_plane(const PlotSpec& spec) {
    if (spec.samples < 2) {
        throw InvalidParameterError("samples", "plot needs at least 2 samples per curve");
    }
    if (spec.width_px <= 2 * kMargin || spec.height_px <= 2 * kMargin) {
        throw InvalidParameterError("viewport", "plot viewport must exceed " +
                                                    std::to_string(2 * static_cast<int>(kMargin)) +
                                                    " px per side");
    }

    const Viewport vp(spec.width_px, spec.height_px);
    SvgWriter svg(vp);
    RenderedPlot result;

    draw_frame(svg);
    for (std::size_t i = 0; i < spec.tests.size(); ++i) {
        draw_curve(svg, spec.tests[i], spec.samples, kPalette[i % kPalette.size()]);
    }

    const bool overlays = spec.show_threshold || spec.show_chords || spec.show_beta_triangle;
    for (const CatalogEntry& entry : spec.tests) {
        if (!overlays) break;
        ThresholdPoint threshold{};
        try {
            threshold = prevalence_threshold(entry.test);
        } catch (const DomainError& e) {
            result.warnings.push_back(entry.name + ": overlays skipped: " + e.what());
            continue;
        }
        if (spec.show_threshold) draw_threshold(svg, threshold);
        if (spec.show_chords) draw_chords(svg, threshold);
        if (spec.show_beta_triangle) {
            try {
                draw_beta(svg, threshold, beta_geometry(entry.test));
            } catch (const DomainError& e) {
                result.warnings.push_back(entry.name + ": beta overlay skipped: " + e.what());
            }
        }
    }

    draw_legend(svg, spec.tests);
    result.svg = svg.finish();
    return result;
}

}  // namespace screening
