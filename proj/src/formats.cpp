#include <array>
#include <charconv>
#include <cmath>
#include <set>
#include <string>
#include <system_error>

#include <json.hpp>

#include "screening/cli_io.hpp"
#include "screening/errors.hpp"
#include "number_text.hpp"

namespace screening {

namespace {

using Json = nlohmann::ordered_json;

constexpr std::string_view kCatalogHeader = "name,sensitivity,specificity";
constexpr int kSignificantDigits = 12;

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

// JSON number carrying exactly the digits format_number would print.
Json json_number(double value) {
    if (!std::isfinite(value)) return nullptr;
    const std::string text = format_number(value);
    double rounded = 0.0;
    std::from_chars(text.data(), text.data() + text.size(), rounded);
    return rounded;
}

template <class T, class Fill>
void put_quantity(Json& j, const char* key, const Quantity<T>& q, Fill&& fill) {
    if (q.has_value()) {
        fill(*q);
    } else {
        j[key] = nullptr;
        j[std::string(key) + "_reason"] = q.reason;
    }
}

Json report_json(const TestReport& r) {
    Json j;
    j["sensitivity"] = json_number(r.test.sensitivity());
    j["specificity"] = json_number(r.test.specificity());
    j["epsilon"] = json_number(r.epsilon);
    if (r.threshold.has_value()) {
        j["phi_e"] = json_number(r.threshold->phi_e);
        j["rho_e"] = json_number(r.threshold->rho_e);
    } else {
        j["phi_e"] = nullptr;
        j["rho_e"] = nullptr;
        j["phi_e_reason"] = r.threshold.reason;
    }
    if (r.beta.has_value()) {
        j["beta"] = json_number(r.beta->beta);
        j["psi"] = json_number(r.beta->psi);
        j["origin_slope"] = json_number(r.beta->origin_slope);
    } else {
        j["beta"] = nullptr;
        j["psi"] = nullptr;
        j["origin_slope"] = nullptr;
        j["beta_reason"] = r.beta.reason;
    }
    put_quantity(j, "lr_plus", r.lr_plus, [&](double v) { j["lr_plus"] = json_number(v); });
    put_quantity(j, "auc", r.auc, [&](double v) { j["auc"] = json_number(v); });
    put_quantity(j, "endpoint_chord", r.endpoint_chord, [&](const Line& line) {
        j["endpoint_chord"] = {{"slope", json_number(line.slope)},
                               {"intercept", json_number(line.intercept)}};
    });
    return j;
}

Json ordering_json(const Ordering& o) {
    return {{"favored", to_string(o.favored)}, {"margin", json_number(o.margin)}};
}

template <class T>
Json optional_number(const std::optional<T>& v) {
    return v ? json_number(*v) : Json(nullptr);
}

}  // namespace

std::string format_number(double value) {
    return detail::number_text(value, kSignificantDigits);  // folds -0 to "0"
}

std::vector<CatalogEntry> parse_catalog(std::string_view text) {
    if (text.starts_with("\xEF\xBB\xBF")) text.remove_prefix(3);

    std::vector<CatalogEntry> entries;
    std::set<std::string, std::less<>> names;
    bool header_seen = false;
    std::size_t line_no = 0;

    do {
        ++line_no;
        const auto eol = text.find('\n');
        const std::string_view raw = text.substr(0, eol);
        text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);

        const std::string_view line = trim(raw);
        if (line.empty() || line.front() == '#') {
            continue;
        }
        if (!header_seen) {
            if (line != kCatalogHeader) {
                throw ParseError(line_no, "expected header '" + std::string(kCatalogHeader) + "'");
            }
            header_seen = true;
            continue;
        }

        std::array<std::string_view, 3> fields;
        std::size_t count = 0;
        std::string_view rest = line;
        while (true) {
            const auto comma = rest.find(',');
            if (count == fields.size()) {
                throw ParseError(line_no, "expected 3 fields");
            }
            fields[count++] = trim(rest.substr(0, comma));
            if (comma == std::string_view::npos) break;
            rest = rest.substr(comma + 1);
        }
        if (count != fields.size()) {
            throw ParseError(line_no, "expected 3 fields");
        }
        if (fields[0].empty()) {
            throw ParseError(line_no, "empty test name");
        }

        std::array<double, 2> values{};
        constexpr std::array<const char*, 2> kColumns = {"sensitivity", "specificity"};
        for (std::size_t k = 0; k < 2; ++k) {
            const std::string_view field = fields[k + 1];
            const auto res = std::from_chars(field.data(), field.data() + field.size(), values[k]);
            if (res.ec != std::errc{} || res.ptr != field.data() + field.size() ||
                !std::isfinite(values[k])) {
                throw ParseError(line_no, std::string("malformed ") + kColumns[k] + " '" +
                                              std::string(field) + "'");
            }
            if (values[k] < 0.0 || values[k] > 1.0) {
                throw ParseError(line_no, std::string(kColumns[k]) + " " + std::string(field) +
                                              " outside [0,1]");
            }
        }
        if (!names.emplace(fields[0]).second) {
            throw ParseError(line_no, "duplicate test name '" + std::string(fields[0]) + "'");
        }
        entries.push_back({std::string(fields[0]), ScreeningTest(values[0], values[1])});
    } while (!text.empty());
    if (!header_seen) {
        throw ParseError(1, "missing header '" + std::string(kCatalogHeader) + "'");
    }
    return entries;
}

std::string emit_catalog(const std::vector<CatalogEntry>& entries) {
    std::string out(kCatalogHeader);
    out += '\n';
    for (const auto& e : entries) {
        if (e.name.empty() || e.name.find_first_of(",\r\n") != std::string::npos ||
            e.name.front() == '#' || trim(e.name) != e.name) {
            throw InvalidParameterError("name", "test name '" + e.name + "' cannot be stored in a catalog");
        }
        out += e.name + ',' + format_number(e.test.sensitivity()) + ',' +
               format_number(e.test.specificity()) + '\n';
    }
    return out;
}

std::string emit_report(const TestReport& report) {
    return report_json(report).dump(2) + '\n';
}

std::string emit_report(const ComparisonReport& report) {
    Json j;
    j["test1"] = report_json(report.first);
    j["test2"] = report_json(report.second);
    j["equal_epsilon"] = report.equal_epsilon;
    j["reversed_regime"] = report.reversed_regime;
    j["dominant"] = to_string(report.dominant);
    j["beta_order"] = ordering_json(report.beta_order);
    j["auc_order"] = ordering_json(report.auc_order);
    return j.dump(2) + '\n';
}

std::string emit_report(const CohortResult& r) {
    Json j;
    j["n"] = r.n;
    j["seed"] = r.seed;
    j["true_pos"] = r.true_pos;
    j["false_pos"] = r.false_pos;
    j["true_neg"] = r.true_neg;
    j["false_neg"] = r.false_neg;
    j["empirical_ppv"] = optional_number(r.empirical_ppv);
    if (!r.empirical_ppv) j["empirical_ppv_reason"] = r.ppv_reason;
    j["empirical_lr_plus"] = optional_number(r.empirical_lr_plus);
    if (!r.empirical_lr_plus) j["empirical_lr_plus_reason"] = r.lr_reason;
    return j.dump(2) + '\n';
}

std::string emit_report(const std::vector<SweepPoint>& sweep) {
    Json arr = Json::array();
    for (const auto& p : sweep) {
        arr.push_back({{"epsilon", json_number(p.epsilon)}, {"auc", json_number(p.auc)}});
    }
    return arr.dump(2) + '\n';
}

std::string emit_report(const std::vector<CatalogEntry>& entries,
                        const std::vector<TestReport>& reports) {
    Json arr = Json::array();
    for (std::size_t i = 0; i < entries.size() && i < reports.size(); ++i) {
        Json item;
        item["name"] = entries[i].name;
        const Json fields = report_json(reports[i]);
        for (const auto& field : fields.items()) item[field.key()] = field.value();
        arr.push_back(std::move(item));
    }
    return arr.dump(2) + '\n';
}

std::string emit_curve_csv(const ScreeningTest& test, std::size_t n) {
    std::string out = "phi,ppv\n";
    for (const CurvePoint& p : curve_samples(test, n)) {
        out += format_number(p.phi.value());
        out += ',';
        if (p.rho) out += format_number(*p.rho);
        out += '\n';
    }
    return out;
}

}  // namespace screening
